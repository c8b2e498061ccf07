#ifndef HALLFORGE_CONFIG_HPP
#define HALLFORGE_CONFIG_HPP

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>

#include <json.hpp>

#include "hallforge/category.hpp"

namespace hallforge {

using Json = nlohmann::json;

/// Quiver configuration file:
/// {"vertices": ["1","2"], "arrows": [["1","2"]], "q": 2, "bound": [2,2],
///  "names": {"S1": [1,0], "P": [1,1], "X": {"dim": [1,1], "index": 0}}}
struct TableConfig {
    Quiver quiver;
    long q = 2;
    K0 bound;
    long budget = 1L << 22;
    // name -> (dimension vector, index among indecomposables of that dim)
    std::vector<std::pair<std::string, std::pair<K0, int>>> names;
};

inline TableConfig parse_config(const Json& j) {
    TableConfig cfg;
    try {
        if (!j.contains("vertices") || !j.contains("q") || !j.contains("bound"))
            throw ConfigError("config requires vertices, q, bound");
        std::map<std::string, int> vidx;
        for (auto& v : j.at("vertices")) {
            std::string label = v.get<std::string>();
            if (vidx.count(label)) throw ConfigError("duplicate vertex label " + label);
            vidx[label] = static_cast<int>(cfg.quiver.vertex_labels.size());
            cfg.quiver.vertex_labels.push_back(label);
        }
        if (j.contains("arrows"))
            for (auto& a : j.at("arrows")) {
                std::string s = a.at(0).get<std::string>();
                std::string t = a.at(1).get<std::string>();
                if (!vidx.count(s) || !vidx.count(t)) throw ConfigError("arrow endpoint not a vertex");
                cfg.quiver.arrows.emplace_back(vidx[s], vidx[t]);
            }
        cfg.q = j.at("q").get<long>();
        for (auto& b : j.at("bound")) cfg.bound.push_back(b.get<int>());
        if (cfg.bound.size() != cfg.quiver.num_vertices())
            throw ConfigError("bound length must match vertex count");
        if (j.contains("budget")) cfg.budget = j.at("budget").get<long>();
        if (j.contains("names"))
            for (auto& [name, spec] : j.at("names").items()) {
                K0 dim;
                int index = 0;
                if (spec.is_array()) {
                    for (auto& d : spec) dim.push_back(d.get<int>());
                } else {
                    for (auto& d : spec.at("dim")) dim.push_back(d.get<int>());
                    index = spec.value("index", 0);
                }
                if (dim.size() != cfg.quiver.num_vertices())
                    throw ConfigError("name '" + name + "': dimension vector length mismatch");
                cfg.names.emplace_back(name, std::make_pair(dim, index));
            }
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

inline TableConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return parse_config(j);
}

inline void apply_names(CategoryTable& t, const TableConfig& cfg) {
    for (auto& [name, spec] : cfg.names) {
        auto& [dim, index] = spec;
        int seen = 0;
        bool found = false;
        for (ClassId c : t.indec_ids())
            if (t.cls(c).dim == dim && seen++ == index) {
                t.set_name(name, c);
                found = true;
                break;
            }
        if (!found)
            throw ConfigError("name '" + name + "': no indecomposable with dimension " + k0_str(dim) +
                              " and index " + std::to_string(index));
    }
}

// ---- table cache ----

inline std::string cache_key(const TableConfig& cfg) {
    std::string s = cfg.quiver.canonical_string() + "|q=" + std::to_string(cfg.q) + "|b=";
    for (int b : cfg.bound) s += std::to_string(b) + ",";
    uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline Json table_cache_json(const CategoryTable& t, const TableConfig& cfg) {
    Json classes = Json::array();
    for (ClassId c = 0; c < static_cast<ClassId>(t.num_classes()); ++c) {
        const auto& cd = t.cls(c);
        Json mats = Json::array();
        for (auto& m : cd.rep.mats) {
            Json rows = Json::array();
            for (int r = 0; r < m.rows; ++r) {
                Json row = Json::array();
                for (int col = 0; col < m.cols; ++col) row.push_back(m.at(r, col));
                rows.push_back(row);
            }
            mats.push_back(rows);
        }
        classes.push_back({{"dim", cd.dim}, {"rep", mats}, {"indecs", cd.indecs}, {"indec", cd.is_indec}});
    }
    return Json{{"version", 1}, {"key", cache_key(cfg)}, {"q", cfg.q}, {"bound", cfg.bound},
                {"classes", classes}};
}

inline std::optional<std::vector<CategoryTable::ClassData>> parse_table_cache(const Json& j,
                                                                              const TableConfig& cfg) {
    if (!j.contains("version") || j.at("version").get<int>() != 1) return std::nullopt;
    if (!j.contains("key") || j.at("key").get<std::string>() != cache_key(cfg)) return std::nullopt;
    std::vector<CategoryTable::ClassData> classes;
    for (auto& c : j.at("classes")) {
        CategoryTable::ClassData cd;
        for (auto& d : c.at("dim")) cd.dim.push_back(d.get<int>());
        for (auto& mats : c.at("rep")) {
            int rows = static_cast<int>(mats.size());
            int cols = rows ? static_cast<int>(mats.at(0).size()) : 0;
            Mat m(rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int col = 0; col < cols; ++col)
                    m.at(r, col) = static_cast<uint8_t>(mats.at(r).at(col).get<int>());
            cd.rep.mats.push_back(std::move(m));
        }
        // arrows with an empty matrix block still need correct shapes
        size_t e = 0;
        for (auto& [s, tvx] : cfg.quiver.arrows) {
            Mat& m = cd.rep.mats[e++];
            if (m.rows == 0 || m.cols == 0) m = Mat(cd.dim[tvx], cd.dim[s]);
        }
        for (auto& i : c.at("indecs")) cd.indecs.push_back(i.get<int>());
        cd.is_indec = c.at("indec").get<bool>();
        classes.push_back(std::move(cd));
    }
    return classes;
}

/// Build the table, consulting HALLFORGE_CACHE_DIR (or an explicit directory)
/// for a cached enumeration first and writing one back after a fresh build.
inline std::shared_ptr<CategoryTable> build_table(const TableConfig& cfg,
                                                  std::optional<std::string> cache_dir = std::nullopt,
                                                  bool* cache_hit = nullptr) {
    if (cache_hit) *cache_hit = false;
    if (!cache_dir) {
        if (const char* env = std::getenv("HALLFORGE_CACHE_DIR")) cache_dir = std::string(env);
    }
    GroundParams g = GroundParams::make(cfg.q);
    std::filesystem::path cache_path;
    if (cache_dir && !cache_dir->empty()) {
        cache_path = std::filesystem::path(*cache_dir) / (cache_key(cfg) + ".json");
        std::ifstream in(cache_path);
        if (in) {
            Json j;
            try {
                in >> j;
                auto classes = parse_table_cache(j, cfg);
                if (classes) {
                    auto t = std::make_shared<CategoryTable>(cfg.quiver, g, cfg.bound, cfg.budget,
                                                             std::move(*classes));
                    apply_names(*t, cfg);
                    if (cache_hit) *cache_hit = true;
                    return t;
                }
            } catch (const Json::exception&) {
                // fall through to a fresh build
            }
        }
    }
    auto t = std::make_shared<CategoryTable>(cfg.quiver, g, cfg.bound, cfg.budget);
    apply_names(*t, cfg);
    if (!cache_path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_path.parent_path(), ec);
        std::ofstream out(cache_path);
        if (out) out << table_cache_json(*t, cfg) << "\n";
    }
    return t;
}

} // namespace hallforge

#endif
