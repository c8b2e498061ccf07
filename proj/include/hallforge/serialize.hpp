#ifndef HALLFORGE_SERIALIZE_HPP
#define HALLFORGE_SERIALIZE_HPP

#include <json.hpp>

#include "hallforge/heis.hpp"
#include "hallforge/lattice.hpp"

namespace hallforge {

inline nlohmann::json coeff_json(const Coeff& c) {
    return {{"a", rat_str(c.a())}, {"b", rat_str(c.b())}};
}

inline nlohmann::json bkey_json(const CategoryTable& t, const BKey& k) {
    return {{"k", k.alpha}, {"obj", t.class_name(k.obj)}};
}

inline nlohmann::json belem_json(const CategoryTable& t, const BElem& x) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [k, c] : x) {
        auto rec = bkey_json(t, k);
        rec["coeff"] = coeff_json(c);
        out.push_back(rec);
    }
    return out;
}

inline nlohmann::json heis_json(const CategoryTable& t, const HeisElem& x) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [k, c] : x)
        out.push_back({{"minus", bkey_json(t, k.minus)},
                       {"plus", bkey_json(t, k.plus)},
                       {"coeff", coeff_json(c)}});
    return out;
}

inline nlohmann::json lattice_json(const CategoryTable& t, const LatticeElem& x) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [k, c] : x) {
        nlohmann::json sites = nlohmann::json::array();
        for (auto& [m, obj] : k.sites) sites.push_back({m, t.class_name(obj)});
        out.push_back({{"sites", sites}, {"k", k.alpha}, {"coeff", coeff_json(c)}});
    }
    return out;
}

inline nlohmann::json felem_json(const CategoryTable& t, const FElem& x) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [k, c] : x) {
        nlohmann::json sites = nlohmann::json::array();
        for (auto& [m, obj] : k.sites) sites.push_back({m, t.class_name(obj)});
        out.push_back({{"sites", sites}, {"coeff", coeff_json(c)}});
    }
    return out;
}

// ---- text rendering in expression syntax ----

namespace detail {
inline std::string coeff_factor(const Coeff& c) {
    if (c.is_one()) return "";
    std::string s = c.str();
    if (s.find(' ') != std::string::npos || s.find('+') != std::string::npos) return "(" + s + ")*";
    return s + "*";
}

inline std::string kvec_str(const K0& a) { return "K[" + k0_str(a) + "]"; }
} // namespace detail

inline std::string bkey_text(const CategoryTable& t, const BKey& k) {
    std::string s;
    if (!k0_is_zero(k.alpha)) s += detail::kvec_str(k.alpha);
    if (k.obj != t.zero_class()) {
        if (!s.empty()) s += "*";
        s += "Z[" + t.class_name(k.obj) + "]";
    }
    return s.empty() ? "1" : s;
}

inline std::string belem_text(const CategoryTable& t, const BElem& x) {
    if (x.empty()) return "0";
    std::string s;
    for (auto& [k, c] : x) {
        if (!s.empty()) s += " + ";
        s += detail::coeff_factor(c) + bkey_text(t, k);
    }
    return s;
}

inline std::string tensor_text(const CategoryTable& t, const TensorElem& x) {
    if (x.empty()) return "0";
    std::string s;
    for (auto& [k, c] : x) {
        if (!s.empty()) s += " + ";
        s += detail::coeff_factor(c) + bkey_text(t, k.first) + " (x) " + bkey_text(t, k.second);
    }
    return s;
}

inline std::string heis_text(const CategoryTable& t, const HeisElem& x) {
    if (x.empty()) return "0";
    std::string s;
    for (auto& [k, c] : x) {
        if (!s.empty()) s += " + ";
        std::string part;
        if (!k0_is_zero(k.minus.alpha)) part += "Km[" + k0_str(k.minus.alpha) + "]";
        if (k.minus.obj != t.zero_class())
            part += std::string(part.empty() ? "" : "*") + "Zm[" + t.class_name(k.minus.obj) + "]";
        if (!k0_is_zero(k.plus.alpha))
            part += std::string(part.empty() ? "" : "*") + detail::kvec_str(k.plus.alpha);
        if (k.plus.obj != t.zero_class())
            part += std::string(part.empty() ? "" : "*") + "Zp[" + t.class_name(k.plus.obj) + "]";
        if (part.empty()) part = "1";
        s += detail::coeff_factor(c) + part;
    }
    return s;
}

inline std::string lattice_text(const CategoryTable& t, const LatticeElem& x) {
    if (x.empty()) return "0";
    std::string s;
    for (auto& [k, c] : x) {
        if (!s.empty()) s += " + ";
        std::string part;
        for (auto& [m, obj] : k.sites)
            part += std::string(part.empty() ? "" : "*") + "Z{" + std::to_string(m) + "}[" +
                    t.class_name(obj) + "]";
        if (!k0_is_zero(k.alpha)) part += std::string(part.empty() ? "" : "*") + detail::kvec_str(k.alpha);
        if (part.empty()) part = "1";
        s += detail::coeff_factor(c) + part;
    }
    return s;
}

inline std::string felem_text(const CategoryTable& t, const FElem& x) {
    if (x.empty()) return "0";
    std::string s;
    for (auto& [k, c] : x) {
        if (!s.empty()) s += " + ";
        std::string part;
        for (auto& [m, obj] : k.sites)
            part += std::string(part.empty() ? "" : "*") + "X{" + std::to_string(m) + "}[" +
                    t.class_name(obj) + "]";
        if (part.empty()) part = "1";
        s += detail::coeff_factor(c) + part;
    }
    return s;
}

} // namespace hallforge

#endif
