#ifndef HALLFORGE_REPORT_HPP
#define HALLFORGE_REPORT_HPP

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace hallforge {

/// Machine-readable result of one verification suite. Failing instances are
/// always recorded (with lhs/rhs dumps when available); passing instances are
/// recorded only for small suites, with the summary carrying the full counts.
struct SuiteReport {
    struct Rec {
        std::string check;
        std::string instance;
        bool pass;
        std::string lhs, rhs; // populated on failure only
    };

    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Rec> checks;
    long total = 0, passed = 0, failed = 0;
    double wall_ms = 0;
    bool store_passes = false;

    bool pass() const { return failed == 0; }

    void add(const std::string& check, const std::string& instance, bool ok,
             const std::string& lhs = "", const std::string& rhs = "") {
        ++total;
        if (ok) {
            ++passed;
            if (store_passes) checks.push_back({check, instance, true, "", ""});
        } else {
            ++failed;
            checks.push_back({check, instance, false, lhs, rhs});
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json recs = nlohmann::json::array();
        for (auto& r : checks) {
            nlohmann::json j = {{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}};
            if (!r.pass) {
                j["lhs"] = r.lhs;
                j["rhs"] = r.rhs;
            }
            recs.push_back(j);
        }
        return nlohmann::json{{"suite", suite},
                              {"params", params},
                              {"checks", recs},
                              {"summary", {{"total", total}, {"passed", passed}, {"failed", failed}}},
                              {"pass", pass()},
                              {"wall_ms", wall_ms}};
    }
};

/// Structural validation against docs/report.schema.json.
inline bool validate_report(const nlohmann::json& j, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!j.is_object()) return fail("not an object");
    for (const char* key : {"suite", "params", "checks", "summary", "pass", "wall_ms"})
        if (!j.contains(key)) return fail(std::string("missing key ") + key);
    if (!j["suite"].is_string()) return fail("suite not a string");
    if (!j["params"].is_object()) return fail("params not an object");
    if (!j["pass"].is_boolean()) return fail("pass not a boolean");
    if (!j["wall_ms"].is_number()) return fail("wall_ms not a number");
    if (!j["checks"].is_array()) return fail("checks not an array");
    for (auto& r : j["checks"]) {
        if (!r.is_object()) return fail("check record not an object");
        if (!r.contains("check") || !r["check"].is_string()) return fail("record missing check");
        if (!r.contains("instance") || !r["instance"].is_string()) return fail("record missing instance");
        if (!r.contains("pass") || !r["pass"].is_boolean()) return fail("record missing pass");
        if (!r["pass"].get<bool>() && (!r.contains("lhs") || !r.contains("rhs")))
            return fail("failing record missing lhs/rhs");
    }
    auto& s = j["summary"];
    if (!s.is_object()) return fail("summary not an object");
    for (const char* key : {"total", "passed", "failed"})
        if (!s.contains(key) || !s[key].is_number_integer())
            return fail(std::string("summary missing ") + key);
    if (s["total"].get<long>() != s["passed"].get<long>() + s["failed"].get<long>())
        return fail("summary counts inconsistent");
    return true;
}

class Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

} // namespace hallforge

#endif
