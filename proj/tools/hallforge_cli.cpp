// Command-line front end: table construction and inspection, expression
// evaluation in the four algebras, verification suites, and tilting-table
// discovery/checking. Exit codes: 0 success, 1 verification failure,
// 2 configuration or usage error.

#include <iostream>

#include <CLI11.hpp>

#include "hallforge/suites.hpp"

using namespace hallforge;

namespace {

struct CommonOpts {
    std::string config;
    long q_override = 0;
    std::string bound_override;
    std::string window = "-2:2";
    long budget = 0;
    bool json = false;
};

TableConfig load_effective_config(const CommonOpts& o) {
    TableConfig cfg = load_config(o.config);
    if (o.q_override) cfg.q = o.q_override;
    if (!o.bound_override.empty()) {
        K0 b;
        std::string s = o.bound_override;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw ConfigError("bad --bound value");
            b.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (b.size() != cfg.quiver.num_vertices()) throw ConfigError("--bound length mismatch");
        cfg.bound = b;
    }
    if (o.budget) cfg.budget = o.budget;
    return cfg;
}

std::pair<int, int> parse_window(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw ConfigError("window must be lo:hi");
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_config = true) {
    if (with_config) cmd->add_option("--config", o.config, "quiver config JSON")->required();
    cmd->add_option("--q", o.q_override, "override the ground field size");
    cmd->add_option("--bound", o.bound_override, "override the dimension bound (csv)");
    cmd->add_option("--window", o.window, "site window lo:hi");
    cmd->add_option("--budget", o.budget, "enumeration budget");
    cmd->add_flag("--json", o.json, "emit JSON");
}

int do_table(const CommonOpts& o, bool info) {
    TableConfig cfg = load_effective_config(o);
    bool hit = false;
    auto t = build_table(cfg, std::nullopt, &hit);
    if (o.json) {
        Json j = {{"classes", t->num_classes()},
                  {"indecomposables", t->indec_ids().size()},
                  {"cache_hit", hit},
                  {"key", cache_key(cfg)}};
        if (info) {
            Json cls = Json::array();
            for (ClassId c = 0; c < (ClassId)t->num_classes(); ++c) {
                Json indecs = Json::array();
                for (ClassId i : t->decompose(c)) indecs.push_back(t->class_name(i));
                cls.push_back({{"name", t->class_name(c)},
                               {"dim", t->cls(c).dim},
                               {"indec", t->cls(c).is_indec},
                               {"summands", indecs},
                               {"aut", t->aut_count(c)}});
            }
            j["list"] = cls;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "table: " << t->num_classes() << " classes, " << t->indec_ids().size()
              << " indecomposables (q=" << cfg.q << ", bound=" << k0_str(cfg.bound) << ")"
              << (hit ? " [cache]" : "") << "\n";
    if (info)
        for (ClassId c = 0; c < (ClassId)t->num_classes(); ++c) {
            std::cout << "  " << t->class_name(c) << "  dim=" << k0_str(t->cls(c).dim)
                      << (t->cls(c).is_indec ? "  indec" : "") << "  |Aut|=" << t->aut_count(c)
                      << "  = ";
            bool first = true;
            for (ClassId i : t->decompose(c)) {
                std::cout << (first ? "" : " + ") << t->class_name(i);
                first = false;
            }
            if (t->decompose(c).empty()) std::cout << "0";
            std::cout << "\n";
        }
    return 0;
}

int do_eval(const CommonOpts& o, const std::string& algebra, const std::string& expr) {
    TableConfig cfg = load_effective_config(o);
    auto t = build_table(cfg);
    Algebra alg = algebra_from_string(algebra);
    AstPtr ast = parse_expr(expr, alg);
    try {
        EvalResult r = eval_expr(*t, ast, alg);
        if (o.json) std::cout << r.to_json(*t).dump(2) << "\n";
        else std::cout << r.to_text(*t) << "\n";
    } catch (const OutOfTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int do_verify(const CommonOpts& o, const std::string& suite, const std::string& tilt_table) {
    TableConfig cfg = load_effective_config(o);
    SuiteOptions opt;
    std::tie(opt.window_lo, opt.window_hi) = parse_window(o.window);
    if (o.budget) opt.budget = o.budget;
    opt.tilt_file = tilt_table;
    SuiteReport rep = run_suite(suite, cfg, opt);
    if (o.json) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        for (auto& r : rep.checks)
            if (!r.pass) {
                std::cout << "FAIL " << r.check << " [" << r.instance << "]\n";
                if (!r.lhs.empty()) std::cout << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
            }
        std::cout << (rep.pass() ? "PASS" : "FAIL") << " suite=" << rep.suite << " total=" << rep.total
                  << " passed=" << rep.passed << " failed=" << rep.failed << " ("
                  << static_cast<long>(rep.wall_ms) << " ms)\n";
    }
    return rep.pass() ? 0 : 1;
}

int do_tilt_discover(const CommonOpts& o, const std::string& source, const std::string& target,
                     const std::string& shifts, const std::string& out_path) {
    CommonOpts so = o;
    so.config = source;
    TableConfig scfg = load_effective_config(so);
    CommonOpts to = o;
    to.config = target;
    TableConfig tcfg = load_effective_config(to);
    auto st = build_table(scfg);
    auto tt = build_table(tcfg);
    auto [lo, hi] = parse_window(shifts);
    auto found = discover_tilt(*st, *tt, lo, hi);
    Json arr = Json::array();
    for (auto& f : found) arr.push_back(suites::tilt_to_json(f, source, target));
    if (!out_path.empty()) {
        std::ofstream outf(out_path);
        if (!outf) throw ConfigError("cannot write " + out_path);
        // write the first table as a ready-to-use tilt file; all candidates as a list alongside
        outf << (found.empty() ? Json::object() : arr.at(0)).dump(2) << "\n";
    }
    if (o.json) std::cout << arr.dump(2) << "\n";
    else std::cout << "found " << found.size() << " tilting table(s)\n";
    return found.empty() ? 1 : 0;
}

int do_tilt_check(const CommonOpts& o, const std::string& source, const std::string& target,
                  const std::string& table_path) {
    CommonOpts so = o;
    so.config = source;
    TableConfig scfg = load_effective_config(so);
    CommonOpts to = o;
    to.config = target;
    TableConfig tcfg = load_effective_config(to);
    auto st = build_table(scfg);
    auto tt = build_table(tcfg);

    SuiteOptions opt;
    std::tie(opt.window_lo, opt.window_hi) = parse_window(o.window);
    opt.tilt_file = table_path;
    SuiteReport rep;
    rep.suite = "tilt";
    rep.params = {{"source", source}, {"target", target}, {"table", table_path}};
    Stopwatch sw;
    suites::run_tilt(*st, *tt, opt, rep);
    rep.wall_ms = sw.ms();
    if (o.json) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        for (auto& r : rep.checks)
            if (!r.pass) std::cout << "FAIL " << r.check << " [" << r.instance << "]\n";
        std::cout << (rep.pass() ? "PASS" : "FAIL") << " total=" << rep.total
                  << " failed=" << rep.failed << "\n";
    }
    return rep.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hall/Ringel algebra engine and verification suites"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* table = app.add_subcommand("table", "build or inspect a category table");
    table->require_subcommand(1);
    auto* tbuild = table->add_subcommand("build", "enumerate the table (uses HALLFORGE_CACHE_DIR)");
    add_common(tbuild, opts);
    auto* tinfo = table->add_subcommand("info", "list all classes");
    add_common(tinfo, opts);

    std::string algebra = "B", expr_src;
    auto* eval = app.add_subcommand("eval", "evaluate an algebra expression");
    add_common(eval, opts);
    eval->add_option("--algebra", algebra, "B | heis | lattice | f");
    eval->add_option("--expr", expr_src, "expression source")->required();

    std::string suite, tilt_table_opt;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, opts);
    verify->add_option("--suite", suite, "one of: hopf pairing heis lattice-confluence splice serre tilt falgebra")
        ->required();
    verify->add_option("--tilt-table", tilt_table_opt, "explicit tilt table file (tilt suite)");

    auto* tilt = app.add_subcommand("tilt", "discover or check derived-equivalence tables");
    tilt->require_subcommand(1);
    std::string src_cfg, tgt_cfg, shifts = "0:1", out_path, table_path;
    auto* tdisc = tilt->add_subcommand("discover", "search for tilting tables");
    add_common(tdisc, opts, false);
    tdisc->add_option("--source", src_cfg, "source quiver config")->required();
    tdisc->add_option("--target", tgt_cfg, "target quiver config")->required();
    tdisc->add_option("--shifts", shifts, "shift range lo:hi");
    tdisc->add_option("--out", out_path, "write the first table found to this file");
    auto* tcheck = tilt->add_subcommand("check", "verify a tilt table file");
    add_common(tcheck, opts, false);
    tcheck->add_option("--source", src_cfg, "source quiver config")->required();
    tcheck->add_option("--target", tgt_cfg, "target quiver config")->required();
    tcheck->add_option("--table", table_path, "tilt table JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (tbuild->parsed()) return do_table(opts, false);
        if (tinfo->parsed()) return do_table(opts, true);
        if (eval->parsed()) return do_eval(opts, algebra, expr_src);
        if (verify->parsed()) return do_verify(opts, suite, tilt_table_opt);
        if (tdisc->parsed()) return do_tilt_discover(opts, src_cfg, tgt_cfg, shifts, out_path);
        if (tcheck->parsed()) return do_tilt_check(opts, src_cfg, tgt_cfg, table_path);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidQuiver& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const WrongAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OutOfTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
