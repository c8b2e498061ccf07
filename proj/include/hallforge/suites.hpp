#ifndef HALLFORGE_SUITES_HPP
#define HALLFORGE_SUITES_HPP

#include "hallforge/config.hpp"
#include "hallforge/expr.hpp"
#include "hallforge/qgroup.hpp"
#include "hallforge/report.hpp"

namespace hallforge {

struct SuiteOptions {
    int window_lo = -2;
    int window_hi = 2;
    long budget = 1L << 20;
    std::string tilt_file; // optional explicit table for the tilt suite
};

namespace suites {

inline std::vector<K0> default_k0_window(const CategoryTable& t) {
    size_t n = t.quiver().num_vertices();
    std::vector<K0> out = {K0(n, 0)};
    for (size_t v = 0; v < n; ++v) {
        K0 e(n, 0);
        e[v] = 1;
        out.push_back(e);
        out.push_back(k0_neg(e));
    }
    out.push_back(K0(n, 1));
    out.push_back(k0_neg(K0(n, 1)));
    return out;
}

inline std::vector<BKey> basis_window(const CategoryTable& t) {
    std::vector<BKey> out;
    for (auto& a : default_k0_window(t))
        for (ClassId c = 0; c < static_cast<ClassId>(t.num_classes()); ++c) out.push_back(BKey{a, c});
    return out;
}

inline std::vector<ClassId> small_classes(const CategoryTable& t, int max_total) {
    std::vector<ClassId> out;
    for (ClassId c = 0; c < static_cast<ClassId>(t.num_classes()); ++c)
        if (k0_total(t.cls(c).dim) <= max_total) out.push_back(c);
    return out;
}

inline std::string key_str(const CategoryTable& t, const BKey& k) { return bkey_text(t, k); }

// ---- hopf: associativity, comultiplication, counit, antipode ----

inline void run_hopf(const CategoryTable& t, SuiteReport& rep) {
    // associativity of both products on all in-bound object triples
    for (bool twisted : {false, true})
        for (ClassId a = 0; a < static_cast<ClassId>(t.num_classes()); ++a)
            for (ClassId b = 0; b < static_cast<ClassId>(t.num_classes()); ++b)
                for (ClassId c = 0; c < static_cast<ClassId>(t.num_classes()); ++c) {
                    K0 tot = k0_add(k0_add(t.cls(a).dim, t.cls(b).dim), t.cls(c).dim);
                    if (!t.in_bound(tot)) continue;
                    BElem lhs = hall_mul(t, hall_mul(t, b_gen(t, a), b_gen(t, b), twisted),
                                         b_gen(t, c), twisted);
                    BElem rhs = hall_mul(t, b_gen(t, a),
                                         hall_mul(t, b_gen(t, b), b_gen(t, c), twisted), twisted);
                    rep.add(twisted ? "assoc-twisted" : "assoc-plain",
                            t.class_name(a) + "," + t.class_name(b) + "," + t.class_name(c),
                            lhs == rhs, belem_text(t, lhs), belem_text(t, rhs));
                }

    auto basis = basis_window(t);

    // coproduct multiplicativity with the componentwise tensor product
    for (auto& ka : basis)
        for (auto& kb : basis) {
            if (!t.in_bound(k0_add(t.cls(ka.obj).dim, t.cls(kb.obj).dim))) continue;
            BElem xa = {{ka, Coeff::one(t.ground())}};
            BElem xb = {{kb, Coeff::one(t.ground())}};
            TensorElem lhs = coproduct(t, hall_mul(t, xa, xb));
            TensorElem rhs = tensor_mul(t, coproduct(t, xa), coproduct(t, xb));
            rep.add("coproduct-multiplicative", key_str(t, ka) + " , " + key_str(t, kb), lhs == rhs,
                    tensor_text(t, lhs), tensor_text(t, rhs));
        }

    // counit axioms and antipode convolution
    for (auto& k : basis) {
        BElem xe = {{k, Coeff::one(t.ground())}};
        TensorElem d = coproduct(t, xe);
        rep.add("counit-left", key_str(t, k), tensor_counit_left(t, d) == xe);
        rep.add("counit-right", key_str(t, k), tensor_counit_right(t, d) == xe);
        BElem conv_l, conv_r;
        for (auto& [pk, c] : d) {
            conv_l = b_add(conv_l, hall_mul(t, antipode(t, BElem{{pk.first, c}}),
                                            BElem{{pk.second, Coeff::one(t.ground())}}));
            conv_r = b_add(conv_r, hall_mul(t, BElem{{pk.first, c}},
                                            antipode(t, BElem{{pk.second, Coeff::one(t.ground())}})));
        }
        BElem expect = b_scale(b_unit(t), counit(t, xe));
        rep.add("antipode-convolution-left", key_str(t, k), conv_l == expect, belem_text(t, conv_l),
                belem_text(t, expect));
        rep.add("antipode-convolution-right", key_str(t, k), conv_r == expect, belem_text(t, conv_r),
                belem_text(t, expect));
    }
}

// ---- pairing: Hopf pairing conditions ----

inline void run_pairing(const CategoryTable& t, SuiteReport& rep) {
    auto basis = basis_window(t);
    for (auto& kx : basis) {
        BElem ex = {{kx, Coeff::one(t.ground())}};
        rep.add("pairing-unit-left", key_str(t, kx),
                hopf_pair(t, b_unit(t), ex) == counit(t, ex));
        rep.add("pairing-unit-right", key_str(t, kx),
                hopf_pair(t, ex, b_unit(t)) == counit(t, ex));
    }
    for (auto& kx : basis)
        for (auto& ky : basis) {
            if (!t.in_bound(k0_add(t.cls(kx.obj).dim, t.cls(ky.obj).dim))) continue;
            BElem prod = hall_mul(t, BElem{{kx, Coeff::one(t.ground())}},
                                  BElem{{ky, Coeff::one(t.ground())}});
            for (auto& kz : basis) {
                Coeff lhs = hopf_pair(t, prod, BElem{{kz, Coeff::one(t.ground())}});
                Coeff rhs = Coeff::zero(t.ground());
                for (auto& [l, r, w] : coproduct_key(t, kz))
                    rhs += w * hopf_pair_keys(t, kx, l) * hopf_pair_keys(t, ky, r);
                rep.add("pairing-mult", key_str(t, kx) + "," + key_str(t, ky) + ";" + key_str(t, kz),
                        lhs == rhs, lhs.str(), rhs.str());

                Coeff lhs2 = hopf_pair(t, BElem{{kz, Coeff::one(t.ground())}}, prod);
                Coeff rhs2 = Coeff::zero(t.ground());
                for (auto& [l, r, w] : coproduct_key(t, kz))
                    rhs2 += w * hopf_pair_keys(t, l, kx) * hopf_pair_keys(t, r, ky);
                rep.add("pairing-comult", key_str(t, kz) + ";" + key_str(t, kx) + "," + key_str(t, ky),
                        lhs2 == rhs2, lhs2.str(), rhs2.str());
            }
        }
}

// ---- heis: closed form vs generic form, associativity, form equality ----

inline void run_heis(const CategoryTable& t, SuiteReport& rep) {
    auto k0s = default_k0_window(t);
    auto cons = verify_heis_consistency(t, k0s);
    rep.add("closed-equals-generic", std::to_string(cons.checked) + " generator pairs", cons.pass(),
            cons.failures.empty() ? "" : cons.failures.front(), "");

    for (ClassId a = 0; a < static_cast<ClassId>(t.num_classes()); ++a)
        for (ClassId b = 0; b < static_cast<ClassId>(t.num_classes()); ++b) {
            rep.add("cross-relation-forms", t.class_name(a) + "," + t.class_name(b),
                    cross_zz_middle_k(t, a, b) == cross_zz_right_k(t, a, b));
            if (t.in_bound(k0_add(t.cls(a).dim, t.cls(b).dim))) {
                BElem ref = hall_mul(t, b_gen(t, a), b_gen(t, b));
                HeisElem eplus, eminus;
                for (auto& [k, c] : ref) {
                    add_term(eplus, HeisKey{b_unit_key(t), k}, c);
                    add_term(eminus, HeisKey{k, b_unit_key(t)}, c);
                }
                rep.add("plus-copy-embeds", t.class_name(a) + "," + t.class_name(b),
                        heis_mul(t, heis_zplus(t, a), heis_zplus(t, b)) == eplus);
                rep.add("minus-copy-embeds", t.class_name(a) + "," + t.class_name(b),
                        heis_mul(t, heis_zminus(t, a), heis_zminus(t, b)) == eminus);
            }
        }

    std::vector<std::pair<std::string, HeisElem>> gens;
    for (ClassId c = 1; c < static_cast<ClassId>(t.num_classes()); ++c) {
        gens.emplace_back("Zp[" + t.class_name(c) + "]", heis_zplus(t, c));
        gens.emplace_back("Zm[" + t.class_name(c) + "]", heis_zminus(t, c));
    }
    size_t n = t.quiver().num_vertices();
    for (size_t v = 0; v < n; ++v) {
        K0 e(n, 0);
        e[v] = 1;
        gens.emplace_back("K" + k0_str(e), heis_kplus(t, e));
        gens.emplace_back("Km" + k0_str(e), heis_kminus(t, e));
    }
    for (auto& [nx, gx] : gens)
        for (auto& [ny, gy] : gens)
            for (auto& [nz, gz] : gens) {
                HeisElem lhs, rhs;
                try {
                    lhs = heis_mul(t, heis_mul(t, gx, gy), gz);
                    rhs = heis_mul(t, gx, heis_mul(t, gy, gz));
                } catch (const OutOfTable&) {
                    continue;
                }
                rep.add("heis-assoc", nx + "," + ny + "," + nz, lhs == rhs, heis_text(t, lhs),
                        heis_text(t, rhs));
                HeisElem glhs, grhs;
                try {
                    glhs = hd_mul_generic(t, hd_mul_generic(t, gx, gy), gz);
                    grhs = hd_mul_generic(t, gx, hd_mul_generic(t, gy, gz));
                } catch (const OutOfTable&) {
                    continue;
                }
                rep.add("hd-generic-assoc", nx + "," + ny + "," + nz, glhs == grhs,
                        heis_text(t, glhs), heis_text(t, grhs));
            }
}

// ---- lattice-confluence ----

inline void run_lattice_confluence(const CategoryTable& t, const SuiteOptions& opt, SuiteReport& rep) {
    auto small = small_classes(t, 2);
    int mlo = opt.window_lo + 1, mhi = opt.window_hi - 1;

    for (ClassId a : small)
        for (ClassId b : small)
            for (ClassId c : small)
                for (int m = mlo; m <= mhi; ++m) {
                    LatticeElem za = lat_gen(t, m + 1, a), zb = lat_gen(t, m, b),
                                zc = lat_gen(t, m - 1, c);
                    std::string inst = t.class_name(a) + "@" + std::to_string(m + 1) + "," +
                                       t.class_name(b) + "@" + std::to_string(m) + "," +
                                       t.class_name(c) + "@" + std::to_string(m - 1);
                    LatticeElem left = lat_mul(t, lat_mul(t, za, zb), zc);
                    LatticeElem right = lat_mul(t, za, lat_mul(t, zb, zc));
                    rep.add("confluence-two-ways", inst, left == right, lattice_text(t, left),
                            lattice_text(t, right));
                    LatticeElem l2 = lat_mul(t, lat_mul(t, za, zb), zc,
                                             RewriteStrategy::RightmostOutermost);
                    rep.add("strategy-independence", inst, left == l2, lattice_text(t, left),
                            lattice_text(t, l2));
                }

    // distant-commutator consistency of the descent relation
    auto swap_exp = [](int s, int nn) {
        if (s > nn) return (((s - nn) % 2 == 0) ? 1 : -1) * (nn - s + 1);
        return -((((nn - s) % 2 == 0) ? 1 : -1) * (s - nn + 1));
    };
    for (ClassId a : small)
        for (ClassId b : small)
            for (ClassId c : small)
                for (int m : {0, 1})
                    for (int nn : {m + 3, m - 3}) {
                        LatticeElem ab = lat_mul(t, lat_gen(t, m + 1, a), lat_gen(t, m, b));
                        LatticeElem w = lat_mul(t, ab, lat_gen(t, nn, c));
                        LatticeElem w2 = lat_mul(t, lat_gen(t, nn, c), ab);
                        int ea = t.sym_exp(t.cls(a).dim, t.cls(c).dim);
                        int eb = t.sym_exp(t.cls(b).dim, t.cls(c).dim);
                        int e = swap_exp(m + 1, nn) * ea + swap_exp(m, nn) * eb;
                        rep.add("distant-commutator",
                                t.class_name(a) + "," + t.class_name(b) + "," + t.class_name(c) +
                                    " m=" + std::to_string(m) + " n=" + std::to_string(nn),
                                w == lat_scale(w2, vpow(t.ground(), e)));
                    }

    // associativity over the window
    for (ClassId a : small)
        for (ClassId b : small)
            for (ClassId c : small)
                for (int m1 : {opt.window_lo, 0, opt.window_hi})
                    for (int m2 : {opt.window_lo + 1, 0})
                        for (int m3 : {opt.window_lo, opt.window_hi - 1}) {
                            LatticeElem lhs, rhs;
                            try {
                                lhs = lat_mul(t, lat_mul(t, lat_gen(t, m1, a), lat_gen(t, m2, b)),
                                              lat_gen(t, m3, c));
                                rhs = lat_mul(t, lat_gen(t, m1, a),
                                              lat_mul(t, lat_gen(t, m2, b), lat_gen(t, m3, c)));
                            } catch (const OutOfTable&) {
                                continue;
                            }
                            rep.add("lat-assoc",
                                    t.class_name(a) + "@" + std::to_string(m1) + "," +
                                        t.class_name(b) + "@" + std::to_string(m2) + "," +
                                        t.class_name(c) + "@" + std::to_string(m3),
                                    lhs == rhs, lattice_text(t, lhs), lattice_text(t, rhs));
                        }

    // the shift automorphism respects products
    for (ClassId a : small)
        for (ClassId b : small)
            for (int m : {0, 1})
                for (int nn : {0, -1}) {
                    if (m == nn && !t.in_bound(k0_add(t.cls(a).dim, t.cls(b).dim))) continue;
                    for (int p : {1, -1, 2}) {
                        LatticeElem lhs = shift_sigma(lat_mul(t, lat_gen(t, m, a), lat_gen(t, nn, b)), p);
                        LatticeElem rhs = lat_mul(t, shift_sigma(lat_gen(t, m, a), p),
                                                  shift_sigma(lat_gen(t, nn, b), p));
                        rep.add("shift-automorphism",
                                t.class_name(a) + "@" + std::to_string(m) + "," + t.class_name(b) +
                                    "@" + std::to_string(nn) + " p=" + std::to_string(p),
                                lhs == rhs);
                    }
                }

    // basis integrity of the graded monomials
    for (ClassId a : small)
        for (ClassId b : small)
            for (int d : {-1, 0}) {
                GradedObj g;
                if (a != t.zero_class()) g[d] = a;
                if (b != t.zero_class()) g[d + 1] = b;
                LatticeElem z = z_monomial(t, g);
                bool ok = z.size() == 1 && !z.begin()->second.is_zero();
                if (ok) {
                    std::map<int, ClassId> expect;
                    for (auto& [deg, cc] : g) expect[deg] = cc;
                    ok = z.begin()->first.sites == expect;
                }
                rep.add("monomial-basis", t.class_name(a) + "@" + std::to_string(d) + "," +
                                              t.class_name(b) + "@" + std::to_string(d + 1),
                        ok, lattice_text(t, z), "single basis key expected");
            }
}

// ---- splice ----

inline void run_splice(const CategoryTable& t, SuiteReport& rep) {
    auto small = small_classes(t, 2);

    // 4-term splice against short exact counts
    for (ClassId A : small)
        for (ClassId B : small)
            for (ClassId M : small)
                for (ClassId N : small) {
                    if (k0_sub(t.cls(B).dim, t.cls(M).dim) != k0_sub(t.cls(A).dim, t.cls(N).dim))
                        continue;
                    K0 di = k0_sub(t.cls(B).dim, t.cls(M).dim);
                    bool ok_dim = true;
                    for (int v : di)
                        if (v < 0) ok_dim = false;
                    Rat rhs(0);
                    if (ok_dim && t.in_bound(di))
                        for (ClassId I : t.classes_of_dim(di)) {
                            Rat term(t.hall_g(M, I, B));
                            term *= Rat(t.hall_g(I, N, A));
                            term *= Rat(t.aut_count(M)) * Rat(t.aut_count(N)) * Rat(t.aut_count(I));
                            rhs += term;
                        }
                    rhs /= Rat(t.aut_count(A)) * Rat(t.aut_count(B));
                    rep.add("gamma-splice-hall",
                            t.class_name(A) + "," + t.class_name(B) + "->" + t.class_name(M) + "," +
                                t.class_name(N),
                            t.gamma4(A, B, M, N) == rhs, rat_str(t.gamma4(A, B, M, N)), rat_str(rhs));
                }

    // K0 constraint inside every gamma summation
    for (ClassId A : small)
        for (ClassId B : small)
            for (auto& ge : t.gamma4_list(A, B))
                rep.add("gamma-k0-constraint", t.class_name(A) + "," + t.class_name(B),
                        k0_sub(t.cls(A).dim, t.cls(B).dim) ==
                            k0_sub(t.cls(ge.N).dim, t.cls(ge.M).dim));

    // the double-splice identity
    long count = 0;
    long fails = 0;
    std::string first_fail;
    for (ClassId A : small)
        for (ClassId B : small)
            for (ClassId C : small)
                for (ClassId P : small)
                    for (ClassId Q : small)
                        for (ClassId N : small) {
                            Rat lhs(0), rhs(0);
                            for (ClassId M : small) lhs += t.gamma4(A, B, M, N) * t.gamma4(M, C, P, Q);
                            for (ClassId U : small) rhs += t.gamma4(B, C, P, U) * t.gamma4(A, U, Q, N);
                            ++count;
                            if (lhs != rhs) {
                                ++fails;
                                if (first_fail.empty())
                                    first_fail = t.class_name(A) + "," + t.class_name(B) + "," +
                                                 t.class_name(C) + ";" + t.class_name(P) + "," +
                                                 t.class_name(Q) + "," + t.class_name(N);
                            }
                        }
    rep.add("double-splice", std::to_string(count) + " tuples", fails == 0, first_fail, "");
}

// ---- serre (quantum group relations) ----

inline void run_serre(const CategoryTable& t, const SuiteOptions& opt, SuiteReport& rep) {
    auto fold = [&](const QGroupReport& q, const std::string& name) {
        rep.add(name, std::to_string(q.checked) + " instances" +
                          (q.note.empty() ? "" : " (" + q.note + ")"),
                q.pass(), q.failures.empty() ? "" : q.failures.front(), "");
    };
    fold(serre_check(t, std::max(opt.window_lo, -1), std::min(opt.window_hi, 1)), "serre-sum");
    fold(adjacent_commutator_check(t, opt.window_lo, opt.window_hi), "adjacent-commutator");
    fold(distant_and_k_checks(t, opt.window_lo, opt.window_hi), "distant-and-k");
}

// ---- tilt ----

inline TiltTable tilt_from_json(const Json& j, const CategoryTable& source,
                                const CategoryTable& target) {
    TiltTable f;
    f.source = &source;
    f.target = &target;
    try {
        for (auto& e : j.at("map")) {
            std::string from = e.at("from").get<std::string>();
            std::string to = e.at("to").get<std::string>();
            int shift = e.at("shift").get<int>();
            auto cf = source.find_class(from);
            auto ct = target.find_class(to);
            if (!cf || !ct) throw ConfigError("tilt table references unknown class name");
            f.map[*cf] = {*ct, shift};
        }
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed tilt table: ") + e.what());
    }
    for (ClassId x : source.indec_ids())
        if (!f.map.count(x)) throw ConfigError("tilt table not total on indecomposables");
    return f;
}

inline Json tilt_to_json(const TiltTable& f, const std::string& source_name,
                         const std::string& target_name) {
    Json m = Json::array();
    for (auto& [x, ys] : f.map)
        m.push_back({{"from", f.source->class_name(x)},
                     {"to", f.target->class_name(ys.first)},
                     {"shift", ys.second}});
    return Json{{"source", source_name}, {"target", target_name}, {"map", m}};
}

inline void run_tilt(const CategoryTable& src, const CategoryTable& tgt, const SuiteOptions& opt,
                     SuiteReport& rep) {
    std::vector<TiltTable> tables;
    if (!opt.tilt_file.empty()) {
        std::ifstream in(opt.tilt_file);
        if (!in) throw ConfigError("cannot open tilt table " + opt.tilt_file);
        Json j;
        try {
            in >> j;
        } catch (const Json::exception& e) {
            throw ConfigError(std::string("invalid tilt JSON: ") + e.what());
        }
        TiltTable f = tilt_from_json(j, src, tgt);
        rep.add("graded-hom-preservation", opt.tilt_file, tilt_preserves_graded_homs(f));
        rep.add("k0-consistency", opt.tilt_file, tilt_k0_consistent(f));
        if (rep.failed == 0) tables.push_back(std::move(f));
    } else {
        tables = discover_tilt(src, tgt, 0, 1);
        rep.add("discover", "orientation flip", !tables.empty(),
                "no tilting table found between the two orientations", "");
    }

    int idx = 0;
    for (auto& f : tables) {
        std::string tag = "table#" + std::to_string(idx++);
        TiltReport hr = verify_tilt_heis(f);
        for (auto& r : hr.records)
            if (!r.pass) rep.add("heis-hom " + tag, r.instance, false);
        rep.add("heis-hom " + tag, std::to_string(hr.checked) + " checks", hr.pass());
        LatticeTiltReport lr = lattice_tilt_hom(f, opt.window_lo, opt.window_hi);
        for (auto& inst : lr.failures) rep.add("lattice-hom " + tag, inst, false);
        rep.add("lattice-hom " + tag, std::to_string(lr.checked) + " checks", lr.pass());
    }

    // negative control: corrupting a discovered table must break something
    if (opt.tilt_file.empty() && !tables.empty() && tables.front().map.size() >= 2) {
        TiltTable bad = tables.front();
        auto it1 = bad.map.begin();
        auto it2 = std::next(it1);
        std::swap(it1->second, it2->second);
        bool broken = !tilt_preserves_graded_homs(bad) || !tilt_k0_consistent(bad);
        if (!broken) {
            try {
                broken = !verify_tilt_heis(bad).pass();
            } catch (const ConfigError&) {
                broken = true;
            } catch (const OutOfTable&) {
                broken = true;
            }
        }
        rep.add("negative-control", "swapped two targets", broken,
                "corrupted table passed all checks", "");
    }
}

// ---- falgebra ----

inline void run_falgebra(const CategoryTable& t, const SuiteOptions& opt, SuiteReport& rep) {
    // product coefficients = brute-force orbifold counts
    std::vector<GradedObj> monos;
    {
        auto small = small_classes(t, 2);
        for (ClassId a : small)
            for (ClassId b : small) {
                GradedObj g;
                if (a != t.zero_class()) g[0] = a;
                if (b != t.zero_class()) g[1] = b;
                if (graded_total_dim(t, g) <= 2) monos.push_back(g);
            }
    }
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());

    auto gname = [&](const GradedObj& g) {
        std::string s = "{";
        for (auto& [d, c] : g) s += std::to_string(d) + ":" + t.class_name(c) + " ";
        return s + "}";
    };

    for (auto& A : monos)
        for (auto& B : monos) {
            FCheckReport fr;
            try {
                fr = f_gamma_product_check(t, A, B, opt.budget);
            } catch (const OutOfTable&) {
                continue;
            } catch (const BudgetExceeded&) {
                continue;
            }
            rep.add("product-is-orbifold-count", gname(A) + " * " + gname(B), fr.pass(),
                    fr.failures.empty() ? "" : fr.failures.front(), "");
        }

    // differential expansion of reversed words, all graded objects of total dim <= 3
    std::vector<ClassId> comps = small_classes(t, 3);
    for (ClassId a : comps)
        for (ClassId b : comps)
            for (ClassId c : comps) {
                if (k0_total(t.cls(a).dim) + k0_total(t.cls(b).dim) + k0_total(t.cls(c).dim) > 3)
                    continue;
                GradedObj g;
                if (a != t.zero_class()) g[0] = a;
                if (b != t.zero_class()) g[1] = b;
                if (c != t.zero_class()) g[2] = c;
                FElem lhs = f_differential_expansion(t, g);
                FElem rhs = f_reversed_word(t, g);
                rep.add("differential-expansion", gname(g), lhs == rhs, felem_text(t, lhs),
                        felem_text(t, rhs));
            }
}

} // namespace suites

inline std::vector<std::string> suite_names() {
    return {"hopf", "pairing", "heis", "lattice-confluence", "splice", "serre", "tilt", "falgebra"};
}

/// Runs one named verification suite over the configured category.
inline SuiteReport run_suite(const std::string& name, const TableConfig& cfg,
                             const SuiteOptions& opt = {}) {
    SuiteReport rep;
    rep.suite = name;
    rep.params = {{"quiver", cfg.quiver.canonical_string()},
                  {"q", cfg.q},
                  {"bound", cfg.bound},
                  {"window", {opt.window_lo, opt.window_hi}},
                  {"budget", opt.budget}};
    Stopwatch sw;
    auto table = build_table(cfg);
    const CategoryTable& t = *table;

    if (name == "hopf") suites::run_hopf(t, rep);
    else if (name == "pairing") suites::run_pairing(t, rep);
    else if (name == "heis") suites::run_heis(t, rep);
    else if (name == "lattice-confluence") suites::run_lattice_confluence(t, opt, rep);
    else if (name == "splice") suites::run_splice(t, rep);
    else if (name == "serre") suites::run_serre(t, opt, rep);
    else if (name == "tilt") {
        TableConfig rcfg = cfg;
        rcfg.quiver = cfg.quiver.reversed();
        rcfg.names.clear();
        auto target = build_table(rcfg);
        suites::run_tilt(t, *target, opt, rep);
    } else if (name == "falgebra") suites::run_falgebra(t, opt, rep);
    else throw ConfigError("unknown suite '" + name + "'");

    rep.wall_ms = sw.ms();
    return rep;
}

} // namespace hallforge

#endif
