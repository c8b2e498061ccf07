// Independent brute-force counting oracles for Hom/Ext/Aut: enumerate raw
// map tuples and check the defining conditions directly, with no shared code
// path with CategoryTable's linear-system computations.
#ifndef HALLFORGE_TESTS_ORACLE_BRUTE_HPP
#define HALLFORGE_TESTS_ORACLE_BRUTE_HPP

#include <set>
#include <vector>

#include "hallforge/category.hpp"

namespace oracle {

using hallforge::Fq;
using hallforge::K0;
using hallforge::Mat;
using hallforge::Quiver;
using hallforge::Rep;

inline long pow_ll(long b, long e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

// decode index -> tuple of matrices f_v of shape (db[v] x da[v])
inline std::vector<Mat> decode_tuple(const Fq& F, const K0& da, const K0& db, long x) {
    std::vector<Mat> f;
    for (size_t v = 0; v < da.size(); ++v) {
        Mat m(db[v], da[v]);
        for (auto& e : m.e) {
            e = static_cast<uint8_t>(x % F.q());
            x /= F.q();
        }
        f.push_back(std::move(m));
    }
    return f;
}

inline bool commutes(const Fq& F, const Quiver& qv, const Rep& ra, const Rep& rb,
                     const std::vector<Mat>& f) {
    for (size_t e = 0; e < qv.arrows.size(); ++e) {
        auto [s, t] = qv.arrows[e];
        if (!(mat_mul(F, f[t], ra.mats[e]) == mat_mul(F, rb.mats[e], f[s]))) return false;
    }
    return true;
}

/// (hom_dim, ext1_dim) by raw enumeration: |Hom| counted directly, |Ext^1|
/// as |Z^1| / |B^1| with the coboundary image enumerated elementwise.
inline std::pair<int, int> brute_hom_ext(const Fq& F, const Quiver& qv, const Rep& ra, const K0& da,
                                         const Rep& rb, const K0& db) {
    long fspace = 0;
    for (size_t v = 0; v < da.size(); ++v) fspace += static_cast<long>(da[v]) * db[v];
    long total = pow_ll(F.q(), fspace);
    long hom_count = 0;
    std::set<std::vector<uint8_t>> image;
    long z1 = 0;
    for (auto& [s, t] : qv.arrows) z1 += static_cast<long>(da[s]) * db[t];
    for (long x = 0; x < total; ++x) {
        auto f = decode_tuple(F, da, db, x);
        if (commutes(F, qv, ra, rb, f)) ++hom_count;
        // coboundary delta(f)_e = f_t A_e - B_e f_s
        std::vector<uint8_t> delta;
        for (size_t e = 0; e < qv.arrows.size(); ++e) {
            auto [s, t] = qv.arrows[e];
            Mat d1 = mat_mul(F, f[t], ra.mats[e]);
            Mat d2 = mat_mul(F, rb.mats[e], f[s]);
            for (size_t k = 0; k < d1.e.size(); ++k)
                delta.push_back(static_cast<uint8_t>(F.sub(d1.e[k], d2.e[k])));
        }
        image.insert(delta);
    }
    int hom = 0;
    while (pow_ll(F.q(), hom) < hom_count) ++hom;
    long ext_card = pow_ll(F.q(), z1) / static_cast<long>(image.size());
    int ext = 0;
    while (pow_ll(F.q(), ext) < ext_card) ++ext;
    return {hom, ext};
}

inline long brute_aut_count(const Fq& F, const Quiver& qv, const Rep& ra, const K0& da) {
    long fspace = 0;
    for (size_t v = 0; v < da.size(); ++v) fspace += static_cast<long>(da[v]) * da[v];
    long total = pow_ll(F.q(), fspace);
    long count = 0;
    for (long x = 0; x < total; ++x) {
        auto f = decode_tuple(F, da, da, x);
        if (!commutes(F, qv, ra, ra, f)) continue;
        bool inv = true;
        for (auto& m : f)
            if (m.rows > 0 && !hallforge::mat_invertible(F, m)) { inv = false; break; }
        if (inv) ++count;
    }
    return count;
}

/// Closed-form |Aut| for a decomposed object, valid when every indecomposable
/// is a brick (End = F_q): prod_i |GL_{m_i}(F_q)| * q^{sum_{i != j} m_i m_j hom(X_i, X_j)}.
inline long block_aut_count(const hallforge::CategoryTable& t, hallforge::ClassId c) {
    using namespace hallforge;
    std::map<ClassId, int> mult;
    for (ClassId x : t.decompose(c)) ++mult[x];
    long q = t.ground().q;
    long out = 1;
    for (auto& [x, m] : mult) {
        if (t.hom_dim(x, x) != 1) return -1; // not a brick; formula not applicable
        long qm = pow_ll(q, m);
        for (int i = 0; i < m; ++i) out *= qm - pow_ll(q, i); // |GL_m(F_q)|
    }
    for (auto& [x, mx] : mult)
        for (auto& [y, my] : mult)
            if (x != y) out *= pow_ll(q, static_cast<long>(mx) * my * t.hom_dim(x, y));
    return out;
}

} // namespace oracle

#endif
