#ifndef HALLFORGE_QGROUP_HPP
#define HALLFORGE_QGROUP_HPP

#include <string>
#include <vector>

#include "hallforge/lattice.hpp"

namespace hallforge {

/// Cartan matrix of a simply laced Dynkin quiver: 2 on the diagonal, minus
/// the number of edges between distinct vertices off-diagonal.
struct CartanData {
    std::vector<std::vector<int>> a;

    static CartanData from_quiver(const Quiver& q) {
        size_t n = q.num_vertices();
        CartanData cd;
        cd.a.assign(n, std::vector<int>(n, 0));
        for (size_t i = 0; i < n; ++i) cd.a[i][i] = 2;
        for (auto& [s, t] : q.arrows) {
            cd.a[s][t] -= 1;
            cd.a[t][s] -= 1;
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j && cd.a[i][j] < -1)
                    throw ConfigError("not simply laced: multiple edges between vertices");
        return cd;
    }
};

/// Symmetric v-integer [n]_v = (v^n - v^{-n})/(v - v^{-1}) = v^{n-1} + ... + v^{1-n}.
inline Coeff v_integer(const GroundParams& g, int n) {
    Coeff r = Coeff::zero(g);
    for (int k = 0; k < n; ++k) r += vpow(g, n - 1 - 2 * k);
    return r;
}

inline Coeff v_factorial(const GroundParams& g, int n) {
    Coeff r = Coeff::one(g);
    for (int k = 2; k <= n; ++k) r *= v_integer(g, k);
    return r;
}

/// Gaussian binomial in the symmetric v-convention.
struct GaussianBinomial {
    int n, k;
    Coeff value;

    GaussianBinomial(const GroundParams& g, int n_, int k_) : n(n_), k(k_), value(Coeff::zero(g)) {
        if (k < 0 || k > n) return;
        value = v_factorial(g, n) * (v_factorial(g, k) * v_factorial(g, n - k)).inv();
    }
};

enum class SerreSign { Signed, Unsigned };

struct QGroupReport {
    long checked = 0;
    long failed = 0;
    std::vector<std::string> failures;
    std::string note;
    bool pass() const { return failed == 0; }
    void add(const std::string& inst, bool ok) {
        ++checked;
        if (!ok) {
            ++failed;
            failures.push_back(inst);
        }
    }
};

namespace detail {
inline ClassId simple_class(const CategoryTable& t, size_t vertex) {
    K0 e(t.quiver().num_vertices(), 0);
    e[vertex] = 1;
    for (ClassId c : t.indec_ids())
        if (t.cls(c).dim == e) return c;
    throw ConfigError("simple class not in table");
}

inline LatticeElem serre_sum(const CategoryTable& t, const CartanData& cd, size_t i, size_t j, int m,
                             SerreSign sign) {
    int top = 1 - cd.a[i][j];
    LatticeElem sum;
    LatticeElem zi = lat_gen(t, m, simple_class(t, i));
    LatticeElem zj = lat_gen(t, m, simple_class(t, j));
    for (int nu = 0; nu <= top; ++nu) {
        LatticeElem term = lat_unit(t);
        for (int k = 0; k < nu; ++k) term = lat_mul(t, term, zi);
        term = lat_mul(t, term, zj);
        for (int k = 0; k < top - nu; ++k) term = lat_mul(t, term, zi);
        Coeff c = GaussianBinomial(t.ground(), top, nu).value;
        if (sign == SerreSign::Signed && nu % 2 == 1) c = -c;
        sum = lat_add(sum, lat_scale(term, c));
    }
    return sum;
}
} // namespace detail

/// Decide the sign convention empirically on the first adjacent vertex pair:
/// exactly one of the signed/unsigned alternating sums must vanish.
inline SerreSign serre_sign_probe(const CategoryTable& t) {
    CartanData cd = CartanData::from_quiver(t.quiver());
    for (size_t i = 0; i < t.quiver().num_vertices(); ++i)
        for (size_t j = 0; j < t.quiver().num_vertices(); ++j) {
            if (i == j || cd.a[i][j] == 0) continue;
            bool signed_zero = detail::serre_sum(t, cd, i, j, 0, SerreSign::Signed).empty();
            bool unsigned_zero = detail::serre_sum(t, cd, i, j, 0, SerreSign::Unsigned).empty();
            if (signed_zero == unsigned_zero)
                throw ConfigError("serre sign probe inconclusive");
            return signed_zero ? SerreSign::Signed : SerreSign::Unsigned;
        }
    return SerreSign::Signed; // no adjacent pair: both variants degenerate
}

/// Quantum Serre relations at every site of the window, all ordered pairs.
inline QGroupReport serre_check(const CategoryTable& t, int site_lo, int site_hi) {
    CartanData cd = CartanData::from_quiver(t.quiver());
    SerreSign sign = serre_sign_probe(t);
    QGroupReport rep;
    rep.note = (sign == SerreSign::Signed) ? "signed variant vanishes" : "unsigned variant vanishes";
    for (size_t i = 0; i < t.quiver().num_vertices(); ++i)
        for (size_t j = 0; j < t.quiver().num_vertices(); ++j) {
            if (i == j) continue;
            for (int m = site_lo; m <= site_hi; ++m) {
                LatticeElem sum = detail::serre_sum(t, cd, i, j, m, sign);
                rep.add("serre i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                            " m=" + std::to_string(m),
                        sum.empty());
            }
        }
    return rep;
}

/// [Z^{(m)}_i, Z^{(m-1)}_j] = delta_ij K_i^{(-1)^m} / (q-1), exactly.
inline QGroupReport adjacent_commutator_check(const CategoryTable& t, int site_lo, int site_hi) {
    QGroupReport rep;
    size_t n = t.quiver().num_vertices();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (int m = site_lo; m <= site_hi; ++m) {
                ClassId si = detail::simple_class(t, i), sj = detail::simple_class(t, j);
                LatticeElem comm = lat_sub(lat_mul(t, lat_gen(t, m, si), lat_gen(t, m - 1, sj)),
                                           lat_mul(t, lat_gen(t, m - 1, sj), lat_gen(t, m, si)));
                LatticeElem expect;
                if (i == j) {
                    K0 alpha = t.cls(si).dim;
                    if (m % 2 != 0) alpha = k0_neg(alpha);
                    expect = lat_scale(lat_k(t, alpha),
                                       Coeff::of(t.ground(), ratq(1, t.ground().q - 1)));
                }
                rep.add("commutator i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                            " m=" + std::to_string(m),
                        comm == expect);
            }
    return rep;
}

/// Scalar relations against the Cartan matrix: the bridging identity
/// sym(e_i, e_j) = a_ij (with a_ii = 2), the K-commutation exponent
/// (-1)^m a_ij, and the distant-site exponent (-1)^{m-n}(n-m+1) a_ij.
inline QGroupReport distant_and_k_checks(const CategoryTable& t, int site_lo, int site_hi) {
    CartanData cd = CartanData::from_quiver(t.quiver());
    QGroupReport rep;
    size_t n = t.quiver().num_vertices();

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            K0 ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            rep.add("bridge i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1),
                    t.sym_exp(ei, ej) == cd.a[i][j]);
        }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ClassId si = detail::simple_class(t, i);
            K0 kj(n, 0);
            kj[j] = 1;
            for (int m = site_lo; m <= site_hi; ++m) {
                int e = (m % 2 == 0 ? 1 : -1) * cd.a[i][j];
                LatticeElem lhs = lat_mul(t, lat_gen(t, m, si), lat_k(t, kj));
                LatticeElem rhs = lat_scale(lat_mul(t, lat_k(t, kj), lat_gen(t, m, si)),
                                            vpow(t.ground(), e));
                rep.add("ZK i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                            " m=" + std::to_string(m),
                        lhs == rhs);
            }
        }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ClassId si = detail::simple_class(t, i), sj = detail::simple_class(t, j);
            for (int m = site_lo; m <= site_hi; ++m)
                for (int nn = site_lo; nn <= site_hi; ++nn) {
                    if (std::abs(m - nn) < 2) continue;
                    // printed exponent for m > nn; inverse reading otherwise
                    int e;
                    if (m > nn) e = ((m - nn) % 2 == 0 ? 1 : -1) * (nn - m + 1) * cd.a[i][j];
                    else e = -(((nn - m) % 2 == 0 ? 1 : -1) * (m - nn + 1)) * cd.a[i][j];
                    LatticeElem lhs = lat_mul(t, lat_gen(t, m, si), lat_gen(t, nn, sj));
                    LatticeElem rhs = lat_scale(lat_mul(t, lat_gen(t, nn, sj), lat_gen(t, m, si)),
                                                vpow(t.ground(), e));
                    rep.add("ZZ i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " m=" +
                                std::to_string(m) + " n=" + std::to_string(nn),
                            lhs == rhs);
                }
        }
    return rep;
}

} // namespace hallforge

#endif
