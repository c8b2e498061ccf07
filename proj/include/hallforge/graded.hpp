#ifndef HALLFORGE_GRADED_HPP
#define HALLFORGE_GRADED_HPP

#include <map>

#include "hallforge/category.hpp"

namespace hallforge {

/// Complex with zero differential: degree -> nonzero class. The empty map is
/// the zero object.
using GradedObj = std::map<int, ClassId>;

inline ClassId graded_comp(const CategoryTable& t, const GradedObj& g, int deg) {
    auto it = g.find(deg);
    return it == g.end() ? t.zero_class() : it->second;
}

inline GradedObj graded_of(const CategoryTable& t, int deg, ClassId c) {
    GradedObj g;
    if (c != t.zero_class()) g[deg] = c;
    return g;
}

/// (A.[n])^i = A^{n+i}: shifting by n moves keys down by n.
inline GradedObj graded_shift(const GradedObj& g, int n) {
    GradedObj out;
    for (auto& [d, c] : g) out[d - n] = c;
    return out;
}

inline int graded_total_dim(const CategoryTable& t, const GradedObj& g) {
    int n = 0;
    for (auto& [d, c] : g) n += k0_total(t.cls(c).dim);
    return n;
}

/// dim Hom_D(X, Y[i]) = sum_j hom(X^j, Y^{j+i}) + sum_j ext1(X^j, Y^{j+i-1}).
inline int graded_hom_dim(const CategoryTable& t, const GradedObj& x, const GradedObj& y, int i) {
    int total = 0;
    for (auto& [j, xc] : x) {
        total += t.hom_dim(xc, graded_comp(t, y, j + i));
        total += t.ext1_dim(xc, graded_comp(t, y, j + i - 1));
    }
    return total;
}

/// |Aut| of a graded object: block-triangular with vertexwise-invertible
/// diagonal and free Ext components one degree down.
inline long graded_aut_count(const CategoryTable& t, const GradedObj& x) {
    long n = 1;
    for (auto& [j, c] : x) {
        n *= t.aut_count(c);
        long e = t.ext1_dim(c, graded_comp(t, x, j - 1));
        for (long i = 0; i < e; ++i) n *= t.ground().q;
    }
    return n;
}

/// Orbifold count of exact triangles A -> M[1]+N -> B[1] -> A[1]:
/// g_{A,B[1]}^{M[1]+N} = gamma4(A,B,M,N) . |Ext^1(N,M)|.
inline Rat triangle_g2(const CategoryTable& t, ClassId A, ClassId B, ClassId M, ClassId N) {
    Rat g = t.gamma4(A, B, M, N);
    long e = t.ext1_dim(N, M);
    for (long i = 0; i < e; ++i) g *= t.ground().q;
    return g;
}

namespace detail {

/// Morphism between objects of the category as per-vertex matrices.
using Morph = std::vector<Mat>;

inline Morph zero_morph(const CategoryTable& t, ClassId a, ClassId b) {
    Morph f;
    for (size_t v = 0; v < t.quiver().num_vertices(); ++v)
        f.push_back(Mat(t.cls(b).dim[v], t.cls(a).dim[v]));
    return f;
}

inline Morph combine(const CategoryTable& t, const std::vector<std::vector<Mat>>& basis, ClassId a,
                     ClassId b, long index) {
    Morph f = zero_morph(t, a, b);
    long x = index;
    for (auto& bvec : basis) {
        int c = static_cast<int>(x % t.fq().q());
        x /= t.fq().q();
        if (c)
            for (size_t v = 0; v < f.size(); ++v)
                for (size_t k = 0; k < f[v].e.size(); ++k)
                    f[v].e[k] = static_cast<uint8_t>(t.fq().add(f[v].e[k], t.fq().mul(c, bvec[v].e[k])));
    }
    return f;
}

/// Exactness of X --f--> Y --g--> Z at Y, vertexwise: g f = 0 and
/// rank f + rank g = dim Y.
inline bool exact_at(const CategoryTable& t, const Morph& f, const Morph& g, const K0& dim_y) {
    for (size_t v = 0; v < f.size(); ++v) {
        Mat comp = mat_mul(t.fq(), g[v], f[v]);
        for (uint8_t e : comp.e)
            if (e) return false;
        if (mat_rank(t.fq(), f[v]) + mat_rank(t.fq(), g[v]) != dim_y[v]) return false;
    }
    return true;
}

} // namespace detail

/// Orbifold number of long exact sequences
///   ... -> A^i -> C^i -> B^i -> A^{i+1} -> ...
/// modulo prod Aut(A^i) x Aut(B^i), by exhaustive enumeration of all
/// intertwiner tuples with exactness checked at every position.
inline Rat gamma_graded(const CategoryTable& t, const GradedObj& A, const GradedObj& B,
                        const GradedObj& C, long budget = (1L << 24)) {
    int lo = 0, hi = -1;
    bool any = false;
    for (auto* g : {&A, &B, &C})
        for (auto& [d, c] : *g) {
            if (!any) { lo = hi = d; any = true; }
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    if (!any) return Rat(1); // empty sequence of zero objects

    struct Slot {
        ClassId from, to;
        const std::vector<std::vector<Mat>>* basis;
    };
    std::vector<Slot> slots; // u_i, v_i for i in [lo,hi]; boundary maps between
    auto comp = [&](const GradedObj& g, int d) { return graded_comp(t, g, d); };
    // slot order: for each degree i: u_i (A^i->C^i), v_i (C^i->B^i), d_i (B^i->A^{i+1})
    for (int i = lo; i <= hi; ++i) {
        slots.push_back({comp(A, i), comp(C, i), &t.hom_basis(comp(A, i), comp(C, i))});
        slots.push_back({comp(C, i), comp(B, i), &t.hom_basis(comp(C, i), comp(B, i))});
        slots.push_back({comp(B, i), comp(A, i + 1), &t.hom_basis(comp(B, i), comp(A, i + 1))});
    }
    long total = 1;
    for (auto& s : slots) {
        for (size_t k = 0; k < s.basis->size(); ++k) {
            total *= t.ground().q;
            if (total > budget) throw BudgetExceeded("gamma_graded enumeration");
        }
    }
    long count = 0;
    for (long x = 0; x < total; ++x) {
        long r = x;
        std::vector<detail::Morph> maps(slots.size());
        for (size_t s = 0; s < slots.size(); ++s) {
            long combos = 1;
            for (size_t k = 0; k < slots[s].basis->size(); ++k) combos *= t.ground().q;
            maps[s] = detail::combine(t, *slots[s].basis, slots[s].from, slots[s].to, r % combos);
            r /= combos;
        }
        bool ok = true;
        for (int i = lo; i <= hi && ok; ++i) {
            size_t base = static_cast<size_t>(i - lo) * 3;
            // exact at A^i: image of d_{i-1} = kernel of u_i
            detail::Morph prev = (i == lo) ? detail::zero_morph(t, t.zero_class(), comp(A, i))
                                           : maps[base - 1];
            ok = ok && detail::exact_at(t, prev, maps[base], t.cls(comp(A, i)).dim);
            // exact at C^i
            ok = ok && detail::exact_at(t, maps[base], maps[base + 1], t.cls(comp(C, i)).dim);
            // exact at B^i
            ok = ok && detail::exact_at(t, maps[base + 1], maps[base + 2], t.cls(comp(B, i)).dim);
        }
        if (ok) ++count;
    }
    Rat denom(1);
    for (int i = lo; i <= hi; ++i) {
        denom *= Rat(t.aut_count(comp(A, i)));
        denom *= Rat(t.aut_count(comp(B, i)));
    }
    return Rat(count) / denom;
}

} // namespace hallforge

#endif
