#ifndef HALLFORGE_TILT_HPP
#define HALLFORGE_TILT_HPP

#include <string>
#include <vector>

#include "hallforge/graded.hpp"
#include "hallforge/heis.hpp"

namespace hallforge {

/// A derived equivalence presented as a table on indecomposables:
/// source indecomposable -> (target indecomposable, shift), meaning
/// F(X) = Y[shift]. Validated to preserve all graded hom dimensions.
struct TiltTable {
    const CategoryTable* source = nullptr;
    const CategoryTable* target = nullptr;
    std::map<ClassId, std::pair<ClassId, int>> map; // total on source indecomposables

    int max_abs_shift() const {
        int m = 0;
        for (auto& [x, ys] : map) m = std::max(m, std::abs(ys.second));
        return m;
    }
};

/// Image of an object: map each indecomposable summand through the table and
/// collect direct sums by shift (degree -shift).
inline GradedObj apply_tilt(const TiltTable& f, ClassId a) {
    GradedObj out;
    std::map<int, ClassId> acc; // degree -> running direct sum in target
    for (ClassId x : f.source->decompose(a)) {
        auto [y, s] = f.map.at(x);
        int deg = -s;
        auto it = acc.find(deg);
        if (it == acc.end()) acc[deg] = y;
        else it->second = f.target->direct_sum(it->second, y);
    }
    for (auto& [d, c] : acc)
        if (c != f.target->zero_class()) out[d] = c;
    return out;
}

/// Induced isomorphism of Grothendieck groups: additive extension with sign
/// (-1)^shift, determined by the images of the simple classes.
inline K0 tilt_k0(const TiltTable& f, const K0& alpha) {
    size_t n = f.source->quiver().num_vertices();
    K0 out(f.target->quiver().num_vertices(), 0);
    for (size_t v = 0; v < n; ++v) {
        if (alpha[v] == 0) continue;
        K0 ev(n, 0);
        ev[v] = 1;
        ClassId simple = -1;
        for (ClassId c : f.source->indec_ids())
            if (f.source->cls(c).dim == ev) simple = c;
        if (simple < 0) throw ConfigError("simple class missing from source table");
        auto [y, s] = f.map.at(simple);
        K0 img = k0_scale((s % 2 == 0 ? 1 : -1) * alpha[v], f.target->cls(y).dim);
        out = k0_add(out, img);
    }
    return out;
}

/// Graded-hom preservation over a window of shifts that covers all entries.
inline bool tilt_preserves_graded_homs(const TiltTable& f) {
    int w = f.max_abs_shift() + 2;
    for (ClassId x : f.source->indec_ids())
        for (ClassId y : f.source->indec_ids()) {
            auto [yx, sx] = f.map.at(x);
            auto [yy, sy] = f.map.at(y);
            GradedObj fx = graded_of(*f.target, -sx, yx);
            GradedObj fy = graded_of(*f.target, -sy, yy);
            for (int i = -w; i <= w; ++i) {
                int src = i == 0 ? f.source->hom_dim(x, y) : (i == 1 ? f.source->ext1_dim(x, y) : 0);
                if (src != graded_hom_dim(*f.target, fx, fy, i)) return false;
            }
        }
    return true;
}

/// K0 consistency: the additive extension from simples matches the image of
/// every indecomposable.
inline bool tilt_k0_consistent(const TiltTable& f) {
    for (ClassId x : f.source->indec_ids()) {
        auto [y, s] = f.map.at(x);
        K0 expect = k0_scale(s % 2 == 0 ? 1 : -1, f.target->cls(y).dim);
        if (tilt_k0(f, f.source->cls(x).dim) != expect) return false;
    }
    return true;
}

/// Exhaustive search over assignments indec -> (indec', shift) passing the
/// graded-hom preservation check; returns all candidates.
inline std::vector<TiltTable> discover_tilt(const CategoryTable& source, const CategoryTable& target,
                                            int shift_lo, int shift_hi) {
    std::vector<TiltTable> found;
    if (shift_lo > shift_hi) return found;
    const auto& src = source.indec_ids();
    const auto& tgt = target.indec_ids();
    if (src.size() != tgt.size()) return found;

    std::vector<std::pair<ClassId, int>> options;
    for (ClassId y : tgt)
        for (int s = shift_lo; s <= shift_hi; ++s) options.emplace_back(y, s);

    std::vector<int> pick(src.size(), -1);
    std::vector<bool> used(options.size(), false);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == src.size()) {
            TiltTable f;
            f.source = &source;
            f.target = &target;
            for (size_t k = 0; k < src.size(); ++k) f.map[src[k]] = options[pick[k]];
            if (tilt_preserves_graded_homs(f) && tilt_k0_consistent(f)) found.push_back(std::move(f));
            return;
        }
        for (size_t o = 0; o < options.size(); ++o) {
            if (used[o]) continue;
            used[o] = true;
            pick[i] = static_cast<int>(o);
            self(self, i + 1);
            used[o] = false;
        }
    };
    rec(rec, 0);
    return found;
}

/// Z(F(A)) in Heis(target) for a tilting (all shifts in {0,1}).
inline HeisElem tilt_z_image(const TiltTable& f, ClassId a) {
    GradedObj img = apply_tilt(f, a);
    for (auto& [d, c] : img)
        if (d != 0 && d != -1) throw ConfigError("not a tilting: image outside degrees {-1,0}");
    return z_complex2(*f.target, graded_comp(*f.target, img, -1), graded_comp(*f.target, img, 0));
}

struct TiltCheckRecord {
    std::string instance;
    bool pass;
};

struct TiltReport {
    long checked = 0;
    long failed = 0;
    std::vector<TiltCheckRecord> records;
    bool pass() const { return failed == 0; }
    void add(std::string inst, bool ok) {
        ++checked;
        if (!ok) ++failed;
        records.push_back({std::move(inst), ok});
    }
};

/// F_*([A']*[A'']) = F_*([A']) F_*([A'']) in Heis(target) for all in-bound
/// source pairs, F_*([A]) = Z(F(A)); plus the split normal form
/// [A] = |Hom(A0,A1)|^{-1/2} [A1]*[A0] for the shift decomposition, and the
/// Hom/Ext vanishing pattern between the shift classes.
inline TiltReport verify_tilt_heis(const TiltTable& f) {
    const CategoryTable& S = *f.source;
    TiltReport rep;

    // vanishing pattern: Hom(A_1, A_0) = 0, Ext^1(A_0, A_1) = 0
    for (ClassId x : S.indec_ids())
        for (ClassId y : S.indec_ids()) {
            int sx = f.map.at(x).second, sy = f.map.at(y).second;
            if (sx == 1 && sy == 0)
                rep.add("hom-vanish " + S.class_name(x) + "," + S.class_name(y),
                        S.hom_dim(x, y) == 0);
            if (sx == 0 && sy == 1)
                rep.add("ext-vanish " + S.class_name(x) + "," + S.class_name(y),
                        S.ext1_dim(x, y) == 0);
        }

    // split normal form per object
    for (ClassId a = 0; a < static_cast<ClassId>(S.num_classes()); ++a) {
        ClassId a0 = S.zero_class(), a1 = S.zero_class();
        for (ClassId x : S.decompose(a)) {
            if (f.map.at(x).second == 0) a0 = S.direct_sum(a0, x);
            else a1 = S.direct_sum(a1, x);
        }
        BElem prod = hall_mul(S, b_gen(S, a1), b_gen(S, a0));
        BElem expect = b_scale(b_gen(S, a), vpow(S.ground(), S.hom_dim(a0, a1)));
        rep.add("split-form " + S.class_name(a), prod == expect);
    }

    // multiplicativity on all in-bound pairs
    for (ClassId a = 0; a < static_cast<ClassId>(S.num_classes()); ++a)
        for (ClassId b = 0; b < static_cast<ClassId>(S.num_classes()); ++b) {
            K0 dsum = k0_add(S.cls(a).dim, S.cls(b).dim);
            if (!S.in_bound(dsum)) continue;
            HeisElem lhs;
            Coeff twist = S.euler(S.cls(b).dim, S.cls(a).dim);
            for (ClassId c : S.classes_of_dim(dsum)) {
                long g = S.hall_g(a, b, c);
                if (g) lhs = heis_add(lhs, heis_scale(tilt_z_image(f, c),
                                                      twist * Coeff::of(S.ground(), g)));
            }
            HeisElem rhs = heis_mul(*f.target, tilt_z_image(f, a), tilt_z_image(f, b));
            rep.add("mult " + S.class_name(a) + "*" + S.class_name(b), lhs == rhs);
        }
    return rep;
}

} // namespace hallforge

#endif
