#ifndef HALLFORGE_CATEGORY_HPP
#define HALLFORGE_CATEGORY_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hallforge/coeff.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/linalg.hpp"
#include "hallforge/quiver.hpp"

namespace hallforge {

using ClassId = int;

/// A representation: one matrix per arrow, of shape dim(target) x dim(source).
struct Rep {
    std::vector<Mat> mats;
};

/// Memoized enumeration of all isomorphism classes of representations with
/// dimension vector below a componentwise bound, together with Hom/Ext/Aut
/// counts, subobject tables, Hall numbers and 4-term gamma counts.
///
/// Classification is by exhaustive partition of all representations of each
/// dimension vector into orbits of the base-change group (product of general
/// linear groups). Queries after construction are read-only; lazily filled
/// memo tables are guarded by a mutex.
class CategoryTable {
public:
    struct ClassData {
        K0 dim;
        Rep rep;                      // canonical representative (minimal encoding)
        std::vector<ClassId> indecs;  // sorted multiset of indecomposable summands
        bool is_indec = false;
    };
    struct SubEntry {
        ClassId sub, quot;
        long count;
    };
    struct GammaEntry {
        ClassId M, N;
        Rat value;
    };

    CategoryTable(Quiver quiver, GroundParams ground, K0 bound, long budget = (1L << 22))
        : quiver_(std::move(quiver)), ground_(ground), fq_(ground.q), bound_(std::move(bound)), budget_(budget) {
        quiver_.validate();
        if (bound_.size() != quiver_.num_vertices())
            throw ConfigError("bound length mismatch");
        for (int b : bound_)
            if (b < 0) throw ConfigError("negative bound entry");
        build();
    }

    /// Construct from previously enumerated classes (cache load). Orbit maps
    /// are rebuilt lazily per dimension vector and verified against the
    /// stored representatives.
    CategoryTable(Quiver quiver, GroundParams ground, K0 bound, long budget,
                  std::vector<ClassData> classes)
        : quiver_(std::move(quiver)), ground_(ground), fq_(ground.q), bound_(std::move(bound)),
          budget_(budget), classes_(std::move(classes)) {
        quiver_.validate();
        for (ClassId c = 0; c < static_cast<ClassId>(classes_.size()); ++c) {
            slot_[classes_[c].dim].push_back(c);
            if (classes_[c].is_indec) indec_ids_.push_back(c);
        }
        assign_default_names();
    }

    const Quiver& quiver() const { return quiver_; }
    const GroundParams& ground() const { return ground_; }
    const Fq& fq() const { return fq_; }
    const K0& bound() const { return bound_; }
    size_t num_classes() const { return classes_.size(); }
    const ClassData& cls(ClassId c) const { return classes_[c]; }
    ClassId zero_class() const { return 0; }
    const std::vector<ClassId>& indec_ids() const { return indec_ids_; }

    const std::vector<ClassId>& classes_of_dim(const K0& d) const {
        check_in_bound(d);
        static const std::vector<ClassId> empty;
        auto it = slot_.find(d);
        return it == slot_.end() ? empty : it->second;
    }

    // ---- classification ----

    ClassId classify(const Rep& rep, const K0& dim) const {
        check_in_bound(dim);
        const auto& omap = ensure_orbit_map(dim);
        return omap[encode_rep(rep, dim)];
    }

    ClassId direct_sum(ClassId a, ClassId b) const {
        auto key = pair_key(a, b);
        {
            std::lock_guard<std::mutex> lk(memo_mtx_);
            auto it = dsum_memo_.find(key);
            if (it != dsum_memo_.end()) return it->second;
        }
        K0 d = k0_add(classes_[a].dim, classes_[b].dim);
        if (!k0_leq(d, bound_)) throw OutOfTable("direct sum dimension " + k0_str(d));
        Rep r;
        for (size_t e = 0; e < quiver_.arrows.size(); ++e) {
            auto [s, t] = quiver_.arrows[e];
            Mat m(d[t], d[s]);
            const Mat& ma = classes_[a].rep.mats[e];
            const Mat& mb = classes_[b].rep.mats[e];
            for (int i = 0; i < ma.rows; ++i)
                for (int j = 0; j < ma.cols; ++j) m.at(i, j) = ma.at(i, j);
            for (int i = 0; i < mb.rows; ++i)
                for (int j = 0; j < mb.cols; ++j) m.at(ma.rows + i, ma.cols + j) = mb.at(i, j);
            r.mats.push_back(std::move(m));
        }
        ClassId c = classify(r, d);
        std::lock_guard<std::mutex> lk(memo_mtx_);
        dsum_memo_[key] = c;
        return c;
    }

    const std::vector<ClassId>& decompose(ClassId c) const { return classes_[c].indecs; }

    // ---- Hom / Ext / Aut ----

    int hom_dim(ClassId a, ClassId b) const { return hom_ext(a, b).first; }
    int ext1_dim(ClassId a, ClassId b) const { return hom_ext(a, b).second; }

    std::pair<int, int> hom_ext(ClassId a, ClassId b) const {
        {
            std::lock_guard<std::mutex> lk(memo_mtx_);
            auto it = homext_memo_.find(pair_key(a, b));
            if (it != homext_memo_.end()) return it->second;
        }
        auto r = hom_ext_of_reps(classes_[a].rep, classes_[a].dim, classes_[b].rep, classes_[b].dim);
        std::lock_guard<std::mutex> lk(memo_mtx_);
        homext_memo_[pair_key(a, b)] = r;
        return r;
    }

    /// Basis of Hom(A, B) as tuples of per-vertex matrices f_i : V^A_i -> V^B_i.
    const std::vector<std::vector<Mat>>& hom_basis(ClassId a, ClassId b) const {
        std::lock_guard<std::mutex> lk(memo_mtx_);
        auto key = pair_key(a, b);
        auto it = hombasis_memo_.find(key);
        if (it != hombasis_memo_.end()) return it->second;
        Mat sys = hom_system(classes_[a].rep, classes_[a].dim, classes_[b].rep, classes_[b].dim);
        auto ker = kernel_basis(fq_, sys);
        std::vector<std::vector<Mat>> basis;
        for (auto& v : ker) basis.push_back(unflatten_maps(v, classes_[a].dim, classes_[b].dim));
        return hombasis_memo_.emplace(key, std::move(basis)).first->second;
    }

    long aut_count(ClassId a) const {
        {
            std::lock_guard<std::mutex> lk(memo_mtx_);
            auto it = aut_memo_.find(a);
            if (it != aut_memo_.end()) return it->second;
        }
        const auto& basis = hom_basis(a, a);
        const K0& d = classes_[a].dim;
        long combos = 1;
        for (size_t i = 0; i < basis.size(); ++i) combos *= fq_.q();
        long count = 0;
        std::vector<Mat> f(quiver_.num_vertices());
        for (long x = 0; x < combos; ++x) {
            for (size_t v = 0; v < quiver_.num_vertices(); ++v) f[v] = Mat(d[v], d[v]);
            long t = x;
            for (auto& bvec : basis) {
                int c = static_cast<int>(t % fq_.q());
                t /= fq_.q();
                if (c)
                    for (size_t v = 0; v < quiver_.num_vertices(); ++v)
                        for (size_t k = 0; k < bvec[v].e.size(); ++k)
                            f[v].e[k] = static_cast<uint8_t>(fq_.add(f[v].e[k], fq_.mul(c, bvec[v].e[k])));
            }
            bool inv = true;
            for (size_t v = 0; v < quiver_.num_vertices() && inv; ++v)
                if (d[v] > 0 && !mat_invertible(fq_, f[v])) inv = false;
            if (inv) ++count;
        }
        std::lock_guard<std::mutex> lk(memo_mtx_);
        aut_memo_[a] = count;
        return count;
    }

    // ---- Euler form ----

    int euler_exp(const K0& a, const K0& b) const { return quiver_.euler_exp(a, b); }
    int sym_exp(const K0& a, const K0& b) const { return quiver_.sym_exp(a, b); }
    Coeff euler(const K0& a, const K0& b) const { return vpow(ground_, euler_exp(a, b)); }
    Coeff sym(const K0& a, const K0& b) const { return vpow(ground_, sym_exp(a, b)); }

    // ---- subobjects, Hall numbers, gamma ----

    /// Grouped enumeration of all subrepresentations of the canonical
    /// representative of c: (sub class, quotient class, count) triples.
    const std::vector<SubEntry>& subobjects(ClassId c) const {
        {
            std::lock_guard<std::mutex> lk(memo_mtx_);
            auto it = sub_memo_.find(c);
            if (it != sub_memo_.end()) return it->second;
        }
        auto entries = scan_subobjects(c);
        std::lock_guard<std::mutex> lk(memo_mtx_);
        return sub_memo_.emplace(c, std::move(entries)).first->second;
    }

    /// Number of subobjects of C isomorphic to A with quotient isomorphic to B.
    long hall_g(ClassId A, ClassId B, ClassId C) const {
        if (k0_add(classes_[A].dim, classes_[B].dim) != classes_[C].dim) return 0;
        for (auto& e : subobjects(C))
            if (e.sub == A && e.quot == B) return e.count;
        return 0;
    }

    /// All (M, N) with nonzero orbifold count of exact sequences
    /// 0 -> M -> B -> A -> N -> 0, computed by enumerating Hom(B, A) and
    /// classifying kernels and cokernels.
    const std::vector<GammaEntry>& gamma4_list(ClassId A, ClassId B) const {
        {
            std::lock_guard<std::mutex> lk(memo_mtx_);
            auto it = gamma_memo_.find(pair_key(A, B));
            if (it != gamma_memo_.end()) return it->second;
        }
        auto entries = scan_gamma(A, B);
        std::lock_guard<std::mutex> lk(memo_mtx_);
        return gamma_memo_.emplace(pair_key(A, B), std::move(entries)).first->second;
    }

    Rat gamma4(ClassId A, ClassId B, ClassId M, ClassId N) const {
        // K0 constraint: dim B - dim M = dim A - dim N, else the count is 0
        if (k0_sub(classes_[B].dim, classes_[M].dim) != k0_sub(classes_[A].dim, classes_[N].dim))
            return Rat(0);
        for (auto& e : gamma4_list(A, B))
            if (e.M == M && e.N == N) return e.value;
        return Rat(0);
    }

    // ---- names ----

    const std::string& class_name(ClassId c) const { return id_name_[c]; }

    std::optional<ClassId> find_class(const std::string& name) const {
        auto it = names_.find(name);
        if (it == names_.end()) return std::nullopt;
        return it->second;
    }

    void set_name(const std::string& name, ClassId c) {
        names_[name] = c;
        id_name_[c] = name;
    }

    /// Hom-count fingerprint: vector of hom_dim(X, c) over all indecomposables X.
    std::vector<int> fingerprint(ClassId c) const {
        std::vector<int> fp;
        fp.reserve(indec_ids_.size());
        for (ClassId x : indec_ids_) fp.push_back(hom_dim(x, c));
        return fp;
    }

    // ---- helpers shared with other modules ----

    static uint64_t pair_key(ClassId a, ClassId b) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
    }

    void check_in_bound(const K0& d) const {
        if (d.size() != bound_.size()) throw OutOfTable("dimension vector length");
        for (size_t i = 0; i < d.size(); ++i)
            if (d[i] < 0 || d[i] > bound_[i])
                throw OutOfTable("dimension " + k0_str(d) + " exceeds bound " + k0_str(bound_));
    }

    bool in_bound(const K0& d) const {
        if (d.size() != bound_.size()) return false;
        for (size_t i = 0; i < d.size(); ++i)
            if (d[i] < 0 || d[i] > bound_[i]) return false;
        return true;
    }

    /// Hom/Ext dimensions between arbitrary representations (not necessarily
    /// canonical): kernel and cokernel dimensions of the intertwiner system.
    std::pair<int, int> hom_ext_of_reps(const Rep& ra, const K0& da, const Rep& rb, const K0& db) const {
        Mat sys = hom_system(ra, da, rb, db);
        int rank = mat_rank(fq_, sys);
        return {sys.cols - rank, sys.rows - rank};
    }

    /// Classify a subrepresentation given per-vertex row bases inside parent.
    ClassId classify_subrep(const Rep& parent, const K0& pdim, const std::vector<Mat>& row_bases) const {
        K0 d(pdim.size());
        for (size_t v = 0; v < pdim.size(); ++v) d[v] = row_bases[v].rows;
        return classify(subrep_matrices(parent, pdim, row_bases), d);
    }

    /// The subrepresentation itself, as matrices in the given bases.
    Rep subrep_matrices(const Rep& parent, const K0& pdim, const std::vector<Mat>& row_bases) const {
        K0 d(pdim.size());
        for (size_t v = 0; v < pdim.size(); ++v) d[v] = row_bases[v].rows;
        Rep sub;
        for (size_t e = 0; e < quiver_.arrows.size(); ++e) {
            auto [s, t] = quiver_.arrows[e];
            Mat m(d[t], d[s]);
            Mat tgtT(pdim[t], d[t]);
            for (int r = 0; r < d[t]; ++r)
                for (int c = 0; c < pdim[t]; ++c) tgtT.at(c, r) = row_bases[t].at(r, c);
            for (int j = 0; j < d[s]; ++j) {
                std::vector<int> w(pdim[s]);
                for (int c = 0; c < pdim[s]; ++c) w[c] = row_bases[s].at(j, c);
                auto y = mat_apply(fq_, parent.mats[e], w);
                auto x = solve(fq_, tgtT, y);
                if (!x) throw std::logic_error("subspace tuple not arrow-stable");
                for (int r = 0; r < d[t]; ++r) m.at(r, j) = static_cast<uint8_t>((*x)[r]);
            }
            sub.mats.push_back(std::move(m));
        }
        return sub;
    }

    /// Classify the quotient of parent by the subrepresentation spanned by
    /// the given RREF row bases, using completion rows as quotient coordinates.
    ClassId classify_quotient(const Rep& parent, const K0& pdim, const std::vector<Mat>& rref_bases,
                              const std::vector<Mat>& completions) const {
        K0 d(pdim.size());
        for (size_t v = 0; v < pdim.size(); ++v) d[v] = completions[v].rows;
        Rep quo;
        for (size_t e = 0; e < quiver_.arrows.size(); ++e) {
            auto [s, t] = quiver_.arrows[e];
            Mat m(d[t], d[s]);
            int kt = rref_bases[t].rows;
            // full-basis matrix at target: rows of [basis; completion], transposed for solving
            Mat fullT(pdim[t], pdim[t]);
            for (int r = 0; r < kt; ++r)
                for (int c = 0; c < pdim[t]; ++c) fullT.at(c, r) = rref_bases[t].at(r, c);
            for (int r = 0; r < d[t]; ++r)
                for (int c = 0; c < pdim[t]; ++c) fullT.at(c, kt + r) = completions[t].at(r, c);
            for (int j = 0; j < d[s]; ++j) {
                std::vector<int> w(pdim[s]);
                for (int c = 0; c < pdim[s]; ++c) w[c] = completions[s].at(j, c);
                auto y = mat_apply(fq_, parent.mats[e], w);
                auto x = solve(fq_, fullT, y);
                if (!x) throw std::logic_error("full basis not invertible");
                for (int r = 0; r < d[t]; ++r) m.at(r, j) = static_cast<uint8_t>((*x)[kt + r]);
            }
            quo.mats.push_back(std::move(m));
        }
        return classify(quo, d);
    }

private:
    Quiver quiver_;
    GroundParams ground_;
    Fq fq_;
    K0 bound_;
    long budget_;

    std::vector<ClassData> classes_;
    std::vector<ClassId> indec_ids_;
    std::map<K0, std::vector<ClassId>> slot_;               // dim -> classes of that dim
    mutable std::map<K0, std::vector<ClassId>> orbit_map_;  // dim -> encoding -> class id
    std::map<std::string, ClassId> names_;
    std::vector<std::string> id_name_;
    mutable std::map<int, SubspaceList> subspace_lists_;

    mutable std::mutex memo_mtx_;
    mutable std::unordered_map<uint64_t, std::pair<int, int>> homext_memo_;
    mutable std::unordered_map<uint64_t, std::vector<std::vector<Mat>>> hombasis_memo_;
    mutable std::unordered_map<uint64_t, ClassId> dsum_memo_;
    mutable std::unordered_map<int, long> aut_memo_;
    mutable std::unordered_map<int, std::vector<SubEntry>> sub_memo_;
    mutable std::unordered_map<uint64_t, std::vector<GammaEntry>> gamma_memo_;

    // ---- construction ----

    long entries_of(const K0& d) const {
        long n = 0;
        for (auto& [s, t] : quiver_.arrows) n += static_cast<long>(d[s]) * d[t];
        return n;
    }

    long encode_rep(const Rep& r, const K0& d) const {
        (void)d;
        long x = 0;
        long mult = 1;
        for (auto& m : r.mats)
            for (uint8_t v : m.e) {
                x += mult * v;
                mult *= fq_.q();
            }
        return x;
    }

    Rep decode_rep(long x, const K0& d) const {
        Rep r;
        for (auto& [s, t] : quiver_.arrows) {
            Mat m(d[t], d[s]);
            for (auto& v : m.e) {
                v = static_cast<uint8_t>(x % fq_.q());
                x /= fq_.q();
            }
            r.mats.push_back(std::move(m));
        }
        return r;
    }

    void build() {
        // dimension vectors below the bound, by total dimension then lex
        std::vector<K0> dims;
        K0 cur(quiver_.num_vertices(), 0);
        enumerate_dims(cur, 0, dims);
        std::stable_sort(dims.begin(), dims.end(), [](const K0& a, const K0& b) {
            int ta = k0_total(a), tb = k0_total(b);
            return ta != tb ? ta < tb : a < b;
        });

        long total_raw = 0;
        for (auto& d : dims) {
            long n = entries_of(d);
            long size = 1;
            for (long i = 0; i < n; ++i) {
                size *= fq_.q();
                if (size > budget_) throw BudgetExceeded("raw enumeration for " + k0_str(d));
            }
            total_raw += size;
            if (total_raw > budget_) throw BudgetExceeded("total raw enumeration count");
        }

        for (auto& d : dims) build_dim_slot(d);

        compute_decompositions();
        assign_default_names();
        assert_fingerprint_injective();
    }

    void enumerate_dims(K0& cur, size_t v, std::vector<K0>& out) const {
        if (v == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= bound_[v]; ++x) {
            cur[v] = x;
            enumerate_dims(cur, v + 1, out);
        }
        cur[v] = 0;
    }

    struct VertexGen {
        int vertex;
        Mat g, ginv;
    };

    std::vector<VertexGen> base_change_generators(const K0& d) const {
        std::vector<VertexGen> gens;
        int prim = fq_.primitive();
        for (size_t v = 0; v < d.size(); ++v) {
            int n = d[v];
            if (n == 0) continue;
            if (fq_.q() > 2) {
                Mat g = Mat::identity(n);
                g.at(0, 0) = static_cast<uint8_t>(prim);
                gens.push_back({static_cast<int>(v), g, mat_inverse(fq_, g)});
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    Mat g = Mat::identity(n);
                    g.at(i, j) = 1;
                    gens.push_back({static_cast<int>(v), g, mat_inverse(fq_, g)});
                }
        }
        return gens;
    }

    Rep act(const VertexGen& gen, const Rep& r, const K0& d) const {
        (void)d;
        Rep out;
        out.mats.reserve(r.mats.size());
        for (size_t e = 0; e < quiver_.arrows.size(); ++e) {
            auto [s, t] = quiver_.arrows[e];
            Mat m = r.mats[e];
            if (t == gen.vertex) m = mat_mul(fq_, gen.g, m);
            if (s == gen.vertex) m = mat_mul(fq_, m, gen.ginv);
            out.mats.push_back(std::move(m));
        }
        return out;
    }

    void build_dim_slot(const K0& d) {
        long n = entries_of(d);
        long size = 1;
        for (long i = 0; i < n; ++i) size *= fq_.q();
        std::vector<ClassId> omap(size, -1);
        auto gens = base_change_generators(d);
        std::vector<long> stack;
        std::vector<ClassId>& slot = slot_[d];
        for (long enc = 0; enc < size; ++enc) {
            if (omap[enc] >= 0) continue;
            ClassId id = static_cast<ClassId>(classes_.size());
            ClassData cd;
            cd.dim = d;
            cd.rep = decode_rep(enc, d);
            classes_.push_back(std::move(cd));
            slot.push_back(id);
            omap[enc] = id;
            stack.assign(1, enc);
            while (!stack.empty()) {
                long cur = stack.back();
                stack.pop_back();
                Rep r = decode_rep(cur, d);
                for (auto& g : gens) {
                    long nxt = encode_rep(act(g, r, d), d);
                    if (omap[nxt] < 0) {
                        omap[nxt] = id;
                        stack.push_back(nxt);
                    }
                }
            }
        }
        orbit_map_[d] = std::move(omap);
    }

    /// Rebuild the orbit partition of one dimension vector against already
    /// loaded classes (cache path); orbits appear in the same deterministic
    /// order as a fresh build, verified against the stored representatives.
    const std::vector<ClassId>& ensure_orbit_map(const K0& d) const {
        {
            std::lock_guard<std::mutex> lk(memo_mtx_);
            auto it = orbit_map_.find(d);
            if (it != orbit_map_.end()) return it->second;
        }
        long n = entries_of(d);
        long size = 1;
        for (long i = 0; i < n; ++i) size *= fq_.q();
        std::vector<ClassId> omap(size, -1);
        auto gens = base_change_generators(d);
        auto slot_it = slot_.find(d);
        if (slot_it == slot_.end() || slot_it->second.empty())
            throw ConfigError("no classes recorded for dimension " + k0_str(d));
        const auto& ids = slot_it->second;
        size_t next = 0;
        std::vector<long> stack;
        for (long enc = 0; enc < size; ++enc) {
            if (omap[enc] >= 0) continue;
            if (next >= ids.size()) throw ConfigError("stale cache: extra orbit at " + k0_str(d));
            ClassId id = ids[next++];
            if (encode_rep(classes_[id].rep, d) != enc)
                throw ConfigError("stale cache: representative mismatch at " + k0_str(d));
            omap[enc] = id;
            stack.assign(1, enc);
            while (!stack.empty()) {
                long cur = stack.back();
                stack.pop_back();
                Rep r = decode_rep(cur, d);
                for (auto& g : gens) {
                    long nxt = encode_rep(act(g, r, d), d);
                    if (omap[nxt] < 0) {
                        omap[nxt] = id;
                        stack.push_back(nxt);
                    }
                }
            }
        }
        if (next != ids.size()) throw ConfigError("stale cache: missing orbit at " + k0_str(d));
        std::lock_guard<std::mutex> lk(memo_mtx_);
        return orbit_map_.emplace(d, std::move(omap)).first->second;
    }

    void compute_decompositions() {
        // classes_ is ordered by total dimension, so summand candidates are
        // already decomposed when a class is processed
        for (ClassId c = 0; c < static_cast<ClassId>(classes_.size()); ++c) {
            ClassData& cd = classes_[c];
            if (k0_is_zero(cd.dim)) {
                cd.is_indec = false; // zero object: empty decomposition
                continue;
            }
            bool split = false;
            for (ClassId x = 1; x < c && !split; ++x) {
                if (!classes_[x].is_indec) continue;
                K0 rest = k0_sub(cd.dim, classes_[x].dim);
                bool ok = !k0_is_zero(rest);
                for (int v : rest)
                    if (v < 0) ok = false;
                if (!ok) continue;
                for (ClassId y : slot_.at(rest)) {
                    if (direct_sum(x, y) == c) {
                        cd.indecs = classes_[y].indecs;
                        cd.indecs.push_back(x);
                        std::sort(cd.indecs.begin(), cd.indecs.end());
                        split = true;
                        break;
                    }
                }
            }
            if (!split) {
                cd.is_indec = true;
                cd.indecs = {c};
                indec_ids_.push_back(c);
            }
        }
    }

    void assign_default_names() {
        id_name_.resize(classes_.size());
        std::map<K0, int> dim_counter;
        for (ClassId c = 0; c < static_cast<ClassId>(classes_.size()); ++c) {
            int k = dim_counter[classes_[c].dim]++;
            id_name_[c] = k0_str(classes_[c].dim) + "/" + std::to_string(k);
        }
        // simples get S<k> (1-based vertex position)
        for (size_t v = 0; v < quiver_.num_vertices(); ++v) {
            K0 e(quiver_.num_vertices(), 0);
            e[v] = 1;
            auto it = slot_.find(e);
            if (it != slot_.end() && it->second.size() == 1)
                id_name_[it->second[0]] = "S" + std::to_string(v + 1);
        }
        id_name_[0] = "0";
        for (ClassId c = 0; c < static_cast<ClassId>(classes_.size()); ++c) names_[id_name_[c]] = c;
    }

    void assert_fingerprint_injective() const {
        std::map<std::vector<int>, ClassId> seen;
        for (ClassId c = 0; c < static_cast<ClassId>(classes_.size()); ++c) {
            auto fp = fingerprint(c);
            auto [it, fresh] = seen.emplace(fp, c);
            if (!fresh)
                throw ConfigError("hom-count fingerprint not injective on classes " +
                                  std::to_string(it->second) + " and " + std::to_string(c));
        }
    }

    // ---- Hom machinery ----

    /// Matrix of the intertwiner conditions f_t A_e = B_e f_s over all arrows;
    /// kernel elements are morphisms A -> B, the cokernel computes Ext^1(A, B).
    Mat hom_system(const Rep& ra, const K0& da, const Rep& rb, const K0& db) const {
        size_t nv = quiver_.num_vertices();
        std::vector<int> col_base(nv + 1, 0);
        for (size_t v = 0; v < nv; ++v) col_base[v + 1] = col_base[v] + db[v] * da[v];
        int rows = 0;
        for (auto& [s, t] : quiver_.arrows) rows += db[t] * da[s];
        Mat sys(rows, col_base[nv]);
        int row0 = 0;
        for (size_t e = 0; e < quiver_.arrows.size(); ++e) {
            auto [s, t] = quiver_.arrows[e];
            const Mat& Ae = ra.mats[e];
            const Mat& Be = rb.mats[e];
            // row (r, c) of block e: sum_k f_t[r][k] Ae[k][c] - sum_k Be[r][k] f_s[k][c] = 0
            for (int r = 0; r < db[t]; ++r)
                for (int c = 0; c < da[s]; ++c) {
                    int row = row0 + r * da[s] + c;
                    for (int k = 0; k < da[t]; ++k) {
                        int col = col_base[t] + r * da[t] + k;
                        sys.at(row, col) = static_cast<uint8_t>(fq_.add(sys.at(row, col), Ae.at(k, c)));
                    }
                    for (int k = 0; k < db[s]; ++k) {
                        int col = col_base[s] + k * da[s] + c;
                        sys.at(row, col) = static_cast<uint8_t>(fq_.sub(sys.at(row, col), Be.at(r, k)));
                    }
                }
            row0 += db[t] * da[s];
        }
        return sys;
    }

    std::vector<Mat> unflatten_maps(const std::vector<int>& v, const K0& da, const K0& db) const {
        std::vector<Mat> f;
        int pos = 0;
        for (size_t vx = 0; vx < quiver_.num_vertices(); ++vx) {
            Mat m(db[vx], da[vx]);
            for (int r = 0; r < db[vx]; ++r)
                for (int c = 0; c < da[vx]; ++c) m.at(r, c) = static_cast<uint8_t>(v[pos++]);
            f.push_back(std::move(m));
        }
        return f;
    }

    const SubspaceList& subspaces(int n) const {
        std::lock_guard<std::mutex> lk(memo_mtx_);
        auto it = subspace_lists_.find(n);
        if (it != subspace_lists_.end()) return it->second;
        return subspace_lists_.emplace(n, SubspaceList(fq_, n)).first->second;
    }

    std::vector<SubEntry> scan_subobjects(ClassId c) const {
        const ClassData& cd = classes_[c];
        size_t nv = quiver_.num_vertices();
        std::vector<const SubspaceList*> lists(nv);
        for (size_t v = 0; v < nv; ++v) lists[v] = &subspaces(cd.dim[v]);
        std::map<std::pair<ClassId, ClassId>, long> agg;
        std::vector<size_t> pick(nv, 0);
        while (true) {
            // arrow stability
            bool stable = true;
            for (size_t e = 0; e < quiver_.arrows.size() && stable; ++e) {
                auto [s, t] = quiver_.arrows[e];
                const auto& Ws = (*lists[s])[pick[s]];
                const auto& Wt = (*lists[t])[pick[t]];
                for (int r = 0; r < Ws.basis.rows && stable; ++r) {
                    std::vector<int> w(cd.dim[s]);
                    for (int col = 0; col < cd.dim[s]; ++col) w[col] = Ws.basis.at(r, col);
                    auto y = mat_apply(fq_, cd.rep.mats[e], w);
                    if (!Wt.member[vec_encode(fq_.q(), y)]) stable = false;
                }
            }
            if (stable) {
                std::vector<Mat> bases(nv), comps(nv);
                for (size_t v = 0; v < nv; ++v) {
                    bases[v] = (*lists[v])[pick[v]].basis;
                    comps[v] = (*lists[v])[pick[v]].completion;
                }
                ClassId sub = classify_subrep(cd.rep, cd.dim, bases);
                ClassId quo = classify_quotient(cd.rep, cd.dim, bases, comps);
                ++agg[{sub, quo}];
            }
            // next tuple
            size_t v = 0;
            while (v < nv && ++pick[v] == lists[v]->size()) pick[v++] = 0;
            if (v == nv) break;
        }
        std::vector<SubEntry> out;
        out.reserve(agg.size());
        for (auto& [k, n] : agg) out.push_back({k.first, k.second, n});
        return out;
    }

    std::vector<GammaEntry> scan_gamma(ClassId A, ClassId B) const {
        // enumerate phi in Hom(B, A); gamma weights by aut ratios
        const auto& basis = hom_basis(B, A);
        const ClassData& ca = classes_[A];
        const ClassData& cb = classes_[B];
        size_t nv = quiver_.num_vertices();
        long combos = 1;
        for (size_t i = 0; i < basis.size(); ++i) combos *= fq_.q();
        std::map<std::pair<ClassId, ClassId>, long> counts;
        std::vector<Mat> phi(nv);
        for (long x = 0; x < combos; ++x) {
            for (size_t v = 0; v < nv; ++v) phi[v] = Mat(ca.dim[v], cb.dim[v]);
            long t = x;
            for (auto& bvec : basis) {
                int cf = static_cast<int>(t % fq_.q());
                t /= fq_.q();
                if (cf)
                    for (size_t v = 0; v < nv; ++v)
                        for (size_t k = 0; k < bvec[v].e.size(); ++k)
                            phi[v].e[k] = static_cast<uint8_t>(fq_.add(phi[v].e[k], fq_.mul(cf, bvec[v].e[k])));
            }
            // kernel of phi as a subrepresentation of B
            std::vector<Mat> ker_bases(nv);
            for (size_t v = 0; v < nv; ++v) {
                auto kb = kernel_basis(fq_, phi[v]);
                Mat m(static_cast<int>(kb.size()), cb.dim[v]);
                for (size_t r = 0; r < kb.size(); ++r)
                    for (int c = 0; c < cb.dim[v]; ++c) m.at(static_cast<int>(r), c) = static_cast<uint8_t>(kb[r][c]);
                ker_bases[v] = std::move(m);
            }
            ClassId M = classify_subrep(cb.rep, cb.dim, ker_bases);
            // image of phi as a subrepresentation of A: row space of phi^T
            std::vector<Mat> im_bases(nv), im_comps(nv);
            for (size_t v = 0; v < nv; ++v) {
                Mat rows(cb.dim[v], ca.dim[v]);
                for (int r = 0; r < cb.dim[v]; ++r)
                    for (int c = 0; c < ca.dim[v]; ++c) rows.at(r, c) = phi[v].at(c, r);
                auto [red, comp] = rref_and_completion(fq_, rows);
                im_bases[v] = std::move(red);
                im_comps[v] = std::move(comp);
            }
            ClassId N = classify_quotient(ca.rep, ca.dim, im_bases, im_comps);
            ++counts[{M, N}];
        }
        std::vector<GammaEntry> out;
        for (auto& [k, n] : counts) {
            Rat v(n);
            v *= Rat(aut_count(k.first)) * Rat(aut_count(k.second));
            v /= Rat(aut_count(A)) * Rat(aut_count(B));
            out.push_back({k.first, k.second, v});
        }
        return out;
    }
};

} // namespace hallforge

#endif
