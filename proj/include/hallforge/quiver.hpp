#ifndef HALLFORGE_QUIVER_HPP
#define HALLFORGE_QUIVER_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hallforge/errors.hpp"

namespace hallforge {

/// Class in the Grothendieck group: an integer vector indexed by vertices.
using K0 = std::vector<int>;

inline K0 k0_zero(size_t n) { return K0(n, 0); }
inline K0 k0_add(const K0& a, const K0& b) {
    K0 r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline K0 k0_sub(const K0& a, const K0& b) {
    K0 r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline K0 k0_neg(const K0& a) {
    K0 r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline K0 k0_scale(int c, const K0& a) {
    K0 r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
inline bool k0_is_zero(const K0& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}
inline bool k0_leq(const K0& a, const K0& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline int k0_total(const K0& a) {
    int t = 0;
    for (int x : a) t += x;
    return t;
}
inline std::string k0_str(const K0& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

/// Finite acyclic quiver. Vertices carry labels; arrows are index pairs.
struct Quiver {
    std::vector<std::string> vertex_labels;
    std::vector<std::pair<int, int>> arrows; // (source, target), parallel arrows allowed

    size_t num_vertices() const { return vertex_labels.size(); }

    /// Throws InvalidQuiver unless the arrow relation is acyclic.
    void validate() const {
        size_t n = num_vertices();
        for (auto& [s, t] : arrows) {
            if (s < 0 || t < 0 || static_cast<size_t>(s) >= n || static_cast<size_t>(t) >= n)
                throw InvalidQuiver("arrow endpoint out of range");
            if (s == t) throw InvalidQuiver("loop arrow");
        }
        // Kahn's algorithm
        std::vector<int> indeg(n, 0);
        for (auto& [s, t] : arrows) { (void)s; ++indeg[t]; }
        std::vector<int> queue;
        for (size_t i = 0; i < n; ++i)
            if (indeg[i] == 0) queue.push_back(static_cast<int>(i));
        size_t seen = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++seen;
            for (auto& [s, t] : arrows)
                if (s == v && --indeg[t] == 0) queue.push_back(t);
        }
        if (seen != n) throw InvalidQuiver("directed cycle");
    }

    Quiver reversed() const {
        Quiver r;
        r.vertex_labels = vertex_labels;
        for (auto& [s, t] : arrows) r.arrows.emplace_back(t, s);
        return r;
    }

    /// Euler-form exponent <alpha, beta> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j.
    int euler_exp(const K0& alpha, const K0& beta) const {
        int e = 0;
        for (size_t i = 0; i < num_vertices(); ++i) e += alpha[i] * beta[i];
        for (auto& [s, t] : arrows) e -= alpha[s] * beta[t];
        return e;
    }

    int sym_exp(const K0& alpha, const K0& beta) const {
        return euler_exp(alpha, beta) + euler_exp(beta, alpha);
    }

    std::string canonical_string() const {
        std::string s = "V[";
        for (auto& l : vertex_labels) s += l + ";";
        s += "]A[";
        for (auto& [a, b] : arrows) s += std::to_string(a) + ">" + std::to_string(b) + ";";
        return s + "]";
    }
};

} // namespace hallforge

#endif
