#ifndef HALLFORGE_LINALG_HPP
#define HALLFORGE_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hallforge/fq.hpp"

namespace hallforge {

/// Dense matrix over F_q, row-major, entries as field indices.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<uint8_t> e;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

inline Mat mat_mul(const Fq& F, const Mat& a, const Mat& b) {
    Mat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = static_cast<uint8_t>(F.add(r.at(i, j), F.mul(aik, b.at(k, j))));
        }
    return r;
}

inline std::vector<int> mat_apply(const Fq& F, const Mat& a, const std::vector<int>& v) {
    std::vector<int> r(a.rows, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j)) r[i] = F.add(r[i], F.mul(a.at(i, j), v[j]));
    return r;
}

/// In-place reduced row echelon form; returns the pivot column list.
inline std::vector<int> rref(const Fq& F, Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col)) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        int piv_inv = F.inv(m.at(row, col));
        for (int c = 0; c < m.cols; ++c) m.at(row, c) = static_cast<uint8_t>(F.mul(m.at(row, c), piv_inv));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || !m.at(r, col)) continue;
            int f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = static_cast<uint8_t>(F.sub(m.at(r, c), F.mul(f, m.at(row, c))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int mat_rank(const Fq& F, Mat m) { return static_cast<int>(rref(F, m).size()); }

/// Basis of the right kernel {x : m x = 0}, one column vector per basis element.
inline std::vector<std::vector<int>> kernel_basis(const Fq& F, Mat m) {
    auto pivots = rref(F, m);
    std::vector<bool> is_pivot(m.cols, false);
    std::vector<int> pivot_row(m.cols, -1);
    for (size_t i = 0; i < pivots.size(); ++i) { is_pivot[pivots[i]] = true; pivot_row[pivots[i]] = static_cast<int>(i); }
    std::vector<std::vector<int>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<int> v(m.cols, 0);
        v[free_col] = 1;
        for (int c = 0; c < m.cols; ++c)
            if (is_pivot[c]) v[c] = F.neg(m.at(pivot_row[c], free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of m x = b, or nullopt when inconsistent.
inline std::optional<std::vector<int>> solve(const Fq& F, Mat m, std::vector<int> b) {
    Mat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = static_cast<uint8_t>(b[r]);
    }
    auto pivots = rref(F, aug);
    for (int p : pivots)
        if (p == m.cols) return std::nullopt;
    std::vector<int> x(m.cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
    return x;
}

inline bool mat_invertible(const Fq& F, const Mat& m) {
    return m.rows == m.cols && mat_rank(F, m) == m.rows;
}

inline Mat mat_inverse(const Fq& F, const Mat& m) {
    Mat aug(m.rows, 2 * m.cols);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols + r) = 1;
    }
    rref(F, aug);
    Mat inv(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) inv.at(r, c) = aug.at(r, m.cols + c);
    return inv;
}

/// Reduce rows to an RREF basis of their span and complete it to a basis of
/// the ambient space by unit vectors at the non-pivot coordinates.
inline std::pair<Mat, Mat> rref_and_completion(const Fq& F, Mat rows) {
    auto piv = rref(F, rows);
    Mat red(static_cast<int>(piv.size()), rows.cols);
    for (size_t r = 0; r < piv.size(); ++r)
        for (int c = 0; c < rows.cols; ++c) red.at(static_cast<int>(r), c) = rows.at(static_cast<int>(r), c);
    std::vector<bool> used(rows.cols, false);
    for (int p : piv) used[p] = true;
    Mat comp(rows.cols - static_cast<int>(piv.size()), rows.cols);
    int rr = 0;
    for (int c = 0; c < rows.cols; ++c)
        if (!used[c]) comp.at(rr++, c) = 1;
    return {red, comp};
}

inline int vec_encode(int q, const std::vector<int>& v) {
    int x = 0;
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) x = x * q + v[i];
    return x;
}

inline std::vector<int> vec_decode(int q, int n, int x) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) { v[i] = x % q; x /= q; }
    return v;
}

/// All subspaces of F_q^n. A subspace is stored by its RREF row basis,
/// a completion of that basis to a basis of the ambient space, and a
/// membership bitmap over encoded vectors.
class SubspaceList {
public:
    struct Sub {
        Mat basis;               // k x n, rows form an RREF basis
        Mat completion;          // (n-k) x n, rows completing to a full basis
        std::vector<uint8_t> member; // indexed by vec_encode
        int dim() const { return basis.rows; }
    };

    SubspaceList() = default;

    SubspaceList(const Fq& F, int n) : n_(n) {
        int q = F.q();
        // enumerate RREF matrices by pivot-column subsets
        for (int k = 0; k <= n; ++k) {
            std::vector<int> piv(k);
            enumerate_pivots(F, q, k, 0, 0, piv);
        }
        // completion rows: unit vectors at non-pivot coordinates
        for (auto& s : subs_) {
            std::vector<bool> used(n_, false);
            for (int r = 0; r < s.basis.rows; ++r)
                for (int c = 0; c < n_; ++c)
                    if (s.basis.at(r, c)) { used[c] = true; break; }
            Mat comp(n_ - s.basis.rows, n_);
            int rr = 0;
            for (int c = 0; c < n_; ++c)
                if (!used[c]) comp.at(rr++, c) = 1;
            s.completion = comp;
            // membership bitmap: span all combinations of basis rows
            int total = 1;
            for (int i = 0; i < n_; ++i) total *= q;
            s.member.assign(total, 0);
            int combos = 1;
            for (int i = 0; i < s.basis.rows; ++i) combos *= q;
            for (int c = 0; c < combos; ++c) {
                auto coefs = vec_decode(q, s.basis.rows, c);
                std::vector<int> v(n_, 0);
                for (int r = 0; r < s.basis.rows; ++r)
                    for (int j = 0; j < n_; ++j)
                        v[j] = F.add(v[j], F.mul(coefs[r], s.basis.at(r, j)));
                s.member[vec_encode(q, v)] = 1;
            }
        }
    }

    int ambient_dim() const { return n_; }
    size_t size() const { return subs_.size(); }
    const Sub& operator[](size_t i) const { return subs_[i]; }

private:
    int n_ = 0;
    std::vector<Sub> subs_;

    void enumerate_pivots(const Fq& F, int q, int k, int idx, int start, std::vector<int>& piv) {
        if (idx == k) {
            emit_rrefs(F, q, piv);
            return;
        }
        for (int c = start; c <= n_ - (k - idx); ++c) {
            piv[idx] = c;
            enumerate_pivots(F, q, k, idx + 1, c + 1, piv);
        }
    }

    void emit_rrefs(const Fq& F, int q, const std::vector<int>& piv) {
        int k = static_cast<int>(piv.size());
        std::vector<bool> is_piv(n_, false);
        for (int p : piv) is_piv[p] = true;
        // free entries: row i, columns c > piv[i] with c not a pivot column
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int c = piv[i] + 1; c < n_; ++c)
                if (!is_piv[c]) free_pos.emplace_back(i, c);
        long combos = 1;
        for (size_t i = 0; i < free_pos.size(); ++i) combos *= q;
        for (long x = 0; x < combos; ++x) {
            Mat m(k, n_);
            for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
            long t = x;
            for (auto& [r, c] : free_pos) {
                m.at(r, c) = static_cast<uint8_t>(t % q);
                t /= q;
            }
            Sub s;
            s.basis = std::move(m);
            subs_.push_back(std::move(s));
        }
        (void)F;
    }
};

} // namespace hallforge

#endif
