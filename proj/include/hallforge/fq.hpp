#ifndef HALLFORGE_FQ_HPP
#define HALLFORGE_FQ_HPP

#include <cstdint>
#include <vector>

#include "hallforge/errors.hpp"
#include "hallforge/coeff.hpp"

namespace hallforge {

/// Arithmetic in F_q by precomputed tables. Elements are indices 0..q-1;
/// for q = p^k the index encodes a polynomial over F_p in base p, and
/// multiplication reduces modulo a fixed Conway polynomial.
class Fq {
    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<uint8_t> add_, mul_, neg_, inv_;

    int idx(int x, int y) const { return x * q_ + y; }

    // Conway polynomials for the supported non-prime q, as coefficient
    // lists c_0..c_k of x^k + c_{k-1} x^{k-1} + ... + c_0 (monic implied).
    static std::vector<int> conway(long q) {
        switch (q) {
            case 4:  return {1, 1};        // x^2 + x + 1 over F_2
            case 8:  return {1, 1, 0};     // x^3 + x + 1 over F_2
            case 16: return {1, 1, 0, 0};  // x^4 + x + 1 over F_2
            case 9:  return {2, 2};        // x^2 + 2x + 2 over F_3
            case 27: return {1, 2, 0};     // x^3 + 2x + 1 over F_3
            case 25: return {2, 4};        // x^2 + 4x + 2 over F_5
            case 49: return {3, 6};        // x^2 + 6x + 3 over F_7
            default:
                throw ConfigError("no field construction table for q = " + std::to_string(q));
        }
    }

public:
    Fq() = default;

    explicit Fq(long q) {
        long p; int k;
        if (!GroundParams::is_prime_power(q, &p, &k))
            throw ConfigError("q must be a prime power");
        if (q > 64) throw ConfigError("q too large for table-based field arithmetic");
        q_ = static_cast<int>(q);
        p_ = static_cast<int>(p);
        k_ = k;

        auto to_poly = [&](int x) {
            std::vector<int> c(k_);
            for (int i = 0; i < k_; ++i) { c[i] = x % p_; x /= p_; }
            return c;
        };
        auto from_poly = [&](const std::vector<int>& c) {
            int x = 0;
            for (int i = k_ - 1; i >= 0; --i) x = x * p_ + (c[i] % p_ + p_) % p_;
            return x;
        };

        std::vector<int> modpoly = (k_ > 1) ? conway(q) : std::vector<int>{};

        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);

        for (int x = 0; x < q_; ++x) {
            auto cx = to_poly(x);
            std::vector<int> nx(k_);
            for (int i = 0; i < k_; ++i) nx[i] = (p_ - cx[i]) % p_;
            neg_[x] = static_cast<uint8_t>(from_poly(nx));
            for (int y = 0; y < q_; ++y) {
                auto cy = to_poly(y);
                std::vector<int> s(k_);
                for (int i = 0; i < k_; ++i) s[i] = (cx[i] + cy[i]) % p_;
                add_[idx(x, y)] = static_cast<uint8_t>(from_poly(s));
                // multiply polynomials, reduce by the monic modulus
                std::vector<int> prod(2 * k_ - 1, 0);
                for (int i = 0; i < k_; ++i)
                    for (int j = 0; j < k_; ++j)
                        prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % p_;
                for (int d = 2 * k_ - 2; d >= k_; --d) {
                    int c = prod[d];
                    if (c == 0) continue;
                    prod[d] = 0;
                    for (int i = 0; i < k_; ++i)
                        prod[d - k_ + i] = ((prod[d - k_ + i] - c * modpoly[i]) % p_ + p_ * p_) % p_;
                }
                prod.resize(k_);
                mul_[idx(x, y)] = static_cast<uint8_t>(from_poly(prod));
            }
        }
        for (int x = 1; x < q_; ++x)
            for (int y = 1; y < q_; ++y)
                if (mul_[idx(x, y)] == 1) { inv_[x] = static_cast<uint8_t>(y); break; }
        for (int x = 1; x < q_; ++x)
            if (inv_[x] == 0) throw ConfigError("field construction failed: non-invertible nonzero element");
    }

    int q() const { return q_; }
    int p() const { return p_; }
    int add(int x, int y) const { return add_[idx(x, y)]; }
    int sub(int x, int y) const { return add_[idx(x, neg_[y])]; }
    int mul(int x, int y) const { return mul_[idx(x, y)]; }
    int neg(int x) const { return neg_[x]; }
    int inv(int x) const {
        if (x == 0) throw DivisionByZero();
        return inv_[x];
    }
    /// A fixed multiplicative generator (smallest index that generates F_q^*).
    int primitive() const {
        for (int g = 1; g < q_; ++g) {
            int x = g, ord = 1;
            while (x != 1) { x = mul(x, g); ++ord; }
            if (ord == q_ - 1) return g;
        }
        return 1; // q = 2
    }
};

} // namespace hallforge

#endif
