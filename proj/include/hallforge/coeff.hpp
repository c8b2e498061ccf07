#ifndef HALLFORGE_COEFF_HPP
#define HALLFORGE_COEFF_HPP

#include <gmpxx.h>
#include <cassert>
#include <string>

#include "hallforge/errors.hpp"

namespace hallforge {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// n/d as a canonical rational (mpq_class(n, d) alone does not canonicalize).
inline Rat ratq(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

/// Ground field parameters: a fixed prime power q, with v = sqrt(q).
struct GroundParams {
    long q = 0;
    bool is_square = false;
    long sqrt_q = 0; // set iff is_square

    static bool is_prime_power(long n, long* prime = nullptr, int* exp = nullptr) {
        if (n < 2) return false;
        for (long p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                long m = n;
                int e = 0;
                while (m % p == 0) { m /= p; ++e; }
                if (m != 1) return false;
                if (prime) *prime = p;
                if (exp) *exp = e;
                return true;
            }
        }
        if (prime) *prime = n;
        if (exp) *exp = 1;
        return true;
    }

    static GroundParams make(long q) {
        if (!is_prime_power(q))
            throw ConfigError("q = " + std::to_string(q) + " is not a prime power >= 2");
        GroundParams g;
        g.q = q;
        long r = 0;
        while (r * r < q) ++r;
        if (r * r == q) { g.is_square = true; g.sqrt_q = r; }
        return g;
    }

    bool operator==(const GroundParams& o) const { return q == o.q; }
};

/// Element a + b*v of Q(v), v = sqrt(q). When q is a perfect square the
/// surd part is folded into the rational part, so b = 0 always holds there.
class Coeff {
    Rat a_, b_;
    GroundParams g_;

    void canonicalize() {
        if (g_.is_square && b_ != 0) {
            a_ += b_ * g_.sqrt_q;
            b_ = 0;
        }
    }

public:
    Coeff() : a_(0), b_(0) {}
    Coeff(const GroundParams& g, Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)), g_(g) {
        canonicalize();
    }
    static Coeff zero(const GroundParams& g) { return Coeff(g, 0, 0); }
    static Coeff one(const GroundParams& g) { return Coeff(g, 1, 0); }
    static Coeff of(const GroundParams& g, Rat a) { return Coeff(g, std::move(a), 0); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const GroundParams& ground() const { return g_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    /// True when the value lies in Q (no surd part).
    bool is_rational() const { return b_ == 0; }

    friend Coeff operator+(const Coeff& x, const Coeff& y) {
        assert(x.g_.q == y.g_.q || x.is_zero() || y.is_zero());
        const GroundParams& g = x.is_zero() ? y.g_ : x.g_;
        return Coeff(g, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend Coeff operator-(const Coeff& x, const Coeff& y) {
        assert(x.g_.q == y.g_.q || x.is_zero() || y.is_zero());
        const GroundParams& g = x.is_zero() ? y.g_ : x.g_;
        return Coeff(g, x.a_ - y.a_, x.b_ - y.b_);
    }
    Coeff operator-() const { return Coeff(g_, -a_, -b_); }
    friend Coeff operator*(const Coeff& x, const Coeff& y) {
        assert(x.g_.q == y.g_.q || x.is_zero() || y.is_zero());
        const GroundParams& g = x.is_zero() ? y.g_ : x.g_;
        // (a1 + b1 v)(a2 + b2 v) = a1 a2 + b1 b2 q + (a1 b2 + a2 b1) v
        return Coeff(g, x.a_ * y.a_ + x.b_ * y.b_ * g.q, x.a_ * y.b_ + y.a_ * x.b_);
    }
    Coeff& operator+=(const Coeff& y) { *this = *this + y; return *this; }
    Coeff& operator-=(const Coeff& y) { *this = *this - y; return *this; }
    Coeff& operator*=(const Coeff& y) { *this = *this * y; return *this; }

    friend bool operator==(const Coeff& x, const Coeff& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Coeff& x, const Coeff& y) { return !(x == y); }

    Coeff inv() const {
        if (is_zero()) throw DivisionByZero();
        if (b_ == 0) return Coeff(g_, 1 / a_, 0);
        // 1/(a + b v) = (a - b v)/(a^2 - b^2 q); the norm vanishes only at 0
        // because v is irrational here.
        Rat norm = a_ * a_ - b_ * b_ * g_.q;
        assert(norm != 0);
        return Coeff(g_, a_ / norm, -b_ / norm);
    }

    Coeff pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Coeff r = Coeff::one(g_), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// Renders as "a + b*v" with trivial parts omitted, e.g. "3/2", "v", "1 - 1/2*v".
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (a_ != 0) s = rat_str(a_);
        if (b_ != 0) {
            if (!s.empty()) s += (b_ > 0 ? " + " : " - ");
            else if (b_ < 0) s += "-";
            Rat ab = abs(b_);
            if (ab != 1) s += rat_str(ab) + "*";
            s += "v";
        }
        return s;
    }
};

/// v^k as an exact element of Q(v): (q^{k/2}, 0) for even k, (0, q^{(k-1)/2}) for odd k.
inline Coeff vpow(const GroundParams& g, long k) {
    Rat qr(g.q);
    auto qpow = [&](long e) {
        Rat r(1);
        for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= qr;
        if (e < 0) r = 1 / r;
        return r;
    };
    if (k % 2 == 0) return Coeff(g, qpow(k / 2), 0);
    // odd k: v^k = q^{(k-1)/2} * v, and k-1 is even so the division is exact
    return Coeff(g, 0, qpow((k - 1) / 2));
}

} // namespace hallforge

#endif
