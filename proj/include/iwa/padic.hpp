#ifndef IWA_PADIC_HPP
#define IWA_PADIC_HPP

#include <cstdint>
#include <string>

#include "iwa/errors.hpp"

namespace iwa {

namespace detail {

inline bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// p^e, rejecting anything close enough to 2^63 to endanger __int128-free sums.
inline std::uint64_t checked_pow(std::uint64_t p, std::uint32_t e) {
    constexpr std::uint64_t limit = std::uint64_t(1) << 62;
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (m > limit / p)
            throw std::overflow_error("checked_pow: modulus exceeds 2^62");
        m *= p;
    }
    return m;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Inverse of a mod m by extended Euclid; requires gcd(a, m) = 1.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r; r = t;
        t = old_s - q * s;
        old_s = s; s = t;
    }
    if (old_r != 1)
        throw non_unit("inv_mod: argument shares a factor with the modulus");
    __int128 v = old_s % static_cast<__int128>(m);
    if (v < 0) v += m;
    return static_cast<std::uint64_t>(v);
}

} // namespace detail

/**
 * An element of Z/p^N for an odd prime p, used as the scalar type everywhere.
 * The stored residue is the canonical representative in [0, p^N).  The
 * valuation of the zero residue is N by convention, so an element is a unit
 * exactly when its valuation is 0.
 */
class PAdic {
  public:
    PAdic(std::uint64_t p, std::uint32_t prec, std::int64_t value)
        : p_(p), prec_(prec)
    {
        if (!detail::is_odd_prime(p))
            throw std::invalid_argument("PAdic: p must be an odd prime");
        if (prec == 0)
            throw std::invalid_argument("PAdic: precision must be at least 1");
        mod_ = detail::checked_pow(p, prec);
        std::int64_t v = value % static_cast<std::int64_t>(mod_);
        if (v < 0) v += static_cast<std::int64_t>(mod_);
        value_ = static_cast<std::uint64_t>(v);
    }

    static PAdic zero(std::uint64_t p, std::uint32_t prec) { return PAdic(p, prec, 0); }
    static PAdic one(std::uint64_t p, std::uint32_t prec) { return PAdic(p, prec, 1); }

    std::uint64_t prime() const { return p_; }
    std::uint32_t precision() const { return prec_; }
    std::uint64_t modulus() const { return mod_; }
    std::uint64_t residue() const { return value_; }

    bool is_zero() const { return value_ == 0; }
    bool is_unit() const { return value_ % p_ != 0; }

    // Largest v <= N with p^v dividing the residue; N for zero.
    std::uint32_t valuation() const {
        if (value_ == 0) return prec_;
        std::uint32_t v = 0;
        std::uint64_t x = value_;
        while (x % p_ == 0) { x /= p_; ++v; }
        return v;
    }

    // Residue divided by p^valuation(); 0 stays 0.
    std::uint64_t unit_part() const {
        std::uint64_t x = value_;
        if (x == 0) return 0;
        while (x % p_ == 0) x /= p_;
        return x;
    }

    // Representative of smallest absolute value, in (-p^N/2, p^N/2).
    std::int64_t balanced() const {
        if (value_ > mod_ / 2)
            return static_cast<std::int64_t>(value_) - static_cast<std::int64_t>(mod_);
        return static_cast<std::int64_t>(value_);
    }

    PAdic operator-() const { return with_value(value_ == 0 ? 0 : mod_ - value_); }

    PAdic operator+(const PAdic& o) const {
        require_same(o);
        return with_value(detail::add_mod(value_, o.value_, mod_));
    }

    PAdic operator-(const PAdic& o) const {
        require_same(o);
        return with_value(detail::sub_mod(value_, o.value_, mod_));
    }

    PAdic operator*(const PAdic& o) const {
        require_same(o);
        return with_value(detail::mul_mod(value_, o.value_, mod_));
    }

    bool operator==(const PAdic& o) const {
        return p_ == o.p_ && prec_ == o.prec_ && value_ == o.value_;
    }
    bool operator!=(const PAdic& o) const { return !(*this == o); }

    PAdic inv() const {
        if (!is_unit())
            throw non_unit("PAdic::inv: valuation is positive");
        return with_value(detail::inv_mod(value_, mod_));
    }

    PAdic pow(std::uint64_t e) const { return with_value(detail::pow_mod(value_, e, mod_)); }

    // Same canonical residue reinterpreted at a different precision.  Dropping
    // precision reduces mod p^N'; raising it takes the canonical lift.
    PAdic at_precision(std::uint32_t prec) const {
        return PAdic(p_, prec, static_cast<std::int64_t>(
            prec >= prec_ ? value_ : value_ % detail::checked_pow(p_, prec)));
    }

  private:
    PAdic with_value(std::uint64_t v) const {
        PAdic r = *this;
        r.value_ = v;
        return r;
    }

    void require_same(const PAdic& o) const {
        if (p_ != o.p_ || prec_ != o.prec_)
            throw spec_mismatch("PAdic: operands live in different rings");
    }

    std::uint64_t p_;
    std::uint32_t prec_;
    std::uint64_t mod_ = 0;
    std::uint64_t value_ = 0;
};

/** +1 or -1 according to whether x is 1 or -1 mod p^N; anything else is rejected. */
inline int unit_sign(const PAdic& x) {
    if (x.residue() == 1) return +1;
    if (x.residue() + 1 == x.modulus()) return -1;
    throw not_a_sign("unit_sign: residue is neither 1 nor -1");
}

} // namespace iwa

#endif
