#ifndef IWA_ARITH_CURVE37A_HPP
#define IWA_ARITH_CURVE37A_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "iwa/arith/tau.hpp"

namespace iwa {

/** Point count of the rank-one curve 37a: y^2 + y = x^3 - x over F_p. */
struct CurveCount {
    std::uint64_t p;
    std::uint64_t points; // projective count, including the point at infinity
    std::int64_t a_p;     // p + 1 - points
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

/**
 * Counts points by completing the square: for odd p the substitution
 * z = 2y + 1 turns y^2 + y = t into z^2 = 4t + 1, so each x contributes
 * 1 + chi(4t+1) points with chi the quadratic character (chi(0) = 0).
 * p = 2 is enumerated directly.  The Weil bound a_p^2 <= 4p is asserted.
 */
inline CurveCount count_points_37a(std::uint64_t p) {
    if (!detail::is_prime_u64(p))
        throw std::invalid_argument("count_points_37a: p must be prime");
    if (p > 100000)
        throw std::invalid_argument("count_points_37a: p too large for direct enumeration");

    std::uint64_t affine = 0;
    if (p == 2) {
        for (std::uint64_t x = 0; x < 2; ++x)
            for (std::uint64_t y = 0; y < 2; ++y)
                if ((y * y + y) % 2 == ((x * x * x + 3 * x) % 2)) ++affine;
    } else {
        std::vector<int> chi(p, -1);
        chi[0] = 0;
        for (std::uint64_t z = 1; z <= p / 2; ++z) chi[(z * z) % p] = 1;
        for (std::uint64_t x = 0; x < p; ++x) {
            const std::uint64_t t = (x % p) * ((x * x + p - 1) % p) % p; // x^3 - x
            affine += static_cast<std::uint64_t>(1 + chi[(4 * t + 1) % p]);
        }
    }
    const std::uint64_t points = affine + 1;
    const std::int64_t a_p = static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(points);
    if (a_p * a_p > static_cast<std::int64_t>(4 * p))
        throw std::logic_error("count_points_37a: Weil bound violated");
    return CurveCount{p, points, a_p};
}

/**
 * Independent recount with the opposite enumeration order (all (x, y)
 * pairs, y outermost) and no character table; used as a consistency oracle.
 */
inline CurveCount count_points_37a_exhaustive(std::uint64_t p) {
    if (!detail::is_prime_u64(p))
        throw std::invalid_argument("count_points_37a_exhaustive: p must be prime");
    std::uint64_t affine = 0;
    for (std::uint64_t y = 0; y < p; ++y) {
        const std::uint64_t lhs = (y * y + y) % p;
        for (std::uint64_t x = 0; x < p; ++x) {
            const std::uint64_t rhs = ((x * x % p) * x % p + p - x % p) % p;
            if (lhs == rhs) ++affine;
        }
    }
    const std::uint64_t points = affine + 1;
    return CurveCount{p, points,
                      static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(points)};
}

/**
 * Per-prime admissibility data for 37a.  A prime is admissible when p > 3,
 * p != 37 (the conductor), and a_p is outside {0, +1, -1}: a_p != 0 is
 * ordinarity, a_p != 1 removes the split/rational obstruction, and
 * a_p != -1 additionally covers the inert reading (a_p^2 != 1).
 */
struct PrimeFlags37a {
    std::uint64_t p;
    std::int64_t a_p;
    bool ordinary;   // a_p != 0 (for p >= 5 this is a_p not divisible by p)
    bool zero_split; // a_p != 1
    bool zero_inert; // a_p^2 != 1
    bool admissible;
};

/** Flags for every prime up to the bound (admissible or not). */
inline std::vector<PrimeFlags37a> prime_flags_37a(std::uint64_t bound) {
    std::vector<PrimeFlags37a> out;
    for (std::uint64_t p : primes_up_to(bound)) {
        const CurveCount c = count_points_37a(p);
        const std::int64_t ps = static_cast<std::int64_t>(p);
        PrimeFlags37a f{p, c.a_p, (c.a_p % ps + ps) % ps != 0, c.a_p != 1,
                        c.a_p * c.a_p != 1, false};
        f.admissible = p > 3 && p != 37 && c.a_p != 0 && f.zero_split && f.zero_inert;
        out.push_back(f);
    }
    return out;
}

/** Only the primes passing all of the admissibility conditions. */
inline std::vector<PrimeFlags37a> admissible_primes_37a(std::uint64_t bound) {
    std::vector<PrimeFlags37a> all = prime_flags_37a(bound);
    std::vector<PrimeFlags37a> out;
    for (const PrimeFlags37a& f : all)
        if (f.admissible) out.push_back(f);
    return out;
}

} // namespace iwa

#endif
