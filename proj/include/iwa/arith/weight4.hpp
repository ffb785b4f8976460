#ifndef IWA_ARITH_WEIGHT4_HPP
#define IWA_ARITH_WEIGHT4_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "iwa/arith/hecke.hpp"
#include "iwa/padic.hpp"

namespace iwa {

/**
 * Coefficients a_1 .. a_18 of the weight 4, level 5 newform, with a_0 = 0
 * as a placeholder.  The entries satisfy the standard Hecke relations
 *   a_{mn} = a_m a_n              for gcd(m, n) = 1,
 *   a_{p^{e+1}} = a_p a_{p^e} - p^3 a_{p^{e-1}}   for p != 5,
 *   a_{5^{e+1}} = a_5 a_{5^e},
 * which weight4_hecke_consistent() re-derives from the primes alone.
 */
inline const std::array<std::int64_t, 19>& weight4_coeffs() {
    static const std::array<std::int64_t, 19> table = {
        0,  1,   -4,  2,   8,  -5,  -8, 6,   0,  -23,
        20, 32,  16,  -38, -24, -10, -64, 26, 92,
    };
    return table;
}

inline bool weight4_hecke_consistent() {
    const auto& a = weight4_coeffs();
    const std::uint64_t level = 5;
    for (std::uint64_t n = 2; n < a.size(); ++n) {
        std::uint64_t p = 2;
        while (n % p != 0) ++p;
        std::uint64_t q = 1;
        std::uint64_t m = n;
        while (m % p == 0) { m /= p; q *= p; }
        if (m > 1) {
            // Coprime split n = q * m against the smallest prime factor.
            if (a[n] != a[q] * a[m]) return false;
        } else if (q != p) {
            // Prime power: step the p-recursion down once.
            std::int64_t expected = a[p] * a[q / p];
            if (p != level) {
                std::int64_t p3 = static_cast<std::int64_t>(p * p * p);
                expected -= p3 * a[q / (p * p)];
            }
            if (a[n] != expected) return false;
        }
    }
    return true;
}

struct Weight4PrimeReport {
    std::uint64_t p;
    std::int64_t a_p;
    bool ordinary;          // p does not divide a_p
    bool weil_ok;           // a_p^2 <= 4 p^3
    bool twist1_nontrivial; // 2 mod (p-1) != 1
    bool twist2_nontrivial; // (2 + (p-1)/2) mod (p-1) != 1; fails only at p = 3
};

inline std::vector<Weight4PrimeReport> weight4_prime_reports() {
    const auto& a = weight4_coeffs();
    std::vector<Weight4PrimeReport> out;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
        Weight4PrimeReport rep{};
        rep.p = p;
        rep.a_p = a[p];
        std::int64_t pm = static_cast<std::int64_t>(p);
        rep.ordinary = (rep.a_p % pm + pm) % pm != 0;
        rep.weil_ok = rep.a_p * rep.a_p <= 4 * pm * pm * pm;
        if (p >= 3) {
            std::uint64_t e = p - 1;
            rep.twist1_nontrivial = 2 % e != 1;
            rep.twist2_nontrivial = (2 + e / 2) % e != 1;
        } else {
            rep.twist1_nontrivial = true;
            rep.twist2_nontrivial = true;
        }
        out.push_back(rep);
    }
    return out;
}

/**
 * Unit root of X^2 - a_3 X + 3^3 over Z_3 at the requested precision,
 * for the weight 4 form (a_3 = 2).
 */
inline PAdic weight4_unit_root(std::uint32_t prec) {
    return hecke_unit_root(weight4_coeffs()[3], 3, 4, prec);
}

} // namespace iwa

#endif
