#ifndef IWA_ARITH_KRONECKER_HPP
#define IWA_ARITH_KRONECKER_HPP

#include <cstdint>
#include <stdexcept>

namespace iwa {

/**
 * The Kronecker symbol (a|n), completely multiplicative in n, extending the
 * Jacobi symbol by the standard conventions at 2, -1, and 0.  For a a
 * fundamental discriminant this is the quadratic character attached to the
 * field of that discriminant.
 */
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

    // (a|2) is 0 for even a and depends on a mod 8 otherwise.
    static const int mod8_table[8] = {0, 1, 0, -1, 0, -1, 0, 1};

    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        while (n % 2 == 0) {
            n /= 2;
            sign *= mod8_table[((a % 8) + 8) % 8];
        }
    }
    // Now n is odd and positive; run quadratic reciprocity on the Jacobi part.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            sign *= mod8_table[n % 8];
        }
        std::int64_t t = a;
        a = n;
        n = t;
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

/** D = 1 or a fundamental discriminant: 0,1 mod 4, with the usual squarefree shape. */
inline bool is_fundamental_discriminant(std::int64_t D) {
    auto squarefree = [](std::int64_t m) {
        if (m < 0) m = -m;
        if (m == 0) return false;
        for (std::int64_t d = 2; d * d <= m; ++d)
            if (m % (d * d) == 0) return false;
        return true;
    };
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r == 0) {
        const std::int64_t m = D / 4;
        const std::int64_t mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && squarefree(m);
    }
    return false;
}

/**
 * Whether an imaginary quadratic field of fundamental discriminant D puts
 * the level N_f on its odd-corank list: the attached quadratic character
 * must take the value +1 at N_f.  N_f = 1 imposes no restriction.
 */
inline bool odd_corank_fields_condition(std::uint64_t level, std::int64_t D) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw std::invalid_argument(
            "odd_corank_fields_condition: D must be a negative fundamental discriminant");
    return kronecker(D, static_cast<std::int64_t>(level)) == 1;
}

} // namespace iwa

#endif
