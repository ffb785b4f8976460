#ifndef IWA_ARITH_TAU_HPP
#define IWA_ARITH_TAU_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace iwa {

/**
 * A q-expansion with exact unbounded integer coefficients a(1)..a(bound)
 * (a(0) = 0 for the cusp forms handled here).
 */
struct QExpansion {
    std::uint32_t weight;
    std::uint32_t level;
    std::vector<mpz_class> coeff; // coeff[n] = a(n), size bound+1

    std::uint32_t bound() const { return static_cast<std::uint32_t>(coeff.size()) - 1; }

    const mpz_class& a(std::uint32_t n) const {
        if (n >= coeff.size())
            throw std::out_of_range("QExpansion::a: index beyond the computed bound");
        return coeff[n];
    }
};

namespace detail {

// In-place dense *= sparse, truncated at degree bound.  The sparse factor's
// coefficients are small signed integers, so mpz_addmul_ui/submul_ui apply.
inline void mul_sparse(std::vector<mpz_class>& dense,
                       const std::vector<std::pair<std::uint32_t, std::int64_t>>& sparse,
                       std::uint32_t bound) {
    std::vector<mpz_class> out(bound + 1, mpz_class(0));
    for (const auto& [off, cf] : sparse) {
        if (off > bound) break;
        const unsigned long mag = static_cast<unsigned long>(cf < 0 ? -cf : cf);
        for (std::uint32_t i = 0; i + off <= bound; ++i) {
            if (dense[i] == 0) continue;
            if (cf >= 0)
                mpz_addmul_ui(out[i + off].get_mpz_t(), dense[i].get_mpz_t(), mag);
            else
                mpz_submul_ui(out[i + off].get_mpz_t(), dense[i].get_mpz_t(), mag);
        }
    }
    dense.swap(out);
}

} // namespace detail

/**
 * The discriminant cusp form q * prod_(n>=1) (1 - q^n)^24 through q^bound,
 * by repeated truncated polynomial multiplication over exact integers.  The
 * cube of the eta-product is expanded first (its coefficients are the
 * classical alternating odd numbers supported on triangular exponents),
 * then raised to the 8th power by successive sparse multiplications.
 */
inline QExpansion tau_series(std::uint32_t bound) {
    if (bound < 1)
        throw std::invalid_argument("tau_series: bound must be at least 1");
    const std::uint32_t b = bound - 1; // need prod^24 through q^(bound-1)

    // prod (1 - q^n)^3 = sum_(j>=0) (-1)^j (2j+1) q^(j(j+1)/2)
    std::vector<std::pair<std::uint32_t, std::int64_t>> cube;
    for (std::uint64_t j = 0; j * (j + 1) / 2 <= b; ++j)
        cube.emplace_back(static_cast<std::uint32_t>(j * (j + 1) / 2),
                          (j % 2 ? -1 : 1) * static_cast<std::int64_t>(2 * j + 1));

    std::vector<mpz_class> acc(b + 1, mpz_class(0));
    acc[0] = 1;
    for (int rep = 0; rep < 8; ++rep)
        detail::mul_sparse(acc, cube, b);

    QExpansion out{12, 1, std::vector<mpz_class>(bound + 1, mpz_class(0))};
    for (std::uint32_t n = 0; n <= b; ++n)
        out.coeff[n + 1] = acc[n];
    return out;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<bool> sieve(bound + 1, true);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= bound; ++n) {
        if (!sieve[n]) continue;
        out.push_back(n);
        for (std::uint64_t m = n * n; m <= bound; m += n) sieve[m] = false;
    }
    return out;
}

/** Primes p <= bound with tau(p) not divisible by p (the first is 11). */
inline std::vector<std::uint64_t> ordinary_primes_delta(std::uint32_t bound) {
    const QExpansion delta = tau_series(bound);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : primes_up_to(bound))
        if (mpz_class(delta.a(static_cast<std::uint32_t>(p)) % p) != 0)
            out.push_back(p);
    return out;
}

} // namespace iwa

#endif
