#ifndef IWA_ARITH_GL2_HPP
#define IWA_ARITH_GL2_HPP

#include <cstdint>
#include <stdexcept>

namespace iwa {

/**
 * Order bookkeeping for the image-size argument over F_q:
 * #GL_2(F_q) = (q^2-1)(q^2-q), the Borel subgroup has order q(q-1)^2, and
 * a subgroup of index < (q+1)/2 is large enough, since
 * (q^2-1)(q^2-q) / ((q+1)/2) = 2 q (q-1)^2 exactly.
 */
struct Gl2BoundReport {
    std::uint64_t q;
    std::uint64_t index;
    std::uint64_t gl2_order;
    std::uint64_t borel_order;
    std::uint64_t threshold; // ceil((q+1)/2): passes iff index < threshold
    bool passes;
    bool inequality; // gl2_order > 2 * borel_order * index
};

namespace detail {

inline bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    while (q % p == 0) q /= p;
    return q == 1;
}

} // namespace detail

inline Gl2BoundReport gl2_bound_check(std::uint64_t q, std::uint64_t index) {
    if (q < 3 || !detail::is_prime_power(q))
        throw std::invalid_argument("gl2_bound_check: q must be a prime power >= 3");
    if (index == 0)
        throw std::invalid_argument("gl2_bound_check: index must be positive");

    Gl2BoundReport rep{q, index, 0, 0, 0, false, false};
    rep.gl2_order = (q * q - 1) * (q * q - q);
    rep.borel_order = q * (q - 1) * (q - 1);
    rep.threshold = q / 2 + 1;
    // index < (q+1)/2 as rationals, kept exact: 2*index < q+1.
    rep.passes = 2 * index < q + 1;
    rep.inequality = rep.gl2_order > 2 * rep.borel_order * index;
    return rep;
}

} // namespace iwa

#endif
