#ifndef IWA_ARITH_HECKE_HPP
#define IWA_ARITH_HECKE_HPP

#include <cstdint>

#include "iwa/errors.hpp"
#include "iwa/padic.hpp"

namespace iwa {

/**
 * The unit root of X^2 - a_p X + p^(k-1) in Z_p, to precision p^N, for an
 * ordinary coefficient (a_p a unit mod p).  Newton iteration from
 * X = a_p doubles the number of correct digits each round; the derivative
 * 2X - a_p stays a unit throughout.  The result alpha satisfies
 * alpha = a_p (mod p) and alpha^2 - a_p alpha + p^(k-1) = 0 (mod p^N).
 */
inline PAdic hecke_unit_root(std::int64_t a_p, std::uint64_t p, std::uint32_t k,
                             std::uint32_t prec) {
    if (k < 2)
        throw std::invalid_argument("hecke_unit_root: weight must be at least 2");
    const PAdic a(p, prec, a_p);
    if (!a.is_unit())
        throw not_ordinary("hecke_unit_root: a_p is divisible by p");

    // p^(k-1) mod p^N without overflow: zero once k-1 reaches N.
    const PAdic c = k - 1 >= prec
        ? PAdic::zero(p, prec)
        : PAdic(p, prec, static_cast<std::int64_t>(detail::checked_pow(p, k - 1)));

    PAdic x = a;
    for (std::uint32_t round = 0; round < 64; ++round) {
        PAdic fx = x * x - a * x + c;
        if (fx.is_zero()) return x;
        PAdic dfx = x + x - a;
        x = x - fx * dfx.inv();
    }
    throw precision_exhausted("hecke_unit_root: no convergence");
}

} // namespace iwa

#endif
