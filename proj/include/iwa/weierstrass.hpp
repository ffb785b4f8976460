#ifndef IWA_WEIERSTRASS_HPP
#define IWA_WEIERSTRASS_HPP

#include <cstdint>

#include "iwa/errors.hpp"
#include "iwa/iw_elem.hpp"

namespace iwa {

/**
 * Exact factorization f = p^mu * distinguished * unit in the truncated
 * univariate ring: distinguished is monic of degree lambda with all lower
 * coefficients of positive valuation, and unit has unit constant term.
 * Multiplying the three parts back together reproduces f exactly.
 */
struct WeierstrassData {
    std::uint32_t mu;
    std::uint32_t lambda;
    IwElem distinguished;
    IwElem unit;
};

namespace detail {

// Inverse of a unit power series by Newton iteration x <- x(2 - ux);
// the error 1 - ux squares each round, so it dies in the (p, U)-adic
// filtration after log2(max(N, D)) + 1 rounds.
inline IwElem invert_unit_series(const IwElem& u) {
    PAdic c0 = augment(u);
    if (!c0.is_unit())
        throw non_unit("invert_unit_series: constant term is not a unit");
    const IwElem one = IwElem::one(u.spec());
    IwElem x = IwElem::constant(u.spec(), c0.inv());
    for (int round = 0; round < 64; ++round) {
        IwElem e = one - u * x;
        if (e.is_zero()) return x;
        x = x + x * e;
    }
    throw precision_exhausted("invert_unit_series: no convergence");
}

} // namespace detail

/**
 * Weierstrass preparation of a nonzero univariate element.  mu is the
 * p-content; lambda is the least degree of f / p^mu carrying a unit
 * coefficient, trusted only when lambda <= D - 2.  The factors are found by
 * successive division: each correction pass divides the residual by the
 * current unit, splits the quotient at degree lambda, and folds the two
 * halves into the factors; the residual gains a factor of p per pass.
 */
inline WeierstrassData weierstrass_prepare(const IwElem& f) {
    const ActionSpec& spec = f.spec();
    if (spec.dims() != 1)
        throw std::invalid_argument("weierstrass_prepare: univariate elements only");
    if (f.is_zero())
        throw precision_exhausted("weierstrass_prepare: zero element");

    const std::uint32_t mu = content(f);
    const IwElem g = strip_content(f, mu);

    std::uint32_t lambda = 0;
    {
        std::vector<std::uint64_t> c = to_dense(g);
        while (lambda <= spec.D && c[lambda] % spec.p == 0) ++lambda;
    }
    if (lambda + 2 > spec.D)
        throw precision_exhausted("weierstrass_prepare: distinguished degree exceeds D - 2");

    // Initial split: P = U^lambda, unit = high part of g shifted down.
    IwElem P(spec);
    P.add_term({lambda}, 1);
    IwElem u(spec);
    for (const auto& [e, c] : g.terms())
        if (e[0] >= lambda)
            u.add_residue({e[0] - lambda}, c);

    for (std::uint32_t pass = 0; pass <= spec.N + 1; ++pass) {
        IwElem r = g - P * u;
        if (r.is_zero())
            return WeierstrassData{mu, lambda, P, u};
        IwElem q = r * detail::invert_unit_series(u);
        IwElem qlow(spec), qhigh(spec);
        for (const auto& [e, c] : q.terms()) {
            if (e[0] < lambda) qlow.add_residue({e[0]}, c);
            else qhigh.add_residue({e[0] - lambda}, c);
        }
        P = P + qlow;
        u = u + u * qhigh;
    }
    throw precision_exhausted("weierstrass_prepare: no convergence");
}

} // namespace iwa

#endif
