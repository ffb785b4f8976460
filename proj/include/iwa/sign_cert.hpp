#ifndef IWA_SIGN_CERT_HPP
#define IWA_SIGN_CERT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "iwa/errors.hpp"
#include "iwa/iw_elem.hpp"
#include "iwa/weierstrass.hpp"

namespace iwa {

/** The three nontrivial elements of the involution group generated by iota and sigma. */
enum class Involution { iota, sigma, sigma_iota };

inline IwElem apply(const IwElem& a, Involution xi) {
    switch (xi) {
        case Involution::iota: return iota(a);
        case Involution::sigma: return sigma(a);
        default: return sigma_iota(a);
    }
}

/**
 * The lowest-weight homogeneous part of a nonzero element in the graded
 * ring of the maximal ideal (p, U_1, ..., U_d): coefficients in F_p,
 * variables pbar, Ubar_1, ..., Ubar_d, each of weight 1.  A stored term
 * c * U^e with v = val(c) contributes (unit part of c mod p) * pbar^v * Ubar^e
 * of weight v + |e|; the initial form collects the terms of minimal weight.
 */
struct InitialForm {
    std::uint64_t p;
    std::uint32_t weight;
    // key = [v, e_1, ..., e_d] (pbar exponent first), value in (Z/p)^*.
    std::map<std::vector<std::uint32_t>, std::uint64_t> terms;

    bool operator==(const InitialForm& o) const = default;
};

inline InitialForm initial_form(const IwElem& a) {
    if (a.is_zero())
        throw zero_element("initial_form: zero element");
    const std::uint64_t p = a.spec().p;
    std::uint32_t best = a.spec().N + a.spec().D + 1;
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> staged;
    for (const auto& [e, c] : a.terms()) {
        PAdic coeff(p, a.spec().N, static_cast<std::int64_t>(c));
        const std::uint32_t w = coeff.valuation() + IwElem::total(e);
        if (w > best) continue;
        std::vector<std::uint32_t> key;
        key.reserve(e.size() + 1);
        key.push_back(coeff.valuation());
        key.insert(key.end(), e.begin(), e.end());
        if (w < best) {
            best = w;
            staged.clear();
        }
        staged.emplace_back(std::move(key), coeff.unit_part() % p);
    }
    InitialForm f{p, best, {}};
    for (auto& [k, v] : staged) f.terms.emplace(std::move(k), v);
    return f;
}

/**
 * Degree-preserving action of an involution on the graded ring: pbar is
 * fixed; Ubar_i maps to -Ubar_i when the involution inverts U_i (iota on
 * every variable, sigma on minus variables, sigma_iota on plus variables).
 */
inline InitialForm graded_action(const InitialForm& f, Involution xi,
                                 const ActionSpec& spec) {
    InitialForm out{f.p, f.weight, {}};
    for (const auto& [key, c] : f.terms) {
        std::uint32_t flips = 0;
        for (std::size_t i = 1; i < key.size(); ++i) {
            const Sign s = spec.signature[i - 1];
            const bool inverted =
                xi == Involution::iota ||
                (xi == Involution::sigma && s == Sign::minus) ||
                (xi == Involution::sigma_iota && s == Sign::plus);
            if (inverted) flips += key[i];
        }
        out.terms[key] = flips % 2 ? f.p - c : c;
    }
    return out;
}

namespace detail {

inline InitialForm negated(const InitialForm& f) {
    InitialForm out{f.p, f.weight, {}};
    for (const auto& [k, c] : f.terms) out.terms[k] = f.p - c;
    return out;
}

} // namespace detail

/**
 * The eigenvalue of the involution on the initial form of L: +1 or -1.
 * Well defined whenever the principal ideal (L) is stable under the
 * involution (caller-asserted); a non-eigen initial form is rejected.
 */
inline int epsilon_of(const IwElem& L, Involution xi) {
    const InitialForm f = initial_form(L);
    const InitialForm g = graded_action(f, xi, L.spec());
    if (g == f) return +1;
    if (g == detail::negated(f)) return -1;
    throw not_eigen_initial_form("epsilon_of: initial form is not an eigenvector");
}

/**
 * Result of symmetrize: the three eigenvalues (with epsilon_sigma_iota =
 * epsilon_iota * epsilon_sigma), the extracted p-content mu, and a
 * symmetrized generator satisfying apply(symmetrized, xi) =
 * epsilon(xi) * symmetrized exactly in the truncated ring.
 */
struct SignRecord {
    int epsilon_iota;
    int epsilon_sigma;
    int epsilon_sigma_iota;
    std::uint32_t mu;
    IwElem symmetrized;
};

/**
 * Strips the p-content, then replaces L by L + eps * L^xi for xi = iota and
 * then sigma whenever L is not already an exact eigenvector.  Each
 * correction lands exactly on the eigenspace (the involutions commute), so
 * the returned generator satisfies both eigen identities with no precision
 * caveat.  A correction step that cancels to zero is reported as
 * degenerate.
 */
inline SignRecord symmetrize(const IwElem& L) {
    if (L.is_zero())
        throw zero_element("symmetrize: zero element");
    const std::uint32_t mu = content(L);
    IwElem g = strip_content(L, mu);

    const int ei = epsilon_of(g, Involution::iota);
    {
        IwElem gi = iota(g);
        const IwElem target = ei > 0 ? g : -g;
        if (gi != target) {
            g = g + (ei > 0 ? gi : -gi);
            if (g.is_zero())
                throw degenerate_symmetrization("symmetrize: iota step cancelled to zero");
        }
    }

    const int es = epsilon_of(g, Involution::sigma);
    {
        IwElem gs = sigma(g);
        const IwElem target = es > 0 ? g : -g;
        if (gs != target) {
            g = g + (es > 0 ? gs : -gs);
            if (g.is_zero())
                throw degenerate_symmetrization("symmetrize: sigma step cancelled to zero");
        }
    }

    return SignRecord{ei, es, ei * es, mu, g};
}

/**
 * Univariate truncation-stability check: L and L^xi have the same p-content
 * and the same distinguished Weierstrass factor exactly iff the ideal (L)
 * is visibly xi-stable at working precision.
 */
inline bool check_stability(const IwElem& L, Involution xi) {
    if (L.spec().dims() != 1)
        throw std::invalid_argument("check_stability: univariate elements only");
    const WeierstrassData a = weierstrass_prepare(L);
    const WeierstrassData b = weierstrass_prepare(apply(L, xi));
    return a.mu == b.mu && a.distinguished == b.distinguished;
}

} // namespace iwa

#endif
