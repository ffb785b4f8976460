#ifndef IWA_LAYER_HPP
#define IWA_LAYER_HPP

#include <cstdint>
#include <vector>

#include "iwa/errors.hpp"
#include "iwa/iw_elem.hpp"
#include "iwa/padic_matrix.hpp"

namespace iwa {

/**
 * An element of the layer ring Z/p^N [U] / ((1+U)^(p^k) - 1), stored as the
 * canonical representative of degree < p^k.  This is the group ring of the
 * cyclic layer of order p^k; level 0 is the base ring Z/p^N itself.
 */
struct LayerElem {
    std::uint64_t p;
    std::uint32_t prec;
    std::uint32_t level;                // k
    std::vector<std::uint64_t> coeffs;  // size p^level

    std::uint64_t degree() const { return coeffs.size(); }
    std::uint64_t modulus() const { return detail::checked_pow(p, prec); }

    bool operator==(const LayerElem& o) const = default;
};

namespace detail {

// Coefficients of w(U) = (1+U)^m - 1: w_j = C(m, j) for j = 1..m, via
// Pascal's rule so everything stays exact mod p^N.
inline std::vector<std::uint64_t> layer_modulus_poly(std::uint64_t m, std::uint64_t mod) {
    std::vector<std::uint64_t> row(m + 1, 0);
    row[0] = 1 % mod;
    for (std::uint64_t n = 1; n <= m; ++n)
        for (std::uint64_t j = n; j > 0; --j)
            row[j] = add_mod(row[j], row[j - 1], mod);
    row[0] = 0; // subtract the constant 1
    return row;
}

} // namespace detail

/**
 * Image of a univariate element in the layer ring at level k, by polynomial
 * division of the stored degree-<=D representative by (1+U)^(p^k) - 1.
 * Level 0 agrees with augment.
 */
inline LayerElem layer_reduce(const IwElem& a, std::uint32_t level) {
    const ActionSpec& spec = a.spec();
    if (spec.dims() != 1)
        throw std::invalid_argument("layer_reduce: univariate elements only");
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < level; ++i) {
        m *= spec.p;
        if (m > 4096)
            throw std::invalid_argument("layer_reduce: layer degree p^k is too large");
    }
    const std::uint64_t mod = spec.modulus();

    std::vector<std::uint64_t> c = to_dense(a);
    if (c.size() < m) c.resize(m, 0);
    const std::vector<std::uint64_t> w = detail::layer_modulus_poly(m, mod);

    // w is monic of degree m, so division needs no coefficient inversion.
    for (std::size_t d = c.size(); d-- > m;) {
        std::uint64_t top = c[d];
        if (top == 0) continue;
        c[d] = 0;
        for (std::uint64_t j = 1; j < m; ++j)
            c[d - m + j] = detail::sub_mod(c[d - m + j],
                                           detail::mul_mod(top, w[j], mod), mod);
    }
    c.resize(m);
    return LayerElem{spec.p, spec.N, level, std::move(c)};
}

/** Product in the layer ring (convolve, then reduce by the same division). */
inline LayerElem layer_mul(const LayerElem& x, const LayerElem& y) {
    if (x.p != y.p || x.prec != y.prec || x.level != y.level)
        throw spec_mismatch("layer_mul: operands live in different layer rings");
    const std::uint64_t mod = x.modulus();
    const std::uint64_t m = x.degree();
    std::vector<std::uint64_t> c(2 * m, 0);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::uint64_t j = 0; j < m; ++j)
            c[i + j] = detail::add_mod(c[i + j],
                                       detail::mul_mod(x.coeffs[i], y.coeffs[j], mod), mod);
    }
    const std::vector<std::uint64_t> w = detail::layer_modulus_poly(m, mod);
    for (std::size_t d = c.size(); d-- > m;) {
        std::uint64_t top = c[d];
        if (top == 0) continue;
        c[d] = 0;
        for (std::uint64_t j = 1; j < m; ++j)
            c[d - m + j] = detail::sub_mod(c[d - m + j],
                                           detail::mul_mod(top, w[j], mod), mod);
    }
    c.resize(m);
    return LayerElem{x.p, x.prec, x.level, std::move(c)};
}

/**
 * Matrix of multiplication by x on the layer ring, in the power basis
 * 1, U, ..., U^(p^k - 1): column j holds the representative of x * U^j.
 */
inline PadicMatrix multiplication_matrix(const LayerElem& x) {
    const std::uint64_t m = x.degree();
    const std::uint64_t mod = x.modulus();
    const std::vector<std::uint64_t> w = detail::layer_modulus_poly(m, mod);

    PadicMatrix mat(x.p, x.prec, m, m);
    std::vector<std::uint64_t> col = x.coeffs;
    for (std::uint64_t j = 0; j < m; ++j) {
        for (std::uint64_t i = 0; i < m; ++i)
            mat.at(i, j) = col[i];
        if (j + 1 < m) {
            // col <- U * col reduced: shift up, fold U^m = -(w_1 U + ... + w_(m-1) U^(m-1)).
            std::uint64_t top = col[m - 1];
            for (std::uint64_t i = m - 1; i > 0; --i) col[i] = col[i - 1];
            col[0] = 0;
            if (top != 0)
                for (std::uint64_t i = 1; i < m; ++i)
                    col[i] = detail::sub_mod(col[i], detail::mul_mod(top, w[i], mod), mod);
        }
    }
    return mat;
}

} // namespace iwa

#endif
