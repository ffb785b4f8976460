#ifndef IWA_PADIC_MATRIX_HPP
#define IWA_PADIC_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "iwa/errors.hpp"
#include "iwa/padic.hpp"

namespace iwa {

/**
 * Dense matrix over Z/p^N.  Supports the valuation-pivoted elimination used
 * for Q_p-rank certification: picking a pivot of globally minimal valuation
 * keeps every elimination step exact mod p^N, so the computed pivot
 * valuations are the elementary divisors of the stored matrix.
 */
class PadicMatrix {
  public:
    PadicMatrix(std::uint64_t p, std::uint32_t prec, std::size_t rows, std::size_t cols)
        : p_(p), prec_(prec), mod_(detail::checked_pow(p, prec)),
          rows_(rows), cols_(cols), a_(rows * cols, 0)
    {
        if (!detail::is_odd_prime(p))
            throw std::invalid_argument("PadicMatrix: p must be an odd prime");
    }

    std::uint64_t prime() const { return p_; }
    std::uint32_t precision() const { return prec_; }
    std::uint64_t modulus() const { return mod_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, std::int64_t v) {
        std::int64_t m = static_cast<std::int64_t>(mod_);
        std::int64_t r = v % m;
        if (r < 0) r += m;
        at(i, j) = static_cast<std::uint64_t>(r);
    }

    std::uint32_t valuation(std::uint64_t x) const {
        if (x == 0) return prec_;
        std::uint32_t v = 0;
        while (x % p_ == 0) { x /= p_; ++v; }
        return v;
    }

    struct RankResult {
        std::size_t rank;
        std::vector<std::uint32_t> pivot_valuations; // nondecreasing
    };

    /**
     * Q_p-rank of the stored matrix, certified at working precision.
     * A pivot is accepted only when its valuation is <= N - guard; a nonzero
     * entry whose valuation exceeds that bound but is < N cannot be
     * classified and raises precision_exhausted.  Residues equal to 0 are
     * treated as exact zeros (callers record this as a to-precision caveat).
     */
    RankResult rank(std::uint32_t guard = 2) const {
        if (guard >= prec_)
            throw std::invalid_argument("PadicMatrix::rank: guard must be below the precision");
        std::vector<std::uint64_t> w = a_;
        std::vector<bool> row_done(rows_, false), col_done(cols_, false);
        RankResult res{0, {}};
        const std::uint32_t certifiable = prec_ - guard;

        while (true) {
            std::uint32_t best_v = prec_;
            std::size_t pi = 0, pj = 0;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (row_done[i]) continue;
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (col_done[j]) continue;
                    std::uint64_t x = w[i * cols_ + j];
                    if (x == 0) continue;
                    std::uint32_t v = valuation(x);
                    if (v < best_v) { best_v = v; pi = i; pj = j; }
                }
            }
            if (best_v == prec_) break; // remaining block is zero at working precision
            if (best_v > certifiable)
                throw precision_exhausted(
                    "rank: pivot valuation " + std::to_string(best_v) +
                    " is uncertifiable at precision " + std::to_string(prec_));

            std::uint64_t pivot = w[pi * cols_ + pj];
            std::uint64_t pv = 1;
            for (std::uint32_t k = 0; k < best_v; ++k) pv *= p_;
            std::uint64_t unit_inv = detail::inv_mod(pivot / pv, mod_);

            for (std::size_t i = 0; i < rows_; ++i) {
                if (row_done[i] || i == pi) continue;
                std::uint64_t x = w[i * cols_ + pj];
                if (x == 0) continue;
                // x has valuation >= best_v by pivot minimality, so the
                // quotient (x / p^v) * unit_inv is exact mod p^N.
                std::uint64_t f = detail::mul_mod(x / pv, unit_inv, mod_);
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (col_done[j]) continue;
                    w[i * cols_ + j] = detail::sub_mod(
                        w[i * cols_ + j],
                        detail::mul_mod(f, w[pi * cols_ + j], mod_), mod_);
                }
            }
            row_done[pi] = true;
            col_done[pj] = true;
            ++res.rank;
            res.pivot_valuations.push_back(best_v);
        }
        return res;
    }

  private:
    std::uint64_t p_;
    std::uint32_t prec_;
    std::uint64_t mod_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
};

} // namespace iwa

#endif
