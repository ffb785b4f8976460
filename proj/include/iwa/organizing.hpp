#ifndef IWA_ORGANIZING_HPP
#define IWA_ORGANIZING_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "iwa/errors.hpp"
#include "iwa/iw_elem.hpp"
#include "iwa/layer.hpp"
#include "iwa/padic_matrix.hpp"
#include "iwa/serialize.hpp"

namespace iwa {

/**
 * A square matrix H over the truncated ring that is skew-Hermitian for the
 * inversion involution, (H^iota)^T = -H, with every entry's augmentation of
 * positive valuation (entries lie in the maximal ideal (p, U_1, ..., U_d);
 * constants divisible by p are allowed).  Both properties are checked at
 * construction.
 */
class OrganizingMatrix {
  public:
    OrganizingMatrix(ActionSpec spec, std::size_t r, std::vector<IwElem> entries)
        : spec_(std::move(spec)), r_(r), entries_(std::move(entries))
    {
        if (r_ == 0)
            throw std::invalid_argument("OrganizingMatrix: size must be positive");
        if (entries_.size() != r_ * r_)
            throw std::invalid_argument("OrganizingMatrix: need r*r entries");
        for (const IwElem& e : entries_)
            if (e.spec() != spec_)
                throw spec_mismatch("OrganizingMatrix: entry has a different ActionSpec");
        validate();
    }

    const ActionSpec& spec() const { return spec_; }
    std::size_t size() const { return r_; }

    const IwElem& at(std::size_t i, std::size_t j) const {
        return entries_[i * r_ + j];
    }

  private:
    void validate() const {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) {
                if (iota(at(j, i)) != -at(i, j))
                    throw not_skew_hermitian(
                        "OrganizingMatrix: (H^iota)^T != -H at entry (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                if (augment(at(i, j)).is_unit())
                    throw not_in_maximal_ideal(
                        "OrganizingMatrix: entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") has unit augmentation");
            }
    }

    ActionSpec spec_;
    std::size_t r_;
    std::vector<IwElem> entries_;
};

/** Revalidates the defining properties (also run by the constructor). */
inline void check_skew_hermitian(const OrganizingMatrix& H) {
    for (std::size_t i = 0; i < H.size(); ++i)
        for (std::size_t j = 0; j < H.size(); ++j)
            if (iota(H.at(j, i)) != -H.at(i, j))
                throw not_skew_hermitian("check_skew_hermitian: (H^iota)^T != -H");
}

/**
 * Exact determinant in the truncated ring by cofactor expansion.  Satisfies
 * determinant(H)^iota = (-1)^r determinant(H) for every organizing matrix.
 */
inline IwElem determinant(const OrganizingMatrix& H) {
    const std::size_t r = H.size();
    std::vector<IwElem> work;
    work.reserve(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            work.push_back(H.at(i, j));

    // det of the minor given by row indices rows and the first |rows| columns
    // of the column-selection cols.
    struct Rec {
        const std::vector<IwElem>& a;
        std::size_t r;
        IwElem run(std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
            if (rows.size() == 1)
                return a[rows[0] * r + cols[0]];
            IwElem acc = IwElem::zero(a[0].spec());
            std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
            for (std::size_t k = 0; k < cols.size(); ++k) {
                std::vector<std::size_t> sub_cols;
                for (std::size_t t = 0; t < cols.size(); ++t)
                    if (t != k) sub_cols.push_back(cols[t]);
                IwElem term = a[rows[0] * r + cols[k]] * run(sub_rows, sub_cols);
                acc = (k % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    } rec{work, r};

    std::vector<std::size_t> all(r);
    for (std::size_t i = 0; i < r; ++i) all[i] = i;
    return rec.run(all, all);
}

/** The matrix of augmentations H(0) over Z/p^N (skew-symmetric). */
inline PadicMatrix augmentation_matrix(const OrganizingMatrix& H) {
    PadicMatrix m(H.spec().p, H.spec().N, H.size(), H.size());
    for (std::size_t i = 0; i < H.size(); ++i)
        for (std::size_t j = 0; j < H.size(); ++j)
            m.at(i, j) = augment(H.at(i, j)).residue();
    return m;
}

/**
 * Q_p-corank of H(0).  Since H(0) is skew-symmetric its rank is even, so
 * the corank is congruent to r mod 2.
 */
inline std::size_t residual_corank(const OrganizingMatrix& H) {
    return H.size() - augmentation_matrix(H).rank().rank;
}

/** Outcome of one layer computation. */
struct LayerRankReport {
    Sign sign;
    std::uint32_t level;        // k
    std::uint64_t layer_degree; // p^k
    std::size_t corank;
    std::uint64_t bound;        // p^k
    bool satisfied;             // corank >= bound
    bool precision_ok;          // rank certification completed within the guard
};

/**
 * Z_p-corank of coker(H) pushed to the layer of order p^k on the chosen
 * sign: every entry is specialized to that eigenvariable, reduced into the
 * layer ring, and expanded to its p^k x p^k multiplication matrix; the
 * corank of the resulting r*p^k square matrix over Q_p is certified by
 * valuation-pivoted elimination.  Level 0 reproduces residual_corank.
 */
inline LayerRankReport coker_rank_at_layer(const OrganizingMatrix& H, Sign s,
                                           std::uint32_t level) {
    const ActionSpec& spec = H.spec();
    if (spec.count(s) >= 2)
        throw multi_eigenvariable(
            "coker_rank_at_layer: chosen sign spans more than one variable");

    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < level; ++i) m *= spec.p;
    const std::size_t dim = H.size() * m;
    if (dim > 200)
        throw std::invalid_argument("coker_rank_at_layer: layer matrix dimension exceeds 200");

    PadicMatrix big(spec.p, spec.N, dim, dim);
    for (std::size_t i = 0; i < H.size(); ++i)
        for (std::size_t j = 0; j < H.size(); ++j) {
            PadicMatrix block = multiplication_matrix(layer_reduce(specialize(H.at(i, j), s), level));
            for (std::uint64_t a = 0; a < m; ++a)
                for (std::uint64_t b = 0; b < m; ++b)
                    big.at(i * m + a, j * m + b) = block.at(a, b);
        }

    try {
        const std::size_t corank = dim - big.rank().rank;
        return LayerRankReport{s, level, m, corank, m, corank >= m, true};
    } catch (const precision_exhausted&) {
        // The corank cannot be certified at this precision; the report says
        // so instead of aborting the surrounding certification.
        return LayerRankReport{s, level, m, 0, m, false, false};
    }
}

// Matrix file format: header, "matrix r=<r>", then r^2 entry lines.

inline std::string print_matrix(const OrganizingMatrix& H) {
    std::ostringstream os;
    os << print_header(H.spec()) << '\n';
    os << "matrix r=" << H.size() << '\n';
    for (std::size_t i = 0; i < H.size(); ++i)
        for (std::size_t j = 0; j < H.size(); ++j)
            os << "entry " << (i + 1) << ' ' << (j + 1) << " : "
               << print_elem(H.at(i, j)) << '\n';
    return os.str();
}

/** Parses and validates a matrix file (skew-Hermitian checks included). */
inline OrganizingMatrix parse_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw parse_error("matrix file: missing header");
    ActionSpec spec = parse_header(line);

    if (!std::getline(in, line))
        throw parse_error("matrix file: missing 'matrix r=' line");
    std::istringstream ms(line);
    std::string kw, rtok;
    ms >> kw >> rtok;
    if (kw != "matrix" || rtok.rfind("r=", 0) != 0)
        throw parse_error("matrix file: expected 'matrix r=<r>'");
    std::size_t r = 0;
    try {
        r = std::stoull(rtok.substr(2));
    } catch (const std::exception&) {
        throw parse_error("matrix file: bad size in '" + rtok + "'");
    }
    if (r == 0 || r > 64)
        throw parse_error("matrix file: size out of range");

    std::vector<IwElem> entries(r * r, IwElem::zero(spec));
    std::vector<bool> seen(r * r, false);
    for (std::size_t n = 0; n < r * r; ++n) {
        if (!std::getline(in, line))
            throw parse_error("matrix file: expected " + std::to_string(r * r) + " entry lines");
        std::istringstream es(line);
        std::string ekw;
        std::size_t i = 0, j = 0;
        std::string colon;
        es >> ekw >> i >> j >> colon;
        if (ekw != "entry" || colon != ":" || i < 1 || j < 1 || i > r || j > r)
            throw parse_error("matrix file: bad entry line '" + line + "'");
        std::string rest;
        std::getline(es, rest);
        if (seen[(i - 1) * r + (j - 1)])
            throw parse_error("matrix file: duplicate entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
        seen[(i - 1) * r + (j - 1)] = true;
        entries[(i - 1) * r + (j - 1)] = parse_elem(spec, rest);
    }
    return OrganizingMatrix(std::move(spec), r, std::move(entries));
}

} // namespace iwa

#endif
