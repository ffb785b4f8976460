#ifndef IWA_ERRORS_HPP
#define IWA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iwa {

/**
 * Base class for all library errors.  The CLI maps subclasses onto its
 * exit-code contract: parse_error -> 2, precision_exhausted -> 3, and
 * invariant_error -> 4.
 */
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed text input (headers, element lines, matrix files). */
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

/**
 * The requested result cannot be certified at the working precision
 * (p-adic precision N or degree cap D).  Raised by rank elimination when a
 * pivot falls in the uncertifiable valuation band, by Weierstrass
 * preparation when the distinguished degree is untrustworthy, and by
 * symmetrization when a correction step cancels to zero.
 */
struct precision_exhausted : error {
    explicit precision_exhausted(const std::string& what) : error(what) {}
};

/** A structural invariant of the input data is violated. */
struct invariant_error : error {
    explicit invariant_error(const std::string& what) : error(what) {}
};

struct non_unit : invariant_error {
    explicit non_unit(const std::string& what) : invariant_error(what) {}
};

struct not_a_sign : invariant_error {
    explicit not_a_sign(const std::string& what) : invariant_error(what) {}
};

struct spec_mismatch : invariant_error {
    explicit spec_mismatch(const std::string& what) : invariant_error(what) {}
};

struct not_skew_hermitian : invariant_error {
    explicit not_skew_hermitian(const std::string& what) : invariant_error(what) {}
};

struct not_in_maximal_ideal : invariant_error {
    explicit not_in_maximal_ideal(const std::string& what) : invariant_error(what) {}
};

struct multi_eigenvariable : invariant_error {
    explicit multi_eigenvariable(const std::string& what) : invariant_error(what) {}
};

struct zero_element : invariant_error {
    explicit zero_element(const std::string& what) : invariant_error(what) {}
};

struct not_eigen_initial_form : invariant_error {
    explicit not_eigen_initial_form(const std::string& what) : invariant_error(what) {}
};

struct degenerate_symmetrization : precision_exhausted {
    explicit degenerate_symmetrization(const std::string& what) : precision_exhausted(what) {}
};

struct epsilon_iota_mismatch : invariant_error {
    explicit epsilon_iota_mismatch(const std::string& what) : invariant_error(what) {}
};

struct not_ordinary : invariant_error {
    explicit not_ordinary(const std::string& what) : invariant_error(what) {}
};

} // namespace iwa

#endif
