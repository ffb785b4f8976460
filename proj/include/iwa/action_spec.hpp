#ifndef IWA_ACTION_SPEC_HPP
#define IWA_ACTION_SPEC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iwa/errors.hpp"
#include "iwa/padic.hpp"

namespace iwa {

/** Signature of a group variable: which eigenspace of sigma it spans. */
enum class Sign : std::uint8_t { plus, minus };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

inline Sign sign_of_char(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    throw parse_error(std::string("sign_of_char: expected '+' or '-', got '") + c + "'");
}

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/**
 * Working parameters shared by every ring element: the odd prime p, the
 * p-adic precision N, the total-degree cap D on the group variables
 * U_1..U_d, and the signature (+/-) of each variable.  Two elements
 * interoperate only if their ActionSpecs compare equal.
 */
struct ActionSpec {
    std::uint64_t p;
    std::uint32_t N;
    std::uint32_t D;
    std::vector<Sign> signature;

    ActionSpec(std::uint64_t p_, std::uint32_t N_, std::uint32_t D_,
               std::vector<Sign> signature_)
        : p(p_), N(N_), D(D_), signature(std::move(signature_))
    {
        if (!detail::is_odd_prime(p))
            throw std::invalid_argument("ActionSpec: p must be an odd prime");
        if (N < 1)
            throw std::invalid_argument("ActionSpec: N must be at least 1");
        if (D < 2)
            throw std::invalid_argument("ActionSpec: D must be at least 2");
        if (signature.empty())
            throw std::invalid_argument("ActionSpec: at least one variable required");
        detail::checked_pow(p, guard_precision());
    }

    ActionSpec(std::uint64_t p_, std::uint32_t N_, std::uint32_t D_,
               const std::string& sig)
        : ActionSpec(p_, N_, D_, signs_of_string(sig)) {}

    std::uint32_t dims() const { return static_cast<std::uint32_t>(signature.size()); }

    std::uint64_t modulus() const { return detail::checked_pow(p, N); }

    // v_p(D!) + 1: extra p-adic headroom for grouplike exponents, sized so
    // the binomial coefficients C(e, k), k <= D, are exact mod p^N.
    std::uint32_t guard() const {
        std::uint32_t v = 0;
        for (std::uint64_t q = p; q <= D; q *= p) {
            v += D / static_cast<std::uint32_t>(q);
            if (q > D / p) break;
        }
        return v + 1;
    }

    std::uint32_t guard_precision() const { return N + guard(); }
    std::uint64_t guard_modulus() const { return detail::checked_pow(p, guard_precision()); }

    std::string signature_string() const {
        std::string s;
        for (Sign v : signature) s += sign_char(v);
        return s;
    }

    std::size_t count(Sign s) const {
        std::size_t n = 0;
        for (Sign v : signature)
            if (v == s) ++n;
        return n;
    }

    // Sub-spec spanned by the variables of the given signature.
    ActionSpec restricted(Sign s) const {
        std::vector<Sign> sub;
        for (Sign v : signature)
            if (v == s) sub.push_back(v);
        if (sub.empty())
            throw std::invalid_argument("ActionSpec::restricted: no variable of that signature");
        return ActionSpec(p, N, D, std::move(sub));
    }

    PAdic scalar(std::int64_t v) const { return PAdic(p, N, v); }

    bool operator==(const ActionSpec& o) const {
        return p == o.p && N == o.N && D == o.D && signature == o.signature;
    }
    bool operator!=(const ActionSpec& o) const { return !(*this == o); }

  private:
    static std::vector<Sign> signs_of_string(const std::string& sig) {
        std::vector<Sign> v;
        v.reserve(sig.size());
        for (char c : sig) v.push_back(sign_of_char(c));
        return v;
    }
};

} // namespace iwa

#endif
