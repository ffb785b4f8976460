#ifndef IWA_IW_ELEM_HPP
#define IWA_IW_ELEM_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "iwa/action_spec.hpp"
#include "iwa/errors.hpp"
#include "iwa/padic.hpp"

namespace iwa {

/**
 * An element of the truncated group-variable ring
 *
 *     (Z/p^N)[U_1, ..., U_d] / (U_1, ..., U_d)^(D+1),
 *
 * stored as a sparse map from exponent vectors (total degree <= D) to
 * nonzero canonical residues mod p^N.  All arithmetic is exact in this
 * quotient; nothing is ever rounded.  The grouplike generators are
 * <gamma_i> = 1 + U_i.
 */
class IwElem {
  public:
    using Expo = std::vector<std::uint32_t>;
    using TermMap = std::map<Expo, std::uint64_t>;

    explicit IwElem(ActionSpec spec) : spec_(std::move(spec)) {}

    static IwElem zero(const ActionSpec& spec) { return IwElem(spec); }

    static IwElem constant(const ActionSpec& spec, std::int64_t c) {
        IwElem r(spec);
        r.add_term(Expo(spec.dims(), 0), c);
        return r;
    }

    static IwElem constant(const ActionSpec& spec, const PAdic& c) {
        if (c.prime() != spec.p || c.precision() != spec.N)
            throw spec_mismatch("IwElem::constant: scalar lives in a different ring");
        IwElem r(spec);
        r.add_residue(Expo(spec.dims(), 0), c.residue());
        return r;
    }

    static IwElem one(const ActionSpec& spec) { return constant(spec, 1); }

    // U_i (0-based variable index).
    static IwElem variable(const ActionSpec& spec, std::uint32_t i) {
        if (i >= spec.dims())
            throw std::invalid_argument("IwElem::variable: index out of range");
        IwElem r(spec);
        Expo e(spec.dims(), 0);
        e[i] = 1;
        r.add_term(e, 1);
        return r;
    }

    static IwElem monomial(const ActionSpec& spec, const Expo& e, std::int64_t c) {
        IwElem r(spec);
        r.add_term(e, c);
        return r;
    }

    const ActionSpec& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // Largest total degree carrying a nonzero coefficient; 0 for the zero element.
    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, total(e));
        return d;
    }

    PAdic coeff(const Expo& e) const {
        check_expo(e);
        auto it = terms_.find(e);
        return PAdic(spec_.p, spec_.N,
                     it == terms_.end() ? 0 : static_cast<std::int64_t>(it->second));
    }

    // Adds c * U^e (c an arbitrary integer, reduced mod p^N).
    void add_term(const Expo& e, std::int64_t c) {
        std::int64_t m = static_cast<std::int64_t>(spec_.modulus());
        std::int64_t v = c % m;
        if (v < 0) v += m;
        add_residue(e, static_cast<std::uint64_t>(v));
    }

    void add_residue(const Expo& e, std::uint64_t r) {
        check_expo(e);
        if (r == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, 0);
        it->second = detail::add_mod(it->second, r, spec_.modulus());
        if (it->second == 0) terms_.erase(it);
    }

    IwElem operator-() const {
        IwElem r(spec_);
        std::uint64_t m = spec_.modulus();
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, m - c);
        return r;
    }

    IwElem operator+(const IwElem& o) const {
        require_same(o);
        IwElem r = *this;
        for (const auto& [e, c] : o.terms_)
            r.add_residue(e, c);
        return r;
    }

    IwElem operator-(const IwElem& o) const { return *this + (-o); }

    IwElem operator*(const IwElem& o) const {
        require_same(o);
        IwElem r(spec_);
        std::uint64_t m = spec_.modulus();
        for (const auto& [ea, ca] : terms_) {
            std::uint32_t da = total(ea);
            for (const auto& [eb, cb] : o.terms_) {
                if (da + total(eb) > spec_.D) continue;
                Expo e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_residue(e, detail::mul_mod(ca, cb, m));
            }
        }
        return r;
    }

    IwElem operator*(const PAdic& s) const {
        if (s.prime() != spec_.p || s.precision() != spec_.N)
            throw spec_mismatch("IwElem: scalar lives in a different ring");
        IwElem r(spec_);
        std::uint64_t m = spec_.modulus();
        for (const auto& [e, c] : terms_)
            r.add_residue(e, detail::mul_mod(c, s.residue(), m));
        return r;
    }

    IwElem scaled(std::int64_t s) const { return *this * spec_.scalar(s); }

    IwElem pow(std::uint32_t k) const {
        IwElem r = one(spec_);
        IwElem b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const IwElem& o) const { return spec_ == o.spec_ && terms_ == o.terms_; }
    bool operator!=(const IwElem& o) const { return !(*this == o); }

    static std::uint32_t total(const Expo& e) {
        return std::accumulate(e.begin(), e.end(), std::uint32_t(0));
    }

  private:
    void check_expo(const Expo& e) const {
        if (e.size() != spec_.dims())
            throw std::invalid_argument("IwElem: exponent arity mismatch");
        if (total(e) > spec_.D)
            throw std::invalid_argument("IwElem: total degree exceeds cap");
    }

    void require_same(const IwElem& o) const {
        if (spec_ != o.spec_)
            throw spec_mismatch("IwElem: operands have different ActionSpecs");
    }

    ActionSpec spec_;
    TermMap terms_;
};

/** Image under U_i -> 0 for all i. */
inline PAdic augment(const IwElem& a) {
    return a.coeff(IwElem::Expo(a.spec().dims(), 0));
}

/** Smallest coefficient valuation (the p-content); errors on the zero element. */
inline std::uint32_t content(const IwElem& a) {
    if (a.is_zero())
        throw zero_element("content: zero element");
    std::uint32_t mu = a.spec().N;
    for (const auto& [e, c] : a.terms())
        mu = std::min(mu, PAdic(a.spec().p, a.spec().N,
                                static_cast<std::int64_t>(c)).valuation());
    return mu;
}

/**
 * Divides out p^content(a) coefficientwise (exact integer division of
 * canonical residues).  Multiplying back by p^mu reproduces a exactly.
 */
inline IwElem strip_content(const IwElem& a, std::uint32_t mu) {
    std::uint64_t q = detail::checked_pow(a.spec().p, mu);
    IwElem r(a.spec());
    for (const auto& [e, c] : a.terms())
        r.add_residue(e, c / q);
    return r;
}

/**
 * Ring substitution U_i -> images[i].  Each image must have zero
 * augmentation so the substitution respects the degree-cap ideal.
 */
inline IwElem substituted(const IwElem& a, const std::vector<IwElem>& images) {
    const ActionSpec& src = a.spec();
    if (images.size() != src.dims())
        throw std::invalid_argument("substituted: need one image per variable");
    const ActionSpec& dst = images.empty() ? src : images.front().spec();
    for (const IwElem& g : images) {
        if (g.spec() != dst)
            throw spec_mismatch("substituted: images have inconsistent ActionSpecs");
        if (!augment(g).is_zero())
            throw std::invalid_argument("substituted: image has nonzero augmentation");
    }

    std::vector<std::uint32_t> max_e(src.dims(), 0);
    for (const auto& [e, c] : a.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            max_e[i] = std::max(max_e[i], e[i]);

    // powers[i][k] = images[i]^k, built incrementally.
    std::vector<std::vector<IwElem>> powers(src.dims());
    for (std::size_t i = 0; i < powers.size(); ++i) {
        powers[i].push_back(IwElem::one(dst));
        for (std::uint32_t k = 1; k <= max_e[i]; ++k)
            powers[i].push_back(powers[i].back() * images[i]);
    }

    IwElem out(dst);
    for (const auto& [e, c] : a.terms()) {
        IwElem t = IwElem::constant(dst, PAdic(dst.p, dst.N, static_cast<std::int64_t>(c)));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * powers[i][e[i]];
        out = out + t;
    }
    return out;
}

namespace detail {

// (1 + U_i)^(-1) - 1 = -U_i + U_i^2 - ... truncated at D.
inline IwElem inverted_variable(const ActionSpec& spec, std::uint32_t i) {
    IwElem r(spec);
    IwElem::Expo e(spec.dims(), 0);
    for (std::uint32_t k = 1; k <= spec.D; ++k) {
        e[i] = k;
        r.add_term(e, k % 2 ? -1 : 1);
    }
    return r;
}

} // namespace detail

/**
 * The inversion involution: U_i -> (1+U_i)^(-1) - 1 for every variable,
 * i.e. <gamma_i> -> <gamma_i>^(-1).  A ring automorphism of order 2.
 */
inline IwElem iota(const IwElem& a) {
    const ActionSpec& spec = a.spec();
    std::vector<IwElem> images;
    images.reserve(spec.dims());
    for (std::uint32_t i = 0; i < spec.dims(); ++i)
        images.push_back(detail::inverted_variable(spec, i));
    return substituted(a, images);
}

/**
 * The signed involution: identity on plus variables, inversion on minus
 * variables.  Commutes with iota.
 */
inline IwElem sigma(const IwElem& a) {
    const ActionSpec& spec = a.spec();
    std::vector<IwElem> images;
    images.reserve(spec.dims());
    for (std::uint32_t i = 0; i < spec.dims(); ++i)
        images.push_back(spec.signature[i] == Sign::plus
                             ? IwElem::variable(spec, i)
                             : detail::inverted_variable(spec, i));
    return substituted(a, images);
}

inline IwElem sigma_iota(const IwElem& a) { return sigma(iota(a)); }

/**
 * Kills every variable of the opposite signature and re-indexes the rest;
 * the result lives over spec().restricted(s).
 */
inline IwElem specialize(const IwElem& a, Sign s) {
    const ActionSpec& src = a.spec();
    ActionSpec dst = src.restricted(s);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < src.signature.size(); ++i)
        if (src.signature[i] == s) keep.push_back(i);

    IwElem out(dst);
    for (const auto& [e, c] : a.terms()) {
        bool killed = false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (src.signature[i] != s && e[i] > 0) { killed = true; break; }
        if (killed) continue;
        IwElem::Expo f(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) f[j] = e[keep[j]];
        out.add_residue(f, c);
    }
    return out;
}

namespace detail {

// C(e, k) mod p^N for a p-adic integer exponent e given at guard precision.
// The numerator e(e-1)...(e-k+1) is accumulated mod p^(N+G); dividing by
// k! = p^v * u costs at most v <= v_p(D!) = G - 1 digits, so the result is
// still exact mod p^N.
class BinomialSeries {
  public:
    BinomialSeries(const ActionSpec& spec, const PAdic& e)
        : p_(spec.p), gmod_(spec.guard_modulus()), mod_(spec.modulus()),
          e_(e.residue()), num_(1), fact_unit_(1), fact_val_(0), k_(0),
          current_(1 % gmod_)
    {
        if (e.prime() != spec.p || e.precision() != spec.guard_precision())
            throw spec_mismatch("grouplike: exponent must be given at guard precision");
    }

    // C(e, k) mod p^N for the current k, then advance to k+1.
    std::uint64_t next() {
        std::uint64_t c = current_ % mod_;
        ++k_;
        num_ = mul_mod(num_, sub_mod(e_, (k_ - 1) % gmod_, gmod_), gmod_);
        std::uint64_t f = k_;
        while (f % p_ == 0) { f /= p_; ++fact_val_; }
        fact_unit_ = mul_mod(fact_unit_, f % gmod_, gmod_);
        std::uint64_t pv = 1;
        for (std::uint32_t i = 0; i < fact_val_; ++i) pv *= p_;
        if (num_ % pv != 0)
            throw std::logic_error("BinomialSeries: numerator valuation below v_p(k!)");
        current_ = mul_mod(num_ / pv, inv_mod(fact_unit_, gmod_), gmod_);
        return c;
    }

  private:
    std::uint64_t p_, gmod_, mod_, e_, num_, fact_unit_;
    std::uint32_t fact_val_, k_;
    std::uint64_t current_;
};

} // namespace detail

/**
 * The grouplike element prod_i <gamma_i>^(e_i) = prod_i (1+U_i)^(e_i) for
 * p-adic integer exponents e_i, via the binomial series.  Exponents are
 * taken mod p^(N+guard); the guard digits make every binomial coefficient
 * C(e_i, k), k <= D, exact mod p^N, so grouplike is an exact homomorphism:
 * grouplike(e) * grouplike(e') = grouplike(e + e').
 */
inline IwElem grouplike(const ActionSpec& spec, const std::vector<PAdic>& e) {
    if (e.size() != spec.dims())
        throw std::invalid_argument("grouplike: need one exponent per variable");
    IwElem out = IwElem::one(spec);
    for (std::uint32_t i = 0; i < spec.dims(); ++i) {
        detail::BinomialSeries bin(spec, e[i]);
        IwElem series(spec);
        IwElem::Expo expo(spec.dims(), 0);
        for (std::uint32_t k = 0; k <= spec.D; ++k) {
            expo[i] = k;
            series.add_residue(expo, bin.next());
        }
        out = out * series;
    }
    return out;
}

inline IwElem grouplike(const ActionSpec& spec, const std::vector<std::int64_t>& e) {
    std::vector<PAdic> v;
    v.reserve(e.size());
    for (std::int64_t x : e)
        v.emplace_back(spec.p, spec.guard_precision(), x);
    return grouplike(spec, v);
}

// Dense univariate view, used by layer reduction and Weierstrass preparation.

inline std::vector<std::uint64_t> to_dense(const IwElem& a) {
    if (a.spec().dims() != 1)
        throw std::invalid_argument("to_dense: univariate elements only");
    std::vector<std::uint64_t> c(a.spec().D + 1, 0);
    for (const auto& [e, v] : a.terms())
        c[e[0]] = v;
    return c;
}

inline IwElem from_dense(const ActionSpec& spec, const std::vector<std::uint64_t>& c) {
    if (spec.dims() != 1)
        throw std::invalid_argument("from_dense: univariate specs only");
    IwElem r(spec);
    for (std::size_t k = 0; k < c.size() && k <= spec.D; ++k)
        r.add_residue({static_cast<std::uint32_t>(k)}, c[k] % spec.modulus());
    return r;
}

} // namespace iwa

#endif
