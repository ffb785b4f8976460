#ifndef IWA_GROWTH_CERT_HPP
#define IWA_GROWTH_CERT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "iwa/errors.hpp"
#include "iwa/organizing.hpp"
#include "iwa/sign_cert.hpp"

namespace iwa {

/**
 * The certified output of certify(): structural data of the organizing
 * matrix (size, torsion verdict, residual corank and its parity), the
 * eigenvalue record of the symmetrized determinant when it exists, the set
 * of forced signs, per-sign specialization-vanishing flags, layer corank
 * reports for both signs at k = 0..k_max, and explicit caveats for every
 * judgment that holds only at working precision.
 */
struct GrowthCertificate {
    ActionSpec spec;
    std::size_t r;
    bool torsion;            // determinant nonzero at working precision
    std::size_t base_corank; // Q_p-corank of H(0)
    int parity;              // base_corank mod 2
    std::optional<SignRecord> signs;
    std::vector<Sign> forced; // subset of {plus, minus}, plus first
    std::map<Sign, bool> specialization_vanishes;
    std::vector<LayerRankReport> layers; // plus block then minus block, k ascending
    std::vector<std::string> caveats;
    std::uint32_t k_max;

    bool is_forced(Sign s) const {
        for (Sign f : forced)
            if (f == s) return true;
        return false;
    }
};

/** Parity (0 or 1) of the residual corank; equals r mod 2. */
inline int parity(const OrganizingMatrix& H) {
    return static_cast<int>(residual_corank(H) % 2);
}

/** Layer corank reports for one sign, k = 0..k_max. */
inline std::vector<LayerRankReport> verify_layers(const OrganizingMatrix& H, Sign s,
                                                  std::uint32_t k_max) {
    std::vector<LayerRankReport> out;
    out.reserve(k_max + 1);
    for (std::uint32_t k = 0; k <= k_max; ++k)
        out.push_back(coker_rank_at_layer(H, s, k));
    return out;
}

namespace detail {

inline void require_one_of_each(const ActionSpec& spec) {
    if (spec.dims() != 2 || spec.count(Sign::plus) != 1 || spec.count(Sign::minus) != 1)
        throw std::invalid_argument(
            "certify: spec must have exactly one plus and one minus variable");
}

} // namespace detail

/**
 * Builds the growth certificate for an organizing matrix over a spec with
 * one variable of each signature.  When the determinant is nonzero
 * ("torsion at working precision") the symmetrized determinant's
 * eigenvalues decide the forced signs:
 *
 *   epsilon_sigma = -1                 -> plus is forced (the generator dies
 *                                         under the plus specialization);
 *   epsilon_sigma = +1 and parity odd  -> minus is forced (then
 *                                         epsilon_sigma_iota = -1);
 *   epsilon_sigma = +1 and parity even -> nothing is forced.
 *
 * A vanishing determinant certifies non-torsion at working precision and
 * forces both signs.  epsilon_iota must equal (-1)^r; any other value is an
 * inconsistency between the skew-Hermitian structure and the symmetrizer.
 */
inline GrowthCertificate certify(const OrganizingMatrix& H, std::uint32_t k_max = 1) {
    detail::require_one_of_each(H.spec());
    const ActionSpec& spec = H.spec();
    const std::size_t r = H.size();

    GrowthCertificate cert{spec, r, false, 0, 0, std::nullopt, {}, {}, {}, {}, k_max};
    cert.base_corank = residual_corank(H);
    cert.parity = static_cast<int>(cert.base_corank % 2);

    const std::string prec_tag =
        "precision p^" + std::to_string(spec.N) + ", deg " + std::to_string(spec.D);

    const IwElem det = determinant(H);
    cert.torsion = !det.is_zero();

    if (!cert.torsion) {
        cert.forced = {Sign::plus, Sign::minus};
        cert.specialization_vanishes[Sign::plus] = true;
        cert.specialization_vanishes[Sign::minus] = true;
        cert.caveats.push_back(
            "determinant vanishes at " + prec_tag + "; treating the module as non-torsion");
    } else {
        SignRecord rec = symmetrize(det);
        const int expected = r % 2 ? -1 : +1;
        if (rec.epsilon_iota != expected)
            throw epsilon_iota_mismatch(
                "certify: epsilon_iota = " + std::to_string(rec.epsilon_iota) +
                " but (-1)^r = " + std::to_string(expected));

        if (rec.epsilon_sigma == -1) {
            cert.forced = {Sign::plus};
            if (cert.parity % 2 == 0)
                cert.caveats.push_back(
                    "plus is forced by epsilon_sigma = -1 alone; the residual corank is even");
        } else if (cert.parity % 2 == 1) {
            cert.forced = {Sign::minus};
        } else {
            cert.caveats.push_back(
                "no sign forced: epsilon_sigma = +1 and the residual corank is even");
        }

        cert.specialization_vanishes[Sign::plus] =
            specialize(rec.symmetrized, Sign::plus).is_zero();
        cert.specialization_vanishes[Sign::minus] =
            specialize(rec.symmetrized, Sign::minus).is_zero();
        cert.signs = std::move(rec);
    }

    for (Sign s : {Sign::plus, Sign::minus}) {
        std::vector<LayerRankReport> reps = verify_layers(H, s, k_max);
        cert.layers.insert(cert.layers.end(), reps.begin(), reps.end());
    }

    cert.caveats.push_back(
        "torsion and corank judgments hold at " + prec_tag +
        "; stored zeros are treated as exact");
    for (const LayerRankReport& rep : cert.layers)
        if (cert.is_forced(rep.sign) && !rep.satisfied)
            cert.caveats.push_back(
                std::string("forced sign ") + sign_char(rep.sign) +
                (rep.precision_ok
                     ? " misses its bound at layer k=" + std::to_string(rep.level)
                     : " has an uncertifiable rank at layer k=" + std::to_string(rep.level)));
    return cert;
}

inline std::string print_certificate(const GrowthCertificate& c) {
    std::ostringstream os;
    auto eps = [](int e) { return e > 0 ? std::string("+1") : std::string("-1"); };

    os << "r: " << c.r << '\n';
    os << "torsion: " << (c.torsion ? "yes" : "no")
       << " (to precision p^" << c.spec.N << ", deg " << c.spec.D << ")\n";
    os << "base_corank: " << c.base_corank << '\n';
    os << "parity: " << (c.parity ? "odd" : "even") << '\n';
    if (c.signs) {
        os << "epsilon_iota: " << eps(c.signs->epsilon_iota) << '\n';
        os << "epsilon_sigma: " << eps(c.signs->epsilon_sigma) << '\n';
        os << "epsilon_sigma_iota: " << eps(c.signs->epsilon_sigma_iota) << '\n';
        os << "mu: " << c.signs->mu << '\n';
    }
    os << "forced: ";
    if (c.forced.empty()) os << "none";
    else if (c.forced.size() == 2) os << "both";
    else os << sign_char(c.forced.front());
    os << '\n';
    for (Sign s : {Sign::plus, Sign::minus}) {
        auto it = c.specialization_vanishes.find(s);
        if (it != c.specialization_vanishes.end())
            os << "vanishes sign=" << sign_char(s) << ": " << (it->second ? "yes" : "no")
               << '\n';
    }
    for (const LayerRankReport& rep : c.layers)
        os << "layer sign=" << sign_char(rep.sign) << " k=" << rep.level
           << " corank=" << rep.corank << " bound=" << rep.bound
           << (rep.precision_ok ? (rep.satisfied ? " ok" : " low") : " unresolved")
           << '\n';
    for (const std::string& s : c.caveats)
        os << "caveat: " << s << '\n';
    return os.str();
}

} // namespace iwa

#endif
