#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "iwa/growth_cert.hpp"
#include "iwa/organizing.hpp"

using iwa::ActionSpec;
using iwa::GrowthCertificate;
using iwa::IwElem;
using iwa::OrganizingMatrix;
using iwa::Sign;

namespace {

const ActionSpec& spec_pm() {
    static const ActionSpec s(3, 6, 12, "+-");
    return s;
}

IwElem gpm(const ActionSpec& s, std::int64_t a, std::int64_t b) {
    return iwa::grouplike(s, std::vector<std::int64_t>{a, b});
}

// <gamma_minus> - <gamma_minus>^-1: iota- and sigma-antisymmetric, vanishes
// under the plus specialization.
IwElem minus_difference(const ActionSpec& s) { return gpm(s, 0, 1) - gpm(s, 0, -1); }

// <gamma_plus> - <gamma_plus>^-1: iota-antisymmetric, sigma-invariant.
IwElem plus_difference(const ActionSpec& s) { return gpm(s, 1, 0) - gpm(s, -1, 0); }

OrganizingMatrix headline(const ActionSpec& s) {
    return OrganizingMatrix(s, 1, {minus_difference(s)});
}

std::string lines(std::initializer_list<const char*> ls) {
    std::string out;
    for (const char* l : ls) {
        out += l;
        out += '\n';
    }
    return out;
}

} // namespace

TEST_CASE("parity agrees with the residual corank", "[growthcert]") {
    const ActionSpec& s = spec_pm();
    REQUIRE(iwa::parity(headline(s)) == 1);
    const OrganizingMatrix flat(
        s, 2,
        {IwElem::zero(s), IwElem::constant(s, 3), IwElem::constant(s, -3), IwElem::zero(s)});
    REQUIRE(iwa::parity(flat) == 0);
    REQUIRE(static_cast<std::size_t>(iwa::parity(flat)) == iwa::residual_corank(flat) % 2);
}

TEST_CASE("verify_layers walks every level up to the requested depth", "[growthcert]") {
    const ActionSpec& s = spec_pm();
    const OrganizingMatrix H = headline(s);
    const std::vector<iwa::LayerRankReport> reps = iwa::verify_layers(H, Sign::minus, 3);
    REQUIRE(reps.size() == 4);
    std::uint64_t bound = 1;
    for (std::uint32_t k = 0; k < 4; ++k) {
        REQUIRE(reps[k].sign == Sign::minus);
        REQUIRE(reps[k].level == k);
        REQUIRE(reps[k].bound == bound);
        bound *= 3;
    }
}

TEST_CASE("certificate for the rank-one forced-plus instance", "[growthcert]") {
    const ActionSpec& s = spec_pm();
    const GrowthCertificate cert = iwa::certify(headline(s));
    REQUIRE(cert.r == 1);
    REQUIRE(cert.torsion);
    REQUIRE(cert.base_corank == 1);
    REQUIRE(cert.parity == 1);
    REQUIRE(cert.signs.has_value());
    REQUIRE(cert.signs->epsilon_sigma == -1);
    REQUIRE(cert.forced == std::vector<Sign>{Sign::plus});
    REQUIRE(cert.is_forced(Sign::plus));
    REQUIRE_FALSE(cert.is_forced(Sign::minus));
    REQUIRE(cert.specialization_vanishes.at(Sign::plus));
    REQUIRE(cert.layers.size() == 4);
    REQUIRE(cert.k_max == 1);

    REQUIRE(iwa::print_certificate(cert) ==
            lines({"r: 1",
                   "torsion: yes (to precision p^6, deg 12)",
                   "base_corank: 1",
                   "parity: odd",
                   "epsilon_iota: -1",
                   "epsilon_sigma: -1",
                   "epsilon_sigma_iota: +1",
                   "mu: 0",
                   "forced: +",
                   "vanishes sign=+: yes",
                   "vanishes sign=-: no",
                   "layer sign=+ k=0 corank=1 bound=1 ok",
                   "layer sign=+ k=1 corank=3 bound=3 ok",
                   "layer sign=- k=0 corank=1 bound=1 ok",
                   "layer sign=- k=1 corank=1 bound=3 low",
                   "caveat: torsion and corank judgments hold at precision p^6, deg 12; "
                   "stored zeros are treated as exact"}));
}

TEST_CASE("certificate for the mirrored forced-minus instance", "[growthcert]") {
    const ActionSpec& s = spec_pm();
    const OrganizingMatrix H(s, 1, {plus_difference(s)});
    const GrowthCertificate cert = iwa::certify(H);
    REQUIRE(cert.forced == std::vector<Sign>{Sign::minus});
    REQUIRE(iwa::print_certificate(cert) ==
            lines({"r: 1",
                   "torsion: yes (to precision p^6, deg 12)",
                   "base_corank: 1",
                   "parity: odd",
                   "epsilon_iota: -1",
                   "epsilon_sigma: +1",
                   "epsilon_sigma_iota: -1",
                   "mu: 0",
                   "forced: -",
                   "vanishes sign=+: no",
                   "vanishes sign=-: yes",
                   "layer sign=+ k=0 corank=1 bound=1 ok",
                   "layer sign=+ k=1 corank=1 bound=3 low",
                   "layer sign=- k=0 corank=1 bound=1 ok",
                   "layer sign=- k=1 corank=3 bound=3 ok",
                   "caveat: torsion and corank judgments hold at precision p^6, deg 12; "
                   "stored zeros are treated as exact"}));
}

TEST_CASE("a vanishing determinant forces both signs", "[growthcert]") {
    const ActionSpec& s = spec_pm();
    const OrganizingMatrix H(s, 1, {IwElem::zero(s)});
    const GrowthCertificate cert = iwa::certify(H);
    REQUIRE_FALSE(cert.torsion);
    REQUIRE_FALSE(cert.signs.has_value());
    REQUIRE(cert.forced == std::vector<Sign>({Sign::plus, Sign::minus}));
    REQUIRE(iwa::print_certificate(cert) ==
            lines({"r: 1",
                   "torsion: no (to precision p^6, deg 12)",
                   "base_corank: 1",
                   "parity: odd",
                   "forced: both",
                   "vanishes sign=+: yes",
                   "vanishes sign=-: yes",
                   "layer sign=+ k=0 corank=1 bound=1 ok",
                   "layer sign=+ k=1 corank=3 bound=3 ok",
                   "layer sign=- k=0 corank=1 bound=1 ok",
                   "layer sign=- k=1 corank=3 bound=3 ok",
                   "caveat: determinant vanishes at precision p^6, deg 12; "
                   "treating the module as non-torsion",
                   "caveat: torsion and corank judgments hold at precision p^6, deg 12; "
                   "stored zeros are treated as exact"}));
}

TEST_CASE("an even instance with scalar determinant forces nothing", "[growthcert]") {
    const ActionSpec& s = spec_pm();
    const OrganizingMatrix H(
        s, 2,
        {IwElem::zero(s), IwElem::constant(s, 3), IwElem::constant(s, -3), IwElem::zero(s)});
    const GrowthCertificate cert = iwa::certify(H);
    REQUIRE(cert.torsion);
    REQUIRE(cert.forced.empty());
    REQUIRE(cert.signs->mu == 2);
    REQUIRE(iwa::print_certificate(cert) ==
            lines({"r: 2",
                   "torsion: yes (to precision p^6, deg 12)",
                   "base_corank: 0",
                   "parity: even",
                   "epsilon_iota: +1",
                   "epsilon_sigma: +1",
                   "epsilon_sigma_iota: +1",
                   "mu: 2",
                   "forced: none",
                   "vanishes sign=+: no",
                   "vanishes sign=-: no",
                   "layer sign=+ k=0 corank=0 bound=1 low",
                   "layer sign=+ k=1 corank=0 bound=3 low",
                   "layer sign=- k=0 corank=0 bound=1 low",
                   "layer sign=- k=1 corank=0 bound=3 low",
                   "caveat: no sign forced: epsilon_sigma = +1 and the residual corank is even",
                   "caveat: torsion and corank judgments hold at precision p^6, deg 12; "
                   "stored zeros are treated as exact"}));
}

TEST_CASE("an uncertifiable forced layer is reported, not silently passed",
          "[growthcert]") {
    const ActionSpec& s = spec_pm();
    // S^11 reduces at level 1 to an element of valuation 5, inside the guard
    // band of the rank computation, while its minus specialization is zero.
    const IwElem a = IwElem::variable(s, 0).pow(11);
    const OrganizingMatrix H(s, 2,
                             {IwElem::zero(s), a, -iwa::iota(a), IwElem::zero(s)});
    const GrowthCertificate cert = iwa::certify(H);
    REQUIRE_FALSE(cert.torsion);
    REQUIRE(iwa::print_certificate(cert) ==
            lines({"r: 2",
                   "torsion: no (to precision p^6, deg 12)",
                   "base_corank: 2",
                   "parity: even",
                   "forced: both",
                   "vanishes sign=+: yes",
                   "vanishes sign=-: yes",
                   "layer sign=+ k=0 corank=2 bound=1 ok",
                   "layer sign=+ k=1 corank=0 bound=3 unresolved",
                   "layer sign=- k=0 corank=2 bound=1 ok",
                   "layer sign=- k=1 corank=6 bound=3 ok",
                   "caveat: determinant vanishes at precision p^6, deg 12; "
                   "treating the module as non-torsion",
                   "caveat: torsion and corank judgments hold at precision p^6, deg 12; "
                   "stored zeros are treated as exact",
                   "caveat: forced sign + has an uncertifiable rank at layer k=1"}));
}

TEST_CASE("a block-diagonal even instance with forced plus", "[growthcert]") {
    const ActionSpec& s = spec_pm();
    const OrganizingMatrix H(
        s, 2,
        {minus_difference(s), IwElem::zero(s), IwElem::zero(s), plus_difference(s)});
    const GrowthCertificate cert = iwa::certify(H);
    REQUIRE(cert.torsion);
    REQUIRE(cert.parity == 0);
    REQUIRE(cert.forced == std::vector<Sign>{Sign::plus});
    REQUIRE(iwa::print_certificate(cert) ==
            lines({"r: 2",
                   "torsion: yes (to precision p^6, deg 12)",
                   "base_corank: 2",
                   "parity: even",
                   "epsilon_iota: +1",
                   "epsilon_sigma: -1",
                   "epsilon_sigma_iota: -1",
                   "mu: 0",
                   "forced: +",
                   "vanishes sign=+: yes",
                   "vanishes sign=-: yes",
                   "layer sign=+ k=0 corank=2 bound=1 ok",
                   "layer sign=+ k=1 corank=4 bound=3 ok",
                   "layer sign=- k=0 corank=2 bound=1 ok",
                   "layer sign=- k=1 corank=4 bound=3 ok",
                   "caveat: plus is forced by epsilon_sigma = -1 alone; "
                   "the residual corank is even",
                   "caveat: torsion and corank judgments hold at precision p^6, deg 12; "
                   "stored zeros are treated as exact"}));
}

TEST_CASE("an unresolvable base corank propagates as a precision failure",
          "[growthcert]") {
    const ActionSpec& s = spec_pm();
    const OrganizingMatrix H(s, 2,
                             {IwElem::zero(s), IwElem::constant(s, 243),
                              IwElem::constant(s, -243), IwElem::zero(s)});
    REQUIRE_THROWS_AS(iwa::certify(H), iwa::precision_exhausted);
}

TEST_CASE("depth zero keeps one layer report per sign", "[growthcert]") {
    const ActionSpec& s = spec_pm();
    const GrowthCertificate cert = iwa::certify(headline(s), 0);
    REQUIRE(cert.layers.size() == 2);
    REQUIRE(cert.layers[0].sign == Sign::plus);
    REQUIRE(cert.layers[0].level == 0);
    REQUIRE(cert.layers[1].sign == Sign::minus);
    REQUIRE(cert.layers[1].level == 0);
    REQUIRE(cert.k_max == 0);
}

TEST_CASE("certification requires one variable of each signature", "[growthcert]") {
    const ActionSpec su(3, 6, 12, "+");
    const IwElem u =
        iwa::grouplike(su, std::vector<std::int64_t>{1}) -
        iwa::grouplike(su, std::vector<std::int64_t>{-1});
    const OrganizingMatrix H(su, 1, {u});
    REQUIRE_THROWS_AS(iwa::certify(H), std::invalid_argument);
}
