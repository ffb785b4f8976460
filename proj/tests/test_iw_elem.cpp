#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "iwa/iw_elem.hpp"

using iwa::ActionSpec;
using iwa::IwElem;
using iwa::PAdic;
using iwa::Sign;

namespace {

const ActionSpec& spec_pm() {
    static const ActionSpec s(3, 6, 12, "+-");
    return s;
}

const ActionSpec& spec_u() {
    static const ActionSpec s(3, 6, 12, "+");
    return s;
}

} // namespace

TEST_CASE("action spec validation", "[elem]") {
    REQUIRE_THROWS_AS(ActionSpec(2, 6, 12, "+-"), std::invalid_argument);
    REQUIRE_THROWS_AS(ActionSpec(9, 6, 12, "+-"), std::invalid_argument);
    REQUIRE_THROWS_AS(ActionSpec(3, 0, 12, "+-"), std::invalid_argument);
    REQUIRE_THROWS_AS(ActionSpec(3, 6, 1, "+-"), std::invalid_argument);
    REQUIRE_THROWS_AS(ActionSpec(3, 6, 12, ""), std::invalid_argument);
    REQUIRE_THROWS_AS(ActionSpec(3, 6, 12, "+x"), iwa::parse_error);
}

TEST_CASE("guard precision covers the binomial denominators", "[elem]") {
    REQUIRE(spec_pm().guard() == 6);
    REQUIRE(spec_pm().guard_precision() == 12);
    REQUIRE(ActionSpec(5, 6, 12, "+-").guard() == 3);
    REQUIRE(ActionSpec(11, 6, 12, "+-").guard() == 2);
}

TEST_CASE("spec signature helpers", "[elem]") {
    const ActionSpec s(3, 6, 12, "++-");
    REQUIRE(s.dims() == 3);
    REQUIRE(s.count(Sign::plus) == 2);
    REQUIRE(s.count(Sign::minus) == 1);
    REQUIRE(s.signature_string() == "++-");
    REQUIRE(s.restricted(Sign::minus).signature_string() == "-");
    REQUIRE(s.restricted(Sign::plus).signature_string() == "++");
    REQUIRE_THROWS_AS(ActionSpec(3, 6, 12, "+").restricted(Sign::minus),
                      std::invalid_argument);
    REQUIRE(s.modulus() == 729);
}

TEST_CASE("monomial arithmetic in the truncated ring", "[elem]") {
    const ActionSpec& s = spec_pm();
    IwElem one = IwElem::one(s);
    IwElem S = IwElem::variable(s, 0);
    IwElem T = IwElem::variable(s, 1);

    IwElem prod = (one + S) * (one + T);
    REQUIRE(prod.coeff({0, 0}).residue() == 1);
    REQUIRE(prod.coeff({1, 0}).residue() == 1);
    REQUIRE(prod.coeff({0, 1}).residue() == 1);
    REQUIRE(prod.coeff({1, 1}).residue() == 1);
    REQUIRE(prod.degree() == 2);

    REQUIRE_THROWS_AS(IwElem::variable(s, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(IwElem::monomial(s, {13, 0}, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(IwElem::monomial(s, {1}, 1), std::invalid_argument);
}

TEST_CASE("products beyond the degree cap are dropped", "[elem]") {
    const ActionSpec& s = spec_pm();
    IwElem a = IwElem::monomial(s, {7, 0}, 1);
    IwElem b = IwElem::monomial(s, {6, 0}, 1);
    REQUIRE((a * b).is_zero());

    IwElem g = IwElem::one(s) + IwElem::variable(s, 0);
    IwElem p13 = g.pow(13);
    REQUIRE(p13.degree() == 12);
    REQUIRE(p13.coeff({12, 0}).residue() == 13);
}

TEST_CASE("addition cancels exactly", "[elem]") {
    const ActionSpec& s = spec_pm();
    IwElem a = IwElem::monomial(s, {2, 1}, 400);
    IwElem b = IwElem::monomial(s, {2, 1}, 329);
    REQUIRE((a + b).is_zero());
    REQUIRE((a - a).is_zero());
    REQUIRE(a + (-a) == IwElem::zero(s));
}

TEST_CASE("scalar multiplication checks the ring", "[elem]") {
    const ActionSpec& s = spec_pm();
    IwElem a = IwElem::one(s);
    REQUIRE((a * PAdic(3, 6, 5)).coeff({0, 0}).residue() == 5);
    REQUIRE_THROWS_AS(a * PAdic(3, 5, 1), iwa::spec_mismatch);
    REQUIRE_THROWS_AS(a * PAdic(5, 6, 1), iwa::spec_mismatch);
    REQUIRE_THROWS_AS(IwElem::constant(s, PAdic(5, 6, 1)), iwa::spec_mismatch);
}

TEST_CASE("inversion involution expands the geometric series", "[elem]") {
    const ActionSpec& s = spec_u();
    IwElem U = IwElem::variable(s, 0);
    IwElem inv = iwa::iota(U);
    for (std::uint32_t k = 1; k <= 12; ++k)
        REQUIRE(inv.coeff({k}).residue() == (k % 2 ? 728u : 1u));
    REQUIRE(inv.coeff({0}).is_zero());

    // (1+U) * (1 + iota(U)) = 1 exactly in the truncated ring.
    IwElem one = IwElem::one(s);
    REQUIRE((one + U) * (one + inv) == one);
}

TEST_CASE("involutions square to the identity", "[elem]") {
    const ActionSpec& s = spec_pm();
    IwElem a = IwElem::monomial(s, {2, 1}, 17) + IwElem::monomial(s, {0, 3}, 700) +
               IwElem::constant(s, 5);
    REQUIRE(iwa::iota(iwa::iota(a)) == a);
    REQUIRE(iwa::sigma(iwa::sigma(a)) == a);
    REQUIRE(iwa::sigma_iota(a) == iwa::iota(iwa::sigma(a)));
}

TEST_CASE("sigma fixes plus variables and inverts minus variables", "[elem]") {
    const ActionSpec& s = spec_pm();
    IwElem S = IwElem::variable(s, 0);
    IwElem T = IwElem::variable(s, 1);
    REQUIRE(iwa::sigma(S) == S);

    IwElem sT = iwa::sigma(T);
    for (std::uint32_t k = 1; k <= 12; ++k)
        REQUIRE(sT.coeff({0, k}).residue() == (k % 2 ? 728u : 1u));
}

TEST_CASE("specialization kills the opposite signature and re-indexes", "[elem]") {
    const ActionSpec s(3, 6, 12, "-+");
    IwElem a = IwElem::monomial(s, {0, 2}, 1) + IwElem::monomial(s, {1, 0}, 1) +
               IwElem::constant(s, 5);

    IwElem ap = iwa::specialize(a, Sign::plus);
    REQUIRE(ap.spec().signature_string() == "+");
    REQUIRE(ap.coeff({2}).residue() == 1);
    REQUIRE(ap.coeff({0}).residue() == 5);
    REQUIRE(ap.coeff({1}).is_zero());

    IwElem am = iwa::specialize(a, Sign::minus);
    REQUIRE(am.spec().signature_string() == "-");
    REQUIRE(am.coeff({1}).residue() == 1);
    REQUIRE(am.coeff({0}).residue() == 5);
    REQUIRE(am.coeff({2}).is_zero());
}

TEST_CASE("augmentation reads the constant term", "[elem]") {
    const ActionSpec& s = spec_pm();
    IwElem a = IwElem::constant(s, 7) + IwElem::variable(s, 0);
    REQUIRE(iwa::augment(a).residue() == 7);
    REQUIRE(iwa::augment(IwElem::zero(s)).is_zero());
}

TEST_CASE("content strips the shared power of p", "[elem]") {
    const ActionSpec& s = spec_u();
    IwElem a = IwElem::monomial(s, {1}, 3) + IwElem::constant(s, 9);
    REQUIRE(iwa::content(a) == 1);
    IwElem g = iwa::strip_content(a, 1);
    REQUIRE(g.coeff({1}).residue() == 1);
    REQUIRE(g.coeff({0}).residue() == 3);
    REQUIRE(g.scaled(3) == a);
    REQUIRE_THROWS_AS(iwa::content(IwElem::zero(s)), iwa::zero_element);
}

TEST_CASE("grouplike with small integer exponents", "[elem]") {
    const ActionSpec& s = spec_u();
    IwElem U = IwElem::variable(s, 0);
    REQUIRE(iwa::grouplike(s, std::vector<std::int64_t>{1}) == IwElem::one(s) + U);

    // (1+U)^7 has the seventh binomial row and nothing beyond degree 7.
    IwElem g7 = iwa::grouplike(s, std::vector<std::int64_t>{7});
    mpz_class bin;
    for (std::uint32_t k = 0; k <= 12; ++k) {
        mpz_bin_uiui(bin.get_mpz_t(), 7, k);
        REQUIRE(g7.coeff({k}).residue() == mpz_class(bin % 729).get_ui());
    }

    // Negative exponent -2: coefficient of U^k is (-1)^k (k+1).
    IwElem gm2 = iwa::grouplike(s, std::vector<std::int64_t>{-2});
    for (std::uint32_t k = 0; k <= 12; ++k) {
        std::int64_t c = (k % 2 ? -1 : 1) * static_cast<std::int64_t>(k + 1);
        REQUIRE(gm2.coeff({k}) == PAdic(3, 6, c));
    }
}

TEST_CASE("grouplike with a large exponent matches exact binomials", "[elem]") {
    const ActionSpec& s = spec_u();
    IwElem g = iwa::grouplike(s, std::vector<std::int64_t>{1000});
    mpz_class bin;
    for (std::uint32_t k = 0; k <= 12; ++k) {
        mpz_bin_uiui(bin.get_mpz_t(), 1000, k);
        REQUIRE(g.coeff({k}).residue() == mpz_class(bin % 729).get_ui());
    }
}

TEST_CASE("grouplike is an exact homomorphism", "[elem]") {
    const ActionSpec& s = spec_pm();
    auto g = [&](std::int64_t a, std::int64_t b) {
        return iwa::grouplike(s, std::vector<std::int64_t>{a, b});
    };
    REQUIRE(g(5, 2) * g(-3, 4) == g(2, 6));
    REQUIRE(g(7, -7) * g(-7, 7) == IwElem::one(s));
}

TEST_CASE("involutions act on grouplike elements by exponent signs", "[elem]") {
    const ActionSpec& s = spec_pm();
    auto g = [&](std::int64_t a, std::int64_t b) {
        return iwa::grouplike(s, std::vector<std::int64_t>{a, b});
    };
    REQUIRE(iwa::iota(g(2, 3)) == g(-2, -3));
    REQUIRE(iwa::sigma(g(2, 3)) == g(2, -3));
    REQUIRE(iwa::sigma_iota(g(2, 3)) == g(-2, 3));
}

TEST_CASE("grouplike validates exponent shape and precision", "[elem]") {
    const ActionSpec& s = spec_pm();
    REQUIRE_THROWS_AS(iwa::grouplike(s, std::vector<std::int64_t>{1}),
                      std::invalid_argument);
    std::vector<PAdic> wrong{PAdic(3, 6, 1), PAdic(3, 6, 1)};
    REQUIRE_THROWS_AS(iwa::grouplike(s, wrong), iwa::spec_mismatch);
}

TEST_CASE("substitution validates its images", "[elem]") {
    const ActionSpec& s = spec_pm();
    IwElem a = IwElem::variable(s, 0);
    std::vector<IwElem> unit_image{IwElem::one(s), IwElem::variable(s, 1)};
    REQUIRE_THROWS_AS(iwa::substituted(a, unit_image), std::invalid_argument);
    std::vector<IwElem> short_list{IwElem::variable(s, 0)};
    REQUIRE_THROWS_AS(iwa::substituted(a, short_list), std::invalid_argument);
}

TEST_CASE("dense conversion round trips univariate elements", "[elem]") {
    const ActionSpec& s = spec_u();
    IwElem a = IwElem::monomial(s, {3}, 100) + IwElem::monomial(s, {7}, 650) +
               IwElem::constant(s, 2);
    std::vector<std::uint64_t> d = iwa::to_dense(a);
    REQUIRE(d.size() == 13);
    REQUIRE(d[0] == 2);
    REQUIRE(d[3] == 100);
    REQUIRE(d[7] == 650);
    REQUIRE(iwa::from_dense(s, d) == a);

    REQUIRE_THROWS_AS(iwa::to_dense(IwElem::one(spec_pm())), std::invalid_argument);
    REQUIRE_THROWS_AS(iwa::from_dense(spec_pm(), d), std::invalid_argument);
}
