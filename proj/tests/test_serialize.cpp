#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "iwa/organizing.hpp"
#include "iwa/selfcheck.hpp"
#include "iwa/serialize.hpp"

using iwa::ActionSpec;
using iwa::IwElem;
using iwa::Sign;

namespace {

const ActionSpec& spec_pm() {
    static const ActionSpec s(3, 6, 12, "+-");
    return s;
}

// <gamma_minus> - <gamma_minus>^(-1), the one-entry working example.
IwElem minus_difference(const ActionSpec& s) {
    return iwa::grouplike(s, std::vector<std::int64_t>{0, 1}) -
           iwa::grouplike(s, std::vector<std::int64_t>{0, -1});
}

} // namespace

TEST_CASE("header prints and parses canonically", "[serialize]") {
    REQUIRE(iwa::print_header(spec_pm()) == "iwa v1 p=3 N=6 D=12 sig=+-");
    REQUIRE(iwa::parse_header("iwa v1 p=3 N=6 D=12 sig=+-") == spec_pm());
    REQUIRE(iwa::parse_header(iwa::print_header(ActionSpec(11, 4, 8, "-+-"))) ==
            ActionSpec(11, 4, 8, "-+-"));
}

TEST_CASE("header parsing rejects malformed lines", "[serialize]") {
    REQUIRE_THROWS_AS(iwa::parse_header("iwb v1 p=3 N=6 D=12 sig=+-"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_header("iwa v2 p=3 N=6 D=12 sig=+-"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_header("iwa v1 q=3 N=6 D=12 sig=+-"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_header("iwa v1 p=x N=6 D=12 sig=+-"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_header("iwa v1 p=3 N=6 D=12 sig=+- extra"),
                      iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_header("iwa v1 p=3 N=6 D=12 sig=+x"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_header("iwa v1 p=3 N=6 D=12"), iwa::parse_error);
    // Structurally fine but an invalid ring (even prime).
    REQUIRE_THROWS_AS(iwa::parse_header("iwa v1 p=2 N=6 D=12 sig=+-"), iwa::parse_error);
}

TEST_CASE("element text uses balanced coefficients in ascending order", "[serialize]") {
    const ActionSpec& s = spec_pm();
    const IwElem h = minus_difference(s);
    REQUIRE(iwa::print_elem(h) ==
            "2*[0,1] -1*[0,2] 1*[0,3] -1*[0,4] 1*[0,5] -1*[0,6] 1*[0,7] -1*[0,8] "
            "1*[0,9] -1*[0,10] 1*[0,11] -1*[0,12]");
    REQUIRE(iwa::print_elem(IwElem::zero(s)).empty());
    REQUIRE(iwa::parse_elem(s, iwa::print_elem(h)) == h);
}

TEST_CASE("element parsing round trips and accepts blank as zero", "[serialize]") {
    const ActionSpec& s = spec_pm();
    REQUIRE(iwa::parse_elem(s, "").is_zero());
    REQUIRE(iwa::parse_elem(s, "   ").is_zero());
    const IwElem a = iwa::parse_elem(s, "-5*[0,0] 7*[2,1]");
    REQUIRE(a.coeff({0, 0}).balanced() == -5);
    REQUIRE(a.coeff({2, 1}).residue() == 7);
    REQUIRE(iwa::parse_elem(s, iwa::print_elem(a)) == a);
}

TEST_CASE("element parsing rejects malformed terms", "[serialize]") {
    const ActionSpec& s = spec_pm();
    REQUIRE_THROWS_AS(iwa::parse_elem(s, "3[0,0]"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_elem(s, "a*[0,0]"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_elem(s, "3*0,0]"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_elem(s, "3*[0,x]"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_elem(s, "3*[0]"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_elem(s, "3*[0,0,0]"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_elem(s, "3*[7,6]"), iwa::parse_error);
    REQUIRE_THROWS_AS(iwa::parse_elem(s, "3*"), iwa::parse_error);
}

TEST_CASE("element files read header then one element per line", "[serialize]") {
    std::istringstream in("iwa v1 p=3 N=6 D=12 sig=+-\n1*[1,0]\n\n-2*[0,3]\n");
    auto [spec, elems] = iwa::read_elements(in);
    REQUIRE(spec == spec_pm());
    REQUIRE(elems.size() == 3);
    REQUIRE(elems[0] == IwElem::variable(spec, 0));
    REQUIRE(elems[1].is_zero());
    REQUIRE(elems[2].coeff({0, 3}).balanced() == -2);

    std::istringstream empty("");
    REQUIRE_THROWS_AS(iwa::read_elements(empty), iwa::parse_error);
}

TEST_CASE("matrix files round trip bit-exactly", "[serialize]") {
    const ActionSpec& s = spec_pm();
    const iwa::OrganizingMatrix H(s, 1, {minus_difference(s)});
    const std::string text = iwa::print_matrix(H);
    REQUIRE(text ==
            "iwa v1 p=3 N=6 D=12 sig=+-\n"
            "matrix r=1\n"
            "entry 1 1 : 2*[0,1] -1*[0,2] 1*[0,3] -1*[0,4] 1*[0,5] -1*[0,6] 1*[0,7] "
            "-1*[0,8] 1*[0,9] -1*[0,10] 1*[0,11] -1*[0,12]\n");

    std::istringstream in(text);
    const iwa::OrganizingMatrix back = iwa::parse_matrix(in);
    REQUIRE(back.size() == 1);
    REQUIRE(back.at(0, 0) == H.at(0, 0));
    REQUIRE(iwa::print_matrix(back) == text);
}

TEST_CASE("seeded matrices survive the text round trip", "[serialize]") {
    for (int t = 0; t < 10; ++t) {
        const std::uint64_t p = t % 2 ? 3 : 5;
        const ActionSpec s(p, 6, 12, "+-");
        iwa::Rng rng(iwa::mix_seed(424242, t));
        const iwa::OrganizingMatrix H =
            iwa::random_organizing(rng, s, 1 + t % 3, iwa::MatrixFlavor::generic);
        std::istringstream in(iwa::print_matrix(H));
        const iwa::OrganizingMatrix back = iwa::parse_matrix(in);
        REQUIRE(back.size() == H.size());
        for (std::size_t i = 0; i < H.size(); ++i)
            for (std::size_t j = 0; j < H.size(); ++j)
                REQUIRE(back.at(i, j) == H.at(i, j));
    }
}

TEST_CASE("matrix parsing rejects structural damage", "[serialize]") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return iwa::parse_matrix(in);
    };
    const std::string header = "iwa v1 p=3 N=6 D=12 sig=+-\n";

    REQUIRE_THROWS_AS(parse(""), iwa::parse_error);
    REQUIRE_THROWS_AS(parse(header), iwa::parse_error);
    REQUIRE_THROWS_AS(parse(header + "matrix\n"), iwa::parse_error);
    REQUIRE_THROWS_AS(parse(header + "matrix r=0\n"), iwa::parse_error);
    REQUIRE_THROWS_AS(parse(header + "matrix r=65\n"), iwa::parse_error);
    REQUIRE_THROWS_AS(parse(header + "matrix r=x\n"), iwa::parse_error);
    REQUIRE_THROWS_AS(parse(header + "matrix r=1\n"), iwa::parse_error);
    REQUIRE_THROWS_AS(parse(header + "matrix r=1\nrow 1 1 : \n"), iwa::parse_error);
    REQUIRE_THROWS_AS(parse(header + "matrix r=1\nentry 2 1 : \n"), iwa::parse_error);
    REQUIRE_THROWS_AS(
        parse(header + "matrix r=2\nentry 1 1 : \nentry 1 1 : \nentry 2 1 : \nentry 2 2 : \n"),
        iwa::parse_error);
}

TEST_CASE("matrix parsing enforces the structural invariants", "[serialize]") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return iwa::parse_matrix(in);
    };
    const std::string header = "iwa v1 p=3 N=6 D=12 sig=+-\n";

    // U_1 is not sent to its negative by inversion, so [[U_1]] is not skew.
    REQUIRE_THROWS_AS(parse(header + "matrix r=1\nentry 1 1 : 1*[1,0]\n"),
                      iwa::not_skew_hermitian);

    // Skew-Hermitian but with a unit constant term in the corner entries.
    const std::string unit_matrix = header +
                                    "matrix r=2\n"
                                    "entry 1 1 : \n"
                                    "entry 1 2 : 1*[0,0]\n"
                                    "entry 2 1 : -1*[0,0]\n"
                                    "entry 2 2 : \n";
    REQUIRE_THROWS_AS(parse(unit_matrix), iwa::not_in_maximal_ideal);
}
