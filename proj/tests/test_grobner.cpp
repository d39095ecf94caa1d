#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "findet/grobner.hpp"
#include "findet/parser.hpp"
#include "findet/ring.hpp"
#include "support/random_polys.hpp"

using namespace findet;
using testsupport::Rng;

namespace {
Poly P(const RingPtr& R, const std::string& s) { return parse_poly(s, R.get()); }
}  // namespace

TEST_CASE("groebner basis basics") {
    auto R = RingSpec::make({"x", "y"});
    auto gb1 = buchberger({P(R, "x")}, MonomialOrder::degrevlex());
    REQUIRE(gb1.basis.size() == 1);
    CHECK(gb1.basis[0].equals(P(R, "x")));

    auto gbu = buchberger({P(R, "x-1"), P(R, "x")}, MonomialOrder::degrevlex());
    REQUIRE(gbu.basis.size() == 1);
    CHECK(gbu.basis[0].equals(P(R, "1")));
}

TEST_CASE("groebner self-certifies and contains generators") {
    auto R = RingSpec::make({"x", "y"});
    std::vector<Poly> gens{P(R, "x^2-y"), P(R, "y^2-x")};
    auto gb = buchberger(gens, MonomialOrder::degrevlex());
    CHECK(basis_self_check(gb));
    for (const auto& g : gens)
        CHECK(normal_form(g, gb.basis, gb.order).is_zero());
    // reduced: lead coefficients one, no cross-divisibility of any term
    for (const auto& b : gb.basis) CHECK(b.lc().is_one());
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = 0; j < gb.basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : gb.basis[i].terms())
                CHECK_FALSE(gb.basis[j].lm().divides(t.m));
        }
}

TEST_CASE("normal form examples") {
    auto R = RingSpec::make({"x", "y"});
    auto gbx = buchberger({P(R, "x")}, MonomialOrder::degrevlex());
    CHECK(normal_form(P(R, "x^2"), gbx.basis, gbx.order).is_zero());

    auto gbd = buchberger({P(R, "x-y")}, MonomialOrder::degrevlex());
    CHECK(normal_form(P(R, "x+y"), gbd.basis, gbd.order).equals(P(R, "2*y")));

    // random combinations of the generators are members
    Rng rng(23);
    std::vector<Poly> gens{P(R, "x^2-y"), P(R, "x*y-1")};
    auto gb = buchberger(gens, MonomialOrder::degrevlex());
    for (int i = 0; i < 15; ++i) {
        Poly combo = Poly::zero(R.get());
        for (const auto& g : gens)
            combo = combo + testsupport::random_poly(R, rng, 2, 3) * g;
        CHECK(normal_form(combo, gb.basis, gb.order).is_zero());
    }
}

TEST_CASE("random bases self-certify (global and local)") {
    Rng rng(29);
    auto R = RingSpec::make({"x", "y", "z"});
    for (int i = 0; i < 12; ++i) {
        std::vector<Poly> gens;
        int k = 2 + static_cast<int>(rng() % 3);
        for (int j = 0; j < k; ++j)
            gens.push_back(testsupport::random_nonzero_poly(R, rng, 3, 4));
        auto gb = buchberger(gens, MonomialOrder::degrevlex());
        CHECK(basis_self_check(gb));
        auto sb = standard_basis(gens);
        CHECK(basis_self_check(sb));
        for (const auto& g : gens)
            CHECK(mora_normal_form(g, sb.basis).is_zero());
    }
}

TEST_CASE("standard basis spec examples") {
    auto R1 = RingSpec::make({"x"});
    auto sb = standard_basis({P(R1, "x+x^2")});
    REQUIRE(sb.basis.size() == 1);
    // unit 1+x is invertible locally: leading ideal is (x)
    CHECK(sb.basis[0].lm() == P(R1, "x").lm());

    auto R = RingSpec::make({"x", "y"});
    auto sbm = standard_basis({P(R, "x^2"), P(R, "y^3")});
    REQUIRE(sbm.basis.size() == 2);
    CHECK(sbm.basis[0].equals(P(R, "x^2")));
    CHECK(sbm.basis[1].equals(P(R, "y^3")));
}

TEST_CASE("mora normal form decides local membership") {
    auto R1 = RingSpec::make({"x"});
    // x = (x+x^2) * unit in the local ring
    auto sb = standard_basis({P(R1, "x+x^2")});
    CHECK(mora_normal_form(P(R1, "x"), sb.basis).is_zero());
    CHECK_FALSE(mora_normal_form(P(R1, "1"), sb.basis).is_zero());
}

TEST_CASE("exact division") {
    auto R = RingSpec::make({"x", "y"});
    Poly f = P(R, "x^2-y^2");
    CHECK(exact_divide(f, P(R, "x-y")).equals(P(R, "x+y")));
    CHECK_THROWS_AS(exact_divide(P(R, "x^2+1"), P(R, "y")), std::domain_error);
}
