#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "findet/parser.hpp"
#include "findet/ring.hpp"
#include "support/random_polys.hpp"

using namespace findet;
using testsupport::Rng;

namespace {
RingPtr ring_xy() { return RingSpec::make({"x", "y"}); }
RingPtr ring_xyz() { return RingSpec::make({"x", "y", "z"}); }
Poly P(const RingPtr& R, const std::string& s) { return parse_poly(s, R.get()); }
}  // namespace

TEST_CASE("scalar arithmetic") {
    Scalar a = Scalar::rational(1, 2);
    Scalar b = Scalar::rational(-3, 4);
    CHECK((a + b).str() == "-1/4");
    CHECK((a * b).str() == "-3/8");
    CHECK((a / b).str() == "-2/3");
    CHECK(Scalar::rational(2, -4).str() == "-1/2");

    Scalar u = Scalar::fp(5, 7), v = Scalar::fp(3, 7);
    CHECK((u * v).fp_value() == 1);  // 15 mod 7
    CHECK((u.inverse() * u).is_one());
    CHECK(Scalar::fp(-1, 7).fp_value() == 6);
    CHECK(is_odd_prime(32003));
    CHECK_FALSE(is_odd_prime(32001));
}

TEST_CASE("parse_poly spec examples") {
    auto R = ring_xy();
    CHECK(P(R, "(x+y)^2").equals(P(R, "x^2+2*x*y+y^2")));
    CHECK(P(R, "x*y - y*x").is_zero());
    Poly f = P(R, "x^2 - 2*x + 1");
    CHECK(P(R, f.str()).equals(f));
}

TEST_CASE("parse errors carry position") {
    auto R = ring_xy();
    CHECK_THROWS_AS(P(R, "x + q"), ParseError);
    CHECK_THROWS_AS(P(R, "x + "), ParseError);
    CHECK_THROWS_AS(P(R, "(x"), ParseError);
    CHECK_THROWS_AS(P(R, "x y"), ParseError);  // implicit multiplication
    try {
        P(R, "x + q");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("poly_arith spec examples") {
    auto R = ring_xy();
    CHECK((P(R, "x+y") * P(R, "x-y")).equals(P(R, "x^2-y^2")));
    Poly f = P(R, "3*x^2*y - y + 1");
    CHECK((f + Poly::zero(R.get())).equals(f));

    auto F7 = RingSpec::make({"x"}, 7);
    Poly g = parse_poly("5*x", F7.get()) * parse_poly("3*x", F7.get());
    CHECK(g.equals(parse_poly("x^2", F7.get())));
}

TEST_CASE("mismatched rings rejected") {
    auto R1 = ring_xy();
    auto R2 = ring_xyz();
    CHECK_THROWS_AS(P(R1, "x") + P(R2, "x"), std::invalid_argument);
}

TEST_CASE("evaluate_at_point") {
    auto R = ring_xy();
    auto one = Scalar::rational(1);
    CHECK(P(R, "x^2-y").eval({one, one}).is_zero());
    auto R3 = ring_xyz();
    CHECK(P(R3, "x*y*z")
              .eval({Scalar::rational(1), Scalar::rational(2),
                     Scalar::rational(3)})
              .str() == "6");
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Poly f = testsupport::random_poly(R, rng, 3, 5);
        auto zero = Scalar::rational(0);
        CHECK(f.eval({zero, zero}) == f.constant_term());
    }
}

TEST_CASE("jet_truncate") {
    auto R = ring_xy();
    CHECK(P(R, "x + x^2*y").jet(1).equals(P(R, "x")));
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        Poly f = testsupport::random_poly(R, rng, 4, 5);
        Poly g = testsupport::random_poly(R, rng, 4, 5);
        int k = static_cast<int>(rng() % 5);
        CHECK((f * g).jet(k).equals((f.jet(k) * g.jet(k)).jet(k)));
        int j = static_cast<int>(rng() % 5);
        CHECK(f.jet(k).jet(j).equals(f.jet(std::min(k, j))));
        CHECK(f.jet(k).jet(k).equals(f.jet(k)));
    }
}

TEST_CASE("derivatives and derivations") {
    auto R = ring_xy();
    CHECK(P(R, "x^2*y").derivative(0).equals(P(R, "2*x*y")));
    // D = x*d/dx applied to x^k scales by k
    auto R1 = RingSpec::make({"x"});
    Derivation D{{parse_poly("x", R1.get())}};
    for (unsigned k = 1; k <= 5; ++k) {
        Poly xk = Poly::variable(R1.get(), 0).pow(k);
        CHECK(apply_derivation(D, xk).equals(
            xk.scaled(Scalar::rational(static_cast<long>(k)))));
    }
    // Leibniz on random pairs
    Rng rng(13);
    auto R3 = ring_xyz();
    Derivation D3{{P(R3, "x*y"), P(R3, "1"), P(R3, "z^2")}};
    for (int i = 0; i < 20; ++i) {
        Poly f = testsupport::random_poly(R3, rng, 3, 4);
        Poly g = testsupport::random_poly(R3, rng, 3, 4);
        Poly lhs = apply_derivation(D3, f * g);
        Poly rhs = f * apply_derivation(D3, g) + g * apply_derivation(D3, f);
        CHECK(lhs.equals(rhs));
    }
    // partials commute
    for (int i = 0; i < 20; ++i) {
        Poly f = testsupport::random_poly(R3, rng, 4, 6);
        CHECK(f.derivative(0).derivative(2).equals(
            f.derivative(2).derivative(0)));
    }
}

TEST_CASE("ring axioms on random triples") {
    auto R = ring_xyz();
    Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        Poly a = testsupport::random_poly(R, rng, 3, 4);
        Poly b = testsupport::random_poly(R, rng, 3, 4);
        Poly c = testsupport::random_poly(R, rng, 3, 4);
        CHECK(((a * b) * c).equals(a * (b * c)));
        CHECK((a * (b + c)).equals(a * b + a * c));
        CHECK((a * b).equals(b * a));
        CHECK((a + b).equals(b + a));
    }
}

TEST_CASE("print/parse round-trip on random trees") {
    Rng rng(19);
    auto R = ring_xyz();
    for (int i = 0; i < 40; ++i) {
        Poly f = testsupport::random_poly(R, rng, 5, 8);
        CHECK(P(R, f.str()).equals(f));
    }
    // rational coefficients round-trip through the extended literal form
    Poly f = P(R, "1/2*x^2 - 3/7*y + 5");
    CHECK(P(R, f.str()).equals(f));
}

TEST_CASE("monomial orders") {
    auto R = ring_xyz();
    auto drl = MonomialOrder::degrevlex();
    auto lex = MonomialOrder::lex();
    auto ds = MonomialOrder::local_ds();
    Monomial one(3);
    Monomial x({std::vector<std::uint32_t>{1, 0, 0}});
    Monomial yz({std::vector<std::uint32_t>{0, 1, 1}});
    Monomial x2({std::vector<std::uint32_t>{2, 0, 0}});
    CHECK(drl.cmp(x, one) > 0);      // 1 smallest globally
    CHECK(ds.cmp(x, one) < 0);       // 1 largest locally
    CHECK(drl.cmp(x2, yz) > 0);      // same degree: revlex tie-break
    CHECK(lex.cmp(x, yz) > 0);
    CHECK(ds.cmp(x, yz) > 0);        // lower degree wins locally
    // block(1): x-block dominates
    auto blk = MonomialOrder::block(1);
    CHECK(blk.cmp(x, yz) > 0);
    Monomial y2z2({std::vector<std::uint32_t>{0, 2, 2}});
    CHECK(blk.cmp(x, y2z2) > 0);
}

TEST_CASE("quotient ring validation") {
    CHECK_THROWS_AS(RingSpec::make({"x", "y"}, 0, {"x+1"}, std::nullopt),
                    std::invalid_argument);
    auto R = RingSpec::make({"x", "y"}, 0, {"x^2"}, std::nullopt);
    CHECK(R->has_quotient());
    CHECK(R->describe() == "QQ[x,y]/(x^2)");
}
