#include <doctest.h>

#include "braidinv/alexander.hpp"
#include "braidinv/burau.hpp"
#include "helpers.hpp"

using namespace braidinv;
using testutil::random_bivariate;
using testutil::random_knot;

TEST_CASE("forward axis-link polynomial on worked examples") {
  CHECK(alexander_closed_braid_with_axis(parse_braid_word("1 1 1")) ==
        parse_bivariate("1 + t^3*x"));
  CHECK(alexander_closed_braid_with_axis(parse_braid_word("1", 2)) ==
        parse_bivariate("1 + t*x"));
  CHECK(alexander_closed_braid_with_axis(parse_braid_word("", 1)) == parse_bivariate("1"));
}

TEST_CASE("unit scrambles") {
  const BivariatePoly d = parse_bivariate("1 + t^3*x");
  CHECK(scramble_units(d, 0, 0, 1) == d);
  CHECK(scramble_units(d, 2, -1, -1) == parse_bivariate("-t^-1*x^2 - t^2*x^3"));
  CHECK_THROWS_AS(scramble_units(d, 0, 0, 2), domain_error);
}

TEST_CASE("recovery of the invariant from the axis-link polynomial") {
  const auto rec = recover_fiedler_from_alexander(parse_bivariate("1 + t^3*x"), 2);
  CHECK(rec.fiedler.to_string() == "3");
  CHECK(rec.f0 == 0);
  CHECK(rec.fn == -3);
  CHECK(rec.f0 + rec.fn == -3);  // equals -writhe(sigma_1^3)

  // Same invariant from the scrambled form; only f0 and fn move.
  const auto rec2 = recover_fiedler_from_alexander(
      scramble_units(parse_bivariate("1 + t^3*x"), 2, -1, -1), 2);
  CHECK(rec2.fiedler == rec.fiedler);
  CHECK(rec2.f0 + rec2.fn == -3);

  // 1 + x is the unknot-with-axis polynomial with the t dependence scrambled
  // away entirely: the h^1 part vanishes.
  const auto rec3 = recover_fiedler_from_alexander(parse_bivariate("1 + x"), 2);
  CHECK(rec3.fiedler.coeffs.empty());
  CHECK(rec3.f0 == 0);
  CHECK(rec3.fn == 0);

  // One strand: the axis-link polynomial is 1 and everything is zero.
  const auto rec4 = recover_fiedler_from_alexander(parse_bivariate("1"), 1);
  CHECK(rec4.fiedler.coeffs.empty());
  CHECK(rec4.f0 == 0);
  CHECK(rec4.fn == 0);
  const auto rec5 = recover_fiedler_from_alexander(parse_bivariate("t^5"), 1);
  CHECK(rec5.f0 == 5);
  CHECK(rec5.fn == -5);
}

TEST_CASE("recovery rejects polynomials that cannot be normalized") {
  CHECK_THROWS_AS(recover_fiedler_from_alexander(parse_bivariate("1 + x"), 3),
                  domain_error);
  CHECK_THROWS_AS(recover_fiedler_from_alexander(parse_bivariate("2 + 2*x"), 2),
                  domain_error);
  CHECK_THROWS_AS(recover_fiedler_from_alexander(parse_bivariate("1 + x + x^2"), 2),
                  domain_error);
  CHECK_THROWS_AS(recover_fiedler_from_alexander(BivariatePoly(), 2), domain_error);
}

TEST_CASE("round trip: forward, scramble, recover") {
  std::mt19937_64 gen(89);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord b = random_knot(gen, 2, 6, 1, 14);
    const int n = b.strand_count();
    const int w = writhe(b);
    const BivariatePoly delta = alexander_closed_braid_with_axis(b);
    const auto a = draw_range(gen, -5, 5);
    const auto bb = draw_range(gen, -5, 5);
    const int s = draw_below(gen, 2) == 0 ? 1 : -1;
    const auto rec = recover_fiedler_from_alexander(scramble_units(delta, a, bb, s), n);
    CHECK(rec.fiedler == fiedler_statesum(b));
    CHECK(rec.f0 + rec.fn == -w);
    if (bb == 0) {
      CHECK(rec.f0 == 0);
      CHECK(rec.fn == -w);
    }
  }
}

TEST_CASE("general link invariant on the trefoil-with-axis polynomial") {
  const auto inv = general_link_invariant(parse_bivariate("1 + t^3*x"));
  CHECK(inv.a0 == geometric_sum<Int>(2));
  CHECK(inv.a1 == XPoly<Int>::monomial(Int(3), 1));
  REQUIRE(inv.a1_reduced.has_value());
  CHECK(*inv.a1_reduced == XPoly<Int>(-3));
}

TEST_CASE("general link invariant without t dependence") {
  const auto inv = general_link_invariant(parse_bivariate("1 + x + x^3"));
  CHECK(inv.a1.is_zero());
  REQUIRE(inv.a1_reduced.has_value());
  CHECK(inv.a1_reduced->is_zero());
}

TEST_CASE("general link invariant refuses a vanishing a0 and honors the axis flag") {
  CHECK_THROWS_AS(general_link_invariant(parse_bivariate("t - 1")), domain_error);
  // Swapping variable roles: 1 + x^3*t with axis=t is 1 + t^3*x with axis=x.
  const auto inv = general_link_invariant(parse_bivariate("1 + x^3*t"), AxisVar::t);
  CHECK(inv.a0 == geometric_sum<Int>(2));
  REQUIRE(inv.a1_reduced.has_value());
  CHECK(*inv.a1_reduced == XPoly<Int>(-3));
  // A non-monic a0 yields no canonical reduction.
  const auto hard = general_link_invariant(parse_bivariate("1 + 2*x + t*x"));
  CHECK_FALSE(hard.a1_reduced.has_value());
}

TEST_CASE("for closed braids a0 is the geometric sum and the reductions agree") {
  std::mt19937_64 gen(97);
  XPoly<Int> one_minus_x;
  one_minus_x.set_coeff(0, Int(1));
  one_minus_x.set_coeff(1, Int(-1));
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord b = random_knot(gen, 2, 6, 1, 12);
    const int n = b.strand_count();
    const BivariatePoly delta = alexander_closed_braid_with_axis(b);
    const auto inv = general_link_invariant(delta);
    const auto geo = geometric_sum<Int>(n);
    CHECK(inv.a0 == geo);
    REQUIRE(inv.a1_reduced.has_value());
    // The h^1 part A1 of det(I - xB(e^h)) is (1 - x) times the axis-link
    // polynomial's a1, so the two reductions differ by that unit factor.
    const auto parts = jet_parts(to_jet(charpoly_newton(burau_matrix(b))));
    const auto lhs = xpoly_rem_by_unit_leading(one_minus_x * *inv.a1_reduced, geo);
    const auto rhs = xpoly_rem_by_unit_leading(parts.a1, geo);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bivariate text round trip") {
  std::mt19937_64 gen(101);
  for (int trial = 0; trial < 120; ++trial) {
    const BivariatePoly p = random_bivariate(gen);
    if (p.is_zero()) {
      CHECK(p.to_string() == "0");
      continue;
    }
    CHECK(parse_bivariate(p.to_string()) == p);
  }
}

TEST_CASE("the parser accepts flexible term and factor order") {
  const BivariatePoly expect = parse_bivariate("1 + t^3*x");
  CHECK(parse_bivariate("x*t^3 + 1") == expect);
  CHECK(parse_bivariate("  1+t^3x ") == expect);  // implicit multiplication
  CHECK(parse_bivariate("t*t*t*x + 1") == expect);
  CHECK(parse_bivariate("2*x^2*t^-1") == parse_bivariate("2 * t^-1 * x^2"));
  CHECK(parse_bivariate("3") == BivariatePoly(3));
  CHECK(parse_bivariate("0").is_zero());
  CHECK(parse_bivariate("x - x").is_zero());
}

TEST_CASE("the parser rejects malformed text") {
  CHECK_THROWS_AS(parse_bivariate(""), parse_error);
  CHECK_THROWS_AS(parse_bivariate("   "), parse_error);
  CHECK_THROWS_AS(parse_bivariate("1 +"), parse_error);
  CHECK_THROWS_AS(parse_bivariate("y + 1"), parse_error);
  CHECK_THROWS_AS(parse_bivariate("t^"), parse_error);
  CHECK_THROWS_AS(parse_bivariate("1 2 x"), parse_error);
  CHECK_THROWS_AS(parse_laurent("1 + x"), parse_error);
}
