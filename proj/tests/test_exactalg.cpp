#include <random>

#include "doctest.h"
#include "hwkit/exactalg.hpp"
#include "random_gen.hpp"

using namespace hwkit;

namespace {
Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }
WeightVector cusp_w() { return WeightVector({Rational(1, 2), Rational(1, 3)}); }
}  // namespace

TEST_CASE("rationals stay reduced") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("poly_parse") {
  Polynomial p = poly_parse("x1^2*x2^3", 2);
  CHECK(p.size() == 1);
  CHECK(p.coefficient(mono({2, 3})) == Rational(1));
  CHECK(poly_parse("x1^2 + x2^3", 2).size() == 2);
  Polynomial q = poly_parse("3/2*x1 - x1", 1);
  CHECK(q.size() == 1);
  CHECK(q.coefficient(mono({1})) == Rational(1, 2));
  CHECK(poly_parse("-x1 + 2", 1).str() == "-x1 + 2");
  CHECK(poly_parse("x1 - x1", 1).is_zero());
}

TEST_CASE("parse errors carry positions") {
  try {
    poly_parse("x1 + x3", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(poly_parse("x1 +", 2), ParseError);
  CHECK_THROWS_AS(poly_parse("x1 x2", 2), ParseError);
  CHECK_THROWS_AS(poly_parse("2/0*x1", 2), ParseError);
  CHECK_THROWS_AS(poly_parse("y1", 2), ParseError);
}

TEST_CASE("printing is descending grlex") {
  Polynomial p = poly_parse("1 - x1 + 3/2*x1^2 + x1*x2", 2);
  CHECK(p.str() == "3/2*x1^2 + x1*x2 - x1 + 1");
  CHECK(Polynomial(2).str() == "0");
}

TEST_CASE("parse and print round trip on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Polynomial p = testgen::polynomial(rng, 3, 5, 3);
    CHECK(poly_parse(p.str(), 3) == p);
  }
}

TEST_CASE("exact division") {
  Polynomial f = poly_parse("x1^2 + x2^3", 2);
  Polynomial g = poly_parse("x1 - 2*x2", 2);
  auto q = (f * g).divide_exact(f);
  REQUIRE(q);
  CHECK(*q == g);
  CHECK_FALSE((f + g).divide_exact(f));
}

TEST_CASE("weighted_degree") {
  CHECK(weighted_degree(mono({2, 0}), cusp_w()) == Rational(1));
  CHECK(weighted_degree(mono({0, 0}), cusp_w()) == Rational(0));
  CHECK(weighted_degree(mono({1, 1}), cusp_w()) == Rational(5, 6));
  CHECK_THROWS_AS(weighted_degree(mono({1}), cusp_w()), DimensionMismatch);
  CHECK_THROWS(WeightVector({Rational(0), Rational(1)}));
  CHECK(homogeneous_degree(poly_parse("x1^2 + x2^3", 2), cusp_w()) == Rational(1));
  CHECK_FALSE(homogeneous_degree(poly_parse("x1 + x2", 2), cusp_w()));
}

TEST_CASE("graded_ideal") {
  auto w = cusp_w();
  CHECK(graded_ideal(w, 0, true).str() == "(x1, x2)");
  CHECK(graded_ideal(w, Rational(-1, 3), true).is_unit());
  CHECK(graded_ideal(w, 0, false).is_unit());
  CHECK(graded_ideal(w, Rational(2, 3), true) == MonomialIdeal(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})}));
  CHECK(graded_ideal(w, Rational(2, 3), false) == MonomialIdeal(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})}));
}

TEST_CASE("graded ideals: strict inside non-strict, products respect degrees") {
  auto w = cusp_w();
  for (int num = -6; num <= 12; ++num) {
    Rational g(num, 6);
    auto strict = graded_ideal(w, g, true);
    auto loose = graded_ideal(w, g, false);
    CHECK(ideal_contains(loose, strict));
    bool hit = false;
    for (const auto& m : monomials_up_to_weight(w, g))
      if (weighted_degree(m, w) == g) hit = true;
    CHECK((strict == loose) == !hit);
    for (int num2 = -2; num2 <= 6; ++num2) {
      Rational d(num2, 6);
      CHECK(ideal_contains(graded_ideal(w, g + d, false), loose * graded_ideal(w, d, false)));
    }
  }
}

TEST_CASE("monomial ideal operations") {
  MonomialIdeal x(2, {mono({1, 0})}), y(2, {mono({0, 1})});
  CHECK(ideal_sum(x, y).str() == "(x1, x2)");
  CHECK(ideal_contains(ideal_sum(x, y), MonomialIdeal(2, {mono({1, 1})})));
  CHECK(ideal_scale_by_monomial(ideal_sum(x, y), mono({1, 1})).str() == "(x1^2*x2, x1*x2^2)");
  CHECK(MonomialIdeal(2).str() == "(0)");
  CHECK_THROWS_AS(ideal_sum(x, MonomialIdeal(3)), DimensionMismatch);
}

TEST_CASE("monoid laws on random ideals") {
  std::mt19937 rng(11);
  auto rand_ideal = [&] {
    std::vector<Monomial> g;
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < k; ++i) g.push_back(testgen::monomial(rng, 3, 3));
    return MonomialIdeal(3, g);
  };
  for (int i = 0; i < 100; ++i) {
    auto a = rand_ideal(), b = rand_ideal(), c = rand_ideal();
    CHECK((a + b) == (b + a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a + MonomialIdeal(3)) == a);
    CHECK(ideal_contains(a + b, a));
    const auto& g = a.generators();
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t k = 0; k < g.size(); ++k)
        if (j != k) CHECK_FALSE(g[j].divides(g[k]));
  }
}
