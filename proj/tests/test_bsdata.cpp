#include <random>

#include "doctest.h"
#include "hwkit/bsdata.hpp"

using namespace hwkit;

namespace {

RootMap R(const char* text) { return parse_roots(text); }
ReducedBFunction red(const char* text) { return ReducedBFunction{R(text)}; }
Rational q(long a, long b = 1) { return Rational(a, b); }

const ReducedBFunction cusp = red("(s+5/6)(s+7/6)");
const ReducedBFunction node = red("(s+1)");

}  // namespace

TEST_CASE("root parsing and printing") {
  CHECK(R("(s+1)^2") == RootMap{{q(-1), 2}});
  CHECK(R("(s+1)(s+5/6)*(s+7/6)") == RootMap{{q(-1), 1}, {q(-5, 6), 1}, {q(-7, 6), 1}});
  CHECK(R("(s-1/6)") == RootMap{{q(1, 6), 1}});
  CHECK(R("1").empty());
  CHECK(R(R"([{"root":"-1","mult":2}])") == RootMap{{q(-1), 2}});
  CHECK(roots_str(R("(s+1)^2(s+1/2)")) == "(s+1/2)(s+1)^2");
  CHECK_THROWS_AS(R("(t+1)"), ParseError);
  CHECK_THROWS_AS(R("(s+1"), ParseError);
}

TEST_CASE("bfunction_snc") {
  CHECK(bfunction_snc({1, 1}).roots == R("(s+1)^2"));
  CHECK(bfunction_snc({2}).roots == R("(s+1)(s+1/2)"));
  CHECK(bfunction_snc({2, 3}).roots == R("(s+1)^2(s+1/2)(s+1/3)(s+2/3)"));
  CHECK(bfunction_snc({0, 1}).roots == R("(s+1)"));
  CHECK_THROWS(bfunction_snc({0, 0}));
  CHECK(bfunction_snc({1}).provenance == Provenance::ClosedFormSnc);
  CHECK_FALSE(bfunction_snc({1}).verified);
}

TEST_CASE("bfunction_whom_isolated") {
  auto two = [](int a, int b) { return Monomial(std::vector<int>{a, b}); };
  WeightVector wc({q(1, 2), q(1, 3)});
  CHECK(bfunction_whom_isolated(poly_parse("x1^2+x2^3", 2), wc, {two(0, 0), two(0, 1)}).roots ==
        R("(s+1)(s+5/6)(s+7/6)"));
  WeightVector wn({q(1, 2), q(1, 2)});
  CHECK(bfunction_whom_isolated(poly_parse("x1^2+x2^2", 2), wn, {two(0, 0)}).roots == R("(s+1)^2"));
  WeightVector wt({q(1, 3), q(1, 3)});
  CHECK(bfunction_whom_isolated(poly_parse("x1^2*x2+x1*x2^2", 2), wt,
                                {two(0, 0), two(1, 0), two(0, 1), two(1, 1)})
            .roots == R("(s+1)^2(s+2/3)(s+4/3)"));
  CHECK_THROWS_AS(bfunction_whom_isolated(poly_parse("x1", 2), wc, {Monomial(3)}), DimensionMismatch);
}

TEST_CASE("reduce and the b^(l) chain") {
  CHECK(reduce(BFunction{R("(s+1)^2")}).roots == R("(s+1)"));
  CHECK(reduce(BFunction{R("(s+1)(s+5/6)(s+7/6)")}).roots == R("(s+5/6)(s+7/6)"));
  CHECK_THROWS(reduce(BFunction{R("(s+1/2)")}));
  CHECK(bl_chain(red("(s+1)^2"), 1).roots == R("(s+1)"));
  CHECK(bl_chain(cusp, 1).empty());
  CHECK(bl_chain(red("(s+1)^2(s+2/3)(s+4/3)"), 1).roots == R("(s+1)"));
}

TEST_CASE("weighted minimal exponents") {
  CHECK(weighted_minimal_exponent(cusp, 0) == q(5, 6));
  CHECK(weighted_minimal_exponent(red("(s+1)^2"), 1) == q(1));
  CHECK_FALSE(weighted_minimal_exponent(node, 1));
}

TEST_CASE("beta_factor") {
  CHECK(beta_factor(R("(s+1)^2"), q(0)).empty());
  CHECK(beta_factor(R("(s+1)(s+5/6)(s+7/6)"), q(0)) == R("(s+1/6)"));
  CHECK(beta_factor(R("(s+1)(s+5/6)(s+7/6)"), q(1, 2)) == R("(s)(s+1/6)(s-1/6)"));
}

TEST_CASE("classify_pair") {
  auto is = [](PairClass c, bool klt, bool plt, bool lc) { return c.klt == klt && c.plt == plt && c.lc == lc; };
  CHECK(is(classify_pair(cusp, q(1, 2)), true, true, true));
  CHECK(is(classify_pair(cusp, q(5, 6)), false, true, true));
  CHECK(is(classify_pair(cusp, q(9, 10)), false, false, false));
  CHECK(is(classify_pair(cusp, q(1)), false, false, false));
  CHECK(is(classify_pair(node, q(1)), false, false, true));
  CHECK(is(classify_pair(node, q(3, 2)), false, false, false));
  CHECK_THROWS(classify_pair(node, q(0)));
}

TEST_CASE("weight and generating-level bounds") {
  CHECK(weight_bounds(node, q(1), 2) == std::pair<long, long>{4, 4});
  CHECK(weight_bounds(cusp, q(1), 2) == std::pair<long, long>{3, 3});
  CHECK(weight_bounds(cusp, q(5, 6), 2) == std::pair<long, long>{3, 3});
  CHECK_THROWS(weight_bounds(cusp, q(3, 2), 2));
  CHECK(genlevel_bound(cusp, q(1), 0, 2, false) == 0);
  CHECK(genlevel_bound(node, q(1), 0, 2, false) == 0);
  CHECK(genlevel_bound(red("(s+3/4)"), q(1, 2), 1, 3, true) == 1);
  CHECK(genlevel_bound(node, q(1), 1, 2, true) == 2 - 1 - 1);
}

TEST_CASE("hodge_pole_full") {
  CHECK_FALSE(hodge_pole_full(cusp, q(5, 6), 0, 0));
  CHECK(hodge_pole_full(cusp, q(5, 6), 0, 1));
  CHECK(hodge_pole_full(cusp, q(1, 2), 0, 0));
}

TEST_CASE("roots_in_interval") {
  CHECK(roots_in_interval(R("(s+1)^2"), q(-2), q(0), true, true));
  CHECK_FALSE(roots_in_interval(R("(s+1)(s+5/6)(s+7/6)"), q(-2), q(-1), true, false));
  CHECK(roots_in_interval(R("(s+1)(s+5/6)(s+7/6)"), q(-2), q(0), true, true));
}

TEST_CASE("json rendering") {
  auto j = to_json(bfunction_snc({2}));
  CHECK(j.dump() ==
        R"({"roots":[{"root":"-1","mult":1},{"root":"-1/2","mult":1}],"provenance":"closed-form-snc","verified":false})");
}

TEST_CASE("properties on random root multisets") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> count(0, 5), num(1, 11), den(1, 6), mult(1, 3);
  for (int it = 0; it < 200; ++it) {
    ReducedBFunction b;
    int k = count(rng);
    for (int i = 0; i < k; ++i) b.roots[-Rational(num(rng), den(rng))] += mult(rng);
    // alpha~(l) non-decreasing, chain divides
    std::optional<Rational> prev;
    for (int l = 0; l < 4; ++l) {
      auto a = weighted_minimal_exponent(b, l);
      if (prev && a) CHECK(*prev <= *a);
      if (!prev && l > 0) CHECK_FALSE(a);
      prev = a;
      auto c0 = bl_chain(b, l), c1 = bl_chain(b, l + 1);
      for (const auto& [r, m] : c1.roots) CHECK(c0.multiplicity(r) >= m);
    }
    for (int an = 1; an <= 12; ++an) {
      Rational alpha(an, 12);
      auto c = classify_pair(b, alpha);
      if (c.klt) CHECK(c.plt);
      if (c.plt) CHECK(c.lc);
      auto [lo, hi] = weight_bounds(b, alpha, 3);
      CHECK(lo <= hi);
      int shifts = 0;
      for (const auto& [r, m] : b.roots)
        if ((-alpha - r).is_integer() && (-alpha - r).sign() >= 0) ++shifts;
      if (shifts == 1) CHECK(lo == hi);
      for (int kk = 1; kk < 3; ++kk)
        for (int l = 0; l < 3; ++l)
          if (hodge_pole_full(b, alpha, kk, l)) {
            CHECK(hodge_pole_full(b, alpha, kk - 1, l));
            CHECK(hodge_pole_full(b, alpha, kk, l + 1));
          }
    }
  }
}
