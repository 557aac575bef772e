#include "doctest.h"
#include "hwkit/bsdata.hpp"
#include "hwkit/whom.hpp"

using namespace hwkit;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }
Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

QuasiHomogeneousGerm cusp() { return {poly_parse("x1^2+x2^3", 2), WeightVector({q(1, 2), q(1, 3)})}; }
QuasiHomogeneousGerm node() { return {poly_parse("x1^2+x2^2", 2), WeightVector({q(1, 2), q(1, 2)})}; }
QuasiHomogeneousGerm triple() { return {poly_parse("x1^2*x2+x1*x2^2", 2), WeightVector({q(1, 3), q(1, 3)})}; }

std::vector<Monomial> ideal_gens(const HodgePresentation& p, int pole) {
  std::vector<Monomial> out;
  for (const auto& s : p.summands)
    if (s.pole_step == pole) out.push_back(s.generator.leading_monomial());
  return out;
}

}  // namespace

TEST_CASE("milnor bases") {
  CHECK(cusp().milnor() == std::vector<Monomial>{mono({0, 0}), mono({0, 1})});
  CHECK(node().milnor() == std::vector<Monomial>{mono({0, 0})});
  CHECK(triple().milnor() == std::vector<Monomial>{mono({0, 0}), mono({0, 1}), mono({1, 0}), mono({1, 1})});
  CHECK(cusp().socle_degree() == q(1, 3));
}

TEST_CASE("milnor number matches the weight formula") {
  for (auto g : {cusp(), node(), triple(),
                 QuasiHomogeneousGerm(poly_parse("x1^3+x2^4", 2), WeightVector({q(1, 3), q(1, 4)})),
                 QuasiHomogeneousGerm(poly_parse("x1^2+x2^2+x3^3", 3), WeightVector({q(1, 2), q(1, 2), q(1, 3)}))}) {
    Rational mu(1);
    for (const auto& w : g.weights().weights()) mu *= Rational(1) / w - Rational(1);
    CHECK(Rational(static_cast<long>(g.milnor().size())) == mu);
  }
}

TEST_CASE("milnor basis rejects bad input") {
  CHECK_THROWS_AS(milnor_basis(poly_parse("x1^2+x2^2", 2), WeightVector({q(1, 2), q(1, 3)})), NotQuasiHomogeneous);
  CHECK(milnor_basis(poly_parse("x1*x2", 2), WeightVector({q(1, 2), q(1, 2)})).size() == 1);
  CHECK_THROWS_AS(milnor_basis(poly_parse("x1^2*x2^2", 2), WeightVector({q(1, 4), q(1, 4)})), NotIsolated);
  CHECK_THROWS_AS(milnor_basis(poly_parse("x1^2*x2", 2), WeightVector({q(1, 4), q(1, 2)})), NotIsolated);
}

TEST_CASE("whom b-function from the Milnor basis") {
  auto g = cusp();
  CHECK(bfunction_whom_isolated(g.f(), g.weights(), g.milnor()).roots == parse_roots("(s+1)(s+5/6)(s+7/6)"));
}

TEST_CASE("weight top") {
  CHECK(whom_weight_top(cusp(), q(5, 6)) == 1);
  CHECK(whom_weight_top(cusp(), q(1)) == 2);
  CHECK(whom_weight_top(node(), q(1, 2)) == 1);
  CHECK_THROWS(whom_weight_top(node(), q(0)));
}

TEST_CASE("hodge on weight strata") {
  auto p0 = whom_hodge_weight(cusp(), q(5, 6), 0, 0);
  CHECK(ideal_gens(p0, 0) == std::vector<Monomial>{mono({1, 0}), mono({0, 1})});
  auto p1 = whom_hodge_weight(cusp(), q(5, 6), 0, 1);
  CHECK(ideal_gens(p1, 0) == std::vector<Monomial>{mono({0, 0})});
  auto p2 = whom_hodge_weight(cusp(), q(1), 1, 1);
  CHECK(ideal_gens(p2, 0) == std::vector<Monomial>{mono({1, 0}), mono({0, 1})});
  CHECK(MonomialIdeal(2, ideal_gens(p2, 1)) == graded_ideal(cusp().weights(), q(7, 6), true));
  for (const auto& s : p2.summands) CHECK(s.budget == 1 - s.pole_step);
  CHECK_THROWS(whom_hodge_weight(cusp(), q(5, 6), 0, 2));
  CHECK_THROWS(whom_hodge_weight(cusp(), q(5, 6), 2, 0, 1));
  auto w0 = whom_hodge_weight(cusp(), q(1), 2, 0);
  REQUIRE(w0.summands.size() == 1);
  CHECK(w0.summands[0].generator == cusp().f());
}

TEST_CASE("microlocal multiplier ideals") {
  auto unit = std::vector<Polynomial>{Polynomial(2, q(1))};
  auto maxideal = std::vector<Polynomial>{poly_parse("x1", 2), poly_parse("x2", 2)};
  CHECK(whom_micromult_ideal(cusp(), q(5, 6), 0) == maxideal);
  CHECK(whom_micromult_ideal(cusp(), q(1, 2), 0) == unit);
  CHECK(whom_micromult_ideal(node(), q(1), 0) == maxideal);
  auto k1 = whom_micromult_ideal(cusp(), q(1, 2), 1);
  CHECK(std::find(k1.begin(), k1.end(), poly_parse("2*x1", 2)) != k1.end());
}

TEST_CASE("1 in W_0 V~^alpha iff alpha below the minimal exponent") {
  for (auto g : {cusp(), node(), triple()}) {
    auto b = reduce(bfunction_whom_isolated(g.f(), g.weights(), g.milnor()));
    auto at = *weighted_minimal_exponent(b, 0);
    for (int num = 1; num <= 12; ++num) {
      Rational alpha(num, 12);
      auto gens = whom_micromult_ideal(g, alpha, 0);
      bool has_one = std::any_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_constant(); });
      CHECK(has_one == (alpha < at));
      // full stratum at k = 0 is the unit ideal iff the pole predicate holds
      int top = whom_weight_top(g, alpha);
      auto full = whom_hodge_weight(g, alpha, 0, top);
      bool unit = ideal_gens(full, 0) == std::vector<Monomial>{Monomial(2)};
      CHECK(unit == hodge_pole_full(b, alpha, 0, top - alpha.floor()));
    }
  }
}
