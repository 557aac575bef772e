#pragma once

#include <string>
#include <vector>

#include "hwkit/exactalg.hpp"
#include "json.hpp"

namespace hwkit {

/// sum_j F_{budget_j} D . g_j f^(-pole_step_j - alpha)
struct HodgePresentation {
  struct Summand {
    int budget;
    Polynomial generator;
    int pole_step;
  };
  std::vector<Summand> summands;
  Rational alpha;

  /// Drops summands with negative budget or zero generator.
  void add(int budget, const Polynomial& g, int pole_step);
  void add_ideal(int budget, const MonomialIdeal& ideal, int pole_step);
  std::string str() const;
};

nlohmann::ordered_json to_json(const HodgePresentation& p);

}  // namespace hwkit
