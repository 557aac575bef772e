#include "hwkit/presentation.hpp"

namespace hwkit {

void HodgePresentation::add(int budget, const Polynomial& g, int pole_step) {
  if (budget < 0 || g.is_zero()) return;
  summands.push_back({budget, g, pole_step});
}

void HodgePresentation::add_ideal(int budget, const MonomialIdeal& ideal, int pole_step) {
  for (const auto& m : ideal.generators()) add(budget, Polynomial(m), pole_step);
}

std::string HodgePresentation::str() const {
  if (summands.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    if (i) out += " + ";
    out += "F_" + std::to_string(s.budget) + "D*(" + s.generator.str() + ")*f^(-" +
           (Rational(s.pole_step) + alpha).str() + ")";
  }
  return out;
}

nlohmann::ordered_json to_json(const HodgePresentation& p) {
  nlohmann::ordered_json j;
  j["alpha"] = p.alpha.str();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : p.summands)
    arr.push_back({{"budget", s.budget}, {"generator", s.generator.str()}, {"pole_step", s.pole_step}});
  j["summands"] = arr;
  return j;
}

}  // namespace hwkit
