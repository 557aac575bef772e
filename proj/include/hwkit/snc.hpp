#pragma once

// Closed-form Hodge and weight filtrations for monomial divisors
// f = x1^a1 * ... * xn^an.

#include <vector>

#include "hwkit/exactalg.hpp"
#include "hwkit/presentation.hpp"

namespace hwkit {

class SncDivisor {
 public:
  /// Throws unless every exponent is non-negative and one is positive.
  explicit SncDivisor(std::vector<int> a);
  static SncDivisor parse(std::string_view csv);

  std::size_t dim() const { return a_.size(); }
  const std::vector<int>& exponents() const { return a_; }
  Polynomial f() const;
  /// Indices i with a_i != 0.
  std::vector<std::size_t> support() const;
  /// Indices i in the support with alpha*a_i integral.
  std::vector<std::size_t> integral_support(const Rational& alpha) const;
  /// Divisor seen at a point where only the listed coordinates vanish.
  SncDivisor stratum(const std::vector<std::size_t>& vanishing) const;

 private:
  std::vector<int> a_;
};

/// m_alpha: W_{n+m_alpha} is the whole module.
int snc_weight_top(const SncDivisor& d, const Rational& alpha);
/// I_l with F_0^H W_{n+l} M(f^-alpha) = I_l f^-alpha.
MonomialIdeal snc_f0_ideal(const SncDivisor& d, const Rational& alpha, int l);
/// F_k^H W_{n+l} = F_k D . I_l f^-alpha.
HodgePresentation snc_hodge_weight(const SncDivisor& d, const Rational& alpha, int k, int l);
/// prod x_i^floor(alpha a_i)
MonomialIdeal snc_multiplier_ideal(const SncDivisor& d, const Rational& alpha);
/// F_0^H W_{n+1} ideal, i.e. adj(X, {alpha D}) O({alpha D} - alpha D).
MonomialIdeal snc_adjoint_specialization(const SncDivisor& d, const Rational& alpha);
/// prod x_i^max(ceil(lambda a_i) - 1, 0)
Monomial snc_f_lambda(const SncDivisor& d, const Rational& lambda);

}  // namespace hwkit
