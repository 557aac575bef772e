#pragma once

// Weighted-homogeneous isolated singularities: Milnor bases, Hodge and
// weight filtrations, weighted microlocal multiplier ideals.

#include <optional>
#include <stdexcept>
#include <vector>

#include "hwkit/exactalg.hpp"
#include "hwkit/presentation.hpp"

namespace hwkit {

class NotQuasiHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotIsolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Monomial basis of O/(d_1 f, ..., d_n f).  Throws NotQuasiHomogeneous
/// unless E(f) = f for E = sum w_i x_i d_i, and NotIsolated unless every
/// monomial of weighted degree in (socle, socle + max w] lies in the
/// Jacobian ideal.
std::vector<Monomial> milnor_basis(const Polynomial& f, const WeightVector& w);

class QuasiHomogeneousGerm {
 public:
  QuasiHomogeneousGerm(Polynomial f, WeightVector w);

  const Polynomial& f() const { return f_; }
  const WeightVector& weights() const { return w_; }
  std::size_t dim() const { return f_.dim(); }
  const std::vector<Monomial>& milnor() const { return basis_; }
  /// sum (1 - 2 w_i)
  const Rational& socle_degree() const { return socle_; }

 private:
  Polynomial f_;
  WeightVector w_;
  std::vector<Monomial> basis_;
  Rational socle_;
};

/// 1 for alpha in (0,1), 2 for alpha = 1.
int whom_weight_top(const QuasiHomogeneousGerm& g, const Rational& alpha);

/// F_k^H W_{n+l} M(f^-alpha).  jmax defaults to k and must be at least k.
HodgePresentation whom_hodge_weight(const QuasiHomogeneousGerm& g, const Rational& alpha, int k, int l,
                                    std::optional<int> jmax = std::nullopt);

/// Generators (not minimalized) of W_0 V~^(k+alpha) O.
std::vector<Polynomial> whom_micromult_ideal(const QuasiHomogeneousGerm& g, const Rational& alpha, int k);

}  // namespace hwkit
