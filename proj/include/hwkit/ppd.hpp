#pragma once

// Gamma-ideals of Euler-homogeneous divisors and the syzygy formulas for
// the weight and Hodge filtrations on M(f^-alpha).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hwkit/bsdata.hpp"
#include "hwkit/presentation.hpp"
#include "hwkit/vforacle.hpp"
#include "hwkit/weyl.hpp"
#include "json.hpp"

namespace hwkit {

struct AnnihilatorInput {
  Polynomial f;
  WeylOperator E;                   // Euler field, E(f) = f
  std::vector<WeylOperator> zetas;  // s-free generators of ann_D f^(s-1)
  Rational alpha;
  BFunction b;
  bool pp_asserted = false;
};

/// Thrown when one or more hypotheses fail; each violation is listed.
class HypothesisError : public std::invalid_argument {
 public:
  explicit HypothesisError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Header lines "f:", "E:", "alpha:", "b:", "pp:"; every other non-empty
/// line (after '#' comments are stripped) is an annihilating operator.  The
/// dimension is the largest variable index that occurs.
AnnihilatorInput parse_annihilator(std::string_view text);

bool check_annihilator(const WeylOperator& zeta, const Polynomial& f);

/// Every violated hypothesis (empty when the input is admissible).
std::vector<std::string> validate(const AnnihilatorInput& inp);

/// Weights w with E = sum w_i x_i d_i, if E has that shape.
std::optional<WeightVector> euler_weights(const WeylOperator& E);

struct GammaPresentation {
  std::vector<WeylOperator> generators;  // f, beta(-s), zetas, E - s + 1
  std::optional<int> level;
  Rational alpha;                        // alpha, or alpha + epsilon for W_0
  std::optional<Rational> epsilon;
  RootMap beta;                          // factors (s - c)^m keyed by c
  nlohmann::ordered_json json() const;
};

/// Half the smallest positive distance from -alpha (and -alpha-1) to a root.
Rational gamma_epsilon(const RootMap& roots, const Rational& alpha);

/// Gamma_{f,-alpha}; for l = 0 the W_0 sub-ideal Gamma_{f,-alpha-eps}.  For
/// l > 0 the generators are those of Gamma and `level` records l.
GammaPresentation gamma_ideal(const AnnihilatorInput& inp, std::optional<int> l = std::nullopt);

/// Multiplicity of -alpha-1 as a root of b.
int weight_top(const AnnihilatorInput& inp);

struct PpdResult {
  std::vector<WeylOperator> operators;  // Q with Q f^(-1-alpha) generating
  HodgePresentation presentation;
  Bounds bounds;
  bool inconclusive = false;
  bool conditional = false;  // depends on the parametric-primality assertion
  std::string note;
  nlohmann::ordered_json json() const;
};

/// p_1 of the kernel of (P_0..P_{m+1}) -> P_0 (E+alpha+1)^l + sum P_i zeta_i
/// + P_{m+1} f at the bounds.  The weight module is the D-span of the
/// presentation (compare with dmodules_equal).
PpdResult weight_module_generators(const AnnihilatorInput& inp, int l, const Bounds& bounds);

/// phi_{-alpha}(W_l Gamma cap F_k^# D[s]) f^(-1-alpha).
PpdResult hodge_on_weight(const AnnihilatorInput& inp, int l, int k, const Bounds& bounds);

/// ((p_1(K_{l,0}) + D(E+1)) cap F_k D) f^(-1); l = nullopt gives F_k D f^(-1).
PpdResult hodge_rho21(const AnnihilatorInput& inp, std::optional<int> l, int k, const Bounds& bounds);

}  // namespace hwkit
