#pragma once

// Bounded-degree verification engine: spans inside i_{f,+}O = O[dt] and
// inside M(f^-alpha), b-function functional equations, V-filtration axiom
// checks and the psi / Phi maps.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hwkit/bsdata.hpp"
#include "hwkit/presentation.hpp"
#include "hwkit/snc.hpp"
#include "hwkit/weyl.hpp"
#include "hwkit/whom.hpp"
#include "json.hpp"

namespace hwkit {

/// sum_j g_j dt^j applied to the generator of i_{f,+}O (or of
/// i_{f,+}M(f^-twist)).
struct BfElement {
  std::map<int, Polynomial> layers;
  Rational twist;

  static BfElement layer(const Polynomial& g, int j, const Rational& twist = 0);
  bool is_zero() const { return layers.empty(); }
  int top_layer() const;  // -1 when zero
  void add(int j, const Polynomial& g);
  BfElement& operator+=(const BfElement& o);
  BfElement& operator*=(const Rational& c);
  BfElement times_monomial(const Monomial& m) const;
  std::string str() const;
  friend bool operator==(const BfElement& a, const BfElement& b) { return a.layers == b.layers; }
};

enum class BfOp { T, Dt, S, X, D };
/// Action of t, dt, s = -dt t, x_i, d_i.  d_i requires twist 0.
BfElement act(BfOp op, const BfElement& u, const Polynomial& f, std::size_t i = 0);
BfElement act_d_monomial(const Monomial& gamma, const BfElement& u, const Polynomial& f);
/// Applies an element of D_X[s] (s acting as -dt t).
BfElement act_operator(const WeylOperator& P, const BfElement& u, const Polynomial& f);

struct Bounds {
  int order = 4;
  int xdeg = 12;
  int tord = 6;
  nlohmann::ordered_json json() const;
};

enum class Verdict { Member, NotFoundAtBound, Refuted };
std::string to_string(Verdict v);

struct SpanCertificate {
  Verdict verdict = Verdict::NotFoundAtBound;
  Bounds bounds;
  /// For "member": terms coeff * cofactor * dt^dt * d^gamma applied to a
  /// generator.
  struct Term {
    Rational coeff;
    Monomial cofactor;
    Monomial gamma;
    int dt = 0;
    std::size_t generator = 0;
  };
  std::optional<std::vector<Term>> witness;
  std::string note;
  std::vector<SpanCertificate> parts;

  bool member() const { return verdict == Verdict::Member; }
  nlohmann::ordered_json json() const;
};

/// Combines sub-certificates: member iff all are.
SpanCertificate all_of(std::vector<SpanCertificate> parts, const Bounds& b, std::string note = {});

/// A generator of a D_X-submodule together with its operator budget
/// (F_budget D . elem); budget < 0 means the whole D_X-span.
struct SpanGen {
  BfElement elem;
  int budget = -1;
};

/// Realizes sum_g F_{min(budget, order)} D . g inside i_{f,+}O with
/// polynomial cofactors of degree <= xdeg.  The span is split along every
/// grading (coordinate gradings and an optional weight vector) for which f
/// and all generators are homogeneous.
class TruncatedSpan {
 public:
  /// With adjoin_dt the operators dt^i d^gamma, i + |gamma| <= order, are
  /// used instead of d^gamma.
  TruncatedSpan(const Polynomial& f, std::vector<SpanGen> gens, const Bounds& bounds,
                const std::optional<WeightVector>& weights = std::nullopt, bool adjoin_dt = false);
  ~TruncatedSpan();
  TruncatedSpan(TruncatedSpan&&) noexcept;

  /// Throws std::out_of_range when u has a layer beyond every seed.
  SpanCertificate membership(const BfElement& u);
  std::size_t seeds() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SpanCertificate membership(const BfElement& u, const std::vector<SpanGen>& gens, const Polynomial& f,
                           const Bounds& bounds, const std::optional<WeightVector>& weights = std::nullopt);

/// Row-reduced basis of the span of {m g} for m = dt^i x^b d^gamma within
/// the bounds (a small, ungraded computation).
std::vector<BfElement> truncated_span(const std::vector<BfElement>& gens, const Polynomial& f, const Bounds& bounds);

/// Re-evaluates a member witness exactly.
bool check_witness(const SpanCertificate& c, const BfElement& u, const std::vector<SpanGen>& gens,
                   const Polynomial& f);

// ----------------------------------------------------------------- b-functions

struct BfunctionCheck {
  SpanCertificate certificate;  // functional equation for b
  std::optional<WeylOperator> witness;
  /// One verdict per maximal proper divisor (root removed once).
  std::vector<std::pair<Rational, SpanCertificate>> divisors;
  bool minimal_at_bound() const;
};

/// Solves P(s) f^(s+1) = b(s) f^s over operators of total order <= order
/// and x-degree <= xdeg, then tries every maximal proper divisor of b.
BfunctionCheck verify_bfunction(const Polynomial& f, const RootMap& b, int order, int xdeg,
                                const std::optional<WeightVector>& weights = std::nullopt);

// ------------------------------------------------------------ V-filtrations

/// A candidate V^lambda given by D_X-generators (budgets for the t-order
/// filtered version).
using VFamily = std::function<std::vector<SpanGen>(const Rational& lambda, int jmax)>;

struct VCandidateSource {
  Polynomial f;
  std::optional<WeightVector> weights;
  VFamily v;         // V^lambda
  VFamily v_strict;  // V^{>lambda}
  std::function<int(const Rational&)> nilpotency;
};

/// f^(lambda+j) dt^j, j = 0..jmax.
std::vector<SpanGen> candidate_V_snc(const SncDivisor& d, const Rational& lambda, int jmax);
std::vector<SpanGen> candidate_V_snc_strict(const SncDivisor& d, const Rational& lambda, int jmax);
VCandidateSource snc_source(const SncDivisor& d);
/// Removes the generator at position `index` of V^lambda (negative control).
VCandidateSource corrupt(VCandidateSource src, const Rational& lambda, std::size_t index = 0);

/// O^{>=lambda+j-|w|} dt^j with budget k-j, for 0 < lambda <= 1; other
/// lambda through t and dt shifts.  With k < 0 budgets are dropped and
/// layers run up to jmax.
std::vector<SpanGen> candidate_V_whom(const QuasiHomogeneousGerm& g, const Rational& lambda, int k,
                                      std::optional<int> jmax = std::nullopt);
std::vector<SpanGen> candidate_V_whom_strict(const QuasiHomogeneousGerm& g, const Rational& lambda, int k,
                                             std::optional<int> jmax = std::nullopt);
VCandidateSource whom_source(const QuasiHomogeneousGerm& g);

struct AxiomReport {
  std::vector<std::pair<std::string, SpanCertificate>> checks;
  bool all_member() const;
  nlohmann::ordered_json json() const;
};

/// Generators up to layer bounds.tord span the targets' containers; the
/// targets themselves come from layers <= bounds.tord / 2.
AxiomReport verify_v_axioms(const VCandidateSource& src, const std::vector<Rational>& grid, const Bounds& bounds);

/// (s+lambda)^l gen in span(V-strict) for every candidate generator.
SpanCertificate kernel_filtration_check(const Polynomial& f, const Rational& lambda, int l,
                                        const std::vector<SpanGen>& kernel_gens,
                                        const std::vector<SpanGen>& v_strict, const Bounds& bounds,
                                        const std::optional<WeightVector>& weights = std::nullopt);

// ---------------------------------------------------------- psi, Phi, M(f^-a)

/// Q_j(s) = s (s+1) ... (s+j-1)
Rational pochhammer(const Rational& s, int j);

/// u dt^j -> u Q_j(beta) f^(-j-beta); returns (coefficient, pole step) pairs.
std::vector<std::pair<Polynomial, int>> psi_map(const BfElement& u, const Rational& beta);

/// Phi: i_{f,+}M(f^-alpha) -> i_{f,+}O(*f); throws std::domain_error when a
/// coefficient is not a polynomial.
BfElement phi_shift(const BfElement& u, const Polynomial& f);

/// Two-sided bounded comparison of the D-spans denoted by presentations,
/// computed inside M(f^-alpha) after normalizing alpha into (0,1].
SpanCertificate presentation_contained(const HodgePresentation& a, const HodgePresentation& b, const Polynomial& f,
                                       const Bounds& bounds,
                                       const std::optional<WeightVector>& weights = std::nullopt);
SpanCertificate presentations_equal(const HodgePresentation& a, const HodgePresentation& b, const Polynomial& f,
                                    const Bounds& bounds, const std::optional<WeightVector>& weights = std::nullopt);

/// Replaces every budget by `budget` (used to compare full D-modules).
HodgePresentation with_budget(HodgePresentation p, int budget);

/// Compares the D-modules generated by the summands (budgets ignored):
/// generators of one side against order-bounded spans of the other.
SpanCertificate dmodules_equal(const HodgePresentation& a, const HodgePresentation& b, const Polynomial& f,
                               const Bounds& bounds, const std::optional<WeightVector>& weights = std::nullopt);

/// numerator * f^(-pole-alpha)
struct MElement {
  Polynomial numerator;
  int pole = 0;
};

/// Applies an s-free operator to g f^(-pole-alpha); common factors of f are
/// cancelled while the pole stays non-negative.
MElement apply_to_m(const WeylOperator& Q, const Polynomial& g, int pole, const Rational& alpha, const Polynomial& f);

/// The O-module generators d^gamma (g f^(-pole-alpha)), |gamma| <= budget, of
/// a presentation (at the presentation's own alpha).
std::vector<MElement> presentation_seeds(const HodgePresentation& p, const Polynomial& f);

/// Whether the O-span of the presentation is all of O f^(-k-alpha): some
/// seed has pole exactly k and a numerator that is a unit at the origin.
/// Throws std::domain_error if a seed has a larger pole.
bool pole_full(const HodgePresentation& p, const Polynomial& f, int k);

struct CrosscheckResult {
  SpanCertificate kernel;   // the K_l candidate really lies in K_l
  SpanCertificate forward;  // psi-image inside the closed form
  SpanCertificate backward;
  HodgePresentation psi_image;
  HodgePresentation closed_form;
  bool member() const { return kernel.member() && forward.member() && backward.member(); }
  nlohmann::ordered_json json() const;
};

CrosscheckResult main_formula_crosscheck_snc(const SncDivisor& d, const Rational& alpha, int k, int l,
                                             const Bounds& bounds);
CrosscheckResult main_formula_crosscheck_whom(const QuasiHomogeneousGerm& g, const Rational& alpha, int k, int l,
                                              const Bounds& bounds);

/// Generators of F_k^{t-ord} K_l V^alpha used by the cross-check.
std::vector<SpanGen> snc_kernel_generators(const SncDivisor& d, const Rational& alpha, int k, int l, int jmax);
std::vector<SpanGen> whom_kernel_generators(const QuasiHomogeneousGerm& g, const Rational& alpha, int k, int l);

}  // namespace hwkit
