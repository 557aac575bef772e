#pragma once

// The Weyl algebra D[s] in normal order (x-factors left of d-factors, s
// central), its action on twisted powers g*f^(s+m), and bounded syzygies.

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hwkit/exactalg.hpp"

namespace hwkit {

struct WeylKey {
  Monomial x;
  Monomial d;
  int s = 0;
  int total_order() const { return d.degree() + s; }
  friend bool operator==(const WeylKey&, const WeylKey&) = default;
};

/// Graded lex on the concatenated exponent vector (x, d, s).
struct WeylKeyLess {
  bool operator()(const WeylKey& a, const WeylKey& b) const;
};

class WeylOperator {
 public:
  using TermMap = std::map<WeylKey, Rational, WeylKeyLess>;

  WeylOperator() = default;
  explicit WeylOperator(std::size_t dim) : dim_(dim) {}
  WeylOperator(std::size_t dim, const Rational& c);
  static WeylOperator monomial(const Monomial& x, const Monomial& d, int s, const Rational& c = 1);
  static WeylOperator x(std::size_t dim, std::size_t i);
  static WeylOperator d(std::size_t dim, std::size_t i);
  static WeylOperator s(std::size_t dim);
  /// Multiplication by p.
  static WeylOperator from_polynomial(const Polynomial& p);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_s() const;
  void add_term(const WeylKey& k, const Rational& c);

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const Rational& c);
  WeylOperator operator-() const;
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const Rational& c) { return a *= c; }
  friend WeylOperator operator*(const Rational& c, WeylOperator a) { return a *= c; }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  WeylOperator pow(unsigned e) const;

  /// Substitutes a rational value for s.
  WeylOperator evaluate_s(const Rational& value) const;
  /// Part of the operator with total order exactly k.
  WeylOperator homogeneous_part(int k) const;

  /// "x1*d1 - s + 1"
  std::string str() const;

  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_ = 0;
  TermMap terms_;
};

WeylOperator weyl_mul(const WeylOperator& a, const WeylOperator& b);

inline constexpr int kMinusInfinity = INT_MIN;
/// max(|d| + s) over the terms; kMinusInfinity for the zero operator.
int total_order(const WeylOperator& a);
/// Order in d only (the filtration F_k D); kMinusInfinity for zero.
int d_order(const WeylOperator& a);

WeylOperator weyl_parse(std::string_view text, std::size_t dim);

/// Action of an s-free operator on a polynomial.
Polynomial apply_to_polynomial(const WeylOperator& a, const Polynomial& g);

/// numerator(x, s) * f^(s + shift - pole).  The numerator lives in n+1
/// variables, the last one being s.
struct TwistedSection {
  Polynomial numerator;
  int pole = 0;
  int shift = 0;

  /// f^(s+shift) in n variables.
  static TwistedSection power(std::size_t n, int shift);
  bool is_zero() const { return numerator.is_zero(); }
  friend bool operator==(const TwistedSection&, const TwistedSection&) = default;
};

/// Chain-rule action; the result has minimal pole order.
TwistedSection apply_to_twisted(const WeylOperator& a, const Polynomial& f, const TwistedSection& sec);

/// All x^b d^g s^j with |g| + j <= k, |b| <= d, j <= s_bound (0 without s),
/// in WeylKeyLess order.
std::vector<WeylOperator> bounded_operator_basis(std::size_t dim, int order_bound, int xdeg_bound,
                                                 bool with_s = false, int s_bound = 0);
std::vector<WeylKey> bounded_key_basis(std::size_t dim, int order_bound, int xdeg_bound, bool with_s = false,
                                       int s_bound = 0);

struct SyzygyOptions {
  bool with_s = false;
  int s_bound = 0;
  /// Extra grading used to split the linear system when every target is
  /// homogeneous for it.  Coordinate multigradings are detected
  /// automatically.
  std::optional<WeightVector> weights;
};

struct SyzygyResult {
  std::vector<std::vector<WeylOperator>> tuples;
  int order_bound = 0;
  int xdeg_bound = 0;
};

/// Tuples (P_0..P_r) of operators from the bounded basis with
/// sum P_i * targets_i == 0, spanning all such tuples within the bounds.
SyzygyResult syzygy_kernel(const std::vector<WeylOperator>& targets, int order_bound, int xdeg_bound,
                           const SyzygyOptions& opts = {});

/// Gradings on D[s] induced from gradings of the variables: each grading
/// assigns deg x_i = w_i, deg d_i = -w_i, deg s = 0.
struct Grading {
  std::vector<std::vector<Rational>> components;  // one weight vector per component

  std::vector<Rational> degree(const WeylKey& k) const;
  std::vector<Rational> degree(const Monomial& m) const;
  /// Degree if every term agrees, else nullopt.
  std::optional<std::vector<Rational>> degree(const WeylOperator& op) const;
  std::optional<std::vector<Rational>> degree(const Polynomial& p) const;
};

/// Coordinate gradings (and optionally the weight grading) for which every
/// operator and polynomial listed is homogeneous.
Grading common_grading(std::size_t dim, const std::vector<WeylOperator>& ops, const std::vector<Polynomial>& polys,
                       const std::optional<WeightVector>& weights = std::nullopt);

}  // namespace hwkit
