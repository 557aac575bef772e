#pragma once

// Exact commutative algebra over the rationals: monomials, polynomials,
// weight vectors and monomial ideals.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hwkit/rational.hpp"

namespace hwkit {

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t a, std::size_t b);
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string msg, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Exponent vector x^e of fixed length.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dim) : exps_(dim, 0) {}
  explicit Monomial(std::vector<int> exps);
  static Monomial variable(std::size_t dim, std::size_t i, int power = 1);

  std::size_t dim() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  /// "x1^2*x2", or "1" for the empty product.
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 most significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t dim) : dim_(dim) {}
  Polynomial(std::size_t dim, const Rational& c);
  Polynomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  int degree() const;  // -1 for the zero polynomial
  Rational coefficient(const Monomial& m) const;
  /// Leading monomial in grlex order; requires non-zero.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t i) const;

  /// Exact quotient by d if d divides *this, else nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  /// Drops or appends trailing variables (used to move between x and (x,s)).
  Polynomial embed(std::size_t new_dim) const;

  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_ = 0;
  TermMap terms_;
};

class WeightVector {
 public:
  /// Throws std::invalid_argument unless every weight is strictly positive.
  explicit WeightVector(std::vector<Rational> weights);
  static WeightVector parse(std::string_view csv);

  std::size_t dim() const { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  const std::vector<Rational>& weights() const { return w_; }
  const Rational& total() const { return total_; }
  Rational max() const;

 private:
  std::vector<Rational> w_;
  Rational total_;
};

Rational weighted_degree(const Monomial& m, const WeightVector& w);
/// Weighted degree if every term of p has the same weighted degree.
std::optional<Rational> homogeneous_degree(const Polynomial& p, const WeightVector& w);

class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t dim) : dim_(dim) {}
  MonomialIdeal(std::size_t dim, std::vector<Monomial> gens);
  static MonomialIdeal unit(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const Monomial& m) const;
  /// this ⊆ other
  bool contained_in(const MonomialIdeal& other) const;

  MonomialIdeal operator+(const MonomialIdeal& o) const;
  MonomialIdeal operator*(const MonomialIdeal& o) const;
  MonomialIdeal scaled(const Monomial& m) const;

  /// "(x1^2, x1*x2)"; the zero ideal prints as "(0)".
  std::string str() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }

 private:
  void minimalize();
  std::size_t dim_;
  std::vector<Monomial> gens_;
};

bool ideal_contains(const MonomialIdeal& big, const MonomialIdeal& small);
bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_scale_by_monomial(const MonomialIdeal& a, const Monomial& m);

/// Monomial ideal spanned by monomials of weighted degree > gamma (strict) or
/// >= gamma.
MonomialIdeal graded_ideal(const WeightVector& w, const Rational& gamma, bool strict);

/// All monomials of weighted degree <= bound.
std::vector<Monomial> monomials_up_to_weight(const WeightVector& w, const Rational& bound);
/// All monomials of total degree <= d, grlex ascending.
std::vector<Monomial> monomials_up_to_degree(std::size_t dim, int d);

Polynomial poly_parse(std::string_view text, std::size_t dim);

namespace detail {

/// One factor of a parsed product: kind is 'x', 'd' or 's'.
struct Factor {
  char kind;
  std::size_t index;  // 0-based; unused for 's'
  int power;
};

struct ParsedTerm {
  Rational coeff;
  std::vector<Factor> factors;
};

/// Shared tokenizer for the polynomial and operator grammars.  `allow` lists
/// the accepted factor kinds; indices are checked against dim.
std::vector<ParsedTerm> parse_terms(std::string_view text, std::size_t dim, std::string_view allow);

}  // namespace detail

}  // namespace hwkit
