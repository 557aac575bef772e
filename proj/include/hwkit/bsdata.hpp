#pragma once

// Bernstein-Sato root data and the invariants read off from it.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hwkit/exactalg.hpp"
#include "json.hpp"

namespace hwkit {

/// Multiset of rational roots; factor (s - r)^m for each entry r -> m.
using RootMap = std::map<Rational, int>;

enum class Provenance { ClosedFormSnc, ClosedFormWhom, UserSupplied };
std::string to_string(Provenance p);

struct BFunction {
  RootMap roots;
  Provenance provenance = Provenance::UserSupplied;
  bool verified = false;

  int multiplicity(const Rational& r) const;
  int degree() const;
  /// "(s+1)^2*(s+1/2)"
  std::string str() const;
};

struct ReducedBFunction {
  RootMap roots;

  int multiplicity(const Rational& r) const;
  bool empty() const { return roots.empty(); }
  std::string str() const;
};

std::string roots_str(const RootMap& roots);

/// Parses "(s+1)^2(s+5/6)" (optional '*' between factors) or a JSON array
/// [{"root":"-1","mult":2}, ...].  The empty product may be written "1".
RootMap parse_roots(std::string_view text);

BFunction bfunction_snc(const std::vector<int>& a);
BFunction bfunction_whom_isolated(const Polynomial& f, const WeightVector& w, const std::vector<Monomial>& milnor_basis);

ReducedBFunction reduce(const BFunction& b);
ReducedBFunction bl_chain(const ReducedBFunction& b, int l);
/// Smallest -r over roots r of multiplicity >= l+1.
std::optional<Rational> weighted_minimal_exponent(const ReducedBFunction& b, int l);

/// Roots lambda of b in (-alpha-1, -alpha) give factors (s + lambda + 1);
/// the result lists the roots -lambda-1 of those factors.
RootMap beta_factor(const RootMap& b, const Rational& alpha);

struct PairClass {
  bool lc = false;
  bool plt = false;
  bool klt = false;
  std::string note;
};
PairClass classify_pair(const ReducedBFunction& b, const Rational& alpha);

std::pair<long, long> weight_bounds(const ReducedBFunction& b, const Rational& alpha, long n);
long genlevel_bound(const ReducedBFunction& b, const Rational& alpha, long l, long n, bool graded);
bool hodge_pole_full(const ReducedBFunction& b, const Rational& alpha, long k, long l);
bool roots_in_interval(const RootMap& roots, const Rational& lo, const Rational& hi, bool lo_open, bool hi_open);

nlohmann::ordered_json roots_json(const RootMap& roots);
nlohmann::ordered_json to_json(const BFunction& b);

}  // namespace hwkit
