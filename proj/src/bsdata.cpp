#include "hwkit/bsdata.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hwkit {

namespace {

int mult_in(const RootMap& roots, const Rational& r) {
  auto it = roots.find(r);
  return it == roots.end() ? 0 : it->second;
}

void require_unit_interval(const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha > Rational(1))
    throw std::invalid_argument("alpha must lie in (0,1], got " + alpha.str());
}

std::string factor_str(const Rational& r) {
  if (r.is_zero()) return "(s)";
  if (r.sign() < 0) return "(s+" + (-r).str() + ")";
  return "(s-" + r.str() + ")";
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedFormSnc:
      return "closed-form-snc";
    case Provenance::ClosedFormWhom:
      return "closed-form-whom";
    case Provenance::UserSupplied:
      return "user-supplied";
  }
  return "unknown";
}

std::string roots_str(const RootMap& roots) {
  if (roots.empty()) return "1";
  std::string out;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    out += factor_str(it->first);
    if (it->second > 1) out += "^" + std::to_string(it->second);
  }
  return out;
}

int BFunction::multiplicity(const Rational& r) const { return mult_in(roots, r); }

int BFunction::degree() const {
  int d = 0;
  for (const auto& [r, m] : roots) d += m;
  return d;
}

std::string BFunction::str() const { return roots_str(roots); }

int ReducedBFunction::multiplicity(const Rational& r) const { return mult_in(roots, r); }

std::string ReducedBFunction::str() const { return roots_str(roots); }

RootMap parse_roots(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  RootMap out;
  if (t.empty()) throw ParseError("empty b-function", 0);
  if (t.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed root list: ") + e.what(), 0);
    }
    for (const auto& e : j) {
      Rational r = Rational::parse(e.at("root").get<std::string>());
      int m = e.value("mult", 1);
      if (m <= 0) throw ParseError("multiplicities must be positive", 0);
      out[r] += m;
    }
    return out;
  }
  if (t == "1") return out;
  std::size_t p = 0;
  while (p < t.size()) {
    if (t[p] == '*' && p > 0) ++p;
    if (p >= t.size() || t[p] != '(') throw ParseError("expected '('", p);
    std::size_t close = t.find(')', p);
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis", p);
    std::string_view inner(t.data() + p + 1, close - p - 1);
    if (inner.empty() || inner.front() != 's') throw ParseError("expected a factor (s+c)", p + 1);
    inner.remove_prefix(1);
    Rational c(0);
    if (!inner.empty()) {
      if (inner.front() != '+' && inner.front() != '-') throw ParseError("expected '+' or '-'", p + 2);
      try {
        c = Rational::parse(inner);
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed constant in factor", p + 2);
      }
    }
    p = close + 1;
    int m = 1;
    if (p < t.size() && t[p] == '^') {
      std::size_t s = ++p;
      while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
      if (s == p) throw ParseError("expected an exponent", s);
      m = std::stoi(t.substr(s, p - s));
      if (m <= 0) throw ParseError("exponent must be positive", s);
    }
    out[-c] += m;
  }
  return out;
}

BFunction bfunction_snc(const std::vector<int>& a) {
  if (std::none_of(a.begin(), a.end(), [](int e) { return e > 0; }))
    throw std::invalid_argument("exponent vector needs a positive entry");
  BFunction b;
  b.provenance = Provenance::ClosedFormSnc;
  std::map<Rational, int> count;
  for (int ai : a) {
    if (ai < 0) throw std::invalid_argument("exponents must be non-negative");
    for (int j = 1; j <= ai; ++j) count[Rational(-j, ai)] += 1;
  }
  b.roots = std::move(count);
  return b;
}

BFunction bfunction_whom_isolated(const Polynomial& f, const WeightVector& w, const std::vector<Monomial>& basis) {
  if (f.dim() != w.dim()) throw DimensionMismatch(f.dim(), w.dim());
  BFunction b;
  b.provenance = Provenance::ClosedFormWhom;
  b.roots[Rational(-1)] = 1;
  std::map<Rational, bool> seen;
  for (const auto& m : basis) {
    if (m.dim() != f.dim()) throw DimensionMismatch(m.dim(), f.dim());
    seen[-(weighted_degree(m, w) + w.total())] = true;
  }
  for (const auto& [r, _] : seen) b.roots[r] += 1;
  return b;
}

ReducedBFunction reduce(const BFunction& b) {
  ReducedBFunction r{b.roots};
  auto it = r.roots.find(Rational(-1));
  if (it == r.roots.end()) throw std::invalid_argument("-1 is not a root of " + b.str());
  if (--it->second == 0) r.roots.erase(it);
  return r;
}

ReducedBFunction bl_chain(const ReducedBFunction& b, int l) {
  ReducedBFunction r;
  for (const auto& [root, m] : b.roots)
    if (m > l) r.roots[root] = m - l;
  return r;
}

std::optional<Rational> weighted_minimal_exponent(const ReducedBFunction& b, int l) {
  // Roots are negative, so the largest root gives the smallest exponent.
  for (auto it = b.roots.rbegin(); it != b.roots.rend(); ++it)
    if (it->second >= l + 1) return -it->first;
  return std::nullopt;
}

RootMap beta_factor(const RootMap& b, const Rational& alpha) {
  RootMap out;
  for (const auto& [lambda, m] : b)
    if (lambda > -alpha - Rational(1) && lambda < -alpha) out[-lambda - Rational(1)] += m;
  return out;
}

PairClass classify_pair(const ReducedBFunction& b, const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
  PairClass c;
  if (alpha > Rational(1)) {
    c.note = "alpha > 1: no pair (X, alpha D) is lc, plt or klt";
    return c;
  }
  auto a0 = weighted_minimal_exponent(b, 0);
  auto a1 = weighted_minimal_exponent(b, 1);
  // An empty reduced b-function means a smooth divisor: the minimal exponent is infinite.
  bool below = !a0 || alpha < *a0;
  bool equal = a0 && alpha == *a0;
  c.lc = below || equal;
  c.plt = below || (equal && alpha != Rational(1) && (!a1 || *a1 != *a0));
  c.klt = alpha != Rational(1) && below;
  return c;
}

std::pair<long, long> weight_bounds(const ReducedBFunction& b, const Rational& alpha, long n) {
  require_unit_interval(alpha);
  int mx = 0, sum = 0;
  for (const auto& [r, m] : b.roots) {
    Rational shift = -alpha - r;  // r = -alpha - i
    if (!shift.is_integer()) continue;
    mx = std::max(mx, m);
    if (shift.sign() >= 0) sum += m;
  }
  long fl = alpha.floor();
  long lower = n + mx + fl;
  long upper = std::max(lower, n + sum + fl);
  return {lower, upper};
}

long genlevel_bound(const ReducedBFunction& b, const Rational& alpha, long l, long n, bool graded) {
  require_unit_interval(alpha);
  if (l < 0) throw std::invalid_argument("weight index must be non-negative");
  auto at = weighted_minimal_exponent(b, 0);
  if (!at) throw std::invalid_argument("reduced b-function has no roots: minimal exponent is infinite");
  if (graded) {
    if (alpha == Rational(1)) return n - l - at->ceil();
    return n - l - (alpha + *at).ceil() + 1;
  }
  return std::min(n - 1, n - (alpha + *at).ceil() + 1 - alpha.floor());
}

bool hodge_pole_full(const ReducedBFunction& b, const Rational& alpha, long k, long l) {
  require_unit_interval(alpha);
  auto at = weighted_minimal_exponent(b, 0);
  if (!at) return true;
  Rational ka = Rational(k) + alpha;
  if (ka < *at) return true;
  if (ka != *at) return false;
  auto al = weighted_minimal_exponent(b, static_cast<int>(l));
  return !al || *al != *at;
}

bool roots_in_interval(const RootMap& roots, const Rational& lo, const Rational& hi, bool lo_open, bool hi_open) {
  for (const auto& [r, m] : roots) {
    if (lo_open ? !(r > lo) : !(r >= lo)) return false;
    if (hi_open ? !(r < hi) : !(r <= hi)) return false;
  }
  return true;
}

nlohmann::ordered_json roots_json(const RootMap& roots) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [r, m] : roots) arr.push_back({{"root", r.str()}, {"mult", m}});
  return arr;
}

nlohmann::ordered_json to_json(const BFunction& b) {
  nlohmann::ordered_json j;
  j["roots"] = roots_json(b.roots);
  j["provenance"] = to_string(b.provenance);
  j["verified"] = b.verified;
  return j;
}

}  // namespace hwkit
