#include "hwkit/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace hwkit {

DimensionMismatch::DimensionMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

ParseError::ParseError(std::string msg, std::size_t position)
    : std::invalid_argument(msg + " at position " + std::to_string(position)), position_(position) {}

namespace {

void check_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t dim, std::size_t i, int power) {
  Monomial m(dim);
  m.exps_.at(i) = power;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  check_dim(dim(), other.dim());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  check_dim(dim(), o.dim());
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw std::domain_error("monomial " + o.str() + " does not divide " + str());
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  check_dim(dim(), o.dim());
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return r;
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Higher power of an earlier variable is larger.
  for (std::size_t i = 0; i < a.dim() && i < b.dim(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.dim() < b.dim();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t dim, const Rational& c) : dim_(dim) {
  if (!c.is_zero()) terms_.emplace(Monomial(dim), c);
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) : dim_(m.dim()) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t i) {
  return Polynomial(Monomial::variable(dim, i));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  check_dim(dim_, m.dim());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_dim(dim_, o.dim_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_dim(dim_, o.dim_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_dim(a.dim_, b.dim_);
  Polynomial r(a.dim_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  check_dim(dim_, m.dim());
  Polynomial r(dim_);
  for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(dim_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(dim_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * Rational(m[i]));
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  check_dim(dim_, d.dim_);
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial rem = *this;
  Polynomial quot(dim_);
  const Monomial& lm = d.leading_monomial();
  const Rational lc = d.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial q = rm / lm;
    Rational c = rem.terms_.rbegin()->second / lc;
    quot.add_term(q, c);
    rem -= d.times_monomial(q) * c;
  }
  return quot;
}

Polynomial Polynomial::embed(std::size_t new_dim) const {
  Polynomial r(new_dim);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(new_dim, 0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (i < new_dim)
        e[i] = m[i];
      else if (m[i] != 0)
        throw std::invalid_argument("embed would drop a variable that occurs");
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += m.str();
    } else {
      out += mag.str() + '*' + m.str();
    }
  }
  return out;
}

// ------------------------------------------------------------ WeightVector

WeightVector::WeightVector(std::vector<Rational> weights) : w_(std::move(weights)), total_(0) {
  for (const auto& x : w_) {
    if (x.sign() <= 0) throw std::invalid_argument("weights must be strictly positive, got " + x.str());
    total_ += x;
  }
}

WeightVector WeightVector::parse(std::string_view csv) {
  std::vector<Rational> ws;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto comma = csv.find(',', start);
    auto piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    ws.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WeightVector(std::move(ws));
}

Rational WeightVector::max() const {
  Rational m(0);
  for (const auto& x : w_) m = std::max(m, x);
  return m;
}

Rational weighted_degree(const Monomial& m, const WeightVector& w) {
  check_dim(m.dim(), w.dim());
  Rational d(0);
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m[i] != 0) d += Rational(m[i]) * w[i];
  return d;
}

std::optional<Rational> homogeneous_degree(const Polynomial& p, const WeightVector& w) {
  std::optional<Rational> deg;
  for (const auto& [m, c] : p.terms()) {
    Rational d = weighted_degree(m, w);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

// ----------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<Monomial> gens) : dim_(dim), gens_(std::move(gens)) {
  for (const auto& g : gens_) check_dim(dim_, g.dim());
  minimalize();
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) { return MonomialIdeal(dim, {Monomial(dim)}); }

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

void MonomialIdeal::minimalize() {
  // Ascending degree; within a degree, higher powers of earlier variables first.
  std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() > b.exponents();
  });
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens_) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  gens_ = std::move(kept);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  check_dim(dim_, m.dim());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contained_in(const MonomialIdeal& other) const {
  check_dim(dim_, other.dim_);
  return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return other.contains(g); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const {
  check_dim(dim_, o.dim_);
  std::vector<Monomial> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return MonomialIdeal(dim_, std::move(g));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& o) const {
  check_dim(dim_, o.dim_);
  std::vector<Monomial> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(a * b);
  return MonomialIdeal(dim_, std::move(g));
}

MonomialIdeal MonomialIdeal::scaled(const Monomial& m) const {
  std::vector<Monomial> g;
  for (const auto& a : gens_) g.push_back(a * m);
  return MonomialIdeal(dim_, std::move(g));
}

std::string MonomialIdeal::str() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str();
  }
  return out + ")";
}

bool ideal_contains(const MonomialIdeal& big, const MonomialIdeal& small) { return small.contained_in(big); }
bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) { return a + b; }
MonomialIdeal ideal_scale_by_monomial(const MonomialIdeal& a, const Monomial& m) { return a.scaled(m); }

std::vector<Monomial> monomials_up_to_weight(const WeightVector& w, const Rational& bound) {
  std::vector<Monomial> out;
  if (bound.sign() < 0) return out;
  Monomial cur(w.dim());
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& used) {
    if (i == w.dim()) {
      out.push_back(cur);
      return;
    }
    Rational deg = used;
    for (int e = 0; deg <= bound; ++e) {
      cur[i] = e;
      rec(i + 1, deg);
      deg += w[i];
    }
    cur[i] = 0;
  };
  rec(0, Rational(0));
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t dim, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(dim);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == dim) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

MonomialIdeal graded_ideal(const WeightVector& w, const Rational& gamma, bool strict) {
  // A minimal generator loses at most max(w) of degree when one variable is
  // removed, so its degree is at most max(gamma, 0) + max(w).
  Rational bound = std::max(gamma, Rational(0)) + w.max();
  std::vector<Monomial> gens;
  for (auto& m : monomials_up_to_weight(w, bound)) {
    Rational d = weighted_degree(m, w);
    if (strict ? d > gamma : d >= gamma) gens.push_back(m);
  }
  return MonomialIdeal(w.dim(), std::move(gens));
}

// ------------------------------------------------------------------ parser

namespace detail {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view t) : t_(t) {}

  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  char peek() {
    skip();
    return p_ < t_.size() ? t_[p_] : '\0';
  }
  std::size_t pos() {
    skip();
    return p_;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++p_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t s = p_;
    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
    return std::string(t_.substr(s, p_ - s));
  }
  bool at_end() { return peek() == '\0'; }

 private:
  std::string_view t_;
  std::size_t p_ = 0;
};

Factor parse_factor(Lexer& lx, std::size_t dim, std::string_view allow) {
  std::size_t at = lx.pos();
  char k = lx.peek();
  if (k == '\0' || allow.find(k) == std::string_view::npos) throw ParseError("expected a variable", at);
  lx.accept(k);
  Factor f{k, 0, 1};
  if (k != 's') {
    std::size_t ipos = lx.pos();
    std::string idx = lx.digits();
    if (idx.empty()) throw ParseError("expected a variable index", ipos);
    unsigned long i = std::stoul(idx);
    if (i == 0 || i > dim) throw ParseError("variable index out of range", ipos);
    f.index = i - 1;
  }
  if (lx.accept('^')) {
    std::size_t epos = lx.pos();
    std::string e = lx.digits();
    if (e.empty()) throw ParseError("expected an exponent", epos);
    f.power = std::stoi(e);
  }
  return f;
}

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, std::size_t dim, std::string_view allow) {
  Lexer lx(text);
  std::vector<ParsedTerm> out;
  bool negate = false;
  if (lx.accept('-'))
    negate = true;
  else
    lx.accept('+');
  while (true) {
    ParsedTerm term{Rational(1), {}};
    std::size_t at = lx.pos();
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string num = lx.digits();
      std::string den = "1";
      if (lx.accept('/')) {
        std::size_t dpos = lx.pos();
        den = lx.digits();
        if (den.empty()) throw ParseError("expected a denominator", dpos);
        if (mpz_class(den) == 0) throw ParseError("zero denominator", dpos);
      }
      term.coeff = Rational(mpq_class(mpz_class(num), mpz_class(den)));
      if (lx.accept('*')) {
        term.factors.push_back(parse_factor(lx, dim, allow));
        while (lx.accept('*')) term.factors.push_back(parse_factor(lx, dim, allow));
      }
    } else if (lx.peek() != '\0' && allow.find(lx.peek()) != std::string_view::npos) {
      term.factors.push_back(parse_factor(lx, dim, allow));
      while (lx.accept('*')) term.factors.push_back(parse_factor(lx, dim, allow));
    } else {
      throw ParseError("expected a term", at);
    }
    if (negate) term.coeff = -term.coeff;
    out.push_back(std::move(term));
    if (lx.at_end()) break;
    std::size_t opos = lx.pos();
    if (lx.accept('+')) {
      negate = false;
    } else if (lx.accept('-')) {
      negate = true;
    } else {
      throw ParseError("expected '+' or '-'", opos);
    }
  }
  return out;
}

}  // namespace detail

Polynomial poly_parse(std::string_view text, std::size_t dim) {
  Polynomial p(dim);
  for (const auto& t : detail::parse_terms(text, dim, "x")) {
    Monomial m(dim);
    for (const auto& f : t.factors) m[f.index] += f.power;
    p.add_term(m, t.coeff);
  }
  return p;
}

}  // namespace hwkit
