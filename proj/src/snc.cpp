#include "hwkit/snc.hpp"

#include <algorithm>
#include <stdexcept>

namespace hwkit {

namespace {

void require_positive(const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive, got " + alpha.str());
}

}  // namespace

SncDivisor::SncDivisor(std::vector<int> a) : a_(std::move(a)) {
  if (std::any_of(a_.begin(), a_.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("exponents must be non-negative");
  if (std::none_of(a_.begin(), a_.end(), [](int e) { return e > 0; }))
    throw std::invalid_argument("exponent vector needs a positive entry");
}

SncDivisor SncDivisor::parse(std::string_view csv) {
  std::vector<int> a;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("empty entry in exponent list", 0);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != cur.size()) throw ParseError("malformed exponent '" + cur + "'", 0);
    a.push_back(v);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur.push_back(c);
  }
  flush();
  return SncDivisor(std::move(a));
}

Polynomial SncDivisor::f() const { return Polynomial(Monomial(a_)); }

std::vector<std::size_t> SncDivisor::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> SncDivisor::integral_support(const Rational& alpha) const {
  std::vector<std::size_t> out;
  for (std::size_t i : support())
    if ((alpha * Rational(a_[i])).is_integer()) out.push_back(i);
  return out;
}

SncDivisor SncDivisor::stratum(const std::vector<std::size_t>& vanishing) const {
  std::vector<int> b(a_.size(), 0);
  for (std::size_t i : vanishing) {
    if (i >= a_.size()) throw std::out_of_range("stratum index out of range");
    b[i] = a_[i];
  }
  return SncDivisor(std::move(b));
}

int snc_weight_top(const SncDivisor& d, const Rational& alpha) {
  require_positive(alpha);
  return static_cast<int>(d.integral_support(alpha).size());
}

MonomialIdeal snc_f0_ideal(const SncDivisor& d, const Rational& alpha, int l) {
  require_positive(alpha);
  const auto ia = d.integral_support(alpha);
  const int m = static_cast<int>(ia.size());
  if (l < 0 || l > m)
    throw std::invalid_argument("weight index l=" + std::to_string(l) + " outside [0," + std::to_string(m) + "]");
  const std::size_t n = d.dim();
  Monomial base(n);  // exponents ceil(alpha a_i) - 1 over the support
  for (std::size_t i : d.support()) base[i] = static_cast<int>((alpha * Rational(d.exponents()[i])).ceil()) - 1;
  std::vector<Monomial> gens;
  // J ranges over l-subsets of I_alpha; indices of I_alpha outside J get one extra power.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + l, true);
  do {
    Monomial g = base;
    for (int j = 0; j < m; ++j)
      if (!pick[j]) g[ia[j]] += 1;
    gens.push_back(g);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return MonomialIdeal(n, std::move(gens));
}

HodgePresentation snc_hodge_weight(const SncDivisor& d, const Rational& alpha, int k, int l) {
  if (k < 0) throw std::invalid_argument("Hodge index k must be non-negative");
  HodgePresentation p;
  p.alpha = alpha;
  p.add_ideal(k, snc_f0_ideal(d, alpha, l), 0);
  return p;
}

MonomialIdeal snc_multiplier_ideal(const SncDivisor& d, const Rational& alpha) {
  require_positive(alpha);
  Monomial m(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) m[i] = static_cast<int>((alpha * Rational(d.exponents()[i])).floor());
  return MonomialIdeal(d.dim(), {m});
}

MonomialIdeal snc_adjoint_specialization(const SncDivisor& d, const Rational& alpha) {
  if (snc_weight_top(d, alpha) < 1) throw std::invalid_argument("no coordinate has alpha*a_i integral");
  return snc_f0_ideal(d, alpha, 1);
}

Monomial snc_f_lambda(const SncDivisor& d, const Rational& lambda) {
  Monomial m(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    m[i] = std::max<long>((lambda * Rational(d.exponents()[i])).ceil() - 1, 0);
  return m;
}

}  // namespace hwkit
