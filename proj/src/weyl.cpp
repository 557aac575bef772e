#include "hwkit/weyl.hpp"

#include <algorithm>
#include <functional>

#include "hwkit/linalg.hpp"

namespace hwkit {

namespace {

void check_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

int key_degree(const WeylKey& k) { return k.x.degree() + k.d.degree() + k.s; }

std::string factor_str(char v, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += v + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string key_str(const WeylKey& k) {
  std::string out = factor_str('x', k.x);
  std::string d = factor_str('d', k.d);
  if (!d.empty()) out += (out.empty() ? "" : "*") + d;
  if (k.s > 0) {
    out += out.empty() ? "s" : "*s";
    if (k.s > 1) out += '^' + std::to_string(k.s);
  }
  return out.empty() ? "1" : out;
}

// Falling factorial b (b-1) ... (b-k+1).
long falling(int b, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= b - i;
  return r;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool WeylKeyLess::operator()(const WeylKey& a, const WeylKey& b) const {
  int da = key_degree(a), db = key_degree(b);
  if (da != db) return da < db;
  if (a.x != b.x) return a.x.exponents() < b.x.exponents();
  if (a.d != b.d) return a.d.exponents() < b.d.exponents();
  return a.s < b.s;
}

WeylOperator::WeylOperator(std::size_t dim, const Rational& c) : dim_(dim) {
  add_term(WeylKey{Monomial(dim), Monomial(dim), 0}, c);
}

WeylOperator WeylOperator::monomial(const Monomial& x, const Monomial& d, int s, const Rational& c) {
  check_dim(x.dim(), d.dim());
  WeylOperator r(x.dim());
  r.add_term(WeylKey{x, d, s}, c);
  return r;
}

WeylOperator WeylOperator::x(std::size_t dim, std::size_t i) {
  return monomial(Monomial::variable(dim, i), Monomial(dim), 0);
}

WeylOperator WeylOperator::d(std::size_t dim, std::size_t i) {
  return monomial(Monomial(dim), Monomial::variable(dim, i), 0);
}

WeylOperator WeylOperator::s(std::size_t dim) { return monomial(Monomial(dim), Monomial(dim), 1); }

WeylOperator WeylOperator::from_polynomial(const Polynomial& p) {
  WeylOperator r(p.dim());
  for (const auto& [m, c] : p.terms()) r.add_term(WeylKey{m, Monomial(p.dim()), 0}, c);
  return r;
}

bool WeylOperator::has_s() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.s > 0; });
}

void WeylOperator::add_term(const WeylKey& k, const Rational& c) {
  if (c.is_zero()) return;
  check_dim(dim_, k.x.dim());
  check_dim(dim_, k.d.dim());
  if (k.s < 0) throw std::invalid_argument("negative power of s");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  check_dim(dim_, o.dim_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  check_dim(dim_, o.dim_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) { return weyl_mul(a, b); }

WeylOperator WeylOperator::pow(unsigned e) const {
  WeylOperator r(dim_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = weyl_mul(r, *this);
  return r;
}

WeylOperator WeylOperator::evaluate_s(const Rational& value) const {
  WeylOperator r(dim_);
  for (const auto& [k, c] : terms_) r.add_term(WeylKey{k.x, k.d, 0}, c * hwkit::pow(value, k.s));
  return r;
}

WeylOperator WeylOperator::homogeneous_part(int k) const {
  WeylOperator r(dim_);
  for (const auto& [key, c] : terms_)
    if (key.total_order() == k) r.terms_.emplace(key, c);
  return r;
}

std::string WeylOperator::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    first = false;
    std::string m = key_str(k);
    if (m == "1")
      out += mag.str();
    else if (mag == Rational(1))
      out += m;
    else
      out += mag.str() + '*' + m;
  }
  return out;
}

WeylOperator weyl_mul(const WeylOperator& a, const WeylOperator& b) {
  check_dim(a.dim(), b.dim());
  const std::size_t n = a.dim();
  WeylOperator r(n);
  std::vector<int> kappa(n, 0);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // d^g x^b' = sum_k prod_i C(g_i, k_i) b'_i!/(b'_i-k_i)! x^(b'-k) d^(g-k)
      std::function<void(std::size_t, long)> rec = [&](std::size_t i, long coeff) {
        if (i == n) {
          Monomial x(n), d(n);
          for (std::size_t j = 0; j < n; ++j) {
            x[j] = ka.x[j] + kb.x[j] - kappa[j];
            d[j] = ka.d[j] + kb.d[j] - kappa[j];
          }
          r.add_term(WeylKey{std::move(x), std::move(d), ka.s + kb.s}, ca * cb * Rational(coeff));
          return;
        }
        int top = std::min(ka.d[i], kb.x[i]);
        for (int k = 0; k <= top; ++k) {
          kappa[i] = k;
          rec(i + 1, coeff * binom(ka.d[i], k) * falling(kb.x[i], k));
        }
        kappa[i] = 0;
      };
      rec(0, 1);
    }
  }
  return r;
}

int total_order(const WeylOperator& a) {
  int best = kMinusInfinity;
  for (const auto& [k, c] : a.terms()) best = std::max(best, k.total_order());
  return best;
}

int d_order(const WeylOperator& a) {
  int best = kMinusInfinity;
  for (const auto& [k, c] : a.terms()) best = std::max(best, k.d.degree());
  return best;
}

WeylOperator weyl_parse(std::string_view text, std::size_t dim) {
  WeylOperator r(dim);
  for (const auto& t : detail::parse_terms(text, dim, "xds")) {
    WeylOperator term(dim, t.coeff);
    for (const auto& f : t.factors) {
      WeylOperator g = f.kind == 'x'   ? WeylOperator::x(dim, f.index)
                       : f.kind == 'd' ? WeylOperator::d(dim, f.index)
                                       : WeylOperator::s(dim);
      term = weyl_mul(term, g.pow(static_cast<unsigned>(f.power)));
    }
    r += term;
  }
  return r;
}

Polynomial apply_to_polynomial(const WeylOperator& a, const Polynomial& g) {
  check_dim(a.dim(), g.dim());
  if (a.has_s()) throw std::invalid_argument("operator involves s; use apply_to_twisted");
  std::map<Monomial, Polynomial, GrlexLess> cache;
  Polynomial r(g.dim());
  for (const auto& [k, c] : a.terms()) {
    auto it = cache.find(k.d);
    if (it == cache.end()) {
      Polynomial h = g;
      for (std::size_t i = 0; i < k.d.dim(); ++i)
        for (int e = 0; e < k.d[i]; ++e) h = h.derivative(i);
      it = cache.emplace(k.d, std::move(h)).first;
    }
    r += it->second.times_monomial(k.x) * c;
  }
  return r;
}

TwistedSection TwistedSection::power(std::size_t n, int shift) {
  return TwistedSection{Polynomial(n + 1, Rational(1)), 0, shift};
}

TwistedSection apply_to_twisted(const WeylOperator& a, const Polynomial& f, const TwistedSection& sec) {
  const std::size_t n = f.dim();
  check_dim(a.dim(), n);
  check_dim(sec.numerator.dim(), n + 1);
  const Polynomial fe = f.embed(n + 1);
  const Polynomial svar = Polynomial::variable(n + 1, n);
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(fe.derivative(i));

  struct Entry {
    Polynomial num;
    int pole;
  };
  std::map<Monomial, Entry, GrlexLess> cache;
  cache.emplace(Monomial(n), Entry{sec.numerator, sec.pole});
  std::function<const Entry&(const Monomial&)> derive = [&](const Monomial& g) -> const Entry& {
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    std::size_t i = 0;
    while (g[i] == 0) ++i;
    Monomial prev = g;
    prev[i] -= 1;
    Entry p = derive(prev);
    // d_i(N f^(s+e)) = (d_i(N) f + (s+e) N d_i(f)) f^(s+e-1)
    Polynomial se = svar + Polynomial(n + 1, Rational(sec.shift - p.pole));
    Entry next{p.num.derivative(i) * fe + se * p.num * partials[i], p.pole + 1};
    return cache.emplace(g, std::move(next)).first->second;
  };

  int top = 0;
  for (const auto& [k, c] : a.terms()) top = std::max(top, derive(k.d).pole);
  std::vector<Polynomial> fpow{Polynomial(n + 1, Rational(1))};
  auto fpower = [&](int e) -> const Polynomial& {
    while (static_cast<int>(fpow.size()) <= e) fpow.push_back(fpow.back() * fe);
    return fpow[e];
  };

  Polynomial num(n + 1);
  for (const auto& [k, c] : a.terms()) {
    const Entry& e = derive(k.d);
    std::vector<int> ex(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ex[i] = k.x[i];
    ex[n] = k.s;
    num += (e.num * fpower(top - e.pole)).times_monomial(Monomial(std::move(ex))) * c;
  }
  TwistedSection out{std::move(num), top, sec.shift};
  if (out.numerator.is_zero()) {
    out.pole = 0;
    return out;
  }
  while (out.pole > 0) {
    auto q = out.numerator.divide_exact(fe);
    if (!q) break;
    out.numerator = std::move(*q);
    --out.pole;
  }
  return out;
}

std::vector<WeylKey> bounded_key_basis(std::size_t dim, int order_bound, int xdeg_bound, bool with_s,
                                       int s_bound) {
  std::vector<WeylKey> out;
  if (order_bound < 0 || xdeg_bound < 0) return out;
  const int smax = with_s ? std::min(s_bound, order_bound) : 0;
  auto xs = monomials_up_to_degree(dim, xdeg_bound);
  for (int j = 0; j <= smax; ++j) {
    auto ds = monomials_up_to_degree(dim, order_bound - j);
    for (const auto& x : xs)
      for (const auto& d : ds) out.push_back(WeylKey{x, d, j});
  }
  std::sort(out.begin(), out.end(), WeylKeyLess{});
  return out;
}

std::vector<WeylOperator> bounded_operator_basis(std::size_t dim, int order_bound, int xdeg_bound, bool with_s,
                                                 int s_bound) {
  std::vector<WeylOperator> out;
  for (auto& k : bounded_key_basis(dim, order_bound, xdeg_bound, with_s, s_bound))
    out.push_back(WeylOperator::monomial(k.x, k.d, k.s));
  return out;
}

std::vector<Rational> Grading::degree(const WeylKey& k) const {
  std::vector<Rational> out;
  out.reserve(components.size());
  for (const auto& w : components) {
    Rational v;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (k.x[i] != k.d[i]) v += w[i] * Rational(k.x[i] - k.d[i]);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Rational> Grading::degree(const Monomial& m) const {
  return degree(WeylKey{m, Monomial(m.dim()), 0});
}

std::optional<std::vector<Rational>> Grading::degree(const WeylOperator& op) const {
  std::optional<std::vector<Rational>> deg;
  for (const auto& [k, c] : op.terms()) {
    auto d = degree(k);
    if (!deg)
      deg = std::move(d);
    else if (*deg != d)
      return std::nullopt;
  }
  if (!deg) deg = std::vector<Rational>(components.size());
  return deg;
}

std::optional<std::vector<Rational>> Grading::degree(const Polynomial& p) const {
  return degree(WeylOperator::from_polynomial(p));
}

Grading common_grading(std::size_t dim, const std::vector<WeylOperator>& ops, const std::vector<Polynomial>& polys,
                       const std::optional<WeightVector>& weights) {
  std::vector<std::vector<Rational>> candidates;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> e(dim);
    e[i] = 1;
    candidates.push_back(std::move(e));
  }
  if (weights && weights->dim() == dim) candidates.push_back(weights->weights());
  Grading g;
  for (auto& c : candidates) {
    Grading single{{c}};
    bool ok = std::all_of(ops.begin(), ops.end(), [&](const auto& o) { return single.degree(o).has_value(); }) &&
              std::all_of(polys.begin(), polys.end(), [&](const auto& p) { return single.degree(p).has_value(); });
    if (ok) g.components.push_back(std::move(c));
  }
  return g;
}

SyzygyResult syzygy_kernel(const std::vector<WeylOperator>& targets, int order_bound, int xdeg_bound,
                           const SyzygyOptions& opts) {
  if (targets.empty()) throw std::invalid_argument("syzygy_kernel needs at least one target");
  const std::size_t n = targets.front().dim();
  for (const auto& t : targets) check_dim(t.dim(), n);
  SyzygyResult result;
  result.order_bound = order_bound;
  result.xdeg_bound = xdeg_bound;

  const Grading grading = common_grading(n, targets, {}, opts.weights);
  const auto basis = bounded_key_basis(n, order_bound, xdeg_bound, opts.with_s, opts.s_bound);

  struct Unknown {
    std::size_t target;
    std::size_t basis;
  };
  struct Block {
    std::vector<Unknown> unknowns;
    std::vector<SparseVec> images;
  };
  std::map<std::vector<Rational>, Block> blocks;
  CoordIndex<WeylKey, WeylKeyLess> coords;

  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (targets[t].is_zero()) continue;
    const auto tdeg = *grading.degree(targets[t]);
    std::map<Monomial, WeylOperator, GrlexLess> dcache;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const WeylKey& k = basis[b];
      auto it = dcache.find(k.d);
      if (it == dcache.end())
        it = dcache.emplace(k.d, weyl_mul(WeylOperator::monomial(Monomial(n), k.d, 0), targets[t])).first;
      std::map<std::uint32_t, Rational> img;
      for (const auto& [tk, c] : it->second.terms()) {
        WeylKey shifted{tk.x * k.x, tk.d, tk.s + k.s};
        img[coords(shifted)] += c;
      }
      auto deg = grading.degree(k);
      for (std::size_t i = 0; i < deg.size(); ++i) deg[i] += tdeg[i];
      Block& blk = blocks[deg];
      blk.unknowns.push_back({t, b});
      blk.images.push_back(sparse_from_map(img));
    }
  }

  for (auto& [deg, blk] : blocks) {
    EchelonBasis eb;
    for (std::size_t u = 0; u < blk.unknowns.size(); ++u) {
      SparseVec rel;
      if (eb.insert(blk.images[u], static_cast<std::uint32_t>(u), &rel)) continue;
      std::vector<WeylOperator> tuple(targets.size(), WeylOperator(n));
      for (const auto& [label, c] : rel) {
        const Unknown& uk = blk.unknowns[label];
        const WeylKey& k = basis[uk.basis];
        tuple[uk.target].add_term(k, c);
      }
      result.tuples.push_back(std::move(tuple));
    }
  }
  return result;
}

}  // namespace hwkit
