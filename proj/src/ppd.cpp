#include "hwkit/ppd.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "hwkit/linalg.hpp"

namespace hwkit {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

void require_valid(const AnnihilatorInput& inp) {
  auto v = validate(inp);
  if (!v.empty()) throw HypothesisError(std::move(v));
}

// prod (-s - c)^m
WeylOperator beta_of_minus_s(const RootMap& beta, std::size_t n) {
  WeylOperator out(n, Rational(1));
  for (const auto& [c, m] : beta) {
    WeylOperator factor = -WeylOperator::s(n) - WeylOperator(n, c);
    out = weyl_mul(out, factor.pow(static_cast<unsigned>(m)));
  }
  return out;
}

// Coordinates with the filtered part (total order <= k, or d-order <= k)
// indexed above every other coordinate, so echelon rows pivoting there lie
// entirely inside it.
class SplitIndex {
 public:
  static constexpr std::uint32_t kOffset = 1u << 30;
  SplitIndex(int k, bool count_s) : k_(k), count_s_(count_s) {}

  std::uint32_t operator()(const WeylKey& key) {
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    std::uint32_t idx = inside(key) ? kOffset + static_cast<std::uint32_t>(in_.size())
                                    : static_cast<std::uint32_t>(out_.size());
    (inside(key) ? in_ : out_).push_back(key);
    map_.emplace(key, idx);
    return idx;
  }
  const WeylKey& key(std::uint32_t i) const { return i >= kOffset ? in_[i - kOffset] : out_[i]; }

  SparseVec vec(const WeylOperator& op) {
    std::map<std::uint32_t, Rational> m;
    for (const auto& [k, c] : op.terms()) m[(*this)(k)] += c;
    return sparse_from_map(m);
  }
  WeylOperator op(const SparseVec& v, std::size_t n) const {
    WeylOperator out(n);
    for (const auto& [i, c] : v) out.add_term(key(i), c);
    return out;
  }

 private:
  bool inside(const WeylKey& key) const { return (count_s_ ? key.total_order() : key.d.degree()) <= k_; }
  int k_;
  bool count_s_;
  std::map<WeylKey, std::uint32_t, WeylKeyLess> map_;
  std::vector<WeylKey> in_, out_;
};

// Linearly independent subset, in input order.
std::vector<WeylOperator> independent(const std::vector<WeylOperator>& ops) {
  CoordIndex<WeylKey, WeylKeyLess> coords;
  EchelonBasis eb(false);
  std::vector<WeylOperator> out;
  for (const auto& op : ops) {
    std::map<std::uint32_t, Rational> m;
    for (const auto& [k, c] : op.terms()) m[coords(k)] += c;
    if (eb.insert(sparse_from_map(m), 0)) out.push_back(op);
  }
  return out;
}

bool in_span(const WeylOperator& target, const std::vector<WeylOperator>& ops) {
  CoordIndex<WeylKey, WeylKeyLess> coords;
  EchelonBasis eb(false);
  auto vec = [&](const WeylOperator& op) {
    std::map<std::uint32_t, Rational> m;
    for (const auto& [k, c] : op.terms()) m[coords(k)] += c;
    return sparse_from_map(m);
  };
  for (const auto& op : ops) eb.insert(vec(op), 0);
  return eb.contains(vec(target));
}

std::vector<WeylOperator> p1_kernel(const AnnihilatorInput& inp, int l, const Bounds& bounds) {
  const std::size_t n = inp.f.dim();
  WeylOperator shifted = inp.E + WeylOperator(n, inp.alpha + Rational(1));
  std::vector<WeylOperator> targets{shifted.pow(static_cast<unsigned>(l))};
  for (const auto& z : inp.zetas) targets.push_back(z);
  targets.push_back(WeylOperator::from_polynomial(inp.f));
  SyzygyOptions opts;
  opts.weights = euler_weights(inp.E);
  auto res = syzygy_kernel(targets, bounds.order, bounds.xdeg, opts);
  std::vector<WeylOperator> firsts;
  for (auto& t : res.tuples)
    if (!t.front().is_zero()) firsts.push_back(std::move(t.front()));
  return independent(firsts);
}

int xdegree(const WeylOperator& op) {
  int d = 0;
  for (const auto& [k, c] : op.terms()) d = std::max(d, static_cast<int>(k.x.degree()));
  return d;
}

// Drops operators lying in the left D-span of earlier kept ones, tested on
// multiples x^b d^g Q with order <= order_bound and x-degree <= xdeg.
std::vector<WeylOperator> minimize_left(std::vector<WeylOperator> ops, int order_bound, int xdeg) {
  std::stable_sort(ops.begin(), ops.end(), [](const WeylOperator& a, const WeylOperator& b) {
    return std::pair(total_order(a), xdegree(a)) < std::pair(total_order(b), xdegree(b));
  });
  const std::size_t n = ops.empty() ? 0 : ops.front().dim();
  CoordIndex<WeylKey, WeylKeyLess> coords;
  auto vec = [&](const WeylOperator& op) {
    std::map<std::uint32_t, Rational> m;
    for (const auto& [k, c] : op.terms()) m[coords(k)] += c;
    return sparse_from_map(m);
  };
  EchelonBasis eb(false);
  std::vector<WeylOperator> kept;
  for (const auto& q : ops) {
    if (eb.contains(vec(q))) continue;
    kept.push_back(q);
    const int room = order_bound - total_order(q);
    for (const auto& gamma : monomials_up_to_degree(n, std::max(room, 0))) {
      WeylOperator dq = weyl_mul(WeylOperator::monomial(Monomial(n), gamma, 0), q);
      for (const auto& beta : monomials_up_to_degree(n, xdeg))
        eb.insert(vec(weyl_mul(WeylOperator::monomial(beta, Monomial(n), 0), dq)), 0);
    }
  }
  return kept;
}

// Evaluates Q f^(-1-alpha) and keeps the operators whose values are not in
// the O-span (x-degree bounded) of earlier values.
struct Presented {
  std::vector<WeylOperator> ops;
  HodgePresentation presentation;
};

Presented present(const std::vector<WeylOperator>& ops, const AnnihilatorInput& inp, bool o_minimize) {
  const std::size_t n = inp.f.dim();
  std::vector<std::pair<WeylOperator, MElement>> vals;
  for (const auto& Q : ops) {
    MElement e = apply_to_m(Q, Polynomial(n, Rational(1)), 1, inp.alpha, inp.f);
    if (!e.numerator.is_zero()) vals.emplace_back(Q, std::move(e));
  }
  Presented out;
  out.presentation.alpha = inp.alpha;
  if (o_minimize && !vals.empty()) {
    int P = 0;
    for (const auto& [q, e] : vals) P = std::max(P, e.pole);
    std::vector<Polynomial> lifted;
    int maxdeg = 0;
    for (const auto& [q, e] : vals) {
      lifted.push_back(e.numerator * inp.f.pow(static_cast<unsigned>(P - e.pole)));
      maxdeg = std::max(maxdeg, static_cast<int>(lifted.back().degree()));
    }
    std::vector<std::size_t> order(vals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(lifted[a].degree(), vals[a].second.pole) < std::pair(lifted[b].degree(), vals[b].second.pole);
    });
    CoordIndex<Monomial, GrlexLess> coords;
    auto vec = [&](const Polynomial& p) {
      std::map<std::uint32_t, Rational> m;
      for (const auto& [mono, c] : p.terms()) m[coords(mono)] += c;
      return sparse_from_map(m);
    };
    EchelonBasis eb(false);
    for (std::size_t i : order) {
      if (eb.contains(vec(lifted[i]))) continue;
      out.ops.push_back(vals[i].first);
      out.presentation.add(0, vals[i].second.numerator, vals[i].second.pole);
      for (const auto& beta : monomials_up_to_degree(n, maxdeg - static_cast<int>(lifted[i].degree())))
        eb.insert(vec(lifted[i].times_monomial(beta)), 0);
    }
    return out;
  }
  for (auto& [q, e] : vals) {
    out.ops.push_back(q);
    out.presentation.add(0, e.numerator, e.pole);
  }
  return out;
}

using DegreeKey = std::vector<Rational>;

}  // namespace

HypothesisError::HypothesisError(std::vector<std::string> violations)
    : std::invalid_argument("hypothesis violated: " + join(violations)), violations_(std::move(violations)) {}

AnnihilatorInput parse_annihilator(std::string_view text) {
  std::size_t dim = 0;
  {
    static const std::regex var("[xd]([0-9]+)");
    std::string s(text);
    for (std::sregex_iterator it(s.begin(), s.end(), var), end; it != end; ++it)
      dim = std::max<std::size_t>(dim, std::stoul((*it)[1].str()));
  }
  if (dim == 0) throw std::invalid_argument("annihilator file mentions no variables");
  AnnihilatorInput inp;
  inp.E = WeylOperator(dim);
  bool have_f = false, have_e = false, have_alpha = false, have_b = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string t = trim(line);
    if (t.empty()) continue;
    try {
      auto colon = t.find(':');
      std::string head = colon == std::string::npos ? "" : trim(t.substr(0, colon));
      std::string body = colon == std::string::npos ? "" : trim(t.substr(colon + 1));
      if (head == "f") {
        inp.f = poly_parse(body, dim);
        have_f = true;
      } else if (head == "E") {
        inp.E = weyl_parse(body, dim);
        have_e = true;
      } else if (head == "alpha") {
        inp.alpha = Rational::parse(body);
        have_alpha = true;
      } else if (head == "b") {
        inp.b.roots = parse_roots(body);
        have_b = true;
      } else if (head == "pp") {
        if (body != "true" && body != "false") throw std::invalid_argument("pp must be true or false");
        inp.pp_asserted = body == "true";
      } else if (!head.empty()) {
        throw std::invalid_argument("unknown header '" + head + "'");
      } else {
        inp.zetas.push_back(weyl_parse(t, dim));
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  std::vector<std::string> missing;
  if (!have_f) missing.push_back("f");
  if (!have_e) missing.push_back("E");
  if (!have_alpha) missing.push_back("alpha");
  if (!have_b) missing.push_back("b");
  if (!missing.empty()) throw std::invalid_argument("missing header(s): " + join(missing));
  return inp;
}

bool check_annihilator(const WeylOperator& zeta, const Polynomial& f) {
  return apply_to_twisted(zeta, f, TwistedSection::power(f.dim(), -1)).is_zero();
}

std::vector<std::string> validate(const AnnihilatorInput& inp) {
  std::vector<std::string> out;
  const std::size_t n = inp.f.dim();
  if (inp.f.is_zero()) out.push_back("f is zero");
  if (inp.alpha.sign() < 0) out.push_back("alpha must be >= 0");
  if (inp.E.dim() != n || inp.E.has_s() || d_order(inp.E) != 1) {
    out.push_back("E must be an s-free operator of order 1");
  } else if (apply_to_polynomial(inp.E, inp.f) != inp.f) {
    out.push_back("E(f) != f (not Euler-homogeneous)");
  }
  for (std::size_t i = 0; i < inp.zetas.size(); ++i) {
    const auto& z = inp.zetas[i];
    std::string name = "zeta_" + std::to_string(i + 1) + " = " + z.str();
    if (z.dim() != n) out.push_back(name + " has the wrong dimension");
    else if (z.has_s()) out.push_back(name + " contains s");
    else if (!check_annihilator(z, inp.f)) out.push_back(name + " does not annihilate f^(s-1)");
  }
  if (inp.b.roots.empty()) out.push_back("b has no roots");
  else if (!roots_in_interval(inp.b.roots, Rational(-2) - inp.alpha, -inp.alpha, true, true))
    out.push_back("roots of b not contained in (-2-alpha, -alpha)");
  return out;
}

std::optional<WeightVector> euler_weights(const WeylOperator& E) {
  const std::size_t n = E.dim();
  std::vector<Rational> w(n);
  for (const auto& [k, c] : E.terms()) {
    if (k.s != 0 || k.x.degree() != 1 || k.d.degree() != 1 || k.x != k.d) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
      if (k.x[i] == 1) w[i] = c;
  }
  for (const auto& wi : w)
    if (wi.sign() <= 0) return std::nullopt;
  return WeightVector(w);
}

nlohmann::ordered_json GammaPresentation::json() const {
  nlohmann::ordered_json j;
  j["alpha"] = alpha.str();
  j["beta"] = roots_json(beta);
  j["epsilon"] = epsilon ? nlohmann::ordered_json(epsilon->str()) : nlohmann::ordered_json(nullptr);
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : generators) gens.push_back(g.str());
  j["generators"] = gens;
  j["level"] = level ? nlohmann::ordered_json(*level) : nlohmann::ordered_json(nullptr);
  return j;
}

Rational gamma_epsilon(const RootMap& roots, const Rational& alpha) {
  std::optional<Rational> gap;
  for (const auto& [lambda, m] : roots) {
    for (const Rational& d : {abs(lambda + alpha), abs(lambda + alpha + Rational(1))})
      if (d.sign() > 0 && (!gap || d < *gap)) gap = d;
  }
  return gap ? *gap / Rational(2) : Rational(1, 2);
}

GammaPresentation gamma_ideal(const AnnihilatorInput& inp, std::optional<int> l) {
  require_valid(inp);
  if (l && *l < 0) throw std::invalid_argument("weight level must be non-negative");
  const std::size_t n = inp.f.dim();
  GammaPresentation g;
  g.level = l;
  g.alpha = inp.alpha;
  if (l && *l == 0) {
    g.epsilon = gamma_epsilon(inp.b.roots, inp.alpha);
    g.alpha = inp.alpha + *g.epsilon;
  }
  g.beta = beta_factor(inp.b.roots, g.alpha);
  g.generators.push_back(WeylOperator::from_polynomial(inp.f));
  g.generators.push_back(beta_of_minus_s(g.beta, n));
  for (const auto& z : inp.zetas) g.generators.push_back(z);
  g.generators.push_back(inp.E - WeylOperator::s(n) + WeylOperator(n, Rational(1)));
  return g;
}

int weight_top(const AnnihilatorInput& inp) { return inp.b.multiplicity(-inp.alpha - Rational(1)); }

nlohmann::ordered_json PpdResult::json() const {
  nlohmann::ordered_json j;
  j["bounds"] = bounds.json();
  j["inconclusive"] = inconclusive;
  j["note"] = note;
  auto ops = nlohmann::ordered_json::array();
  for (const auto& q : operators) ops.push_back(q.str());
  j["operators"] = ops;
  j["presentation"] = to_json(presentation);
  j["provenance"] = conditional ? "conditional" : "unconditional";
  return j;
}

PpdResult weight_module_generators(const AnnihilatorInput& inp, int l, const Bounds& bounds) {
  require_valid(inp);
  const int top = weight_top(inp);
  if (l < 0 || l >= top)
    throw HypothesisError({"weight level l=" + std::to_string(l) + " must satisfy 0 <= l < m(-alpha-1) = " +
                           std::to_string(top)});
  PpdResult r;
  r.bounds = bounds;
  auto kernel = p1_kernel(inp, l, bounds);
  const bool has_f = in_span(WeylOperator::from_polynomial(inp.f), kernel);
  auto ops = minimize_left(std::move(kernel), bounds.order, bounds.xdeg);
  auto pres = present(ops, inp, false);
  r.operators = std::move(pres.ops);
  r.presentation = std::move(pres.presentation);
  r.inconclusive = r.operators.empty();
  if (r.inconclusive) {
    r.note = "no kernel elements at the bounds";
  } else if (!has_f) {
    r.inconclusive = true;
    r.note = "f not in p_1(K) at the bounds";
  } else {
    r.note = "complete at bounds; the weight module is the D-span of the presentation";
  }
  return r;
}

PpdResult hodge_on_weight(const AnnihilatorInput& inp, int l, int k, const Bounds& bounds) {
  require_valid(inp);
  if (l < 0 || k < 0) throw std::invalid_argument("l and k must be non-negative");
  if (k >= 1 && !inp.pp_asserted)
    throw HypothesisError({"parametric primality not asserted (required for k >= 1)"});
  const std::size_t n = inp.f.dim();
  const auto gamma = gamma_ideal(inp).generators;
  const auto gamma0 = gamma_ideal(inp, 0).generators;
  std::vector<WeylOperator> all = gamma;
  all.insert(all.end(), gamma0.begin(), gamma0.end());
  const Grading grading = common_grading(n, all, {inp.f}, euler_weights(inp.E));

  std::set<DegreeKey> wanted;
  for (const auto& key : bounded_key_basis(n, k, bounds.xdeg, true, k)) wanted.insert(grading.degree(key));

  SplitIndex index(k, true);
  struct Block {
    std::vector<SparseVec> s1, s2;
  };
  std::map<DegreeKey, Block> blocks;
  auto expand = [&](const std::vector<WeylOperator>& gens, int order, bool second) {
    const auto mults = bounded_key_basis(n, order, bounds.xdeg, true, order);
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      const auto gdeg = *grading.degree(g);
      std::map<Monomial, WeylOperator, GrlexLess> dcache;
      for (const auto& m : mults) {
        auto deg = grading.degree(m);
        for (std::size_t i = 0; i < deg.size(); ++i) deg[i] += gdeg[i];
        if (!wanted.count(deg)) continue;
        auto it = dcache.find(m.d);
        if (it == dcache.end())
          it = dcache.emplace(m.d, weyl_mul(WeylOperator::monomial(Monomial(n), m.d, 0), g)).first;
        std::map<std::uint32_t, Rational> img;
        for (const auto& [tk, c] : it->second.terms()) img[index(WeylKey{tk.x * m.x, tk.d, tk.s + m.s})] += c;
        auto v = sparse_from_map(img);
        if (v.empty()) continue;
        (second ? blocks[deg].s2 : blocks[deg].s1).push_back(std::move(v));
      }
    }
  };
  expand(gamma, bounds.order, false);
  expand(gamma0, bounds.order + l, true);

  WeylOperator shift = (WeylOperator::s(n) + WeylOperator(n, inp.alpha)).pow(static_cast<unsigned>(l));
  std::vector<WeylOperator> found;
  for (auto& [deg, blk] : blocks) {
    EchelonBasis e1(false);
    for (const auto& v : blk.s1) e1.insert(v, 0);
    std::vector<SparseVec> rows;
    for (const auto& r : e1.rows())
      if (r.front().first >= SplitIndex::kOffset) rows.push_back(r);
    if (rows.empty()) continue;
    EchelonBasis e2(false);
    for (const auto& v : blk.s2) e2.insert(v, 0);
    EchelonBasis e3;
    for (std::uint32_t i = 0; i < rows.size(); ++i) {
      SparseVec rho = e2.reduce(index.vec(weyl_mul(shift, index.op(rows[i], n))));
      SparseVec rel;
      if (e3.insert(rho, i, &rel)) continue;
      SparseVec u;
      for (const auto& [label, c] : rel) axpy(u, c, rows[label]);
      WeylOperator q = index.op(u, n).evaluate_s(-inp.alpha);
      if (!q.is_zero()) found.push_back(std::move(q));
    }
  }

  PpdResult r;
  r.bounds = bounds;
  r.conditional = k >= 1;
  auto pres = present(independent(found), inp, true);
  r.operators = std::move(pres.ops);
  r.presentation = std::move(pres.presentation);
  r.inconclusive = r.operators.empty();
  r.note = r.inconclusive ? "no elements of W_l Gamma in F_k at the bounds" : "O-span of the listed elements";
  return r;
}

PpdResult hodge_rho21(const AnnihilatorInput& inp, std::optional<int> l, int k, const Bounds& bounds) {
  require_valid(inp);
  std::vector<std::string> bad;
  if (!inp.alpha.is_zero()) bad.push_back("alpha must be 0");
  if (!roots_in_interval(inp.b.roots, Rational(-2), Rational(-1), true, false))
    bad.push_back("roots of b not contained in (-2,-1]");
  if (!inp.pp_asserted) bad.push_back("parametric primality not asserted");
  if (!bad.empty()) throw HypothesisError(bad);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const std::size_t n = inp.f.dim();
  PpdResult r;
  r.bounds = bounds;
  r.conditional = true;
  if (!l) {
    r.operators = {WeylOperator(n, Rational(1))};
    r.presentation.alpha = inp.alpha;
    r.presentation.add(k, Polynomial(n, Rational(1)), 1);
    r.note = "full filtration F_k D f^-1";
    return r;
  }
  const int top = weight_top(inp);
  if (*l < 0 || *l >= top)
    throw HypothesisError({"weight level l=" + std::to_string(*l) + " must satisfy 0 <= l < m(-1) = " +
                           std::to_string(top)});

  std::vector<WeylOperator> gens = p1_kernel(inp, *l, bounds);
  const WeylOperator e1 = inp.E + WeylOperator(n, Rational(1));
  for (const auto& m : bounded_operator_basis(n, bounds.order, bounds.xdeg)) gens.push_back(weyl_mul(m, e1));
  std::vector<WeylOperator> homog{inp.E, WeylOperator::from_polynomial(inp.f)};
  homog.insert(homog.end(), inp.zetas.begin(), inp.zetas.end());
  const Grading grading = common_grading(n, homog, {}, euler_weights(inp.E));

  SplitIndex index(k, false);
  std::map<DegreeKey, EchelonBasis> blocks;
  for (const auto& g : gens) {
    auto deg = grading.degree(g);
    auto it = blocks.try_emplace(deg.value_or(DegreeKey{}), false).first;
    it->second.insert(index.vec(g), 0);
  }
  std::vector<WeylOperator> found;
  for (const auto& [deg, eb] : blocks)
    for (const auto& row : eb.rows())
      if (row.front().first >= SplitIndex::kOffset) found.push_back(index.op(row, n));
  auto pres = present(independent(found), inp, true);
  r.operators = std::move(pres.ops);
  r.presentation = std::move(pres.presentation);
  r.inconclusive = r.operators.empty();
  r.note = r.inconclusive ? "empty intersection at the bounds" : "O-span of the listed elements";
  return r;
}

}  // namespace hwkit
