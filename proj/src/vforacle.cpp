#include "hwkit/vforacle.hpp"

#include <algorithm>
#include <stdexcept>

#include "hwkit/linalg.hpp"

namespace hwkit {

// ------------------------------------------------------------------ BfElement

BfElement BfElement::layer(const Polynomial& g, int j, const Rational& twist) {
  BfElement u;
  u.twist = twist;
  u.add(j, g);
  return u;
}

int BfElement::top_layer() const { return layers.empty() ? -1 : layers.rbegin()->first; }

void BfElement::add(int j, const Polynomial& g) {
  if (j < 0) throw std::invalid_argument("negative dt power");
  if (g.is_zero()) return;
  auto it = layers.find(j);
  if (it == layers.end()) {
    layers.emplace(j, g);
    return;
  }
  it->second += g;
  if (it->second.is_zero()) layers.erase(it);
}

BfElement& BfElement::operator+=(const BfElement& o) {
  for (const auto& [j, g] : o.layers) add(j, g);
  return *this;
}

BfElement& BfElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    layers.clear();
    return *this;
  }
  for (auto& [j, g] : layers) g *= c;
  return *this;
}

BfElement BfElement::times_monomial(const Monomial& m) const {
  BfElement out;
  out.twist = twist;
  for (const auto& [j, g] : layers) out.layers.emplace(j, g.times_monomial(m));
  return out;
}

std::string BfElement::str() const {
  if (layers.empty()) return "0";
  std::string out;
  for (const auto& [j, g] : layers) {
    if (!out.empty()) out += " + ";
    out += "(" + g.str() + ")";
    if (j == 1) out += "*dt";
    if (j > 1) out += "*dt^" + std::to_string(j);
  }
  return out;
}

BfElement act(BfOp op, const BfElement& u, const Polynomial& f, std::size_t i) {
  BfElement out;
  out.twist = u.twist;
  switch (op) {
    case BfOp::T:
      for (const auto& [j, g] : u.layers) {
        out.add(j, f * g);
        if (j > 0) out.add(j - 1, g * Rational(-j));
      }
      return out;
    case BfOp::Dt:
      for (const auto& [j, g] : u.layers) out.add(j + 1, g);
      return out;
    case BfOp::S:
      out = act(BfOp::Dt, act(BfOp::T, u, f), f);
      out *= Rational(-1);
      return out;
    case BfOp::X:
      if (i >= f.dim()) throw DimensionMismatch(i, f.dim());
      return u.times_monomial(Monomial::variable(f.dim(), i));
    case BfOp::D: {
      if (i >= f.dim()) throw DimensionMismatch(i, f.dim());
      if (!u.twist.is_zero()) throw std::domain_error("x-derivatives of twisted elements leave the polynomial layers");
      Polynomial fi = f.derivative(i);
      for (const auto& [j, g] : u.layers) {
        out.add(j, g.derivative(i));
        out.add(j + 1, -(fi * g));
      }
      return out;
    }
  }
  return out;
}

BfElement act_d_monomial(const Monomial& gamma, const BfElement& u, const Polynomial& f) {
  BfElement out = u;
  for (std::size_t i = 0; i < gamma.dim(); ++i)
    for (int e = 0; e < gamma[i]; ++e) out = act(BfOp::D, out, f, i);
  return out;
}

BfElement act_operator(const WeylOperator& P, const BfElement& u, const Polynomial& f) {
  BfElement out;
  out.twist = u.twist;
  std::map<int, BfElement> s_powers{{0, u}};
  for (const auto& [key, c] : P.terms()) {
    auto it = s_powers.find(key.s);
    if (it == s_powers.end()) {
      int top = s_powers.rbegin()->first;
      BfElement cur = s_powers.rbegin()->second;
      for (int e = top + 1; e <= key.s; ++e) s_powers.emplace(e, cur = act(BfOp::S, cur, f));
      it = s_powers.find(key.s);
    }
    BfElement term = act_d_monomial(key.d, it->second, f).times_monomial(key.x);
    term *= c;
    out += term;
  }
  return out;
}

// -------------------------------------------------------------- certificates

nlohmann::ordered_json Bounds::json() const {
  return {{"order", order}, {"xdeg", xdeg}, {"tord", tord}};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Member:
      return "member";
    case Verdict::NotFoundAtBound:
      return "not-found-at-bound";
    case Verdict::Refuted:
      return "refuted";
  }
  return "unknown";
}

nlohmann::ordered_json SpanCertificate::json() const {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(verdict);
  j["bounds"] = bounds.json();
  if (witness) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : *witness) {
      nlohmann::ordered_json e;
      e["coeff"] = t.coeff.str();
      e["cofactor"] = t.cofactor.str();
      e["dt"] = t.dt;
      e["gamma"] = t.gamma.exponents();
      e["generator"] = t.generator;
      arr.push_back(std::move(e));
    }
    j["witness"] = std::move(arr);
  }
  if (!note.empty()) j["note"] = note;
  if (!parts.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : parts) arr.push_back(p.json());
    j["parts"] = std::move(arr);
  }
  return j;
}

SpanCertificate all_of(std::vector<SpanCertificate> parts, const Bounds& b, std::string note) {
  SpanCertificate c;
  c.bounds = b;
  c.note = std::move(note);
  c.verdict = Verdict::Member;
  for (const auto& p : parts) {
    if (p.verdict == Verdict::Refuted) c.verdict = Verdict::Refuted;
    if (p.verdict == Verdict::NotFoundAtBound && c.verdict == Verdict::Member) c.verdict = Verdict::NotFoundAtBound;
  }
  c.parts = std::move(parts);
  return c;
}

// ------------------------------------------------------------ graded engine

namespace {

using Key = std::vector<Rational>;
using Coord = std::pair<int, Monomial>;

struct CoordLess {
  bool operator()(const Coord& a, const Coord& b) const {
    if (a.first != b.first) return a.first < b.first;
    return GrlexLess{}(a.second, b.second);
  }
};

Key key_sub(const Key& a, const Key& b) {
  Key out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational dot(const std::vector<Rational>& w, const Monomial& m) {
  Rational r;
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m[i]) r += w[i] * Rational(m[i]);
  return r;
}

struct Seed {
  BfElement elem;
  std::size_t gen;
  Monomial gamma;
  int dt = 0;
};

// Candidate gradings: coordinate gradings and the weight grading, kept when
// f is homogeneous for them.
struct GradingSet {
  std::vector<std::vector<Rational>> comps;
  std::vector<Rational> fdeg;

  Key key(int j, const Monomial& m) const {
    Key k(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) k[c] = dot(comps[c], m) - Rational(j) * fdeg[c];
    return k;
  }

  std::optional<Key> key(const BfElement& u) const {
    std::optional<Key> out;
    for (const auto& [j, g] : u.layers)
      for (const auto& [m, c] : g.terms()) {
        Key k = key(j, m);
        if (!out) out = k;
        else if (*out != k) return std::nullopt;
      }
    return out;
  }

  void keep_if(const std::vector<BfElement>& elems) {
    std::vector<bool> keep(comps.size(), true);
    for (const auto& u : elems) {
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (!keep[c]) continue;
        std::optional<Rational> d;
        for (const auto& [j, g] : u.layers)
          for (const auto& [m, coef] : g.terms()) {
            Rational v = dot(comps[c], m) - Rational(j) * fdeg[c];
            if (!d) d = v;
            else if (*d != v) keep[c] = false;
          }
      }
    }
    GradingSet out;
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (keep[c]) {
        out.comps.push_back(comps[c]);
        out.fdeg.push_back(fdeg[c]);
      }
    *this = std::move(out);
  }
};

GradingSet candidate_gradings(const Polynomial& f, const std::optional<WeightVector>& weights) {
  const std::size_t n = f.dim();
  GradingSet gs;
  auto try_add = [&](std::vector<Rational> w) {
    std::optional<Rational> d;
    for (const auto& [m, c] : f.terms()) {
      Rational v = dot(w, m);
      if (!d) d = v;
      else if (*d != v) return;
    }
    gs.comps.push_back(std::move(w));
    gs.fdeg.push_back(d.value_or(Rational(0)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> w(n, Rational(0));
    w[i] = 1;
    try_add(std::move(w));
  }
  if (weights) {
    if (weights->dim() != n) throw DimensionMismatch(weights->dim(), n);
    try_add(weights->weights());
  }
  return gs;
}

// O-span of seeds with cofactors of degree <= xdeg, split by degree.
class GradedSpan {
 public:
  GradedSpan(std::size_t n, GradingSet gs, std::vector<Seed> seeds, int xdeg)
      : gs_(std::move(gs)), seeds_(std::move(seeds)) {
    std::vector<BfElement> elems;
    for (const auto& s : seeds_) elems.push_back(s.elem);
    gs_.keep_if(elems);
    for (const auto& s : seeds_) {
      seed_keys_.push_back(gs_.key(s.elem).value_or(Key(gs_.comps.size())));
      max_layer_ = std::max(max_layer_, s.elem.top_layer());
    }
    for (auto& m : monomials_up_to_degree(n, xdeg)) cofactors_[gs_.key(0, m)].push_back(m);
  }

  const std::vector<Seed>& seeds() const { return seeds_; }
  int max_layer() const { return max_layer_; }

  // Splits u by degree and reduces each piece.  Returns the witness or
  // nullopt with a note naming the first failing piece.
  std::optional<std::vector<SpanCertificate::Term>> member(const BfElement& u, std::string* note) {
    std::map<Key, BfElement> pieces;
    for (const auto& [j, g] : u.layers)
      for (const auto& [m, c] : g.terms()) pieces[gs_.key(j, m)].add(j, Polynomial(m, c));
    std::vector<SpanCertificate::Term> out;
    for (auto& [k, piece] : pieces) {
      Block& b = block(k);
      std::map<std::uint32_t, Rational> v;
      for (const auto& [j, g] : piece.layers)
        for (const auto& [m, c] : g.terms()) v[b.coords(Coord{j, m})] += c;
      SparseVec combo;
      SparseVec rem = b.eb.reduce(sparse_from_map(v), &combo);
      if (!rem.empty()) {
        if (note) {
          const auto& [j, m] = b.coords.key(rem.front().first);
          *note = "no combination reaches the term " + m.str() + (j ? "*dt^" + std::to_string(j) : "");
        }
        return std::nullopt;
      }
      for (const auto& [label, c] : combo) {
        const auto& [si, beta] = b.labels[label];
        const Seed& s = seeds_[si];
        out.push_back({c, beta, s.gamma, s.dt, s.gen});
      }
    }
    return out;
  }

 private:
  struct Block {
    CoordIndex<Coord, CoordLess> coords;
    EchelonBasis eb{true};
    std::vector<std::pair<std::size_t, Monomial>> labels;
  };

  Block& block(const Key& k) {
    auto it = blocks_.find(k);
    if (it != blocks_.end()) return it->second;
    Block& b = blocks_[k];
    for (std::size_t si = 0; si < seeds_.size(); ++si) {
      auto cf = cofactors_.find(key_sub(k, seed_keys_[si]));
      if (cf == cofactors_.end()) continue;
      for (const auto& beta : cf->second) {
        std::map<std::uint32_t, Rational> v;
        for (const auto& [j, g] : seeds_[si].elem.layers)
          for (const auto& [m, c] : g.terms()) v[b.coords(Coord{j, m * beta})] += c;
        b.eb.insert(sparse_from_map(v), static_cast<std::uint32_t>(b.labels.size()));
        b.labels.emplace_back(si, beta);
      }
    }
    return b;
  }

  GradingSet gs_;
  std::vector<Seed> seeds_;
  std::vector<Key> seed_keys_;
  int max_layer_ = -1;
  std::map<Key, std::vector<Monomial>> cofactors_;
  std::map<Key, Block> blocks_;
};

}  // namespace

// ------------------------------------------------------------ TruncatedSpan

struct TruncatedSpan::Impl {
  Polynomial f;
  std::vector<SpanGen> gens;
  Bounds bounds;
  std::optional<GradedSpan> span;
  bool truncated = false;
};

TruncatedSpan::TruncatedSpan(const Polynomial& f, std::vector<SpanGen> gens, const Bounds& bounds,
                             const std::optional<WeightVector>& weights, bool adjoin_dt)
    : impl_(std::make_unique<Impl>()) {
  if (bounds.order < 0 || bounds.xdeg < 0 || bounds.tord < 0) throw std::invalid_argument("bounds must be non-negative");
  impl_->f = f;
  impl_->gens = std::move(gens);
  impl_->bounds = bounds;
  const std::size_t n = f.dim();
  std::vector<Seed> seeds;
  for (std::size_t gi = 0; gi < impl_->gens.size(); ++gi) {
    const auto& g = impl_->gens[gi];
    if (g.elem.is_zero()) continue;
    for (const auto& [j, p] : g.elem.layers)
      if (p.dim() != n) throw DimensionMismatch(p.dim(), n);
    int ord = g.budget < 0 ? bounds.order : std::min(g.budget, bounds.order);
    if (g.budget < 0 || g.budget > bounds.order) impl_->truncated = true;
    std::map<Monomial, BfElement, GrlexLess> memo;
    for (const auto& gamma : monomials_up_to_degree(n, ord)) {
      BfElement e;
      if (gamma.is_one()) {
        e = g.elem;
      } else {
        std::size_t i = 0;
        while (gamma[i] == 0) ++i;
        e = act(BfOp::D, memo.at(gamma / Monomial::variable(n, i)), f, i);
      }
      memo.emplace(gamma, e);
      int dmax = adjoin_dt ? ord - gamma.degree() : 0;
      BfElement cur = e;
      for (int i = 0; i <= dmax; ++i) {
        if (!cur.is_zero()) seeds.push_back({cur, gi, gamma, i});
        cur = act(BfOp::Dt, cur, f);
      }
    }
  }
  impl_->span.emplace(n, candidate_gradings(f, weights), std::move(seeds), bounds.xdeg);
}

TruncatedSpan::~TruncatedSpan() = default;
TruncatedSpan::TruncatedSpan(TruncatedSpan&&) noexcept = default;

std::size_t TruncatedSpan::seeds() const { return impl_->span->seeds().size(); }

SpanCertificate TruncatedSpan::membership(const BfElement& u) {
  SpanCertificate c;
  c.bounds = impl_->bounds;
  if (u.is_zero()) {
    c.verdict = Verdict::Member;
    c.witness.emplace();
    return c;
  }
  if (u.top_layer() > std::max(impl_->span->max_layer(), impl_->bounds.tord))
    throw std::out_of_range("element exceeds window: dt-order " + std::to_string(u.top_layer()));
  std::string note;
  auto w = impl_->span->member(u, &note);
  if (w) {
    c.verdict = Verdict::Member;
    c.witness = std::move(*w);
  } else {
    c.verdict = Verdict::NotFoundAtBound;
    c.note = note;
  }
  return c;
}

SpanCertificate membership(const BfElement& u, const std::vector<SpanGen>& gens, const Polynomial& f,
                           const Bounds& bounds, const std::optional<WeightVector>& weights) {
  TruncatedSpan span(f, gens, bounds, weights);
  return span.membership(u);
}

bool check_witness(const SpanCertificate& c, const BfElement& u, const std::vector<SpanGen>& gens,
                   const Polynomial& f) {
  if (!c.witness) return false;
  BfElement sum;
  for (const auto& t : *c.witness) {
    if (t.generator >= gens.size()) return false;
    const auto& g = gens[t.generator];
    if (g.budget >= 0 && t.gamma.degree() + t.dt > g.budget) return false;
    BfElement e = act_d_monomial(t.gamma, g.elem, f);
    for (int i = 0; i < t.dt; ++i) e = act(BfOp::Dt, e, f);
    e = e.times_monomial(t.cofactor);
    e *= t.coeff;
    sum += e;
  }
  return sum == u;
}

std::vector<BfElement> truncated_span(const std::vector<BfElement>& gens, const Polynomial& f, const Bounds& bounds) {
  const std::size_t n = f.dim();
  CoordIndex<Coord, CoordLess> coords;
  EchelonBasis eb(false);
  auto insert = [&](const BfElement& e) {
    std::map<std::uint32_t, Rational> v;
    for (const auto& [j, g] : e.layers)
      for (const auto& [m, c] : g.terms()) v[coords(Coord{j, m})] += c;
    eb.insert(sparse_from_map(v), 0);
  };
  auto cofactors = monomials_up_to_degree(n, bounds.xdeg);
  for (const auto& g : gens)
    for (const auto& gamma : monomials_up_to_degree(n, bounds.order)) {
      BfElement e = act_d_monomial(gamma, g, f);
      for (int i = 0; i + gamma.degree() <= bounds.order; ++i) {
        for (const auto& beta : cofactors) insert(e.times_monomial(beta));
        e = act(BfOp::Dt, e, f);
      }
    }
  // Back-substitute into reduced echelon form, ordered by pivot coordinate.
  std::vector<SparseVec> rows = eb.rows();
  auto less = [&](std::uint32_t a, std::uint32_t b) { return CoordLess{}(coords.key(a), coords.key(b)); };
  std::sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) { return a.front().first < b.front().first; });
  for (std::size_t i = rows.size(); i-- > 0;) {
    std::uint32_t piv = rows[i].front().first;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == i) continue;
      auto it = std::find_if(rows[r].begin(), rows[r].end(), [&](const auto& e) { return e.first == piv; });
      if (it == rows[r].end()) continue;
      Rational c = -it->second;
      axpy(rows[r], c, rows[i]);
    }
  }
  std::vector<BfElement> out;
  for (const auto& row : rows) {
    BfElement e;
    for (const auto& [idx, c] : row) {
      const auto& [j, m] = coords.key(idx);
      e.add(j, Polynomial(m, c));
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [&](const BfElement& a, const BfElement& b) {
    // leading coordinate of each reduced row
    auto lead = [&](const BfElement& e) {
      const auto& [j, g] = *e.layers.rbegin();
      return coords(Coord{j, g.leading_monomial()});
    };
    return less(lead(b), lead(a));
  });
  return out;
}

// ------------------------------------------------------------- b-functions

bool BfunctionCheck::minimal_at_bound() const {
  if (!certificate.member()) return false;
  return std::all_of(divisors.begin(), divisors.end(),
                     [](const auto& d) { return d.second.verdict == Verdict::NotFoundAtBound; });
}

namespace {

Polynomial roots_polynomial(const RootMap& b, std::size_t n) {
  // b(s) in the variables (x, s), s last
  Polynomial s = Polynomial::variable(n + 1, n);
  Polynomial out(n + 1, Rational(1));
  for (const auto& [r, m] : b)
    for (int e = 0; e < m; ++e) out = out * (s - Polynomial(n + 1, r));
  return out;
}

}  // namespace

BfunctionCheck verify_bfunction(const Polynomial& f, const RootMap& b, int order, int xdeg,
                                const std::optional<WeightVector>& weights) {
  if (b.empty()) throw std::invalid_argument("b-function must have at least one root");
  if (order < 0 || xdeg < 0) throw std::invalid_argument("bounds must be non-negative");
  const std::size_t n = f.dim();
  BfunctionCheck out;
  Bounds bounds{order, xdeg, 0};
  out.certificate.bounds = bounds;
  if (!b.count(Rational(-1))) {
    out.certificate.verdict = Verdict::Refuted;
    out.certificate.note = "-1 is a root of every b-function of a non-constant polynomial";
    return out;
  }

  GradingSet gs = candidate_gradings(f, weights);
  // N_gamma with d^gamma f^(s+1) = N_gamma f^(s+1-|gamma|)
  Polynomial fs = f.embed(n + 1);
  Polynomial s = Polynomial::variable(n + 1, n);
  std::map<Monomial, Polynomial, GrlexLess> numer;
  for (const auto& gamma : monomials_up_to_degree(n, order)) {
    if (gamma.is_one()) {
      numer.emplace(gamma, Polynomial(n + 1, Rational(1)));
      continue;
    }
    std::size_t i = 0;
    while (gamma[i] == 0) ++i;
    const Polynomial& prev = numer.at(gamma / Monomial::variable(n, i));
    Rational e(1 - (gamma.degree() - 1));
    Polynomial fi = f.derivative(i).embed(n + 1);
    numer.emplace(gamma, prev.derivative(i) * fs + (s + Polynomial(n + 1, e)) * prev * fi);
  }
  std::vector<Polynomial> fpow{Polynomial(n + 1, Rational(1))};
  for (int e = 1; e <= order; ++e) fpow.push_back(fpow.back() * fs);

  auto ext = [&](const Monomial& m, int sdeg) {
    std::vector<int> e = m.exponents();
    e.push_back(sdeg);
    return Monomial(e);
  };
  struct Unknown {
    Monomial beta, gamma;
    int sdeg;
  };
  std::vector<Unknown> unknowns;
  CoordIndex<Monomial, GrlexLess> coords;
  EchelonBasis eb(true);
  for (const auto& gamma : monomials_up_to_degree(n, order)) {
    for (const auto& beta : monomials_up_to_degree(n, xdeg)) {
      bool ok = true;
      for (std::size_t c = 0; c < gs.comps.size() && ok; ++c)
        ok = dot(gs.comps[c], beta) - dot(gs.comps[c], gamma) == -gs.fdeg[c];
      if (!ok) continue;
      Polynomial base = numer.at(gamma) * fpow[order - gamma.degree()];
      for (int j = 0; j + gamma.degree() <= order; ++j) {
        std::map<std::uint32_t, Rational> v;
        for (const auto& [m, c] : base.terms()) v[coords(m * ext(beta, j))] += c;
        eb.insert(sparse_from_map(v), static_cast<std::uint32_t>(unknowns.size()));
        unknowns.push_back({beta, gamma, j});
      }
    }
  }

  auto solve = [&](const RootMap& roots, WeylOperator* witness) {
    Polynomial target = roots_polynomial(roots, n) * fpow[order > 0 ? order - 1 : 0];
    SpanCertificate c;
    c.bounds = bounds;
    if (order == 0) {
      c.verdict = Verdict::NotFoundAtBound;
      c.note = "order bound 0 admits no operator lowering the pole";
      return c;
    }
    std::map<std::uint32_t, Rational> v;
    for (const auto& [m, coef] : target.terms()) v[coords(m)] += coef;
    SparseVec combo;
    if (!eb.reduce(sparse_from_map(v), &combo).empty()) {
      c.verdict = Verdict::NotFoundAtBound;
      c.note = "no operator within the bounds";
      return c;
    }
    c.verdict = Verdict::Member;
    c.witness.emplace();
    WeylOperator P(n);
    for (const auto& [label, coef] : combo) {
      const auto& u = unknowns[label];
      P += WeylOperator::monomial(u.beta, u.gamma, u.sdeg, coef);
      c.witness->push_back({coef, u.beta, u.gamma, u.sdeg, 0});
    }
    if (witness) *witness = P;
    return c;
  };

  WeylOperator P;
  out.certificate = solve(b, &P);
  if (out.certificate.member()) {
    // independent re-evaluation through the chain rule
    TwistedSection r = apply_to_twisted(P, f, TwistedSection::power(n, 1));
    if (!(r.numerator == roots_polynomial(b, n) && r.pole == 1 && r.shift == 1))
      throw std::logic_error("b-function witness failed to re-evaluate");
    out.witness = P;
  }
  for (const auto& [r, m] : b) {
    RootMap d = b;
    if (--d[r] == 0) d.erase(r);
    out.divisors.emplace_back(r, d.empty() ? SpanCertificate{Verdict::NotFoundAtBound, bounds, {}, "constant", {}}
                                           : solve(d, nullptr));
  }
  return out;
}

// ------------------------------------------------------------ V candidates

std::vector<SpanGen> candidate_V_snc(const SncDivisor& d, const Rational& lambda, int jmax) {
  std::vector<SpanGen> out;
  for (int j = 0; j <= jmax; ++j)
    out.push_back({BfElement::layer(Polynomial(snc_f_lambda(d, lambda + Rational(j))), j), -1});
  return out;
}

std::vector<SpanGen> candidate_V_snc_strict(const SncDivisor& d, const Rational& lambda, int jmax) {
  std::vector<SpanGen> out;
  const auto& a = d.exponents();
  for (int j = 0; j <= jmax; ++j) {
    std::vector<int> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      e[i] = std::max<long>(((lambda + Rational(j)) * Rational(a[i])).floor(), 0);
    out.push_back({BfElement::layer(Polynomial(Monomial(e)), j), -1});
  }
  return out;
}

VCandidateSource snc_source(const SncDivisor& d) {
  VCandidateSource src;
  src.f = d.f();
  src.v = [d](const Rational& l, int jmax) { return candidate_V_snc(d, l, jmax); };
  src.v_strict = [d](const Rational& l, int jmax) { return candidate_V_snc_strict(d, l, jmax); };
  src.nilpotency = [d](const Rational& l) {
    int N = 0;
    for (int ai : d.exponents())
      if (ai > 0 && (l * Rational(ai)).is_integer()) ++N;
    return N;
  };
  return src;
}

VCandidateSource corrupt(VCandidateSource src, const Rational& lambda, std::size_t index) {
  auto drop = [lambda, index](VFamily fam) {
    return [fam, lambda, index](const Rational& l, int jmax) {
      auto gens = fam(l, jmax);
      if (l == lambda && index < gens.size()) gens.erase(gens.begin() + static_cast<long>(index));
      return gens;
    };
  };
  src.v = drop(src.v);
  return src;
}

namespace {

std::vector<SpanGen> whom_family(const QuasiHomogeneousGerm& g, const Rational& lambda, int k, std::optional<int> jmax,
                                 bool strict) {
  int jm = jmax.value_or(k);
  if (jm < 0) throw std::invalid_argument("layer bound must be non-negative");
  const Rational one(1);
  // fundamental range: (0,1] for V, [0,1) for V^{>}
  bool base = strict ? (lambda.sign() >= 0 && lambda < one) : (lambda.sign() > 0 && lambda <= one);
  if (base) {
    std::vector<SpanGen> out;
    for (int j = 0; j <= jm; ++j) {
      int budget = k < 0 ? -1 : k - j;
      if (k >= 0 && budget < 0) break;
      auto ideal = graded_ideal(g.weights(), lambda + Rational(j) - g.weights().total(), strict);
      for (const auto& m : ideal.generators()) out.push_back({BfElement::layer(Polynomial(m), j), budget});
    }
    return out;
  }
  bool above = strict ? lambda >= one : lambda > one;
  if (above) {
    auto prev = whom_family(g, lambda - one, k, jmax, strict);
    for (auto& s : prev) s.elem = act(BfOp::T, s.elem, g.f());
    return prev;
  }
  auto prev = whom_family(g, lambda + one, k, jmax, strict);
  std::vector<SpanGen> out = prev;
  for (const auto& s : prev) {
    if (s.elem.top_layer() >= jm) continue;
    int budget = s.budget < 0 ? -1 : s.budget - 1;
    if (s.budget >= 0 && budget < 0) continue;
    out.push_back({act(BfOp::Dt, s.elem, g.f()), budget});
  }
  return out;
}

}  // namespace

std::vector<SpanGen> candidate_V_whom(const QuasiHomogeneousGerm& g, const Rational& lambda, int k,
                                      std::optional<int> jmax) {
  if (k < 0 && !jmax) throw std::invalid_argument("unbudgeted candidates need a layer bound");
  return whom_family(g, lambda, k, jmax, false);
}

std::vector<SpanGen> candidate_V_whom_strict(const QuasiHomogeneousGerm& g, const Rational& lambda, int k,
                                             std::optional<int> jmax) {
  if (k < 0 && !jmax) throw std::invalid_argument("unbudgeted candidates need a layer bound");
  return whom_family(g, lambda, k, jmax, true);
}

VCandidateSource whom_source(const QuasiHomogeneousGerm& g) {
  VCandidateSource src;
  src.f = g.f();
  src.weights = g.weights();
  src.v = [g](const Rational& l, int jmax) { return candidate_V_whom(g, l, -1, jmax); };
  src.v_strict = [g](const Rational& l, int jmax) { return candidate_V_whom_strict(g, l, -1, jmax); };
  src.nilpotency = [](const Rational& l) { return l.is_integer() ? 2 : 1; };
  return src;
}

bool AxiomReport::all_member() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.member(); });
}

nlohmann::ordered_json AxiomReport::json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [name, c] : checks) {
    nlohmann::ordered_json j;
    j["check"] = name;
    j["certificate"] = c.json();
    arr.push_back(std::move(j));
  }
  return arr;
}

namespace {

BfElement shift_s(const BfElement& u, const Rational& lambda, int power, const Polynomial& f) {
  BfElement cur = u;
  for (int e = 0; e < power; ++e) {
    BfElement next = act(BfOp::S, cur, f);
    BfElement lin = cur;
    lin *= lambda;
    next += lin;
    cur = std::move(next);
  }
  return cur;
}

SpanCertificate check_all(TruncatedSpan& span, const std::vector<BfElement>& targets, const Bounds& bounds,
                          const std::string& note) {
  std::vector<SpanCertificate> parts;
  for (const auto& t : targets) parts.push_back(span.membership(t));
  return all_of(std::move(parts), bounds, note);
}

}  // namespace

AxiomReport verify_v_axioms(const VCandidateSource& src, const std::vector<Rational>& grid, const Bounds& bounds) {
  AxiomReport rep;
  const int jt = bounds.tord / 2;
  const Rational one(1);
  auto targets = [&](const VFamily& fam, const Rational& l) {
    std::vector<BfElement> out;
    for (const auto& g : fam(l, jt))
      if (g.elem.top_layer() <= jt) out.push_back(g.elem);
    return out;
  };
  auto container = [&](const VFamily& fam, const Rational& l) {
    auto gens = fam(l, bounds.tord);
    for (auto& g : gens) g.budget = -1;
    return TruncatedSpan(src.f, gens, bounds, src.weights);
  };
  for (const auto& gamma : grid) {
    auto gens = targets(src.v, gamma);
    {
      auto span = container(src.v, gamma + one);
      std::vector<BfElement> ts;
      for (const auto& g : gens) ts.push_back(act(BfOp::T, g, src.f));
      rep.checks.emplace_back("t V^" + gamma.str() + " in V^" + (gamma + one).str(),
                              check_all(span, ts, bounds, {}));
    }
    {
      auto span = container(src.v, gamma - one);
      std::vector<BfElement> ts;
      for (const auto& g : gens) ts.push_back(act(BfOp::Dt, g, src.f));
      rep.checks.emplace_back("dt V^" + gamma.str() + " in V^" + (gamma - one).str(),
                              check_all(span, ts, bounds, {}));
    }
    {
      int N = src.nilpotency(gamma);
      auto span = container(src.v_strict, gamma);
      std::vector<BfElement> ts;
      for (const auto& g : gens) ts.push_back(shift_s(g, gamma, N, src.f));
      rep.checks.emplace_back("(s+" + gamma.str() + ")^" + std::to_string(N) + " V^" + gamma.str() + " in V^>" +
                                  gamma.str(),
                              check_all(span, ts, bounds, {}));
    }
    {
      auto span = container(src.v, gamma);
      rep.checks.emplace_back("V^>" + gamma.str() + " in V^" + gamma.str(),
                              check_all(span, targets(src.v_strict, gamma), bounds, {}));
    }
  }
  return rep;
}

SpanCertificate kernel_filtration_check(const Polynomial& f, const Rational& lambda, int l,
                                        const std::vector<SpanGen>& kernel_gens,
                                        const std::vector<SpanGen>& v_strict, const Bounds& bounds,
                                        const std::optional<WeightVector>& weights) {
  if (l < 0) throw std::invalid_argument("kernel index must be non-negative");
  auto gens = v_strict;
  for (auto& g : gens) g.budget = -1;
  TruncatedSpan span(f, gens, bounds, weights);
  std::vector<BfElement> ts;
  for (const auto& g : kernel_gens) ts.push_back(shift_s(g.elem, lambda, l, f));
  return check_all(span, ts, bounds, "(s+" + lambda.str() + ")^" + std::to_string(l) + " K in V^>" + lambda.str());
}

// ------------------------------------------------------------- psi and Phi

Rational pochhammer(const Rational& s, int j) {
  Rational r(1);
  for (int i = 0; i < j; ++i) r *= s + Rational(i);
  return r;
}

std::vector<std::pair<Polynomial, int>> psi_map(const BfElement& u, const Rational& beta) {
  std::vector<std::pair<Polynomial, int>> out;
  for (const auto& [j, g] : u.layers) {
    Rational q = pochhammer(beta, j);
    if (q.is_zero()) continue;
    out.emplace_back(g * q, j);
  }
  return out;
}

namespace {

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

}  // namespace

BfElement phi_shift(const BfElement& u, const Polynomial& f) {
  BfElement out;
  if (u.is_zero()) return out;
  const int top = u.top_layer();
  for (int i = 0; i <= top; ++i) {
    // sum_{j>=i} g_j C(j,i) Q_{j-i}(-alpha) f^(i-j), over the denominator f^(top-i)
    Polynomial acc(f.dim());
    for (const auto& [j, g] : u.layers) {
      if (j < i) continue;
      Rational c = binomial(j, i) * pochhammer(-u.twist, j - i);
      if (c.is_zero()) continue;
      acc += g * f.pow(static_cast<unsigned>(top - j)) * c;
    }
    if (acc.is_zero()) continue;
    auto q = acc.divide_exact(f.pow(static_cast<unsigned>(top - i)));
    if (!q) throw std::domain_error("Phi: coefficient of dt^" + std::to_string(i) + " is not a polynomial");
    out.add(i, *q);
  }
  return out;
}

// ------------------------------------------------------- spans in M(f^-a)

namespace {

struct Normalized {
  Rational alpha;  // in (0,1]
  std::vector<HodgePresentation::Summand> summands;
};

Normalized normalize(const HodgePresentation& p) {
  Normalized out;
  long c = p.alpha.ceil();
  out.alpha = p.alpha - Rational(c) + Rational(1);
  for (auto s : p.summands) {
    s.pole_step += static_cast<int>(c - 1);
    out.summands.push_back(std::move(s));
  }
  return out;
}

struct MElem {
  Polynomial num;
  int pole;
};

// d^gamma (g f^(-p-alpha)) for all |gamma| <= ord
std::vector<std::pair<Monomial, MElem>> derivatives(const Polynomial& g, int p, const Rational& alpha,
                                                    const Polynomial& f, int ord) {
  const std::size_t n = f.dim();
  std::map<Monomial, MElem, GrlexLess> memo;
  std::vector<std::pair<Monomial, MElem>> out;
  for (const auto& gamma : monomials_up_to_degree(n, ord)) {
    MElem e{g, p};
    if (!gamma.is_one()) {
      std::size_t i = 0;
      while (gamma[i] == 0) ++i;
      const MElem& prev = memo.at(gamma / Monomial::variable(n, i));
      e.num = prev.num.derivative(i) * f - prev.num * f.derivative(i) * (Rational(prev.pole) + alpha);
      e.pole = prev.pole + 1;
    }
    memo.emplace(gamma, e);
    out.emplace_back(gamma, std::move(e));
  }
  return out;
}

Polynomial lift(const MElem& e, int P, const Polynomial& f) {
  if (e.pole > P) throw std::logic_error("lift below pole order");
  return e.num * f.pow(static_cast<unsigned>(P - e.pole));
}

}  // namespace

HodgePresentation with_budget(HodgePresentation p, int budget) {
  for (auto& s : p.summands) s.budget = budget;
  return p;
}

SpanCertificate presentation_contained(const HodgePresentation& a, const HodgePresentation& b, const Polynomial& f,
                                       const Bounds& bounds, const std::optional<WeightVector>& weights) {
  Normalized na = normalize(a), nb = normalize(b);
  SpanCertificate cert;
  cert.bounds = bounds;
  if (na.summands.empty()) {
    cert.verdict = Verdict::Member;
    cert.witness.emplace();
    return cert;
  }
  if (na.alpha != nb.alpha)
    throw std::invalid_argument("presentations live in different modules M(f^-" + a.alpha.str() + ") and M(f^-" +
                                b.alpha.str() + ")");
  const Rational alpha = na.alpha;
  std::vector<std::pair<Monomial, MElem>> targets;
  for (const auto& s : na.summands)
    for (auto& t : derivatives(s.generator, s.pole_step, alpha, f, s.budget)) targets.push_back(std::move(t));
  struct Raw {
    MElem e;
    std::size_t gen;
    Monomial gamma;
  };
  std::vector<Raw> raw;
  for (std::size_t gi = 0; gi < nb.summands.size(); ++gi) {
    const auto& s = nb.summands[gi];
    for (auto& [gamma, e] : derivatives(s.generator, s.pole_step, alpha, f, std::min(s.budget, bounds.order)))
      raw.push_back({std::move(e), gi, gamma});
  }
  int P = 0;
  bool first = true;
  for (const auto& r : raw) P = first ? (first = false, r.e.pole) : std::max(P, r.e.pole);
  for (const auto& [g, t] : targets) P = first ? (first = false, t.pole) : std::max(P, t.pole);
  std::vector<Seed> seeds;
  for (const auto& r : raw) {
    Polynomial num = lift(r.e, P, f);
    if (!num.is_zero()) seeds.push_back({BfElement::layer(num, 0), r.gen, r.gamma, 0});
  }
  GradedSpan span(f.dim(), candidate_gradings(f, weights), std::move(seeds), bounds.xdeg);
  std::vector<SpanCertificate> parts;
  for (const auto& [gamma, t] : targets) {
    SpanCertificate c;
    c.bounds = bounds;
    std::string note;
    auto w = span.member(BfElement::layer(lift(t, P, f), 0), &note);
    if (w) {
      c.verdict = Verdict::Member;
      c.witness = std::move(*w);
    } else {
      c.verdict = Verdict::NotFoundAtBound;
      c.note = "d^" + gamma.str() + " of a generator: " + note;
    }
    parts.push_back(std::move(c));
  }
  return all_of(std::move(parts), bounds, a.str() + " in " + b.str());
}

SpanCertificate dmodules_equal(const HodgePresentation& a, const HodgePresentation& b, const Polynomial& f,
                               const Bounds& bounds, const std::optional<WeightVector>& weights) {
  std::vector<SpanCertificate> parts;
  parts.push_back(presentation_contained(with_budget(a, 0), with_budget(b, bounds.order), f, bounds, weights));
  parts.push_back(presentation_contained(with_budget(b, 0), with_budget(a, bounds.order), f, bounds, weights));
  return all_of(std::move(parts), bounds, "D-module comparison");
}

MElement apply_to_m(const WeylOperator& Q, const Polynomial& g, int pole, const Rational& alpha, const Polynomial& f) {
  if (Q.has_s()) throw std::invalid_argument("operator must be free of s");
  int ord = std::max(d_order(Q), 0);
  auto ders = derivatives(g, pole, alpha, f, ord);
  std::map<Monomial, const MElem*, GrlexLess> by_gamma;
  for (const auto& [gamma, e] : ders) by_gamma.emplace(gamma, &e);
  const int P = pole + ord;
  Polynomial num(f.dim());
  for (const auto& [key, c] : Q.terms()) num += lift(*by_gamma.at(key.d), P, f).times_monomial(key.x) * c;
  MElement out{num, P};
  while (out.pole > 0 && !out.numerator.is_zero()) {
    auto q = out.numerator.divide_exact(f);
    if (!q) break;
    out.numerator = std::move(*q);
    --out.pole;
  }
  if (out.numerator.is_zero()) out.pole = 0;
  return out;
}

std::vector<MElement> presentation_seeds(const HodgePresentation& p, const Polynomial& f) {
  std::vector<MElement> out;
  for (const auto& sm : p.summands)
    for (auto& [gamma, e] : derivatives(sm.generator, sm.pole_step, p.alpha, f, sm.budget))
      out.push_back(MElement{std::move(e.num), e.pole});
  return out;
}

bool pole_full(const HodgePresentation& p, const Polynomial& f, int k) {
  bool full = false;
  for (auto& e : presentation_seeds(p, f)) {
    while (e.pole > k && !e.numerator.is_zero()) {
      auto q = e.numerator.divide_exact(f);
      if (!q) throw std::domain_error("seed with pole beyond " + std::to_string(k));
      e.numerator = std::move(*q);
      --e.pole;
    }
    if (e.pole == k && !e.numerator.coefficient(Monomial(f.dim())).is_zero()) full = true;
  }
  return full;
}

SpanCertificate presentations_equal(const HodgePresentation& a, const HodgePresentation& b, const Polynomial& f,
                                    const Bounds& bounds, const std::optional<WeightVector>& weights) {
  std::vector<SpanCertificate> parts;
  parts.push_back(presentation_contained(a, b, f, bounds, weights));
  parts.push_back(presentation_contained(b, a, f, bounds, weights));
  return all_of(std::move(parts), bounds, "two-sided comparison");
}

// -------------------------------------------------------------- cross-check

nlohmann::ordered_json CrosscheckResult::json() const {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(all_of({kernel, forward, backward}, forward.bounds).verdict);
  j["psi_image"] = to_json(psi_image);
  j["closed_form"] = to_json(closed_form);
  j["kernel"] = kernel.json();
  j["forward"] = forward.json();
  j["backward"] = backward.json();
  return j;
}

std::vector<SpanGen> snc_kernel_generators(const SncDivisor& d, const Rational& alpha, int k, int l, int jmax) {
  const int top = snc_weight_top(d, alpha);
  if (l < 0 || l > top)
    throw std::invalid_argument("weight index l=" + std::to_string(l) + " outside [0," + std::to_string(top) + "]");
  std::vector<SpanGen> out;
  MonomialIdeal ideal = snc_f0_ideal(d, alpha, l);
  for (const auto& m : ideal.generators()) out.push_back({BfElement::layer(Polynomial(m), 0), k});
  // V^{>alpha} lies in every K_l, V^alpha in the top one
  for (auto& g : candidate_V_snc_strict(d, alpha, std::min(k, jmax)))
    if (g.elem.top_layer() > 0) out.push_back({g.elem, k - g.elem.top_layer()});
  if (l == top)
    for (auto& g : candidate_V_snc(d, alpha, std::min(k, jmax)))
      if (g.elem.top_layer() > 0) out.push_back({g.elem, k - g.elem.top_layer()});
  return out;
}

std::vector<SpanGen> whom_kernel_generators(const QuasiHomogeneousGerm& g, const Rational& alpha, int k, int l) {
  const int top = whom_weight_top(g, alpha);
  if (l < 0 || l > top)
    throw std::invalid_argument("weight index l=" + std::to_string(l) + " outside [0," + std::to_string(top) + "]");
  auto layers = [&](const Rational& lambda, bool strict) {
    std::vector<SpanGen> out;
    for (int j = 0; j <= k; ++j) {
      MonomialIdeal ideal = graded_ideal(g.weights(), lambda + Rational(j) - g.weights().total(), strict);
      for (const auto& m : ideal.generators()) out.push_back({BfElement::layer(Polynomial(m), j), k - j});
    }
    return out;
  };
  if (l == top) return layers(alpha, false);
  if (alpha == Rational(1) && l == 0) {
    // K_0 V^1 = V^{>1} = t V^{>0}
    auto out = layers(Rational(0), true);
    for (auto& s : out) s.elem = act(BfOp::T, s.elem, g.f());
    return out;
  }
  return layers(alpha, true);
}

namespace {

HodgePresentation psi_presentation(const std::vector<SpanGen>& gens, const Rational& alpha, const Polynomial& f) {
  HodgePresentation p;
  p.alpha = alpha;
  for (const auto& g : gens) {
    auto terms = psi_map(g.elem, alpha);
    if (terms.empty()) continue;
    int top = 0;
    for (const auto& [h, j] : terms) top = std::max(top, j);
    Polynomial acc(f.dim());
    for (const auto& [h, j] : terms) acc += h * f.pow(static_cast<unsigned>(top - j));
    p.add(g.budget, acc, top);
  }
  return p;
}

CrosscheckResult finish(const Polynomial& f, const Rational& alpha, const std::vector<SpanGen>& kgens,
                        SpanCertificate kernel, HodgePresentation closed, const Bounds& bounds,
                        const std::optional<WeightVector>& weights) {
  CrosscheckResult r;
  r.kernel = std::move(kernel);
  r.psi_image = psi_presentation(kgens, alpha, f);
  r.closed_form = std::move(closed);
  r.forward = presentation_contained(r.psi_image, r.closed_form, f, bounds, weights);
  r.backward = presentation_contained(r.closed_form, r.psi_image, f, bounds, weights);
  return r;
}

}  // namespace

CrosscheckResult main_formula_crosscheck_snc(const SncDivisor& d, const Rational& alpha, int k, int l,
                                             const Bounds& bounds) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) throw std::invalid_argument("alpha must lie in (0,1]");
  if (k < 0) throw std::invalid_argument("Hodge index k must be non-negative");
  auto kgens = snc_kernel_generators(d, alpha, k, l, bounds.tord);
  std::vector<SpanGen> layer0;
  for (const auto& g : kgens)
    if (g.elem.top_layer() == 0) layer0.push_back(g);
  auto kernel = kernel_filtration_check(d.f(), alpha, l, layer0, candidate_V_snc_strict(d, alpha, bounds.tord), bounds);
  return finish(d.f(), alpha, kgens, std::move(kernel), snc_hodge_weight(d, alpha, k, l), bounds, std::nullopt);
}

CrosscheckResult main_formula_crosscheck_whom(const QuasiHomogeneousGerm& g, const Rational& alpha, int k, int l,
                                              const Bounds& bounds) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) throw std::invalid_argument("alpha must lie in (0,1]");
  if (k < 0) throw std::invalid_argument("Hodge index k must be non-negative");
  auto kgens = whom_kernel_generators(g, alpha, k, l);
  auto kernel = kernel_filtration_check(g.f(), alpha, l, kgens,
                                        candidate_V_whom_strict(g, alpha, -1, bounds.tord), bounds, g.weights());
  return finish(g.f(), alpha, kgens, std::move(kernel), whom_hodge_weight(g, alpha, k, l), bounds, g.weights());
}

}  // namespace hwkit
