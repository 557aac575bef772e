#include "hwkit/whom.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hwkit/linalg.hpp"

namespace hwkit {

namespace {

void require_unit_interval(const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha > Rational(1))
    throw std::invalid_argument("alpha must lie in (0,1], got " + alpha.str());
}

// Elimination order for a graded piece: monomials with a large single
// exponent come first so they become pivots; the complement (the basis)
// favours spread-out monomials.
bool elimination_before(const Monomial& a, const Monomial& b) {
  auto ma = *std::max_element(a.exponents().begin(), a.exponents().end());
  auto mb = *std::max_element(b.exponents().begin(), b.exponents().end());
  if (ma != mb) return ma > mb;
  return GrlexLess{}(b, a);
}

}  // namespace

std::vector<Monomial> milnor_basis(const Polynomial& f, const WeightVector& w) {
  const std::size_t n = f.dim();
  if (w.dim() != n) throw DimensionMismatch(w.dim(), n);
  auto deg = homogeneous_degree(f, w);
  if (f.is_zero() || !deg || *deg != Rational(1))
    throw NotQuasiHomogeneous("f = " + f.str() + " is not weighted homogeneous of degree 1 for the given weights");

  Rational socle;
  for (const auto& wi : w.weights()) socle += Rational(1) - wi * Rational(2);
  const Rational window = socle + w.max();

  std::vector<Polynomial> partials;
  std::vector<Rational> pdeg;
  for (std::size_t i = 0; i < n; ++i) {
    partials.push_back(f.derivative(i));
    pdeg.push_back(Rational(1) - w[i]);
  }

  std::map<Rational, std::vector<Monomial>> by_degree;
  for (auto& m : monomials_up_to_weight(w, window)) by_degree[weighted_degree(m, w)].push_back(m);

  std::vector<Monomial> basis;
  for (auto& [d, monos] : by_degree) {
    std::sort(monos.begin(), monos.end(), elimination_before);
    std::map<Monomial, std::uint32_t, GrlexLess> index;
    for (std::uint32_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
    EchelonBasis eb(false);
    for (std::size_t i = 0; i < n; ++i) {
      if (partials[i].is_zero()) continue;
      Rational cofactor_deg = d - pdeg[i];
      if (cofactor_deg.sign() < 0) continue;
      auto it = by_degree.find(cofactor_deg);
      if (it == by_degree.end()) continue;
      for (const auto& m : it->second) {
        std::map<std::uint32_t, Rational> v;
        Polynomial prod = partials[i].times_monomial(m);
        for (const auto& [t, c] : prod.terms()) v[index.at(t)] += c;
        eb.insert(sparse_from_map(v), 0);
      }
    }
    if (d > socle) {
      if (eb.rank() != monos.size())
        throw NotIsolated("f = " + f.str() + " does not have an isolated singularity at the origin");
      continue;
    }
    for (std::uint32_t i = 0; i < monos.size(); ++i)
      if (!eb.has_pivot(i)) basis.push_back(monos[i]);
  }
  std::sort(basis.begin(), basis.end(), GrlexLess{});
  return basis;
}

QuasiHomogeneousGerm::QuasiHomogeneousGerm(Polynomial f, WeightVector w)
    : f_(std::move(f)), w_(std::move(w)), basis_(milnor_basis(f_, w_)) {
  for (const auto& wi : w_.weights()) socle_ += Rational(1) - wi * Rational(2);
}

int whom_weight_top(const QuasiHomogeneousGerm&, const Rational& alpha) {
  require_unit_interval(alpha);
  return alpha == Rational(1) ? 2 : 1;
}

HodgePresentation whom_hodge_weight(const QuasiHomogeneousGerm& g, const Rational& alpha, int k, int l,
                                    std::optional<int> jmax) {
  int top = whom_weight_top(g, alpha);
  if (k < 0) throw std::invalid_argument("Hodge index k must be non-negative");
  if (l < 0 || l > top)
    throw std::invalid_argument("weight index l=" + std::to_string(l) + " outside [0," + std::to_string(top) + "]");
  int jm = jmax.value_or(k);
  if (jm < k) throw std::invalid_argument("jmax must be at least k");
  HodgePresentation p;
  p.alpha = alpha;
  const bool untwisted = alpha == Rational(1);
  if (untwisted && l == 0) {
    // W_n O(*f) = O_X, whose Hodge filtration is O_X from F_0 on.
    p.add(k, g.f(), 0);
    return p;
  }
  const bool strict = l < top;
  for (int j = 0; j <= k; ++j)
    p.add_ideal(k - j, graded_ideal(g.weights(), alpha + Rational(j) - g.weights().total(), strict), j);
  return p;
}

std::vector<Polynomial> whom_micromult_ideal(const QuasiHomogeneousGerm& g, const Rational& alpha, int k) {
  require_unit_interval(alpha);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const std::size_t n = g.dim();
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(g.f().derivative(i));
  std::vector<Polynomial> out;
  for (int j = 0; j <= k; ++j) {
    // all products prod d_i(f)^gamma_i with |gamma| = k - j
    std::vector<Polynomial> prods;
    std::function<void(std::size_t, int, Polynomial)> rec = [&](std::size_t i, int left, Polynomial acc) {
      if (i + 1 == n) {
        prods.push_back(acc * partials[i].pow(static_cast<unsigned>(left)));
        return;
      }
      for (int e = 0; e <= left; ++e) rec(i + 1, left - e, acc * partials[i].pow(static_cast<unsigned>(e)));
    };
    rec(0, k - j, Polynomial(n, Rational(1)));
    auto ideal = graded_ideal(g.weights(), alpha + Rational(j) - g.weights().total(), true);
    for (const auto& p : prods)
      for (const auto& m : ideal.generators()) {
        Polynomial q = p.times_monomial(m);
        if (!q.is_zero() && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
      }
  }
  return out;
}

}  // namespace hwkit
