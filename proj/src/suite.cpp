#include "hwkit/suite.hpp"

#include <chrono>
#include <random>

#include "hwkit/bsdata.hpp"
#include "hwkit/ppd.hpp"
#include "hwkit/randgen.hpp"
#include "hwkit/snc.hpp"
#include "hwkit/vforacle.hpp"
#include "hwkit/whom.hpp"

namespace hwkit {

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

const char* kNodeAnn =
    "f: x1*x2\n"
    "E: 1/2*x1*d1 + 1/2*x2*d2\n"
    "alpha: 0\n"
    "b: (s+1)^2\n"
    "pp: true\n"
    "x1*d1 - x2*d2\n";

QuasiHomogeneousGerm cusp() { return QuasiHomogeneousGerm(poly_parse("x1^2 + x2^3", 2), WeightVector({q(1, 2), q(1, 3)})); }
ReducedBFunction cusp_b() {
  auto g = cusp();
  return reduce(bfunction_whom_isolated(g.f(), g.weights(), g.milnor()));
}
ReducedBFunction node_b() { return reduce(bfunction_snc({1, 1})); }

Bounds make_bounds(int order, int xdeg, int tord = 6) {
  Bounds b;
  b.order = order;
  b.xdeg = xdeg;
  b.tord = tord;
  return b;
}

// Collects check outcomes as deterministic detail lines.
class Checks {
 public:
  void operator()(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    lines_.push_back((ok ? "ok: " : "FAIL: ") + what);
  }
  template <class F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      (*this)(false, what + " threw: " + e.what());
    }
  }
  bool ok() const { return ok_; }
  std::vector<std::string> take() { return std::move(lines_); }

 private:
  bool ok_ = true;
  std::vector<std::string> lines_;
};

std::string yn(bool b) { return b ? "T" : "F"; }

MonomialIdeal ideal_at(const HodgePresentation& p, int pole) {
  std::vector<Monomial> gens;
  for (const auto& s : p.summands)
    if (s.pole_step == pole && s.generator.terms().size() == 1) gens.push_back(s.generator.leading_monomial());
  return MonomialIdeal(p.summands.empty() ? 0 : p.summands.front().generator.dim(), gens);
}

MonomialIdeal monomial_ideal(const std::vector<Polynomial>& polys, std::size_t n) {
  std::vector<Monomial> gens;
  for (const auto& p : polys)
    if (p.terms().size() == 1) gens.push_back(p.leading_monomial());
  return MonomialIdeal(n, gens);
}

void criterion1(Checks& c) {
  struct Case {
    const char* poly;
    std::size_t n;
    const char* roots;
    int order, xdeg;
    std::optional<WeightVector> w;
  };
  const std::vector<Case> cases{
      {"x1^2", 1, "(s+1)(s+1/2)", 2, 4, std::nullopt},
      {"x1*x2", 2, "(s+1)^2", 2, 4, std::nullopt},
      {"x1^2 + x2^3", 2, "(s+1)(s+5/6)(s+7/6)", 3, 6, WeightVector({q(1, 2), q(1, 3)})},
  };
  for (const auto& cs : cases) {
    c.guarded(cs.poly, [&] {
      auto chk = verify_bfunction(poly_parse(cs.poly, cs.n), parse_roots(cs.roots), cs.order, cs.xdeg, cs.w);
      c(chk.certificate.member() && chk.witness.has_value(), std::string(cs.poly) + ": " + cs.roots + " certified");
      for (const auto& [root, cert] : chk.divisors)
        c(!cert.member(), std::string(cs.poly) + ": divisor without root " + root.str() + " " + to_string(cert.verdict));
    });
  }
}

void criterion2(Checks& c) {
  SncDivisor xy({1, 1});
  const std::size_t n = 2;
  auto ideal = [&](std::vector<const char*> gens) {
    std::vector<Monomial> ms;
    for (auto g : gens) ms.push_back(poly_parse(g, n).leading_monomial());
    return MonomialIdeal(n, ms);
  };
  c(snc_f0_ideal(xy, 1, 0) == ideal({"x1*x2"}), "a=(1,1) alpha=1: I_0 = " + snc_f0_ideal(xy, 1, 0).str());
  c(snc_f0_ideal(xy, 1, 1) == ideal({"x1", "x2"}), "a=(1,1) alpha=1: I_1 = " + snc_f0_ideal(xy, 1, 1).str());
  c(snc_f0_ideal(xy, 1, 2).is_unit(), "a=(1,1) alpha=1: I_2 = " + snc_f0_ideal(xy, 1, 2).str());
  SncDivisor d23({2, 3});
  const Rational a = q(1, 2);
  c(snc_weight_top(d23, a) == 1, "a=(2,3) alpha=1/2: m_alpha = " + std::to_string(snc_weight_top(d23, a)));
  c(snc_f0_ideal(d23, a, 0) == ideal({"x1*x2"}), "a=(2,3) alpha=1/2: I_0 = " + snc_f0_ideal(d23, a, 0).str());
  c(snc_f0_ideal(d23, a, 1) == ideal({"x2"}), "a=(2,3) alpha=1/2: I_1 = " + snc_f0_ideal(d23, a, 1).str());
  for (const auto& [d, alpha] : std::vector<std::pair<SncDivisor, Rational>>{{xy, 1}, {d23, a}}) {
    Monomial top(d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i)
      top[i] = static_cast<int>((alpha * Rational(d.exponents()[i])).ceil()) - 1;
    c(snc_f0_ideal(d, alpha, 0) == snc_multiplier_ideal(d, alpha), "I_0 is the multiplier ideal at alpha=" + alpha.str());
    c(snc_f0_ideal(d, alpha, snc_weight_top(d, alpha)) == MonomialIdeal(d.dim(), {top}),
      "I_top = prod x^(ceil(alpha a)-1) at alpha=" + alpha.str());
  }
}

void criterion3(Checks& c) {
  const Bounds b = make_bounds(4, 12, 6);
  SncDivisor xy({1, 1}), d23({2, 3});
  auto g = cusp();
  auto run = [&](const std::string& name, auto&& f) {
    c.guarded(name, [&] {
      CrosscheckResult r = f();
      c(r.member(), name + " kernel " + to_string(r.kernel.verdict) + ", forward " + to_string(r.forward.verdict) +
                        ", backward " + to_string(r.backward.verdict));
    });
  };
  for (const auto& [d, alphas] : std::vector<std::pair<SncDivisor, std::vector<Rational>>>{
           {xy, {q(1)}}, {d23, {q(1, 3), q(1, 2), q(1)}}})
    for (const auto& alpha : alphas)
      for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= snc_weight_top(d, alpha); ++l)
          run("snc " + d.f().str() + " alpha=" + alpha.str() + " k=" + std::to_string(k) + " l=" + std::to_string(l),
              [&] { return main_formula_crosscheck_snc(d, alpha, k, l, b); });
  for (const auto& alpha : {q(1, 2), q(5, 6), q(1)})
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= whom_weight_top(g, alpha); ++l)
        run("cusp alpha=" + alpha.str() + " k=" + std::to_string(k) + " l=" + std::to_string(l),
            [&] { return main_formula_crosscheck_whom(g, alpha, k, l, b); });
}

void criterion4(Checks& c) {
  auto g = cusp();
  const std::size_t n = 2;
  MonomialIdeal maxideal(n, {Monomial::variable(n, 0), Monomial::variable(n, 1)});
  c(g.milnor() == std::vector<Monomial>{Monomial(n), Monomial::variable(n, 1)}, "cusp Milnor basis {1, x2}");
  auto w2 = whom_hodge_weight(g, q(5, 6), 0, 0);
  c(ideal_at(w2, 0) == maxideal && w2.summands.size() == 2, "F_0 W_2 M(f^-5/6) = " + w2.str());
  auto full = whom_hodge_weight(g, q(5, 6), 0, whom_weight_top(g, q(5, 6)));
  c(ideal_at(full, 0).is_unit(), "F_0 full M(f^-5/6) = " + full.str());
  auto m56 = monomial_ideal(whom_micromult_ideal(g, q(5, 6), 0), n);
  c(m56 == maxideal, "W_0 V~^(5/6) = " + m56.str());
  auto m12 = monomial_ideal(whom_micromult_ideal(g, q(1, 2), 0), n);
  c(m12.is_unit(), "W_0 V~^(1/2) = " + m12.str());
}

void criterion5(Checks& c) {
  auto b = cusp_b();
  const std::vector<std::pair<Rational, std::string>> expect{
      {q(1, 2), "TTT"}, {q(5, 6), "FTT"}, {q(9, 10), "FFF"}, {q(1), "FFF"}};
  for (const auto& [alpha, want] : expect) {
    auto pc = classify_pair(b, alpha);
    std::string got = yn(pc.klt) + yn(pc.plt) + yn(pc.lc);
    c(got == want, "cusp alpha=" + alpha.str() + " klt/plt/lc = " + got);
  }
  auto pc = classify_pair(node_b(), q(1));
  std::string got = yn(pc.klt) + yn(pc.plt) + yn(pc.lc);
  c(got == "FFT", "node alpha=1 klt/plt/lc = " + got);
}

void criterion6(Checks& c) {
  auto show = [](std::pair<long, long> p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; };
  auto node = node_b(), cb = cusp_b();
  c(weight_bounds(node, 1, 2) == std::pair<long, long>{4, 4}, "node alpha=1 weights " + show(weight_bounds(node, 1, 2)));
  c(weight_bounds(cb, 1, 2) == std::pair<long, long>{3, 3}, "cusp alpha=1 weights " + show(weight_bounds(cb, 1, 2)));
  c(weight_bounds(cb, q(5, 6), 2) == std::pair<long, long>{3, 3},
    "cusp alpha=5/6 weights " + show(weight_bounds(cb, q(5, 6), 2)));
  c(genlevel_bound(node, 1, 0, 2, false) == 0, "node alpha=1 generating level <= 0");
  c(genlevel_bound(cb, 1, 0, 2, false) == 0, "cusp alpha=1 generating level <= 0");
}

void criterion7(Checks& c) {
  auto inp = parse_annihilator(kNodeAnn);
  const Bounds b = make_bounds(4, 10);
  SncDivisor xy({1, 1});
  for (int l = 0; l <= 1; ++l) {
    c.guarded("W l=" + std::to_string(l), [&] {
      auto w = weight_module_generators(inp, l, b);
      auto cert = dmodules_equal(w.presentation, snc_hodge_weight(xy, 1, 0, l), inp.f, b);
      c(cert.member(), "W_{n+" + std::to_string(l) + "}: " + w.presentation.str() + " equals snc");
    });
    for (int k = 0; k <= 1; ++k)
      c.guarded("F_" + std::to_string(k) + " W l=" + std::to_string(l), [&] {
        auto h = hodge_on_weight(inp, l, k, b);
        auto cert = presentations_equal(h.presentation, snc_hodge_weight(xy, 1, k, l), inp.f, b);
        c(cert.member(), "F_" + std::to_string(k) + " W_{n+" + std::to_string(l) + "}: " + h.presentation.str() +
                             " equals snc");
      });
  }
}

void criterion8(Checks& c) {
  auto g = cusp();
  SncDivisor xy({1, 1});
  const auto nb = node_b(), cb = cusp_b();
  for (const auto& alpha : {q(1, 2), q(5, 6), q(1)})
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 1; ++l) {
        // the predicate indexes weights as W_{n+l+floor(alpha)}
        const int wl = l + static_cast<int>(alpha.floor());
        std::string tag = " alpha=" + alpha.str() + " k=" + std::to_string(k) + " l=" + std::to_string(l);
        if (wl <= snc_weight_top(xy, alpha))
          c.guarded("node" + tag, [&] {
            bool pred = hodge_pole_full(nb, alpha, k, l);
            bool out = pole_full(snc_hodge_weight(xy, alpha, k, wl), xy.f(), k);
            c(pred == out, "node" + tag + ": predicate " + yn(pred) + ", closed form " + yn(out));
          });
        if (wl <= whom_weight_top(g, alpha))
          c.guarded("cusp" + tag, [&] {
            bool pred = hodge_pole_full(cb, alpha, k, l);
            bool out = pole_full(whom_hodge_weight(g, alpha, k, wl), g.f(), k);
            c(pred == out, "cusp" + tag + ": predicate " + yn(pred) + ", closed form " + yn(out));
          });
      }
}

void criterion9(Checks& c) {
  std::mt19937 rng(2024);
  {
    std::uniform_int_distribution<int> dim(1, 3), expo(0, 4), den(1, 6);
    bool ok = true;
    for (int it = 0; it < 200; ++it) {
      std::vector<int> a(dim(rng));
      for (auto& e : a) e = expo(rng);
      a[0] = std::max(a[0], 1);
      SncDivisor d(a);
      int dd = den(rng);
      Rational alpha(std::uniform_int_distribution<int>(1, dd)(rng), dd);
      for (int l = 0; l < snc_weight_top(d, alpha); ++l)
        ok = ok && snc_f0_ideal(d, alpha, l).contained_in(snc_f0_ideal(d, alpha, l + 1));
    }
    c(ok, "I_l increasing in l on 200 random SNC divisors");
  }
  {
    std::uniform_int_distribution<int> count(0, 5), num(1, 11), den(1, 6), mult(1, 3);
    bool mono = true, chain = true;
    for (int it = 0; it < 200; ++it) {
      ReducedBFunction b;
      int k = count(rng);
      for (int i = 0; i < k; ++i) b.roots[-Rational(num(rng), den(rng))] += mult(rng);
      for (int an = 1; an <= 12; ++an) {
        Rational alpha(an, 12);
        auto pc = classify_pair(b, alpha);
        chain = chain && (!pc.klt || pc.plt) && (!pc.plt || pc.lc);
        for (int kk = 1; kk < 3; ++kk)
          for (int l = 0; l < 3; ++l)
            if (hodge_pole_full(b, alpha, kk, l))
              mono = mono && hodge_pole_full(b, alpha, kk - 1, l) && hodge_pole_full(b, alpha, kk, l + 1);
      }
    }
    c(chain, "klt => plt => lc on 200 random root multisets x 12 values of alpha");
    c(mono, "hodge_pole_full monotone in k and l");
  }
  {
    bool ok = true;
    std::uniform_int_distribution<int> dim(1, 2), bound(0, 2);
    for (int it = 0; it < 100; ++it) {
      std::size_t n = dim(rng);
      std::vector<WeylOperator> targets{randgen::weyl(rng, n, 2, 1, false), randgen::weyl(rng, n, 2, 1, false)};
      auto res = syzygy_kernel(targets, bound(rng), bound(rng));
      for (const auto& t : res.tuples) {
        WeylOperator sum(n);
        for (std::size_t i = 0; i < t.size(); ++i) sum += weyl_mul(t[i], targets[i]);
        ok = ok && sum.is_zero();
      }
    }
    c(ok, "syzygies re-multiply to zero on 100 random bounded instances");
  }
  {
    bool ok = true;
    auto br = [](const WeylOperator& a, const WeylOperator& b) { return weyl_mul(a, b) - weyl_mul(b, a); };
    for (int it = 0; it < 200; ++it) {
      const std::size_t n = 2;
      auto a = randgen::weyl(rng, n, 2, 2, true), b = randgen::weyl(rng, n, 2, 2, true),
           d = randgen::weyl(rng, n, 2, 2, true);
      ok = ok && (br(a, br(b, d)) + br(b, br(d, a)) + br(d, br(a, b))).is_zero();
      ok = ok && (br(a, weyl_mul(b, d)) - weyl_mul(br(a, b), d) - weyl_mul(b, br(a, d))).is_zero();
      ok = ok && br(WeylOperator::d(n, it % n), WeylOperator::x(n, it % n)) == WeylOperator(n, Rational(1));
    }
    c(ok, "commutator identities on 200 random operator triples");
  }
  c.guarded("negative controls", [&] {
    const Bounds b = make_bounds(4, 12, 6);
    auto rep = verify_v_axioms(corrupt(snc_source(SncDivisor({1, 1})), q(3, 2)), {q(1, 2)}, b);
    c(!rep.all_member(), "corrupted V candidate fails the axioms");
    auto bf = verify_bfunction(poly_parse("x1*x2", 2), parse_roots("(s+1)"), 2, 4);
    c(!bf.certificate.member(), "(s+1) is not certified for x1*x2");
    SncDivisor xy({1, 1});
    auto cc = main_formula_crosscheck_snc(xy, 1, 0, 0, b);
    c(!presentations_equal(cc.psi_image, snc_hodge_weight(xy, 1, 0, 1), xy.f(), b).member(),
      "psi-image of K_0 differs from the l=1 closed form");
  });
}

void criterion10(Checks& c) {
  std::mt19937 rng(99);
  bool poly_ok = true, op_ok = true;
  for (int it = 0; it < 500; ++it) {
    std::size_t n = 1 + it % 3;
    auto p = randgen::polynomial(rng, n, 4, 3);
    poly_ok = poly_ok && poly_parse(p.str(), n) == p;
    auto op = randgen::weyl(rng, n, 3, 2, it % 2 == 0);
    op_ok = op_ok && weyl_parse(op.str(), n) == op;
  }
  c(poly_ok, "polynomial print/parse round trip on 500 random polynomials");
  c(op_ok, "operator print/parse round trip on 500 random operators");
  auto j = run_criterion(2).json();
  c(nlohmann::ordered_json::parse(j.dump()) == j, "envelope JSON round trip");
}

struct CriterionSpec {
  const char* title;
  double limit;
  void (*body)(Checks&);
};

const CriterionSpec kSpecs[kCriteria] = {
    {"b-function certification", 10, criterion1},
    {"SNC golden tables", 1, criterion2},
    {"master-formula cross-check", 120, criterion3},
    {"weighted-homogeneous outputs", 5, criterion4},
    {"classification grid", 1, criterion5},
    {"weight and generating-level bounds", 1, criterion6},
    {"PPD and SNC agree on the node", 120, criterion7},
    {"Hodge-pole predicate consistency", 10, criterion8},
    {"property suites", 60, criterion9},
    {"round trips and determinism", 60, criterion10},
};

CriterionResult timed(int id, const std::string& title, double limit, const std::function<void(Checks&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = title;
  r.limit_seconds = limit;
  Checks c;
  auto t0 = std::chrono::steady_clock::now();
  c.guarded(title, [&] { body(c); });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.status = c.ok() && r.within_limit() ? CheckStatus::Pass : CheckStatus::Fail;
  r.details = c.take();
  if (!r.within_limit()) r.details.push_back("FAIL: runtime limit exceeded");
  return r;
}

// A check that is meant to come out negative.
CriterionResult expect_failure(int id, const std::string& title, const std::function<bool()>& holds) {
  return [&] {
    CriterionResult r;
    r.id = id;
    r.title = title;
    r.limit_seconds = 120;
    auto t0 = std::chrono::steady_clock::now();
    try {
      bool h = holds();
      r.status = h ? CheckStatus::Fail : CheckStatus::ExpectedFailure;
      r.details.push_back(h ? "FAIL: the corrupted input was accepted" : "ok: rejected as expected");
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.details.push_back(std::string("FAIL: threw: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }();
}

// A check run with bounds too small to decide anything.
CriterionResult expect_inconclusive(int id, const std::string& title, const std::function<bool()>& decided) {
  CriterionResult r;
  r.id = id;
  r.title = title;
  r.limit_seconds = 120;
  auto t0 = std::chrono::steady_clock::now();
  try {
    bool d = decided();
    r.status = d ? CheckStatus::Pass : CheckStatus::Inconclusive;
    r.details.push_back(d ? "ok: decided despite the small bounds" : "inconclusive at the given bounds");
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.details.push_back(std::string("FAIL: threw: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ExpectedFailure: return "expected-failure";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::ordered_json CriterionResult::json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["title"] = title;
  j["status"] = to_string(status);
  j["details"] = details;
  j["limit_seconds"] = limit_seconds;
  return j;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriteria) throw std::out_of_range("no criterion " + std::to_string(id));
  const CriterionSpec& s = kSpecs[id - 1];
  return timed(id, s.title, s.limit, s.body);
}

std::optional<SuiteProfile> parse_profile(std::string_view name) {
  if (name == "default") return SuiteProfile::Default;
  if (name == "corrupted-candidate") return SuiteProfile::CorruptedCandidate;
  if (name == "bounds-starved") return SuiteProfile::BoundsStarved;
  return std::nullopt;
}

std::string to_string(SuiteProfile p) {
  switch (p) {
    case SuiteProfile::Default: return "default";
    case SuiteProfile::CorruptedCandidate: return "corrupted-candidate";
    case SuiteProfile::BoundsStarved: return "bounds-starved";
  }
  return "?";
}

int SuiteReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail) return 1;
    if (r.status == CheckStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

nlohmann::ordered_json SuiteReport::json() const {
  nlohmann::ordered_json j;
  j["profile"] = to_string(profile);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : results) arr.push_back(r.json());
  j["results"] = arr;
  j["exit_code"] = exit_code();
  return j;
}

SuiteReport run_suite(SuiteProfile profile, const std::function<void(const CriterionResult&)>& progress) {
  SuiteReport rep;
  rep.profile = profile;
  auto add = [&](CriterionResult r) {
    if (progress) progress(r);
    rep.results.push_back(std::move(r));
  };
  const Bounds b = make_bounds(4, 12, 6);
  SncDivisor xy({1, 1});
  switch (profile) {
    case SuiteProfile::Default:
      for (int id = 1; id <= kCriteria; ++id) add(run_criterion(id));
      break;
    case SuiteProfile::CorruptedCandidate:
      add(expect_failure(1, "node V^(3/2) without its first generator", [&] {
        return verify_v_axioms(corrupt(snc_source(xy), q(3, 2)), {q(1, 2)}, b).all_member();
      }));
      add(expect_failure(2, "cusp V^(11/6) without its first generator", [&] {
        return verify_v_axioms(corrupt(whom_source(cusp()), q(11, 6)), {q(5, 6)}, b).all_member();
      }));
      add(expect_failure(3, "(s+1) offered as the b-function of x1*x2", [&] {
        return verify_bfunction(xy.f(), parse_roots("(s+1)"), 2, 4).certificate.member();
      }));
      add(expect_failure(4, "closed form at the wrong weight level", [&] {
        auto cc = main_formula_crosscheck_snc(xy, 1, 0, 0, b);
        return presentations_equal(cc.psi_image, snc_hodge_weight(xy, 1, 0, 1), xy.f(), b).member();
      }));
      add(expect_failure(5, "Gamma-ideal output compared at the wrong weight level", [&] {
        auto inp = parse_annihilator(kNodeAnn);
        return presentations_equal(hodge_on_weight(inp, 0, 0, make_bounds(4, 10)).presentation,
                                   snc_hodge_weight(xy, 1, 0, 1), xy.f(), b)
            .member();
      }));
      break;
    case SuiteProfile::BoundsStarved:
      add(expect_inconclusive(1, "cusp b-function at order 1", [&] {
        return verify_bfunction(cusp().f(), cusp_b().roots, 1, 2).certificate.member();
      }));
      add(expect_inconclusive(2, "node weight module at order 0", [&] {
        auto inp = parse_annihilator(kNodeAnn);
        return !weight_module_generators(inp, 0, make_bounds(0, 1)).inconclusive;
      }));
      add(expect_inconclusive(3, "(s+1) x1 in V^{>1} for the node at x-degree 0", [&] {
        auto u = act(BfOp::S, BfElement::layer(poly_parse("x1", 2), 0), xy.f());
        u += BfElement::layer(poly_parse("x1", 2), 0);
        return membership(u, candidate_V_snc_strict(xy, 1, 2), xy.f(), make_bounds(0, 0, 2)).member();
      }));
      break;
  }
  return rep;
}

}  // namespace hwkit
