#include <chrono>

#include "doctest.h"
#include "hwkit/vforacle.hpp"
#include "random_gen.hpp"

using namespace hwkit;

namespace {

Polynomial P(const char* s, std::size_t n) { return poly_parse(s, n); }
BfElement L(const char* s, std::size_t n, int j = 0) { return BfElement::layer(P(s, n), j); }

const Polynomial kCusp = poly_parse("x1^2 + x2^3", 2);
QuasiHomogeneousGerm cusp() { return QuasiHomogeneousGerm(kCusp, WeightVector({Rational(1, 2), Rational(1, 3)})); }

}  // namespace

TEST_CASE("act follows the action rules") {
  Polynomial f = P("x1*x2", 2);
  CHECK(act(BfOp::T, L("1", 2), f) == L("x1*x2", 2));
  CHECK(act(BfOp::S, L("1", 2), f) == L("-x1*x2", 2, 1));
  CHECK(act(BfOp::Dt, L("x1", 2), f) == L("x1", 2, 1));
  // d_1 (g dt^k) = d_1(g) dt^k - d_1(f) g dt^(k+1)
  BfElement e = act(BfOp::D, L("x1^2", 2), f, 0);
  BfElement expect = L("2*x1", 2);
  expect += L("-x1^2*x2", 2, 1);
  CHECK(e == expect);
  CHECK(act(BfOp::T, L("1", 2, 2), f) == [&] {
    BfElement u = L("x1*x2", 2, 2);
    u += L("-2", 2, 1);
    return u;
  }());
  BfElement tw = L("1", 2);
  tw.twist = Rational(1, 2);
  CHECK_THROWS_AS(act(BfOp::D, tw, f, 0), std::domain_error);
}

TEST_CASE("Weyl relations hold on random elements") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2;
    Polynomial f = testgen::polynomial(rng, n, 3, 3);
    if (f.is_zero()) continue;
    BfElement u;
    for (int j = 0; j < 3; ++j) u.add(j, testgen::polynomial(rng, n, 3, 3));
    // [dt, t] = 1
    BfElement lhs = act(BfOp::Dt, act(BfOp::T, u, f), f);
    BfElement rhs = act(BfOp::T, act(BfOp::Dt, u, f), f);
    rhs *= Rational(-1);
    lhs += rhs;
    CHECK(lhs == u);
    // [d_i, t] = 0 and [d_i, x_i] = 1
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(act(BfOp::D, act(BfOp::T, u, f), f, i) == act(BfOp::T, act(BfOp::D, u, f, i), f));
      BfElement a = act(BfOp::D, act(BfOp::X, u, f, i), f, i);
      BfElement b = act(BfOp::X, act(BfOp::D, u, f, i), f, i);
      b *= Rational(-1);
      a += b;
      CHECK(a == u);
    }
    // s commutes with D_X
    CHECK(act(BfOp::D, act(BfOp::S, u, f), f, 0) == act(BfOp::S, act(BfOp::D, u, f, 0), f));
  }
}

TEST_CASE("act_operator agrees with repeated action") {
  Polynomial f = P("x1^2 + x2^3", 2);
  WeylOperator op = weyl_parse("x1*d1*d2*s + 3*d2^2 - s^2", 2);
  BfElement u = L("x1*x2 + 1", 2);
  BfElement expect = act(BfOp::X, act(BfOp::D, act(BfOp::D, act(BfOp::S, u, f), f, 0), f, 1), f, 0);
  BfElement b = act(BfOp::D, act(BfOp::D, u, f, 1), f, 1);
  b *= Rational(3);
  expect += b;
  BfElement c = act(BfOp::S, act(BfOp::S, u, f), f);
  c *= Rational(-1);
  expect += c;
  CHECK(act_operator(op, u, f) == expect);
}

TEST_CASE("membership examples") {
  Polynomial f = P("x1*x2", 2);
  Bounds b{0, 4, 2};
  auto c = membership(L("x1*x2", 2), {{L("x1*x2", 2), -1}}, f, b);
  CHECK(c.member());
  REQUIRE(c.witness);
  CHECK(check_witness(c, L("x1*x2", 2), {{L("x1*x2", 2), -1}}, f));

  auto d = membership(L("1", 2), {{L("x1", 2), -1}}, f, b);
  CHECK(d.verdict == Verdict::NotFoundAtBound);
  CHECK_FALSE(d.witness);

  // (s+1) v in V^{>1} for v in K_1 V^1 of xy
  SncDivisor xy({1, 1});
  auto strict = candidate_V_snc_strict(xy, Rational(1), 6);
  for (const char* v : {"x1", "x2"}) {
    BfElement u = act(BfOp::S, L(v, 2), f);
    u += L(v, 2);
    auto cert = membership(u, strict, f, Bounds{4, 12, 6});
    CHECK(cert.member());
    CHECK(check_witness(cert, u, strict, f));
  }
  // but 1 itself is not: (s+1) 1 needs (s+1)^2
  BfElement u1 = act(BfOp::S, L("1", 2), f);
  u1 += L("1", 2);
  CHECK(membership(u1, strict, f, Bounds{4, 12, 6}).verdict == Verdict::NotFoundAtBound);
  CHECK_THROWS_AS(membership(L("1", 2, 9), {{L("1", 2), 0}}, f, b), std::out_of_range);
}

TEST_CASE("truncated_span examples") {
  Polynomial x1 = P("x1", 1);
  auto s = truncated_span({L("1", 1)}, x1, Bounds{0, 2, 0});
  REQUIRE(s.size() == 3);
  CHECK(s[0] == L("x1^2", 1));
  CHECK(s[1] == L("x1", 1));
  CHECK(s[2] == L("1", 1));
  // d_1 x1 = 1 - x1 dt and dt x1 = x1 dt, so 1 is reached once dt is adjoined
  auto t = truncated_span({L("x1", 1)}, x1, Bounds{1, 1, 1});
  TruncatedSpan span(x1, {{L("x1", 1), -1}}, Bounds{1, 1, 1}, std::nullopt, true);
  auto c = span.membership(L("1", 1));
  CHECK(c.member());
  CHECK(check_witness(c, L("1", 1), {{L("x1", 1), -1}}, x1));
  bool has_one = false;
  for (const auto& e : t) has_one = has_one || e == L("1", 1);
  CHECK(has_one);
  // without dt only D_X acts: 1 lies in V^1 but D_X x1 lies in V^2
  TruncatedSpan dx(x1, {{L("x1", 1), -1}}, Bounds{1, 1, 1});
  CHECK(dx.membership(L("1", 1)).verdict == Verdict::NotFoundAtBound);
  // principal slice
  auto p = truncated_span({L("x1*x2", 2)}, P("x1*x2", 2), Bounds{0, 1, 0});
  CHECK(p.size() == 3);
}

TEST_CASE("verify_bfunction examples") {
  auto a = verify_bfunction(P("x1", 1), {{Rational(-1), 1}}, 1, 0);
  CHECK(a.certificate.member());
  REQUIRE(a.witness);
  CHECK(a.witness->str() == "d1");
  CHECK(a.minimal_at_bound());

  auto b = verify_bfunction(P("x1^2", 1), {{Rational(-1), 1}, {Rational(-1, 2), 1}}, 2, 2);
  CHECK(b.certificate.member());
  REQUIRE(b.witness);
  CHECK(b.witness->str() == "1/4*d1^2");
  REQUIRE(b.divisors.size() == 2);
  for (const auto& [r, c] : b.divisors) CHECK(c.verdict == Verdict::NotFoundAtBound);
  CHECK(b.minimal_at_bound());

  auto xy = verify_bfunction(P("x1*x2", 2), {{Rational(-1), 2}}, 2, 2);
  CHECK(xy.certificate.member());
  CHECK(xy.witness->str() == "d1*d2");
  CHECK(xy.minimal_at_bound());

  // a non-root refutes immediately
  CHECK(verify_bfunction(P("x1", 1), {{Rational(-2), 1}}, 2, 2).certificate.verdict == Verdict::Refuted);
  // a proper divisor of the true b-function is not found
  CHECK(verify_bfunction(P("x1^2", 1), {{Rational(-1), 1}}, 3, 3).certificate.verdict == Verdict::NotFoundAtBound);
}

TEST_CASE("verify_bfunction on the cusp") {
  RootMap b{{Rational(-1), 1}, {Rational(-5, 6), 1}, {Rational(-7, 6), 1}};
  auto t0 = std::chrono::steady_clock::now();
  auto c = verify_bfunction(kCusp, b, 3, 4, WeightVector({Rational(1, 2), Rational(1, 3)}));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(c.certificate.member());
  CHECK(c.minimal_at_bound());
  CHECK(c.divisors.size() == 3);
  CHECK(secs < 10.0);
  // the weights are detected as an optimisation only
  auto d = verify_bfunction(kCusp, b, 3, 4);
  CHECK(d.certificate.member());
}

TEST_CASE("verify_bfunction is stable under extra factors") {
  RootMap b{{Rational(-1), 1}, {Rational(-1, 2), 1}};
  for (const auto& extra : {Rational(-3), Rational(-1, 3), Rational(-1), Rational(2)}) {
    RootMap bb = b;
    bb[extra] += 1;
    CHECK(verify_bfunction(P("x1^2", 1), bb, 3, 3).certificate.member());
  }
}

TEST_CASE("candidate V generators") {
  SncDivisor xy({1, 1});
  auto v = candidate_V_snc(xy, Rational(1), 0);
  REQUIRE(v.size() == 1);
  CHECK(v[0].elem == L("1", 2));  // f^(1) = 1
  SncDivisor d23({2, 3});
  auto w = candidate_V_snc(d23, Rational(1, 2), 1);
  REQUIRE(w.size() == 2);
  CHECK(w[0].elem == L("x2", 2));
  CHECK(w[1].elem == L("x1^2*x2^4", 2, 1));

  auto g = cusp();
  auto c0 = candidate_V_whom(g, Rational(5, 6), 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].elem == L("1", 2));
  auto c1 = candidate_V_whom(g, Rational(1), 0);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].elem == L("x1", 2));
  CHECK(c1[1].elem == L("x2", 2));
  QuasiHomogeneousGerm node(P("x1*x2", 2), WeightVector({Rational(1, 2), Rational(1, 2)}));
  auto n1 = candidate_V_whom(node, Rational(1), 1);
  // O^{>=0} at layer 0, O^{>=1} = (x1^2, x1 x2, x2^2) at layer 1
  REQUIRE(n1.size() == 4);
  CHECK(n1[0].elem == L("1", 2));
  CHECK(n1[0].budget == 1);
  CHECK(n1[1].elem == L("x1^2", 2, 1));
  CHECK(n1[3].budget == 0);
}

TEST_CASE("V axioms: SNC node") {
  Bounds b{4, 12, 6};
  auto rep = verify_v_axioms(snc_source(SncDivisor({1, 1})), {Rational(1, 2), Rational(1), Rational(3, 2)}, b);
  for (const auto& [name, c] : rep.checks) {
    INFO(name);
    CHECK(c.member());
  }
  CHECK(rep.checks.size() == 12);
}

TEST_CASE("V axioms: cusp") {
  auto g = cusp();
  Bounds b{4, 12, 6};
  auto rep = verify_v_axioms(whom_source(g), {Rational(5, 6), Rational(1), Rational(7, 6)}, b);
  for (const auto& [name, c] : rep.checks) {
    INFO(name);
    CHECK(c.member());
  }
}

TEST_CASE("V axioms: corrupted candidates fail") {
  Bounds b{4, 12, 6};
  auto rep = verify_v_axioms(corrupt(snc_source(SncDivisor({1, 1})), Rational(3, 2)), {Rational(1, 2)}, b);
  CHECK_FALSE(rep.all_member());
  auto g = cusp();
  auto rep2 = verify_v_axioms(corrupt(whom_source(g), Rational(11, 6)), {Rational(5, 6)}, b);
  CHECK_FALSE(rep2.all_member());
}

TEST_CASE("kernel filtration checks") {
  Bounds b{4, 12, 6};
  SncDivisor xy({1, 1});
  auto c = kernel_filtration_check(xy.f(), Rational(1), 1, {{L("x1", 2), 0}, {L("x2", 2), 0}},
                                   candidate_V_snc_strict(xy, Rational(1), 6), b);
  CHECK(c.member());
  SncDivisor d23({2, 3});
  auto c2 = kernel_filtration_check(d23.f(), Rational(1, 2), 1, {{L("x2", 2), 0}},
                                    candidate_V_snc_strict(d23, Rational(1, 2), 6), b);
  CHECK(c2.member());
  auto c3 = kernel_filtration_check(xy.f(), Rational(1), 0, {{L("x1*x2", 2), 0}},
                                    candidate_V_snc_strict(xy, Rational(1), 6), b);
  CHECK(c3.member());
  // 1 is in K_2 V^1 but not in K_1 V^1
  auto c4 = kernel_filtration_check(xy.f(), Rational(1), 1, {{L("1", 2), 0}},
                                    candidate_V_snc_strict(xy, Rational(1), 6), b);
  CHECK(c4.verdict == Verdict::NotFoundAtBound);
  auto c5 = kernel_filtration_check(xy.f(), Rational(1), 2, {{L("1", 2), 0}},
                                    candidate_V_snc_strict(xy, Rational(1), 6), b);
  CHECK(c5.member());
}

TEST_CASE("psi map") {
  auto a = psi_map(L("x1", 2), Rational(0));
  REQUIRE(a.size() == 1);
  CHECK(a[0].first == P("x1", 2));
  CHECK(a[0].second == 0);
  CHECK(psi_map(L("x1", 2, 1), Rational(0)).empty());
  auto c = psi_map(L("x1", 2, 2), Rational(1));
  REQUIRE(c.size() == 1);
  CHECK(c[0].first == P("2*x1", 2));
  CHECK(c[0].second == 2);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(5), 0) == Rational(1));
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    BfElement u;
    for (int j = 1; j < 4; ++j) u.add(j, testgen::polynomial(rng, 2, 3, 2));
    CHECK(psi_map(u, Rational(0)).empty());
  }
}

TEST_CASE("phi shift") {
  Polynomial f = P("x1*x2", 2);
  BfElement u = L("x1 + 3", 2);
  u.twist = Rational(1, 2);
  CHECK(phi_shift(u, f) == L("x1 + 3", 2));
  BfElement v = L("x1", 2, 1);
  v.twist = Rational(1, 2);
  CHECK_THROWS_AS(phi_shift(v, f), std::domain_error);
  BfElement w = L("x1^2*x2^2 + x1*x2", 2, 1);  // f g with g = x1 x2 + 1
  w.twist = Rational(1, 2);
  BfElement expect = L("x1^2*x2^2 + x1*x2", 2, 1);
  expect += L("-1/2*x1*x2 - 1/2", 2);
  CHECK(phi_shift(w, f) == expect);
}

TEST_CASE("phi shift is s-equivariant with s acting as s + alpha") {
  std::mt19937 rng(17);
  Polynomial f = P("x1^2 + x2^3", 2);
  for (const auto& alpha : {Rational(1, 2), Rational(5, 6), Rational(1, 3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      BfElement u;
      u.twist = alpha;
      for (int j = 0; j < 3; ++j) u.add(j, testgen::polynomial(rng, 2, 2, 2) * f.pow(static_cast<unsigned>(j)));
      BfElement su = act(BfOp::S, u, f);
      BfElement lhs = phi_shift(su, f);
      BfElement rhs = act(BfOp::S, phi_shift(u, f), f);
      BfElement shift = phi_shift(u, f);
      shift *= alpha;
      rhs += shift;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("presentation comparison") {
  Polynomial f = P("x1*x2", 2);
  Bounds b{4, 12, 6};
  HodgePresentation x, xx, y;
  x.alpha = xx.alpha = y.alpha = 1;
  x.add(0, P("x1", 2), 0);
  xx.add(0, P("x1", 2), 0);
  xx.add(0, P("x1^2", 2), 0);
  y.add(0, P("x2", 2), 0);
  CHECK(presentations_equal(x, x, f, b).member());
  CHECK(presentations_equal(x, xx, f, b).member());
  CHECK(presentation_contained(x, y, f, b).verdict == Verdict::NotFoundAtBound);
  CHECK(presentation_contained(y, x, f, b).verdict == Verdict::NotFoundAtBound);
  // alpha = 0 and alpha = 1 describe the same module O(*f)
  HodgePresentation z;
  z.alpha = 0;
  z.add(0, P("x1", 2), 1);
  CHECK(presentations_equal(x, z, f, b).member());
  HodgePresentation half;
  half.alpha = Rational(1, 2);
  CHECK_THROWS_AS(presentations_equal(x, [&] { half.add(0, P("x1", 2), 0); return half; }(), f, b),
                  std::invalid_argument);
  // F_1 D . 1 f^-1 contains f^-2 d_1 f... d_1 (x1 f^-1) = -x1 x2 f^-2 ... = -f^-1 * (x1 x2 / f)
  HodgePresentation one, dd;
  one.alpha = dd.alpha = 1;
  one.add(1, P("1", 2), 0);
  dd.add(0, P("x2", 2), 1);  // d_1 (f^-1) = -x2 f^-2
  CHECK(presentation_contained(dd, one, f, b).member());
  CHECK(presentation_contained(one, dd, f, b).verdict == Verdict::NotFoundAtBound);
}

TEST_CASE("main formula cross-check") {
  Bounds b{4, 12, 6};
  auto r = main_formula_crosscheck_snc(SncDivisor({1, 1}), Rational(1), 0, 1, b);
  CHECK(r.kernel.member());
  CHECK(r.forward.member());
  CHECK(r.backward.member());
  CHECK(r.member());

  auto r2 = main_formula_crosscheck_snc(SncDivisor({2, 3}), Rational(1, 2), 1, 0, b);
  CHECK(r2.member());

  auto g = cusp();
  auto r3 = main_formula_crosscheck_whom(g, Rational(5, 6), 0, 0, b);
  CHECK(r3.member());
  REQUIRE(r3.psi_image.summands.size() == 2);
  CHECK(r3.psi_image.summands[0].generator == P("x1", 2));
  CHECK(r3.psi_image.summands[1].generator == P("x2", 2));

  for (int l = 0; l <= 2; ++l) {
    INFO("l=" << l);
    CHECK(main_formula_crosscheck_whom(g, Rational(1), 1, l, b).member());
  }
  auto j = r.json();
  CHECK(j["verdict"] == "member");
}

TEST_CASE("main formula cross-check over a small grid") {
  Bounds b{4, 12, 6};
  SncDivisor d({2, 3});
  for (const auto& alpha : {Rational(1, 3), Rational(1, 2), Rational(1)})
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l <= snc_weight_top(d, alpha); ++l) {
        INFO("alpha=" << alpha << " k=" << k << " l=" << l);
        CHECK(main_formula_crosscheck_snc(d, alpha, k, l, b).member());
      }
}

TEST_CASE("certificate json") {
  Polynomial f = P("x1*x2", 2);
  auto c = membership(L("x1^2*x2", 2), {{L("x1*x2", 2), -1}}, f, Bounds{0, 2, 1});
  auto j = c.json();
  CHECK(j["verdict"] == "member");
  CHECK(j["bounds"]["order"] == 0);
  REQUIRE(j["witness"].size() == 1);
  CHECK(j["witness"][0]["cofactor"] == "x1");
  CHECK(j["witness"][0]["coeff"] == "1");
}
