#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "paley/error.hpp"
#include "paley/trigpoly.hpp"

using namespace paley;

namespace {

// Direct sum over terms at the tensor node (j_1, ..., j_d).
cplx naive_value(const TrigPoly& f, const std::vector<std::size_t>& j, std::size_t n) {
  cplx s = 0;
  for (const auto& [freq, c] : f.terms()) {
    double phase = 0;
    for (std::size_t a = 0; a < j.size(); ++a)
      phase += freq[a].get_d() * (-M_PI + 2.0 * M_PI * static_cast<double>(j[a]) / static_cast<double>(n));
    s += c(0, 0) * std::polar(1.0, phase);
  }
  return s;
}

double coeff_l2_sq(const TrigPoly& f) {
  double s = 0;
  for (const auto& [n, c] : f.terms()) s += c.squaredNorm();
  return s;
}

TrigPoly cosine_bump(const Frequency& n) {
  TrigPoly f = TrigPoly::scalar(n.size());
  f.add_term(Frequency(n.size(), Integer(0)), 1.0);
  f.add_term(n, 0.5);
  f.add_term(negate(n), 0.5);
  return f;
}

std::vector<Frequency> random_support(std::mt19937_64& rng, std::size_t count, long lo, long hi) {
  std::uniform_int_distribution<long> coord(lo, hi);
  std::vector<Frequency> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_frequency({coord(rng), coord(rng)}));
  return out;
}

}  // namespace

TEST(TrigPoly, SpectrumExamples) {
  auto n = make_frequency({1, 2});
  EXPECT_EQ(spectrum(TrigPoly::character(n)), std::vector<Frequency>{n});
  EXPECT_TRUE(spectrum(TrigPoly::scalar(2)).empty());
  auto f = cosine_bump(n);
  EXPECT_EQ(spectrum(f).size(), 3u);
}

TEST(TrigPoly, ZeroDrop) {
  auto n = make_frequency({1, 2});
  TrigPoly f = TrigPoly::character(n, 1.0);
  f.add_term(n, -1.0 + 1e-17);
  EXPECT_TRUE(f.empty());
}

TEST(TrigPoly, DerivativeExamples) {
  auto n = make_frequency({2, 1});
  EXPECT_EQ(derivative(TrigPoly::character(n), {0, 0}).coeff(n), cplx(1));
  EXPECT_EQ(derivative(TrigPoly::character(n), {1, 0}).coeff(n), cplx(0, 2));
  EXPECT_TRUE(derivative(TrigPoly::character(make_frequency({0, 3})), {1, 0}).empty());
}

TEST(TrigPoly, DerivativeComposes) {
  std::mt19937_64 rng(3);
  auto f = random_trigpoly(2, random_support(rng, 30, -6, 6), 1, false, 17);
  MultiIndex g{1, 2}, d{2, 0};
  auto lhs = derivative(derivative(f, g), d);
  auto rhs = derivative(f, g + d);
  EXPECT_LT(lhs.max_abs_diff(rhs), 1e-12 * rhs.max_abs_coeff());
}

TEST(TrigPoly, ConvolveExamples) {
  auto n = make_frequency({1, 1}), m = make_frequency({2, 5});
  TrigPoly f = TrigPoly::character(n) + TrigPoly::character(m);
  std::map<Frequency, cplx> ones{{n, 1.0}, {m, 1.0}};
  EXPECT_EQ(convolve(f, ones).max_abs_diff(f), 0.0);
  EXPECT_TRUE(convolve(f, {}).empty());
  auto half = convolve(f, {{n, 0.5}});
  EXPECT_EQ(half.size(), 1u);
  EXPECT_EQ(half.coeff(n), cplx(0.5));
}

TEST(TrigPoly, RandomIsDeterministic) {
  auto box = frequency_box(2, 1, 4);
  EXPECT_EQ(box.size(), 16u);
  auto a = random_trigpoly(2, box, 1, false, 7);
  auto b = random_trigpoly(2, box, 1, false, 7);
  EXPECT_EQ(a.max_abs_diff(b), 0.0);
  EXPECT_EQ(a.size(), 16u);
  for (const auto& n : spectrum(a)) {
    EXPECT_GE(n[0], 1);
    EXPECT_LE(n[1], 4);
  }
  EXPECT_TRUE(random_trigpoly(2, {}, 1, false, 7).empty());
}

TEST(Quadrature, DirectAndFftMatchNaiveSum) {
  std::mt19937_64 rng(9);
  for (std::size_t count : {3u, 400u}) {  // sparse and dense paths
    auto f = random_trigpoly(2, random_support(rng, count, -5, 5), 1, false, count);
    GridSpec spec;
    auto rule = QuadratureRule::resolve(2, spectrum(f), spec);
    ASSERT_FALSE(rule.lifted());
    const std::size_t n = rule.axis_points()[0];
    auto g = evaluate(f, rule);
    for (std::size_t j0 = 0; j0 < n; j0 += 3)
      for (std::size_t j1 = 0; j1 < n; j1 += 5)
        EXPECT_LT(std::abs(g.values[j0 * n + j1] - naive_value(f, {j0, j1}, n)), 1e-11) << count;
  }
}

TEST(Norms, CharacterHasUnitNorm) {
  auto chi = TrigPoly::character(make_frequency({3, -7}));
  for (double p : {1.0, 1.5, 2.0, 3.0}) EXPECT_NEAR(lp_norm(chi, p), 1.0, 1e-13);
}

TEST(Norms, ParsevalAndBump) {
  auto n = make_frequency({4, 9});
  TrigPoly f = TrigPoly::character(Frequency{0, 0}) + TrigPoly::character(n);
  EXPECT_NEAR(lp_norm(f, 2), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(lp_norm(cosine_bump(n), 1), 1.0, 1e-12);
}

TEST(Norms, InvalidExponent) {
  try {
    lp_norm(TrigPoly::character(make_frequency({1, 1})), 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_exponent);
  }
}

TEST(Norms, TraceNormExamples) {
  EXPECT_NEAR(trace_norm(CMatrix::Identity(2, 2)), 2.0, 1e-15);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 3;
  d(1, 1) = -4;
  EXPECT_NEAR(trace_norm(d), 7.0, 1e-14);
  Eigen::VectorXcd u(3), v(3);
  u << cplx(1, 2), cplx(0, -1), cplx(3, 0);
  v << cplx(2, 0), cplx(1, 1), cplx(0, 0.5);
  EXPECT_NEAR(trace_norm(u * v.adjoint()), u.norm() * v.norm(), 1e-12);
}

TEST(Norms, S1L1Examples) {
  CMatrix a(2, 2);
  a << cplx(1, 1), cplx(2, 0), cplx(0, -1), cplx(3, 0.5);
  TrigPoly g = TrigPoly::matrix(2, 2);
  g.add_term(make_frequency({5, 2}), a);
  EXPECT_NEAR(s1_l1_norm(g), trace_norm(a), 1e-12);
  EXPECT_EQ(s1_l1_norm(TrigPoly::matrix(2, 3)), 0.0);

  std::mt19937_64 rng(1);
  auto f = random_trigpoly(2, random_support(rng, 12, -4, 4), 1, false, 5);
  TrigPoly embedded = TrigPoly::matrix(2, 1);
  for (const auto& [n, c] : f.terms()) embedded.add_term(n, c);
  auto rule = QuadratureRule::resolve(2, spectrum(f), {});
  EXPECT_EQ(s1_l1_norm(embedded, rule), lp_norm(f, 1, rule));
}

TEST(Norms, SobolevExamples) {
  auto s = saturate({{2, 0}, {0, 1}});
  EXPECT_NEAR(sobolev_norm(TrigPoly::character(Frequency{0, 0}), s, 1), 1.0, 1e-14);
  auto n = make_frequency({3, -2});
  EXPECT_NEAR(sobolev_norm(TrigPoly::character(n), s, 2), std::sqrt(q_s_eval(s, std::vector<double>{3, -2})),
              1e-12);
  auto origin = saturate({{0, 0}});
  for (double p : {1.0, 2.0, 4.0}) EXPECT_NEAR(sobolev_norm(TrigPoly::character(n), origin, p), 1.0, 1e-13);
}

TEST(Norms, PaleyL2Examples) {
  auto s = saturate({{1, 0}, {0, 1}});
  auto n1 = make_frequency({2, 3}), n2 = make_frequency({-1, 4});
  EXPECT_NEAR(paley_l2_norm(TrigPoly::character(n1), s, {n1}), std::sqrt(1.0 + 4 + 9), 1e-12);
  EXPECT_EQ(paley_l2_norm(TrigPoly::character(n1), s, {n2}), 0.0);
  TrigPoly f = TrigPoly::character(n1, cplx(1, 1)) + TrigPoly::character(n2, 2.0);
  const double want = std::sqrt(14.0 * 2 + 18.0 * 4);
  EXPECT_NEAR(paley_l2_norm(f, s, {n1, n2}), want, 1e-12);
}

TEST(Norms, ParsevalOnRandomPolynomials) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    auto f = random_trigpoly(2, random_support(rng, 25, -12, 12), 1, false, 100 + t);
    const double want = coeff_l2_sq(f);
    const double got = std::pow(lp_norm(f, 2), 2);
    EXPECT_LT(std::abs(got - want), 1e-10 * want);
  }
}

TEST(Norms, TriangleInequality) {
  std::mt19937_64 rng(4);
  auto s = saturate({{2, 0}, {0, 1}});
  for (int t = 0; t < 10; ++t) {
    auto supp = random_support(rng, 10, -5, 5);
    auto f = random_trigpoly(2, supp, 1, false, 2 * t);
    auto g = random_trigpoly(2, random_support(rng, 10, -5, 5), 1, false, 2 * t + 1);
    GridSpec grid{41, 16, 1u << 22};
    EXPECT_LE(lp_norm(f + g, 1, grid), lp_norm(f, 1, grid) + lp_norm(g, 1, grid) + 1e-12);
    EXPECT_LE(sobolev_norm(f + g, s, 1, grid), sobolev_norm(f, s, 1, grid) + sobolev_norm(g, s, 1, grid) + 1e-12);
    auto a = random_trigpoly(2, supp, 3, true, 50 + t);
    auto b = random_trigpoly(2, random_support(rng, 6, -5, 5), 3, true, 70 + t);
    EXPECT_LE(s1_l1_norm(a + b, grid), s1_l1_norm(a, grid) + s1_l1_norm(b, grid) + 1e-12);
  }
}

TEST(Norms, L1StabilizesUnderDoubling) {
  std::mt19937_64 rng(8);
  auto f = random_trigpoly(2, random_support(rng, 8, -3, 3), 1, false, 99);
  auto est = lp_norm_converged(f, 1, {}, 1e-8, 8);
  EXPECT_TRUE(est.converged) << est.rel_change;
  EXPECT_LT(est.rel_change, 1e-8);
  EXPECT_FALSE(est.lifted);
}

TEST(Lifted, ParsevalIsExactForHugeFrequencies) {
  Integer big = 1;
  mpz_pow_ui(big.get_mpz_t(), Integer(10).get_mpz_t(), 30);
  std::vector<Frequency> supp{make_frequency({1, 2}), make_frequency({-3, 0}), Frequency{big, Integer(5)},
                              Frequency{big + 2, Integer(4)}, Frequency{Integer(7), big * big}};
  auto f = random_trigpoly(2, supp, 1, false, 12);
  auto rule = QuadratureRule::resolve(2, supp, {});
  EXPECT_TRUE(rule.lifted());
  EXPECT_EQ(rule.clusters(), 3u);
  EXPECT_EQ(rule.phase_axes(), 2u);
  EXPECT_NEAR(std::pow(lp_norm(f, 2, rule), 2), coeff_l2_sq(f), 1e-12 * coeff_l2_sq(f));
  EXPECT_NEAR(lp_norm(cosine_bump(Frequency{big, big}), 1), 1.0, 1e-12);
}

TEST(Lifted, AgreesWithTensorRuleForWellSeparatedClusters) {
  // Moderate frequencies where both rules fit: phases of clusters 1000 apart
  // are close to independent, so the L1 values are near each other.
  std::vector<Frequency> supp{make_frequency({1, 0}), make_frequency({0, 1}), make_frequency({300, 1}),
                              make_frequency({1, 700})};
  auto f = random_trigpoly(2, supp, 1, false, 3);
  const double tensor = lp_norm(f, 1, GridSpec{4 * 700 + 1, 16, 1u << 23});
  const double lifted = lp_norm(f, 1, GridSpec{0, 32, 1u << 16});
  EXPECT_NEAR(lifted, tensor, 2e-2 * tensor);
}

TEST(Lifted, OverBudgetThrows) {
  std::vector<Frequency> supp;
  for (long k = 0; k < 12; ++k) supp.push_back(make_frequency({1000 * (k + 1), 7}));
  try {
    QuadratureRule::resolve(2, supp, GridSpec{0, 16, 1u << 20});
    FAIL();
  } catch (const TooLargeError& e) {
    EXPECT_FALSE(e.count().empty());
  }
}

TEST(TraceNorm, MatchesSvdAcrossConditioning) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int m : {2, 3, 5, 8}) {
    CMatrix a(m, m);
    for (Eigen::Index e = 0; e < a.size(); ++e) a(e) = cplx(g(rng), g(rng));
    const double ref = Eigen::JacobiSVD<CMatrix>(a).singularValues().sum();
    EXPECT_NEAR(trace_norm(a), ref, 1e-12 * ref);
    // Rank one: falls back to the SVD.
    CMatrix r = a.col(0) * a.row(0);
    const double ref1 = Eigen::JacobiSVD<CMatrix>(r).singularValues().sum();
    EXPECT_NEAR(trace_norm(r), ref1, 1e-12 * ref1);
  }
  CMatrix wide(2, 3);
  wide << 1, 2, 3, cplx(0, 1), 0, -1;
  EXPECT_NEAR(trace_norm(wide), Eigen::JacobiSVD<CMatrix>(wide).singularValues().sum(), 1e-12);
}
