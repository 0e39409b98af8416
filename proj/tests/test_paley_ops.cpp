#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "paley/error.hpp"
#include "paley/paley_ops.hpp"

using namespace paley;

namespace {

Smoothness reference() { return saturate({{2, 0}, {0, 1}}); }

PropertyOWitness reference_witness() {
  return {{2, 0}, {0, 1}, {Rational(1, 2), Rational(1)}, Rational(1, 2)};
}

const OperatorPipeline& pipeline() {
  static const OperatorPipeline pipe =
      assemble_pipeline(build_sequence(reference(), reference_witness(), 4, 100, 10));
  return pipe;
}

Frequency zero2() { return make_frequency({0, 0}); }

double coeff_l2(const TrigPoly& f) {
  double s = 0;
  for (const auto& [n, c] : f.terms()) s += c.squaredNorm();
  return std::sqrt(s);
}

TrigPoly random_box_plus_lambda(std::uint64_t seed, long hi, std::size_t extra) {
  const auto& pipe = pipeline();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(1, hi);
  std::vector<Frequency> support = pipe.plan.sequence;
  for (std::size_t i = 0; i < extra; ++i) support.push_back(make_frequency({coord(rng), coord(rng)}));
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return random_trigpoly(2, support, 1, false, seed);
}

// sum over S of prod_j |n(j)|^gamma(j)
double sobolev_of_character(const Smoothness& s, const Frequency& n) {
  double total = 0;
  for (const auto& g : s) total += std::abs(derivative_multiplier(g, n));
  return total;
}

}  // namespace

TEST(PaleyProject, Examples) {
  const auto& lambda = pipeline().plan.sequence;
  TrigPoly f = TrigPoly::scalar(2);
  f.add_term(lambda[0], cplx(1, 2));
  f.add_term(lambda[2], 3.0);
  EXPECT_EQ(paley_project(f, lambda).max_abs_diff(f), 0.0);
  EXPECT_TRUE(paley_project(TrigPoly::character(make_frequency({1, 2})), lambda).empty());
  f.add_term(make_frequency({5, 5}), 1.0);
  auto once = paley_project(f, lambda);
  EXPECT_EQ(once.size(), 2u);
  EXPECT_EQ(paley_project(once, lambda).max_abs_diff(once), 0.0);
}

TEST(Pipeline, RhoMatchesDefinitionAndBounds) {
  const auto& pipe = pipeline();
  const auto& plan = pipe.plan;
  ASSERT_EQ(pipe.rho.size(), plan.K);
  for (std::size_t k = 0; k < plan.K; ++k) {
    const auto& n = plan.sequence[k];
    const cplx expect = (lattice_symbol(plan.witness.alpha, n).to_complex() +
                         plan.tau * plan.ell_hat * lattice_symbol(plan.witness.beta, n).to_complex()) /
                        (2.0 * q_s_sqrt(plan.s, n));
    EXPECT_LT(std::abs(pipe.rho[k] - expect), 1e-12 * std::abs(expect));
    const double r = std::abs(pipe.rho[k]);
    EXPECT_GE(r, 0.5 * plan.rho_hat * (1 + plan.ell_hat) - 1e-12);
    EXPECT_LE(r, 0.5 * (1 + plan.ell_hat) + 1e-12);
  }
}

TEST(OperatorM, PositiveCharacter) {
  const auto& pipe = pipeline();
  const auto& plan = pipe.plan;
  for (const auto& n : plan.sequence) {
    auto mf = operator_m(TrigPoly::character(n), pipe);
    ASSERT_EQ(mf.size(), 1u);
    const cplx expect = lattice_symbol(plan.witness.alpha, n).to_complex() +
                        plan.tau * plan.ell_hat * lattice_symbol(plan.witness.beta, n).to_complex();
    EXPECT_LT(std::abs(mf.coeff(n) - expect), 1e-12 * std::abs(expect));
  }
}

TEST(OperatorM, KillsNegativeLambda) {
  const auto& pipe = pipeline();
  for (const auto& n : pipe.plan.sequence) {
    auto mf = operator_m(TrigPoly::character(negate(n)), pipe);
    EXPECT_EQ(mf.coeff(negate(n)), cplx(0));
  }
  EXPECT_TRUE(operator_m(TrigPoly::character(zero2()), pipe).empty());
}

TEST(OperatorM, NegativeBallCorrection) {
  const auto& pipe = pipeline();
  // A point of -B_2 other than -n_2 is also annihilated.
  Frequency m = pipe.plan.sequence[1];
  m[0] -= 1;
  ASSERT_TRUE(pipe.in_negative_balls(negate(m)));
  EXPECT_TRUE(operator_m(TrigPoly::character(negate(m)), pipe).empty());
  // Outside the balls the derivative part survives.
  Frequency far = make_frequency({-1, -1});
  ASSERT_FALSE(pipe.in_negative_balls(far));
  EXPECT_EQ(operator_m(TrigPoly::character(far), pipe).size(), 1u);
}

TEST(ConvolveRiesz, Examples) {
  const auto& pipe = pipeline();
  const auto& n = pipe.plan.sequence[2];
  EXPECT_EQ(convolve_riesz(TrigPoly::character(n), pipe.riesz).coeff(n), cplx(0.5));
  EXPECT_EQ(convolve_riesz(TrigPoly::character(zero2()), pipe.riesz).coeff(zero2()), cplx(1));
  EXPECT_TRUE(convolve_riesz(TrigPoly::character(make_frequency({2, 3})), pipe.riesz).empty());
}

TEST(CoordinateProjection, Examples) {
  const auto& pipe = pipeline();
  const auto& n2 = pipe.plan.sequence[1];
  auto r = coordinate_projection(TrigPoly::character(n2), pipe);
  EXPECT_EQ(r.value.coeff(n2), cplx(1));
  EXPECT_EQ(r.outside_sigma_terms, 0u);

  TrigPoly ball = TrigPoly::scalar(2);
  Frequency a = n2, b = n2;
  a[0] += 1;
  b[1] -= 2;
  ball.add_term(a, 1.0);
  ball.add_term(b, 1.0);
  EXPECT_TRUE(coordinate_projection(ball, pipe).value.empty());

  auto z = coordinate_projection(TrigPoly::character(zero2()), pipe);
  EXPECT_TRUE(z.value.empty());
  EXPECT_EQ(z.outside_sigma_terms, 0u);

  auto off = coordinate_projection(TrigPoly::character(make_frequency({-3, 0}), 2.0), pipe);
  EXPECT_EQ(off.outside_sigma_terms, 1u);
  EXPECT_DOUBLE_EQ(off.outside_sigma_mass, 4.0);
}

TEST(Composite, SingleCharacter) {
  const auto& pipe = pipeline();
  for (std::size_t k = 0; k < pipe.plan.K; ++k) {
    const auto& n = pipe.plan.sequence[k];
    auto out = composite_apply(TrigPoly::character(n), pipe);
    ASSERT_EQ(out.size(), 1u);
    const cplx expect = pipe.rho[k] * pipe.q_sqrt[k];
    EXPECT_LT(std::abs(out.coeff(n) - expect), 1e-12 * std::abs(expect));
  }
  EXPECT_TRUE(composite_apply(TrigPoly::character(zero2()), pipe).empty());
}

TEST(Composite, RandomIdentity) {
  const auto& pipe = pipeline();
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    TrigPoly f = random_box_plus_lambda(seed, 200, 64);
    TrigPoly lhs = composite_apply(f, pipe);
    TrigPoly rhs = composite_closed_form(f, pipe);
    worst = std::max(worst, coeff_l2(lhs - rhs) / coeff_l2(rhs));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Composite, Linearity) {
  const auto& pipe = pipeline();
  TrigPoly f = random_box_plus_lambda(7, 50, 32);
  TrigPoly g = random_box_plus_lambda(8, 50, 32);
  const cplx c(0.3, -1.7);
  auto check = [&](auto op) {
    TrigPoly lhs = op(f + c * g);
    TrigPoly rhs = op(f) + c * op(g);
    EXPECT_LE(lhs.max_abs_diff(rhs), 1e-12 * std::max(1.0, rhs.max_abs_coeff()));
  };
  check([&](const TrigPoly& h) { return operator_m(h, pipe); });
  check([&](const TrigPoly& h) { return convolve_riesz(h, pipe.riesz); });
  check([&](const TrigPoly& h) { return coordinate_projection(h, pipe).value; });
  check([&](const TrigPoly& h) { return composite_apply(h, pipe); });
}

TEST(Composite, RieszCommutesWithProjection) {
  const auto& pipe = pipeline();
  TrigPoly f = random_box_plus_lambda(3, 40, 32);
  const auto& lambda = pipe.plan.sequence;
  auto a = paley_project(convolve_riesz(f, pipe.riesz), lambda);
  auto b = convolve_riesz(paley_project(f, lambda), pipe.riesz);
  EXPECT_EQ(a.max_abs_diff(b), 0.0);
}

TEST(PaleyRatio, SingleCharacterClosedForm) {
  const auto& pipe = pipeline();
  const auto& s = pipe.plan.s;
  for (const auto& n : pipe.plan.sequence) {
    const double expect = q_s_sqrt(s, n) / sobolev_of_character(s, n);
    const double got = paley_ratio(TrigPoly::character(n), s, pipe.plan.sequence);
    EXPECT_NEAR(got, expect, 1e-9 * expect);
    EXPECT_LE(got, 1.0 + 1e-12);
  }
}

TEST(PaleyRatio, DisjointScalingAndZero) {
  const auto& pipe = pipeline();
  const auto& s = pipe.plan.s;
  const auto& lambda = pipe.plan.sequence;
  EXPECT_EQ(paley_ratio(TrigPoly::character(make_frequency({2, 3})), s, lambda), 0.0);
  const GridSpec grid = PaleySampler{}.grid;
  TrigPoly f = random_box_plus_lambda(5, 3, 8);
  const double r = paley_ratio(f, s, lambda, grid);
  EXPECT_GT(r, 0.0);
  EXPECT_NEAR(paley_ratio(cplx(-2.5, 4) * f, s, lambda, grid), r, 1e-10 * r);
  try {
    paley_ratio(TrigPoly::scalar(2), s, lambda);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::undefined_ratio);
  }
}

TEST(PaleySample, DeterministicAndBalanced) {
  const auto& pipe = pipeline();
  PaleySampler sampler;
  auto a = paley_sample(pipe.plan.s, pipe.plan.sequence, sampler, 1, 3);
  auto b = paley_sample(pipe.plan.s, pipe.plan.sequence, sampler, 1, 3);
  EXPECT_EQ(a.max_abs_diff(b), 0.0);
  EXPECT_EQ(a.size(), pipe.plan.K);
  auto c = paley_sample(pipe.plan.s, pipe.plan.sequence, sampler, 1, 4);
  EXPECT_GT(a.max_abs_diff(c), 0.0);
  auto m = paley_sample(pipe.plan.s, pipe.plan.sequence, sampler, 3, 0);
  EXPECT_TRUE(m.is_matrix());
  EXPECT_EQ(m.m(), 3u);
}

TEST(EstimatePaley, SupAndDeterminism) {
  const auto& pipe = pipeline();
  PaleySampler sampler;
  sampler.count = 12;
  sampler.dims = {1, 2};
  auto e1 = estimate_paley_constant(pipe.plan.s, pipe.plan.sequence, sampler);
  auto e2 = estimate_paley_constant(pipe.plan.s, pipe.plan.sequence, sampler);
  ASSERT_EQ(e1.per_dim.size(), 2u);
  for (std::size_t d = 0; d < 2; ++d) {
    EXPECT_EQ(e1.per_dim[d].ratios, e2.per_dim[d].ratios);
    for (double r : e1.per_dim[d].ratios) {
      EXPECT_GT(r, 0.0);
      EXPECT_LE(r, e1.per_dim[d].sup_ratio);
      EXPECT_LE(r, e1.sup_ratio);
    }
  }
  EXPECT_EQ(e1.sup_ratio, e2.sup_ratio);
}

TEST(EstimatePaley, SingleCharacterSample) {
  // With count = 1 and Lambda = {n_1} the sample is a multiple of chi_{n_1}.
  const auto& pipe = pipeline();
  const auto& s = pipe.plan.s;
  const auto& n1 = pipe.plan.sequence[0];
  PaleySampler sampler;
  sampler.count = 1;
  auto e = estimate_paley_constant(s, {n1}, sampler);
  const double expect = q_s_sqrt(s, n1) / sobolev_of_character(s, n1);
  EXPECT_NEAR(e.sup_ratio, expect, 1e-9 * expect);
}

TEST(EstimatePaley, RejectsEmptySample) {
  PaleySampler sampler;
  sampler.count = 0;
  EXPECT_THROW(estimate_paley_constant(reference(), pipeline().plan.sequence, sampler), Error);
}
