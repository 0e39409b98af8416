#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "paley/riesz.hpp"
#include "paley/sequence.hpp"
#include "paley/trigpoly.hpp"

namespace paley {

struct OperatorPipeline {
  LacunaryPlan plan;
  RieszMeasure riesz;
  // rho_k = (sigma_alpha(n_k) + tau ell sigma_beta(n_k)) / (2 Q_S(n_k)^{1/2})
  std::vector<cplx> rho;
  std::vector<double> q_sqrt;  // Q_S(n_k)^{1/2}

  // Sigma = {0} u B_1 u ... u B_K, by l1 distance (no enumeration).
  bool in_sigma(const Frequency& m) const;
  // -m in B_1 u ... u B_K
  bool in_negative_balls(const Frequency& n) const;
};

OperatorPipeline assemble_pipeline(const LacunaryPlan& plan);

TrigPoly paley_project(const TrigPoly& f, const std::vector<Frequency>& lambda);

// d^alpha f + tau ell d^beta f minus the correction at every frequency -m
// with m in a ball B_k.
TrigPoly operator_m(const TrigPoly& f, const OperatorPipeline& pipe);

TrigPoly convolve_riesz(const TrigPoly& f, const RieszMeasure& riesz);

struct ProjectionResult {
  TrigPoly value;
  double outside_sigma_mass = 0;  // sum of squared HS norms off Sigma
  std::size_t outside_sigma_terms = 0;
};

ProjectionResult coordinate_projection(const TrigPoly& f, const OperatorPipeline& pipe);

// P_Lambda M_R M f.
TrigPoly composite_apply(const TrigPoly& f, const OperatorPipeline& pipe);

// sum_k rho_k Q_S(n_k)^{1/2} f^(n_k) chi_{n_k}
TrigPoly composite_closed_form(const TrigPoly& f, const OperatorPipeline& pipe);

// paley_l2_norm / sobolev_norm(p = 1); matrix polynomials use the
// Hilbert-Schmidt numerator and the S_1-valued denominator.
double paley_ratio(const TrigPoly& f, const Smoothness& s, const std::vector<Frequency>& lambda,
                   const GridSpec& grid = {});

struct PaleySampler {
  std::size_t count = 500;
  std::uint64_t seed = 1;
  std::vector<std::size_t> dims{1};
  // Extra support besides Lambda (box [1, box_hi]^d when box_hi > 0).
  long box_hi = 0;
  GridSpec grid{0, 8, std::size_t{1} << 22};
};

struct PaleyDimResult {
  std::size_t m = 1;
  double sup_ratio = 0;
  std::size_t argmax = 0;
  std::vector<double> ratios;
};

struct PaleyEstimate {
  double sup_ratio = 0;
  std::size_t argmax_dim = 1;
  std::size_t argmax = 0;
  std::vector<PaleyDimResult> per_dim;
};

// Seed of sample i at matrix size m.
std::uint64_t paley_sample_seed(std::uint64_t seed, std::size_t m, std::size_t i);

// Sample i: complex Gaussian coefficients on Lambda (plus the optional box),
// each scaled by (Q_S(n_max) / Q_S(n))^{1/2} so that every frequency carries
// comparable Sobolev weight.
TrigPoly paley_sample(const Smoothness& s, const std::vector<Frequency>& lambda, const PaleySampler& sampler,
                      std::size_t m, std::size_t i);

PaleyEstimate estimate_paley_constant(const Smoothness& s, const std::vector<Frequency>& lambda,
                                      const PaleySampler& sampler);

}  // namespace paley
