#include "paley/paley_ops.hpp"

#include <algorithm>
#include <cmath>

#include "paley/error.hpp"
#include "paley/parallel.hpp"

namespace paley {

namespace {

TrigPoly like(const TrigPoly& f) {
  return f.is_matrix() ? TrigPoly::matrix(f.dim(), f.m()) : TrigPoly::scalar(f.dim());
}

bool in_any_ball(const Frequency& m, const LacunaryPlan& plan) {
  for (std::size_t k = 0; k < plan.sequence.size(); ++k)
    if (l1_distance(m, plan.sequence[k]) <= plan.radii[k]) return true;
  return false;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

bool OperatorPipeline::in_sigma(const Frequency& m) const {
  if (std::all_of(m.begin(), m.end(), [](const Integer& c) { return c == 0; })) return true;
  return in_any_ball(m, plan);
}

bool OperatorPipeline::in_negative_balls(const Frequency& n) const { return in_any_ball(negate(n), plan); }

OperatorPipeline assemble_pipeline(const LacunaryPlan& plan) {
  OperatorPipeline pipe;
  pipe.plan = plan;
  pipe.riesz = riesz_coeffs(plan.sequence, plan.K);
  const auto& w = plan.witness;
  for (const auto& n : plan.sequence) {
    const cplx a = normalized_symbol(w.alpha, plan.s, n);
    const cplx b = normalized_symbol(w.beta, plan.s, n);
    pipe.rho.push_back((a + plan.tau * plan.ell_hat * b) / 2.0);
    pipe.q_sqrt.push_back(q_s_sqrt(plan.s, n));
  }
  return pipe;
}

TrigPoly paley_project(const TrigPoly& f, const std::vector<Frequency>& lambda) {
  TrigPoly out = like(f);
  for (const auto& n : lambda) {
    auto it = f.terms().find(n);
    if (it != f.terms().end() && !out.terms().count(n)) out.add_term(n, it->second);
  }
  return out;
}

TrigPoly operator_m(const TrigPoly& f, const OperatorPipeline& pipe) {
  const auto& plan = pipe.plan;
  if (f.dim() != plan.s.dim()) throw Error(Errc::dimension_mismatch, "operator_m: dimension mismatch");
  const auto& alpha = plan.witness.alpha;
  const auto& beta = plan.witness.beta;
  const cplx tau_ell = plan.tau * plan.ell_hat;
  TrigPoly out = like(f);
  for (const auto& [n, c] : f.terms()) {
    cplx mult = derivative_multiplier(alpha, n) + tau_ell * derivative_multiplier(beta, n);
    if (pipe.in_negative_balls(n)) {
      // Here n = -m with m in a ball, so every coordinate of n is nonzero
      // and sigma agrees with the derivative multiplier.
      mult -= lattice_symbol(alpha, n).to_complex() + tau_ell * lattice_symbol(beta, n).to_complex();
    }
    if (mult == cplx(0)) continue;
    out.add_term(n, CMatrix(c * mult));
  }
  return out;
}

TrigPoly convolve_riesz(const TrigPoly& f, const RieszMeasure& riesz) {
  TrigPoly out = like(f);
  for (const auto& [n, c] : f.terms()) {
    const double mu = riesz.coeff(n);
    if (mu != 0.0) out.add_term(n, CMatrix(c * mu));
  }
  return out;
}

ProjectionResult coordinate_projection(const TrigPoly& f, const OperatorPipeline& pipe) {
  ProjectionResult r{paley_project(f, pipe.plan.sequence)};
  for (const auto& [n, c] : f.terms())
    if (!pipe.in_sigma(n)) {
      r.outside_sigma_mass += c.squaredNorm();
      ++r.outside_sigma_terms;
    }
  return r;
}

TrigPoly composite_apply(const TrigPoly& f, const OperatorPipeline& pipe) {
  return coordinate_projection(convolve_riesz(operator_m(f, pipe), pipe.riesz), pipe).value;
}

TrigPoly composite_closed_form(const TrigPoly& f, const OperatorPipeline& pipe) {
  TrigPoly out = like(f);
  for (std::size_t k = 0; k < pipe.plan.sequence.size(); ++k) {
    const auto& n = pipe.plan.sequence[k];
    auto it = f.terms().find(n);
    if (it == f.terms().end()) continue;
    out.add_term(n, CMatrix(it->second * (pipe.rho[k] * pipe.q_sqrt[k])));
  }
  return out;
}

double paley_ratio(const TrigPoly& f, const Smoothness& s, const std::vector<Frequency>& lambda,
                   const GridSpec& grid) {
  if (f.empty()) throw Error(Errc::undefined_ratio, "Paley ratio of the zero polynomial");
  const double num = paley_l2_norm(f, s, lambda);
  const double den = sobolev_norm(f, s, 1.0, grid);
  if (!(den > 0)) throw Error(Errc::undefined_ratio, "Sobolev norm vanishes");
  return num / den;
}

std::uint64_t paley_sample_seed(std::uint64_t seed, std::size_t m, std::size_t i) {
  return splitmix64(splitmix64(seed ^ splitmix64(m)) + i);
}

TrigPoly paley_sample(const Smoothness& s, const std::vector<Frequency>& lambda, const PaleySampler& sampler,
                      std::size_t m, std::size_t i) {
  std::vector<Frequency> support = lambda;
  if (sampler.box_hi > 0) {
    auto box = frequency_box(s.dim(), 1, sampler.box_hi);
    support.insert(support.end(), box.begin(), box.end());
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const bool matrix = m > 1;
  TrigPoly raw = random_trigpoly(s.dim(), support, m, matrix, paley_sample_seed(sampler.seed, m, i));

  BigFloat q_max(0.0);
  for (const auto& n : support) {
    const BigFloat q(q_s_exact(s, n));
    if (q_max < q) q_max = q;
  }
  TrigPoly out = like(raw);
  for (const auto& [n, c] : raw.terms()) {
    const Integer q = q_s_exact(s, n);
    const double w = q == 0 ? 1.0 : (q_max / BigFloat(q)).sqrt().to_double();
    out.add_term(n, CMatrix(c * w));
  }
  return out;
}

PaleyEstimate estimate_paley_constant(const Smoothness& s, const std::vector<Frequency>& lambda,
                                      const PaleySampler& sampler) {
  if (sampler.count == 0) throw Error(Errc::invalid_argument, "sample count must be >= 1");
  if (sampler.dims.empty()) throw Error(Errc::invalid_argument, "no matrix dimensions requested");
  PaleyEstimate est;
  bool first = true;
  for (std::size_t m : sampler.dims) {
    if (m == 0 || m > 64) throw Error(Errc::invalid_argument, "matrix dimension must lie in [1, 64]");
    PaleyDimResult r;
    r.m = m;
    r.ratios.assign(sampler.count, 0.0);
    parallel_for(sampler.count, [&](std::size_t i) {
      r.ratios[i] = paley_ratio(paley_sample(s, lambda, sampler, m, i), s, lambda, sampler.grid);
    });
    for (std::size_t i = 0; i < sampler.count; ++i)
      if (r.ratios[i] > r.sup_ratio) {
        r.sup_ratio = r.ratios[i];
        r.argmax = i;
      }
    if (first || r.sup_ratio > est.sup_ratio) {
      est.sup_ratio = r.sup_ratio;
      est.argmax_dim = m;
      est.argmax = r.argmax;
      first = false;
    }
    est.per_dim.push_back(std::move(r));
  }
  return est;
}

}  // namespace paley
