#include "paley/orchestrator.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "paley/json_io.hpp"
#include "paley/parallel.hpp"

namespace paley {

namespace {

template <class Fn>
auto run_stage(ConstructionReport& report, const char* stage, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    report.timings.push_back({stage, dt.count()});
  };
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      finish();
    } else {
      auto r = fn();
      finish();
      return r;
    }
  } catch (const StageFailure&) {
    throw;
  } catch (const Error& e) {
    throw StageFailure(stage, e.code(), e.what());
  }
}

double coeff_l2(const TrigPoly& f) {
  double s = 0;
  for (const auto& [n, c] : f.terms()) s += c.squaredNorm();
  return std::sqrt(s);
}

TrigPoly composite_sample(const OperatorPipeline& pipe, const ConstructionConfig& config, std::size_t i) {
  const std::uint64_t seed = paley_sample_seed(config.seed, 0, i);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(1, config.composite_box);
  const std::size_t d = pipe.plan.s.dim();
  std::vector<Frequency> support = pipe.plan.sequence;
  for (std::size_t t = 0; t < config.composite_terms; ++t) {
    Frequency n(d);
    for (auto& c : n) c = coord(rng);
    support.push_back(std::move(n));
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return random_trigpoly(d, support, 1, false, seed);
}

void compare(const json& a, const json& b, const std::string& path, std::vector<std::string>& diffs) {
  if (a.is_number_float() || b.is_number_float()) {
    if (!a.is_number() || !b.is_number()) {
      diffs.push_back(path + ": type differs");
      return;
    }
    const double x = a.get<double>(), y = b.get<double>();
    if (x == y || (std::isnan(x) && std::isnan(y))) return;
    if (std::abs(x - y) > 1e-12 * std::max(std::abs(x), std::abs(y))) {
      char buf[96];
      std::snprintf(buf, sizeof buf, ": %.17g vs %.17g", x, y);
      diffs.push_back(path + buf);
    }
    return;
  }
  if (a.type() != b.type()) {
    diffs.push_back(path + ": type differs");
    return;
  }
  if (a.is_object()) {
    for (const auto& [k, v] : a.items()) {
      if (!b.contains(k)) {
        diffs.push_back(path + "/" + k + ": missing");
        continue;
      }
      compare(v, b[k], path + "/" + k, diffs);
    }
    for (const auto& [k, v] : b.items())
      if (!a.contains(k)) diffs.push_back(path + "/" + k + ": unexpected");
    return;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      diffs.push_back(path + ": length " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
      return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) compare(a[i], b[i], path + "/" + std::to_string(i), diffs);
    return;
  }
  if (a != b) diffs.push_back(path + ": " + a.dump() + " vs " + b.dump());
}

}  // namespace

std::string plan_digest(const LacunaryPlan& plan) {
  const json core{{"smoothness", to_json(plan.s)}, {"witness", to_json(plan.witness)}, {"K", plan.K},
                  {"t0", plan.t0},                 {"q", plan.q},                       {"sequence", to_json(plan.sequence)}};
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_dump(core)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ConstructionReport run_construction(const Smoothness& s, const ConstructionConfig& config) {
  ConstructionReport report;
  report.config = config;
  report.s = s;

  report.witness = run_stage(report, "property_o", [&] {
    auto w = find_witness(s);
    if (!w) throw Error(Errc::no_witness, "the smoothness does not have Property (O)");
    return *w;
  });

  run_stage(report, "build_sequence", [&] {
    double t0 = config.t0, q = config.q;
    BuildOptions opt;
    opt.bk_cap = config.bk_cap;
    for (unsigned attempt = 0;; ++attempt) {
      report.plan = build_sequence(s, report.witness, config.K, t0, q, opt);
      report.retries = attempt;
      const auto& r = report.plan.report;
      const bool soft_failure = !r.iii_met || r.iv == Verdict::violated;
      if (!soft_failure || attempt == config.max_retries) break;
      t0 *= t0;
      q *= q;
    }
    const auto& r = report.plan.report;
    report.conditions_met = r.cond_i && r.ratio_ok && r.growth_ok && r.iii_met && r.iv == Verdict::met;
    report.plan_digest = plan_digest(report.plan);
  });

  run_stage(report, "riesz", [&] {
    report.claim_a = verify_claim_a(report.plan.sequence, report.plan.K).holds;
    report.claim_b = verify_claim_b(report.plan.sequence, report.plan.K).holds;
    report.riesz_size = riesz_spectrum(report.plan.sequence, report.plan.K).size();
  });

  const OperatorPipeline pipe = run_stage(report, "pipeline", [&] { return assemble_pipeline(report.plan); });

  run_stage(report, "composite_identity", [&] {
    std::vector<double> err(config.composite_samples, 0.0);
    parallel_for(config.composite_samples, [&](std::size_t i) {
      const TrigPoly f = composite_sample(pipe, config, i);
      const TrigPoly rhs = composite_closed_form(f, pipe);
      err[i] = coeff_l2(composite_apply(f, pipe) - rhs) / coeff_l2(rhs);
    });
    report.composite_max_rel_error = 0;
    for (double e : err) report.composite_max_rel_error = std::max(report.composite_max_rel_error, e);
    report.composite_ok = report.composite_max_rel_error < 1e-9;
  });

  run_stage(report, "rho_bounds", [&] {
    const auto& plan = report.plan;
    report.rho_lower = 0.5 * plan.rho_hat * (1 + plan.ell_hat);
    report.rho_upper = 0.5 * (1 + plan.ell_hat);
    report.rho_bounds_ok = true;
    for (const cplx r : pipe.rho) {
      const double a = std::abs(r);
      report.rho_abs.push_back(a);
      report.rho_bounds_ok = report.rho_bounds_ok && a >= report.rho_lower - 1e-12 && a <= report.rho_upper + 1e-12;
    }
  });

  if (config.run_paley) {
    report.paley = run_stage(report, "paley_estimation", [&] {
      PaleySampler sampler;
      sampler.count = config.paley_count;
      sampler.seed = config.seed;
      sampler.dims = config.matrix_dims;
      sampler.grid = config.grid;
      return estimate_paley_constant(s, report.plan.sequence, sampler);
    });
  }
  return report;
}

ReplayResult replay(const ConstructionReport& report, const Smoothness& s, const ConstructionConfig& config) {
  ReplayResult out;
  if (report.schema_version != kReportSchemaVersion) {
    out.differences.push_back("schema_version: report " + std::to_string(report.schema_version) + ", code " +
                              std::to_string(kReportSchemaVersion));
    return out;
  }
  const ConstructionReport fresh = run_construction(s, config);
  json a = to_json(report), b = to_json(fresh);
  a.erase("timings_ms");
  b.erase("timings_ms");
  compare(a, b, "", out.differences);
  out.match = out.differences.empty();
  return out;
}

}  // namespace paley
