#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paley/error.hpp"
#include "paley/paley_ops.hpp"
#include "paley/property_o.hpp"
#include "paley/sequence.hpp"

namespace paley {

inline constexpr int kReportSchemaVersion = 1;

struct ConstructionConfig {
  std::size_t K = 4;
  double t0 = 100;
  double q = 10;
  std::size_t bk_cap = 10'000'000;
  // Soft retries with t0 <- t0^2, q <- q^2 while (iii) fails or (iv) is violated.
  unsigned max_retries = 3;
  std::size_t composite_samples = 200;
  long composite_box = 200;
  std::size_t composite_terms = 64;  // random box frequencies per sample, besides Lambda
  std::uint64_t seed = 1;
  bool run_paley = true;
  std::size_t paley_count = 500;
  std::vector<std::size_t> matrix_dims{1, 2, 4, 8};
  GridSpec grid{0, 8, std::size_t{1} << 22};
};

struct StageTiming {
  std::string stage;
  double ms = 0;
};

struct ConstructionReport {
  int schema_version = kReportSchemaVersion;
  ConstructionConfig config;
  Smoothness s;
  PropertyOWitness witness;
  LacunaryPlan plan;
  std::string plan_digest;
  unsigned retries = 0;
  bool conditions_met = false;
  bool claim_a = false;
  bool claim_b = false;
  std::size_t riesz_size = 0;
  double composite_max_rel_error = 0;
  bool composite_ok = false;
  std::vector<double> rho_abs;
  double rho_lower = 0;  // rho_hat (1 + ell_hat) / 2
  double rho_upper = 0;  // (1 + ell_hat) / 2
  bool rho_bounds_ok = false;
  std::optional<PaleyEstimate> paley;
  std::vector<StageTiming> timings;  // not part of replay
};

// A construction stage failed; stage() names it.
class StageFailure : public Error {
 public:
  StageFailure(std::string stage, Errc code, const std::string& what)
      : Error(code, what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// property_o -> build_sequence -> riesz -> pipeline -> composite_identity ->
// rho_bounds -> paley_estimation. Throws StageFailure at the first failing stage.
ConstructionReport run_construction(const Smoothness& s, const ConstructionConfig& config = {});

// Digest of the smoothness, witness, K, t0, q and sequence.
std::string plan_digest(const LacunaryPlan& plan);

struct ReplayResult {
  bool match = false;
  std::vector<std::string> differences;
};

// Re-runs with the report's embedded seeds and compares every field except
// timings: integers and strings exactly, floats within 1e-12 relative.
ReplayResult replay(const ConstructionReport& report, const Smoothness& s, const ConstructionConfig& config);

}  // namespace paley
