#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paley/bignum.hpp"
#include "paley/multiindex.hpp"
#include "paley/property_o.hpp"

namespace paley {

enum class Verdict { met, violated, undetermined };

std::string_view verdict_name(Verdict v) noexcept;

struct ConditionReport {
  bool cond_i = false;
  bool ratio_ok = false;   // n_{k+1}(1) / n_k(1) >= 3
  bool growth_ok = false;  // min_j n_k(j) strictly increasing
  double ell_hat = 0;
  double ell_drift = 0;
  double sum_iii = 0;
  double sum_iv = 0;
  bool iii_met = false;  // sum_iii < 1/2
  // sum_iv covers only the balls B_k small enough to enumerate. A partial
  // sum >= 1 already violates the bound; otherwise skipped balls leave the
  // verdict undetermined.
  Verdict iv = Verdict::undetermined;
  std::vector<std::size_t> iv_skipped;  // 1-based k of balls not enumerated
};

struct LacunaryPlan {
  Smoothness s;
  PropertyOWitness witness;
  std::size_t K = 0;
  double t0 = 0;
  double q = 0;
  std::vector<Frequency> sequence;
  std::vector<unsigned> doublings;  // inflation steps applied to t_k
  std::complex<double> tau;
  double ell_hat = 0;
  double ell_drift = 0;
  double rho_hat = 0;
  std::vector<Integer> radii;  // D_1 .. D_K
  ConditionReport report;

  // Lambda = {n_1, ..., n_K}.
  const std::vector<Frequency>& lambda() const { return sequence; }
};

struct BuildOptions {
  std::size_t bk_cap = 10'000'000;
  unsigned max_doublings = 4096;
};

// i^{|alpha| - |beta|}; throws Errc::parity on equal parity.
std::complex<double> compute_tau(const MultiIndex& alpha, const MultiIndex& beta);

// n_k(j) = max(1, round(t_k^{c(j)})) with t_k = t0 q^{k-1}, doubling t_k
// until condition (i), the first-coordinate ratio >= 3 and strict growth of
// min_j n_k(j) hold. The report is filled with balls above bk_cap skipped.
LacunaryPlan build_sequence(const Smoothness& s, const PropertyOWitness& witness, std::size_t K, double t0,
                            double q, const BuildOptions& options = {});

struct EllEstimate {
  double ell = 0;
  double drift = 0;  // relative change from index K-1 to K
};

// |sigma_alpha(n_K)| / |sigma_beta(n_K)|.
EllEstimate estimate_ell(const MultiIndex& alpha, const MultiIndex& beta, const std::vector<Frequency>& sequence);

// D_k = sum_{r<k} sum_j n_r(j), 1-based k.
Integer bk_radius(const std::vector<Frequency>& sequence, std::size_t k);

// Exact cardinality of the l1 ball of radius r in Z^d.
Integer l1_ball_size(std::size_t d, const Integer& r);

// Visits B_k in lexicographic order; throws TooLargeError past the cap.
void bk_visit(const std::vector<Frequency>& sequence, std::size_t k, std::size_t cap,
              const std::function<void(const Frequency&)>& visit);
std::vector<Frequency> bk_enumerate(const std::vector<Frequency>& sequence, std::size_t k,
                                    std::size_t cap = 10'000'000);

// With truncate = false a ball above the cap throws TooLargeError; with
// truncate = true it is skipped and recorded in iv_skipped.
ConditionReport check_conditions(const Smoothness& s, const LacunaryPlan& plan, std::size_t cap = 10'000'000,
                                 bool truncate = false);

// sigma_gamma(n) / Q_S(n)^{1/2} as a complex number.
std::complex<double> normalized_symbol(const MultiIndex& gamma, const Smoothness& s, const Frequency& n);

struct TechpropValues {
  double q1 = 0;
  double q2 = 0;
  double q3 = 0;
};

TechpropValues techprop_quantities(const Smoothness& s, const Frequency& m, const Frequency& n);

struct RhoSampler {
  long window = 8;  // coordinates range over +-[rho, rho + window]
  std::size_t exhaustive_cap = 200'000;
  std::size_t samples = 20'000;
  std::uint64_t seed = 1;
};

struct RhoEstimate {
  long rho = 0;
  std::size_t pairs_tested = 0;
  bool sampled = false;
  TechpropValues worst;  // largest values seen at the returned rho
};

// Least rho in {2, 4, ..., 2^20} at which every tested pair passes. This is
// an empirical search, not a proof.
RhoEstimate estimate_rho_de(const Smoothness& s, long D, double eps, const RhoSampler& sampler = {});

}  // namespace paley
