#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "paley/bignum.hpp"

namespace paley {

// Sign pattern d in {-1, 0, 1}^K selecting the frequency sum_k d_k n_k.
using SignPattern = std::vector<int>;

// K-term truncation of the Riesz product prod_k (1 + cos<x, n_k>).
struct RieszMeasure {
  std::vector<Frequency> sequence;  // n_1 .. n_K
  std::map<Frequency, double> coeffs;

  std::size_t K() const { return sequence.size(); }
  double coeff(const Frequency& n) const;
};

struct ClaimResult {
  bool holds = true;
  std::optional<Frequency> violating;                           // Claim A
  std::optional<std::pair<SignPattern, SignPattern>> collision;  // Claim B
};

// Patterns in lexicographic order with -1 < 0 < 1 and d_1 most significant.
std::vector<SignPattern> sign_patterns(std::size_t K);

Frequency pattern_frequency(const std::vector<Frequency>& sequence, const SignPattern& d);

// Every nonzero spectrum point lies in B_k or -B_k, k the last active index.
ClaimResult verify_claim_a(const std::vector<Frequency>& sequence, std::size_t K);

// First coordinates of the 3^K pattern frequencies are pairwise distinct.
ClaimResult verify_claim_b(const std::vector<Frequency>& sequence, std::size_t K);

// Coefficient 2^-(number of active factors) at every pattern frequency.
// Built only after Claim B certifies the patterns; otherwise throws
// Errc::collision naming both patterns. K = 0 gives the Lebesgue measure.
RieszMeasure riesz_coeffs(const std::vector<Frequency>& sequence, std::size_t K);

std::vector<Frequency> riesz_spectrum(const std::vector<Frequency>& sequence, std::size_t K);

}  // namespace paley
