#include "paley/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "paley/error.hpp"

namespace paley {

namespace {

void check_prefix(const std::vector<Frequency>& sequence, std::size_t K) {
  if (sequence.empty()) throw Error(Errc::empty_input, "sequence is empty");
  if (K > sequence.size()) throw Error(Errc::out_of_range, "K exceeds the sequence length");
  if (K > 20) throw Error(Errc::too_large, "3^K patterns with K > 20 are not enumerated");
  for (const auto& n : sequence)
    if (n.size() != sequence.front().size()) throw Error(Errc::dimension_mismatch, "sequence of mixed dimension");
}

std::string pattern_string(const SignPattern& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

}  // namespace

double RieszMeasure::coeff(const Frequency& n) const {
  auto it = coeffs.find(n);
  return it == coeffs.end() ? 0.0 : it->second;
}

std::vector<SignPattern> sign_patterns(std::size_t K) {
  std::vector<SignPattern> out;
  SignPattern d(K, -1);
  for (;;) {
    out.push_back(d);
    std::size_t j = K;
    while (j > 0 && d[j - 1] == 1) d[--j] = -1;
    if (j == 0) break;
    ++d[j - 1];
  }
  return out;
}

Frequency pattern_frequency(const std::vector<Frequency>& sequence, const SignPattern& d) {
  Frequency m(sequence.front().size(), Integer(0));
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    for (std::size_t j = 0; j < m.size(); ++j) m[j] += d[k] * sequence[k][j];
  }
  return m;
}

ClaimResult verify_claim_a(const std::vector<Frequency>& sequence, std::size_t K) {
  check_prefix(sequence, K);
  std::vector<Integer> radius(K, Integer(0));
  for (std::size_t k = 1; k < K; ++k) radius[k] = radius[k - 1] + l1_norm(sequence[k - 1]);
  ClaimResult r;
  for (const auto& d : sign_patterns(K)) {
    std::size_t last = K;
    for (std::size_t k = K; k-- > 0;)
      if (d[k] != 0) {
        last = k;
        break;
      }
    if (last == K) continue;
    const Frequency m = pattern_frequency(sequence, d);
    const bool in = l1_distance(m, sequence[last]) <= radius[last] ||
                    l1_distance(negate(m), sequence[last]) <= radius[last];
    if (!in) {
      r.holds = false;
      r.violating = m;
      return r;
    }
  }
  return r;
}

ClaimResult verify_claim_b(const std::vector<Frequency>& sequence, std::size_t K) {
  check_prefix(sequence, K);
  ClaimResult r;
  std::unordered_map<std::string, SignPattern> seen;
  for (const auto& d : sign_patterns(K)) {
    Integer first = 0;
    for (std::size_t k = 0; k < K; ++k) first += d[k] * sequence[k][0];
    auto [it, inserted] = seen.emplace(first.get_str(), d);
    if (!inserted) {
      r.holds = false;
      r.collision = std::make_pair(it->second, d);
      return r;
    }
  }
  return r;
}

RieszMeasure riesz_coeffs(const std::vector<Frequency>& sequence, std::size_t K) {
  check_prefix(sequence, K);
  const ClaimResult b = verify_claim_b(sequence, K);
  if (!b.holds)
    throw Error(Errc::collision, "patterns " + pattern_string(b.collision->first) + " and " +
                                     pattern_string(b.collision->second) + " share a first coordinate");
  RieszMeasure mu;
  mu.sequence.assign(sequence.begin(), sequence.begin() + static_cast<std::ptrdiff_t>(K));
  std::map<Frequency, SignPattern> owner;
  for (const auto& d : sign_patterns(K)) {
    const Frequency m = pattern_frequency(sequence, d);
    auto [it, inserted] = owner.emplace(m, d);
    if (!inserted)
      throw Error(Errc::collision, "patterns " + pattern_string(it->second) + " and " + pattern_string(d) +
                                       " share frequency " + to_string(m));
    const auto active = std::count_if(d.begin(), d.end(), [](int v) { return v != 0; });
    mu.coeffs.emplace(m, std::ldexp(1.0, -static_cast<int>(active)));
  }
  return mu;
}

std::vector<Frequency> riesz_spectrum(const std::vector<Frequency>& sequence, std::size_t K) {
  std::vector<Frequency> out;
  for (const auto& [n, c] : riesz_coeffs(sequence, K).coeffs) out.push_back(n);
  return out;
}

}  // namespace paley
