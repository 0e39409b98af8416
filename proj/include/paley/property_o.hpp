#pragma once

#include <optional>
#include <vector>

#include "paley/multiindex.hpp"
#include "paley/rational_lp.hpp"

namespace paley {

// Certificate that a smoothness has Property (O): alpha, beta of opposite
// parity and a positive direction c with <alpha,c> = <beta,c> = 1 and
// <gamma,c> <= 1 on S. t_star is the optimal min_j c(j) of the pair LP.
struct PropertyOWitness {
  MultiIndex alpha;
  MultiIndex beta;
  std::vector<Rational> c;
  Rational t_star = 0;
};

// Throws Errc::invalid_witness when alpha or beta is not in S, and
// Errc::dimension_mismatch on inconsistent dimensions.
bool verify_witness(const Smoothness& s, const PropertyOWitness& w);

// The LP for one pair: variables (c(1..d), t), all free;
// maximize t s.t. c(j) >= t, <alpha,c> = <beta,c> = 1, <gamma,c> <= 1.
RationalLP witness_lp(const Smoothness& s, const MultiIndex& alpha, const MultiIndex& beta);

// Pairs of opposite parity, each unordered pair once, oriented so that
// |alpha| > |beta|, sorted lexicographically by (alpha, beta).
std::vector<std::pair<MultiIndex, MultiIndex>> candidate_pairs(const Smoothness& s);

// First candidate pair whose LP optimum is strictly positive.
std::optional<PropertyOWitness> find_witness(const Smoothness& s);

}  // namespace paley
