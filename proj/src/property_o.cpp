#include "paley/property_o.hpp"

#include <algorithm>

#include "paley/error.hpp"

namespace paley {

namespace {

Rational dot(const MultiIndex& g, const std::vector<Rational>& c) {
  Rational s = 0;
  for (std::size_t j = 0; j < g.dim(); ++j) s += Rational(g[j]) * c[j];
  return s;
}

}  // namespace

bool verify_witness(const Smoothness& s, const PropertyOWitness& w) {
  const std::size_t d = s.dim();
  if (w.alpha.dim() != d || w.beta.dim() != d || w.c.size() != d)
    throw Error(Errc::dimension_mismatch, "witness dimension differs from smoothness");
  if (!s.contains(w.alpha) || !s.contains(w.beta))
    throw Error(Errc::invalid_witness, "witness alpha/beta must belong to S");
  if (w.alpha.order() % 2 == w.beta.order() % 2) return false;
  for (const auto& cj : w.c)
    if (cj <= 0) return false;
  if (dot(w.alpha, w.c) != 1 || dot(w.beta, w.c) != 1) return false;
  for (const auto& g : s)
    if (dot(g, w.c) > 1) return false;
  return true;
}

RationalLP witness_lp(const Smoothness& s, const MultiIndex& alpha, const MultiIndex& beta) {
  const std::size_t d = s.dim();
  if (alpha.dim() != d || beta.dim() != d)
    throw Error(Errc::dimension_mismatch, "pair dimension differs from smoothness");
  RationalLP lp;
  lp.num_vars = d + 1;  // c(1..d), t
  lp.free_var.assign(d + 1, true);
  lp.objective.assign(d + 1, 0);
  lp.objective[d] = 1;

  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint row;
    row.coeffs.assign(d + 1, 0);
    row.coeffs[j] = 1;
    row.coeffs[d] = -1;
    row.sense = RowSense::greater_equal;
    row.rhs = 0;
    lp.constraints.push_back(std::move(row));
  }
  for (const MultiIndex* g : {&alpha, &beta}) {
    LinearConstraint row;
    row.coeffs.assign(d + 1, 0);
    for (std::size_t j = 0; j < d; ++j) row.coeffs[j] = (*g)[j];
    row.sense = RowSense::equal;
    row.rhs = 1;
    lp.constraints.push_back(std::move(row));
  }
  for (const auto& g : s) {
    LinearConstraint row;
    row.coeffs.assign(d + 1, 0);
    for (std::size_t j = 0; j < d; ++j) row.coeffs[j] = g[j];
    row.sense = RowSense::less_equal;
    row.rhs = 1;
    lp.constraints.push_back(std::move(row));
  }
  return lp;
}

std::vector<std::pair<MultiIndex, MultiIndex>> candidate_pairs(const Smoothness& s) {
  std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
  const auto& el = s.elements();
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a + 1; b < el.size(); ++b) {
      if (el[a].order() % 2 == el[b].order() % 2) continue;
      if (el[a].order() > el[b].order()) pairs.emplace_back(el[a], el[b]);
      else pairs.emplace_back(el[b], el[a]);
    }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::optional<PropertyOWitness> find_witness(const Smoothness& s) {
  for (const auto& [alpha, beta] : candidate_pairs(s)) {
    const LpResult res = lp_solve(witness_lp(s, alpha, beta));
    if (res.status != LpStatus::optimal) continue;
    if (res.optimum->value <= 0) continue;
    PropertyOWitness w;
    w.alpha = alpha;
    w.beta = beta;
    w.c.assign(res.optimum->x.begin(), res.optimum->x.begin() + static_cast<std::ptrdiff_t>(s.dim()));
    w.t_star = res.optimum->value;
    return w;
  }
  return std::nullopt;
}

}  // namespace paley
