#include "paley/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "paley/error.hpp"

namespace paley {

namespace {

constexpr std::complex<double> kQuarter[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

void check_same_dim(std::span<const MultiIndex> set) {
  if (set.empty()) return;
  const std::size_t d = set.front().dim();
  for (const auto& g : set)
    if (g.dim() != d)
      throw Error(Errc::dimension_mismatch, "multi-indices of mixed dimension");
}

// Every multi-index componentwise below `top`, in lexicographic order.
void enumerate_box(const MultiIndex& top, std::set<MultiIndex>& out) {
  const std::size_t d = top.dim();
  std::vector<unsigned> cur(d, 0);
  while (true) {
    out.insert(MultiIndex(cur));
    std::size_t j = d;
    while (j > 0 && cur[j - 1] == top[j - 1]) {
      cur[j - 1] = 0;
      --j;
    }
    if (j == 0) return;
    ++cur[j - 1];
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<unsigned> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw Error(Errc::invalid_argument, "multi-index must have dimension >= 1");
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> components)
    : MultiIndex(std::vector<unsigned>(components)) {}

unsigned MultiIndex::order() const noexcept {
  return std::accumulate(components_.begin(), components_.end(), 0u);
}

bool MultiIndex::below(const MultiIndex& other) const {
  if (dim() != other.dim())
    throw Error(Errc::dimension_mismatch, "multi-indices of different dimension");
  for (std::size_t j = 0; j < dim(); ++j)
    if (components_[j] > other.components_[j]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dim() != other.dim())
    throw Error(Errc::dimension_mismatch, "multi-indices of different dimension");
  std::vector<unsigned> c(dim());
  for (std::size_t j = 0; j < dim(); ++j) c[j] = components_[j] + other.components_[j];
  return MultiIndex(std::move(c));
}

Smoothness Smoothness::from_elements(std::vector<MultiIndex> elements) {
  if (!is_smoothness(elements))
    throw Error(Errc::invalid_argument, "not a smoothness: needs 0 and downward closure");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Smoothness s;
  s.dim_ = elements.front().dim();
  s.elements_ = std::move(elements);
  return s;
}

bool Smoothness::contains(const MultiIndex& gamma) const {
  return std::binary_search(elements_.begin(), elements_.end(), gamma);
}

bool is_smoothness(std::span<const MultiIndex> candidate) {
  check_same_dim(candidate);
  if (candidate.empty()) return false;
  std::set<MultiIndex> set(candidate.begin(), candidate.end());
  const MultiIndex origin(std::vector<unsigned>(candidate.front().dim(), 0));
  if (!set.contains(origin)) return false;
  // Downward closure is equivalent to closure under single unit decrements.
  for (const auto& g : set) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (g[j] == 0) continue;
      std::vector<unsigned> c = g.components();
      --c[j];
      if (!set.contains(MultiIndex(std::move(c)))) return false;
    }
  }
  return true;
}

Smoothness saturate(std::span<const MultiIndex> generators) {
  if (generators.empty())
    throw Error(Errc::empty_input, "saturate needs at least one generator");
  check_same_dim(generators);
  std::set<MultiIndex> out;
  for (const auto& g : generators) enumerate_box(g, out);
  return Smoothness::from_elements(std::vector<MultiIndex>(out.begin(), out.end()));
}

Smoothness saturate(std::initializer_list<MultiIndex> generators) {
  return saturate(std::span<const MultiIndex>(generators.begin(), generators.size()));
}

std::complex<double> symbol_eval(const MultiIndex& gamma, std::span<const double> x) {
  if (gamma.dim() != x.size())
    throw Error(Errc::dimension_mismatch, "symbol_eval: dimension mismatch");
  double r = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0.0) return {0.0, 0.0};
    for (unsigned e = 0; e < gamma[j]; ++e) r *= x[j];
  }
  return kQuarter[gamma.order() % 4] * r;
}

double q_s_eval(const Smoothness& s, std::span<const double> x) {
  if (s.dim() != x.size())
    throw Error(Errc::dimension_mismatch, "q_s_eval: dimension mismatch");
  double q = 0.0;
  for (const auto& g : s) q += std::norm(symbol_eval(g, x));
  return q;
}

std::complex<double> derivative_multiplier(const MultiIndex& gamma, const Frequency& n) {
  if (gamma.dim() != n.size())
    throw Error(Errc::dimension_mismatch, "derivative_multiplier: dimension mismatch");
  Integer prod = 1;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (gamma[j] == 0) continue;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), n[j].get_mpz_t(), gamma[j]);
    prod *= p;
  }
  return kQuarter[gamma.order() % 4] * to_double(prod);
}

std::complex<double> derivative_multiplier(const MultiIndex& gamma,
                                           std::span<const long> n) {
  if (gamma.dim() != n.size())
    throw Error(Errc::dimension_mismatch, "derivative_multiplier: dimension mismatch");
  double r = 1.0;
  for (std::size_t j = 0; j < n.size(); ++j)
    for (unsigned e = 0; e < gamma[j]; ++e) r *= static_cast<double>(n[j]);
  return kQuarter[gamma.order() % 4] * r;
}

std::complex<double> LatticeSymbol::to_complex() const {
  return kQuarter[quarter_turns % 4] * to_double(value);
}

LatticeSymbol lattice_symbol(const MultiIndex& gamma, const Frequency& n) {
  if (gamma.dim() != n.size())
    throw Error(Errc::dimension_mismatch, "lattice_symbol: dimension mismatch");
  LatticeSymbol out;
  out.quarter_turns = gamma.order() % 4;
  for (const auto& c : n)
    if (c == 0) {
      out.value = 0;
      return out;
    }
  Integer prod = 1;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (gamma[j] == 0) continue;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), n[j].get_mpz_t(), gamma[j]);
    prod *= p;
  }
  out.value = prod;
  return out;
}

Integer q_s_exact(const Smoothness& s, const Frequency& n) {
  if (s.dim() != n.size())
    throw Error(Errc::dimension_mismatch, "q_s_exact: dimension mismatch");
  Integer q = 0;
  for (const auto& g : s) {
    const LatticeSymbol sym = lattice_symbol(g, n);
    q += sym.value * sym.value;
  }
  return q;
}

double normalized_symbol_abs(const MultiIndex& gamma, const Smoothness& s,
                             const Frequency& n) {
  const Integer q = q_s_exact(s, n);
  if (q == 0)
    throw Error(Errc::singular_point, "Q_S vanishes at " + to_string(n));
  const LatticeSymbol sym = lattice_symbol(gamma, n);
  const BigFloat num(Integer(abs(sym.value)));
  const BigFloat den = BigFloat(q).sqrt();
  return (num / den).to_double();
}

double q_s_sqrt(const Smoothness& s, const Frequency& n) {
  return BigFloat(q_s_exact(s, n)).sqrt().to_double();
}

std::vector<double> to_doubles(const Frequency& n) {
  std::vector<double> out(n.size());
  for (std::size_t j = 0; j < n.size(); ++j) out[j] = to_double(n[j]);
  return out;
}

}  // namespace paley
