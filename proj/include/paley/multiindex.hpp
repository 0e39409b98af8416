#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "paley/bignum.hpp"

namespace paley {

// A point gamma of N^d, the exponent of the partial derivative d^gamma.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> components);
  MultiIndex(std::initializer_list<unsigned> components);

  std::size_t dim() const noexcept { return components_.size(); }
  unsigned operator[](std::size_t j) const { return components_[j]; }
  const std::vector<unsigned>& components() const noexcept { return components_; }

  // |gamma|
  unsigned order() const noexcept;

  // Componentwise <=.
  bool below(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<unsigned> components_;
};

// Finite downward-closed subset of N^d containing the origin. Elements are
// kept in lexicographic order; construction validates the invariants.
class Smoothness {
 public:
  Smoothness() = default;

  // Throws Errc::invalid_argument unless `elements` is a smoothness.
  static Smoothness from_elements(std::vector<MultiIndex> elements);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const MultiIndex& gamma) const;
  const std::vector<MultiIndex>& elements() const noexcept { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const Smoothness&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<MultiIndex> elements_;
};

// Throws Errc::dimension_mismatch on mixed dimensions.
bool is_smoothness(std::span<const MultiIndex> candidate);

// Smallest downward-closed set containing the generators and 0.
Smoothness saturate(std::span<const MultiIndex> generators);
Smoothness saturate(std::initializer_list<MultiIndex> generators);

// sigma_gamma(x) = i^|gamma| x^gamma when every x(j) != 0, else 0.
std::complex<double> symbol_eval(const MultiIndex& gamma, std::span<const double> x);

// Q_S(x) = sum over S of |sigma_gamma(x)|^2; 0 when a coordinate vanishes.
double q_s_eval(const Smoothness& s, std::span<const double> x);

// Fourier multiplier of d^gamma at n, with 0^0 = 1.
std::complex<double> derivative_multiplier(const MultiIndex& gamma, const Frequency& n);
std::complex<double> derivative_multiplier(const MultiIndex& gamma,
                                           std::span<const long> n);

// sigma_gamma at a lattice point, held exactly as i^quarter_turns * value.
struct LatticeSymbol {
  unsigned quarter_turns = 0;  // in [0, 4)
  Integer value = 0;           // signed product n^gamma; 0 by convention

  std::complex<double> to_complex() const;
};

LatticeSymbol lattice_symbol(const MultiIndex& gamma, const Frequency& n);

// Exact Q_S(n) for a lattice point.
Integer q_s_exact(const Smoothness& s, const Frequency& n);

// |sigma_gamma(n)| / Q_S(n)^{1/2}, computed without overflow. Requires
// Q_S(n) > 0.
double normalized_symbol_abs(const MultiIndex& gamma, const Smoothness& s,
                             const Frequency& n);

// Q_S(n)^{1/2} rounded to double (may be +inf only past 1e308).
double q_s_sqrt(const Smoothness& s, const Frequency& n);

std::vector<double> to_doubles(const Frequency& n);

}  // namespace paley
