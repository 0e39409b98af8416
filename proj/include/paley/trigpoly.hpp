#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "paley/bignum.hpp"
#include "paley/multiindex.hpp"

namespace paley {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Finitely supported map Z^d -> coefficient. A scalar polynomial stores 1x1
// coefficients; a matrix polynomial stores m x m ones. Coefficients whose
// entries are all below kZeroTolerance in magnitude are never stored.
class TrigPoly {
 public:
  static constexpr double kZeroTolerance = 1e-15;

  TrigPoly() = default;
  static TrigPoly scalar(std::size_t dim);
  static TrigPoly matrix(std::size_t dim, std::size_t m);
  static TrigPoly character(const Frequency& n, cplx coeff = 1.0);

  std::size_t dim() const noexcept { return dim_; }
  bool is_matrix() const noexcept { return matrix_; }
  // Coefficient size; 1 for scalar polynomials.
  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  const std::map<Frequency, CMatrix>& terms() const noexcept { return terms_; }

  // Scalar coefficient, 0 off the spectrum.
  cplx coeff(const Frequency& n) const;
  // Matrix coefficient, zero matrix off the spectrum.
  CMatrix matrix_coeff(const Frequency& n) const;

  // Accumulate into the coefficient at n.
  void add_term(const Frequency& n, cplx value);
  void add_term(const Frequency& n, const CMatrix& value);

  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator-=(const TrigPoly& other);
  TrigPoly& operator*=(cplx c);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(cplx c, TrigPoly a) { return a *= c; }

  // Largest entrywise coefficient difference over the union of spectra.
  double max_abs_diff(const TrigPoly& other) const;
  double max_abs_coeff() const;

 private:
  TrigPoly(std::size_t dim, bool matrix, std::size_t m);
  void check_compatible(const TrigPoly& other) const;
  void settle(std::map<Frequency, CMatrix>::iterator it);

  std::size_t dim_ = 0;
  bool matrix_ = false;
  std::size_t m_ = 1;
  std::map<Frequency, CMatrix> terms_;
};

std::vector<Frequency> spectrum(const TrigPoly& f);

TrigPoly derivative(const TrigPoly& f, const MultiIndex& gamma);

// Coefficient at n multiplied by multiplier(n); 0 where the map has no entry.
TrigPoly convolve(const TrigPoly& f, const std::map<Frequency, cplx>& multiplier);

// Pointwise product of two polynomials (convolution of coefficient maps).
TrigPoly multiply(const TrigPoly& f, const TrigPoly& g);

struct GridSpec {
  // Points per spatial axis; 0 picks 4 * (max frequency magnitude) + 1.
  std::size_t points_per_axis = 0;
  // Points per phase axis of the lifted rule.
  std::size_t phase_points = 16;
  // Refuse rules with more nodes than this.
  std::size_t max_points = std::size_t{1} << 22;
};

// Quadrature on the torus for a fixed support.
//
// Tensor rule: the uniform grid x = -pi + 2 pi j / N on each of the d axes,
// weight N^-d. Exact for p = 2 once N > 2 max|n(j)|.
//
// Lifted rule, used when the tensor grid is over budget: frequencies are
// grouped into clusters of nearby points (l-infinity gaps <= kClusterWidth).
// The cluster near the origin keeps its frequencies; every other cluster C
// is written e^{i<x,c_C>} g_C(x) with g_C of low degree, and the far phase
// e^{i<x,c_C>} is replaced by an independent phase e^{i theta_C}. The
// integral over T^d becomes an integral over T^(d+h). This is exact for
// p = 2 and approximate for other p; the approximation is the one implied
// by asymptotic independence of very lacunary phases.
class QuadratureRule {
 public:
  static constexpr long kClusterWidth = 64;

  static QuadratureRule resolve(std::size_t dim, const std::vector<Frequency>& support,
                                const GridSpec& spec);

  std::size_t dim() const noexcept { return dim_; }
  bool lifted() const noexcept { return phase_axes_ > 0 || lifted_; }
  std::size_t phase_axes() const noexcept { return phase_axes_; }
  std::size_t clusters() const noexcept { return clusters_; }
  const std::vector<std::size_t>& axis_points() const noexcept { return axis_points_; }
  std::size_t num_points() const;
  double weight() const { return 1.0 / static_cast<double>(num_points()); }

  // Coordinates of n in the evaluation torus; throws Errc::out_of_range when
  // n is outside the support the rule was built for.
  const std::vector<long>& lift(const Frequency& n) const;

  // Same clustering, twice the points on every axis.
  QuadratureRule refined() const;

 private:
  std::size_t dim_ = 0;
  bool lifted_ = false;
  std::size_t phase_axes_ = 0;
  std::size_t clusters_ = 0;
  std::size_t max_points_ = 0;
  std::vector<std::size_t> axis_points_;
  std::map<Frequency, std::vector<long>> lifted_freq_;
};

// Values of every coefficient entry at every node. Entry e of node i is
// values[e * points + i]; entries are column-major within the coefficient.
struct GridValues {
  std::size_t points = 0;
  std::size_t m = 1;
  std::vector<cplx> values;
};

GridValues evaluate(const TrigPoly& f, const QuadratureRule& rule);

// L_p norm from grid values of a scalar polynomial.
double lp_norm(const TrigPoly& f, double p, const QuadratureRule& rule);
double lp_norm(const TrigPoly& f, double p, const GridSpec& grid = {});

double trace_norm(const CMatrix& a);

// Integral of the trace norm of g(x).
double s1_l1_norm(const TrigPoly& g, const QuadratureRule& rule);
double s1_l1_norm(const TrigPoly& g, const GridSpec& grid = {});

// Scalar: (sum over S of ||d^gamma f||_p^p)^(1/p). Matrix polynomials take
// p = 1 with the S_1-valued L_1 norm of each derivative. One rule, resolved
// from spec(f), serves every derivative.
double sobolev_norm(const TrigPoly& f, const Smoothness& s, double p, const GridSpec& grid = {});

// (sum over n in Lambda of Q_S(n) ||f^(n)||_HS^2)^(1/2), coefficientwise.
double paley_l2_norm(const TrigPoly& f, const Smoothness& s, const std::vector<Frequency>& lambda);

struct NormEstimate {
  double value = 0;
  double previous = 0;
  double rel_change = 0;
  std::size_t refinements = 0;
  bool converged = false;
  bool lifted = false;
};

// Doubles the grid until two successive values agree to rel_tol, the point
// budget is hit, or max_refinements doublings were made.
NormEstimate lp_norm_converged(const TrigPoly& f, double p, const GridSpec& grid, double rel_tol,
                               std::size_t max_refinements = 8);

// Complex Gaussian coefficients (E|z|^2 = 1 per entry) on the given support.
TrigPoly random_trigpoly(std::size_t dim, const std::vector<Frequency>& support, std::size_t m,
                         bool matrix, std::uint64_t seed);

// All points of the box [lo, hi]^d in lexicographic order.
std::vector<Frequency> frequency_box(std::size_t dim, long lo, long hi);

}  // namespace paley
