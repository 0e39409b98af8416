#pragma once

#include <cstdint>
#include <vector>

#include "paley/trigpoly.hpp"

namespace paley {

// x_1 .. x_L, common size m x m, L >= 1.
class MatrixSequence {
 public:
  MatrixSequence() = default;
  // Throws Errc::empty_input or Errc::dimension_mismatch.
  explicit MatrixSequence(std::vector<CMatrix> terms);
  static MatrixSequence scalars(const std::vector<cplx>& values);

  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t m() const noexcept { return terms_.empty() ? 0 : static_cast<std::size_t>(terms_.front().rows()); }
  const CMatrix& operator[](std::size_t k) const { return terms_[k]; }
  const std::vector<CMatrix>& terms() const noexcept { return terms_; }

  MatrixSequence scaled(cplx c) const;
  friend MatrixSequence operator+(const MatrixSequence& a, const MatrixSequence& b);

 private:
  std::vector<CMatrix> terms_;
};

struct Decomposition {
  std::vector<CMatrix> y;
  std::vector<CMatrix> z;
};

// ||(sum y_k^* y_k)^{1/2}||_1 + ||(sum z_k z_k^*)^{1/2}||_1.
double column_row_value(const Decomposition& dec);

// Pure decompositions: y = x (column) and z = x (row).
double column_value(const MatrixSequence& xs);
double row_value(const MatrixSequence& xs);

struct CrOptions {
  // Restarts 0..2 start from z = 0, y = 0 and y = z = x/2; the rest are seeded random splits.
  std::size_t restarts = 6;
  std::size_t iterations = 3000;
  double tolerance = 1e-12;
  std::uint64_t seed = 1;
};

struct CrResult {
  double value = 0;
  Decomposition best;
  bool converged = false;
  std::size_t restarts_used = 0;
};

// Upper bound on the C+R norm by Douglas-Rachford splitting over y + z = x.
CrResult cr_norm(const MatrixSequence& xs, const CrOptions& opt = {});

// sum_k x_k e^{i n_k t} as a one-variable matrix polynomial.
TrigPoly lacunary_series(const MatrixSequence& xs, const std::vector<long>& freqs);

// ||sum x_k e^{i n_k t}||_{L_1(S_1)} / cr_norm(xs).
double khintchine_ratio(const MatrixSequence& xs, const std::vector<long>& freqs, const GridSpec& grid = {},
                        const CrOptions& opt = {});

// ||sum a_k x_k e^{i n_k t}||_{L_1(S_1)} / ||sum x_k e^{i n_k t}||_{L_1(S_1)}.
double unconditionality_ratio(const std::vector<cplx>& a, const MatrixSequence& xs, const std::vector<long>& freqs,
                              const GridSpec& grid = {});

}  // namespace paley
