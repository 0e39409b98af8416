#include "paley/cr_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "paley/error.hpp"
#include "paley/parallel.hpp"

namespace paley {

namespace {

using Terms = std::vector<CMatrix>;

// (L m) x m, blocks stacked vertically.
CMatrix column_matrix(const Terms& v) {
  const Eigen::Index m = v.front().rows();
  CMatrix c(m * static_cast<Eigen::Index>(v.size()), m);
  for (std::size_t k = 0; k < v.size(); ++k) c.block(static_cast<Eigen::Index>(k) * m, 0, m, m) = v[k];
  return c;
}

// m x (L m), blocks side by side.
CMatrix row_matrix(const Terms& v) {
  const Eigen::Index m = v.front().rows();
  CMatrix r(m, m * static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) r.block(0, static_cast<Eigen::Index>(k) * m, m, m) = v[k];
  return r;
}

Terms from_column(const CMatrix& c, std::size_t L) {
  const Eigen::Index m = c.cols();
  Terms v(L);
  for (std::size_t k = 0; k < L; ++k) v[k] = c.block(static_cast<Eigen::Index>(k) * m, 0, m, m);
  return v;
}

Terms from_row(const CMatrix& r, std::size_t L) {
  const Eigen::Index m = r.rows();
  Terms v(L);
  for (std::size_t k = 0; k < L; ++k) v[k] = r.block(0, static_cast<Eigen::Index>(k) * m, m, m);
  return v;
}

double nuclear(const CMatrix& a) { return Eigen::JacobiSVD<CMatrix>(a).singularValues().sum(); }

// Singular value soft threshold.
CMatrix shrink(const CMatrix& a, double gamma) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd s = (svd.singularValues().array() - gamma).max(0.0).matrix();
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
}

Terms combine(const Terms& a, double ca, const Terms& b, double cb) {
  Terms out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = ca * a[k] + cb * b[k];
  return out;
}

double frob(const Terms& v) {
  double s = 0;
  for (const auto& t : v) s += t.squaredNorm();
  return std::sqrt(s);
}

struct Objective {
  const Terms& x;
  double value(const Terms& y) const { return nuclear(column_matrix(y)) + nuclear(row_matrix(combine(x, 1, y, -1))); }
};

struct RunResult {
  double value = std::numeric_limits<double>::infinity();
  Terms y;
  bool converged = false;
};

RunResult douglas_rachford(const Terms& x, Terms w, double gamma, const CrOptions& opt) {
  const std::size_t L = x.size();
  const Objective obj{x};
  const double scale = std::max(frob(x), std::numeric_limits<double>::min());
  RunResult best;
  auto consider = [&](const Terms& y) {
    const double v = obj.value(y);
    if (v < best.value) {
      best.value = v;
      best.y = y;
    }
  };
  consider(w);
  for (std::size_t it = 0; it < opt.iterations; ++it) {
    const Terms y = from_column(shrink(column_matrix(w), gamma), L);
    const Terms reflected = combine(y, 2, w, -1);
    const Terms u = combine(x, 1, from_row(shrink(row_matrix(combine(x, 1, reflected, -1)), gamma), L), -1);
    consider(y);
    consider(u);
    const Terms step = combine(u, 1, y, -1);
    for (std::size_t k = 0; k < L; ++k) w[k] += step[k];
    if (frob(step) <= opt.tolerance * scale) {
      best.converged = true;
      break;
    }
  }
  return best;
}

Terms start_point(const Terms& x, std::size_t r, std::uint64_t seed) {
  if (r == 0) return x;
  if (r == 1) return combine(x, 0, x, 0);
  if (r == 2) return combine(x, 0.5, x, 0);
  std::mt19937_64 rng(seed + r);
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  const double sd = frob(x) / std::sqrt(static_cast<double>(x.size() * x.front().size()));
  Terms w(x.size());
  for (auto& t : w) {
    t = CMatrix(x.front().rows(), x.front().cols());
    for (Eigen::Index e = 0; e < t.size(); ++e) t(e) = sd * cplx(g(rng), g(rng));
  }
  return w;
}

}  // namespace

MatrixSequence::MatrixSequence(std::vector<CMatrix> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(Errc::empty_input, "matrix sequence is empty");
  const auto m = terms_.front().rows();
  if (m == 0) throw Error(Errc::dimension_mismatch, "matrices must be nonempty");
  for (const auto& t : terms_)
    if (t.rows() != m || t.cols() != m) throw Error(Errc::dimension_mismatch, "matrices must share one square size");
}

MatrixSequence MatrixSequence::scalars(const std::vector<cplx>& values) {
  std::vector<CMatrix> t;
  for (cplx v : values) t.push_back(CMatrix::Constant(1, 1, v));
  return MatrixSequence(std::move(t));
}

MatrixSequence MatrixSequence::scaled(cplx c) const {
  std::vector<CMatrix> t;
  for (const auto& x : terms_) t.push_back(c * x);
  return MatrixSequence(std::move(t));
}

MatrixSequence operator+(const MatrixSequence& a, const MatrixSequence& b) {
  if (a.size() != b.size() || a.m() != b.m()) throw Error(Errc::dimension_mismatch, "sequence shapes differ");
  std::vector<CMatrix> t;
  for (std::size_t k = 0; k < a.size(); ++k) t.push_back(a[k] + b[k]);
  return MatrixSequence(std::move(t));
}

double column_row_value(const Decomposition& dec) {
  if (dec.y.size() != dec.z.size() || dec.y.empty())
    throw Error(Errc::dimension_mismatch, "decomposition lists must be nonempty and of equal length");
  return nuclear(column_matrix(dec.y)) + nuclear(row_matrix(dec.z));
}

double column_value(const MatrixSequence& xs) { return nuclear(column_matrix(xs.terms())); }
double row_value(const MatrixSequence& xs) { return nuclear(row_matrix(xs.terms())); }

CrResult cr_norm(const MatrixSequence& xs, const CrOptions& opt) {
  if (xs.size() == 0) throw Error(Errc::empty_input, "matrix sequence is empty");
  if (opt.restarts < 1) throw Error(Errc::invalid_argument, "restarts must be >= 1");
  if (!(opt.tolerance > 0)) throw Error(Errc::invalid_argument, "tolerance must be positive");
  const Terms& x = xs.terms();
  const double gamma = frob(x) / std::sqrt(static_cast<double>(x.size()));
  std::vector<RunResult> runs(opt.restarts);
  parallel_for(opt.restarts, [&](std::size_t r) {
    runs[r] = douglas_rachford(x, start_point(x, r, opt.seed), gamma, opt);
  });
  CrResult out;
  out.restarts_used = opt.restarts;
  std::size_t arg = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (runs[r].value < runs[arg].value) arg = r;
    out.converged = out.converged || runs[r].converged;
  }
  out.value = runs[arg].value;
  if (frob(x) == 0) out.value = 0;
  out.best.y = runs[arg].y;
  out.best.z = combine(x, 1, runs[arg].y, -1);
  return out;
}

TrigPoly lacunary_series(const MatrixSequence& xs, const std::vector<long>& freqs) {
  if (freqs.size() != xs.size()) throw Error(Errc::dimension_mismatch, "one frequency per matrix is required");
  if (xs.size() == 0) throw Error(Errc::empty_input, "matrix sequence is empty");
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    if (freqs[k] < 1) throw Error(Errc::invalid_argument, "frequencies must be positive");
    if (k > 0 && freqs[k] <= freqs[k - 1]) throw Error(Errc::invalid_argument, "frequencies must increase strictly");
  }
  TrigPoly f = TrigPoly::matrix(1, xs.m());
  for (std::size_t k = 0; k < xs.size(); ++k) f.add_term(make_frequency({freqs[k]}), xs[k]);
  return f;
}

double khintchine_ratio(const MatrixSequence& xs, const std::vector<long>& freqs, const GridSpec& grid,
                        const CrOptions& opt) {
  const TrigPoly f = lacunary_series(xs, freqs);
  const double den = cr_norm(xs, opt).value;
  if (!(den > 0)) throw Error(Errc::undefined_ratio, "C+R norm vanishes");
  return s1_l1_norm(f, grid) / den;
}

double unconditionality_ratio(const std::vector<cplx>& a, const MatrixSequence& xs, const std::vector<long>& freqs,
                              const GridSpec& grid) {
  if (a.size() != xs.size()) throw Error(Errc::dimension_mismatch, "one multiplier per matrix is required");
  std::vector<CMatrix> t;
  for (std::size_t k = 0; k < xs.size(); ++k) t.push_back(a[k] * xs[k]);
  const TrigPoly f = lacunary_series(xs, freqs);
  const TrigPoly g = lacunary_series(MatrixSequence(std::move(t)), freqs);
  // spec(g) lies in spec(f), so one rule serves both.
  const QuadratureRule rule = QuadratureRule::resolve(1, spectrum(f), grid);
  const double den = s1_l1_norm(f, rule);
  if (!(den > 0)) throw Error(Errc::undefined_ratio, "series norm vanishes");
  return s1_l1_norm(g, rule) / den;
}

}  // namespace paley
