#include "paley/trigpoly.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>

#include "paley/error.hpp"
#include "paley/parallel.hpp"
#include "paley/simd/kernels.hpp"

namespace paley {

namespace {

bool negligible(const CMatrix& c) {
  for (Eigen::Index j = 0; j < c.cols(); ++j)
    for (Eigen::Index i = 0; i < c.rows(); ++i)
      if (std::abs(c(i, j)) >= TrigPoly::kZeroTolerance) return false;
  return true;
}

CMatrix scalar_matrix(cplx v) {
  CMatrix c(1, 1);
  c(0, 0) = v;
  return c;
}

}  // namespace

TrigPoly::TrigPoly(std::size_t dim, bool matrix, std::size_t m) : dim_(dim), matrix_(matrix), m_(m) {
  if (dim == 0) throw Error(Errc::invalid_argument, "polynomial dimension must be >= 1");
  if (m == 0) throw Error(Errc::invalid_argument, "matrix size must be >= 1");
}

TrigPoly TrigPoly::scalar(std::size_t dim) { return TrigPoly(dim, false, 1); }

TrigPoly TrigPoly::matrix(std::size_t dim, std::size_t m) { return TrigPoly(dim, true, m); }

TrigPoly TrigPoly::character(const Frequency& n, cplx coeff) {
  TrigPoly f = scalar(n.size());
  f.add_term(n, coeff);
  return f;
}

cplx TrigPoly::coeff(const Frequency& n) const {
  if (matrix_) throw Error(Errc::invalid_argument, "coeff() on a matrix polynomial");
  auto it = terms_.find(n);
  return it == terms_.end() ? cplx(0) : it->second(0, 0);
}

CMatrix TrigPoly::matrix_coeff(const Frequency& n) const {
  auto it = terms_.find(n);
  if (it == terms_.end()) return CMatrix::Zero(m_, m_);
  return it->second;
}

void TrigPoly::settle(std::map<Frequency, CMatrix>::iterator it) {
  if (negligible(it->second)) terms_.erase(it);
}

void TrigPoly::add_term(const Frequency& n, cplx value) {
  if (matrix_) throw Error(Errc::invalid_argument, "scalar term added to a matrix polynomial");
  add_term(n, scalar_matrix(value));
}

void TrigPoly::add_term(const Frequency& n, const CMatrix& value) {
  if (n.size() != dim_) throw Error(Errc::dimension_mismatch, "term frequency has wrong dimension");
  if (static_cast<std::size_t>(value.rows()) != m_ || static_cast<std::size_t>(value.cols()) != m_)
    throw Error(Errc::dimension_mismatch, "coefficient has wrong size");
  auto [it, inserted] = terms_.try_emplace(n, value);
  if (!inserted) it->second += value;
  settle(it);
}

void TrigPoly::check_compatible(const TrigPoly& other) const {
  if (other.dim_ != dim_ || other.matrix_ != matrix_ || other.m_ != m_)
    throw Error(Errc::dimension_mismatch, "incompatible polynomials");
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  check_compatible(other);
  for (const auto& [n, c] : other.terms_) add_term(n, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
  check_compatible(other);
  for (const auto& [n, c] : other.terms_) add_term(n, CMatrix(-c));
  return *this;
}

TrigPoly& TrigPoly::operator*=(cplx c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = negligible(it->second) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

double TrigPoly::max_abs_diff(const TrigPoly& other) const {
  check_compatible(other);
  double worst = 0;
  for (const auto& [n, c] : terms_)
    worst = std::max(worst, (c - other.matrix_coeff(n)).cwiseAbs().maxCoeff());
  for (const auto& [n, c] : other.terms_)
    if (!terms_.count(n)) worst = std::max(worst, c.cwiseAbs().maxCoeff());
  return worst;
}

double TrigPoly::max_abs_coeff() const {
  double worst = 0;
  for (const auto& [n, c] : terms_) worst = std::max(worst, c.cwiseAbs().maxCoeff());
  return worst;
}

std::vector<Frequency> spectrum(const TrigPoly& f) {
  std::vector<Frequency> out;
  out.reserve(f.size());
  for (const auto& [n, c] : f.terms()) out.push_back(n);
  return out;
}

TrigPoly derivative(const TrigPoly& f, const MultiIndex& gamma) {
  if (gamma.dim() != f.dim()) throw Error(Errc::dimension_mismatch, "derivative: dimension mismatch");
  TrigPoly out = f.is_matrix() ? TrigPoly::matrix(f.dim(), f.m()) : TrigPoly::scalar(f.dim());
  for (const auto& [n, c] : f.terms()) {
    const cplx mult = derivative_multiplier(gamma, n);
    if (mult == cplx(0)) continue;
    out.add_term(n, CMatrix(c * mult));
  }
  return out;
}

TrigPoly convolve(const TrigPoly& f, const std::map<Frequency, cplx>& multiplier) {
  TrigPoly out = f.is_matrix() ? TrigPoly::matrix(f.dim(), f.m()) : TrigPoly::scalar(f.dim());
  for (const auto& [n, c] : f.terms()) {
    auto it = multiplier.find(n);
    if (it == multiplier.end()) continue;
    out.add_term(n, CMatrix(c * it->second));
  }
  return out;
}

TrigPoly multiply(const TrigPoly& f, const TrigPoly& g) {
  if (f.dim() != g.dim() || f.is_matrix() != g.is_matrix() || f.m() != g.m())
    throw Error(Errc::dimension_mismatch, "multiply: incompatible polynomials");
  TrigPoly out = f.is_matrix() ? TrigPoly::matrix(f.dim(), f.m()) : TrigPoly::scalar(f.dim());
  for (const auto& [n, a] : f.terms())
    for (const auto& [k, b] : g.terms()) out.add_term(add(n, k), CMatrix(a * b));
  return out;
}

// ---------------------------------------------------------------------------
// Quadrature rules

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Product of sizes, or nullopt past the cap.
std::optional<std::size_t> checked_product(const std::vector<std::size_t>& sizes, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t s : sizes) {
    if (s != 0 && total > cap / s) return std::nullopt;
    total *= s;
  }
  return total;
}

std::string product_string(const std::vector<std::size_t>& sizes) {
  Integer total = 1;
  for (std::size_t s : sizes) total *= static_cast<unsigned long>(s);
  return total.get_str();
}

Integer linf_distance(const Frequency& a, const Frequency& b) {
  Integer worst = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Integer d = abs(a[j] - b[j]);
    if (d > worst) worst = d;
  }
  return worst;
}

std::size_t auto_points(long max_coord) { return 4 * static_cast<std::size_t>(max_coord) + 1; }

}  // namespace

std::size_t QuadratureRule::num_points() const {
  std::size_t total = 1;
  for (std::size_t s : axis_points_) total *= s;
  return total;
}

const std::vector<long>& QuadratureRule::lift(const Frequency& n) const {
  auto it = lifted_freq_.find(n);
  if (it == lifted_freq_.end())
    throw Error(Errc::out_of_range, "frequency " + to_string(n) + " outside the quadrature support");
  return it->second;
}

QuadratureRule QuadratureRule::refined() const {
  QuadratureRule r = *this;
  for (auto& s : r.axis_points_) s *= 2;
  if (!checked_product(r.axis_points_, max_points_))
    throw TooLargeError("refined quadrature exceeds the point budget", product_string(r.axis_points_));
  return r;
}

QuadratureRule QuadratureRule::resolve(std::size_t dim, const std::vector<Frequency>& support,
                                       const GridSpec& spec) {
  if (dim == 0) throw Error(Errc::invalid_argument, "quadrature dimension must be >= 1");
  if (spec.phase_points < 3) throw Error(Errc::invalid_argument, "phase_points must be >= 3");
  for (const auto& n : support)
    if (n.size() != dim) throw Error(Errc::dimension_mismatch, "support frequency has wrong dimension");

  QuadratureRule rule;
  rule.dim_ = dim;
  rule.max_points_ = spec.max_points;

  Integer biggest = 0;
  for (const auto& n : support) biggest = std::max(biggest, max_abs(n));

  // Tensor grid.
  if (biggest.fits_slong_p() && biggest.get_si() < std::numeric_limits<int>::max() / 4) {
    const long top = biggest.get_si();
    const std::size_t per_axis = spec.points_per_axis ? spec.points_per_axis : auto_points(top);
    std::vector<std::size_t> sizes(dim, per_axis);
    if (checked_product(sizes, spec.max_points)) {
      rule.axis_points_ = sizes;
      rule.clusters_ = support.empty() ? 0 : 1;
      for (const auto& n : support) {
        std::vector<long> v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = n[j].get_si();
        rule.lifted_freq_.emplace(n, std::move(v));
      }
      return rule;
    }
  }

  // Lifted rule. Index support.size() is a virtual origin point.
  std::vector<Frequency> pts(support.begin(), support.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t count = pts.size();
  pts.push_back(Frequency(dim, Integer(0)));
  UnionFind uf(count + 1);
  const Integer width = kClusterWidth;
  for (std::size_t i = 0; i <= count; ++i)
    for (std::size_t k = i + 1; k <= count; ++k)
      if (linf_distance(pts[i], pts[k]) <= width) uf.unite(i, k);

  const std::size_t origin_root = uf.find(count);
  bool has_base = false;
  for (std::size_t i = 0; i < count; ++i)
    if (uf.find(i) == origin_root) has_base = true;

  // Clusters in order of their smallest member; the first member is the
  // center since pts is sorted.
  std::vector<std::size_t> roots;
  std::map<std::size_t, Frequency> center;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = uf.find(i);
    if (center.count(r)) continue;
    roots.push_back(r);
    center.emplace(r, r == origin_root ? Frequency(dim, Integer(0)) : pts[i]);
  }

  // A far cluster sitting at the negation of an earlier one shares its phase
  // with the opposite sign, so conjugate pairs (real polynomials) keep their
  // dependence. Without a base cluster the phase of the first cluster is
  // fixed at 0 when it has no mirror (the integral is invariant under a
  // global phase rotation).
  std::map<std::size_t, std::pair<long, long>> phase;  // root -> (axis or -1, sign)
  long next_axis = 0;
  for (std::size_t r : roots) {
    if (r == origin_root || phase.count(r)) continue;
    const Frequency mirror_center = negate(center.at(r));
    std::optional<std::size_t> mirror;
    for (std::size_t i = 0; i < count && !mirror; ++i) {
      const std::size_t r2 = uf.find(i);
      if (r2 != r && r2 != origin_root && !phase.count(r2) && linf_distance(pts[i], mirror_center) <= width)
        mirror = r2;
    }
    if (!has_base && next_axis == 0 && !mirror && phase.empty()) {
      phase[r] = {-1, 1};
      continue;
    }
    phase[r] = {next_axis, 1};
    if (mirror) {
      phase[*mirror] = {next_axis, -1};
      center[*mirror] = mirror_center;
    }
    ++next_axis;
  }

  rule.lifted_ = true;
  rule.clusters_ = roots.size();
  rule.phase_axes_ = static_cast<std::size_t>(next_axis);
  long top = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = uf.find(i);
    Frequency off = sub(pts[i], center.at(r));
    std::vector<long> v(dim + rule.phase_axes_, 0);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!off[j].fits_slong_p() || abs(off[j]) > Integer(std::numeric_limits<int>::max() / 4))
        throw TooLargeError("cluster offsets too large for the lifted quadrature", "unbounded");
      v[j] = off[j].get_si();
      top = std::max(top, std::abs(v[j]));
    }
    if (r != origin_root && phase.at(r).first >= 0)
      v[dim + static_cast<std::size_t>(phase.at(r).first)] = phase.at(r).second;
    rule.lifted_freq_.emplace(pts[i], std::move(v));
  }
  const std::size_t per_axis = spec.points_per_axis ? spec.points_per_axis : auto_points(top);
  rule.axis_points_.assign(dim, per_axis);
  rule.axis_points_.insert(rule.axis_points_.end(), rule.phase_axes_, spec.phase_points);
  if (!checked_product(rule.axis_points_, spec.max_points))
    throw TooLargeError("lifted quadrature exceeds the point budget", product_string(rule.axis_points_));
  return rule;
}

// ---------------------------------------------------------------------------
// Grid evaluation

namespace {

std::mutex fftw_planner_mutex;

// e^{i v x_j} with x_j = -pi + 2 pi j / N.
cplx node_phase(long v, std::size_t j, std::size_t n) {
  const long nn = static_cast<long>(n);
  long r = (v % nn) * static_cast<long>(j) % nn;
  if (r < 0) r += nn;
  const double angle = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(n);
  const cplx z = std::polar(1.0, angle);
  return (v % 2 == 0) ? z : -z;
}

struct LiftedTerm {
  const std::vector<long>* coords;
  cplx value;
};

class DirectEvaluator {
 public:
  DirectEvaluator(const std::vector<std::size_t>& sizes) : sizes_(sizes), stride_(sizes.size() + 1, 1) {
    for (std::size_t a = sizes.size(); a-- > 0;) stride_[a] = stride_[a + 1] * sizes[a];
  }

  // terms must be sorted lexicographically by coordinates.
  void run(const std::vector<LiftedTerm>& terms, cplx* out) const { rec(terms, 0, terms.size(), 0, out); }

 private:
  void rec(const std::vector<LiftedTerm>& terms, std::size_t lo, std::size_t hi, std::size_t axis,
           cplx* out) const {
    const auto& k = simd::active_kernels();
    const std::size_t n = sizes_[axis];
    if (axis + 1 == sizes_.size()) {
      std::vector<cplx> row(n);
      for (std::size_t t = lo; t < hi; ++t) {
        const long v = (*terms[t].coords)[axis];
        for (std::size_t j = 0; j < n; ++j) row[j] = node_phase(v, j, n);
        k.axpy(out, row.data(), terms[t].value, n);
      }
      return;
    }
    const std::size_t block = stride_[axis + 1];
    std::vector<cplx> inner(block);
    std::size_t r0 = lo;
    while (r0 < hi) {
      const long v = (*terms[r0].coords)[axis];
      std::size_t r1 = r0;
      while (r1 < hi && (*terms[r1].coords)[axis] == v) ++r1;
      std::fill(inner.begin(), inner.end(), cplx(0));
      rec(terms, r0, r1, axis + 1, inner.data());
      for (std::size_t j = 0; j < n; ++j) k.axpy(out + j * block, inner.data(), node_phase(v, j, n), block);
      r0 = r1;
    }
  }

  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> stride_;
};

void evaluate_fft(const std::vector<LiftedTerm>& terms, const std::vector<std::size_t>& sizes, cplx* out) {
  std::size_t total = 1;
  for (std::size_t s : sizes) total *= s;
  std::fill(out, out + total, cplx(0));
  for (const auto& t : terms) {
    std::size_t idx = 0;
    long parity = 0;
    for (std::size_t a = 0; a < sizes.size(); ++a) {
      const long nn = static_cast<long>(sizes[a]);
      long r = (*t.coords)[a] % nn;
      if (r < 0) r += nn;
      idx = idx * sizes[a] + static_cast<std::size_t>(r);
      parity += (*t.coords)[a];
    }
    out[idx] += (parity % 2 == 0) ? t.value : -t.value;
  }
  std::vector<int> dims(sizes.begin(), sizes.end());
  auto* buf = reinterpret_cast<fftw_complex*>(out);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(fftw_planner_mutex);
  fftw_destroy_plan(plan);
}

}  // namespace

GridValues evaluate(const TrigPoly& f, const QuadratureRule& rule) {
  if (f.dim() != rule.dim()) throw Error(Errc::dimension_mismatch, "evaluate: dimension mismatch");
  GridValues g;
  g.points = rule.num_points();
  g.m = f.m();
  const std::size_t entries = g.m * g.m;
  g.values.assign(entries * g.points, cplx(0));
  if (f.empty()) return g;

  std::vector<std::pair<const std::vector<long>*, const CMatrix*>> lifted;
  lifted.reserve(f.size());
  for (const auto& [n, c] : f.terms()) lifted.emplace_back(&rule.lift(n), &c);
  std::sort(lifted.begin(), lifted.end(), [](const auto& a, const auto& b) { return *a.first < *b.first; });

  const bool dense = f.size() * 100 >= g.points;
  DirectEvaluator direct(rule.axis_points());
  for (std::size_t e = 0; e < entries; ++e) {
    const Eigen::Index row = static_cast<Eigen::Index>(e % g.m);
    const Eigen::Index col = static_cast<Eigen::Index>(e / g.m);
    std::vector<LiftedTerm> terms;
    terms.reserve(lifted.size());
    for (const auto& [coords, c] : lifted) {
      const cplx v = (*c)(row, col);
      if (v != cplx(0)) terms.push_back({coords, v});
    }
    cplx* out = g.values.data() + e * g.points;
    if (terms.empty()) continue;
    if (dense)
      evaluate_fft(terms, rule.axis_points(), out);
    else
      direct.run(terms, out);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Norms

namespace {

void check_exponent(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(Errc::invalid_exponent, "exponent p must be >= 1");
}

double power_mean(const std::vector<cplx>& v, std::size_t n, double p, double weight) {
  const auto& k = simd::active_kernels();
  if (p == 1.0) return weight * k.abs_sum(v.data(), n);
  if (p == 2.0) return std::sqrt(weight * k.norm_sum(v.data(), n));
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += std::pow(std::abs(v[i]), p);
  return std::pow(weight * s, 1.0 / p);
}

constexpr std::size_t kReduceChunk = 4096;

double trace_norm_sum(const GridValues& g) {
  const std::size_t chunks = (g.points + kReduceChunk - 1) / kReduceChunk;
  std::vector<double> partial(chunks, 0.0);
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t lo = c * kReduceChunk, hi = std::min(g.points, lo + kReduceChunk);
    const Eigen::Index m = static_cast<Eigen::Index>(g.m);
    CMatrix a(m, m);
    double s = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      for (Eigen::Index e = 0; e < m * m; ++e) a(e % m, e / m) = g.values[static_cast<std::size_t>(e) * g.points + i];
      s += trace_norm(a);
    }
    partial[c] = s;
  });
  double total = 0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace

double lp_norm(const TrigPoly& f, double p, const QuadratureRule& rule) {
  check_exponent(p);
  if (f.is_matrix()) throw Error(Errc::invalid_argument, "lp_norm needs scalar coefficients");
  const GridValues g = evaluate(f, rule);
  return power_mean(g.values, g.points, p, rule.weight());
}

double lp_norm(const TrigPoly& f, double p, const GridSpec& grid) {
  check_exponent(p);
  return lp_norm(f, p, QuadratureRule::resolve(f.dim(), spectrum(f), grid));
}

double trace_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.size() == 1) return std::abs(a(0, 0));
  // Square roots of the Gram eigenvalues are accurate to ~1e-13 relative
  // when the spectrum stays above 1e-6 of its top; otherwise use the SVD.
  const CMatrix gram = a.cols() <= a.rows() ? CMatrix(a.adjoint() * a) : CMatrix(a * a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() == Eigen::Success) {
    const Eigen::VectorXd& ev = es.eigenvalues();
    if (ev(0) > 1e-6 * ev(ev.size() - 1)) return ev.cwiseSqrt().sum();
  }
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues().sum();
}

double s1_l1_norm(const TrigPoly& g, const QuadratureRule& rule) {
  const GridValues v = evaluate(g, rule);
  if (v.m == 1) return rule.weight() * simd::active_kernels().abs_sum(v.values.data(), v.points);
  return rule.weight() * trace_norm_sum(v);
}

double s1_l1_norm(const TrigPoly& g, const GridSpec& grid) {
  return s1_l1_norm(g, QuadratureRule::resolve(g.dim(), spectrum(g), grid));
}

double sobolev_norm(const TrigPoly& f, const Smoothness& s, double p, const GridSpec& grid) {
  check_exponent(p);
  if (s.dim() != f.dim()) throw Error(Errc::dimension_mismatch, "sobolev_norm: dimension mismatch");
  if (f.is_matrix() && p != 1.0)
    throw Error(Errc::invalid_exponent, "matrix Sobolev norm is defined for p = 1 only");
  const QuadratureRule rule = QuadratureRule::resolve(f.dim(), spectrum(f), grid);
  double total = 0;
  for (const auto& gamma : s) {
    const TrigPoly d = derivative(f, gamma);
    const double v = f.is_matrix() ? s1_l1_norm(d, rule) : lp_norm(d, p, rule);
    total += std::pow(v, p);
  }
  return std::pow(total, 1.0 / p);
}

double paley_l2_norm(const TrigPoly& f, const Smoothness& s, const std::vector<Frequency>& lambda) {
  if (s.dim() != f.dim()) throw Error(Errc::dimension_mismatch, "paley_l2_norm: dimension mismatch");
  std::vector<Frequency> uniq(lambda);
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  double total = 0;
  for (const auto& n : uniq) {
    auto it = f.terms().find(n);
    if (it == f.terms().end()) continue;
    total += to_double(q_s_exact(s, n)) * it->second.squaredNorm();
  }
  return std::sqrt(total);
}

NormEstimate lp_norm_converged(const TrigPoly& f, double p, const GridSpec& grid, double rel_tol,
                               std::size_t max_refinements) {
  check_exponent(p);
  QuadratureRule rule = QuadratureRule::resolve(f.dim(), spectrum(f), grid);
  NormEstimate est;
  est.lifted = rule.lifted();
  est.value = lp_norm(f, p, rule);
  est.previous = est.value;
  for (std::size_t r = 0; r < max_refinements; ++r) {
    try {
      rule = rule.refined();
    } catch (const TooLargeError&) {
      break;
    }
    est.previous = est.value;
    est.value = lp_norm(f, p, rule);
    est.refinements = r + 1;
    const double scale = std::max(std::abs(est.value), std::numeric_limits<double>::min());
    est.rel_change = std::abs(est.value - est.previous) / scale;
    if (est.rel_change < rel_tol) {
      est.converged = true;
      break;
    }
  }
  if (est.refinements == 0) est.rel_change = std::numeric_limits<double>::infinity();
  return est;
}

TrigPoly random_trigpoly(std::size_t dim, const std::vector<Frequency>& support, std::size_t m, bool matrix,
                         std::uint64_t seed) {
  if (!matrix && m != 1) throw Error(Errc::invalid_argument, "scalar polynomials have m = 1");
  TrigPoly f = matrix ? TrigPoly::matrix(dim, m) : TrigPoly::scalar(dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const Eigen::Index mm = static_cast<Eigen::Index>(m);
  for (const auto& n : support) {
    CMatrix c(mm, mm);
    for (Eigen::Index j = 0; j < mm; ++j)
      for (Eigen::Index i = 0; i < mm; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        c(i, j) = cplx(re, im);
      }
    f.add_term(n, c);
  }
  return f;
}

std::vector<Frequency> frequency_box(std::size_t dim, long lo, long hi) {
  if (dim == 0) throw Error(Errc::invalid_argument, "box dimension must be >= 1");
  std::vector<Frequency> out;
  if (hi < lo) return out;
  std::vector<long> cur(dim, lo);
  for (;;) {
    Frequency n(dim);
    for (std::size_t j = 0; j < dim; ++j) n[j] = cur[j];
    out.push_back(std::move(n));
    std::size_t j = dim;
    while (j > 0 && cur[j - 1] == hi) {
      cur[j - 1] = lo;
      --j;
    }
    if (j == 0) break;
    ++cur[j - 1];
  }
  return out;
}

}  // namespace paley
