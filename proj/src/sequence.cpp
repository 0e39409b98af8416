#include "paley/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "paley/error.hpp"

namespace paley {

namespace {

const std::complex<double> kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

Integer min_coord(const Frequency& n) { return *std::min_element(n.begin(), n.end()); }

Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

void check_sequence(const std::vector<Frequency>& sequence) {
  if (sequence.empty()) throw Error(Errc::empty_plan, "sequence is empty");
  for (const auto& n : sequence)
    if (n.size() != sequence.front().size()) throw Error(Errc::dimension_mismatch, "sequence of mixed dimension");
}

// |sigma_alpha(-m) + tau ell sigma_beta(-m)| / Q_S(m)^{1/2}.
double iv_term(const Smoothness& s, const MultiIndex& alpha, const MultiIndex& beta, std::complex<double> tau_ell,
               const Frequency& m) {
  std::vector<double> x(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) x[j] = -to_double(m[j]);
  const double q = q_s_eval(s, x);
  if (q > 0 && std::isfinite(q)) {
    const auto a = symbol_eval(alpha, x), b = symbol_eval(beta, x);
    if (std::isfinite(std::abs(a)) && std::isfinite(std::abs(b))) return std::abs(a + tau_ell * b) / std::sqrt(q);
  }
  const Frequency neg = negate(m);
  return std::abs(normalized_symbol(alpha, s, neg) + tau_ell * normalized_symbol(beta, s, neg));
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::met: return "met";
    case Verdict::violated: return "violated";
    case Verdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::complex<double> compute_tau(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.dim() != beta.dim()) throw Error(Errc::dimension_mismatch, "compute_tau: dimension mismatch");
  const long diff = static_cast<long>(alpha.order()) - static_cast<long>(beta.order());
  if (diff % 2 == 0) throw Error(Errc::parity, "|alpha| and |beta| have the same parity");
  return kQuarter[((diff % 4) + 4) % 4];
}

std::complex<double> normalized_symbol(const MultiIndex& gamma, const Smoothness& s, const Frequency& n) {
  const LatticeSymbol sym = lattice_symbol(gamma, n);
  const double mag = normalized_symbol_abs(gamma, s, n);
  const double sign = sym.value < 0 ? -1.0 : 1.0;
  return kQuarter[sym.quarter_turns % 4] * (sign * mag);
}

EllEstimate estimate_ell(const MultiIndex& alpha, const MultiIndex& beta, const std::vector<Frequency>& sequence) {
  check_sequence(sequence);
  auto ratio = [&](const Frequency& n) {
    const Integer a = abs(lattice_symbol(alpha, n).value);
    const Integer b = abs(lattice_symbol(beta, n).value);
    if (a == 0 || b == 0) throw Error(Errc::singular_point, "symbol vanishes at " + to_string(n));
    return BigFloat(a) / BigFloat(b);
  };
  EllEstimate e;
  const BigFloat last = ratio(sequence.back());
  e.ell = last.to_double();
  if (sequence.size() >= 2) {
    const BigFloat prev = ratio(sequence[sequence.size() - 2]);
    e.drift = ((last - prev).abs() / last).to_double();
  }
  return e;
}

Integer bk_radius(const std::vector<Frequency>& sequence, std::size_t k) {
  if (k < 1 || k > sequence.size()) throw Error(Errc::out_of_range, "ball index out of range");
  Integer d = 0;
  for (std::size_t r = 0; r + 1 < k; ++r) d += l1_norm(sequence[r]);
  return d;
}

Integer l1_ball_size(std::size_t d, const Integer& r) {
  if (r < 0) return 0;
  // sum_i 2^i C(d, i) C(r, i)
  Integer total = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    Integer term = binomial(Integer(static_cast<unsigned long>(d)), i) * binomial(r, i);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), i);
    total += term;
  }
  return total;
}

void bk_visit(const std::vector<Frequency>& sequence, std::size_t k, std::size_t cap,
              const std::function<void(const Frequency&)>& visit) {
  check_sequence(sequence);
  const Integer radius = bk_radius(sequence, k);
  const Frequency& center = sequence[k - 1];
  const std::size_t d = center.size();
  const Integer count = l1_ball_size(d, radius);
  if (count > Integer(static_cast<unsigned long>(cap)))
    throw TooLargeError("B_" + std::to_string(k) + " has " + count.get_str() + " points, above the cap",
                        count.get_str());
  const long r = radius.get_si();
  std::vector<long> delta(d, 0);
  Frequency m(d);
  // Depth-first over delta(0), delta(1), ... with the remaining budget;
  // increasing delta at every level gives lexicographic order.
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long budget) {
    if (j == d) {
      for (std::size_t i = 0; i < d; ++i) m[i] = center[i] + delta[i];
      visit(m);
      return;
    }
    for (long v = -budget; v <= budget; ++v) {
      delta[j] = v;
      rec(j + 1, budget - std::labs(v));
    }
  };
  rec(0, r);
}

std::vector<Frequency> bk_enumerate(const std::vector<Frequency>& sequence, std::size_t k, std::size_t cap) {
  std::vector<Frequency> out;
  bk_visit(sequence, k, cap, [&](const Frequency& m) { out.push_back(m); });
  return out;
}

ConditionReport check_conditions(const Smoothness& s, const LacunaryPlan& plan, std::size_t cap, bool truncate) {
  const auto& seq = plan.sequence;
  check_sequence(seq);
  const auto& alpha = plan.witness.alpha;
  const auto& beta = plan.witness.beta;
  ConditionReport r;
  r.cond_i = true;
  r.ratio_ok = true;
  r.growth_ok = true;
  for (std::size_t k = 2; k <= seq.size(); ++k) {
    const Frequency& n = seq[k - 1];
    const Frequency& prev = seq[k - 2];
    if (!(bk_radius(seq, k) < min_coord(n))) r.cond_i = false;
    if (!(n[0] >= 3 * prev[0])) r.ratio_ok = false;
    if (!(min_coord(n) > min_coord(prev))) r.growth_ok = false;
  }
  const EllEstimate ell = estimate_ell(alpha, beta, seq);
  r.ell_hat = plan.ell_hat;
  r.ell_drift = ell.drift;

  for (const auto& n : seq)
    r.sum_iii += std::abs(normalized_symbol_abs(alpha, s, n) - plan.ell_hat * normalized_symbol_abs(beta, s, n));
  r.iii_met = r.sum_iii < 0.5;

  const std::complex<double> tau_ell = plan.tau * plan.ell_hat;
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    double partial = 0;
    try {
      bk_visit(seq, k, cap, [&](const Frequency& m) { partial += iv_term(s, alpha, beta, tau_ell, m); });
    } catch (const TooLargeError&) {
      if (!truncate) throw;
      r.iv_skipped.push_back(k);
      continue;
    }
    r.sum_iv += partial;
  }
  if (r.sum_iv >= 1.0)
    r.iv = Verdict::violated;
  else
    r.iv = r.iv_skipped.empty() ? Verdict::met : Verdict::undetermined;
  return r;
}

LacunaryPlan build_sequence(const Smoothness& s, const PropertyOWitness& witness, std::size_t K, double t0,
                            double q, const BuildOptions& options) {
  if (K == 0) throw Error(Errc::empty_plan, "K must be >= 1");
  if (!(t0 > 1.0) || !(q > 1.0) || !std::isfinite(t0) || !std::isfinite(q))
    throw Error(Errc::invalid_argument, "t0 and q must be finite and > 1");
  if (!verify_witness(s, witness)) throw Error(Errc::invalid_witness, "witness does not certify Property (O)");

  LacunaryPlan plan;
  plan.s = s;
  plan.witness = witness;
  plan.K = K;
  plan.t0 = t0;
  plan.q = q;
  const std::size_t d = s.dim();

  Integer radius = 0;
  BigFloat scale(1.0);
  const BigFloat big_q(q);
  for (std::size_t k = 1; k <= K; ++k) {
    BigFloat t = BigFloat(t0) * scale;
    scale = scale * big_q;
    unsigned doublings = 0;
    for (;;) {
      Frequency n(d);
      for (std::size_t j = 0; j < d; ++j) {
        n[j] = t.pow(witness.c[j]).round_to_integer();
        if (n[j] < 1) n[j] = 1;
      }
      bool ok = true;
      if (k >= 2) {
        const Frequency& prev = plan.sequence.back();
        ok = radius < min_coord(n) && n[0] >= 3 * prev[0] && min_coord(n) > min_coord(prev);
      }
      if (ok) {
        radius += l1_norm(n);
        plan.sequence.push_back(std::move(n));
        plan.doublings.push_back(doublings);
        break;
      }
      if (++doublings > options.max_doublings)
        throw Error(Errc::search_exhausted, "no admissible n_" + std::to_string(k) + " within the doubling limit");
      t = t * BigFloat(2.0);
    }
  }

  plan.tau = compute_tau(witness.alpha, witness.beta);
  const EllEstimate ell = estimate_ell(witness.alpha, witness.beta, plan.sequence);
  plan.ell_hat = ell.ell;
  plan.ell_drift = ell.drift;
  plan.rho_hat = std::numeric_limits<double>::infinity();
  for (const auto& n : plan.sequence)
    for (const MultiIndex* g : {&witness.alpha, &witness.beta})
      plan.rho_hat = std::min(plan.rho_hat, normalized_symbol_abs(*g, s, n));
  for (std::size_t k = 1; k <= K; ++k) plan.radii.push_back(bk_radius(plan.sequence, k));
  plan.report = check_conditions(s, plan, options.bk_cap, true);
  return plan;
}

TechpropValues techprop_quantities(const Smoothness& s, const Frequency& m, const Frequency& n) {
  const Integer qm = q_s_exact(s, m), qn = q_s_exact(s, n);
  if (qm == 0 || qn == 0) throw Error(Errc::singular_point, "Q_S vanishes at one of the arguments");
  TechpropValues v;
  const Rational ratio(qn, qm);
  v.q1 = std::abs(to_double(Rational(1) - ratio));
  double s2 = 0, s3 = 0;
  for (const auto& g : s) {
    const auto a = normalized_symbol(g, s, m), b = normalized_symbol(g, s, n);
    const double d2 = std::abs(a) - std::abs(b);
    s2 += d2 * d2;
    s3 += std::norm(a - b);
  }
  v.q2 = std::sqrt(s2);
  v.q3 = std::sqrt(s3);
  return v;
}

RhoEstimate estimate_rho_de(const Smoothness& s, long D, double eps, const RhoSampler& sampler) {
  if (D < 0) throw Error(Errc::invalid_argument, "D must be >= 0");
  if (!(eps > 0.0 && eps < 1.0)) throw Error(Errc::invalid_argument, "eps must lie in (0, 1)");
  if (sampler.window < 0) throw Error(Errc::invalid_argument, "window must be >= 0");
  const std::size_t d = s.dim();

  // Offsets of the l1 ball of radius D, in lexicographic order.
  std::vector<std::vector<long>> ball;
  {
    std::vector<long> delta(d, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t j, long budget) {
      if (j == d) {
        ball.push_back(delta);
        return;
      }
      for (long v = -budget; v <= budget; ++v) {
        delta[j] = v;
        rec(j + 1, budget - std::labs(v));
      }
    };
    rec(0, D);
  }
  const long side = 2 * (sampler.window + 1);  // choices per coordinate

  for (long rho = 2; rho <= (1L << 20); rho *= 2) {
    RhoEstimate est;
    est.rho = rho;
    bool pass = true;
    auto test_pair = [&](const std::vector<long>& n_raw, const std::vector<long>& delta) {
      Frequency n(d), m(d);
      for (std::size_t j = 0; j < d; ++j) {
        n[j] = n_raw[j];
        m[j] = n_raw[j] + delta[j];
      }
      ++est.pairs_tested;
      TechpropValues v;
      try {
        v = techprop_quantities(s, m, n);
      } catch (const Error& e) {
        if (e.code() != Errc::singular_point) throw;
        pass = false;
        return;
      }
      est.worst.q1 = std::max(est.worst.q1, v.q1);
      est.worst.q2 = std::max(est.worst.q2, v.q2);
      est.worst.q3 = std::max(est.worst.q3, v.q3);
      if (!(v.q1 < eps && v.q2 * v.q2 < eps * eps && v.q3 * v.q3 < eps * eps)) pass = false;
    };
    auto coord_of = [&](long idx) {
      // idx in [0, side): magnitudes rho..rho+window, both signs.
      const long mag = rho + idx / 2;
      return (idx % 2 == 0) ? mag : -mag;
    };

    Integer total = 1;
    for (std::size_t j = 0; j < d; ++j) total *= side;
    total *= static_cast<unsigned long>(ball.size());
    std::vector<long> n_raw(d);
    if (total <= Integer(static_cast<unsigned long>(sampler.exhaustive_cap))) {
      std::vector<long> idx(d, 0);
      for (bool more = true; more && pass;) {
        for (std::size_t j = 0; j < d; ++j) n_raw[j] = coord_of(idx[j]);
        for (const auto& delta : ball) {
          test_pair(n_raw, delta);
          if (!pass) break;
        }
        std::size_t j = d;
        while (j > 0 && idx[j - 1] == side - 1) idx[--j] = 0;
        if (j == 0)
          more = false;
        else
          ++idx[j - 1];
      }
    } else {
      est.sampled = true;
      std::mt19937_64 rng(sampler.seed ^ static_cast<std::uint64_t>(rho));
      std::uniform_int_distribution<long> pick_coord(0, side - 1);
      std::uniform_int_distribution<std::size_t> pick_delta(0, ball.size() - 1);
      for (std::size_t t = 0; t < sampler.samples && pass; ++t) {
        for (std::size_t j = 0; j < d; ++j) n_raw[j] = coord_of(pick_coord(rng));
        test_pair(n_raw, ball[pick_delta(rng)]);
      }
    }
    if (pass) return est;
  }
  throw Error(Errc::search_exhausted, "no rho <= 2^20 passes the technical bounds");
}

}  // namespace paley
