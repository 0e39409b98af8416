// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run every criterion
//   acceptance c3 c9      run the named ones
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paley/cr_norm.hpp"
#include "paley/orchestrator.hpp"
#include "paley/rational_lp.hpp"

using namespace paley;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += " [failed: " + what + "]";
    }
  }
};

Smoothness reference() { return saturate({{2, 0}, {0, 1}}); }

// The plan the construction settles on for the reference smoothness.
const LacunaryPlan& reference_plan() {
  static const LacunaryPlan plan = [] {
    ConstructionConfig c;
    c.run_paley = false;
    c.composite_samples = 1;
    return run_construction(reference(), c).plan;
  }();
  return plan;
}

TrigPoly product_oracle(const std::vector<Frequency>& seq, std::size_t K) {
  const std::size_t d = seq.front().size();
  TrigPoly r = TrigPoly::character(Frequency(d, Integer(0)));
  for (std::size_t k = 0; k < K; ++k) {
    TrigPoly factor = TrigPoly::character(Frequency(d, Integer(0)));
    factor.add_term(seq[k], 0.5);
    factor.add_term(negate(seq[k]), 0.5);
    r = multiply(r, factor);
  }
  return r;
}

// Q_S(n) for n with positive coordinates.
double q_s(const Smoothness& s, const Frequency& n) {
  long double q = 0;
  for (const auto& g : s) {
    long double term = 1;
    for (std::size_t j = 0; j < n.size(); ++j) term *= std::pow(static_cast<long double>(to_double(n[j])), 2 * g[j]);
    q += term;
  }
  return static_cast<double>(q);
}

double coeff_l2(const TrigPoly& f) {
  double s = 0;
  for (const auto& [n, c] : f.terms()) s += c.squaredNorm();
  return std::sqrt(s);
}

MatrixSequence random_sequence(std::mt19937_64& rng, std::size_t L, std::size_t m) {
  std::normal_distribution<double> g;
  std::vector<CMatrix> t;
  for (std::size_t k = 0; k < L; ++k) {
    CMatrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (Eigen::Index e = 0; e < a.size(); ++e) a(e) = cplx(g(rng), g(rng));
    t.push_back(a);
  }
  return MatrixSequence(std::move(t));
}

std::vector<long> powers_of_three(std::size_t L) {
  std::vector<long> f;
  long v = 1;
  for (std::size_t k = 0; k < L; ++k, v *= 3) f.push_back(v);
  return f;
}

std::vector<Frequency> random_support(std::mt19937_64& rng, std::size_t count, long lo, long hi) {
  std::uniform_int_distribution<long> coord(lo, hi);
  std::vector<Frequency> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_frequency({coord(rng), coord(rng)}));
  return out;
}

void c1(Outcome& o) {
  const auto w = find_witness(reference());
  o.require(w.has_value() && verify_witness(reference(), *w), "reference witness");
  if (w) {
    const auto c = oracle::pair_direction_d2(reference(), w->alpha, w->beta);
    o.require(c && *c == w->c, "witness direction agrees with the Cramer oracle");
  }
  o.require(!find_witness(saturate({{1, 1}})), "saturate{(1,1)} has no witness");
  o.require(!find_witness(saturate({{0, 0}})), "saturate{(0,0)} has no witness");

  std::mt19937_64 rng(7);
  std::size_t found = 0, tried = 0, pairs = 0;
  while (found < 10 && tried < 10000) {
    ++tried;
    const Smoothness s = oracle::random_smoothness_d2(rng, 5, 1 + static_cast<int>(tried % 3));
    if (s.size() < 2 || oracle::has_property_o_d2(s)) continue;
    ++found;
    o.require(!find_witness(s), "random infeasible smoothness has no witness");
    for (const auto& [a, b] : candidate_pairs(s)) {
      ++pairs;
      const auto r = lp_solve(witness_lp(s, a, b));
      o.require(r.status == LpStatus::infeasible || r.optimum->value <= 0, "pair LP infeasible");
      o.require(!oracle::pair_direction_d2(s, a, b), "pair oracle infeasible");
    }
  }
  o.require(found == 10, "found 10 random infeasible smoothnesses");
  o.detail << "witness verified; " << found << " random infeasible smoothnesses, " << pairs << " pairs re-checked";
}

void c2(Outcome& o) {
  const std::size_t K = 5;
  const auto w = find_witness(reference());
  const auto plan = build_sequence(reference(), *w, K, 100, 10);
  const auto sp = riesz_spectrum(plan.sequence, K);
  o.require(sp.size() == 243, "3^5 spectrum points");
  o.require(verify_claim_a(plan.sequence, K).holds, "Claim A");
  o.require(verify_claim_b(plan.sequence, K).holds, "Claim B");
  const auto mu = riesz_coeffs(plan.sequence, K);
  const auto prod = product_oracle(plan.sequence, K);
  bool exact = prod.size() == mu.coeffs.size();
  for (const auto& [n, c] : mu.coeffs) exact = exact && prod.coeff(n) == cplx(c);
  o.require(exact, "product expansion matches coefficient-for-coefficient");
  o.detail << sp.size() << " points; claims hold; " << prod.size() << " coefficients match exactly";
}

void c3(Outcome& o) {
  const auto pipe = assemble_pipeline(reference_plan());
  const auto& lambda = pipe.plan.sequence;
  double worst = 0;
  bool support_ok = true;
  for (std::size_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(1000 + i);
    auto support = random_support(rng, 64, 1, 200);
    support.insert(support.end(), lambda.begin(), lambda.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const TrigPoly f = random_trigpoly(2, support, 1, false, 5000 + i);

    TrigPoly want = TrigPoly::scalar(2);
    for (std::size_t k = 0; k < lambda.size(); ++k)
      want.add_term(lambda[k], pipe.rho[k] * std::sqrt(q_s(pipe.plan.s, lambda[k])) * f.coeff(lambda[k]));
    const TrigPoly got = composite_apply(f, pipe);
    for (const auto& [n, c] : got.terms())
      support_ok = support_ok && std::find(lambda.begin(), lambda.end(), n) != lambda.end();
    worst = std::max(worst, coeff_l2(got - want) / coeff_l2(want));
  }
  o.require(support_ok, "output supported on Lambda");
  o.require(worst < 1e-9, "max relative error < 1e-9");
  o.detail << "200 samples, max relative error " << worst;
}

void c4(Outcome& o) {
  const auto pipe = assemble_pipeline(reference_plan());
  const double lo = 0.5 * pipe.plan.rho_hat * (1 + pipe.plan.ell_hat);
  const double hi = 0.5 * (1 + pipe.plan.ell_hat);
  double amin = 1e300, amax = 0;
  for (const cplx r : pipe.rho) {
    const double a = std::abs(r);
    amin = std::min(amin, a);
    amax = std::max(amax, a);
    o.require(a >= lo - 1e-12 && a <= hi + 1e-12, "bounds for every k");
  }
  o.require(!pipe.rho.empty(), "nonempty plan");
  o.detail << "bounds [" << lo << ", " << hi << "], |rho_k| in [" << amin << ", " << amax << "]";
}

void c5(Outcome& o) {
  std::mt19937_64 rng(5);
  double parseval = 0;
  for (int t = 0; t < 50; ++t) {
    const auto f = random_trigpoly(2, random_support(rng, 25, -12, 12), 1, false, 300 + t);
    const double want = std::pow(coeff_l2(f), 2);
    parseval = std::max(parseval, std::abs(std::pow(lp_norm(f, 2), 2) - want) / want);
  }
  o.require(parseval < 1e-10, "Parseval");

  double doubling = 0;
  for (int t = 0; t < 5; ++t) {
    const auto f = random_trigpoly(2, random_support(rng, 8, -3, 3), 1, false, 400 + t);
    const auto est = lp_norm_converged(f, 1, GridSpec{0, 16, std::size_t{1} << 24}, 1e-8, 8);
    o.require(est.converged, "L1 grid doubling converged");
    doubling = std::max(doubling, est.rel_change);
  }
  o.require(doubling < 1e-8, "L1 doubling change < 1e-8");

  double bump = 0;
  for (const auto& n : {make_frequency({1, 0}), make_frequency({3, 7}), make_frequency({-40, 25})}) {
    TrigPoly f = TrigPoly::character(Frequency(2, Integer(0)));
    f.add_term(n, 0.5);
    f.add_term(negate(n), 0.5);
    bump = std::max(bump, std::abs(lp_norm(f, 1) - 1));
  }
  o.require(bump < 1e-10, "||1 + cos<x,n>||_1 = 1");
  o.detail << "Parseval " << parseval << ", L1 doubling " << doubling << ", bump " << bump;
}

void c6(Outcome& o) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> len(1, 16), dim(1, 8);
  double scalar = 0, single = 0, homog = 0, triangle = -1e300;
  for (int t = 0; t < 100; ++t) {
    const auto xs = random_sequence(rng, len(rng), 1);
    double l2 = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) l2 += std::norm(xs[k](0, 0));
    scalar = std::max(scalar, std::abs(cr_norm(xs).value - std::sqrt(l2)));
  }
  for (int t = 0; t < 10; ++t) {
    const auto xs = random_sequence(rng, 1, dim(rng));
    single = std::max(single, std::abs(cr_norm(xs).value - trace_norm(xs[0])));
  }
  for (int t = 0; t < 10; ++t) {
    const auto a = random_sequence(rng, 4, 3);
    const auto b = random_sequence(rng, 4, 3);
    const cplx c(-1.5, 2.0);
    homog = std::max(homog, std::abs(cr_norm(a.scaled(c)).value - std::abs(c) * cr_norm(a).value));
    triangle = std::max(triangle, cr_norm(a + b).value - cr_norm(a).value - cr_norm(b).value);
  }
  o.require(scalar < 1e-6, "scalar sequences equal l2");
  o.require(single < 1e-6, "single matrix equals trace norm");
  o.require(homog < 1e-6, "homogeneity");
  o.require(triangle < 1e-6, "triangle inequality");
  o.detail << "scalar " << scalar << ", single " << single << ", homogeneity " << homog << ", triangle excess "
           << triangle;
}

void c7(Outcome& o) {
  const auto& plan = reference_plan();
  PaleySampler sampler;
  sampler.count = 500;
  sampler.dims = {1, 2, 4, 8};
  const auto est = estimate_paley_constant(plan.s, plan.sequence, sampler);
  double m1 = 0, best = 0;
  for (const auto& r : est.per_dim) {
    if (r.m == 1) m1 = r.sup_ratio;
    best = std::max(best, r.sup_ratio);
    o.detail << "m=" << r.m << ": " << r.sup_ratio << "; ";
  }
  o.require(m1 > 0, "m=1 ratio positive");
  o.require(best < 2 * m1, "max over m < 2 x m=1 value");
  o.detail << "factor " << best / m1;
}

void c8(Outcome& o) {
  auto k_hat = [&](std::size_t count) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> mdist(1, 4), ldist(1, 8);
    std::vector<double> ratios;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t L = ldist(rng);
      const auto xs = random_sequence(rng, L, mdist(rng));
      ratios.push_back(khintchine_ratio(xs, powers_of_three(L)));
    }
    double k = 1;
    for (double r : ratios) k = std::max({k, r, 1 / r});
    return std::make_pair(k, ratios);
  };
  const auto [k100, r100] = k_hat(100);
  const auto [k200, r200] = k_hat(200);
  for (double r : r100) o.require(r >= 1 / k100 && r <= k100, "ratios inside [1/K, K]");
  o.require(std::abs(k200 / k100 - 1) <= 0.2, "K stable within 20% under doubling");
  o.detail << "K(100) " << k100 << ", K(200) " << k200;
}

void c9(Outcome& o) {
  const Smoothness s = Smoothness::from_elements({{0, 0}, {1, 0}, {0, 1}});
  TechpropValues prev{1e300, 1e300, 1e300};
  double q1_at_10 = 0;
  bool closed = true;
  for (long t : {10, 20, 40, 80}) {
    const auto v = techprop_quantities(s, make_frequency({t + 1, t + 1}), make_frequency({t, t}));
    o.require(v.q1 < prev.q1 && v.q2 < prev.q2 && v.q3 < prev.q3, "strict decrease at t=" + std::to_string(t));
    const double qn = 1.0 + 2.0 * t * t, qm = 1.0 + 2.0 * (t + 1) * (t + 1);
    closed = closed && std::abs(v.q1 - (qm - qn) / qm) < 1e-12;
    if (t == 10) q1_at_10 = v.q1;
    prev = v;
  }
  o.require(closed, "q1 = (Q(m) - Q(n)) / Q(m) on the diagonal");

  const double literal = std::abs(1.0 - 20001.0 / 20302.0);
  o.require(std::abs(q1_at_10 - literal) < 1e-12, "q1 at t=10 equals |1 - 20001/20302|");

  const auto a = estimate_rho_de(s, 2, 0.1);
  const auto b = estimate_rho_de(s, 2, 0.1);
  o.require(a.rho == b.rho && a.pairs_tested == b.pairs_tested && a.worst.q1 == b.worst.q1 &&
                a.worst.q2 == b.worst.q2 && a.worst.q3 == b.worst.q3,
            "rho estimate replay-stable");
  o.detail << "q1(t=10) " << q1_at_10 << " (closed form 42/243 = " << 42.0 / 243.0 << ", stated " << literal
           << "); rho " << a.rho << " over " << a.pairs_tested << " pairs";
}

void c10(Outcome& o) {
  const ConstructionConfig config;
  const auto report = run_construction(reference(), config);
  const auto r = replay(report, reference(), config);
  o.require(r.match, "replay matches");
  o.detail << "plan " << report.plan_digest << ", " << r.differences.size() << " differences";
  for (const auto& d : r.differences) o.detail << " " << d;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {"c1", "Property (O) oracle suite", c1},   {"c2", "Riesz brute force", c2},
      {"c3", "composite identity", c3},          {"c4", "rho_k bounds", c4},
      {"c5", "quadrature correctness", c5},      {"c6", "C+R scalar oracle", c6},
      {"c7", "Paley-constant stability", c7},    {"c8", "Khintchine-ratio window", c8},
      {"c9", "technical proposition decay", c9}, {"c10", "end-to-end determinism", c10},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool ok = true;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures += std::string(" [exception: ") + e.what() + "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-4s %s  %s: %s%s (%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.str().c_str(),
                o.failures.c_str(), secs);
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
