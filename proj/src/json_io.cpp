#include "paley/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace paley {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::parse, what); }

void dump_into(const json& j, int indent, int depth, std::string& out) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {  // std::map order: keys sorted
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(k).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(v, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        dump_into(j[i], indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

double num(const json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

cplx entry_from_json(const json& e) {
  if (e.is_number()) return e.get<double>();
  if (e.is_array() && e.size() == 2) return {num(e[0], "real part"), num(e[1], "imaginary part")};
  if (e.is_object()) return {num(e.value("re", json(0.0)), "re"), num(e.value("im", json(0.0)), "im")};
  parse_fail("matrix entry must be a number, [re, im] or {re, im}");
}

CMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) parse_fail("matrix must be a nonempty array of rows");
  const auto m = static_cast<Eigen::Index>(rows.size());
  CMatrix a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m) parse_fail("matrix must be square");
    for (Eigen::Index c = 0; c < m; ++c) a(i, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  return a;
}

json matrix_to_json(const CMatrix& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back({a(i, c).real(), a(i, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string canonical_dump(const json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

json to_json(const Integer& v) {
  if (fits_int64(v)) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json to_json(const Rational& v) {
  Rational r = v;
  r.canonicalize();
  return json(r.get_str());
}

json to_json(const Frequency& n) {
  json a = json::array();
  for (const auto& c : n) a.push_back(to_json(c));
  return a;
}

json to_json(const std::vector<Frequency>& ns) {
  json a = json::array();
  for (const auto& n : ns) a.push_back(to_json(n));
  return a;
}

json to_json(const MultiIndex& g) { return json(g.components()); }

json to_json(const Smoothness& s) {
  json a = json::array();
  for (const auto& g : s) a.push_back(to_json(g));
  return a;
}

json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const PropertyOWitness& w) {
  json c = json::array();
  for (const auto& v : w.c) c.push_back(to_json(v));
  return json{{"alpha", to_json(w.alpha)}, {"beta", to_json(w.beta)}, {"c", c}, {"t_star", to_json(w.t_star)}};
}

json to_json(const ConditionReport& r) {
  json skipped = json::array();
  for (auto k : r.iv_skipped) skipped.push_back(k);
  return json{{"cond_i", r.cond_i},   {"ratio_ok", r.ratio_ok}, {"growth_ok", r.growth_ok},
              {"ell_hat", r.ell_hat}, {"ell_drift", r.ell_drift}, {"sum_iii", r.sum_iii},
              {"iii_met", r.iii_met}, {"sum_iv", r.sum_iv},     {"iv", std::string(verdict_name(r.iv))},
              {"iv_skipped", skipped}};
}

json to_json(const LacunaryPlan& plan) {
  json radii = json::array();
  for (const auto& r : plan.radii) radii.push_back(to_json(r));
  return json{{"smoothness", to_json(plan.s)},
              {"witness", to_json(plan.witness)},
              {"K", plan.K},
              {"t0", plan.t0},
              {"q", plan.q},
              {"sequence", to_json(plan.sequence)},
              {"doublings", plan.doublings},
              {"tau", to_json(plan.tau)},
              {"ell_hat", plan.ell_hat},
              {"ell_drift", plan.ell_drift},
              {"rho_hat", plan.rho_hat},
              {"radii", radii},
              {"report", to_json(plan.report)},
              {"digest", plan_digest(plan)}};
}

json to_json(const TrigPoly& f) {
  json terms = json::array();
  for (const auto& [n, c] : f.terms()) {
    json t{{"n", to_json(n)}};
    if (f.is_matrix()) {
      t["entries"] = matrix_to_json(c);
    } else {
      t["re"] = c(0, 0).real();
      t["im"] = c(0, 0).imag();
    }
    terms.push_back(t);
  }
  json j{{"dim", f.dim()}, {"kind", f.is_matrix() ? "matrix" : "scalar"}, {"terms", terms}};
  if (f.is_matrix()) j["m"] = f.m();
  return j;
}

json to_json(const PaleyEstimate& e) {
  json dims = json::array();
  for (const auto& d : e.per_dim)
    dims.push_back(json{{"m", d.m}, {"sup_ratio", d.sup_ratio}, {"argmax", d.argmax}, {"count", d.ratios.size()}});
  return json{{"sup_ratio", e.sup_ratio}, {"argmax_dim", e.argmax_dim}, {"argmax", e.argmax}, {"per_dim", dims}};
}

json to_json(const CrResult& r) {
  json y = json::array(), z = json::array();
  for (const auto& a : r.best.y) y.push_back(matrix_to_json(a));
  for (const auto& a : r.best.z) z.push_back(matrix_to_json(a));
  return json{{"value", r.value},
              {"converged", r.converged},
              {"restarts_used", r.restarts_used},
              {"decomposition", {{"y", y}, {"z", z}}}};
}

json to_json(const TechpropValues& v) { return json{{"q1", v.q1}, {"q2", v.q2}, {"q3", v.q3}}; }

json to_json(const RhoEstimate& r) {
  return json{{"rho", r.rho}, {"pairs_tested", r.pairs_tested}, {"sampled", r.sampled}, {"worst", to_json(r.worst)}};
}

json to_json(const ConstructionConfig& c) {
  return json{{"K", c.K},
              {"t0", c.t0},
              {"q", c.q},
              {"bk_cap", c.bk_cap},
              {"max_retries", c.max_retries},
              {"composite_samples", c.composite_samples},
              {"composite_box", c.composite_box},
              {"composite_terms", c.composite_terms},
              {"seed", c.seed},
              {"run_paley", c.run_paley},
              {"paley_count", c.paley_count},
              {"matrix_dims", c.matrix_dims},
              {"grid", {{"points_per_axis", c.grid.points_per_axis},
                        {"phase_points", c.grid.phase_points},
                        {"max_points", c.grid.max_points}}}};
}

json to_json(const ConstructionReport& r) {
  json timings = json::object();
  for (const auto& t : r.timings) timings[t.stage] = t.ms;
  return json{{"schema_version", r.schema_version},
              {"config", to_json(r.config)},
              {"smoothness", to_json(r.s)},
              {"witness", to_json(r.witness)},
              {"plan", to_json(r.plan)},
              {"plan_digest", r.plan_digest},
              {"retries", r.retries},
              {"conditions_met", r.conditions_met},
              {"claims", {{"a", r.claim_a}, {"b", r.claim_b}}},
              {"riesz_size", r.riesz_size},
              {"composite", {{"max_rel_error", r.composite_max_rel_error}, {"ok", r.composite_ok}}},
              {"rho_bounds", {{"abs", r.rho_abs}, {"lower", r.rho_lower}, {"upper", r.rho_upper}, {"ok", r.rho_bounds_ok}}},
              {"paley", r.paley ? to_json(*r.paley) : json(nullptr)},
              {"timings_ms", timings}};
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v != std::floor(v) || !std::isfinite(v)) parse_fail("expected an integer");
    return Integer(v);
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) parse_fail("malformed integer string");
    return v;
  }
  parse_fail("expected an integer");
}

Frequency frequency_from_json(const json& j) {
  if (!j.is_array() || j.empty()) parse_fail("frequency must be a nonempty array of integers");
  Frequency n;
  for (const auto& c : j) n.push_back(integer_from_json(c));
  return n;
}

MultiIndex multiindex_from_json(const json& j) {
  if (!j.is_array() || j.empty()) parse_fail("multi-index must be a nonempty array of integers");
  std::vector<unsigned> c;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() > 1'000'000)
      parse_fail("multi-index entries must be integers in [0, 10^6]");
    c.push_back(static_cast<unsigned>(v.get<long>()));
  }
  return MultiIndex(std::move(c));
}

Smoothness smoothness_from_json(const json& j) {
  if (!j.is_array() || j.empty()) parse_fail("smoothness must be a nonempty array of integer arrays");
  std::vector<MultiIndex> el;
  for (const auto& g : j) el.push_back(multiindex_from_json(g));
  return Smoothness::from_elements(std::move(el));
}

TrigPoly trigpoly_from_json(const json& j) {
  if (!j.is_object()) parse_fail("polynomial must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    parse_fail("polynomial needs a positive integer dim");
  const auto dim = static_cast<std::size_t>(j["dim"].get<long>());
  const std::string kind = j.value("kind", std::string("scalar"));
  if (kind != "scalar" && kind != "matrix") parse_fail("kind must be scalar or matrix");
  const json terms = j.value("terms", json::array());
  if (!terms.is_array()) parse_fail("terms must be an array");
  if (kind == "scalar") {
    TrigPoly f = TrigPoly::scalar(dim);
    for (const auto& t : terms) {
      if (!t.is_object() || !t.contains("n")) parse_fail("term needs n");
      const Frequency n = frequency_from_json(t["n"]);
      if (n.size() != dim) throw Error(Errc::dimension_mismatch, "term frequency has the wrong dimension");
      f.add_term(n, cplx(num(t.value("re", json(0.0)), "re"), num(t.value("im", json(0.0)), "im")));
    }
    return f;
  }
  if (!j.contains("m") || !j["m"].is_number_integer() || j["m"].get<long>() < 1)
    parse_fail("matrix polynomial needs a positive integer m");
  const auto m = static_cast<std::size_t>(j["m"].get<long>());
  TrigPoly f = TrigPoly::matrix(dim, m);
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("n") || !t.contains("entries")) parse_fail("term needs n and entries");
    const Frequency n = frequency_from_json(t["n"]);
    if (n.size() != dim) throw Error(Errc::dimension_mismatch, "term frequency has the wrong dimension");
    const CMatrix a = matrix_from_json(t["entries"]);
    if (static_cast<std::size_t>(a.rows()) != m) throw Error(Errc::dimension_mismatch, "term matrix has the wrong size");
    f.add_term(n, a);
  }
  return f;
}

MatrixSequence matrix_sequence_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("terms") ? j["terms"] : j;
  if (!arr.is_array() || arr.empty()) parse_fail("matrix sequence must be a nonempty array of matrices");
  std::vector<CMatrix> t;
  for (const auto& m : arr) t.push_back(m.is_number() || (m.is_array() && m.size() == 2 && m[0].is_number())
                                            ? CMatrix::Constant(1, 1, entry_from_json(m))
                                            : matrix_from_json(m));
  return MatrixSequence(std::move(t));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace paley
