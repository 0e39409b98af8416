#include "paley/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "paley/json_io.hpp"

namespace paley::cli {

namespace {

struct Flags {
  std::string input = "-";
  std::string output;
  std::size_t K = 4;
  double t0 = 100;
  double q = 10;
  std::size_t grid_n = 0;
  std::uint64_t seed = 1;
  std::size_t count = 0;  // 0: the subcommand's default
  std::vector<std::size_t> matrix_dims;
  std::size_t cap = 10'000'000;
  double eps = 0.1;
  long D = 0;
};

json read_input(const Flags& f, std::istream& in) {
  std::stringstream buf;
  if (f.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(f.input);
    if (!file) throw Error(Errc::parse, "cannot read " + f.input);
    buf << file.rdbuf();
  }
  return parse_json(buf.str());
}

// A bare array, {"smoothness": [...]} or {"saturate": [generators]}.
Smoothness smoothness_input(const json& j) {
  if (j.is_object() && j.contains("saturate")) {
    const json& gens = j["saturate"];
    if (!gens.is_array() || gens.empty()) throw Error(Errc::parse, "saturate expects a nonempty array");
    std::vector<MultiIndex> g;
    for (const auto& v : gens) g.push_back(multiindex_from_json(v));
    return saturate(g);
  }
  return smoothness_from_json(j.is_object() && j.contains("smoothness") ? j["smoothness"] : j);
}

GridSpec grid_of(const Flags& f) {
  GridSpec g = PaleySampler{}.grid;
  g.points_per_axis = f.grid_n;
  return g;
}

LacunaryPlan plan_of(const Smoothness& s, const Flags& f) {
  const auto w = find_witness(s);
  if (!w) throw Error(Errc::no_witness, "the smoothness does not have Property (O)");
  BuildOptions opt;
  opt.bk_cap = f.cap;
  return build_sequence(s, *w, f.K, f.t0, f.q, opt);
}

std::pair<json, std::string> run(const std::string& cmd, const Flags& f, std::istream& in) {
  const json input = read_input(f, in);

  if (cmd == "check-smoothness") {
    if (!input.is_array()) throw Error(Errc::parse, "candidate must be an array of integer arrays");
    std::vector<MultiIndex> cand;
    for (const auto& g : input) cand.push_back(multiindex_from_json(g));
    const bool ok = is_smoothness(cand);
    json j{{"is_smoothness", ok}, {"size", cand.size()}};
    if (ok) j["dim"] = cand.front().dim();
    return {j, ok ? "smoothness" : "not a smoothness"};
  }

  if (cmd == "check-property-o") {
    const Smoothness s = smoothness_input(input);
    const auto w = find_witness(s);
    if (!w) throw Error(Errc::no_witness, "the smoothness does not have Property (O)");
    return {to_json(*w), "Property (O) holds"};
  }

  if (cmd == "build-sequence") {
    const LacunaryPlan plan = plan_of(smoothness_input(input), f);
    return {to_json(plan), "plan " + plan_digest(plan) + ", condition (iv) " + std::string(verdict_name(plan.report.iv))};
  }

  if (cmd == "riesz-spectrum") {
    const LacunaryPlan plan = plan_of(smoothness_input(input), f);
    const bool a = verify_claim_a(plan.sequence, plan.K).holds;
    const bool b = verify_claim_b(plan.sequence, plan.K).holds;
    const auto sp = riesz_spectrum(plan.sequence, plan.K);
    const std::size_t shown = std::min(sp.size(), f.count ? f.count : std::size_t{10});
    json sample = json::array();
    for (std::size_t i = 0; i < shown; ++i) sample.push_back(to_json(sp[i]));
    json j{{"size", sp.size()}, {"claims", {{"a", a}, {"b", b}}}, {"sample_frequencies", sample},
           {"plan_digest", plan_digest(plan)}};
    return {j, std::to_string(sp.size()) + " spectrum points"};
  }

  if (cmd == "project") {
    if (!input.is_object() || !input.contains("f")) throw Error(Errc::parse, "project expects {smoothness, f}");
    const OperatorPipeline pipe = assemble_pipeline(plan_of(smoothness_input(input), f));
    const TrigPoly poly = trigpoly_from_json(input["f"]);
    const ProjectionResult r = coordinate_projection(convolve_riesz(operator_m(poly, pipe), pipe.riesz), pipe);
    json j{{"paley_projection", to_json(paley_project(poly, pipe.plan.sequence))},
           {"composite", to_json(r.value)},
           {"closed_form", to_json(composite_closed_form(poly, pipe))},
           {"outside_sigma_mass", r.outside_sigma_mass},
           {"outside_sigma_terms", r.outside_sigma_terms},
           {"plan_digest", plan_digest(pipe.plan)}};
    return {j, "projected " + std::to_string(poly.size()) + " terms"};
  }

  if (cmd == "estimate-paley") {
    const Smoothness s = smoothness_input(input);
    const LacunaryPlan plan = plan_of(s, f);
    PaleySampler sampler;
    sampler.count = f.count ? f.count : 500;
    sampler.seed = f.seed;
    if (!f.matrix_dims.empty()) sampler.dims = f.matrix_dims;
    sampler.grid = grid_of(f);
    const PaleyEstimate e = estimate_paley_constant(s, plan.sequence, sampler);
    json j = to_json(e);
    j["count"] = sampler.count;
    j["m"] = sampler.dims;
    j["seed"] = sampler.seed;
    j["plan_digest"] = plan_digest(plan);
    return {j, "sup ratio " + std::to_string(e.sup_ratio)};
  }

  if (cmd == "cr-norm") {
    CrOptions opt;
    opt.seed = f.seed;
    const CrResult r = cr_norm(matrix_sequence_from_json(input), opt);
    return {to_json(r), "C+R norm " + std::to_string(r.value)};
  }

  if (cmd == "techprop") {
    const Smoothness s = smoothness_input(input);
    json j = json::object();
    if (input.is_object() && input.contains("m") && input.contains("n"))
      j["values"] = to_json(techprop_quantities(s, frequency_from_json(input["m"]), frequency_from_json(input["n"])));
    if (f.D > 0) {
      RhoSampler sampler;
      sampler.seed = f.seed;
      j["rho_estimate"] = to_json(estimate_rho_de(s, f.D, f.eps, sampler));
      j["D"] = f.D;
      j["eps"] = f.eps;
    }
    if (j.empty()) throw Error(Errc::invalid_argument, "techprop needs m and n in the input or --D");
    return {j, "techprop"};
  }

  // run-all
  ConstructionConfig config;
  config.K = f.K;
  config.t0 = f.t0;
  config.q = f.q;
  config.bk_cap = f.cap;
  config.seed = f.seed;
  if (f.count) config.paley_count = f.count;
  if (!f.matrix_dims.empty()) config.matrix_dims = f.matrix_dims;
  config.grid = grid_of(f);
  const ConstructionReport r = run_construction(smoothness_input(input), config);
  return {to_json(r), "construction complete, plan " + r.plan_digest};
}

void emit(const json& j, const Flags& f, std::ostream& out) {
  const std::string text = canonical_dump(j, 2) + "\n";
  if (f.output.empty() || f.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(f.output);
  if (!file) throw Error(Errc::invalid_argument, "cannot write " + f.output);
  file << text;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paley projections on anisotropic Sobolev spaces", "paley"};
  app.require_subcommand(1, 1);
  Flags f;

  struct Sub {
    const char* name;
    const char* help;
    bool plan;   // --K --t0 --q --cap
    bool paley;  // --seed --count --matrix-dim --grid-n
  };
  const Sub subs[] = {
      {"check-smoothness", "Check that a set of multi-indices is a smoothness", false, false},
      {"check-property-o", "Find a Property (O) witness", false, false},
      {"build-sequence", "Build the lacunary sequence", true, false},
      {"riesz-spectrum", "Riesz product spectrum and Claims A and B", true, false},
      {"project", "Apply the projection operators to a polynomial", true, false},
      {"estimate-paley", "Empirical Paley constant", true, true},
      {"cr-norm", "C+R norm of a matrix sequence", false, false},
      {"techprop", "Technical proposition quantities", false, false},
      {"run-all", "Run the full construction", true, true},
  };
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("-i,--input", f.input, "JSON input file, - for stdin")->capture_default_str();
    sc->add_option("-o,--output", f.output, "JSON output file (default stdout)");
    if (s.plan) {
      sc->add_option("--K", f.K, "sequence length")->capture_default_str()->check(CLI::Range(1, 20));
      sc->add_option("--t0", f.t0, "initial scale")->capture_default_str()->check(CLI::PositiveNumber);
      sc->add_option("--q", f.q, "scale ratio")->capture_default_str()->check(CLI::PositiveNumber);
      sc->add_option("--cap", f.cap, "ball enumeration cap")->capture_default_str()->check(CLI::PositiveNumber);
    }
    if (s.paley) {
      sc->add_option("--grid-n", f.grid_n, "points per axis (0: automatic)")->capture_default_str();
      sc->add_option("--matrix-dim", f.matrix_dims, "matrix sizes")->check(CLI::Range(1, 64));
    }
    if (s.paley || std::string(s.name) == "cr-norm" || std::string(s.name) == "techprop")
      sc->add_option("--seed", f.seed, "random seed")->capture_default_str();
    if (s.paley || std::string(s.name) == "riesz-spectrum")
      sc->add_option("--count", f.count, "samples (estimate-paley, run-all) or listed frequencies")
          ->check(CLI::PositiveNumber);
    if (std::string(s.name) == "techprop") {
      sc->add_option("--eps", f.eps, "epsilon of the rho search")->capture_default_str()->check(CLI::PositiveNumber);
      sc->add_option("--D", f.D, "ball radius of the rho search")->check(CLI::PositiveNumber);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << canonical_dump(json{{"error", "usage"}, {"message", e.what()}}, 2) << "\n";
    err << "usage error: " << e.what() << "\n";
    return kValidation;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    auto [j, summary] = run(cmd, f, in);
    emit(j, f, out);
    err << cmd << ": " << summary << "\n";
    return kOk;
  } catch (const StageFailure& e) {
    out << canonical_dump(json{{"failure", std::string(errc_name(e.code()))}, {"stage", e.stage()}, {"message", e.what()}}, 2)
        << "\n";
    err << cmd << ": failed at " << e.stage() << ": " << e.what() << "\n";
    return is_validation_error(e.code()) ? kValidation : kDomain;
  } catch (const Error& e) {
    const bool validation = is_validation_error(e.code());
    out << canonical_dump(json{{validation ? "error" : "failure", std::string(errc_name(e.code()))}, {"message", e.what()}}, 2)
        << "\n";
    err << cmd << ": " << e.what() << "\n";
    return validation ? kValidation : kDomain;
  } catch (const std::exception& e) {
    out << canonical_dump(json{{"error", "internal"}, {"message", e.what()}}, 2) << "\n";
    err << cmd << ": internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace paley::cli
