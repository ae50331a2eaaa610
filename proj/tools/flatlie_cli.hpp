#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flatlie/catalog.hpp"
#include "flatlie/report.hpp"

namespace flatlie::cli {

enum ExitCode : int { kOk = 0, kConditionNotSatisfied = 1, kUsageError = 2 };

struct Options {
  bool json = false;
  std::string input = "-";
  std::string example;
  std::string v0;
  double t_max = 0.0;
  double rel_tol = 1e-10;
  std::string csv;
  std::uint64_t seed = 42;
  std::size_t sweep = 0;
  std::vector<std::string> positional;
};

/// Indented "key: value" rendering of a report; verdicts read the same as in JSON.
inline void render_text(const Json& j, std::ostream& os, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_ok = [](const Json& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& x : v)
      if (x.is_object()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (inline_ok(v)) {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      } else {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      os << pad << "-\n";
      render_text(v, os, indent + 2);
    }
  } else {
    os << pad << j.dump() << '\n';
  }
}

inline void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.json)
    out << j.dump(2) << '\n';
  else
    render_text(j, out);
}

inline MetricLieAlgebra load_input(const Options& o, std::istream& in) {
  if (!o.example.empty()) return catalog_entry(o.example).metric;
  if (o.input == "-") return parse_document(in);
  std::ifstream f(o.input);
  if (!f) throw ParseError(o.input, "cannot open input file");
  return parse_document(f);
}

inline std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      // Rationals such as 1/2 are accepted as well.
      v.push_back(to_double(parse_rational(item, "--v0")));
    }
  }
  return v;
}

inline int run_catalog(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.empty()) {
    Json list = Json::array();
    for (const auto& e : catalog()) list.push_back({{"name", e.name}, {"description", e.description}});
    if (o.json) {
      out << list.dump(2) << '\n';
    } else {
      for (const auto& e : catalog()) out << e.name << "  " << e.description << '\n';
    }
    return kOk;
  }
  if (o.positional.size() == 2 && o.positional[0] == "show") {
    out << to_document(catalog_entry(o.positional[1]).metric).dump(2) << '\n';
    return kOk;
  }
  err << "usage: flatlie catalog [show NAME]\n";
  return kUsageError;
}

inline int run_command(const std::string& cmd, const Options& o, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  if (cmd == "catalog") return run_catalog(o, out, err);

  const auto start = std::chrono::steady_clock::now();
  const MetricLieAlgebra m = load_input(o, in);

  if (cmd == "validate") {
    emit({{"valid", true}, {"dim", m.dim()}, {"signature", signature_json(m.sig())}}, o, out);
    return kOk;
  }
  if (cmd == "analyze") {
    const Json report = analyze(m, o.seed, o.sweep);
    emit(report, o, out);
    if (!o.json) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << "timing_ms: " << ms << '\n';
    }
    return kOk;
  }
  if (cmd == "flat") {
    const CurvatureVerdict v = is_flat(m);
    emit({{"flatness", curvature_json(v)}}, o, out);
    return v.flat ? kOk : kConditionNotSatisfied;
  }
  if (cmd == "killing") {
    const Subspace s = killing_subalgebra(m);
    emit({{"killing_subalgebra",
           {{"dim", s.dim()}, {"basis", to_json(s)}, {"has_timelike", has_timelike_vector(m, s)},
            {"abelian", m.algebra().is_abelian(s)}}}},
         o, out);
    return kOk;
  }
  if (cmd == "theorem1") {
    const Theorem1Report t = theorem1_check(m);
    emit({{"theorem1", theorem1_json(t)}}, o, out);
    if (!t.consistent()) err << "error: the two sides of the characterization disagree\n";
    return t.direct_side && t.consistent() ? kOk : kConditionNotSatisfied;
  }
  if (cmd == "theorem2") {
    const Theorem2Report t = theorem2_check(m);
    Json j{{"theorem2", theorem2_json(t)}};
    if (t.flat() && t.degenerate_restriction) j["witness"] = witness_section(m);
    j["incompleteness"] = incompleteness_json(incompleteness_verdict(m, false));
    emit(j, o, out);
    if (!t.consistent()) err << "error: flatness and degeneracy disagree\n";
    return t.flat() && t.consistent() ? kOk : kConditionNotSatisfied;
  }
  if (cmd == "companion") {
    if (!m.is_lorentzian() && !m.is_riemannian()) {
      err << "error: companion needs a Lorentzian or Riemannian metric\n";
      return kUsageError;
    }
    try {
      const MetricLieAlgebra c = riemannian_companion(m);
      emit({{"companion", {{"gram", to_json(c.gram())}, {"same_connection", same_connection(m, c)},
                           {"signature", signature_json(c.sig())}}}},
           o, out);
      return kOk;
    } catch (const HypothesisNotMet& e) {
      emit({{"companion", {{"exists", false}, {"reason", e.what()}}}}, o, out);
      return kConditionNotSatisfied;
    }
  }
  if (cmd == "geodesic") {
    if (o.v0.empty() || o.t_max <= 0.0) {
      err << "error: geodesic needs --v0 and a positive --t-max\n";
      return kUsageError;
    }
    const GeodesicTrajectory tr = integrate(m, parse_csv_doubles(o.v0), o.t_max, o.rel_tol);
    Json j{{"outcome", to_string(tr.outcome)},
           {"final_time", tr.final_time()},
           {"steps", tr.samples.size() - 1},
           {"max_speed", tr.max_speed()},
           {"energy_drift", tr.energy_drift()},
           {"norm_limit", GeodesicLimits::kNormLimit},
           {"min_step", GeodesicLimits::kMinStep}};
    if (tr.blowup_time) j["blowup_time"] = *tr.blowup_time;
    if (!o.csv.empty()) {
      std::ofstream f(o.csv);
      if (!f) throw ParseError(o.csv, "cannot write CSV file");
      write_csv(f, tr);
      j["csv"] = o.csv;
    }
    emit({{"geodesic", j}}, o, out);
    return kOk;
  }
  err << "unknown command '" << cmd << "'\n";
  return kUsageError;
}

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"flatlie: flat left-invariant metrics on Lie groups"};
  app.require_subcommand(1);
  Options o;
  const char* commands[][2] = {
      {"validate", "parse and validate an input document"},
      {"analyze", "full analysis report"},
      {"flat", "curvature test (exit 1 when not flat)"},
      {"killing", "left-invariant Killing subalgebra S(g)"},
      {"theorem1", "flat Lorentzian with timelike Killing field vs orthogonal split"},
      {"theorem2", "class-C flatness vs degeneracy on [g,g]"},
      {"companion", "Riemannian metric with the same Levi-Civita connection"},
      {"geodesic", "integrate the geodesic equation in velocity space"},
      {"catalog", "list built-in examples, or 'show NAME'"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--input", o.input, "input document path, '-' for stdin");
    sub->add_option("--example", o.example, "use a built-in catalog example as input");
    sub->add_option("--v0", o.v0, "initial velocity, comma separated");
    sub->add_option("--t-max", o.t_max, "integration horizon");
    sub->add_option("--rel-tol", o.rel_tol, "integrator relative tolerance");
    sub->add_option("--csv", o.csv, "trajectory CSV export path");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_option("--sweep", o.sweep, "number of random instances for equivalence sweeps (analyze)");
    sub->add_option("args", o.positional, "positional arguments");
  }

  std::vector<std::string> argv_store{"flatlie"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run_command(cmd, o, in, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace flatlie::cli
