// Batch front end: axiom suites, comparison checks, entropy tables, existence
// decisions, the rubbing counterexample, water tables, temperatures and loop
// integrals. Exit codes: 0 success, 1 usage, 2 property violation,
// 3 entropy-existence infeasible, 4 model or domain error.

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adiabat/axioms.hpp"
#include "adiabat/derived/thermo.hpp"
#include "adiabat/errors.hpp"
#include "adiabat/existence/feasibility.hpp"
#include "adiabat/existence/relation.hpp"
#include "adiabat/meter.hpp"
#include "adiabat/models/ideal_gas.hpp"
#include "adiabat/models/rubbing.hpp"
#include "adiabat/models/water.hpp"
#include "adiabat/report_io.hpp"

namespace {

using namespace adiabat;

struct ModelBundle {
  std::unique_ptr<AccessibilityOracle> oracle;
  std::unique_ptr<StateSampler> sampler;
};

ModelBundle make_model(const std::string& name) {
  if (name == "ideal-gas") {
    return {std::make_unique<GasOracle>(),
            std::make_unique<GasBoxSampler>(1.0, 50.0, 400.0, 0.5, 4.0)};
  }
  if (name == "rubbing") {
    return {std::make_unique<RubbingOracle>(),
            std::make_unique<TwoBodySampler>(0.0, 6.0)};
  }
  if (name == "water") {
    PhaseConstants k;
    return {std::make_unique<WaterOracle>(k),
            std::make_unique<WaterSampler>(k, -200000.0, 3200000.0)};
  }
  throw Error(ErrorKind::Domain, "unknown model '" + name + "'");
}

// Reference pairs used by construct and temperature runs.
std::pair<CompoundState, CompoundState> default_refs(const std::string& model) {
  if (model == "ideal-gas") {
    return {CompoundState::of(make_gas_state(1.0, 100.0, 1.0)),
            CompoundState::of(make_gas_state(1.0, 200.0, 1.0))};
  }
  if (model == "water") {
    PhaseConstants k;
    return {CompoundState::of(make_water_state(1.0, 0.0)),
            CompoundState::of(make_water_state(1.0, k.h_boil_hi()))};
  }
  throw Error(ErrorKind::Domain,
              "model '" + model + "' has no canonical reference pair");
}

bool parse_grid(const std::string& text, int& w, int& h) {
  return std::sscanf(text.c_str(), "%dx%d", &w, &h) == 2 && w > 1 && h > 1;
}

int run_axioms(const std::string& model, std::size_t samples,
               std::uint64_t seed, bool parallel, const std::string& out) {
  ModelBundle bundle = make_model(model);
  SuiteOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.parallel = parallel;
  auto reports = run_axiom_suite(*bundle.oracle, *bundle.sampler, opt);
  write_text_file(out, suite_json(reports).dump(2) + "\n");
  bool all_passed = true;
  for (const auto& r : reports) {
    std::printf("%-24s %s (%zu instances, %zu witnesses)\n", r.axiom.c_str(),
                r.passed ? "pass" : "FAIL", r.instances_tested,
                r.witnesses.size());
    all_passed = all_passed && r.passed;
  }
  std::printf("report written to %s\n", out.c_str());
  return all_passed ? 0 : 2;
}

int run_compare(const std::string& model, std::size_t samples,
                std::uint64_t seed, bool parallel, const std::string& out) {
  ModelBundle bundle = make_model(model);
  auto report =
      check_comparison(*bundle.oracle, *bundle.sampler, samples, seed,
                       parallel);
  write_text_file(out, comparison_json(report).dump(2) + "\n");
  std::printf("class %s: comparable fraction %s over %zu pairs\n",
              report.comparability_class.c_str(),
              fmt_g(report.comparable_fraction).c_str(), report.pairs_tested);
  std::printf("report written to %s\n", out.c_str());
  return report.incomparable_witnesses.empty() ? 0 : 2;
}

std::vector<std::pair<std::string, CompoundState>> grid_states(
    const std::string& model, int w, int h) {
  std::vector<std::pair<std::string, CompoundState>> states;
  if (model == "ideal-gas") {
    for (int i = 0; i < w; ++i) {
      for (int j = 0; j < h; ++j) {
        double u = 50.0 + (400.0 - 50.0) * i / (w - 1);
        double v = 0.5 + (4.0 - 0.5) * j / (h - 1);
        states.emplace_back("u" + std::to_string(i) + "v" + std::to_string(j),
                            CompoundState::of(make_gas_state(1.0, u, v)));
      }
    }
    return states;
  }
  if (model == "water") {
    PhaseConstants k;
    int n = w * h;
    for (int i = 0; i < n; ++i) {
      double hh = -200000.0 + (3200000.0 + 200000.0) * i / (n - 1);
      states.emplace_back("h" + std::to_string(i),
                          CompoundState::of(make_water_state(1.0, hh)));
    }
    return states;
  }
  throw Error(ErrorKind::Domain, "model '" + model + "' has no table grid");
}

int run_construct(const std::string& model, const std::string& grid,
                  double tol, bool parallel, const std::string& format,
                  const std::string& out) {
  int w = 0, h = 0;
  if (!parse_grid(grid, w, h)) {
    throw Error(ErrorKind::Domain, "grid must look like 20x20");
  }
  ModelBundle bundle = make_model(model);
  auto [x0, x1] = default_refs(model);
  EntropyMeter meter = build_meter(*bundle.oracle, x0, x1, tol);
  EntropyTable table = build_table(meter, grid_states(model, w, h), parallel);
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      rows.push_back({{"state_id", row.state_id},
                      {"state", state_json(row.state)},
                      {"entropy_units", row.entropy_units}});
    }
    write_text_file(out, rows.dump(2) + "\n");
  } else {
    const SystemSpec& sys =
        model == "ideal-gas" ? gas_system() : water_system();
    write_text_file(out, entropy_table_csv(table, sys));
  }
  std::printf("%zu states written to %s\n", table.rows.size(), out.c_str());
  return 0;
}

int run_existence(const std::string& relation_path, double margin,
                  const std::string& out) {
  FiniteRelation rel = load_relation(relation_path);
  FeasibilityResult result;
  try {
    FiniteRelation closed = transitive_closure(rel);
    result = entropy_feasible(closed, margin);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InconsistentRelation) throw;
    result.feasible = false;
    result.certificate = e.what();
  }
  write_text_file(out, feasibility_json(result).dump(2) + "\n");
  if (result.feasible) {
    std::printf("feasible: additive entropy over %zu atoms written to %s\n",
                result.assignment.size(), out.c_str());
    return 0;
  }
  std::printf("infeasible: %s\n", result.certificate.c_str());
  std::printf("report written to %s\n", out.c_str());
  return 3;
}

/// The two-body world sampled on a coarse energy grid, with the pattern pair
/// (1, 4) vs (0.5, 5.2) built in. Every ordered pair of distinct states gets
/// an edge from the closed-form decision, so the relation is complete
/// knowledge of this sample.
FiniteRelation counterexample_relation(std::uint64_t seed) {
  std::vector<TwoBodyState> sample = {{1.0, 4.0, 1.0}, {0.5, 5.2, 1.0}};
  for (std::size_t i = 0; sample.size() < 20; ++i) {
    Rng rng = Rng::stream(seed, 400, i);
    double u1 = 0.1 * static_cast<double>(rng.index(61));
    double u2 = 0.1 * static_cast<double>(rng.index(61));
    sample.push_back(TwoBodyState{u1, u2, 1.0});
  }

  FiniteRelation rel;
  auto atom_id = [](double u) { return "u" + fmt_g(u); };
  auto add_atom = [&](double u) {
    if (!rel.atom_index(atom_id(u))) rel.atoms.push_back({atom_id(u)});
  };
  for (std::size_t i = 0; i < sample.size(); ++i) {
    add_atom(sample[i].U1);
    add_atom(sample[i].U2);
    RelationState state;
    state.id = "s" + std::to_string(i);
    state.parts = {{atom_id(sample[i].U1), 1.0},
                   {atom_id(sample[i].U2), 1.0}};
    rel.states.push_back(state);
  }
  rel.classes.emplace_back();
  for (const auto& s : rel.states) rel.classes.back().push_back(s.id);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      if (i == j) continue;
      auto& list = rubbing_precedes(sample[i], sample[j]) == Decision::Precedes
                       ? rel.precedes
                       : rel.absent;
      list.emplace_back(rel.states[i].id, rel.states[j].id);
    }
  }
  rel.validate();
  return rel;
}

int run_counterexample(std::uint64_t seed, double margin,
                       const std::string& out) {
  FiniteRelation rel = counterexample_relation(seed);
  save_relation(rel, out);
  std::printf("20-state two-body relation written to %s\n", out.c_str());
  FeasibilityResult result = entropy_feasible(transitive_closure(rel), margin);
  if (result.feasible) {
    std::printf("unexpectedly feasible\n");
    return 0;
  }
  std::printf("no additive entropy encodes it: %s\n",
              result.certificate.c_str());
  return 3;
}

int run_water_table(double step, const std::string& out) {
  if (!(step > 0.0)) {
    throw Error(ErrorKind::Domain, "step must be positive");
  }
  PhaseConstants k;
  std::vector<double> hs;
  for (double h = -200000.0; h <= 3200000.0 + 0.5 * step; h += step) {
    hs.push_back(h);
  }
  write_text_file(out, water_table_csv(k, hs));
  std::printf("%zu rows written to %s\n", hs.size(), out.c_str());
  return 0;
}

int run_temperature(const std::string& model, const std::string& out) {
  std::string csv;
  if (model == "ideal-gas") {
    GasSpec spec;
    csv = "U_J,V_m3,T_K\n";
    for (int i = 0; i < 16; ++i) {
      double u = 300.0 + 300.0 * i;
      SimpleState x = make_gas_state(1.0, u, 1.0);
      double t = temperature(
          [&spec](const SimpleState& s) { return gas_entropy(spec, s); }, x);
      csv += fmt_g(u) + ",1," + fmt_g(t) + "\n";
    }
  } else if (model == "water") {
    PhaseConstants k;
    csv = "h_J_per_kg,T_K\n";
    for (double h = 50000.0; h <= 3200000.0; h += 150000.0) {
      SimpleState x = make_water_state(1.0, h);
      double t = temperature(
          [&k](const SimpleState& s) {
            return water_entropy(k, water_of_part(s));
          },
          x);
      csv += fmt_g(h) + "," + fmt_g(t) + "\n";
    }
  } else {
    throw Error(ErrorKind::Domain,
                "model '" + model + "' has no temperature table");
  }
  write_text_file(out, csv);
  std::printf("table written to %s\n", out.c_str());
  return 0;
}

int run_loop(int steps, const std::string& out) {
  GasSpec spec;
  PathSpec loop{{{100.0, 1.0},
                 {200.0, 1.0},
                 {200.0, 2.0},
                 {100.0, 2.0},
                 {100.0, 1.0}},
                steps,
                1.0};
  PathSpec path_a{{{100.0, 1.0}, {200.0, 1.0}, {200.0, 2.0}}, steps, 1.0};
  PathSpec path_b{{{100.0, 1.0}, {100.0, 2.0}, {200.0, 2.0}}, steps, 1.0};
  LoopReport rl = path_delta_s_report(spec, loop);
  LoopReport ra = path_delta_s_report(spec, path_a);
  LoopReport rb = path_delta_s_report(spec, path_b);
  std::string csv = "path,delta_S_J_per_K,steps,max_segment,sum_abs_segments\n";
  auto row = [&csv](const char* name, const LoopReport& r) {
    csv += std::string(name) + "," + fmt_g(r.delta_s) + "," +
           std::to_string(r.steps) + "," + fmt_g(r.max_segment_abs) + "," +
           fmt_g(r.sum_segment_abs) + "\n";
  };
  row("closed_loop", rl);
  row("path_a", ra);
  row("path_b", rb);
  write_text_file(out, csv);
  bool loop_ok = std::abs(rl.delta_s) <= 1e-8 * rl.sum_segment_abs;
  bool paths_ok = std::abs(ra.delta_s - rb.delta_s) <=
                  1e-8 * std::max(std::abs(ra.delta_s), std::abs(rb.delta_s));
  std::printf("loop dS = %s J/K, paths differ by %s J/K, report %s\n",
              fmt_g(rl.delta_s).c_str(),
              fmt_g(std::abs(ra.delta_s - rb.delta_s)).c_str(), out.c_str());
  return (loop_ok && paths_ok) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"accessibility-order entropy toolkit"};
  app.require_subcommand(1);

  std::string model = "ideal-gas";
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double margin = 1.0;
  std::string grid = "20x20";
  std::string relation_path;
  std::string out;
  std::string format = "csv";
  bool parallel = false;
  double step = 10000.0;
  int steps = 10000;

  const std::vector<std::string> models = {"ideal-gas", "rubbing", "water"};

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", model, "model world")
        ->check(CLI::IsMember(models));
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "rng seed");
    cmd->add_option("--out", out, "output path");
    cmd->add_flag("--parallel", parallel, "evaluate instances in parallel");
  };

  auto* ax = app.add_subcommand("axioms", "run the six accessibility axioms");
  add_model(ax);
  add_common(ax);
  ax->add_option("--samples", samples, "instances per axiom");

  auto* cmp = app.add_subcommand("compare", "check the comparison hypothesis");
  add_model(cmp);
  add_common(cmp);
  cmp->add_option("--samples", samples, "pairs to test")->capture_default_str();

  auto* con = app.add_subcommand("construct", "reconstruct an entropy table");
  add_model(con);
  add_common(con);
  con->add_option("--grid", grid, "table grid, e.g. 20x20");
  con->add_option("--tol", tol, "lambda tolerance");
  con->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* ex = app.add_subcommand("existence",
                                "decide additive-entropy existence");
  ex->add_option("--relation", relation_path, "relation JSON file")
      ->required();
  ex->add_option("--margin", margin, "strictness margin");
  ex->add_option("--out", out, "output path");

  auto* ce = app.add_subcommand("counterexample",
                                "emit the two-body relation with no entropy");
  ce->add_option("--seed", seed, "rng seed");
  ce->add_option("--margin", margin, "strictness margin");
  ce->add_option("--out", out, "output path");

  auto* wt = app.add_subcommand("water-table", "emit the one-bar water curve");
  wt->add_option("--step", step, "h step in J/kg");
  wt->add_option("--out", out, "output path");

  auto* tp = app.add_subcommand("temperature", "emit a temperature table");
  add_model(tp);
  tp->add_option("--out", out, "output path");

  auto* lp = app.add_subcommand("loop", "integrate dS around paths");
  lp->add_option("--steps", steps, "integration steps per segment");
  lp->add_option("--out", out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(ax)) {
      if (out.empty()) out = "axioms_" + model + ".json";
      return run_axioms(model, samples, seed, parallel, out);
    }
    if (app.got_subcommand(cmp)) {
      if (!cmp->count("--samples")) samples = 10000;
      if (out.empty()) out = "compare_" + model + ".json";
      return run_compare(model, samples, seed, parallel, out);
    }
    if (app.got_subcommand(con)) {
      if (out.empty()) out = "table_" + model + ".csv";
      return run_construct(model, grid, tol, parallel, format, out);
    }
    if (app.got_subcommand(ex)) {
      if (out.empty()) out = "existence.json";
      return run_existence(relation_path, margin, out);
    }
    if (app.got_subcommand(ce)) {
      if (out.empty()) out = "rubbing20.json";
      return run_counterexample(seed, margin, out);
    }
    if (app.got_subcommand(wt)) {
      if (out.empty()) out = "water_table.csv";
      return run_water_table(step, out);
    }
    if (app.got_subcommand(tp)) {
      if (out.empty()) out = "temperature_" + model + ".csv";
      return run_temperature(model, out);
    }
    if (app.got_subcommand(lp)) {
      if (out.empty()) out = "loop.csv";
      return run_loop(steps, out);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", to_string(e.kind()), e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 1;
}
