#include "adiabat/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "adiabat/errors.hpp"

namespace adiabat {

nlohmann::ordered_json part_json(const SimpleState& part) {
  return {{"system", part.system},
          {"amount", part.amount},
          {"coords", part.coords}};
}

nlohmann::ordered_json state_json(const CompoundState& state) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& p : state.parts) j.push_back(part_json(p));
  return j;
}

nlohmann::ordered_json axiom_report_json(const AxiomReport& report) {
  nlohmann::ordered_json j;
  j["axiom"] = report.axiom;
  j["instances_tested"] = report.instances_tested;
  j["passed"] = report.passed;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) j["witnesses"].push_back(state_json(w));
  return j;
}

nlohmann::ordered_json suite_json(const std::vector<AxiomReport>& reports) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& r : reports) j.push_back(axiom_report_json(r));
  return j;
}

nlohmann::ordered_json comparison_json(const ComparisonReport& report) {
  nlohmann::ordered_json j;
  j["class"] = report.comparability_class;
  j["pairs_tested"] = report.pairs_tested;
  j["comparable_fraction"] = report.comparable_fraction;
  j["incomparable_witnesses"] = nlohmann::ordered_json::array();
  for (const auto& [x, y] : report.incomparable_witnesses) {
    j["incomparable_witnesses"].push_back({state_json(x), state_json(y)});
  }
  return j;
}

nlohmann::ordered_json feasibility_json(const FeasibilityResult& result) {
  nlohmann::ordered_json j;
  j["feasible"] = result.feasible;
  j["assignment"] = nlohmann::ordered_json::object();
  for (const auto& [atom, value] : result.assignment) {
    j["assignment"][atom] = value;
  }
  j["certificate"] = result.certificate;
  return j;
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string entropy_table_csv(const EntropyTable& table,
                              const SystemSpec& system) {
  std::string csv = "state_id,amount";
  for (const auto& name : system.coordinate_names) csv += "," + name;
  csv += ",entropy_units\n";
  for (const auto& row : table.rows) {
    if (row.state.parts.size() != 1 ||
        row.state.parts[0].system != system.id) {
      throw Error(ErrorKind::Domain,
                  "table row is not a single state of system '" + system.id +
                      "'");
    }
    const auto& p = row.state.parts[0];
    csv += row.state_id + "," + fmt_g(p.amount);
    for (double c : p.coords) csv += "," + fmt_g(c);
    csv += "," + fmt_g(row.entropy_units) + "\n";
  }
  return csv;
}

std::string water_table_csv(const PhaseConstants& k,
                            const std::vector<double>& h_values) {
  std::string csv = "h_J_per_kg,T_K,phase,entropy_J_per_kgK\n";
  for (double h : h_values) {
    csv += fmt_g(h) + "," + fmt_g(water_temperature(k, h)) + "," +
           water_phase(k, h) + "," + fmt_g(water_entropy_per_kg(k, h)) + "\n";
  }
  return csv;
}

std::string reachable_csv(const std::vector<TwoBodyState>& states) {
  std::string csv = "U1,U2\n";
  for (const auto& s : states) {
    csv += fmt_g(s.U1) + "," + fmt_g(s.U2) + "\n";
  }
  return csv;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw Error(ErrorKind::Io, "failed writing '" + path + "'");
  }
}

}  // namespace adiabat
