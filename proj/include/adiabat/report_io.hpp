#ifndef ADIABAT_REPORT_IO_HPP
#define ADIABAT_REPORT_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "adiabat/axioms.hpp"
#include "adiabat/existence/feasibility.hpp"
#include "adiabat/meter.hpp"
#include "adiabat/models/rubbing.hpp"
#include "adiabat/models/water.hpp"
#include "adiabat/state.hpp"

namespace adiabat {

/// One part as {system, amount, coords}; a state as the array of its parts.
nlohmann::ordered_json part_json(const SimpleState& part);
nlohmann::ordered_json state_json(const CompoundState& state);

/// Axiom report with fields exactly axiom, instances_tested, passed,
/// witnesses; a suite is the plain array of six such objects.
nlohmann::ordered_json axiom_report_json(const AxiomReport& report);
nlohmann::ordered_json suite_json(const std::vector<AxiomReport>& reports);

nlohmann::ordered_json comparison_json(const ComparisonReport& report);
nlohmann::ordered_json feasibility_json(const FeasibilityResult& result);

/// Shortest round-trip style float formatting shared by all CSV output.
std::string fmt_g(double v);

/// CSV with header state_id,amount,<coordinate names>,entropy_units. Rows
/// must be single-part states of the given system.
std::string entropy_table_csv(const EntropyTable& table,
                              const SystemSpec& system);

/// CSV with header h_J_per_kg,T_K,phase,entropy_J_per_kgK at the given
/// specific energies.
std::string water_table_csv(const PhaseConstants& k,
                            const std::vector<double>& h_values);

/// CSV with header U1,U2.
std::string reachable_csv(const std::vector<TwoBodyState>& states);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace adiabat

#endif  // ADIABAT_REPORT_IO_HPP
