#ifndef ADIABAT_EXISTENCE_RELATION_HPP
#define ADIABAT_EXISTENCE_RELATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace adiabat {

/// Finite accessibility relation over abstract atoms. States are weighted
/// atom multisets; additivity of any entropy assignment is structural, since
/// a state's value is the weighted sum of its atoms' values.
struct RelationAtom {
  std::string id;
};

struct RelationPart {
  std::string atom;
  double weight = 1.0;
};

struct RelationState {
  std::string id;
  std::vector<RelationPart> parts;
};

using StateEdge = std::pair<std::string, std::string>;

struct FiniteRelation {
  std::vector<RelationAtom> atoms;
  std::vector<RelationState> states;
  std::vector<StateEdge> precedes;  // asserted X precedes Y
  std::vector<StateEdge> absent;    // asserted X does not precede Y
  std::vector<std::vector<std::string>> classes;

  /// Throws ErrorKind::Domain when an edge or part references an undefined
  /// id, a weight is nonpositive, or a pair sits in both edge lists.
  void validate() const;

  std::optional<std::size_t> state_index(const std::string& id) const;
  std::optional<std::size_t> atom_index(const std::string& id) const;
  /// Index into classes, or nullopt for an unclassified state.
  std::optional<std::size_t> class_index(const std::string& state_id) const;
};

/// Precedes edges closed under transitivity and reflexivity. When the
/// closure forces a pair listed as absent, throws
/// ErrorKind::InconsistentRelation with the offending chain spelled out.
FiniteRelation transitive_closure(const FiniteRelation& rel);

FiniteRelation relation_from_json(const nlohmann::json& j);
nlohmann::ordered_json relation_to_json(const FiniteRelation& rel);

FiniteRelation load_relation(const std::string& path);
void save_relation(const FiniteRelation& rel, const std::string& path);

}  // namespace adiabat

#endif  // ADIABAT_EXISTENCE_RELATION_HPP
