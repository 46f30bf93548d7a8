#include "adiabat/existence/relation.hpp"

#include <fstream>
#include <functional>
#include <set>

#include "adiabat/errors.hpp"

namespace adiabat {

namespace {

std::size_t require_state(const FiniteRelation& rel, const std::string& id,
                          const char* where) {
  auto idx = rel.state_index(id);
  if (!idx) {
    throw Error(ErrorKind::Domain, std::string(where) +
                                       " references undefined state '" + id +
                                       "'");
  }
  return *idx;
}

}  // namespace

void FiniteRelation::validate() const {
  std::set<std::string> atom_ids;
  for (const auto& a : atoms) {
    if (a.id.empty() || !atom_ids.insert(a.id).second) {
      throw Error(ErrorKind::Domain, "empty or duplicate atom id");
    }
  }
  std::set<std::string> state_ids;
  for (const auto& s : states) {
    if (s.id.empty() || !state_ids.insert(s.id).second) {
      throw Error(ErrorKind::Domain, "empty or duplicate state id");
    }
    if (s.parts.empty()) {
      throw Error(ErrorKind::Domain, "state '" + s.id + "' has no parts");
    }
    for (const auto& p : s.parts) {
      if (!atom_ids.count(p.atom)) {
        throw Error(ErrorKind::Domain, "state '" + s.id +
                                           "' references undefined atom '" +
                                           p.atom + "'");
      }
      if (!(p.weight > 0.0)) {
        throw Error(ErrorKind::Domain,
                    "state '" + s.id + "' has a nonpositive weight");
      }
    }
  }
  std::set<StateEdge> seen;
  for (const auto& e : precedes) {
    require_state(*this, e.first, "precedes edge");
    require_state(*this, e.second, "precedes edge");
    seen.insert(e);
  }
  for (const auto& e : absent) {
    require_state(*this, e.first, "absent edge");
    require_state(*this, e.second, "absent edge");
    if (seen.count(e)) {
      throw Error(ErrorKind::Domain, "edge (" + e.first + ", " + e.second +
                                         ") asserted both present and absent");
    }
  }
  for (const auto& cls : classes) {
    for (const auto& id : cls) require_state(*this, id, "class list");
  }
}

std::optional<std::size_t> FiniteRelation::state_index(
    const std::string& id) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteRelation::atom_index(
    const std::string& id) const {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteRelation::class_index(
    const std::string& state_id) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& id : classes[c]) {
      if (id == state_id) return c;
    }
  }
  return std::nullopt;
}

FiniteRelation transitive_closure(const FiniteRelation& rel) {
  rel.validate();
  std::size_t n = rel.states.size();
  std::vector<char> reach(n * n, 0);
  std::vector<int> via(n * n, -1);  // intermediate state of a derived edge
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i) reach[at(i, i)] = 1;
  for (const auto& e : rel.precedes) {
    reach[at(*rel.state_index(e.first), *rel.state_index(e.second))] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[at(i, k)]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[at(k, j)] && !reach[at(i, j)]) {
          reach[at(i, j)] = 1;
          via[at(i, j)] = static_cast<int>(k);
        }
      }
    }
  }

  // Expand a derived edge back into the chain of asserted edges.
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)>
      expand = [&](std::size_t i, std::size_t j, std::vector<std::size_t>& out) {
        int k = via[at(i, j)];
        if (k < 0) {
          if (out.empty()) out.push_back(i);
          out.push_back(j);
          return;
        }
        expand(i, static_cast<std::size_t>(k), out);
        expand(static_cast<std::size_t>(k), j, out);
      };

  for (const auto& e : rel.absent) {
    std::size_t i = *rel.state_index(e.first);
    std::size_t j = *rel.state_index(e.second);
    if (reach[at(i, j)]) {
      std::vector<std::size_t> chain;
      expand(i, j, chain);
      std::string msg = "closure forces the absent edge (" + e.first + ", " +
                        e.second + ") via ";
      for (std::size_t c = 0; c < chain.size(); ++c) {
        if (c) msg += " -> ";
        msg += rel.states[chain[c]].id;
      }
      throw Error(ErrorKind::InconsistentRelation, msg);
    }
  }

  FiniteRelation closed = rel;
  closed.precedes.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[at(i, j)]) {
        closed.precedes.emplace_back(rel.states[i].id, rel.states[j].id);
      }
    }
  }
  return closed;
}

FiniteRelation relation_from_json(const nlohmann::json& j) {
  FiniteRelation rel;
  try {
    for (const auto& a : j.at("atoms")) {
      rel.atoms.push_back({a.at("id").get<std::string>()});
    }
    for (const auto& s : j.at("states")) {
      RelationState state;
      state.id = s.at("id").get<std::string>();
      for (const auto& p : s.at("parts")) {
        state.parts.push_back(
            {p.at("atom").get<std::string>(), p.at("weight").get<double>()});
      }
      rel.states.push_back(std::move(state));
    }
    for (const auto& e : j.at("precedes")) {
      rel.precedes.emplace_back(e.at(0).get<std::string>(),
                                e.at(1).get<std::string>());
    }
    for (const auto& e : j.at("absent")) {
      rel.absent.emplace_back(e.at(0).get<std::string>(),
                              e.at(1).get<std::string>());
    }
    for (const auto& cls : j.at("classes")) {
      rel.classes.push_back(cls.get<std::vector<std::string>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Domain,
                std::string("malformed relation document: ") + e.what());
  }
  rel.validate();
  return rel;
}

nlohmann::ordered_json relation_to_json(const FiniteRelation& rel) {
  nlohmann::ordered_json j;
  j["atoms"] = nlohmann::ordered_json::array();
  for (const auto& a : rel.atoms) j["atoms"].push_back({{"id", a.id}});
  j["states"] = nlohmann::ordered_json::array();
  for (const auto& s : rel.states) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& p : s.parts) {
      parts.push_back({{"atom", p.atom}, {"weight", p.weight}});
    }
    j["states"].push_back({{"id", s.id}, {"parts", parts}});
  }
  j["precedes"] = nlohmann::ordered_json::array();
  for (const auto& e : rel.precedes) {
    j["precedes"].push_back({e.first, e.second});
  }
  j["absent"] = nlohmann::ordered_json::array();
  for (const auto& e : rel.absent) j["absent"].push_back({e.first, e.second});
  j["classes"] = rel.classes;
  return j;
}

FiniteRelation load_relation(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot read relation file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Domain,
                "relation file '" + path + "' is not valid JSON: " + e.what());
  }
  return relation_from_json(j);
}

void save_relation(const FiniteRelation& rel, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::Io, "cannot write relation file '" + path + "'");
  }
  out << relation_to_json(rel).dump(2) << "\n";
}

}  // namespace adiabat
