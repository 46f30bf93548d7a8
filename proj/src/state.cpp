#include "adiabat/state.hpp"

#include <algorithm>
#include <tuple>

#include "adiabat/errors.hpp"

namespace adiabat {

void SystemSpec::validate() const {
  if (coordinate_names.empty()) {
    throw Error(ErrorKind::Domain,
                "system '" + id + "' declares no coordinates");
  }
  if (comparability_class.empty()) {
    throw Error(ErrorKind::Domain,
                "system '" + id + "' has an empty comparability class key");
  }
}

CompoundState CompoundState::of(SimpleState part) {
  CompoundState c;
  c.parts.push_back(std::move(part));
  return c;
}

double CompoundState::total_amount() const {
  double total = 0.0;
  for (const auto& p : parts) total += p.amount;
  return total;
}

void CompoundState::validate() const {
  if (parts.empty()) {
    throw Error(ErrorKind::Domain, "compound state has no parts");
  }
  for (const auto& p : parts) {
    if (!(p.amount > 0.0)) {
      throw Error(ErrorKind::Domain,
                  "part of system '" + p.system + "' has amount <= 0");
    }
  }
}

CompoundState compose(const CompoundState& a, const CompoundState& b) {
  a.validate();
  b.validate();
  CompoundState out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  return out;
}

SimpleState scale(const SimpleState& x, double lambda) {
  if (!(lambda > 0.0)) {
    throw Error(ErrorKind::Domain, "scale factor must be > 0");
  }
  SimpleState out = x;
  out.amount *= lambda;
  for (double& c : out.coords) c *= lambda;
  return out;
}

CompoundState scale(const CompoundState& x, double lambda) {
  if (!(lambda > 0.0)) {
    throw Error(ErrorKind::Domain, "scale factor must be > 0");
  }
  CompoundState out;
  out.parts.reserve(x.parts.size());
  for (const auto& p : x.parts) out.parts.push_back(scale(p, lambda));
  return out;
}

namespace {

bool part_less(const SimpleState& a, const SimpleState& b) {
  return std::tie(a.system, a.amount, a.coords) <
         std::tie(b.system, b.amount, b.coords);
}

}  // namespace

bool multiset_equal(const CompoundState& a, const CompoundState& b) {
  if (a.parts.size() != b.parts.size()) return false;
  auto sa = a.parts;
  auto sb = b.parts;
  std::sort(sa.begin(), sa.end(), part_less);
  std::sort(sb.begin(), sb.end(), part_less);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].system != sb[i].system || sa[i].amount != sb[i].amount ||
        sa[i].coords != sb[i].coords) {
      return false;
    }
  }
  return true;
}

}  // namespace adiabat
