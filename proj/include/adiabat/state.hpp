#ifndef ADIABAT_STATE_HPP
#define ADIABAT_STATE_HPP

#include <string>
#include <vector>

namespace adiabat {

/// Static description of one thermodynamic system. The first coordinate is
/// always the energy U in joules; the rest are work coordinates.
struct SystemSpec {
  std::string id;
  std::string substance;
  std::vector<std::string> coordinate_names;
  std::string amount_unit;          // "mol" or "kg"
  std::string comparability_class;  // key grouping states comparison applies to

  /// Throws ErrorKind::Domain unless at least one coordinate exists and the
  /// class key is nonempty.
  void validate() const;
};

/// A scaled point of one system's coordinate space. Coordinates are stored
/// extensively: scaling by lambda multiplies amount and every coordinate.
struct SimpleState {
  std::string system;
  double amount = 0.0;  // > 0, in the system's amount unit
  std::vector<double> coords;
};

/// Finite multiset of simple states placed side by side. Equality is
/// multiset equality; part order never matters.
struct CompoundState {
  std::vector<SimpleState> parts;

  static CompoundState of(SimpleState part);
  double total_amount() const;
  bool empty() const { return parts.empty(); }

  /// Throws ErrorKind::Domain on an empty compound or a part with amount <= 0.
  void validate() const;
};

/// Side-by-side juxtaposition: the part multisets are concatenated.
CompoundState compose(const CompoundState& a, const CompoundState& b);

/// lambda * X: multiplies amount and every extensive coordinate of every part.
/// Intensive quantities (ratios of extensives) are unchanged. Throws
/// ErrorKind::Domain for lambda <= 0.
SimpleState scale(const SimpleState& x, double lambda);
CompoundState scale(const CompoundState& x, double lambda);

/// Order-insensitive equality of the part multisets (exact coordinate match).
bool multiset_equal(const CompoundState& a, const CompoundState& b);

}  // namespace adiabat

#endif  // ADIABAT_STATE_HPP
