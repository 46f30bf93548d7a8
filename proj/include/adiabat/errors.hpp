#ifndef ADIABAT_ERRORS_HPP
#define ADIABAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adiabat {

/// Failure categories surfaced by the library. The CLI maps these to exit
/// codes, so every throw site picks the narrowest kind that applies.
enum class ErrorKind {
  Domain,                   // state outside a model's declared domain
  Class,                    // operands in different comparability classes
  DegenerateReferences,     // X0 and X1 have equal entropy
  ReversedReferences,       // X1 strictly precedes X0
  IncomparableReferences,   // neither reference precedes the other
  UnboundedEntropy,         // bracket expansion hit its limit
  OracleViolation,          // oracle answers inconsistent with monotonicity
  NonMonotoneEntropy,       // entropy difference quotient not positive
  InconsistentRelation,     // transitive closure forces a forbidden edge
  ExhaustedSearch,          // witness probe space exhausted
  FitFailure,               // degenerate least-squares input
  Io,                       // file read/write problems
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Class: return "class";
    case ErrorKind::DegenerateReferences: return "degenerate-references";
    case ErrorKind::ReversedReferences: return "reversed-references";
    case ErrorKind::IncomparableReferences: return "incomparable-references";
    case ErrorKind::UnboundedEntropy: return "unbounded-entropy";
    case ErrorKind::OracleViolation: return "oracle-violation";
    case ErrorKind::NonMonotoneEntropy: return "non-monotone-entropy";
    case ErrorKind::InconsistentRelation: return "inconsistent-relation";
    case ErrorKind::ExhaustedSearch: return "exhausted-search";
    case ErrorKind::FitFailure: return "fit-failure";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace adiabat

#endif  // ADIABAT_ERRORS_HPP
