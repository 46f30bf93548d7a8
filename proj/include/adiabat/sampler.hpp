#ifndef ADIABAT_SAMPLER_HPP
#define ADIABAT_SAMPLER_HPP

#include "adiabat/rng.hpp"
#include "adiabat/state.hpp"

namespace adiabat {

/// Seeded state source for property suites. All draws lie in one
/// comparability class of the target oracle; suites derive compound and
/// scaled states from these draws themselves.
class StateSampler {
 public:
  virtual ~StateSampler() = default;

  virtual CompoundState sample(Rng& rng) const = 0;

  /// Identifier of the sampled domain, for reports.
  virtual std::string domain_id() const = 0;
};

}  // namespace adiabat

#endif  // ADIABAT_SAMPLER_HPP
