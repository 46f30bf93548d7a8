#ifndef ADIABAT_RNG_HPP
#define ADIABAT_RNG_HPP

#include <cstdint>
#include <cstddef>

namespace adiabat {

/// Deterministic splitmix64 generator. Every sampled instance owns a stream
/// derived from (seed, stream, index), so any witness can be replayed from
/// those three numbers regardless of evaluation order or threading.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // decorrelate trivially related seeds
    next_u64();
    next_u64();
  }

  static Rng stream(std::uint64_t seed, std::uint64_t stream_id,
                    std::uint64_t index) {
    std::uint64_t s = seed;
    s = mix(s ^ (0x9e3779b97f4a7c15ULL + stream_id));
    s = mix(s ^ (0xbf58476d1ce4e5b9ULL * (index + 1)));
    return Rng(s);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace adiabat

#endif  // ADIABAT_RNG_HPP
