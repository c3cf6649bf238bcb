#pragma once

#include <cstdint>

namespace spectraltk {

// Counter-based generator: the i-th output is a pure function of (key, i),
// so independent sub-streams can be derived for parallel workers and the
// merged result is identical to a single-threaded run.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ kKeyTweak)) {}

  std::uint64_t next() { return at(counter_++); }

  // Stateless access to the i-th output of this stream.
  std::uint64_t at(std::uint64_t i) const {
    return mix(key_ + (i + 1) * kGamma);
  }

  double uniform() {  // in [0,1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n), unbiased by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  bool coin() { return (next() & 1u) != 0; }

  // Derived independent stream, e.g. one per Monte Carlo sample.
  CounterRng substream(std::uint64_t i) const {
    CounterRng r(0);
    r.key_ = mix(key_ ^ mix(i + kStreamTweak));
    return r;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kKeyTweak = 0xA0761D6478BD642Full;
  static constexpr std::uint64_t kStreamTweak = 0xE7037ED1A0B428DBull;

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace spectraltk
