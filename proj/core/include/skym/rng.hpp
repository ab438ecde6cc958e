#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <utility>

namespace skym {

/// Deterministic random stream. Gaussians come from Box-Muller instead of
/// std::normal_distribution so the draw sequence is a pure function of the
/// engine state and the whole stream serializes as the engine alone.
class Rng {
 public:
  Rng() : engine_(0) {}
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Single N(mean, stddev^2) draw (consumes one Box-Muller pair).
  double normal(double mean = 0.0, double stddev = 1.0);
  /// Two independent N(0,1) draws from one Box-Muller transform.
  std::pair<double, double> normal_pair();
  /// Uniform index in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  std::uint64_t next_u64() { return engine_(); }

  void save(std::ostream& os) const;
  void load(std::istream& is);

  /// Stable sub-seed derivation so independent streams (env, agent init,
  /// replay sampling, ...) never alias.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

  bool operator==(const Rng& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace skym
