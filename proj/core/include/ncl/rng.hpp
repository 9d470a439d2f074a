// rng.hpp
// Splittable counter-based pseudo-random generator keyed by a 64-bit seed.
// Every stochastic operation in the library takes an explicit seed or an Rng,
// so results are reproducible bit for bit on a given platform.
#pragma once

#include <cstdint>

#include "ncl/types.hpp"

namespace ncl {

/// Counter-based generator: the output stream is a hash of (key, counter),
/// so independent streams are derived by hashing a stream id into the key.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double next_double();
  /// Uniform on (0, 1]; safe to pass through log().
  double next_double_pos();
  /// Standard normal via Box-Muller (pair cached).
  double next_gaussian();
  /// Complex with independent standard-normal real and imaginary parts.
  Cplx next_cgaussian();

  /// Independent child stream; deterministic in (this generator's key, stream).
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace ncl
