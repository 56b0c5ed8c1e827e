#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "pptgeo/linalg.hpp"

namespace pptgeo {

/// Seeded random stream with platform-stable output.
///
/// std::mt19937_64 is bit-specified by the standard; the distributions in
/// <random> are not, so uniforms and Gaussians are derived here by hand
/// (53-bit uniforms, Box-Muller normals).
class Rng {
 public:
  static constexpr std::string_view kGeneratorId = "mt19937_64/box-muller";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double normal();
  /// Real and imaginary parts independent N(0, 1).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pptgeo
