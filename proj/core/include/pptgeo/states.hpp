#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pptgeo/linalg.hpp"
#include "pptgeo/rng.hpp"

namespace pptgeo {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kNormalizationTol = 1e-12;

/// Unit-trace positive semidefinite Hermitian matrix.
///
/// Construction validates Hermiticity (1e-10), trace (1e-10) and the minimum
/// eigenvalue (>= -1e-9), then stores the symmetrized matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& matrix);

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  double purity() const;

 private:
  ComplexMatrix matrix_;
};

/// Unit-norm state vector. Throws kNotNormalized when | ||psi|| - 1 | > 1e-12.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(std::vector<Complex> amplitudes);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

 private:
  std::vector<Complex> amplitudes_;
};

struct WernerParams {
  std::size_t local_dim;  // d >= 2
  double p;               // in [0, 1]
};

DensityMatrix maximally_mixed(std::size_t dim);
DensityMatrix pure_density(const PureState& psi);

/// (1/sqrt(d)) sum_i |ii>, the pure component of the Werner family.
PureState maximally_entangled(std::size_t local_dim);

/// p |Phi><Phi| + (1-p) I/d^2 on C^d (x) C^d.
DensityMatrix werner(const WernerParams& params);

/// p a + (1-p) b.
DensityMatrix convex_mix(double p, const DensityMatrix& a, const DensityMatrix& b);

/// G G^H / Tr(G G^H) with G square Ginibre (Hilbert-Schmidt measure).
DensityMatrix sample_hs_random(std::size_t dim, Rng& rng);
DensityMatrix sample_hs_random(std::size_t dim, std::uint64_t seed);

/// Haar-random pure state (normalized complex Gaussian vector).
PureState sample_pure(std::size_t dim, Rng& rng);

inline constexpr std::size_t kDefaultMaxRejects = 10'000;

struct ShellSample {
  DensityMatrix state;
  std::size_t rejects;
};

/// A state at Hilbert-Schmidt distance `radius` from I/N.
///
/// Draws HS-random states, rescales the traceless part to length `radius`
/// and rejects non-PSD results. Throws kShellUnreachable after max_rejects
/// rejections and kInvalidArgument unless 0 < radius < sqrt((N-1)/N).
ShellSample sample_on_shell(std::size_t dim, double radius, Rng& rng,
                            std::size_t max_rejects = kDefaultMaxRejects);
ShellSample sample_on_shell(std::size_t dim, double radius, std::uint64_t seed,
                            std::size_t max_rejects = kDefaultMaxRejects);

}  // namespace pptgeo
