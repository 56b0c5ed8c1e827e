#include "pptgeo/states.hpp"

#include <cmath>
#include <string>

#include "pptgeo/errors.hpp"

namespace pptgeo {

DensityMatrix::DensityMatrix(const ComplexMatrix& matrix) {
  if (matrix.dim() == 0) throw Error(ErrorCode::kInvalidState, "empty density matrix");
  ComplexMatrix h = require_hermitian(matrix, kHermitianTol);
  const double tr = trace(h).real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorCode::kInvalidState, "trace " + std::to_string(tr) + " != 1");
  }
  const double lo = hermitian_eigenvalues(h).front();
  if (lo < -kPositivityTol) {
    throw Error(ErrorCode::kInvalidState, "min eigenvalue " + std::to_string(lo) + " < 0");
  }
  matrix_ = std::move(h);
}

double DensityMatrix::purity() const { return trace_product(matrix_, matrix_).real(); }

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw Error(ErrorCode::kNotNormalized, "empty state vector");
  const double n = norm2(amplitudes_);
  if (std::abs(n - 1.0) > kNormalizationTol) {
    throw Error(ErrorCode::kNotNormalized, "norm " + std::to_string(n));
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const double n = norm2(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kNotNormalized, "cannot normalize a zero or non-finite vector");
  }
  for (auto& z : amplitudes) z /= n;
  return PureState(std::move(amplitudes));
}

DensityMatrix maximally_mixed(std::size_t dim) {
  if (dim < 2) throw Error(ErrorCode::kInvalidArgument, "maximally_mixed: dim < 2");
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

DensityMatrix pure_density(const PureState& psi) {
  return DensityMatrix(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

PureState maximally_entangled(std::size_t local_dim) {
  if (local_dim < 2) throw Error(ErrorCode::kInvalidArgument, "local dimension < 2");
  std::vector<Complex> amps(local_dim * local_dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(local_dim));
  for (std::size_t i = 0; i < local_dim; ++i) amps[i * local_dim + i] = amp;
  return PureState::normalized(std::move(amps));
}

DensityMatrix werner(const WernerParams& params) {
  if (params.local_dim < 2) throw Error(ErrorCode::kInvalidArgument, "werner: d < 2");
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "werner: p outside [0, 1]");
  }
  const std::size_t d = params.local_dim;
  const std::size_t n = d * d;
  // Built entrywise: Phi has amplitude 1/sqrt(d) exactly on the |ii> entries.
  ComplexMatrix m(n);
  const double background = (1.0 - params.p) / static_cast<double>(n);
  const double block = params.p / static_cast<double>(d);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = background;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) += block;
  }
  return DensityMatrix(m);
}

DensityMatrix convex_mix(double p, const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "convex_mix");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "convex_mix: p outside [0, 1]");
  return DensityMatrix(a.matrix() * Complex(p) + b.matrix() * Complex(1.0 - p));
}

namespace {

ComplexMatrix ginibre_wishart(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (auto& z : g.data()) z = rng.complex_normal();
  ComplexMatrix w = matmul(g, adjoint(g));
  w *= Complex(1.0 / trace(w).real());
  return w;
}

}  // namespace

DensityMatrix sample_hs_random(std::size_t dim, Rng& rng) {
  if (dim < 2) throw Error(ErrorCode::kInvalidArgument, "sample_hs_random: dim < 2");
  return DensityMatrix(ginibre_wishart(dim, rng));
}

DensityMatrix sample_hs_random(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return sample_hs_random(dim, rng);
}

PureState sample_pure(std::size_t dim, Rng& rng) {
  std::vector<Complex> amps(dim);
  for (auto& z : amps) z = rng.complex_normal();
  return PureState::normalized(std::move(amps));
}

ShellSample sample_on_shell(std::size_t dim, double radius, Rng& rng, std::size_t max_rejects) {
  if (dim < 2) throw Error(ErrorCode::kInvalidArgument, "sample_on_shell: dim < 2");
  const double n = static_cast<double>(dim);
  const double outer = std::sqrt((n - 1.0) / n);
  if (!(radius > 0.0 && radius < outer)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample_on_shell: radius must lie in (0, " + std::to_string(outer) + ")");
  }
  const ComplexMatrix centre = ComplexMatrix::identity(dim) * Complex(1.0 / n);

  std::size_t rejects = 0;
  while (true) {
    ComplexMatrix delta = ginibre_wishart(dim, rng) - centre;
    const double len = frob_norm(delta);
    if (len > 0.0) {
      ComplexMatrix candidate = centre + delta * Complex(radius / len);
      if (hermitian_eigenvalues(candidate).front() >= 0.0) {
        return {DensityMatrix(candidate), rejects};
      }
    }
    if (++rejects > max_rejects) {
      throw Error(ErrorCode::kShellUnreachable,
                  "no PSD sample at radius " + std::to_string(radius) + " after " +
                      std::to_string(max_rejects) + " rejections");
    }
  }
}

ShellSample sample_on_shell(std::size_t dim, double radius, std::uint64_t seed,
                            std::size_t max_rejects) {
  Rng rng(seed);
  return sample_on_shell(dim, radius, rng, max_rejects);
}

}  // namespace pptgeo
