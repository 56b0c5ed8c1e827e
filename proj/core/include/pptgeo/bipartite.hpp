#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pptgeo/linalg.hpp"
#include "pptgeo/states.hpp"

namespace pptgeo {

/// H = C^m (x) C^n. Composite index (i, k) maps to i * n + k (A-major).
struct BipartiteSplit {
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t dim() const noexcept { return m * n; }
  std::size_t min_dim() const noexcept { return m < n ? m : n; }

  /// Throws kInvalidArgument unless m, n >= 2.
  void validate() const;
  /// Also requires m * n == state_dim (kDimensionMismatch otherwise).
  void validate_for(std::size_t state_dim) const;

  std::string to_string() const;  // "<m>x<n>"
  static BipartiteSplit parse(std::string_view text);

  bool operator==(const BipartiteSplit&) const = default;
};

inline constexpr double kRankTol = 1e-10;

/// psi = sum_i coefficients[i] * left[i] (x) right[i].
///
/// Only the first `rank` terms are stored; right vectors are kets, so the
/// m x n coefficient matrix is C = sum_i a_i left_i right_i^T.
struct SchmidtDecomposition {
  std::vector<double> coefficients;  // nonincreasing, all min(m, n) of them
  std::size_t rank = 0;
  std::vector<std::vector<Complex>> left;   // rank vectors of length m
  std::vector<std::vector<Complex>> right;  // rank vectors of length n
};

/// Transpose on the B factor: out[(i,k),(j,l)] = in[(i,l),(j,k)].
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteSplit& split);
ComplexMatrix partial_transpose(const DensityMatrix& rho, const BipartiteSplit& split);

/// Spectral route: eigenvectors of C C^H give the left basis; the
/// coefficients are ||C^H e_i|| and right_i = conj(C^H e_i) / a_i.
SchmidtDecomposition schmidt(const PureState& psi, const BipartiteSplit& split,
                             double rank_tol = kRankTol);

/// Reassembles sum_i a_i left_i (x) right_i.
std::vector<Complex> schmidt_reconstruct(const SchmidtDecomposition& sd,
                                         const BipartiteSplit& split);

/// Closed-form PT spectrum of a pure state, sorted ascending:
/// a_i^2 (i <= r), +/- a_i a_j (i < j <= r), and zeros with multiplicity
/// min(m,n)|m-n| + min(m,n)^2 - r^2. Total count m * n.
std::vector<double> pt_spectrum_analytic(const SchmidtDecomposition& sd,
                                         const BipartiteSplit& split);

inline constexpr double kPptTol = 1e-9;

struct PptCheck {
  bool ppt;
  double min_pt_eigenvalue;
};

PptCheck is_ppt(const DensityMatrix& rho, const BipartiteSplit& split, double tol = kPptTol);

}  // namespace pptgeo
