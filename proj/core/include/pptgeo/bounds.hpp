#pragma once

#include <cstddef>
#include <string_view>

#include "pptgeo/bipartite.hpp"
#include "pptgeo/states.hpp"

namespace pptgeo {

/// Radius sqrt((N-1)/N) of the ball around I/N that contains all states.
double ball_radius(std::size_t dim);

/// (1 / (1 + d^(n-1))) * sqrt((d^n - 1) / d^n).
double separable_radius(std::size_t local_dim, std::size_t parties);

/// Claimed PPT radius: 1/sqrt(12) at N = 4, otherwise
/// 1 / sqrt(sqrt(N(N-1)) + 1). Throws kUnsupportedDim for N < 4.
double ppt_radius(std::size_t dim);

/// sqrt(lambda_min / lambda_max) / sqrt(N). Throws kInvalidEigenvalues unless
/// 0 < lambda_min <= lambda_max.
double cone_boundary_distance(double lambda_min, double lambda_max, std::size_t dim);

/// Werner mixing threshold that puts the state on the claimed PPT radius:
/// 1/3 at N = 4, otherwise sqrt(N/(N-1)) / sqrt(sqrt(N(N-1)) + 1).
double werner_pm(std::size_t dim);

/// p * sqrt((N-1)/N), the distance of a Werner state from I/N.
double werner_distance(double p, std::size_t dim);

struct BoundsTable {
  std::size_t dim;        // N = d^n
  std::size_t local_dim;  // d
  std::size_t parties;    // n
  double ball_radius;
  double separable_radius;
  double ppt_radius;
  double werner_pm;
};

/// Only bipartite tables (parties == 2) are supported.
BoundsTable bounds_table(std::size_t local_dim, std::size_t parties);

enum class Zone { kSeparableBall, kPptBallClaim, kOutsideBalls };

std::string_view to_string(Zone zone) noexcept;

/// Half-open thresholds; ties go to the inner zone.
Zone zone_for_distance(double distance, const BoundsTable& table);

struct ZoneClassification {
  double distance;
  Zone zone;
  bool numeric_ppt;
  double min_pt_eigenvalue;
  bool contradiction_flag;  // zone != kOutsideBalls && !numeric_ppt
};

ZoneClassification classify(const DensityMatrix& rho, const BipartiteSplit& split,
                            const BoundsTable& table);

}  // namespace pptgeo
