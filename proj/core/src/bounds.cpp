#include "pptgeo/bounds.hpp"

#include <cmath>
#include <string>

#include "pptgeo/errors.hpp"

namespace pptgeo {
namespace {

double ipow(std::size_t base, std::size_t exp) {
  double out = 1.0;
  for (std::size_t i = 0; i < exp; ++i) out *= static_cast<double>(base);
  return out;
}

double general_ppt_radius(double n) { return 1.0 / std::sqrt(std::sqrt(n * (n - 1.0)) + 1.0); }

void require_ppt_dim(std::size_t dim) {
  if (dim < 4) {
    throw Error(ErrorCode::kUnsupportedDim,
                "PPT radius needs a bipartite composite with N >= 4, got " + std::to_string(dim));
  }
}

}  // namespace

double ball_radius(std::size_t dim) {
  if (dim < 2) throw Error(ErrorCode::kInvalidArgument, "ball_radius: N < 2");
  const double n = static_cast<double>(dim);
  return std::sqrt((n - 1.0) / n);
}

double separable_radius(std::size_t local_dim, std::size_t parties) {
  if (local_dim < 2 || parties < 2) {
    throw Error(ErrorCode::kInvalidArgument, "separable_radius: need d >= 2 and n >= 2");
  }
  const double total = ipow(local_dim, parties);
  return std::sqrt((total - 1.0) / total) / (1.0 + ipow(local_dim, parties - 1));
}

double ppt_radius(std::size_t dim) {
  require_ppt_dim(dim);
  // 2x2 is carved out: the general expression is never applied at N = 4.
  if (dim == 4) return 1.0 / std::sqrt(12.0);
  return general_ppt_radius(static_cast<double>(dim));
}

double cone_boundary_distance(double lambda_min, double lambda_max, std::size_t dim) {
  if (!(lambda_min > 0.0 && lambda_min <= lambda_max) || !std::isfinite(lambda_max)) {
    throw Error(ErrorCode::kInvalidEigenvalues, "need 0 < lambda_min <= lambda_max");
  }
  if (dim < 1) throw Error(ErrorCode::kInvalidArgument, "cone_boundary_distance: N < 1");
  return std::sqrt(lambda_min / lambda_max) / std::sqrt(static_cast<double>(dim));
}

double werner_pm(std::size_t dim) {
  require_ppt_dim(dim);
  if (dim == 4) return 1.0 / 3.0;
  const double n = static_cast<double>(dim);
  return std::sqrt(n / (n - 1.0)) * general_ppt_radius(n);
}

double werner_distance(double p, std::size_t dim) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "werner_distance: p outside [0, 1]");
  return p * ball_radius(dim);
}

BoundsTable bounds_table(std::size_t local_dim, std::size_t parties) {
  if (local_dim < 2) throw Error(ErrorCode::kInvalidArgument, "bounds_table: d < 2");
  if (parties != 2) {
    throw Error(ErrorCode::kUnsupportedDim, "bounds_table: only bipartite (n = 2) tables");
  }
  const std::size_t dim = local_dim * local_dim;
  return {dim,
          local_dim,
          parties,
          ball_radius(dim),
          separable_radius(local_dim, parties),
          ppt_radius(dim),
          werner_pm(dim)};
}

std::string_view to_string(Zone zone) noexcept {
  switch (zone) {
    case Zone::kSeparableBall: return "SEPARABLE_BALL";
    case Zone::kPptBallClaim: return "PPT_BALL_CLAIM";
    case Zone::kOutsideBalls: return "OUTSIDE_BALLS";
  }
  return "UNKNOWN";
}

Zone zone_for_distance(double distance, const BoundsTable& table) {
  if (distance <= table.separable_radius) return Zone::kSeparableBall;
  if (distance <= table.ppt_radius) return Zone::kPptBallClaim;
  return Zone::kOutsideBalls;
}

ZoneClassification classify(const DensityMatrix& rho, const BipartiteSplit& split,
                            const BoundsTable& table) {
  split.validate_for(rho.dim());
  if (table.dim != rho.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "bounds table built for N = " +
                                                   std::to_string(table.dim) + ", state has " +
                                                   std::to_string(rho.dim()));
  }
  const double distance = hs_distance(rho.matrix(), maximally_mixed(rho.dim()).matrix());
  const Zone zone = zone_for_distance(distance, table);
  const PptCheck ppt = is_ppt(rho, split);
  return {distance, zone, ppt.ppt, ppt.min_pt_eigenvalue,
          zone != Zone::kOutsideBalls && !ppt.ppt};
}

}  // namespace pptgeo
