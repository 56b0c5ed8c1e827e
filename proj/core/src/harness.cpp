#include "pptgeo/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pptgeo/errors.hpp"
#include "pptgeo/rng.hpp"
#include "pptgeo/states.hpp"

namespace pptgeo {
namespace {

double werner_min_pt(std::size_t d, double p) {
  const BipartiteSplit split{d, d};
  return is_ppt(werner({d, p}), split).min_pt_eigenvalue;
}

// Pure state with Schmidt rank `rank`: C = A B with A m x rank, B rank x n Gaussian.
PureState pure_with_rank(const BipartiteSplit& split, std::size_t rank, Rng& rng) {
  std::vector<Complex> a(split.m * rank);
  std::vector<Complex> b(rank * split.n);
  for (auto& z : a) z = rng.complex_normal();
  for (auto& z : b) z = rng.complex_normal();
  std::vector<Complex> psi(split.dim());
  for (std::size_t i = 0; i < split.m; ++i) {
    for (std::size_t k = 0; k < split.n; ++k) {
      Complex s = 0.0;
      for (std::size_t t = 0; t < rank; ++t) s += a[i * rank + t] * b[t * split.n + k];
      psi[i * split.n + k] = s;
    }
  }
  return PureState::normalized(std::move(psi));
}

}  // namespace

std::vector<double> unit_grid(std::size_t points) {
  if (points < 2) throw Error(ErrorCode::kInvalidArgument, "grid needs at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

SweepReport werner_sweep(std::size_t local_dim, const std::vector<double>& p_grid,
                         double bisection_tol) {
  if (local_dim < 2 || local_dim > 8) {
    throw Error(ErrorCode::kUnsupportedDim, "werner_sweep: d must lie in [2, 8]");
  }
  if (!(bisection_tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "bisection_tol <= 0");

  const std::size_t d = local_dim;
  const std::size_t dim = d * d;
  SweepReport report;
  report.local_dim = d;
  report.claimed_pm = werner_pm(dim);
  report.oracle_threshold = 1.0 / static_cast<double>(d + 1);

  std::vector<double> grid = p_grid;
  std::sort(grid.begin(), grid.end());
  const ComplexMatrix centre = maximally_mixed(dim).matrix();
  for (double p : grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "grid point outside [0, 1]");
    const DensityMatrix rho = werner({d, p});
    const PptCheck ppt = is_ppt(rho, {d, d});
    report.rows.push_back({p, hs_distance(rho.matrix(), centre), ppt.min_pt_eigenvalue, ppt.ppt});
  }

  double lo = 0.0;
  double hi = 1.0;
  double f_lo = werner_min_pt(d, lo);
  double f_hi = werner_min_pt(d, hi);
  report.bisection.push_back({lo, hi, f_lo, f_hi});
  while (hi - lo > bisection_tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = werner_min_pt(d, mid);
    if (f_mid >= 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
    report.bisection.push_back({lo, hi, f_lo, f_hi});
  }
  report.p_star = 0.5 * (lo + hi);
  return report;
}

ShellReport shell_scan(std::size_t dim, const BipartiteSplit& split,
                       const std::vector<double>& radii, std::size_t samples_per_shell,
                       std::uint64_t base_seed, std::size_t max_rejects) {
  split.validate_for(dim);
  const double outer = ball_radius(dim);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < outer)) {
      throw Error(ErrorCode::kInvalidArgument, "shell radius outside (0, ball_radius)");
    }
    if (i > 0 && radii[i] < radii[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "shell radii must be ascending");
    }
  }

  ShellReport report{dim, split, {}, base_seed, std::string(Rng::kGeneratorId)};
  for (std::size_t shell = 0; shell < radii.size(); ++shell) {
    Rng rng(base_seed + shell);
    ShellRow row{radii[shell], samples_per_shell, 0, 0, 0.0,
                 std::numeric_limits<double>::infinity(), 0, false, std::nullopt};
    for (std::size_t s = 0; s < samples_per_shell; ++s) {
      std::optional<ShellSample> sample;
      try {
        sample.emplace(sample_on_shell(dim, radii[shell], rng, max_rejects));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kShellUnreachable) throw;
        row.unreachable = true;
        row.rejects += max_rejects;
        break;
      }
      row.rejects += sample->rejects;
      ++row.accepted;
      const PptCheck ppt = is_ppt(sample->state, split);
      if (ppt.ppt) ++row.ppt_count;
      if (ppt.min_pt_eigenvalue < row.min_pt_eigenvalue) {
        row.min_pt_eigenvalue = ppt.min_pt_eigenvalue;
        row.worst_state = sample->state.matrix();
      }
    }
    if (row.accepted > 0) {
      row.ppt_fraction = static_cast<double>(row.ppt_count) / static_cast<double>(row.accepted);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

SpectrumCheckReport spectrum_check(const std::vector<BipartiteSplit>& splits, std::size_t trials,
                                   std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "spectrum_check: trials < 1");
  SpectrumCheckReport report{{}, seed, true};
  Rng rng(seed);
  for (const auto& split : splits) {
    split.validate();
    SpectrumCheckRow row{split, trials, 0.0, true, true};
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t rank = 1 + t % split.min_dim();
      const PureState psi = pure_with_rank(split, rank, rng);
      const SchmidtDecomposition sd = schmidt(psi, split);
      const std::vector<double> analytic = pt_spectrum_analytic(sd, split);
      const std::vector<double> numeric =
          hermitian_eigenvalues(partial_transpose(pure_density(psi), split));
      for (std::size_t k = 0; k < analytic.size(); ++k) {
        row.max_deviation = std::max(row.max_deviation, std::abs(analytic[k] - numeric[k]));
      }
      const auto zeros = [](const std::vector<double>& v) {
        return std::count_if(v.begin(), v.end(), [](double x) { return std::abs(x) <= kSpectrumTol; });
      };
      const std::size_t lo = split.min_dim();
      const std::size_t hi = std::max(split.m, split.n);
      const auto formula = static_cast<long>(lo * (hi - lo) + lo * lo - sd.rank * sd.rank);
      if (sd.rank != rank || zeros(numeric) != formula || zeros(analytic) != formula) {
        row.zero_counts_match = false;
      }
    }
    row.pass = row.max_deviation <= kSpectrumTol && row.zero_counts_match;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::kConsistent: return "CONSISTENT";
    case Verdict::kCounterexampleFound: return "COUNTEREXAMPLE_FOUND";
  }
  return "UNKNOWN";
}

ClaimCheckReport claim_check(std::size_t local_dim, std::size_t samples_per_shell,
                             std::uint64_t base_seed) {
  if (local_dim < 2 || local_dim > 6) {
    throw Error(ErrorCode::kUnsupportedDim, "claim_check: d must lie in [2, 6]");
  }
  const std::size_t d = local_dim;
  const BipartiteSplit split{d, d};
  const BoundsTable table = bounds_table(d, 2);

  SweepReport sweep = werner_sweep(d, unit_grid(21));
  std::vector<double> radii;
  for (double f : {0.5, 0.9, 0.99, 1.0}) radii.push_back(f * table.ppt_radius);
  ShellReport shells = shell_scan(table.dim, split, radii, samples_per_shell, base_seed);
  SpectrumCheckReport spectrum = spectrum_check({split}, 50, base_seed);

  ClaimCheckReport report{d, table, std::move(sweep), std::move(shells), std::move(spectrum),
                          std::nullopt, Verdict::kConsistent, std::nullopt};
  const ComplexMatrix centre = maximally_mixed(table.dim).matrix();

  // Werner probe: halfway between the numeric PPT threshold and the claimed one.
  if (report.sweep.p_star < report.sweep.claimed_pm - kCounterexampleTol) {
    const double p = 0.5 * (report.sweep.p_star + report.sweep.claimed_pm);
    report.probe_p = p;
    const DensityMatrix rho = werner({d, p});
    const double distance = hs_distance(rho.matrix(), centre);
    const PptCheck ppt = is_ppt(rho, split);
    if (distance <= table.ppt_radius && ppt.min_pt_eigenvalue < -kCounterexampleTol) {
      report.counterexample =
          Counterexample{"werner-probe", rho.matrix(), split, distance, ppt.min_pt_eigenvalue, p};
    }
  }

  if (!report.counterexample) {
    for (const ShellRow& row : report.shells.rows) {
      if (!row.worst_state || row.radius > table.ppt_radius) continue;
      if (row.min_pt_eigenvalue < -kCounterexampleTol) {
        report.counterexample = Counterexample{"shell-scan",
                                               *row.worst_state,
                                               split,
                                               hs_distance(*row.worst_state, centre),
                                               row.min_pt_eigenvalue,
                                               std::nullopt};
        break;
      }
    }
  }

  if (report.counterexample) report.verdict = Verdict::kCounterexampleFound;
  return report;
}

}  // namespace pptgeo
