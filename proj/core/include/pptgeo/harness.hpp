#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pptgeo/bipartite.hpp"
#include "pptgeo/bounds.hpp"
#include "pptgeo/distill.hpp"
#include "pptgeo/linalg.hpp"

namespace pptgeo {

// --- Werner sweep ----------------------------------------------------------

struct SweepRow {
  double p;
  double distance;
  double min_pt_eigenvalue;
  bool ppt;
};

struct BisectionStep {
  double lo, hi;
  double f_lo, f_hi;  // min PT eigenvalue at the bracket ends
};

struct SweepReport {
  std::size_t local_dim;
  std::vector<SweepRow> rows;  // ordered by p
  double p_star;               // root of the min PT eigenvalue in p
  double claimed_pm;             // werner_pm(d^2)
  double oracle_threshold;     // 1 / (d + 1)
  std::vector<BisectionStep> bisection;
};

/// k evenly spaced points covering [0, 1]; k >= 2.
std::vector<double> unit_grid(std::size_t points);

inline constexpr double kDefaultBisectionTol = 1e-10;

/// d in [2, 8]. Rows are computed numerically from werner(d, p).
SweepReport werner_sweep(std::size_t local_dim, const std::vector<double>& p_grid,
                         double bisection_tol = kDefaultBisectionTol);

// --- Shell scan ------------------------------------------------------------

struct ShellRow {
  double radius;
  std::size_t samples;
  std::size_t accepted;
  std::size_t ppt_count;
  double ppt_fraction;          // ppt_count / accepted, 0 when nothing accepted
  double min_pt_eigenvalue;     // over accepted samples; +inf when none
  std::size_t rejects;          // non-PSD draws discarded while filling the shell
  bool unreachable;             // sampler gave up (ShellUnreachable)
  std::optional<ComplexMatrix> worst_state;  // accepted sample with the lowest PT eigenvalue
};

struct ShellReport {
  std::size_t dim;
  BipartiteSplit split;
  std::vector<ShellRow> rows;
  std::uint64_t seed;
  std::string generator;
};

inline constexpr std::size_t kDefaultSamplesPerShell = 2000;

/// Shell i draws from its own stream seeded with base_seed + i.
ShellReport shell_scan(std::size_t dim, const BipartiteSplit& split,
                       const std::vector<double>& radii, std::size_t samples_per_shell,
                       std::uint64_t base_seed, std::size_t max_rejects = kDefaultMaxRejects);

// --- Spectrum check --------------------------------------------------------

struct SpectrumCheckRow {
  BipartiteSplit split;
  std::size_t trials;
  double max_deviation;
  bool zero_counts_match;
  bool pass;
};

struct SpectrumCheckReport {
  std::vector<SpectrumCheckRow> rows;
  std::uint64_t seed;
  bool pass;
};

inline constexpr double kSpectrumTol = 1e-9;

/// Random pure states with Schmidt rank cycling through 1..min(m, n);
/// compares the closed-form PT spectrum with the eigensolver.
SpectrumCheckReport spectrum_check(const std::vector<BipartiteSplit>& splits, std::size_t trials,
                                   std::uint64_t seed);

// --- Claim check -----------------------------------------------------------

enum class Verdict { kConsistent, kCounterexampleFound };

std::string_view to_string(Verdict verdict) noexcept;

struct Counterexample {
  std::string source;  // "werner-probe" or "shell-scan"
  ComplexMatrix state;
  BipartiteSplit split;
  double distance;
  double min_pt_eigenvalue;
  std::optional<double> werner_p;
};

struct ClaimCheckReport {
  std::size_t local_dim;
  BoundsTable table;
  SweepReport sweep;
  ShellReport shells;
  SpectrumCheckReport spectrum;
  std::optional<double> probe_p;
  Verdict verdict;
  std::optional<Counterexample> counterexample;
};

inline constexpr double kCounterexampleTol = 1e-9;

/// d in [2, 6]. Checks whether every state within ppt_radius(d^2) of I/N is PPT,
/// probing the Werner family first and then the shell samples.
ClaimCheckReport claim_check(std::size_t local_dim, std::size_t samples_per_shell,
                             std::uint64_t base_seed);

// --- Reports ---------------------------------------------------------------

std::string tool_version();

nlohmann::json report_header(std::optional<std::uint64_t> seed);

nlohmann::json to_json(const BoundsTable& table);
nlohmann::json to_json(const ZoneClassification& zc);
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const ShellReport& report);
nlohmann::json to_json(const SpectrumCheckReport& report);
nlohmann::json to_json(const ClaimCheckReport& report);
nlohmann::json to_json(const WitnessResult& result, const BipartiteSplit& split);

/// "# key=value" header lines followed by the column header and rows.
std::string sweep_to_csv(const SweepReport& report);
std::string shell_to_csv(const ShellReport& report);

struct CounterexampleRecheck {
  bool valid;
  double distance;
  double min_pt_eigenvalue;
  double ppt_radius;
};

/// Recomputes distance and PT spectrum from the serialized state in a
/// claim-check JSON document. Returns nullopt when no counterexample is attached.
std::optional<CounterexampleRecheck> recheck_counterexample(const nlohmann::json& claim_report);

}  // namespace pptgeo
