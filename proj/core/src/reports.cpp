#include <cmath>
#include <sstream>

#include "pptgeo/errors.hpp"
#include "pptgeo/harness.hpp"
#include "pptgeo/matrix_io.hpp"
#include "pptgeo/rng.hpp"

#ifndef PPTGEO_VERSION
#define PPTGEO_VERSION "0.0.0"
#endif

namespace pptgeo {

using nlohmann::json;

namespace {

json finite_or_null(double value) { return std::isfinite(value) ? json(value) : json(nullptr); }

void csv_header(std::ostringstream& out, std::optional<std::uint64_t> seed) {
  out << "# tool=pptgeo " << tool_version() << '\n';
  out << "# generator=" << Rng::kGeneratorId << '\n';
  out << "# seed=" << (seed ? std::to_string(*seed) : std::string("none")) << '\n';
}

}  // namespace

std::string tool_version() { return PPTGEO_VERSION; }

json report_header(std::optional<std::uint64_t> seed) {
  json h;
  h["tool"] = "pptgeo";
  h["version"] = tool_version();
  h["generator"] = std::string(Rng::kGeneratorId);
  h["seed"] = seed ? json(*seed) : json(nullptr);
  return h;
}

json to_json(const BoundsTable& t) {
  return {{"N", t.dim},
          {"d", t.local_dim},
          {"n", t.parties},
          {"ball_radius", t.ball_radius},
          {"separable_radius", t.separable_radius},
          {"ppt_radius", t.ppt_radius},
          {"werner_pm", t.werner_pm}};
}

json to_json(const ZoneClassification& zc) {
  return {{"distance", zc.distance},
          {"zone", std::string(to_string(zc.zone))},
          {"numeric_ppt", zc.numeric_ppt},
          {"min_pt_eigenvalue", zc.min_pt_eigenvalue},
          {"contradiction_flag", zc.contradiction_flag}};
}

json to_json(const SweepReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"p", row.p},
                    {"distance", row.distance},
                    {"min_pt_eig", row.min_pt_eigenvalue},
                    {"ppt", row.ppt}});
  }
  return {{"d", r.local_dim},
          {"p_star", r.p_star},
          {"claimed_pm", r.claimed_pm},
          {"oracle_threshold", r.oracle_threshold},
          {"discrepancy", r.claimed_pm - r.p_star},
          {"bisection_steps", r.bisection.size()},
          {"rows", rows}};
}

json to_json(const ShellReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"radius", row.radius},
                    {"samples", row.samples},
                    {"accepted", row.accepted},
                    {"ppt_count", row.ppt_count},
                    {"ppt_fraction", row.ppt_fraction},
                    {"min_pt_eig", finite_or_null(row.min_pt_eigenvalue)},
                    {"rejects", row.rejects},
                    {"unreachable", row.unreachable}});
  }
  return {{"N", r.dim},
          {"split", r.split.to_string()},
          {"seed", r.seed},
          {"generator", r.generator},
          {"rows", rows}};
}

json to_json(const SpectrumCheckReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"split", row.split.to_string()},
                    {"trials", row.trials},
                    {"max_deviation", row.max_deviation},
                    {"zero_counts_match", row.zero_counts_match},
                    {"pass", row.pass}});
  }
  return {{"seed", r.seed}, {"pass", r.pass}, {"rows", rows}};
}

json to_json(const ClaimCheckReport& r) {
  json doc;
  doc["header"] = report_header(r.shells.seed);
  doc["d"] = r.local_dim;
  doc["bounds"] = to_json(r.table);
  json sweep = to_json(r.sweep);
  sweep.erase("rows");
  doc["werner_sweep"] = sweep;
  doc["shell_scan"] = to_json(r.shells);
  doc["spectrum_check"] = to_json(r.spectrum);
  doc["probe_p"] = r.probe_p ? json(*r.probe_p) : json(nullptr);
  doc["verdict"] = std::string(to_string(r.verdict));
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    doc["counterexample"] = {{"source", c.source},
                             {"distance", c.distance},
                             {"min_pt_eigenvalue", c.min_pt_eigenvalue},
                             {"werner_p", c.werner_p ? json(*c.werner_p) : json(nullptr)},
                             {"state", matrix_to_json(c.state, c.split)}};
  } else {
    doc["counterexample"] = nullptr;
  }
  return doc;
}

json to_json(const WitnessResult& r, const BipartiteSplit& split) {
  json doc;
  doc["found"] = r.found;
  doc["value"] = r.value;
  doc["restarts_used"] = r.restarts_used;
  doc["best_restart"] = r.best_restart;
  doc["witness"] = r.witness ? state_to_json(*r.witness, split) : json(nullptr);
  return doc;
}

std::string sweep_to_csv(const SweepReport& r) {
  std::ostringstream out;
  csv_header(out, std::nullopt);
  out << "# d=" << r.local_dim << '\n';
  out << "# p_star=" << format_double(r.p_star) << '\n';
  out << "# claimed_pm=" << format_double(r.claimed_pm) << '\n';
  out << "# oracle_threshold=" << format_double(r.oracle_threshold) << '\n';
  out << "p,distance,min_pt_eig,ppt\n";
  for (const auto& row : r.rows) {
    out << format_double(row.p) << ',' << format_double(row.distance) << ','
        << format_double(row.min_pt_eigenvalue) << ',' << (row.ppt ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string shell_to_csv(const ShellReport& r) {
  std::ostringstream out;
  csv_header(out, r.seed);
  out << "# N=" << r.dim << '\n';
  out << "# split=" << r.split.to_string() << '\n';
  out << "radius,samples,accepted,ppt_count,ppt_fraction,min_pt_eig,rejects,unreachable\n";
  for (const auto& row : r.rows) {
    out << format_double(row.radius) << ',' << row.samples << ',' << row.accepted << ','
        << row.ppt_count << ',' << format_double(row.ppt_fraction) << ','
        << format_double(row.min_pt_eigenvalue) << ',' << row.rejects << ','
        << (row.unreachable ? 1 : 0) << '\n';
  }
  return out.str();
}

std::optional<CounterexampleRecheck> recheck_counterexample(const json& claim_report) {
  if (!claim_report.contains("counterexample") || claim_report["counterexample"].is_null()) {
    return std::nullopt;
  }
  const MatrixFile file = matrix_from_json(claim_report["counterexample"].at("state"));
  if (!file.split) throw Error(ErrorCode::kParseError, "counterexample state lacks 'factors'");
  const DensityMatrix rho(file.matrix);
  const double distance = hs_distance(rho.matrix(), maximally_mixed(rho.dim()).matrix());
  const PptCheck ppt = is_ppt(rho, *file.split);
  const double radius = ppt_radius(rho.dim());
  return CounterexampleRecheck{
      distance <= radius && ppt.min_pt_eigenvalue < -kCounterexampleTol, distance,
      ppt.min_pt_eigenvalue, radius};
}

}  // namespace pptgeo
