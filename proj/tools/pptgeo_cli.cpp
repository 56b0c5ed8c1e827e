// pptgeo: command-line front end for the density-matrix geometry toolkit.
//
// Every subcommand writes a deterministic body (JSON or CSV) to stdout, or to
// --out when given. Library errors are reported on stderr with exit code 2.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pptgeo/bipartite.hpp"
#include "pptgeo/bounds.hpp"
#include "pptgeo/distill.hpp"
#include "pptgeo/errors.hpp"
#include "pptgeo/harness.hpp"
#include "pptgeo/matrix_io.hpp"

namespace {

using nlohmann::json;
using namespace pptgeo;

void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
  } else {
    write_text_file(out_path, body);
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

BipartiteSplit resolve_split(const std::string& text, const std::optional<BipartiteSplit>& from_file,
                             std::size_t dim) {
  BipartiteSplit split;
  if (!text.empty()) {
    split = BipartiteSplit::parse(text);
  } else if (from_file) {
    split = *from_file;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "--split is required when the file has no 'factors'");
  }
  split.validate_for(dim);
  return split;
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> radii;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      radii.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad radius '" + item + "'");
    }
  }
  if (radii.empty()) throw Error(ErrorCode::kParseError, "--radii is empty");
  return radii;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Schmidt geometry of PPT and separable states"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::size_t d = 2;
  std::size_t n = 2;
  std::size_t big_n = 4;
  std::size_t grid = 21;
  std::size_t samples = kDefaultSamplesPerShell;
  std::size_t restarts = 64;
  std::size_t iters = 50;
  std::uint64_t seed = 0;
  std::string input;
  std::string split_text;
  std::string radii_text;
  std::string out;

  auto* bounds_cmd = app.add_subcommand("bounds", "Print the radii table for d^n");
  bounds_cmd->add_option("--d", d, "Local dimension")->required();
  bounds_cmd->add_option("--n", n, "Number of parties")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Distance zone and numeric PPT of a state");
  classify_cmd->add_option("--input", input, "Matrix JSON")->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--split", split_text, "<m>x<n>, m == n");

  auto* spectrum_cmd = app.add_subcommand("pt-spectrum", "Analytic vs numeric PT spectrum of a pure state");
  spectrum_cmd->add_option("--input", input, "State JSON")->required()->check(CLI::ExistingFile);
  spectrum_cmd->add_option("--split", split_text, "<m>x<n>");

  auto* sweep_cmd = app.add_subcommand("werner-sweep", "Werner family PPT threshold sweep (CSV)");
  sweep_cmd->add_option("--d", d, "Local dimension, 2..8")->required();
  sweep_cmd->add_option("--grid", grid, "Number of p grid points")->check(CLI::Range(2, 100000));
  sweep_cmd->add_option("--out", out, "CSV output path");

  auto* shell_cmd = app.add_subcommand("shell-scan", "PPT fraction on distance shells (CSV)");
  shell_cmd->add_option("--N", big_n, "Total dimension")->required();
  shell_cmd->add_option("--split", split_text, "<m>x<n>")->required();
  shell_cmd->add_option("--radii", radii_text, "Comma-separated ascending radii")->required();
  shell_cmd->add_option("--samples", samples, "Samples per shell")->required();
  shell_cmd->add_option("--seed", seed, "Base seed")->required();
  shell_cmd->add_option("--out", out, "CSV output path");

  auto* claim_cmd = app.add_subcommand("claim-check", "Adjudicate the PPT radius for d x d (JSON)");
  claim_cmd->add_option("--d", d, "Local dimension, 2..6")->required();
  claim_cmd->add_option("--samples", samples, "Samples per shell");
  claim_cmd->add_option("--seed", seed, "Base seed");
  claim_cmd->add_option("--out", out, "JSON output path");

  auto* witness_cmd = app.add_subcommand("distill-witness", "Search for a Schmidt-rank-2 distillability witness");
  witness_cmd->add_option("--input", input, "Matrix JSON")->required()->check(CLI::ExistingFile);
  witness_cmd->add_option("--split", split_text, "<m>x<n>");
  witness_cmd->add_option("--restarts", restarts, "Random restarts")->check(CLI::PositiveNumber);
  witness_cmd->add_option("--iters", iters, "Alternations per restart")->check(CLI::PositiveNumber);
  witness_cmd->add_option("--seed", seed, "Base seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bounds_cmd) {
      json doc;
      doc["header"] = report_header(std::nullopt);
      doc["bounds"] = to_json(bounds_table(d, n));
      emit(dump(doc), "");
    } else if (*classify_cmd) {
      const MatrixFile file = matrix_from_json(read_json_file(input));
      const DensityMatrix rho(file.matrix);
      const BipartiteSplit split = resolve_split(split_text, file.split, rho.dim());
      if (split.m != split.n) {
        throw Error(ErrorCode::kUnsupportedDim, "classify needs a d x d split");
      }
      json doc;
      doc["header"] = report_header(std::nullopt);
      doc["split"] = split.to_string();
      doc["bounds"] = to_json(bounds_table(split.m, 2));
      doc["classification"] = to_json(classify(rho, split, bounds_table(split.m, 2)));
      emit(dump(doc), "");
    } else if (*spectrum_cmd) {
      const StateFile file = state_from_json(read_json_file(input));
      const BipartiteSplit split = resolve_split(split_text, file.split, file.state.dim());
      const SchmidtDecomposition sd = schmidt(file.state, split);
      const std::vector<double> analytic = pt_spectrum_analytic(sd, split);
      const std::vector<double> numeric =
          hermitian_eigenvalues(partial_transpose(pure_density(file.state), split));
      double deviation = 0.0;
      for (std::size_t k = 0; k < analytic.size(); ++k) {
        deviation = std::max(deviation, std::abs(analytic[k] - numeric[k]));
      }
      json doc;
      doc["header"] = report_header(std::nullopt);
      doc["split"] = split.to_string();
      doc["schmidt_rank"] = sd.rank;
      doc["schmidt_coefficients"] = sd.coefficients;
      doc["analytic"] = analytic;
      doc["numeric"] = numeric;
      doc["max_deviation"] = deviation;
      emit(dump(doc), "");
    } else if (*sweep_cmd) {
      emit(sweep_to_csv(werner_sweep(d, unit_grid(grid))), out);
    } else if (*shell_cmd) {
      const BipartiteSplit split = BipartiteSplit::parse(split_text);
      emit(shell_to_csv(shell_scan(big_n, split, parse_radii(radii_text), samples, seed)), out);
    } else if (*claim_cmd) {
      emit(dump(to_json(claim_check(d, samples, seed))), out);
    } else if (*witness_cmd) {
      const MatrixFile file = matrix_from_json(read_json_file(input));
      const DensityMatrix rho(file.matrix);
      const BipartiteSplit split = resolve_split(split_text, file.split, rho.dim());
      const WitnessResult result = find_schmidt2_witness(rho, split, {restarts, iters, seed});
      json doc;
      doc["header"] = report_header(seed);
      doc["split"] = split.to_string();
      doc["result"] = to_json(result, split);
      emit(dump(doc), "");
    }
  } catch (const Error& e) {
    std::cerr << "pptgeo: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
