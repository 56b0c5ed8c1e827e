#pragma once

// Matrix and state JSON files.
//
//   {"dim": N, "factors": [m, n], "data": [[re, im], ...]}        row-major matrix
//   {"dim": N, "factors": [m, n], "amplitudes": [[re, im], ...]}  pure state
//
// "factors" is optional. Doubles are written in shortest round-trip form, so
// a load after a save reproduces every entry bit for bit.

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pptgeo/bipartite.hpp"
#include "pptgeo/linalg.hpp"
#include "pptgeo/states.hpp"

namespace pptgeo {

struct MatrixFile {
  ComplexMatrix matrix;
  std::optional<BipartiteSplit> split;
};

struct StateFile {
  PureState state;
  std::optional<BipartiteSplit> split;
};

nlohmann::json matrix_to_json(const ComplexMatrix& matrix,
                              const std::optional<BipartiteSplit>& split = std::nullopt);
MatrixFile matrix_from_json(const nlohmann::json& doc);

nlohmann::json state_to_json(const PureState& psi,
                             const std::optional<BipartiteSplit>& split = std::nullopt);

/// Accepts either an "amplitudes" document or a rank-one "data" matrix
/// (purity within 1e-9 of 1), in which case the dominant eigenvector is used.
StateFile state_from_json(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& body);

/// printf("%.17g").
std::string format_double(double value);

}  // namespace pptgeo
