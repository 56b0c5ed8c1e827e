#include "pptgeo/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pptgeo/errors.hpp"

namespace pptgeo {
namespace {

using nlohmann::json;

json pairs(std::span<const Complex> values) {
  json out = json::array();
  for (const auto& z : values) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

std::vector<Complex> read_pairs(const json& arr, std::size_t expected, const char* field) {
  if (!arr.is_array() || arr.size() != expected) {
    throw Error(ErrorCode::kParseError, std::string("'") + field + "' must hold " +
                                            std::to_string(expected) + " [re, im] pairs");
  }
  std::vector<Complex> out;
  out.reserve(expected);
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw Error(ErrorCode::kParseError, std::string("'") + field + "' entries must be [re, im]");
    }
    out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

std::size_t read_dim(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    throw Error(ErrorCode::kParseError, "missing or invalid 'dim'");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  if (dim == 0) throw Error(ErrorCode::kParseError, "'dim' must be positive");
  return dim;
}

std::optional<BipartiteSplit> read_split(const json& doc, std::size_t dim) {
  if (!doc.contains("factors") || doc["factors"].is_null()) return std::nullopt;
  const json& f = doc["factors"];
  if (!f.is_array() || f.size() != 2 || !f[0].is_number_integer() || !f[1].is_number_integer() ||
      f[0].get<long long>() < 1 || f[1].get<long long>() < 1) {
    throw Error(ErrorCode::kParseError, "'factors' must be [m, n]");
  }
  BipartiteSplit split{f[0].get<std::size_t>(), f[1].get<std::size_t>()};
  split.validate_for(dim);
  return split;
}

void write_split(json& doc, const std::optional<BipartiteSplit>& split) {
  if (split) doc["factors"] = json::array({split->m, split->n});
}

}  // namespace

json matrix_to_json(const ComplexMatrix& matrix, const std::optional<BipartiteSplit>& split) {
  json doc;
  doc["dim"] = matrix.dim();
  write_split(doc, split);
  doc["data"] = pairs(matrix.data());
  return doc;
}

MatrixFile matrix_from_json(const json& doc) {
  const std::size_t dim = read_dim(doc);
  if (!doc.contains("data")) throw Error(ErrorCode::kParseError, "missing 'data'");
  auto split = read_split(doc, dim);
  return {ComplexMatrix(dim, read_pairs(doc["data"], dim * dim, "data")), split};
}

json state_to_json(const PureState& psi, const std::optional<BipartiteSplit>& split) {
  json doc;
  doc["dim"] = psi.dim();
  write_split(doc, split);
  doc["amplitudes"] = pairs(psi.amplitudes());
  return doc;
}

StateFile state_from_json(const json& doc) {
  const std::size_t dim = read_dim(doc);
  auto split = read_split(doc, dim);
  if (doc.contains("amplitudes")) {
    return {PureState::normalized(read_pairs(doc["amplitudes"], dim, "amplitudes")), split};
  }
  if (!doc.contains("data")) throw Error(ErrorCode::kParseError, "need 'amplitudes' or 'data'");
  const DensityMatrix rho(ComplexMatrix(dim, read_pairs(doc["data"], dim * dim, "data")));
  if (std::abs(rho.purity() - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidState, "matrix is not a pure state (purity " +
                                              std::to_string(rho.purity()) + ")");
  }
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  return {PureState::normalized(eig.vector(dim - 1)), split};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << body;
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace pptgeo
