#include "pptgeo/bipartite.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "pptgeo/errors.hpp"

namespace pptgeo {

void BipartiteSplit::validate() const {
  if (m < 2 || n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "split factors must be >= 2, got " + to_string());
  }
}

void BipartiteSplit::validate_for(std::size_t state_dim) const {
  validate();
  if (m * n != state_dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "split " + to_string() + " does not match dimension " + std::to_string(state_dim));
  }
}

std::string BipartiteSplit::to_string() const {
  return std::to_string(m) + "x" + std::to_string(n);
}

BipartiteSplit BipartiteSplit::parse(std::string_view text) {
  const auto x = text.find_first_of("xX");
  auto parse_part = [&](std::string_view part) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw Error(ErrorCode::kParseError, "bad split '" + std::string(text) + "', want <m>x<n>");
    }
    return value;
  };
  if (x == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "bad split '" + std::string(text) + "', want <m>x<n>");
  }
  BipartiteSplit split{parse_part(text.substr(0, x)), parse_part(text.substr(x + 1))};
  split.validate();
  return split;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteSplit& split) {
  split.validate_for(rho.dim());
  const std::size_t m = split.m;
  const std::size_t n = split.n;
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = rho(i * n + l, j * n + k);
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const BipartiteSplit& split) {
  return partial_transpose(rho.matrix(), split);
}

SchmidtDecomposition schmidt(const PureState& psi, const BipartiteSplit& split, double rank_tol) {
  split.validate_for(psi.dim());
  const std::size_t m = split.m;
  const std::size_t n = split.n;
  const auto amps = psi.amplitudes();

  // C C^H, with C[i][k] = psi[i * n + k].
  ComplexMatrix cct(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += amps[i * n + k] * std::conj(amps[j * n + k]);
      cct(i, j) = s;
    }
  }
  const HermitianEigen eig = hermitian_eigen(cct);

  struct Term {
    double coefficient;
    std::vector<Complex> left;
    std::vector<Complex> right;  // conj(C^H e), unnormalized
  };
  std::vector<Term> terms;
  terms.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<Complex> e = eig.vector(c);
    std::vector<Complex> f(n);
    for (std::size_t k = 0; k < n; ++k) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += std::conj(e[i]) * amps[i * n + k];
      f[k] = s;  // (e^H C)_k = conj((C^H e)_k)
    }
    terms.push_back({norm2(f), std::move(e), std::move(f)});
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.coefficient > b.coefficient; });

  SchmidtDecomposition sd;
  const std::size_t keep = split.min_dim();
  for (std::size_t t = 0; t < keep; ++t) {
    Term& term = terms[t];
    sd.coefficients.push_back(term.coefficient);
    if (term.coefficient > rank_tol) {
      for (auto& z : term.right) z /= term.coefficient;
      sd.left.push_back(std::move(term.left));
      sd.right.push_back(std::move(term.right));
      ++sd.rank;
    }
  }
  return sd;
}

std::vector<Complex> schmidt_reconstruct(const SchmidtDecomposition& sd,
                                         const BipartiteSplit& split) {
  std::vector<Complex> psi(split.dim());
  for (std::size_t t = 0; t < sd.rank; ++t) {
    for (std::size_t i = 0; i < split.m; ++i) {
      for (std::size_t k = 0; k < split.n; ++k) {
        psi[i * split.n + k] += sd.coefficients[t] * sd.left[t][i] * sd.right[t][k];
      }
    }
  }
  return psi;
}

std::vector<double> pt_spectrum_analytic(const SchmidtDecomposition& sd,
                                         const BipartiteSplit& split) {
  split.validate();
  const auto r = static_cast<long long>(sd.rank);
  const auto lo = static_cast<long long>(split.min_dim());
  const auto hi = static_cast<long long>(std::max(split.m, split.n));
  if (sd.rank > sd.coefficients.size() || r > lo) {
    throw Error(ErrorCode::kMultiplicityNegative, "Schmidt rank exceeds min(m, n)");
  }
  const long long zeros = lo * (hi - lo) + lo * lo - r * r;
  if (zeros < 0) throw Error(ErrorCode::kMultiplicityNegative, "negative zero multiplicity");

  std::vector<double> spectrum;
  spectrum.reserve(split.dim());
  for (std::size_t i = 0; i < sd.rank; ++i) {
    spectrum.push_back(sd.coefficients[i] * sd.coefficients[i]);
    for (std::size_t j = i + 1; j < sd.rank; ++j) {
      const double cross = sd.coefficients[i] * sd.coefficients[j];
      spectrum.push_back(cross);
      spectrum.push_back(-cross);
    }
  }
  spectrum.insert(spectrum.end(), static_cast<std::size_t>(zeros), 0.0);
  if (spectrum.size() != split.dim()) {
    throw Error(ErrorCode::kMultiplicityNegative, "PT spectrum count != m * n");
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

PptCheck is_ppt(const DensityMatrix& rho, const BipartiteSplit& split, double tol) {
  const double lo = hermitian_eigenvalues(partial_transpose(rho, split)).front();
  return {lo >= -tol, lo};
}

}  // namespace pptgeo
