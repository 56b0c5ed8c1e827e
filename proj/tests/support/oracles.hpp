#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: eigenvalues come from Eigen, distances and traces are
// summed entrywise, Werner spectra come from the closed form.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pptgeo/errors.hpp"
#include "pptgeo/linalg.hpp"
#include "pptgeo/rng.hpp"

namespace oracle {

using pptgeo::Complex;
using pptgeo::ComplexMatrix;

inline std::vector<double> eigenvalues(const ComplexMatrix& h) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = h(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

inline double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - b(i, j));
  }
  return std::sqrt(s);
}

// Smallest PT eigenvalue of the isotropic family p Phi + (1-p) I/d^2.
// PT(Phi) = F/d with F the swap (eigenvalues +-1).
inline double werner_lambda_min(std::size_t d, double p) {
  const double dd = static_cast<double>(d);
  return (1.0 - p) / (dd * dd) - p / dd;
}

// Tr_B |psi><psi| summed directly from amplitudes.
inline ComplexMatrix reduced_a(std::span<const Complex> psi, std::size_t m, std::size_t n) {
  ComplexMatrix r(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += psi[i * n + k] * std::conj(psi[j * n + k]);
      r(i, j) = s;
    }
  }
  return r;
}

// a I - b F on C^d (x) C^d with a = 1/d^2 + t/(d^2-1), b chosen so Tr = 1 and
// PT = a I - (b d) Phi. For d = 3 the PT ground eigenvalue is 1/9 - t.
inline ComplexMatrix swap_family(std::size_t d, double t) {
  const double n = static_cast<double>(d * d);
  const double a = 1.0 / n + t / (n - 1.0);
  const double b = t * n / ((n - 1.0) * static_cast<double>(d));
  ComplexMatrix m(d * d);
  for (std::size_t i = 0; i < d * d; ++i) m(i, i) = a;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) m(i * d + k, k * d + i) -= b;
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, pptgeo::Rng& rng, double scale = 1.0) {
  ComplexMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = scale * rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex z = scale * rng.complex_normal();
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

inline std::optional<pptgeo::ErrorCode> thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const pptgeo::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace oracle
