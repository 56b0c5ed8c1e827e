// Cyclic complex Jacobi for Hermitian matrices.
//
// Each (p,q) step is a phase fix that makes a_pq real and positive, followed
// by the classic real Jacobi rotation. Combined 2x2 block of the unitary:
//
//   J = [  c          s         ]     e = a_pq / |a_pq|
//       [ -s conj(e)  c conj(e) ]
//
// and A <- J^H A J, V <- V J.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pptgeo/errors.hpp"
#include "pptgeo/linalg.hpp"

namespace pptgeo {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

void rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;

  const Complex e = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(e);
  const Complex jqq = c * std::conj(e);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p);
      const Complex vkq = (*v)(k, q);
      (*v)(k, p) = vkp * jpp + vkq * jqp;
      (*v)(k, q) = vkp * jpq + vkq * jqq;
    }
  }
}

void diagonalize(ComplexMatrix& a, ComplexMatrix* v, const EigenOptions& options) {
  const std::size_t n = a.dim();
  const double target = options.off_diagonal_tol * std::max(1.0, frob_norm(a));
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }
  if (off_diagonal_norm(a) > target) {
    throw Error(ErrorCode::kNoConvergence,
                "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
  }
}

}  // namespace

std::vector<Complex> HermitianEigen::vector(std::size_t k) const {
  std::vector<Complex> col(eigenvectors.dim());
  for (std::size_t i = 0; i < col.size(); ++i) col[i] = eigenvectors(i, k);
  return col;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h, const EigenOptions& options) {
  if (h.dim() == 0) throw Error(ErrorCode::kInvalidArgument, "hermitian_eigen: empty matrix");
  ComplexMatrix a = require_hermitian(h, options.hermitian_tol);
  ComplexMatrix v = ComplexMatrix::identity(a.dim());
  diagonalize(a, &v, options);

  const std::size_t n = a.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const EigenOptions& options) {
  if (h.dim() == 0) throw Error(ErrorCode::kInvalidArgument, "hermitian_eigen: empty matrix");
  ComplexMatrix a = require_hermitian(h, options.hermitian_tol);
  diagonalize(a, nullptr, options);
  std::vector<double> values(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) values[k] = a(k, k).real();
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace pptgeo
