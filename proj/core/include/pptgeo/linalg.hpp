#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pptgeo {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
///
/// Entries are required to be finite; constructors that take external data
/// reject NaN/Inf with ErrorCode::kInvalidArgument.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

inline constexpr double kHermitianTol = 1e-10;

Complex trace(const ComplexMatrix& a);
double frob_norm(const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Tr(AB) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |A_ij - conj(A_ji)|.
double hermiticity_defect(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws kNotHermitian when the defect exceeds tol, otherwise returns (A + A†)/2.
ComplexMatrix require_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// Hilbert-Schmidt distance sqrt(Tr (A-B)^2) between Hermitian matrices.
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>
double norm2(std::span<const Complex> v);

/// <v|H|v> for Hermitian H (imaginary part discarded).
double expectation(const ComplexMatrix& h, std::span<const Complex> v);

/// Kronecker product of two kets.
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// ---------------------------------------------------------------------------
// Hermitian eigensolver

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]

  std::vector<Complex> vector(std::size_t k) const;
};

struct EigenOptions {
  double off_diagonal_tol = 1e-12;  // relative to max(1, ||H||_F)
  int max_sweeps = 100;
  double hermitian_tol = kHermitianTol;
};

/// Cyclic complex Jacobi. Throws kNotHermitian or kNoConvergence.
HermitianEigen hermitian_eigen(const ComplexMatrix& h, const EigenOptions& options = {});

/// Eigenvalues only; same algorithm without accumulating eigenvectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const EigenOptions& options = {});

struct PsdCheck {
  bool psd;
  double min_eigenvalue;
};

PsdCheck is_psd(const ComplexMatrix& h, double tol);

}  // namespace pptgeo
