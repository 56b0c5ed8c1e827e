#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "pptgeo/bipartite.hpp"
#include "pptgeo/errors.hpp"
#include "pptgeo/linalg.hpp"
#include "pptgeo/rng.hpp"
#include "pptgeo/states.hpp"

using namespace pptgeo;

namespace {

double reconstruction_residual(const ComplexMatrix& h, const HermitianEigen& eig) {
  const ComplexMatrix lambda = ComplexMatrix::diagonal(eig.eigenvalues);
  const ComplexMatrix rebuilt = matmul(matmul(eig.eigenvectors, lambda), adjoint(eig.eigenvectors));
  return frob_norm(h - rebuilt);
}

double unitarity_defect(const ComplexMatrix& v) {
  return max_abs_diff(matmul(adjoint(v), v), ComplexMatrix::identity(v.dim()));
}

}  // namespace

TEST_CASE("hermitian_eigen: closed-form spectra") {
  SUBCASE("identity") {
    const auto eig = hermitian_eigen(ComplexMatrix::identity(3));
    for (double v : eig.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("diagonal input is sorted") {
    const std::vector<double> diag{3.0, 1.0, 2.0};
    const auto eig = hermitian_eigen(ComplexMatrix::diagonal(diag));
    CHECK(eig.eigenvalues == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(unitarity_defect(eig.eigenvectors) == 0.0);
  }
  SUBCASE("pauli x") {
    const ComplexMatrix x(2, {0.0, 1.0, 1.0, 0.0});
    const auto eig = hermitian_eigen(x);
    CHECK(std::abs(eig.eigenvalues[0] + 1.0) < 1e-15);
    CHECK(std::abs(eig.eigenvalues[1] - 1.0) < 1e-15);
    CHECK(reconstruction_residual(x, eig) < 1e-14);
  }
  SUBCASE("pauli y needs the complex phase step") {
    const ComplexMatrix y(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
    const auto eig = hermitian_eigen(y);
    CHECK(std::abs(eig.eigenvalues[0] + 1.0) < 1e-15);
    CHECK(reconstruction_residual(y, eig) < 1e-14);
  }
  SUBCASE("1x1") {
    const auto eig = hermitian_eigen(ComplexMatrix(1, {4.5}));
    CHECK(eig.eigenvalues == std::vector<double>{4.5});
  }
}

TEST_CASE("hermitian_eigen: 200 random Hermitian matrices, dim <= 16") {
  Rng rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + static_cast<std::size_t>(trial % 16);
    const double scale = trial % 3 == 0 ? 10.0 : 1.0;
    const ComplexMatrix h = oracle::random_hermitian(dim, rng, scale);
    const auto eig = hermitian_eigen(h);

    CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
    CHECK(unitarity_defect(eig.eigenvectors) <= 1e-10);
    CHECK(reconstruction_residual(h, eig) <= 1e-9 * std::max(1.0, frob_norm(h)));

    const auto reference = oracle::eigenvalues(h);
    for (std::size_t k = 0; k < dim; ++k) {
      CHECK(std::abs(eig.eigenvalues[k] - reference[k]) <= 1e-10 * std::max(1.0, frob_norm(h)));
    }
  }
}

TEST_CASE("hermitian_eigen: degenerate spectra") {
  // U diag(1,1,1,2,2) U^H for a random unitary built from a Hermitian eigenbasis.
  Rng rng(7);
  const auto basis = hermitian_eigen(oracle::random_hermitian(5, rng)).eigenvectors;
  const std::vector<double> diag{1, 1, 1, 2, 2};
  const ComplexMatrix h = matmul(matmul(basis, ComplexMatrix::diagonal(diag)), adjoint(basis));
  const auto eig = hermitian_eigen(h);
  for (std::size_t k = 0; k < 5; ++k) CHECK(std::abs(eig.eigenvalues[k] - diag[k]) < 1e-12);
  CHECK(unitarity_defect(eig.eigenvectors) <= 1e-10);
}

TEST_CASE("hermitian_eigen: error paths") {
  ComplexMatrix bad(2, {1.0, 2.0, 0.0, 1.0});
  CHECK(oracle::thrown_code([&] { hermitian_eigen(bad); }) == ErrorCode::kNotHermitian);

  // Within tolerance passes and is symmetrized.
  ComplexMatrix nearly(2, {1.0, Complex(0.5, 0.0), Complex(0.5 + 5e-11, 0.0), 1.0});
  CHECK_NOTHROW(hermitian_eigen(nearly));

  EigenOptions starved;
  starved.max_sweeps = 0;
  Rng rng(3);
  const ComplexMatrix h = oracle::random_hermitian(6, rng);
  CHECK(oracle::thrown_code([&] { hermitian_eigen(h, starved); }) == ErrorCode::kNoConvergence);
}

TEST_CASE("matrix construction rejects bad data") {
  CHECK(oracle::thrown_code([] { ComplexMatrix(2, {1.0, 2.0, 3.0}); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(oracle::thrown_code([] {
          ComplexMatrix(1, {Complex(std::nan(""), 0.0)});
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("trace, frob_norm, adjoint, matmul") {
  CHECK(trace(ComplexMatrix::identity(4)) == Complex(4.0, 0.0));
  for (std::size_t n : {2u, 3u, 7u}) {
    const ComplexMatrix mixed = ComplexMatrix::identity(n) * Complex(1.0 / static_cast<double>(n));
    CHECK(std::abs(frob_norm(mixed) - 1.0 / std::sqrt(static_cast<double>(n))) < 1e-15);
  }

  Rng rng(11);
  ComplexMatrix a(4);
  for (auto& z : a.data()) z = rng.complex_normal();
  CHECK(adjoint(adjoint(a)) == a);
  CHECK(matmul(a, ComplexMatrix::identity(4)) == a);

  ComplexMatrix b(4);
  for (auto& z : b.data()) z = rng.complex_normal();
  // (AB)^H = B^H A^H
  CHECK(max_abs_diff(adjoint(matmul(a, b)), matmul(adjoint(b), adjoint(a))) < 1e-14);
  CHECK(std::abs(trace_product(a, b) - trace(matmul(a, b))) < 1e-13);

  CHECK(oracle::thrown_code([] { matmul(ComplexMatrix(2), ComplexMatrix(3)); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(oracle::thrown_code([] { trace_product(ComplexMatrix(2), ComplexMatrix(3)); }) ==
        ErrorCode::kDimensionMismatch);
}

TEST_CASE("hs_distance") {
  const std::vector<double> d10{1.0, 0.0};
  const std::vector<double> d01{0.0, 1.0};
  CHECK(hs_distance(ComplexMatrix::diagonal(d10), ComplexMatrix::diagonal(d10)) == 0.0);
  CHECK(std::abs(hs_distance(ComplexMatrix::diagonal(d10), ComplexMatrix::diagonal(d01)) -
                 std::sqrt(2.0)) < 1e-15);
  CHECK(oracle::thrown_code([] {
          hs_distance(ComplexMatrix::identity(2), ComplexMatrix::identity(3));
        }) == ErrorCode::kDimensionMismatch);

  SUBCASE("Werner d=2 distance p sqrt(3/4)") {
    const ComplexMatrix centre = maximally_mixed(4).matrix();
    for (double p : {0.2, 0.5, 1.0}) {
      CHECK(std::abs(hs_distance(werner({2, p}).matrix(), centre) - p * std::sqrt(0.75)) < 1e-12);
    }
  }

  SUBCASE("triangle inequality, symmetry, expansion") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t dim = 2 + static_cast<std::size_t>(trial % 7);
      const auto a = oracle::random_hermitian(dim, rng);
      const auto b = oracle::random_hermitian(dim, rng);
      const auto c = oracle::random_hermitian(dim, rng);
      const double ab = hs_distance(a, b);
      CHECK(ab <= hs_distance(a, c) + hs_distance(c, b) + 1e-12);
      CHECK(ab == hs_distance(b, a));
      CHECK(std::abs(ab - oracle::hs_distance(a, b)) <= 1e-12 * std::max(1.0, ab));

      const double expanded =
          (trace_product(a, a) - 2.0 * trace_product(a, b) + trace_product(b, b)).real();
      CHECK(std::abs(ab * ab - expanded) <= 1e-10 * std::max(1.0, ab * ab));
    }
  }
}

TEST_CASE("is_psd") {
  const auto half = is_psd(ComplexMatrix::identity(2) * Complex(0.5), 0.0);
  CHECK(half.psd);
  CHECK(std::abs(half.min_eigenvalue - 0.5) < 1e-15);

  const std::vector<double> diag{1.0, -0.1};
  const auto neg = is_psd(ComplexMatrix::diagonal(diag), 1e-9);
  CHECK_FALSE(neg.psd);
  CHECK(std::abs(neg.min_eigenvalue + 0.1) < 1e-15);

  // PT of the Bell projector has spectrum {1/2, 1/2, 1/2, -1/2}.
  const std::vector<Complex> bell{1 / std::sqrt(2.0), 0.0, 0.0, 1 / std::sqrt(2.0)};
  const ComplexMatrix pt = partial_transpose(ComplexMatrix::outer(bell, bell), {2, 2});
  const auto bell_check = is_psd(pt, 1e-9);
  CHECK_FALSE(bell_check.psd);
  CHECK(std::abs(bell_check.min_eigenvalue + 0.5) < 1e-12);
}
