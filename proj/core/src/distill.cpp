#include "pptgeo/distill.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "pptgeo/errors.hpp"

namespace pptgeo {
namespace {

using Vec = std::vector<Complex>;

// Gram-Schmidt `v` against `basis`; returns false if nothing is left.
bool orthonormalize_against(Vec& v, const std::vector<Vec>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const Complex overlap = inner(b, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= overlap * b[i];
    }
  }
  const double len = norm2(v);
  if (len < 1e-8) return false;
  for (auto& z : v) z /= len;
  return true;
}

Vec random_unit(std::size_t dim, Rng& rng) {
  Vec v(dim);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

// Two orthonormal vectors in C^dim, starting from `seed_vectors` and padded randomly.
std::vector<Vec> two_frame(std::vector<Vec> seed_vectors, std::size_t dim, Rng& rng) {
  std::vector<Vec> frame;
  for (auto& v : seed_vectors) {
    if (frame.size() == 2) break;
    if (orthonormalize_against(v, frame)) frame.push_back(std::move(v));
  }
  while (frame.size() < 2) {
    Vec v = random_unit(dim, rng);
    if (orthonormalize_against(v, frame)) frame.push_back(std::move(v));
  }
  return frame;
}

struct Candidate {
  double value;
  Vec psi;
};

// Minimum of <psi|X|psi> over the span of an orthonormal basis.
Candidate minimize_on_span(const ComplexMatrix& x, const std::vector<Vec>& basis) {
  const std::size_t k = basis.size();
  std::vector<Vec> xb;
  xb.reserve(k);
  for (const auto& b : basis) {
    Vec y(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < x.dim(); ++j) s += x(i, j) * b[j];
      y[i] = s;
    }
    xb.push_back(std::move(y));
  }
  ComplexMatrix compressed(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      const Complex v = inner(basis[a], xb[b]);
      compressed(a, b) = v;
      compressed(b, a) = std::conj(v);
    }
    compressed(a, a) = compressed(a, a).real();
  }
  const HermitianEigen eig = hermitian_eigen(compressed);
  Vec psi(x.dim());
  for (std::size_t a = 0; a < k; ++a) {
    const Complex c = eig.eigenvectors(a, 0);
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] += c * basis[a][i];
  }
  const double len = norm2(psi);
  for (auto& z : psi) z /= len;
  return {eig.eigenvalues.front(), std::move(psi)};
}

std::vector<Vec> product_basis(const std::vector<Vec>& a_side, const std::vector<Vec>& b_side) {
  std::vector<Vec> basis;
  basis.reserve(a_side.size() * b_side.size());
  for (const auto& a : a_side) {
    for (const auto& b : b_side) basis.push_back(kron(a, b));
  }
  return basis;
}

std::vector<Vec> standard_basis(std::size_t dim) {
  std::vector<Vec> basis(dim, Vec(dim));
  for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1.0;
  return basis;
}

Candidate run_restart(const ComplexMatrix& x, const BipartiteSplit& split, std::size_t iters,
                      Rng& rng) {
  std::vector<Vec> s = two_frame({}, split.m, rng);
  std::vector<Vec> t = two_frame({}, split.n, rng);
  Candidate best = minimize_on_span(x, product_basis(s, t));

  const std::vector<Vec> all_a = standard_basis(split.m);
  const std::vector<Vec> all_b = standard_basis(split.n);
  for (std::size_t it = 0; it < iters; ++it) {
    const double before = best.value;

    // Free the A side inside C^m (x) T, then take the left support as S.
    Candidate c = minimize_on_span(x, product_basis(all_a, t));
    if (c.value <= best.value) best = c;
    SchmidtDecomposition sd = schmidt(PureState::normalized(best.psi), split);
    s = two_frame(sd.left, split.m, rng);

    // Free the B side inside S (x) C^n, then take the right support as T.
    c = minimize_on_span(x, product_basis(s, all_b));
    if (c.value <= best.value) best = c;
    sd = schmidt(PureState::normalized(best.psi), split);
    t = two_frame(sd.right, split.n, rng);

    if (before - best.value < 1e-15) break;
  }
  return best;
}

}  // namespace

WitnessResult find_schmidt2_witness(const DensityMatrix& rho, const BipartiteSplit& split,
                                    const WitnessOptions& options) {
  split.validate_for(rho.dim());
  if (options.restarts < 1 || options.iters < 1) {
    throw Error(ErrorCode::kInvalidArgument, "restarts and iters must be >= 1");
  }
  const ComplexMatrix x = require_hermitian(partial_transpose(rho, split));

  WitnessResult result;
  result.value = std::numeric_limits<double>::infinity();
  Vec best_psi;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    Rng rng(options.seed + r);
    Candidate c = run_restart(x, split, options.iters, rng);
    if (c.value < result.value) {
      result.value = c.value;
      result.best_restart = r;
      best_psi = std::move(c.psi);
    }
  }
  result.restarts_used = options.restarts;

  // Report the expectation of the returned vector itself, not the
  // compressed eigenvalue it came from.
  PureState psi = PureState::normalized(std::move(best_psi));
  result.value = expectation(x, psi.amplitudes());
  result.found = result.value < -options.witness_tol;
  if (result.found) result.witness = std::move(psi);
  return result;
}

}  // namespace pptgeo
