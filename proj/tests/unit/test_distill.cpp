#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pptgeo/bipartite.hpp"
#include "pptgeo/bounds.hpp"
#include "pptgeo/distill.hpp"
#include "pptgeo/errors.hpp"
#include "pptgeo/states.hpp"

using namespace pptgeo;

namespace {

void check_sound(const WitnessResult& result, const DensityMatrix& rho, const BipartiteSplit& split) {
  const double global_min = oracle::eigenvalues(partial_transpose(rho, split)).front();
  CHECK(result.value >= global_min - 1e-10);
  if (!result.found) {
    CHECK_FALSE(result.witness.has_value());
    return;
  }
  REQUIRE(result.witness.has_value());
  const double recomputed = expectation(partial_transpose(rho, split), result.witness->amplitudes());
  CHECK(std::abs(recomputed - result.value) <= 1e-10);
  CHECK(recomputed < -kWitnessTol);
  CHECK(schmidt(*result.witness, split).rank <= 2);
}

}  // namespace

TEST_CASE("witness: Bell projector in 2x2") {
  const double s = 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = pure_density(PureState({s, 0.0, 0.0, s}));
  const WitnessResult r = find_schmidt2_witness(rho, {2, 2}, {8, 20, 1});
  CHECK(r.found);
  CHECK(std::abs(r.value + 0.5) < 1e-12);
  CHECK(r.restarts_used == 8);
  check_sound(r, rho, {2, 2});
}

TEST_CASE("witness: maximally mixed 3x3 has none") {
  const WitnessResult r = find_schmidt2_witness(maximally_mixed(9), {3, 3}, {8, 20, 1});
  CHECK_FALSE(r.found);
  CHECK(std::abs(r.value - 1.0 / 9.0) < 1e-14);
}

TEST_CASE("witness: werner(3, 0.30) reaches the PT ground energy") {
  const DensityMatrix rho = werner({3, 0.30});
  const WitnessResult r = find_schmidt2_witness(rho, {3, 3});
  CHECK(r.found);
  CHECK(std::abs(r.value - oracle::werner_lambda_min(3, 0.30)) <= 1e-8);
  check_sound(r, rho, {3, 3});
}

TEST_CASE("witness: 2 x n searches are exact") {
  Rng rng(606);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const DensityMatrix rho = sample_hs_random(2 * n, rng);
    const WitnessResult r = find_schmidt2_witness(rho, {2, n}, {2, 10, static_cast<std::uint64_t>(i)});
    const double global_min = oracle::eigenvalues(partial_transpose(rho, {2, n})).front();
    CHECK(std::abs(r.value - global_min) <= 1e-10);
    check_sound(r, rho, {2, n});
  }
}

TEST_CASE("witness: soundness on random states") {
  Rng rng(707);
  const std::vector<BipartiteSplit> splits{{3, 3}, {3, 4}, {4, 3}};
  for (int i = 0; i < 30; ++i) {
    const BipartiteSplit split = splits[static_cast<std::size_t>(i) % splits.size()];
    const DensityMatrix rho = sample_hs_random(split.dim(), rng);
    const WitnessResult r = find_schmidt2_witness(rho, split, {8, 30, static_cast<std::uint64_t>(i)});
    check_sound(r, rho, split);
  }
}

TEST_CASE("witness: deterministic per seed") {
  const DensityMatrix rho = sample_hs_random(9, 5);
  const WitnessResult a = find_schmidt2_witness(rho, {3, 3}, {6, 20, 99});
  const WitnessResult b = find_schmidt2_witness(rho, {3, 3}, {6, 20, 99});
  CHECK(a.value == b.value);
  CHECK(a.best_restart == b.best_restart);
  CHECK(a.found == b.found);
}

TEST_CASE("witness: PPT states never yield one") {
  Rng rng(808);
  std::size_t screened = 0;
  std::size_t found = 0;
  while (screened < 100) {
    const DensityMatrix rho = sample_on_shell(9, 0.15 * rng.uniform() + 0.01, rng).state;
    if (!is_ppt(rho, {3, 3}).ppt) continue;
    ++screened;
    if (find_schmidt2_witness(rho, {3, 3}, {8, 20, screened}).found) ++found;
  }
  CHECK(found == 0);
}

TEST_CASE("witness: geometric corollary near I/N") {
  // Sound radius: every Hermitian unit-trace matrix within 1/sqrt(N(N-1))
  // of I/N is PSD, and PT preserves that distance.
  const double sound = 1.0 / std::sqrt(72.0);
  Rng rng(909);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = sample_on_shell(9, sound * (0.1 + 0.9 * rng.uniform()), rng).state;
    CHECK_FALSE(find_schmidt2_witness(rho, {3, 3}, {4, 20, static_cast<std::uint64_t>(i)}).found);
  }

  // At the larger separable radius r_sep(3,2) the corollary fails: the swap
  // family at t = 0.2 sits at distance 0.2121 < 0.2357 and is 1-distillable
  // (best rank-2 value 1/9 - 5t/8 = -0.0139).
  const DensityMatrix swap(oracle::swap_family(3, 0.2));
  const double distance = hs_distance(swap.matrix(), maximally_mixed(9).matrix());
  CHECK(distance < separable_radius(3, 2));
  CHECK(std::abs(distance - 0.2 * 3.0 / (2.0 * std::sqrt(2.0))) < 1e-12);
  const WitnessResult r = find_schmidt2_witness(swap, {3, 3});
  CHECK(r.found);
  CHECK(std::abs(r.value - (1.0 / 9.0 - 5.0 * 0.2 / 8.0)) < 1e-8);
  check_sound(r, swap, {3, 3});
}

TEST_CASE("witness: argument errors") {
  CHECK(oracle::thrown_code([] { find_schmidt2_witness(maximally_mixed(9), {2, 4}); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(oracle::thrown_code([] { find_schmidt2_witness(maximally_mixed(9), {3, 3}, {0, 1, 0}); }) ==
        ErrorCode::kInvalidArgument);
}
