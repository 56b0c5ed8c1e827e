#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "pptgeo/bipartite.hpp"
#include "pptgeo/states.hpp"

namespace pptgeo {

inline constexpr double kWitnessTol = 1e-10;

struct WitnessOptions {
  std::size_t restarts = 64;
  std::size_t iters = 50;
  std::uint64_t seed = 0;
  double witness_tol = kWitnessTol;
};

/// Outcome of a single-copy distillability search.
///
/// `found == false` is inconclusive: the search is a heuristic and never
/// certifies non-distillability.
struct WitnessResult {
  bool found = false;
  double value = 0.0;  // best <psi| rho^T_B |psi> seen
  std::optional<PureState> witness;
  std::size_t restarts_used = 0;
  std::size_t best_restart = 0;
};

/// Searches for a Schmidt-rank <= 2 vector with negative PT expectation.
///
/// Each restart draws a random 2-dim subspace T of B and alternates exact
/// minimisation over C^m (x) T and S (x) C^n, where S and T are refreshed
/// from the Schmidt supports of the current candidate. Restart r uses seed
/// `options.seed + r`; ties keep the lowest restart index.
WitnessResult find_schmidt2_witness(const DensityMatrix& rho, const BipartiteSplit& split,
                                    const WitnessOptions& options = {});

}  // namespace pptgeo
