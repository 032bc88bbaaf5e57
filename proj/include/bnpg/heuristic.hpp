#pragma once

#include <cstdint>

#include "bnpg/game.hpp"
#include "bnpg/rng.hpp"

namespace bnpg {

/// Knobs for the approximate-PSNE search. Epsilon is normalized by
/// per-player utility ranges by default; delta = 1 with p = 1 stops the
/// outer loop exactly when consecutive profiles coincide.
struct HeuristicParams {
  int K = 10;          // best-response sweeps per evolve call
  int B = 100;         // max outer iterations
  double delta = 1.0;  // stop when ||x' - x||_p < delta
  double p = 1.0;      // norm index
  std::uint64_t seed = 0;
  bool normalized = true;
};

/// One asynchronous best-response sweep in ascending player order; each
/// player reacts to the partially updated profile. Exact indifference is
/// resolved by a fair coin from `rng`.
ActionProfile asynchronous_br(const BnpgInstance& inst, ActionProfile x, Rng& rng);

struct EvolveResult {
  ActionProfile profile;
  double epsilon;
  int sweeps;
};

/// Up to K sweeps tracking the lowest-epsilon profile seen; returns early
/// with epsilon 0 on hitting a PSNE. The returned epsilon never exceeds
/// the input profile's.
EvolveResult evolve(const BnpgInstance& inst, ActionProfile x, int K, Rng& rng,
                    bool normalized = true);

/// Random start, then evolve until the profile stops moving or B rounds
/// pass. Deterministic given (instance, params): round b draws from an
/// independent stream derived from (seed, b).
SolveReport find_approx_psne(const BnpgInstance& inst, const HeuristicParams& params);

}  // namespace bnpg
