#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bnpg/game.hpp"

namespace bnpg {

/// Largest n the exhaustive oracle accepts by default (2^22 profiles).
inline constexpr int kDefaultOracleLimit = 22;

/// Ground truth from enumerating all 2^n profiles.
struct OracleResult {
  std::vector<ActionProfile> all_psne;  // lexicographic order of the bit vector
  std::optional<std::pair<ActionProfile, double>> best_welfare;
  std::pair<ActionProfile, double> min_epsilon;
};

/// Full scan; throws InstanceTooLarge when n exceeds `limit`.
OracleResult oracle_scan(const BnpgInstance& inst, int limit = kDefaultOracleLimit,
                         bool normalized = false);

/// All PSNE in lexicographic order of the bit vector.
std::vector<ActionProfile> enumerate_psne(const BnpgInstance& inst,
                                          int limit = kDefaultOracleLimit);

/// Welfare-maximal PSNE (lexicographically smallest on ties), or nullopt.
std::optional<std::pair<ActionProfile, double>> best_psne_welfare(
    const BnpgInstance& inst, int limit = kDefaultOracleLimit);

/// Profile minimizing max_epsilon (lexicographically smallest on ties).
std::pair<ActionProfile, double> min_epsilon_profile(const BnpgInstance& inst,
                                                     int limit = kDefaultOracleLimit,
                                                     bool normalized = false);

}  // namespace bnpg
