#pragma once

#include <cstddef>
#include <vector>

#include "consec/database.hpp"
#include "consec/miner.hpp"

namespace consec {

/// Largest item universe the oracle enumerates without `force`.
inline constexpr std::size_t kOracleMaxItems = 20;

/// Reference miner for testing: enumerates every itemset of size <= max_size,
/// builds its O-series by direct containment, and sweeps it densely. Shares
/// nothing with mine() beyond the input types. config.mode and config.alpha
/// are ignored; minsup, params, h_c and eta filter the result.
///
/// Throws std::invalid_argument when the universe exceeds kOracleMaxItems
/// and `force` is not set.
std::vector<MinedPattern> brute_force_mine(const Database& db, const MiningConfig& config, std::size_t max_size,
                                           bool force = false);

}  // namespace consec
