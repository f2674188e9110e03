#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "consec/database.hpp"
#include "consec/dataio.hpp"
#include "consec/miner.hpp"
#include "consec/types.hpp"

namespace consec {

/// The k highest-support patterns; ties go to the smaller, then
/// lexicographically smaller, itemset. Throws std::invalid_argument if k == 0.
std::vector<MinedPattern> top_k(std::span<const MinedPattern> patterns, std::size_t k);

/// Per-transaction count of supplied patterns contained in it.
struct OccurrenceGraph {
  std::vector<std::size_t> counts;  ///< counts[tid - 1]
  std::vector<Tid> boundaries;

  bool operator==(const OccurrenceGraph&) const = default;
};

/// Containment is recomputed against `db`; the patterns' tid lists are ignored.
OccurrenceGraph occurrence_graph(std::span<const MinedPattern> patterns, const Database& db);

/// Header manifest, then `index<TAB>count` lines with `#boundary <index>`
/// after the transaction the boundary follows.
void write_occurrence_graph(std::ostream& out, const Manifest& manifest, const OccurrenceGraph& graph);
OccurrenceGraph parse_occurrence_graph(std::string_view text);

/// Mean count inside vs. outside a set of transaction windows.
struct WindowContrast {
  double mean_inside = 0.0;
  double mean_outside = 0.0;
  /// mean_inside / mean_outside; +inf when only the inside is non-zero.
  double ratio = 0.0;
};

WindowContrast window_contrast(const OccurrenceGraph& graph, std::span<const TxWindow> windows);

/// Lowest minsup (found by bisection) whose result holds at most `target`
/// patterns, so that "about `target` patterns" can be mined by threshold
/// instead of by top_k. Uses config for every other setting.
double tune_minsup(const Database& db, MiningConfig config, std::size_t target, int iterations = 40);

}  // namespace consec
