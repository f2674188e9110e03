#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "consec/database.hpp"
#include "consec/support.hpp"
#include "consec/types.hpp"

namespace consec {

enum class PruneMode {
  Normal,      ///< plain vertical mining, every candidate counted in full
  Mas,         ///< stop counting once the maximal achievable support drops below minsup
  MasAlpha,    ///< as Mas, remaining parent support scaled by alpha (may lose patterns)
  ExactDepth,  ///< only patterns of length eta; prunes branches that cannot reach it
};

std::string_view to_string(PruneMode mode) noexcept;
/// Accepts normal, mas, mas-alpha, exact-depth. Throws std::invalid_argument.
PruneMode parse_prune_mode(std::string_view text);

struct MiningConfig {
  double minsup = 0.0;
  SupportParams params;
  /// Minimum h-confidence; 0 disables hyperclique filtering.
  double h_c = 0.0;
  /// Only read under PruneMode::MasAlpha.
  double alpha = 1.0;
  /// Exact pattern length. Restricts output in every mode; required for ExactDepth.
  std::optional<std::size_t> eta;
  PruneMode mode = PruneMode::Normal;
  /// ExactDepth also counts with the MAS scan unless this is cleared.
  bool exact_depth_with_mas = true;
  unsigned threads = 1;
  /// Stop after this many patterns (0 = no limit); the result is flagged truncated.
  std::size_t max_patterns = 0;

  void validate() const;
};

/// Alpha the MAS scan applies for this configuration (1 unless MasAlpha).
double effective_alpha(const MiningConfig& config) noexcept;
/// Whether child supports are counted with the MAS scan.
bool uses_mas(const MiningConfig& config) noexcept;

struct MinedPattern {
  Itemset items;
  double support = 0.0;
  TidList tids;
};

/// Size first, then lexicographic.
bool canonical_less(const Itemset& a, const Itemset& b) noexcept;
void canonicalize(std::vector<MinedPattern>& patterns);

struct MiningStats {
  std::uint64_t candidates = 0;          ///< child candidates considered
  std::uint64_t containment_checks = 0;  ///< parent occurrences tested for the extension item
  std::uint64_t mas_prunes = 0;
  std::uint64_t depth_prunes = 0;
  std::uint64_t hyperclique_prunes = 0;
  std::uint64_t infrequent = 0;          ///< counted in full and found below minsup

  MiningStats& operator+=(const MiningStats& other) noexcept;
};

struct MiningResult {
  std::vector<MinedPattern> patterns;
  MiningStats stats;
  bool truncated = false;
};

/// All itemsets whose consecutive support is >= config.minsup, subject to
/// the h-confidence, eta and pruning settings. Output is canonically sorted.
MiningResult mine(const Database& db, const MiningConfig& config);

/// Sorted intersection of two tid lists.
TidList intersect(std::span<const Tid> a, std::span<const Tid> b);

/// Running state of the maximal-achievable-support scan over a parent's
/// occurrences. The parent's partial support is recomputed with the same
/// recurrence that produced its total, so after the last occurrence
/// partial_support_parent() equals parent_total.
class MasState {
 public:
  MasState(double parent_total, const SupportParams& params, std::span<const Tid> boundaries = {}) noexcept
      : parent_total_(parent_total), parent_(params, boundaries), child_(params, boundaries) {}

  /// Visit the next parent occurrence; `child_has` says whether the child holds there too.
  void step(Tid tid, bool child_has) noexcept {
    parent_.hit(tid);
    if (child_has) child_.hit(tid);
  }

  double possible(double alpha) const noexcept {
    return alpha * (parent_total_ - parent_.support()) + child_.support();
  }

  double parent_total() const noexcept { return parent_total_; }
  double partial_support_parent() const noexcept { return parent_.support(); }
  double reward_parent() const noexcept { return parent_.reward(); }
  Tid last_transaction_number() const noexcept { return parent_.last(); }
  double child_support() const noexcept { return child_.support(); }
  double child_reward() const noexcept { return child_.reward(); }

 private:
  double parent_total_;
  SparseSweep parent_;
  SparseSweep child_;
};

struct MasPruned {
  Tid at = 0;             ///< parent occurrence at which counting stopped
  double possible = 0.0;  ///< maximal achievable support at that point
};

struct MasScanResult {
  /// Set when the candidate was abandoned; support is then reported as 0.
  std::optional<MasPruned> pruned;
  double support = 0.0;
  TidList tids;
  std::uint64_t checks = 0;
};

/// Rounding slack below minsup before a candidate counts as hopeless, so an
/// exact tie with minsup is never pruned under alpha = 1.
inline double mas_slack(double parent_total) noexcept {
  return 1e-12 * std::max(1.0, parent_total);
}

/// Counts a child pattern over its parent's occurrences, abandoning it as soon
/// as possible := alpha * (parent_total - partial_support_parent) + child_support
/// falls below config.minsup. Gaps are measured in original transaction
/// numbers, so the child support is exact.
template <class Member>
MasScanResult mas_scan(std::span<const Tid> parent_tids, double parent_total, Member&& child_member,
                       const MiningConfig& config, std::span<const Tid> boundaries = {}) {
  const double alpha = effective_alpha(config);
  const double cutoff = config.minsup - mas_slack(parent_total);
  MasState state(parent_total, config.params, boundaries);
  MasScanResult result;
  for (Tid tid : parent_tids) {
    ++result.checks;
    const bool has = child_member(tid);
    state.step(tid, has);
    if (has) result.tids.push_back(tid);
    const double possible = state.possible(alpha);
    if (possible < cutoff) {
      result.pruned = MasPruned{tid, possible};
      result.tids.clear();
      return result;
    }
  }
  result.support = state.child_support();
  return result;
}

/// True when a pattern of length `depth` ending in `item` cannot grow to
/// length eta using items up to `last_frequent_item`.
bool depth_prune(Item item, Item last_frequent_item, std::size_t eta, std::size_t depth) noexcept;

/// True when the candidate's h-confidence is below h_c (never when h_c == 0).
/// Sound for the whole subtree: h-confidence cannot rise under extension.
bool hyperclique_prune(double candidate_support, std::span<const double> singleton_supports, double h_c);

}  // namespace consec
