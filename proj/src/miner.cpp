#include "consec/miner.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace consec {

std::string_view to_string(PruneMode mode) noexcept {
  switch (mode) {
    case PruneMode::Normal: return "normal";
    case PruneMode::Mas: return "mas";
    case PruneMode::MasAlpha: return "mas-alpha";
    case PruneMode::ExactDepth: return "exact-depth";
  }
  return "normal";
}

PruneMode parse_prune_mode(std::string_view text) {
  if (text == "normal") return PruneMode::Normal;
  if (text == "mas") return PruneMode::Mas;
  if (text == "mas-alpha") return PruneMode::MasAlpha;
  if (text == "exact-depth") return PruneMode::ExactDepth;
  throw std::invalid_argument("unknown prune mode '" + std::string(text) + "'");
}

void MiningConfig::validate() const {
  params.validate();
  if (!(minsup >= 0.0) || !std::isfinite(minsup)) throw std::invalid_argument("minsup must be >= 0");
  if (!(h_c >= 0.0 && h_c <= 1.0)) throw std::invalid_argument("h_c must lie in [0, 1]");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (eta && *eta == 0) throw std::invalid_argument("eta must be positive");
  if (mode == PruneMode::ExactDepth && !eta) throw std::invalid_argument("exact-depth mode requires eta");
}

double effective_alpha(const MiningConfig& config) noexcept {
  return config.mode == PruneMode::MasAlpha ? config.alpha : 1.0;
}

bool uses_mas(const MiningConfig& config) noexcept {
  switch (config.mode) {
    case PruneMode::Normal: return false;
    case PruneMode::Mas:
    case PruneMode::MasAlpha: return true;
    case PruneMode::ExactDepth: return config.exact_depth_with_mas;
  }
  return false;
}

bool canonical_less(const Itemset& a, const Itemset& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void canonicalize(std::vector<MinedPattern>& patterns) {
  std::sort(patterns.begin(), patterns.end(),
            [](const MinedPattern& a, const MinedPattern& b) { return canonical_less(a.items, b.items); });
}

MiningStats& MiningStats::operator+=(const MiningStats& other) noexcept {
  candidates += other.candidates;
  containment_checks += other.containment_checks;
  mas_prunes += other.mas_prunes;
  depth_prunes += other.depth_prunes;
  hyperclique_prunes += other.hyperclique_prunes;
  infrequent += other.infrequent;
  return *this;
}

TidList intersect(std::span<const Tid> a, std::span<const Tid> b) {
  TidList out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool depth_prune(Item item, Item last_frequent_item, std::size_t eta, std::size_t depth) noexcept {
  const auto remaining = static_cast<long long>(last_frequent_item) - static_cast<long long>(item);
  const auto needed = static_cast<long long>(eta) - static_cast<long long>(depth);
  return remaining < needed;
}

bool hyperclique_prune(double candidate_support, std::span<const double> singleton_supports, double h_c) {
  if (h_c <= 0.0) return false;
  return h_confidence(candidate_support, singleton_supports) < h_c;
}

namespace {

struct Node {
  Itemset items;
  double support = 0.0;
  TidList tids;
  double min_single = 0.0;
  double max_single = 0.0;
};

/// Multi-item patterns containing an item that never occurs have
/// h-confidence 0 by convention.
bool fails_hconf(double support, std::span<const double> singles, double h_c) {
  if (h_c <= 0.0) return false;
  for (double s : singles) {
    if (!(s > 0.0)) return true;
  }
  return hyperclique_prune(support, singles, h_c);
}

class Miner {
 public:
  Miner(const Database& db, const MiningConfig& config) : db_(db), config_(config) {
    const Item n = db.num_items();
    item_tids_.resize(n + 1);
    presence_.assign(n + 1, std::vector<std::uint8_t>(db.size() + 1, 0));
    for (Tid tid = 1; tid <= db.size(); ++tid) {
      for (Item x : db[tid]) {
        item_tids_[x].push_back(tid);
        presence_[x][tid] = 1;
      }
    }
    singles_.assign(n + 1, 0.0);
    for (Item x = 1; x <= n; ++x) {
      SparseSweep sweep(config.params, db.boundaries());
      for (Tid tid : item_tids_[x]) sweep.hit(tid);
      singles_[x] = sweep.support();
    }
  }

  MiningResult run() {
    MiningResult result;
    const Item n = db_.num_items();

    // Frequent singletons seed the search; they always pass the hyperclique filter.
    std::vector<Node> roots;
    for (Item x = 1; x <= n; ++x) {
      ++result.stats.candidates;
      if (singles_[x] >= config_.minsup) {
        roots.push_back(Node{{x}, singles_[x], item_tids_[x], singles_[x], singles_[x]});
      } else {
        ++result.stats.infrequent;
      }
    }
    if (roots.empty()) return result;

    std::vector<Item> root_items;
    for (const auto& r : roots) root_items.push_back(r.items.front());
    const bool depth_mode = config_.mode == PruneMode::ExactDepth;
    const Item last_frequent = root_items.back();

    struct Worker {
      std::vector<MinedPattern> out;
      MiningStats stats;
    };

    auto process_root = [&](std::size_t i, Worker& w) {
      Node& root = roots[i];
      if (depth_mode && depth_prune(root.items.front(), last_frequent, *config_.eta, 1)) {
        ++w.stats.depth_prunes;
        return;
      }
      if (wants(root.items.size())) emit(root, w.out);
      const std::span<const Item> rest(root_items.begin() + static_cast<std::ptrdiff_t>(i) + 1, root_items.end());
      expand(root, rest, w.out, w.stats);
    };

    const unsigned threads = std::max(1u, config_.threads);
    std::vector<Worker> workers(threads);
    if (threads == 1) {
      for (std::size_t i = 0; i < roots.size() && !stop_.load(); ++i) process_root(i, workers[0]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = next++; i < roots.size() && !stop_.load(); i = next++) {
            process_root(i, workers[t]);
          }
        });
      }
    }

    for (auto& w : workers) {
      result.stats += w.stats;
      std::move(w.out.begin(), w.out.end(), std::back_inserter(result.patterns));
    }
    canonicalize(result.patterns);
    if (config_.max_patterns != 0 && stop_.load()) {
      result.truncated = true;
      if (result.patterns.size() > config_.max_patterns) result.patterns.resize(config_.max_patterns);
    }
    return result;
  }

 private:
  bool wants(std::size_t length) const noexcept { return !config_.eta || *config_.eta == length; }

  void emit(const Node& node, std::vector<MinedPattern>& out) {
    out.push_back(MinedPattern{node.items, node.support, node.tids});
    if (config_.max_patterns != 0 && ++emitted_ >= config_.max_patterns) stop_.store(true);
  }

  /// Grows `node` by each candidate item (ascending, all larger than its last item).
  void expand(const Node& node, std::span<const Item> candidates, std::vector<MinedPattern>& out,
              MiningStats& stats) {
    if (candidates.empty() || stop_.load()) return;
    if (config_.eta && node.items.size() >= *config_.eta) return;

    const std::size_t depth = node.items.size() + 1;
    const Item last_frequent = candidates.back();
    const bool depth_mode = config_.mode == PruneMode::ExactDepth;
    const bool mas = uses_mas(config_);

    std::vector<Node> children;
    // Items whose sibling pattern is frequent or was only depth-pruned; either
    // may still extend an earlier sibling.
    std::vector<Item> extendable;
    std::vector<double> singles;

    for (Item x : candidates) {
      ++stats.candidates;
      if (depth_mode && depth_prune(x, last_frequent, *config_.eta, depth)) {
        ++stats.depth_prunes;
        extendable.push_back(x);
        continue;
      }

      const double lo = std::min(node.min_single, singles_[x]);
      const double hi = std::max(node.max_single, singles_[x]);
      if (config_.h_c > 0.0) {
        // Cross-support bound: no superset of these items beats the weakest one.
        singles.assign(node.items.size() + 1, 0.0);
        for (std::size_t k = 0; k < node.items.size(); ++k) singles[k] = singles_[node.items[k]];
        singles.back() = singles_[x];
        if (fails_hconf(lo, singles, config_.h_c)) {
          ++stats.hyperclique_prunes;
          continue;
        }
      }

      Node child;
      child.items = node.items;
      child.items.push_back(x);
      child.min_single = lo;
      child.max_single = hi;
      if (mas) {
        const auto& present = presence_[x];
        auto scan = mas_scan(node.tids, node.support, [&present](Tid tid) { return present[tid] != 0; },
                             config_, db_.boundaries());
        stats.containment_checks += scan.checks;
        if (scan.pruned) {
          ++stats.mas_prunes;
          continue;
        }
        child.support = scan.support;
        child.tids = std::move(scan.tids);
      } else {
        stats.containment_checks += node.tids.size();
        child.tids = intersect(node.tids, item_tids_[x]);
        SparseSweep sweep(config_.params, db_.boundaries());
        for (Tid tid : child.tids) sweep.hit(tid);
        child.support = sweep.support();
      }

      if (!(child.support >= config_.minsup)) {
        ++stats.infrequent;
        continue;
      }
      if (fails_hconf(child.support, singles, config_.h_c)) {
        ++stats.hyperclique_prunes;
        continue;
      }
      extendable.push_back(x);
      children.push_back(std::move(child));
    }

    for (const auto& child : children) {
      if (stop_.load()) return;
      if (wants(child.items.size())) emit(child, out);
      const Item x = child.items.back();
      const auto pos = std::upper_bound(extendable.begin(), extendable.end(), x);
      expand(child, std::span<const Item>(pos, extendable.end()), out, stats);
    }
  }

  const Database& db_;
  const MiningConfig& config_;
  std::vector<TidList> item_tids_;
  std::vector<std::vector<std::uint8_t>> presence_;
  std::vector<double> singles_;
  std::atomic<bool> stop_{false};
  std::atomic<std::size_t> emitted_{0};
};

}  // namespace

MiningResult mine(const Database& db, const MiningConfig& config) {
  config.validate();
  Miner miner(db, config);
  return miner.run();
}

}  // namespace consec
