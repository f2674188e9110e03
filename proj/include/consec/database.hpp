#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "consec/support.hpp"
#include "consec/types.hpp"

namespace consec {

/// Ordered series of m >= 1 transactions over the items 1..n.
///
/// Transactions are canonicalized on construction (sorted, duplicates
/// removed). `num_items == 0` means "largest item present". Boundaries are
/// reward-reset positions; positions outside [1, m-1] have no effect and are
/// dropped.
class Database {
 public:
  Database(std::vector<Itemset> transactions, Item num_items = 0, std::vector<Tid> boundaries = {});

  std::size_t size() const noexcept { return transactions_.size(); }
  Item num_items() const noexcept { return num_items_; }

  /// Transaction `tid` (1-based).
  const Itemset& operator[](Tid tid) const { return transactions_.at(tid - 1); }
  const std::vector<Itemset>& transactions() const noexcept { return transactions_; }
  const std::vector<Tid>& boundaries() const noexcept { return boundaries_; }

  /// Largest item id occurring in some transaction (0 if none).
  Item max_item() const noexcept;

  /// True when transaction `tid` holds every item of the sorted set `items`.
  bool contains(Tid tid, std::span<const Item> items) const;
  OSeries o_series(std::span<const Item> items) const;

  bool operator==(const Database&) const = default;

 private:
  std::vector<Itemset> transactions_;
  Item num_items_ = 0;
  std::vector<Tid> boundaries_;
};

}  // namespace consec
