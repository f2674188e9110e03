#include "consec/database.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace consec {

Database::Database(std::vector<Itemset> transactions, Item num_items, std::vector<Tid> boundaries)
    : transactions_(std::move(transactions)) {
  if (transactions_.empty()) throw std::invalid_argument("empty database");
  Item largest = 0;
  for (auto& t : transactions_) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (!t.empty()) {
      if (t.front() < 1) throw std::invalid_argument("item ids must be >= 1");
      largest = std::max(largest, t.back());
    }
  }
  if (num_items == 0) num_items = largest;
  if (num_items == 0) throw std::invalid_argument("item universe is empty");
  if (largest > num_items) {
    throw std::invalid_argument("item " + std::to_string(largest) + " exceeds universe size " +
                                std::to_string(num_items));
  }
  num_items_ = num_items;

  std::sort(boundaries.begin(), boundaries.end());
  boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
  std::erase_if(boundaries, [m = size()](Tid p) { return p < 1 || p >= m; });
  boundaries_ = std::move(boundaries);
}

Item Database::max_item() const noexcept {
  Item largest = 0;
  for (const auto& t : transactions_) {
    if (!t.empty()) largest = std::max(largest, t.back());
  }
  return largest;
}

bool Database::contains(Tid tid, std::span<const Item> items) const {
  const auto& t = (*this)[tid];
  return std::includes(t.begin(), t.end(), items.begin(), items.end());
}

OSeries Database::o_series(std::span<const Item> items) const {
  std::vector<std::uint8_t> bits(size());
  for (std::size_t j = 0; j < size(); ++j) bits[j] = contains(static_cast<Tid>(j + 1), items);
  return OSeries(std::move(bits));
}

}  // namespace consec
