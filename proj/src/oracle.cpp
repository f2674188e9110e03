#include "consec/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace consec {

std::vector<MinedPattern> brute_force_mine(const Database& db, const MiningConfig& config, std::size_t max_size,
                                           bool force) {
  config.params.validate();
  if (config.minsup < 0.0) throw std::invalid_argument("minsup must be >= 0");
  const std::size_t n = db.num_items();
  if (n > kOracleMaxItems && !force) {
    throw std::invalid_argument("oracle refuses " + std::to_string(n) + " items (limit " +
                                std::to_string(kOracleMaxItems) + "); pass force to override");
  }

  std::vector<double> singles(n + 1, 0.0);
  for (Item x = 1; x <= n; ++x) {
    const Item one[] = {x};
    singles[x] = consecutive_support(db.o_series(one), config.params, db.boundaries());
  }

  std::vector<MinedPattern> out;
  const std::size_t top = std::min(max_size, n);
  for (std::size_t size = 1; size <= top; ++size) {
    if (config.eta && *config.eta != size) continue;
    // Lexicographic walk over all size-element subsets of 1..n.
    Itemset items(size);
    for (std::size_t k = 0; k < size; ++k) items[k] = static_cast<Item>(k + 1);
    while (true) {
      const auto series = db.o_series(items);
      const double support = consecutive_support(series, config.params, db.boundaries());
      bool keep = support >= config.minsup;
      if (keep && config.h_c > 0.0 && size > 1) {
        double largest = 0.0;
        bool zero = false;
        for (Item x : items) {
          largest = std::max(largest, singles[x]);
          zero = zero || singles[x] <= 0.0;
        }
        keep = !zero && support / largest >= config.h_c;
      }
      if (keep) out.push_back(MinedPattern{items, support, series.tids()});

      std::size_t k = size;
      while (k > 0 && items[k - 1] == n - size + k) --k;
      if (k == 0) break;
      ++items[k - 1];
      for (std::size_t j = k; j < size; ++j) items[j] = items[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace consec
