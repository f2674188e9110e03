#include "consec/syngen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace consec {

std::string_view to_string(Scenario scenario) noexcept {
  return scenario == Scenario::FoodDrink ? "food_drink" : "coffee_cookie";
}

Scenario parse_scenario(std::string_view text) {
  if (text == "food_drink") return Scenario::FoodDrink;
  if (text == "coffee_cookie") return Scenario::CoffeeCookie;
  throw std::invalid_argument("unknown scenario '" + std::string(text) + "'");
}

ScenarioSpec ScenarioSpec::defaults(Scenario scenario, std::uint64_t seed, std::size_t num_transactions,
                                    Item num_items) {
  ScenarioSpec spec;
  spec.scenario = scenario;
  spec.seed = seed;
  spec.num_transactions = num_transactions;
  spec.num_items = num_items;
  spec.signal_items = {1, 2};
  const std::size_t m = num_transactions;
  if (scenario == Scenario::FoodDrink) {
    spec.windows = {{static_cast<Tid>(2 * m / 5 + 1), m / 5}};
    return spec;
  }
  constexpr std::size_t bursts = 8;
  constexpr std::size_t length = 15;
  const std::size_t spacing = m / bursts;
  for (std::size_t i = 0; i < bursts; ++i) {
    const std::size_t offset = spacing > length ? (spacing - length) / 2 : 0;
    spec.windows.push_back({static_cast<Tid>(i * spacing + offset + 1), std::min(length, spacing)});
  }
  spec.rush_windows = {{static_cast<Tid>(2 * m / 5 + 1), m / 5}};
  spec.rush_items = {11, 12, 13, 14, 15, 16};
  spec.rush_visit = 1.0;
  spec.rush_item_probability = 0.7;
  spec.staple_items = {21, 22, 23};
  spec.staple_probability = 0.15;
  return spec;
}

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

void check_windows(const std::vector<TxWindow>& windows, std::size_t m, const char* name) {
  auto sorted = windows;
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.start < b.start; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& w = sorted[i];
    if (w.length == 0 || w.start < 1 || w.start + w.length - 1 > m) {
      throw std::invalid_argument(std::string(name) + " outside [1, num_transactions]");
    }
    if (i > 0 && sorted[i - 1].end() > w.start) {
      throw std::invalid_argument(std::string(name) + " overlap");
    }
  }
}

void check_items(const Itemset& items, Item n, const char* name) {
  for (Item x : items) {
    if (x < 1 || x > n) throw std::invalid_argument(std::string(name) + " outside [1, num_items]");
  }
}

bool in_any(const std::vector<TxWindow>& windows, Tid tid) {
  return std::any_of(windows.begin(), windows.end(), [tid](const TxWindow& w) { return w.contains(tid); });
}

class UnitSource {
 public:
  explicit UnitSource(std::uint64_t seed) : engine_(seed) {}
  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

void ScenarioSpec::validate() const {
  if (num_transactions == 0) throw std::invalid_argument("num_transactions must be positive");
  if (num_items == 0) throw std::invalid_argument("num_items must be positive");
  check_windows(windows, num_transactions, "burst windows");
  check_windows(rush_windows, num_transactions, "rush windows");
  check_items(signal_items, num_items, "signal items");
  check_items(rush_items, num_items, "rush items");
  check_items(staple_items, num_items, "staple items");
  check_probability(signal_probability, "signal_probability");
  check_probability(background_density, "background_density");
  check_probability(rush_visit, "rush_visit");
  check_probability(rush_item_probability, "rush_item_probability");
  check_probability(staple_probability, "staple_probability");
}

Database generate(const ScenarioSpec& spec) {
  spec.validate();
  UnitSource uniform(spec.seed);
  std::vector<Itemset> transactions(spec.num_transactions);
  for (Tid tid = 1; tid <= spec.num_transactions; ++tid) {
    auto& t = transactions[tid - 1];
    if (in_any(spec.windows, tid) && uniform() < spec.signal_probability) {
      t.insert(t.end(), spec.signal_items.begin(), spec.signal_items.end());
    }
    if (in_any(spec.rush_windows, tid) && uniform() < spec.rush_visit) {
      for (Item x : spec.rush_items) {
        if (uniform() < spec.rush_item_probability) t.push_back(x);
      }
    }
    if (!spec.staple_items.empty() && uniform() < spec.staple_probability) {
      t.insert(t.end(), spec.staple_items.begin(), spec.staple_items.end());
    }
    for (Item x = 1; x <= spec.num_items; ++x) {
      if (uniform() < spec.background_density) t.push_back(x);
    }
  }
  return Database(std::move(transactions), spec.num_items);
}

}  // namespace consec
