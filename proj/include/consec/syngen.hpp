#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "consec/database.hpp"
#include "consec/types.hpp"

namespace consec {

enum class Scenario { FoodDrink, CoffeeCookie };

std::string_view to_string(Scenario scenario) noexcept;
/// Accepts food_drink and coffee_cookie.
Scenario parse_scenario(std::string_view text);

/// Parameters of a synthetic cafe dataset.
///
/// Inside each burst window the signal items are bought together with
/// probability `signal_probability`. Inside each rush window a lunch
/// customer shows up with probability `rush_visit` and then buys each rush
/// item independently with probability `rush_item_probability`. Throughout
/// the day the staple items are bought together with probability
/// `staple_probability`. On top of that, every item appears in every
/// transaction independently with probability `background_density`.
///
/// Random draws come from std::mt19937_64 (its output sequence is fixed by
/// the C++ standard), converted to [0, 1) as (x >> 11) * 2^-53, in a fixed
/// order per transaction: signal (inside burst windows), rush visit and rush
/// items (inside rush windows), staples (when configured), then background
/// for items 1..n. Output is therefore identical across platforms.
struct ScenarioSpec {
  Scenario scenario = Scenario::FoodDrink;
  std::size_t num_transactions = 1000;
  Item num_items = 100;
  std::uint64_t seed = 1;

  std::vector<TxWindow> windows;
  Itemset signal_items;
  double signal_probability = 0.9;
  double background_density = 0.05;

  std::vector<TxWindow> rush_windows;
  Itemset rush_items;
  double rush_visit = 0.0;
  double rush_item_probability = 0.0;

  Itemset staple_items;
  double staple_probability = 0.0;

  /// food_drink: bread (1) and juice (2) together over the middle fifth of
  /// the day (transactions 401-600 of 1000).
  /// coffee_cookie: coffee (1) and cookie (2) in 8 evenly spaced windows of 15
  /// transactions, plus a midday lunch rush over items 11-16 (401-600 of 1000)
  /// and all-day staples 21-23.
  static ScenarioSpec defaults(Scenario scenario, std::uint64_t seed = 1, std::size_t num_transactions = 1000,
                               Item num_items = 100);

  /// Throws std::invalid_argument; overlapping windows are rejected.
  void validate() const;
};

Database generate(const ScenarioSpec& spec);

}  // namespace consec
