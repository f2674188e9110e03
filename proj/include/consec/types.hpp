#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace consec {

/// Item identifier. Items are numbered 1..n.
using Item = std::uint32_t;

/// Transaction number. Transactions are numbered 1..m in database order.
using Tid = std::uint32_t;

/// Sorted, duplicate-free set of items.
using Itemset = std::vector<Item>;

/// Strictly increasing list of transaction numbers containing a pattern.
using TidList = std::vector<Tid>;

/// A contiguous range of transactions [start, start + length).
struct TxWindow {
  Tid start = 1;
  std::size_t length = 0;

  bool contains(Tid tid) const noexcept { return tid >= start && tid < start + length; }
  Tid end() const noexcept { return static_cast<Tid>(start + length); }
  bool operator==(const TxWindow&) const = default;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace consec
