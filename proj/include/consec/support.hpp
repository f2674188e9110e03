#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "consec/types.hpp"

namespace consec {

/// Reward increment per hit (rho >= 0) and per-miss reward decay (0 <= sigma <= 1).
struct SupportParams {
  double rho = 1.0;
  double sigma = 0.5;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  bool operator==(const SupportParams&) const = default;
};

/// 0/1 occurrence sequence of a pattern over the m transactions of a database.
class OSeries {
 public:
  /// Throws std::invalid_argument("empty database") when `bits` is empty.
  explicit OSeries(std::vector<std::uint8_t> bits);

  /// Parses a string of '0' and '1' characters.
  static OSeries from_string(std::string_view text);
  /// Dense form of a sparse occurrence list over `m` transactions.
  static OSeries from_tids(std::span<const Tid> tids, std::size_t m);

  std::size_t size() const noexcept { return bits_.size(); }
  /// Occurrence at transaction `tid` (1-based).
  bool at(Tid tid) const { return bits_.at(tid - 1) != 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  TidList tids() const;
  OSeries reversed() const;
  std::string to_string() const;

  bool operator==(const OSeries&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Accumulator state of the support sweep.
struct SweepState {
  double t = 0.0;
  double reward = 0.0;
};

/// One row of a sweep trace: the reward seen by transaction j and the
/// accumulated support after processing it.
struct SweepStep {
  double reward = 0.0;
  double t = 0.0;
};

/// Consecutive support of a dense series. `boundaries` must be strictly
/// increasing positions in [1, m-1]; a boundary at p zeroes the reward
/// before transaction p+1 is processed.
double consecutive_support(const OSeries& series, const SupportParams& params,
                           std::span<const Tid> boundaries = {});

/// Sparse form: same value computed from the occurrence list alone.
double consecutive_support(std::span<const Tid> tids, std::size_t m, const SupportParams& params,
                           std::span<const Tid> boundaries = {});

std::vector<SweepStep> sweep_trace(const OSeries& series, const SupportParams& params,
                                   std::span<const Tid> boundaries = {});

std::size_t traditional_support(const OSeries& series);

/// Largest support any pattern can reach in a database of m transactions.
double max_support(std::size_t m, double rho) noexcept;

/// Incremental sparse sweep over strictly increasing hit positions.
///
/// A gap of g misses decays the reward by sigma^g in one multiplication.
class SparseSweep {
 public:
  explicit SparseSweep(const SupportParams& params, std::span<const Tid> boundaries = {}) noexcept
      : rho_(params.rho), sigma_(params.sigma), boundaries_(boundaries) {}

  void hit(Tid tid) noexcept {
    if (crosses_boundary(tid)) {
      state_.reward = 0.0;
    } else if (last_ != 0) {
      state_.reward *= std::pow(sigma_, static_cast<double>(tid - last_ - 1));
    }
    state_.t += 1.0 + state_.reward;
    state_.reward += rho_;
    last_ = tid;
  }

  double support() const noexcept { return state_.t; }
  double reward() const noexcept { return state_.reward; }
  Tid last() const noexcept { return last_; }

 private:
  bool crosses_boundary(Tid tid) noexcept {
    while (cursor_ < boundaries_.size() && boundaries_[cursor_] < last_) ++cursor_;
    return cursor_ < boundaries_.size() && boundaries_[cursor_] < tid && last_ != 0;
  }

  double rho_;
  double sigma_;
  std::span<const Tid> boundaries_;
  std::size_t cursor_ = 0;
  SweepState state_;
  Tid last_ = 0;
};

/// One maximal block of 1s followed by `zeros` 0s.
struct Run {
  std::size_t ones = 0;
  std::size_t zeros = 0;
  bool operator==(const Run&) const = default;
};

/// Run-length form 0^lead 1^a1 0^b1 ... 1^an 0^bn. Interior gaps are non-empty,
/// which makes the encoding of a series unique.
struct RunEncoding {
  std::size_t leading_zeros = 0;
  std::vector<Run> runs;

  void validate() const;
  std::size_t length() const noexcept;
  OSeries expand() const;
  static RunEncoding from_series(const OSeries& series);

  bool operator==(const RunEncoding&) const = default;
};

/// Closed-form support from run lengths:
///   sum a_i + rho sum a_i(a_i-1)/2 + rho sum_{i<j} a_i a_j sigma^(b_i+...+b_{j-1}).
double run_form_support(const RunEncoding& runs, const SupportParams& params);

/// Support of a pattern divided by the largest support of its items.
/// A single-item pattern has h-confidence 1.
double h_confidence(double pattern_support, std::span<const double> singleton_supports);

}  // namespace consec
