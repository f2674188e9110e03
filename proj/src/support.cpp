#include "consec/support.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace consec {

namespace {

void check_boundaries(std::span<const Tid> boundaries, std::size_t m) {
  Tid previous = 0;
  for (Tid p : boundaries) {
    if (p < 1 || p >= m) {
      throw std::invalid_argument("boundary " + std::to_string(p) + " outside [1, m-1]");
    }
    if (p <= previous) throw std::invalid_argument("boundaries must be strictly increasing");
    previous = p;
  }
}

}  // namespace

void SupportParams::validate() const {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be >= 0");
  if (!(sigma >= 0.0 && sigma <= 1.0)) throw std::invalid_argument("sigma must lie in [0, 1]");
}

OSeries::OSeries(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("empty database");
  for (auto& b : bits_) b = b != 0 ? 1 : 0;
}

OSeries OSeries::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("O-series must consist of 0 and 1");
    bits.push_back(c == '1');
  }
  return OSeries(std::move(bits));
}

OSeries OSeries::from_tids(std::span<const Tid> tids, std::size_t m) {
  std::vector<std::uint8_t> bits(m, 0);
  Tid previous = 0;
  for (Tid tid : tids) {
    if (tid <= previous || tid > m) throw std::invalid_argument("tid list not strictly increasing in [1, m]");
    bits[tid - 1] = 1;
    previous = tid;
  }
  return OSeries(std::move(bits));
}

TidList OSeries::tids() const {
  TidList out;
  for (std::size_t j = 0; j < bits_.size(); ++j) {
    if (bits_[j]) out.push_back(static_cast<Tid>(j + 1));
  }
  return out;
}

OSeries OSeries::reversed() const {
  return OSeries(std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend()));
}

std::string OSeries::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

std::vector<SweepStep> sweep_trace(const OSeries& series, const SupportParams& params,
                                   std::span<const Tid> boundaries) {
  params.validate();
  check_boundaries(boundaries, series.size());
  std::vector<SweepStep> trace;
  trace.reserve(series.size());
  SweepState state;
  std::size_t next_boundary = 0;
  const auto bits = series.bits();
  for (std::size_t j = 1; j <= bits.size(); ++j) {
    if (next_boundary < boundaries.size() && boundaries[next_boundary] == j - 1) {
      state.reward = 0.0;
      ++next_boundary;
    }
    const double seen = state.reward;
    if (bits[j - 1]) {
      state.t += 1.0 + state.reward;
      state.reward += params.rho;
    } else {
      state.reward *= params.sigma;
    }
    trace.push_back({seen, state.t});
  }
  return trace;
}

double consecutive_support(const OSeries& series, const SupportParams& params,
                           std::span<const Tid> boundaries) {
  return sweep_trace(series, params, boundaries).back().t;
}

double consecutive_support(std::span<const Tid> tids, std::size_t m, const SupportParams& params,
                           std::span<const Tid> boundaries) {
  if (m == 0) throw std::invalid_argument("empty database");
  params.validate();
  check_boundaries(boundaries, m);
  SparseSweep sweep(params, boundaries);
  Tid previous = 0;
  for (Tid tid : tids) {
    if (tid <= previous || tid > m) throw std::invalid_argument("tid list not strictly increasing in [1, m]");
    sweep.hit(tid);
    previous = tid;
  }
  return sweep.support();
}

std::size_t traditional_support(const OSeries& series) {
  const auto bits = series.bits();
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

double max_support(std::size_t m, double rho) noexcept {
  const double md = static_cast<double>(m);
  return md + md * (md - 1.0) * rho / 2.0;
}

void RunEncoding::validate() const {
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].ones == 0) throw std::invalid_argument("run of length zero");
    if (i + 1 < runs.size() && runs[i].zeros == 0) {
      throw std::invalid_argument("interior gap of length zero");
    }
  }
  if (length() == 0) throw std::invalid_argument("empty database");
}

std::size_t RunEncoding::length() const noexcept {
  std::size_t total = leading_zeros;
  for (const auto& r : runs) total += r.ones + r.zeros;
  return total;
}

OSeries RunEncoding::expand() const {
  validate();
  std::vector<std::uint8_t> bits(leading_zeros, 0);
  for (const auto& r : runs) {
    bits.insert(bits.end(), r.ones, 1);
    bits.insert(bits.end(), r.zeros, 0);
  }
  return OSeries(std::move(bits));
}

RunEncoding RunEncoding::from_series(const OSeries& series) {
  RunEncoding enc;
  const auto bits = series.bits();
  std::size_t j = 0;
  while (j < bits.size() && !bits[j]) ++j;
  enc.leading_zeros = j;
  while (j < bits.size()) {
    Run run;
    while (j < bits.size() && bits[j]) {
      ++run.ones;
      ++j;
    }
    while (j < bits.size() && !bits[j]) {
      ++run.zeros;
      ++j;
    }
    enc.runs.push_back(run);
  }
  return enc;
}

double run_form_support(const RunEncoding& runs, const SupportParams& params) {
  params.validate();
  runs.validate();
  const auto& r = runs.runs;
  double total = 0.0;
  for (const auto& run : r) {
    const double a = static_cast<double>(run.ones);
    total += a + params.rho * a * (a - 1.0) / 2.0;
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::size_t gap = 0;
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      gap += r[j - 1].zeros;
      // std::pow(0, 0) == 1, which is the reading the formula needs.
      total += params.rho * static_cast<double>(r[i].ones) * static_cast<double>(r[j].ones) *
               std::pow(params.sigma, static_cast<double>(gap));
    }
  }
  return total;
}

double h_confidence(double pattern_support, std::span<const double> singleton_supports) {
  if (singleton_supports.empty()) throw std::invalid_argument("h-confidence of an empty pattern");
  if (pattern_support < 0.0) throw std::invalid_argument("negative pattern support");
  double largest = 0.0;
  for (double s : singleton_supports) {
    if (!(s > 0.0)) throw std::invalid_argument("item with zero support");
    largest = std::max(largest, s);
  }
  if (singleton_supports.size() == 1) return 1.0;
  return pattern_support / largest;
}

}  // namespace consec
