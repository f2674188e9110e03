#include "consec/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace consec {

std::vector<MinedPattern> top_k(std::span<const MinedPattern> patterns, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  std::vector<MinedPattern> sorted(patterns.begin(), patterns.end());
  const auto better = [](const MinedPattern& a, const MinedPattern& b) {
    if (a.support != b.support) return a.support > b.support;
    return canonical_less(a.items, b.items);
  };
  if (k < sorted.size()) {
    std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k), sorted.end(), better);
    sorted.resize(k);
  } else {
    std::sort(sorted.begin(), sorted.end(), better);
  }
  return sorted;
}

OccurrenceGraph occurrence_graph(std::span<const MinedPattern> patterns, const Database& db) {
  OccurrenceGraph graph;
  graph.counts.assign(db.size(), 0);
  graph.boundaries = db.boundaries();
  for (Tid tid = 1; tid <= db.size(); ++tid) {
    std::size_t count = 0;
    for (const auto& p : patterns) count += db.contains(tid, p.items) ? 1 : 0;
    graph.counts[tid - 1] = count;
  }
  return graph;
}

void write_occurrence_graph(std::ostream& out, const Manifest& manifest, const OccurrenceGraph& graph) {
  manifest.write(out);
  std::size_t next = 0;
  for (std::size_t i = 0; i < graph.counts.size(); ++i) {
    const auto tid = static_cast<Tid>(i + 1);
    out << tid << '\t' << graph.counts[i] << '\n';
    if (next < graph.boundaries.size() && graph.boundaries[next] == tid) {
      out << "#boundary " << tid << '\n';
      ++next;
    }
  }
}

OccurrenceGraph parse_occurrence_graph(std::string_view text) {
  OccurrenceGraph graph;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  const auto number = [&](std::string_view s) {
    unsigned long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw ParseError(line_no, "malformed number");
    return v;
  };
  while (pos < text.size()) {
    ++line_no;
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("#boundary ")) {
      graph.boundaries.push_back(static_cast<Tid>(number(line.substr(10))));
      continue;
    }
    if (line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(line_no, "expected index<TAB>count");
    const auto index = number(line.substr(0, tab));
    if (index != graph.counts.size() + 1) throw ParseError(line_no, "indices must run 1, 2, ...");
    graph.counts.push_back(number(line.substr(tab + 1)));
  }
  return graph;
}

WindowContrast window_contrast(const OccurrenceGraph& graph, std::span<const TxWindow> windows) {
  double inside = 0.0;
  double outside = 0.0;
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  for (std::size_t i = 0; i < graph.counts.size(); ++i) {
    const auto tid = static_cast<Tid>(i + 1);
    const bool in = std::any_of(windows.begin(), windows.end(), [tid](const TxWindow& w) { return w.contains(tid); });
    (in ? inside : outside) += static_cast<double>(graph.counts[i]);
    ++(in ? n_in : n_out);
  }
  WindowContrast c;
  c.mean_inside = n_in ? inside / static_cast<double>(n_in) : 0.0;
  c.mean_outside = n_out ? outside / static_cast<double>(n_out) : 0.0;
  if (c.mean_outside > 0.0) {
    c.ratio = c.mean_inside / c.mean_outside;
  } else {
    c.ratio = c.mean_inside > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return c;
}

double tune_minsup(const Database& db, MiningConfig config, std::size_t target, int iterations) {
  if (target == 0) throw std::invalid_argument("target must be >= 1");
  double lo = 0.0;
  double hi = max_support(db.size(), config.params.rho) + 1.0;
  config.max_patterns = target + 1;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    config.minsup = mid;
    const auto result = mine(db, config);
    if (result.truncated || result.patterns.size() > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace consec
