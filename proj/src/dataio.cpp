#include "consec/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace consec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Splits on LF; a final LF does not start another line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (true) {
    pos = s.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    const auto end = s.find_first_of(" \t", pos);
    words.push_back(s.substr(pos, end == std::string_view::npos ? end : end - pos));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return words;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

Item parse_item(std::string_view word, std::size_t line) {
  if (!word.empty() && word.front() == '-') throw ParseError(line, "item ids must be >= 1, got '" + std::string(word) + "'");
  const auto value = parse_number<unsigned long long>(word);
  if (!value) throw ParseError(line, "malformed item '" + std::string(word) + "'");
  if (*value < 1) throw ParseError(line, "item ids must be >= 1");
  if (*value > 0xffffffffULL) throw ParseError(line, "item id too large");
  return static_cast<Item>(*value);
}

}  // namespace

Database parse_transactions(std::string_view text) {
  std::vector<Itemset> transactions;
  std::vector<Tid> boundaries;
  Item num_items = 0;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = trim(lines[i]);
    if (!line.empty() && line.front() == '#') {
      const auto words = split_words(line);
      if (words.front() == "#boundary") {
        if (words.size() != 1) throw ParseError(line_no, "#boundary takes no arguments");
        boundaries.push_back(static_cast<Tid>(transactions.size()));
      } else if (words.front() == "#items") {
        if (words.size() != 2) throw ParseError(line_no, "#items takes one argument");
        num_items = parse_item(words[1], line_no);
      }
      continue;
    }
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Itemset items;
    for (auto word : split_words(line)) items.push_back(parse_item(word, line_no));
    transactions.push_back(std::move(items));
  }
  if (transactions.empty()) throw std::invalid_argument("empty database");
  try {
    return Database(std::move(transactions), num_items, std::move(boundaries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_transactions(const Database& db) {
  std::string out;
  if (db.num_items() != db.max_item()) out += "#items " + std::to_string(db.num_items()) + "\n";
  const auto& boundaries = db.boundaries();
  std::size_t next = 0;
  for (Tid tid = 1; tid <= db.size(); ++tid) {
    const auto& t = db[tid];
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) out.push_back(' ');
      out += std::to_string(t[k]);
    }
    out.push_back('\n');
    if (next < boundaries.size() && boundaries[next] == tid) {
      out += "#boundary\n";
      ++next;
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("error writing " + path.string());
}

std::size_t MeasurementMatrix::columns() const noexcept {
  std::size_t n = item_labels.size();
  for (const auto& r : rows) n = std::max(n, r.size());
  return n;
}

namespace {

struct Cell {
  std::string_view text;
  bool missing = false;
  std::optional<double> value;  // set when numeric
};

Cell classify(std::string_view raw) {
  Cell c;
  c.text = trim(raw);
  if (c.text.empty() || c.text == "NA" || c.text == "na" || c.text == "N/A") {
    c.missing = true;
    return c;
  }
  c.value = parse_number<double>(c.text);
  return c;
}

bool is_label(const Cell& c) { return !c.missing && !c.value; }

std::vector<Cell> split_cells(std::string_view line, char delim) {
  std::vector<Cell> cells;
  std::size_t pos = 0;
  while (true) {
    const auto end = line.find(delim, pos);
    cells.push_back(classify(line.substr(pos, end == std::string_view::npos ? end : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return cells;
}

}  // namespace

MeasurementMatrix parse_matrix(std::string_view text) {
  struct Row {
    std::size_t line;
    std::string_view text;
  };
  std::vector<Row> data;
  std::vector<std::size_t> boundary_after;  // index into `data`
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (split_words(line).front() == "#boundary") boundary_after.push_back(data.size());
      continue;
    }
    data.push_back({i + 1, lines[i]});
  }
  MeasurementMatrix mx;
  if (data.empty()) return mx;

  const char delim = data.front().text.find('\t') != std::string_view::npos ? '\t' : ',';
  std::vector<std::vector<Cell>> rows;
  rows.reserve(data.size());
  for (const auto& r : data) rows.push_back(split_cells(r.text, delim));

  const auto& probe = rows.size() > 1 ? rows[1] : rows[0];
  const bool labelled = is_label(probe.front());
  const auto& first = rows.front();
  bool header = false;
  for (std::size_t k = labelled ? 1 : 0; k < first.size(); ++k) header = header || is_label(first[k]);
  if (!labelled && !first.empty() && is_label(first.front())) header = true;

  std::size_t start = 0;
  if (header) {
    for (std::size_t k = labelled ? 1 : 0; k < first.size(); ++k) mx.item_labels.emplace_back(first[k].text);
    start = 1;
  }
  for (std::size_t i = start; i < rows.size(); ++i) {
    auto& cells = rows[i];
    std::vector<std::optional<double>> values;
    std::size_t k = 0;
    if (labelled) {
      mx.row_labels.emplace_back(cells.front().text);
      k = 1;
    }
    for (; k < cells.size(); ++k) {
      if (is_label(cells[k])) {
        throw ParseError(data[i].line, "non-numeric value '" + std::string(cells[k].text) + "'");
      }
      values.push_back(cells[k].value);
    }
    mx.rows.push_back(std::move(values));
  }
  for (std::size_t b : boundary_after) {
    if (b > start) mx.boundaries.push_back(static_cast<Tid>(b - start));
  }
  return mx;
}

void ThresholdSpec::validate() const {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) throw std::invalid_argument("threshold must be > 0");
}

ThresholdSpec::Direction parse_direction(std::string_view text) {
  if (text == "gains") return ThresholdSpec::Direction::Gains;
  if (text == "losses") return ThresholdSpec::Direction::Losses;
  throw std::invalid_argument("direction must be gains or losses");
}

Database threshold_matrix(const MeasurementMatrix& mx, const ThresholdSpec& spec) {
  spec.validate();
  const std::size_t n = mx.columns();
  if (mx.rows.empty()) throw std::invalid_argument("empty database");
  if (n == 0) throw std::invalid_argument("matrix has no columns");
  std::vector<Itemset> transactions;
  transactions.reserve(mx.rows.size());
  for (std::size_t i = 0; i < mx.rows.size(); ++i) {
    Itemset items;
    for (std::size_t j = 0; j < mx.rows[i].size(); ++j) {
      const auto& cell = mx.rows[i][j];
      if (!cell) continue;
      if (!std::isfinite(*cell)) {
        throw std::invalid_argument("non-finite value in row " + std::to_string(i + 1) + ", column " +
                                    std::to_string(j + 1));
      }
      const bool present = spec.direction == ThresholdSpec::Direction::Gains ? *cell > spec.threshold
                                                                             : *cell < -spec.threshold;
      if (present) items.push_back(static_cast<Item>(j + 1));
    }
    transactions.push_back(std::move(items));
  }
  return Database(std::move(transactions), static_cast<Item>(n), mx.boundaries);
}

void Manifest::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> Manifest::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void Manifest::write(std::ostream& out) const {
  for (const auto& [k, v] : entries_) out << "# " << k << '=' << v << '\n';
}

Manifest Manifest::parse_header(std::string_view text) {
  Manifest m;
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (line.size() < 2 || line.substr(0, 2) != "# ") continue;
    line.remove_prefix(2);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) continue;
    const auto key = line.substr(0, eq);
    if (key.find_first_of(" \t") != std::string_view::npos) continue;
    m.set(std::string(key), std::string(line.substr(eq + 1)));
  }
  return m;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buf, ptr);
}

void write_patterns(std::ostream& out, const Manifest& manifest, std::span<const MinedPattern> patterns) {
  manifest.write(out);
  char buf[64];
  for (const auto& p : patterns) {
    std::snprintf(buf, sizeof buf, "%.9f", p.support);
    out << buf << '\t';
    for (std::size_t k = 0; k < p.items.size(); ++k) {
      if (k) out << ' ';
      out << p.items[k];
    }
    out << '\n';
  }
}

PatternFile parse_patterns(std::string_view text) {
  PatternFile file;
  file.manifest = Manifest::parse_header(text);
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(line_no, "expected support<TAB>items");
    const auto support = parse_number<double>(trim(line.substr(0, tab)));
    if (!support || !(*support >= 0.0)) throw ParseError(line_no, "malformed support");
    MinedPattern p;
    p.support = *support;
    for (auto word : split_words(line.substr(tab + 1))) p.items.push_back(parse_item(word, line_no));
    if (p.items.empty()) throw ParseError(line_no, "pattern without items");
    std::sort(p.items.begin(), p.items.end());
    p.items.erase(std::unique(p.items.begin(), p.items.end()), p.items.end());
    file.patterns.push_back(std::move(p));
  }
  return file;
}

}  // namespace consec
