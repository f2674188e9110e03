#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "consec/database.hpp"
#include "consec/miner.hpp"
#include "consec/types.hpp"

namespace consec {

// Transaction files
// -----------------
// One transaction per LF-terminated line: space-separated positive item ids.
// A blank line is an empty transaction. '#' starts a comment, except for two
// directives that must stand alone on their line:
//   #boundary     reward reset after the preceding transaction
//   #items N      item universe size, written only when N exceeds the
//                 largest item id present

/// Throws ParseError (with line number) on malformed content and
/// std::invalid_argument("empty database") when there are no transactions.
Database parse_transactions(std::string_view text);
std::string serialize_transactions(const Database& db);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Measurement matrices
// --------------------

/// Real-valued table, one row per future transaction and one column per item.
/// Rows may be ragged; absent cells are std::nullopt.
struct MeasurementMatrix {
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::string> item_labels;
  std::vector<std::string> row_labels;
  /// Segment boundaries (e.g. chromosome borders), as in transaction files.
  std::vector<Tid> boundaries;

  std::size_t columns() const noexcept;
};

/// Comma- or tab-delimited text (tab wins when the first data line has one).
/// A first line with any non-numeric cell is a header of item labels; a first
/// column that is non-numeric on data lines holds row labels. Empty cells and
/// NA are missing. `#boundary` lines mark segment borders; other '#' lines are
/// comments.
MeasurementMatrix parse_matrix(std::string_view text);

struct ThresholdSpec {
  enum class Direction { Gains, Losses };
  Direction direction = Direction::Gains;
  double threshold = 0.225;

  void validate() const;
};

ThresholdSpec::Direction parse_direction(std::string_view text);

/// Gains: item j is in transaction i iff value(i, j) > threshold.
/// Losses: iff value(i, j) < -threshold. Missing cells are absent.
/// Throws std::invalid_argument on non-finite values.
Database threshold_matrix(const MeasurementMatrix& mx, const ThresholdSpec& spec);

// Run manifests and pattern files
// -------------------------------

/// Ordered key=value parameters echoed as "# key=value" header lines.
class Manifest {
 public:
  void set(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

  void write(std::ostream& out) const;
  /// Collects "# key=value" lines; other comment lines are skipped.
  static Manifest parse_header(std::string_view text);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

struct PatternFile {
  Manifest manifest;
  std::vector<MinedPattern> patterns;  ///< tid lists are not stored
};

/// Header manifest, then one `support<TAB>item item ...` line per pattern,
/// supports to 9 decimal places.
void write_patterns(std::ostream& out, const Manifest& manifest, std::span<const MinedPattern> patterns);
PatternFile parse_patterns(std::string_view text);

}  // namespace consec
