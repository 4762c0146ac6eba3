#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corank/graph.hpp"
#include "corank/profile.hpp"

namespace corank {

struct ParsedEdges {
  std::vector<EdgeRecord> records;
  std::vector<std::string> warnings;  // one entry per malformed line
};

// TSV edge list: authorA<TAB>authorB[<TAB>weight], weight defaulting to 1.
// Blank lines and '#' comments are ignored. Malformed lines are collected
// as warnings; parsing fails only when no line yields a record.
ParsedEdges parse_edge_list(const std::string& path);

// TSV citation records: author<TAB>total[<TAB>c1,c2,...].
CitationProfile parse_citations(const std::string& path);

// One award winner per line, de-duplicated.
AwardList parse_awards(const std::string& path);

// TSV integer annotation column: author<TAB>value.
std::map<std::string, std::int64_t, std::less<>> parse_extra_column(const std::string& path);

enum class OutputFormat { csv, tsv, markdown };
enum class TeleportKind { uniform, citations };

struct RunConfig {
  std::string edges_path;
  std::string citations_path;
  std::string awards_path;
  std::vector<std::pair<std::string, std::string>> extra_columns;  // name -> path

  NormMode mode = NormMode::weighted;
  TeleportKind teleport = TeleportKind::uniform;
  double damping = 0.85;
  std::vector<double> schedule = {0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85};
  double tolerance = 1e-12;
  std::size_t max_iterations = 1000;
  std::vector<std::size_t> level_cuts;   // empty -> {30,50,100,200,300,500,n}
  OutputFormat format = OutputFormat::csv;
  std::size_t top = 20;                  // 0 -> all rows
  std::vector<double> compare_dampings = {0.55, 0.15, 0.85};
  std::size_t winner_count = 0;          // 0 -> all matched winners
  bool all_components = false;
  std::size_t log_bins = 20;
};

// Ordered key/value assignments; later entries win. This is the common
// currency between config files, CLI flags, and the C API.
class ConfigMap {
 public:
  void set(const std::string& key, const std::string& value);

  // `key = value` lines; '#' comments and blank lines ignored.
  void load_file(const std::string& path);

  const std::vector<std::pair<std::string, std::string>>& items() const noexcept {
    return items_;
  }

  // Validates every assignment and produces the effective configuration.
  RunConfig resolve() const;

  static bool known_key(const std::string& key);

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

}  // namespace corank
