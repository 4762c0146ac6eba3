#include "corank/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "corank/error.hpp"
#include "corank/text.hpp"

namespace corank {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (in.bad()) fail(Errc::io_error, "read failure on file: " + path);
  return lines;
}

bool skippable(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

ParsedEdges parse_edge_list(const std::string& path) {
  ParsedEdges out;
  const std::vector<std::string> lines = read_lines(path);
  for (std::size_t number = 1; number <= lines.size(); ++number) {
    const std::string& line = lines[number - 1];
    if (skippable(line)) continue;

    auto malformed = [&](const std::string& reason) {
      std::ostringstream msg;
      msg << "edge list line " << number << ": " << reason;
      out.warnings.push_back(msg.str());
    };

    const std::vector<std::string> fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      malformed("expected 2 or 3 tab-separated fields, got " +
                std::to_string(fields.size()));
      continue;
    }
    EdgeRecord record;
    record.author_a = trim(fields[0]);
    record.author_b = trim(fields[1]);
    if (record.author_a.empty() || record.author_b.empty()) {
      malformed("empty author name");
      continue;
    }
    if (fields.size() == 3) {
      const auto weight = parse_double(fields[2]);
      if (!weight) {
        malformed("unparseable weight '" + trim(fields[2]) + "'");
        continue;
      }
      if (!(*weight > 0.0)) {
        malformed("non-positive weight " + trim(fields[2]));
        continue;
      }
      record.weight = *weight;
    }
    out.records.push_back(std::move(record));
  }
  if (out.records.empty()) {
    std::ostringstream msg;
    msg << "no valid edge records in " << path;
    if (!out.warnings.empty()) msg << " (" << out.warnings.size() << " malformed line(s))";
    fail(Errc::no_valid_records, msg.str());
  }
  return out;
}

CitationProfile parse_citations(const std::string& path) {
  CitationProfile profile;
  const std::vector<std::string> lines = read_lines(path);
  for (std::size_t number = 1; number <= lines.size(); ++number) {
    const std::string& line = lines[number - 1];
    if (skippable(line)) continue;

    auto bad = [&](Errc code, const std::string& reason) {
      std::ostringstream msg;
      msg << "citation file line " << number << ": " << reason;
      fail(code, msg.str());
    };

    const std::vector<std::string> fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      bad(Errc::parse_error,
          "expected 2 or 3 tab-separated fields, got " + std::to_string(fields.size()));
    }
    const std::string author = trim(fields[0]);
    if (author.empty()) bad(Errc::parse_error, "empty author name");

    const auto total = parse_int(fields[1]);
    if (!total) bad(Errc::parse_error, "unparseable citation total '" + trim(fields[1]) + "'");
    if (*total < 0) {
      bad(Errc::invalid_count, "negative citation total " + std::to_string(*total));
    }
    if (profile.totals.count(author) > 0) {
      bad(Errc::duplicate_author, "duplicate author '" + author + "'");
    }
    profile.totals[author] = *total;

    if (fields.size() == 3) {
      std::vector<std::int64_t> papers;
      for (const std::string& piece : split(fields[2], ',')) {
        const auto count = parse_int(piece);
        if (!count) {
          bad(Errc::parse_error, "unparseable per-paper count '" + trim(piece) + "'");
        }
        if (*count < 0) {
          bad(Errc::invalid_count, "negative per-paper count " + std::to_string(*count));
        }
        papers.push_back(*count);
      }
      profile.per_paper[author] = std::move(papers);
    }
  }
  if (profile.totals.empty()) {
    fail(Errc::no_valid_records, "no citation records in " + path);
  }
  return profile;
}

AwardList parse_awards(const std::string& path) {
  AwardList awards;
  for (const std::string& line : read_lines(path)) {
    if (skippable(line)) continue;
    awards.winners.insert(trim(line));
  }
  if (awards.winners.empty()) {
    fail(Errc::empty_award_list, "award list is empty: " + path);
  }
  return awards;
}

std::map<std::string, std::int64_t, std::less<>> parse_extra_column(const std::string& path) {
  std::map<std::string, std::int64_t, std::less<>> column;
  const std::vector<std::string> lines = read_lines(path);
  for (std::size_t number = 1; number <= lines.size(); ++number) {
    const std::string& line = lines[number - 1];
    if (skippable(line)) continue;

    auto bad = [&](Errc code, const std::string& reason) {
      std::ostringstream msg;
      msg << "column file " << path << " line " << number << ": " << reason;
      fail(code, msg.str());
    };

    const std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 2) {
      bad(Errc::parse_error,
          "expected 2 tab-separated fields, got " + std::to_string(fields.size()));
    }
    const std::string author = trim(fields[0]);
    if (author.empty()) bad(Errc::parse_error, "empty author name");
    const auto value = parse_int(fields[1]);
    if (!value) bad(Errc::parse_error, "unparseable integer '" + trim(fields[1]) + "'");
    if (column.count(author) > 0) {
      bad(Errc::duplicate_author, "duplicate author '" + author + "'");
    }
    column[author] = *value;
  }
  if (column.empty()) fail(Errc::no_valid_records, "no records in column file " + path);
  return column;
}

// ---- configuration -----------------------------------------------------------

static const char* const kKnownKeys[] = {
    "edges",      "citations",        "awards",       "format",
    "mode",       "teleport",         "damping",      "schedule",
    "tolerance",  "max_iter",         "levels",       "top",
    "compare_dampings", "winner_count", "all_components", "log_bins",
};

bool ConfigMap::known_key(const std::string& key) {
  for (const char* known : kKnownKeys) {
    if (key == known) return true;
  }
  return key.rfind("extra.", 0) == 0 && key.size() > 6;
}

void ConfigMap::set(const std::string& key, const std::string& value) {
  if (!known_key(key)) fail(Errc::usage_error, "unknown configuration key: " + key);
  items_.emplace_back(key, value);
}

void ConfigMap::load_file(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  for (std::size_t number = 1; number <= lines.size(); ++number) {
    const std::string& line = lines[number - 1];
    if (skippable(line)) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config file " << path << " line " << number << ": expected key = value";
      fail(Errc::usage_error, msg.str());
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      std::ostringstream msg;
      msg << "config file " << path << " line " << number << ": empty key";
      fail(Errc::usage_error, msg.str());
    }
    if (!known_key(key)) {
      std::ostringstream msg;
      msg << "config file " << path << " line " << number << ": unknown key '" << key << "'";
      fail(Errc::usage_error, msg.str());
    }
    items_.emplace_back(key, value);
  }
}

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& reason) {
  fail(Errc::usage_error, "invalid value for " + key + ": '" + value + "' (" + reason + ")");
}

double config_double(const std::string& key, const std::string& value) {
  const auto parsed = parse_double(value);
  if (!parsed) bad_value(key, value, "expected a number");
  return *parsed;
}

std::size_t config_count(const std::string& key, const std::string& value) {
  const auto parsed = parse_int(value);
  if (!parsed || *parsed < 0) bad_value(key, value, "expected a non-negative integer");
  return static_cast<std::size_t>(*parsed);
}

std::vector<double> config_damping_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const std::string& piece : split(value, ',')) {
    const auto d = parse_double(piece);
    if (!d) bad_value(key, value, "expected comma-separated numbers");
    if (!(*d > 0.0 && *d < 1.0)) bad_value(key, value, "damping values must lie in (0, 1)");
    out.push_back(*d);
  }
  if (out.empty()) bad_value(key, value, "empty list");
  return out;
}

bool config_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_value(key, value, "expected true or false");
}

}  // namespace

RunConfig ConfigMap::resolve() const {
  RunConfig config;
  for (const auto& [key, value] : items_) {
    if (key == "edges") {
      config.edges_path = value;
    } else if (key == "citations") {
      config.citations_path = value;
    } else if (key == "awards") {
      config.awards_path = value;
    } else if (key == "format") {
      if (value == "csv") {
        config.format = OutputFormat::csv;
      } else if (value == "tsv") {
        config.format = OutputFormat::tsv;
      } else if (value == "markdown") {
        config.format = OutputFormat::markdown;
      } else {
        bad_value(key, value, "expected csv, tsv, or markdown");
      }
    } else if (key == "mode") {
      if (value == "weighted") {
        config.mode = NormMode::weighted;
      } else if (value == "unweighted") {
        config.mode = NormMode::unweighted;
      } else {
        bad_value(key, value, "expected weighted or unweighted");
      }
    } else if (key == "teleport") {
      if (value == "uniform") {
        config.teleport = TeleportKind::uniform;
      } else if (value == "citations") {
        config.teleport = TeleportKind::citations;
      } else {
        bad_value(key, value, "expected uniform or citations");
      }
    } else if (key == "damping") {
      const double d = config_double(key, value);
      if (!(d >= 0.0 && d < 1.0)) bad_value(key, value, "damping must lie in [0, 1)");
      config.damping = d;
    } else if (key == "schedule") {
      config.schedule = config_damping_list(key, value);
    } else if (key == "tolerance") {
      const double tol = config_double(key, value);
      if (!(tol > 0.0)) bad_value(key, value, "tolerance must be positive");
      config.tolerance = tol;
    } else if (key == "max_iter") {
      const std::size_t iters = config_count(key, value);
      if (iters == 0) bad_value(key, value, "max_iter must be at least 1");
      config.max_iterations = iters;
    } else if (key == "levels") {
      std::vector<std::size_t> cuts;
      for (const std::string& piece : split(value, ',')) {
        const auto cut = parse_int(piece);
        if (!cut || *cut < 1) bad_value(key, value, "expected positive integers");
        cuts.push_back(static_cast<std::size_t>(*cut));
      }
      if (cuts.empty()) bad_value(key, value, "empty list");
      if (!std::is_sorted(cuts.begin(), cuts.end()) ||
          std::adjacent_find(cuts.begin(), cuts.end()) != cuts.end()) {
        bad_value(key, value, "cut points must be strictly ascending");
      }
      config.level_cuts = std::move(cuts);
    } else if (key == "top") {
      config.top = config_count(key, value);
    } else if (key == "compare_dampings") {
      config.compare_dampings = config_damping_list(key, value);
    } else if (key == "winner_count") {
      config.winner_count = config_count(key, value);
    } else if (key == "all_components") {
      config.all_components = config_bool(key, value);
    } else if (key == "log_bins") {
      const std::size_t bins = config_count(key, value);
      if (bins < 3) bad_value(key, value, "need at least 3 bins");
      config.log_bins = bins;
    } else if (key.rfind("extra.", 0) == 0) {
      const std::string name = key.substr(6);
      auto existing = std::find_if(config.extra_columns.begin(), config.extra_columns.end(),
                                   [&](const auto& entry) { return entry.first == name; });
      if (existing != config.extra_columns.end()) {
        existing->second = value;
      } else {
        config.extra_columns.emplace_back(name, value);
      }
    } else {
      fail(Errc::usage_error, "unknown configuration key: " + key);
    }
  }
  return config;
}

}  // namespace corank
