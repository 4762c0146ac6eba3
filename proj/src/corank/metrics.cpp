#include "corank/metrics.hpp"

#include <algorithm>
#include <sstream>

#include "corank/error.hpp"

namespace corank {

std::int64_t h_index(std::span<const std::int64_t> per_paper_citations) {
  for (std::int64_t c : per_paper_citations) {
    if (c < 0) fail(Errc::invalid_count, "per-paper citation counts must be non-negative");
  }
  std::vector<std::int64_t> sorted(per_paper_citations.begin(), per_paper_citations.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::int64_t h = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= static_cast<std::int64_t>(i + 1)) {
      h = static_cast<std::int64_t>(i + 1);
    } else {
      break;
    }
  }
  return h;
}

RankingTable citation_rank(const CitationProfile& citations,
                           const std::vector<std::string>& authors,
                           std::vector<std::string>* warnings) {
  std::vector<double> counts(authors.size(), 0.0);
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < authors.size(); ++i) {
    auto it = citations.totals.find(authors[i]);
    if (it == citations.totals.end()) {
      missing.push_back(authors[i]);
    } else {
      counts[i] = static_cast<double>(it->second);
    }
  }
  if (warnings && !missing.empty()) {
    std::ostringstream msg;
    msg << "citation ranking: " << missing.size()
        << " author(s) have no citation record, ranked with 0 citations:";
    for (std::size_t i = 0; i < missing.size() && i < 8; ++i) msg << ' ' << missing[i];
    if (missing.size() > 8) msg << " ... (" << missing.size() - 8 << " more)";
    warnings->push_back(msg.str());
  }
  return RankingTable::from_scores(authors, counts);
}

std::vector<RankingRow> top_k(const RankingTable& table, std::size_t k) {
  const std::size_t n = table.rows().size();
  if (k < 1 || k > n) {
    std::ostringstream msg;
    msg << "k must lie in [1, " << n << "], got " << k;
    fail(Errc::invalid_k, msg.str());
  }
  return {table.rows().begin(), table.rows().begin() + static_cast<std::ptrdiff_t>(k)};
}

PrefixRecall min_prefix_containing(const RankingTable& table, const AwardList& winners,
                                   std::size_t want_count) {
  if (want_count < 1) fail(Errc::invalid_argument, "winner count must be at least 1");
  if (winners.winners.empty()) fail(Errc::empty_award_list, "award list is empty");

  PrefixRecall result;
  for (const std::string& winner : winners.winners) {
    if (table.position_of(winner)) {
      ++result.matched_winners;
    } else {
      result.unmatched.push_back(winner);
    }
  }
  if (result.matched_winners < want_count) return result;  // not reachable

  std::size_t seen = 0;
  for (std::size_t pos = 0; pos < table.rows().size(); ++pos) {
    if (winners.winners.count(table.rows()[pos].author) > 0) {
      if (++seen == want_count) {
        result.prefix = pos + 1;
        break;
      }
    }
  }
  return result;
}

ComparisonTable comparison_table(
    const std::vector<std::pair<std::string, const RankingTable*>>& rankings,
    const CitationProfile& citations,
    const AwardList* winners,
    const std::vector<std::pair<std::string, std::map<std::string, std::int64_t, std::less<>>>>&
        extras,
    std::size_t primary_index) {
  if (rankings.empty()) fail(Errc::invalid_argument, "comparison needs at least one ranking");
  if (primary_index >= rankings.size()) {
    fail(Errc::invalid_argument, "primary ranking index out of range");
  }

  const RankingTable& primary = *rankings[primary_index].second;
  for (const auto& [name, table] : rankings) {
    if (table->rows().size() != primary.rows().size()) {
      fail(Errc::author_set_mismatch,
           "ranking '" + name + "' covers a different number of authors");
    }
    for (const RankingRow& row : primary.rows()) {
      if (!table->position_of(row.author)) {
        fail(Errc::author_set_mismatch,
             "ranking '" + name + "' is missing author: " + row.author);
      }
    }
  }

  ComparisonTable out;
  for (const auto& [name, table] : rankings) {
    (void)table;
    out.ranking_names.push_back(name);
  }
  for (const auto& [name, column] : extras) {
    (void)column;
    out.extra_names.push_back(name);
  }

  for (const RankingRow& row : primary.rows()) {
    ComparisonRow line;
    line.author = row.author;
    for (const auto& [name, table] : rankings) {
      (void)name;
      line.ranks.push_back(table->rows()[*table->position_of(row.author)].rank);
    }
    auto total = citations.totals.find(row.author);
    line.citations = total == citations.totals.end() ? 0 : total->second;
    auto papers = citations.per_paper.find(row.author);
    if (papers != citations.per_paper.end()) line.h = h_index(papers->second);
    for (const auto& [name, column] : extras) {
      (void)name;
      auto cell = column.find(row.author);
      line.extras.push_back(cell == column.end()
                                ? std::nullopt
                                : std::optional<std::int64_t>(cell->second));
    }
    line.winner = winners != nullptr && winners->winners.count(row.author) > 0;
    out.rows.push_back(std::move(line));
  }

  if (winners) {
    for (const std::string& winner : winners->winners) {
      if (!primary.position_of(winner)) out.unmatched_winners.push_back(winner);
    }
    std::sort(out.unmatched_winners.begin(), out.unmatched_winners.end());
  }
  return out;
}

}  // namespace corank
