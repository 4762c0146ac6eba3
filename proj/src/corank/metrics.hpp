#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corank/profile.hpp"
#include "corank/stats.hpp"

namespace corank {

// Largest h such that at least h entries are >= h.
std::int64_t h_index(std::span<const std::int64_t> per_paper_citations);

// Ranking of the given authors by total citation count; authors without a
// citation record count as zero and are reported through `warnings`.
RankingTable citation_rank(const CitationProfile& citations,
                           const std::vector<std::string>& authors,
                           std::vector<std::string>* warnings = nullptr);

// First k rows of the table in display order; k must lie in [1, n].
std::vector<RankingRow> top_k(const RankingTable& table, std::size_t k);

struct PrefixRecall {
  std::size_t matched_winners = 0;          // winners present in the table
  std::vector<std::string> unmatched;       // winners absent from the table
  std::optional<std::size_t> prefix;        // nullopt when not reachable
};

// Smallest prefix length whose rows contain at least `want_count` winners.
// Winners absent from the table are excluded from the search and listed in
// the result.
PrefixRecall min_prefix_containing(const RankingTable& table, const AwardList& winners,
                                   std::size_t want_count);

struct ComparisonRow {
  std::string author;
  std::vector<std::size_t> ranks;                    // aligned with ranking_names
  std::int64_t citations = 0;
  std::optional<std::int64_t> h;                     // only with per-paper data
  std::vector<std::optional<std::int64_t>> extras;   // aligned with extra_names
  bool winner = false;
};

struct ComparisonTable {
  std::vector<std::string> ranking_names;
  std::vector<std::string> extra_names;
  std::vector<ComparisonRow> rows;               // in primary ranking order
  std::vector<std::string> unmatched_winners;    // sorted
};

// Joins several rankings over the same author set with citation counts,
// h-index, externally supplied integer columns, and award-winner flags.
// Rows follow the display order of rankings[primary_index].
ComparisonTable comparison_table(
    const std::vector<std::pair<std::string, const RankingTable*>>& rankings,
    const CitationProfile& citations,
    const AwardList* winners,
    const std::vector<std::pair<std::string, std::map<std::string, std::int64_t, std::less<>>>>&
        extras,
    std::size_t primary_index = 0);

}  // namespace corank
