#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace corank {

// Per-author citation data. totals is always populated; per_paper holds the
// optional per-paper citation lists used for the h-index. The two may come
// from different extractions, so sum(per_paper) is not required to equal
// the total.
struct CitationProfile {
  std::map<std::string, std::int64_t, std::less<>> totals;
  std::map<std::string, std::vector<std::int64_t>, std::less<>> per_paper;
};

struct AwardList {
  std::set<std::string, std::less<>> winners;
};

}  // namespace corank
