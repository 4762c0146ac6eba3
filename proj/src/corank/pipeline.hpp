#pragma once

#include <string>

#include "corank/ingest.hpp"
#include "corank/report.hpp"

namespace corank {

// Executes one pipeline command over the configured input files:
//   component  graph summary and connected-component sizes
//   rank       ranking at a single damping factor
//   sweep      top authors per damping value plus the cross-damping
//              Spearman correlation matrix
//   correlate  stratified rank correlation between scores and citations
//   fit        power-law fits of citation counts and scores
//   deltas     per-author rank changes between the citation ranking and
//              the score ranking, with normal quantile pairs
//   compare    side-by-side ranking positions, citation counts, h-index,
//              annotation columns, and award-winner recall
ReportBundle run_command(const std::string& command, const RunConfig& config);

}  // namespace corank
