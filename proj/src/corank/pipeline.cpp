#include "corank/pipeline.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "corank/error.hpp"
#include "corank/metrics.hpp"
#include "corank/ranker.hpp"
#include "corank/stats.hpp"

namespace corank {

namespace {

struct Inputs {
  CoauthorGraph graph;
  std::optional<CitationProfile> citations;
  std::optional<AwardList> awards;
  std::vector<std::pair<std::string, std::map<std::string, std::int64_t, std::less<>>>> extras;
};

Inputs load_inputs(const RunConfig& config, ReportBundle& bundle, bool need_citations) {
  if (config.edges_path.empty()) {
    fail(Errc::usage_error, "an edge list file is required (--edges)");
  }
  Inputs inputs;
  ParsedEdges parsed = parse_edge_list(config.edges_path);
  for (std::string& warning : parsed.warnings) bundle.warnings.push_back(std::move(warning));
  inputs.graph = CoauthorGraph::build(parsed.records);

  const bool want_citations = need_citations ||
                              config.teleport == TeleportKind::citations ||
                              !config.citations_path.empty();
  if (want_citations) {
    if (config.citations_path.empty()) {
      fail(Errc::usage_error, "this command needs a citation file (--citations)");
    }
    inputs.citations = parse_citations(config.citations_path);
  }
  if (!config.awards_path.empty()) inputs.awards = parse_awards(config.awards_path);
  for (const auto& [name, path] : config.extra_columns) {
    inputs.extras.emplace_back(name, parse_extra_column(path));
  }
  return inputs;
}

TeleportVector make_teleport(const RunConfig& config, const Inputs& inputs,
                             const CoauthorGraph& component, ReportBundle& bundle) {
  if (config.teleport == TeleportKind::uniform) {
    return uniform_teleport(component.node_count());
  }
  return citation_teleport(*inputs.citations, component.nodes(), &bundle.warnings);
}

std::size_t display_rows(const RunConfig& config, std::size_t available) {
  if (config.top == 0) return available;
  return std::min(config.top, available);
}

// Citation totals in component node order, absentees as zero.
std::vector<double> citation_values(const CitationProfile& citations,
                                    const CoauthorGraph& component,
                                    ReportBundle& bundle) {
  std::vector<std::string> warnings;
  RankingTable table = citation_rank(citations, component.nodes(), &warnings);
  for (std::string& warning : warnings) bundle.warnings.push_back(std::move(warning));
  std::vector<double> values(component.node_count(), 0.0);
  for (std::size_t i = 0; i < component.node_count(); ++i) {
    auto it = citations.totals.find(component.node(i));
    if (it != citations.totals.end()) values[i] = static_cast<double>(it->second);
  }
  return values;
}

void append_ranking_rows(Table& table, const RankingTable& ranking,
                         const std::string& component_label, std::size_t limit) {
  for (std::size_t i = 0; i < limit; ++i) {
    const RankingRow& row = ranking.rows()[i];
    std::vector<std::string> cells;
    if (!component_label.empty()) cells.push_back(component_label);
    cells.push_back(std::to_string(row.rank));
    cells.push_back(row.author);
    cells.push_back(format_real(row.score));
    table.rows.push_back(std::move(cells));
  }
}

ReportBundle cmd_component(const RunConfig& config) {
  ReportBundle bundle;
  Inputs inputs = load_inputs(config, bundle, false);
  std::vector<CoauthorGraph> parts = components(inputs.graph);

  Section summary;
  summary.name = "graph";
  summary.table.headers = {"nodes", "edges", "components", "largest_component"};
  summary.table.rows.push_back({std::to_string(inputs.graph.node_count()),
                                std::to_string(inputs.graph.edge_count()),
                                std::to_string(parts.size()),
                                std::to_string(parts.front().node_count())});
  bundle.sections.push_back(std::move(summary));

  Section listing;
  listing.name = "components";
  listing.table.headers = {"component", "size", "edges", "smallest_member"};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    listing.table.rows.push_back({std::to_string(i + 1),
                                  std::to_string(parts[i].node_count()),
                                  std::to_string(parts[i].edge_count()),
                                  parts[i].node(0)});
  }
  bundle.sections.push_back(std::move(listing));
  return bundle;
}

ReportBundle cmd_rank(const RunConfig& config) {
  ReportBundle bundle;
  Inputs inputs = load_inputs(config, bundle, false);

  Section section;
  section.name = "ranking";
  if (!config.all_components) {
    CoauthorGraph component = largest_component(inputs.graph);
    StochasticOperator op(component, config.mode);
    TeleportVector teleport = make_teleport(config, inputs, component, bundle);
    ScoreVector scores = pagerank(op, teleport, config.damping, config.tolerance,
                                  config.max_iterations);
    RankingTable ranking = RankingTable::from_scores(component.nodes(), scores.entries);
    section.table.headers = {"rank", "author", "score"};
    append_ranking_rows(section.table, ranking, "", ranking.rows().size());
  } else {
    section.table.headers = {"component", "rank", "author", "score"};
    section.notes.push_back(
        "scores are normalized within each component and are not comparable "
        "across components");
    std::vector<CoauthorGraph> parts = components(inputs.graph);
    std::size_t ranked = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].node_count() < 2) continue;
      ++ranked;
      StochasticOperator op(parts[i], config.mode);
      TeleportVector teleport = make_teleport(config, inputs, parts[i], bundle);
      ScoreVector scores = pagerank(op, teleport, config.damping, config.tolerance,
                                    config.max_iterations);
      RankingTable ranking = RankingTable::from_scores(parts[i].nodes(), scores.entries);
      append_ranking_rows(section.table, ranking, std::to_string(i + 1),
                          ranking.rows().size());
    }
    if (ranked == 0) {
      bundle.warnings.push_back("rank: no component has 2 or more nodes; nothing to rank");
    }
  }
  bundle.sections.push_back(std::move(section));
  return bundle;
}

ReportBundle cmd_sweep(const RunConfig& config) {
  ReportBundle bundle;
  Inputs inputs = load_inputs(config, bundle, false);
  CoauthorGraph component = largest_component(inputs.graph);
  StochasticOperator op(component, config.mode);
  TeleportVector teleport = make_teleport(config, inputs, component, bundle);

  DampingSchedule schedule(config.schedule);
  std::map<double, ScoreVector> sweep =
      damping_sweep(op, teleport, schedule, config.tolerance, config.max_iterations);

  std::vector<double> dampings;
  std::vector<RankingTable> rankings;
  for (const auto& [d, scores] : sweep) {
    dampings.push_back(d);
    rankings.push_back(RankingTable::from_scores(component.nodes(), scores.entries));
  }

  Section top;
  top.name = "top";
  top.table.headers = {"rank"};
  for (double d : dampings) top.table.headers.push_back("d=" + format_real(d));
  const std::size_t limit = display_rows(config, component.node_count());
  for (std::size_t pos = 0; pos < limit; ++pos) {
    std::vector<std::string> cells = {std::to_string(pos + 1)};
    for (const RankingTable& ranking : rankings) cells.push_back(ranking.rows()[pos].author);
    top.table.rows.push_back(std::move(cells));
  }
  bundle.sections.push_back(std::move(top));

  if (sweep.size() >= 2) {
    DampingCorrelation matrix = cross_damping_matrix(sweep);
    Section correlation;
    correlation.name = "damping_correlation";
    correlation.table.headers = {"d"};
    for (double d : matrix.dampings) correlation.table.headers.push_back(format_real(d));
    for (std::size_t i = 0; i < matrix.dampings.size(); ++i) {
      std::vector<std::string> cells = {format_real(matrix.dampings[i])};
      for (double rho : matrix.rho[i]) cells.push_back(format_real(rho));
      correlation.table.rows.push_back(std::move(cells));
    }
    bundle.sections.push_back(std::move(correlation));
  }
  return bundle;
}

std::vector<std::size_t> effective_cuts(const RunConfig& config, std::size_t n,
                                        ReportBundle& bundle) {
  std::vector<std::size_t> cuts;
  if (config.level_cuts.empty()) {
    for (std::size_t cut : {std::size_t{30}, std::size_t{50}, std::size_t{100},
                            std::size_t{200}, std::size_t{300}, std::size_t{500}}) {
      if (cut < n) cuts.push_back(cut);
    }
    cuts.push_back(n);
  } else {
    std::size_t dropped = 0;
    for (std::size_t cut : config.level_cuts) {
      if (cut <= n) {
        cuts.push_back(cut);
      } else {
        ++dropped;
      }
    }
    if (dropped > 0) {
      std::ostringstream msg;
      msg << "correlate: dropped " << dropped << " level cut(s) larger than the "
          << n << "-author component";
      bundle.warnings.push_back(msg.str());
    }
    if (cuts.empty()) {
      fail(Errc::usage_error, "all requested level cuts exceed the component size");
    }
  }
  return cuts;
}

void append_correlation_rows(Section& section, const CorrelationReport& report,
                             const char* direction) {
  for (const CorrelationLevel& level : report.levels) {
    std::vector<std::string> cells = {level.label, direction, std::to_string(level.size)};
    if (level.skipped) {
      cells.push_back("");
      cells.push_back("");
      section.notes.push_back("level " + level.label + " (" + direction +
                              ") skipped: " + level.skip_reason);
    } else {
      cells.push_back(format_real(level.rho));
      cells.push_back(format_real(level.p_value));
    }
    section.table.rows.push_back(std::move(cells));
  }
}

ReportBundle cmd_correlate(const RunConfig& config) {
  ReportBundle bundle;
  Inputs inputs = load_inputs(config, bundle, true);
  CoauthorGraph component = largest_component(inputs.graph);
  StochasticOperator op(component, config.mode);
  TeleportVector teleport = make_teleport(config, inputs, component, bundle);
  ScoreVector scores =
      pagerank(op, teleport, config.damping, config.tolerance, config.max_iterations);
  std::vector<double> citations = citation_values(*inputs.citations, component, bundle);

  const std::size_t n = component.node_count();
  std::vector<std::size_t> cuts = effective_cuts(config, n, bundle);

  // Mirror the obverse cut list for the reverse direction: the full-range
  // cut n becomes 1, and rows are shown narrowest slice first.
  std::vector<std::size_t> reverse_cuts;
  for (std::size_t cut : cuts) reverse_cuts.push_back(cut == n ? 1 : cut);
  std::sort(reverse_cuts.begin(), reverse_cuts.end());
  reverse_cuts.erase(std::unique(reverse_cuts.begin(), reverse_cuts.end()),
                     reverse_cuts.end());

  CorrelationReport obverse =
      stratified_correlation(scores.entries, citations, component.nodes(), BaseSeries::b,
                             cuts, LevelDirection::obverse);
  CorrelationReport reverse =
      stratified_correlation(scores.entries, citations, component.nodes(), BaseSeries::b,
                             reverse_cuts, LevelDirection::reverse);
  std::reverse(reverse.levels.begin(), reverse.levels.end());

  Section section;
  section.name = "stratified_correlation";
  section.table.headers = {"level", "direction", "size", "spearman", "p_value"};
  append_correlation_rows(section, obverse, "obverse");
  append_correlation_rows(section, reverse, "reverse");
  bundle.sections.push_back(std::move(section));
  return bundle;
}

ReportBundle cmd_fit(const RunConfig& config) {
  ReportBundle bundle;
  Inputs inputs = load_inputs(config, bundle, false);
  CoauthorGraph component = largest_component(inputs.graph);
  StochasticOperator op(component, config.mode);
  TeleportVector teleport = make_teleport(config, inputs, component, bundle);
  ScoreVector scores =
      pagerank(op, teleport, config.damping, config.tolerance, config.max_iterations);

  std::vector<std::pair<std::string, std::vector<double>>> series;
  if (inputs.citations) {
    series.emplace_back("citation", citation_values(*inputs.citations, component, bundle));
  }
  series.emplace_back("pagerank", scores.entries);

  Section fits;
  fits.name = "powerlaw";
  fits.table.headers = {"series", "exponent", "r", "bins"};
  Section points;
  points.name = "powerlaw_points";
  points.table.headers = {"series", "value", "count"};

  for (auto& [name, values] : series) {
    std::vector<double> positive;
    positive.reserve(values.size());
    for (double v : values) {
      if (v > 0.0) positive.push_back(v);
    }
    if (positive.size() < values.size()) {
      fits.notes.push_back(name + ": dropped " +
                           std::to_string(values.size() - positive.size()) +
                           " non-positive value(s) before fitting");
    }
    PowerLawFit fit = powerlaw_fit(positive, config.log_bins);
    fits.table.rows.push_back({name, format_real(fit.exponent), format_real(fit.r),
                               std::to_string(fit.bins_used)});
    for (const PowerLawPoint& point : fit.points) {
      points.table.rows.push_back({name, format_real(point.value),
                                   std::to_string(point.count)});
    }
  }
  bundle.sections.push_back(std::move(fits));
  bundle.sections.push_back(std::move(points));
  return bundle;
}

ReportBundle cmd_deltas(const RunConfig& config) {
  ReportBundle bundle;
  Inputs inputs = load_inputs(config, bundle, true);
  CoauthorGraph component = largest_component(inputs.graph);
  StochasticOperator op(component, config.mode);
  TeleportVector teleport = make_teleport(config, inputs, component, bundle);
  ScoreVector scores =
      pagerank(op, teleport, config.damping, config.tolerance, config.max_iterations);

  std::vector<std::string> join_warnings;
  RankingTable citation_table =
      citation_rank(*inputs.citations, component.nodes(), &join_warnings);
  for (std::string& warning : join_warnings) bundle.warnings.push_back(std::move(warning));
  RankingTable score_table = RankingTable::from_scores(component.nodes(), scores.entries);

  RankDeltaReport report = rank_deltas(citation_table, score_table);

  Section deltas;
  deltas.name = "rank_delta";
  deltas.table.headers = {"author", "citation_rank", "pagerank_rank", "delta"};
  for (const RankDelta& delta : report.deltas) {
    const RankingRow& cite = citation_table.rows()[*citation_table.position_of(delta.author)];
    const RankingRow& score = score_table.rows()[*score_table.position_of(delta.author)];
    deltas.table.rows.push_back({delta.author, std::to_string(cite.rank),
                                 std::to_string(score.rank), std::to_string(delta.delta)});
  }
  bundle.sections.push_back(std::move(deltas));

  Section qq;
  qq.name = "qq";
  qq.table.headers = {"empirical_quantile", "normal_quantile"};
  for (const QuantilePair& pair : report.qq) {
    qq.table.rows.push_back({format_real(pair.empirical), format_real(pair.normal)});
  }
  bundle.sections.push_back(std::move(qq));
  return bundle;
}

ReportBundle cmd_compare(const RunConfig& config) {
  ReportBundle bundle;
  Inputs inputs = load_inputs(config, bundle, true);
  CoauthorGraph component = largest_component(inputs.graph);
  StochasticOperator op(component, config.mode);

  TeleportVector uniform = uniform_teleport(component.node_count());
  TeleportVector cited =
      citation_teleport(*inputs.citations, component.nodes(), &bundle.warnings);

  std::vector<std::pair<std::string, RankingTable>> tables;
  for (double d : config.compare_dampings) {
    ScoreVector with_citations =
        pagerank(op, cited, d, config.tolerance, config.max_iterations);
    tables.emplace_back("pr_cite_" + format_real(d),
                        RankingTable::from_scores(component.nodes(), with_citations.entries));
    ScoreVector plain = pagerank(op, uniform, d, config.tolerance, config.max_iterations);
    tables.emplace_back("pr_unif_" + format_real(d),
                        RankingTable::from_scores(component.nodes(), plain.entries));
  }
  std::vector<std::pair<std::string, const RankingTable*>> ranking_refs;
  for (const auto& [name, table] : tables) ranking_refs.emplace_back(name, &table);

  const AwardList* winners = inputs.awards ? &*inputs.awards : nullptr;
  ComparisonTable joined =
      comparison_table(ranking_refs, *inputs.citations, winners, inputs.extras, 0);

  Section section;
  section.name = "comparison";
  section.table.headers = {"author"};
  for (const std::string& name : joined.ranking_names) {
    section.table.headers.push_back("rank_" + name);
  }
  section.table.headers.push_back("citations");
  section.table.headers.push_back("h_index");
  for (const std::string& name : joined.extra_names) section.table.headers.push_back(name);
  if (winners) section.table.headers.push_back("award_winner");

  const std::size_t limit = display_rows(config, joined.rows.size());
  for (std::size_t i = 0; i < limit; ++i) {
    const ComparisonRow& row = joined.rows[i];
    std::vector<std::string> cells = {row.author};
    for (std::size_t rank : row.ranks) cells.push_back(std::to_string(rank));
    cells.push_back(std::to_string(row.citations));
    cells.push_back(row.h ? std::to_string(*row.h) : "");
    for (const auto& extra : row.extras) {
      cells.push_back(extra ? std::to_string(*extra) : "");
    }
    if (winners) cells.push_back(row.winner ? "1" : "0");
    section.table.rows.push_back(std::move(cells));
  }
  if (!joined.unmatched_winners.empty()) {
    std::string note = "award winners not present in the ranked component:";
    for (const std::string& name : joined.unmatched_winners) note += " " + name;
    section.notes.push_back(std::move(note));
  }
  bundle.sections.push_back(std::move(section));

  if (winners) {
    PrefixRecall probe = min_prefix_containing(tables.front().second, *winners, 1);
    if (probe.matched_winners == 0) {
      bundle.warnings.push_back(
          "compare: no award winner appears in the ranked component; recall "
          "section omitted");
    } else {
      const std::size_t want = config.winner_count == 0
                                   ? probe.matched_winners
                                   : std::min(config.winner_count, probe.matched_winners);
      if (config.winner_count > probe.matched_winners) {
        std::ostringstream msg;
        msg << "compare: only " << probe.matched_winners
            << " award winner(s) are present; winner_count reduced from "
            << config.winner_count;
        bundle.warnings.push_back(msg.str());
      }
      Section recall;
      recall.name = "award_recall";
      recall.table.headers = {"ranking", "winners_in_component", "target_count", "prefix"};
      for (const auto& [name, table] : tables) {
        PrefixRecall result = min_prefix_containing(table, *winners, want);
        recall.table.rows.push_back(
            {name, std::to_string(result.matched_winners), std::to_string(want),
             result.prefix ? std::to_string(*result.prefix) : "unreachable"});
      }
      bundle.sections.push_back(std::move(recall));
    }
  }
  return bundle;
}

}  // namespace

ReportBundle run_command(const std::string& command, const RunConfig& config) {
  if (command == "component") return cmd_component(config);
  if (command == "rank") return cmd_rank(config);
  if (command == "sweep") return cmd_sweep(config);
  if (command == "correlate") return cmd_correlate(config);
  if (command == "fit") return cmd_fit(config);
  if (command == "deltas") return cmd_deltas(config);
  if (command == "compare") return cmd_compare(config);
  fail(Errc::usage_error, "unknown command: " + command);
}

}  // namespace corank
