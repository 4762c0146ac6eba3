// C bindings for the corank core. Handles wrap immutable C++ objects;
// every entry point catches exceptions and converts them to status codes,
// leaving a thread-local message for corank_last_error().

#include "corank.h"

#include <cstring>
#include <string>
#include <vector>

#include "corank/error.hpp"
#include "corank/graph.hpp"
#include "corank/ingest.hpp"
#include "corank/metrics.hpp"
#include "corank/pipeline.hpp"
#include "corank/ranker.hpp"
#include "corank/report.hpp"
#include "corank/stats.hpp"

using corank::Errc;

static_assert(static_cast<int>(Errc::ok) == CORANK_OK);
static_assert(static_cast<int>(Errc::invalid_argument) == CORANK_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(Errc::empty_graph) == CORANK_ERR_EMPTY_GRAPH);
static_assert(static_cast<int>(Errc::invalid_weight) == CORANK_ERR_INVALID_WEIGHT);
static_assert(static_cast<int>(Errc::dangling_node) == CORANK_ERR_DANGLING_NODE);
static_assert(static_cast<int>(Errc::zero_teleport_mass) == CORANK_ERR_ZERO_TELEPORT_MASS);
static_assert(static_cast<int>(Errc::non_convergence) == CORANK_ERR_NON_CONVERGENCE);
static_assert(static_cast<int>(Errc::too_large_for_direct_solve) ==
              CORANK_ERR_TOO_LARGE_FOR_DIRECT_SOLVE);
static_assert(static_cast<int>(Errc::too_few_observations) == CORANK_ERR_TOO_FEW_OBSERVATIONS);
static_assert(static_cast<int>(Errc::undefined_correlation) == CORANK_ERR_UNDEFINED_CORRELATION);
static_assert(static_cast<int>(Errc::insufficient_bins) == CORANK_ERR_INSUFFICIENT_BINS);
static_assert(static_cast<int>(Errc::author_set_mismatch) == CORANK_ERR_AUTHOR_SET_MISMATCH);
static_assert(static_cast<int>(Errc::invalid_k) == CORANK_ERR_INVALID_K);
static_assert(static_cast<int>(Errc::io_error) == CORANK_ERR_IO);
static_assert(static_cast<int>(Errc::no_valid_records) == CORANK_ERR_NO_VALID_RECORDS);
static_assert(static_cast<int>(Errc::parse_error) == CORANK_ERR_PARSE);
static_assert(static_cast<int>(Errc::invalid_count) == CORANK_ERR_INVALID_COUNT);
static_assert(static_cast<int>(Errc::duplicate_author) == CORANK_ERR_DUPLICATE_AUTHOR);
static_assert(static_cast<int>(Errc::empty_award_list) == CORANK_ERR_EMPTY_AWARD_LIST);
static_assert(static_cast<int>(Errc::usage_error) == CORANK_ERR_USAGE);
static_assert(static_cast<int>(Errc::internal) == CORANK_ERR_INTERNAL);

struct corank_graph {
  corank::CoauthorGraph graph;
};

struct corank_citations {
  corank::CitationProfile profile;
};

struct corank_awards {
  corank::AwardList list;
};

struct corank_scores {
  std::vector<std::string> authors;
  corank::ScoreVector scores;
};

struct corank_ranking {
  corank::RankingTable table;
};

struct corank_config {
  corank::ConfigMap map;
};

struct corank_report {
  std::string text;
  std::vector<std::string> warnings;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

corank_status to_status(Errc code) { return static_cast<corank_status>(code); }

}  // namespace

#define CORANK_TRY try {
#define CORANK_CATCH                                        \
  }                                                         \
  catch (const corank::Error& e) {                          \
    set_error(e.what());                                    \
    return to_status(e.code());                             \
  }                                                         \
  catch (const std::exception& e) {                         \
    set_error(e.what());                                    \
    return CORANK_ERR_INTERNAL;                             \
  }                                                         \
  catch (...) {                                             \
    set_error("unknown failure");                           \
    return CORANK_ERR_INTERNAL;                             \
  }

#define CORANK_REQUIRE(cond, message)      \
  do {                                     \
    if (!(cond)) {                         \
      set_error(message);                  \
      return CORANK_ERR_INVALID_ARGUMENT;  \
    }                                      \
  } while (0)

extern "C" {

const char* corank_version(void) { return "1.0.0"; }

const char* corank_last_error(void) { return g_last_error.c_str(); }

const char* corank_status_name(corank_status status) {
  return corank::errc_name(static_cast<Errc>(status));
}

int corank_status_exit_class(corank_status status) {
  return corank::exit_class(static_cast<Errc>(status));
}

/* ---- graph ------------------------------------------------------------- */

corank_status corank_graph_build(const corank_edge_record* records, size_t record_count,
                                 corank_graph** out_graph) {
  CORANK_REQUIRE(out_graph != nullptr, "out_graph is null");
  CORANK_REQUIRE(records != nullptr || record_count == 0, "records is null");
  CORANK_TRY
    std::vector<corank::EdgeRecord> input;
    input.reserve(record_count);
    for (size_t i = 0; i < record_count; ++i) {
      CORANK_REQUIRE(records[i].author_a != nullptr && records[i].author_b != nullptr,
                     "edge record has a null author name");
      input.push_back(corank::EdgeRecord{records[i].author_a, records[i].author_b,
                                         records[i].weight});
    }
    *out_graph = new corank_graph{corank::CoauthorGraph::build(input)};
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_graph_load(const char* path, corank_graph** out_graph) {
  CORANK_REQUIRE(path != nullptr, "path is null");
  CORANK_REQUIRE(out_graph != nullptr, "out_graph is null");
  CORANK_TRY
    corank::ParsedEdges parsed = corank::parse_edge_list(path);
    *out_graph = new corank_graph{corank::CoauthorGraph::build(parsed.records)};
    return CORANK_OK;
  CORANK_CATCH
}

void corank_graph_destroy(corank_graph* graph) { delete graph; }

size_t corank_graph_node_count(const corank_graph* graph) {
  return graph ? graph->graph.node_count() : 0;
}

size_t corank_graph_edge_count(const corank_graph* graph) {
  return graph ? graph->graph.edge_count() : 0;
}

const char* corank_graph_node_name(const corank_graph* graph, size_t node_index) {
  if (!graph || node_index >= graph->graph.node_count()) return nullptr;
  return graph->graph.node(node_index).c_str();
}

corank_status corank_graph_weighted_degree(const corank_graph* graph, size_t node_index,
                                           double* out_degree) {
  CORANK_REQUIRE(graph != nullptr, "graph is null");
  CORANK_REQUIRE(out_degree != nullptr, "out_degree is null");
  CORANK_REQUIRE(node_index < graph->graph.node_count(), "node index out of range");
  *out_degree = graph->graph.weighted_degree(node_index);
  return CORANK_OK;
}

corank_status corank_graph_component_count(const corank_graph* graph, size_t* out_count) {
  CORANK_REQUIRE(graph != nullptr, "graph is null");
  CORANK_REQUIRE(out_count != nullptr, "out_count is null");
  CORANK_TRY
    *out_count = corank::components(graph->graph).size();
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_graph_component(const corank_graph* graph, size_t component_index,
                                     corank_graph** out_component) {
  CORANK_REQUIRE(graph != nullptr, "graph is null");
  CORANK_REQUIRE(out_component != nullptr, "out_component is null");
  CORANK_TRY
    std::vector<corank::CoauthorGraph> parts = corank::components(graph->graph);
    CORANK_REQUIRE(component_index < parts.size(), "component index out of range");
    *out_component = new corank_graph{std::move(parts[component_index])};
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_graph_largest_component(const corank_graph* graph,
                                             corank_graph** out_component) {
  CORANK_REQUIRE(graph != nullptr, "graph is null");
  CORANK_REQUIRE(out_component != nullptr, "out_component is null");
  CORANK_TRY
    *out_component = new corank_graph{corank::largest_component(graph->graph)};
    return CORANK_OK;
  CORANK_CATCH
}

/* ---- citations and awards ------------------------------------------------ */

corank_status corank_citations_load(const char* path, corank_citations** out_citations) {
  CORANK_REQUIRE(path != nullptr, "path is null");
  CORANK_REQUIRE(out_citations != nullptr, "out_citations is null");
  CORANK_TRY
    *out_citations = new corank_citations{corank::parse_citations(path)};
    return CORANK_OK;
  CORANK_CATCH
}

void corank_citations_destroy(corank_citations* citations) { delete citations; }

corank_status corank_citations_total(const corank_citations* citations, const char* author,
                                     int64_t* out_total) {
  CORANK_REQUIRE(citations != nullptr, "citations is null");
  CORANK_REQUIRE(author != nullptr, "author is null");
  CORANK_REQUIRE(out_total != nullptr, "out_total is null");
  auto it = citations->profile.totals.find(author);
  *out_total = it == citations->profile.totals.end() ? 0 : it->second;
  return CORANK_OK;
}

corank_status corank_awards_load(const char* path, corank_awards** out_awards) {
  CORANK_REQUIRE(path != nullptr, "path is null");
  CORANK_REQUIRE(out_awards != nullptr, "out_awards is null");
  CORANK_TRY
    *out_awards = new corank_awards{corank::parse_awards(path)};
    return CORANK_OK;
  CORANK_CATCH
}

void corank_awards_destroy(corank_awards* awards) { delete awards; }

size_t corank_awards_size(const corank_awards* awards) {
  return awards ? awards->list.winners.size() : 0;
}

/* ---- ranking ------------------------------------------------------------- */

namespace {

corank::TeleportVector build_teleport(const corank_graph* graph, corank_teleport_kind kind,
                                      const corank_citations* citations) {
  if (kind == CORANK_TELEPORT_UNIFORM) {
    return corank::uniform_teleport(graph->graph.node_count());
  }
  if (citations == nullptr) {
    corank::fail(Errc::invalid_argument,
                 "citation teleport requested but citations handle is null");
  }
  return corank::citation_teleport(citations->profile, graph->graph.nodes());
}

corank::NormMode to_mode(corank_norm_mode mode) {
  if (mode == CORANK_NORM_WEIGHTED) return corank::NormMode::weighted;
  if (mode == CORANK_NORM_UNWEIGHTED) return corank::NormMode::unweighted;
  corank::fail(Errc::invalid_argument, "invalid normalization mode");
}

}  // namespace

corank_status corank_pagerank(const corank_graph* graph, corank_norm_mode mode,
                              corank_teleport_kind teleport,
                              const corank_citations* citations, double damping,
                              double tolerance, size_t max_iterations,
                              corank_scores** out_scores) {
  CORANK_REQUIRE(graph != nullptr, "graph is null");
  CORANK_REQUIRE(out_scores != nullptr, "out_scores is null");
  CORANK_TRY
    corank::StochasticOperator op(graph->graph, to_mode(mode));
    corank::TeleportVector v = build_teleport(graph, teleport, citations);
    corank::ScoreVector scores =
        corank::pagerank(op, v, damping, tolerance, max_iterations);
    *out_scores = new corank_scores{graph->graph.nodes(), std::move(scores)};
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_solve_direct(const corank_graph* graph, corank_norm_mode mode,
                                  corank_teleport_kind teleport,
                                  const corank_citations* citations, double damping,
                                  corank_scores** out_scores) {
  CORANK_REQUIRE(graph != nullptr, "graph is null");
  CORANK_REQUIRE(out_scores != nullptr, "out_scores is null");
  CORANK_TRY
    corank::StochasticOperator op(graph->graph, to_mode(mode));
    corank::TeleportVector v = build_teleport(graph, teleport, citations);
    corank::ScoreVector scores = corank::solve_direct(op, v, damping);
    *out_scores = new corank_scores{graph->graph.nodes(), std::move(scores)};
    return CORANK_OK;
  CORANK_CATCH
}

void corank_scores_destroy(corank_scores* scores) { delete scores; }

size_t corank_scores_count(const corank_scores* scores) {
  return scores ? scores->scores.entries.size() : 0;
}

const char* corank_scores_author(const corank_scores* scores, size_t index) {
  if (!scores || index >= scores->authors.size()) return nullptr;
  return scores->authors[index].c_str();
}

corank_status corank_scores_value(const corank_scores* scores, size_t index,
                                  double* out_value) {
  CORANK_REQUIRE(scores != nullptr, "scores is null");
  CORANK_REQUIRE(out_value != nullptr, "out_value is null");
  CORANK_REQUIRE(index < scores->scores.entries.size(), "score index out of range");
  *out_value = scores->scores.entries[index];
  return CORANK_OK;
}

double corank_scores_damping(const corank_scores* scores) {
  return scores ? scores->scores.damping : 0.0;
}

size_t corank_scores_iterations(const corank_scores* scores) {
  return scores ? scores->scores.iterations : 0;
}

double corank_scores_residual(const corank_scores* scores) {
  return scores ? scores->scores.residual : 0.0;
}

corank_status corank_ranking_from_scores(const corank_scores* scores,
                                         corank_ranking** out_ranking) {
  CORANK_REQUIRE(scores != nullptr, "scores is null");
  CORANK_REQUIRE(out_ranking != nullptr, "out_ranking is null");
  CORANK_TRY
    *out_ranking = new corank_ranking{
        corank::RankingTable::from_scores(scores->authors, scores->scores.entries)};
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_citation_ranking(const corank_citations* citations,
                                      const corank_graph* graph,
                                      corank_ranking** out_ranking) {
  CORANK_REQUIRE(citations != nullptr, "citations is null");
  CORANK_REQUIRE(graph != nullptr, "graph is null");
  CORANK_REQUIRE(out_ranking != nullptr, "out_ranking is null");
  CORANK_TRY
    *out_ranking = new corank_ranking{
        corank::citation_rank(citations->profile, graph->graph.nodes())};
    return CORANK_OK;
  CORANK_CATCH
}

void corank_ranking_destroy(corank_ranking* ranking) { delete ranking; }

size_t corank_ranking_size(const corank_ranking* ranking) {
  return ranking ? ranking->table.rows().size() : 0;
}

corank_status corank_ranking_row(const corank_ranking* ranking, size_t row_index,
                                 const char** out_author, double* out_score,
                                 size_t* out_rank) {
  CORANK_REQUIRE(ranking != nullptr, "ranking is null");
  CORANK_REQUIRE(row_index < ranking->table.rows().size(), "row index out of range");
  const corank::RankingRow& row = ranking->table.rows()[row_index];
  if (out_author) *out_author = row.author.c_str();
  if (out_score) *out_score = row.score;
  if (out_rank) *out_rank = row.rank;
  return CORANK_OK;
}

/* ---- statistics and metrics ------------------------------------------------ */

corank_status corank_spearman(const double* x, const double* y, size_t n, double* out_rho,
                              double* out_p_value) {
  CORANK_REQUIRE(x != nullptr && y != nullptr, "input arrays are null");
  CORANK_REQUIRE(out_rho != nullptr, "out_rho is null");
  CORANK_TRY
    const corank::SpearmanResult result =
        corank::spearman(std::span(x, n), std::span(y, n));
    *out_rho = result.rho;
    if (out_p_value) *out_p_value = result.p_value;
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_powerlaw_fit(const double* values, size_t n, size_t log_bins,
                                  double* out_exponent, double* out_r,
                                  size_t* out_bins_used) {
  CORANK_REQUIRE(values != nullptr, "values is null");
  CORANK_REQUIRE(out_exponent != nullptr, "out_exponent is null");
  CORANK_TRY
    const corank::PowerLawFit fit = corank::powerlaw_fit(
        std::span(values, n), log_bins == 0 ? corank::kDefaultLogBins : log_bins);
    *out_exponent = fit.exponent;
    if (out_r) *out_r = fit.r;
    if (out_bins_used) *out_bins_used = fit.bins_used;
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_h_index(const int64_t* per_paper_citations, size_t n, int64_t* out_h) {
  CORANK_REQUIRE(per_paper_citations != nullptr || n == 0, "per_paper_citations is null");
  CORANK_REQUIRE(out_h != nullptr, "out_h is null");
  CORANK_TRY
    *out_h = corank::h_index(std::span(per_paper_citations, n));
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_min_prefix(const corank_ranking* ranking, const corank_awards* awards,
                                size_t want_count, size_t* out_prefix, int* out_reachable) {
  CORANK_REQUIRE(ranking != nullptr, "ranking is null");
  CORANK_REQUIRE(awards != nullptr, "awards is null");
  CORANK_REQUIRE(out_prefix != nullptr, "out_prefix is null");
  CORANK_REQUIRE(out_reachable != nullptr, "out_reachable is null");
  CORANK_TRY
    const corank::PrefixRecall result =
        corank::min_prefix_containing(ranking->table, awards->list, want_count);
    *out_reachable = result.prefix.has_value() ? 1 : 0;
    *out_prefix = result.prefix.value_or(0);
    return CORANK_OK;
  CORANK_CATCH
}

/* ---- pipeline ---------------------------------------------------------------- */

corank_status corank_config_create(corank_config** out_config) {
  CORANK_REQUIRE(out_config != nullptr, "out_config is null");
  *out_config = new corank_config{};
  return CORANK_OK;
}

void corank_config_destroy(corank_config* config) { delete config; }

corank_status corank_config_set(corank_config* config, const char* key, const char* value) {
  CORANK_REQUIRE(config != nullptr, "config is null");
  CORANK_REQUIRE(key != nullptr, "key is null");
  CORANK_REQUIRE(value != nullptr, "value is null");
  CORANK_TRY
    config->map.set(key, value);
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_config_load_file(corank_config* config, const char* path) {
  CORANK_REQUIRE(config != nullptr, "config is null");
  CORANK_REQUIRE(path != nullptr, "path is null");
  CORANK_TRY
    config->map.load_file(path);
    return CORANK_OK;
  CORANK_CATCH
}

corank_status corank_run(const corank_config* config, const char* command,
                         corank_report** out_report) {
  CORANK_REQUIRE(config != nullptr, "config is null");
  CORANK_REQUIRE(command != nullptr, "command is null");
  CORANK_REQUIRE(out_report != nullptr, "out_report is null");
  CORANK_TRY
    const corank::RunConfig resolved = config->map.resolve();
    corank::ReportBundle bundle = corank::run_command(command, resolved);
    auto* report = new corank_report{};
    report->text = corank::render(bundle, resolved.format);
    report->warnings = std::move(bundle.warnings);
    *out_report = report;
    return CORANK_OK;
  CORANK_CATCH
}

void corank_report_destroy(corank_report* report) { delete report; }

const char* corank_report_text(const corank_report* report) {
  return report ? report->text.c_str() : "";
}

size_t corank_report_warning_count(const corank_report* report) {
  return report ? report->warnings.size() : 0;
}

const char* corank_report_warning(const corank_report* report, size_t index) {
  if (!report || index >= report->warnings.size()) return nullptr;
  return report->warnings[index].c_str();
}

} /* extern "C" */
