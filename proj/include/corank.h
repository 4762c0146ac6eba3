/* corank — coauthorship network ranking toolkit.
 *
 * C API for the corank shared library. All functions return a
 * corank_status; results are written through out parameters. Objects
 * are opaque handles that must be released with the matching _destroy
 * function. On failure, corank_last_error() returns a thread-local
 * message describing what went wrong.
 */

#ifndef CORANK_H
#define CORANK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CORANK_API __declspec(dllexport)
#else
#define CORANK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum corank_status {
  CORANK_OK = 0,
  CORANK_ERR_INVALID_ARGUMENT = 1,
  CORANK_ERR_EMPTY_GRAPH = 2,
  CORANK_ERR_INVALID_WEIGHT = 3,
  CORANK_ERR_DANGLING_NODE = 4,
  CORANK_ERR_ZERO_TELEPORT_MASS = 5,
  CORANK_ERR_NON_CONVERGENCE = 6,
  CORANK_ERR_TOO_LARGE_FOR_DIRECT_SOLVE = 7,
  CORANK_ERR_TOO_FEW_OBSERVATIONS = 8,
  CORANK_ERR_UNDEFINED_CORRELATION = 9,
  CORANK_ERR_INSUFFICIENT_BINS = 10,
  CORANK_ERR_AUTHOR_SET_MISMATCH = 11,
  CORANK_ERR_INVALID_K = 12,
  CORANK_ERR_IO = 13,
  CORANK_ERR_NO_VALID_RECORDS = 14,
  CORANK_ERR_PARSE = 15,
  CORANK_ERR_INVALID_COUNT = 16,
  CORANK_ERR_DUPLICATE_AUTHOR = 17,
  CORANK_ERR_EMPTY_AWARD_LIST = 18,
  CORANK_ERR_USAGE = 19,
  CORANK_ERR_INTERNAL = 20
} corank_status;

typedef enum corank_norm_mode {
  CORANK_NORM_WEIGHTED = 0,
  CORANK_NORM_UNWEIGHTED = 1
} corank_norm_mode;

typedef enum corank_teleport_kind {
  CORANK_TELEPORT_UNIFORM = 0,
  CORANK_TELEPORT_CITATIONS = 1
} corank_teleport_kind;

typedef struct corank_graph corank_graph;
typedef struct corank_citations corank_citations;
typedef struct corank_awards corank_awards;
typedef struct corank_scores corank_scores;
typedef struct corank_ranking corank_ranking;
typedef struct corank_config corank_config;
typedef struct corank_report corank_report;

/* One raw edge-list record: an unordered coauthor pair with a positive
 * multiplicity. Strings must be NUL-terminated UTF-8. */
typedef struct corank_edge_record {
  const char* author_a;
  const char* author_b;
  double weight;
} corank_edge_record;

CORANK_API const char* corank_version(void);

/* Thread-local message for the most recent failing call on this thread. */
CORANK_API const char* corank_last_error(void);

/* Stable identifier for a status code, e.g. "empty_graph". */
CORANK_API const char* corank_status_name(corank_status status);

/* Process exit class for a status: 0 success, 1 input error,
 * 2 numerical failure, 3 usage error. */
CORANK_API int corank_status_exit_class(corank_status status);

/* ---- graph ------------------------------------------------------------- */

/* Build an undirected weighted simple graph. Duplicate unordered pairs are
 * merged by summing weights; self-loop records keep the node but drop the
 * edge. Node order is lexicographic over author names. */
CORANK_API corank_status corank_graph_build(const corank_edge_record* records,
                                            size_t record_count,
                                            corank_graph** out_graph);

/* Load a graph from a TSV edge list: authorA<TAB>authorB[<TAB>weight].
 * Malformed lines are skipped; the load fails only if no line is valid. */
CORANK_API corank_status corank_graph_load(const char* path,
                                           corank_graph** out_graph);

CORANK_API void corank_graph_destroy(corank_graph* graph);

CORANK_API size_t corank_graph_node_count(const corank_graph* graph);
CORANK_API size_t corank_graph_edge_count(const corank_graph* graph);
CORANK_API const char* corank_graph_node_name(const corank_graph* graph,
                                              size_t node_index);
CORANK_API corank_status corank_graph_weighted_degree(const corank_graph* graph,
                                                      size_t node_index,
                                                      double* out_degree);

/* Connected components, ordered by node count descending, ties broken by the
 * lexicographically smallest member. */
CORANK_API corank_status corank_graph_component_count(const corank_graph* graph,
                                                      size_t* out_count);
CORANK_API corank_status corank_graph_component(const corank_graph* graph,
                                                size_t component_index,
                                                corank_graph** out_component);
CORANK_API corank_status corank_graph_largest_component(const corank_graph* graph,
                                                        corank_graph** out_component);

/* ---- citations and award lists ----------------------------------------- */

/* Load per-author citation counts from a TSV file:
 * author<TAB>total[<TAB>c1,c2,...] where the optional third column lists
 * per-paper citation counts. */
CORANK_API corank_status corank_citations_load(const char* path,
                                               corank_citations** out_citations);
CORANK_API void corank_citations_destroy(corank_citations* citations);
CORANK_API corank_status corank_citations_total(const corank_citations* citations,
                                                const char* author,
                                                int64_t* out_total);

/* Load an award-winner list, one author per line, de-duplicated. */
CORANK_API corank_status corank_awards_load(const char* path,
                                            corank_awards** out_awards);
CORANK_API void corank_awards_destroy(corank_awards* awards);
CORANK_API size_t corank_awards_size(const corank_awards* awards);

/* ---- ranking ------------------------------------------------------------ */

/* Power-iteration PageRank over the graph's column-stochastic operator.
 * The teleport distribution is uniform, or proportional to citation counts
 * when kind is CORANK_TELEPORT_CITATIONS (citations must then be non-NULL).
 * The graph must be a single connected component (or a single node). */
CORANK_API corank_status corank_pagerank(const corank_graph* graph,
                                         corank_norm_mode mode,
                                         corank_teleport_kind teleport,
                                         const corank_citations* citations,
                                         double damping,
                                         double tolerance,
                                         size_t max_iterations,
                                         corank_scores** out_scores);

/* Closed-form solution of the same fixed point via a dense linear solve.
 * Intended as a cross-check for corank_pagerank; guarded to small graphs. */
CORANK_API corank_status corank_solve_direct(const corank_graph* graph,
                                             corank_norm_mode mode,
                                             corank_teleport_kind teleport,
                                             const corank_citations* citations,
                                             double damping,
                                             corank_scores** out_scores);

CORANK_API void corank_scores_destroy(corank_scores* scores);
CORANK_API size_t corank_scores_count(const corank_scores* scores);
CORANK_API const char* corank_scores_author(const corank_scores* scores,
                                            size_t index);
CORANK_API corank_status corank_scores_value(const corank_scores* scores,
                                             size_t index,
                                             double* out_value);
CORANK_API double corank_scores_damping(const corank_scores* scores);
CORANK_API size_t corank_scores_iterations(const corank_scores* scores);
CORANK_API double corank_scores_residual(const corank_scores* scores);

/* Ranking tables are sorted by score descending, ties broken by author name;
 * tied scores share a competition rank. */
CORANK_API corank_status corank_ranking_from_scores(const corank_scores* scores,
                                                    corank_ranking** out_ranking);
CORANK_API corank_status corank_citation_ranking(const corank_citations* citations,
                                                 const corank_graph* graph,
                                                 corank_ranking** out_ranking);
CORANK_API void corank_ranking_destroy(corank_ranking* ranking);
CORANK_API size_t corank_ranking_size(const corank_ranking* ranking);
CORANK_API corank_status corank_ranking_row(const corank_ranking* ranking,
                                            size_t row_index,
                                            const char** out_author,
                                            double* out_score,
                                            size_t* out_rank);

/* ---- statistics and metrics --------------------------------------------- */

/* Spearman rank correlation with average ranks for ties; two-sided p-value
 * from the t approximation with n-2 degrees of freedom. */
CORANK_API corank_status corank_spearman(const double* x,
                                         const double* y,
                                         size_t n,
                                         double* out_rho,
                                         double* out_p_value);

/* Log-log least-squares fit of frequency(value) ~ value^(-exponent).
 * Integer-valued inputs are binned exactly; continuous inputs fall into
 * log_bins logarithmically spaced bins (pass 0 for the default of 20). */
CORANK_API corank_status corank_powerlaw_fit(const double* values,
                                             size_t n,
                                             size_t log_bins,
                                             double* out_exponent,
                                             double* out_r,
                                             size_t* out_bins_used);

/* Largest h such that at least h entries are >= h. */
CORANK_API corank_status corank_h_index(const int64_t* per_paper_citations,
                                        size_t n,
                                        int64_t* out_h);

/* Smallest ranking prefix containing at least want_count award winners.
 * Winners absent from the ranking are ignored; *out_reachable is 0 when
 * fewer than want_count winners appear anywhere in the table. */
CORANK_API corank_status corank_min_prefix(const corank_ranking* ranking,
                                           const corank_awards* awards,
                                           size_t want_count,
                                           size_t* out_prefix,
                                           int* out_reachable);

/* ---- pipeline ------------------------------------------------------------ */

/* A config is an ordered key/value store; later assignments win, so callers
 * apply config files first and explicit overrides afterwards. Keys mirror
 * the CLI flags: edges, citations, awards, format, mode, teleport, damping,
 * schedule, tolerance, max_iter, levels, top, compare_dampings, winner_count,
 * all_components, log_bins, extra.<name>. */
CORANK_API corank_status corank_config_create(corank_config** out_config);
CORANK_API void corank_config_destroy(corank_config* config);
CORANK_API corank_status corank_config_set(corank_config* config,
                                           const char* key,
                                           const char* value);
CORANK_API corank_status corank_config_load_file(corank_config* config,
                                                 const char* path);

/* Run one pipeline command: component, rank, sweep, correlate, fit, deltas,
 * or compare. The report text is the fully serialized result in the
 * configured output format; warnings are kept separate so they never mix
 * into the data stream. */
CORANK_API corank_status corank_run(const corank_config* config,
                                    const char* command,
                                    corank_report** out_report);
CORANK_API void corank_report_destroy(corank_report* report);
CORANK_API const char* corank_report_text(const corank_report* report);
CORANK_API size_t corank_report_warning_count(const corank_report* report);
CORANK_API const char* corank_report_warning(const corank_report* report,
                                             size_t index);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CORANK_H */
