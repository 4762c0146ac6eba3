#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corank/ranker.hpp"

namespace corank {

struct RankingRow {
  std::string author;
  double score = 0.0;
  std::size_t rank = 0;  // competition rank, shared by tied scores
};

// Total order over authors: sorted by score descending, ties broken by
// author name for display. Competition ranks are shown; fractional (average)
// ranks over tie groups are kept alongside for correlation work.
class RankingTable {
 public:
  RankingTable() = default;

  static RankingTable from_scores(const std::vector<std::string>& authors,
                                  std::span<const double> scores);

  const std::vector<RankingRow>& rows() const noexcept { return rows_; }
  const std::vector<double>& fractional_ranks() const noexcept { return fractional_; }

  // Position in display order (0-based), not the rank value.
  std::optional<std::size_t> position_of(std::string_view author) const;

 private:
  std::vector<RankingRow> rows_;
  std::vector<double> fractional_;
  std::map<std::string, std::size_t, std::less<>> positions_;
};

// Average (fractional) ranks of `values`, ascending, 1-based.
std::vector<double> fractional_ranks(std::span<const double> values);

struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0;
};

// Pearson correlation of fractional ranks; two-sided p-value from the
// t statistic with n-2 degrees of freedom.
SpearmanResult spearman(std::span<const double> x, std::span<const double> y);

// Inverse standard normal CDF.
double normal_quantile(double p);

// Two-sided tail probability of a Student-t statistic.
double student_t_two_sided_p(double t, double degrees_of_freedom);

enum class LevelDirection { obverse, reverse };
enum class BaseSeries { a, b };

struct CorrelationLevel {
  std::string label;          // "1~k" (obverse) or "n~k" (reverse)
  std::size_t lower = 0;      // 1-based positions in the base ranking
  std::size_t upper = 0;
  LevelDirection direction = LevelDirection::obverse;
  std::size_t size = 0;
  bool skipped = false;       // slice too small or correlation undefined
  std::string skip_reason;
  double rho = 0.0;
  double p_value = 1.0;
};

struct CorrelationReport {
  std::vector<CorrelationLevel> levels;
};

// Orders authors by the base series (descending, ties by author name) and
// computes the Spearman correlation of the two series within each ranking
// level. Obverse level k covers positions 1..k, reverse level k covers
// positions k..n. Cut points must be ascending and at most n.
CorrelationReport stratified_correlation(std::span<const double> scores_a,
                                         std::span<const double> scores_b,
                                         const std::vector<std::string>& authors,
                                         BaseSeries base,
                                         std::span<const std::size_t> cut_points,
                                         LevelDirection direction);

struct PowerLawPoint {
  double value = 0.0;
  std::size_t count = 0;
};

struct PowerLawFit {
  double exponent = 0.0;  // frequency(v) ~ v^(-exponent)
  double r = 0.0;         // correlation of the log-log regression points
  std::size_t bins_used = 0;
  std::vector<PowerLawPoint> points;  // non-empty bins, ascending by value
};

inline constexpr std::size_t kDefaultLogBins = 20;

// Histogram + ordinary least squares on (log value, log frequency).
// Integer-valued inputs are binned exactly on their distinct values;
// continuous inputs use logarithmically spaced bins.
PowerLawFit powerlaw_fit(std::span<const double> values,
                         std::size_t log_bins = kDefaultLogBins);

struct RankDelta {
  std::string author;
  long long delta = 0;  // rank in `a` minus rank in `b`
};

struct QuantilePair {
  double empirical = 0.0;  // sorted rank delta
  double normal = 0.0;     // standard normal quantile at the same plotting position
};

struct RankDeltaReport {
  std::vector<RankDelta> deltas;  // sorted by delta, then author
  std::vector<QuantilePair> qq;
};

RankDeltaReport rank_deltas(const RankingTable& a, const RankingTable& b);

struct DampingCorrelation {
  std::vector<double> dampings;
  std::vector<std::vector<double>> rho;  // symmetric, unit diagonal
};

DampingCorrelation cross_damping_matrix(const std::map<double, ScoreVector>& sweep);

}  // namespace corank
