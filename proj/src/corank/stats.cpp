#include "corank/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "corank/error.hpp"

namespace corank {

RankingTable RankingTable::from_scores(const std::vector<std::string>& authors,
                                       std::span<const double> scores) {
  if (authors.size() != scores.size()) {
    fail(Errc::invalid_argument, "author list and score vector differ in length");
  }
  if (authors.empty()) fail(Errc::invalid_argument, "cannot rank an empty author set");

  RankingTable table;
  const std::size_t n = authors.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (scores[i] != scores[j]) return scores[i] > scores[j];
    return authors[i] < authors[j];
  });

  table.rows_.resize(n);
  table.fractional_.resize(n);
  std::size_t group_start = 0;
  while (group_start < n) {
    std::size_t group_end = group_start + 1;
    while (group_end < n && scores[order[group_end]] == scores[order[group_start]]) {
      ++group_end;
    }
    // Positions are 1-based; tied scores share the competition rank of the
    // first member and the average of their positional ranks.
    const double average =
        static_cast<double>(group_start + 1 + group_end) / 2.0;
    for (std::size_t pos = group_start; pos < group_end; ++pos) {
      const std::size_t src = order[pos];
      table.rows_[pos] = RankingRow{authors[src], scores[src], group_start + 1};
      table.fractional_[pos] = average;
    }
    group_start = group_end;
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (!table.positions_.emplace(table.rows_[pos].author, pos).second) {
      fail(Errc::duplicate_author,
           "duplicate author in ranking input: " + table.rows_[pos].author);
    }
  }
  return table;
}

std::optional<std::size_t> RankingTable::position_of(std::string_view author) const {
  auto it = positions_.find(author);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> fractional_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t group_start = 0;
  while (group_start < n) {
    std::size_t group_end = group_start + 1;
    while (group_end < n && values[order[group_end]] == values[order[group_start]]) {
      ++group_end;
    }
    const double average = static_cast<double>(group_start + 1 + group_end) / 2.0;
    for (std::size_t pos = group_start; pos < group_end; ++pos) ranks[order[pos]] = average;
    group_start = group_end;
  }
  return ranks;
}

// ---- special functions ----------------------------------------------------

// Regularized incomplete beta via the Lentz continued fraction.
static double ibeta_cf(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

static double ibeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * ibeta_cf(a, b, x) / a;
  }
  return 1.0 - front * ibeta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double degrees_of_freedom) {
  if (degrees_of_freedom <= 0.0) {
    fail(Errc::invalid_argument, "degrees of freedom must be positive");
  }
  if (std::isinf(t)) return 0.0;
  const double nu = degrees_of_freedom;
  // 2 * P(T > |t|) collapses to a single incomplete beta evaluation.
  return ibeta(nu / 2.0, 0.5, nu / (nu + t * t));
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    fail(Errc::invalid_argument, "normal quantile requires p in (0, 1)");
  }
  // Acklam's rational approximation with one Halley refinement step.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  static const double sqrt_two = std::sqrt(2.0);
  static const double sqrt_two_pi = std::sqrt(2.0 * std::acos(-1.0));
  const double e = 0.5 * std::erfc(-x / sqrt_two) - p;
  const double u = e * sqrt_two_pi * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

// ---- spearman ---------------------------------------------------------------

static double pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    fail(Errc::undefined_correlation,
         "correlation undefined: an input has zero variance");
  }
  return sxy / std::sqrt(sxx * syy);
}

SpearmanResult spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    fail(Errc::invalid_argument, "spearman inputs differ in length");
  }
  const std::size_t n = x.size();
  if (n < 3) {
    std::ostringstream msg;
    msg << "spearman needs at least 3 observations, got " << n;
    fail(Errc::too_few_observations, msg.str());
  }
  const std::vector<double> rx = fractional_ranks(x);
  const std::vector<double> ry = fractional_ranks(y);
  double rho = pearson(rx, ry);
  rho = std::clamp(rho, -1.0, 1.0);

  double p = 0.0;
  if (std::abs(rho) < 1.0) {
    const double nu = static_cast<double>(n - 2);
    const double t = rho * std::sqrt(nu / (1.0 - rho * rho));
    p = student_t_two_sided_p(t, nu);
  }
  return SpearmanResult{rho, p};
}

// ---- stratified correlation -------------------------------------------------

CorrelationReport stratified_correlation(std::span<const double> scores_a,
                                         std::span<const double> scores_b,
                                         const std::vector<std::string>& authors,
                                         BaseSeries base,
                                         std::span<const std::size_t> cut_points,
                                         LevelDirection direction) {
  const std::size_t n = authors.size();
  if (scores_a.size() != n || scores_b.size() != n) {
    fail(Errc::invalid_argument, "score vectors and author list differ in length");
  }
  if (n == 0) fail(Errc::invalid_argument, "stratified correlation over an empty set");
  if (cut_points.empty()) fail(Errc::invalid_argument, "no ranking levels given");
  for (std::size_t i = 0; i < cut_points.size(); ++i) {
    if (cut_points[i] < 1 || cut_points[i] > n) {
      std::ostringstream msg;
      msg << "cut point " << cut_points[i] << " is outside [1, " << n << "]";
      fail(Errc::invalid_argument, msg.str());
    }
    if (i > 0 && cut_points[i] <= cut_points[i - 1]) {
      fail(Errc::invalid_argument, "cut points must be strictly ascending");
    }
  }

  std::span<const double> base_scores = base == BaseSeries::a ? scores_a : scores_b;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (base_scores[i] != base_scores[j]) return base_scores[i] > base_scores[j];
    return authors[i] < authors[j];
  });

  CorrelationReport report;
  for (std::size_t cut : cut_points) {
    CorrelationLevel level;
    level.direction = direction;
    if (direction == LevelDirection::obverse) {
      level.lower = 1;
      level.upper = cut;
      level.label = "1~" + std::to_string(cut);
    } else {
      level.lower = cut;
      level.upper = n;
      level.label = std::to_string(n) + "~" + std::to_string(cut);
    }
    level.size = level.upper - level.lower + 1;

    if (level.size < 3) {
      level.skipped = true;
      level.skip_reason = "fewer than 3 authors";
    } else {
      std::vector<double> slice_a;
      std::vector<double> slice_b;
      slice_a.reserve(level.size);
      slice_b.reserve(level.size);
      for (std::size_t pos = level.lower - 1; pos < level.upper; ++pos) {
        slice_a.push_back(scores_a[order[pos]]);
        slice_b.push_back(scores_b[order[pos]]);
      }
      try {
        const SpearmanResult r = spearman(slice_a, slice_b);
        level.rho = r.rho;
        level.p_value = r.p_value;
      } catch (const Error& e) {
        if (e.code() != Errc::undefined_correlation) throw;
        level.skipped = true;
        level.skip_reason = "zero variance within the slice";
      }
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

// ---- power-law fit ----------------------------------------------------------

static PowerLawFit fit_points(std::vector<PowerLawPoint> points) {
  if (points.size() < 3) {
    std::ostringstream msg;
    msg << "power-law fit needs at least 3 non-empty bins, got " << points.size();
    fail(Errc::insufficient_bins, msg.str());
  }
  const std::size_t m = points.size();
  std::vector<double> lx(m);
  std::vector<double> ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    lx[i] = std::log(points[i].value);
    ly[i] = std::log(static_cast<double>(points[i].count));
  }
  double mean_x = std::accumulate(lx.begin(), lx.end(), 0.0) / static_cast<double>(m);
  double mean_y = std::accumulate(ly.begin(), ly.end(), 0.0) / static_cast<double>(m);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (lx[i] - mean_x) * (ly[i] - mean_y);
    sxx += (lx[i] - mean_x) * (lx[i] - mean_x);
    syy += (ly[i] - mean_y) * (ly[i] - mean_y);
  }
  PowerLawFit fit;
  fit.bins_used = m;
  fit.exponent = -(sxy / sxx);
  fit.r = syy > 0.0 ? std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0) : 0.0;
  fit.points = std::move(points);
  return fit;
}

PowerLawFit powerlaw_fit(std::span<const double> values, std::size_t log_bins) {
  if (values.empty()) fail(Errc::invalid_argument, "power-law fit over an empty sample");
  if (log_bins < 3) fail(Errc::invalid_argument, "need at least 3 logarithmic bins");
  bool integral = true;
  double lo = values[0];
  double hi = values[0];
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      fail(Errc::invalid_argument, "power-law fit requires positive finite values");
    }
    integral = integral && v == std::floor(v);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  std::vector<PowerLawPoint> points;
  if (integral) {
    std::map<double, std::size_t> histogram;
    for (double v : values) ++histogram[v];
    points.reserve(histogram.size());
    for (const auto& [value, count] : histogram) points.push_back({value, count});
  } else {
    if (lo == hi) fail(Errc::insufficient_bins, "all values identical: a single bin");
    const double span = std::log(hi / lo);
    std::vector<std::size_t> counts(log_bins, 0);
    for (double v : values) {
      auto bin = static_cast<std::size_t>(
          std::log(v / lo) / span * static_cast<double>(log_bins));
      if (bin >= log_bins) bin = log_bins - 1;
      ++counts[bin];
    }
    for (std::size_t bin = 0; bin < log_bins; ++bin) {
      if (counts[bin] == 0) continue;
      const double left = lo * std::exp(span * static_cast<double>(bin) /
                                        static_cast<double>(log_bins));
      const double right = lo * std::exp(span * static_cast<double>(bin + 1) /
                                         static_cast<double>(log_bins));
      points.push_back({std::sqrt(left * right), counts[bin]});
    }
  }
  return fit_points(std::move(points));
}

// ---- rank deltas -------------------------------------------------------------

static void require_same_authors(const RankingTable& a, const RankingTable& b) {
  std::set<std::string> only_a;
  std::set<std::string> only_b;
  for (const RankingRow& row : a.rows()) {
    if (!b.position_of(row.author)) only_a.insert(row.author);
  }
  for (const RankingRow& row : b.rows()) {
    if (!a.position_of(row.author)) only_b.insert(row.author);
  }
  if (only_a.empty() && only_b.empty()) return;

  std::ostringstream msg;
  msg << "rankings cover different author sets;";
  auto list = [&msg](const char* tag, const std::set<std::string>& names) {
    if (names.empty()) return;
    msg << ' ' << tag << ':';
    std::size_t shown = 0;
    for (const std::string& name : names) {
      msg << ' ' << name;
      if (++shown == 8 && names.size() > 8) {
        msg << " ... (" << names.size() - shown << " more)";
        break;
      }
    }
  };
  list("only in first", only_a);
  list("only in second", only_b);
  fail(Errc::author_set_mismatch, msg.str());
}

RankDeltaReport rank_deltas(const RankingTable& a, const RankingTable& b) {
  require_same_authors(a, b);

  RankDeltaReport report;
  report.deltas.reserve(a.rows().size());
  for (const RankingRow& row : a.rows()) {
    const std::size_t pos_b = *b.position_of(row.author);
    const long long delta = static_cast<long long>(row.rank) -
                            static_cast<long long>(b.rows()[pos_b].rank);
    report.deltas.push_back(RankDelta{row.author, delta});
  }
  std::sort(report.deltas.begin(), report.deltas.end(),
            [](const RankDelta& lhs, const RankDelta& rhs) {
              if (lhs.delta != rhs.delta) return lhs.delta < rhs.delta;
              return lhs.author < rhs.author;
            });

  const std::size_t n = report.deltas.size();
  report.qq.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    report.qq.push_back(QuantilePair{static_cast<double>(report.deltas[i].delta),
                                     normal_quantile(p)});
  }
  return report;
}

// ---- cross-damping matrix -----------------------------------------------------

DampingCorrelation cross_damping_matrix(const std::map<double, ScoreVector>& sweep) {
  if (sweep.size() < 2) {
    fail(Errc::invalid_argument, "cross-damping matrix needs at least two damping values");
  }
  DampingCorrelation out;
  out.dampings.reserve(sweep.size());
  std::vector<const ScoreVector*> vectors;
  for (const auto& [d, scores] : sweep) {
    out.dampings.push_back(d);
    vectors.push_back(&scores);
  }
  const std::size_t dim = vectors.front()->entries.size();
  for (const ScoreVector* s : vectors) {
    if (s->entries.size() != dim) {
      fail(Errc::author_set_mismatch, "sweep score vectors differ in length");
    }
  }

  const std::size_t k = vectors.size();
  out.rho.assign(k, std::vector<double>(k, 1.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double rho = spearman(vectors[i]->entries, vectors[j]->entries).rho;
      out.rho[i][j] = rho;
      out.rho[j][i] = rho;
    }
  }
  return out;
}

}  // namespace corank
