#include "corank/ranker.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "corank/error.hpp"

namespace corank {

TeleportVector uniform_teleport(std::size_t node_count) {
  if (node_count == 0) fail(Errc::empty_graph, "teleport vector needs at least one node");
  return TeleportVector{std::vector<double>(node_count, 1.0 / static_cast<double>(node_count))};
}

static std::string name_sample(const std::vector<std::string>& names, std::size_t limit = 8) {
  std::ostringstream out;
  for (std::size_t i = 0; i < names.size() && i < limit; ++i) {
    if (i) out << ", ";
    out << names[i];
  }
  if (names.size() > limit) out << ", ... (" << names.size() - limit << " more)";
  return out.str();
}

TeleportVector citation_teleport(const CitationProfile& citations,
                                 const std::vector<std::string>& nodes,
                                 std::vector<std::string>* warnings) {
  if (nodes.empty()) fail(Errc::empty_graph, "teleport vector needs at least one node");

  std::vector<std::string> missing;
  std::vector<double> counts(nodes.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto it = citations.totals.find(nodes[i]);
    if (it == citations.totals.end()) {
      missing.push_back(nodes[i]);
      continue;
    }
    counts[i] = static_cast<double>(it->second);
    total += counts[i];
  }

  if (warnings) {
    if (!missing.empty()) {
      std::ostringstream msg;
      msg << "citations: " << missing.size()
          << " author(s) in the graph have no citation record, counted as 0: "
          << name_sample(missing);
      warnings->push_back(msg.str());
    }
    std::vector<std::string> unused;
    for (const auto& [author, count] : citations.totals) {
      (void)count;
      if (!std::binary_search(nodes.begin(), nodes.end(), author)) unused.push_back(author);
    }
    if (!unused.empty()) {
      std::ostringstream msg;
      msg << "citations: " << unused.size()
          << " author(s) in the citation file are not in the graph, ignored: "
          << name_sample(unused);
      warnings->push_back(msg.str());
    }
  }

  if (!(total > 0.0)) {
    fail(Errc::zero_teleport_mass,
         "citation counts over the node set are all zero; cannot form a teleport vector");
  }
  for (double& c : counts) c /= total;
  return TeleportVector{std::move(counts)};
}

DampingSchedule::DampingSchedule(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) fail(Errc::invalid_argument, "damping schedule is empty");
  for (double d : values_) {
    if (!(d > 0.0 && d < 1.0)) {
      std::ostringstream msg;
      msg << "damping value " << d << " is outside (0, 1)";
      fail(Errc::invalid_argument, msg.str());
    }
  }
  std::vector<double> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(Errc::invalid_argument, "damping schedule contains duplicate values");
  }
}

DampingSchedule DampingSchedule::standard() {
  return DampingSchedule({0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85});
}

static void check_rank_inputs(const StochasticOperator& op, const TeleportVector& teleport,
                              double damping) {
  if (!(damping >= 0.0 && damping < 1.0)) {
    std::ostringstream msg;
    msg << "damping factor must lie in [0, 1), got " << damping;
    fail(Errc::invalid_argument, msg.str());
  }
  if (teleport.entries.size() != op.size()) {
    fail(Errc::invalid_argument, "teleport vector dimension does not match the operator");
  }
}

static void normalize_mass(std::vector<double>& x) {
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (!(sum > 0.0)) fail(Errc::internal, "score vector lost all mass");
  if (sum != 1.0) {
    for (double& v : x) v /= sum;
  }
}

ScoreVector pagerank(const StochasticOperator& op, const TeleportVector& teleport,
                     double damping, double tolerance, std::size_t max_iterations) {
  check_rank_inputs(op, teleport, damping);
  if (!(tolerance > 0.0)) fail(Errc::invalid_argument, "tolerance must be positive");
  if (max_iterations == 0) fail(Errc::invalid_argument, "max_iterations must be at least 1");

  const std::size_t n = op.size();
  const std::vector<double>& v = teleport.entries;
  std::vector<double> x = v;
  std::vector<double> mx;

  double residual = 0.0;
  for (std::size_t iteration = 1; iteration <= max_iterations; ++iteration) {
    op.apply(x, mx);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = (1.0 - damping) * v[i] + damping * mx[i];
      residual += std::abs(next - x[i]);
      mx[i] = next;
    }
    x.swap(mx);
    if (residual < tolerance) {
      normalize_mass(x);
      return ScoreVector{std::move(x), damping, iteration, residual};
    }
  }

  std::ostringstream msg;
  msg << "power iteration did not reach tolerance " << tolerance << " within "
      << max_iterations << " iterations at damping " << damping
      << " (last L1 change " << residual << ")";
  throw ConvergenceError(damping, residual, msg.str());
}

// Row-major in-place LU solve with partial pivoting.
static void solve_dense(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  std::vector<std::size_t> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = i;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[row[i] * n + j]; };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(at(i, k));
      if (cand > best) {
        best = cand;
        pivot = i;
      }
    }
    if (!(best > 0.0)) fail(Errc::internal, "singular system in direct solve");
    if (pivot != k) {
      std::swap(row[pivot], row[k]);
      std::swap(b[pivot], b[k]);
    }
    const double diag = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = at(i, k) / diag;
      if (factor == 0.0) continue;
      at(i, k) = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
      b[i] -= factor * b[k];
    }
  }
  for (std::size_t ik = n; ik-- > 0;) {
    double acc = b[ik];
    for (std::size_t j = ik + 1; j < n; ++j) acc -= at(ik, j) * b[j];
    b[ik] = acc / at(ik, ik);
  }
}

ScoreVector solve_direct(const StochasticOperator& op, const TeleportVector& teleport,
                         double damping) {
  check_rank_inputs(op, teleport, damping);
  const std::size_t n = op.size();
  if (n > kDirectSolveNodeLimit) {
    std::ostringstream msg;
    msg << "direct solve is limited to " << kDirectSolveNodeLimit << " nodes, got " << n;
    fail(Errc::too_large_for_direct_solve, msg.str());
  }

  // A = I - d M, assembled column by column.
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (const StochasticOperator::ColumnEntry& e : op.column(j)) {
      a[e.row * n + j] -= damping * e.probability;
    }
  }

  std::vector<double> x = teleport.entries;
  for (double& value : x) value *= (1.0 - damping);
  solve_dense(a, x, n);
  normalize_mass(x);
  return ScoreVector{std::move(x), damping, 0, 0.0};
}

std::map<double, ScoreVector> damping_sweep(const StochasticOperator& op,
                                            const TeleportVector& teleport,
                                            const DampingSchedule& schedule,
                                            double tolerance, std::size_t max_iterations) {
  std::map<double, ScoreVector> results;
  for (double d : schedule.values()) {
    results.emplace(d, pagerank(op, teleport, d, tolerance, max_iterations));
  }
  return results;
}

}  // namespace corank
