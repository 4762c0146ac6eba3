#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "corank/graph.hpp"
#include "corank/profile.hpp"

namespace corank {

// Probability distribution used on teleport steps; entries are indexed by
// the graph's node order, non-negative, and sum to one.
struct TeleportVector {
  std::vector<double> entries;
};

TeleportVector uniform_teleport(std::size_t node_count);

// Teleport mass proportional to citation counts over the given node set.
// Authors missing from the profile default to zero; profile entries outside
// the node set are ignored. Both cases are reported through `warnings`.
TeleportVector citation_teleport(const CitationProfile& citations,
                                 const std::vector<std::string>& nodes,
                                 std::vector<std::string>* warnings = nullptr);

struct ScoreVector {
  std::vector<double> entries;  // indexed by the graph's node order, sums to 1
  double damping = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;  // final L1 change
};

// Ordered damping values, each strictly inside (0, 1), no duplicates.
class DampingSchedule {
 public:
  explicit DampingSchedule(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }

  // 0.15 through 0.85 in steps of 0.1.
  static DampingSchedule standard();

 private:
  std::vector<double> values_;
};

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxIterations = 1000;
inline constexpr double kDefaultDamping = 0.85;

// Power iteration for the fixed point x = (1-d) v + d M x, started at v,
// stopping when the L1 change drops below `tolerance`. The result is
// normalized to unit mass.
ScoreVector pagerank(const StochasticOperator& op, const TeleportVector& teleport,
                     double damping, double tolerance = kDefaultTolerance,
                     std::size_t max_iterations = kDefaultMaxIterations);

// Same fixed point via a dense solve of (I - d M) x = (1-d) v with partial
// pivoting. The matrix is strictly column diagonally dominant for d < 1.
// Guarded to small graphs; serves as an independent cross-check for
// pagerank().
ScoreVector solve_direct(const StochasticOperator& op, const TeleportVector& teleport,
                         double damping);

inline constexpr std::size_t kDirectSolveNodeLimit = 5000;

// One score vector per damping value, keyed by damping.
std::map<double, ScoreVector> damping_sweep(const StochasticOperator& op,
                                            const TeleportVector& teleport,
                                            const DampingSchedule& schedule,
                                            double tolerance = kDefaultTolerance,
                                            std::size_t max_iterations = kDefaultMaxIterations);

}  // namespace corank
