#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corank {

// One raw record from an edge list: an unordered author pair with a
// positive coauthorship weight.
struct EdgeRecord {
  std::string author_a;
  std::string author_b;
  double weight = 1.0;
};

struct Neighbor {
  std::size_t node = 0;  // index into the owning graph's node order
  double weight = 0.0;

  bool operator==(const Neighbor&) const = default;
};

// Undirected weighted simple graph over author names.
//
// Nodes are kept in lexicographic order so that identical inputs always
// produce identical indexing. The adjacency is symmetric, carries no
// self-loops, and is immutable after construction.
class CoauthorGraph {
 public:
  CoauthorGraph() = default;

  // Merges duplicate unordered pairs by summing weights and drops
  // self-loop edges (their endpoint still joins the node set).
  static CoauthorGraph build(const std::vector<EdgeRecord>& records);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::string& node(std::size_t i) const { return nodes_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::span<const Neighbor> neighbors(std::size_t i) const;
  std::size_t degree(std::size_t i) const;
  double weighted_degree(std::size_t i) const { return weighted_degree_[i]; }
  double weight(std::size_t i, std::size_t j) const;  // 0 when no edge

  bool operator==(const CoauthorGraph&) const = default;

 private:
  friend std::vector<CoauthorGraph> components(const CoauthorGraph&);

  // nodes must be sorted; edges are (i, j, weight) with i < j, unique pairs.
  static CoauthorGraph assemble(
      std::vector<std::string> nodes,
      const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges);

  std::vector<std::string> nodes_;      // sorted lexicographically
  std::vector<std::size_t> offsets_;    // CSR offsets, size node_count()+1
  std::vector<Neighbor> adjacency_;     // per-node lists sorted by index
  std::vector<double> weighted_degree_;
};

// Maximal connected subgraphs, ordered by node count descending with ties
// broken by the lexicographically smallest member.
std::vector<CoauthorGraph> components(const CoauthorGraph& g);

CoauthorGraph largest_component(const CoauthorGraph& g);

enum class NormMode { weighted, unweighted };

// Column-stochastic transition operator of a graph: column j spreads unit
// mass over j's neighbors, proportionally to edge weight (weighted mode) or
// equally (unweighted mode). Self-contained copy; safe to outlive the graph.
class StochasticOperator {
 public:
  struct ColumnEntry {
    std::size_t row = 0;
    double probability = 0.0;
  };

  // Requires every node to have at least one neighbor unless the graph has
  // a single node, in which case the operator is empty.
  StochasticOperator(const CoauthorGraph& g, NormMode mode);

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  NormMode mode() const noexcept { return mode_; }

  std::span<const ColumnEntry> column(std::size_t j) const;

  // y = M x
  void apply(std::span<const double> x, std::vector<double>& y) const;
  std::vector<double> apply(std::span<const double> x) const;

 private:
  NormMode mode_ = NormMode::weighted;
  std::vector<std::size_t> offsets_;
  std::vector<ColumnEntry> entries_;
};

}  // namespace corank
