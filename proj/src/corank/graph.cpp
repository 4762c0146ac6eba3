#include "corank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

#include "corank/error.hpp"
#include "corank/text.hpp"

namespace corank {

std::optional<std::size_t> CoauthorGraph::index_of(std::string_view name) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::span<const Neighbor> CoauthorGraph::neighbors(std::size_t i) const {
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::size_t CoauthorGraph::degree(std::size_t i) const {
  return offsets_[i + 1] - offsets_[i];
}

double CoauthorGraph::weight(std::size_t i, std::size_t j) const {
  for (const Neighbor& nb : neighbors(i)) {
    if (nb.node == j) return nb.weight;
  }
  return 0.0;
}

CoauthorGraph CoauthorGraph::assemble(
    std::vector<std::string> nodes,
    const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges) {
  CoauthorGraph g;
  g.nodes_ = std::move(nodes);
  const std::size_t n = g.nodes_.size();

  std::vector<std::size_t> counts(n, 0);
  for (const auto& [i, j, w] : edges) {
    (void)w;
    ++counts[i];
    ++counts[j];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + counts[i];
  g.adjacency_.resize(g.offsets_[n]);

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [i, j, w] : edges) {
    g.adjacency_[cursor[i]++] = Neighbor{j, w};
    g.adjacency_[cursor[j]++] = Neighbor{i, w};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }

  g.weighted_degree_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0.0;
    for (const Neighbor& nb : g.neighbors(i)) total += nb.weight;
    g.weighted_degree_[i] = total;
  }
  return g;
}

CoauthorGraph CoauthorGraph::build(const std::vector<EdgeRecord>& records) {
  if (records.empty()) fail(Errc::empty_graph, "edge list is empty");

  std::vector<std::string> names;
  names.reserve(records.size() * 2);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const EdgeRecord& rec = records[r];
    std::string a = trim(rec.author_a);
    std::string b = trim(rec.author_b);
    if (a.empty() || b.empty()) {
      std::ostringstream msg;
      msg << "edge record " << r + 1 << ": empty author name";
      fail(Errc::invalid_argument, msg.str());
    }
    if (!(rec.weight > 0.0) || !std::isfinite(rec.weight)) {
      std::ostringstream msg;
      msg << "edge record " << r + 1 << " (" << a << ", " << b
          << "): weight must be a positive finite number, got " << rec.weight;
      fail(Errc::invalid_weight, msg.str());
    }
    names.push_back(std::move(a));
    names.push_back(std::move(b));
  }

  std::vector<std::string> nodes = names;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto index_of = [&](const std::string& name) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), name) - nodes.begin());
  };

  // Merge duplicate unordered pairs; the diagonal stays zero.
  std::map<std::pair<std::size_t, std::size_t>, double> merged;
  for (std::size_t r = 0; r < records.size(); ++r) {
    std::size_t i = index_of(names[2 * r]);
    std::size_t j = index_of(names[2 * r + 1]);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    merged[{i, j}] += records[r].weight;
  }

  std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
  edges.reserve(merged.size());
  for (const auto& [key, w] : merged) edges.emplace_back(key.first, key.second, w);
  return assemble(std::move(nodes), edges);
}

std::vector<CoauthorGraph> components(const CoauthorGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> label(n, n);
  std::size_t component_count = 0;

  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] != n) continue;
    const std::size_t id = component_count++;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    label[start] = id;
    while (!frontier.empty()) {
      std::size_t u = frontier.front();
      frontier.pop();
      for (const Neighbor& nb : g.neighbors(u)) {
        if (label[nb.node] == n) {
          label[nb.node] = id;
          frontier.push(nb.node);
        }
      }
    }
  }

  std::vector<std::vector<std::string>> member_names(component_count);
  std::vector<std::vector<std::size_t>> member_index(component_count);
  std::vector<std::size_t> local(n);
  for (std::size_t i = 0; i < n; ++i) {
    local[i] = member_names[label[i]].size();
    member_names[label[i]].push_back(g.node(i));
    member_index[label[i]].push_back(i);
  }

  std::vector<CoauthorGraph> out(component_count);
  for (std::size_t c = 0; c < component_count; ++c) {
    std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
    for (std::size_t u : member_index[c]) {
      for (const Neighbor& nb : g.neighbors(u)) {
        if (u < nb.node) edges.emplace_back(local[u], local[nb.node], nb.weight);
      }
    }
    // Node names arrive in global sorted order, so each slice is sorted.
    out[c] = CoauthorGraph::assemble(std::move(member_names[c]), edges);
  }

  std::sort(out.begin(), out.end(), [](const CoauthorGraph& a, const CoauthorGraph& b) {
    if (a.node_count() != b.node_count()) return a.node_count() > b.node_count();
    return a.node(0) < b.node(0);
  });
  return out;
}

CoauthorGraph largest_component(const CoauthorGraph& g) {
  if (g.node_count() == 0) fail(Errc::empty_graph, "graph has no nodes");
  return components(g).front();
}

StochasticOperator::StochasticOperator(const CoauthorGraph& g, NormMode mode)
    : mode_(mode) {
  const std::size_t n = g.node_count();
  if (n == 0) fail(Errc::empty_graph, "cannot build an operator over an empty graph");

  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g.degree(i) == 0) {
        fail(Errc::dangling_node,
             "node '" + g.node(i) +
                 "' has no neighbors; extract connected components first");
      }
    }
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) offsets_[j + 1] = offsets_[j] + g.degree(j);
  entries_.resize(offsets_[n]);

  for (std::size_t j = 0; j < n; ++j) {
    const double denom = mode_ == NormMode::weighted
                             ? g.weighted_degree(j)
                             : static_cast<double>(g.degree(j));
    std::size_t at = offsets_[j];
    for (const Neighbor& nb : g.neighbors(j)) {
      const double mass = mode_ == NormMode::weighted ? nb.weight : 1.0;
      entries_[at++] = ColumnEntry{nb.node, mass / denom};
    }
  }
}

std::span<const StochasticOperator::ColumnEntry> StochasticOperator::column(
    std::size_t j) const {
  return {entries_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
}

void StochasticOperator::apply(std::span<const double> x, std::vector<double>& y) const {
  const std::size_t n = size();
  if (x.size() != n) fail(Errc::invalid_argument, "operator/vector dimension mismatch");
  y.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    for (const ColumnEntry& e : column(j)) y[e.row] += e.probability * xj;
  }
}

std::vector<double> StochasticOperator::apply(std::span<const double> x) const {
  std::vector<double> y;
  apply(x, y);
  return y;
}

}  // namespace corank
