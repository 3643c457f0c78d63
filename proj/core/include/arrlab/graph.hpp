#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace arrlab {

/// Simple undirected graph on nodes 0..size()-1 with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(std::size_t nodes = 0) : adj_(nodes) {}

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }

  /// Adds {u, v}; duplicate edges are ignored. Throws InputError on loops.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  bool is_connected() const;
  bool is_regular(std::size_t degree) const;

  /// BFS distances from `source`; unreachable nodes get size().
  std::vector<std::size_t> distances_from(std::size_t source) const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

/// Maximum shortest-path length over all node pairs (all-sources BFS).
/// Throws InputError for a disconnected graph.
std::size_t graph_diameter(const Graph& g);

/// Label-independent encoding of the isomorphism class: two graphs are
/// isomorphic iff their canonical forms are equal. Computed by colour
/// refinement with exhaustive individualization, keeping the
/// lexicographically largest adjacency string among all leaves.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Cartesian product of complete graphs K_p x K_q (skeleton of a product of simplices).
Graph complete_product(std::size_t p, std::size_t q);
Graph hypercube(std::size_t dim);

}  // namespace arrlab
