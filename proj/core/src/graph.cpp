#include "arrlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "arrlab/errors.hpp"

namespace arrlab {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& n : adj_) total += n.size();
  return total / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw InputError("graph: self-loop");
  if (u >= adj_.size() || v >= adj_.size()) throw InputError("graph: node out of range");
  auto insert = [](std::vector<std::size_t>& list, std::size_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::size_t> Graph::distances_from(std::size_t source) const {
  std::vector<std::size_t> dist(adj_.size(), adj_.size());
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : adj_[u]) {
      if (dist[w] == adj_.size()) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [&](std::size_t x) { return x == adj_.size(); });
}

bool Graph::is_regular(std::size_t degree) const {
  return std::all_of(adj_.begin(), adj_.end(), [&](const auto& n) { return n.size() == degree; });
}

std::size_t graph_diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (std::size_t x : g.distances_from(s)) {
      if (x == g.size()) throw InputError("diameter of a disconnected graph");
      best = std::max(best, x);
    }
  }
  return best;
}

namespace {

using Coloring = std::vector<std::size_t>;

// Refines until stable. New colours are ranks of (old colour, sorted multiset
// of neighbour colours), which depends only on the graph structure.
Coloring refine(const Graph& g, Coloring colors) {
  const std::size_t n = g.size();
  std::size_t classes = 0;
  {
    auto sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    classes = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      keys[v].first = colors[v];
      for (std::size_t w : g.neighbors(v)) keys[v].second.push_back(colors[w]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    auto order = keys;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    Coloring next(n);
    for (std::size_t v = 0; v < n; ++v) {
      next[v] = static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), keys[v]) - order.begin());
    }
    colors = std::move(next);
    if (order.size() == classes) return colors;
    classes = order.size();
  }
}

std::string leaf_string(const Graph& g, const Coloring& colors) {
  const std::size_t n = g.size();
  std::vector<std::size_t> node_at(n);
  for (std::size_t v = 0; v < n; ++v) node_at[colors[v]] = v;
  std::string bits;
  bits.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) bits.push_back(g.has_edge(node_at[i], node_at[j]) ? '1' : '0');
  }
  return bits;
}

void search(const Graph& g, const Coloring& colors, std::string& best) {
  const std::size_t n = g.size();
  std::vector<std::size_t> count(n, 0);
  for (std::size_t c : colors) ++count[c];
  // Target: the first colour class with more than one member.
  std::size_t target = n;
  for (std::size_t c = 0; c < n; ++c) {
    if (count[c] > 1) {
      target = c;
      break;
    }
  }
  if (target == n) {
    std::string leaf = leaf_string(g, colors);
    if (leaf > best) best = std::move(leaf);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    // Individualize v: it keeps the class's rank, the rest of the class moves after it.
    Coloring next(n);
    for (std::size_t w = 0; w < n; ++w) {
      next[w] = 2 * colors[w] + ((colors[w] == target && w != v) ? 1 : 0);
    }
    search(g, refine(g, std::move(next)), best);
  }
}

std::string to_hex(const std::string& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      nibble = (nibble << 1) | ((i + k < bits.size() && bits[i + k] == '1') ? 1 : 0);
    }
    out.push_back(digits[nibble]);
  }
  return out;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  std::string best;
  if (g.size() > 0) search(g, refine(g, Coloring(g.size(), 0)), best);
  return std::to_string(g.size()) + ":" + to_hex(best);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_product(std::size_t p, std::size_t q) {
  Graph g(p * q);
  for (std::size_t u = 0; u < p * q; ++u) {
    for (std::size_t v = u + 1; v < p * q; ++v) {
      bool same_row = u / q == v / q;
      bool same_col = u % q == v % q;
      if (same_row != same_col) g.add_edge(u, v);
    }
  }
  return g;
}

Graph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace arrlab
