#include "rdc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace rdc {

Graph::Graph(std::size_t order, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : adjacency_(order), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != order) {
    throw InvalidParameter("label count " + std::to_string(labels_.size()) +
                           " does not match order " + std::to_string(order));
  }
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw InvalidParameter("edge endpoint out of range");
    }
    if (u == v) {
      throw InvalidParameter("self-loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    size_ += list.size();
  }
  size_ /= 2;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for order " +
                            std::to_string(order()));
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::size_t Graph::min_degree() const {
  if (empty()) return 0;
  std::size_t best = adjacency_[0].size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(VertexId v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool Graph::connected() const {
  if (empty()) return true;
  std::vector<bool> seen(order(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(order());
  for (const auto& list : adjacency_) out.push_back(list.size());
  return out;
}

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

void require(bool ok, const char* what, int value) {
  if (!ok) {
    throw InvalidParameter(std::string(what) + " (got " +
                           std::to_string(value) + ")");
  }
}

// Spider with `legs` legs of length `depth`. Ring d (1-based) occupies ids
// 1 + (d-1)*legs .. d*legs; leg i continues from ring d-1's i-th vertex.
Graph spider(int legs, int depth) {
  const auto m = static_cast<std::size_t>(legs);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.emplace_back(0, 1 + i);
  for (int d = 2; d <= depth; ++d) {
    const std::size_t prev = 1 + (d - 2) * m;
    const std::size_t cur = 1 + (d - 1) * m;
    for (std::size_t i = 0; i < m; ++i) edges.emplace_back(prev + i, cur + i);
  }
  const std::size_t n = 1 + m * depth;
  return Graph(n, edges, numbered("s", n));
}

}  // namespace

Graph path(int l) {
  require(l >= 1, "path needs l >= 1", l);
  std::vector<Edge> edges;
  for (int j = 0; j + 1 < l; ++j) edges.emplace_back(j, j + 1);
  return Graph(l, edges, numbered("q", l));
}

Graph cycle(int p) {
  require(p >= 3, "cycle needs p >= 3", p);
  std::vector<Edge> edges;
  for (int j = 0; j < p; ++j) edges.emplace_back(j, (j + 1) % p);
  return Graph(p, edges, numbered("c", p));
}

Graph complete(int t) {
  require(t >= 1, "complete graph needs t >= 1", t);
  std::vector<Edge> edges;
  for (int u = 0; u < t; ++u) {
    for (int v = u + 1; v < t; ++v) edges.emplace_back(u, v);
  }
  return Graph(t, edges, numbered("p", t));
}

Graph star(int m) {
  require(m >= 2, "star needs m >= 2", m);
  return spider(m - 1, 1);
}

Graph double_star(int m) {
  require(m >= 2, "double star needs m >= 2", m);
  return spider(m, 2);
}

Graph triple_star(int m) {
  require(m >= 2, "triple star needs m >= 2", m);
  return spider(m, 3);
}

Graph random_connected(std::size_t order, double edge_prob,
                       std::uint64_t seed) {
  if (order == 0) throw InvalidParameter("random graph needs order >= 1");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<std::vector<bool>> has(order, std::vector<bool>(order, false));
  std::vector<Edge> edges;
  auto add = [&](VertexId u, VertexId v) {
    if (u == v || has[u][v]) return;
    has[u][v] = has[v][u] = true;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  };
  // Random recursive tree over a shuffled vertex order.
  for (std::size_t i = 1; i < order; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    add(perm[i], perm[pick(rng)]);
  }
  std::bernoulli_distribution coin(edge_prob);
  for (VertexId u = 0; u < order; ++u) {
    for (VertexId v = u + 1; v < order; ++v) {
      if (!has[u][v] && coin(rng)) add(u, v);
    }
  }
  return Graph(order, edges);
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<VertexId> map;  // a -> b
  std::vector<bool> used;

  bool extend(VertexId u) {
    if (u == a.order()) return true;
    for (VertexId v = 0; v < b.order(); ++v) {
      if (used[v] || a.degree(u) != b.degree(v)) continue;
      bool ok = true;
      for (VertexId w = 0; w < u && ok; ++w) {
        ok = a.adjacent(u, w) == b.adjacent(v, map[w]);
      }
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (extend(u + 1)) return true;
      used[v] = false;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degree_sequence();
  auto db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  IsoSearch search{a, b, std::vector<VertexId>(a.order()),
                   std::vector<bool>(b.order(), false)};
  return search.extend(0);
}

}  // namespace rdc
