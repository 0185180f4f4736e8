#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdc {

/// Raised for out-of-range generator parameters or malformed graph input.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph. Neighbor lists are sorted and
/// duplicate-free; vertex ids are dense and 0-based.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Rejects loops and out-of-range endpoints;
  /// parallel edges collapse. `labels` must be empty or have `order` entries.
  Graph(std::size_t order, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return adjacency_.empty(); }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// 0 for the empty graph.
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Sorted (u < v) edge list, lexicographic order.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of v, or its decimal id when the graph carries no labels.
  std::string label(VertexId v) const;

  bool connected() const;
  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t size_ = 0;
};

// Generators. Numbering is deterministic: center first, then layer by layer
// (all first-ring vertices, then all second-ring vertices, ...).

Graph path(int l);
Graph cycle(int p);
Graph complete(int t);
/// Star on m vertices total: center 0 joined to leaves 1..m-1.
Graph star(int m);
/// Spider with m legs of length 2 (2m+1 vertices): center 0, mid vertices
/// 1..m, outer vertex m+i hanging off mid vertex i.
Graph double_star(int m);
/// Spider with m legs of length 3 (3m+1 vertices).
Graph triple_star(int m);

/// Uniform random connected graph: a random spanning tree plus each
/// remaining pair independently with probability `edge_prob`.
Graph random_connected(std::size_t order, double edge_prob,
                       std::uint64_t seed);

/// Exact isomorphism test by permutation search with degree refinement.
/// Intended for desk-scale graphs (order <= ~10).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace rdc
