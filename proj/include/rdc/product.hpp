#pragma once

#include "rdc/graph.hpp"

namespace rdc {

/// Position of a product vertex: `outer` indexes the first factor (the
/// layer), `inner` the second. Flat id is outer * |V(G2)| + inner, so each
/// layer is a contiguous id block.
struct ProductVertex {
  VertexId outer = 0;
  VertexId inner = 0;

  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Lexicographic product G1[G2]: (j,k) ~ (j',k') iff j ~ j' in G1, or j == j'
/// and k ~ k' in G2. Labels read "q{j}·s{k}".
Graph lex_product(const Graph& g1, const Graph& g2);

VertexId product_id(const ProductVertex& pv, std::size_t inner_order);
ProductVertex product_coords(VertexId id, std::size_t inner_order);

/// Closed-form degree of (j,k) in G1[G2]: d1(j) * |V(G2)| + d2(k).
std::size_t product_degree(const Graph& g1, const Graph& g2, VertexId j,
                           VertexId k);

/// Closed-form edge count of G1[G2]: |E(G2)||V(G1)| + |E(G1)||V(G2)|^2.
std::size_t product_size(const Graph& g1, const Graph& g2);

}  // namespace rdc
