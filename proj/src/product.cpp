#include "rdc/product.hpp"

namespace rdc {

VertexId product_id(const ProductVertex& pv, std::size_t inner_order) {
  return pv.outer * inner_order + pv.inner;
}

ProductVertex product_coords(VertexId id, std::size_t inner_order) {
  return {id / inner_order, id % inner_order};
}

Graph lex_product(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty()) {
    throw InvalidParameter("lexicographic product needs non-empty factors");
  }
  const std::size_t n2 = g2.order();
  const std::size_t n = g1.order() * n2;
  std::vector<Edge> edges;
  edges.reserve(product_size(g1, g2));

  for (VertexId j = 0; j < g1.order(); ++j) {
    // Copy of G2 inside layer j.
    for (auto [k, k2] : g2.edges()) {
      edges.emplace_back(product_id({j, k}, n2), product_id({j, k2}, n2));
    }
  }
  // Adjacent layers are completely joined.
  for (auto [j, j2] : g1.edges()) {
    for (VertexId k = 0; k < n2; ++k) {
      for (VertexId k2 = 0; k2 < n2; ++k2) {
        edges.emplace_back(product_id({j, k}, n2), product_id({j2, k2}, n2));
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (VertexId id = 0; id < n; ++id) {
    auto pv = product_coords(id, n2);
    labels.push_back("q" + std::to_string(pv.outer) + "·s" +
                     std::to_string(pv.inner));
  }
  return Graph(n, edges, std::move(labels));
}

std::size_t product_degree(const Graph& g1, const Graph& g2, VertexId j,
                           VertexId k) {
  return g1.degree(j) * g2.order() + g2.degree(k);
}

std::size_t product_size(const Graph& g1, const Graph& g2) {
  return g2.size() * g1.order() + g1.size() * g2.order() * g2.order();
}

}  // namespace rdc
