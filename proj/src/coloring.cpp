#include "rdc/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rdc {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 1) {
      throw InvalidParameter("vertex " + std::to_string(v) +
                             " has non-positive color " +
                             std::to_string(colors_[v]));
    }
    palette_size_ = std::max(palette_size_, colors_[v]);
  }
}

int Coloring::distinct_colors() const {
  return static_cast<int>(std::set<Color>(colors_.begin(), colors_.end()).size());
}

std::string Violation::describe() const {
  std::ostringstream os;
  if (kind == Kind::ProperEdge) {
    os << "monochromatic edge " << u << "-" << v;
  } else {
    os << "vertex " << u << " sees " << observed << " colors, needs "
       << required;
  }
  return os.str();
}

namespace {

void require_total(const Graph& g, const Coloring& c) {
  if (c.order() != g.order()) {
    throw InvalidParameter("coloring covers " + std::to_string(c.order()) +
                           " vertices, graph has " +
                           std::to_string(g.order()));
  }
}

}  // namespace

CheckResult is_proper(const Graph& g, const Coloring& c) {
  require_total(g, c);
  CheckResult out;
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) {
      out.violations.push_back({Violation::Kind::ProperEdge, u, v});
    }
  }
  out.ok = out.violations.empty();
  return out;
}

std::size_t neighborhood_color_count(const Graph& g, const Coloring& c,
                                     VertexId v) {
  require_total(g, c);
  std::set<Color> seen;
  for (VertexId w : g.neighbors(v)) seen.insert(c[w]);
  return seen.size();
}

CheckResult is_r_dynamic(const Graph& g, const Coloring& c, int r) {
  if (r < 1) throw InvalidParameter("r must be >= 1");
  CheckResult out = is_proper(g, c);
  for (VertexId v = 0; v < g.order(); ++v) {
    const std::size_t required =
        std::min(static_cast<std::size_t>(r), g.degree(v));
    const std::size_t observed = neighborhood_color_count(g, c, v);
    if (observed < required) {
      out.violations.push_back(
          {Violation::Kind::NeighborhoodDeficit, v, 0, observed, required});
    }
  }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace rdc
