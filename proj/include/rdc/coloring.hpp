#pragma once

#include <string>
#include <vector>

#include "rdc/graph.hpp"

namespace rdc {

using Color = int;

/// Total vertex coloring with positive color indices. Colors need not be
/// contiguous; palette_size() is the largest color used.
class Coloring {
 public:
  Coloring() = default;
  /// Throws InvalidParameter if any color is < 1.
  explicit Coloring(std::vector<Color> colors);

  std::size_t order() const { return colors_.size(); }
  Color operator[](VertexId v) const { return colors_.at(v); }
  const std::vector<Color>& colors() const { return colors_; }
  int palette_size() const { return palette_size_; }
  /// Number of distinct colors actually used.
  int distinct_colors() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
  int palette_size_ = 0;
};

struct Violation {
  enum class Kind { ProperEdge, NeighborhoodDeficit };

  Kind kind;
  /// Monochromatic edge (u, v) for ProperEdge; for NeighborhoodDeficit the
  /// vertex sits in `u` and `v` is unused.
  VertexId u = 0;
  VertexId v = 0;
  /// Deficit only: distinct neighbor colors seen vs min{r, d(u)}.
  std::size_t observed = 0;
  std::size_t required = 0;

  std::string describe() const;
};

struct CheckResult {
  bool ok = true;
  std::vector<Violation> violations;

  explicit operator bool() const { return ok; }
};

/// Lists every monochromatic edge. Throws InvalidParameter when the coloring
/// does not cover the graph.
CheckResult is_proper(const Graph& g, const Coloring& c);

/// |c(N(v))|.
std::size_t neighborhood_color_count(const Graph& g, const Coloring& c,
                                     VertexId v);

/// Properness plus |c(N(v))| >= min{r, d(v)} at every vertex. All violations
/// are collected; none short-circuits the rest.
CheckResult is_r_dynamic(const Graph& g, const Coloring& c, int r);

}  // namespace rdc
