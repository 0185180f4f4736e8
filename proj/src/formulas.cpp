#include "rdc/formulas.hpp"

#include <array>

#include "rdc/product.hpp"

namespace rdc {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::PathStar, "path-star"},
    {Family::PathDoubleStar, "path-double-star"},
    {Family::PathTripleStar, "path-triple-star"},
    {Family::CompletePath, "complete-path"},
    {Family::Cycle, "cycle"},
    {Family::Complete, "complete"},
}};

// Shape of the star-like second factor of a path family: a spider with
// `legs` legs of length `depth`.
struct LayerShape {
  int order;
  int legs;
  int depth;

  // Distance of inner vertex k from the center.
  int ring(int k) const { return k == 0 ? 0 : 1 + (k - 1) / legs; }
};

LayerShape layer_shape(Family f, int m) {
  switch (f) {
    case Family::PathStar: return {m, m - 1, 1};
    case Family::PathDoubleStar: return {2 * m + 1, m, 2};
    case Family::PathTripleStar: return {3 * m + 1, m, 3};
    default: throw std::logic_error("not a path family");
  }
}

std::string tag(Family f, std::string_view c) {
  return std::string(family_name(f)) + ":" + std::string(c);
}

Prediction exact(Family f, std::string_view c, int value) {
  Prediction p;
  p.kind = Prediction::Kind::Exact;
  p.value = value;
  p.case_id = tag(f, c);
  return p;
}

Prediction parametric(Family f, std::string_view c, int base, int hypothesis,
                      std::string formula) {
  Prediction p;
  p.kind = Prediction::Kind::Parametric;
  p.value = base;
  p.hypothesis = hypothesis;
  p.hypothesis_formula = std::move(formula);
  p.case_id = tag(f, c);
  return p;
}

Prediction uncovered(Family f) {
  Prediction p;
  p.case_id = tag(f, "uncovered");
  return p;
}

// Star family with m = 2: each layer is a single edge.
Prediction predict_small_star(int r) {
  const Family f = Family::PathStar;
  if (r <= 3) return exact(f, "m2-small-r", 4);
  if (r == 4) return exact(f, "m2-r4", 5);
  if (r == 5) return exact(f, "m2-r5", 6);
  return uncovered(f);
}

Prediction predict_path_family(Family f, const FamilyParams& p, int r) {
  if (p.l < 2) return uncovered(f);
  if (f == Family::PathStar && p.m == 2) return predict_small_star(r);
  if (p.m < 3) return uncovered(f);

  const auto claim = *degree_claims(f, p);
  const int delta_min = claim.min_degree;
  const int delta_max = claim.max_degree;
  const int s = layer_shape(f, p.m).order;

  if (r <= 3) return exact(f, "case1", 4);
  if (r <= delta_min - 1) {
    return parametric(f, "case2", r, 2 * (r - 1), "2(r-1)");
  }
  if (p.l == 2) {
    if (r <= delta_max) return exact(f, "case3", 2 * s);
    return uncovered(f);
  }
  if (r == delta_min) return exact(f, "case4", 2 * s);
  if (r <= delta_max - p.m + 1) {
    return parametric(f, "case5", 2 * s, 2 * s + (r - delta_min),
                      "base+(r-min_degree)");
  }
  if (r <= delta_max) {
    auto out = exact(f, "case6", 3 * s);
    out.notes.push_back("top-r range applied for l >= 3");
    return out;
  }
  return uncovered(f);
}

Prediction predict_complete_path(const FamilyParams& p, int r) {
  const Family f = Family::CompletePath;
  const int m = p.m;
  const int n = p.n;
  if (m < 3) return uncovered(f);
  if (n == 2) return exact(f, "n2", 2 * m);
  if (n < 3) return uncovered(f);

  const int delta_min = (m - 1) * n + 1;
  Prediction out;
  if (r <= 2 * m - 1) {
    out = exact(f, "case1", 2 * m);
  } else if (r <= delta_min) {
    const int offset = 2 + (r - 2 * m) / (m - 1);
    out = parametric(f, "case2", r, r + offset,
                     "r+2+floor((r-2m)/(m-1))");
  } else {
    out = exact(f, "case3", m * n);
  }
  out.lower_bound = complete_path_lower_bound(m, n, r);
  return out;
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto [family, known] : kFamilyNames) {
    if (known == name) return family;
  }
  throw InvalidParameter("unknown family '" + std::string(name) + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (auto [family, name] : kFamilyNames) out.push_back(family);
    return out;
  }();
  return families;
}

std::string_view kind_name(Prediction::Kind k) {
  switch (k) {
    case Prediction::Kind::Exact: return "exact";
    case Prediction::Kind::LowerBoundOnly: return "lower-bound";
    case Prediction::Kind::Parametric: return "parametric";
    case Prediction::Kind::Uncovered: return "uncovered";
  }
  return "uncovered";
}

Graph build_family(Family f, const FamilyParams& p) {
  switch (f) {
    case Family::PathStar: return lex_product(path(p.l), star(p.m));
    case Family::PathDoubleStar:
      return lex_product(path(p.l), double_star(p.m));
    case Family::PathTripleStar:
      return lex_product(path(p.l), triple_star(p.m));
    case Family::CompletePath: return lex_product(complete(p.m), path(p.n));
    case Family::Cycle: return cycle(p.n);
    case Family::Complete: return complete(p.n);
  }
  throw std::logic_error("unhandled family");
}

std::optional<int> complete_path_lower_bound(int m, int n, int r) {
  if (m < 3 || n < 3 || r < 1) return std::nullopt;
  const int delta_min = (m - 1) * n + 1;
  if (r <= 2 * m - 1) return 2 * m;
  // "r + i" with i >= 2.
  if (r <= delta_min) return r + 2;
  return m * n;
}

Prediction predict(Family f, const FamilyParams& p, int r) {
  if (r < 1) throw InvalidParameter("r must be >= 1");
  switch (f) {
    case Family::PathStar:
    case Family::PathDoubleStar:
    case Family::PathTripleStar:
      return predict_path_family(f, p, r);
    case Family::CompletePath: return predict_complete_path(p, r);
    case Family::Cycle: {
      // The cycle values are stated for r >= 2; Δ = 2 makes every r >= 2
      // equivalent.
      if (p.n < 3 || r < 2) return uncovered(f);
      if (p.n == 5) return exact(f, "p5", 5);
      if (p.n % 3 == 0) return exact(f, "p-mod-3", 3);
      return exact(f, "p-other", 4);
    }
    case Family::Complete:
      if (p.n < 1) return uncovered(f);
      return exact(f, "all-r", p.n);
  }
  return uncovered(f);
}

std::optional<DegreeClaim> degree_claims(Family f, const FamilyParams& p) {
  const int m = p.m;
  switch (f) {
    case Family::PathStar:
      if (p.l < 2 || m < 2) return std::nullopt;
      if (m == 2) return DegreeClaim{3, 5};
      return DegreeClaim{m + 1, p.l == 2 ? 2 * m - 1 : 3 * m - 1};
    case Family::PathDoubleStar:
      if (p.l < 2 || m < 3) return std::nullopt;
      return DegreeClaim{2 * m + 2, p.l == 2 ? 3 * m + 1 : 5 * m + 2};
    case Family::PathTripleStar:
      if (p.l < 2 || m < 3) return std::nullopt;
      return DegreeClaim{3 * m + 2, p.l == 2 ? 4 * m + 1 : 7 * m + 2};
    case Family::CompletePath:
      if (m < 3) return std::nullopt;
      if (p.n == 2) return DegreeClaim{2 * m - 1, 2 * m - 1};
      if (p.n < 3) return std::nullopt;
      return DegreeClaim{(m - 1) * p.n + 1, (m - 1) * p.n + 2};
    case Family::Cycle:
    case Family::Complete:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

Construction not_constructive(std::string case_id) {
  Construction c;
  c.case_id = std::move(case_id);
  return c;
}

Construction built(std::string case_id, std::vector<Color> colors) {
  Construction c;
  c.status = Construction::Status::Constructed;
  c.case_id = std::move(case_id);
  c.coloring = Coloring(std::move(colors));
  return c;
}

// Colors layer `j` of a path family from a per-layer color list: inner
// vertex k takes list[k mod |list|].
void paint_layer(std::vector<Color>& out, int j, int layer_order,
                 const std::vector<Color>& list) {
  for (int k = 0; k < layer_order; ++k) {
    out[static_cast<std::size_t>(j * layer_order + k)] =
        list[static_cast<std::size_t>(k) % list.size()];
  }
}

std::vector<Color> color_range(int first, int last) {
  std::vector<Color> out;
  for (int c = first; c <= last; ++c) out.push_back(c);
  return out;
}

Construction construct_path_family(Family f, const FamilyParams& p, int r,
                                   PaletteVariant variant) {
  const Prediction pred = predict(f, p, r);
  const auto& id = pred.case_id;
  const bool general = p.m >= 3;
  if (!pred.covered() || !general) return not_constructive(id);

  const LayerShape shape = layer_shape(f, p.m);
  const int s = shape.order;
  std::vector<Color> colors(static_cast<std::size_t>(p.l * s), 0);

  if (id == tag(f, "case1")) {
    // Proper 2-coloring of each layer by ring parity; even layers use
    // {1,2}, odd layers {3,4}.
    for (int j = 0; j < p.l; ++j) {
      const Color base = j % 2 == 0 ? 1 : 3;
      for (int k = 0; k < s; ++k) {
        colors[static_cast<std::size_t>(j * s + k)] =
            base + shape.ring(k) % 2;
      }
    }
    return built(id, std::move(colors));
  }
  if (id == tag(f, "case3") || id == tag(f, "case4")) {
    // Even layers take 1..s, odd layers s+1..2s, one color per vertex.
    for (int j = 0; j < p.l; ++j) {
      paint_layer(colors, j, s,
                  j % 2 == 0 ? color_range(1, s) : color_range(s + 1, 2 * s));
    }
    return built(id, std::move(colors));
  }
  if (id == tag(f, "case6")) {
    std::array<std::vector<Color>, 3> blocks;
    const bool repaired = variant == PaletteVariant::Repaired;
    if (repaired) {
      blocks = {color_range(1, s), color_range(s + 1, 2 * s),
                color_range(2 * s + 1, 3 * s)};
    } else if (f == Family::PathStar) {
      blocks = {color_range(1, s), color_range(s, 2 * s),
                color_range(2 * s + 1, 3 * s)};
    } else {
      // Double-star form; the triple-star map is stated to follow it.
      blocks = {color_range(1, s - 1), color_range(s, 2 * s),
                color_range(2 * s + 1, 3 * s)};
    }
    for (int j = 0; j < p.l; ++j) paint_layer(colors, j, s, blocks[j % 3]);
    auto out = built(id, std::move(colors));
    out.has_repair = true;
    return out;
  }
  return not_constructive(id);
}

Construction construct_complete_path(const FamilyParams& p, int r) {
  const Prediction pred = predict(Family::CompletePath, p, r);
  const auto& id = pred.case_id;
  if (!pred.covered()) return not_constructive(id);
  const int m = p.m;
  const int n = p.n;
  std::vector<Color> colors(static_cast<std::size_t>(m * n), 0);
  const bool alternating = id == tag(Family::CompletePath, "case1") ||
                           id == tag(Family::CompletePath, "n2");
  if (alternating) {
    // Layer j alternates 2j+1 (even k) and 2j+2 (odd k) along its path.
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < n; ++k) {
        colors[static_cast<std::size_t>(j * n + k)] = 2 * j + 1 + k % 2;
      }
    }
    return built(id, std::move(colors));
  }
  if (id == tag(Family::CompletePath, "case3")) {
    for (int v = 0; v < m * n; ++v) colors[static_cast<std::size_t>(v)] = v + 1;
    return built(id, std::move(colors));
  }
  return not_constructive(id);
}

Construction construct_cycle(const FamilyParams& p, int r) {
  const Prediction pred = predict(Family::Cycle, p, r);
  if (!pred.covered()) return not_constructive(pred.case_id);
  const int n = p.n;
  std::vector<Color> colors;
  if (n == 5) {
    colors = color_range(1, 5);
  } else if (n % 3 == 0) {
    for (int v = 0; v < n; ++v) colors.push_back(1 + v % 3);
  } else if (n % 3 == 1) {
    // (1 2 3)* then 4.
    for (int v = 0; v + 1 < n; ++v) colors.push_back(1 + v % 3);
    colors.push_back(4);
  } else {
    // 1 2 3 4 1 2 3 4 then (1 2 3)*.
    for (int v = 0; v < 8; ++v) colors.push_back(1 + v % 4);
    for (int v = 8; v < n; ++v) colors.push_back(1 + (v - 8) % 3);
  }
  return built(pred.case_id, std::move(colors));
}

}  // namespace

Construction construct_coloring(Family f, const FamilyParams& p, int r,
                                PaletteVariant variant) {
  if (r < 1) throw InvalidParameter("r must be >= 1");
  switch (f) {
    case Family::PathStar:
    case Family::PathDoubleStar:
    case Family::PathTripleStar:
      return construct_path_family(f, p, r, variant);
    case Family::CompletePath: return construct_complete_path(p, r);
    case Family::Cycle: return construct_cycle(p, r);
    case Family::Complete: {
      const Prediction pred = predict(f, p, r);
      if (!pred.covered()) return not_constructive(pred.case_id);
      return built(pred.case_id, color_range(1, p.n));
    }
  }
  return not_constructive(tag(f, "uncovered"));
}

}  // namespace rdc
