#include "rdc/solver.hpp"

#include <algorithm>
#include <bit>

namespace rdc {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t quota(const Graph& g, VertexId v, int r) {
  return std::min(static_cast<std::size_t>(r), g.degree(v));
}

void require_solvable(const Graph& g, int r) {
  if (g.empty()) throw InvalidParameter("graph must be non-empty");
  if (r < 1) throw InvalidParameter("r must be >= 1");
}

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start);
}

// Decides whether g has an r-dynamic coloring with at most k colors.
class FixedPaletteSearch {
 public:
  FixedPaletteSearch(const Graph& g, int r, int k, bool forecast,
                     Clock::time_point deadline)
      : g_(g),
        k_(k),
        forecast_(forecast),
        deadline_(deadline),
        color_(g.order(), 0),
        counts_(g.order() * static_cast<std::size_t>(k + 1), 0),
        distinct_(g.order(), 0),
        uncolored_(g.order()),
        quota_(g.order()) {
    for (VertexId v = 0; v < g.order(); ++v) {
      uncolored_[v] = g.degree(v);
      quota_[v] = quota(g, v, r);
    }
  }

  enum class Outcome { Feasible, Infeasible, Timeout };

  Outcome run() {
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (!feasible(v)) return Outcome::Infeasible;
    }
    return assign(0);
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Color>& colors() const { return color_; }

 private:
  std::uint16_t& count(VertexId v, Color c) {
    return counts_[v * static_cast<std::size_t>(k_ + 1) + c];
  }

  // A vertex ends with at most k-1 distinct neighbor colors (its own color
  // is excluded) and at most distinct + uncolored of them.
  bool feasible(VertexId v) const {
    const std::size_t seen = distinct_[v];
    if (!forecast_) return uncolored_[v] > 0 || seen >= quota_[v];
    if (color_[v] == 0 && seen >= static_cast<std::size_t>(k_)) return false;
    const std::size_t reachable =
        std::min(seen + uncolored_[v], static_cast<std::size_t>(k_ - 1));
    return reachable >= quota_[v];
  }

  void place(VertexId v, Color c) {
    color_[v] = c;
    for (VertexId u : g_.neighbors(v)) {
      if (count(u, c)++ == 0) ++distinct_[u];
      --uncolored_[u];
    }
  }

  void lift(VertexId v) {
    const Color c = color_[v];
    for (VertexId u : g_.neighbors(v)) {
      if (--count(u, c) == 0) --distinct_[u];
      ++uncolored_[u];
    }
    color_[v] = 0;
  }

  Outcome assign(VertexId v) {
    if (v == g_.order()) return Outcome::Feasible;
    if ((++nodes_ & 0x3ff) == 1 && Clock::now() >= deadline_) {
      return Outcome::Timeout;
    }
    const Color limit = std::min(max_used_ + 1, k_);
    for (Color c = 1; c <= limit; ++c) {
      if (count(v, c) != 0) continue;
      place(v, c);
      bool ok = feasible(v);
      for (VertexId u : g_.neighbors(v)) {
        if (!ok) break;
        ok = feasible(u);
      }
      if (ok) {
        const Color saved = max_used_;
        max_used_ = std::max(max_used_, c);
        const Outcome sub = assign(v + 1);
        if (sub != Outcome::Infeasible) return sub;
        max_used_ = saved;
      }
      lift(v);
    }
    return Outcome::Infeasible;
  }

  const Graph& g_;
  const int k_;
  const bool forecast_;
  const Clock::time_point deadline_;
  std::vector<Color> color_;
  std::vector<std::uint16_t> counts_;
  std::vector<std::size_t> distinct_;
  std::vector<std::size_t> uncolored_;
  std::vector<std::size_t> quota_;
  Color max_used_ = 0;
  std::uint64_t nodes_ = 0;
};

// Fast check used only by the brute-force enumerator; k <= 32 here.
bool brute_check(const Graph& g, const std::vector<Edge>& edges,
                 const std::vector<Color>& colors, int r) {
  for (auto [u, v] : edges) {
    if (colors[u] == colors[v]) return false;
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    std::uint32_t mask = 0;
    for (VertexId w : g.neighbors(v)) mask |= 1u << colors[w];
    if (static_cast<std::size_t>(std::popcount(mask)) < quota(g, v, r)) {
      return false;
    }
  }
  return true;
}

}  // namespace

int lemma1_lower_bound(const Graph& g, int r) {
  require_solvable(g, r);
  return std::min(r, static_cast<int>(g.max_degree())) + 1;
}

SolveResult brute_force_chi_r(const Graph& g, int r,
                              const SolveOptions& options) {
  require_solvable(g, r);
  if (g.order() > options.brute_force_cap) {
    throw CapExceeded("brute force limited to " +
                      std::to_string(options.brute_force_cap) +
                      " vertices; use exact_chi_r");
  }
  const auto start = Clock::now();
  const auto edges = g.edges();
  const std::size_t n = g.order();
  SolveResult out;
  // K_1 has bound 1 but a single vertex; the bound never exceeds n.
  for (int k = std::min<int>(lemma1_lower_bound(g, r), n);
       k <= static_cast<int>(n); ++k) {
    std::vector<Color> colors(n, 1);
    while (true) {
      ++out.nodes_explored;
      if (brute_check(g, edges, colors, r)) {
        out.chi_r = k;
        out.lower_bound = k;
        out.witness = Coloring(colors);
        out.elapsed = since(start);
        return out;
      }
      // Odometer over vertices 1..n-1; vertex 0 is pinned to color 1.
      std::size_t pos = 1;
      while (pos < n && colors[pos] == k) colors[pos++] = 1;
      if (pos >= n) break;
      ++colors[pos];
    }
  }
  // Unreachable: n distinct colors are always r-dynamic.
  throw std::logic_error("brute force found no coloring");
}

GreedyResult greedy_upper_bound(const Graph& g, int r) {
  require_solvable(g, r);
  const std::size_t n = g.order();
  std::vector<Color> color(n, 0);
  // counts[v] maps color -> number of colored neighbors; colors <= n.
  std::vector<std::vector<int>> counts(n, std::vector<int>(n + 2, 0));
  std::vector<std::size_t> distinct(n, 0), uncolored(n), need(n);
  for (VertexId v = 0; v < n; ++v) {
    uncolored[v] = g.degree(v);
    need[v] = quota(g, v, r);
  }
  Color max_used = 0;

  // Invariant: distinct[u] + uncolored[u] >= need[u] for every u. A
  // neighbor u that is tight forbids repeating a color it already sees.
  auto allowed = [&](VertexId v, Color c) {
    if (counts[v][c] != 0) return false;
    for (VertexId u : g.neighbors(v)) {
      if (counts[u][c] != 0 && distinct[u] + uncolored[u] <= need[u]) {
        return false;
      }
    }
    return true;
  };

  for (VertexId v = 0; v < n; ++v) {
    Color pick = max_used + 1;
    for (Color c = 1; c <= max_used; ++c) {
      if (allowed(v, c)) {
        pick = c;
        break;
      }
    }
    color[v] = pick;
    max_used = std::max(max_used, pick);
    for (VertexId u : g.neighbors(v)) {
      if (counts[u][pick]++ == 0) ++distinct[u];
      --uncolored[u];
    }
  }
  return {max_used, Coloring(std::move(color))};
}

SolveResult exact_chi_r(const Graph& g, int r, const SolveOptions& options) {
  require_solvable(g, r);
  const auto start = Clock::now();
  const auto deadline = start + options.budget;

  auto greedy = greedy_upper_bound(g, r);
  SolveResult out;
  out.chi_r = greedy.colors;
  out.witness = std::move(greedy.coloring);
  const int lower = std::min<int>(lemma1_lower_bound(g, r), g.order());
  out.lower_bound = lower;

  for (int k = lower; k < greedy.colors; ++k) {
    FixedPaletteSearch search(g, r, k, options.forecast, deadline);
    const auto outcome = search.run();
    out.nodes_explored += search.nodes();
    if (outcome == FixedPaletteSearch::Outcome::Timeout) {
      out.status = SolveStatus::Timeout;
      break;
    }
    if (outcome == FixedPaletteSearch::Outcome::Feasible) {
      out.chi_r = k;
      out.witness = Coloring(search.colors());
      break;
    }
    out.lower_bound = k + 1;
  }
  if (out.status == SolveStatus::Optimal) out.lower_bound = out.chi_r;
  out.elapsed = since(start);
  return out;
}

std::vector<ProfileEntry> chi_r_profile(const Graph& g,
                                        const SolveOptions& options) {
  if (g.order() > options.profile_cap) {
    throw CapExceeded("profile limited to " +
                      std::to_string(options.profile_cap) + " vertices");
  }
  std::vector<ProfileEntry> out;
  const int delta = static_cast<int>(g.max_degree());
  for (int r = 1; r <= delta; ++r) {
    out.push_back({r, exact_chi_r(g, r, options)});
  }
  return out;
}

}  // namespace rdc
