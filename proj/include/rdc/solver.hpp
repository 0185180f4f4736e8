#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rdc/coloring.hpp"
#include "rdc/graph.hpp"

namespace rdc {

/// Raised when an instance is larger than a solver's configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  std::chrono::milliseconds budget{60'000};
  /// Prune on colors-remaining vs quota before a neighborhood is complete.
  /// When off, condition (1.2) is only checked on saturated vertices.
  bool forecast = true;
  std::size_t brute_force_cap = 12;
  std::size_t profile_cap = 30;
};

enum class SolveStatus { Optimal, Timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  /// Optimal value, or the best known upper bound on timeout.
  int chi_r = 0;
  /// Largest value proven to be a lower bound.
  int lower_bound = 0;
  Coloring witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};

  bool optimal() const { return status == SolveStatus::Optimal; }
};

/// min{r, Δ(g)} + 1.
int lemma1_lower_bound(const Graph& g, int r);

/// Exhaustive enumeration of V -> {1..k} for k upward from the Lemma 1
/// bound. Throws CapExceeded above options.brute_force_cap vertices.
SolveResult brute_force_chi_r(const Graph& g, int r,
                              const SolveOptions& options = {});

/// Branch and bound over vertices in flat-id order, deciding feasibility for
/// each k from the lower bound up to the greedy bound.
SolveResult exact_chi_r(const Graph& g, int r,
                        const SolveOptions& options = {});

struct GreedyResult {
  int colors = 0;
  Coloring coloring;
};

/// Sequential smallest-color assignment that keeps every vertex's
/// neighborhood quota reachable, opening a fresh color when none fits.
/// Always returns an r-dynamic coloring.
GreedyResult greedy_upper_bound(const Graph& g, int r);

struct ProfileEntry {
  int r = 0;
  SolveResult result;
};

/// exact_chi_r for r = 1..Δ(g). Throws CapExceeded above
/// options.profile_cap vertices.
std::vector<ProfileEntry> chi_r_profile(const Graph& g,
                                        const SolveOptions& options = {});

}  // namespace rdc
