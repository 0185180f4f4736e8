#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdc/coloring.hpp"
#include "rdc/graph.hpp"

namespace rdc {

/// Graph families with closed-form r-dynamic chromatic numbers.
enum class Family {
  PathStar,        // P_l[K_{1,m}]
  PathDoubleStar,  // P_l[K_{1,m,m}]
  PathTripleStar,  // P_l[K_{1,m,m,m}]
  CompletePath,    // K_m[P_n]
  Cycle,           // C_n
  Complete,        // K_n
};

std::string_view family_name(Family f);
/// Throws InvalidParameter for unknown names.
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

/// Family parameters. Path families use l (path length) and m; the
/// complete-path family uses m (clique order) and n (path order); cycles
/// and complete graphs use n for their order.
struct FamilyParams {
  int l = 0;
  int m = 0;
  int n = 0;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Builds the graph a family/params pair denotes. Throws InvalidParameter
/// when a generator rejects the parameters.
Graph build_family(Family f, const FamilyParams& p);

struct Prediction {
  enum class Kind { Exact, LowerBoundOnly, Parametric, Uncovered };

  Kind kind = Kind::Uncovered;
  /// Exact: the value. LowerBoundOnly: the bound. Parametric: the known
  /// base of "base + i" (r or a multiple of the layer order).
  int value = 0;
  /// Parametric only: inferred closed form for the whole value. Never a
  /// claim of the source; confirmed or refuted by the exact solver.
  std::optional<int> hypothesis;
  std::string hypothesis_formula;
  std::string case_id;
  /// Complete-path predictions carry the companion lower bound.
  std::optional<int> lower_bound;
  /// Interpretation choices that applied to this instance.
  std::vector<std::string> notes;

  bool covered() const { return kind != Kind::Uncovered; }
};

std::string_view kind_name(Prediction::Kind k);

/// Closed-form prediction for chi_r of the family instance. Parameters
/// outside every stated range yield Kind::Uncovered.
Prediction predict(Family f, const FamilyParams& p, int r);

/// Lower bound for K_m[P_n] by r-range (m, n >= 3), if in range.
std::optional<int> complete_path_lower_bound(int m, int n, int r);

struct DegreeClaim {
  int min_degree = 0;
  int max_degree = 0;
};

/// The stated minimum and maximum degree of a family instance, for
/// cross-checking against the constructed graph. Families without stated
/// degrees return nullopt.
std::optional<DegreeClaim> degree_claims(Family f, const FamilyParams& p);

/// Which palette a constructive colorer should realize.
enum class PaletteVariant {
  /// The map as printed.
  Printed,
  /// Corrected palette for cases whose printed blocks overlap or fall
  /// short of the layer order. Same as Printed elsewhere.
  Repaired,
};

struct Construction {
  enum class Status { Constructed, NotConstructive };

  Status status = Status::NotConstructive;
  std::string case_id;
  Coloring coloring;
  /// True when the printed and repaired palettes differ for this case.
  bool has_repair = false;

  bool constructed() const { return status == Status::Constructed; }
};

/// Replays the explicit vertex coloring for the case that covers
/// (f, p, r). The result is not self-certified; run is_r_dynamic on it.
Construction construct_coloring(Family f, const FamilyParams& p, int r,
                                PaletteVariant variant = PaletteVariant::Printed);

}  // namespace rdc
