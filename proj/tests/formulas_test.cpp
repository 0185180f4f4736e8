#include <gtest/gtest.h>

#include "rdc/formulas.hpp"
#include "rdc/solver.hpp"

namespace rdc {
namespace {

using Kind = Prediction::Kind;

TEST(Predict, StatedValues) {
  auto small = predict(Family::PathStar, {3, 4, 0}, 2);
  EXPECT_EQ(small.kind, Kind::Exact);
  EXPECT_EQ(small.value, 4);
  EXPECT_EQ(small.case_id, "path-star:case1");

  auto kp = predict(Family::CompletePath, {0, 3, 3}, 1);
  EXPECT_EQ(kp.kind, Kind::Exact);
  EXPECT_EQ(kp.value, 6);
  ASSERT_TRUE(kp.lower_bound);
  EXPECT_EQ(*kp.lower_bound, 6);

  auto mid = predict(Family::PathStar, {3, 6, 0}, 4);
  EXPECT_EQ(mid.kind, Kind::Parametric);
  EXPECT_EQ(mid.value, 4);
  EXPECT_EQ(mid.hypothesis, 6);

  auto c5 = predict(Family::Cycle, {0, 0, 5}, 2);
  EXPECT_EQ(c5.kind, Kind::Exact);
  EXPECT_EQ(c5.value, 5);
}

TEST(Predict, ParametricHypothesesMatchWorkedPalettes) {
  // Mid-r case: palettes of sizes 6, 8, 10, 12.
  EXPECT_EQ(predict(Family::PathStar, {3, 6, 0}, 5).hypothesis, 8);
  EXPECT_EQ(predict(Family::PathStar, {3, 7, 0}, 6).hypothesis, 10);
  EXPECT_EQ(predict(Family::PathStar, {3, 7, 0}, 7).hypothesis, 12);
  // Above-min-degree case: 2m+1, 2m+2 (m=5); 2m+1..2m+3 (m=6).
  EXPECT_EQ(predict(Family::PathStar, {3, 5, 0}, 7).hypothesis, 11);
  EXPECT_EQ(predict(Family::PathStar, {3, 5, 0}, 8).hypothesis, 12);
  EXPECT_EQ(predict(Family::PathStar, {3, 6, 0}, 8).hypothesis, 13);
  EXPECT_EQ(predict(Family::PathStar, {3, 6, 0}, 10).hypothesis, 15);
  // Double star, m=5: r = 13, 14, 15 give 2(2m+1)+1..+3.
  for (int r = 13; r <= 15; ++r) {
    EXPECT_EQ(predict(Family::PathDoubleStar, {3, 5, 0}, r).hypothesis,
              22 + r - 12);
  }
  // Complete-path, m=4: 2m+2, 2m+3 at r=2m, 2m+1; 2m+4 at r=2m+2.
  EXPECT_EQ(predict(Family::CompletePath, {0, 4, 5}, 8).hypothesis, 10);
  EXPECT_EQ(predict(Family::CompletePath, {0, 4, 5}, 9).hypothesis, 11);
  EXPECT_EQ(predict(Family::CompletePath, {0, 4, 6}, 10).hypothesis, 12);
  // m=5: offset 2 for r=2m..2m+3, then 3 for r=2m+4..2m+7.
  EXPECT_EQ(predict(Family::CompletePath, {0, 5, 6}, 13).hypothesis, 15);
  EXPECT_EQ(predict(Family::CompletePath, {0, 5, 6}, 14).hypothesis, 17);
  EXPECT_EQ(predict(Family::CompletePath, {0, 5, 6}, 17).hypothesis, 20);
}

TEST(Predict, UncoveredAndErrors) {
  EXPECT_EQ(predict(Family::PathStar, {1, 4, 0}, 1).kind, Kind::Uncovered);
  EXPECT_EQ(predict(Family::PathDoubleStar, {3, 2, 0}, 1).kind,
            Kind::Uncovered);
  EXPECT_EQ(predict(Family::PathStar, {2, 3, 0}, 6).kind, Kind::Uncovered);
  EXPECT_EQ(predict(Family::Cycle, {0, 0, 7}, 1).kind, Kind::Uncovered);
  EXPECT_EQ(predict(Family::CompletePath, {0, 2, 3}, 1).kind, Kind::Uncovered);
  EXPECT_THROW(predict(Family::Complete, {0, 0, 3}, 0), InvalidParameter);
  EXPECT_THROW(parse_family("wheel"), InvalidParameter);
  for (auto f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
}

TEST(Predict, Remarks) {
  EXPECT_EQ(predict(Family::PathStar, {3, 2, 0}, 3).value, 4);
  EXPECT_EQ(predict(Family::PathStar, {3, 2, 0}, 4).value, 5);
  EXPECT_EQ(predict(Family::PathStar, {3, 2, 0}, 5).value, 6);
  EXPECT_EQ(predict(Family::CompletePath, {0, 4, 2}, 6).value, 8);
}

TEST(Predict, CasePartitionAndLowerBound) {
  const Family path_families[] = {Family::PathStar, Family::PathDoubleStar,
                                  Family::PathTripleStar};
  for (auto f : path_families) {
    for (int l = 2; l <= 5; ++l) {
      for (int m = 3; m <= 7; ++m) {
        const FamilyParams p{l, m, 0};
        const auto claim = *degree_claims(f, p);
        std::string last;
        for (int r = 1; r <= claim.max_degree; ++r) {
          auto pred = predict(f, p, r);
          ASSERT_TRUE(pred.covered()) << family_name(f) << l << m << r;
          if (pred.kind == Kind::Exact) {
            EXPECT_GE(pred.value, std::min(r, claim.max_degree) + 1);
          }
          // Cases occupy contiguous r-ranges.
          if (pred.case_id != last) {
            EXPECT_LT(last, pred.case_id);
            last = pred.case_id;
          }
        }
        EXPECT_FALSE(predict(f, p, claim.max_degree + 1).covered());
      }
    }
  }
  for (int m = 3; m <= 6; ++m) {
    for (int n = 3; n <= 6; ++n) {
      const auto claim = *degree_claims(Family::CompletePath, {0, m, n});
      for (int r = 1; r <= claim.max_degree + 3; ++r) {
        auto pred = predict(Family::CompletePath, {0, m, n}, r);
        ASSERT_TRUE(pred.covered());
        ASSERT_TRUE(pred.lower_bound);
        if (pred.kind == Kind::Exact) {
          EXPECT_GE(pred.value, std::min(r, claim.max_degree) + 1);
        }
      }
    }
  }
}

TEST(DegreeClaims, StatedValues) {
  auto a = *degree_claims(Family::PathStar, {2, 5, 0});
  EXPECT_EQ(a.min_degree, 6);
  EXPECT_EQ(a.max_degree, 9);
  auto b = *degree_claims(Family::PathDoubleStar, {3, 4, 0});
  EXPECT_EQ(b.min_degree, 10);
  EXPECT_EQ(b.max_degree, 22);
  auto c = *degree_claims(Family::CompletePath, {0, 3, 4});
  EXPECT_EQ(c.min_degree, 9);
  EXPECT_EQ(c.max_degree, 10);
  EXPECT_FALSE(degree_claims(Family::Cycle, {0, 0, 5}));
}

TEST(DegreeClaims, AgreeWithConstructedGraphs) {
  for (auto f : {Family::PathStar, Family::PathDoubleStar,
                 Family::PathTripleStar}) {
    for (int l = 2; l <= 4; ++l) {
      for (int m = 3; m <= 5; ++m) {
        auto g = build_family(f, {l, m, 0});
        auto claim = *degree_claims(f, {l, m, 0});
        EXPECT_EQ(claim.min_degree, static_cast<int>(g.min_degree()));
        EXPECT_EQ(claim.max_degree, static_cast<int>(g.max_degree()));
      }
    }
  }
  for (int m = 3; m <= 5; ++m) {
    for (int n = 2; n <= 5; ++n) {
      auto g = build_family(Family::CompletePath, {0, m, n});
      auto claim = *degree_claims(Family::CompletePath, {0, m, n});
      EXPECT_EQ(claim.min_degree, static_cast<int>(g.min_degree()));
      EXPECT_EQ(claim.max_degree, static_cast<int>(g.max_degree()));
    }
  }
}

TEST(DegreeClaims, SmallStarRemarkHoldsOnlyForLongPaths) {
  auto claim = *degree_claims(Family::PathStar, {2, 2, 0});
  EXPECT_NE(claim.max_degree,
            static_cast<int>(build_family(Family::PathStar, {2, 2, 0}).max_degree()));
  EXPECT_EQ(claim.max_degree,
            static_cast<int>(build_family(Family::PathStar, {3, 2, 0}).max_degree()));
}

bool valid(Family f, FamilyParams p, int r,
           PaletteVariant v = PaletteVariant::Printed) {
  auto c = construct_coloring(f, p, r, v);
  if (!c.constructed()) return false;
  auto pred = predict(f, p, r);
  return is_r_dynamic(build_family(f, p), c.coloring, r).ok &&
         c.coloring.palette_size() == pred.value;
}

TEST(Construct, SmallRLayerColoring) {
  auto c = construct_coloring(Family::PathStar, {3, 4, 0}, 2);
  ASSERT_TRUE(c.constructed());
  EXPECT_EQ(c.coloring.colors(),
            (std::vector<Color>{1, 2, 2, 2, 3, 4, 4, 4, 1, 2, 2, 2}));
  EXPECT_TRUE(valid(Family::PathStar, {3, 4, 0}, 2));
}

TEST(Construct, RainbowCompletePath) {
  auto c = construct_coloring(Family::CompletePath, {0, 3, 3}, 8);
  ASSERT_TRUE(c.constructed());
  EXPECT_EQ(c.coloring.colors(), (std::vector<Color>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_TRUE(valid(Family::CompletePath, {0, 3, 3}, 8));
}

TEST(Construct, ExplicitCasesValidate) {
  for (auto f : {Family::PathStar, Family::PathDoubleStar,
                 Family::PathTripleStar}) {
    for (int l = 2; l <= 5; ++l) {
      for (int m = 3; m <= 5; ++m) {
        const FamilyParams p{l, m, 0};
        const int delta = degree_claims(f, p)->max_degree;
        for (int r = 1; r <= delta; ++r) {
          auto c = construct_coloring(f, p, r);
          auto id = predict(f, p, r).case_id;
          const bool explicit_case = id.ends_with("case1") ||
                                     id.ends_with("case3") ||
                                     id.ends_with("case4");
          EXPECT_EQ(c.constructed(), explicit_case || id.ends_with("case6"));
          if (explicit_case) EXPECT_TRUE(valid(f, p, r)) << id << " l=" << l;
          if (id.ends_with("case6")) {
            EXPECT_TRUE(valid(f, p, r, PaletteVariant::Repaired));
          }
        }
      }
    }
  }
  for (int m = 3; m <= 5; ++m) {
    for (int n = 2; n <= 5; ++n) {
      const int delta = degree_claims(Family::CompletePath, {0, m, n})->max_degree;
      for (int r = 1; r <= delta + 1; ++r) {
        auto c = construct_coloring(Family::CompletePath, {0, m, n}, r);
        auto id = predict(Family::CompletePath, {0, m, n}, r).case_id;
        if (id.ends_with("case2")) {
          EXPECT_FALSE(c.constructed());
        } else {
          EXPECT_TRUE(valid(Family::CompletePath, {0, m, n}, r)) << id;
        }
      }
    }
  }
  for (int p = 3; p <= 14; ++p) EXPECT_TRUE(valid(Family::Cycle, {0, 0, p}, 2)) << p;
  for (int t = 1; t <= 6; ++t) EXPECT_TRUE(valid(Family::Complete, {0, 0, t}, 3));
}

TEST(Construct, PrintedTopRangePaletteIsInvalid) {
  // Consecutive layers share color m in the printed star palette.
  const FamilyParams p{3, 3, 0};
  auto printed = construct_coloring(Family::PathStar, p, 8);
  ASSERT_TRUE(printed.constructed());
  EXPECT_TRUE(printed.has_repair);
  auto verdict = is_r_dynamic(build_family(Family::PathStar, p), printed.coloring, 8);
  EXPECT_FALSE(verdict.ok);
  EXPECT_FALSE(is_proper(build_family(Family::PathStar, p), printed.coloring).ok);
  EXPECT_TRUE(valid(Family::PathStar, p, 8, PaletteVariant::Repaired));
  // The double-star printed palette falls one color short per layer.
  EXPECT_FALSE(valid(Family::PathDoubleStar, {3, 3, 0}, 17));
}

TEST(Construct, MidCasesAreNotConstructive) {
  EXPECT_FALSE(construct_coloring(Family::PathStar, {3, 6, 0}, 4).constructed());
  EXPECT_FALSE(construct_coloring(Family::PathStar, {3, 5, 0}, 7).constructed());
  EXPECT_FALSE(construct_coloring(Family::PathStar, {3, 2, 0}, 4).constructed());
  EXPECT_FALSE(construct_coloring(Family::PathStar, {1, 3, 0}, 1).constructed());
}

}  // namespace
}  // namespace rdc
