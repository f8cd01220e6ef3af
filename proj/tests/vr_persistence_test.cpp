/// @file
/// @brief Tests for Rips filtrations and persistence diagrams.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.h"
#include "tma/errors.h"
#include "tma/fixtures.h"
#include "tma/harmonic_complexes.h"
#include "tma/vr_persistence.h"

namespace tma {
namespace {

const double kSqrt2 = std::sqrt(2.0);

std::vector<Point> unit_square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

TEST(BuildVrTest, TwoPoints) {
  const FilteredComplex fc = build_vr(std::vector<Point>{{0, 0}, {3, 4}}, 1);
  ASSERT_EQ(fc.size(), 3u);
  EXPECT_EQ(fc.entries()[0].value, 0.0);
  EXPECT_EQ(fc.entries()[1].value, 0.0);
  EXPECT_EQ(fc.entries()[2].simplex, Simplex({0, 1}));
  EXPECT_EQ(fc.entries()[2].value, 5.0);
}

TEST(BuildVrTest, IdenticalPointsEnterAtZero) {
  const FilteredComplex fc = build_vr(std::vector<Point>(3, Point{1, 1}), 1);
  EXPECT_EQ(fc.size(), 7u);
  for (const auto& e : fc.entries()) EXPECT_EQ(e.value, 0.0);
}

TEST(BuildVrTest, UnitSquare) {
  const FilteredComplex fc = build_vr(unit_square(), 2);
  std::map<std::pair<int, double>, int> counts;
  for (const auto& e : fc.entries()) ++counts[{e.simplex.dimension(), e.value}];
  EXPECT_EQ((counts[{0, 0.0}]), 4);
  EXPECT_EQ((counts[{1, 1.0}]), 4);
  EXPECT_EQ((counts[{1, kSqrt2}]), 2);
  EXPECT_EQ((counts[{2, kSqrt2}]), 4);
  EXPECT_EQ((counts[{3, kSqrt2}]), 1);
  EXPECT_NO_THROW(fc.validate());
}

TEST(BuildVrTest, OrderAndScaleCap) {
  const FilteredComplex fc = build_vr(unit_square(), 2, 1.0);
  EXPECT_EQ(fc.size(), 8u);
  for (std::size_t i = 1; i < fc.size(); ++i) {
    const auto& a = fc.entries()[i - 1];
    const auto& b = fc.entries()[i];
    EXPECT_TRUE(std::make_tuple(a.value, a.simplex.dimension(), a.simplex) <
                std::make_tuple(b.value, b.simplex.dimension(), b.simplex));
  }
  EXPECT_EQ(build_vr(std::vector<Point>{}, 3).size(), 0u);
}

TEST(PersistenceTest, TwoPoints) {
  const PersistenceResult r = persistence(build_vr(std::vector<Point>{{0}, {2.5}}, 1), {1});
  ASSERT_EQ(r.diagrams.size(), 2u);
  EXPECT_EQ(r.diagrams[0].points, (std::vector<DiagramPoint>{{0, 2.5}, {0, kUnbounded}}));
  EXPECT_TRUE(r.diagrams[1].points.empty());
}

TEST(PersistenceTest, UnitSquareHasOneLoop) {
  PersistenceOptions options;
  options.max_dim = 2;
  const PersistenceResult r = persistence(build_vr(unit_square(), 2), options);
  EXPECT_EQ(r.diagrams[1].points, (std::vector<DiagramPoint>{{1.0, kSqrt2}}));
  EXPECT_EQ(r.diagrams[0].points.size(), 4u);
  EXPECT_TRUE(r.diagrams[2].points.empty());
}

TEST(PersistenceTest, CoincidentPointsLeaveOneClass) {
  PersistenceOptions options;
  options.max_dim = 2;
  const PersistenceResult r = persistence(build_vr(std::vector<Point>(5, Point{0.5, 2}), 2), options);
  EXPECT_EQ(r.diagrams[0].points, (std::vector<DiagramPoint>{{0, kUnbounded}}));
  EXPECT_GT(r.zero_persistence_pairs, 0u);
  for (std::size_t k = 1; k < r.diagrams.size(); ++k) EXPECT_TRUE(r.diagrams[k].points.empty());
}

TEST(PersistenceTest, EmptyAndMaxDim) {
  const PersistenceResult empty = persistence(FilteredComplex{});
  EXPECT_EQ(empty.diagrams.size(), 4u);
  PersistenceOptions options;
  options.max_dim = 1;
  const PersistenceResult r = persistence(build_vr(unit_square(), 1), options);
  EXPECT_EQ(r.diagrams.size(), 2u);
}

TEST(PersistenceTest, MatchesBettiOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const std::vector<Point> cloud = testing::random_cloud(rng, 7, 4);
    PersistenceOptions options;
    options.max_dim = 2;
    const PersistenceResult r = persistence(build_vr(cloud, 2), options);
    const std::vector<PersistenceDiagram> expected = testing::oracle_diagrams(cloud, 2);
    for (int k = 0; k <= 2; ++k) {
      EXPECT_EQ(r.diagrams[k].points, expected[k].points) << "trial " << trial << " dim " << k;
    }
  }
}

TEST(PersistenceTest, UnionFindMatchesReductionBitForBit) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<Point> cloud = testing::random_cloud(rng, 12, 4);
    const FilteredComplex fc = build_vr(cloud, 2);
    PersistenceOptions fast;
    fast.max_dim = 2;
    PersistenceOptions slow = fast;
    slow.h0_union_find = false;
    const PersistenceResult a = persistence(fc, fast);
    const PersistenceResult b = persistence(fc, slow);
    EXPECT_EQ(a.diagrams, b.diagrams);
    EXPECT_EQ(a.zero_persistence_pairs, b.zero_persistence_pairs);
  }
}

TEST(PersistenceTest, FieldsAgreeOnTorsionFreeClouds) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<Point> cloud = testing::random_cloud(rng, 9, 3);
    const FilteredComplex fc = build_vr(cloud, 2);
    PersistenceOptions z2;
    z2.max_dim = 1;
    PersistenceOptions z3 = z2;
    z3.field = PrimeField(3);
    EXPECT_EQ(persistence(fc, z2).diagrams, persistence(fc, z3).diagrams);
  }
}

TEST(PersistenceTest, OneInfiniteClassPerComponent) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<Point> cloud = testing::random_cloud(rng, 10, 3);
    const PersistenceResult full = persistence(build_vr(cloud, 1), {1});
    const auto infinite = std::count_if(full.diagrams[0].points.begin(), full.diagrams[0].points.end(),
                                        [](const DiagramPoint& p) { return p.is_infinite(); });
    EXPECT_EQ(infinite, 1);
    // With a scale cap, one infinite class per component of the cap graph.
    const double cap = 0.8;
    const FilteredComplex capped = build_vr(cloud, 1, cap);
    SimplicialComplex skeleton;
    for (const auto& e : capped.entries()) skeleton.insert_closure(e.simplex);
    const PersistenceResult r = persistence(capped, {1});
    const auto capped_infinite = std::count_if(r.diagrams[0].points.begin(), r.diagrams[0].points.end(),
                                               [](const DiagramPoint& p) { return p.is_infinite(); });
    EXPECT_EQ(static_cast<std::size_t>(capped_infinite), testing::component_count(skeleton));
  }
}

TEST(PersistenceTest, PermutationAndRigidMotionInvariance) {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Point> cloud = testing::random_cloud(rng, 9, 3);
    for (auto& p : cloud) p.resize(3, 0.0);
    const PersistenceResult base = persistence(build_vr(cloud, 2), {2});

    std::vector<Point> shuffled = cloud;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const PersistenceResult permuted = persistence(build_vr(shuffled, 2), {2});

    const double a = angle(rng);
    const double b = angle(rng);
    const double dx = shift(rng);
    std::vector<Point> moved;
    for (const Point& p : cloud) {
      const double x = std::cos(a) * p[0] - std::sin(a) * p[1];
      const double y = std::sin(a) * p[0] + std::cos(a) * p[1];
      const double z = p[2];
      moved.push_back({x + dx, std::cos(b) * y - std::sin(b) * z - dx, std::sin(b) * y + std::cos(b) * z + 1.0});
    }
    const PersistenceResult rigid = persistence(build_vr(moved, 2), {2});
    for (int k = 0; k <= 2; ++k) {
      EXPECT_TRUE(testing::same_points(base.diagrams[k], permuted.diagrams[k], 0.0)) << "dim " << k;
      // Rotations perturb distances by rounding, which can shift exact ties
      // into or out of zero-length pairs; compare the long-lived part.
      PersistenceDiagram x = base.diagrams[k];
      PersistenceDiagram y = rigid.diagrams[k];
      auto short_lived = [](const DiagramPoint& p) { return p.persistence() <= 1e-9; };
      std::erase_if(x.points, short_lived);
      std::erase_if(y.points, short_lived);
      EXPECT_TRUE(testing::same_points(x, y, 1e-9)) << "dim " << k;
    }
  }
}

TEST(PersistenceTest, IndicatorCloudValuesAreRootsOfIntegers) {
  const PointCloud cloud = map_fragment(MappingId::kIV, luna_fragment());
  const FilteredComplex fc = build_vr(cloud, 3);
  for (const auto& e : fc.entries()) {
    const double sq = e.value * e.value;
    EXPECT_NEAR(sq, std::round(sq), 1e-9);
  }
  const PersistenceResult r = persistence(fc);
  ASSERT_EQ(r.diagrams.size(), 4u);
  for (const auto& d : r.diagrams) {
    for (const auto& p : d.points) {
      EXPECT_NEAR(p.birth * p.birth, std::round(p.birth * p.birth), 1e-9);
      if (!p.is_infinite()) {
        EXPECT_NEAR(p.death * p.death, std::round(p.death * p.death), 1e-9);
      }
    }
  }
}

TEST(PersistenceTest, RejectsBadFiltrations) {
  const FilteredComplex missing_face({{Simplex{0}, 0.0}, {Simplex{0, 1}, 1.0}});
  EXPECT_THROW(missing_face.validate(), InvalidFiltration);
  EXPECT_THROW(persistence(missing_face), InvalidFiltration);
  const FilteredComplex late_face({{Simplex{0}, 0.0}, {Simplex{1}, 2.0}, {Simplex{0, 1}, 1.0}});
  EXPECT_THROW(persistence(late_face), InvalidFiltration);
}

TEST(PersistenceTest, NestedComplexSequenceAsFiltration) {
  const ComplexSequence seq = cumulative_sequence(luna_fragment().chords());
  const FilteredComplex fc = filtration_from_sequence(seq);
  EXPECT_NO_THROW(fc.validate());
  PersistenceOptions options;
  options.max_dim = 11;
  options.h0_union_find = false;
  const PersistenceResult r = persistence(fc, options);
  // Betti numbers at each step equal the number of bars alive there.
  for (std::size_t step = 0; step < seq.betti_table.size(); ++step) {
    const double t = static_cast<double>(seq.labels[step]);
    for (std::size_t k = 0; k < kBettiColumns; ++k) {
      const auto alive = std::count_if(r.diagrams[k].points.begin(), r.diagrams[k].points.end(),
                                       [t](const DiagramPoint& p) { return p.birth <= t && t < p.death; });
      EXPECT_EQ(static_cast<std::size_t>(alive), seq.betti_table[step][k]) << "step " << step << " dim " << k;
    }
  }
  EXPECT_THROW(filtration_from_sequence(radius_complexes(luna_fragment().chords(), 2)), InvalidFiltration);
}

TEST(DiagramJsonTest, RoundTrip) {
  DiagramDocument doc;
  doc.mapping = "IV";
  doc.label = "x";
  doc.max_dim = 1;
  doc.diagrams = {{0, {{0, 1}, {0, kUnbounded}}}, {1, {{1, kSqrt2}}}};
  const std::string text = diagram_json(doc);
  EXPECT_NE(text.find("\"scale\": \"diameter\""), std::string::npos);
  EXPECT_NE(text.find("\"inf\""), std::string::npos);
  const DiagramDocument back = parse_diagram_json(text);
  EXPECT_EQ(back.diagrams, doc.diagrams);
  EXPECT_EQ(back.mapping, "IV");
  EXPECT_EQ(diagram_json(back), text);
  EXPECT_THROW(parse_diagram_json(R"({"diagrams": [{"dim": 0, "points": [[2, 1]]}]})"), SchemaViolation);
}

}  // namespace
}  // namespace tma
