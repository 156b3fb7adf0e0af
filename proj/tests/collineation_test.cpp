#include <gtest/gtest.h>

#include "tern/collineation.hpp"
#include "tern/rng.hpp"

using namespace tern;

namespace {

const Catalog& catalog(int q) {
  static std::map<int, Catalog> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build_catalog(Field::of_order(q))).first;
  return it->second;
}

Ternion random_unit(const Field& f, Rng& rng) {
  while (true) {
    const Ternion u = rng.ternion(f);
    if (u.x() != 0 && u.z() != 0) return u;
  }
}

TernionMatrix2 identity2(const Field& f) {
  return TernionMatrix2(Ternion(f, 1, 0, 1), Ternion(f, 0, 0, 0), Ternion(f, 0, 0, 0), Ternion(f, 1, 0, 1));
}

}  // namespace

TEST(Collineation, LeftMultiplicationMatrix) {
  const Field& f = Field::of_order(3);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Ternion u = rng.ternion(f);
    const Matrix m = left_multiplication_matrix(u);
    for (const auto& v : all_pairs(f)) ASSERT_EQ(vec_times(phi(v), m), phi(left_multiply(u, v)));
  }
}

TEST(Collineation, LiftIntertwinesPhi) {
  for (int q : {2, 3, 4}) {
    const Field& f = Field::of_order(q);
    Rng rng(10 + q);
    for (int trial = 0; trial < 10; ++trial) {
      const TernionSemilinear g{random_unit(f, rng), rng.automorphism(f), rng.gl2(f)};
      const auto lifted = g.lift();
      for (const auto& v : all_pairs(f)) ASSERT_EQ(lifted(phi(v)), phi(g(v)));
    }
  }
}

TEST(Collineation, IdentitySatisfiesAllConditions) {
  const auto& cat = catalog(2);
  const auto c = theorem1_conditions(SemilinearMap::identity(cat.field(), 6), cat);
  EXPECT_TRUE(c.all());
}

TEST(Collineation, FrobeniusQ4) {
  const auto& cat = catalog(4);
  const Field& f = cat.field();
  const FieldAutomorphism frob(f, 1);
  const auto map = SemilinearMap::field_automorphism(frob, 6);
  EXPECT_TRUE(theorem1_conditions(map, cat).all());
  EXPECT_EQ(extract_sigma(map), frob);
  const auto d = decompose_semilinear(map, cat);
  EXPECT_EQ(d.sigma, frob);
  EXPECT_EQ(d.a, 0);
  EXPECT_EQ(d.b, 1);
  EXPECT_EQ(d.f2.matrix(), Matrix::identity(f, 6));
  EXPECT_EQ(d.f3.matrix(), Matrix::identity(f, 6));
  EXPECT_TRUE(d.f3.sigma().is_identity());
  EXPECT_EQ(d.s, identity2(f));
  EXPECT_TRUE(round_trip(d, map));
}

TEST(Collineation, CoordinateSwapFailsEverything) {
  // x1 <-> x3 moves J off itself.
  const auto& cat = catalog(3);
  Matrix m = Matrix::identity(cat.field(), 6);
  m(0, 0) = m(2, 2) = 0;
  m(0, 2) = m(2, 0) = 1;
  const auto c = theorem1_conditions(SemilinearMap::linear(m), cat);
  EXPECT_FALSE(c.j_and_h_fixed);
  EXPECT_FALSE(c.any());
  EXPECT_THROW(decompose_semilinear(SemilinearMap::linear(m), cat), std::invalid_argument);
}

TEST(Collineation, DiagGActsOnOppositeRegulus) {
  const Field& f = Field::of_order(5);
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 1; b < 5; ++b) {
      const auto g = SemilinearMap::linear(diag_1g1g(f, a, b));
      for (Elem s = 0; s < 5; ++s) {
        const Subspace image = g(opposite_line(f, s, 1));
        EXPECT_EQ(image, opposite_line(f, f.add(s, a), b));
        EXPECT_EQ(opposite_parameter(image), f.div(f.add(s, a), b));
      }
      EXPECT_EQ(g(opposite_line(f, 1, 0)), opposite_line(f, 1, 0));
    }
  EXPECT_EQ(opposite_parameter(opposite_line(f, 1, 0)), std::nullopt);
}

TEST(Collineation, DecompositionRoundTrip) {
  for (int q : {2, 3, 4}) {
    const auto& cat = catalog(q);
    const Field& f = cat.field();
    Rng rng(100 + q);
    for (int trial = 0; trial < 25; ++trial) {
      const TernionSemilinear g{random_unit(f, rng), rng.automorphism(f), rng.gl2(f)};
      const auto map = g.lift();
      ASSERT_TRUE(theorem1_conditions(map, cat).all());
      const auto d = decompose_semilinear(map, cat);
      EXPECT_EQ(d.sigma, g.sigma);
      EXPECT_TRUE(round_trip(d, map));
      // the three factors recompose to f
      const auto recomposed = d.f3.after(d.f2).after(d.f1);
      EXPECT_EQ(recomposed.matrix(), map.matrix());
      EXPECT_EQ(recomposed.sigma(), map.sigma());
      for (const auto& v : all_pairs(f)) ASSERT_EQ(phi(d.g(v)), phi(g(v)));
    }
  }
}

TEST(Collineation, PlainBlockMapsDecomposeTrivially) {
  const auto& cat = catalog(3);
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = rng.gl2(cat.field());
    const auto d = decompose_semilinear(block6_lift(s), cat);
    EXPECT_TRUE(d.sigma.is_identity());
    EXPECT_EQ(d.a, 0);
    EXPECT_EQ(d.b, 1);
    EXPECT_EQ(d.s, s);
  }
}

TEST(Collineation, BlockExhaustiveQ2) {
  const auto& cat = catalog(2);
  const Field& f = cat.field();
  std::vector<Ternion> ts;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) ts.emplace_back(f, x, y, z);
  int count = 0;
  for (const auto& a : ts)
    for (const auto& b : ts)
      for (const auto& c : ts)
        for (const auto& d : ts) {
          const TernionMatrix2 s(a, b, c, d);
          if (!s.is_invertible()) continue;
          ++count;
          ASSERT_TRUE(theorem1_conditions(lift(s, FieldAutomorphism(f, 0)), cat).all());
        }
  EXPECT_EQ(count, 576);
}

TEST(Collineation, NegativeControlsQ2) {
  // Random invertible matrices; those fixing J and H must still be ternion maps.
  const auto& cat = catalog(2);
  const Field& f = cat.field();
  Rng rng(42);
  int admissible = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto m = rng.invertible(f, 6);
    if (block6_pattern(m)) continue;
    const auto map = SemilinearMap::linear(m);
    const auto c = theorem1_conditions(map, cat);
    EXPECT_EQ(c.all(), c.any()) << "conditions disagree";
    if (!c.all()) continue;
    ++admissible;
    EXPECT_TRUE(round_trip(decompose_semilinear(map, cat), map));
  }
  EXPECT_LT(admissible, 20);
}

TEST(Collineation, ExtractSigma) {
  const Field& f = Field::of_order(9);
  for (const auto& sigma : f.automorphisms()) {
    const auto map = SemilinearMap(Matrix::identity(f, 6), sigma);
    EXPECT_EQ(extract_sigma(map), sigma);
  }
}
