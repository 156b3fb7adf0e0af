#include <gtest/gtest.h>

#include <set>

#include "tern/collineation.hpp"
#include "tern/preserver.hpp"

using namespace tern;

namespace {

struct Setup {
  Catalog cat;
  AdjacencyGraph g;
  CliqueFamily fam;
  explicit Setup(int q) : cat(build_catalog(Field::of_order(q))), g(cat), fam(clique_family(cat, g)) {}
};

const Setup& setup(int q) {
  static std::map<int, std::unique_ptr<Setup>> cache;
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<Setup>(q);
  return *slot;
}

}  // namespace

TEST(Preserver, IdentityRecipe) {
  const auto& s = setup(2);
  const auto lambda = build_preserver(identity_recipe(s.fam), s.fam, s.g);
  for (int v = 0; v < s.g.size(); ++v) EXPECT_EQ(lambda[v], v);
  EXPECT_TRUE(verify_preserver(lambda, s.g));
  EXPECT_TRUE(fixes_types(lambda, s.g));
}

TEST(Preserver, RandomRecipes) {
  for (int q : {2, 3}) {
    const auto& s = setup(q);
    Rng rng(1000 + q);
    std::set<std::vector<int>> distinct;
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = random_recipe(s.fam, rng);
      const auto lambda = build_preserver(r, s.fam, s.g);
      EXPECT_TRUE(verify_preserver(lambda, s.g));
      EXPECT_TRUE(fixes_types(lambda, s.g));
      const auto back = extract_recipe(lambda, s.fam, s.g, s.cat.flats().k);
      EXPECT_EQ(back.mu, r.mu);
      EXPECT_EQ(back.psi, r.psi);
      distinct.insert(lambda);
    }
    EXPECT_GT(distinct.size(), 90u);
  }
}

TEST(Preserver, RecipeValidation) {
  const auto& s = setup(2);
  auto r = identity_recipe(s.fam);
  // move the marked plane inside the first clique
  const int marked = detail::position_in(s.fam.by_alpha[0], s.fam.marked[0]);
  const int other = marked == 0 ? 1 : 0;
  std::swap(r.psi[0][marked], r.psi[0][other]);
  EXPECT_THROW(validate_recipe(r, s.fam), std::invalid_argument);

  auto bad_mu = identity_recipe(s.fam);
  bad_mu.mu[0] = bad_mu.mu[1];
  EXPECT_THROW(build_preserver(bad_mu, s.fam, s.g), std::invalid_argument);

  auto short_psi = identity_recipe(s.fam);
  short_psi.psi.pop_back();
  EXPECT_THROW(validate_recipe(short_psi, s.fam), std::invalid_argument);
}

TEST(Preserver, NonPreservers) {
  const auto& s = setup(2);
  std::vector<int> lambda(s.g.size());
  std::iota(lambda.begin(), lambda.end(), 0);
  // exchange an X plane with a non-adjacent X plane
  int far = -1;
  for (int v = 1; v < s.g.num_x() && far < 0; ++v)
    if (!s.g.adjacent(0, v)) far = v;
  ASSERT_GE(far, 0);
  std::swap(lambda[0], lambda[far]);
  EXPECT_FALSE(verify_preserver(lambda, s.g));
  std::vector<int> not_bijective(s.g.size(), 0);
  EXPECT_FALSE(verify_preserver(not_bijective, s.g));
}

TEST(Preserver, InducedByBlockMaps) {
  for (int q : {2, 3}) {
    const auto& s = setup(q);
    Rng rng(77 + q);
    for (int trial = 0; trial < 20; ++trial) {
      const TernionSemilinear t{Ternion(s.cat.field(), 1, rng.element(s.cat.field()), static_cast<Elem>(1 + rng.below(q - 1))),
                                rng.automorphism(s.cat.field()), rng.gl2(s.cat.field())};
      const auto lambda = induced_map(t.lift(), s.g);
      ASSERT_TRUE(lambda);
      EXPECT_TRUE(verify_preserver(*lambda, s.g));
      EXPECT_TRUE(fixes_types(*lambda, s.g));
      const auto r = extract_recipe(*lambda, s.fam, s.g, s.cat.flats().k);
      EXPECT_EQ(build_preserver(r, s.fam, s.g), *lambda);
    }
  }
}

TEST(Preserver, RecipesNeedNotPreserveCliqueLines) {
  // Planes of [P, P+J]_3 form a projective plane over F (quotient by P).
  // Maps induced by collineations keep its lines; random recipes usually do not.
  const auto& s = setup(2);
  const auto& clique = s.fam.by_alpha[0];
  auto collinear = [&](int a, int b, int c) {
    return join(join(s.g.vertex(a), s.g.vertex(b)), s.g.vertex(c)).dim() == 4;
  };
  Rng rng(5);
  int broken = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto lambda = build_preserver(random_recipe(s.fam, rng), s.fam, s.g);
    bool kept = true;
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        for (std::size_t k = j + 1; k < clique.size(); ++k)
          if (collinear(clique[i], clique[j], clique[k]) !=
              collinear(lambda[clique[i]], lambda[clique[j]], lambda[clique[k]]))
            kept = false;
    if (!kept) ++broken;
  }
  EXPECT_GT(broken, 25);

  Rng rng2(6);
  for (int trial = 0; trial < 10; ++trial) {
    const TernionSemilinear t{Ternion(s.cat.field(), 1, 0, 1), FieldAutomorphism(s.cat.field(), 0), rng2.gl2(s.cat.field())};
    const auto lambda = *induced_map(t.lift(), s.g);
    for (int a : clique)
      for (int b : clique)
        for (int c : clique)
          if (a < b && b < c) {
            EXPECT_EQ(collinear(a, b, c), collinear(lambda[a], lambda[b], lambda[c]));
          }
  }
}
