#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tern/xi.hpp"

using namespace tern;

namespace {

const Catalog& catalog(int q) {
  static std::map<int, Catalog> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build_catalog(Field::of_order(q))).first;
  return it->second;
}

}  // namespace

TEST(Xi, CorrelationMatchesPlaneEquation) {
  const Field& f = Field::of_order(3);
  const auto delta = j_correlation(f);
  for (const auto& p : oracle::all_vectors(f, 4)) {
    if (is_zero(p)) continue;
    const Subspace image = delta(Subspace::span(f, 4, {p}));
    ASSERT_EQ(image.dim(), 3);
    for (const auto& w : oracle::all_vectors(f, 4)) {
      const Elem lhs = f.add(f.add(f.mul(p[1], w[0]), f.mul(p[0], w[1])), f.add(f.mul(p[3], w[2]), f.mul(p[2], w[3])));
      EXPECT_EQ(image.contains(w), lhs == 0);
    }
  }
}

TEST(Xi, CorrelationFixesAxisAndIsInvolutory) {
  const Field& f = Field::of_order(4);
  const auto delta = j_correlation(f);
  EXPECT_EQ(delta(line_model_axis(f)), line_model_axis(f));
  for (const auto& l : enumerate_subspaces(f, 4, 2)) EXPECT_EQ(delta(delta(l)), l);
}

TEST(Xi, TraceDeterminesPlane) {
  for (int q : {2, 3, 4}) {
    const auto& cat = catalog(q);
    for (const auto& e : cat.entries(SubmoduleType::X)) {
      const Subspace t = j_trace(e.span, cat);
      EXPECT_EQ(t.dim(), 2);
      EXPECT_EQ(meet_dim(t, cat.flats().l), 1);
      EXPECT_EQ(from_j_trace(t, cat), e.span);
    }
    EXPECT_THROW(from_j_trace(cat.flats().l, cat), std::logic_error);
  }
}

TEST(Xi, PermutationAndInvolution) {
  for (int q : {2, 3}) {
    const auto& cat = catalog(q);
    const auto perm = xi_permutation(cat);
    ASSERT_EQ(perm.size(), static_cast<std::size_t>(q * (q + 1) * (q + 1)));
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], static_cast<int>(i));
    for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_EQ(perm[perm[i]], static_cast<int>(i));
  }
  const auto& cat = catalog(2);
  EXPECT_THROW(xi(cat.entries(SubmoduleType::Y)[0].span, cat), std::invalid_argument);
}

TEST(Xi, BreaksAdjacencyKeepsSkewness) {
  for (int q : {2, 3}) {
    const auto& cat = catalog(q);
    const auto r = xi_witnesses(cat);
    EXPECT_TRUE(r.is_permutation);
    EXPECT_GT(r.adjacency_broken, 0u);
    EXPECT_GT(r.skew_pairs, 0u);
    EXPECT_EQ(r.skew_mismatches, 0u);
    EXPECT_TRUE(r.point_iff_traces_span);
    ASSERT_TRUE(r.witness);
    const auto& w = *r.witness;
    const auto& xs = cat.entries(SubmoduleType::X);
    EXPECT_EQ(meet(xs[w.m1].span, xs[w.m2].span), w.common_line);
    EXPECT_EQ(cat.type_of(w.common_line), SubmoduleType::Alpha);
    EXPECT_EQ(w.image_meet.dim(), 1);
    EXPECT_EQ(cat.type_of(w.image_meet), SubmoduleType::Beta);
    EXPECT_EQ(meet(xi(xs[w.m1].span, cat), xi(xs[w.m2].span, cat)), w.image_meet);
    EXPECT_TRUE(w.j_traces_span_j);
  }
}

TEST(Xi, RestrictedRows) {
  const auto& cat = catalog(3);
  const auto full = xi_witnesses(cat);
  const auto part = xi_witnesses(cat, std::vector<int>{0, 1, 2});
  EXPECT_LT(part.skew_checked, full.skew_checked);
  EXPECT_EQ(part.skew_mismatches, 0u);
}
