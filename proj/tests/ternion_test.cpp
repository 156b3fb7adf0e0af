#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tern/ternion.hpp"

using namespace tern;

namespace {

std::vector<Ternion> all_ternions(const Field& f) {
  std::vector<Ternion> out;
  for (int x = 0; x < f.order(); ++x)
    for (int y = 0; y < f.order(); ++y)
      for (int z = 0; z < f.order(); ++z)
        out.emplace_back(f, static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z));
  return out;
}

// All 2x2 matrices over T for q = 2 (2^12 of them), via the 12 scalar entries.
template <typename Fn>
void for_all_matrices_q(const Field& f, Fn&& fn) {
  const auto ts = all_ternions(f);
  for (const auto& a : ts)
    for (const auto& b : ts)
      for (const auto& c : ts)
        for (const auto& d : ts) fn(TernionMatrix2(a, b, c, d));
}

TernionMatrix2 random_matrix(const Field& f, std::mt19937_64& rng) {
  auto e = [&] { return static_cast<Elem>(rng() % f.order()); };
  auto t = [&] { return Ternion(f, e(), e(), e()); };
  return {t(), t(), t(), t()};
}

}  // namespace

TEST(Ternion, Products) {
  const Field& f = Field::get(2);
  const Ternion t(f, 1, 1, 0);
  EXPECT_EQ(Ternion::one(f) * t, t);
  EXPECT_EQ(Ternion(f, 1, 1, 1).inverse(), Ternion(f, 1, 1, 1));
  EXPECT_TRUE((Ternion::e12(f) * Ternion::e12(f)).is_zero());
  EXPECT_THROW(Ternion::e12(f).inverse(), std::domain_error);
}

TEST(Ternion, NonCommutative) {
  for (int q : {2, 3, 4, 5}) {
    const Field& f = Field::of_order(q);
    EXPECT_EQ(Ternion::e11(f) * Ternion::e12(f), Ternion::e12(f));
    EXPECT_TRUE((Ternion::e12(f) * Ternion::e11(f)).is_zero());
  }
}

TEST(Ternion, RingAxiomsAndInverses) {
  for (int q : {2, 3}) {
    const Field& f = Field::of_order(q);
    const auto ts = all_ternions(f);
    for (const auto& s : ts) {
      if (s.is_unit()) {
        EXPECT_EQ(s * s.inverse(), Ternion::one(f));
        EXPECT_EQ(s.inverse() * s, Ternion::one(f));
      }
      for (const auto& t : ts)
        for (const auto& u : ts) {
          EXPECT_EQ((s * t) * u, s * (t * u));
          EXPECT_EQ(s * (t + u), s * t + s * u);
        }
    }
  }
}

TEST(Ternion, CentreIsScalars) {
  for (int q : {2, 3}) {
    const Field& f = Field::of_order(q);
    const auto ts = all_ternions(f);
    for (const auto& s : ts) {
      bool commutes = true;
      for (const auto& t : ts) commutes = commutes && (s * t == t * s);
      EXPECT_EQ(commutes, s.is_central());
    }
  }
}

TEST(RingMap, Antiautomorphism) {
  const Field& f = Field::get(3);
  const auto iota = RingMap::antiautomorphism();
  EXPECT_EQ(iota(Ternion(f, 1, 0, 0)), Ternion(f, 0, 0, 1));
  EXPECT_TRUE(iota.is_anti());
  for (int q : {2, 3}) {
    const Field& g = Field::of_order(q);
    const auto ts = all_ternions(g);
    for (const auto& s : ts) {
      EXPECT_EQ(iota(iota(s)), s);
      for (const auto& t : ts) EXPECT_EQ(iota(s * t), iota(t) * iota(s));
    }
  }
}

TEST(RingMap, InnerAndFieldAutomorphisms) {
  const Field& f2 = Field::get(2);
  const Ternion u(f2, 1, 1, 1);
  EXPECT_EQ(apply_ring_map(RingMap::inner(u), Ternion::e12(f2)), Ternion::e12(f2));
  EXPECT_THROW(RingMap::inner(Ternion::e11(f2)), std::domain_error);

  const Field& f4 = Field::of_order(4);
  const auto ts = all_ternions(f4);
  const RingMap m = RingMap::field_automorphism(f4.automorphisms()[1]).then_inner(Ternion(f4, 2, 3, 1));
  EXPECT_FALSE(m.is_anti());
  for (const auto& s : ts)
    for (const auto& t : ts) {
      EXPECT_EQ(m(s * t), m(s) * m(t));
      EXPECT_EQ(m(s + t), m(s) + m(t));
    }
}

TEST(TernionMatrix2, Block4Layout) {
  const Field& f = Field::get(3);
  const TernionMatrix2 s(Ternion(f, 1, 2, 0), Ternion(f, 2, 1, 1), Ternion(f, 0, 1, 2), Ternion(f, 1, 1, 1));
  const Matrix m = s.block4();
  EXPECT_EQ(m(1, 0), 0);
  EXPECT_EQ(m(1, 2), 0);
  EXPECT_EQ(m(3, 0), 0);
  EXPECT_EQ(m(3, 2), 0);
  EXPECT_EQ(TernionMatrix2::from_block4(m), s);
  Matrix bad = m;
  bad(3, 0) = 1;
  EXPECT_THROW(TernionMatrix2::from_block4(bad), std::invalid_argument);
}

TEST(TernionMatrix2, DeterminantExamples) {
  const Field& f = Field::get(2);
  EXPECT_TRUE(TernionMatrix2::identity(f).is_invertible());
  EXPECT_EQ(TernionMatrix2::identity(f).det(), 1);
  const TernionMatrix2 s(Ternion(f, 0, 1, 1), Ternion(f, 1, 0, 0), Ternion::zero(f), Ternion(f, 1, 0, 1));
  EXPECT_EQ(s.det_factors().first, 1);
  EXPECT_EQ(s.det_factors().second, 0);
  EXPECT_FALSE(s.is_invertible());
  EXPECT_EQ(oracle::leibniz_det(s.block4()), 0);
}

TEST(TernionMatrix2, DeterminantAgreesWithLeibnizExhaustiveQ2) {
  const Field& f = Field::get(2);
  std::size_t invertible = 0;
  for_all_matrices_q(f, [&](const TernionMatrix2& s) {
    const Elem det = oracle::leibniz_det(s.block4());
    EXPECT_EQ(s.det(), det);
    EXPECT_EQ(s.is_invertible(), s.block4().rank() == 4);
    if (s.is_invertible()) {
      ++invertible;
      const auto inv = s.inverse();
      EXPECT_EQ(s * inv, TernionMatrix2::identity(f));
      EXPECT_EQ(inv * s, TernionMatrix2::identity(f));
    }
  });
  // ((q^2-1)(q^2-q))^2 q^4 at q = 2
  EXPECT_EQ(invertible, 576u);
}

TEST(TernionMatrix2, GroupOrderQ3) {
  const Field& f = Field::get(3);
  std::size_t invertible = 0;
  for_all_matrices_q(f, [&](const TernionMatrix2& s) { invertible += s.is_invertible() ? 1 : 0; });
  EXPECT_EQ(invertible, 186624u);  // (8 * 6)^2 * 81
}

TEST(TernionMatrix2, DeterminantSampled) {
  std::mt19937_64 rng(11);
  for (int q : {3, 4, 5}) {
    const Field& f = Field::of_order(q);
    for (int i = 0; i < 10000; ++i) {
      const auto s = random_matrix(f, rng);
      ASSERT_EQ(s.det(), oracle::leibniz_det(s.block4()));
      ASSERT_EQ(s.is_invertible(), s.block4().rank() == 4);
    }
  }
}

TEST(TernionMatrix2, InverseOfDiagonal) {
  const Field& f = Field::get(5);
  const Ternion u(f, 2, 3, 4), v(f, 3, 0, 1);
  EXPECT_EQ(TernionMatrix2::diagonal(u, v).inverse(), TernionMatrix2::diagonal(u.inverse(), v.inverse()));
  EXPECT_EQ(TernionMatrix2::identity(f).inverse(), TernionMatrix2::identity(f));
  const TernionMatrix2 singular(Ternion::e12(f), Ternion::zero(f), Ternion::zero(f), Ternion::one(f));
  EXPECT_THROW(singular.inverse(), std::domain_error);
}

TEST(ActRight, Examples) {
  const Field& f = Field::get(3);
  std::mt19937_64 rng(5);
  const auto s = random_matrix(f, rng);
  const auto t = random_matrix(f, rng);
  const TernionPair v{Ternion(f, 1, 2, 0), Ternion(f, 2, 2, 1)};
  EXPECT_EQ(act_right(v, TernionMatrix2::identity(f)), v);
  const TernionPair e1{Ternion::one(f), Ternion::zero(f)};
  EXPECT_EQ(act_right(e1, s), (TernionPair{s.a(), s.b()}));
  EXPECT_EQ(act_right(act_right(v, s), t), act_right(v, s * t));
}

TEST(ActRight, YGeneratorGeneralForm) {
  // (E22, E12) S = ((0, c22, a22), (0, d22, b22))
  const Field& f = Field::get(3);
  std::mt19937_64 rng(9);
  const TernionPair y0{Ternion::e22(f), Ternion::e12(f)};
  for (int i = 0; i < 200; ++i) {
    const auto s = random_matrix(f, rng);
    const auto w = act_right(y0, s);
    EXPECT_EQ(w.a.x(), 0);
    EXPECT_EQ(w.b.x(), 0);
    EXPECT_EQ(w.a.z(), s.a().z());
    EXPECT_EQ(w.b.z(), s.b().z());
    EXPECT_EQ(w.a.y(), s.c().z());
    EXPECT_EQ(w.b.y(), s.d().z());
  }
}
