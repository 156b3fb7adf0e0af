#pragma once

/**
 * @file collineation.hpp
 * @brief Semilinear maps of F^6 coming from semilinear maps of T^2, the
 * three invariance conditions on them, and the factorisation of a map that
 * fixes J and H back into a semilinear map of T^2.
 */

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tern/model.hpp"

namespace tern {

/// Matrix of v -> Phi(u Phi^-1(v)).
inline Matrix left_multiplication_matrix(const Ternion& u) {
  const Field& f = u.field();
  std::vector<Vec> rows;
  for (int i = 0; i < 6; ++i) {
    Vec e(6, 0);
    e[i] = 1;
    rows.push_back(phi(left_multiply(u, phi_inverse(f, e))));
  }
  return Matrix::from_rows(f, 6, rows);
}

inline TernionPair apply_pair(const FieldAutomorphism& sigma, const TernionPair& v) {
  return {v.a.apply(sigma), v.b.apply(sigma)};
}

/**
 * v -> (u sigma(v)) S with u a unit and S in GL_2(T). Together with the
 * inner automorphism t -> u t u^-1 this covers every semilinear bijection of
 * T^2 (the right factor u^-1 is absorbed into S).
 */
struct TernionSemilinear {
  Ternion unit;
  FieldAutomorphism sigma;
  TernionMatrix2 s;

  TernionPair operator()(const TernionPair& v) const { return act_right(left_multiply(unit, apply_pair(sigma, v)), s); }

  /// The map f of F^6 with Phi o g = f o Phi.
  SemilinearMap lift() const { return {left_multiplication_matrix(unit) * block6_matrix(s), sigma}; }
};

inline SemilinearMap lift(const TernionMatrix2& s, const FieldAutomorphism& sigma) {
  return {block6_matrix(s), sigma};
}

struct Theorem1Conditions {
  bool free_planes_fixed = false;  // f(X u Y) = X u Y
  bool x_planes_fixed = false;     // f(X) = X
  bool j_and_h_fixed = false;      // f(J) = J and f(H) = H
  bool all() const { return free_planes_fixed && x_planes_fixed && j_and_h_fixed; }
  bool any() const { return free_planes_fixed || x_planes_fixed || j_and_h_fixed; }
};

/// f(H) = H as point sets: f is injective on points, so inclusion suffices.
inline bool fixes_quadric(const SemilinearMap& f, const Catalog& cat) {
  for (const auto& p : cat.quadric().points)
    if (!on_quadric(cat.field(), f(p.row(0)))) return false;
  return true;
}

inline bool fixes_j_and_h(const SemilinearMap& f, const Catalog& cat) {
  return f(cat.flats().j) == cat.flats().j && fixes_quadric(f, cat);
}

/// Images of finitely many planes under an injective map; inclusion is equality.
inline bool maps_into(const SemilinearMap& f, const Catalog& cat, SubmoduleType from, bool allow_y) {
  for (const auto& e : cat.entries(from)) {
    const auto t = cat.type_of(f(e.span));
    if (!t || !(*t == SubmoduleType::X || (allow_y && *t == SubmoduleType::Y))) return false;
  }
  return true;
}

/// Evaluates all three conditions; with stop_early the first failure ends the
/// evaluation and the remaining conditions stay false.
inline Theorem1Conditions theorem1_conditions(const SemilinearMap& f, const Catalog& cat, bool stop_early = false) {
  Theorem1Conditions c;
  c.j_and_h_fixed = fixes_j_and_h(f, cat);
  if (stop_early && !c.j_and_h_fixed) return c;
  c.x_planes_fixed = maps_into(f, cat, SubmoduleType::X, false);
  if (stop_early && !c.x_planes_fixed) return c;
  c.free_planes_fixed = maps_into(f, cat, SubmoduleType::X, true) && maps_into(f, cat, SubmoduleType::Y, true);
  return c;
}

/// The automorphism accompanying f, read off from f(c e_i) = sigma(c) f(e_i)
/// with c primitive.
inline FieldAutomorphism extract_sigma(const SemilinearMap& f) {
  const Field& field = f.field();
  const Elem c = field.primitive();
  Vec e(f.dim(), 0);
  e[0] = 1;
  const Vec fe = f(e);
  Vec ce = e;
  ce[0] = c;
  const Vec fce = f(ce);
  for (std::size_t i = 0; i < fe.size(); ++i) {
    if (fe[i] == 0) continue;
    const Elem image = field.div(fce[i], fe[i]);
    for (const auto& sigma : field.automorphisms())
      if (sigma(c) == image) return sigma;
    break;
  }
  throw std::logic_error("extract_sigma: map is not semilinear");
}

/// f = f3 o f2 o f1 with f1 entrywise sigma, f2 = diag(1, G, 1, G) for
/// G = [[1, 0], [a, b]], and f3 of block form for S; g = g3 o g2 o g1.
struct Decomposition {
  FieldAutomorphism sigma;
  Elem a;
  Elem b;
  SemilinearMap f1;
  SemilinearMap f2;
  SemilinearMap f3;
  TernionMatrix2 s;

  Ternion g_transpose() const { return {s.a().field(), 1, a, b}; }
  TernionPair g(const TernionPair& v) const {
    return act_right(left_multiply(g_transpose(), apply_pair(sigma, v)), s);
  }
};

inline Matrix diag_1g1g(const Field& f, Elem a, Elem b) {
  Matrix m = Matrix::identity(f, 6);
  for (int base : {0, 3}) {
    m(base + 2, base + 1) = a;
    m(base + 2, base + 2) = b;
  }
  return m;
}

/// Affine parameter s/t of an opposite-regulus line (s : t), read from its
/// (x2, x3) coordinates. nullopt for t = 0, which is L itself.
inline std::optional<Elem> opposite_parameter(const Subspace& line) {
  const Field& f = line.field();
  for (const auto& row : line.rows()) {
    if (row[1] == 0 && row[2] == 0) continue;
    if (row[2] == 0) return std::nullopt;
    return f.div(row[1], row[2]);
  }
  throw std::invalid_argument("opposite_parameter: line has no (x2, x3) part");
}

inline Decomposition decompose_semilinear(const SemilinearMap& f, const Catalog& cat) {
  if (f.dim() != 6 || &f.field() != &cat.field()) throw std::invalid_argument("decompose: map does not act on F^6");
  if (!fixes_j_and_h(f, cat)) throw std::invalid_argument("decompose: map does not fix J and H");
  const Field& field = cat.field();
  const auto sigma = extract_sigma(f);
  const auto f1 = SemilinearMap::field_automorphism(sigma, 6);
  const auto h = f.after(f1.inverse());
  if (!h.sigma().is_identity()) throw std::logic_error("decompose: f after f1^-1 is not linear");

  const auto& opposite = cat.quadric().regulus_opposite;
  auto image_parameter = [&](Elem s) {
    const Subspace image = h(opposite_line(field, s, 1));
    if (!std::binary_search(opposite.begin(), opposite.end(), image))
      throw std::logic_error("decompose: opposite regulus is not preserved");
    const auto r = opposite_parameter(image);
    if (!r) throw std::logic_error("decompose: a finite opposite line went to L");
    return *r;
  };
  // (s : t) -> (s + a t : b t), so r -> (r + a) / b on affine parameters.
  const Elem r0 = image_parameter(0);
  const Elem r1 = image_parameter(1);
  const Elem b = field.inv(field.sub(r1, r0));
  const Elem a = field.mul(r0, b);
  const auto f2 = SemilinearMap::linear(diag_1g1g(field, a, b));
  const auto f3 = h.after(f2.inverse());
  const auto s = block6_pattern(f3.matrix());
  if (!s) throw std::logic_error("decompose: third factor lacks the block form");
  return {sigma, a, b, f1, f2, f3, *s};
}

/// Phi o g = f o Phi on every generator pair.
inline bool round_trip(const Decomposition& d, const SemilinearMap& f) {
  for (const auto& v : all_pairs(f.field()))
    if (phi(d.g(v)) != f(phi(v))) return false;
  return true;
}

}  // namespace tern
