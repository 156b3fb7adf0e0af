#pragma once

/**
 * @file model.hpp
 * @brief The plane model of the projective line over T inside PG(5, q).
 *
 * Coordinates: Phi sends ((a11, a12, a22), (b11, b12, b22)) to
 * (x1, ..., x6) = (a11, a12, a22, b11, b12, b22). Code uses 0-based indices,
 * so x1 is index 0.
 *
 *   J : x3 = x6 = 0                 (solid)
 *   K : x1 = x4 = 0                 (solid)
 *   L : x1 = x3 = x4 = x6 = 0       (line, L = J meet K)
 *   H : x2 x6 - x3 x5 = 0 inside K  (hyperbolic quadric)
 *
 * The two reguli of H are the lines meeting L other than L itself (the
 * alpha regulus) and the family containing L (the opposite regulus).
 */

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tern/gf.hpp"
#include "tern/linalg.hpp"
#include "tern/matrix.hpp"
#include "tern/ternion.hpp"

namespace tern {

enum class SubmoduleType { Zero, X, Y, Alpha, Beta, Gamma };

inline constexpr std::array<SubmoduleType, 5> kNonzeroTypes = {SubmoduleType::X, SubmoduleType::Y,
                                                               SubmoduleType::Alpha, SubmoduleType::Beta,
                                                               SubmoduleType::Gamma};

inline std::string_view type_name(SubmoduleType t) {
  switch (t) {
    case SubmoduleType::Zero: return "zero";
    case SubmoduleType::X: return "X";
    case SubmoduleType::Y: return "Y";
    case SubmoduleType::Alpha: return "alpha";
    case SubmoduleType::Beta: return "beta";
    case SubmoduleType::Gamma: return "gamma";
  }
  return "?";
}

/// CLI set tag: gx, gy, galpha, gbeta, ggamma.
inline std::string_view set_tag(SubmoduleType t) {
  switch (t) {
    case SubmoduleType::X: return "gx";
    case SubmoduleType::Y: return "gy";
    case SubmoduleType::Alpha: return "galpha";
    case SubmoduleType::Beta: return "gbeta";
    case SubmoduleType::Gamma: return "ggamma";
    default: return "zero";
  }
}

inline int type_index(SubmoduleType t) { return static_cast<int>(t) - 1; }

// --- Phi --------------------------------------------------------------------

inline Vec phi(const TernionPair& v) {
  return {v.a.x(), v.a.y(), v.a.z(), v.b.x(), v.b.y(), v.b.z()};
}

inline TernionPair phi_inverse(const Field& f, const Vec& w) {
  if (w.size() != 6) throw std::invalid_argument("phi_inverse expects a vector of length 6");
  return {Ternion(f, w[0], w[1], w[2]), Ternion(f, w[3], w[4], w[5])};
}

/// All q^6 pairs in lexicographic order of their Phi coordinates.
inline std::vector<TernionPair> all_pairs(const Field& f) {
  const int q = f.order();
  std::vector<TernionPair> out;
  out.reserve(static_cast<std::size_t>(q) * q * q * q * q * q);
  Vec w(6, 0);
  while (true) {
    out.push_back(phi_inverse(f, w));
    int i = 5;
    while (i >= 0 && w[i] == q - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

/// The 6x6 matrix of v -> v S under Phi:
///
///   a11 a12  0  b11 b12  0
///    0  a22  0   0  b22  0
///    0   0  a22  0   0  b22
///   c11 c12  0  d11 d12  0
///    0  c22  0   0  d22  0
///    0   0  c22  0   0  d22
inline Matrix block6_matrix(const TernionMatrix2& s) {
  Matrix m(s.field(), 6, 6);
  auto put = [&m](int r, int c, const Ternion& t) {
    m(r, c) = t.x();
    m(r, c + 1) = t.y();
    m(r + 1, c + 1) = t.z();
    m(r + 2, c + 2) = t.z();
  };
  put(0, 0, s.a());
  put(0, 3, s.b());
  put(3, 0, s.c());
  put(3, 3, s.d());
  return m;
}

inline SemilinearMap block6_lift(const TernionMatrix2& s) {
  if (!s.is_invertible()) throw std::domain_error("block6_lift: matrix over T is singular");
  return SemilinearMap::linear(block6_matrix(s));
}

/// Recovers S from a 6x6 matrix with the block-6 pattern, or nullopt if any
/// entry of the pattern is violated.
inline std::optional<TernionMatrix2> block6_pattern(const Matrix& m) {
  if (m.rows() != 6 || m.cols() != 6) return std::nullopt;
  const Field& f = m.field();
  TernionMatrix2 s(Ternion(f, m(0, 0), m(0, 1), m(1, 1)), Ternion(f, m(0, 3), m(0, 4), m(1, 4)),
                   Ternion(f, m(3, 0), m(3, 1), m(4, 1)), Ternion(f, m(3, 3), m(3, 4), m(4, 4)));
  if (block6_matrix(s) != m) return std::nullopt;
  return s;
}

// --- cyclic submodules -------------------------------------------------------

/// Phi of the submodule T(a, b): the span of Phi(E11 v), Phi(E12 v), Phi(E22 v).
inline Subspace cyclic_span(const TernionPair& v) {
  const Field& f = v.field();
  return Subspace::span(f, 6,
                        {phi(left_multiply(Ternion::e11(f), v)), phi(left_multiply(Ternion::e12(f), v)),
                         phi(left_multiply(Ternion::e22(f), v))});
}

/// Decision tree on the generator coordinates.
inline SubmoduleType classify(const TernionPair& v) {
  const Field& f = v.field();
  const bool diag11 = v.a.x() != 0 || v.b.x() != 0;
  const bool diag22 = v.a.z() != 0 || v.b.z() != 0;
  const bool corner = v.a.y() != 0 || v.b.y() != 0;
  if (!diag11 && !diag22 && !corner) return SubmoduleType::Zero;
  if (!diag22) return diag11 ? SubmoduleType::Beta : SubmoduleType::Gamma;
  if (diag11) return SubmoduleType::X;
  const Elem minor = f.sub(f.mul(v.a.z(), v.b.y()), f.mul(v.b.z(), v.a.y()));
  return minor != 0 ? SubmoduleType::Y : SubmoduleType::Alpha;
}

struct Flats {
  Subspace j;
  Subspace k;
  Subspace l;
};

inline Flats distinguished_flats(const Field& f) {
  return {Subspace::coordinate(f, 6, {0, 1, 3, 4}), Subspace::coordinate(f, 6, {1, 2, 4, 5}),
          Subspace::coordinate(f, 6, {1, 4})};
}

/// Rank and containment classifier, used as a cross-check of classify.
inline SubmoduleType classify_by_rank(const TernionPair& v, const Flats& flats) {
  const Subspace s = cyclic_span(v);
  switch (s.dim()) {
    case 0: return SubmoduleType::Zero;
    case 1: return flats.l.contains(s) ? SubmoduleType::Gamma : SubmoduleType::Beta;
    case 2: return SubmoduleType::Alpha;
    case 3: return flats.k.contains(s) ? SubmoduleType::Y : SubmoduleType::X;
    default: throw std::logic_error("cyclic submodule of dimension > 3");
  }
}

/// True iff a x + b y = 1 has a solution x, y in T.
inline bool is_unimodular(const TernionPair& v) {
  const Field& f = v.field();
  const std::array basis = {Ternion::e11(f), Ternion::e12(f), Ternion::e22(f)};
  std::vector<Vec> image;
  for (const auto& e : basis) {
    const Ternion s = v.a * e;
    const Ternion t = v.b * e;
    image.push_back({s.x(), s.y(), s.z()});
    image.push_back({t.x(), t.y(), t.z()});
  }
  return Subspace::span(f, 3, image).contains(Vec{1, 0, 1});
}

// --- the quadric H -------------------------------------------------------------

inline bool on_quadric(const Field& f, const Vec& w) {
  return w[0] == 0 && w[3] == 0 && f.mul(w[1], w[5]) == f.mul(w[2], w[4]);
}

struct Quadric {
  std::vector<Subspace> points;
  std::vector<Subspace> regulus_alpha;
  std::vector<Subspace> regulus_opposite;
};

/// Points and lines of H by enumeration inside K, lines split into the two
/// reguli by the meet relation with L.
inline Quadric hyperbolic_quadric(const Field& f, const Flats& flats) {
  Quadric h;
  for (const auto& p : flats.k.points())
    if (on_quadric(f, p.row(0))) h.points.push_back(p);
  std::sort(h.points.begin(), h.points.end());

  const std::array<int, 4> kcoords = {1, 2, 4, 5};
  for_each_subspace(f, 4, 2, [&](const Subspace& line4) {
    std::vector<Vec> rows;
    for (const auto& r : line4.rows()) {
      Vec w(6, 0);
      for (int i = 0; i < 4; ++i) w[kcoords[i]] = r[i];
      rows.push_back(std::move(w));
    }
    Subspace line = Subspace::span(f, 6, rows);
    for (const auto& p : line.points())
      if (!on_quadric(f, p.row(0))) return;
    if (line == flats.l) {
      h.regulus_opposite.push_back(line);
    } else if (meet_dim(line, flats.l) == 1) {
      h.regulus_alpha.push_back(line);
    } else {
      h.regulus_opposite.push_back(line);
    }
  });
  std::sort(h.regulus_alpha.begin(), h.regulus_alpha.end());
  std::sort(h.regulus_opposite.begin(), h.regulus_opposite.end());
  return h;
}

/// span{(0,a,0,0,b,0), (0,0,a,0,0,b)} for (a:b) in PG(1,q).
inline std::vector<Subspace> regulus_alpha_parametric(const Field& f) {
  std::vector<Subspace> out;
  for_each_subspace(f, 2, 1, [&](const Subspace& ab) {
    const Elem a = ab.row(0)[0];
    const Elem b = ab.row(0)[1];
    out.push_back(Subspace::span(f, 6, {{0, a, 0, 0, b, 0}, {0, 0, a, 0, 0, b}}));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// The opposite line through (s:t): span{(0,s,t,0,0,0), (0,0,0,0,s,t)}.
inline Subspace opposite_line(const Field& f, Elem s, Elem t) {
  return Subspace::span(f, 6, {{0, s, t, 0, 0, 0}, {0, 0, 0, 0, s, t}});
}

// --- line model in PG(3, q) ------------------------------------------------------

/// J coordinates (x1, x2, x4, x5) of a vector of J.
inline Vec j_coordinates(const Vec& w) { return {w[0], w[1], w[3], w[4]}; }
inline Vec embed_j(const Vec& u) { return {u[0], u[1], 0, u[2], u[3], 0}; }

inline Subspace project_j(const Subspace& s) {
  std::vector<Vec> rows;
  for (const auto& r : s.rows()) rows.push_back(j_coordinates(r));
  return Subspace::span(s.field(), 4, rows);
}
inline Subspace embed_j(const Subspace& s) {
  std::vector<Vec> rows;
  for (const auto& r : s.rows()) rows.push_back(embed_j(r));
  return Subspace::span(s.field(), 6, rows);
}

/// The axis span{(0,1,0,0), (0,0,0,1)} of the special linear complex.
inline Subspace line_model_axis(const Field& f) { return Subspace::span(f, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}}); }

/// Image of a unimodular point under U = F^2: the line spanned by
/// (a11, a12, b11, b12) and (0, a22, 0, b22).
inline Subspace line_model(const TernionPair& v) {
  if (classify(v) != SubmoduleType::X) throw std::invalid_argument("line_model: generator is not unimodular");
  return Subspace::span(v.field(), 4, {{v.a.x(), v.a.y(), v.b.x(), v.b.y()}, {0, v.a.z(), 0, v.b.z()}});
}

// --- catalog -----------------------------------------------------------------------

class Catalog;
inline Catalog build_catalog(const Field& f, std::uint64_t budget = enumeration_budget());

struct CatalogEntry {
  Subspace span;
  TernionPair witness;  // lexicographically least generator
};

class Catalog {
 public:
  struct Locator {
    SubmoduleType type;
    int position;
  };

  const Field& field() const { return *field_; }
  int q() const { return field_->order(); }
  const Flats& flats() const { return flats_; }
  const Quadric& quadric() const { return quadric_; }

  const std::vector<CatalogEntry>& entries(SubmoduleType t) const { return sets_.at(type_index(t)); }
  std::vector<Subspace> spans(SubmoduleType t) const {
    std::vector<Subspace> out;
    for (const auto& e : entries(t)) out.push_back(e.span);
    return out;
  }
  std::size_t count(SubmoduleType t) const { return entries(t).size(); }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& s : sets_) n += s.size();
    return n;
  }
  const Subspace& at(Locator loc) const { return entries(loc.type).at(loc.position).span; }

  std::optional<Locator> locate(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Subspace& s) const { return index_.count(s) > 0; }
  std::optional<SubmoduleType> type_of(const Subspace& s) const {
    auto loc = locate(s);
    if (!loc) return std::nullopt;
    return loc->type;
  }

  /// Generator pairs that produced each span, per type (with multiplicity).
  std::size_t generators_scanned() const { return generators_scanned_; }

  friend Catalog build_catalog(const Field& f, std::uint64_t budget);

 private:
  explicit Catalog(const Field& f) : field_(&f), flats_(distinguished_flats(f)), quadric_() {}

  const Field* field_;
  Flats flats_;
  Quadric quadric_;
  std::array<std::vector<CatalogEntry>, 5> sets_;
  std::map<Subspace, Locator> index_;
  std::size_t generators_scanned_ = 0;
};

/// Enumerates all q^6 generators, classifies them and deduplicates the spans.
inline Catalog build_catalog(const Field& f, std::uint64_t budget) {
  std::uint64_t q6 = 1;
  for (int i = 0; i < 6; ++i) q6 *= static_cast<std::uint64_t>(f.order());
  if (q6 > budget)
    throw BudgetExceeded("catalog needs " + std::to_string(q6) + " generators; budget is " + std::to_string(budget));

  Catalog cat(f);
  cat.quadric_ = hyperbolic_quadric(f, cat.flats_);
  std::map<Subspace, std::pair<SubmoduleType, TernionPair>> seen;
  for (const auto& v : all_pairs(f)) {
    ++cat.generators_scanned_;
    const auto t = classify(v);
    if (t == SubmoduleType::Zero) continue;
    Subspace s = cyclic_span(v);
    auto [it, inserted] = seen.try_emplace(std::move(s), t, v);
    if (!inserted && it->second.first != t) throw std::logic_error("one subspace classified with two types");
  }
  for (auto& [s, tv] : seen) {
    auto& list = cat.sets_[type_index(tv.first)];
    cat.index_.emplace(s, Catalog::Locator{tv.first, static_cast<int>(list.size())});
    list.push_back({s, tv.second});
  }
  return cat;
}

/// All free planes: the X planes followed by the Y planes.
inline std::vector<Subspace> free_planes(const Catalog& cat) {
  auto out = cat.spans(SubmoduleType::X);
  for (auto& s : cat.spans(SubmoduleType::Y)) out.push_back(std::move(s));
  return out;
}

/// Closed-form set sizes: q(q+1)^2, q+1, q+1, q^3+q^2, q+1.
inline std::array<std::uint64_t, 5> expected_counts(std::uint64_t q) {
  return {q * (q + 1) * (q + 1), q + 1, q + 1, q * q * q + q * q, q + 1};
}

// --- independent geometric description ------------------------------------------------

enum class PlaneScan { Full, Targeted };

struct GeometricSets {
  std::vector<Subspace> x, y, alpha, beta, gamma;
};

/// True iff M meets J in a line other than L and K in a line of the alpha regulus.
inline bool satisfies_x_conditions(const Subspace& m, const Flats& flats, const std::vector<Subspace>& regulus_alpha) {
  const Subspace mj = meet(m, flats.j);
  if (mj.dim() != 2 || mj == flats.l) return false;
  const Subspace mk = meet(m, flats.k);
  if (mk.dim() != 2) return false;
  return std::binary_search(regulus_alpha.begin(), regulus_alpha.end(), mk);
}

/// The five sets described purely geometrically: points of L, points of J off
/// L, the alpha regulus, the pencil [L, K]_3, and the planes meeting J and K
/// as required. The X planes come from a scan of all planes (Full) or of the
/// planes through the alpha lines (Targeted).
inline GeometricSets characterize_geometrically(const Field& f, const Flats& flats, const Quadric& h, PlaneScan scan,
                                                std::uint64_t budget = enumeration_budget()) {
  GeometricSets g;
  g.gamma = flats.l.points();
  for (auto& p : flats.j.points())
    if (!flats.l.contains(p)) g.beta.push_back(std::move(p));
  g.alpha = h.regulus_alpha;
  g.y = pencil(flats.l, flats.k, 3);
  if (scan == PlaneScan::Full) {
    check_budget(gaussian_binomial(6, 3, f.order()), budget, "full plane scan");
    for_each_subspace(f, 6, 3, [&](const Subspace& m) {
      if (satisfies_x_conditions(m, flats, h.regulus_alpha)) g.x.push_back(m);
    });
  } else {
    const Subspace whole = Subspace::whole(f, 6);
    for (const auto& p : h.regulus_alpha)
      for (auto& m : pencil(p, whole, 3))
        if (satisfies_x_conditions(m, flats, h.regulus_alpha)) g.x.push_back(std::move(m));
  }
  for (auto* v : {&g.x, &g.y, &g.alpha, &g.beta, &g.gamma}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return g;
}

}  // namespace tern
