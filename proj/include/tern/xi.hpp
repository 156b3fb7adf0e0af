#pragma once

/**
 * @file xi.hpp
 * @brief The permutation xi of the X planes obtained from a correlation of
 * the solid J that fixes the axis L.
 *
 * An X plane M is determined by its J-trace M meet J, a line of J meeting L
 * in one point p (and different from L). The correlation of J below maps such
 * lines to lines of the same kind, and the trace is inverted by joining with
 * the alpha line through p.
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "tern/adjacency.hpp"

namespace tern {

/// Point (a, b, c, d) of J, in coordinates (x1, x2, x4, x5), goes to the
/// plane b X1 + a X2 + d X4 + c X5 = 0.
inline Correlation j_correlation(const Field& f) {
  Matrix m(f, 4, 4);
  m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = 1;
  return {m, FieldAutomorphism(f, 0)};
}

inline Subspace j_trace(const Subspace& m, const Catalog& cat) { return meet(m, cat.flats().j); }

/// The X plane with the given J-trace.
inline Subspace from_j_trace(const Subspace& trace, const Catalog& cat) {
  const Subspace p = meet(trace, cat.flats().l);
  if (p.dim() != 1 || trace.dim() != 2) throw std::logic_error("J-trace does not meet L in a point");
  const Vec v = p.row(0);  // (0, a, 0, 0, b, 0)
  const Subspace alpha = Subspace::span(cat.field(), 6, {v, Vec{0, 0, v[1], 0, 0, v[4]}});
  Subspace m = join(trace, alpha);
  if (cat.type_of(m) != SubmoduleType::X) throw std::logic_error("rebuilt plane is not of type X");
  return m;
}

inline Subspace xi(const Subspace& m, const Catalog& cat) {
  if (cat.type_of(m) != SubmoduleType::X) throw std::invalid_argument("xi: plane is not of type X");
  const auto delta = j_correlation(cat.field());
  return from_j_trace(embed_j(delta(project_j(j_trace(m, cat)))), cat);
}

/// xi on catalog positions of the X planes.
inline std::vector<int> xi_permutation(const Catalog& cat) {
  std::vector<int> out;
  for (const auto& e : cat.entries(SubmoduleType::X)) out.push_back(cat.locate(xi(e.span, cat))->position);
  return out;
}

struct XiWitness {
  int m1;
  int m2;
  Subspace common_line;   // M1 meet M2, an alpha line
  Subspace image_meet;    // xi(M1) meet xi(M2), a beta point
  bool j_traces_span_j;   // M1 meet J, M2 meet J and L are not coplanar
};

struct XiReport {
  std::vector<int> permutation;
  bool is_permutation = false;
  std::size_t adjacent_pairs = 0;
  std::size_t adjacency_broken = 0;
  std::size_t skew_pairs = 0;
  std::size_t skew_checked = 0;        // unordered pairs examined for skewness
  std::size_t skew_mismatches = 0;
  std::optional<XiWitness> witness;    // first in catalog order
  /// Among adjacent pairs: images meet in a point iff the J-traces and L span J.
  bool point_iff_traces_span = true;
};

/// Examines all unordered pairs of X planes (or those with i in `rows` when
/// given) for adjacency and skewness before and after xi.
inline XiReport xi_witnesses(const Catalog& cat, const std::optional<std::vector<int>>& rows = std::nullopt) {
  XiReport r;
  const auto& xs = cat.entries(SubmoduleType::X);
  const int n = static_cast<int>(xs.size());
  r.permutation = xi_permutation(cat);
  {
    std::vector<char> hit(n, 0);
    r.is_permutation = true;
    for (int v : r.permutation) {
      if (hit[v]) r.is_permutation = false;
      hit[v] = 1;
    }
  }
  std::vector<int> sources;
  if (rows) {
    sources = *rows;
  } else {
    for (int i = 0; i < n; ++i) sources.push_back(i);
  }
  const auto& flats = cat.flats();
  for (int i : sources)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = xs[i].span;
      const auto& b = xs[j].span;
      const auto& xa = xs[r.permutation[i]].span;
      const auto& xb = xs[r.permutation[j]].span;
      const int before = meet_dim(a, b);
      const int after = meet_dim(xa, xb);
      ++r.skew_checked;
      if (before == 0) ++r.skew_pairs;
      if ((before == 0) != (after == 0)) ++r.skew_mismatches;
      if (before != 2) continue;
      ++r.adjacent_pairs;
      const bool spans = join_dim(join(j_trace(a, cat), j_trace(b, cat)), flats.l) == 4;
      if ((after == 1) != spans) r.point_iff_traces_span = false;
      if (after == 2) continue;
      ++r.adjacency_broken;
      const Subspace image_meet = meet(xa, xb);
      if (!r.witness && after == 1 && cat.type_of(image_meet) == SubmoduleType::Beta)
        r.witness = XiWitness{i, j, meet(a, b), image_meet, spans};
    }
  return r;
}

}  // namespace tern
