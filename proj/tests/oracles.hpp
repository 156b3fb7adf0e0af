#pragma once

// Brute-force oracles used only by tests. None of these go through the
// reduced echelon machinery they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "tern/gf.hpp"
#include "tern/matrix.hpp"
#include "tern/ternion.hpp"

namespace oracle {

using tern::Elem;
using tern::Field;
using tern::Vec;

/// Determinant by the Leibniz expansion.
inline Elem leibniz_det(const tern::Matrix& m) {
  const Field& f = m.field();
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Elem det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Elem term = 1;
    for (int i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
    det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Vector index in base q.
inline std::uint32_t encode(const Field& f, const Vec& v) {
  std::uint32_t code = 0;
  for (Elem e : v) code = code * f.order() + e;
  return code;
}

/// The set of all vectors of span(rows), as codes, by closure under all
/// linear combinations.
inline std::set<std::uint32_t> member_set(const Field& f, int n, const std::vector<Vec>& rows) {
  std::set<std::uint32_t> out;
  const int k = static_cast<int>(rows.size());
  std::vector<Elem> coef(k, 0);
  while (true) {
    Vec v(n, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coef[i], rows[i][j]));
    out.insert(encode(f, v));
    int i = k - 1;
    while (i >= 0 && coef[i] == f.order() - 1) coef[i--] = 0;
    if (i < 0) break;
    ++coef[i];
  }
  return out;
}

inline std::vector<Vec> all_vectors(const Field& f, int n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == f.order() - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

/// Number of distinct k-dimensional subspaces of F^n, counted as distinct
/// member sets of size q^k spanned by k-tuples of vectors.
inline std::size_t count_subspaces_by_closure(const Field& f, int n, int k) {
  const auto vectors = all_vectors(f, n);
  std::size_t target = 1;
  for (int i = 0; i < k; ++i) target *= f.order();
  std::set<std::set<std::uint32_t>> seen;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(vectors[i]);
    auto members = member_set(f, n, rows);
    if (members.size() == target) seen.insert(std::move(members));
    int i = k - 1;
    while (i >= 0 && idx[i] == vectors.size() - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return seen.size();
}

/// {Phi(t v) : t in T} as codes.
inline std::set<std::uint32_t> submodule_members(const tern::TernionPair& v) {
  const Field& f = v.field();
  std::set<std::uint32_t> out;
  const int q = f.order();
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        tern::Ternion t(f, static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z));
        const auto w = tern::left_multiply(t, v);
        out.insert(encode(f, {w.a.x(), w.a.y(), w.a.z(), w.b.x(), w.b.y(), w.b.z()}));
      }
  return out;
}

}  // namespace oracle
