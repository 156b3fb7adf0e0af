#pragma once

/**
 * @file lemmas.hpp
 * @brief Exhaustive scans for the lines meeting every X plane in a point and
 * the solids meeting every X plane in a line, and the counting argument that
 * rules out dualities fixing the X planes.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "tern/model.hpp"

namespace tern {

namespace detail {

/// Subspaces V of dimension k with dim(V meet M) == want for every X plane M.
inline std::vector<Subspace> scan_against_x(const Catalog& cat, int k, int want, std::uint64_t budget,
                                            const std::string& what) {
  const Field& f = cat.field();
  check_budget(gaussian_binomial(6, k, f.order()), budget, what);
  const auto& xs = cat.entries(SubmoduleType::X);
  std::vector<Subspace> out;
  for_each_subspace(f, 6, k, [&](const Subspace& v) {
    for (const auto& m : xs)
      if (meet_dim(v, m.span) != want) return;
    out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Lines meeting every X plane in exactly one point.
inline std::vector<Subspace> scan_lines(const Catalog& cat, std::uint64_t budget = enumeration_budget()) {
  return detail::scan_against_x(cat, 2, 1, budget, "line scan");
}

/// Solids meeting every X plane in exactly a line.
inline std::vector<Subspace> scan_solids(const Catalog& cat, std::uint64_t budget = enumeration_budget()) {
  return detail::scan_against_x(cat, 4, 2, budget, "solid scan");
}

/**
 * A duality fixing the X planes would map the scanned lines bijectively onto
 * the scanned solids. Unequal counts rule every such duality out; a duality
 * fixing X and Y together restricts to an adjacency preserver, which fixes X,
 * so the same counts rule that case out too.
 */
struct NoDualityCertificate {
  std::size_t lines = 0;
  std::size_t solids = 0;
  bool conclusive() const { return lines != solids; }
};

inline NoDualityCertificate no_duality_certificate(std::size_t lines, std::size_t solids) { return {lines, solids}; }

}  // namespace tern
