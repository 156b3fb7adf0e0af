#pragma once

/**
 * @file incidence.hpp
 * @brief Incidence between catalog elements: P and Q are incident when one
 * contains the other.
 */

#include <array>
#include <cstdint>
#include <stdexcept>

#include "tern/model.hpp"

namespace tern {

using IncidenceRow = std::array<std::uint64_t, 5>;

/// Number of Q in each of the five sets incident with p0 (p0 counts itself).
inline IncidenceRow incidence_counts(const Subspace& p0, const Catalog& cat) {
  if (!cat.contains(p0)) throw std::invalid_argument("incidence_counts: subspace is not in the catalog");
  IncidenceRow row{};
  for (auto t : kNonzeroTypes)
    for (const auto& e : cat.entries(t))
      if (e.span.contains(p0) || p0.contains(e.span)) ++row[type_index(t)];
  return row;
}

/// Closed-form table; row = type of P0, columns X, Y, alpha, beta, gamma.
inline IncidenceRow expected_incidence_row(SubmoduleType t, std::uint64_t q) {
  switch (t) {
    case SubmoduleType::X: return {1, 0, 1, q, 1};
    case SubmoduleType::Y: return {0, 1, 1, 0, q + 1};
    case SubmoduleType::Alpha: return {q * q + q, 1, 1, 0, 1};
    case SubmoduleType::Beta: return {q + 1, 0, 0, 1, 0};
    case SubmoduleType::Gamma: return {q * q + q, q + 1, 1, 0, 1};
    case SubmoduleType::Zero: break;
  }
  throw std::invalid_argument("no incidence row for the zero submodule");
}

struct IncidenceMismatch {
  SubmoduleType type;
  int position;
  IncidenceRow found;
};

/// Compares the rows of the given catalog positions with the closed-form table.
inline std::vector<IncidenceMismatch> check_incidence_table(const Catalog& cat,
                                                            const std::vector<std::pair<SubmoduleType, int>>& sample) {
  std::vector<IncidenceMismatch> bad;
  const auto q = static_cast<std::uint64_t>(cat.q());
  for (const auto& [t, pos] : sample) {
    const auto row = incidence_counts(cat.entries(t).at(pos).span, cat);
    if (row != expected_incidence_row(t, q)) bad.push_back({t, pos, row});
  }
  return bad;
}

inline std::vector<std::pair<SubmoduleType, int>> all_catalog_positions(const Catalog& cat) {
  std::vector<std::pair<SubmoduleType, int>> out;
  for (auto t : kNonzeroTypes)
    for (int i = 0; i < static_cast<int>(cat.count(t)); ++i) out.emplace_back(t, i);
  return out;
}

}  // namespace tern
