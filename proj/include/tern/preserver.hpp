#pragma once

/**
 * @file preserver.hpp
 * @brief Adjacency preservers of the free planes built from a permutation mu
 * of the alpha lines and clique bijections psi_P.
 *
 * Cliques are indexed by the position of P in the alpha list. psi[p][i] is
 * the position, inside clique mu[p], of the image of the i-th vertex of
 * clique p (both cliques in sorted vertex order).
 */

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tern/adjacency.hpp"
#include "tern/rng.hpp"

namespace tern {

struct PreserverRecipe {
  std::vector<int> mu;
  std::vector<std::vector<int>> psi;
};

namespace detail {

inline bool is_permutation_of_range(const std::vector<int>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

inline int position_in(const std::vector<int>& sorted, int v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace detail

/// Throws std::invalid_argument unless mu and every psi_P are bijections and
/// each psi_P sends P + L to mu(P) + L.
inline void validate_recipe(const PreserverRecipe& r, const CliqueFamily& fam) {
  const std::size_t m = fam.alpha.size();
  if (!detail::is_permutation_of_range(r.mu, m)) throw std::invalid_argument("recipe: mu is not a permutation");
  if (r.psi.size() != m) throw std::invalid_argument("recipe: wrong number of clique maps");
  for (std::size_t p = 0; p < m; ++p) {
    const auto& clique = fam.by_alpha[p];
    if (!detail::is_permutation_of_range(r.psi[p], clique.size()))
      throw std::invalid_argument("recipe: clique map is not a bijection");
    const int from = detail::position_in(clique, fam.marked[p]);
    const int to = detail::position_in(fam.by_alpha[r.mu[p]], fam.marked[r.mu[p]]);
    if (r.psi[p][from] != to) throw std::invalid_argument("recipe: clique map does not respect the marked plane");
  }
}

inline PreserverRecipe identity_recipe(const CliqueFamily& fam) {
  PreserverRecipe r;
  for (std::size_t p = 0; p < fam.alpha.size(); ++p) {
    r.mu.push_back(static_cast<int>(p));
    std::vector<int> id(fam.by_alpha[p].size());
    std::iota(id.begin(), id.end(), 0);
    r.psi.push_back(std::move(id));
  }
  return r;
}

/// Uniform mu, and psi_P uniform among bijections respecting the marked plane.
inline PreserverRecipe random_recipe(const CliqueFamily& fam, Rng& rng) {
  PreserverRecipe r;
  const int m = static_cast<int>(fam.alpha.size());
  r.mu = rng.permutation(m);
  for (int p = 0; p < m; ++p) {
    const auto& src = fam.by_alpha[p];
    const auto& dst = fam.by_alpha[r.mu[p]];
    const int from = detail::position_in(src, fam.marked[p]);
    const int to = detail::position_in(dst, fam.marked[r.mu[p]]);
    std::vector<int> others;
    for (int i = 0; i < static_cast<int>(dst.size()); ++i)
      if (i != to) others.push_back(i);
    const auto shuffle = rng.permutation(static_cast<int>(others.size()));
    std::vector<int> psi(src.size());
    for (int i = 0, k = 0; i < static_cast<int>(src.size()); ++i) psi[i] = i == from ? to : others[shuffle[k++]];
    r.psi.push_back(std::move(psi));
  }
  return r;
}

/// lambda as a vertex permutation; every free plane lies in exactly one clique
/// [P, P + J]_3, so the recipe defines lambda everywhere.
inline std::vector<int> build_preserver(const PreserverRecipe& r, const CliqueFamily& fam, const AdjacencyGraph& g) {
  validate_recipe(r, fam);
  std::vector<int> lambda(g.size(), -1);
  for (std::size_t p = 0; p < fam.alpha.size(); ++p) {
    const auto& src = fam.by_alpha[p];
    const auto& dst = fam.by_alpha[r.mu[p]];
    for (std::size_t i = 0; i < src.size(); ++i) {
      const int image = dst[r.psi[p][i]];
      if (lambda[src[i]] >= 0 && lambda[src[i]] != image) throw std::logic_error("preserver: conflicting images");
      lambda[src[i]] = image;
    }
  }
  if (std::find(lambda.begin(), lambda.end(), -1) != lambda.end())
    throw std::logic_error("preserver: a plane lies in no clique");
  return lambda;
}

/// Bijective and adjacency preserved in both directions.
inline bool verify_preserver(const std::vector<int>& lambda, const AdjacencyGraph& g) {
  if (!detail::is_permutation_of_range(lambda, static_cast<std::size_t>(g.size()))) return false;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j) != g.adjacent(lambda[i], lambda[j])) return false;
  return true;
}

/// lambda(X) = X and lambda(Y) = Y.
inline bool fixes_types(const std::vector<int>& lambda, const AdjacencyGraph& g) {
  for (int i = 0; i < g.size(); ++i)
    if (g.is_x(i) != g.is_x(lambda.at(i))) return false;
  return true;
}

/// The vertex map induced by a semilinear map, if it permutes the free planes.
inline std::optional<std::vector<int>> induced_map(const SemilinearMap& f, const AdjacencyGraph& g) {
  std::vector<int> lambda(g.size());
  for (int i = 0; i < g.size(); ++i) {
    auto j = g.find(f(g.vertex(i)));
    if (!j) return std::nullopt;
    lambda[i] = *j;
  }
  return lambda;
}

/// Reads mu from the K-traces of the images of X planes and psi_P from the
/// restriction of lambda to each clique.
inline PreserverRecipe extract_recipe(const std::vector<int>& lambda, const CliqueFamily& fam, const AdjacencyGraph& g,
                                      const Subspace& k) {
  PreserverRecipe r;
  for (std::size_t p = 0; p < fam.alpha.size(); ++p) {
    const auto& src = fam.by_alpha[p];
    auto x_vertex = std::find_if(src.begin(), src.end(), [&](int v) { return g.is_x(v); });
    if (x_vertex == src.end()) throw std::logic_error("extract_recipe: clique without X planes");
    const Subspace trace = meet(g.vertex(lambda.at(*x_vertex)), k);
    auto it = std::lower_bound(fam.alpha.begin(), fam.alpha.end(), trace);
    if (it == fam.alpha.end() || *it != trace) throw std::invalid_argument("extract_recipe: K-trace is not an alpha line");
    const int mu = static_cast<int>(it - fam.alpha.begin());
    std::vector<int> psi;
    for (int v : src) {
      const int pos = detail::position_in(fam.by_alpha[mu], lambda.at(v));
      if (pos < 0) throw std::invalid_argument("extract_recipe: clique is not mapped into a clique");
      psi.push_back(pos);
    }
    r.mu.push_back(mu);
    r.psi.push_back(std::move(psi));
  }
  validate_recipe(r, fam);
  return r;
}

}  // namespace tern
