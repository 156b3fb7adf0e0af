#pragma once

/**
 * @file adjacency.hpp
 * @brief Adjacency of planes, the graph on the free planes, its classes,
 * cliques and distances.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tern/model.hpp"

namespace tern {

/// Distinct planes meeting in a line.
inline bool adjacent(const Subspace& z1, const Subspace& z2) {
  if (z1.dim() != 3 || z2.dim() != 3) throw std::invalid_argument("adjacent: both arguments must be planes");
  return meet_dim(z1, z2) == 2;
}

/// The Y plane (M meet K) + L.
inline Subspace companion_y(const Subspace& m, const Catalog& cat) {
  if (cat.type_of(m) != SubmoduleType::X) throw std::invalid_argument("companion_y: plane is not of type X");
  return join(meet(m, cat.flats().k), cat.flats().l);
}

/// Graph on the X planes followed by the Y planes, in catalog order.
class AdjacencyGraph {
 public:
  explicit AdjacencyGraph(const Catalog& cat) : vertices_(free_planes(cat)) {
    const int n = size();
    num_x_ = static_cast<int>(cat.count(SubmoduleType::X));
    adj_.assign(n, std::vector<char>(n, 0));
    neighbours_.resize(n);
    for (int i = 0; i < n; ++i) index_.emplace(vertices_[i], i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (tern::adjacent(vertices_[i], vertices_[j])) {
          adj_[i][j] = adj_[j][i] = 1;
          neighbours_[i].push_back(j);
          neighbours_[j].push_back(i);
          ++edges_;
        }
  }

  int size() const { return static_cast<int>(vertices_.size()); }
  int num_x() const { return num_x_; }
  bool is_x(int v) const { return v < num_x_; }
  SubmoduleType type(int v) const { return is_x(v) ? SubmoduleType::X : SubmoduleType::Y; }
  const Subspace& vertex(int v) const { return vertices_.at(v); }
  const std::vector<Subspace>& vertices() const { return vertices_; }
  bool adjacent(int a, int b) const { return adj_.at(a).at(b) != 0; }
  const std::vector<int>& neighbours(int v) const { return neighbours_.at(v); }
  std::size_t edge_count() const { return edges_; }

  int index_of(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("plane is not a vertex of the graph");
    return it->second;
  }
  std::optional<int> find(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
      for (int j : neighbours_[i])
        if (i < j) out.emplace_back(i, j);
    return out;
  }

 private:
  std::vector<Subspace> vertices_;
  int num_x_ = 0;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<int>> neighbours_;
  std::map<Subspace, int> index_;
  std::size_t edges_ = 0;
};

inline AdjacencyGraph build_graph(const Catalog& cat) { return AdjacencyGraph(cat); }

/// Classes of "adjacent or equal" on the X planes, grown from each unvisited
/// plane by adding everything congruent to it. Each class is sorted.
inline std::vector<std::vector<int>> congruence_classes_x(const AdjacencyGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.num_x(), 0);
  for (int i = 0; i < g.num_x(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cls{i};
    seen[i] = 1;
    for (int j = i + 1; j < g.num_x(); ++j)
      if (!seen[j] && g.adjacent(i, j)) {
        cls.push_back(j);
        seen[j] = 1;
      }
    out.push_back(std::move(cls));
  }
  return out;
}

/// True iff "adjacent or equal" is transitive on the X planes.
inline bool congruence_is_transitive_x(const AdjacencyGraph& g) {
  const int n = g.num_x();
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbours(a)) {
      if (b >= n) continue;
      for (int c : g.neighbours(b))
        if (c < n && c != a && !g.adjacent(a, c)) return false;
    }
  return true;
}

/// One clique [P, P + J]_3 per alpha line P, in regulus order, and [L, K]_3.
struct CliqueFamily {
  std::vector<Subspace> alpha;             // P, sorted
  std::vector<std::vector<int>> by_alpha;  // vertex ids of [P, P + J]_3, sorted
  std::vector<int> marked;                 // vertex id of P + L
  std::vector<int> y_pencil;               // vertex ids of [L, K]_3, sorted
};

inline CliqueFamily clique_family(const Catalog& cat, const AdjacencyGraph& g) {
  CliqueFamily fam;
  const auto& flats = cat.flats();
  fam.alpha = cat.spans(SubmoduleType::Alpha);
  for (const auto& p : fam.alpha) {
    std::vector<int> ids;
    for (const auto& z : pencil(p, join(p, flats.j), 3)) ids.push_back(g.index_of(z));
    std::sort(ids.begin(), ids.end());
    fam.by_alpha.push_back(std::move(ids));
    fam.marked.push_back(g.index_of(join(p, flats.l)));
  }
  for (const auto& z : pencil(flats.l, flats.k, 3)) fam.y_pencil.push_back(g.index_of(z));
  std::sort(fam.y_pencil.begin(), fam.y_pencil.end());
  return fam;
}

/// All maximal cliques (Bron-Kerbosch with pivoting); each sorted, list sorted.
inline std::vector<std::vector<int>> maximal_cliques(const AdjacencyGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  std::function<void(std::vector<int>, std::vector<int>)> expand = [&](std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      auto c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
      for (int u : *set) {
        std::size_t k = 0;
        for (int v : p) k += g.adjacent(u, v) ? 1 : 0;
        if (pivot < 0 || k > best) {
          pivot = u;
          best = k;
        }
      }
    std::vector<int> candidates;
    for (int v : p)
      if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> p2, x2;
      for (int w : p)
        if (g.adjacent(v, w)) p2.push_back(w);
      for (int w : x)
        if (g.adjacent(v, w)) x2.push_back(w);
      r.push_back(v);
      expand(std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<int> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff the set is a clique and no outside vertex is adjacent to all of it.
inline bool is_maximal_clique(const AdjacencyGraph& g, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) continue;
    if (std::all_of(c.begin(), c.end(), [&](int u) { return g.adjacent(u, v); })) return false;
  }
  return true;
}

/// Breadth-first distances (-1 when unreachable) and numbers of shortest paths.
struct Bfs {
  std::vector<int> dist;
  std::vector<std::uint64_t> paths;
};

inline Bfs bfs(const AdjacencyGraph& g, int source) {
  Bfs b{std::vector<int>(g.size(), -1), std::vector<std::uint64_t>(g.size(), 0)};
  std::queue<int> todo;
  b.dist.at(source) = 0;
  b.paths[source] = 1;
  todo.push(source);
  while (!todo.empty()) {
    const int u = todo.front();
    todo.pop();
    for (int v : g.neighbours(u)) {
      if (b.dist[v] < 0) {
        b.dist[v] = b.dist[u] + 1;
        todo.push(v);
      }
      if (b.dist[v] == b.dist[u] + 1) b.paths[v] += b.paths[u];
    }
  }
  return b;
}

inline int distance(const AdjacencyGraph& g, int a, int b) {
  const int d = bfs(g, a).dist.at(b);
  if (d < 0) throw std::logic_error("distance: vertices are not connected");
  return d;
}

inline bool is_connected(const AdjacencyGraph& g) {
  if (g.size() == 0) return true;
  const auto b = bfs(g, 0);
  return std::none_of(b.dist.begin(), b.dist.end(), [](int d) { return d < 0; });
}

}  // namespace tern
