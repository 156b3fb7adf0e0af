#pragma once

/**
 * @file linalg.hpp
 * @brief Subspaces of F^n in canonical form, enumeration of Grassmannians,
 * semilinear maps and correlations.
 *
 * A Subspace keeps its basis in reduced row-echelon form (leftmost pivots,
 * pivot entries 1). Equal subspaces therefore have identical bases, and the
 * ordering of subspaces is the lexicographic ordering of (n, k, basis
 * entries). Catalog and report ordering downstream relies on it.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tern/gf.hpp"
#include "tern/matrix.hpp"

namespace tern {

/// An enumeration would visit more subspaces than the current budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 250'000;

/// Enumeration guard; TERNION_BUDGET overrides the default.
inline std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("TERNION_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultBudget;
}

/// Number of k-subspaces of F_q^n.
inline std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (int j = 0; j < n - i; ++j) a *= q;
    for (int j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

class Subspace {
 public:
  /// Canonical span of the given rows; zero rows are dropped.
  static Subspace span(const Field& field, int n, const std::vector<Vec>& rows) {
    return Subspace(Matrix::from_rows(field, n, rows));
  }
  static Subspace row_space(Matrix m) { return Subspace(std::move(m)); }
  static Subspace zero(const Field& field, int n) { return Subspace(Matrix(field, 0, n)); }
  static Subspace whole(const Field& field, int n) { return Subspace(Matrix::identity(field, n)); }
  /// span{e_i : i in indices}, 0-based
  static Subspace coordinate(const Field& field, int n, const std::vector<int>& indices) {
    std::vector<Vec> rows;
    for (int i : indices) {
      Vec v(n, 0);
      v.at(i) = 1;
      rows.push_back(std::move(v));
    }
    return span(field, n, rows);
  }

  const Field& field() const { return basis_.field(); }
  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec row(int i) const { return basis_.row_vec(i); }
  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    for (int i = 0; i < dim(); ++i) out.push_back(row(i));
    return out;
  }

  /// Basis of {w : u . w = 0 for all u in this}.
  Matrix annihilator() const {
    if (dim() == 0) return Matrix::identity(field(), ambient());
    return basis_.nullspace();
  }

  bool contains(const Vec& v) const {
    check_length(v);
    Matrix stacked = basis_.stack(Matrix::from_rows(field(), ambient(), {v}));
    return stacked.rank() == dim();
  }
  bool contains(const Subspace& other) const {
    check_ambient(other);
    if (other.dim() > dim()) return false;
    return basis_.stack(other.basis_).rank() == dim();
  }

  /// All 1-subspaces contained in this one.
  std::vector<Subspace> points() const;

  void check_ambient(const Subspace& other) const {
    if (ambient() != other.ambient()) throw std::invalid_argument("subspaces of different ambient spaces");
    if (&field() != &other.field()) throw FieldError("subspaces over different fields");
  }

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }
  std::strong_ordering operator<=>(const Subspace& other) const {
    if (auto c = ambient() <=> other.ambient(); c != 0) return c;
    return basis_ <=> other.basis_;
  }

 private:
  explicit Subspace(Matrix m) : basis_(std::move(m)) {
    const int r = static_cast<int>(basis_.reduce().size());
    basis_ = basis_.top(r);
  }

  void check_length(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient()) throw std::invalid_argument("vector length mismatch");
  }

  Matrix basis_;
};

inline Subspace join(const Subspace& u, const Subspace& v) {
  u.check_ambient(v);
  return Subspace::row_space(u.basis().stack(v.basis()));
}

inline Subspace meet(const Subspace& u, const Subspace& v) {
  u.check_ambient(v);
  const Matrix constraints = u.annihilator().stack(v.annihilator());
  return Subspace::row_space(constraints.nullspace());
}

/// dim(u + v) computed without building the span.
inline int join_dim(const Subspace& u, const Subspace& v) {
  u.check_ambient(v);
  return u.basis().stack(v.basis()).rank();
}

/// dim(u meet v) by the modular law.
inline int meet_dim(const Subspace& u, const Subspace& v) { return u.dim() + v.dim() - join_dim(u, v); }

inline bool contains(const Subspace& u, const Subspace& v) { return u.contains(v); }

/**
 * Visits every k-subspace of F^n exactly once. Pivot patterns are taken in
 * lexicographic order of the pivot column sets; within a pattern the free
 * entries are counted in mixed radix q, first free entry most significant.
 */
inline void for_each_subspace(const Field& field, int n, int k, const std::function<void(const Subspace&)>& visit) {
  if (k < 0 || k > n) throw std::invalid_argument("subspace dimension out of range");
  const int q = field.order();
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> free_slots;
    {
      std::vector<bool> is_pivot(n, false);
      for (int c : pivots) is_pivot[c] = true;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free_slots.emplace_back(r, c);
    }
    std::vector<int> digits(free_slots.size(), 0);
    while (true) {
      std::vector<Vec> rows(k, Vec(n, 0));
      for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
      for (std::size_t i = 0; i < free_slots.size(); ++i)
        rows[free_slots[i].first][free_slots[i].second] = static_cast<Elem>(digits[i]);
      visit(Subspace::span(field, n, rows));
      int i = static_cast<int>(digits.size()) - 1;
      while (i >= 0 && digits[i] == q - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

inline void check_budget(std::uint64_t count, std::uint64_t budget, const std::string& what) {
  if (count > budget)
    throw BudgetExceeded(what + " needs " + std::to_string(count) + " subspaces; budget is " + std::to_string(budget) +
                         " (raise TERNION_BUDGET or pass --allow-large)");
}

inline std::vector<Subspace> enumerate_subspaces(const Field& field, int n, int k,
                                                 std::uint64_t budget = enumeration_budget()) {
  const auto count = gaussian_binomial(n, k, field.order());
  check_budget(count, budget, std::to_string(k) + "-subspaces of F^" + std::to_string(n));
  std::vector<Subspace> out;
  out.reserve(count);
  for_each_subspace(field, n, k, [&out](const Subspace& s) { out.push_back(s); });
  return out;
}

inline std::vector<Subspace> Subspace::points() const {
  std::vector<Subspace> out;
  if (dim() == 0) return out;
  const Field& f = field();
  for_each_subspace(f, dim(), 1, [&](const Subspace& coords) {
    out.push_back(Subspace::row_space(coords.basis() * basis_));
  });
  return out;
}

/// [V, W]_k: all k-subspaces U with V <= U <= W, in deterministic order.
inline std::vector<Subspace> pencil(const Subspace& v, const Subspace& w, int k) {
  v.check_ambient(w);
  if (!w.contains(v)) throw std::invalid_argument("pencil: lower subspace is not contained in the upper one");
  if (k < v.dim() || k > w.dim()) return {};
  // Rows of W's basis extending a basis of V to one of W.
  Matrix complement(w.field(), 0, w.ambient());
  Matrix acc = v.basis();
  int acc_rank = v.dim();
  for (int i = 0; i < w.dim() && acc_rank < w.dim(); ++i) {
    Matrix row = Matrix::from_rows(w.field(), w.ambient(), {w.row(i)});
    Matrix next = acc.stack(row);
    if (next.rank() > acc_rank) {
      acc = std::move(next);
      ++acc_rank;
      complement = complement.stack(row);
    }
  }
  std::vector<Subspace> out;
  const int quotient_dim = complement.rows();
  const int sub_k = k - v.dim();
  if (sub_k == 0) return {v};
  for_each_subspace(w.field(), quotient_dim, sub_k, [&](const Subspace& coords) {
    out.push_back(join(v, Subspace::row_space(coords.basis() * complement)));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// v -> sigma(v) * M with M invertible.
class SemilinearMap {
 public:
  SemilinearMap(Matrix m, FieldAutomorphism sigma) : m_(std::move(m)), sigma_(sigma) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("semilinear map needs a square matrix");
    if (&sigma_.field() != &m_.field()) throw FieldError("automorphism and matrix over different fields");
    if (m_.rank() != m_.rows()) throw std::domain_error("semilinear map needs an invertible matrix");
  }
  static SemilinearMap linear(Matrix m) {
    const Field& f = m.field();
    return {std::move(m), FieldAutomorphism(f, 0)};
  }
  static SemilinearMap identity(const Field& f, int n) { return linear(Matrix::identity(f, n)); }
  static SemilinearMap field_automorphism(const FieldAutomorphism& sigma, int n) {
    return {Matrix::identity(sigma.field(), n), sigma};
  }

  const Matrix& matrix() const { return m_; }
  const FieldAutomorphism& sigma() const { return sigma_; }
  const Field& field() const { return m_.field(); }
  int dim() const { return m_.rows(); }

  Vec operator()(const Vec& v) const { return vec_times(map_entries(v, sigma_), m_); }

  Subspace operator()(const Subspace& u) const {
    if (u.ambient() != dim()) throw std::invalid_argument("semilinear map: ambient mismatch");
    return Subspace::row_space(u.basis().map_entries(sigma_) * m_);
  }

  /// this after inner: v -> this(inner(v)).
  SemilinearMap after(const SemilinearMap& inner) const {
    // sigma(sigma'(v) M') M = (sigma sigma')(v) sigma(M') M
    return {inner.m_.map_entries(sigma_) * m_, sigma_.after(inner.sigma_)};
  }

  SemilinearMap inverse() const {
    // v = sigma(u) M  =>  u = sigma^-1(v M^-1) = sigma^-1(v) sigma^-1(M^-1)
    const auto sinv = sigma_.inverse();
    return {m_.inverse()->map_entries(sinv), sinv};
  }

  bool operator==(const SemilinearMap& other) const { return m_ == other.m_ && sigma_ == other.sigma_; }

 private:
  Matrix m_;
  FieldAutomorphism sigma_;
};

inline Subspace apply_semilinear(const SemilinearMap& f, const Subspace& u) { return f(u); }

/// U -> {w : sigma(u) M w^T = 0 for all u in U}; reverses containment.
class Correlation {
 public:
  Correlation(Matrix m, FieldAutomorphism sigma) : m_(std::move(m)), sigma_(sigma) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("correlation needs a square matrix");
    if (m_.rank() != m_.rows()) throw std::domain_error("correlation needs an invertible matrix");
  }

  const Matrix& matrix() const { return m_; }
  const FieldAutomorphism& sigma() const { return sigma_; }

  Subspace operator()(const Subspace& u) const {
    if (u.ambient() != m_.rows()) throw std::invalid_argument("correlation: ambient mismatch");
    if (u.dim() == 0) return Subspace::whole(u.field(), u.ambient());
    return Subspace::row_space((u.basis().map_entries(sigma_) * m_).nullspace());
  }

 private:
  Matrix m_;
  FieldAutomorphism sigma_;
};

inline Subspace apply_correlation(const Correlation& d, const Subspace& u) { return d(u); }

}  // namespace tern
