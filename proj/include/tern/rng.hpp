#pragma once

/**
 * @file rng.hpp
 * @brief Seeded random draws with a fixed algorithm.
 *
 * std::uniform_int_distribution is implementation defined, so bounded draws
 * are done here by rejection sampling on mt19937_64 output. Reports that
 * depend on sampling are then identical across standard libraries.
 */

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "tern/gf.hpp"
#include "tern/linalg.hpp"
#include "tern/ternion.hpp"

namespace tern {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  Elem element(const Field& f) { return static_cast<Elem>(below(static_cast<std::uint64_t>(f.order()))); }

  Ternion ternion(const Field& f) {
    const Elem x = element(f), y = element(f), z = element(f);
    return {f, x, y, z};
  }

  TernionMatrix2 gl2(const Field& f) {
    while (true) {
      const Ternion a = ternion(f), b = ternion(f), c = ternion(f), d = ternion(f);
      TernionMatrix2 s(a, b, c, d);
      if (s.is_invertible()) return s;
    }
  }

  Matrix invertible(const Field& f, int n) {
    while (true) {
      Matrix m(f, n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = element(f);
      if (m.rank() == n) return m;
    }
  }

  FieldAutomorphism automorphism(const Field& f) {
    const auto all = f.automorphisms();
    return all[below(all.size())];
  }

  /// Fisher-Yates on [0, n).
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(static_cast<std::uint64_t>(i) + 1)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tern
