#pragma once

/**
 * @file ternion.hpp
 * @brief The algebra T of upper-triangular 2x2 matrices over GF(q).
 *
 * A Ternion (x, y, z) stands for the matrix [[x, y], [0, z]]; the lower-left
 * entry is structural and never stored. The product is the matrix product:
 *
 *   (x, y, z) * (x', y', z') = (x x', x y' + y z', z z').
 *
 * 2x2 matrices over T act on row pairs (a, b) in T^2 from the right. Left
 * multiplication t * (a, b) = (t a, t b) is the module structure.
 */

#include <array>
#include <compare>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "tern/gf.hpp"
#include "tern/matrix.hpp"

namespace tern {

class Ternion {
 public:
  Ternion(const Field& field, Elem x, Elem y, Elem z) : field_(&field), x_(x), y_(y), z_(z) {}

  static Ternion zero(const Field& f) { return {f, 0, 0, 0}; }
  static Ternion one(const Field& f) { return {f, 1, 0, 1}; }
  static Ternion scalar(const Field& f, Elem c) { return {f, c, 0, c}; }
  static Ternion e11(const Field& f) { return {f, 1, 0, 0}; }
  static Ternion e12(const Field& f) { return {f, 0, 1, 0}; }
  static Ternion e22(const Field& f) { return {f, 0, 0, 1}; }

  const Field& field() const { return *field_; }
  Elem x() const { return x_; }
  Elem y() const { return y_; }
  Elem z() const { return z_; }

  bool is_zero() const { return x_ == 0 && y_ == 0 && z_ == 0; }
  bool is_unit() const { return x_ != 0 && z_ != 0; }
  bool is_central() const { return y_ == 0 && x_ == z_; }

  Ternion inverse() const {
    if (!is_unit()) throw std::domain_error("ternion is not a unit");
    const Field& f = *field_;
    const Elem xi = f.inv(x_);
    const Elem zi = f.inv(z_);
    return {f, xi, f.neg(f.mul(f.mul(xi, y_), zi)), zi};
  }

  friend Ternion operator+(const Ternion& s, const Ternion& t) {
    const Field& f = s.same(t);
    return {f, f.add(s.x_, t.x_), f.add(s.y_, t.y_), f.add(s.z_, t.z_)};
  }
  friend Ternion operator-(const Ternion& s, const Ternion& t) {
    const Field& f = s.same(t);
    return {f, f.sub(s.x_, t.x_), f.sub(s.y_, t.y_), f.sub(s.z_, t.z_)};
  }
  friend Ternion operator*(const Ternion& s, const Ternion& t) {
    const Field& f = s.same(t);
    return {f, f.mul(s.x_, t.x_), f.add(f.mul(s.x_, t.y_), f.mul(s.y_, t.z_)), f.mul(s.z_, t.z_)};
  }
  Ternion operator-() const { return {*field_, field_->neg(x_), field_->neg(y_), field_->neg(z_)}; }

  /// Entrywise field automorphism.
  Ternion apply(const FieldAutomorphism& sigma) const { return {*field_, sigma(x_), sigma(y_), sigma(z_)}; }

  bool operator==(const Ternion& o) const { return field_ == o.field_ && x_ == o.x_ && y_ == o.y_ && z_ == o.z_; }
  std::strong_ordering operator<=>(const Ternion& o) const {
    return std::array{x_, y_, z_} <=> std::array{o.x_, o.y_, o.z_};
  }

 private:
  const Field& same(const Ternion& other) const {
    if (field_ != other.field_) throw FieldError("ternions over different fields");
    return *field_;
  }

  const Field* field_;
  Elem x_, y_, z_;
};

/// A row vector (a, b) in T^2.
struct TernionPair {
  Ternion a;
  Ternion b;

  const Field& field() const { return a.field(); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  static TernionPair zero(const Field& f) { return {Ternion::zero(f), Ternion::zero(f)}; }

  bool operator==(const TernionPair&) const = default;
  std::strong_ordering operator<=>(const TernionPair& o) const {
    if (auto c = a <=> o.a; c != 0) return c;
    return b <=> o.b;
  }
};

inline TernionPair operator+(const TernionPair& u, const TernionPair& v) { return {u.a + v.a, u.b + v.b}; }

/// t * (a, b) = (t a, t b)
inline TernionPair left_multiply(const Ternion& t, const TernionPair& v) { return {t * v.a, t * v.b}; }

/**
 * A 2x2 matrix [[a, b], [c, d]] over T. As a 4x4 matrix over F it reads
 *
 *   a11 a12 b11 b12
 *    0  a22  0  b22
 *   c11 c12 d11 d12
 *    0  c22  0  d22
 */
class TernionMatrix2 {
 public:
  TernionMatrix2(Ternion a, Ternion b, Ternion c, Ternion d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const Field* f = &a_.field();
    if (&b_.field() != f || &c_.field() != f || &d_.field() != f) throw FieldError("blocks over different fields");
  }

  static TernionMatrix2 identity(const Field& f) {
    return {Ternion::one(f), Ternion::zero(f), Ternion::zero(f), Ternion::one(f)};
  }
  static TernionMatrix2 diagonal(const Ternion& u, const Ternion& v) {
    const Field& f = u.field();
    return {u, Ternion::zero(f), Ternion::zero(f), v};
  }

  /// Re-partitions a 4x4 matrix over F; throws if the structural zeros at
  /// (2,1), (2,3), (4,1), (4,3) are not zero.
  static TernionMatrix2 from_block4(const Matrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("block form must be 4x4");
    if (m(1, 0) != 0 || m(1, 2) != 0 || m(3, 0) != 0 || m(3, 2) != 0)
      throw std::invalid_argument("4x4 matrix does not partition into ternions");
    const Field& f = m.field();
    return {Ternion(f, m(0, 0), m(0, 1), m(1, 1)), Ternion(f, m(0, 2), m(0, 3), m(1, 3)),
            Ternion(f, m(2, 0), m(2, 1), m(3, 1)), Ternion(f, m(2, 2), m(2, 3), m(3, 3))};
  }

  const Ternion& a() const { return a_; }
  const Ternion& b() const { return b_; }
  const Ternion& c() const { return c_; }
  const Ternion& d() const { return d_; }
  const Field& field() const { return a_.field(); }

  Matrix block4() const {
    Matrix m(field(), 4, 4);
    auto put = [&m](int r, int c, const Ternion& t) {
      m(r, c) = t.x();
      m(r, c + 1) = t.y();
      m(r + 1, c + 1) = t.z();
    };
    put(0, 0, a_);
    put(0, 2, b_);
    put(2, 0, c_);
    put(2, 2, d_);
    return m;
  }

  /// (a22 d22 - b22 c22, a11 d11 - b11 c11)
  std::pair<Elem, Elem> det_factors() const {
    const Field& f = field();
    return {f.sub(f.mul(a_.z(), d_.z()), f.mul(b_.z(), c_.z())),
            f.sub(f.mul(a_.x(), d_.x()), f.mul(b_.x(), c_.x()))};
  }
  Elem det() const {
    auto [lower, upper] = det_factors();
    return field().mul(lower, upper);
  }
  bool is_invertible() const {
    auto [lower, upper] = det_factors();
    return lower != 0 && upper != 0;
  }

  /// Inverse via 4x4 inversion over F and re-partitioning.
  TernionMatrix2 inverse() const {
    auto inv = block4().inverse();
    if (!inv) throw std::domain_error("matrix over T is singular");
    return from_block4(*inv);
  }

  friend TernionMatrix2 operator*(const TernionMatrix2& s, const TernionMatrix2& t) {
    return {s.a_ * t.a_ + s.b_ * t.c_, s.a_ * t.b_ + s.b_ * t.d_, s.c_ * t.a_ + s.d_ * t.c_,
            s.c_ * t.b_ + s.d_ * t.d_};
  }

  TernionMatrix2 apply(const FieldAutomorphism& sigma) const {
    return {a_.apply(sigma), b_.apply(sigma), c_.apply(sigma), d_.apply(sigma)};
  }

  bool operator==(const TernionMatrix2&) const = default;

 private:
  Ternion a_, b_, c_, d_;
};

/// (a, b) * [[a', b'], [c', d']] = (a a' + b c', a b' + b d')
inline TernionPair act_right(const TernionPair& v, const TernionMatrix2& s) {
  return {v.a * s.a() + v.b * s.c(), v.a * s.b() + v.b * s.d()};
}

/// Ring automorphisms and antiautomorphisms of T, composed left to right in
/// the order the steps were added.
class RingMap {
 public:
  struct FieldStep {
    FieldAutomorphism sigma;
  };
  struct InnerStep {
    Ternion unit;  // t -> u t u^-1
  };
  struct AntiStep {};  // (x, y, z) -> (z, y, x)
  using Step = std::variant<FieldStep, InnerStep, AntiStep>;

  RingMap() = default;

  static RingMap field_automorphism(const FieldAutomorphism& sigma) { return RingMap{}.then_field(sigma); }
  static RingMap inner(const Ternion& unit) { return RingMap{}.then_inner(unit); }
  static RingMap antiautomorphism() { return RingMap{}.then_anti(); }

  RingMap then_field(const FieldAutomorphism& sigma) const {
    RingMap out = *this;
    out.steps_.push_back(FieldStep{sigma});
    return out;
  }
  RingMap then_inner(const Ternion& unit) const {
    if (!unit.is_unit()) throw std::domain_error("inner automorphism needs a unit");
    RingMap out = *this;
    out.steps_.push_back(InnerStep{unit});
    return out;
  }
  RingMap then_anti() const {
    RingMap out = *this;
    out.steps_.push_back(AntiStep{});
    return out;
  }

  /// True if the map reverses products.
  bool is_anti() const {
    std::size_t n = 0;
    for (const auto& s : steps_) n += std::holds_alternative<AntiStep>(s) ? 1 : 0;
    return n % 2 == 1;
  }

  Ternion operator()(Ternion t) const {
    for (const auto& step : steps_) {
      if (const auto* fs = std::get_if<FieldStep>(&step)) {
        t = t.apply(fs->sigma);
      } else if (const auto* is = std::get_if<InnerStep>(&step)) {
        t = is->unit * t * is->unit.inverse();
      } else {
        t = Ternion(t.field(), t.z(), t.y(), t.x());
      }
    }
    return t;
  }

 private:
  std::vector<Step> steps_;
};

inline Ternion apply_ring_map(const RingMap& m, const Ternion& t) { return m(t); }

}  // namespace tern
