#pragma once

/**
 * @file gf.hpp
 * @brief Exact arithmetic in GF(q) for small q.
 *
 * A field GF(p^k) is represented by integer codes 0..q-1. The code of an
 * element with coefficient vector (c_0, ..., c_{k-1}) over GF(p), taken modulo
 * the defining polynomial, is c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Enumeration
 * order is ascending code, so the order is lexicographic on the coefficient
 * vector with the leading coefficient most significant.
 *
 * Addition, multiplication and inversion tables are filled once per field by
 * plain polynomial arithmetic and reduction. Fields are interned: Field::get
 * returns a reference that stays valid for the lifetime of the program, and
 * two fields are the same field iff their addresses agree.
 *
 * Built-in default moduli (coefficients low degree first):
 *   GF(4)  x^2 + x + 1        {1, 1, 1}
 *   GF(8)  x^3 + x + 1        {1, 1, 0, 1}
 *   GF(9)  x^2 + 1            {1, 0, 1}
 *   GF(16) x^4 + x + 1        {1, 1, 0, 0, 1}
 *   GF(25) x^2 + 2            {2, 0, 1}
 *   GF(27) x^3 + 2x + 1       {1, 2, 0, 1}
 */

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tern {

using Elem = std::uint8_t;

/// Raised for invalid field data: composite characteristic, reducible
/// modulus, unsupported order, or operands from different fields.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field;

/// A power of the Frobenius map a -> a^p.
class FieldAutomorphism {
 public:
  FieldAutomorphism(const Field& field, int power);

  Elem operator()(Elem a) const;

  const Field& field() const { return *field_; }
  int power() const { return power_; }
  bool is_identity() const { return power_ == 0; }

  FieldAutomorphism inverse() const;
  /// this after inner.
  FieldAutomorphism after(const FieldAutomorphism& inner) const;

  bool operator==(const FieldAutomorphism& other) const {
    return field_ == other.field_ && power_ == other.power_;
  }

 private:
  const Field* field_;
  int power_;
};

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<int>;  // coefficients low degree first, over GF(p)

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over GF(p).
inline Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = c % p;
        c /= p;
      }
      divisor[d] = 1;
      if (poly_mod(m, divisor, p).empty()) return false;
    }
  }
  return true;
}

inline std::optional<Poly> default_modulus(int q) {
  static const std::map<int, Poly> table = {
      {4, {1, 1, 1}},      {8, {1, 1, 0, 1}}, {9, {1, 0, 1}},
      {16, {1, 1, 0, 0, 1}}, {25, {2, 0, 1}},   {27, {1, 2, 0, 1}},
  };
  auto it = table.find(q);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace detail

class Field {
 public:
  static constexpr int kMaxOrder = 256;

  /// Validated, interned GF(p^k). modulus is low degree first and must be
  /// monic and irreducible; when omitted a built-in default is used.
  static const Field& get(int p, int k = 1, std::optional<std::vector<int>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw FieldError("extension degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxOrder) throw FieldError("field order exceeds " + std::to_string(kMaxOrder));
    }
    detail::Poly m;
    if (k == 1) {
      if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1))
        throw FieldError("prime field modulus must be monic of degree 1");
      m = {0, 1};
    } else if (modulus) {
      m = *modulus;
      if (static_cast<int>(m.size()) != k + 1) throw FieldError("modulus must have degree " + std::to_string(k));
      for (int c : m)
        if (c < 0 || c >= p) throw FieldError("modulus coefficient out of range");
      if (m.back() != 1) throw FieldError("modulus must be monic");
      if (!detail::is_irreducible(m, p)) throw FieldError("modulus is reducible over GF(" + std::to_string(p) + ")");
    } else {
      auto d = detail::default_modulus(static_cast<int>(q));
      if (!d) throw FieldError("no built-in modulus for q = " + std::to_string(q) + "; pass one explicitly");
      m = *d;
    }

    static std::mutex mutex;
    static std::map<std::pair<int, detail::Poly>, std::unique_ptr<Field>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[{p, m}];
    if (!slot) slot.reset(new Field(p, k, std::move(m)));
    return *slot;
  }

  /// GF(q) for a prime power q.
  static const Field& of_order(int q, std::optional<std::vector<int>> modulus = std::nullopt) {
    if (q < 2) throw FieldError("field order must be at least 2");
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    int rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) throw FieldError(std::to_string(q) + " is not a prime power");
    return get(p, k, std::move(modulus));
  }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in " + name());
    return inv_[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long n) const { return static_cast<Elem>(((n % p_) + p_) % p_); }

  std::vector<int> coeffs(Elem a) const {
    std::vector<int> c(k_);
    int v = a;
    for (int i = 0; i < k_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }

  Elem from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) > k_) throw FieldError("too many coefficients for " + name());
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      if (c[i] < 0 || c[i] >= p_) throw FieldError("coefficient out of range for " + name());
      v = v * p_ + c[i];
    }
    return static_cast<Elem>(v);
  }

  /// All elements in enumeration order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out(q_);
    for (int i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
  }

  /// a^(p^power)
  Elem frobenius(Elem a, int power) const {
    power %= k_;
    if (power < 0) power += k_;
    for (int i = 0; i < power; ++i) a = frob_[a];
    return a;
  }

  /// Identity first, then successive powers of the Frobenius map.
  std::vector<FieldAutomorphism> automorphisms() const {
    std::vector<FieldAutomorphism> out;
    for (int i = 0; i < k_; ++i) out.emplace_back(*this, i);
    return out;
  }

  /// Smallest-code generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

 private:
  Field(int p, int k, detail::Poly modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < k_; ++i) q_ *= p_;
    const std::size_t qq = static_cast<std::size_t>(q_) * q_;
    add_.resize(qq);
    mul_.resize(qq);
    neg_.resize(q_);
    inv_.resize(q_, 0);
    frob_.resize(q_);

    auto to_poly = [&](int code) {
      detail::Poly a(k_);
      for (int i = 0; i < k_; ++i) {
        a[i] = code % p_;
        code /= p_;
      }
      detail::trim(a);
      return a;
    };
    auto to_code = [&](const detail::Poly& a) {
      int v = 0;
      for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = v * p_ + a[i];
      return static_cast<Elem>(v);
    };

    for (int a = 0; a < q_; ++a) {
      const auto pa = to_poly(a);
      for (int b = 0; b < q_; ++b) {
        const auto pb = to_poly(b);
        detail::Poly s(k_, 0);
        for (int i = 0; i < k_; ++i) {
          const int x = i < static_cast<int>(pa.size()) ? pa[i] : 0;
          const int y = i < static_cast<int>(pb.size()) ? pb[i] : 0;
          s[i] = (x + y) % p_;
        }
        detail::trim(s);
        add_[a * q_ + b] = to_code(s);
        mul_[a * q_ + b] = to_code(detail::poly_mod(detail::poly_mul(pa, pb, p_), modulus_, p_));
      }
    }
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0) neg_[a] = static_cast<Elem>(b);
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
      }
      Elem power = 1;
      for (int i = 0; i < p_; ++i) power = mul_[power * q_ + a];
      frob_[a] = power;
    }
    for (int g = 1; g < q_; ++g) {
      int order = 1;
      Elem x = static_cast<Elem>(g);
      while (x != 1) {
        x = mul_[x * q_ + g];
        ++order;
      }
      if (order == q_ - 1) {
        primitive_ = static_cast<Elem>(g);
        break;
      }
    }
  }

  int p_;
  int k_;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_, frob_;
  Elem primitive_ = 1;
};

inline FieldAutomorphism::FieldAutomorphism(const Field& field, int power) : field_(&field) {
  const int k = field.degree();
  power_ = ((power % k) + k) % k;
}

inline Elem FieldAutomorphism::operator()(Elem a) const { return field_->frobenius(a, power_); }

inline FieldAutomorphism FieldAutomorphism::inverse() const { return {*field_, field_->degree() - power_}; }

inline FieldAutomorphism FieldAutomorphism::after(const FieldAutomorphism& inner) const {
  if (field_ != inner.field_) throw FieldError("automorphisms of different fields");
  return {*field_, power_ + inner.power_};
}

/// Checked element handle. Arithmetic between Scalars of different fields
/// throws FieldError; inverting zero throws std::domain_error.
class Scalar {
 public:
  Scalar(const Field& field, Elem rep) : field_(&field), rep_(rep) {
    if (rep >= field.order()) throw FieldError("representative out of range for " + field.name());
  }
  static Scalar from_int(const Field& field, long long n) { return {field, field.from_int(n)}; }
  static Scalar from_coeffs(const Field& field, std::span<const int> c) { return {field, field.from_coeffs(c)}; }

  const Field& field() const { return *field_; }
  Elem rep() const { return rep_; }
  std::vector<int> coeffs() const { return field_->coeffs(rep_); }
  bool is_zero() const { return rep_ == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return {a.same(b), a.field_->add(a.rep_, b.rep_)}; }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return {a.same(b), a.field_->sub(a.rep_, b.rep_)}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return {a.same(b), a.field_->mul(a.rep_, b.rep_)}; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return {a.same(b), a.field_->div(a.rep_, b.rep_)}; }
  Scalar operator-() const { return {*field_, field_->neg(rep_)}; }
  Scalar inv() const { return {*field_, field_->inv(rep_)}; }

  Scalar apply(const FieldAutomorphism& sigma) const {
    if (&sigma.field() != field_) throw FieldError("automorphism of a different field");
    return {*field_, sigma(rep_)};
  }

  bool operator==(const Scalar& other) const = default;

 private:
  const Field& same(const Scalar& other) const {
    if (field_ != other.field_) throw FieldError("mixed fields: " + field_->name() + " and " + other.field_->name());
    return *field_;
  }

  const Field* field_;
  Elem rep_;
};

}  // namespace tern
