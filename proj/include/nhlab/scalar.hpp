#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace nhlab {

/// Ground field: either Q (radicand 0) or a single quadratic extension Q(sqrt d).
struct Field {
  int radicand = 0;

  static Field rational() { return {}; }
  static Field quadratic(int d) { return Field{d}; }

  bool is_rational() const { return radicand == 0; }
  bool operator==(const Field&) const = default;
  std::string name() const;
};

/// Exact element a + b*sqrt(d) with a, b rational.
///
/// A scalar with b == 0 is a plain rational and combines with scalars of any
/// radicand. Two irrational scalars must share the radicand.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }
  Scalar(mpq_class a, mpq_class b, int radicand);

  static Scalar fraction(long num, long den);
  /// sqrt(d) for a square-free d > 1.
  static Scalar sqrt(int d);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }
  int radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }
  bool is_rational() const { return d_ == 0; }
  /// -1, 0 or 1; exact since sqrt(d) is irrational.
  int sign() const;
  /// The field conjugate a - b*sqrt(d).
  Scalar conjugate() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  bool operator==(const Scalar& o) const {
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
  }
  /// Lexicographic order on (radicand, a, b); only used for canonical containers.
  bool structurally_less(const Scalar& o) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void normalize();
  int join_radicand(const Scalar& o) const;

  mpq_class a_{0};
  mpq_class b_{0};
  int d_ = 0;
};

bool field_contains(const Field& field, const Scalar& x);

}  // namespace nhlab
