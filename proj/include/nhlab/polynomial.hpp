#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nhlab/scalar.hpp"

namespace nhlab {

inline constexpr std::size_t kMaxVariables = 10;

/// Exponent vector over at most kMaxVariables variables.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp[i] = exp[i] + o.exp[i];
    return r;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp[i] = exp[i] - o.exp[i];
    return r;
  }
  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.exp[i] = static_cast<std::uint16_t>(power);
    return m;
  }
};

/// Graded lexicographic order, largest first (x1 > x2 > ... within a degree).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree();
    unsigned db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    return false;
  }
};

/// Names and field of R = Sym(h*); every variable sits in degree 2.
struct PolyRing {
  std::vector<std::string> names;
  Field field;

  std::size_t size() const { return names.size(); }
  bool operator==(const PolyRing&) const = default;
};

/// Sparse multivariate polynomial with exact coefficients.
///
/// A polynomial remembers only its variable count. Constants built without a
/// variable count (nvars == 0) combine with polynomials of any ring.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Scalar& c);

  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(std::size_t nvars, const Monomial& m, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  /// Ordinary total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree in the convention where each variable has degree 2.
  int graded_degree() const { return is_zero() ? -1 : 2 * degree(); }
  bool is_homogeneous() const;
  int degree_in(std::size_t var) const;
  /// Coefficient of var^k, as a polynomial free of var.
  Polynomial coefficient_in(std::size_t var, int k) const;

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Variables not present in `names` are rendered as x<i>.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t join(const Polynomial& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Substitutes images[j] for variable j.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Quotient of an exact division; throws DivisionNotExact otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);
std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g);

/// Division by a homogeneous linear form, as needed by divided differences.
Polynomial exact_divide_linear(const Polynomial& f, const Polynomial& linear);

/// Monic greatest common divisor (leading coefficient 1 under grlex).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Divides by the leading coefficient; zero stays zero.
Polynomial monic(const Polynomial& p);

}  // namespace nhlab
