#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nhlab/polynomial.hpp"

namespace nhlab {

/// Element of Q = Quot(R). The denominator is kept as a list of monic, pairwise
/// distinct factors with exponents, and the numerator is not divisible by any of
/// them. Denominators built from linear forms are therefore fully reduced without
/// a multivariate gcd; other denominators are reduced by gcd once on construction.
class RationalFunction {
 public:
  using Factor = std::pair<Polynomial, int>;

  RationalFunction() = default;
  explicit RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, const Polynomial& denominator);

  const Polynomial& numerator() const { return num_; }
  /// The expanded (monic) denominator.
  Polynomial denominator() const;
  const std::vector<Factor>& denominator_factors() const { return factors_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return factors_.empty(); }
  std::size_t nvars() const { return num_.nvars(); }

  RationalFunction inverse() const;
  /// Applies a ring automorphism to numerator and every denominator factor.
  RationalFunction transform(const std::function<Polynomial(const Polynomial&)>& automorphism) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  bool operator==(const RationalFunction& o) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_factor(const Polynomial& monic_factor, int exponent);
  int exponent_of(const Polynomial& f) const;
  void cancel();
  bool same_factors(const RationalFunction& o) const;
  bool all_linear() const;

  Polynomial num_;
  std::vector<Factor> factors_;
};

/// Applies a variable substitution to numerator and denominator.
RationalFunction substitute(const RationalFunction& f, std::span<const Polynomial> images);

}  // namespace nhlab
