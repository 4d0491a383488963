#include "nhlab/rational_function.hpp"

#include <algorithm>

#include "nhlab/error.hpp"

namespace nhlab {

namespace {

Polynomial power_product(std::size_t nvars, const std::vector<RationalFunction::Factor>& factors,
                         const std::function<int(const RationalFunction::Factor&)>& exponent) {
  Polynomial out(nvars, Scalar(1));
  for (const auto& f : factors)
    for (int k = exponent(f); k > 0; --k) out = out * f.first;
  return out;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)) {}

RationalFunction::RationalFunction(Polynomial numerator, const Polynomial& denominator)
    : num_(std::move(numerator)) {
  if (denominator.is_zero()) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  std::size_t n = std::max(num_.nvars(), denominator.nvars());
  if (num_.is_zero()) {
    num_ = Polynomial(n);
    return;
  }
  if (denominator.is_constant()) {
    num_ = num_ * denominator.constant_term().inverse();
    return;
  }
  Polynomial den = denominator;
  if (denominator.degree() > 1) {
    Polynomial g = gcd(num_, den);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den = exact_divide(den, g);
    }
    if (den.is_constant()) {
      num_ = num_ * den.constant_term().inverse();
      return;
    }
  }
  num_ = num_ * den.leading_coefficient().inverse();
  add_factor(monic(den), 1);
  cancel();
}

Polynomial RationalFunction::denominator() const {
  return power_product(num_.nvars(), factors_, [](const Factor& f) { return f.second; });
}

void RationalFunction::add_factor(const Polynomial& f, int exponent) {
  for (auto& [g, e] : factors_) {
    if (g == f) {
      e += exponent;
      return;
    }
  }
  factors_.emplace_back(f, exponent);
}

int RationalFunction::exponent_of(const Polynomial& f) const {
  for (const auto& [g, e] : factors_)
    if (g == f) return e;
  return 0;
}

void RationalFunction::cancel() {
  for (auto& [f, e] : factors_) {
    while (e > 0) {
      auto q = try_divide(num_, f);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
}

bool RationalFunction::same_factors(const RationalFunction& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (const auto& [f, e] : factors_)
    if (o.exponent_of(f) != e) return false;
  return true;
}

bool RationalFunction::all_linear() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.first.degree() == 1; });
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero rational function");
  Polynomial den = denominator();
  if (num_.is_constant()) return RationalFunction(den * num_.constant_term().inverse());
  return RationalFunction(den, num_);
}

RationalFunction RationalFunction::transform(const std::function<Polynomial(const Polynomial&)>& automorphism) const {
  RationalFunction out(automorphism(num_));
  for (const auto& [f, e] : factors_) {
    Polynomial g = automorphism(f);
    Scalar lc = g.leading_coefficient();
    Scalar scale = lc.inverse();
    for (int k = 0; k < e; ++k) out.num_ = out.num_ * scale;
    out.add_factor(g * scale, e);
  }
  return out;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (same_factors(o)) {
    num_ += o.num_;
  } else {
    RationalFunction lcm;
    lcm.factors_ = factors_;
    for (const auto& [f, e] : o.factors_) {
      int mine = lcm.exponent_of(f);
      if (e > mine) lcm.add_factor(f, e - mine);
    }
    std::size_t n = std::max(nvars(), o.nvars());
    Polynomial left = power_product(n, lcm.factors_, [&](const Factor& f) { return f.second - exponent_of(f.first); });
    Polynomial right =
        power_product(n, lcm.factors_, [&](const Factor& f) { return f.second - o.exponent_of(f.first); });
    num_ = num_ * left + o.num_ * right;
    factors_ = std::move(lcm.factors_);
  }
  if (num_.is_zero()) {
    factors_.clear();
    return *this;
  }
  cancel();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Polynomial(std::max(nvars(), o.nvars()));
    factors_.clear();
    return *this;
  }
  num_ = num_ * o.num_;
  for (const auto& [f, e] : o.factors_) add_factor(f, e);
  cancel();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

bool RationalFunction::operator==(const RationalFunction& o) const {
  if (same_factors(o)) return num_ == o.num_;
  // Monic linear factors are irreducible and pairwise non-associate, so the reduced
  // representation is unique.
  if (all_linear() && o.all_linear()) return false;
  return num_ * o.denominator() == o.num_ * denominator();
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  if (factors_.empty()) return num_.to_string(names);
  auto wrap = [](const Polynomial& p, const std::string& text) { return p.terms().size() > 1 ? "(" + text + ")" : text; };
  std::vector<std::string> parts;
  for (const auto& [f, e] : factors_) {
    std::string s = wrap(f, f.to_string(names));
    if (e > 1) s += "^" + std::to_string(e);
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string den;
  for (const auto& p : parts) den += (den.empty() ? "" : "*") + p;
  if (parts.size() > 1) den = "(" + den + ")";
  return wrap(num_, num_.to_string(names)) + "/" + den;
}

RationalFunction substitute(const RationalFunction& f, std::span<const Polynomial> images) {
  return RationalFunction(substitute(f.numerator(), images), substitute(f.denominator(), images));
}

}  // namespace nhlab
