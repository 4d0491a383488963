#include "nhlab/polynomial.hpp"

#include <algorithm>

#include "nhlab/error.hpp"

namespace nhlab {

Polynomial::Polynomial(std::size_t nvars, const Scalar& c) : nvars_(nvars) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars || nvars > kMaxVariables)
    throw Error(ErrorCode::kDimensionMismatch, "variable index out of range");
  return term(nvars, Monomial::variable(index), Scalar(1));
}

Polynomial Polynomial::term(std::size_t nvars, const Monomial& m, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp[var]));
  return d;
}

Polynomial Polynomial::coefficient_in(std::size_t var, int k) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] != k) continue;
    Monomial rest = m;
    rest.exp[var] = 0;
    r.terms_.emplace(rest, c);
  }
  return r;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t Polynomial::join(const Polynomial& o) const {
  if (nvars_ == o.nvars_ || o.nvars_ == 0) return nvars_;
  if (nvars_ == 0) return o.nvars_;
  throw Error(ErrorCode::kRingMismatch, "polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  nvars_ = join(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  nvars_ = join(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.join(b));
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (!(m == it->first) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

namespace {

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_string(m, names);
    std::string coeff;
    bool negative = false;
    Scalar shown = c;
    if (c.is_rational() && c.sign() < 0) {
      negative = true;
      shown = -c;
    } else if (!c.is_rational() && sgn(c.rational_part()) == 0 && c.sign() < 0) {
      negative = true;
      shown = -c;
    }
    if (mono.empty()) {
      coeff = shown.to_string();
    } else if (shown.is_one()) {
      coeff = mono;
    } else {
      coeff = shown.to_string() + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + coeff : coeff;
    } else {
      out += negative ? " - " : " + ";
      out += coeff;
    }
    first = false;
  }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result(p.nvars(), Scalar(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  std::size_t n = images.size();
  std::size_t out_vars = f.nvars();
  for (const auto& img : images) out_vars = std::max(out_vars, img.nvars());
  // powers[j][e] = images[j]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  Polynomial result(out_vars);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t(out_vars, c);
    for (std::size_t j = 0; j < kMaxVariables; ++j) {
      unsigned e = m.exp[j];
      if (e == 0) continue;
      if (j >= n) throw Error(ErrorCode::kDimensionMismatch, "substitution misses a variable");
      auto& pw = powers[j];
      if (pw.empty()) pw.emplace_back(out_vars, Scalar(1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[j]);
      t = t * pw[e];
    }
    result += t;
  }
  return result;
}

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  std::size_t nvars = std::max(f.nvars(), g.nvars());
  Polynomial q(nvars);
  Polynomial r = f;
  const Monomial& lm = g.leading_monomial();
  Scalar lc_inv = g.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    Polynomial t = Polynomial::term(nvars, rm / lm, r.leading_coefficient() * lc_inv);
    r -= t * g;
    q += t;
  }
  return q;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  auto q = try_divide(f, g);
  if (!q) throw Error(ErrorCode::kDivisionNotExact, "polynomial division leaves a remainder");
  return *q;
}

Polynomial exact_divide_linear(const Polynomial& f, const Polynomial& linear) {
  if (linear.degree() > 1 && f.degree() < linear.degree() && !f.is_zero())
    throw Error(ErrorCode::kDivisionNotExact, "divisor degree exceeds dividend degree");
  if (linear.degree() != 1 || !linear.is_homogeneous())
    throw Error(ErrorCode::kInvalidArgument, "divisor is not a homogeneous linear form");
  return exact_divide(f, linear);
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coefficient().inverse();
}

namespace {

int first_variable(const Polynomial& p) {
  int best = -1;
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (m.exp[i] != 0 && (best < 0 || static_cast<int>(i) < best)) best = static_cast<int>(i);
  return best;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  int d = p.degree_in(var);
  for (int k = d; k >= 0; --k) {
    Polynomial c = p.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial shift(const Polynomial& p, std::size_t var, int k) {
  if (k == 0) return p;
  return p * Polynomial::term(p.nvars(), Monomial::variable(var, static_cast<unsigned>(k)), Scalar(1));
}

// Some nonzero multiple of the pseudo-remainder of a by b with respect to var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  int db = b.degree_in(var);
  Polynomial lcb = b.coefficient_in(var, db);
  while (!a.is_zero()) {
    int da = a.degree_in(var);
    if (da < db) break;
    Polynomial lca = a.coefficient_in(var, da);
    a = lcb * a - shift(lca * b, var, da - db);
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  std::size_t nvars = std::max(a.nvars(), b.nvars());
  if (a.is_constant() || b.is_constant()) return Polynomial(nvars, Scalar(1));
  int va = first_variable(a);
  int vb = first_variable(b);
  std::size_t var = static_cast<std::size_t>(std::min(va, vb));
  bool a_has = a.degree_in(var) > 0;
  bool b_has = b.degree_in(var) > 0;
  if (!a_has) return gcd(a, content_in(b, var));
  if (!b_has) return gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = gcd(ca, cb);
  Polynomial pa = monic(exact_divide(a, ca));
  Polynomial pb = monic(exact_divide(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree_in(var) <= 0) {
      // The primitive parts share no factor involving var.
      return monic(c);
    }
    Polynomial r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = Polynomial(nvars);
    } else {
      // Scalar rescaling keeps the coefficient sizes bounded.
      pb = monic(exact_divide(r, content_in(r, var)));
    }
  }
  Polynomial g = exact_divide(pa, content_in(pa, var));
  return monic(c * g);
}

}  // namespace nhlab
