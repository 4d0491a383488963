#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nhlab/nilhecke.hpp"
#include "nhlab/scalar.hpp"

namespace nhlab::gallery {

/// Exponent vector.
using Exps = std::vector<int>;

/// x^x d^d in normal order.
struct WeylMonomial {
  Exps x;
  Exps d;
  auto operator<=>(const WeylMonomial&) const = default;
};

/// Element of the Weyl algebra on x1..xn, d1..dn with d_i x_j = x_j d_i + delta_ij.
class WeylElement {
 public:
  using Terms = std::map<WeylMonomial, Scalar>;

  explicit WeylElement(std::size_t n = 0) : n_(n) {}
  static WeylElement monomial(const Exps& x, const Exps& d, const Scalar& c = Scalar(1));
  static WeylElement x(std::size_t n, std::size_t i);
  static WeylElement d(std::size_t n, std::size_t i);
  static WeylElement scalar(std::size_t n, const Scalar& c);

  std::size_t n() const { return n_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  void add(const WeylMonomial& m, const Scalar& c);

  WeylElement& operator+=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  bool operator==(const WeylElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::size_t n_;
  Terms terms_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
/// The polynomial representation: x acts by multiplication, d by differentiation.
Polynomial weyl_act(const WeylElement& h, const Polynomial& f);

/// Key (c, u, v) of a two-slot Weyl tensor. Blue: x^c d^u (x) d^v. Red: d^u (x) x^c d^v.
struct WeylPairKey {
  Exps coeff;
  Exps first;
  Exps second;
  auto operator<=>(const WeylPairKey&) const = default;
};

struct WeylTensor {
  std::size_t n = 0;
  std::map<WeylPairKey, Scalar> terms;

  void add(const WeylPairKey& k, const Scalar& c);
  bool operator==(const WeylTensor& o) const { return n == o.n && terms == o.terms; }
};

/// Three-slot blue tensor x^c d^u (x) d^v (x) d^w, keyed by (c, u, v, w).
using WeylTriple = std::map<std::vector<Exps>, Scalar>;

WeylTensor weyl_blue_embed(const WeylElement& a, const WeylElement& b);
WeylTensor weyl_red_embed(const WeylElement& a, const WeylElement& b);
WeylTensor weyl_delta(const WeylElement& h);
Polynomial weyl_epsilon(const WeylElement& h);
/// red(x^a d^b) = sum_k binom(b,k) (-1)^{|b-k|} d^k (x) d^{b-k} x^a.
WeylTensor weyl_red(const WeylElement& h);
/// The anti-automorphism fixing x_i and sending d_i to -d_i.
WeylElement weyl_antipode(const WeylElement& h);
/// (id (x) S) applied to Delta(h), written in the red convention.
WeylTensor weyl_red_via_antipode(const WeylElement& h);
bool weyl_takeuchi_blue(const WeylTensor& t);
WeylTensor weyl_blue_mul(const WeylTensor& x, const WeylTensor& y);
WeylTensor weyl_galois(const WeylTensor& red);
WeylTriple weyl_delta_then_left(const WeylElement& h);
WeylTriple weyl_delta_then_right(const WeylElement& h);
WeylElement weyl_counit_first(const WeylTensor& t);
WeylElement weyl_counit_second(const WeylTensor& t);

/// Element of M_n(k) as a dense matrix.
struct MatrixElement {
  std::size_t n = 0;
  std::vector<Scalar> entries;

  static MatrixElement zero(std::size_t n);
  static MatrixElement unit(std::size_t n, std::size_t i, std::size_t j);
  static MatrixElement identity(std::size_t n);
  const Scalar& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  bool operator==(const MatrixElement& o) const = default;
};

MatrixElement matrix_mul(const MatrixElement& a, const MatrixElement& b);
MatrixElement matrix_transpose(const MatrixElement& a);

/// Tensor of matrix units: (a, b, c, d) -> coefficient of E_ab (x) E_cd, normalized to zero
/// outside a == c (blue) or b == c (red).
using MatrixTensor = std::map<std::vector<std::size_t>, Scalar>;

MatrixTensor matrix_blue_embed(const MatrixElement& a, const MatrixElement& b);
MatrixTensor matrix_red_embed(const MatrixElement& a, const MatrixElement& b);
MatrixTensor matrix_delta(const MatrixElement& h);
/// epsilon(h) = h * (1, ..., 1) as an element of the diagonal subalgebra k^n.
std::vector<Scalar> matrix_epsilon(const MatrixElement& h);
MatrixTensor matrix_red(const MatrixElement& h);
MatrixElement matrix_antipode(const MatrixElement& h);
/// rho_epsilon(h)(r) = epsilon(h r) for r in k^n.
std::vector<Scalar> matrix_rho(const MatrixElement& h, const std::vector<Scalar>& r);

struct GalleryCheck {
  std::string fixture;
  std::string name;
  bool pass = false;
  std::string witness;
};

/// Axiom suite for the Weyl algebra on n variables.
std::vector<GalleryCheck> weyl_checks(std::size_t n, std::uint64_t seed, int samples, int max_deg);
/// Exact axiom suite for M_n over the diagonal subalgebra.
std::vector<GalleryCheck> matrix_checks(std::size_t n);

/// Comparison of the nil Hecke comultiplication with the endomorphism bialgebroid of
/// k[a] over k[a^2] on the rank-one system.
struct EndoCase {
  std::string label;
  NHElement h;
  bool agree = false;
  std::string witness;
};

struct FrobeniusWitness {
  /// a * 1^vee in the dual basis {1^vee, a^vee}, as coefficients in k[a^2].
  Polynomial alpha_times_one_dual_on_one;
  Polynomial alpha_times_one_dual_on_alpha;
  bool one_dual_is_torsion = false;
  /// a^vee generates the dual as a k[a]-module: a * a^vee = 1^vee.
  bool alpha_dual_generates = false;
  bool frobenius = false;
};

struct EndoReport {
  std::vector<EndoCase> cases;
  unsigned trunc = 6;
  FrobeniusWitness frobenius;
  bool all_agree() const;
};

EndoReport endo_compare_s2(std::uint64_t seed, int samples, int max_deg, unsigned trunc);

}  // namespace nhlab::gallery
