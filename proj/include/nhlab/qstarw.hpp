#pragma once

#include <map>
#include <optional>
#include <utility>

#include "nhlab/rational_function.hpp"
#include "nhlab/tensor.hpp"

namespace nhlab {

using QCoeffs = std::map<Word, RationalFunction, WordLess>;
using QPairCoeffs = std::map<WordPair, RationalFunction, WordPairLess>;

/// Element sum f_w w of the twisted group algebra over the fraction field.
class QWElement {
 public:
  QWElement() = default;
  explicit QWElement(SystemPtr sys) : sys_(std::move(sys)) {}
  QWElement(SystemPtr sys, QCoeffs terms);

  static QWElement scalar(const SystemPtr& sys, const RationalFunction& f);
  static QWElement group(const SystemPtr& sys, const Word& w);

  const SystemPtr& system() const { return sys_; }
  const QCoeffs& terms() const& { return terms_; }
  QCoeffs terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const Word& w) const;

  void add(const Word& w, const RationalFunction& f);
  QWElement& operator+=(const QWElement& o);
  QWElement& operator-=(const QWElement& o);
  friend QWElement operator+(QWElement a, const QWElement& b) { return a += b; }
  friend QWElement operator-(QWElement a, const QWElement& b) { return a -= b; }
  /// Left multiplication by a scalar of Q.
  friend QWElement operator*(const RationalFunction& f, const QWElement& x);
  bool operator==(const QWElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const QWElement& o) const { return !(*this == o); }

 private:
  SystemPtr sys_;
  QCoeffs terms_;
};

/// w(f) for a rational function f.
RationalFunction act_rational(const CoxeterSystem& sys, const Word& w, const RationalFunction& f);

/// (f u)(g v) = f u(g) uv.
QWElement qw_mul(const QWElement& a, const QWElement& b);

/// Image of d_w: the ordered product of (1/alpha_s)(1 - s).
QWElement embed_d(const SystemPtr& sys, const Word& w);
QWElement embed(const NHElement& h);

/// Tensors over Q. Blue: sum f (u (x) v), free on pairs of group elements.
/// Red: sum u (x) f v with coefficients in slot two.
using QWTensor = QPairCoeffs;

QWTensor delta_qw(const QWElement& x);
RationalFunction epsilon_qw(const QWElement& x);
/// red(f g) = g (x) g^{-1}(f) g^{-1}.
QWTensor red_qw(const QWElement& x);
/// S(f w) = w^{-1}(f) w^{-1}.
QWElement antipode_qw(const QWElement& x);
/// u (x) f v -> f v summed, the normal-form evaluation of (epsilon (x) id) on red tensors.
QWElement antipode_from_red(const SystemPtr& sys, const QWTensor& red);

QWTensor embed_tensor(const BlueTensor& t);
QWTensor embed_red_tensor(const RedTensor& t);

bool oracle_equal(const NHElement& a, const NHElement& b);

/// Coordinates in the Q-basis {d_w}; nullopt when a coefficient is not polynomial.
std::optional<Coeffs> nh_coordinates(const QWElement& x);
bool in_image_of_nh(const QWElement& x);

std::string render_qw(const QWElement& x);

}  // namespace nhlab
