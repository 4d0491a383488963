#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "nhlab/coxeter.hpp"
#include "nhlab/polynomial.hpp"

namespace nhlab {

/// Word -> coefficient, ordered shortlex.
using Coeffs = std::map<Word, Polynomial, WordLess>;

using WordPair = std::pair<Word, Word>;

/// Shortlex on the first word, then on the second.
struct WordPairLess {
  bool operator()(const WordPair& a, const WordPair& b) const {
    WordLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// (v, w) -> coefficient for the two tensor conventions.
using PairCoeffs = std::map<WordPair, Polynomial, WordPairLess>;

/// Shared context of one nil Hecke algebra: the Coxeter system plus caches for
/// commuting polynomials across the generators d[s].
class NilHecke : public std::enable_shared_from_this<NilHecke> {
 public:
  static std::shared_ptr<const NilHecke> create(SystemPtr system);

  const CoxeterSystem& system() const { return *system_; }
  const SystemPtr& system_ptr() const { return system_; }
  std::size_t nvars() const { return system_->nvars(); }

  /// d_v * f in left normal form sum_u h_u d_u.
  Coeffs d_times(const Word& v, const Polynomial& f) const;
  /// f * d_v in right normal form sum_u d_u g_u.
  Coeffs times_d(const Polynomial& f, const Word& v) const;
  /// Canonical word of u*w when lengths add, nullopt when d_u d_w = 0.
  std::optional<Word> d_product(const Word& u, const Word& w) const;
  /// Left normal form of the group element with canonical word w.
  const Coeffs& group_element(const Word& w) const;

  enum class Table { kDelta, kRed };
  /// Memoized per-basis-element tensor data (comultiplication and red map).
  const PairCoeffs& memo(Table table, const Word& w, const std::function<PairCoeffs()>& compute) const;

 private:
  explicit NilHecke(SystemPtr system) : system_(std::move(system)) {}
  const Coeffs& d_times_monomial(const Word& v, const Monomial& m) const;
  const Coeffs& times_d_monomial(const Monomial& m, const Word& v) const;

  SystemPtr system_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<Word, Monomial>, Coeffs> left_cache_;
  mutable std::map<std::pair<Word, Monomial>, Coeffs> right_cache_;
  mutable std::map<std::pair<Word, Word>, std::optional<Word>> product_cache_;
  mutable std::map<Word, Coeffs, WordLess> group_cache_;
  mutable std::map<std::pair<Table, Word>, PairCoeffs> tensor_cache_;
};

using NHPtr = std::shared_ptr<const NilHecke>;

/// Element sum_w f_w d_w of the nil Hecke algebra in left normal form.
class NHElement {
 public:
  NHElement() = default;
  explicit NHElement(NHPtr algebra) : alg_(std::move(algebra)) {}
  NHElement(NHPtr algebra, Coeffs terms);

  static NHElement scalar(const NHPtr& alg, const Scalar& c);
  static NHElement weight(const NHPtr& alg, const Polynomial& f);
  /// The nil Coxeter generator d[s].
  static NHElement d(const NHPtr& alg, int s);
  /// d_w for a canonical word w.
  static NHElement d_word(const NHPtr& alg, const Word& w);
  /// The group generator s = 1 - alpha_s d[s].
  static NHElement group(const NHPtr& alg, int s);
  /// The group element with canonical word w.
  static NHElement group_word(const NHPtr& alg, const Word& w);
  /// Converts sum_u d_u g_u (right coefficients) to left normal form.
  static NHElement from_right_form(const NHPtr& alg, const Coeffs& right);

  const NHPtr& algebra() const { return alg_; }
  const CoxeterSystem& system() const { return alg_->system(); }
  const Coeffs& terms() const& { return terms_; }
  Coeffs terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(const Word& w) const;
  /// The same element as sum_u d_u g_u.
  Coeffs right_form() const;
  /// Largest length in the support; -1 for zero.
  int max_length() const;

  NHElement operator-() const;
  NHElement& operator+=(const NHElement& o);
  NHElement& operator-=(const NHElement& o);
  friend NHElement operator+(NHElement a, const NHElement& b) { return a += b; }
  friend NHElement operator-(NHElement a, const NHElement& b) { return a -= b; }
  friend NHElement operator*(const NHElement& a, const NHElement& b);
  /// Left multiplication by a polynomial.
  friend NHElement operator*(const Polynomial& f, const NHElement& h);
  friend NHElement operator*(const Scalar& c, const NHElement& h);

  bool operator==(const NHElement& o) const;
  bool operator!=(const NHElement& o) const { return !(*this == o); }

 private:
  void add(const Word& w, const Polynomial& f);
  void strip();

  NHPtr alg_;
  Coeffs terms_;
};

NHElement multiply(const NHElement& a, const NHElement& b);
/// h * f for a polynomial f, in left normal form.
NHElement times_poly(const NHElement& h, const Polynomial& f);

/// The divided-difference operator along a word, applied right to left.
Polynomial demazure_word(const CoxeterSystem& sys, const Word& w, const Polynomial& f);
/// Polynomial representation: weights multiply, d[s] acts by divided differences.
Polynomial act(const NHElement& h, const Polynomial& f);
/// epsilon(h) = act(h, 1), the identity coefficient.
Polynomial counit(const NHElement& h);

struct ETrivReport {
  NHElement group_average;
  NHElement demazure_form;
  bool forms_agree = false;
  bool idempotent = false;
};

/// Both expressions of the trivial idempotent for a finite group.
ETrivReport e_triv_report(const NHPtr& alg);
/// The trivial idempotent; throws Internal if the two forms disagree.
NHElement e_triv(const NHPtr& alg);

/// Product of all positive roots as a polynomial.
Polynomial positive_root_product(const CoxeterSystem& sys);

/// All monomials of degree <= d in n variables, graded lexicographic from the top.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree);

struct FaithfulnessReport {
  std::size_t operators = 0;
  std::size_t rank = 0;
  std::size_t inputs = 0;
  bool full_rank() const { return rank == operators; }
};

/// Rank of the operators f_w d_w (deg f_w <= trunc) acting on polynomials of degree <= trunc.
FaithfulnessReport faithfulness_rank(const NHPtr& alg, unsigned trunc);

}  // namespace nhlab
