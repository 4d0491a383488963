#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nhlab/nilhecke.hpp"

namespace nhlab {

/// Whether products assert the Takeuchi condition on the factor that needs it.
enum class MulMode { kChecked, kUnchecked };

/// Element of H (x) H balanced over left/left actions: sum f_{v,w} (d_v (x) d_w),
/// with every coefficient stored in slot one.
class BlueTensor {
 public:
  BlueTensor() = default;
  explicit BlueTensor(NHPtr alg) : alg_(std::move(alg)) {}
  BlueTensor(NHPtr alg, PairCoeffs terms);

  /// 1 (x) 1.
  static BlueTensor unit(const NHPtr& alg);

  const NHPtr& algebra() const { return alg_; }
  const PairCoeffs& terms() const& { return terms_; }
  PairCoeffs terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  /// sum_v d_v (x) Y_v.
  std::map<Word, NHElement, WordLess> by_first_slot() const;

  BlueTensor& operator+=(const BlueTensor& o);
  BlueTensor& operator-=(const BlueTensor& o);
  friend BlueTensor operator+(BlueTensor a, const BlueTensor& b) { return a += b; }
  friend BlueTensor operator-(BlueTensor a, const BlueTensor& b) { return a -= b; }
  /// Left R-module structure.
  friend BlueTensor operator*(const Polynomial& f, const BlueTensor& t);
  bool operator==(const BlueTensor& o) const { return terms_ == o.terms_; }
  bool operator!=(const BlueTensor& o) const { return !(*this == o); }

  void add(const Word& v, const Word& w, const Polynomial& f);

 private:
  NHPtr alg_;
  PairCoeffs terms_;
};

/// Element of H (x) H balanced over right/left actions: sum d_v (x) (f_{v,w} d_w),
/// with every coefficient stored in slot two.
class RedTensor {
 public:
  RedTensor() = default;
  explicit RedTensor(NHPtr alg) : alg_(std::move(alg)) {}
  RedTensor(NHPtr alg, PairCoeffs terms);

  static RedTensor unit(const NHPtr& alg);

  const NHPtr& algebra() const { return alg_; }
  const PairCoeffs& terms() const& { return terms_; }
  PairCoeffs terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  /// sum_v d_v (x) X_v.
  std::map<Word, NHElement, WordLess> by_first_slot() const;

  RedTensor& operator+=(const RedTensor& o);
  RedTensor& operator-=(const RedTensor& o);
  friend RedTensor operator+(RedTensor a, const RedTensor& b) { return a += b; }
  friend RedTensor operator-(RedTensor a, const RedTensor& b) { return a -= b; }
  bool operator==(const RedTensor& o) const { return terms_ == o.terms_; }
  bool operator!=(const RedTensor& o) const { return !(*this == o); }

  void add(const Word& v, const Word& w, const Polynomial& f);

 private:
  NHPtr alg_;
  PairCoeffs terms_;
};

/// n-fold blue tensor, coefficients in slot one.
class BlueTensorN {
 public:
  using Key = std::vector<Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };
  using Terms = std::map<Key, Polynomial, KeyLess>;

  BlueTensorN() = default;
  explicit BlueTensorN(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  void add(const Key& k, const Polynomial& f);
  bool operator==(const BlueTensorN& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

BlueTensor blue_embed(const NHElement& a, const NHElement& b);
RedTensor red_embed(const NHElement& a, const NHElement& b);

/// sum (h_i r) (x) h_i' and sum h_i (x) (h_i' r) for a polynomial r.
BlueTensor blue_right_mul_first(const BlueTensor& t, const Polynomial& r);
BlueTensor blue_right_mul_second(const BlueTensor& t, const Polynomial& r);
/// sum (r h_i) (x) h_i' and sum h_i (x) (h_i' r) for a polynomial r.
RedTensor red_left_mul_first(const RedTensor& t, const Polynomial& r);
RedTensor red_right_mul_second(const RedTensor& t, const Polynomial& r);

/// Takeuchi condition, tested on every variable (they generate R).
bool takeuchi_blue(const BlueTensor& t);
bool takeuchi_red(const RedTensor& t);

/// Componentwise product; the left factor must be Takeuchi for this to be well defined.
BlueTensor blue_mul(const BlueTensor& x, const BlueTensor& y, MulMode mode = MulMode::kChecked);
/// (a (x) b)(c (x) d) = ac (x) db; the right factor must be Takeuchi.
RedTensor red_mul_op(const RedTensor& x, const RedTensor& y, MulMode mode = MulMode::kChecked);

BlueTensor swap(const BlueTensor& t);
/// t with slot two multiplied on the right by h.
RedTensor right_act_second(const RedTensor& t, const NHElement& h);
/// sum d_v (x) X_v  ->  sum Delta(d_v) (1 (x) X_v).
BlueTensor galois(const RedTensor& t);

}  // namespace nhlab
