#include "nhlab/tensor.hpp"

#include "nhlab/error.hpp"
#include "nhlab/hopf.hpp"

namespace nhlab {

namespace {

void accumulate(PairCoeffs& out, const Word& v, const Word& w, const Polynomial& f) {
  if (f.is_zero()) return;
  auto key = std::make_pair(v, w);
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(std::move(key), f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) out.erase(it);
}

const NHPtr& join(const NHPtr& a, const NHPtr& b) {
  if (!a) return b;
  if (b && a != b && a->system_ptr() != b->system_ptr())
    throw Error(ErrorCode::kSystemMismatch, "tensors belong to different systems");
  return a;
}

std::map<Word, NHElement, WordLess> group_first(const NHPtr& alg, const PairCoeffs& terms) {
  std::map<Word, NHElement, WordLess> out;
  for (const auto& [key, f] : terms) {
    auto [it, inserted] = out.try_emplace(key.first, alg);
    it->second += NHElement(alg, Coeffs{{key.second, f}});
  }
  return out;
}

}  // namespace

BlueTensor::BlueTensor(NHPtr alg, PairCoeffs terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

BlueTensor BlueTensor::unit(const NHPtr& alg) {
  BlueTensor t(alg);
  t.add({}, {}, Polynomial(alg->nvars(), Scalar(1)));
  return t;
}

void BlueTensor::add(const Word& v, const Word& w, const Polynomial& f) { accumulate(terms_, v, w, f); }

std::map<Word, NHElement, WordLess> BlueTensor::by_first_slot() const { return group_first(alg_, terms_); }

BlueTensor& BlueTensor::operator+=(const BlueTensor& o) {
  alg_ = join(alg_, o.alg_);
  for (const auto& [k, f] : o.terms_) add(k.first, k.second, f);
  return *this;
}

BlueTensor& BlueTensor::operator-=(const BlueTensor& o) {
  alg_ = join(alg_, o.alg_);
  for (const auto& [k, f] : o.terms_) add(k.first, k.second, -f);
  return *this;
}

BlueTensor operator*(const Polynomial& f, const BlueTensor& t) {
  BlueTensor out(t.alg_);
  if (f.is_zero()) return out;
  for (const auto& [k, g] : t.terms_) out.add(k.first, k.second, f * g);
  return out;
}

RedTensor::RedTensor(NHPtr alg, PairCoeffs terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

RedTensor RedTensor::unit(const NHPtr& alg) {
  RedTensor t(alg);
  t.add({}, {}, Polynomial(alg->nvars(), Scalar(1)));
  return t;
}

void RedTensor::add(const Word& v, const Word& w, const Polynomial& f) { accumulate(terms_, v, w, f); }

std::map<Word, NHElement, WordLess> RedTensor::by_first_slot() const { return group_first(alg_, terms_); }

RedTensor& RedTensor::operator+=(const RedTensor& o) {
  alg_ = join(alg_, o.alg_);
  for (const auto& [k, f] : o.terms_) add(k.first, k.second, f);
  return *this;
}

RedTensor& RedTensor::operator-=(const RedTensor& o) {
  alg_ = join(alg_, o.alg_);
  for (const auto& [k, f] : o.terms_) add(k.first, k.second, -f);
  return *this;
}

bool BlueTensorN::KeyLess::operator()(const Key& a, const Key& b) const {
  WordLess less;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (less(a[i], b[i])) return true;
    if (less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

void BlueTensorN::add(const Key& k, const Polynomial& f) {
  if (f.is_zero()) return;
  if (k.size() != arity_) throw Error(ErrorCode::kDimensionMismatch, "tensor arity mismatch");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

BlueTensor blue_embed(const NHElement& a, const NHElement& b) {
  BlueTensor out(join(a.algebra(), b.algebra()));
  // f d_v (x) g d_w = f g (d_v (x) d_w): left coefficients of slot two move across.
  for (const auto& [v, f] : a.terms())
    for (const auto& [w, g] : b.terms()) out.add(v, w, f * g);
  return out;
}

RedTensor red_embed(const NHElement& a, const NHElement& b) {
  RedTensor out(join(a.algebra(), b.algebra()));
  // d_u g (x) h d_w = d_u (x) g h d_w: right coefficients of slot one move across.
  for (const auto& [u, g] : a.right_form())
    for (const auto& [w, h] : b.terms()) out.add(u, w, g * h);
  return out;
}

BlueTensor blue_right_mul_first(const BlueTensor& t, const Polynomial& r) {
  const NHPtr& alg = t.algebra();
  BlueTensor out(alg);
  for (const auto& [k, f] : t.terms())
    for (const auto& [u, h] : alg->d_times(k.first, r)) out.add(u, k.second, f * h);
  return out;
}

BlueTensor blue_right_mul_second(const BlueTensor& t, const Polynomial& r) {
  const NHPtr& alg = t.algebra();
  BlueTensor out(alg);
  for (const auto& [k, f] : t.terms())
    for (const auto& [u, h] : alg->d_times(k.second, r)) out.add(k.first, u, f * h);
  return out;
}

RedTensor red_left_mul_first(const RedTensor& t, const Polynomial& r) {
  const NHPtr& alg = t.algebra();
  RedTensor out(alg);
  for (const auto& [k, f] : t.terms())
    for (const auto& [u, g] : alg->times_d(r, k.first)) out.add(u, k.second, g * f);
  return out;
}

RedTensor red_right_mul_second(const RedTensor& t, const Polynomial& r) {
  const NHPtr& alg = t.algebra();
  RedTensor out(alg);
  for (const auto& [k, f] : t.terms())
    for (const auto& [u, h] : alg->d_times(k.second, r)) out.add(k.first, u, f * h);
  return out;
}

bool takeuchi_blue(const BlueTensor& t) {
  if (t.is_zero()) return true;
  std::size_t n = t.algebra()->nvars();
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial x = Polynomial::variable(n, i);
    if (blue_right_mul_first(t, x) != blue_right_mul_second(t, x)) return false;
  }
  return true;
}

bool takeuchi_red(const RedTensor& t) {
  if (t.is_zero()) return true;
  std::size_t n = t.algebra()->nvars();
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial x = Polynomial::variable(n, i);
    if (red_left_mul_first(t, x) != red_right_mul_second(t, x)) return false;
  }
  return true;
}

BlueTensor blue_mul(const BlueTensor& x, const BlueTensor& y, MulMode mode) {
  const NHPtr& alg = join(x.algebra(), y.algebra());
  if (mode == MulMode::kChecked && !takeuchi_blue(x))
    throw Error(ErrorCode::kTakeuchiViolation, "left factor is not in the blue Takeuchi product");
  BlueTensor out(alg);
  if (x.is_zero() || y.is_zero()) return out;
  for (const auto& [kx, f] : x.terms()) {
    for (const auto& [ky, g] : y.terms()) {
      auto second = alg->d_product(kx.second, ky.second);
      if (!second) continue;
      // f d_v g d_a = f sum_u h_u d_u d_a
      for (const auto& [u, h] : alg->d_times(kx.first, g))
        if (auto first = alg->d_product(u, ky.first)) out.add(*first, *second, f * h);
    }
  }
  return out;
}

RedTensor red_mul_op(const RedTensor& x, const RedTensor& y, MulMode mode) {
  const NHPtr& alg = join(x.algebra(), y.algebra());
  if (mode == MulMode::kChecked && !takeuchi_red(y))
    throw Error(ErrorCode::kTakeuchiViolation, "right factor is not in the red Takeuchi product");
  RedTensor out(alg);
  if (x.is_zero() || y.is_zero()) return out;
  for (const auto& [kx, f] : x.terms()) {
    for (const auto& [ky, g] : y.terms()) {
      auto first = alg->d_product(kx.first, ky.first);
      if (!first) continue;
      // (g d_b)(f d_w) = g sum_u h_u d_u d_w
      for (const auto& [u, h] : alg->d_times(ky.second, f))
        if (auto second = alg->d_product(u, kx.second)) out.add(*first, *second, g * h);
    }
  }
  return out;
}

BlueTensor swap(const BlueTensor& t) {
  BlueTensor out(t.algebra());
  for (const auto& [k, f] : t.terms()) out.add(k.second, k.first, f);
  return out;
}

RedTensor right_act_second(const RedTensor& t, const NHElement& h) {
  const NHPtr& alg = join(t.algebra(), h.algebra());
  RedTensor out(alg);
  for (const auto& [v, x] : t.by_first_slot()) {
    NHElement y = multiply(x, h);
    for (const auto& [w, f] : y.terms()) out.add(v, w, f);
  }
  return out;
}

BlueTensor galois(const RedTensor& t) {
  const NHPtr& alg = t.algebra();
  BlueTensor out(alg);
  for (const auto& [v, x] : t.by_first_slot()) {
    for (const auto& [k, c] : delta_basis(alg, v)) {
      NHElement tail = multiply(NHElement::d_word(alg, k.second), x);
      for (const auto& [u, h] : tail.terms()) out.add(k.first, u, c * h);
    }
  }
  return out;
}

}  // namespace nhlab
