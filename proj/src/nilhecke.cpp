#include "nhlab/nilhecke.hpp"

#include <algorithm>
#include <functional>

#include "nhlab/error.hpp"
#include "nhlab/matrix.hpp"

namespace nhlab {

namespace {

void accumulate(Coeffs& out, const Word& w, const Polynomial& f) {
  if (f.is_zero()) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(w, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) out.erase(it);
}

// d_s * sum_u h_u d_u, all in left normal form.
Coeffs left_mul_d(const CoxeterSystem& sys, int s, const Coeffs& x) {
  Coeffs out;
  for (const auto& [u, h] : x) {
    if (auto su = sys.left_extend(s, u)) accumulate(out, *su, sys.reflect(s, h));
    accumulate(out, u, sys.demazure(s, h));
  }
  return out;
}

void check_same(const NHElement& a, const NHElement& b) {
  if (!a.algebra() || !b.algebra()) throw Error(ErrorCode::kInvalidArgument, "uninitialized nil Hecke element");
  if (a.algebra() != b.algebra() && a.algebra()->system_ptr() != b.algebra()->system_ptr())
    throw Error(ErrorCode::kSystemMismatch, "elements belong to different systems");
}

}  // namespace

std::shared_ptr<const NilHecke> NilHecke::create(SystemPtr system) {
  if (!system) throw Error(ErrorCode::kInvalidArgument, "null system");
  return std::shared_ptr<const NilHecke>(new NilHecke(std::move(system)));
}

const Coeffs& NilHecke::d_times_monomial(const Word& v, const Monomial& m) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(v, m);
  auto it = left_cache_.find(key);
  if (it != left_cache_.end()) return it->second;
  Coeffs result;
  if (v.empty()) {
    result.emplace(Word{}, Polynomial::term(nvars(), m, Scalar(1)));
  } else {
    Word rest(v.begin() + 1, v.end());
    Coeffs inner = d_times_monomial(rest, m);
    result = left_mul_d(*system_, v.front(), inner);
  }
  return left_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const Coeffs& NilHecke::times_d_monomial(const Monomial& m, const Word& v) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(v, m);
  auto it = right_cache_.find(key);
  if (it != right_cache_.end()) return it->second;
  Coeffs result;
  if (v.empty()) {
    result.emplace(Word{}, Polynomial::term(nvars(), m, Scalar(1)));
  } else {
    Word prefix(v.begin(), v.end() - 1);
    int s = v.back();
    // d_p g d_s = d_{ps} s(g) + d_p D_s(g)
    for (const auto& [p, g] : times_d_monomial(m, prefix)) {
      if (auto ps = system_->right_extend(p, s)) accumulate(result, *ps, system_->reflect(s, g));
      accumulate(result, p, system_->demazure(s, g));
    }
  }
  return right_cache_.emplace(std::move(key), std::move(result)).first->second;
}

Coeffs NilHecke::d_times(const Word& v, const Polynomial& f) const {
  Coeffs out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [u, h] : d_times_monomial(v, m)) accumulate(out, u, h * c);
  return out;
}

Coeffs NilHecke::times_d(const Polynomial& f, const Word& v) const {
  Coeffs out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [u, g] : times_d_monomial(m, v)) accumulate(out, u, g * c);
  return out;
}

std::optional<Word> NilHecke::d_product(const Word& u, const Word& w) const {
  if (w.empty()) return u;
  if (u.empty()) return w;
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(u, w);
  auto it = product_cache_.find(key);
  if (it != product_cache_.end()) return it->second;
  std::optional<Word> cur = u;
  for (int s : w) {
    cur = system_->right_extend(*cur, s);
    if (!cur) break;
  }
  product_cache_.emplace(std::move(key), cur);
  return cur;
}

const Coeffs& NilHecke::group_element(const Word& w) const {
  std::lock_guard lock(mutex_);
  auto it = group_cache_.find(w);
  if (it != group_cache_.end()) return it->second;
  Coeffs result;
  if (w.empty()) {
    result.emplace(Word{}, Polynomial(nvars(), Scalar(1)));
  } else {
    int s = w.front();
    Coeffs rest = group_element(system_->canonical_form(Word(w.begin() + 1, w.end())));
    // (1 - alpha_s d_s) X
    result = rest;
    const Polynomial& alpha = system_->simple_root(s);
    for (const auto& [u, h] : left_mul_d(*system_, s, rest)) accumulate(result, u, -(alpha * h));
  }
  return group_cache_.emplace(w, std::move(result)).first->second;
}

const PairCoeffs& NilHecke::memo(Table table, const Word& w, const std::function<PairCoeffs()>& compute) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(table, w);
  auto it = tensor_cache_.find(key);
  if (it != tensor_cache_.end()) return it->second;
  PairCoeffs value = compute();
  return tensor_cache_.emplace(std::move(key), std::move(value)).first->second;
}

NHElement::NHElement(NHPtr algebra, Coeffs terms) : alg_(std::move(algebra)), terms_(std::move(terms)) {
  strip();
}

void NHElement::strip() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

void NHElement::add(const Word& w, const Polynomial& f) { accumulate(terms_, w, f); }

NHElement NHElement::scalar(const NHPtr& alg, const Scalar& c) {
  return weight(alg, Polynomial(alg->nvars(), c));
}

NHElement NHElement::weight(const NHPtr& alg, const Polynomial& f) {
  NHElement h(alg);
  h.add(Word{}, f);
  return h;
}

NHElement NHElement::d(const NHPtr& alg, int s) {
  if (s < 0 || static_cast<std::size_t>(s) >= alg->system().rank())
    throw Error(ErrorCode::kInvalidArgument, "generator index out of range");
  return d_word(alg, Word{s});
}

NHElement NHElement::d_word(const NHPtr& alg, const Word& w) {
  NHElement h(alg);
  h.add(w, Polynomial(alg->nvars(), Scalar(1)));
  return h;
}

NHElement NHElement::group(const NHPtr& alg, int s) {
  if (s < 0 || static_cast<std::size_t>(s) >= alg->system().rank())
    throw Error(ErrorCode::kInvalidArgument, "generator index out of range");
  return group_word(alg, Word{s});
}

NHElement NHElement::group_word(const NHPtr& alg, const Word& w) {
  return NHElement(alg, alg->group_element(w));
}

NHElement NHElement::from_right_form(const NHPtr& alg, const Coeffs& right) {
  NHElement h(alg);
  for (const auto& [u, g] : right)
    for (const auto& [v, f] : alg->d_times(u, g)) h.add(v, f);
  return h;
}

Polynomial NHElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Polynomial(alg_ ? alg_->nvars() : 0) : it->second;
}

Coeffs NHElement::right_form() const {
  Coeffs out;
  for (const auto& [w, f] : terms_)
    for (const auto& [u, g] : alg_->times_d(f, w)) accumulate(out, u, g);
  return out;
}

int NHElement::max_length() const {
  int best = -1;
  for (const auto& [w, f] : terms_) best = std::max(best, static_cast<int>(w.size()));
  return best;
}

NHElement NHElement::operator-() const {
  NHElement h = *this;
  for (auto& [w, f] : h.terms_) f = -f;
  return h;
}

NHElement& NHElement::operator+=(const NHElement& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_) check_same(*this, o);
  for (const auto& [w, f] : o.terms_) add(w, f);
  return *this;
}

NHElement& NHElement::operator-=(const NHElement& o) { return *this += -o; }

NHElement multiply(const NHElement& a, const NHElement& b) {
  check_same(a, b);
  const NilHecke& alg = *a.algebra();
  Coeffs out;
  for (const auto& [v, f] : a.terms())
    for (const auto& [w, g] : b.terms())
      for (const auto& [u, h] : alg.d_times(v, g))
        if (auto uw = alg.d_product(u, w)) accumulate(out, *uw, f * h);
  return NHElement(a.algebra(), std::move(out));
}

NHElement operator*(const NHElement& a, const NHElement& b) { return multiply(a, b); }

NHElement operator*(const Polynomial& f, const NHElement& h) {
  NHElement out(h.alg_);
  if (f.is_zero()) return out;
  for (const auto& [w, g] : h.terms_) out.add(w, f * g);
  return out;
}

NHElement operator*(const Scalar& c, const NHElement& h) {
  NHElement out(h.alg_);
  if (c.is_zero()) return out;
  for (const auto& [w, g] : h.terms_) out.add(w, g * c);
  return out;
}

bool NHElement::operator==(const NHElement& o) const {
  if (alg_ && o.alg_) check_same(*this, o);
  return terms_ == o.terms_;
}

NHElement times_poly(const NHElement& h, const Polynomial& f) {
  return multiply(h, NHElement::weight(h.algebra(), f));
}

Polynomial demazure_word(const CoxeterSystem& sys, const Word& w, const Polynomial& f) {
  Polynomial out = f;
  for (auto it = w.rbegin(); it != w.rend() && !out.is_zero(); ++it) out = sys.demazure(*it, out);
  return out;
}

Polynomial act(const NHElement& h, const Polynomial& f) {
  const auto& sys = h.system();
  Polynomial out(sys.nvars());
  for (const auto& [w, g] : h.terms()) out += g * demazure_word(sys, w, f);
  return out;
}

Polynomial counit(const NHElement& h) { return h.coefficient(Word{}); }

Polynomial positive_root_product(const CoxeterSystem& sys) {
  Polynomial p(sys.nvars(), Scalar(1));
  for (const auto& r : sys.positive_roots()) p = p * sys.root_polynomial(r);
  return p;
}

ETrivReport e_triv_report(const NHPtr& alg) {
  const auto& sys = alg->system();
  auto elements = sys.enumerate(std::nullopt);
  Scalar inv = Scalar::fraction(1, static_cast<long>(elements.size()));
  ETrivReport rep;
  rep.group_average = NHElement(alg);
  for (const auto& w : elements) rep.group_average += NHElement::group_word(alg, w);
  rep.group_average = inv * rep.group_average;
  NHElement top = NHElement::d_word(alg, sys.longest_element());
  rep.demazure_form = inv * (top * NHElement::weight(alg, positive_root_product(sys)));
  rep.forms_agree = rep.group_average == rep.demazure_form;
  rep.idempotent = rep.group_average * rep.group_average == rep.group_average;
  return rep;
}

NHElement e_triv(const NHPtr& alg) {
  auto rep = e_triv_report(alg);
  if (!rep.forms_agree) throw Error(ErrorCode::kInternal, "trivial idempotent forms disagree");
  return rep.group_average;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m;
  // Odometer over exponent vectors with bounded total degree.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == nvars) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.exp[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
    }
    m.exp[i] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

FaithfulnessReport faithfulness_rank(const NHPtr& alg, unsigned trunc) {
  const auto& sys = alg->system();
  auto elements = sys.enumerate(std::nullopt);
  auto inputs = monomials_up_to(sys.nvars(), trunc);
  std::map<Monomial, std::size_t, GrlexGreater> out_index;
  auto index_of = [&](const Monomial& m) {
    auto [it, inserted] = out_index.emplace(m, out_index.size());
    return it->second;
  };
  std::size_t block = monomials_up_to(sys.nvars(), 2 * trunc).size();
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const auto& w : elements) {
    std::vector<Polynomial> images;
    images.reserve(inputs.size());
    for (const auto& in : inputs)
      images.push_back(demazure_word(sys, w, Polynomial::term(sys.nvars(), in, Scalar(1))));
    for (const auto& m : inputs) {
      std::vector<std::pair<std::size_t, Scalar>> row;
      for (std::size_t i = 0; i < inputs.size(); ++i)
        for (const auto& [mono, c] : images[i].terms())
          row.emplace_back(i * block + index_of(m * mono), c);
      rows.push_back(std::move(row));
    }
  }
  FaithfulnessReport rep;
  rep.operators = rows.size();
  rep.inputs = inputs.size();
  rep.rank = sparse_rank(std::move(rows));
  return rep;
}

}  // namespace nhlab
