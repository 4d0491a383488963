#include "nhlab/qstarw.hpp"

#include <algorithm>

#include "nhlab/error.hpp"

namespace nhlab {

namespace {

template <class Map, class Key>
void accumulate(Map& out, const Key& k, const RationalFunction& f) {
  if (f.is_zero()) return;
  auto it = out.find(k);
  if (it == out.end()) {
    out.emplace(k, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) out.erase(it);
}

RationalFunction lift(const Polynomial& f) { return RationalFunction(f); }

RationalFunction one(const CoxeterSystem& sys) { return RationalFunction(Polynomial(sys.nvars(), Scalar(1))); }

const SystemPtr& join(const SystemPtr& a, const SystemPtr& b) {
  if (!a) return b;
  if (b && a != b) throw Error(ErrorCode::kSystemMismatch, "oracle elements belong to different systems");
  return a;
}

}  // namespace

QWElement::QWElement(SystemPtr sys, QCoeffs terms) : sys_(std::move(sys)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

QWElement QWElement::scalar(const SystemPtr& sys, const RationalFunction& f) {
  QWElement x(sys);
  x.add({}, f);
  return x;
}

QWElement QWElement::group(const SystemPtr& sys, const Word& w) {
  QWElement x(sys);
  x.add(sys->canonical_form(w), one(*sys));
  return x;
}

RationalFunction QWElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  if (it != terms_.end()) return it->second;
  return RationalFunction(Polynomial(sys_ ? sys_->nvars() : 0));
}

void QWElement::add(const Word& w, const RationalFunction& f) { accumulate(terms_, w, f); }

QWElement& QWElement::operator+=(const QWElement& o) {
  sys_ = join(sys_, o.sys_);
  for (const auto& [w, f] : o.terms_) add(w, f);
  return *this;
}

QWElement& QWElement::operator-=(const QWElement& o) {
  sys_ = join(sys_, o.sys_);
  for (const auto& [w, f] : o.terms_) add(w, -f);
  return *this;
}

QWElement operator*(const RationalFunction& f, const QWElement& x) {
  QWElement out(x.sys_);
  if (f.is_zero()) return out;
  for (const auto& [w, g] : x.terms_) out.add(w, f * g);
  return out;
}

RationalFunction act_rational(const CoxeterSystem& sys, const Word& w, const RationalFunction& f) {
  if (w.empty()) return f;
  return f.transform([&](const Polynomial& p) { return sys.act(w, p); });
}

QWElement qw_mul(const QWElement& a, const QWElement& b) {
  const SystemPtr& sys = join(a.system(), b.system());
  QWElement out(sys);
  for (const auto& [u, f] : a.terms())
    for (const auto& [v, g] : b.terms()) out.add(sys->multiply(u, v), f * act_rational(*sys, u, g));
  return out;
}

QWElement embed_d(const SystemPtr& sys, const Word& w) {
  QWElement out = QWElement::scalar(sys, one(*sys));
  for (int s : w) {
    RationalFunction inv = lift(sys->simple_root(s)).inverse();
    QWElement gen(sys);
    gen.add({}, inv);
    gen.add({s}, -inv);
    out = qw_mul(out, gen);
  }
  return out;
}

QWElement embed(const NHElement& h) {
  const SystemPtr& sys = h.algebra()->system_ptr();
  QWElement out(sys);
  for (const auto& [w, f] : h.terms()) out += lift(f) * embed_d(sys, w);
  return out;
}

QWTensor delta_qw(const QWElement& x) {
  QWTensor out;
  for (const auto& [w, f] : x.terms()) accumulate(out, WordPair{w, w}, f);
  return out;
}

RationalFunction epsilon_qw(const QWElement& x) {
  RationalFunction out(Polynomial(x.system() ? x.system()->nvars() : 0));
  for (const auto& [w, f] : x.terms()) out += f;
  return out;
}

QWTensor red_qw(const QWElement& x) {
  const auto& sys = *x.system();
  QWTensor out;
  for (const auto& [g, f] : x.terms()) {
    Word inv = sys.inverse(g);
    accumulate(out, WordPair{g, inv}, act_rational(sys, inv, f));
  }
  return out;
}

QWElement antipode_qw(const QWElement& x) {
  const auto& sys = *x.system();
  QWElement out(x.system());
  for (const auto& [w, f] : x.terms()) {
    Word inv = sys.inverse(w);
    out.add(inv, act_rational(sys, inv, f));
  }
  return out;
}

QWElement antipode_from_red(const SystemPtr& sys, const QWTensor& red) {
  QWElement out(sys);
  for (const auto& [k, f] : red) out.add(k.second, f);
  return out;
}

QWTensor embed_tensor(const BlueTensor& t) {
  const SystemPtr& sys = t.algebra()->system_ptr();
  QWTensor out;
  std::map<Word, QWElement, WordLess> cache;
  auto image = [&](const Word& w) -> const QWElement& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, embed_d(sys, w)).first;
    return it->second;
  };
  for (const auto& [k, f] : t.terms()) {
    const QWElement& first = image(k.first);
    const QWElement& second = image(k.second);
    for (const auto& [u, c] : first.terms())
      for (const auto& [v, e] : second.terms()) accumulate(out, WordPair{u, v}, lift(f) * c * e);
  }
  return out;
}

QWTensor embed_red_tensor(const RedTensor& t) {
  const SystemPtr& sys = t.algebra()->system_ptr();
  QWTensor out;
  // c u (x) y = u (x) u^{-1}(c) y for the right/left balancing.
  for (const auto& [v, x] : t.by_first_slot()) {
    QWElement first = embed_d(sys, v);
    QWElement second = embed(x);
    for (const auto& [u, c] : first.terms()) {
      QWElement moved = act_rational(*sys, sys->inverse(u), c) * second;
      for (const auto& [w, e] : moved.terms()) accumulate(out, WordPair{u, w}, e);
    }
  }
  return out;
}

bool oracle_equal(const NHElement& a, const NHElement& b) { return embed(a) == embed(b); }

std::optional<Coeffs> nh_coordinates(const QWElement& x) {
  const SystemPtr& sys = x.system();
  Coeffs out;
  QWElement rest = x;
  while (!rest.is_zero()) {
    // Longest support element; embed_d(w) is supported on elements below w.
    Word top = rest.terms().begin()->first;
    for (const auto& [w, f] : rest.terms())
      if (w.size() > top.size()) top = w;
    QWElement image = embed_d(sys, top);
    RationalFunction g = rest.coefficient(top) / image.coefficient(top);
    if (!g.is_polynomial()) return std::nullopt;
    out.emplace(top, g.numerator());
    rest -= g * image;
  }
  return out;
}

bool in_image_of_nh(const QWElement& x) { return nh_coordinates(x).has_value(); }

std::string render_qw(const QWElement& x) {
  if (x.is_zero()) return "0";
  const auto& sys = *x.system();
  const auto& names = sys.ring().names;
  std::string out;
  for (const auto& [w, f] : x.terms()) {
    if (!out.empty()) out += " + ";
    std::string coeff = f.to_string(names);
    if (w.empty()) {
      out += coeff;
    } else {
      bool bare = coeff.find_first_of("/ ") == std::string::npos;
      if (coeff == "1") out += "w[" + sys.word_name(w) + "]";
      else if (coeff == "-1") out += "-w[" + sys.word_name(w) + "]";
      else out += (bare ? coeff : "(" + coeff + ")") + "*w[" + sys.word_name(w) + "]";
    }
  }
  return out;
}

}  // namespace nhlab
