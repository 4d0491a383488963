#include "nhlab/hopf.hpp"

#include <algorithm>

#include "nhlab/error.hpp"

namespace nhlab {

namespace {

// Delta(d_s) = d_s (x) s + 1 (x) d_s, written with coefficients in slot one; red(d_s)
// has the same data with coefficients in slot two.
PairCoeffs generator_data(const CoxeterSystem& sys, int s) {
  std::size_t n = sys.nvars();
  PairCoeffs out;
  out.emplace(WordPair{{s}, {}}, Polynomial(n, Scalar(1)));
  out.emplace(WordPair{{s}, {s}}, -sys.simple_root(s));
  out.emplace(WordPair{{}, {s}}, Polynomial(n, Scalar(1)));
  return out;
}

BlueTensor delta_of_generator(const NHPtr& alg, int s) {
  return BlueTensor(alg, generator_data(alg->system(), s));
}

RedTensor red_of_generator(const NHPtr& alg, int s) {
  return RedTensor(alg, generator_data(alg->system(), s));
}

}  // namespace

const PairCoeffs& delta_basis(const NHPtr& alg, const Word& w) {
  return alg->memo(NilHecke::Table::kDelta, w, [&]() {
    if (w.empty()) return BlueTensor::unit(alg).terms();
    Word rest = alg->system().canonical_form(Word(w.begin() + 1, w.end()));
    BlueTensor tail(alg, delta_basis(alg, rest));
    return blue_mul(delta_of_generator(alg, w.front()), tail, MulMode::kUnchecked).terms();
  });
}

const PairCoeffs& red_basis(const NHPtr& alg, const Word& w) {
  return alg->memo(NilHecke::Table::kRed, w, [&]() {
    if (w.empty()) return RedTensor::unit(alg).terms();
    Word rest = alg->system().canonical_form(Word(w.begin() + 1, w.end()));
    RedTensor tail(alg, red_basis(alg, rest));
    return red_mul_op(red_of_generator(alg, w.front()), tail, MulMode::kUnchecked).terms();
  });
}

BlueTensor delta(const NHElement& h) {
  const NHPtr& alg = h.algebra();
  BlueTensor out(alg);
  for (const auto& [w, f] : h.terms())
    for (const auto& [k, c] : delta_basis(alg, w)) out.add(k.first, k.second, f * c);
  return out;
}

BlueTensor delta_along(const NHPtr& alg, const Word& expression) {
  BlueTensor out = BlueTensor::unit(alg);
  for (int s : expression) out = blue_mul(out, delta_of_generator(alg, s), MulMode::kUnchecked);
  return out;
}

RedTensor red_map(const NHElement& h) {
  const NHPtr& alg = h.algebra();
  RedTensor out(alg);
  // red(f d_w) = red(f) red(d_w) = red(d_w) with slot two multiplied on the right by f.
  for (const auto& [w, f] : h.terms())
    out += red_right_mul_second(RedTensor(alg, red_basis(alg, w)), f);
  return out;
}

BlueTensorN delta_then_left(const NHElement& h) {
  const NHPtr& alg = h.algebra();
  BlueTensorN out(3);
  BlueTensor first = delta(h);
  for (const auto& [k, f] : first.terms())
    for (const auto& [kk, c] : delta_basis(alg, k.first)) out.add({kk.first, kk.second, k.second}, f * c);
  return out;
}

BlueTensorN delta_then_right(const NHElement& h) {
  const NHPtr& alg = h.algebra();
  BlueTensorN out(3);
  BlueTensor first = delta(h);
  for (const auto& [k, f] : first.terms())
    for (const auto& [kk, c] : delta_basis(alg, k.second)) out.add({k.first, kk.first, kk.second}, f * c);
  return out;
}

NHElement counit_first(const BlueTensor& t) {
  NHElement out(t.algebra());
  // epsilon(f d_v) = f when v = 1 and 0 otherwise.
  for (const auto& [k, f] : t.terms())
    if (k.first.empty()) out += NHElement(t.algebra(), Coeffs{{k.second, f}});
  return out;
}

NHElement counit_second(const BlueTensor& t) {
  NHElement out(t.algebra());
  for (const auto& [k, f] : t.terms())
    if (k.second.empty()) out += NHElement(t.algebra(), Coeffs{{k.first, f}});
  return out;
}

NHElement mix_monomial(const NHPtr& alg, const SubexpressionEmbedding& e) {
  NHElement out = NHElement::scalar(alg, Scalar(1));
  for (std::size_t j = 0; j < e.host.size(); ++j)
    out = out * (e.mask[j] ? NHElement::group(alg, e.host[j]) : NHElement::d(alg, e.host[j]));
  return out;
}

RelationReport mixed_relation(const NHPtr& alg, int s, int t, const Word& w) {
  const auto& sys = alg->system();
  if (s == t) throw Error(ErrorCode::kInvalidArgument, "mixed relations need two distinct generators");
  int m = sys.coxeter(s, t);
  if (m == kInfinity) throw Error(ErrorCode::kInfiniteGroup, "mixed relations need a finite m_st");
  Word target = sys.canonical_form(w);
  if (target == sys.longest_element(s, t))
    throw Error(ErrorCode::kInvalidArgument, "the longest element of the parabolic subgroup is excluded");
  for (int x : target)
    if (x != s && x != t) throw Error(ErrorCode::kInvalidArgument, "element outside the parabolic subgroup");

  RelationReport rep;
  rep.w = target;
  rep.s = s;
  rep.t = t;
  rep.lhs = NHElement(alg);
  rep.rhs = NHElement(alg);
  auto collect = [&](const Word& host, std::vector<MixedSummand>& terms, NHElement& sum) {
    for (auto& e : embedded_subexpressions(host)) {
      Word sub = e.subexpression();
      if (!sys.is_reduced(sub) || sys.canonical_form(sub) != target) continue;
      NHElement value = mix_monomial(alg, e);
      sum += value;
      terms.push_back({std::move(e), std::move(value)});
    }
    // Order summands by their kept positions, ascending.
    std::sort(terms.begin(), terms.end(), [](const MixedSummand& a, const MixedSummand& b) {
      std::vector<std::size_t> pa, pb;
      for (std::size_t j = 0; j < a.embedding.mask.size(); ++j)
        if (a.embedding.mask[j]) pa.push_back(j);
      for (std::size_t j = 0; j < b.embedding.mask.size(); ++j)
        if (b.embedding.mask[j]) pb.push_back(j);
      return pa < pb;
    });
  };
  collect(alternating_word(s, t, static_cast<std::size_t>(m)), rep.lhs_terms, rep.lhs);
  collect(alternating_word(t, s, static_cast<std::size_t>(m)), rep.rhs_terms, rep.rhs);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

std::vector<RelationReport> mixed_relations(const NHPtr& alg, int s, int t) {
  const auto& sys = alg->system();
  Word top = sys.longest_element(s, t);
  std::vector<RelationReport> out;
  for (const auto& w : sys.parabolic_elements(s, t))
    if (w != top) out.push_back(mixed_relation(alg, s, t, w));
  return out;
}

ObstructionReport antipode_obstruction_s2(const NHPtr& alg) {
  const auto& sys = alg->system();
  if (sys.rank() != 1 || sys.nvars() != 1 || !(sys.cartan(0, 0) == Scalar(2)))
    throw Error(ErrorCode::kSystemMismatch, "the obstruction report needs the rank-one system with one variable");
  ObstructionReport rep;
  NHElement s = NHElement::group(alg, 0);
  rep.red_of_s = red_map(s);
  rep.s_tensor_s = red_embed(s, s);
  rep.red_is_s_tensor_s = rep.red_of_s == rep.s_tensor_s;

  // In the basis {1 (x) 1, d (x) 1} of the right-free module, s (x) X has 1-component -X
  // because s = d alpha - 1. An antipode would give red(s) = s (x) S(s).
  auto slots = rep.red_of_s.by_first_slot();
  auto it = slots.find(Word{});
  rep.forced_S_of_s = it == slots.end() ? NHElement(alg) : -it->second;
  rep.forced_equals_s = rep.forced_S_of_s == s;

  // 1 - s = S(d) alpha; acting on alpha gives 2 alpha = alpha^2 S(d)(1).
  const Polynomial& alpha = sys.simple_root(0);
  NHElement one_minus_s = NHElement::scalar(alg, Scalar(1)) - s;
  rep.lhs = act(one_minus_s, alpha);
  rep.alpha_squared = alpha * alpha;
  rep.quotient_exists = try_divide(rep.lhs, rep.alpha_squared).has_value();
  rep.degree_obstruction = !rep.lhs.is_zero() && rep.lhs.degree() < rep.alpha_squared.degree();
  rep.unsolvable = !rep.quotient_exists && rep.degree_obstruction;
  const auto& names = sys.ring().names;
  rep.equation = rep.lhs.to_string(names) + " = " + rep.alpha_squared.to_string(names) + "*p";
  return rep;
}

}  // namespace nhlab
