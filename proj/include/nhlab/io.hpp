#pragma once

#include <string>

#include "nhlab/coxeter.hpp"
#include "nhlab/hopf.hpp"
#include "nhlab/nilhecke.hpp"
#include "nhlab/qstarw.hpp"
#include "nhlab/tensor.hpp"

namespace nhlab {

/// Reads a system description made of `key = value` lines with `#` comments.
///
/// Keys: generators (names separated by spaces or commas), coxeter (rows separated
/// by `;`, `inf` allowed), pairing (`geometric`, `gl(n)` or explicit rows), field
/// (`rational` or `quadratic:5`), finite (`true`/`false`), variables.
/// With `pairing = gl(n)` the generators and the Coxeter matrix may be omitted.
SystemConfig parse_config(const std::string& text);
SystemConfig load_config(const std::string& path);

/// Exact scalar such as `-3/2`, `sqrt5` or `(1+sqrt5)/2`.
Scalar parse_scalar(const std::string& text);

/// Parses an expression over `d[g]`, `w[g]`, declared variables, rational constants,
/// `sqrt5`, `+ - * / ^` and parentheses. Division is only by nonzero constants.
/// Brackets may hold a word, e.g. `d[st]`, meaning the product along it.
NHElement parse_element(const NHPtr& alg, const std::string& text);
/// Same grammar restricted to polynomials in the declared variables.
Polynomial parse_polynomial(const CoxeterSystem& sys, const std::string& text);

std::string render_polynomial(const CoxeterSystem& sys, const Polynomial& f);
/// Left normal form, terms by decreasing length then generator order; round-trips
/// through parse_element.
std::string render_element(const NHElement& h);
/// d_{s1} ... d_{sr} rendered as `d[s1]*...*d[sr]`, `1` for the identity.
std::string render_d_word(const CoxeterSystem& sys, const Word& w);
std::string render_group_word(const CoxeterSystem& sys, const Word& w);
/// Sum of f_u u over group elements; used when all coefficients are polynomials.
std::string render_group_form(const CoxeterSystem& sys, const std::map<Word, Polynomial, WordLess>& terms);
/// Coordinates of h in the group basis when they are all polynomials.
std::optional<std::map<Word, Polynomial, WordLess>> group_coordinates(const NHElement& h);

/// One line stating the tensor convention used by render_blue / render_red.
std::string blue_header();
std::string red_header();
/// Preferred readable form: the group basis in both slots when its coefficients are
/// polynomial, otherwise slot-one d-basis with each slot-two factor in the group basis
/// when possible.
std::string render_blue(const BlueTensor& t);
std::string render_red(const RedTensor& t);
/// The stored normal form: every term f * d_v (x) d_w.
std::string render_blue_normal(const BlueTensor& t);
std::string render_red_normal(const RedTensor& t);

}  // namespace nhlab
