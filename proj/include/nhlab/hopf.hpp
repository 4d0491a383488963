#pragma once

#include <string>
#include <vector>

#include "nhlab/tensor.hpp"

namespace nhlab {

/// Comultiplication on a basis element d_w (canonical word).
const PairCoeffs& delta_basis(const NHPtr& alg, const Word& w);
/// Red map on a basis element d_w (canonical word).
const PairCoeffs& red_basis(const NHPtr& alg, const Word& w);

/// Delta(f d_w) = f * Delta(d_{s1}) ... Delta(d_{sr}) along the canonical word.
BlueTensor delta(const NHElement& h);
/// Delta(d_{s1} ... d_{sr}) multiplied out along an arbitrary expression.
BlueTensor delta_along(const NHPtr& alg, const Word& expression);
RedTensor red_map(const NHElement& h);

/// (Delta (x) id) Delta(h) and (id (x) Delta) Delta(h).
BlueTensorN delta_then_left(const NHElement& h);
BlueTensorN delta_then_right(const NHElement& h);

/// sum epsilon(h_(1)) h_(2) and sum epsilon(h_(2)) h_(1).
NHElement counit_first(const BlueTensor& t);
NHElement counit_second(const BlueTensor& t);

/// Product of group generators at kept letters and d at dropped letters.
NHElement mix_monomial(const NHPtr& alg, const SubexpressionEmbedding& e);

struct MixedSummand {
  SubexpressionEmbedding embedding;
  NHElement value;
};

struct RelationReport {
  Word w;
  int s = 0;
  int t = 0;
  std::vector<MixedSummand> lhs_terms;
  std::vector<MixedSummand> rhs_terms;
  NHElement lhs;
  NHElement rhs;
  bool equal = false;
};

/// The mixed braid relation R_w for the pair (s, t); w must not be the longest element.
RelationReport mixed_relation(const NHPtr& alg, int s, int t, const Word& w);
/// R_w for every w in the parabolic subgroup except the longest, shortlex order.
std::vector<RelationReport> mixed_relations(const NHPtr& alg, int s, int t);

struct ObstructionReport {
  RedTensor red_of_s;
  RedTensor s_tensor_s;
  bool red_is_s_tensor_s = false;
  /// Minus the slot-two coefficient of 1 (x) . in red(s); an antipode would have S(s) equal to it.
  NHElement forced_S_of_s;
  bool forced_equals_s = false;
  /// (1 - s) applied to alpha; should equal alpha^2 * p for p = S(d)(1).
  Polynomial lhs;
  Polynomial alpha_squared;
  bool quotient_exists = false;
  bool degree_obstruction = false;
  bool unsolvable = false;
  std::string equation;
};

/// The no-antipode argument on the rank-one system.
ObstructionReport antipode_obstruction_s2(const NHPtr& alg);

}  // namespace nhlab
