#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nhlab/matrix.hpp"
#include "nhlab/polynomial.hpp"

namespace nhlab {

/// Coxeter matrix entry standing for m_st = infinity.
inline constexpr int kInfinity = 0;

/// Default ceiling on the number of group elements a full enumeration may visit.
inline constexpr std::size_t kDefaultMaxElements = 1000000;

/// A word over the generators, by index in declaration order.
using Word = std::vector<int>;

/// Shortlex order: shorter first, then lexicographic in generator order.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

enum class PairingKind { kGeometric, kExplicit, kGl };

/// Everything needed to build a CoxeterSystem; produced by the config reader.
struct SystemConfig {
  std::vector<std::string> generators;
  /// m_st, with kInfinity for no relation and 1 on the diagonal.
  std::vector<std::vector<int>> coxeter;
  PairingKind pairing = PairingKind::kGeometric;
  /// explicit_pairing(t, s) = <alpha_t, alpha_s^vee>.
  Matrix explicit_pairing;
  int gl_n = 0;
  Field field;
  bool finite = false;
  /// Optional variable names; defaults are a1..ak or x1..xn.
  std::vector<std::string> variables;
  std::size_t max_elements = kDefaultMaxElements;
};

/// Group element with its canonical (shortlex-minimal) reduced word.
struct GroupElement {
  Word word;
  /// Action on simple-root coordinates; column t is the image of alpha_t.
  Matrix root_action;
  Matrix root_inverse;
  /// Action on the variable span; column j is the image of variable j.
  Matrix var_action;

  std::size_t length() const { return word.size(); }
};

/// Vector in the simple-root basis.
struct Root {
  std::vector<Scalar> coeffs;

  bool is_positive() const;
  bool is_negative() const;
  bool operator==(const Root&) const = default;
};

/// An embedding of a subexpression: mask[j] is true when letter j is kept.
struct SubexpressionEmbedding {
  Word host;
  std::vector<bool> mask;

  Word subexpression() const;
};

class CoxeterSystem {
 public:
  static std::shared_ptr<const CoxeterSystem> build(const SystemConfig& config);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generator_names() const { return generators_; }
  const std::string& generator_name(int s) const { return generators_.at(static_cast<std::size_t>(s)); }
  std::optional<int> generator_index(const std::string& name) const;
  int coxeter(int s, int t) const { return coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }
  /// <alpha_t, alpha_s^vee>.
  const Scalar& cartan(int t, int s) const { return cartan_(static_cast<std::size_t>(t), static_cast<std::size_t>(s)); }
  const PolyRing& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.size(); }
  const Field& field() const { return ring_.field; }
  bool finite() const { return finite_; }
  PairingKind pairing_kind() const { return pairing_; }
  std::size_t max_elements() const { return max_elements_; }

  /// alpha_s as a linear polynomial in the variables.
  const Polynomial& simple_root(int s) const { return simple_roots_.at(static_cast<std::size_t>(s)); }
  Polynomial root_polynomial(const Root& r) const;

  /// Element data for a canonical word (computed on first use).
  const GroupElement& element(const Word& canonical) const;
  Word canonical_form(const Word& expression) const;
  bool is_reduced(const Word& expression) const;
  bool is_left_descent(int s, const Word& w) const;
  bool is_right_descent(const Word& w, int s) const;
  /// Canonical word of s*w when the length goes up, nullopt otherwise.
  std::optional<Word> left_extend(int s, const Word& w) const;
  /// Canonical word of w*s when the length goes up, nullopt otherwise.
  std::optional<Word> right_extend(const Word& w, int s) const;
  Word multiply(const Word& u, const Word& v) const;
  Word inverse(const Word& w) const;

  /// All elements of length <= max_len in shortlex order; nullopt means the whole
  /// group and requires a finite system.
  std::vector<Word> enumerate(std::optional<std::size_t> max_len) const;
  std::vector<Root> positive_roots() const;
  Word longest_element() const;
  Word longest_element(int s, int t) const;
  /// The 2m elements of the parabolic subgroup generated by s and t.
  std::vector<Word> parabolic_elements(int s, int t) const;
  /// Positive roots of w^{-1} sent negative, i.e. the length from the root action.
  std::size_t inversion_count(const Word& w) const;

  Polynomial act(const Word& w, const Polynomial& f) const;
  Polynomial reflect(int s, const Polynomial& f) const;
  /// Divided difference (f - s(f)) / alpha_s.
  Polynomial demazure(int s, const Polynomial& f) const;
  bool is_invariant(const Polynomial& f) const;

  /// Generator names joined, e.g. "sts"; "1" for the identity.
  std::string word_name(const Word& w) const;
  /// Parses a word written as generator names (single letters or space separated).
  Word parse_word(const std::string& text) const;

 private:
  CoxeterSystem() = default;
  std::shared_ptr<GroupElement> compute_element(const Word& canonical) const;
  Matrix inverse_root_action(const Word& expression) const;
  std::vector<Polynomial> var_images(const Matrix& var_action) const;

  std::vector<std::string> generators_;
  std::vector<std::vector<int>> coxeter_;
  Matrix cartan_;
  PolyRing ring_;
  bool finite_ = false;
  PairingKind pairing_ = PairingKind::kGeometric;
  std::size_t max_elements_ = kDefaultMaxElements;
  std::vector<Matrix> root_gens_;
  std::vector<Matrix> var_gens_;
  std::vector<Polynomial> simple_roots_;
  std::vector<std::vector<Polynomial>> reflection_images_;

  mutable std::mutex mutex_;
  mutable std::map<Word, std::shared_ptr<GroupElement>, WordLess> elements_;
  mutable std::map<std::pair<int, Word>, std::optional<Word>> left_cache_;
  mutable std::map<std::pair<Word, int>, std::optional<Word>> right_cache_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/// All 2^|host| embeddings in a fixed order starting with the all-kept mask.
std::vector<SubexpressionEmbedding> embedded_subexpressions(const Word& host);

/// The alternating word s t s t ... with `length` letters.
Word alternating_word(int s, int t, std::size_t length);

/// Rank-one system {s} with variable a and pairing [2].
SystemConfig s2_config();
/// Dihedral system on generators s, t with variables a, b and the default pairing.
SystemConfig dihedral_config(int m);
/// The gl(n) preset: generators 1..n-1 acting on x1..xn by permutations.
SystemConfig gl_config(int n);

/// Reads NHLAB_MAX_ELEMENTS, falling back to kDefaultMaxElements.
std::size_t max_elements_from_env();

}  // namespace nhlab
