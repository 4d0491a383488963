#include "nhlab/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

#include "nhlab/error.hpp"

namespace nhlab {

namespace {

bool vector_is_negative(const std::vector<Scalar>& v) {
  for (const auto& x : v) {
    int sg = x.sign();
    if (sg != 0) return sg < 0;
  }
  return false;
}

// Default <alpha_s, alpha_t^vee> and <alpha_t, alpha_s^vee> for s declared before t.
std::pair<Scalar, Scalar> geometric_pair(int m, const Field& field) {
  switch (m) {
    case 2: return {Scalar(0), Scalar(0)};
    case 3: return {Scalar(-1), Scalar(-1)};
    case 4: return {Scalar(-1), Scalar(-2)};
    case 6: return {Scalar(-1), Scalar(-3)};
    case 5: {
      if (field.radicand != 5)
        throw Error(ErrorCode::kUnsupportedField, "m_st = 5 needs field quadratic:5");
      // -2cos(pi/5) = -(1 + sqrt5)/2
      Scalar phi(mpq_class(1, 2), mpq_class(1, 2), 5);
      return {-phi, -phi};
    }
    case kInfinity: return {Scalar(-2), Scalar(-2)};
    default:
      throw Error(ErrorCode::kUnsupportedField,
                  "m_st = " + std::to_string(m) + " is not representable over " + field.name());
  }
}

bool is_identifier(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

bool Root::is_positive() const {
  bool any = false;
  for (const auto& c : coeffs) {
    int sg = c.sign();
    if (sg < 0) return false;
    any = any || sg > 0;
  }
  return any;
}

bool Root::is_negative() const {
  bool any = false;
  for (const auto& c : coeffs) {
    int sg = c.sign();
    if (sg > 0) return false;
    any = any || sg < 0;
  }
  return any;
}

Word SubexpressionEmbedding::subexpression() const {
  Word out;
  for (std::size_t j = 0; j < host.size(); ++j)
    if (mask[j]) out.push_back(host[j]);
  return out;
}

std::vector<SubexpressionEmbedding> embedded_subexpressions(const Word& host) {
  std::size_t n = host.size();
  if (n > 24) throw Error(ErrorCode::kInvalidArgument, "host expression too long");
  std::vector<SubexpressionEmbedding> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    SubexpressionEmbedding e{host, std::vector<bool>(n)};
    for (std::size_t j = 0; j < n; ++j) e.mask[j] = ((i >> (n - 1 - j)) & 1U) == 0;
    out.push_back(std::move(e));
  }
  return out;
}

Word alternating_word(int s, int t, std::size_t length) {
  Word w(length);
  for (std::size_t i = 0; i < length; ++i) w[i] = (i % 2 == 0) ? s : t;
  return w;
}

SystemConfig s2_config() {
  SystemConfig c;
  c.generators = {"s"};
  c.coxeter = {{1}};
  c.variables = {"a"};
  c.finite = true;
  return c;
}

SystemConfig dihedral_config(int m) {
  SystemConfig c;
  c.generators = {"s", "t"};
  c.coxeter = {{1, m}, {m, 1}};
  c.variables = {"a", "b"};
  c.finite = m != kInfinity;
  if (m == 5) c.field = Field::quadratic(5);
  return c;
}

SystemConfig gl_config(int n) {
  SystemConfig c;
  c.pairing = PairingKind::kGl;
  c.gl_n = n;
  c.finite = true;
  return c;
}

std::size_t max_elements_from_env() {
  const char* env = std::getenv("NHLAB_MAX_ELEMENTS");
  if (env == nullptr || *env == '\0') return kDefaultMaxElements;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw Error(ErrorCode::kConfig, "NHLAB_MAX_ELEMENTS must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(const SystemConfig& config) {
  std::shared_ptr<CoxeterSystem> sys(new CoxeterSystem());
  if (config.field.radicand != 0 && config.field.radicand != 5)
    throw Error(ErrorCode::kUnsupportedField, "supported fields are rational and quadratic:5");
  sys->pairing_ = config.pairing;
  sys->finite_ = config.finite;
  sys->max_elements_ = config.max_elements;

  std::size_t k = 0;
  std::size_t nvars = 0;
  if (config.pairing == PairingKind::kGl) {
    if (config.gl_n < 2) throw Error(ErrorCode::kConfig, "gl(n) needs n >= 2");
    nvars = static_cast<std::size_t>(config.gl_n);
    k = nvars - 1;
    if (config.generators.empty()) {
      for (std::size_t i = 1; i <= k; ++i) sys->generators_.push_back(std::to_string(i));
    } else {
      sys->generators_ = config.generators;
    }
    if (sys->generators_.size() != k) throw Error(ErrorCode::kConfig, "gl(n) needs n-1 generators");
    sys->coxeter_.assign(k, std::vector<int>(k, 2));
    for (std::size_t i = 0; i < k; ++i) {
      sys->coxeter_[i][i] = 1;
      if (i + 1 < k) sys->coxeter_[i][i + 1] = sys->coxeter_[i + 1][i] = 3;
    }
    if (!config.coxeter.empty() && config.coxeter != sys->coxeter_)
      throw Error(ErrorCode::kConfig, "gl(n) preset requires the type A Coxeter matrix");
    // The symmetric group is finite; the flag is implied by the preset.
    sys->finite_ = true;
  } else {
    sys->generators_ = config.generators;
    k = sys->generators_.size();
    nvars = k;
    if (k == 0) throw Error(ErrorCode::kConfig, "no generators declared");
    sys->coxeter_ = config.coxeter;
  }
  if (k == 0 || nvars > kMaxVariables)
    throw Error(ErrorCode::kConfig, "rank must be between 1 and " + std::to_string(kMaxVariables));
  {
    std::set<std::string> seen;
    for (const auto& g : sys->generators_) {
      if (g.empty() || g.find_first_of(" \t[]") != std::string::npos)
        throw Error(ErrorCode::kConfig, "invalid generator name '" + g + "'");
      if (!seen.insert(g).second) throw Error(ErrorCode::kConfig, "duplicate generator '" + g + "'");
    }
  }
  if (sys->coxeter_.size() != k) throw Error(ErrorCode::kConfig, "Coxeter matrix has the wrong size");
  for (std::size_t s = 0; s < k; ++s) {
    if (sys->coxeter_[s].size() != k) throw Error(ErrorCode::kConfig, "Coxeter matrix has the wrong size");
    for (std::size_t t = 0; t < k; ++t) {
      int m = sys->coxeter_[s][t];
      if (s == t && m != 1) throw Error(ErrorCode::kConfig, "Coxeter matrix diagonal must be 1");
      if (s != t && m != kInfinity && m < 2) throw Error(ErrorCode::kConfig, "m_st must be >= 2 or inf");
    }
  }
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t)
      if (sys->coxeter_[s][t] != sys->coxeter_[t][s])
        throw Error(ErrorCode::kConfig, "Coxeter matrix must be symmetric");

  // Cartan data.
  sys->cartan_ = Matrix(k, k);
  if (config.pairing == PairingKind::kExplicit) {
    if (config.explicit_pairing.rows() != k || config.explicit_pairing.cols() != k)
      throw Error(ErrorCode::kConfig, "pairing matrix has the wrong size");
    sys->cartan_ = config.explicit_pairing;
  } else {
    for (std::size_t s = 0; s < k; ++s) {
      sys->cartan_(s, s) = Scalar(2);
      for (std::size_t t = s + 1; t < k; ++t) {
        auto [st, ts] = geometric_pair(sys->coxeter_[s][t], config.field);
        sys->cartan_(s, t) = st;
        sys->cartan_(t, s) = ts;
      }
    }
  }
  for (std::size_t s = 0; s < k; ++s) {
    if (!(sys->cartan_(s, s) == Scalar(2))) throw Error(ErrorCode::kConfig, "pairing diagonal must be 2");
    for (std::size_t t = 0; t < k; ++t)
      if (!field_contains(config.field, sys->cartan_(s, t)))
        throw Error(ErrorCode::kUnsupportedField, "pairing entry outside the configured field");
  }

  // Variables.
  sys->ring_.field = config.field;
  if (!config.variables.empty()) {
    sys->ring_.names = config.variables;
  } else {
    std::string prefix = config.pairing == PairingKind::kGl ? "x" : "a";
    for (std::size_t i = 1; i <= nvars; ++i) sys->ring_.names.push_back(prefix + std::to_string(i));
  }
  if (sys->ring_.names.size() != nvars) throw Error(ErrorCode::kConfig, "wrong number of variable names");
  {
    std::set<std::string> seen;
    for (const auto& v : sys->ring_.names) {
      if (!is_identifier(v) || v == "d" || v == "w" || v.rfind("sqrt", 0) == 0)
        throw Error(ErrorCode::kConfig, "invalid variable name '" + v + "'");
      if (!seen.insert(v).second) throw Error(ErrorCode::kConfig, "duplicate variable '" + v + "'");
    }
  }

  // Generator actions: s(alpha_t) = alpha_t - <alpha_t, alpha_s^vee> alpha_s.
  for (std::size_t s = 0; s < k; ++s) {
    Matrix m = Matrix::identity(k);
    for (std::size_t t = 0; t < k; ++t) m(s, t) -= sys->cartan_(t, s);
    sys->root_gens_.push_back(std::move(m));
  }
  if (config.pairing == PairingKind::kGl) {
    for (std::size_t s = 0; s < k; ++s) {
      Matrix m(nvars, nvars);
      for (std::size_t j = 0; j < nvars; ++j) {
        std::size_t image = j == s ? s + 1 : (j == s + 1 ? s : j);
        m(image, j) = Scalar(1);
      }
      sys->var_gens_.push_back(std::move(m));
      sys->simple_roots_.push_back(Polynomial::variable(nvars, s) - Polynomial::variable(nvars, s + 1));
    }
  } else {
    sys->var_gens_ = sys->root_gens_;
    for (std::size_t s = 0; s < k; ++s) sys->simple_roots_.push_back(Polynomial::variable(nvars, s));
  }
  for (std::size_t s = 0; s < k; ++s) {
    if (!(sys->root_gens_[s] * sys->root_gens_[s]).is_identity())
      throw Error(ErrorCode::kInternal, "generator action is not an involution");
    sys->reflection_images_.push_back(sys->var_images(sys->var_gens_[s]));
  }

  // Braid orders.
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = s + 1; t < k; ++t) {
      int m = sys->coxeter_[s][t];
      Matrix prod = sys->root_gens_[s] * sys->root_gens_[t];
      Matrix power = prod;
      int order = 1;
      int limit = m == kInfinity ? 12 : m;
      while (!power.is_identity() && order < limit) {
        power = power * prod;
        ++order;
      }
      bool ok = m == kInfinity ? !power.is_identity() : (power.is_identity() && order == m);
      if (!ok)
        throw Error(ErrorCode::kConfig, "pairing is inconsistent with m(" + sys->generators_[s] + "," +
                                            sys->generators_[t] + ")");
    }
  return sys;
}

std::optional<int> CoxeterSystem::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

Polynomial CoxeterSystem::root_polynomial(const Root& r) const {
  Polynomial p(nvars());
  for (std::size_t s = 0; s < rank(); ++s)
    if (!r.coeffs[s].is_zero()) p += simple_roots_[s] * r.coeffs[s];
  return p;
}

std::vector<Polynomial> CoxeterSystem::var_images(const Matrix& var_action) const {
  std::size_t n = ring_.size();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial img(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!var_action(i, j).is_zero()) img.add_term(Monomial::variable(i), var_action(i, j));
    images.push_back(std::move(img));
  }
  return images;
}

Matrix CoxeterSystem::inverse_root_action(const Word& expression) const {
  Matrix inv = Matrix::identity(rank());
  for (int s : expression) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank())
      throw Error(ErrorCode::kInvalidArgument, "letter outside the generating set");
    inv = root_gens_[static_cast<std::size_t>(s)] * inv;
  }
  return inv;
}

Word CoxeterSystem::canonical_form(const Word& expression) const {
  Matrix inv = inverse_root_action(expression);
  Word word;
  while (true) {
    int descent = -1;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (vector_is_negative(inv.column(s))) {
        descent = static_cast<int>(s);
        break;
      }
    }
    if (descent < 0) break;
    word.push_back(descent);
    if (word.size() > expression.size())
      throw Error(ErrorCode::kConfig, "pairing does not realize a root system");
    inv = inv * root_gens_[static_cast<std::size_t>(descent)];
  }
  return word;
}

std::shared_ptr<GroupElement> CoxeterSystem::compute_element(const Word& canonical) const {
  auto e = std::make_shared<GroupElement>();
  e->word = canonical;
  e->root_action = Matrix::identity(rank());
  e->root_inverse = Matrix::identity(rank());
  e->var_action = Matrix::identity(nvars());
  for (int s : canonical) {
    auto idx = static_cast<std::size_t>(s);
    e->root_action = e->root_action * root_gens_[idx];
    e->root_inverse = root_gens_[idx] * e->root_inverse;
    e->var_action = e->var_action * var_gens_[idx];
  }
  return e;
}

const GroupElement& CoxeterSystem::element(const Word& canonical) const {
  {
    std::lock_guard lock(mutex_);
    auto it = elements_.find(canonical);
    if (it != elements_.end()) return *it->second;
  }
  auto e = compute_element(canonical);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = elements_.emplace(canonical, std::move(e));
  return *it->second;
}

bool CoxeterSystem::is_reduced(const Word& expression) const {
  return canonical_form(expression).size() == expression.size();
}

bool CoxeterSystem::is_left_descent(int s, const Word& w) const {
  return vector_is_negative(element(w).root_inverse.column(static_cast<std::size_t>(s)));
}

bool CoxeterSystem::is_right_descent(const Word& w, int s) const {
  return vector_is_negative(element(w).root_action.column(static_cast<std::size_t>(s)));
}

std::optional<Word> CoxeterSystem::left_extend(int s, const Word& w) const {
  auto key = std::make_pair(s, w);
  {
    std::lock_guard lock(mutex_);
    auto it = left_cache_.find(key);
    if (it != left_cache_.end()) return it->second;
  }
  std::optional<Word> result;
  if (!is_left_descent(s, w)) {
    Word expr{s};
    expr.insert(expr.end(), w.begin(), w.end());
    result = canonical_form(expr);
  }
  std::lock_guard lock(mutex_);
  left_cache_.emplace(std::move(key), result);
  return result;
}

std::optional<Word> CoxeterSystem::right_extend(const Word& w, int s) const {
  auto key = std::make_pair(w, s);
  {
    std::lock_guard lock(mutex_);
    auto it = right_cache_.find(key);
    if (it != right_cache_.end()) return it->second;
  }
  std::optional<Word> result;
  if (!is_right_descent(w, s)) {
    Word expr = w;
    expr.push_back(s);
    result = canonical_form(expr);
  }
  std::lock_guard lock(mutex_);
  right_cache_.emplace(std::move(key), result);
  return result;
}

Word CoxeterSystem::multiply(const Word& u, const Word& v) const {
  Word expr = u;
  expr.insert(expr.end(), v.begin(), v.end());
  return canonical_form(expr);
}

Word CoxeterSystem::inverse(const Word& w) const {
  return canonical_form(Word(w.rbegin(), w.rend()));
}

std::vector<Word> CoxeterSystem::enumerate(std::optional<std::size_t> max_len) const {
  if (!max_len && !finite_) throw Error(ErrorCode::kInfiniteGroup, "full enumeration of an infinite group");
  std::vector<Word> all{Word{}};
  std::vector<Word> level{Word{}};
  std::size_t len = 0;
  while (!level.empty() && (!max_len || len < *max_len)) {
    std::set<Word> next;
    for (const auto& w : level)
      for (std::size_t s = 0; s < rank(); ++s)
        if (auto ext = left_extend(static_cast<int>(s), w)) next.insert(*ext);
    level.assign(next.begin(), next.end());
    all.insert(all.end(), level.begin(), level.end());
    if (all.size() > max_elements_)
      throw Error(ErrorCode::kEnumerationLimit, "enumeration exceeded " + std::to_string(max_elements_) + " elements");
    ++len;
  }
  return all;
}

std::vector<Root> CoxeterSystem::positive_roots() const {
  if (!finite_) throw Error(ErrorCode::kInfiniteGroup, "positive roots of an infinite group");
  std::vector<Root> roots;
  for (const auto& w : enumerate(std::nullopt)) {
    const auto& e = element(w);
    for (std::size_t s = 0; s < rank(); ++s) {
      Root r{e.root_action.column(s)};
      if (r.is_positive() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  }
  return roots;
}

Word CoxeterSystem::longest_element() const {
  auto all = enumerate(std::nullopt);
  return all.back();
}

Word CoxeterSystem::longest_element(int s, int t) const {
  int m = coxeter(s, t);
  if (m == kInfinity) throw Error(ErrorCode::kInfiniteGroup, "parabolic subgroup is infinite");
  return canonical_form(alternating_word(s, t, static_cast<std::size_t>(m)));
}

std::vector<Word> CoxeterSystem::parabolic_elements(int s, int t) const {
  int m = coxeter(s, t);
  if (m == kInfinity) throw Error(ErrorCode::kInfiniteGroup, "parabolic subgroup is infinite");
  std::set<Word, WordLess> out;
  for (std::size_t len = 0; len <= static_cast<std::size_t>(m); ++len) {
    out.insert(canonical_form(alternating_word(s, t, len)));
    out.insert(canonical_form(alternating_word(t, s, len)));
  }
  return {out.begin(), out.end()};
}

std::size_t CoxeterSystem::inversion_count(const Word& w) const {
  const auto& inv = element(w).root_inverse;
  std::size_t count = 0;
  for (const auto& r : positive_roots()) {
    Root image{inv.apply(r.coeffs)};
    if (image.is_negative()) ++count;
  }
  return count;
}

Polynomial CoxeterSystem::act(const Word& w, const Polynomial& f) const {
  if (w.empty() || f.is_constant()) return f;
  auto images = var_images(element(w).var_action);
  return substitute(f, images);
}

Polynomial CoxeterSystem::reflect(int s, const Polynomial& f) const {
  if (f.is_constant()) return f;
  return substitute(f, reflection_images_.at(static_cast<std::size_t>(s)));
}

Polynomial CoxeterSystem::demazure(int s, const Polynomial& f) const {
  if (f.is_constant()) return Polynomial(nvars());
  Polynomial diff = f - reflect(s, f);
  if (diff.is_zero()) return diff;
  return exact_divide_linear(diff, simple_root(s));
}

bool CoxeterSystem::is_invariant(const Polynomial& f) const {
  for (std::size_t s = 0; s < rank(); ++s)
    if (reflect(static_cast<int>(s), f) != f) return false;
  return true;
}

std::string CoxeterSystem::word_name(const Word& w) const {
  if (w.empty()) return "1";
  bool single = std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ".";
    out += generator_name(w[i]);
  }
  return out;
}

Word CoxeterSystem::parse_word(const std::string& text) const {
  Word w;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
  if (trimmed.empty() || trimmed == "1") return w;
  bool single = std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.size() == 1; });
  if (single && text.find_first_of(" .") == std::string::npos) {
    for (char c : trimmed) {
      auto idx = generator_index(std::string(1, c));
      if (!idx) throw Error(ErrorCode::kInvalidArgument, std::string("unknown generator '") + c + "'");
      w.push_back(*idx);
    }
    return w;
  }
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, '.')) {
    std::istringstream parts(token);
    std::string name;
    while (parts >> name) {
      auto idx = generator_index(name);
      if (!idx) throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + name + "'");
      w.push_back(*idx);
    }
  }
  return w;
}

}  // namespace nhlab
