#include "nhlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "nhlab/error.hpp"

namespace nhlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

enum class Tok { kNumber, kIdent, kOp, kLBracketD, kLBracketW, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::kNumber, text.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string ident = text.substr(start, i - start);
      std::size_t j = i;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if ((ident == "d" || ident == "w") && j < text.size() && text[j] == '[') {
        std::size_t close = text.find(']', j);
        if (close == std::string::npos) throw ParseError(j, "missing ']'");
        out.push_back({ident == "d" ? Tok::kLBracketD : Tok::kLBracketW, text.substr(j + 1, close - j - 1), start});
        i = close + 1;
        continue;
      }
      out.push_back({Tok::kIdent, ident, start});
      continue;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Tok::kOp, std::string(1, c), start});
      ++i;
      continue;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

/// Recursive descent over any value type with a ring structure supplied by Ops.
template <class Ops>
class Parser {
 public:
  using Value = typename Ops::Value;

  Parser(const std::string& text, Ops ops) : toks_(tokenize(text)), ops_(std::move(ops)) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Tok::kEnd) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool at_op(const char* op) const { return peek().kind == Tok::kOp && peek().text == op; }

  Value expr() {
    bool negate = false;
    if (at_op("+")) {
      ++i_;
    } else if (at_op("-")) {
      ++i_;
      negate = true;
    }
    Value v = term();
    if (negate) v = ops_.neg(v);
    while (at_op("+") || at_op("-")) {
      bool minus = peek().text == "-";
      ++i_;
      Value t = term();
      v = minus ? ops_.sub(v, t) : ops_.add(v, t);
    }
    return v;
  }

  Value term() {
    Value v = power();
    while (at_op("*") || at_op("/")) {
      bool divide = peek().text == "/";
      ++i_;
      if (divide) {
        std::size_t operand = peek().pos;
        Value d = power();
        auto c = ops_.constant_of(d);
        if (!c) throw ParseError(operand, "division is only by constants");
        if (c->is_zero()) throw ParseError(operand, "division by zero");
        v = ops_.scale(v, c->inverse());
      } else {
        v = ops_.mul(v, power());
      }
    }
    return v;
  }

  Value power() {
    Value base = unary_or_primary();
    if (at_op("^")) {
      ++i_;
      if (peek().kind != Tok::kNumber) throw ParseError(peek().pos, "exponent must be a nonnegative integer");
      unsigned long e = std::stoul(peek().text);
      if (e > 64) throw ParseError(peek().pos, "exponent too large");
      ++i_;
      Value r = ops_.one();
      for (unsigned long k = 0; k < e; ++k) r = ops_.mul(r, base);
      return r;
    }
    return base;
  }

  Value unary_or_primary() {
    if (at_op("-")) {
      ++i_;
      return ops_.neg(power());
    }
    return primary();
  }

  Value primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNumber: {
        ++i_;
        return ops_.number(mpq_class(t.text));
      }
      case Tok::kIdent: {
        ++i_;
        return ops_.ident(t.text, t.pos);
      }
      case Tok::kLBracketD:
      case Tok::kLBracketW: {
        ++i_;
        return ops_.generator(t.kind == Tok::kLBracketD, t.text, t.pos);
      }
      case Tok::kOp:
        if (t.text == "(") {
          ++i_;
          Value v = expr();
          if (!at_op(")")) throw ParseError(peek().pos, "expected ')'");
          ++i_;
          return v;
        }
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
      case Tok::kEnd:
        throw ParseError(t.pos, "unexpected end of input");
    }
    throw ParseError(t.pos, "unexpected token");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Ops ops_;
};

Scalar sqrt_scalar(const std::string& ident, std::size_t pos) {
  if (ident != "sqrt5") throw ParseError(pos, "unknown identifier '" + ident + "'");
  return Scalar::sqrt(5);
}

struct ScalarOps {
  using Value = Scalar;
  Value one() const { return Scalar(1); }
  Value number(const mpq_class& q) const { return Scalar(q); }
  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Scalar& c) const { return a * c; }
  std::optional<Scalar> constant_of(const Value& a) const { return a; }
  Value ident(const std::string& name, std::size_t pos) const { return sqrt_scalar(name, pos); }
  Value generator(bool, const std::string&, std::size_t pos) const {
    throw ParseError(pos, "generators are not allowed in a scalar");
  }
};

Scalar checked_sqrt(const CoxeterSystem& sys, const std::string& name, std::size_t pos) {
  Scalar r = sqrt_scalar(name, pos);
  if (sys.field().radicand != 5) throw ParseError(pos, "sqrt5 needs field quadratic:5");
  return r;
}

std::optional<Polynomial> variable_of(const CoxeterSystem& sys, const std::string& name) {
  const auto& names = sys.ring().names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return Polynomial::variable(sys.nvars(), static_cast<std::size_t>(it - names.begin()));
}

struct PolyOps {
  const CoxeterSystem* sys;
  using Value = Polynomial;
  Value one() const { return Polynomial(sys->nvars(), Scalar(1)); }
  Value number(const mpq_class& q) const { return Polynomial(sys->nvars(), Scalar(q)); }
  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Scalar& c) const { return a * c; }
  std::optional<Scalar> constant_of(const Value& a) const {
    if (!a.is_constant()) return std::nullopt;
    return a.constant_term();
  }
  Value ident(const std::string& name, std::size_t pos) const {
    if (auto v = variable_of(*sys, name)) return *v;
    return Polynomial(sys->nvars(), checked_sqrt(*sys, name, pos));
  }
  Value generator(bool, const std::string&, std::size_t pos) const {
    throw ParseError(pos, "expected a polynomial, found a generator");
  }
};

struct ElementOps {
  NHPtr alg;
  using Value = NHElement;
  Value one() const { return NHElement::scalar(alg, Scalar(1)); }
  Value number(const mpq_class& q) const { return NHElement::scalar(alg, Scalar(q)); }
  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Scalar& c) const { return c * a; }
  std::optional<Scalar> constant_of(const Value& a) const {
    if (a.is_zero()) return Scalar(0);
    if (a.terms().size() != 1 || !a.terms().begin()->first.empty()) return std::nullopt;
    const Polynomial& f = a.terms().begin()->second;
    if (!f.is_constant()) return std::nullopt;
    return f.constant_term();
  }
  Value ident(const std::string& name, std::size_t pos) const {
    const CoxeterSystem& sys = alg->system();
    if (auto v = variable_of(sys, name)) return NHElement::weight(alg, *v);
    return NHElement::scalar(alg, checked_sqrt(sys, name, pos));
  }
  Value generator(bool is_d, const std::string& word, std::size_t pos) const {
    Word w;
    try {
      // A bare generator name wins over word syntax, so `d[1]` is a generator in gl(n).
      if (auto s = alg->system().generator_index(trim(word))) w = {*s};
      else w = alg->system().parse_word(word);
    } catch (const Error& e) {
      throw ParseError(pos, e.what());
    }
    if (is_d) {
      NHElement r = one();
      for (int s : w) r = r * NHElement::d(alg, s);
      return r;
    }
    return NHElement::group_word(alg, w);
  }
};

bool parse_bool(const std::string& v, int line) {
  std::string l = lower(v);
  if (l == "true" || l == "yes" || l == "1") return true;
  if (l == "false" || l == "no" || l == "0") return false;
  throw Error(ErrorCode::kConfig, "line " + std::to_string(line) + ": expected true or false");
}

int parse_coxeter_entry(const std::string& v, int line) {
  std::string l = lower(v);
  if (l == "inf" || l == "infinity" || l == "oo") return kInfinity;
  try {
    std::size_t used = 0;
    int m = std::stoi(v, &used);
    if (used == v.size() && m >= 1) return m;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kConfig, "line " + std::to_string(line) + ": bad Coxeter entry '" + v + "'");
}

// Polynomial string with a sign split off, so terms can be joined with " + " / " - ".
std::pair<bool, std::string> signed_factor(const CoxeterSystem& sys, const Polynomial& f) {
  std::string s = render_polynomial(sys, f);
  if (f.terms().size() > 1) return {false, "(" + s + ")"};
  if (!s.empty() && s[0] == '-') return {true, s.substr(1)};
  return {false, s};
}

struct TermText {
  bool negative;
  std::string body;
};

TermText term_text(const CoxeterSystem& sys, const Polynomial& f, const std::string& basis) {
  auto [neg, coeff] = signed_factor(sys, f);
  if (basis == "1") return {neg, coeff};
  if (coeff == "1") return {neg, basis};
  return {neg, coeff + "*" + basis};
}

std::string join_terms(const std::vector<TermText>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) out += terms[i].negative ? "-" : "";
    else out += terms[i].negative ? " - " : " + ";
    out += terms[i].body;
  }
  return out;
}

// Rendering order: longer words first, then generator order.
template <class Map>
std::vector<typename Map::const_iterator> descending(const Map& m) {
  std::vector<typename Map::const_iterator> its;
  for (auto it = m.begin(); it != m.end(); ++it) its.push_back(it);
  std::stable_sort(its.begin(), its.end(), [](const auto& a, const auto& b) {
    const Word& x = a->first;
    const Word& y = b->first;
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  return its;
}

bool pair_before(const WordPair& a, const WordPair& b) {
  if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
  if (a.first != b.first) return a.first < b.first;
  if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
  return a.second < b.second;
}

template <class Map>
std::vector<typename Map::const_iterator> descending_pairs(const Map& m) {
  std::vector<typename Map::const_iterator> its;
  for (auto it = m.begin(); it != m.end(); ++it) its.push_back(it);
  std::stable_sort(its.begin(), its.end(), [](const auto& a, const auto& b) { return pair_before(a->first, b->first); });
  return its;
}

std::optional<std::map<WordPair, Polynomial, WordPairLess>> polynomial_pairs(const QPairCoeffs& q) {
  std::map<WordPair, Polynomial, WordPairLess> out;
  for (const auto& [k, f] : q) {
    if (!f.is_polynomial()) return std::nullopt;
    out.emplace(k, f.numerator());
  }
  return out;
}

template <class Tensor>
std::string render_mixed(const Tensor& t, bool blue) {
  const CoxeterSystem& sys = t.algebra()->system();
  auto groups = t.by_first_slot();
  std::vector<TermText> terms;
  for (const auto& it : descending(groups)) {
    std::string first = render_d_word(sys, it->first);
    const NHElement& y = it->second;
    auto g = group_coordinates(y);
    std::map<Word, Polynomial, WordLess> coeffs = g ? *g : std::map<Word, Polynomial, WordLess>(y.terms().begin(), y.terms().end());
    auto word = [&](const Word& w) { return g ? render_group_word(sys, w) : render_d_word(sys, w); };
    if (coeffs.size() == 1) {
      const auto& [w, f] = *coeffs.begin();
      if (blue) {
        // Blue coefficients may sit in either slot; show them in slot one.
        auto ft = term_text(sys, f, first);
        terms.push_back({ft.negative, ft.body + " (x) " + word(w)});
      } else {
        auto tt = term_text(sys, f, word(w));
        terms.push_back({tt.negative, first + " (x) " + tt.body});
      }
      continue;
    }
    std::string second = g ? render_group_form(sys, *g) : render_element(y);
    terms.push_back({false, first + " (x) (" + second + ")"});
  }
  return join_terms(terms);
}

}  // namespace

SystemConfig parse_config(const std::string& text) {
  SystemConfig c;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool have_generators = false, have_coxeter = false, have_finite = false;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++line;
    std::string l = raw.substr(0, raw.find('#'));
    if (trim(l).empty()) continue;
    std::size_t eq = l.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::kConfig, "line " + std::to_string(line) + ": expected key = value");
    std::string key = lower(trim(l.substr(0, eq)));
    std::string value = trim(l.substr(eq + 1));
    if (!seen.insert(key).second)
      throw Error(ErrorCode::kConfig, "line " + std::to_string(line) + ": duplicate key '" + key + "'");
    if (key == "generators") {
      c.generators = split(value, " ,\t");
      have_generators = true;
    } else if (key == "coxeter") {
      for (const auto& row : split(value, ";")) {
        std::vector<int> r;
        for (const auto& e : split(row, " ,\t")) r.push_back(parse_coxeter_entry(e, line));
        c.coxeter.push_back(std::move(r));
      }
      have_coxeter = true;
    } else if (key == "pairing") {
      std::string l2 = lower(value);
      if (l2 == "geometric") {
        c.pairing = PairingKind::kGeometric;
      } else if (l2.rfind("gl(", 0) == 0 && l2.back() == ')') {
        c.pairing = PairingKind::kGl;
        try {
          c.gl_n = std::stoi(l2.substr(3, l2.size() - 4));
        } catch (const std::exception&) {
          throw Error(ErrorCode::kConfig, "line " + std::to_string(line) + ": bad gl(n)");
        }
      } else {
        c.pairing = PairingKind::kExplicit;
        auto rows = split(value, ";");
        std::size_t k = rows.size();
        c.explicit_pairing = Matrix(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          auto entries = split(rows[i], " ,\t");
          if (entries.size() != k)
            throw Error(ErrorCode::kConfig, "line " + std::to_string(line) + ": pairing matrix must be square");
          for (std::size_t j = 0; j < k; ++j) {
            try {
              c.explicit_pairing(i, j) = parse_scalar(entries[j]);
            } catch (const Error& e) {
              throw Error(ErrorCode::kConfig, "line " + std::to_string(line) + ": " + e.what());
            }
          }
        }
      }
    } else if (key == "field") {
      std::string l2 = lower(value);
      if (l2 == "rational" || l2 == "q") c.field = Field::rational();
      else if (l2 == "quadratic:5" || l2 == "q(sqrt5)") c.field = Field::quadratic(5);
      else throw Error(ErrorCode::kUnsupportedField, "line " + std::to_string(line) + ": unsupported field '" + value + "'");
    } else if (key == "finite") {
      c.finite = parse_bool(value, line);
      have_finite = true;
    } else if (key == "variables") {
      c.variables = split(value, " ,\t");
    } else {
      throw Error(ErrorCode::kConfig, "line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (c.pairing != PairingKind::kGl && !have_generators)
    throw Error(ErrorCode::kConfig, "missing key 'generators'");
  if (c.pairing != PairingKind::kGl && !have_coxeter) {
    if (c.generators.size() == 1) c.coxeter = {{1}};
    else throw Error(ErrorCode::kConfig, "missing key 'coxeter'");
  }
  if (!have_finite) c.finite = c.pairing == PairingKind::kGl;
  c.max_elements = max_elements_from_env();
  return c;
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read system file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Scalar parse_scalar(const std::string& text) { return Parser<ScalarOps>(text, ScalarOps{}).parse(); }

NHElement parse_element(const NHPtr& alg, const std::string& text) {
  return Parser<ElementOps>(text, ElementOps{alg}).parse();
}

Polynomial parse_polynomial(const CoxeterSystem& sys, const std::string& text) {
  return Parser<PolyOps>(text, PolyOps{&sys}).parse();
}

std::string render_polynomial(const CoxeterSystem& sys, const Polynomial& f) { return f.to_string(sys.ring().names); }

std::string render_d_word(const CoxeterSystem& sys, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "*d[" : "d[") + sys.generator_name(w[i]) + "]";
  return out;
}

std::string render_group_word(const CoxeterSystem& sys, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "*w[" : "w[") + sys.generator_name(w[i]) + "]";
  return out;
}

std::string render_element(const NHElement& h) {
  const CoxeterSystem& sys = h.system();
  std::vector<TermText> terms;
  for (const auto& it : descending(h.terms())) terms.push_back(term_text(sys, it->second, render_d_word(sys, it->first)));
  return join_terms(terms);
}

std::string render_group_form(const CoxeterSystem& sys, const std::map<Word, Polynomial, WordLess>& g) {
  std::vector<TermText> terms;
  for (const auto& it : descending(g)) terms.push_back(term_text(sys, it->second, render_group_word(sys, it->first)));
  return join_terms(terms);
}

std::optional<std::map<Word, Polynomial, WordLess>> group_coordinates(const NHElement& h) {
  std::map<Word, Polynomial, WordLess> out;
  for (const auto& [w, f] : embed(h).terms()) {
    if (!f.is_polynomial()) return std::nullopt;
    out.emplace(w, f.numerator());
  }
  return out;
}

std::string blue_header() {
  return "# blue tensor over R: f*x (x) y = x (x) f*y; normal form keeps coefficients in slot one";
}

std::string red_header() {
  return "# red tensor over R: x*f (x) y = x (x) f*y; normal form keeps coefficients in slot two";
}

std::string render_blue_normal(const BlueTensor& t) {
  const CoxeterSystem& sys = t.algebra()->system();
  std::vector<TermText> terms;
  for (const auto& it : descending_pairs(t.terms())) {
    auto tt = term_text(sys, it->second, render_d_word(sys, it->first.first));
    terms.push_back({tt.negative, tt.body + " (x) " + render_d_word(sys, it->first.second)});
  }
  return join_terms(terms);
}

std::string render_red_normal(const RedTensor& t) {
  const CoxeterSystem& sys = t.algebra()->system();
  std::vector<TermText> terms;
  for (const auto& it : descending_pairs(t.terms())) {
    auto tt = term_text(sys, it->second, render_d_word(sys, it->first.second));
    terms.push_back({tt.negative, render_d_word(sys, it->first.first) + " (x) " + tt.body});
  }
  return join_terms(terms);
}

std::string render_blue(const BlueTensor& t) {
  if (t.is_zero()) return "0";
  const CoxeterSystem& sys = t.algebra()->system();
  if (auto g = polynomial_pairs(embed_tensor(t))) {
    std::vector<TermText> terms;
    for (const auto& it : descending_pairs(*g)) {
      auto tt = term_text(sys, it->second, render_group_word(sys, it->first.first));
      terms.push_back({tt.negative, tt.body + " (x) " + render_group_word(sys, it->first.second)});
    }
    return join_terms(terms);
  }
  return render_mixed(t, true);
}

std::string render_red(const RedTensor& t) {
  if (t.is_zero()) return "0";
  const CoxeterSystem& sys = t.algebra()->system();
  if (auto g = polynomial_pairs(embed_red_tensor(t))) {
    std::vector<TermText> terms;
    for (const auto& it : descending_pairs(*g)) {
      auto tt = term_text(sys, it->second, render_group_word(sys, it->first.second));
      terms.push_back({tt.negative, render_group_word(sys, it->first.first) + " (x) " + tt.body});
    }
    return join_terms(terms);
  }
  return render_mixed(t, false);
}

}  // namespace nhlab
