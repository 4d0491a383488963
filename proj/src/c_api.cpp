#include "nhlab/nhlab.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "nhlab/error.hpp"
#include "nhlab/hopf.hpp"
#include "nhlab/io.hpp"
#include "nhlab/nilhecke.hpp"
#include "nhlab/verify.hpp"

struct nhlab_system {
  nhlab::NHPtr alg;
};

struct nhlab_element {
  nhlab::NHElement value;
};

namespace {

thread_local std::string last_error;
thread_local long last_position = -1;

void clear_error() {
  last_error.clear();
  last_position = -1;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs fn, translating exceptions into status codes and the thread's last error.
template <class Fn>
nhlab_status guard(Fn&& fn) {
  clear_error();
  try {
    fn();
    return NHLAB_OK;
  } catch (const nhlab::ParseError& e) {
    last_error = e.what();
    last_position = static_cast<long>(e.position());
    return NHLAB_ERR_PARSE;
  } catch (const nhlab::Error& e) {
    last_error = e.what();
    return static_cast<nhlab_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NHLAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NHLAB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw nhlab::Error(nhlab::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

void emit(char** out, const std::string& text) {
  char* s = duplicate(text);
  if (s == nullptr) throw std::bad_alloc();
  *out = s;
}

nhlab::NHPtr make(nhlab::SystemConfig config) {
  return nhlab::NilHecke::create(nhlab::CoxeterSystem::build(config));
}

nhlab::VerifyOptions convert(const nhlab_verify_options* in) {
  nhlab::VerifyOptions o;
  if (in == nullptr) return o;
  if (in->samples < 0) throw nhlab::Error(nhlab::ErrorCode::kInvalidArgument, "samples must be >= 0");
  o.seed = in->seed;
  o.samples = in->samples;
  o.max_deg = in->max_deg;
  o.max_support = in->max_support;
  if (in->trunc >= 0) o.trunc = static_cast<unsigned>(in->trunc);
  if (in->m > 0) o.m = in->m;
  if (in->max_len > 0) o.max_len = static_cast<std::size_t>(in->max_len);
  o.mode = in->checked ? nhlab::MulMode::kChecked : nhlab::MulMode::kUnchecked;
  o.threads = in->threads;
  return o;
}

int parse_suffix(const std::string& name, const std::string& prefix) {
  std::string rest = name.substr(prefix.size());
  if (rest == "inf") return nhlab::kInfinity;
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 3)
    throw nhlab::Error(nhlab::ErrorCode::kConfig, "bad preset '" + name + "'");
  return std::stoi(rest);
}

int generator(const nhlab::CoxeterSystem& sys, const char* name) {
  auto idx = sys.generator_index(name);
  if (!idx) throw nhlab::Error(nhlab::ErrorCode::kInvalidArgument, std::string("unknown generator '") + name + "'");
  return *idx;
}

}  // namespace

extern "C" {

const char* nhlab_last_error(void) { return last_error.c_str(); }

long nhlab_last_error_position(void) { return last_position; }

const char* nhlab_status_name(nhlab_status status) {
  return nhlab::error_code_name(static_cast<nhlab::ErrorCode>(status));
}

void nhlab_string_free(char* text) { std::free(text); }

void nhlab_verify_options_default(nhlab_verify_options* opts) {
  if (opts == nullptr) return;
  nhlab::VerifyOptions d;
  opts->seed = d.seed;
  opts->samples = d.samples;
  opts->max_deg = d.max_deg;
  opts->max_support = d.max_support;
  opts->trunc = -1;
  opts->m = 0;
  opts->max_len = 0;
  opts->checked = 1;
  opts->threads = 0;
}

nhlab_status nhlab_system_parse(const char* config_text, nhlab_system** out) {
  return guard([&] {
    require(config_text, "config text");
    require(out, "out");
    *out = new nhlab_system{make(nhlab::parse_config(config_text))};
  });
}

nhlab_status nhlab_system_load(const char* path, nhlab_system** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new nhlab_system{make(nhlab::load_config(path))};
  });
}

nhlab_status nhlab_system_preset(const char* name, nhlab_system** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    std::string n = name;
    nhlab::SystemConfig c;
    if (n == "s2") {
      c = nhlab::s2_config();
    } else if (n.rfind("gl", 0) == 0) {
      int k = parse_suffix(n, "gl");
      if (k == nhlab::kInfinity || k < 2) throw nhlab::Error(nhlab::ErrorCode::kConfig, "gl(n) needs n >= 2");
      c = nhlab::gl_config(k);
    } else if (n.rfind("dihedral", 0) == 0) {
      c = nhlab::dihedral_config(parse_suffix(n, "dihedral"));
    } else {
      throw nhlab::Error(nhlab::ErrorCode::kConfig, "unknown preset '" + n + "'");
    }
    c.max_elements = nhlab::max_elements_from_env();
    *out = new nhlab_system{make(c)};
  });
}

void nhlab_system_free(nhlab_system* sys) { delete sys; }

size_t nhlab_system_rank(const nhlab_system* sys) { return sys == nullptr ? 0 : sys->alg->system().rank(); }

nhlab_status nhlab_system_describe(const nhlab_system* sys, char** out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    const auto& s = sys->alg->system();
    std::ostringstream os;
    os << "generators:";
    for (const auto& g : s.generator_names()) os << " " << g;
    os << "\nvariables:";
    for (const auto& v : s.ring().names) os << " " << v;
    os << "\nfield: " << s.field().name() << "\nfinite: " << (s.finite() ? "true" : "false");
    if (s.finite()) os << "\norder: " << s.enumerate(std::nullopt).size();
    os << "\n";
    emit(out, os.str());
  });
}

nhlab_status nhlab_element_parse(const nhlab_system* sys, const char* expr, nhlab_element** out) {
  return guard([&] {
    require(sys, "system");
    require(expr, "expression");
    require(out, "out");
    *out = new nhlab_element{nhlab::parse_element(sys->alg, expr)};
  });
}

void nhlab_element_free(nhlab_element* e) { delete e; }

nhlab_status nhlab_element_render(const nhlab_element* e, char** out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    emit(out, nhlab::render_element(e->value));
  });
}

nhlab_status nhlab_element_add(const nhlab_element* a, const nhlab_element* b, nhlab_element** out) {
  return guard([&] {
    require(a, "element");
    require(b, "element");
    require(out, "out");
    *out = new nhlab_element{a->value + b->value};
  });
}

nhlab_status nhlab_element_mul(const nhlab_element* a, const nhlab_element* b, nhlab_element** out) {
  return guard([&] {
    require(a, "element");
    require(b, "element");
    require(out, "out");
    *out = new nhlab_element{a->value * b->value};
  });
}

nhlab_status nhlab_element_equal(const nhlab_element* a, const nhlab_element* b, int* equal) {
  return guard([&] {
    require(a, "element");
    require(b, "element");
    require(equal, "out");
    *equal = a->value == b->value ? 1 : 0;
  });
}

nhlab_status nhlab_eval(const nhlab_system* sys, const char* expr, char** out) {
  return guard([&] {
    require(sys, "system");
    require(expr, "expression");
    require(out, "out");
    emit(out, nhlab::render_element(nhlab::parse_element(sys->alg, expr)));
  });
}

nhlab_status nhlab_act(const nhlab_system* sys, const char* expr, const char* poly, char** out) {
  return guard([&] {
    require(sys, "system");
    require(expr, "expression");
    require(poly, "polynomial");
    require(out, "out");
    const auto& s = sys->alg->system();
    auto h = nhlab::parse_element(sys->alg, expr);
    auto f = nhlab::parse_polynomial(s, poly);
    emit(out, nhlab::render_polynomial(s, nhlab::act(h, f)));
  });
}

nhlab_status nhlab_delta(const nhlab_system* sys, const char* expr, int normal_form, char** out) {
  return guard([&] {
    require(sys, "system");
    require(expr, "expression");
    require(out, "out");
    auto t = nhlab::delta(nhlab::parse_element(sys->alg, expr));
    emit(out, normal_form ? nhlab::render_blue_normal(t) : nhlab::render_blue(t));
  });
}

nhlab_status nhlab_red(const nhlab_system* sys, const char* expr, int normal_form, char** out) {
  return guard([&] {
    require(sys, "system");
    require(expr, "expression");
    require(out, "out");
    auto t = nhlab::red_map(nhlab::parse_element(sys->alg, expr));
    emit(out, normal_form ? nhlab::render_red_normal(t) : nhlab::render_red(t));
  });
}

nhlab_status nhlab_epsilon(const nhlab_system* sys, const char* expr, char** out) {
  return guard([&] {
    require(sys, "system");
    require(expr, "expression");
    require(out, "out");
    const auto& s = sys->alg->system();
    emit(out, nhlab::render_polynomial(s, nhlab::counit(nhlab::parse_element(sys->alg, expr))));
  });
}

const char* nhlab_blue_header(void) {
  static const std::string h = nhlab::blue_header();
  return h.c_str();
}

const char* nhlab_red_header(void) {
  static const std::string h = nhlab::red_header();
  return h.c_str();
}

nhlab_status nhlab_mixed(const nhlab_system* sys, const char* s, const char* t, int m, char** out, int* all_pass) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    if ((s == nullptr) != (t == nullptr))
      throw nhlab::Error(nhlab::ErrorCode::kInvalidArgument, "give both generators or neither");
    nhlab::NHPtr alg = sys->alg;
    if (m > 0) {
      auto c = nhlab::dihedral_config(m);
      c.max_elements = alg->system().max_elements();
      alg = make(c);
    }
    const auto& cs = alg->system();
    std::vector<std::pair<int, int>> pairs;
    if (s != nullptr) {
      int a = generator(cs, s);
      int b = generator(cs, t);
      if (a == b) throw nhlab::Error(nhlab::ErrorCode::kInvalidArgument, "generators must differ");
      if (cs.coxeter(a, b) == nhlab::kInfinity)
        throw nhlab::Error(nhlab::ErrorCode::kInfiniteGroup, "m = inf for this pair; no longest element");
      pairs.emplace_back(a, b);
    } else {
      for (int a = 0; a < static_cast<int>(cs.rank()); ++a)
        for (int b = a + 1; b < static_cast<int>(cs.rank()); ++b)
          if (cs.coxeter(a, b) != nhlab::kInfinity) pairs.emplace_back(a, b);
      if (pairs.empty())
        throw nhlab::Error(nhlab::ErrorCode::kInvalidArgument, "no pair of generators with finite m; pass --m");
    }
    bool ok = true;
    std::ostringstream os;
    for (const auto& [a, b] : pairs) {
      auto relations = nhlab::mixed_relations(alg, a, b);
      os << "# mixed relations for " << cs.generator_name(a) << "," << cs.generator_name(b)
         << " (m=" << cs.coxeter(a, b) << "): " << relations.size() << " relations\n";
      for (const auto& r : relations) {
        ok = ok && r.equal;
        os << nhlab::relation_label(cs, r.w) << "  " << (r.equal ? "PASS" : "FAIL") << "  "
           << nhlab::relation_text(cs, r) << "\n";
        os << "  lhs = " << nhlab::render_element(r.lhs) << "\n";
        os << "  rhs = " << nhlab::render_element(r.rhs) << "\n";
      }
    }
    if (all_pass != nullptr) *all_pass = ok ? 1 : 0;
    emit(out, os.str());
  });
}

nhlab_status nhlab_verify(const nhlab_system* sys, const char* suite, const nhlab_verify_options* opts, char** out,
                          int* all_pass) {
  return guard([&] {
    require(sys, "system");
    require(suite, "suite");
    require(out, "out");
    auto reports = nhlab::run_suite(suite, sys->alg, convert(opts));
    if (all_pass != nullptr) *all_pass = nhlab::all_passed(reports) ? 1 : 0;
    emit(out, nhlab::format_reports(reports));
  });
}

nhlab_status nhlab_gallery(const nhlab_verify_options* opts, char** out, int* all_pass) {
  return guard([&] {
    require(out, "out");
    std::vector<nhlab::SuiteReport> reports = {nhlab::verify_gallery(convert(opts))};
    if (all_pass != nullptr) *all_pass = nhlab::all_passed(reports) ? 1 : 0;
    emit(out, nhlab::format_reports(reports));
  });
}

const char* nhlab_suite_names(void) {
  static const std::string names = [] {
    std::string s = "all";
    for (const auto& n : nhlab::suite_names()) s += " " + n;
    return s;
  }();
  return names.c_str();
}

}  // extern "C"
