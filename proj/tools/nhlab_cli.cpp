// Command-line front end over the C API.
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nhlab/nhlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct SystemDeleter {
  void operator()(nhlab_system* s) const { nhlab_system_free(s); }
};
using SystemHandle = std::unique_ptr<nhlab_system, SystemDeleter>;

class Failure {
 public:
  explicit Failure(nhlab_status status) : status_(status) {}
  nhlab_status status() const { return status_; }

 private:
  nhlab_status status_;
};

void check(nhlab_status status) {
  if (status != NHLAB_OK) throw Failure(status);
}

std::string take(char* text) {
  std::string out = text == nullptr ? std::string() : std::string(text);
  nhlab_string_free(text);
  return out;
}

SystemHandle open_system(const std::string& arg) {
  nhlab_system* raw = nullptr;
  const std::string prefix = "preset:";
  if (arg.rfind(prefix, 0) == 0)
    check(nhlab_system_preset(arg.substr(prefix.size()).c_str(), &raw));
  else
    check(nhlab_system_load(arg.c_str(), &raw));
  return SystemHandle(raw);
}

void print(const std::string& text) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nil Hecke algebra workbench: normal forms, structure maps and verification suites"};
  app.require_subcommand(1);

  std::string system_arg = "preset:s2";
  nhlab_verify_options opts;
  nhlab_verify_options_default(&opts);
  bool checked = true;
  std::optional<unsigned> trunc;
  std::optional<int> m;
  std::optional<int> max_len;
  bool normal_form = false;

  app.add_option("--system", system_arg,
                 "System config file, or preset:s2, preset:gl<n>, preset:dihedral<m> (default preset:s2)");
  app.add_option("--seed", opts.seed, "Random seed for sampled suites")->capture_default_str();
  app.add_option("--samples", opts.samples, "Samples per sampled suite")->check(CLI::NonNegativeNumber);
  app.add_option("--max-deg", opts.max_deg, "Coefficient degree bound for samples");
  app.add_option("--max-support", opts.max_support, "Term count bound for samples")->check(CLI::PositiveNumber);
  app.add_option("--trunc", trunc, "Degree truncation for faithfulness and endo checks");
  app.add_flag("--checked,!--unchecked", checked, "Check Takeuchi membership before multiplying tensors");
  app.add_option("--threads", opts.threads, "Worker threads for sampled suites (0: all cores)");

  std::string expr, poly, s_name, t_name, suite = "all";

  auto* eval = app.add_subcommand("eval", "Normal form of an expression");
  eval->add_option("expr", expr, "Expression, e.g. d[s]*a")->required();
  auto* act = app.add_subcommand("act", "Act on a polynomial through the polynomial representation");
  act->add_option("expr", expr)->required();
  act->add_option("poly", poly)->required();
  auto* delta = app.add_subcommand("delta", "Coproduct, in the blue tensor product");
  delta->add_option("expr", expr)->required();
  delta->add_flag("--normal", normal_form, "Print the stored normal form f * d_v (x) d_w");
  auto* epsilon = app.add_subcommand("epsilon", "Counit");
  epsilon->add_option("expr", expr)->required();
  auto* red = app.add_subcommand("red", "Translation map, in the red tensor product");
  red->add_option("expr", expr)->required();
  red->add_flag("--normal", normal_form, "Print the stored normal form f * d_v (x) d_w");
  auto* mixed = app.add_subcommand("mixed", "Mixed braid relations for a pair of generators");
  mixed->add_option("s", s_name, "First generator (default: every finite pair)");
  mixed->add_option("t", t_name, "Second generator");
  mixed->add_option("--m", m, "Use the dihedral system of this order instead")->check(CLI::Range(2, 64));
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, std::string("One of: ") + nhlab_suite_names())->capture_default_str();
  verify->add_option("--m", m, "Dihedral order for the mixed suite")->check(CLI::Range(2, 64));
  verify->add_option("--max-len", max_len, "Word length bound for the basis suite")->check(CLI::PositiveNumber);
  auto* gallery = app.add_subcommand("gallery", "Weyl, matrix and endomorphism fixtures");

  for (auto* sub : {eval, act, delta, epsilon, red, mixed, verify, gallery}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  opts.checked = checked ? 1 : 0;
  if (trunc) opts.trunc = static_cast<int>(*trunc);
  if (m) opts.m = *m;
  if (max_len) opts.max_len = *max_len;

  try {
    char* out = nullptr;
    int pass = 1;
    if (*gallery) {
      check(nhlab_gallery(&opts, &out, &pass));
      print(take(out));
      return pass ? kExitOk : kExitVerifyFailed;
    }
    if (*mixed && (s_name.empty() != t_name.empty())) {
      std::cerr << "error: give both generators or neither\n";
      return kExitUsage;
    }
    SystemHandle sys = open_system(system_arg);
    if (*eval) {
      check(nhlab_eval(sys.get(), expr.c_str(), &out));
      print(take(out));
    } else if (*act) {
      check(nhlab_act(sys.get(), expr.c_str(), poly.c_str(), &out));
      print(take(out));
    } else if (*delta) {
      check(nhlab_delta(sys.get(), expr.c_str(), normal_form ? 1 : 0, &out));
      print(nhlab_blue_header());
      print(take(out));
    } else if (*red) {
      check(nhlab_red(sys.get(), expr.c_str(), normal_form ? 1 : 0, &out));
      print(nhlab_red_header());
      print(take(out));
    } else if (*epsilon) {
      check(nhlab_epsilon(sys.get(), expr.c_str(), &out));
      print(take(out));
    } else if (*mixed) {
      const char* s = s_name.empty() ? nullptr : s_name.c_str();
      const char* t = t_name.empty() ? nullptr : t_name.c_str();
      check(nhlab_mixed(sys.get(), s, t, m.value_or(0), &out, &pass));
      print(take(out));
    } else if (*verify) {
      check(nhlab_verify(sys.get(), suite.c_str(), &opts, &out, &pass));
      print(take(out));
    }
    return pass ? kExitOk : kExitVerifyFailed;
  } catch (const Failure& f) {
    std::cerr << "error (" << nhlab_status_name(f.status()) << "): " << nhlab_last_error() << "\n";
    return kExitUsage;
  }
}
