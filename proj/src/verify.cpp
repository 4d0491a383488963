#include "nhlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "nhlab/error.hpp"
#include "nhlab/gallery.hpp"
#include "nhlab/io.hpp"
#include "nhlab/qstarw.hpp"

namespace nhlab {

namespace {

void add(SuiteReport& rep, const std::string& case_id, bool pass, const std::string& witness,
         const std::string& detail = {}) {
  rep.records.push_back({rep.suite, case_id, pass, pass ? std::string() : witness, detail});
}

Polynomial sample_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<int> count(1, 2);
  Polynomial p(nvars);
  int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++m.exp[var(rng)];
    p.add_term(m, Scalar(coef(rng)));
  }
  if (p.is_zero()) p = Polynomial(nvars, Scalar(1));
  return p;
}

unsigned worker_count(const VerifyOptions& opts, std::size_t jobs) {
  unsigned n = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

/// Runs job(i) for i < count on a pool of workers and returns results in index order.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, const std::function<Result(std::size_t)>& job) {
  std::vector<Result> out(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> futures;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < workers; ++t) {
    futures.push_back(std::async(std::launch::async, [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          out[i] = job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    }));
  }
  for (auto& f : futures) f.get();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string pair_text(const NHElement& h, const NHElement& g) { return "h = " + render_element(h) + "; g = " + render_element(g); }

std::string mix_text(const CoxeterSystem& sys, const SubexpressionEmbedding& e) {
  std::string out;
  for (std::size_t j = 0; j < e.host.size(); ++j) {
    if (j) out += "*";
    out += (e.mask[j] ? "w[" : "d[") + sys.generator_name(e.host[j]) + "]";
  }
  return out.empty() ? "1" : out;
}

std::string side_text(const CoxeterSystem& sys, const std::vector<MixedSummand>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + mix_text(sys, terms[i].embedding);
  return out;
}

std::vector<std::pair<int, int>> finite_pairs(const CoxeterSystem& sys) {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < static_cast<int>(sys.rank()); ++s)
    for (int t = s + 1; t < static_cast<int>(sys.rank()); ++t)
      if (sys.coxeter(s, t) != kInfinity) out.emplace_back(s, t);
  return out;
}

// All words over the generators of length <= max_len, by length then lexicographically.
std::vector<Word> all_words(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out = {Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t s = 0; s < rank; ++s) {
        Word w = out[i];
        w.push_back(static_cast<int>(s));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
}

std::size_t SuiteReport::failed() const { return records.size() - passed(); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hopf",     "mixed",    "basis",   "oracle",
                                                 "etriv",    "antipode-obstruction", "faithful", "gallery"};
  return names;
}

bool suite_applies(const std::string& suite, const CoxeterSystem& sys, const VerifyOptions& opts) {
  if (suite == "etriv") return sys.finite();
  if (suite == "mixed") return opts.m.has_value() || !finite_pairs(sys).empty();
  if (suite == "faithful") return sys.finite();
  return true;
}

NHElement sample_element(std::mt19937_64& rng, const NHPtr& alg, const std::vector<Word>& pool, unsigned max_deg,
                         unsigned max_support) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<unsigned> support(1, std::max(1U, max_support));
  unsigned k = support(rng);
  NHElement h(alg);
  for (unsigned i = 0; i < k; ++i)
    h += NHElement(alg, Coeffs{{pool[pick(rng)], sample_poly(rng, alg->nvars(), max_deg)}});
  return h;
}

std::vector<Word> sample_pool(const CoxeterSystem& sys) {
  if (sys.finite()) return sys.enumerate(std::nullopt);
  return sys.enumerate(std::optional<std::size_t>(4));
}

SuiteReport verify_hopf(const NHPtr& alg, const VerifyOptions& opts) {
  SuiteReport rep{"hopf", {}, {}};
  auto pool = sample_pool(alg->system());
  std::mt19937_64 rng(opts.seed);
  std::vector<std::pair<NHElement, NHElement>> samples;
  for (int i = 0; i < opts.samples; ++i) {
    NHElement h = sample_element(rng, alg, pool, opts.max_deg, opts.max_support);
    NHElement g = sample_element(rng, alg, pool, opts.max_deg, opts.max_support);
    samples.emplace_back(std::move(h), std::move(g));
  }
  using Checks = std::vector<std::pair<std::string, bool>>;
  auto results = parallel_map<Checks>(samples.size(), worker_count(opts, samples.size()), [&](std::size_t i) {
    const auto& [h, g] = samples[i];
    Checks c;
    BlueTensor dh = delta(h);
    BlueTensor dg = delta(g);
    c.emplace_back("coassociativity", delta_then_left(h) == delta_then_right(h));
    c.emplace_back("counit-left", counit_first(dh) == h);
    c.emplace_back("counit-right", counit_second(dh) == h);
    bool blue = takeuchi_blue(dh) && takeuchi_blue(dg);
    c.emplace_back("takeuchi-blue", blue);
    c.emplace_back("delta-multiplicative",
                   blue && delta(h * g) == blue_mul(dh, dg, opts.mode));
    c.emplace_back("cocommutative", swap(dh) == dh);
    RedTensor rh = red_map(h);
    c.emplace_back("takeuchi-red", takeuchi_red(rh));
    c.emplace_back("galois-inversion", galois(right_act_second(rh, g)) == blue_embed(h, g));
    return c;
  });
  for (std::size_t i = 0; i < results.size(); ++i)
    for (const auto& [name, ok] : results[i])
      add(rep, "sample-" + std::to_string(i + 1) + "/" + name, ok, pair_text(samples[i].first, samples[i].second));
  return rep;
}

std::string relation_label(const CoxeterSystem& sys, const Word& w) { return "R_" + sys.word_name(w); }

std::string relation_text(const CoxeterSystem& sys, const RelationReport& r) {
  return side_text(sys, r.lhs_terms) + " = " + side_text(sys, r.rhs_terms);
}

SuiteReport verify_mixed(const NHPtr& alg, const VerifyOptions& opts) {
  SuiteReport rep{"mixed", {}, {}};
  NHPtr target = alg;
  std::vector<std::pair<int, int>> pairs;
  if (opts.m) {
    SystemConfig config = dihedral_config(*opts.m);
    config.max_elements = alg->system().max_elements();
    target = NilHecke::create(CoxeterSystem::build(config));
    pairs = {{0, 1}};
  } else {
    pairs = finite_pairs(alg->system());
  }
  const CoxeterSystem& sys = target->system();
  for (const auto& [s, t] : pairs) {
    int m = sys.coxeter(s, t);
    auto relations = mixed_relations(target, s, t);
    std::string prefix = sys.generator_name(s) + "," + sys.generator_name(t) + "(m=" + std::to_string(m) + ")/";
    for (const auto& r : relations) {
      std::string text = relation_text(sys, r);
      add(rep, prefix + relation_label(sys, r.w), r.equal,
          text + " ; lhs = " + render_element(r.lhs) + " ; rhs = " + render_element(r.rhs), text);
    }
    rep.notes.push_back("# " + prefix.substr(0, prefix.size() - 1) + ": " + std::to_string(relations.size()) +
                        " relations, expected " + std::to_string(2 * m - 1));
  }
  return rep;
}

SuiteReport verify_basis(const NHPtr& alg, const VerifyOptions& opts) {
  SuiteReport rep{"basis", {}, {}};
  const CoxeterSystem& sys = alg->system();
  const SystemPtr& sp = alg->system_ptr();
  std::size_t max_len = opts.max_len.value_or(sys.rank() <= 2 ? 6 : 4);
  auto words = all_words(sys.rank(), max_len);
  struct Outcome {
    bool zero_matches = false;
    bool normal_form = false;
    bool oracle = false;
    std::string nf;
    Word canonical;
    bool reduced = false;
  };
  auto results = parallel_map<Outcome>(words.size(), worker_count(opts, words.size()), [&](std::size_t i) {
    const Word& w = words[i];
    Outcome o;
    NHElement prod = NHElement::scalar(alg, Scalar(1));
    QWElement qprod = QWElement::scalar(sp, RationalFunction(Polynomial(sys.nvars(), Scalar(1))));
    for (int s : w) {
      prod = prod * NHElement::d(alg, s);
      qprod = qw_mul(qprod, embed_d(sp, Word{s}));
    }
    o.reduced = sys.is_reduced(w);
    o.zero_matches = prod.is_zero() != o.reduced && qprod.is_zero() != o.reduced;
    if (o.reduced) {
      o.canonical = sys.canonical_form(w);
      o.normal_form = prod == NHElement::d_word(alg, o.canonical);
      o.nf = render_element(prod);
    } else {
      o.normal_form = prod.is_zero();
    }
    o.oracle = embed(prod) == qprod && (!o.reduced || oracle_equal(prod, NHElement::d_word(alg, o.canonical)));
    return o;
  });
  std::map<std::string, Word> by_normal_form;
  bool injective = true;
  std::string clash;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& o = results[i];
    std::string id = "word-" + (words[i].empty() ? std::string("1") : sys.word_name(words[i]));
    add(rep, id + "/nonzero-iff-reduced", o.zero_matches, o.reduced ? "reduced word with zero product" : "nonreduced word with nonzero product");
    add(rep, id + "/normal-form", o.normal_form, o.nf);
    add(rep, id + "/oracle", o.oracle, "embedding disagrees with the twisted group algebra product");
    if (!o.reduced) continue;
    auto [it, inserted] = by_normal_form.emplace(o.nf, o.canonical);
    if (!inserted && it->second != o.canonical) {
      injective = false;
      clash = o.nf;
    }
  }
  // Equal normal forms must come from equal group elements, and vice versa.
  std::map<Word, std::string, WordLess> by_element;
  for (const auto& [nf, w] : by_normal_form) {
    auto [it, inserted] = by_element.emplace(w, nf);
    if (!inserted && it->second != nf) {
      injective = false;
      clash = nf;
    }
  }
  add(rep, "normal-forms-match-elements", injective, clash,
      std::to_string(by_normal_form.size()) + " distinct elements from " + std::to_string(words.size()) + " words");
  return rep;
}

SuiteReport verify_oracle(const NHPtr& alg, const VerifyOptions& opts) {
  SuiteReport rep{"oracle", {}, {}};
  auto pool = sample_pool(alg->system());
  std::mt19937_64 rng(opts.seed);
  std::size_t products = static_cast<std::size_t>(4 * opts.samples);
  std::size_t deltas = static_cast<std::size_t>(opts.samples);
  std::vector<std::pair<NHElement, NHElement>> samples;
  for (std::size_t i = 0; i < products; ++i) {
    NHElement a = sample_element(rng, alg, pool, opts.max_deg, opts.max_support);
    NHElement b = sample_element(rng, alg, pool, opts.max_deg, opts.max_support);
    samples.emplace_back(std::move(a), std::move(b));
  }
  using Checks = std::vector<std::pair<std::string, bool>>;
  auto results = parallel_map<Checks>(products, worker_count(opts, products), [&](std::size_t i) {
    const auto& [a, b] = samples[i];
    Checks c;
    QWElement ea = embed(a);
    c.emplace_back("product", embed(a * b) == qw_mul(ea, embed(b)));
    if (i < deltas) {
      c.emplace_back("delta", delta_qw(ea) == embed_tensor(delta(a)));
      c.emplace_back("counit", epsilon_qw(ea) == RationalFunction(counit(a)));
    }
    return c;
  });
  for (std::size_t i = 0; i < results.size(); ++i)
    for (const auto& [name, ok] : results[i])
      add(rep, "sample-" + std::to_string(i + 1) + "/" + name, ok, pair_text(samples[i].first, samples[i].second));
  return rep;
}

SuiteReport verify_etriv(const NHPtr& alg, const VerifyOptions&) {
  SuiteReport rep{"etriv", {}, {}};
  if (!alg->system().finite()) throw Error(ErrorCode::kInfiniteGroup, "e_triv needs a finite group");
  ETrivReport r = e_triv_report(alg);
  add(rep, "forms-agree", r.forms_agree,
      "average = " + render_element(r.group_average) + " ; demazure form = " + render_element(r.demazure_form));
  add(rep, "idempotent", r.idempotent, render_element(r.group_average));
  bool absorbs = true;
  for (int s = 0; s < static_cast<int>(alg->system().rank()); ++s)
    absorbs = absorbs && NHElement::group(alg, s) * r.group_average == r.group_average &&
              (NHElement::d(alg, s) * r.group_average).is_zero();
  add(rep, "absorbs-generators", absorbs, "s*e != e or d[s]*e != 0");
  return rep;
}

SuiteReport verify_antipode_obstruction(const NHPtr& alg, const VerifyOptions&) {
  SuiteReport rep{"antipode-obstruction", {}, {}};
  NHPtr rank_one = alg->system().rank() == 1 ? alg : NilHecke::create(CoxeterSystem::build(s2_config()));
  if (rank_one != alg) rep.notes.push_back("# the obstruction is computed on the rank-one preset");
  ObstructionReport r = antipode_obstruction_s2(rank_one);
  const CoxeterSystem& sys = rank_one->system();
  add(rep, "red-of-s", r.red_is_s_tensor_s, render_red(r.red_of_s), "red(w[s]) = " + render_red(r.red_of_s));
  add(rep, "forced-antipode-of-s", r.forced_equals_s, render_element(r.forced_S_of_s),
      "S(w[s]) = " + render_element(r.forced_S_of_s) + (r.forced_equals_s ? " = w[s]" : ""));
  add(rep, "no-polynomial-solution", r.unsolvable, r.equation, r.equation + " has no polynomial solution p");
  QWElement sd = antipode_qw(embed(NHElement::d(rank_one, 0)));
  add(rep, "group-algebra-antipode-leaves-nil-hecke", !in_image_of_nh(sd), render_qw(sd),
      "S(d[s]) = " + render_qw(sd));
  (void)sys;
  return rep;
}

SuiteReport verify_faithful(const NHPtr& alg, const VerifyOptions& opts) {
  SuiteReport rep{"faithful", {}, {}};
  unsigned trunc = opts.trunc.value_or(4);
  FaithfulnessReport r = faithfulness_rank(alg, trunc);
  std::string detail = "rank " + std::to_string(r.rank) + " of " + std::to_string(r.operators) + " operators on " +
                       std::to_string(r.inputs) + " inputs (degree <= " + std::to_string(trunc) + ")";
  add(rep, "full-rank", r.full_rank(), detail, detail);
  return rep;
}

SuiteReport verify_gallery(const VerifyOptions& opts) {
  SuiteReport rep{"gallery", {}, {}};
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& c : gallery::weyl_checks(n, opts.seed, opts.samples, static_cast<int>(opts.max_deg)))
      add(rep, c.fixture + "/" + c.name, c.pass, c.witness);
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& c : gallery::matrix_checks(n)) add(rep, c.fixture + "/" + c.name, c.pass, c.witness);
  auto endo = gallery::endo_compare_s2(opts.seed, std::min(opts.samples, 20), static_cast<int>(opts.max_deg),
                                       opts.trunc.value_or(6));
  for (const auto& c : endo.cases) add(rep, "endo/" + c.label, c.agree, c.witness);
  const auto& f = endo.frobenius;
  add(rep, "endo/dual-is-free", !f.one_dual_is_torsion, "1^vee is torsion",
      "a*1^vee takes 1 -> " + f.alpha_times_one_dual_on_one.to_string({"a"}) + ", a -> " +
          f.alpha_times_one_dual_on_alpha.to_string({"a"}) + "; 1^vee is not torsion");
  add(rep, "endo/frobenius", f.frobenius && f.alpha_dual_generates, "a^vee does not generate the dual",
      "a*a^vee = 1^vee, so a^vee generates the dual over k[a] and k[a] is Frobenius over k[a^2]");
  return rep;
}

std::vector<SuiteReport> run_suite(const std::string& name, const NHPtr& alg, const VerifyOptions& opts) {
  auto one = [&](const std::string& s) -> SuiteReport {
    if (s == "hopf") return verify_hopf(alg, opts);
    if (s == "mixed") return verify_mixed(alg, opts);
    if (s == "basis") return verify_basis(alg, opts);
    if (s == "oracle") return verify_oracle(alg, opts);
    if (s == "etriv") return verify_etriv(alg, opts);
    if (s == "antipode-obstruction") return verify_antipode_obstruction(alg, opts);
    if (s == "faithful") return verify_faithful(alg, opts);
    if (s == "gallery") return verify_gallery(opts);
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + s + "'");
  };
  std::vector<SuiteReport> out;
  if (name != "all") {
    if (name == "faithful" && !alg->system().finite())
      throw Error(ErrorCode::kInfiniteGroup, "faithfulness check needs a finite group");
    if (name == "mixed" && !suite_applies(name, alg->system(), opts))
      throw Error(ErrorCode::kInvalidArgument, "no pair of generators with finite m; pass --m");
    out.push_back(one(name));
    return out;
  }
  for (const auto& s : suite_names()) {
    if (!suite_applies(s, alg->system(), opts)) {
      SuiteReport skipped{s, {}, {"# " + s + " skipped: not applicable to this system"}};
      out.push_back(std::move(skipped));
      continue;
    }
    out.push_back(one(s));
  }
  return out;
}

std::string format_reports(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  std::size_t total_pass = 0, total_fail = 0;
  for (const auto& rep : reports) {
    for (const auto& r : rep.records) {
      nlohmann::ordered_json j;
      j["suite"] = r.suite;
      j["case"] = r.case_id;
      j["status"] = r.pass ? "PASS" : "FAIL";
      if (!r.detail.empty()) j["detail"] = r.detail;
      if (!r.pass) j["witness"] = r.witness;
      os << j.dump() << "\n";
    }
  }
  for (const auto& rep : reports) {
    for (const auto& n : rep.notes) os << n << "\n";
    os << "# " << rep.suite << ": " << rep.passed() << " passed, " << rep.failed() << " failed\n";
    total_pass += rep.passed();
    total_fail += rep.failed();
  }
  os << "# total: " << total_pass << " passed, " << total_fail << " failed\n";
  return os.str();
}

bool all_passed(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed() == 0; });
}

}  // namespace nhlab
