#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nhlab/coxeter.hpp"
#include "nhlab/hopf.hpp"
#include "nhlab/nilhecke.hpp"
#include "nhlab/tensor.hpp"

namespace nhlab {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int samples = 50;
  unsigned max_deg = 3;
  unsigned max_support = 4;
  /// Suite default when unset: 4 for faithfulness, 6 for the endo comparison.
  std::optional<unsigned> trunc;
  /// Dihedral order for the mixed suite; unset means every finite pair of the system.
  std::optional<int> m;
  /// Word length bound for the basis suite; unset means 6 in rank two, 4 otherwise.
  std::optional<std::size_t> max_len;
  MulMode mode = MulMode::kChecked;
  /// Worker threads for sampled suites; results are merged in sample order.
  unsigned threads = 0;
};

struct CheckRecord {
  std::string suite;
  std::string case_id;
  bool pass = false;
  /// Counterexample text, set on failure.
  std::string witness;
  /// Optional informational text printed for passing checks too.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> records;
  /// Human-readable lines printed before the summary.
  std::vector<std::string> notes;

  std::size_t passed() const;
  std::size_t failed() const;
};

/// Suites accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// Whether `all` runs the suite on this system (e.g. e_triv needs a finite group).
bool suite_applies(const std::string& suite, const CoxeterSystem& sys, const VerifyOptions& opts);

SuiteReport verify_hopf(const NHPtr& alg, const VerifyOptions& opts);
SuiteReport verify_mixed(const NHPtr& alg, const VerifyOptions& opts);
SuiteReport verify_basis(const NHPtr& alg, const VerifyOptions& opts);
SuiteReport verify_oracle(const NHPtr& alg, const VerifyOptions& opts);
SuiteReport verify_etriv(const NHPtr& alg, const VerifyOptions& opts);
SuiteReport verify_antipode_obstruction(const NHPtr& alg, const VerifyOptions& opts);
SuiteReport verify_faithful(const NHPtr& alg, const VerifyOptions& opts);
SuiteReport verify_gallery(const VerifyOptions& opts);

/// Runs one named suite, or every applicable suite for "all".
std::vector<SuiteReport> run_suite(const std::string& name, const NHPtr& alg, const VerifyOptions& opts);

/// One JSON object per line for each record, then notes and a summary per suite.
std::string format_reports(const std::vector<SuiteReport>& reports);
bool all_passed(const std::vector<SuiteReport>& reports);

/// `lhs = rhs` with each side a sum of mixed monomials, e.g.
/// `w[s]*d[t]*d[s] + d[s]*d[t]*w[s] = d[t]*w[s]*d[t]`.
std::string relation_text(const CoxeterSystem& sys, const RelationReport& r);
/// Relation label such as `R_st`, `R_1` for the identity.
std::string relation_label(const CoxeterSystem& sys, const Word& w);

/// Random element with at most max_support terms over `pool`, coefficients of degree <= max_deg.
NHElement sample_element(std::mt19937_64& rng, const NHPtr& alg, const std::vector<Word>& pool, unsigned max_deg,
                         unsigned max_support);
/// The pool sampled from: the whole group when finite, words of length <= 4 otherwise.
std::vector<Word> sample_pool(const CoxeterSystem& sys);

}  // namespace nhlab
