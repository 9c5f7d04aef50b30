/* Copyright 2026 The holkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "holkit/article.h"
#include "holkit/bench.h"
#include "holkit/bootstrap.h"
#include "holkit/lp_check.h"
#include "holkit/lp_translate.h"
#include "lp_mutations.h"
#include "semantics.h"
#include "term_gen.h"

namespace holkit {
namespace {

// Pinned thresholds.
constexpr size_t kMinCorpusEntries = 40;
constexpr double kEquivalenceSeconds = 5.0;
constexpr double kConjStepRatio = 0.75;
constexpr double kDisj1StepRatio = 0.50;
constexpr size_t kShippedMutations = 20;
constexpr double kLpSeconds = 10.0;
constexpr int kOracleCases = 1000;
constexpr size_t kMaxAtoms = 4;
constexpr uint64_t kOracleSeed = 20261015;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fixed(double x, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

bool uses_extended_rules(const Theorem& th) {
  std::set<const StepNode*> seen;
  std::vector<const StepNode*> work{th.trace().get()};
  while (!work.empty()) {
    const StepNode* n = work.back();
    work.pop_back();
    if (!seen.insert(n).second) continue;
    if (is_extended_rule(n->rule())) return true;
    for (const auto& p : n->premises()) work.push_back(p.get());
  }
  return false;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 1. Both kernels prove the same sequent for every corpus entry.
Outcome dual_kernel_equivalence() {
  auto start = std::chrono::steady_clock::now();
  Session minimal(KernelMode::kMinimal);
  Session extended(KernelMode::kExtended);
  size_t agree = 0;
  std::string first_bad;
  for (const CorpusEntry& e : corpus()) {
    if (same_sequent(e.build(minimal.logic()), e.build(extended.logic())))
      ++agree;
    else if (first_bad.empty())
      first_bad = e.name;
  }
  double secs = seconds_since(start);
  size_t n = corpus().size();
  bool pass =
      n >= kMinCorpusEntries && agree == n && secs < kEquivalenceSeconds;
  std::string d = std::to_string(agree) + "/" + std::to_string(n) +
                  " entries agree up to alpha (need >= " +
                  std::to_string(kMinCorpusEntries) + ", all), " +
                  fixed(secs, 3) + " s (limit " +
                  fixed(kEquivalenceSeconds, 0) + " s)";
  if (!first_bad.empty()) d += "; first mismatch: " + first_bad;
  return {pass, d};
}

// 2. Step counts of CONJ and DISJ1.
Outcome step_reduction() {
  auto steps = [](const char* name, KernelMode mode) {
    Session s(mode);
    return step_count(find_corpus_entry(name)->build(s.logic()));
  };
  uint64_t cm = steps("conj", KernelMode::kMinimal);
  uint64_t ce = steps("conj", KernelMode::kExtended);
  uint64_t dm = steps("disj1", KernelMode::kMinimal);
  uint64_t de = steps("disj1", KernelMode::kExtended);
  double rc = double(ce) / cm, rd = double(de) / dm;
  bool pass = rc <= kConjStepRatio && rd <= kDisj1StepRatio;
  return {pass, "CONJ " + std::to_string(ce) + "/" + std::to_string(cm) +
                    " = " + fixed(rc, 3) + " (limit " + fixed(kConjStepRatio) +
                    "), DISJ1 " + std::to_string(de) + "/" +
                    std::to_string(dm) + " = " + fixed(rd, 3) + " (limit " +
                    fixed(kDisj1StepRatio) + ")"};
}

// 3. Articles round-trip in both dialects.
Outcome article_round_trip() {
  size_t checked = 0, failed = 0, inexpressible = 0;
  std::string first_bad;
  for (KernelMode mode : {KernelMode::kMinimal, KernelMode::kExtended}) {
    Session s(mode);
    for (const CorpusEntry& e : corpus()) {
      Theorem th = e.build(s.logic());
      for (Dialect d : {Dialect::kStandard, Dialect::kExtended}) {
        if (d == Dialect::kStandard && uses_extended_rules(th)) {
          ++inexpressible;
          continue;
        }
        ++checked;
        bool ok = false;
        try {
          std::string text = format_article(serialize(th, s.kernel(), d));
          Article parsed = parse_article(text, d);
          Kernel k(mode);
          ReplayResult r = replay(parsed, k);
          ok = r.exported.size() == 1 && same_sequent(r.exported[0], th) &&
               format_article(serialize(r.exported[0], k, d)) == text;
        } catch (const std::exception&) {
          ok = false;
        }
        if (!ok) {
          ++failed;
          if (first_bad.empty())
            first_bad = e.name + " (" + std::string(mode_name(mode)) + ", " +
                        std::string(dialect_name(d)) + ")";
        }
      }
    }
  }
  std::string d = std::to_string(checked - failed) + "/" +
                  std::to_string(checked) +
                  " (mode, dialect, entry) articles replay to the same "
                  "sequent and re-serialize byte-identically; " +
                  std::to_string(inexpressible) +
                  " extended-rule proofs have no standard-dialect article";
  if (!first_bad.empty()) d += "; first failure: " + first_bad;
  return {failed == 0 && checked > 0, d};
}

// 4 and 8 share one benchmark run.
const BenchReport& bench_report() {
  static const BenchReport* report = [] {
    BenchOptions o;
    o.timing_runs = 5;
    return new BenchReport(run_bench(corpus(), o));
  }();
  return *report;
}

Outcome size_direction() {
  const BenchReport& r = bench_report();
  if (!r.ok() || !r.ratios) return {false, "benchmark run failed"};
  const BenchTotals& mn = r.totals.at(KernelMode::kMinimal);
  const BenchTotals& ex = r.totals.at(KernelMode::kExtended);
  bool pass = ex.article_gzip_bytes < mn.article_gzip_bytes &&
              ex.lp_gzip_bytes < mn.lp_gzip_bytes;
  return {pass, "gzip articles " + std::to_string(ex.article_gzip_bytes) +
                    " < " + std::to_string(mn.article_gzip_bytes) +
                    " bytes (reduced to " +
                    fixed(100 * r.ratios->article_gzip_bytes) +
                    "%, reference " + fixed(kReferenceArticleSizeRatio) +
                    "%), gzip LP " + std::to_string(ex.lp_gzip_bytes) + " < " +
                    std::to_string(mn.lp_gzip_bytes) + " bytes (reduced to " +
                    fixed(100 * r.ratios->lp_gzip_bytes) + "%, reference " +
                    fixed(kReferenceLpSizeRatio) + "%)"};
}

// 5. LP translations check, mutations fail, goldens match.
Outcome lp_checking() {
  auto start = std::chrono::steady_clock::now();
  size_t accepted = 0, total = 0;
  std::string first_bad;
  for (KernelMode mode : {KernelMode::kMinimal, KernelMode::kExtended}) {
    Session s(mode);
    for (const CorpusEntry& e : corpus()) {
      ++total;
      try {
        Theorem th = e.build(s.logic());
        check_lp_file(parse_lp_file(
            emit_lp_file(translate_theorems(s.kernel(), {{e.name, th}}))));
        ++accepted;
      } catch (const std::exception& ex) {
        if (first_bad.empty()) first_bad = e.name + ": " + ex.what();
      }
    }
  }
  size_t rejected = 0, mutations = 0;
  for (const testing::LpMutation& m : testing::shipped_lp_mutations()) {
    ++mutations;
    try {
      check_lp_file(m.original);
      check_lp_file(m.mutated);
      if (first_bad.empty()) first_bad = "mutation accepted: " + m.name;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kTypeError)
        ++rejected;
      else if (first_bad.empty())
        first_bad = m.name + ": " + e.what();
    }
  }
  size_t goldens = 0;
  for (KernelMode mode : {KernelMode::kMinimal, KernelMode::kExtended}) {
    std::string path = std::string(HOLKIT_DOCS_DIR) + "/sig-" +
                       std::string(mode_name(mode)) + ".lp";
    if (slurp(path) == emit_lp_file(base_signature(mode)))
      ++goldens;
    else if (first_bad.empty())
      first_bad = "golden mismatch: " + path;
  }
  double secs = seconds_since(start);
  bool pass = accepted == total && mutations == kShippedMutations &&
              rejected == mutations && goldens == 2 && secs < kLpSeconds;
  std::string d = std::to_string(accepted) + "/" + std::to_string(total) +
                  " translations accepted, " + std::to_string(rejected) + "/" +
                  std::to_string(mutations) + " mutations rejected, " +
                  std::to_string(goldens) + "/2 goldens byte-exact, " +
                  fixed(secs, 3) + " s (limit " + fixed(kLpSeconds, 0) + " s)";
  if (!first_bad.empty()) d += "; " + first_bad;
  return {pass, d};
}

// Renames every binder to a fresh name.
Term rename_binders(const Term& t, int& counter) {
  switch (t.kind()) {
    case Term::Kind::kApp:
      return Term::app(rename_binders(t.fun(), counter),
                       rename_binders(t.arg(), counter));
    case Term::Kind::kAbs: {
      const Var& x = t.as_var();
      Var fresh{"b_" + std::to_string(counter++), x.ty};
      Term body =
          subst_term(TermSubstitution({{x, Term::var(fresh)}}), t.body());
      return Term::abs(fresh, rename_binders(body, counter));
    }
    default:
      return t;
  }
}

// 6. Substitution and alpha-equivalence against the de Bruijn oracle.
Outcome substitution_oracle() {
  testing::TermGen gen(kOracleSeed);
  int subst_ok = 0, alpha_ok = 0, equal_pairs = 0;
  for (int i = 0; i < kOracleCases; ++i) {
    Type ty = gen.random_type(2);
    Term t = gen.random_term(ty, 4);
    std::vector<std::pair<Var, Term>> pairs;
    for (const Var& fv : free_vars(t))
      if (gen.uniform(0, 1)) pairs.emplace_back(fv, gen.random_term(fv.ty, 2));
    Term r = subst_term(TermSubstitution(pairs), t);
    if (testing::to_db(r) == testing::db_subst(pairs, testing::to_db(t)))
      ++subst_ok;
  }
  for (int i = 0; i < kOracleCases; ++i) {
    Type ty = gen.random_type(2);
    Term a = gen.random_term(ty, 4);
    int counter = 0;
    Term b = [&] {
      if (i % 3 == 0) return gen.random_term(ty, 4);
      Term c = rename_binders(a, counter);
      if (i % 3 == 1) return c;
      // A renamed copy with one free variable replaced.
      VarSet fv = free_vars(c);
      if (fv.empty()) return c;
      const Var& v = *fv.begin();
      return subst_term(TermSubstitution({{v, gen.random_term(v.ty, 1)}}), c);
    }();
    bool db_equal = testing::to_db(a) == testing::to_db(b);
    equal_pairs += db_equal;
    if (alpha_equal(a, b) == db_equal) ++alpha_ok;
  }
  bool pass = subst_ok == kOracleCases && alpha_ok == kOracleCases;
  return {pass, std::to_string(subst_ok) + "/" + std::to_string(kOracleCases) +
                    " subst_term cases and " + std::to_string(alpha_ok) + "/" +
                    std::to_string(kOracleCases) +
                    " alpha_equal cases agree with de Bruijn (" +
                    std::to_string(equal_pairs) + " equal pairs)"};
}

// 7. Closed-hypothesis propositional conclusions are tautologies.
Outcome propositional_soundness() {
  size_t checked = 0, tautologies = 0;
  std::string first_bad;
  for (KernelMode mode : {KernelMode::kMinimal, KernelMode::kExtended}) {
    Session s(mode);
    testing::Model model(s.kernel());
    for (const CorpusEntry& e : corpus()) {
      Theorem th = e.build(s.logic());
      if (!th.hyps().empty()) continue;
      VarSet atoms = free_vars(th.concl());
      if (atoms.size() > kMaxAtoms) continue;
      if (!type_vars(th.concl()).empty()) continue;
      bool propositional = true;
      for (const Var& v : atoms) propositional &= v.ty == bool_ty();
      if (!propositional) continue;
      ++checked;
      std::vector<Var> vs(atoms.begin(), atoms.end());
      bool all = true;
      for (unsigned row = 0; row < (1u << vs.size()); ++row) {
        std::map<Var, testing::Value> env;
        for (size_t i = 0; i < vs.size(); ++i)
          env.emplace(vs[i], testing::make_bool((row >> i) & 1));
        all &= model.eval(th.concl(), env).atom == 1;
      }
      if (all)
        ++tautologies;
      else if (first_bad.empty())
        first_bad = e.name;
    }
  }
  std::string d =
      std::to_string(tautologies) + "/" + std::to_string(checked) +
      " closed propositional conclusions (<= " + std::to_string(kMaxAtoms) +
      " atoms, both modes) are tautologies";
  if (!first_bad.empty()) d += "; first failure: " + first_bad;
  return {checked > 0 && tautologies == checked, d};
}

// 8. Timing, reported only.
Outcome timing() {
  const BenchReport& r = bench_report();
  if (!r.ratios) return {false, "benchmark run failed"};
  const BenchTotals& mn = r.totals.at(KernelMode::kMinimal);
  const BenchTotals& ex = r.totals.at(KernelMode::kExtended);
  return {true, "ungated; translation " + fixed(mn.translate_time) + " -> " +
                    fixed(ex.translate_time) + " ms (improved by " +
                    fixed(100 * (1 - r.ratios->translate_time)) +
                    "%, reference " + fixed(kReferenceTranslateImprovement) +
                    "%), checking " + fixed(mn.check_time) + " -> " +
                    fixed(ex.check_time) + " ms (improved by " +
                    fixed(100 * (1 - r.ratios->check_time)) + "%, reference " +
                    fixed(kReferenceCheckImprovement) +
                    "%), medians of 5 runs"};
}

int run() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"dual-kernel equivalence", dual_kernel_equivalence},
          {"step-count reduction", step_reduction},
          {"article round-trip", article_round_trip},
          {"size direction", size_direction},
          {"LP checking", lp_checking},
          {"substitution correctness", substitution_oracle},
          {"propositional soundness", propositional_soundness},
          {"timing", timing},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace holkit

int main() { return holkit::run(); }
