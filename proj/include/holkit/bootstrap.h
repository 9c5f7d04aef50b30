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

#ifndef HOLKIT_BOOTSTRAP_H_
#define HOLKIT_BOOTSTRAP_H_

// Logical connectives defined on top of either kernel, the derived inference
// rules built from them, and the shared benchmark corpus.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "holkit/kernel.h"

namespace holkit {

// Constant names, identical in both modes.
inline constexpr char kTrue[] = "T";
inline constexpr char kFalse[] = "F";
inline constexpr char kAnd[] = "/\\";
inline constexpr char kOr[] = "\\/";
inline constexpr char kNot[] = "~";
inline constexpr char kExists[] = "?";
inline constexpr char kImp[] = "==>";
inline constexpr char kForall[] = "!";

Term mk_truth();
Term mk_false();
Term mk_conj(const Term& p, const Term& q);
Term mk_disj(const Term& p, const Term& q);
Term mk_neg(const Term& p);
Term mk_exists(const Var& x, const Term& body);
// Bi-implication is equality at bool.
Term mk_iff(const Term& p, const Term& q);

bool is_conj(const Term& t);
bool is_disj(const Term& t);
bool is_neg(const Term& t);
bool is_exists(const Term& t);  // ? applied to an abstraction

// The connectives defined in a context, in definition order. In extended
// mode ==> and ! are kernel primitives and do not appear.
struct ConnectiveTable {
  KernelMode mode;
  std::vector<std::pair<std::string, Theorem>> defs;

  bool defines(std::string_view name) const;
  // Throws Undeclared for a connective the table does not define.
  const Theorem& def(std::string_view name) const;
};

// Defines the connectives for the kernel's mode. Throws NameClash when
// called twice on one kernel.
ConnectiveTable install_connectives(Kernel& kernel);

// The extensionality axiom |- (\x:A. f x) = f with f : A -> B.
Term extensionality_statement();
Theorem install_extensionality(Kernel& kernel);

using DeriveArg = std::variant<Theorem, Term, Var>;

// Derived rules over one kernel session. Scripts in minimal mode unfold the
// definitions of ==> and !; in extended mode they call the primitive rules.
class Logic {
 public:
  Logic(const Kernel& kernel, ConnectiveTable table);

  const Kernel& kernel() const { return *k_; }
  const ConnectiveTable& table() const { return table_; }
  KernelMode mode() const { return k_->mode(); }

  // Equality reasoning.
  Theorem sym(const Theorem& th) const;
  Theorem ap_term(const Term& f, const Theorem& th) const;
  Theorem ap_thm(const Theorem& th, const Term& x) const;
  // |- c a1 ... an = body[a1..an], from the defining theorem of c.
  Theorem unfold(std::string_view name, const std::vector<Term>& args) const;
  // Removes concl(ath) from the hypotheses of bth, adding those of ath.
  Theorem prove_hyp(const Theorem& ath, const Theorem& bth) const;

  Theorem truth() const;
  Theorem eqt_intro(const Theorem& th) const;  // G |- p   ==>  G |- p = T
  Theorem eqt_elim(const Theorem& th) const;   // G |- p = T  ==>  G |- p

  Theorem conj(const Theorem& a, const Theorem& b) const;
  Theorem conjunct1(const Theorem& th) const;
  Theorem conjunct2(const Theorem& th) const;

  Theorem mp(const Theorem& ipq, const Theorem& ip) const;
  Theorem disch(const Term& p, const Theorem& th) const;
  Theorem gen(const Var& x, const Theorem& th) const;
  Theorem spec(const Term& u, const Theorem& th) const;

  Theorem disj1(const Theorem& th, const Term& q) const;
  Theorem disj2(const Term& p, const Theorem& th) const;
  // G |- p \/ q, D1 |- r, D2 |- r  ==>  G u D1-{p} u D2-{q} |- r
  Theorem disj_cases(const Theorem& th, const Theorem& th1,
                     const Theorem& th2) const;

  // ex = ?x. P[x], G |- P[u]  ==>  G |- ?x. P[x]
  Theorem exists_i(const Term& ex, const Term& u, const Theorem& th) const;
  // G |- ?x. P[x], D |- r with v not free elsewhere  ==>  G u D-{P[v]} |- r
  Theorem choose(const Var& v, const Theorem& ex, const Theorem& th) const;

  Theorem not_intro(const Theorem& th) const;  // p ==> F  ==>  ~p
  Theorem not_elim(const Theorem& th) const;   // ~p  ==>  p ==> F

  // Dispatch by rule name (TRUTH, CONJ, SPEC_D, ...). Throws
  // SchemaMismatch on unknown names or wrongly shaped arguments.
  Theorem derive(std::string_view rule,
                 const std::vector<DeriveArg>& args) const;

  // Both returned theorems have empty hypotheses:
  //   |- (!) = \P. P = (\x. T)
  //   |- (==>) = \p q. (p /\ q) = p
  // Throws WrongMode in minimal mode and MissingAxiom without the
  // extensionality axiom.
  std::pair<Theorem, Theorem> prove_legacy_definitions() const;

 private:
  std::optional<Theorem> head_beta(const Term& t, int& fuel) const;
  Theorem beta_sides(const Theorem& th, int fuel) const;
  Theorem conjunct(const Theorem& th, bool left) const;

  const Kernel* k_;
  ConnectiveTable table_;
};

std::vector<std::string_view> derived_rule_names();

struct CorpusEntry {
  std::string name;
  // Uses ==> or ! reasoning, where the extended kernel should strictly win.
  bool implicational;
  std::function<Theorem(const Logic&)> build;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus_entry(std::string_view name);

// A kernel with connectives installed, ready to build corpus entries.
class Session {
 public:
  explicit Session(KernelMode mode);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  Kernel& kernel() { return kernel_; }
  const Logic& logic() const { return logic_; }

 private:
  Kernel kernel_;
  Logic logic_;
};

}  // namespace holkit

#endif  // HOLKIT_BOOTSTRAP_H_
