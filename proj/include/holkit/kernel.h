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

#ifndef HOLKIT_KERNEL_H_
#define HOLKIT_KERNEL_H_

// The trusted core: sealed theorems, the ten equality-kernel rules, the four
// implication/quantifier rules of the extended kernel, definitional
// mechanisms and primitive-step traces.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "holkit/hol.h"

namespace holkit {

enum class KernelMode { kMinimal, kExtended };

std::string_view mode_name(KernelMode mode);
// Inverse of mode_name.
std::optional<KernelMode> parse_mode(std::string_view name);

enum class Rule {
  kRefl,
  kTrans,
  kMkComb,
  kAbs,
  kBeta,
  kAssume,
  kEqMp,
  kDeductAntisym,
  kInst,
  kInstType,
  kMp,
  kDisch,
  kGen,
  kSpec,
  kAxiom,
  kDefineConst,
  kTypeDefAbsRep,
  kTypeDefRepAbs,
};

std::string_view rule_name(Rule rule);
bool is_extended_rule(Rule rule);

class Kernel;
class Theorem;

// One recorded inference. The node also carries the sequent it concluded,
// so a trace can be replayed, serialized or translated on its own.
class StepNode {
 public:
  Rule rule() const { return rule_; }
  const std::vector<std::shared_ptr<const StepNode>>& premises() const {
    return premises_;
  }
  // Term operands: refl/beta/assume/disch/spec/axiom/define_const take one;
  // abs/gen record the variable as a term.
  const std::vector<Term>& terms() const { return terms_; }
  const TermSubstitution& term_subst() const { return term_subst_; }
  const TypeSubstitution& type_subst() const { return type_subst_; }
  // define_const: {name}; type definitions: {type, abs, rep, tyvars...}.
  const std::vector<std::string>& names() const { return names_; }

  const std::vector<Term>& hyps() const { return hyps_; }
  const Term& concl() const { return concl_; }

  // Number of rule applications in the trace viewed as a tree.
  uint64_t step_count() const { return step_count_; }

 private:
  friend class Kernel;
  StepNode(Rule rule, std::vector<std::shared_ptr<const StepNode>> premises,
           std::vector<Term> hyps, Term concl)
      : rule_(rule),
        premises_(std::move(premises)),
        hyps_(std::move(hyps)),
        concl_(std::move(concl)) {}

  Rule rule_;
  std::vector<std::shared_ptr<const StepNode>> premises_;
  std::vector<Term> terms_;
  TermSubstitution term_subst_;
  TypeSubstitution type_subst_;
  std::vector<std::string> names_;
  std::vector<Term> hyps_;
  Term concl_;
  uint64_t step_count_ = 1;
};

using StepTrace = std::shared_ptr<const StepNode>;

// A sequent hyps |- concl. Only Kernel can construct one.
class Theorem {
 public:
  // Canonically ordered (alpha_compare), alpha-deduplicated.
  const std::vector<Term>& hyps() const { return node_->hyps(); }
  const Term& concl() const { return node_->concl(); }
  const StepTrace& trace() const { return node_; }

 private:
  friend class Kernel;
  explicit Theorem(StepTrace node) : node_(std::move(node)) {}
  StepTrace node_;
};

uint64_t step_count(const Theorem& th);
std::string to_string(const Theorem& th);

// Same hypotheses (up to alpha, as sets) and alpha-equal conclusions.
bool same_sequent(const Theorem& a, const Theorem& b);

struct ConstDefinition {
  std::string name;
  Term rhs;
  Theorem theorem;
};

struct TypeDefinition {
  std::string name;
  std::string abs;
  std::string rep;
  std::vector<std::string> tyvars;
  Theorem witness;
  Theorem abs_rep;
  Theorem rep_abs;
};

using Definition = std::variant<ConstDefinition, TypeDefinition>;

struct KernelContext {
  KernelMode mode;
  std::map<std::string, size_t> type_ops;
  std::map<std::string, Type> constants;
  std::vector<Theorem> axioms;
  // Definitional extensions in the order they were made.
  std::vector<Definition> definitions;
};

// A kernel session. Rules are const; definitional operations mutate the
// context and must not run concurrently with anything else on the session.
class Kernel {
 public:
  explicit Kernel(KernelMode mode);

  KernelMode mode() const { return ctx_.mode; }
  const KernelContext& context() const { return ctx_; }

  // Instance of a declared constant at `ty`; throws Undeclared/TypeMismatch.
  Term mk_const(const std::string& name, const Type& ty) const;
  // Generic type of a declared constant; throws Undeclared.
  const Type& const_type(const std::string& name) const;
  const ConstDefinition* find_definition(const std::string& name) const;
  const TypeDefinition* find_type_definition(const std::string& name) const;

  // Equality kernel.
  Theorem refl(const Term& t) const;
  Theorem trans(const Theorem& ab, const Theorem& bc) const;
  Theorem mk_comb(const Theorem& fg, const Theorem& xy) const;
  Theorem abs(const Var& x, const Theorem& st) const;
  Theorem beta(const Term& t) const;
  Theorem assume(const Term& p) const;
  Theorem eq_mp(const Theorem& pq, const Theorem& p) const;
  Theorem deduct_antisym(const Theorem& a, const Theorem& b) const;
  Theorem inst(const TermSubstitution& sigma, const Theorem& th) const;
  Theorem inst_type(const TypeSubstitution& theta, const Theorem& th) const;

  // Extended kernel only; WrongMode otherwise.
  Theorem mp(const Theorem& ipq, const Theorem& ip) const;
  Theorem disch(const Term& p, const Theorem& th) const;
  Theorem gen(const Var& x, const Theorem& th) const;
  Theorem spec(const Term& u, const Theorem& th) const;

  // Definitional extension and axioms.
  Theorem define_const(const std::string& name, const Term& t);
  struct TypeDefResult {
    Theorem abs_rep;  // |- abs (rep a) = a
    Theorem rep_abs;  // |- P r = (rep (abs r) = r)
  };
  TypeDefResult define_type_op(const std::string& name, const std::string& abs,
                               const std::string& rep,
                               const std::vector<std::string>& tyvars,
                               const Theorem& witness);
  Theorem new_axiom(const Term& p);

  // Raises on any constant or type operator that is undeclared or used at a
  // type that is not an instance of its declaration.
  void check_term(const Term& t) const;
  void check_type(const Type& ty) const;

 private:
  Theorem make(Rule rule, std::vector<StepTrace> premises,
               std::vector<Term> hyps, Term concl,
               std::vector<Term> terms = {},
               const std::function<void(StepNode&)>& fill = nullptr) const;
  void require_extended(std::string_view rule) const;

  KernelContext ctx_;
};

// Term constructors for the kernel's logical constants. They do not consult a
// context; the kernel validates constants when terms reach a rule.
Term mk_eq(const Term& lhs, const Term& rhs);
Term mk_imp(const Term& p, const Term& q);
Term mk_forall(const Var& x, const Term& body);
bool is_eq(const Term& t);
bool is_imp(const Term& t);
bool is_forall(const Term& t);  // ! applied to an abstraction
const Term& eq_lhs(const Term& t);
const Term& eq_rhs(const Term& t);

// Hypothesis-set helpers on canonical sequences.
std::vector<Term> canonical_hyps(std::vector<Term> hyps);
std::vector<Term> hyp_union(const std::vector<Term>& a,
                            const std::vector<Term>& b);
std::vector<Term> hyp_remove(const std::vector<Term>& hyps, const Term& p);
bool hyp_contains(const std::vector<Term>& hyps, const Term& p);

}  // namespace holkit

#endif  // HOLKIT_KERNEL_H_
