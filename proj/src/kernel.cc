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

#include "holkit/kernel.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_set>

namespace holkit {

std::string_view mode_name(KernelMode mode) {
  return mode == KernelMode::kMinimal ? "minimal" : "extended";
}

std::optional<KernelMode> parse_mode(std::string_view name) {
  if (name == "minimal") return KernelMode::kMinimal;
  if (name == "extended") return KernelMode::kExtended;
  return std::nullopt;
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kRefl: return "REFL";
    case Rule::kTrans: return "TRANS";
    case Rule::kMkComb: return "MK_COMB";
    case Rule::kAbs: return "ABS";
    case Rule::kBeta: return "BETA";
    case Rule::kAssume: return "ASSUME";
    case Rule::kEqMp: return "EQ_MP";
    case Rule::kDeductAntisym: return "DEDUCT_ANTISYM_RULE";
    case Rule::kInst: return "INST";
    case Rule::kInstType: return "INST_TYPE";
    case Rule::kMp: return "MP";
    case Rule::kDisch: return "DISCH";
    case Rule::kGen: return "GEN";
    case Rule::kSpec: return "SPEC";
    case Rule::kAxiom: return "AXIOM";
    case Rule::kDefineConst: return "DEFINE_CONST";
    case Rule::kTypeDefAbsRep: return "TYPEDEF_ABS_REP";
    case Rule::kTypeDefRepAbs: return "TYPEDEF_REP_ABS";
  }
  return "?";
}

bool is_extended_rule(Rule rule) {
  return rule == Rule::kMp || rule == Rule::kDisch || rule == Rule::kGen ||
         rule == Rule::kSpec;
}

uint64_t step_count(const Theorem& th) { return th.trace()->step_count(); }

std::string to_string(const Theorem& th) {
  std::string out;
  for (size_t i = 0; i < th.hyps().size(); ++i) {
    if (i) out += ", ";
    out += to_string(th.hyps()[i]);
  }
  if (!out.empty()) out += " ";
  return out + "|- " + to_string(th.concl());
}

bool same_sequent(const Theorem& a, const Theorem& b) {
  if (a.hyps().size() != b.hyps().size()) return false;
  for (size_t i = 0; i < a.hyps().size(); ++i)
    if (!alpha_equal(a.hyps()[i], b.hyps()[i])) return false;
  return alpha_equal(a.concl(), b.concl());
}

// ---------------------------------------------------------------------------
// Logical constants

namespace {

const Type& alpha_ty() {
  static const Type ty = Type::var("A");
  return ty;
}

}  // namespace

Term mk_eq(const Term& lhs, const Term& rhs) {
  Type ty = lhs.type_of();
  Term eq = Term::constant("=", fun_ty(ty, fun_ty(ty, bool_ty())));
  return Term::app(Term::app(eq, lhs), rhs);
}

Term mk_imp(const Term& p, const Term& q) {
  static const Term imp =
      Term::constant("==>", fun_ty(bool_ty(), fun_ty(bool_ty(), bool_ty())));
  return Term::app(Term::app(imp, p), q);
}

Term mk_forall(const Var& x, const Term& body) {
  Term all = Term::constant("!", fun_ty(fun_ty(x.ty, bool_ty()), bool_ty()));
  return Term::app(all, Term::abs(x, body));
}

namespace {

bool is_binop(const Term& t, const char* name) {
  return t.is_app() && t.fun().is_app() && t.fun().fun().is_const() &&
         t.fun().fun().const_name() == name;
}

}  // namespace

bool is_eq(const Term& t) { return is_binop(t, "="); }
bool is_imp(const Term& t) { return is_binop(t, "==>"); }

bool is_forall(const Term& t) {
  return t.is_app() && t.fun().is_const() && t.fun().const_name() == "!" &&
         t.arg().is_abs();
}

const Term& eq_lhs(const Term& t) { return t.fun().arg(); }
const Term& eq_rhs(const Term& t) { return t.arg(); }

// ---------------------------------------------------------------------------
// Hypothesis sets

std::vector<Term> canonical_hyps(std::vector<Term> hyps) {
  std::sort(hyps.begin(), hyps.end(), AlphaLess());
  hyps.erase(std::unique(hyps.begin(), hyps.end(), alpha_equal), hyps.end());
  return hyps;
}

std::vector<Term> hyp_union(const std::vector<Term>& a,
                            const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = alpha_compare(a[i], b[j]);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i++]);
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

std::vector<Term> hyp_remove(const std::vector<Term>& hyps, const Term& p) {
  std::vector<Term> out;
  out.reserve(hyps.size());
  for (const Term& h : hyps)
    if (!alpha_equal(h, p)) out.push_back(h);
  return out;
}

bool hyp_contains(const std::vector<Term>& hyps, const Term& p) {
  return std::binary_search(hyps.begin(), hyps.end(), p, AlphaLess());
}

// ---------------------------------------------------------------------------
// Kernel

Kernel::Kernel(KernelMode mode) {
  ctx_.mode = mode;
  ctx_.type_ops = {{"bool", 0}, {"ind", 0}, {"->", 2}};
  ctx_.constants.emplace(
      "=", fun_ty(alpha_ty(), fun_ty(alpha_ty(), bool_ty())));
  if (mode == KernelMode::kExtended) {
    ctx_.constants.emplace("==>",
                           fun_ty(bool_ty(), fun_ty(bool_ty(), bool_ty())));
    ctx_.constants.emplace("!",
                           fun_ty(fun_ty(alpha_ty(), bool_ty()), bool_ty()));
  }
}

const Type& Kernel::const_type(const std::string& name) const {
  auto it = ctx_.constants.find(name);
  if (it == ctx_.constants.end())
    fail(ErrorCode::kUndeclared, "constant " + name);
  return it->second;
}

Term Kernel::mk_const(const std::string& name, const Type& ty) const {
  std::map<std::string, Type> m;
  if (!type_match(const_type(name), ty, m))
    fail(ErrorCode::kTypeMismatch,
         "constant " + name + " cannot have type " + to_string(ty));
  check_type(ty);
  return Term::constant(name, ty);
}

const ConstDefinition* Kernel::find_definition(const std::string& name) const {
  for (const auto& d : ctx_.definitions)
    if (auto* c = std::get_if<ConstDefinition>(&d); c && c->name == name)
      return c;
  return nullptr;
}

const TypeDefinition* Kernel::find_type_definition(
    const std::string& name) const {
  for (const auto& d : ctx_.definitions) {
    if (auto* t = std::get_if<TypeDefinition>(&d)) {
      if (t->name == name || t->abs == name || t->rep == name) return t;
    }
  }
  return nullptr;
}

void Kernel::check_type(const Type& ty) const {
  if (ty.is_var()) return;
  auto it = ctx_.type_ops.find(ty.name());
  if (it == ctx_.type_ops.end())
    fail(ErrorCode::kUndeclared, "type operator " + ty.name());
  if (it->second != ty.args().size())
    fail(ErrorCode::kTypeMismatch, "type operator " + ty.name() +
                                       " expects " +
                                       std::to_string(it->second) + " args");
  for (const Type& a : ty.args()) check_type(a);
}

void Kernel::check_term(const Term& t) const {
  std::unordered_set<const void*> seen;
  std::vector<Term> todo{t};
  while (!todo.empty()) {
    Term cur = todo.back();
    todo.pop_back();
    if (!seen.insert(cur.id()).second) continue;
    switch (cur.kind()) {
      case Term::Kind::kVar:
        check_type(cur.as_var().ty);
        break;
      case Term::Kind::kConst: {
        std::map<std::string, Type> m;
        if (!type_match(const_type(cur.const_name()), cur.const_type(), m))
          fail(ErrorCode::kTypeMismatch,
               "constant " + cur.const_name() + " at type " +
                   to_string(cur.const_type()));
        check_type(cur.const_type());
        break;
      }
      case Term::Kind::kApp:
        cur.type_of();
        todo.push_back(cur.fun());
        todo.push_back(cur.arg());
        break;
      case Term::Kind::kAbs:
        check_type(cur.as_var().ty);
        todo.push_back(cur.body());
        break;
    }
  }
}

Theorem Kernel::make(Rule rule, std::vector<StepTrace> premises,
                     std::vector<Term> hyps, Term concl,
                     std::vector<Term> terms,
                     const std::function<void(StepNode&)>& fill) const {
  uint64_t count = 1;
  for (const auto& p : premises) {
    uint64_t c = p->step_count();
    count = (c > std::numeric_limits<uint64_t>::max() - count)
                ? std::numeric_limits<uint64_t>::max()
                : count + c;
  }
  auto node = std::shared_ptr<StepNode>(
      new StepNode(rule, std::move(premises), std::move(hyps),
                   std::move(concl)));
  node->terms_ = std::move(terms);
  node->step_count_ = count;
  if (fill) fill(*node);
  return Theorem(std::move(node));
}

void Kernel::require_extended(std::string_view rule) const {
  if (ctx_.mode != KernelMode::kExtended)
    fail(ErrorCode::kWrongMode,
         std::string(rule) + " is only available in the extended kernel");
}

Theorem Kernel::refl(const Term& t) const {
  check_term(t);
  return make(Rule::kRefl, {}, {}, mk_eq(t, t), {t});
}

Theorem Kernel::trans(const Theorem& ab, const Theorem& bc) const {
  if (!is_eq(ab.concl()) || !is_eq(bc.concl()))
    fail(ErrorCode::kNotAnEquation, "TRANS");
  if (!alpha_equal(eq_rhs(ab.concl()), eq_lhs(bc.concl())))
    fail(ErrorCode::kMidpointMismatch,
         to_string(eq_rhs(ab.concl())) + " vs " +
             to_string(eq_lhs(bc.concl())));
  return make(Rule::kTrans, {ab.trace(), bc.trace()},
              hyp_union(ab.hyps(), bc.hyps()),
              mk_eq(eq_lhs(ab.concl()), eq_rhs(bc.concl())));
}

Theorem Kernel::mk_comb(const Theorem& fg, const Theorem& xy) const {
  if (!is_eq(fg.concl()) || !is_eq(xy.concl()))
    fail(ErrorCode::kNotAnEquation, "MK_COMB");
  const Term& f = eq_lhs(fg.concl());
  const Term& g = eq_rhs(fg.concl());
  const Term& x = eq_lhs(xy.concl());
  const Term& y = eq_rhs(xy.concl());
  Type fty = f.type_of();
  if (!is_fun_ty(fty) || fun_domain(fty) != x.type_of())
    fail(ErrorCode::kTypeMismatch,
         "cannot apply " + to_string(f) + " to " + to_string(x));
  return make(Rule::kMkComb, {fg.trace(), xy.trace()},
              hyp_union(fg.hyps(), xy.hyps()),
              mk_eq(Term::app(f, x), Term::app(g, y)));
}

Theorem Kernel::abs(const Var& x, const Theorem& st) const {
  if (!is_eq(st.concl())) fail(ErrorCode::kNotAnEquation, "ABS");
  check_type(x.ty);
  for (const Term& h : st.hyps())
    if (var_free_in(x, h))
      fail(ErrorCode::kVarFreeInHyps, x.name + " free in " + to_string(h));
  return make(Rule::kAbs, {st.trace()}, st.hyps(),
              mk_eq(Term::abs(x, eq_lhs(st.concl())),
                    Term::abs(x, eq_rhs(st.concl()))),
              {Term::var(x)});
}

Theorem Kernel::beta(const Term& t) const {
  Term contracted = beta_contract(t);
  check_term(t);
  return make(Rule::kBeta, {}, {}, mk_eq(t, contracted), {t});
}

Theorem Kernel::assume(const Term& p) const {
  if (p.type_of() != bool_ty())
    fail(ErrorCode::kNotBoolean, to_string(p));
  check_term(p);
  return make(Rule::kAssume, {}, {p}, p, {p});
}

Theorem Kernel::eq_mp(const Theorem& pq, const Theorem& p) const {
  if (!is_eq(pq.concl())) fail(ErrorCode::kNotAnEquation, "EQ_MP");
  if (!alpha_equal(eq_lhs(pq.concl()), p.concl()))
    fail(ErrorCode::kAntecedentMismatch,
         to_string(eq_lhs(pq.concl())) + " vs " + to_string(p.concl()));
  return make(Rule::kEqMp, {pq.trace(), p.trace()},
              hyp_union(pq.hyps(), p.hyps()), eq_rhs(pq.concl()));
}

Theorem Kernel::deduct_antisym(const Theorem& a, const Theorem& b) const {
  return make(Rule::kDeductAntisym, {a.trace(), b.trace()},
              hyp_union(hyp_remove(a.hyps(), b.concl()),
                        hyp_remove(b.hyps(), a.concl())),
              mk_eq(a.concl(), b.concl()));
}

Theorem Kernel::inst(const TermSubstitution& sigma, const Theorem& th) const {
  for (const auto& [v, t] : sigma.pairs()) check_term(t);
  std::vector<Term> hyps;
  hyps.reserve(th.hyps().size());
  for (const Term& h : th.hyps()) hyps.push_back(subst_term(sigma, h));
  return make(Rule::kInst, {th.trace()}, canonical_hyps(std::move(hyps)),
              subst_term(sigma, th.concl()), {},
              [&](StepNode& n) { n.term_subst_ = sigma; });
}

Theorem Kernel::inst_type(const TypeSubstitution& theta,
                          const Theorem& th) const {
  for (const auto& [a, ty] : theta.pairs()) check_type(ty);
  std::vector<Term> hyps;
  hyps.reserve(th.hyps().size());
  for (const Term& h : th.hyps()) hyps.push_back(subst_type(theta, h));
  return make(Rule::kInstType, {th.trace()}, canonical_hyps(std::move(hyps)),
              subst_type(theta, th.concl()), {},
              [&](StepNode& n) { n.type_subst_ = theta; });
}

Theorem Kernel::mp(const Theorem& ipq, const Theorem& ip) const {
  require_extended("MP");
  if (!is_imp(ipq.concl())) fail(ErrorCode::kNotAnImplication, "MP");
  if (!alpha_equal(eq_lhs(ipq.concl()), ip.concl()))
    fail(ErrorCode::kAntecedentMismatch,
         to_string(eq_lhs(ipq.concl())) + " vs " + to_string(ip.concl()));
  return make(Rule::kMp, {ipq.trace(), ip.trace()},
              hyp_union(ipq.hyps(), ip.hyps()), eq_rhs(ipq.concl()));
}

Theorem Kernel::disch(const Term& p, const Theorem& th) const {
  require_extended("DISCH");
  if (p.type_of() != bool_ty()) fail(ErrorCode::kNotBoolean, to_string(p));
  check_term(p);
  return make(Rule::kDisch, {th.trace()}, hyp_remove(th.hyps(), p),
              mk_imp(p, th.concl()), {p});
}

Theorem Kernel::gen(const Var& x, const Theorem& th) const {
  require_extended("GEN");
  check_type(x.ty);
  for (const Term& h : th.hyps())
    if (var_free_in(x, h))
      fail(ErrorCode::kVarFreeInHyps, x.name + " free in " + to_string(h));
  return make(Rule::kGen, {th.trace()}, th.hyps(), mk_forall(x, th.concl()),
              {Term::var(x)});
}

Theorem Kernel::spec(const Term& u, const Theorem& th) const {
  require_extended("SPEC");
  if (!is_forall(th.concl())) fail(ErrorCode::kNotAForall, to_string(th.concl()));
  const Term& lam = th.concl().arg();
  if (u.type_of() != lam.as_var().ty)
    fail(ErrorCode::kTypeMismatch, "SPEC with " + to_string(u) + " : " +
                                       to_string(u.type_of()));
  check_term(u);
  return make(Rule::kSpec, {th.trace()}, th.hyps(),
              subst_term(TermSubstitution({{lam.as_var(), u}}), lam.body()),
              {u});
}

Theorem Kernel::define_const(const std::string& name, const Term& t) {
  if (ctx_.constants.count(name)) fail(ErrorCode::kNameClash, name);
  check_term(t);
  if (!free_vars(t).empty())
    fail(ErrorCode::kNotClosed, "definition of " + name);
  Type ty = t.type_of();
  std::set<std::string> ty_vars = type_vars(ty);
  for (const std::string& a : type_vars(t))
    if (!ty_vars.count(a))
      fail(ErrorCode::kTypeVarEscape, a + " in definition of " + name);
  ctx_.constants.emplace(name, ty);
  Theorem th =
      make(Rule::kDefineConst, {}, {}, mk_eq(Term::constant(name, ty), t), {t},
           [&](StepNode& n) { n.names_ = {name}; });
  ctx_.definitions.emplace_back(ConstDefinition{name, t, th});
  return th;
}

Kernel::TypeDefResult Kernel::define_type_op(
    const std::string& name, const std::string& abs, const std::string& rep,
    const std::vector<std::string>& tyvars, const Theorem& witness) {
  if (!witness.hyps().empty())
    fail(ErrorCode::kNonEmptyHyps, "type definition witness for " + name);
  const Term& c = witness.concl();
  if (!c.is_app()) fail(ErrorCode::kSchemaMismatch, "witness must be P t");
  const Term& pred = c.fun();
  if (!free_vars(pred).empty())
    fail(ErrorCode::kNotClosed, "predicate of type definition " + name);
  std::set<std::string> declared(tyvars.begin(), tyvars.end());
  if (declared.size() != tyvars.size())
    fail(ErrorCode::kBadSubstitution, "repeated type variable in " + name);
  for (const std::string& a : type_vars(pred))
    if (!declared.count(a))
      fail(ErrorCode::kTypeVarEscape, a + " in type definition " + name);
  if (ctx_.type_ops.count(name)) fail(ErrorCode::kNameClash, name);
  if (ctx_.constants.count(abs)) fail(ErrorCode::kNameClash, abs);
  if (ctx_.constants.count(rep) || rep == abs)
    fail(ErrorCode::kNameClash, rep);

  Type rep_ty = c.arg().type_of();
  std::vector<Type> args;
  for (const std::string& a : tyvars) args.push_back(Type::var(a));
  Type new_ty = Type::app(name, args);
  ctx_.type_ops.emplace(name, tyvars.size());
  ctx_.constants.emplace(abs, fun_ty(rep_ty, new_ty));
  ctx_.constants.emplace(rep, fun_ty(new_ty, rep_ty));
  Term abs_c = Term::constant(abs, fun_ty(rep_ty, new_ty));
  Term rep_c = Term::constant(rep, fun_ty(new_ty, rep_ty));
  Term a = Term::var("a", new_ty);
  Term r = Term::var("r", rep_ty);

  std::vector<std::string> names{name, abs, rep};
  names.insert(names.end(), tyvars.begin(), tyvars.end());
  auto set_names = [&](StepNode& n) { n.names_ = names; };
  Theorem abs_rep =
      make(Rule::kTypeDefAbsRep, {witness.trace()}, {},
           mk_eq(Term::app(abs_c, Term::app(rep_c, a)), a), {}, set_names);
  Theorem rep_abs = make(
      Rule::kTypeDefRepAbs, {witness.trace()}, {},
      mk_eq(Term::app(pred, r),
            mk_eq(Term::app(rep_c, Term::app(abs_c, r)), r)),
      {}, set_names);
  ctx_.definitions.emplace_back(
      TypeDefinition{name, abs, rep, tyvars, witness, abs_rep, rep_abs});
  return {abs_rep, rep_abs};
}

Theorem Kernel::new_axiom(const Term& p) {
  if (p.type_of() != bool_ty()) fail(ErrorCode::kNotBoolean, to_string(p));
  check_term(p);
  Theorem th = make(Rule::kAxiom, {}, {}, p, {p});
  ctx_.axioms.push_back(th);
  return th;
}

}  // namespace holkit
