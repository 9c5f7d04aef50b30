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

#include "holkit/lp_translate.h"

#include <algorithm>
#include <functional>
#include <set>

namespace holkit {
namespace {

using T = LpTerm;

T lterm(const T& a) { return T::app(T::constant("term"), a); }
T lproof(const T& p) { return T::app(T::constant("proof"), p); }

// LP identifiers for one translation unit. Distinct HOL variables (name and
// type) and type variables get distinct identifiers that avoid signature
// names.
class Names {
 public:
  explicit Names(std::set<std::string> reserved) : used_(std::move(reserved)) {}

  const std::string& tyvar(const std::string& a) {
    auto it = tyvars_.find(a);
    if (it != tyvars_.end()) return it->second;
    std::string id = fresh(a);
    tyvar_of_.emplace(id, a);
    return tyvars_.emplace(a, id).first->second;
  }

  const std::string& var(const Var& v) {
    auto it = vars_.find(v);
    if (it != vars_.end()) return it->second;
    std::string id = fresh(v.name);
    var_of_.emplace(id, v);
    return vars_.emplace(v, id).first->second;
  }

  std::string hyp() { return fresh("h"); }

  const std::string* tyvar_of(const std::string& id) const {
    auto it = tyvar_of_.find(id);
    return it == tyvar_of_.end() ? nullptr : &it->second;
  }
  const Var* var_of(const std::string& id) const {
    auto it = var_of_.find(id);
    return it == var_of_.end() ? nullptr : &it->second;
  }

 private:
  std::string fresh(const std::string& base_name) {
    std::string base = is_plain_lp_ident(base_name) ? base_name : "v";
    std::string id = base;
    for (int n = 1; used_.count(id); ++n) id = base + "_" + std::to_string(n);
    used_.insert(id);
    return id;
  }

  std::set<std::string> used_;
  std::map<std::string, std::string> tyvars_;
  std::map<Var, std::string> vars_;
  std::map<std::string, std::string> tyvar_of_;
  std::map<std::string, Var> var_of_;
};

T type_to_lp(const Type& ty, Names* names) {
  if (ty.is_var()) return T::var(names ? names->tyvar(ty.name()) : ty.name());
  if (ty.name() == "bool" && ty.args().empty()) return T::constant("bool");
  if (ty.name() == "ind" && ty.args().empty()) return T::constant("ind");
  if (is_fun_ty(ty))
    return T::app(T::constant("arr"), {type_to_lp(ty.args()[0], names),
                                       type_to_lp(ty.args()[1], names)});
  fail(ErrorCode::kUnknownTypeOp, ty.name());
}

void free_lp_vars(const T& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t.kind()) {
    case T::Kind::kVar:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end())
        out.insert(t.name());
      return;
    case T::Kind::kApp:
      free_lp_vars(t.fun(), bound, out);
      free_lp_vars(t.arg(), bound, out);
      return;
    case T::Kind::kLam:
    case T::Kind::kPi:
      free_lp_vars(t.domain(), bound, out);
      bound.push_back(t.name());
      free_lp_vars(t.body(), bound, out);
      bound.pop_back();
      return;
    default:
      return;
  }
}

void collect_consts(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::kConst:
      out.insert(t.const_name());
      break;
    case Term::Kind::kApp:
      collect_consts(t.fun(), out);
      collect_consts(t.arg(), out);
      break;
    case Term::Kind::kAbs:
      collect_consts(t.body(), out);
      break;
    default:
      break;
  }
}

bool mentions_any(const Type& ty, const TypeSubstitution& theta) {
  if (ty.is_var()) return theta.find(ty.name()) != nullptr;
  for (const Type& a : ty.args())
    if (mentions_any(a, theta)) return true;
  return false;
}

using Env = std::map<Term, std::string, AlphaLess>;

}  // namespace

LpTerm translate_type(const Type& ty) { return type_to_lp(ty, nullptr); }

struct LpTranslator::Impl {
  const Kernel* kernel;
  struct Registered {
    Type generic;
    std::vector<std::string> tyvars;
  };
  std::map<std::string, Registered> consts;
  std::set<std::string> reserved;
  struct Axiom {
    std::string name;
    Term concl;
  };
  std::vector<Axiom> axioms;

  bool primitive(const std::string& name) const {
    if (name == "=") return true;
    return kernel->mode() == KernelMode::kExtended &&
           (name == kImpName || name == kForallName);
  }

  static constexpr const char* kImpName = "==>";
  static constexpr const char* kForallName = "!";

  T term(const Term& t, Names* names) const {
    switch (t.kind()) {
      case Term::Kind::kVar:
        return T::var(names ? names->var(t.as_var()) : t.as_var().name);
      case Term::Kind::kConst:
        return constant(t, names);
      case Term::Kind::kApp:
        return T::app(term(t.fun(), names), term(t.arg(), names));
      case Term::Kind::kAbs:
        return T::lam(names ? names->var(t.as_var()) : t.as_var().name,
                      lterm(type_to_lp(t.as_var().ty, names)),
                      term(t.body(), names));
    }
    fail(ErrorCode::kUnregisteredConstant, to_string(t));
  }

  T constant(const Term& c, Names* names) const {
    const std::string& n = c.const_name();
    const Type& ty = c.const_type();
    if (primitive(n)) {
      if (n == "=")
        return T::app(T::constant("eq"), type_to_lp(fun_domain(ty), names));
      if (n == kImpName) return T::constant("imp");
      return T::app(T::constant("forall"),
                    type_to_lp(fun_domain(fun_domain(ty)), names));
    }
    auto it = consts.find(n);
    if (it == consts.end()) fail(ErrorCode::kUnregisteredConstant, n);
    std::map<std::string, Type> m;
    if (!type_match(it->second.generic, ty, m))
      fail(ErrorCode::kTypeMismatch, n + " at " + to_string(ty));
    std::vector<T> args;
    for (const std::string& a : it->second.tyvars)
      args.push_back(type_to_lp(m.at(a), names));
    return T::app(T::constant(n), args);
  }

  const std::string& axiom(const Term& p) {
    for (const Axiom& a : axioms)
      if (alpha_equal(a.concl, p)) return a.name;
    axioms.push_back(Axiom{"axiom_" + std::to_string(axioms.size() + 1), p});
    return axioms.back().name;
  }

  // Binders of an axiom or theorem statement over `p`: sorted type
  // variables, then sorted free variables.
  static std::pair<std::vector<std::string>, std::vector<Var>> statement_vars(
      const Term& p) {
    std::set<std::string> tv = type_vars(p);
    VarSet fv = free_vars(p);
    return {std::vector<std::string>(tv.begin(), tv.end()),
            std::vector<Var>(fv.begin(), fv.end())};
  }

  LpEntry axiom_declaration(const Axiom& a) const {
    Names names(reserved);
    auto [tvs, fvs] = statement_vars(a.concl);
    T ty = lproof(term(a.concl, &names));
    for (size_t i = fvs.size(); i-- > 0;)
      ty = T::pi(names.var(fvs[i]), lterm(type_to_lp(fvs[i].ty, &names)), ty);
    for (size_t i = tvs.size(); i-- > 0;)
      ty = T::pi(names.tyvar(tvs[i]), T::constant("type"), ty);
    return LpEntry::declaration(a.name, ty);
  }

  // -- Proofs.

  T eq_type(const Term& eqn, Names& names) const {
    return type_to_lp(eq_lhs(eqn).type_of(), &names);
  }

  T proof(const StepNode* n, const Env& env, Names& names) {
    auto tm = [&](const Term& t) { return term(t, &names); };
    auto ty = [&](const Type& a) { return type_to_lp(a, &names); };
    const auto& ps = n->premises();
    auto sub = [&](size_t i) { return proof(ps[i].get(), env, names); };
    switch (n->rule()) {
      case Rule::kRefl: {
        const Term& t = n->terms()[0];
        return T::app(T::constant("REFL"), {ty(t.type_of()), tm(t)});
      }
      case Rule::kBeta: {
        const Term& c = eq_rhs(n->concl());
        return T::app(T::constant("REFL"), {ty(c.type_of()), tm(c)});
      }
      case Rule::kDefineConst:
        return T::app(T::constant("REFL"),
                      {eq_type(n->concl(), names), tm(eq_lhs(n->concl()))});
      case Rule::kAssume: {
        auto it = env.find(n->terms()[0]);
        if (it == env.end())
          fail(ErrorCode::kUnsupportedTraceNode,
               "unbound hypothesis " + to_string(n->terms()[0]));
        return T::var(it->second);
      }
      case Rule::kTrans: {
        const Term& ab = ps[0]->concl();
        const Term& bc = ps[1]->concl();
        return T::app(T::constant("TRANS"),
                      {eq_type(ab, names), tm(eq_lhs(ab)), tm(eq_rhs(ab)),
                       tm(eq_rhs(bc)), sub(0), sub(1)});
      }
      case Rule::kMkComb: {
        const Term& fg = ps[0]->concl();
        const Term& xy = ps[1]->concl();
        Type fty = eq_lhs(fg).type_of();
        return T::app(
            T::constant("MK_COMB"),
            {ty(fun_domain(fty)), ty(fun_codomain(fty)), tm(eq_lhs(fg)),
             tm(eq_rhs(fg)), tm(eq_lhs(xy)), tm(eq_rhs(xy)), sub(0), sub(1)});
      }
      case Rule::kAbs: {
        const Var& x = n->terms()[0].as_var();
        const Term& st = ps[0]->concl();
        std::string xi = names.var(x);
        T dom = lterm(ty(x.ty));
        return T::app(T::constant("ABS"), {ty(x.ty), ty(eq_lhs(st).type_of()),
                                           T::lam(xi, dom, tm(eq_lhs(st))),
                                           T::lam(xi, dom, tm(eq_rhs(st))),
                                           T::lam(xi, dom, sub(0))});
      }
      case Rule::kEqMp: {
        const Term& pq = ps[0]->concl();
        return T::app(T::constant("EQ_MP"),
                      {tm(eq_lhs(pq)), tm(eq_rhs(pq)), sub(0), sub(1)});
      }
      case Rule::kDeductAntisym: {
        const Term& p = ps[0]->concl();
        const Term& q = ps[1]->concl();
        std::string ha = names.hyp(), hb = names.hyp();
        Env ea = env, eb = env;
        ea.insert_or_assign(q, ha);
        eb.insert_or_assign(p, hb);
        return T::app(
            T::constant("DEDUCT_ANTISYM"),
            {tm(p), tm(q),
             T::lam(ha, lproof(tm(q)), proof(ps[0].get(), ea, names)),
             T::lam(hb, lproof(tm(p)), proof(ps[1].get(), eb, names))});
      }
      case Rule::kInst:
        return inst(n, env, names);
      case Rule::kInstType:
        return inst_type(n, env, names);
      case Rule::kMp: {
        const Term& pq = ps[0]->concl();
        return T::app(T::constant("MP"),
                      {tm(pq.fun().arg()), tm(pq.arg()), sub(0), sub(1)});
      }
      case Rule::kDisch: {
        const Term& p = n->terms()[0];
        std::string h = names.hyp();
        Env e = env;
        e.insert_or_assign(p, h);
        return T::app(T::constant("DISCH"),
                      {tm(p), tm(ps[0]->concl()),
                       T::lam(h, lproof(tm(p)), proof(ps[0].get(), e, names))});
      }
      case Rule::kGen: {
        const Var& x = n->terms()[0].as_var();
        std::string xi = names.var(x);
        T dom = lterm(ty(x.ty));
        return T::app(T::constant("GEN"),
                      {ty(x.ty), T::lam(xi, dom, tm(ps[0]->concl())),
                       T::lam(xi, dom, sub(0))});
      }
      case Rule::kSpec: {
        const Term& pred = ps[0]->concl().arg();
        return T::app(T::constant("SPEC"),
                      {ty(fun_domain(pred.type_of())), tm(pred),
                       tm(n->terms()[0]), sub(0)});
      }
      case Rule::kAxiom: {
        const Term& p = n->concl();
        std::string name = axiom(p);
        auto [tvs, fvs] = statement_vars(p);
        std::vector<T> args;
        for (const std::string& a : tvs) args.push_back(T::var(names.tyvar(a)));
        for (const Var& v : fvs) args.push_back(T::var(names.var(v)));
        return T::app(T::constant(name), args);
      }
      case Rule::kTypeDefAbsRep:
      case Rule::kTypeDefRepAbs:
        fail(ErrorCode::kUnsupportedTraceNode,
             "type definition of " + n->names()[0]);
    }
    fail(ErrorCode::kUnsupportedTraceNode, std::string(rule_name(n->rule())));
  }

  // The premise with its hypotheses abstracted, applied to the hypotheses of
  // the conclusion they become.
  T wrap_hyps(const StepNode* premise, const std::vector<Term>& instances,
              const Env& env, Names& names,
              const std::function<T(const Env&)>& body_of,
              std::vector<std::pair<std::string, T>>& binders,
              std::vector<T>& args) {
    Env local;
    for (size_t i = 0; i < premise->hyps().size(); ++i) {
      std::string h = names.hyp();
      local.insert_or_assign(premise->hyps()[i], h);
      binders.emplace_back(h, lproof(term(premise->hyps()[i], &names)));
      auto it = env.find(instances[i]);
      if (it == env.end())
        fail(ErrorCode::kUnsupportedTraceNode,
             "lost hypothesis " + to_string(instances[i]));
      args.push_back(T::var(it->second));
    }
    T body = body_of(local);
    for (size_t i = binders.size(); i-- > 0;)
      body = T::lam(binders[i].first, binders[i].second, body);
    return T::app(body, args);
  }

  T inst(const StepNode* n, const Env& env, Names& names) {
    const StepNode* p = n->premises()[0].get();
    const TermSubstitution& sigma = n->term_subst();
    std::vector<std::pair<std::string, T>> binders;
    std::vector<T> args;
    for (const auto& [x, u] : sigma.pairs()) {
      binders.emplace_back(names.var(x), lterm(type_to_lp(x.ty, &names)));
      args.push_back(term(u, &names));
    }
    std::vector<Term> instances;
    for (const Term& h : p->hyps()) instances.push_back(subst_term(sigma, h));
    return wrap_hyps(
        p, instances, env, names,
        [&](const Env& local) { return proof(p, local, names); }, binders,
        args);
  }

  T inst_type(const StepNode* n, const Env& env, Names& names) {
    const StepNode* p = n->premises()[0].get();
    const TypeSubstitution& theta = n->type_subst();
    std::vector<std::pair<std::string, T>> binders;
    std::vector<T> args;
    for (const auto& [a, ty] : theta.pairs()) {
      binders.emplace_back(names.tyvar(a), T::constant("type"));
      args.push_back(type_to_lp(ty, &names));
    }
    std::vector<Term> instances;
    for (const Term& h : p->hyps()) instances.push_back(subst_type(theta, h));

    // Translate the premise first to find the variables it mentions whose
    // types change.
    Env local;
    std::vector<std::pair<std::string, T>> hyp_binders;
    for (const Term& h : p->hyps()) {
      std::string id = names.hyp();
      local.insert_or_assign(h, id);
      hyp_binders.emplace_back(id, lproof(term(h, &names)));
    }
    T body = proof(p, local, names);
    std::set<std::string> free;
    std::vector<std::string> bound;
    free_lp_vars(body, bound, free);
    for (const auto& hb : hyp_binders) free_lp_vars(hb.second, bound, free);
    std::vector<Var> moved;
    for (const std::string& id : free)
      if (const Var* v = names.var_of(id))
        if (mentions_any(v->ty, theta)) moved.push_back(*v);
    std::sort(moved.begin(), moved.end());
    for (const Var& v : moved) {
      binders.emplace_back(names.var(v), lterm(type_to_lp(v.ty, &names)));
      args.push_back(T::var(names.var(Var{v.name, subst_type(theta, v.ty)})));
    }
    for (size_t i = 0; i < hyp_binders.size(); ++i) {
      binders.push_back(hyp_binders[i]);
      auto it = env.find(instances[i]);
      if (it == env.end())
        fail(ErrorCode::kUnsupportedTraceNode,
             "lost hypothesis " + to_string(instances[i]));
      args.push_back(T::var(it->second));
    }
    for (size_t i = binders.size(); i-- > 0;)
      body = T::lam(binders[i].first, binders[i].second, body);
    return T::app(body, args);
  }
};

LpTranslator::LpTranslator(const Kernel& kernel)
    : impl_(std::make_unique<Impl>()) {
  impl_->kernel = &kernel;
  for (const LpEntry& e : base_signature(kernel.mode()).entries)
    if (!e.name.empty()) impl_->reserved.insert(e.name);
  for (const char* kw :
       {"symbol", "opaque", "rule", "require", "TYPE", "KIND", "_"})
    impl_->reserved.insert(kw);
}

LpTranslator::~LpTranslator() = default;

bool LpTranslator::registered(const std::string& name) const {
  return impl_->consts.count(name) > 0;
}

LpEntry LpTranslator::translate_definition(const ConstDefinition& def) {
  Names names(impl_->reserved);
  Type generic = def.rhs.type_of();
  std::vector<std::string> tyvars = type_vars_ordered(generic);
  T ty = lterm(type_to_lp(generic, &names));
  T value = impl_->term(def.rhs, &names);
  for (size_t i = tyvars.size(); i-- > 0;) {
    const std::string& id = names.tyvar(tyvars[i]);
    ty = T::pi(id, T::constant("type"), ty);
    value = T::lam(id, T::constant("type"), value);
  }
  impl_->consts.insert_or_assign(def.name, Impl::Registered{generic, tyvars});
  impl_->reserved.insert(def.name);
  return LpEntry::definition(def.name, ty, value);
}

LpTerm LpTranslator::translate_term(const Term& t) const {
  return impl_->term(t, nullptr);
}

LpTranslator::TheoremTranslation LpTranslator::translate_theorem(
    const Theorem& th) {
  Names names(impl_->reserved);
  Env env;
  std::vector<std::pair<std::string, T>> hyps;
  for (const Term& h : th.hyps()) {
    std::string id = names.hyp();
    env.insert_or_assign(h, id);
    hyps.emplace_back(id, lproof(impl_->term(h, &names)));
  }
  T proof = impl_->proof(th.trace().get(), env, names);
  T type = lproof(impl_->term(th.concl(), &names));
  for (size_t i = hyps.size(); i-- > 0;) {
    type = T::arrow(hyps[i].second, type);
    proof = T::lam(hyps[i].first, hyps[i].second, proof);
  }

  // Bind what is still free: type variables, then term variables.
  std::set<std::string> free;
  std::vector<std::string> bound;
  free_lp_vars(proof, bound, free);
  free_lp_vars(type, bound, free);
  std::vector<Var> vars;
  std::set<std::string> tyvars;
  for (const std::string& id : free) {
    if (const Var* v = names.var_of(id)) {
      vars.push_back(*v);
      for (const std::string& a : type_vars(v->ty)) tyvars.insert(a);
    } else if (const std::string* a = names.tyvar_of(id)) {
      tyvars.insert(*a);
    } else {
      fail(ErrorCode::kUnsupportedTraceNode, "unbound name " + id);
    }
  }
  std::sort(vars.begin(), vars.end());
  for (size_t i = vars.size(); i-- > 0;) {
    T dom = lterm(type_to_lp(vars[i].ty, &names));
    const std::string& id = names.var(vars[i]);
    type = T::pi(id, dom, type);
    proof = T::lam(id, dom, proof);
  }
  for (auto it = tyvars.rbegin(); it != tyvars.rend(); ++it) {
    const std::string& id = names.tyvar(*it);
    type = T::pi(id, T::constant("type"), type);
    proof = T::lam(id, T::constant("type"), proof);
  }
  return {proof, type};
}

std::vector<LpEntry> LpTranslator::axiom_declarations() const {
  std::vector<LpEntry> out;
  for (const Impl::Axiom& a : impl_->axioms)
    out.push_back(impl_->axiom_declaration(a));
  return out;
}

LpFile translate_theorems(
    const Kernel& kernel,
    const std::vector<std::pair<std::string, Theorem>>& theorems) {
  // Constants used anywhere in the traces, closed under definitions.
  std::set<std::string> used;
  std::set<const StepNode*> seen;
  std::vector<const StepNode*> work;
  for (const auto& [name, th] : theorems) work.push_back(th.trace().get());
  while (!work.empty()) {
    const StepNode* n = work.back();
    work.pop_back();
    if (!seen.insert(n).second) continue;
    collect_consts(n->concl(), used);
    for (const Term& h : n->hyps()) collect_consts(h, used);
    for (const Term& t : n->terms()) collect_consts(t, used);
    for (const auto& [v, t] : n->term_subst().pairs()) collect_consts(t, used);
    for (const auto& p : n->premises()) work.push_back(p.get());
  }
  const auto& defs = kernel.context().definitions;
  for (size_t i = defs.size(); i-- > 0;)
    if (const auto* cd = std::get_if<ConstDefinition>(&defs[i]))
      if (used.count(cd->name)) collect_consts(cd->rhs, used);

  LpFile file;
  file.header = {"generated by holkit from a proof trace of the " +
                 std::string(mode_name(kernel.mode())) + " kernel"};
  file.entries.push_back(
      LpEntry::require(std::string(base_module(kernel.mode()))));
  LpTranslator tr(kernel);
  for (const Definition& d : defs)
    if (const auto* cd = std::get_if<ConstDefinition>(&d))
      if (used.count(cd->name))
        file.entries.push_back(tr.translate_definition(*cd));
  std::vector<LpEntry> asserts;
  for (const auto& [name, th] : theorems) {
    LpTranslator::TheoremTranslation t = tr.translate_theorem(th);
    asserts.push_back(LpEntry::assertion(name, t.type, t.proof));
  }
  for (LpEntry& e : tr.axiom_declarations()) file.entries.push_back(e);
  for (LpEntry& e : asserts) file.entries.push_back(std::move(e));
  return file;
}

}  // namespace holkit
