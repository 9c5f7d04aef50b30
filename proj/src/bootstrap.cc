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

#include "holkit/bootstrap.h"

#include <algorithm>

namespace holkit {

namespace {

Type bool_fn() { return fun_ty(bool_ty(), bool_ty()); }
Type bool_op() { return fun_ty(bool_ty(), bool_fn()); }

Term binop(const char* name, const Term& a, const Term& b) {
  return Term::app(Term::app(Term::constant(name, bool_op()), a), b);
}

bool is_binop(const Term& t, std::string_view name) {
  return t.is_app() && t.fun().is_app() && t.fun().fun().is_const() &&
         t.fun().fun().const_name() == name;
}

bool is_binder(const Term& t, std::string_view name) {
  return t.is_app() && t.fun().is_const() && t.fun().const_name() == name &&
         t.arg().is_abs();
}

void add_vars(VarSet& avoid, const Term& t) {
  VarSet fv = free_vars(t);
  avoid.insert(fv.begin(), fv.end());
}

void add_vars(VarSet& avoid, const Theorem& th) {
  add_vars(avoid, th.concl());
  for (const Term& h : th.hyps()) add_vars(avoid, h);
}

[[noreturn]] void schema(std::string_view rule, const std::string& detail) {
  fail(ErrorCode::kSchemaMismatch, std::string(rule) + ": " + detail);
}

}  // namespace

Term mk_truth() { return Term::constant(kTrue, bool_ty()); }
Term mk_false() { return Term::constant(kFalse, bool_ty()); }
Term mk_conj(const Term& p, const Term& q) { return binop(kAnd, p, q); }
Term mk_disj(const Term& p, const Term& q) { return binop(kOr, p, q); }
Term mk_neg(const Term& p) {
  return Term::app(Term::constant(kNot, bool_fn()), p);
}
Term mk_exists(const Var& x, const Term& body) {
  Term ex = Term::constant(kExists, fun_ty(fun_ty(x.ty, bool_ty()), bool_ty()));
  return Term::app(ex, Term::abs(x, body));
}
Term mk_iff(const Term& p, const Term& q) { return mk_eq(p, q); }

bool is_conj(const Term& t) { return is_binop(t, kAnd); }
bool is_disj(const Term& t) { return is_binop(t, kOr); }
bool is_neg(const Term& t) {
  return t.is_app() && t.fun().is_const() && t.fun().const_name() == kNot;
}
bool is_exists(const Term& t) { return is_binder(t, kExists); }

bool ConnectiveTable::defines(std::string_view name) const {
  return std::any_of(defs.begin(), defs.end(),
                     [&](const auto& d) { return d.first == name; });
}

const Theorem& ConnectiveTable::def(std::string_view name) const {
  for (const auto& [n, th] : defs)
    if (n == name) return th;
  fail(ErrorCode::kUndeclared, "connective " + std::string(name));
}

ConnectiveTable install_connectives(Kernel& kernel) {
  ConnectiveTable table{kernel.mode(), {}};
  auto define = [&](const char* name, const Term& rhs) {
    table.defs.emplace_back(name, kernel.define_const(name, rhs));
  };
  Var p{"p", bool_ty()}, q{"q", bool_ty()}, r{"r", bool_ty()};
  Term pt = Term::var(p), qt = Term::var(q), rt = Term::var(r);
  Type a = Type::var("A");
  Var P{"P", fun_ty(a, bool_ty())};
  Var x{"x", a};
  Term T = mk_truth();

  Term exists_rhs = Term::abs(
      P, mk_forall(q, mk_imp(mk_forall(x, mk_imp(Term::app(Term::var(P),
                                                           Term::var(x)),
                                                 qt)),
                             qt)));
  Term or_rhs = Term::abs(
      p, Term::abs(q, mk_forall(r, mk_imp(mk_imp(pt, rt),
                                          mk_imp(mk_imp(qt, rt), rt)))));
  Term false_rhs = mk_forall(p, pt);
  Term not_rhs = Term::abs(p, mk_imp(pt, mk_false()));

  if (kernel.mode() == KernelMode::kMinimal) {
    Term id = Term::abs(p, pt);
    define(kTrue, mk_eq(id, id));
    Var f{"f", bool_op()};
    Term ft = Term::var(f);
    define(kAnd,
           Term::abs(p, Term::abs(q, mk_eq(Term::abs(f, Term::app(
                                                            Term::app(ft, pt),
                                                            qt)),
                                           Term::abs(f, Term::app(
                                                            Term::app(ft, T),
                                                            T))))));
    define(kImp, Term::abs(p, Term::abs(q, mk_eq(mk_conj(pt, qt), pt))));
    define(kForall, Term::abs(P, mk_eq(Term::var(P), Term::abs(x, T))));
    define(kExists, exists_rhs);
    define(kOr, or_rhs);
    define(kFalse, false_rhs);
    define(kNot, not_rhs);
  } else {
    Var xb{"x", bool_ty()};
    define(kTrue, mk_forall(xb, mk_imp(Term::var(xb), Term::var(xb))));
    define(kFalse, false_rhs);
    define(kAnd, Term::abs(p, Term::abs(q, mk_forall(r, mk_imp(mk_imp(
                                                                   pt,
                                                                   mk_imp(qt,
                                                                          rt)),
                                                               rt)))));
    define(kOr, or_rhs);
    define(kExists, exists_rhs);
    define(kNot, not_rhs);
  }
  return table;
}

Term extensionality_statement() {
  Type a = Type::var("A"), b = Type::var("B");
  Var f{"f", fun_ty(a, b)};
  Var x{"x", a};
  return mk_eq(Term::abs(x, Term::app(Term::var(f), Term::var(x))),
               Term::var(f));
}

Theorem install_extensionality(Kernel& kernel) {
  return kernel.new_axiom(extensionality_statement());
}

// ---------------------------------------------------------------------------
// Equality reasoning

Logic::Logic(const Kernel& kernel, ConnectiveTable table)
    : k_(&kernel), table_(std::move(table)) {}

Theorem Logic::sym(const Theorem& th) const {
  if (!is_eq(th.concl())) fail(ErrorCode::kNotAnEquation, "SYM");
  const Term& l = eq_lhs(th.concl());
  Term eq = th.concl().fun().fun();
  Theorem lth = k_->refl(l);
  return k_->eq_mp(k_->mk_comb(ap_term(eq, th), lth), lth);
}

Theorem Logic::ap_term(const Term& f, const Theorem& th) const {
  return k_->mk_comb(k_->refl(f), th);
}

Theorem Logic::ap_thm(const Theorem& th, const Term& x) const {
  return k_->mk_comb(th, k_->refl(x));
}

Theorem Logic::unfold(std::string_view name,
                      const std::vector<Term>& args) const {
  Theorem th = table_.def(name);
  if (!args.empty()) {
    Type generic = k_->const_type(std::string(name));
    std::map<std::string, Type> m;
    Type ty = generic;
    for (const Term& a : args) {
      if (!is_fun_ty(ty) || !type_match(fun_domain(ty), a.type_of(), m))
        schema(name, "cannot apply to " + to_string(a));
      ty = fun_codomain(ty);
    }
    std::vector<std::pair<std::string, Type>> pairs;
    for (auto& [v, t] : m)
      if (t != Type::var(v)) pairs.emplace_back(v, t);
    if (!pairs.empty()) th = k_->inst_type(TypeSubstitution(pairs), th);
  }
  for (const Term& a : args) {
    Theorem app = ap_thm(th, a);
    th = k_->trans(app, k_->beta(eq_rhs(app.concl())));
  }
  return th;
}

Theorem Logic::prove_hyp(const Theorem& ath, const Theorem& bth) const {
  if (!hyp_contains(bth.hyps(), ath.concl())) return bth;
  return k_->eq_mp(k_->deduct_antisym(ath, bth), ath);
}

// Contracts at most `fuel` redexes along the head spine of `t`. Returns
// nothing when `t` is left unchanged.
std::optional<Theorem> Logic::head_beta(const Term& t, int& fuel) const {
  if (!t.is_app() || fuel <= 0) return std::nullopt;
  std::optional<Theorem> fth = head_beta(t.fun(), fuel);
  std::optional<Theorem> th;
  Term f = t.fun();
  if (fth) {
    th = ap_thm(*fth, t.arg());
    f = eq_rhs(fth->concl());
  }
  if (!f.is_abs() || fuel <= 0) return th;
  --fuel;
  Theorem b = k_->beta(Term::app(f, t.arg()));
  Theorem step = th ? k_->trans(*th, b) : b;
  std::optional<Theorem> rest = head_beta(eq_rhs(b.concl()), fuel);
  return rest ? k_->trans(step, *rest) : step;
}

// From |- L = R, contracts head redexes on both sides.
Theorem Logic::beta_sides(const Theorem& th, int fuel) const {
  int lf = fuel, rf = fuel;
  std::optional<Theorem> l = head_beta(eq_lhs(th.concl()), lf);
  std::optional<Theorem> r = head_beta(eq_rhs(th.concl()), rf);
  Theorem out = th;
  if (l) out = k_->trans(sym(*l), out);
  if (r) out = k_->trans(out, *r);
  return out;
}

// ---------------------------------------------------------------------------
// Truth

Theorem Logic::truth() const {
  const Theorem& def = table_.def(kTrue);
  if (mode() == KernelMode::kMinimal) {
    const Term& id = eq_lhs(eq_rhs(def.concl()));
    return k_->eq_mp(sym(def), k_->refl(id));
  }
  Term x = Term::var("x", bool_ty());
  Theorem all = k_->gen(x.as_var(), k_->disch(x, k_->assume(x)));
  return k_->eq_mp(sym(def), all);
}

Theorem Logic::eqt_intro(const Theorem& th) const {
  return k_->deduct_antisym(th, truth());
}

Theorem Logic::eqt_elim(const Theorem& th) const {
  if (!is_eq(th.concl()) || eq_rhs(th.concl()) != mk_truth())
    schema("EQT_ELIM", to_string(th.concl()));
  return k_->eq_mp(sym(th), truth());
}

// ---------------------------------------------------------------------------
// Conjunction

Theorem Logic::conj(const Theorem& a, const Theorem& b) const {
  const Term& p = a.concl();
  const Term& q = b.concl();
  VarSet avoid;
  add_vars(avoid, a);
  add_vars(avoid, b);
  Theorem body = [&] {
    if (mode() == KernelMode::kMinimal) {
      Var f = fresh_variant(avoid, Var{"f", bool_op()});
      Theorem m = k_->mk_comb(ap_term(Term::var(f), eqt_intro(a)),
                              eqt_intro(b));
      return k_->abs(f, m);
    }
    Var r = fresh_variant(avoid, Var{"r", bool_ty()});
    Term h = mk_imp(p, mk_imp(q, Term::var(r)));
    Theorem got = k_->mp(k_->mp(k_->assume(h), a), b);
    return k_->gen(r, k_->disch(h, got));
  }();
  return k_->eq_mp(sym(unfold(kAnd, {p, q})), body);
}


Theorem Logic::conjunct(const Theorem& th, bool left) const {
  const char* rule = left ? "CONJUNCT1" : "CONJUNCT2";
  if (!is_conj(th.concl())) schema(rule, to_string(th.concl()));
  const Term& p = th.concl().fun().arg();
  const Term& q = th.concl().arg();
  Theorem e = k_->eq_mp(unfold(kAnd, {p, q}), th);
  if (mode() == KernelMode::kExtended) {
    const Term& pick = left ? p : q;
    Theorem proj = k_->disch(p, k_->disch(q, k_->assume(pick)));
    return k_->mp(k_->spec(pick, e), proj);
  }
  // (\f. f p q) sel = (\f. f T T) sel, then three contractions per side.
  Var x{"x", bool_ty()}, y{"y", bool_ty()};
  Term sel = Term::abs(x, Term::abs(y, Term::var(left ? x : y)));
  return eqt_elim(beta_sides(ap_thm(e, sel), 3));
}

Theorem Logic::conjunct1(const Theorem& th) const {
  return conjunct(th, true);
}

Theorem Logic::conjunct2(const Theorem& th) const {
  return conjunct(th, false);
}

// ---------------------------------------------------------------------------
// Implication and universal quantification

Theorem Logic::mp(const Theorem& ipq, const Theorem& ip) const {
  if (mode() == KernelMode::kExtended) return k_->mp(ipq, ip);
  if (!is_imp(ipq.concl())) fail(ErrorCode::kNotAnImplication, "MP_D");
  const Term& p = ipq.concl().fun().arg();
  const Term& q = ipq.concl().arg();
  if (!alpha_equal(p, ip.concl()))
    fail(ErrorCode::kAntecedentMismatch,
         to_string(p) + " vs " + to_string(ip.concl()));
  Theorem e = k_->eq_mp(unfold(kImp, {p, q}), ipq);  // (p /\ q) = p
  return conjunct2(k_->eq_mp(sym(e), ip));
}

Theorem Logic::disch(const Term& p, const Theorem& th) const {
  if (mode() == KernelMode::kExtended) return k_->disch(p, th);
  if (p.type_of() != bool_ty()) fail(ErrorCode::kNotBoolean, to_string(p));
  Theorem both = conj(k_->assume(p), th);
  Theorem left = conjunct1(k_->assume(both.concl()));
  Theorem e = k_->deduct_antisym(both, left);  // (p /\ q) = p
  return k_->eq_mp(sym(unfold(kImp, {p, th.concl()})), e);
}

Theorem Logic::gen(const Var& x, const Theorem& th) const {
  if (mode() == KernelMode::kExtended) return k_->gen(x, th);
  Theorem e = k_->abs(x, eqt_intro(th));  // (\x. t) = (\x. T)
  Term lam = Term::abs(x, th.concl());
  return k_->eq_mp(sym(unfold(kForall, {lam})), e);
}

Theorem Logic::spec(const Term& u, const Theorem& th) const {
  if (mode() == KernelMode::kExtended) return k_->spec(u, th);
  if (!is_forall(th.concl()))
    fail(ErrorCode::kNotAForall, to_string(th.concl()));
  const Term& lam = th.concl().arg();
  if (u.type_of() != lam.as_var().ty)
    fail(ErrorCode::kTypeMismatch, "SPEC_D with " + to_string(u));
  Theorem e = k_->eq_mp(unfold(kForall, {lam}), th);  // lam = (\x. T)
  return eqt_elim(beta_sides(ap_thm(e, u), 1));
}

// ---------------------------------------------------------------------------
// Disjunction

Theorem Logic::disj1(const Theorem& th, const Term& q) const {
  const Term& p = th.concl();
  VarSet avoid;
  add_vars(avoid, th);
  add_vars(avoid, q);
  Var r = fresh_variant(avoid, Var{"r", bool_ty()});
  Term pr = mk_imp(p, Term::var(r));
  Term qr = mk_imp(q, Term::var(r));
  Theorem got = mp(k_->assume(pr), th);
  Theorem body = gen(r, disch(pr, disch(qr, got)));
  return k_->eq_mp(sym(unfold(kOr, {p, q})), body);
}

Theorem Logic::disj2(const Term& p, const Theorem& th) const {
  const Term& q = th.concl();
  VarSet avoid;
  add_vars(avoid, th);
  add_vars(avoid, p);
  Var r = fresh_variant(avoid, Var{"r", bool_ty()});
  Term pr = mk_imp(p, Term::var(r));
  Term qr = mk_imp(q, Term::var(r));
  Theorem got = mp(k_->assume(qr), th);
  Theorem body = gen(r, disch(pr, disch(qr, got)));
  return k_->eq_mp(sym(unfold(kOr, {p, q})), body);
}

Theorem Logic::disj_cases(const Theorem& th, const Theorem& th1,
                          const Theorem& th2) const {
  if (!is_disj(th.concl())) schema("DISJ_CASES", to_string(th.concl()));
  const Term& p = th.concl().fun().arg();
  const Term& q = th.concl().arg();
  const Term& r = th1.concl();
  if (!alpha_equal(r, th2.concl()))
    schema("DISJ_CASES", "conclusions differ: " + to_string(r) + " vs " +
                             to_string(th2.concl()));
  Theorem e = spec(r, k_->eq_mp(unfold(kOr, {p, q}), th));
  return mp(mp(e, disch(p, th1)), disch(q, th2));
}

// ---------------------------------------------------------------------------
// Existential quantification

Theorem Logic::exists_i(const Term& ex, const Term& u,
                        const Theorem& th) const {
  if (!is_exists(ex)) schema("EXISTS_I", to_string(ex));
  const Term& lam = ex.arg();
  if (u.type_of() != lam.as_var().ty)
    fail(ErrorCode::kTypeMismatch, "EXISTS_I witness " + to_string(u));
  Theorem b = k_->beta(Term::app(lam, u));
  if (!alpha_equal(eq_rhs(b.concl()), th.concl()))
    schema("EXISTS_I", to_string(th.concl()) + " is not an instance of " +
                           to_string(ex));
  Theorem holds = k_->eq_mp(sym(b), th);  // lam u
  VarSet avoid;
  add_vars(avoid, th);
  add_vars(avoid, ex);
  add_vars(avoid, u);
  Var q = fresh_variant(avoid, Var{"q", bool_ty()});
  avoid.insert(q);
  Var x = fresh_variant(avoid, Var{"x", lam.as_var().ty});
  Term all = mk_forall(x, mk_imp(Term::app(lam, Term::var(x)), Term::var(q)));
  Theorem got = mp(spec(u, k_->assume(all)), holds);
  Theorem body = gen(q, disch(all, got));
  return k_->eq_mp(sym(unfold(kExists, {lam})), body);
}

Theorem Logic::choose(const Var& v, const Theorem& ex,
                      const Theorem& th) const {
  if (!is_exists(ex.concl())) schema("CHOOSE", to_string(ex.concl()));
  const Term& lam = ex.concl().arg();
  if (v.ty != lam.as_var().ty)
    fail(ErrorCode::kTypeMismatch, "CHOOSE variable " + v.name);
  const Term& r = th.concl();
  if (var_free_in(v, r) || var_free_in(v, ex.concl()))
    schema("CHOOSE", v.name + " is free in the conclusion");
  Term redex = Term::app(lam, Term::var(v));
  Theorem inst = k_->eq_mp(k_->beta(redex), k_->assume(redex));  // P[v]
  Theorem all = gen(v, disch(redex, prove_hyp(inst, th)));
  Theorem e = k_->eq_mp(unfold(kExists, {lam}), ex);
  return mp(spec(r, e), all);
}

// ---------------------------------------------------------------------------
// Negation

Theorem Logic::not_intro(const Theorem& th) const {
  if (!is_imp(th.concl()) || th.concl().arg() != mk_false())
    schema("NOT_INTRO", to_string(th.concl()));
  const Term& p = th.concl().fun().arg();
  return k_->eq_mp(sym(unfold(kNot, {p})), th);
}

Theorem Logic::not_elim(const Theorem& th) const {
  if (!is_neg(th.concl())) schema("NOT_ELIM", to_string(th.concl()));
  return k_->eq_mp(unfold(kNot, {th.concl().arg()}), th);
}

// ---------------------------------------------------------------------------
// Dispatch

std::vector<std::string_view> derived_rule_names() {
  return {"TRUTH",   "EQT_INTRO", "EQT_ELIM",  "CONJ",       "CONJUNCT1",
          "CONJUNCT2", "MP_D",    "DISCH_D",   "GEN_D",      "SPEC_D",
          "DISJ1",   "DISJ2",     "DISJ_CASES", "EXISTS_I",  "CHOOSE",
          "NOT_INTRO", "NOT_ELIM", "SYM",      "AP_TERM",    "AP_THM"};
}

namespace {

class Args {
 public:
  Args(std::string_view rule, const std::vector<DeriveArg>& args)
      : rule_(rule), args_(args) {}

  void expect(size_t n) const {
    if (args_.size() != n)
      schema(rule_, "expected " + std::to_string(n) + " arguments, got " +
                        std::to_string(args_.size()));
  }
  const Theorem& thm(size_t i) const {
    if (auto* th = std::get_if<Theorem>(&args_[i])) return *th;
    schema(rule_, "argument " + std::to_string(i) + " must be a theorem");
  }
  Term term(size_t i) const {
    if (auto* t = std::get_if<Term>(&args_[i])) return *t;
    if (auto* v = std::get_if<Var>(&args_[i])) return Term::var(*v);
    schema(rule_, "argument " + std::to_string(i) + " must be a term");
  }
  Var var(size_t i) const {
    if (auto* v = std::get_if<Var>(&args_[i])) return *v;
    if (auto* t = std::get_if<Term>(&args_[i]); t && t->is_var())
      return t->as_var();
    schema(rule_, "argument " + std::to_string(i) + " must be a variable");
  }

 private:
  std::string_view rule_;
  const std::vector<DeriveArg>& args_;
};

}  // namespace

Theorem Logic::derive(std::string_view rule,
                      const std::vector<DeriveArg>& args) const {
  Args a(rule, args);
  if (rule == "TRUTH") return a.expect(0), truth();
  if (rule == "EQT_INTRO") return a.expect(1), eqt_intro(a.thm(0));
  if (rule == "EQT_ELIM") return a.expect(1), eqt_elim(a.thm(0));
  if (rule == "CONJ") return a.expect(2), conj(a.thm(0), a.thm(1));
  if (rule == "CONJUNCT1") return a.expect(1), conjunct1(a.thm(0));
  if (rule == "CONJUNCT2") return a.expect(1), conjunct2(a.thm(0));
  if (rule == "MP_D") return a.expect(2), mp(a.thm(0), a.thm(1));
  if (rule == "DISCH_D") return a.expect(2), disch(a.term(0), a.thm(1));
  if (rule == "GEN_D") return a.expect(2), gen(a.var(0), a.thm(1));
  if (rule == "SPEC_D") return a.expect(2), spec(a.term(0), a.thm(1));
  if (rule == "DISJ1") return a.expect(2), disj1(a.thm(0), a.term(1));
  if (rule == "DISJ2") return a.expect(2), disj2(a.term(0), a.thm(1));
  if (rule == "DISJ_CASES")
    return a.expect(3), disj_cases(a.thm(0), a.thm(1), a.thm(2));
  if (rule == "EXISTS_I")
    return a.expect(3), exists_i(a.term(0), a.term(1), a.thm(2));
  if (rule == "CHOOSE")
    return a.expect(3), choose(a.var(0), a.thm(1), a.thm(2));
  if (rule == "NOT_INTRO") return a.expect(1), not_intro(a.thm(0));
  if (rule == "NOT_ELIM") return a.expect(1), not_elim(a.thm(0));
  if (rule == "SYM") return a.expect(1), sym(a.thm(0));
  if (rule == "AP_TERM") return a.expect(2), ap_term(a.term(0), a.thm(1));
  if (rule == "AP_THM") return a.expect(2), ap_thm(a.thm(0), a.term(1));
  schema(rule, "unknown derived rule");
}

// ---------------------------------------------------------------------------
// Legacy definitions

namespace {

// |- (\x. f x) = f for a concrete f, from the axiom.
Theorem eta_instance(const Kernel& k, const Theorem& ax, const Term& f) {
  Type ty = f.type_of();
  Theorem th = k.inst_type(TypeSubstitution({{"A", fun_domain(ty)},
                                             {"B", fun_codomain(ty)}}),
                           ax);
  return k.inst(TermSubstitution({{Var{"f", ty}, f}}), th);
}

}  // namespace

std::pair<Theorem, Theorem> Logic::prove_legacy_definitions() const {
  if (mode() != KernelMode::kExtended)
    fail(ErrorCode::kWrongMode, "legacy definitions need the extended kernel");
  const Theorem* ax = nullptr;
  Term eta = extensionality_statement();
  for (const Theorem& a : k_->context().axioms)
    if (a.hyps().empty() && alpha_equal(a.concl(), eta)) ax = &a;
  if (!ax) fail(ErrorCode::kMissingAxiom, "extensionality");

  // |- (!) = \P. P = (\x. T)
  Type a = Type::var("A");
  Var P{"P", fun_ty(a, bool_ty())};
  Term pt = Term::var(P);
  Var x{"x", a};
  Term xt = Term::var(x);
  Term all = Term::constant(kForall, fun_ty(P.ty, bool_ty()));
  Term const_t = Term::abs(x, mk_truth());
  Theorem eta_p = eta_instance(*k_, *ax, pt);  // (\x. P x) = P
  Theorem expanded = k_->eq_mp(ap_term(all, sym(eta_p)),
                               k_->assume(Term::app(all, pt)));
  Theorem pointwise = k_->abs(x, eqt_intro(k_->spec(xt, expanded)));
  Theorem fwd = k_->trans(sym(eta_p), pointwise);  // {!P} |- P = \x. T
  Theorem back = k_->eq_mp(sym(ap_term(all, k_->assume(mk_eq(pt, const_t)))),
                           k_->gen(x, truth()));  // {P = \x. T} |- !P
  Theorem forall_th =
      k_->trans(sym(eta_instance(*k_, *ax, all)),
                k_->abs(P, k_->deduct_antisym(back, fwd)));

  // |- (==>) = \p q. (p /\ q) = p
  Term p = Term::var("p", bool_ty());
  Term q = Term::var("q", bool_ty());
  Term imp = Term::constant(kImp, bool_op());
  Term pq = mk_imp(p, q);
  Term eqn = mk_eq(mk_conj(p, q), p);
  Theorem both = conj(k_->assume(p), k_->mp(k_->assume(pq), k_->assume(p)));
  Theorem left = conjunct1(k_->assume(mk_conj(p, q)));
  Theorem to_eq = k_->deduct_antisym(both, left);  // {p ==> q} |- eqn
  Theorem from_eq = k_->disch(
      p, conjunct2(k_->eq_mp(sym(k_->assume(eqn)), k_->assume(p))));
  Theorem pointwise_imp = k_->deduct_antisym(from_eq, to_eq);
  Theorem inner = k_->trans(sym(eta_instance(*k_, *ax, Term::app(imp, p))),
                            k_->abs(q.as_var(), pointwise_imp));
  Theorem imp_th = k_->trans(sym(eta_instance(*k_, *ax, imp)),
                             k_->abs(p.as_var(), inner));
  return {forall_th, imp_th};
}

Session::Session(KernelMode mode)
    : kernel_(mode), logic_(kernel_, install_connectives(kernel_)) {}

}  // namespace holkit
