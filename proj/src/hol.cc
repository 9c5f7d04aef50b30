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

#include "holkit/hol.h"

#include <algorithm>
#include <optional>
#include <sstream>

namespace holkit {

// ---------------------------------------------------------------------------
// Types

struct Type::Node {
  bool is_var;
  std::string name;
  std::vector<Type> args;
};

Type Type::var(std::string name) {
  return Type(std::make_shared<const Node>(Node{true, std::move(name), {}}));
}

Type Type::app(std::string op, std::vector<Type> args) {
  return Type(std::make_shared<const Node>(
      Node{false, std::move(op), std::move(args)}));
}

bool Type::is_var() const { return node_->is_var; }
const std::string& Type::name() const { return node_->name; }
const std::vector<Type>& Type::args() const { return node_->args; }

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_var() != b.is_var())
    return a.is_var() ? std::strong_ordering::less
                      : std::strong_ordering::greater;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  const auto& xs = a.args();
  const auto& ys = b.args();
  if (auto c = xs.size() <=> ys.size(); c != 0) return c;
  for (size_t i = 0; i < xs.size(); ++i)
    if (auto c = xs[i] <=> ys[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

Type bool_ty() {
  static const Type ty = Type::app("bool");
  return ty;
}

Type ind_ty() {
  static const Type ty = Type::app("ind");
  return ty;
}

Type fun_ty(const Type& domain, const Type& codomain) {
  return Type::app("->", {domain, codomain});
}

bool is_fun_ty(const Type& ty) {
  return ty.is_app() && ty.name() == "->" && ty.args().size() == 2;
}

const Type& fun_domain(const Type& ty) { return ty.args()[0]; }
const Type& fun_codomain(const Type& ty) { return ty.args()[1]; }

std::string to_string(const Type& ty) {
  if (ty.is_var()) return ty.name();
  if (is_fun_ty(ty)) {
    const Type& d = fun_domain(ty);
    std::string lhs = to_string(d);
    if (is_fun_ty(d)) lhs = "(" + lhs + ")";
    return lhs + " -> " + to_string(fun_codomain(ty));
  }
  if (ty.args().empty()) return ty.name();
  std::string out = ty.name() + "(";
  for (size_t i = 0; i < ty.args().size(); ++i) {
    if (i) out += ", ";
    out += to_string(ty.args()[i]);
  }
  return out + ")";
}

namespace {

void collect_type_vars(const Type& ty, std::vector<std::string>& out) {
  if (ty.is_var()) {
    if (std::find(out.begin(), out.end(), ty.name()) == out.end())
      out.push_back(ty.name());
    return;
  }
  for (const Type& a : ty.args()) collect_type_vars(a, out);
}

}  // namespace

std::vector<std::string> type_vars_ordered(const Type& ty) {
  std::vector<std::string> out;
  collect_type_vars(ty, out);
  return out;
}

std::set<std::string> type_vars(const Type& ty) {
  auto v = type_vars_ordered(ty);
  return {v.begin(), v.end()};
}

std::strong_ordering operator<=>(const Var& a, const Var& b) {
  if (auto c = a.name <=> b.name; c != 0) return c;
  return a.ty <=> b.ty;
}

// ---------------------------------------------------------------------------
// Terms

struct Term::Node {
  Kind kind;
  Var var;                  // kVar, kAbs binder
  std::string name;         // kConst
  std::optional<Type> ty;   // cached type; empty for unchecked applications
  std::optional<Term> fun;  // kApp
  std::optional<Term> arg;  // kApp
  std::optional<Term> body; // kAbs
};

Term Term::var(const Var& v) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kVar, v, {}, v.ty, std::nullopt, std::nullopt, std::nullopt}));
}

Term Term::var(std::string name, Type ty) {
  return var(Var{std::move(name), std::move(ty)});
}

Term Term::constant(std::string name, Type ty) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kConst, Var{"", ty}, std::move(name), ty, std::nullopt,
           std::nullopt, std::nullopt}));
}

Term Term::app(const Term& fun, const Term& arg) {
  Type fty = fun.type_of();
  Type aty = arg.type_of();
  if (!is_fun_ty(fty) || fun_domain(fty) != aty) {
    fail(ErrorCode::kIllTypedApplication,
         "cannot apply " + to_string(fun) + " : " + to_string(fty) + " to " +
             to_string(arg) + " : " + to_string(aty));
  }
  return Term(std::make_shared<const Node>(
      Node{Kind::kApp, Var{"", bool_ty()}, {}, fun_codomain(fty), fun, arg,
           std::nullopt}));
}

Term Term::raw_app(const Term& fun, const Term& arg) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kApp, Var{"", bool_ty()}, {}, std::nullopt, fun, arg,
           std::nullopt}));
}

Term Term::abs(const Var& bound, const Term& body) {
  std::optional<Type> ty;
  if (body.node_->ty) ty = fun_ty(bound.ty, *body.node_->ty);
  return Term(std::make_shared<const Node>(
      Node{Kind::kAbs, bound, {}, ty, std::nullopt, std::nullopt, body}));
}

Term::Kind Term::kind() const { return node_->kind; }
const Var& Term::as_var() const { return node_->var; }
const std::string& Term::const_name() const { return node_->name; }
const Type& Term::const_type() const { return *node_->ty; }
const Term& Term::fun() const { return *node_->fun; }
const Term& Term::arg() const { return *node_->arg; }
const Term& Term::body() const { return *node_->body; }

Type Term::type_of() const {
  if (node_->ty) return *node_->ty;
  switch (kind()) {
    case Kind::kApp: {
      Type fty = fun().type_of();
      Type aty = arg().type_of();
      if (!is_fun_ty(fty) || fun_domain(fty) != aty)
        fail(ErrorCode::kIllTypedApplication,
             "ill-typed application " + to_string(*this));
      return fun_codomain(fty);
    }
    case Kind::kAbs:
      return fun_ty(as_var().ty, body().type_of());
    default:
      return *node_->ty;
  }
}

Type type_of(const Term& t) { return t.type_of(); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar:
      return a.as_var() == b.as_var();
    case Term::Kind::kConst:
      return a.const_name() == b.const_name() &&
             a.const_type() == b.const_type();
    case Term::Kind::kApp:
      return a.fun() == b.fun() && a.arg() == b.arg();
    case Term::Kind::kAbs:
      return a.as_var() == b.as_var() && a.body() == b.body();
  }
  return false;
}

namespace {

bool is_binary_const(const Term& t, std::string* op) {
  if (!t.is_app() || !t.fun().is_app() || !t.fun().fun().is_const())
    return false;
  static const std::set<std::string> kInfix = {"=", "==>", "/\\", "\\/"};
  const std::string& n = t.fun().fun().const_name();
  if (!kInfix.count(n)) return false;
  *op = n;
  return true;
}

void print_term(const Term& t, std::ostringstream& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      out << t.as_var().name;
      return;
    case Term::Kind::kConst:
      out << t.const_name();
      return;
    case Term::Kind::kAbs:
      out << "(\\" << t.as_var().name << ". ";
      print_term(t.body(), out);
      out << ")";
      return;
    case Term::Kind::kApp: {
      std::string op;
      if (is_binary_const(t, &op)) {
        out << "(";
        print_term(t.fun().arg(), out);
        out << " " << op << " ";
        print_term(t.arg(), out);
        out << ")";
        return;
      }
      if (t.fun().is_const() && t.arg().is_abs() &&
          (t.fun().const_name() == "!" || t.fun().const_name() == "?")) {
        out << "(" << t.fun().const_name() << t.arg().as_var().name << ". ";
        print_term(t.arg().body(), out);
        out << ")";
        return;
      }
      out << "(";
      print_term(t.fun(), out);
      out << " ";
      print_term(t.arg(), out);
      out << ")";
      return;
    }
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream out;
  print_term(t, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

namespace {

using BoundPairs = std::vector<std::pair<Var, Var>>;

int cmp_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

int compare_vars(const BoundPairs& env, const Var& x1, const Var& x2) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    bool left = it->first == x1;
    bool right = it->second == x2;
    if (left && right) return 0;
    if (left) return -1;
    if (right) return 1;
  }
  return cmp_of(x1 <=> x2);
}

int kind_rank(Term::Kind k) {
  switch (k) {
    case Term::Kind::kConst: return 0;
    case Term::Kind::kVar: return 1;
    case Term::Kind::kApp: return 2;
    case Term::Kind::kAbs: return 3;
  }
  return 4;
}

int compare_alpha(BoundPairs& env, const Term& a, const Term& b) {
  if (env.empty() && a.same_node(b)) return 0;
  if (a.kind() != b.kind())
    return kind_rank(a.kind()) < kind_rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::kVar:
      return compare_vars(env, a.as_var(), b.as_var());
    case Term::Kind::kConst:
      if (int c = cmp_of(a.const_name() <=> b.const_name())) return c;
      return cmp_of(a.const_type() <=> b.const_type());
    case Term::Kind::kApp:
      if (int c = compare_alpha(env, a.fun(), b.fun())) return c;
      return compare_alpha(env, a.arg(), b.arg());
    case Term::Kind::kAbs: {
      if (int c = cmp_of(a.as_var().ty <=> b.as_var().ty)) return c;
      env.emplace_back(a.as_var(), b.as_var());
      int c = compare_alpha(env, a.body(), b.body());
      env.pop_back();
      return c;
    }
  }
  return 0;
}

}  // namespace

int alpha_compare(const Term& a, const Term& b) {
  BoundPairs env;
  return compare_alpha(env, a, b);
}

bool alpha_equal(const Term& a, const Term& b) {
  return alpha_compare(a, b) == 0;
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void collect_frees(const Term& t, std::vector<Var>& bound, VarSet& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (std::find(bound.begin(), bound.end(), t.as_var()) == bound.end())
        out.insert(t.as_var());
      return;
    case Term::Kind::kConst:
      return;
    case Term::Kind::kApp:
      collect_frees(t.fun(), bound, out);
      collect_frees(t.arg(), bound, out);
      return;
    case Term::Kind::kAbs:
      bound.push_back(t.as_var());
      collect_frees(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

void collect_term_tyvars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      for (auto& n : type_vars(t.as_var().ty)) out.insert(n);
      return;
    case Term::Kind::kConst:
      for (auto& n : type_vars(t.const_type())) out.insert(n);
      return;
    case Term::Kind::kApp:
      collect_term_tyvars(t.fun(), out);
      collect_term_tyvars(t.arg(), out);
      return;
    case Term::Kind::kAbs:
      for (auto& n : type_vars(t.as_var().ty)) out.insert(n);
      collect_term_tyvars(t.body(), out);
      return;
  }
}

}  // namespace

VarSet free_vars(const Term& t) {
  VarSet out;
  std::vector<Var> bound;
  collect_frees(t, bound, out);
  return out;
}

bool var_free_in(const Var& v, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t.as_var() == v;
    case Term::Kind::kConst:
      return false;
    case Term::Kind::kApp:
      return var_free_in(v, t.fun()) || var_free_in(v, t.arg());
    case Term::Kind::kAbs:
      return t.as_var() != v && var_free_in(v, t.body());
  }
  return false;
}

std::set<std::string> type_vars(const Term& t) {
  std::set<std::string> out;
  collect_term_tyvars(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Substitutions

TermSubstitution::TermSubstitution(std::vector<std::pair<Var, Term>> pairs)
    : pairs_(std::move(pairs)) {
  std::set<Var> seen;
  for (const auto& [v, t] : pairs_) {
    if (!seen.insert(v).second)
      fail(ErrorCode::kBadSubstitution, "variable " + v.name + " repeated");
    if (t.type_of() != v.ty)
      fail(ErrorCode::kBadSubstitution,
           "replacement for " + v.name + " has type " +
               to_string(t.type_of()) + ", expected " + to_string(v.ty));
  }
}

const Term* TermSubstitution::find(const Var& v) const {
  for (const auto& [x, t] : pairs_)
    if (x == v) return &t;
  return nullptr;
}

TypeSubstitution::TypeSubstitution(
    std::vector<std::pair<std::string, Type>> pairs)
    : pairs_(std::move(pairs)) {
  std::set<std::string> seen;
  for (const auto& p : pairs_)
    if (!seen.insert(p.first).second)
      fail(ErrorCode::kBadSubstitution,
           "type variable " + p.first + " repeated");
}

const Type* TypeSubstitution::find(const std::string& tyvar) const {
  for (const auto& [a, ty] : pairs_)
    if (a == tyvar) return &ty;
  return nullptr;
}

Type subst_type(const TypeSubstitution& theta, const Type& ty) {
  if (theta.empty()) return ty;
  if (ty.is_var()) {
    const Type* r = theta.find(ty.name());
    return r ? *r : ty;
  }
  bool changed = false;
  std::vector<Type> args;
  args.reserve(ty.args().size());
  for (const Type& a : ty.args()) {
    args.push_back(subst_type(theta, a));
    changed = changed || !args.back().same_node(a);
  }
  return changed ? Type::app(ty.name(), std::move(args)) : ty;
}

Var fresh_variant(const VarSet& avoid, const Var& v) {
  Var out = v;
  while (avoid.count(out)) out.name += "'";
  return out;
}

namespace {

using TermPairs = std::vector<std::pair<Var, Term>>;

Term vsubst(const TermPairs& ilist, const Term& tm) {
  switch (tm.kind()) {
    case Term::Kind::kVar:
      for (const auto& [x, t] : ilist)
        if (x == tm.as_var()) return t;
      return tm;
    case Term::Kind::kConst:
      return tm;
    case Term::Kind::kApp: {
      Term f = vsubst(ilist, tm.fun());
      Term a = vsubst(ilist, tm.arg());
      if (f.same_node(tm.fun()) && a.same_node(tm.arg())) return tm;
      return Term::app(f, a);
    }
    case Term::Kind::kAbs: {
      const Var& v = tm.as_var();
      TermPairs rest;
      for (const auto& p : ilist)
        if (p.first != v) rest.push_back(p);
      if (rest.empty()) return tm;
      Term body = vsubst(rest, tm.body());
      if (body.same_node(tm.body())) return tm;
      bool clash = false;
      for (const auto& [x, t] : rest) {
        if (var_free_in(v, t) && var_free_in(x, tm.body())) {
          clash = true;
          break;
        }
      }
      if (!clash) return Term::abs(v, body);
      Var fresh = fresh_variant(free_vars(body), v);
      TermPairs renamed;
      renamed.emplace_back(v, Term::var(fresh));
      renamed.insert(renamed.end(), rest.begin(), rest.end());
      return Term::abs(fresh, vsubst(renamed, tm.body()));
    }
  }
  return tm;
}

// Raised when a variable produced by type instantiation would be captured by
// an enclosing binder that was distinct before instantiation.
struct TypeInstClash {
  Term var;
};

using BinderEnv = std::vector<std::pair<Term, Term>>;  // (original, new)

Term inst_rec(const BinderEnv& env, const TypeSubstitution& theta,
              const Term& tm) {
  switch (tm.kind()) {
    case Term::Kind::kVar: {
      Type ty = subst_type(theta, tm.as_var().ty);
      Term out = ty.same_node(tm.as_var().ty)
                     ? tm
                     : Term::var(Var{tm.as_var().name, ty});
      // Innermost binder whose instantiated form equals `out`.
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->second == out) {
          if (!(it->first == tm)) throw TypeInstClash{out};
          return out;
        }
      }
      return out;
    }
    case Term::Kind::kConst: {
      Type ty = subst_type(theta, tm.const_type());
      return ty.same_node(tm.const_type())
                 ? tm
                 : Term::constant(tm.const_name(), ty);
    }
    case Term::Kind::kApp: {
      Term f = inst_rec(env, theta, tm.fun());
      Term a = inst_rec(env, theta, tm.arg());
      if (f.same_node(tm.fun()) && a.same_node(tm.arg())) return tm;
      return Term::app(f, a);
    }
    case Term::Kind::kAbs: {
      const Var& y = tm.as_var();
      Term ybound = Term::var(y);
      Term ynew = inst_rec({}, theta, ybound);
      BinderEnv env2 = env;
      env2.emplace_back(ybound, ynew);
      try {
        Term body = inst_rec(env2, theta, tm.body());
        if (ynew.same_node(ybound) && body.same_node(tm.body())) return tm;
        return Term::abs(ynew.as_var(), body);
      } catch (const TypeInstClash& clash) {
        if (!(clash.var == ynew)) throw;
        VarSet ifrees;
        for (const Var& f : free_vars(tm.body()))
          ifrees.insert(inst_rec({}, theta, Term::var(f)).as_var());
        Var y2 = fresh_variant(ifrees, ynew.as_var());
        Var z{y2.name, y.ty};
        Term renamed =
            Term::abs(z, vsubst({{y, Term::var(z)}}, tm.body()));
        return inst_rec(env, theta, renamed);
      }
    }
  }
  return tm;
}

}  // namespace

Term subst_term(const TermSubstitution& sigma, const Term& t) {
  if (sigma.empty()) return t;
  return vsubst(sigma.pairs(), t);
}

Term subst_type(const TypeSubstitution& theta, const Term& t) {
  if (theta.empty()) return t;
  return inst_rec({}, theta, t);
}

Term beta_contract(const Term& t) {
  if (!t.is_app() || !t.fun().is_abs())
    fail(ErrorCode::kNotARedex, to_string(t));
  const Term& lam = t.fun();
  return vsubst({{lam.as_var(), t.arg()}}, lam.body());
}

bool type_match(const Type& generic, const Type& instance,
                std::map<std::string, Type>& out) {
  if (generic.is_var()) {
    auto it = out.find(generic.name());
    if (it == out.end()) {
      out.emplace(generic.name(), instance);
      return true;
    }
    return it->second == instance;
  }
  if (!instance.is_app() || instance.name() != generic.name() ||
      instance.args().size() != generic.args().size())
    return false;
  for (size_t i = 0; i < generic.args().size(); ++i)
    if (!type_match(generic.args()[i], instance.args()[i], out)) return false;
  return true;
}

}  // namespace holkit
