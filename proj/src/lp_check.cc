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

#include "holkit/lp_check.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace holkit {

LpCheckOptions default_check_options() {
  LpCheckOptions o;
  if (const char* env = std::getenv("HOLKIT_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) o.step_budget = v;
  }
  return o;
}

namespace {

// Locally nameless core: de Bruijn indices for bound variables, metas for
// rule variables. Binder names are kept for printing only.
struct Tm;
using TmP = std::shared_ptr<const Tm>;

struct Tm {
  enum K : uint8_t { kType, kKind, kConst, kBound, kMeta, kApp, kLam, kPi };
  K k;
  int idx = 0;  // constant id, de Bruijn index or meta index
  TmP a, b;     // app: fun, arg; binders: domain, body
  std::string name;
  int fv = 0;   // one more than the largest free index; 0 when closed
  bool has_meta = false;
};

TmP mk(Tm::K k, int idx = 0) {
  auto t = std::make_shared<Tm>();
  t->k = k;
  t->idx = idx;
  if (k == Tm::kBound) t->fv = idx + 1;
  if (k == Tm::kMeta) t->has_meta = true;
  return t;
}

const TmP& sort_type() {
  static const TmP t = mk(Tm::kType);
  return t;
}
const TmP& sort_kind() {
  static const TmP t = mk(Tm::kKind);
  return t;
}

TmP mk_app(TmP f, TmP x) {
  auto t = std::make_shared<Tm>();
  t->k = Tm::kApp;
  t->fv = std::max(f->fv, x->fv);
  t->has_meta = f->has_meta || x->has_meta;
  t->a = std::move(f);
  t->b = std::move(x);
  return t;
}

TmP mk_bind(Tm::K k, std::string name, TmP dom, TmP body) {
  auto t = std::make_shared<Tm>();
  t->k = k;
  t->fv = std::max(dom->fv, body->fv - 1);
  t->has_meta = dom->has_meta || body->has_meta;
  t->name = std::move(name);
  t->a = std::move(dom);
  t->b = std::move(body);
  return t;
}

TmP shift(const TmP& t, int d, int cutoff = 0) {
  if (t->fv <= cutoff || d == 0) return t;
  switch (t->k) {
    case Tm::kBound:
      return mk(Tm::kBound, t->idx + d);
    case Tm::kApp:
      return mk_app(shift(t->a, d, cutoff), shift(t->b, d, cutoff));
    case Tm::kLam:
    case Tm::kPi:
      return mk_bind(t->k, t->name, shift(t->a, d, cutoff),
                     shift(t->b, d, cutoff + 1));
    default:
      return t;
  }
}

// Replaces index `depth` with `val` and lowers the indices above it.
TmP subst(const TmP& t, const TmP& val, int depth = 0) {
  if (t->fv <= depth) return t;
  switch (t->k) {
    case Tm::kBound:
      if (t->idx == depth) return shift(val, depth);
      return mk(Tm::kBound, t->idx - 1);
    case Tm::kApp:
      return mk_app(subst(t->a, val, depth), subst(t->b, val, depth));
    case Tm::kLam:
    case Tm::kPi:
      return mk_bind(t->k, t->name, subst(t->a, val, depth),
                     subst(t->b, val, depth + 1));
    default:
      return t;
  }
}

TmP instantiate(const TmP& t, const std::vector<TmP>& metas, int depth = 0) {
  if (!t->has_meta) return t;
  switch (t->k) {
    case Tm::kMeta:
      return shift(metas[t->idx], depth);
    case Tm::kApp:
      return mk_app(instantiate(t->a, metas, depth),
                    instantiate(t->b, metas, depth));
    case Tm::kLam:
    case Tm::kPi:
      return mk_bind(t->k, t->name, instantiate(t->a, metas, depth),
                     instantiate(t->b, metas, depth + 1));
    default:
      return t;
  }
}

bool same(const TmP& a, const TmP& b) {
  if (a == b) return true;
  if (a->k != b->k || a->idx != b->idx || a->fv != b->fv) return false;
  switch (a->k) {
    case Tm::kApp:
    case Tm::kLam:
    case Tm::kPi:
      return same(a->a, b->a) && same(a->b, b->b);
    default:
      return true;
  }
}

TmP unwind(TmP t, std::vector<TmP>& args) {
  args.clear();
  while (t->k == Tm::kApp) {
    args.push_back(t->b);
    t = t->a;
  }
  std::reverse(args.begin(), args.end());
  return t;
}

struct Pat {
  bool is_var = false;
  int var = 0;   // meta index
  int head = 0;  // constant id
  std::vector<Pat> args;
};

struct RewriteRule {
  std::vector<Pat> args;
  TmP rhs;
  int nvars = 0;
};

struct ConstInfo {
  std::string name;
  TmP type;
  std::vector<RewriteRule> rules;
};

std::string clip(std::string s) {
  if (s.size() > 240) s = s.substr(0, 240) + " ...";
  return s;
}

}  // namespace

struct LpSignature::Impl {
  LpCheckOptions options;
  std::vector<ConstInfo> consts;
  std::map<std::string, int> by_name;
  mutable uint64_t steps = 0;
  mutable std::vector<std::string> path;

  struct Ctx {
    std::vector<TmP> types;
    std::vector<std::string> names;
  };

  void reset() const {
    steps = 0;
    path.clear();
  }

  void tick() const {
    if (++steps > options.step_budget)
      fail(ErrorCode::kBudgetExceeded,
           "more than " + std::to_string(options.step_budget) +
               " reduction steps");
  }

  // -- Conversion between named and internal terms.

  TmP compile(const LpTerm& t, std::vector<std::string>& env,
              std::map<std::string, int>* metas) const {
    switch (t.kind()) {
      case LpTerm::Kind::kType:
        return sort_type();
      case LpTerm::Kind::kKind:
        return sort_kind();
      case LpTerm::Kind::kConst: {
        auto it = by_name.find(t.name());
        if (it == by_name.end()) fail(ErrorCode::kUnboundName, t.name());
        return mk(Tm::kConst, it->second);
      }
      case LpTerm::Kind::kVar: {
        for (size_t i = env.size(); i-- > 0;)
          if (env[i] == t.name())
            return mk(Tm::kBound, static_cast<int>(env.size() - 1 - i));
        if (metas) {
          auto it = metas->find(t.name());
          if (it != metas->end()) return mk(Tm::kMeta, it->second);
        }
        fail(ErrorCode::kUnboundName, t.name());
      }
      case LpTerm::Kind::kApp:
        return mk_app(compile(t.fun(), env, metas),
                      compile(t.arg(), env, metas));
      case LpTerm::Kind::kLam:
      case LpTerm::Kind::kPi: {
        TmP dom = compile(t.domain(), env, metas);
        env.push_back(t.name());
        TmP body = compile(t.body(), env, metas);
        env.pop_back();
        return mk_bind(t.kind() == LpTerm::Kind::kLam ? Tm::kLam : Tm::kPi,
                       t.name(), dom, body);
      }
    }
    fail(ErrorCode::kTypeError, "bad term");
  }

  TmP compile_closed(const LpTerm& t) const {
    std::vector<std::string> env;
    return compile(t, env, nullptr);
  }

  bool name_taken(const std::string& n,
                  const std::vector<std::string>& names) const {
    return by_name.count(n) ||
           std::find(names.begin(), names.end(), n) != names.end();
  }

  LpTerm decompile(const TmP& t, std::vector<std::string>& names) const {
    switch (t->k) {
      case Tm::kType:
        return LpTerm::sort_type();
      case Tm::kKind:
        return LpTerm::sort_kind();
      case Tm::kConst:
        return LpTerm::constant(consts[t->idx].name);
      case Tm::kBound:
        if (t->idx < static_cast<int>(names.size()))
          return LpTerm::var(names[names.size() - 1 - t->idx]);
        return LpTerm::var("#" + std::to_string(t->idx));
      case Tm::kMeta:
        return LpTerm::var("$" + std::to_string(t->idx));
      case Tm::kApp:
        return LpTerm::app(decompile(t->a, names), decompile(t->b, names));
      case Tm::kLam:
      case Tm::kPi: {
        LpTerm dom = decompile(t->a, names);
        std::string n = t->name.empty() ? "x" : t->name;
        bool arrow = t->k == Tm::kPi && n == "_" && t->b->fv == 0;
        if (!arrow) {
          if (n == "_") n = "x";
          while (name_taken(n, names)) n += "'";
        }
        names.push_back(n);
        LpTerm body = decompile(t->b, names);
        names.pop_back();
        if (t->k == Tm::kLam) return LpTerm::lam(n, dom, body);
        return LpTerm::pi(n, dom, body);
      }
    }
    return LpTerm::sort_type();
  }

  std::string show(const TmP& t, const Ctx& ctx) const {
    std::vector<std::string> names = ctx.names;
    return clip(to_string(decompile(t, names)));
  }

  // -- Reduction.

  bool match(const Pat& p, const TmP& t, std::vector<TmP>& metas) const {
    if (p.is_var) {
      if (!metas[p.var]) {
        metas[p.var] = t;
        return true;
      }
      return conv(metas[p.var], t);
    }
    std::vector<TmP> args;
    TmP h = unwind(whnf(t), args);
    if (h->k != Tm::kConst || h->idx != p.head || args.size() != p.args.size())
      return false;
    for (size_t i = 0; i < args.size(); ++i)
      if (!match(p.args[i], args[i], metas)) return false;
    return true;
  }

  TmP whnf(TmP t) const {
    std::vector<TmP> args;
    for (;;) {
      TmP h = unwind(t, args);
      if (h->k == Tm::kLam && !args.empty()) {
        tick();
        TmP r = subst(h->b, args[0]);
        for (size_t i = 1; i < args.size(); ++i) r = mk_app(r, args[i]);
        t = r;
        continue;
      }
      if (h->k == Tm::kConst) {
        bool fired = false;
        for (const RewriteRule& rule : consts[h->idx].rules) {
          if (rule.args.size() > args.size()) continue;
          std::vector<TmP> metas(rule.nvars);
          bool ok = true;
          for (size_t i = 0; ok && i < rule.args.size(); ++i)
            ok = match(rule.args[i], args[i], metas);
          if (!ok) continue;
          tick();
          TmP r = instantiate(rule.rhs, metas);
          for (size_t i = rule.args.size(); i < args.size(); ++i)
            r = mk_app(r, args[i]);
          t = r;
          fired = true;
          break;
        }
        if (fired) continue;
      }
      return t;
    }
  }

  bool conv(const TmP& x, const TmP& y) const {
    if (same(x, y)) return true;
    TmP a = whnf(x), b = whnf(y);
    if (a->k == Tm::kLam && b->k == Tm::kLam) return conv(a->b, b->b);
    if (a->k == Tm::kLam)
      return conv(a->b, mk_app(shift(b, 1), mk(Tm::kBound, 0)));
    if (b->k == Tm::kLam)
      return conv(mk_app(shift(a, 1), mk(Tm::kBound, 0)), b->b);
    if (a->k == Tm::kPi || b->k == Tm::kPi)
      return a->k == b->k && conv(a->a, b->a) && conv(a->b, b->b);
    std::vector<TmP> as, bs;
    TmP ha = unwind(a, as), hb = unwind(b, bs);
    if (ha->k != hb->k || ha->idx != hb->idx || as.size() != bs.size())
      return false;
    if (ha->k != Tm::kConst && ha->k != Tm::kBound && ha->k != Tm::kType &&
        ha->k != Tm::kKind)
      return false;
    for (size_t i = 0; i < as.size(); ++i)
      if (!conv(as[i], bs[i])) return false;
    return true;
  }

  // -- Typing.

  [[noreturn]] void type_error(const std::string& what, const TmP& expected,
                               const TmP& found, const Ctx& ctx) const {
    std::string where;
    for (const std::string& p : path) where += (where.empty() ? "" : " / ") + p;
    if (where.empty()) where = "top";
    std::string msg = "at " + where + ": " + what;
    if (expected) msg += "; expected " + show(expected, ctx);
    if (found) msg += "; found " + show(found, ctx);
    fail(ErrorCode::kTypeError, msg);
  }

  std::string head_label(const TmP& h, const Ctx& ctx) const {
    if (h->k == Tm::kConst) return consts[h->idx].name;
    if (h->k == Tm::kBound) return show(h, ctx);
    return "(term)";
  }

  // Sort of a type: TYPE or KIND.
  TmP sort_of(const TmP& ty, Ctx& ctx) const {
    TmP s = whnf(infer(ty, ctx));
    if (s->k != Tm::kType && s->k != Tm::kKind)
      type_error("not a type", nullptr, s, ctx);
    return s;
  }

  TmP infer(const TmP& t, Ctx& ctx) const {
    switch (t->k) {
      case Tm::kType:
        return sort_kind();
      case Tm::kKind:
        type_error("KIND has no type", nullptr, nullptr, ctx);
      case Tm::kConst:
        return consts[t->idx].type;
      case Tm::kBound:
        return shift(ctx.types[ctx.types.size() - 1 - t->idx], t->idx + 1);
      case Tm::kMeta:
        type_error("pattern variable in a checked term", nullptr, nullptr,
                   ctx);
      case Tm::kApp: {
        std::vector<TmP> args;
        TmP h = unwind(t, args);
        TmP ty = infer(h, ctx);
        std::string label = head_label(h, ctx);
        for (size_t i = 0; i < args.size(); ++i) {
          TmP pi = whnf(ty);
          if (pi->k != Tm::kPi)
            type_error("too many arguments to " + label, nullptr, ty, ctx);
          path.push_back(label + " arg " + std::to_string(i + 1));
          check(args[i], pi->a, ctx);
          path.pop_back();
          ty = subst(pi->b, args[i]);
        }
        return ty;
      }
      case Tm::kLam: {
        TmP s = sort_of(t->a, ctx);
        if (s->k != Tm::kType)
          type_error("abstraction over a kind", nullptr, t->a, ctx);
        ctx.types.push_back(t->a);
        ctx.names.push_back(t->name);
        TmP body = infer(t->b, ctx);
        if (body->k == Tm::kKind)
          type_error("abstraction returning a kind", nullptr, body, ctx);
        ctx.types.pop_back();
        ctx.names.pop_back();
        return mk_bind(Tm::kPi, t->name, t->a, body);
      }
      case Tm::kPi: {
        TmP s = sort_of(t->a, ctx);
        if (s->k != Tm::kType)
          type_error("product over a kind", nullptr, t->a, ctx);
        ctx.types.push_back(t->a);
        ctx.names.push_back(t->name);
        TmP s2 = sort_of(t->b, ctx);
        ctx.types.pop_back();
        ctx.names.pop_back();
        return s2;
      }
    }
    type_error("bad term", nullptr, nullptr, ctx);
  }

  void check(const TmP& t, const TmP& ty, Ctx& ctx) const {
    if (t->k == Tm::kLam) {
      TmP pi = whnf(ty);
      if (pi->k != Tm::kPi)
        type_error("abstraction where a non-product is expected", ty, nullptr,
                   ctx);
      if (!conv(t->a, pi->a))
        type_error("binder annotation mismatch", pi->a, t->a, ctx);
      sort_of(t->a, ctx);
      ctx.types.push_back(pi->a);
      ctx.names.push_back(t->name);
      path.push_back("\xCE\xBB " + t->name);
      check(t->b, pi->b, ctx);
      path.pop_back();
      ctx.types.pop_back();
      ctx.names.pop_back();
      return;
    }
    TmP found = infer(t, ctx);
    if (!conv(found, ty)) type_error("type mismatch", ty, found, ctx);
  }

  // -- Signature extension.

  int add_const(const std::string& name, TmP type) {
    if (by_name.count(name)) fail(ErrorCode::kNameClash, name);
    int id = static_cast<int>(consts.size());
    consts.push_back(ConstInfo{name, std::move(type), {}});
    by_name.emplace(name, id);
    return id;
  }

  TmP checked_type(const LpTerm& type) const {
    TmP ty = compile_closed(type);
    Ctx ctx;
    sort_of(ty, ctx);
    return ty;
  }

  Pat pattern(const LpTerm& t, std::map<std::string, int>& vars) const {
    Pat p;
    if (t.kind() == LpTerm::Kind::kVar && t.name().size() > 1 &&
        t.name()[0] == '$') {
      p.is_var = true;
      auto [it, inserted] =
          vars.emplace(t.name(), static_cast<int>(vars.size()));
      p.var = it->second;
      return p;
    }
    std::vector<LpTerm> args;
    LpTerm h = t;
    while (h.kind() == LpTerm::Kind::kApp) {
      args.push_back(h.arg());
      h = h.fun();
    }
    if (h.kind() != LpTerm::Kind::kConst)
      fail(ErrorCode::kTypeError, "bad rule pattern " + to_string(t));
    auto it = by_name.find(h.name());
    if (it == by_name.end()) fail(ErrorCode::kUnboundName, h.name());
    p.head = it->second;
    for (size_t i = args.size(); i-- > 0;) p.args.push_back(pattern(args[i], vars));
    return p;
  }
};

LpSignature::LpSignature(LpCheckOptions options)
    : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
}
LpSignature::~LpSignature() = default;
LpSignature::LpSignature(LpSignature&&) noexcept = default;
LpSignature& LpSignature::operator=(LpSignature&&) noexcept = default;

namespace {

void apply_entry(LpSignature& sig, const LpEntry& e, LpCheckOptions options,
                 LpCheckStats& stats);

void load_module(LpSignature& sig, const std::string& module,
                 LpCheckOptions options, LpCheckStats& stats) {
  KernelMode mode;
  if (module == kMinimalModule)
    mode = KernelMode::kMinimal;
  else if (module == kExtendedModule)
    mode = KernelMode::kExtended;
  else
    fail(ErrorCode::kUnboundName, "module " + module);
  if (sig.declares("proof")) return;
  LpCheckStats base;
  for (const LpEntry& e : base_signature(mode).entries)
    apply_entry(sig, e, options, base);
  stats.steps += base.steps;
}

void apply_entry(LpSignature& sig, const LpEntry& e, LpCheckOptions options,
                 LpCheckStats& stats) {
  switch (e.kind) {
    case LpEntry::Kind::kRequire:
      load_module(sig, e.name, options, stats);
      ++stats.entries;
      return;
    case LpEntry::Kind::kDeclaration:
      sig.declare(e.name, *e.type);
      break;
    case LpEntry::Kind::kDefinition:
      sig.define(e.name, *e.type, *e.value);
      break;
    case LpEntry::Kind::kRule:
      sig.add_rule(*e.type, *e.value);
      break;
    case LpEntry::Kind::kAssertion:
      sig.check(*e.value, *e.type);
      stats.steps += sig.last_steps();
      sig.declare(e.name, *e.type);
      ++stats.assertions;
      break;
  }
  stats.steps += sig.last_steps();
  ++stats.entries;
}

}  // namespace

LpSignature LpSignature::base(KernelMode mode, LpCheckOptions options) {
  LpSignature sig(options);
  LpCheckStats stats;
  load_module(sig, std::string(base_module(mode)), options, stats);
  return sig;
}

bool LpSignature::declares(const std::string& name) const {
  return impl_->by_name.count(name) > 0;
}

void LpSignature::declare(const std::string& name, const LpTerm& type) {
  impl_->reset();
  TmP ty = impl_->checked_type(type);
  impl_->add_const(name, ty);
}

void LpSignature::define(const std::string& name, const LpTerm& type,
                         const LpTerm& value) {
  impl_->reset();
  TmP ty = impl_->checked_type(type);
  TmP v = impl_->compile_closed(value);
  Impl::Ctx ctx;
  impl_->check(v, ty, ctx);
  int id = impl_->add_const(name, ty);
  impl_->consts[id].rules.push_back(RewriteRule{{}, v, 0});
}

void LpSignature::add_rule(const LpTerm& lhs, const LpTerm& rhs) {
  impl_->reset();
  std::map<std::string, int> vars;
  Pat p = impl_->pattern(lhs, vars);
  if (p.is_var) fail(ErrorCode::kTypeError, "rule head is a variable");
  std::vector<std::string> env;
  TmP r = impl_->compile(rhs, env, &vars);
  impl_->consts[p.head].rules.push_back(
      RewriteRule{std::move(p.args), r, static_cast<int>(vars.size())});
}

LpTerm LpSignature::whnf(const LpTerm& t) const {
  impl_->reset();
  std::vector<std::string> names;
  return impl_->decompile(impl_->whnf(impl_->compile_closed(t)), names);
}

void LpSignature::check(const LpTerm& term, const LpTerm& type) const {
  impl_->reset();
  TmP ty = impl_->checked_type(type);
  Impl::Ctx ctx;
  impl_->check(impl_->compile_closed(term), ty, ctx);
}

LpTerm LpSignature::infer(const LpTerm& term) const {
  impl_->reset();
  Impl::Ctx ctx;
  TmP ty = impl_->infer(impl_->compile_closed(term), ctx);
  std::vector<std::string> names;
  return impl_->decompile(ty, names);
}

bool LpSignature::convertible(const LpTerm& a, const LpTerm& b) const {
  impl_->reset();
  return impl_->conv(impl_->compile_closed(a), impl_->compile_closed(b));
}

uint64_t LpSignature::last_steps() const { return impl_->steps; }

LpCheckStats check_lp_file(const LpFile& file, LpCheckOptions options) {
  LpSignature sig(options);
  LpCheckStats stats;
  for (size_t i = 0; i < file.entries.size(); ++i) {
    const LpEntry& e = file.entries[i];
    try {
      apply_entry(sig, e, options, stats);
    } catch (const Error& err) {
      if (err.line() != 0) throw;
      std::string where = e.name.empty() ? "" : e.name + ": ";
      throw Error(err.code(), where + err.detail(),
                  e.line != 0 ? e.line : static_cast<int>(i) + 1);
    }
  }
  return stats;
}

}  // namespace holkit
