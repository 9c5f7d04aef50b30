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

#include "holkit/article.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <variant>

namespace holkit {
namespace {

constexpr const char* kStandardCommands[] = {
    "absTerm",   "absThm",       "appTerm",       "appThm",   "assume",
    "axiom",     "betaConv",     "cons",          "const",    "constTerm",
    "deductAntisym", "def",      "defineConst",   "defineTypeOp",
    "eqMp",      "hdTl",         "nil",           "opType",   "pop",
    "pragma",    "proveHyp",     "ref",           "refl",     "remove",
    "subst",     "sym",          "thm",           "trans",    "typeOp",
    "var",       "varTerm",      "varType",       "version",
};
constexpr const char* kExtensionCommands[] = {"mp", "disch", "gen", "spec"};

}  // namespace

std::string_view dialect_name(Dialect dialect) {
  return dialect == Dialect::kStandard ? "standard" : "extended";
}

std::optional<Dialect> parse_dialect(std::string_view name) {
  if (name == "standard") return Dialect::kStandard;
  if (name == "extended") return Dialect::kExtended;
  return std::nullopt;
}

ArticleCommand ArticleCommand::integer(int64_t n) {
  ArticleCommand c;
  c.kind = Kind::kInt;
  c.num = n;
  return c;
}

ArticleCommand ArticleCommand::string(std::string s) {
  ArticleCommand c;
  c.kind = Kind::kString;
  c.text = std::move(s);
  return c;
}

ArticleCommand ArticleCommand::name(std::string command) {
  ArticleCommand c;
  c.kind = Kind::kName;
  c.text = std::move(command);
  return c;
}

bool operator==(const ArticleCommand& a, const ArticleCommand& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == ArticleCommand::Kind::kInt) return a.num == b.num;
  return a.text == b.text;
}

bool is_extension_command(std::string_view name) {
  return std::find(std::begin(kExtensionCommands), std::end(kExtensionCommands),
                   name) != std::end(kExtensionCommands);
}

bool is_article_command(std::string_view name, Dialect dialect) {
  if (std::find(std::begin(kStandardCommands), std::end(kStandardCommands),
                name) != std::end(kStandardCommands))
    return true;
  return dialect == Dialect::kExtended && is_extension_command(name);
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

ArticleCommand parse_line(std::string_view s, Dialect dialect) {
  if (s.front() == '"') {
    std::string out;
    size_t i = 1;
    for (; i < s.size() && s[i] != '"'; ++i) {
      if (s[i] == '\\') {
        if (++i == s.size()) break;
      }
      out.push_back(s[i]);
    }
    if (i >= s.size()) fail(ErrorCode::kSyntaxError, "unterminated string");
    if (i + 1 != s.size())
      fail(ErrorCode::kSyntaxError, "text after closing quote");
    return ArticleCommand::string(std::move(out));
  }
  if (s.front() == '-' || (s.front() >= '0' && s.front() <= '9')) {
    int64_t n = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || end != s.data() + s.size())
      fail(ErrorCode::kSyntaxError, "bad number " + std::string(s));
    return ArticleCommand::integer(n);
  }
  if (!is_article_command(s, dialect)) {
    std::string msg = "unknown command " + std::string(s);
    if (is_extension_command(s)) msg += " in the standard dialect";
    fail(ErrorCode::kUnknownCommand, msg);
  }
  return ArticleCommand::name(std::string(s));
}

}  // namespace

Article parse_article(std::string_view text, Dialect dialect) {
  Article out;
  int line = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view s = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line;
    if (s.empty() || s.front() == '#') continue;
    try {
      ArticleCommand c = parse_line(s, dialect);
      c.line = line;
      out.push_back(std::move(c));
    } catch (const Error& e) {
      throw e.at_line(line);
    }
  }
  return out;
}

std::string format_article(const Article& article) {
  std::string out;
  for (const ArticleCommand& c : article) {
    switch (c.kind) {
      case ArticleCommand::Kind::kInt:
        out += std::to_string(c.num);
        break;
      case ArticleCommand::Kind::kString:
        out.push_back('"');
        for (char ch : c.text) {
          if (ch == '\n')
            fail(ErrorCode::kSyntaxError, "newline inside string literal");
          if (ch == '"' || ch == '\\') out.push_back('\\');
          out.push_back(ch);
        }
        out.push_back('"');
        break;
      case ArticleCommand::Kind::kName:
        out += c.text;
        break;
    }
    out.push_back('\n');
  }
  return out;
}

void write_article_file(const Article& article, const std::string& path) {
  std::string text = format_article(article);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(ErrorCode::kIo, "cannot open " + path + " for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) fail(ErrorCode::kIo, "write failed: " + path);
}

Article read_article_file(const std::string& path, Dialect dialect) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) fail(ErrorCode::kIo, "read failed: " + path);
  return parse_article(ss.str(), dialect);
}

// ---------------------------------------------------------------------------
// Replay.

namespace {

struct Obj;
struct NameObj {
  std::string s;
};
struct ListObj {
  std::vector<Obj> items;
};
struct TypeOpObj {
  std::string s;
};
struct ConstObj {
  std::string s;
};

struct Obj {
  std::variant<int64_t, NameObj, ListObj, TypeOpObj, Type, Var, Term, Theorem,
               ConstObj>
      v;
};

constexpr const char* kKindNames[] = {"Num",  "Name", "List", "TypeOp", "Type",
                                      "Var",  "Term", "Thm",  "Const"};

class Machine {
 public:
  explicit Machine(Kernel& kernel) : k_(kernel) {}

  void step(const ArticleCommand& c);
  ReplayResult& result() { return result_; }

 private:
  Obj pop() {
    if (stack_.empty()) fail(ErrorCode::kStackUnderflow, "empty stack");
    Obj o = std::move(stack_.back());
    stack_.pop_back();
    return o;
  }

  template <typename T>
  T pop_as() {
    if (stack_.empty()) fail(ErrorCode::kStackUnderflow, "empty stack");
    Obj& top = stack_.back();
    if (!std::holds_alternative<T>(top.v)) {
      Obj tmp{T{}};
      fail(ErrorCode::kOperandKindMismatch,
           std::string("expected ") + kKindNames[tmp.v.index()] + ", found " +
               kKindNames[top.v.index()]);
    }
    T out = std::get<T>(std::move(top.v));
    stack_.pop_back();
    return out;
  }

  // Types without a default constructor.
  template <typename T>
  T pop_value(size_t index) {
    if (stack_.empty()) fail(ErrorCode::kStackUnderflow, "empty stack");
    Obj& top = stack_.back();
    if (top.v.index() != index)
      fail(ErrorCode::kOperandKindMismatch,
           std::string("expected ") + kKindNames[index] + ", found " +
               kKindNames[top.v.index()]);
    T out = std::get<T>(std::move(top.v));
    stack_.pop_back();
    return out;
  }

  Type pop_type() { return pop_value<Type>(4); }
  Var pop_var() { return pop_value<Var>(5); }
  Term pop_term() { return pop_value<Term>(6); }
  Theorem pop_thm() { return pop_value<Theorem>(7); }

  void push(Obj o) { stack_.push_back(std::move(o)); }

  int64_t pop_key() {
    int64_t k = pop_as<int64_t>();
    if (k < 0)
      fail(ErrorCode::kOperandKindMismatch, "negative object table key");
    return k;
  }

  const Obj& lookup(int64_t key) const {
    auto it = table_.find(key);
    if (it == table_.end())
      fail(ErrorCode::kOperandKindMismatch,
           "no object at key " + std::to_string(key));
    return it->second;
  }

  static const Obj& item(const ListObj& l, size_t i, size_t index,
                         const char* what) {
    if (l.items.size() <= i || l.items[i].v.index() != index)
      fail(ErrorCode::kOperandKindMismatch, std::string("malformed ") + what);
    return l.items[i];
  }

  static const ListObj& as_list(const Obj& o, const char* what) {
    if (!std::holds_alternative<ListObj>(o.v))
      fail(ErrorCode::kOperandKindMismatch, std::string("malformed ") + what);
    return std::get<ListObj>(o.v);
  }

  std::vector<Term> term_list(const ListObj& l) const {
    std::vector<Term> out;
    for (size_t i = 0; i < l.items.size(); ++i)
      out.push_back(std::get<Term>(item(l, i, 6, "term list").v));
    return out;
  }

  Theorem sym(const Theorem& th) const {
    if (!is_eq(th.concl()))
      fail(ErrorCode::kNotAnEquation, to_string(th.concl()));
    const Term& eq = th.concl().fun().fun();
    Theorem r = k_.refl(eq_lhs(th.concl()));
    return k_.eq_mp(k_.mk_comb(k_.mk_comb(k_.refl(eq), th), r), r);
  }

  void subst();
  void define_type_op();
  void export_thm();
  void axiom();

  Kernel& k_;
  std::vector<Obj> stack_;
  std::map<int64_t, Obj> table_;
  ReplayResult result_;
};

void Machine::subst() {
  Theorem th = pop_thm();
  ListObj sigma = pop_as<ListObj>();
  if (sigma.items.size() != 2)
    fail(ErrorCode::kOperandKindMismatch, "malformed substitution");
  const ListObj& tys = as_list(sigma.items[0], "type substitution");
  const ListObj& tms = as_list(sigma.items[1], "term substitution");

  std::vector<std::pair<std::string, Type>> theta;
  for (const Obj& o : tys.items) {
    const ListObj& pair = as_list(o, "type substitution");
    if (pair.items.size() != 2)
      fail(ErrorCode::kOperandKindMismatch, "malformed type substitution");
    theta.emplace_back(
        std::get<NameObj>(item(pair, 0, 1, "type substitution").v).s,
        std::get<Type>(item(pair, 1, 4, "type substitution").v));
  }
  std::vector<std::pair<Var, Term>> sigma_pairs;
  for (const Obj& o : tms.items) {
    const ListObj& pair = as_list(o, "term substitution");
    if (pair.items.size() != 2)
      fail(ErrorCode::kOperandKindMismatch, "malformed term substitution");
    sigma_pairs.emplace_back(
        std::get<Var>(item(pair, 0, 5, "term substitution").v),
        std::get<Term>(item(pair, 1, 6, "term substitution").v));
  }
  if (!theta.empty())
    th = k_.inst_type(TypeSubstitution(std::move(theta)), th);
  if (!sigma_pairs.empty() || tys.items.empty())
    th = k_.inst(TermSubstitution(std::move(sigma_pairs)), th);
  push({th});
}

void Machine::define_type_op() {
  Theorem witness = pop_thm();
  ListObj vars = pop_as<ListObj>();
  std::string rep = pop_as<NameObj>().s;
  std::string abs = pop_as<NameObj>().s;
  std::string name = pop_as<NameObj>().s;
  std::vector<std::string> tyvars;
  for (size_t i = 0; i < vars.items.size(); ++i)
    tyvars.push_back(std::get<NameObj>(item(vars, i, 1, "type variables").v).s);
  Kernel::TypeDefResult r = k_.define_type_op(name, abs, rep, tyvars, witness);
  push({TypeOpObj{name}});
  push({ConstObj{abs}});
  push({ConstObj{rep}});
  push({r.abs_rep});
  push({r.rep_abs});
}

void Machine::export_thm() {
  Term c = pop_term();
  std::vector<Term> hyps = canonical_hyps(term_list(pop_as<ListObj>()));
  Theorem th = pop_thm();
  bool same = alpha_equal(c, th.concl()) && hyps.size() == th.hyps().size();
  for (size_t i = 0; same && i < hyps.size(); ++i)
    same = alpha_equal(hyps[i], th.hyps()[i]);
  if (!same)
    fail(ErrorCode::kExportMismatch,
         "theorem " + to_string(th) + " exported as " + to_string(c));
  result_.exported.push_back(th);
}

void Machine::axiom() {
  Term p = pop_term();
  if (!pop_as<ListObj>().items.empty())
    fail(ErrorCode::kNonEmptyHyps, "axiom with hypotheses");
  for (const Theorem& ax : k_.context().axioms) {
    if (ax.hyps().empty() && alpha_equal(ax.concl(), p)) {
      result_.assumed.push_back(ax);
      push({ax});
      return;
    }
  }
  Theorem th = k_.new_axiom(p);
  result_.assumed.push_back(th);
  push({th});
}

void Machine::step(const ArticleCommand& c) {
  if (c.kind == ArticleCommand::Kind::kInt) return push({c.num});
  if (c.kind == ArticleCommand::Kind::kString) return push({NameObj{c.text}});
  const std::string& n = c.text;

  if (n == "absTerm") {
    Term b = pop_term();
    Var v = pop_var();
    push({Term::abs(v, b)});
  } else if (n == "absThm") {
    Theorem th = pop_thm();
    Var v = pop_var();
    push({k_.abs(v, th)});
  } else if (n == "appTerm") {
    Term x = pop_term();
    Term f = pop_term();
    push({Term::app(f, x)});
  } else if (n == "appThm") {
    Theorem xy = pop_thm();
    Theorem fg = pop_thm();
    push({k_.mk_comb(fg, xy)});
  } else if (n == "assume") {
    push({k_.assume(pop_term())});
  } else if (n == "axiom") {
    axiom();
  } else if (n == "betaConv") {
    push({k_.beta(pop_term())});
  } else if (n == "cons") {
    ListObj t = pop_as<ListObj>();
    Obj h = pop();
    t.items.insert(t.items.begin(), std::move(h));
    push({std::move(t)});
  } else if (n == "const") {
    push({ConstObj{pop_as<NameObj>().s}});
  } else if (n == "constTerm") {
    Type ty = pop_type();
    ConstObj name = pop_as<ConstObj>();
    push({k_.mk_const(name.s, ty)});
  } else if (n == "deductAntisym") {
    Theorem b = pop_thm();
    Theorem a = pop_thm();
    push({k_.deduct_antisym(a, b)});
  } else if (n == "def") {
    int64_t key = pop_key();
    if (stack_.empty()) fail(ErrorCode::kStackUnderflow, "empty stack");
    table_.insert_or_assign(key, stack_.back());
  } else if (n == "defineConst") {
    Term t = pop_term();
    std::string name = pop_as<NameObj>().s;
    Theorem th = k_.define_const(name, t);
    push({ConstObj{name}});
    push({th});
  } else if (n == "defineTypeOp") {
    define_type_op();
  } else if (n == "eqMp") {
    Theorem p = pop_thm();
    Theorem pq = pop_thm();
    push({k_.eq_mp(pq, p)});
  } else if (n == "hdTl") {
    ListObj l = pop_as<ListObj>();
    if (l.items.empty())
      fail(ErrorCode::kOperandKindMismatch, "hdTl of an empty list");
    Obj h = std::move(l.items.front());
    l.items.erase(l.items.begin());
    push(std::move(h));
    push({std::move(l)});
  } else if (n == "nil") {
    push({ListObj{}});
  } else if (n == "opType") {
    ListObj args = pop_as<ListObj>();
    std::string op = pop_as<TypeOpObj>().s;
    std::vector<Type> tys;
    for (size_t i = 0; i < args.items.size(); ++i)
      tys.push_back(std::get<Type>(item(args, i, 4, "type arguments").v));
    Type ty = Type::app(op, std::move(tys));
    k_.check_type(ty);
    push({ty});
  } else if (n == "pop") {
    pop();
  } else if (n == "pragma") {
    pop();
  } else if (n == "proveHyp") {
    Theorem bth = pop_thm();
    Theorem ath = pop_thm();
    if (hyp_contains(bth.hyps(), ath.concl()))
      push({k_.eq_mp(k_.deduct_antisym(ath, bth), ath)});
    else
      push({bth});
  } else if (n == "ref") {
    push(lookup(pop_key()));
  } else if (n == "refl") {
    push({k_.refl(pop_term())});
  } else if (n == "remove") {
    int64_t key = pop_key();
    Obj o = lookup(key);
    table_.erase(key);
    push(std::move(o));
  } else if (n == "subst") {
    subst();
  } else if (n == "sym") {
    push({sym(pop_thm())});
  } else if (n == "thm") {
    export_thm();
  } else if (n == "trans") {
    Theorem bc = pop_thm();
    Theorem ab = pop_thm();
    push({k_.trans(ab, bc)});
  } else if (n == "typeOp") {
    push({TypeOpObj{pop_as<NameObj>().s}});
  } else if (n == "var") {
    Type ty = pop_type();
    std::string name = pop_as<NameObj>().s;
    push({Var{name, ty}});
  } else if (n == "varTerm") {
    push({Term::var(pop_var())});
  } else if (n == "varType") {
    push({Type::var(pop_as<NameObj>().s)});
  } else if (n == "version") {
    int64_t v = pop_as<int64_t>();
    if (v != 6)
      fail(ErrorCode::kSyntaxError, "unsupported version " + std::to_string(v));
  } else if (n == "mp") {
    Theorem ip = pop_thm();
    Theorem ipq = pop_thm();
    push({k_.mp(ipq, ip)});
  } else if (n == "disch") {
    Theorem th = pop_thm();
    Term p = pop_term();
    push({k_.disch(p, th)});
  } else if (n == "gen") {
    Theorem th = pop_thm();
    Var x = pop_var();
    push({k_.gen(x, th)});
  } else if (n == "spec") {
    Theorem th = pop_thm();
    Term u = pop_term();
    push({k_.spec(u, th)});
  } else {
    fail(ErrorCode::kUnknownCommand, "unknown command " + n);
  }
}

}  // namespace

ReplayResult replay(const Article& article, Kernel& kernel) {
  Machine m(kernel);
  for (size_t i = 0; i < article.size(); ++i) {
    const ArticleCommand& c = article[i];
    try {
      m.step(c);
    } catch (const Error& e) {
      if (e.line() != 0) throw;
      throw e.at_line(c.line != 0 ? c.line : static_cast<int>(i) + 1);
    }
  }
  return std::move(m.result());
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

void collect_type_names(const Type& ty, std::set<std::string>& type_ops) {
  if (ty.is_var()) return;
  type_ops.insert(ty.name());
  for (const Type& a : ty.args()) collect_type_names(a, type_ops);
}

void collect_names(const Term& t, std::set<std::string>& consts,
                   std::set<std::string>& type_ops) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      collect_type_names(t.as_var().ty, type_ops);
      break;
    case Term::Kind::kConst:
      consts.insert(t.const_name());
      collect_type_names(t.const_type(), type_ops);
      break;
    case Term::Kind::kApp:
      collect_names(t.fun(), consts, type_ops);
      collect_names(t.arg(), consts, type_ops);
      break;
    case Term::Kind::kAbs:
      collect_type_names(t.as_var().ty, type_ops);
      collect_names(t.body(), consts, type_ops);
      break;
  }
}

class Writer {
 public:
  Writer(const Kernel& kernel, Dialect dialect)
      : k_(kernel), dialect_(dialect) {}

  Article run(const Theorem& th) {
    plan(th);
    emitting_ = false;
    body(th);
    emitting_ = true;
    body(th);
    return std::move(out_);
  }

 private:
  // Works out which definitions the trace depends on.
  void plan(const Theorem& th) {
    std::set<std::string> consts, type_ops;
    std::set<const StepNode*> seen;
    std::vector<const StepNode*> work{th.trace().get()};
    auto scan_node = [&](const StepNode* n) {
      if (dialect_ == Dialect::kStandard && is_extended_rule(n->rule()))
        fail(ErrorCode::kDialectTooWeak,
             std::string(rule_name(n->rule())) +
                 " needs the extended dialect");
      for (const Term& t : n->terms()) collect_names(t, consts, type_ops);
      for (const Term& t : n->hyps()) collect_names(t, consts, type_ops);
      collect_names(n->concl(), consts, type_ops);
      for (const auto& [v, t] : n->term_subst().pairs()) {
        collect_type_names(v.ty, type_ops);
        collect_names(t, consts, type_ops);
      }
      for (const auto& [a, ty] : n->type_subst().pairs())
        collect_type_names(ty, type_ops);
      if (n->rule() == Rule::kDefineConst) consts.insert(n->names()[0]);
      if (n->rule() == Rule::kTypeDefAbsRep ||
          n->rule() == Rule::kTypeDefRepAbs)
        type_ops.insert(n->names()[0]);
      for (const StepTrace& p : n->premises()) work.push_back(p.get());
    };
    auto drain = [&] {
      while (!work.empty()) {
        const StepNode* n = work.back();
        work.pop_back();
        if (seen.insert(n).second) scan_node(n);
      }
    };
    drain();

    const auto& defs = k_.context().definitions;
    std::vector<bool> needed(defs.size(), false);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = defs.size(); i-- > 0;) {
        if (needed[i]) continue;
        if (const auto* cd = std::get_if<ConstDefinition>(&defs[i])) {
          if (!consts.count(cd->name)) continue;
          collect_names(cd->rhs, consts, type_ops);
        } else {
          const auto& td = std::get<TypeDefinition>(defs[i]);
          if (!type_ops.count(td.name) && !consts.count(td.abs) &&
              !consts.count(td.rep))
            continue;
          type_ops.insert(td.name);
          work.push_back(td.witness.trace().get());
          drain();
        }
        needed[i] = true;
        changed = true;
      }
    }
    for (size_t i = 0; i < defs.size(); ++i)
      if (needed[i]) prelude_.push_back(&defs[i]);
  }

  void body(const Theorem& th) {
    next_slot_ = 0;
    slots_.clear();
    def_slots_.clear();
    out_.clear();
    emit(ArticleCommand::integer(6));
    name("version");
    for (const Definition* d : prelude_) definition(*d);
    node(th.trace().get());
    term_list(th.hyps());
    term(th.concl());
    name("thm");
  }

  void emit(ArticleCommand c) {
    if (emitting_) out_.push_back(std::move(c));
  }
  void name(const char* n) { emit(ArticleCommand::name(n)); }
  void str(const std::string& s) { emit(ArticleCommand::string(s)); }

  int64_t new_slot() { return next_slot_++; }
  void store(int64_t slot) {
    emit(ArticleCommand::integer(slot));
    name("def");
  }

  // Sharing protocol. begin() returns true when the object must be built;
  // otherwise it has been referenced from the table (or, while counting,
  // already seen). finish() stores objects that occur more than once.
  int intern(const std::string& key) {
    auto [it, inserted] = ids_.emplace(key, static_cast<int>(ids_.size()));
    return it->second;
  }
  bool begin(int id) {
    if (!emitting_) return ++counts_[id] == 1;
    auto it = slots_.find(id);
    if (it == slots_.end()) return true;
    emit(ArticleCommand::integer(it->second));
    name("ref");
    return false;
  }
  void finish(int id) {
    if (!emitting_ || counts_[id] < 2) return;
    int64_t slot = new_slot();
    slots_.emplace(id, slot);
    store(slot);
  }

  void definition(const Definition& d) {
    if (const auto* cd = std::get_if<ConstDefinition>(&d)) {
      str(cd->name);
      term(cd->rhs);
      name("defineConst");
      int64_t slot = new_slot();
      def_slots_[cd->name] = slot;
      store(slot);
      name("pop");
      name("pop");
      return;
    }
    const auto& td = std::get<TypeDefinition>(d);
    str(td.name);
    str(td.abs);
    str(td.rep);
    for (const std::string& a : td.tyvars) str(a);
    name("nil");
    for (size_t i = 0; i < td.tyvars.size(); ++i) name("cons");
    node(td.witness.trace().get());
    name("defineTypeOp");
    int64_t rep_abs = new_slot();
    store(rep_abs);
    name("pop");
    int64_t abs_rep = new_slot();
    store(abs_rep);
    name("pop");
    name("pop");
    name("pop");
    name("pop");
    def_slots_["absRep:" + td.name] = abs_rep;
    def_slots_["repAbs:" + td.name] = rep_abs;
  }

  int type_id(const Type& ty) {
    auto it = type_ids_.find(ty.id());
    if (it != type_ids_.end()) return it->second;
    std::string key = ty.is_var() ? "a" + ty.name() : "o" + ty.name();
    for (const Type& a : ty.args()) key += "," + std::to_string(type_id(a));
    int id = intern(key);
    type_ids_.emplace(ty.id(), id);
    keep_types_.push_back(ty);
    return id;
  }

  void type(const Type& ty) {
    int id = type_id(ty);
    if (!begin(id)) return;
    if (ty.is_var()) {
      str(ty.name());
      name("varType");
    } else {
      int op = intern("O" + ty.name());
      if (begin(op)) {
        str(ty.name());
        name("typeOp");
        finish(op);
      }
      for (const Type& a : ty.args()) type(a);
      name("nil");
      for (size_t i = 0; i < ty.args().size(); ++i) name("cons");
      name("opType");
    }
    finish(id);
  }

  void var(const Var& v) {
    int id = intern("V" + std::to_string(type_id(v.ty)) + "," + v.name);
    if (!begin(id)) return;
    str(v.name);
    type(v.ty);
    name("var");
    finish(id);
  }

  int term_id(const Term& t) {
    auto it = term_ids_.find(t.id());
    if (it != term_ids_.end()) return it->second;
    std::string key;
    switch (t.kind()) {
      case Term::Kind::kVar:
        key = "v" + std::to_string(type_id(t.as_var().ty)) + "," +
              t.as_var().name;
        break;
      case Term::Kind::kConst:
        key = "c" + std::to_string(type_id(t.const_type())) + "," +
              t.const_name();
        break;
      case Term::Kind::kApp:
        key = "p" + std::to_string(term_id(t.fun())) + "," +
              std::to_string(term_id(t.arg()));
        break;
      case Term::Kind::kAbs:
        key = "l" + std::to_string(type_id(t.as_var().ty)) + "," +
              std::to_string(term_id(t.body())) + "," + t.as_var().name;
        break;
    }
    int id = intern(key);
    term_ids_.emplace(t.id(), id);
    keep_terms_.push_back(t);
    return id;
  }

  void term(const Term& t) {
    int id = term_id(t);
    if (!begin(id)) return;
    switch (t.kind()) {
      case Term::Kind::kVar:
        var(t.as_var());
        name("varTerm");
        break;
      case Term::Kind::kConst: {
        int c = intern("C" + t.const_name());
        if (begin(c)) {
          str(t.const_name());
          name("const");
          finish(c);
        }
        type(t.const_type());
        name("constTerm");
        break;
      }
      case Term::Kind::kApp:
        term(t.fun());
        term(t.arg());
        name("appTerm");
        break;
      case Term::Kind::kAbs:
        var(t.as_var());
        term(t.body());
        name("absTerm");
        break;
    }
    finish(id);
  }

  void term_list(const std::vector<Term>& ts) {
    for (const Term& t : ts) term(t);
    name("nil");
    for (size_t i = 0; i < ts.size(); ++i) name("cons");
  }

  void subst_list(const StepNode* n) {
    for (const auto& [a, ty] : n->type_subst().pairs()) {
      str(a);
      type(ty);
      name("nil");
      name("cons");
      name("cons");
    }
    name("nil");
    for (size_t i = 0; i < n->type_subst().pairs().size(); ++i) name("cons");
    for (const auto& [v, t] : n->term_subst().pairs()) {
      var(v);
      term(t);
      name("nil");
      name("cons");
      name("cons");
    }
    name("nil");
    for (size_t i = 0; i < n->term_subst().pairs().size(); ++i) name("cons");
    name("nil");
    name("cons");
    name("cons");
  }

  void from_slot(const std::string& key) {
    emit(ArticleCommand::integer(emitting_ ? def_slots_.at(key) : 0));
    name("ref");
  }

  void node(const StepNode* n) {
    switch (n->rule()) {
      case Rule::kDefineConst:
        return from_slot(n->names()[0]);
      case Rule::kTypeDefAbsRep:
        return from_slot("absRep:" + n->names()[0]);
      case Rule::kTypeDefRepAbs:
        return from_slot("repAbs:" + n->names()[0]);
      default:
        break;
    }
    int id;
    auto it = node_ids_.find(n);
    if (it != node_ids_.end()) {
      id = it->second;
    } else {
      id = intern("N" + std::to_string(node_ids_.size()));
      node_ids_.emplace(n, id);
    }
    if (!begin(id)) return;
    const auto& ps = n->premises();
    switch (n->rule()) {
      case Rule::kRefl:
        term(n->terms()[0]);
        name("refl");
        break;
      case Rule::kBeta:
        term(n->terms()[0]);
        name("betaConv");
        break;
      case Rule::kAssume:
        term(n->terms()[0]);
        name("assume");
        break;
      case Rule::kTrans:
        node(ps[0].get());
        node(ps[1].get());
        name("trans");
        break;
      case Rule::kMkComb:
        node(ps[0].get());
        node(ps[1].get());
        name("appThm");
        break;
      case Rule::kAbs:
        var(n->terms()[0].as_var());
        node(ps[0].get());
        name("absThm");
        break;
      case Rule::kEqMp:
        node(ps[0].get());
        node(ps[1].get());
        name("eqMp");
        break;
      case Rule::kDeductAntisym:
        node(ps[0].get());
        node(ps[1].get());
        name("deductAntisym");
        break;
      case Rule::kInst:
      case Rule::kInstType:
        subst_list(n);
        node(ps[0].get());
        name("subst");
        break;
      case Rule::kMp:
        node(ps[0].get());
        node(ps[1].get());
        name("mp");
        break;
      case Rule::kDisch:
        term(n->terms()[0]);
        node(ps[0].get());
        name("disch");
        break;
      case Rule::kGen:
        var(n->terms()[0].as_var());
        node(ps[0].get());
        name("gen");
        break;
      case Rule::kSpec:
        term(n->terms()[0]);
        node(ps[0].get());
        name("spec");
        break;
      case Rule::kAxiom:
        name("nil");
        term(n->terms()[0]);
        name("axiom");
        break;
      case Rule::kDefineConst:
      case Rule::kTypeDefAbsRep:
      case Rule::kTypeDefRepAbs:
        break;
    }
    finish(id);
  }

  const Kernel& k_;
  Dialect dialect_;
  bool emitting_ = false;
  std::vector<const Definition*> prelude_;

  std::map<std::string, int> ids_;
  std::map<const void*, int> type_ids_;
  std::map<const void*, int> term_ids_;
  std::map<const StepNode*, int> node_ids_;
  // Keep interned nodes alive so their addresses stay unique.
  std::vector<Type> keep_types_;
  std::vector<Term> keep_terms_;

  std::map<int, int> counts_;
  std::map<int, int64_t> slots_;
  std::map<std::string, int64_t> def_slots_;
  int64_t next_slot_ = 0;
  Article out_;
};

}  // namespace

Article serialize(const Theorem& th, const Kernel& kernel, Dialect dialect) {
  return Writer(kernel, dialect).run(th);
}

}  // namespace holkit
