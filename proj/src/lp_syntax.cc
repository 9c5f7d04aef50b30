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

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "holkit/lp.h"

namespace holkit {

struct LpTerm::Node {
  Kind kind;
  std::string name;
  std::optional<LpTerm> a;
  std::optional<LpTerm> b;
};

namespace {

constexpr std::string_view kLambda = "\xCE\xBB";     // λ
constexpr std::string_view kPi = "\xCE\xA0";         // Π
constexpr std::string_view kArrow = "\xE2\x86\x92";  // →
constexpr std::string_view kRewrite = "\xE2\x86\xAA";  // ↪
constexpr std::string_view kDefEq = "\xE2\x89\x94";  // ≔

constexpr const char* kKeywords[] = {"symbol", "opaque", "rule",
                                     "require", "TYPE", "KIND"};

}  // namespace

LpTerm LpTerm::sort_type() {
  static const LpTerm t(std::make_shared<const Node>(Node{Kind::kType, "TYPE",
                                                          {}, {}}));
  return t;
}

LpTerm LpTerm::sort_kind() {
  static const LpTerm t(std::make_shared<const Node>(Node{Kind::kKind, "KIND",
                                                          {}, {}}));
  return t;
}

LpTerm LpTerm::constant(std::string name) {
  return LpTerm(std::make_shared<const Node>(
      Node{Kind::kConst, std::move(name), {}, {}}));
}

LpTerm LpTerm::var(std::string name) {
  return LpTerm(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(name), {}, {}}));
}

LpTerm LpTerm::app(const LpTerm& fun, const LpTerm& arg) {
  return LpTerm(std::make_shared<const Node>(Node{Kind::kApp, "", fun, arg}));
}

LpTerm LpTerm::app(const LpTerm& fun, const std::vector<LpTerm>& args) {
  LpTerm t = fun;
  for (const LpTerm& a : args) t = app(t, a);
  return t;
}

LpTerm LpTerm::lam(std::string name, const LpTerm& annot, const LpTerm& body) {
  return LpTerm(std::make_shared<const Node>(
      Node{Kind::kLam, std::move(name), annot, body}));
}

LpTerm LpTerm::pi(std::string name, const LpTerm& domain,
                  const LpTerm& codomain) {
  return LpTerm(std::make_shared<const Node>(
      Node{Kind::kPi, std::move(name), domain, codomain}));
}

LpTerm LpTerm::arrow(const LpTerm& domain, const LpTerm& codomain) {
  return pi("_", domain, codomain);
}

LpTerm::Kind LpTerm::kind() const { return node_->kind; }
const std::string& LpTerm::name() const { return node_->name; }
const LpTerm& LpTerm::fun() const { return *node_->a; }
const LpTerm& LpTerm::arg() const { return *node_->b; }
const LpTerm& LpTerm::domain() const { return *node_->a; }
const LpTerm& LpTerm::body() const { return *node_->b; }

bool operator==(const LpTerm& a, const LpTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  switch (a.kind()) {
    case LpTerm::Kind::kApp:
    case LpTerm::Kind::kLam:
    case LpTerm::Kind::kPi:
      return *a.node_->a == *b.node_->a && *a.node_->b == *b.node_->b;
    default:
      return true;
  }
}

bool is_plain_lp_ident(std::string_view name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!head(name[0])) return false;
  for (char c : name)
    if (!head(c) && !(c >= '0' && c <= '9') && c != '\'') return false;
  return std::find(std::begin(kKeywords), std::end(kKeywords), name) ==
         std::end(kKeywords);
}

namespace {

std::string ident(const std::string& name) {
  if (is_plain_lp_ident(name) || (name.size() > 1 && name[0] == '$' &&
                                  is_plain_lp_ident(name.substr(1))))
    return name;
  return "{|" + name + "|}";
}

// Levels: 0 anywhere, 1 left of an arrow or head of an application,
// 2 argument of an application.
void print(const LpTerm& t, int level, std::string& out) {
  switch (t.kind()) {
    case LpTerm::Kind::kType:
      out += "TYPE";
      return;
    case LpTerm::Kind::kKind:
      out += "KIND";
      return;
    case LpTerm::Kind::kConst:
    case LpTerm::Kind::kVar:
      out += ident(t.name());
      return;
    case LpTerm::Kind::kApp:
      if (level >= 2) out += "(";
      print(t.fun(), 1, out);
      out += " ";
      print(t.arg(), 2, out);
      if (level >= 2) out += ")";
      return;
    case LpTerm::Kind::kLam:
    case LpTerm::Kind::kPi:
      if (level >= 1) out += "(";
      if (t.is_arrow()) {
        print(t.domain(), 1, out);
        out += " ";
        out += kArrow;
        out += " ";
      } else {
        out += t.kind() == LpTerm::Kind::kLam ? kLambda : kPi;
        out += " " + ident(t.name()) + " : ";
        print(t.domain(), 0, out);
        out += ", ";
      }
      print(t.body(), 0, out);
      if (level >= 1) out += ")";
      return;
  }
}

}  // namespace

std::string to_string(const LpTerm& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Entries.

LpEntry LpEntry::require(std::string module) {
  return LpEntry{Kind::kRequire, std::move(module), std::nullopt, std::nullopt};
}

LpEntry LpEntry::declaration(std::string name, LpTerm type) {
  return LpEntry{Kind::kDeclaration, std::move(name), std::move(type),
                 std::nullopt};
}

LpEntry LpEntry::definition(std::string name, LpTerm type, LpTerm value) {
  return LpEntry{Kind::kDefinition, std::move(name), std::move(type),
                 std::move(value)};
}

LpEntry LpEntry::rule(LpTerm lhs, LpTerm rhs) {
  return LpEntry{Kind::kRule, "", std::move(lhs), std::move(rhs)};
}

LpEntry LpEntry::assertion(std::string name, LpTerm type, LpTerm proof) {
  return LpEntry{Kind::kAssertion, std::move(name), std::move(type),
                 std::move(proof)};
}

bool operator==(const LpEntry& a, const LpEntry& b) {
  return a.kind == b.kind && a.name == b.name && a.type == b.type &&
         a.value == b.value;
}

std::string emit_lp_file(const LpFile& file) {
  std::string out;
  for (const std::string& h : file.header)
    out += h.empty() ? "//\n" : "// " + h + "\n";
  for (const LpEntry& e : file.entries) {
    switch (e.kind) {
      case LpEntry::Kind::kRequire:
        out += "require " + e.name + ";\n";
        continue;
      case LpEntry::Kind::kRule:
        out += "rule ";
        print(*e.type, 0, out);
        out += " ";
        out += kRewrite;
        out += " ";
        print(*e.value, 0, out);
        out += ";\n";
        continue;
      case LpEntry::Kind::kAssertion:
        out += "opaque ";
        break;
      default:
        break;
    }
    out += "symbol " + ident(e.name) + " : ";
    print(*e.type, 0, out);
    if (e.value) {
      out += " ";
      out += kDefEq;
      out += " ";
      print(*e.value, 0, out);
    }
    out += ";\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser.

namespace {

struct Token {
  enum class Kind {
    kIdent,
    kPatVar,
    kType,
    kLParen,
    kRParen,
    kColon,
    kComma,
    kSemi,
    kLambda,
    kPi,
    kArrow,
    kRewrite,
    kDefEq,
    kEnd,
  };
  Kind kind;
  std::string text;
  int line;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  // Leading "//" lines.
  std::vector<std::string> header() {
    std::vector<std::string> out;
    while (pos_ < s_.size() && s_.substr(pos_, 2) == "//") {
      size_t nl = s_.find('\n', pos_);
      if (nl == std::string_view::npos) nl = s_.size();
      std::string_view text = s_.substr(pos_ + 2, nl - pos_ - 2);
      if (!text.empty() && text.front() == ' ') text.remove_prefix(1);
      out.emplace_back(text);
      pos_ = std::min(nl + 1, s_.size());
      ++line_;
    }
    return out;
  }

  // Raw text up to the next ';' (module names).
  std::string raw_until_semi() {
    skip_space();
    size_t semi = s_.find(';', pos_);
    if (semi == std::string_view::npos) error("missing ';'");
    std::string text(s_.substr(pos_, semi - pos_));
    while (!text.empty() && text.back() == ' ') text.pop_back();
    if (text.empty() || text.find('\n') != std::string::npos)
      error("bad module name");
    pos_ = semi;
    return text;
  }

  Token next() {
    skip_space();
    int line = line_;
    if (pos_ >= s_.size()) return {Token::Kind::kEnd, "", line};
    auto starts = [&](std::string_view p) {
      return s_.substr(pos_, p.size()) == p;
    };
    struct Sym {
      std::string_view text;
      Token::Kind kind;
    };
    static const Sym kSyms[] = {
        {"(", Token::Kind::kLParen},   {")", Token::Kind::kRParen},
        {":", Token::Kind::kColon},    {",", Token::Kind::kComma},
        {";", Token::Kind::kSemi},     {kLambda, Token::Kind::kLambda},
        {kPi, Token::Kind::kPi},       {kArrow, Token::Kind::kArrow},
        {kRewrite, Token::Kind::kRewrite}, {kDefEq, Token::Kind::kDefEq},
    };
    for (const Sym& sym : kSyms) {
      if (starts(sym.text)) {
        pos_ += sym.text.size();
        return {sym.kind, std::string(sym.text), line};
      }
    }
    if (starts("{|")) {
      size_t end = s_.find("|}", pos_ + 2);
      if (end == std::string_view::npos) error("unterminated {| identifier");
      std::string text(s_.substr(pos_ + 2, end - pos_ - 2));
      if (text.empty() || text.find('\n') != std::string::npos)
        error("bad escaped identifier");
      pos_ = end + 2;
      return {Token::Kind::kIdent, text, line};
    }
    bool pattern = s_[pos_] == '$';
    size_t start = pattern ? pos_ + 1 : pos_;
    size_t end = start;
    auto ident_char = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
             (c >= '0' && c <= '9') || c == '_' || c == '\'';
    };
    while (end < s_.size() && ident_char(s_[end])) ++end;
    if (end == start || (s_[start] >= '0' && s_[start] <= '9'))
      error("unexpected character '" + std::string(1, s_[pos_]) + "'");
    std::string text(s_.substr(start, end - start));
    pos_ = end;
    if (pattern) return {Token::Kind::kPatVar, "$" + text, line};
    if (text == "TYPE") return {Token::Kind::kType, text, line};
    return {Token::Kind::kIdent, text, line};
  }

  [[noreturn]] void error(const std::string& msg) const {
    throw Error(ErrorCode::kSyntaxError, msg, line_);
  }

 private:
  void skip_space() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (s_.substr(pos_, 2) == "//") {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  size_t pos_ = 0;
  int line_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  LpFile file() {
    LpFile f;
    f.header = lex_.header();
    advance();
    while (tok_.kind != Token::Kind::kEnd) f.entries.push_back(entry());
    return f;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  [[noreturn]] void error(const std::string& msg) const {
    throw Error(ErrorCode::kSyntaxError, msg, tok_.line);
  }

  void expect(Token::Kind kind, const char* what) {
    if (tok_.kind != kind) error(std::string("expected ") + what);
    advance();
  }

  std::string expect_ident() {
    if (tok_.kind != Token::Kind::kIdent) error("expected identifier");
    std::string s = tok_.text;
    advance();
    return s;
  }

  LpEntry entry() {
    int line = tok_.line;
    LpEntry e = LpEntry::require("");
    if (tok_.kind != Token::Kind::kIdent) error("expected an entry");
    std::string kw = tok_.text;
    if (kw == "require") {
      std::string module = lex_.raw_until_semi();
      advance();
      expect(Token::Kind::kSemi, "';'");
      e = LpEntry::require(module);
    } else if (kw == "rule") {
      advance();
      in_rule_ = true;
      LpTerm lhs = term();
      expect(Token::Kind::kRewrite, "'\xE2\x86\xAA'");
      LpTerm rhs = term();
      in_rule_ = false;
      expect(Token::Kind::kSemi, "';'");
      e = LpEntry::rule(lhs, rhs);
    } else if (kw == "symbol" || kw == "opaque") {
      advance();
      bool opaque = kw == "opaque";
      if (opaque) {
        if (tok_.kind != Token::Kind::kIdent || tok_.text != "symbol")
          error("expected 'symbol'");
        advance();
      }
      std::string name = expect_ident();
      expect(Token::Kind::kColon, "':'");
      LpTerm ty = term();
      std::optional<LpTerm> value;
      if (tok_.kind == Token::Kind::kDefEq) {
        advance();
        value = term();
      }
      if (opaque && !value) error("opaque symbol needs a value");
      expect(Token::Kind::kSemi, "';'");
      if (opaque)
        e = LpEntry::assertion(name, ty, *value);
      else if (value)
        e = LpEntry::definition(name, ty, *value);
      else
        e = LpEntry::declaration(name, ty);
    } else {
      error("unknown entry keyword " + kw);
    }
    e.line = line;
    return e;
  }

  bool starts_atom() const {
    return tok_.kind == Token::Kind::kIdent ||
           tok_.kind == Token::Kind::kPatVar ||
           tok_.kind == Token::Kind::kType ||
           tok_.kind == Token::Kind::kLParen;
  }

  LpTerm term() {
    if (tok_.kind == Token::Kind::kLambda || tok_.kind == Token::Kind::kPi) {
      bool lam = tok_.kind == Token::Kind::kLambda;
      advance();
      std::string name = expect_ident();
      expect(Token::Kind::kColon, "':'");
      LpTerm annot = term();
      expect(Token::Kind::kComma, "','");
      scope_.push_back(name);
      LpTerm body = term();
      scope_.pop_back();
      return lam ? LpTerm::lam(name, annot, body)
                 : LpTerm::pi(name, annot, body);
    }
    LpTerm left = application();
    if (tok_.kind == Token::Kind::kArrow) {
      advance();
      scope_.push_back("_");
      LpTerm right = term();
      scope_.pop_back();
      return LpTerm::arrow(left, right);
    }
    return left;
  }

  LpTerm application() {
    if (!starts_atom()) error("expected a term");
    LpTerm t = atom();
    while (starts_atom()) t = LpTerm::app(t, atom());
    return t;
  }

  LpTerm atom() {
    Token t = tok_;
    advance();
    switch (t.kind) {
      case Token::Kind::kType:
        return LpTerm::sort_type();
      case Token::Kind::kPatVar:
        if (!in_rule_) error("pattern variable outside a rule");
        return LpTerm::var(t.text);
      case Token::Kind::kIdent:
        if (std::find(scope_.rbegin(), scope_.rend(), t.text) != scope_.rend())
          return LpTerm::var(t.text);
        return LpTerm::constant(t.text);
      case Token::Kind::kLParen: {
        LpTerm inner = term();
        expect(Token::Kind::kRParen, "')'");
        return inner;
      }
      default:
        error("expected a term");
    }
  }

  Lexer lex_;
  Token tok_{Token::Kind::kEnd, "", 1};
  std::vector<std::string> scope_;
  bool in_rule_ = false;
};

}  // namespace

LpFile parse_lp_file(std::string_view text) { return Parser(text).file(); }

void write_lp_file(const LpFile& file, const std::string& path) {
  std::string text = emit_lp_file(file);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(ErrorCode::kIo, "cannot open " + path + " for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) fail(ErrorCode::kIo, "write failed: " + path);
}

LpFile read_lp_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_lp_file(ss.str());
}

// ---------------------------------------------------------------------------
// Base signatures.

std::string_view base_module(KernelMode mode) {
  return mode == KernelMode::kMinimal ? kMinimalModule : kExtendedModule;
}

LpFile base_signature(KernelMode mode) {
  using T = LpTerm;
  auto c = [](const char* n) { return T::constant(n); };
  auto v = [](const char* n) { return T::var(n); };
  auto ap = [](const T& f, std::vector<T> args) { return T::app(f, args); };
  auto arrow = [](const T& a, const T& b) { return T::arrow(a, b); };
  T type = c("type"), boolean = c("bool");
  auto term = [&](const T& a) { return ap(c("term"), {a}); };
  auto proof = [&](const T& p) { return ap(c("proof"), {p}); };
  auto eq = [&](const T& a, const T& x, const T& y) {
    return ap(c("eq"), {a, x, y});
  };
  auto arr = [&](const T& a, const T& b) { return ap(c("arr"), {a, b}); };
  T a = v("a"), b = v("b");

  LpFile f;
  f.header = {std::string("holkit base signature: ") + std::string(mode_name(mode)) +
              " kernel"};
  auto& e = f.entries;
  e.push_back(LpEntry::declaration("type", T::sort_type()));
  e.push_back(LpEntry::declaration("bool", type));
  e.push_back(LpEntry::declaration("ind", type));
  e.push_back(LpEntry::declaration("arr", arrow(type, arrow(type, type))));
  e.push_back(LpEntry::declaration("term", arrow(type, T::sort_type())));
  e.push_back(LpEntry::rule(term(arr(v("$a"), v("$b"))),
                            arrow(term(v("$a")), term(v("$b")))));
  e.push_back(LpEntry::declaration(
      "eq", T::pi("a", type, arrow(term(a), arrow(term(a), term(boolean))))));
  e.push_back(LpEntry::declaration("proof", arrow(term(boolean), T::sort_type())));

  T x = v("x"), y = v("y"), z = v("z"), f_ = v("f"), g = v("g"), p = v("p"),
    q = v("q"), t = v("t");
  e.push_back(LpEntry::declaration(
      "REFL", T::pi("a", type, T::pi("t", term(a), proof(eq(a, t, t))))));
  e.push_back(LpEntry::declaration(
      "TRANS",
      T::pi("a", type,
            T::pi("x", term(a),
                  T::pi("y", term(a),
                        T::pi("z", term(a),
                              arrow(proof(eq(a, x, y)),
                                    arrow(proof(eq(a, y, z)),
                                          proof(eq(a, x, z))))))))));
  e.push_back(LpEntry::declaration(
      "MK_COMB",
      T::pi("a", type,
            T::pi("b", type,
                  T::pi("f", term(arr(a, b)),
                        T::pi("g", term(arr(a, b)),
                              T::pi("x", term(a),
                                    T::pi("y", term(a),
                                          arrow(proof(eq(arr(a, b), f_, g)),
                                                arrow(proof(eq(a, x, y)),
                                                      proof(eq(
                                                          b, T::app(f_, x),
                                                          T::app(g, y)))))))))))));
  e.push_back(LpEntry::declaration(
      "ABS",
      T::pi("a", type,
            T::pi("b", type,
                  T::pi("f", term(arr(a, b)),
                        T::pi("g", term(arr(a, b)),
                              arrow(T::pi("x", term(a),
                                          proof(eq(b, T::app(f_, x),
                                                   T::app(g, x)))),
                                    proof(eq(arr(a, b), f_, g)))))))));
  e.push_back(LpEntry::declaration(
      "EQ_MP",
      T::pi("p", term(boolean),
            T::pi("q", term(boolean),
                  arrow(proof(eq(boolean, p, q)),
                        arrow(proof(p), proof(q)))))));
  e.push_back(LpEntry::declaration(
      "DEDUCT_ANTISYM",
      T::pi("p", term(boolean),
            T::pi("q", term(boolean),
                  arrow(arrow(proof(q), proof(p)),
                        arrow(arrow(proof(p), proof(q)),
                              proof(eq(boolean, p, q))))))));
  if (mode == KernelMode::kMinimal) return f;

  auto imp = [&](const T& l, const T& r) { return ap(c("imp"), {l, r}); };
  e.push_back(LpEntry::declaration(
      "imp", arrow(term(boolean), arrow(term(boolean), term(boolean)))));
  e.push_back(LpEntry::declaration(
      "forall",
      T::pi("a", type, arrow(term(arr(a, boolean)), term(boolean)))));
  e.push_back(LpEntry::declaration(
      "MP", T::pi("p", term(boolean),
                  T::pi("q", term(boolean),
                        arrow(proof(imp(p, q)),
                              arrow(proof(p), proof(q)))))));
  e.push_back(LpEntry::declaration(
      "DISCH", T::pi("p", term(boolean),
                     T::pi("q", term(boolean),
                           arrow(arrow(proof(p), proof(q)),
                                 proof(imp(p, q)))))));
  T pred = arrow(term(a), term(boolean));
  e.push_back(LpEntry::declaration(
      "GEN",
      T::pi("a", type,
            T::pi("p", pred,
                  arrow(T::pi("x", term(a), proof(T::app(p, x))),
                        proof(ap(c("forall"),
                                 {a, T::lam("x", term(a),
                                            T::app(p, x))})))))));
  T u = v("u");
  e.push_back(LpEntry::declaration(
      "SPEC",
      T::pi("a", type,
            T::pi("t", pred,
                  T::pi("u", term(a),
                        arrow(proof(ap(c("forall"), {a, t})),
                              proof(T::app(t, u))))))));
  return f;
}

}  // namespace holkit
