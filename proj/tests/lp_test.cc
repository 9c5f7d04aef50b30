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

#include "holkit/lp.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "holkit/bootstrap.h"
#include "holkit/lp_check.h"
#include "holkit/lp_translate.h"
#include "lp_mutations.h"

namespace holkit {
namespace {

using T = LpTerm;

template <typename F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error raised";
  return Error(ErrorCode::kIo, "none");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

T c(const std::string& n) { return T::constant(n); }
T v(const std::string& n) { return T::var(n); }
T term(const T& a) { return T::app(c("term"), a); }
T proof(const T& p) { return T::app(c("proof"), p); }
T arr(const T& a, const T& b) { return T::app(c("arr"), {a, b}); }
T eq(const T& a, const T& x, const T& y) { return T::app(c("eq"), {a, x, y}); }

Term bv(const std::string& n) { return Term::var(n, bool_ty()); }

// Strips leading lambdas.
const T& body_of(const T& t) {
  return t.kind() == T::Kind::kLam ? body_of(t.body()) : t;
}

const T& head_of(const T& t) {
  return t.kind() == T::Kind::kApp ? head_of(t.fun()) : t;
}

bool mentions_const(const T& t, const std::string& name) {
  switch (t.kind()) {
    case T::Kind::kConst:
      return t.name() == name;
    case T::Kind::kApp:
      return mentions_const(t.fun(), name) || mentions_const(t.arg(), name);
    case T::Kind::kLam:
    case T::Kind::kPi:
      return mentions_const(t.domain(), name) || mentions_const(t.body(), name);
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Concrete syntax.

TEST(LpSyntaxTest, PrintsBindersArrowsAndApplications) {
  EXPECT_EQ(to_string(T::arrow(term(c("bool")), term(c("bool")))),
            "term bool → term bool");
  EXPECT_EQ(to_string(T::arrow(T::arrow(c("a"), c("b")), c("c"))),
            "(a → b) → c");
  EXPECT_EQ(to_string(T::pi("x", term(c("bool")), proof(v("x")))),
            "Π x : term bool, proof x");
  EXPECT_EQ(to_string(T::app(c("f"), T::lam("x", c("A"), v("x")))),
            "f (λ x : A, x)");
  EXPECT_EQ(to_string(T::app(c("f"), {T::app(c("g"), c("a")), c("b")})),
            "f (g a) b");
  EXPECT_EQ(to_string(c("==>")), "{|==>|}");
  EXPECT_EQ(to_string(c("rule")), "{|rule|}");
}

TEST(LpSyntaxTest, ParsesEveryEntryKind) {
  const std::string text =
      "// head one\n"
      "// head two\n"
      "require holkit.extended;\n"
      "symbol c : term bool;\n"
      "symbol {|/\\|} : term bool ≔ c;\n"
      "rule term (arr $a $b) ↪ term $a → term $b;\n"
      "opaque symbol t : proof c → proof c ≔ λ h : proof c, h;\n";
  LpFile f = parse_lp_file(text);
  EXPECT_EQ(f.header, (std::vector<std::string>{"head one", "head two"}));
  ASSERT_EQ(f.entries.size(), 5u);
  EXPECT_EQ(f.entries[0], LpEntry::require("holkit.extended"));
  EXPECT_EQ(f.entries[1], LpEntry::declaration("c", term(c("bool"))));
  EXPECT_EQ(f.entries[2], LpEntry::definition("/\\", term(c("bool")), c("c")));
  EXPECT_EQ(f.entries[3],
            LpEntry::rule(term(arr(v("$a"), v("$b"))),
                          T::arrow(term(v("$a")), term(v("$b")))));
  EXPECT_EQ(f.entries[4].kind, LpEntry::Kind::kAssertion);
  EXPECT_EQ(*f.entries[4].value, T::lam("h", proof(c("c")), v("h")));
  for (size_t i = 0; i < f.entries.size(); ++i)
    EXPECT_EQ(f.entries[i].line, static_cast<int>(i) + 3);
  EXPECT_EQ(emit_lp_file(f), text);
}

TEST(LpSyntaxTest, SyntaxErrorsCarryTheirLine) {
  Error e =
      error_of([] { parse_lp_file("symbol a : TYPE;\nsymbol b TYPE;\n"); });
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(e.line(), 2);
  e = error_of([] { parse_lp_file("symbol a : TYPE\n"); });
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  e = error_of([] { parse_lp_file("\n\nsymbol a : $x;\n"); });
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(e.line(), 3);
  e = error_of([] { parse_lp_file("frobnicate a;\n"); });
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  e = error_of([] { parse_lp_file("symbol a : (b;\n"); });
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
}

class TermFuzz {
 public:
  explicit TermFuzz(uint64_t seed) : rng_(seed) {}

  T term(int depth) {
    int pick = uniform(0, depth <= 0 ? 1 : 5);
    switch (pick) {
      case 0:
        return c(pool(consts_));
      case 1:
        if (!scope_.empty()) return v(scope_[uniform(0, scope_.size() - 1)]);
        return uniform(0, 3) ? c(pool(consts_)) : T::sort_type();
      case 2:
      case 3:
        return T::app(term(depth - 1), term(depth - 1));
      case 4:
        return uniform(0, 1) ? binder(depth, true) : binder(depth, false);
      default:
        return T::arrow(term(depth - 1), term(depth - 1));
    }
  }

  LpFile file() {
    LpFile f;
    int lines = uniform(0, 3);
    for (int i = 0; i < lines; ++i) f.header.push_back("note " + pool(consts_));
    int n = uniform(0, 8);
    for (int i = 0; i < n; ++i) {
      switch (uniform(0, 3)) {
        case 0:
          f.entries.push_back(LpEntry::declaration(pool(consts_), term(4)));
          break;
        case 1:
          f.entries.push_back(
              LpEntry::definition(pool(consts_), term(3), term(4)));
          break;
        case 2:
          f.entries.push_back(
              LpEntry::assertion(pool(consts_), term(3), term(4)));
          break;
        default: {
          T lhs = T::app(c(pool(consts_)), {v("$x"), T::app(c("f"), v("$y"))});
          f.entries.push_back(LpEntry::rule(lhs, T::app(v("$y"), v("$x"))));
        }
      }
    }
    return f;
  }

 private:
  T binder(int depth, bool lam) {
    std::string x = pool(binders_);
    T dom = term(depth - 1);
    scope_.push_back(x);
    T body = term(depth - 1);
    scope_.pop_back();
    return lam ? T::lam(x, dom, body) : T::pi(x, dom, body);
  }

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  std::string pool(const std::vector<std::string>& names) {
    return names[uniform(0, static_cast<int>(names.size()) - 1)];
  }

  std::mt19937_64 rng_;
  std::vector<std::string> scope_;
  std::vector<std::string> consts_ = {"f",   "g",   "bool", "a'",     "C_1",
                                      "/\\", "==>", "x y",  "symbol", "é"};
  std::vector<std::string> binders_ = {"x", "y", "z", "h_1", "p'"};
};

TEST(LpSyntaxTest, RandomFilesRoundTrip) {
  TermFuzz fuzz(7);
  for (int i = 0; i < 500; ++i) {
    LpFile f = fuzz.file();
    std::string text = emit_lp_file(f);
    LpFile back = parse_lp_file(text);
    ASSERT_EQ(back, f) << text;
    ASSERT_EQ(emit_lp_file(back), text);
  }
}

TEST(LpSyntaxTest, ReadsWhatItWrites) {
  std::string path = ::testing::TempDir() + "/holkit_lp_io.lp";
  LpFile f = base_signature(KernelMode::kExtended);
  write_lp_file(f, path);
  EXPECT_EQ(read_lp_file(path), f);
  std::remove(path.c_str());
  EXPECT_EQ(error_of([] { read_lp_file("/nonexistent/x.lp"); }).code(),
            ErrorCode::kIo);
}

class GoldenTest : public ::testing::TestWithParam<KernelMode> {};

TEST_P(GoldenTest, BaseSignatureMatchesDocs) {
  std::string path = std::string(HOLKIT_DOCS_DIR) + "/sig-" +
                     std::string(mode_name(GetParam())) + ".lp";
  std::string golden = slurp(path);
  ASSERT_FALSE(golden.empty()) << path;
  EXPECT_EQ(emit_lp_file(base_signature(GetParam())), golden);
  EXPECT_EQ(emit_lp_file(parse_lp_file(golden)), golden);
  EXPECT_NO_THROW(check_lp_file(parse_lp_file(golden)));
}

INSTANTIATE_TEST_SUITE_P(Modes, GoldenTest,
                         ::testing::Values(KernelMode::kMinimal,
                                           KernelMode::kExtended),
                         [](const auto& info) {
                           return std::string(mode_name(info.param));
                         });

TEST(BaseSignatureTest, ExtendedConstantTypes) {
  LpFile f = base_signature(KernelMode::kExtended);
  std::map<std::string, std::string> types;
  for (const LpEntry& e : f.entries)
    if (e.type) types[e.name] = to_string(*e.type);
  EXPECT_EQ(types["imp"], "term bool → term bool → term bool");
  EXPECT_EQ(types["forall"], "Π a : type, term (arr a bool) → term bool");
  EXPECT_EQ(types["MP"],
            "Π p : term bool, Π q : term bool, proof (imp p q) → proof p → "
            "proof q");
  EXPECT_EQ(types["DISCH"],
            "Π p : term bool, Π q : term bool, (proof p → proof q) → "
            "proof (imp p q)");
  EXPECT_EQ(types["GEN"],
            "Π a : type, Π p : term a → term bool, (Π x : term a, proof (p "
            "x)) → proof (forall a (λ x : term a, p x))");
  EXPECT_EQ(types["SPEC"],
            "Π a : type, Π t : term a → term bool, Π u : term a, proof "
            "(forall a t) → proof (t u)");
  LpFile m = base_signature(KernelMode::kMinimal);
  for (const LpEntry& e : m.entries)
    EXPECT_TRUE(e.name != "imp" && e.name != "MP" && e.name != "forall");
}

// ---------------------------------------------------------------------------
// Checker.

TEST(LpCheckTest, WhnfUnfoldsTheTermRule) {
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  EXPECT_EQ(sig.whnf(term(arr(c("bool"), c("bool")))),
            T::arrow(term(c("bool")), term(c("bool"))));
  EXPECT_EQ(sig.last_steps(), 1u);
  // Only the head is reduced.
  T nested = term(arr(arr(c("bool"), c("bool")), c("ind")));
  EXPECT_EQ(sig.whnf(nested),
            T::arrow(term(arr(c("bool"), c("bool"))), term(c("ind"))));
}

TEST(LpCheckTest, WhnfContractsRedexes) {
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  sig.declare("c", term(c("bool")));
  T id = T::lam("x", term(c("bool")), v("x"));
  EXPECT_EQ(sig.whnf(T::app(id, c("c"))), c("c"));
  T k = T::lam("x", term(c("bool")), T::lam("y", term(c("bool")), v("x")));
  EXPECT_EQ(sig.whnf(T::app(k, {c("c"), T::app(id, c("c"))})), c("c"));
}

TEST(LpCheckTest, WhnfIsIdempotent) {
  LpSignature sig = LpSignature::base(KernelMode::kExtended);
  sig.define("K", T::arrow(term(c("bool")), term(c("bool"))),
             T::lam("x", term(c("bool")), v("x")));
  sig.declare("c", term(c("bool")));
  std::vector<T> samples = {
      term(arr(c("bool"), arr(c("ind"), c("bool")))),
      T::app(c("K"), c("c")),
      T::app(T::lam("f", T::arrow(term(c("bool")), term(c("bool"))),
                    T::app(v("f"), c("c"))),
             c("K")),
      proof(eq(c("bool"), c("c"), c("c"))),
      T::app(c("forall"), {c("bool"), c("K")}),
      T::pi("x", term(c("bool")), proof(v("x"))),
  };
  for (const T& t : samples) {
    T w = sig.whnf(t);
    EXPECT_EQ(sig.whnf(w), w) << to_string(t);
  }
}

TEST(LpCheckTest, ModusPonensChecksAndSwappedArgumentsDoNot) {
  LpSignature sig = LpSignature::base(KernelMode::kExtended);
  sig.declare("p", term(c("bool")));
  sig.declare("q", term(c("bool")));
  sig.declare("d1", proof(T::app(c("imp"), {c("p"), c("q")})));
  sig.declare("d2", proof(c("p")));
  T good = T::app(c("MP"), {c("p"), c("q"), c("d1"), c("d2")});
  EXPECT_NO_THROW(sig.check(good, proof(c("q"))));
  EXPECT_EQ(sig.infer(good), proof(c("q")));
  T bad = T::app(c("MP"), {c("p"), c("q"), c("d2"), c("d1")});
  Error e = error_of([&] { sig.check(bad, proof(c("q"))); });
  EXPECT_EQ(e.code(), ErrorCode::kTypeError);
  EXPECT_NE(std::string(e.what()).find("MP"), std::string::npos) << e.what();
  e = error_of([&] { sig.check(good, proof(c("p"))); });
  EXPECT_EQ(e.code(), ErrorCode::kTypeError);
}

TEST(LpCheckTest, NamesMustBeDeclaredOnce) {
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  EXPECT_EQ(error_of([&] { sig.infer(c("nope")); }).code(),
            ErrorCode::kUnboundName);
  EXPECT_EQ(error_of([&] { sig.declare("bool", c("type")); }).code(),
            ErrorCode::kNameClash);
  EXPECT_TRUE(sig.declares("REFL"));
  EXPECT_FALSE(sig.declares("MP"));
}

TEST(LpCheckTest, DeclarationsMustBeTypes) {
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  EXPECT_EQ(error_of([&] { sig.declare("x", c("bool")); }).code(),
            ErrorCode::kTypeError);
  EXPECT_EQ(
      error_of([&] { sig.define("y", term(c("bool")), c("ind")); }).code(),
      ErrorCode::kTypeError);
}

TEST(LpCheckTest, LambdaNeedsAMatchingDomain) {
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  T ty = T::pi("x", term(c("bool")), term(c("bool")));
  EXPECT_NO_THROW(sig.check(T::lam("y", term(c("bool")), v("y")), ty));
  EXPECT_EQ(error_of([&] {
              sig.check(T::lam("y", term(c("ind")), v("y")), ty);
            }).code(),
            ErrorCode::kTypeError);
  // term (arr bool bool) and term bool → term bool are the same type.
  EXPECT_NO_THROW(sig.check(T::lam("y", term(c("bool")), v("y")),
                            term(arr(c("bool"), c("bool")))));
}

TEST(LpCheckTest, ConversionIncludesEta) {
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  sig.declare("f", term(arr(c("bool"), c("bool"))));
  EXPECT_TRUE(sig.convertible(
      T::lam("x", term(c("bool")), T::app(c("f"), v("x"))), c("f")));
  EXPECT_FALSE(sig.convertible(c("f"), c("bool")));
}

TEST(LpCheckTest, LoopingRulesExhaustTheBudget) {
  LpCheckOptions opts;
  opts.step_budget = 1000;
  LpSignature sig = LpSignature::base(KernelMode::kMinimal, opts);
  sig.declare("loop", term(c("bool")));
  sig.add_rule(c("loop"), c("loop"));
  Error e = error_of([&] { sig.whnf(c("loop")); });
  EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  LpFile f = parse_lp_file(
      "require holkit.minimal;\n"
      "symbol T : term bool;\n"
      "symbol loop : term bool;\n"
      "rule loop ↪ loop;\n"
      "opaque symbol t : proof (eq bool loop T) ≔ REFL bool T;\n");
  e = error_of([&] { check_lp_file(f, opts); });
  EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  EXPECT_EQ(e.line(), 5);
}

TEST(LpCheckTest, StepBudgetComesFromTheEnvironment) {
  ::setenv("HOLKIT_STEP_BUDGET", "1234", 1);
  EXPECT_EQ(default_check_options().step_budget, 1234u);
  ::setenv("HOLKIT_STEP_BUDGET", "junk", 1);
  EXPECT_EQ(default_check_options().step_budget, 10'000'000u);
  ::unsetenv("HOLKIT_STEP_BUDGET");
  EXPECT_EQ(default_check_options().step_budget, 10'000'000u);
}

TEST(LpCheckTest, FileErrorsAreLocated) {
  LpFile f = parse_lp_file(
      "require holkit.minimal;\n"
      "symbol c : term bool;\n"
      "\n"
      "opaque symbol bad : proof c ≔ REFL bool c;\n");
  Error e = error_of([&] { check_lp_file(f); });
  EXPECT_EQ(e.code(), ErrorCode::kTypeError);
  EXPECT_EQ(e.line(), 4);
  e = error_of(
      [] { check_lp_file(parse_lp_file("require holkit.nothing;\n")); });
  EXPECT_EQ(e.line(), 1);
  e = error_of([] { check_lp_file(parse_lp_file("symbol c : term bool;\n")); });
  EXPECT_EQ(e.code(), ErrorCode::kUnboundName);
}

TEST(LpCheckTest, AssertionsBecomeUsable) {
  LpFile f = parse_lp_file(
      "require holkit.minimal;\n"
      "symbol c : term bool;\n"
      "opaque symbol r : proof (eq bool c c) ≔ REFL bool c;\n"
      "opaque symbol s : proof (eq bool c c) ≔ TRANS bool c c c r r;\n");
  LpCheckStats st = check_lp_file(f);
  EXPECT_EQ(st.entries, 4u);
  EXPECT_EQ(st.assertions, 2u);
}

// ---------------------------------------------------------------------------
// Translation.

TEST(LpTranslateTest, Types) {
  Type a = Type::var("A");
  EXPECT_EQ(translate_type(bool_ty()), c("bool"));
  EXPECT_EQ(translate_type(ind_ty()), c("ind"));
  EXPECT_EQ(translate_type(fun_ty(bool_ty(), bool_ty())),
            arr(c("bool"), c("bool")));
  EXPECT_EQ(translate_type(a), v("A"));
  EXPECT_EQ(
      error_of([] { translate_type(Type::app("list", {bool_ty()})); }).code(),
      ErrorCode::kUnknownTypeOp);
}

TEST(LpTranslateTest, ExtendedConnectives) {
  Kernel k(KernelMode::kExtended);
  LpTranslator tr(k);
  EXPECT_EQ(tr.translate_term(mk_imp(bv("p"), bv("q"))),
            T::app(c("imp"), {v("p"), v("q")}));
  Type alpha = Type::var("A");
  Var x{"x", alpha};
  Term all = mk_forall(x, mk_eq(Term::var(x), Term::var(x)));
  EXPECT_EQ(tr.translate_term(all),
            T::app(c("forall"), {v("A"), T::lam("x", term(v("A")),
                                                eq(v("A"), v("x"), v("x")))}));
  EXPECT_EQ(to_string(tr.translate_term(all)),
            "forall A (λ x : term A, eq A x x)");
  EXPECT_EQ(tr.translate_term(Term::abs(Var{"p", bool_ty()}, bv("p"))),
            T::lam("p", term(c("bool")), v("p")));
}

TEST(LpTranslateTest, MinimalKernelHasNoPrimitiveImplication) {
  Kernel k(KernelMode::kMinimal);
  LpTranslator tr(k);
  EXPECT_EQ(
      error_of([&] { tr.translate_term(mk_imp(bv("p"), bv("q"))); }).code(),
      ErrorCode::kUnregisteredConstant);
}

TEST(LpTranslateTest, AssumeProvesItself) {
  Kernel k(KernelMode::kMinimal);
  LpTranslator tr(k);
  auto t = tr.translate_theorem(k.assume(bv("p")));
  EXPECT_EQ(to_string(t.type), "Π p : term bool, proof p → proof p");
  EXPECT_EQ(to_string(t.proof), "λ p : term bool, λ h : proof p, h");
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  EXPECT_NO_THROW(sig.check(t.proof, t.type));
}

TEST(LpTranslateTest, ModusPonensUsesMP) {
  Kernel k(KernelMode::kExtended);
  Term p = bv("p"), q = bv("q");
  Theorem th = k.mp(k.assume(mk_imp(p, q)), k.assume(p));
  LpTranslator tr(k);
  auto t = tr.translate_theorem(th);
  EXPECT_EQ(head_of(body_of(t.proof)), c("MP"));
  EXPECT_EQ(to_string(t.type),
            "Π p : term bool, Π q : term bool, proof p → proof (imp p q) → "
            "proof q");
  LpSignature sig = LpSignature::base(KernelMode::kExtended);
  EXPECT_NO_THROW(sig.check(t.proof, t.type));
}

TEST(LpTranslateTest, TruthDefinitionRewritesToItsBody) {
  Session s(KernelMode::kMinimal);
  Theorem th = find_corpus_entry("truth")->build(s.logic());
  LpFile f = translate_theorems(s.kernel(), {{"truth", th}});
  ASSERT_GE(f.entries.size(), 3u);
  EXPECT_EQ(f.entries[0], LpEntry::require(kMinimalModule));
  const LpEntry& def = f.entries[1];
  EXPECT_EQ(def.kind, LpEntry::Kind::kDefinition);
  EXPECT_EQ(def.name, "T");
  T id = T::lam("p", term(c("bool")), v("p"));
  EXPECT_EQ(*def.value, eq(arr(c("bool"), c("bool")), id, id));
  EXPECT_NO_THROW(check_lp_file(f));

  // The defining theorem is a REFL.
  const ConstDefinition* cd = s.kernel().find_definition("T");
  ASSERT_NE(cd, nullptr);
  LpTranslator tr(s.kernel());
  LpEntry again = tr.translate_definition(*cd);
  EXPECT_EQ(again, def);
  auto t = tr.translate_theorem(cd->theorem);
  EXPECT_EQ(head_of(t.proof), c("REFL"));
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  sig.define(again.name, *again.type, *again.value);
  EXPECT_NO_THROW(sig.check(t.proof, t.type));

  // A second definition of the same name is rejected.
  LpFile dup = f;
  dup.entries.insert(dup.entries.begin() + 2, def);
  EXPECT_EQ(error_of([&] { check_lp_file(dup); }).code(),
            ErrorCode::kNameClash);
}

TEST(LpTranslateTest, PolymorphicDefinitionsTakeTypeArguments) {
  Kernel k(KernelMode::kMinimal);
  Type alpha = Type::var("A");
  Var x{"x", alpha};
  Term idt = Term::abs(x, Term::var(x));
  Theorem d = k.define_const("I", idt);
  LpTranslator tr(k);
  LpEntry e = tr.translate_definition(*k.find_definition("I"));
  EXPECT_EQ(to_string(*e.type), "Π A : type, term (arr A A)");
  EXPECT_EQ(to_string(*e.value), "λ A : type, λ x : term A, x");
  Theorem inst = k.inst_type(TypeSubstitution({{"A", bool_ty()}}), d);
  auto t = tr.translate_theorem(inst);
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  sig.define(e.name, *e.type, *e.value);
  EXPECT_NO_THROW(sig.check(t.proof, t.type));
  EXPECT_EQ(to_string(t.type),
            "proof (eq (arr bool bool) (I bool) (λ x : term bool, x))");
}

TEST(LpTranslateTest, TypeInstantiationMovesVariables) {
  Kernel k(KernelMode::kMinimal);
  Type alpha = Type::var("A");
  Term x = Term::var("x", alpha);
  Term xb = Term::var("x", bool_ty());
  Theorem th = k.assume(mk_eq(x, x));
  Theorem i = k.inst_type(TypeSubstitution({{"A", bool_ty()}}), th);
  // Both x : A and x : bool may occur together.
  Theorem both = k.deduct_antisym(k.assume(mk_eq(xb, xb)), i);
  LpTranslator tr(k);
  for (const Theorem& t0 : {i, both}) {
    auto t = tr.translate_theorem(t0);
    LpSignature sig = LpSignature::base(KernelMode::kMinimal);
    EXPECT_NO_THROW(sig.check(t.proof, t.type)) << to_string(t.proof);
  }
}

TEST(LpTranslateTest, AxiomsAreDeclared) {
  Kernel k(KernelMode::kMinimal);
  Type alpha = Type::var("A");
  Var f{"f", fun_ty(alpha, bool_ty())};
  Var x{"x", alpha};
  Term eta =
      mk_eq(Term::abs(x, Term::app(Term::var(f), Term::var(x))), Term::var(f));
  Theorem ax = k.new_axiom(eta);
  Theorem inst = k.inst_type(TypeSubstitution({{"A", ind_ty()}}), ax);
  LpFile file = translate_theorems(k, {{"ax", ax}, {"inst", inst}});
  ASSERT_EQ(file.entries.size(), 4u);
  EXPECT_EQ(file.entries[1].name, "axiom_1");
  EXPECT_EQ(to_string(*file.entries[1].type),
            "Π A : type, Π f : term (arr A bool), proof (eq (arr A bool) (λ "
            "x : term A, f x) f)");
  EXPECT_NO_THROW(check_lp_file(file));
}

TEST(LpTranslateTest, TypeDefinitionsAreUnsupported) {
  Kernel k(KernelMode::kMinimal);
  Var x{"x", bool_ty()};
  Term y = bv("y");
  Term pred = Term::abs(x, mk_eq(Term::var(x), Term::var(x)));
  Theorem bth = k.beta(Term::app(pred, y));
  Theorem sym =
      k.eq_mp(k.mk_comb(k.mk_comb(k.refl(bth.concl().fun().fun()), bth),
                        k.refl(Term::app(pred, y))),
              k.refl(Term::app(pred, y)));
  Theorem witness = k.eq_mp(sym, k.refl(y));
  Kernel::TypeDefResult td =
      k.define_type_op("unit", "mk", "dest", {}, witness);
  LpTranslator tr(k);
  EXPECT_NO_THROW(tr.translate_theorem(witness));
  EXPECT_EQ(error_of([&] { tr.translate_theorem(td.abs_rep); }).code(),
            ErrorCode::kUnsupportedTraceNode);
}

class CorpusLpTest : public ::testing::TestWithParam<KernelMode> {};

TEST_P(CorpusLpTest, EveryEntryChecks) {
  for (const CorpusEntry& e : corpus()) {
    Session s(GetParam());
    Theorem th = e.build(s.logic());
    LpFile f = translate_theorems(s.kernel(), {{e.name, th}});
    std::string text = emit_lp_file(f);
    EXPECT_EQ(emit_lp_file(translate_theorems(s.kernel(), {{e.name, th}})),
              text);
    LpFile parsed = parse_lp_file(text);
    EXPECT_EQ(parsed, f);
    EXPECT_NO_THROW(check_lp_file(parsed)) << e.name;

    // No dedicated beta constant appears anywhere.
    for (const LpEntry& entry : f.entries) {
      if (entry.type) EXPECT_FALSE(mentions_const(*entry.type, "BETA"));
      if (entry.value) EXPECT_FALSE(mentions_const(*entry.value, "BETA"));
    }
  }
}

TEST_P(CorpusLpTest, AllEntriesInOneFile) {
  Session s(GetParam());
  std::vector<std::pair<std::string, Theorem>> all;
  for (const CorpusEntry& e : corpus())
    all.emplace_back(e.name, e.build(s.logic()));
  LpFile f = translate_theorems(s.kernel(), all);
  LpCheckStats st = check_lp_file(f);
  EXPECT_EQ(st.assertions, corpus().size());
}

TEST_P(CorpusLpTest, WhnfPreservesTyping) {
  for (const char* name : {"beta_id", "truth", "conj", "mp", "gen"}) {
    Session s(GetParam());
    Theorem th = find_corpus_entry(name)->build(s.logic());
    LpFile f = translate_theorems(s.kernel(), {{name, th}});
    LpSignature sig = LpSignature::base(GetParam());
    for (size_t i = 1; i + 1 < f.entries.size(); ++i) {
      const LpEntry& e = f.entries[i];
      if (e.kind == LpEntry::Kind::kDefinition)
        sig.define(e.name, *e.type, *e.value);
      else
        sig.declare(e.name, *e.type);
    }
    const LpEntry& a = f.entries.back();
    // Apply the proof to fresh constants so that whnf has work to do.
    T proof = *a.value, type = *a.type;
    int n = 0;
    while (type.kind() == T::Kind::kPi) {
      std::string k = "k" + std::to_string(n++);
      sig.declare(k, type.domain());
      proof = T::app(proof, c(k));
      type = sig.whnf(
          T::app(T::lam(type.name(), type.domain(), type.body()), c(k)));
    }
    EXPECT_NO_THROW(sig.check(proof, type)) << name;
    EXPECT_NO_THROW(sig.check(sig.whnf(proof), type)) << name;
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, CorpusLpTest,
                         ::testing::Values(KernelMode::kMinimal,
                                           KernelMode::kExtended),
                         [](const auto& info) {
                           return std::string(mode_name(info.param));
                         });

TEST(LpCorpusTest, BetaNodesBecomeReflexivity) {
  Kernel k(KernelMode::kMinimal);
  Var x{"x", bool_ty()};
  Theorem th = k.beta(Term::app(Term::abs(x, Term::var(x)), bv("y")));
  LpTranslator tr(k);
  auto t = tr.translate_theorem(th);
  EXPECT_EQ(to_string(t.proof), "λ y : term bool, REFL bool y");
  LpSignature sig = LpSignature::base(KernelMode::kMinimal);
  EXPECT_NO_THROW(sig.check(t.proof, t.type));
}

// ---------------------------------------------------------------------------
// Mutations.

TEST(LpMutationTest, AllShippedMutationsAreRejected) {
  std::vector<testing::LpMutation> ms = testing::shipped_lp_mutations();
  ASSERT_EQ(ms.size(), 20u);
  std::set<std::string> names;
  for (const testing::LpMutation& m : ms) {
    names.insert(m.name);
    EXPECT_NE(m.mutated, m.original) << m.name;
    EXPECT_NO_THROW(check_lp_file(m.original)) << m.name;
    Error e = error_of([&] { check_lp_file(m.mutated); });
    EXPECT_EQ(e.code(), ErrorCode::kTypeError) << m.name << ": " << e.what();
  }
  EXPECT_EQ(names.size(), 20u);
}

TEST(LpMutationTest, KindsAreBalanced) {
  std::map<testing::MutationKind, int> counts;
  for (const testing::LpMutation& m : testing::shipped_lp_mutations())
    ++counts[m.kind];
  EXPECT_EQ(counts[testing::MutationKind::kArgSwap], 7);
  EXPECT_EQ(counts[testing::MutationKind::kTypeSwap], 7);
  EXPECT_EQ(counts[testing::MutationKind::kRename], 6);
}

TEST(LpMutationTest, MutationsSurviveTheTextFormat) {
  for (const testing::LpMutation& m : testing::shipped_lp_mutations()) {
    LpFile parsed = parse_lp_file(emit_lp_file(m.mutated));
    Error e = error_of([&] { check_lp_file(parsed); });
    EXPECT_EQ(e.code(), ErrorCode::kTypeError) << m.name;
    EXPECT_EQ(e.line(), static_cast<int>(parsed.entries.back().line));
  }
}

}  // namespace
}  // namespace holkit
