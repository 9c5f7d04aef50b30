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

#include <gtest/gtest.h>

#include <map>
#include <optional>

#include "term_gen.h"

namespace holkit {
namespace {

using testing::DbTerm;
using testing::TermGen;
using testing::db_inst;
using testing::db_subst;
using testing::to_db;

Type A() { return Type::var("A"); }
Type B() { return Type::var("B"); }
Term v(const std::string& n, const Type& ty) { return Term::var(n, ty); }

TEST(TypeTest, StructuralEquality) {
  EXPECT_EQ(fun_ty(A(), bool_ty()), fun_ty(A(), bool_ty()));
  EXPECT_NE(fun_ty(A(), bool_ty()), fun_ty(bool_ty(), A()));
  EXPECT_TRUE(is_fun_ty(fun_ty(A(), B())));
  EXPECT_FALSE(is_fun_ty(bool_ty()));
  EXPECT_EQ(to_string(fun_ty(fun_ty(A(), B()), A())), "(A -> B) -> A");
}

TEST(TypeTest, TypeVarsInFirstOccurrenceOrder) {
  Type ty = fun_ty(B(), fun_ty(A(), B()));
  EXPECT_EQ(type_vars_ordered(ty), (std::vector<std::string>{"B", "A"}));
}

TEST(TypeTest, Match) {
  std::map<std::string, Type> out;
  EXPECT_TRUE(type_match(fun_ty(A(), A()), fun_ty(bool_ty(), bool_ty()), out));
  EXPECT_EQ(out.at("A"), bool_ty());
  out.clear();
  EXPECT_FALSE(type_match(fun_ty(A(), A()), fun_ty(bool_ty(), ind_ty()), out));
}

TEST(TermTest, IllTypedApplicationThrows) {
  Term f = v("f", fun_ty(A(), bool_ty()));
  try {
    Term::app(f, v("b", bool_ty()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllTypedApplication);
  }
  Term raw = Term::raw_app(f, v("b", bool_ty()));
  EXPECT_THROW(raw.type_of(), Error);
}

TEST(TermTest, AlphaEquivalence) {
  Term x = v("x", A());
  Term y = v("y", A());
  Term id_x = Term::abs(x.as_var(), x);
  Term id_y = Term::abs(y.as_var(), y);
  EXPECT_TRUE(alpha_equal(id_x, id_y));
  EXPECT_FALSE(id_x == id_y);
  // \x. y vs \y. y
  EXPECT_FALSE(alpha_equal(Term::abs(x.as_var(), y), id_y));
  // Same name, different type: distinct variables.
  Term xb = v("x", bool_ty());
  EXPECT_FALSE(alpha_equal(x, xb));
}

TEST(TermTest, FreeVars) {
  Term x = v("x", A());
  Term f = v("f", fun_ty(A(), A()));
  Term t = Term::abs(x.as_var(), Term::app(f, x));
  VarSet fv = free_vars(t);
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv.begin()->name, "f");
  EXPECT_TRUE(var_free_in(f.as_var(), t));
  EXPECT_FALSE(var_free_in(x.as_var(), t));
}

TEST(TermTest, SubstitutionAvoidsCapture) {
  // (\y. x)[y/x] must not become \y. y.
  Term x = v("x", A());
  Term y = v("y", A());
  Term t = Term::abs(y.as_var(), x);
  Term r = subst_term(TermSubstitution({{x.as_var(), y}}), t);
  ASSERT_TRUE(r.is_abs());
  EXPECT_EQ(r.as_var().name, "y'");
  EXPECT_EQ(r.body(), y);
}

TEST(TermTest, BadSubstitution) {
  Term x = v("x", A());
  try {
    TermSubstitution({{x.as_var(), v("b", bool_ty())}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadSubstitution);
  }
  EXPECT_THROW(TermSubstitution({{x.as_var(), x}, {x.as_var(), x}}), Error);
  EXPECT_THROW(TypeSubstitution({{"A", A()}, {"A", B()}}), Error);
}

TEST(TermTest, TypeInstantiationRenamesClashingBinder) {
  // \x:A. x:bool  with A := bool must not identify the two variables.
  Term xa = v("x", A());
  Term xb = v("x", bool_ty());
  Term t = Term::abs(xa.as_var(), xb);
  Term r = subst_type(TypeSubstitution({{"A", bool_ty()}}), t);
  ASSERT_TRUE(r.is_abs());
  EXPECT_NE(r.as_var().name, "x");
  EXPECT_EQ(r.body(), xb);
}

TEST(TermTest, BetaContract) {
  Term x = v("x", A());
  Term c = Term::constant("c", A());
  Term redex = Term::app(Term::abs(x.as_var(), x), c);
  EXPECT_EQ(beta_contract(redex), c);
  try {
    beta_contract(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotARedex);
  }
}

TEST(TermTest, FreshVariant) {
  Var x{"x", A()};
  VarSet avoid = {x, Var{"x'", A()}};
  EXPECT_EQ(fresh_variant(avoid, x).name, "x''");
  EXPECT_EQ(fresh_variant({}, x).name, "x");
}

// Randomized comparison against the de Bruijn oracle.
class OracleTest : public ::testing::Test {
 protected:
  TermGen gen{20260415};
};

TEST_F(OracleTest, AlphaEqualityMatchesDeBruijn) {
  for (int i = 0; i < 1000; ++i) {
    Type ty = gen.random_type(2);
    Term a = gen.random_term(ty, 4);
    Term b = gen.random_term(ty, 4);
    EXPECT_EQ(alpha_equal(a, b), to_db(a) == to_db(b)) << to_string(a);
    EXPECT_TRUE(alpha_equal(a, a));
    int ab = alpha_compare(a, b);
    int ba = alpha_compare(b, a);
    EXPECT_EQ(ab < 0, ba > 0);
  }
}

TEST_F(OracleTest, SubstitutionMatchesDeBruijn) {
  for (int i = 0; i < 1000; ++i) {
    Type ty = gen.random_type(2);
    Term t = gen.random_term(ty, 4);
    std::vector<std::pair<Var, Term>> pairs;
    for (const Var& fv : free_vars(t)) {
      if (gen.uniform(0, 1)) pairs.emplace_back(fv, gen.random_term(fv.ty, 2));
    }
    Term r = subst_term(TermSubstitution(pairs), t);
    EXPECT_EQ(to_db(r), db_subst(pairs, to_db(t)))
        << to_string(t) << " ~> " << to_string(r);
    EXPECT_EQ(r.type_of(), t.type_of());
  }
}

TEST_F(OracleTest, TypeInstantiationMatchesDeBruijn) {
  for (int i = 0; i < 1000; ++i) {
    Type ty = gen.random_type(2);
    Term t = gen.random_term(ty, 4);
    TypeSubstitution theta(
        {{"A", gen.uniform(0, 1) ? bool_ty() : fun_ty(bool_ty(), bool_ty())}});
    Term r = subst_type(theta, t);
    EXPECT_EQ(to_db(r), db_inst(theta, to_db(t)))
        << to_string(t) << " ~> " << to_string(r);
    EXPECT_EQ(r.type_of(), subst_type(theta, t.type_of()));
  }
}

// Renames every binder to a globally fresh name.
Term rename_binders(const Term& t, std::map<Var, Var>& env, int& counter) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      auto it = env.find(t.as_var());
      return it == env.end() ? t : Term::var(it->second);
    }
    case Term::Kind::kConst:
      return t;
    case Term::Kind::kApp:
      return Term::app(rename_binders(t.fun(), env, counter),
                       rename_binders(t.arg(), env, counter));
    case Term::Kind::kAbs: {
      Var fresh{"b" + std::to_string(counter++), t.as_var().ty};
      std::optional<Var> saved;
      if (auto it = env.find(t.as_var()); it != env.end()) saved = it->second;
      env.insert_or_assign(t.as_var(), fresh);
      Term body = rename_binders(t.body(), env, counter);
      if (saved) {
        env.insert_or_assign(t.as_var(), *saved);
      } else {
        env.erase(t.as_var());
      }
      return Term::abs(fresh, body);
    }
  }
  return t;
}

TEST_F(OracleTest, SubstitutionRespectsAlpha) {
  for (int i = 0; i < 500; ++i) {
    Type ty = gen.random_type(2);
    Term t = gen.random_term(ty, 4);
    std::map<Var, Var> env;
    int counter = 0;
    Term renamed = rename_binders(t, env, counter);
    ASSERT_TRUE(alpha_equal(t, renamed));
    std::vector<std::pair<Var, Term>> pairs;
    for (const Var& fv : free_vars(t)) {
      pairs.emplace_back(fv, gen.random_term(fv.ty, 2));
    }
    EXPECT_TRUE(alpha_equal(subst_term(TermSubstitution(pairs), t),
                            subst_term(TermSubstitution(pairs), renamed)));
  }
}

}  // namespace
}  // namespace holkit
