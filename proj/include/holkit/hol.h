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

#ifndef HOLKIT_HOL_H_
#define HOLKIT_HOL_H_

// Polymorphic simple types and typed lambda-terms. Pure syntax: nothing here
// knows about theorems or declared signatures.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holkit/error.h"

namespace holkit {

// A type is a type variable or an operator applied to argument types.
// Values are immutable and cheap to copy.
class Type {
 public:
  static Type var(std::string name);
  static Type app(std::string op, std::vector<Type> args = {});

  bool is_var() const;
  bool is_app() const { return !is_var(); }
  // Type variable name, or operator name for applications.
  const std::string& name() const;
  const std::vector<Type>& args() const;

  // Structural three-way comparison; variables sort before applications.
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);
  friend bool operator==(const Type& a, const Type& b);

  bool same_node(const Type& other) const { return node_ == other.node_; }
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Type bool_ty();
Type ind_ty();
Type fun_ty(const Type& domain, const Type& codomain);
bool is_fun_ty(const Type& ty);
// Precondition: is_fun_ty(ty).
const Type& fun_domain(const Type& ty);
const Type& fun_codomain(const Type& ty);

std::string to_string(const Type& ty);

// Type variables of `ty` in order of first occurrence (left to right).
std::vector<std::string> type_vars_ordered(const Type& ty);
std::set<std::string> type_vars(const Type& ty);

// Term variables are identified by (name, type).
struct Var {
  std::string name;
  Type ty;

  friend std::strong_ordering operator<=>(const Var& a, const Var& b);
  friend bool operator==(const Var& a, const Var& b) = default;
};

using VarSet = std::set<Var>;

class Term {
 public:
  enum class Kind { kVar, kConst, kApp, kAbs };

  static Term var(const Var& v);
  static Term var(std::string name, Type ty);
  static Term constant(std::string name, Type ty);
  // Checked application; throws IllTypedApplication.
  static Term app(const Term& fun, const Term& arg);
  // Unchecked application. type_of() on the result reports the error.
  static Term raw_app(const Term& fun, const Term& arg);
  static Term abs(const Var& bound, const Term& body);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_app() const { return kind() == Kind::kApp; }
  bool is_abs() const { return kind() == Kind::kAbs; }

  // kVar: the variable; kAbs: the bound variable.
  const Var& as_var() const;
  // kConst.
  const std::string& const_name() const;
  const Type& const_type() const;
  // kApp.
  const Term& fun() const;
  const Term& arg() const;
  // kAbs.
  const Term& body() const;

  Type type_of() const;

  // Exact structural equality (bound names significant).
  friend bool operator==(const Term& a, const Term& b);
  bool same_node(const Term& other) const { return node_ == other.node_; }
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Term& t);

Type type_of(const Term& t);

// Three-way comparison up to alpha-conversion. Total order on alpha classes.
int alpha_compare(const Term& a, const Term& b);
bool alpha_equal(const Term& a, const Term& b);

struct AlphaLess {
  bool operator()(const Term& a, const Term& b) const {
    return alpha_compare(a, b) < 0;
  }
};

VarSet free_vars(const Term& t);
bool var_free_in(const Var& v, const Term& t);
// Type variables occurring anywhere in the term, including binder types.
std::set<std::string> type_vars(const Term& t);

// Simultaneous substitution of terms for variables.
class TermSubstitution {
 public:
  TermSubstitution() = default;
  // Throws BadSubstitution on type mismatch or a repeated variable.
  explicit TermSubstitution(std::vector<std::pair<Var, Term>> pairs);

  const std::vector<std::pair<Var, Term>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  const Term* find(const Var& v) const;

 private:
  std::vector<std::pair<Var, Term>> pairs_;
};

class TypeSubstitution {
 public:
  TypeSubstitution() = default;
  // Throws BadSubstitution on a repeated type variable.
  explicit TypeSubstitution(std::vector<std::pair<std::string, Type>> pairs);

  const std::vector<std::pair<std::string, Type>>& pairs() const {
    return pairs_;
  }
  bool empty() const { return pairs_.empty(); }
  const Type* find(const std::string& tyvar) const;

 private:
  std::vector<std::pair<std::string, Type>> pairs_;
};

Type subst_type(const TypeSubstitution& theta, const Type& ty);
// Capture-avoiding simultaneous substitution.
Term subst_term(const TermSubstitution& sigma, const Term& t);
// Instantiates type variables throughout `t`, renaming binders that would
// otherwise be identified with a free variable.
Term subst_type(const TypeSubstitution& theta, const Term& t);

// Throws NotARedex unless `t` is (\x. b) u.
Term beta_contract(const Term& t);

// `v` if it is not in `avoid`, otherwise `v` with the fewest primes appended
// that makes it fresh.
Var fresh_variant(const VarSet& avoid, const Var& v);

// Matches a generic type against an instance, extending `out`. Returns false
// when no instantiation exists.
bool type_match(const Type& generic, const Type& instance,
                std::map<std::string, Type>& out);

}  // namespace holkit

#endif  // HOLKIT_HOL_H_
