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

#ifndef HOLKIT_LP_TRANSLATE_H_
#define HOLKIT_LP_TRANSLATE_H_

// Translation of kernel types, terms and proof traces into the lambda-Pi
// encoding of the base signatures.
//
//   |bool| = bool, |ind| = ind, |A -> B| = arr |A| |B|, |a| = a : type
//   |x| = x, |M N| = |M| |N|, |\x:A. M| = λ x : term |A|, |M|
//   |(=)_A| = eq |A|, |(==>)| = imp, |(!)_A| = forall |A| (extended mode)
//
// A theorem G |- c translates to a proof of
//   Π a1 ... ak : type, Π x1 : term |A1|, ..., proof |g1| → ... → proof |c|
// binding its type variables, then its free variables, then hypotheses in
// canonical order.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "holkit/kernel.h"
#include "holkit/lp.h"

namespace holkit {

// Type variables translate to variables of the same name. Throws
// UnknownTypeOp for operators other than bool, ind and ->.
LpTerm translate_type(const Type& ty);

class LpTranslator {
 public:
  explicit LpTranslator(const Kernel& kernel);
  ~LpTranslator();

  // Registers a defined constant and returns its LP definition: the
  // constant's type (Π-abstracted over its type variables) and the value it
  // rewrites to.
  LpEntry translate_definition(const ConstDefinition& def);
  bool registered(const std::string& name) const;

  // Variables keep their names. Throws UnregisteredConstant for constants
  // that are neither primitive nor registered.
  LpTerm translate_term(const Term& t) const;

  struct TheoremTranslation {
    LpTerm proof;
    LpTerm type;
  };
  // Throws UnsupportedTraceNode on type definitions. Axioms met on the way
  // are collected for declarations().
  TheoremTranslation translate_theorem(const Theorem& th);

  // Declarations of the axioms used by the theorems translated so far.
  std::vector<LpEntry> axiom_declarations() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// A file checking `theorems`: the base module, the definitions the traces
// depend on (in definition order), the axioms they use, then one assertion
// per theorem.
LpFile translate_theorems(
    const Kernel& kernel,
    const std::vector<std::pair<std::string, Theorem>>& theorems);

}  // namespace holkit

#endif  // HOLKIT_LP_TRANSLATE_H_
