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

#ifndef HOLKIT_LP_CHECK_H_
#define HOLKIT_LP_CHECK_H_

// A small type checker for the lambda-Pi calculus modulo rewriting:
// dependent products, beta, and first-order rewrite rules used as
// conversion.

#include <cstdint>
#include <memory>
#include <string>

#include "holkit/lp.h"

namespace holkit {

struct LpCheckOptions {
  // Bound on beta and rewrite steps per check.
  uint64_t step_budget = 10'000'000;
};

// Defaults, with the step budget taken from HOLKIT_STEP_BUDGET when set.
LpCheckOptions default_check_options();

class LpSignature {
 public:
  explicit LpSignature(LpCheckOptions options = default_check_options());
  ~LpSignature();
  LpSignature(LpSignature&&) noexcept;
  LpSignature& operator=(LpSignature&&) noexcept;

  // The base signature for a kernel mode, already checked.
  static LpSignature base(KernelMode mode,
                          LpCheckOptions options = default_check_options());

  bool declares(const std::string& name) const;

  // Each of these checks its input first. Types must have sort TYPE or
  // KIND. Throws NameClash on redeclaration, UnboundName, TypeError or
  // BudgetExceeded.
  void declare(const std::string& name, const LpTerm& type);
  // Declares `name` and adds the rule name ↪ value.
  void define(const std::string& name, const LpTerm& type,
              const LpTerm& value);
  // The left-hand side must be a declared constant applied to patterns built
  // from constants and $variables; the right-hand side may use only the
  // left-hand side's variables. Rules are not type checked.
  void add_rule(const LpTerm& lhs, const LpTerm& rhs);

  // Weak-head normal form of a closed term under beta and the rules.
  LpTerm whnf(const LpTerm& t) const;
  // Closed `type` must be a type; `term` must check against it.
  void check(const LpTerm& term, const LpTerm& type) const;
  // Type of a closed term.
  LpTerm infer(const LpTerm& term) const;
  bool convertible(const LpTerm& a, const LpTerm& b) const;

  // Beta and rewrite steps taken by the most recent operation.
  uint64_t last_steps() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct LpCheckStats {
  size_t entries = 0;
  size_t assertions = 0;
  uint64_t steps = 0;
};

// Checks every entry of a file in order. `require` loads a base signature by
// module name. Errors are located at the entry's line.
LpCheckStats check_lp_file(const LpFile& file,
                           LpCheckOptions options = default_check_options());

}  // namespace holkit

#endif  // HOLKIT_LP_CHECK_H_
