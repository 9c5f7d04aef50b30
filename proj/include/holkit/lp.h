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

#ifndef HOLKIT_LP_H_
#define HOLKIT_LP_H_

// Terms and files of a small lambda-Pi-calculus-modulo proof language, in a
// Lambdapi-like concrete syntax:
//
//   // comment
//   require holkit.minimal;
//   symbol arr : type → type → type;
//   symbol T : term bool ≔ eq (arr bool bool) (λ p : term bool, p) ...;
//   rule term (arr $a $b) ↪ term $a → term $b;
//   opaque symbol thm : Π a : type, proof (eq a ...) ≔ λ a : type, ...;
//
// One entry per line. `symbol` with a value is a definition (the constant
// rewrites to its value), `opaque symbol` is a checked assertion.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holkit/kernel.h"

namespace holkit {

class LpTerm {
 public:
  enum class Kind { kType, kKind, kConst, kVar, kApp, kLam, kPi };

  static LpTerm sort_type();
  static LpTerm sort_kind();
  static LpTerm constant(std::string name);
  // Bound variable, or a pattern variable when the name starts with '$'.
  static LpTerm var(std::string name);
  static LpTerm app(const LpTerm& fun, const LpTerm& arg);
  static LpTerm app(const LpTerm& fun, const std::vector<LpTerm>& args);
  static LpTerm lam(std::string name, const LpTerm& annot, const LpTerm& body);
  static LpTerm pi(std::string name, const LpTerm& domain,
                   const LpTerm& codomain);
  // Non-dependent product, binder named "_".
  static LpTerm arrow(const LpTerm& domain, const LpTerm& codomain);

  Kind kind() const;
  // kConst, kVar: the name; kLam, kPi: the binder name.
  const std::string& name() const;
  // kApp.
  const LpTerm& fun() const;
  const LpTerm& arg() const;
  // kLam: annotation; kPi: domain.
  const LpTerm& domain() const;
  // kLam, kPi.
  const LpTerm& body() const;

  bool is_arrow() const { return kind() == Kind::kPi && name() == "_"; }

  // Structural equality; binder names are significant.
  friend bool operator==(const LpTerm& a, const LpTerm& b);

 private:
  struct Node;
  explicit LpTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const LpTerm& t);

// Identifiers that are not plain [A-Za-z_][A-Za-z0-9_']* (or that clash with
// a keyword) print as {|...|}.
bool is_plain_lp_ident(std::string_view name);

struct LpEntry {
  enum class Kind { kRequire, kDeclaration, kDefinition, kRule, kAssertion };

  static LpEntry require(std::string module);
  static LpEntry declaration(std::string name, LpTerm type);
  static LpEntry definition(std::string name, LpTerm type, LpTerm value);
  static LpEntry rule(LpTerm lhs, LpTerm rhs);
  static LpEntry assertion(std::string name, LpTerm type, LpTerm proof);

  Kind kind;
  // Entry name, or module name for kRequire.
  std::string name;
  // Type; the left-hand side for kRule.
  std::optional<LpTerm> type;
  // Value or proof; the right-hand side for kRule.
  std::optional<LpTerm> value;
  // 1-based source line; zero when not parsed.
  int line = 0;

  friend bool operator==(const LpEntry& a, const LpEntry& b);
};

struct LpFile {
  // Leading comment lines without the "// " prefix.
  std::vector<std::string> header;
  std::vector<LpEntry> entries;

  friend bool operator==(const LpFile& a, const LpFile& b) {
    return a.header == b.header && a.entries == b.entries;
  }
};

std::string emit_lp_file(const LpFile& file);
// Throws SyntaxError located at the offending line.
LpFile parse_lp_file(std::string_view text);

void write_lp_file(const LpFile& file, const std::string& path);
LpFile read_lp_file(const std::string& path);

// Module names accepted by `require`.
inline constexpr char kMinimalModule[] = "holkit.minimal";
inline constexpr char kExtendedModule[] = "holkit.extended";

std::string_view base_module(KernelMode mode);
// The base signature for a kernel mode; shipped as docs/sig-minimal.lp and
// docs/sig-extended.lp.
LpFile base_signature(KernelMode mode);

}  // namespace holkit

#endif  // HOLKIT_LP_H_
