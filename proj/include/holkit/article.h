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

#ifndef HOLKIT_ARTICLE_H_
#define HOLKIT_ARTICLE_H_

// Line-based proof articles in the OpenTheory version 6 style: a reader and
// writer, a replay machine that drives the kernel, and a serializer for
// recorded traces. The extended dialect adds the commands mp, disch, gen and
// spec for the extended kernel's rules.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holkit/kernel.h"

namespace holkit {

enum class Dialect { kStandard, kExtended };

std::string_view dialect_name(Dialect dialect);
std::optional<Dialect> parse_dialect(std::string_view name);

struct ArticleCommand {
  enum class Kind { kInt, kString, kName };

  static ArticleCommand integer(int64_t n);
  static ArticleCommand string(std::string s);
  static ArticleCommand name(std::string command);

  Kind kind = Kind::kName;
  int64_t num = 0;
  // String literal contents (unescaped) or command name.
  std::string text;
  // 1-based source line; zero for commands not read from a file.
  int line = 0;

  // Compares kind and value; source lines are ignored.
  friend bool operator==(const ArticleCommand& a, const ArticleCommand& b);
};

using Article = std::vector<ArticleCommand>;

bool is_extension_command(std::string_view name);
bool is_article_command(std::string_view name, Dialect dialect);

// Throws SyntaxError or UnknownCommand, located at the offending line. Blank
// lines and lines starting with '#' are skipped.
Article parse_article(std::string_view text, Dialect dialect);
// One command per line, LF-terminated.
std::string format_article(const Article& article);

void write_article_file(const Article& article, const std::string& path);
Article read_article_file(const std::string& path, Dialect dialect);

struct ReplayResult {
  std::vector<Theorem> exported;
  // Axioms introduced by `axiom` commands.
  std::vector<Theorem> assumed;
};

// Runs the article against `kernel`. Errors carry the line of the failing
// command.
ReplayResult replay(const Article& article, Kernel& kernel);

// An article whose replay on a fresh kernel of the same mode re-derives `th`
// and exports it. Definitions and axioms the trace depends on are emitted
// first. Throws DialectTooWeak when the trace uses extended rules and
// `dialect` is standard.
Article serialize(const Theorem& th, const Kernel& kernel, Dialect dialect);

}  // namespace holkit

#endif  // HOLKIT_ARTICLE_H_
