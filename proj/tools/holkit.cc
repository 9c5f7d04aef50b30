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

// holkit: benchmark the two kernels, replay articles, translate them to LP
// and check LP files.
//
// Exit status: 0 on success, 1 on any failure, 2 on a usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holkit/article.h"
#include "holkit/bench.h"
#include "holkit/lp_check.h"
#include "holkit/lp_translate.h"

namespace holkit {
namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_error(const std::exception& e) {
  std::cerr << "holkit: " << e.what() << "\n";
}

struct BenchArgs {
  std::string modes = "minimal,extended";
  std::string out;
  std::string entries;
  int gzip_level = kDefaultGzipLevel;
  int runs = 5;
  std::string report = "text";
};

int run_bench_command(const BenchArgs& args) {
  BenchOptions opts;
  opts.modes.clear();
  for (const std::string& m : split(args.modes, ',')) {
    std::optional<KernelMode> mode = parse_mode(m);
    if (!mode) throw UsageError("unknown mode " + m);
    opts.modes.push_back(*mode);
  }
  if (opts.modes.empty()) throw UsageError("no modes given");
  opts.outdir = args.out;
  opts.gzip_level = args.gzip_level;
  opts.timing_runs = args.runs;

  std::vector<CorpusEntry> entries;
  if (args.entries.empty()) {
    entries = corpus();
  } else {
    for (const std::string& name : split(args.entries, ',')) {
      const CorpusEntry* e = find_corpus_entry(name);
      if (!e) throw UsageError("unknown corpus entry " + name);
      entries.push_back(*e);
    }
  }
  BenchReport report = run_bench(entries, opts);
  std::cout << emit_report(
      report, args.report == "tsv" ? ReportFormat::kTsv : ReportFormat::kText);
  return report.ok() ? kOk : kFailure;
}

Dialect dialect_arg(const std::string& name) {
  std::optional<Dialect> d = parse_dialect(name);
  if (!d) throw UsageError("unknown dialect " + name);
  return *d;
}

bool uses_extension_commands(const Article& a) {
  for (const ArticleCommand& c : a)
    if (c.kind == ArticleCommand::Kind::kName && is_extension_command(c.text))
      return true;
  return false;
}

// Replays `article` on a fresh kernel. In auto mode the extended kernel is
// used when the article needs it.
std::unique_ptr<Kernel> replay_article(const Article& article,
                                       const std::string& mode,
                                       ReplayResult& result) {
  auto attempt = [&](KernelMode m) {
    auto k = std::make_unique<Kernel>(m);
    result = replay(article, *k);
    return k;
  };
  if (mode != "auto") {
    std::optional<KernelMode> m = parse_mode(mode);
    if (!m) throw UsageError("unknown mode " + mode);
    return attempt(*m);
  }
  if (uses_extension_commands(article)) return attempt(KernelMode::kExtended);
  try {
    return attempt(KernelMode::kMinimal);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUndeclared) throw;
    return attempt(KernelMode::kExtended);
  }
}

int check_article_command(const std::string& file, const std::string& dialect,
                          const std::string& mode) {
  Article a = read_article_file(file, dialect_arg(dialect));
  ReplayResult r;
  std::unique_ptr<Kernel> k = replay_article(a, mode, r);
  std::cout << file << ": " << a.size() << " commands, " << r.exported.size()
            << " theorems, " << r.assumed.size() << " axioms ("
            << mode_name(k->mode()) << " kernel)\n";
  for (const Theorem& th : r.exported) {
    std::string hyps;
    for (const Term& h : th.hyps())
      hyps += (hyps.empty() ? "" : ", ") + to_string(h);
    std::cout << "  " << hyps << (hyps.empty() ? "" : " ") << "|- "
              << to_string(th.concl()) << "\n";
  }
  return kOk;
}

int translate_command(const std::string& file, const std::string& out,
                      const std::string& dialect, const std::string& mode) {
  Article a = read_article_file(file, dialect_arg(dialect));
  ReplayResult r;
  std::unique_ptr<Kernel> k = replay_article(a, mode, r);
  std::vector<std::pair<std::string, Theorem>> theorems;
  for (size_t i = 0; i < r.exported.size(); ++i)
    theorems.emplace_back("thm_" + std::to_string(i + 1), r.exported[i]);
  LpFile lp = translate_theorems(*k, theorems);
  write_lp_file(lp, out);
  std::cout << out << ": " << theorems.size() << " assertions\n";
  return kOk;
}

int lpcheck_command(const std::string& file) {
  LpCheckStats st = check_lp_file(read_lp_file(file));
  std::cout << file << ": ok, " << st.entries << " entries, " << st.assertions
            << " assertions, " << st.steps << " steps\n";
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"holkit: minimal and extended HOL kernels, articles and LP"};
  app.require_subcommand(1);

  BenchArgs bench;
  CLI::App* b =
      app.add_subcommand("bench", "compare the kernels on the corpus");
  b->add_option("--modes", bench.modes, "comma-separated kernel modes")
      ->capture_default_str();
  b->add_option("--out", bench.out, "directory for artifacts and reports");
  b->add_option("--entries", bench.entries,
                "comma-separated corpus entries (default: all)");
  b->add_option("--gzip-level", bench.gzip_level, "gzip level")
      ->check(CLI::Range(1, 9))
      ->capture_default_str();
  b->add_option("--runs", bench.runs, "timing runs per measurement")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
  b->add_option("--report", bench.report, "report format")
      ->check(CLI::IsMember({"tsv", "text"}))
      ->capture_default_str();

  std::string file, out, dialect = "extended", mode = "auto";
  CLI::App* ca = app.add_subcommand("check-article", "replay an article");
  ca->add_option("file", file, "article file")->required();
  ca->add_option("--dialect", dialect, "standard or extended")
      ->check(CLI::IsMember({"standard", "extended"}))
      ->capture_default_str();
  ca->add_option("--mode", mode, "kernel mode: minimal, extended or auto")
      ->check(CLI::IsMember({"minimal", "extended", "auto"}))
      ->capture_default_str();

  CLI::App* tr = app.add_subcommand("translate", "translate an article to LP");
  tr->add_option("file", file, "article file")->required();
  tr->add_option("-o,--output", out, "LP output file")->required();
  tr->add_option("--dialect", dialect, "standard or extended")
      ->check(CLI::IsMember({"standard", "extended"}))
      ->capture_default_str();
  tr->add_option("--mode", mode, "kernel mode: minimal, extended or auto")
      ->check(CLI::IsMember({"minimal", "extended", "auto"}))
      ->capture_default_str();

  CLI::App* lc = app.add_subcommand("lpcheck", "type check an LP file");
  lc->add_option("file", file, "LP file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*b) return run_bench_command(bench);
    if (*ca) return check_article_command(file, dialect, mode);
    if (*tr) return translate_command(file, out, dialect, mode);
    if (*lc) return lpcheck_command(file);
  } catch (const UsageError& e) {
    print_error(e);
    return kUsage;
  } catch (const std::exception& e) {
    print_error(e);
    return kFailure;
  }
  return kUsage;
}

}  // namespace
}  // namespace holkit

int main(int argc, char** argv) { return holkit::run(argc, argv); }
