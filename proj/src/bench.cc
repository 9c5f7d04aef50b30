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

#include "holkit/bench.h"

#include <fmt/format.h>
#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holkit/article.h"
#include "holkit/lp_check.h"
#include "holkit/lp_translate.h"

namespace holkit {
namespace {

constexpr int kGzipWindowBits = 15 + 16;
constexpr int kMemLevel = 8;

double median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2;
}

template <typename F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

Dialect dialect_for(KernelMode mode) {
  return mode == KernelMode::kExtended ? Dialect::kExtended
                                       : Dialect::kStandard;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
}

std::string shortest(double x) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string clean_field(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

double ratio(double num, double den) { return den == 0 ? 0 : num / den; }

constexpr const char* kTsvFields[] = {"entry",
                                      "mode",
                                      "steps",
                                      "article_bytes",
                                      "article_gzip_bytes",
                                      "lp_bytes",
                                      "lp_gzip_bytes",
                                      "translate_time",
                                      "check_time",
                                      "error"};

}  // namespace

std::string gzip_compress(std::string_view data, int level) {
  z_stream zs{};
  if (deflateInit2(&zs, level, Z_DEFLATED, kGzipWindowBits, kMemLevel,
                   Z_DEFAULT_STRATEGY) != Z_OK)
    fail(ErrorCode::kIo, "deflateInit2 failed");
  std::string out(deflateBound(&zs, data.size()), '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  int rc = deflate(&zs, Z_FINISH);
  out.resize(zs.total_out);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) fail(ErrorCode::kIo, "deflate failed");
  return out;
}

uint64_t gzip_size(std::string_view data, int level) {
  return gzip_compress(data, level).size();
}

bool BenchReport::ok() const {
  return std::all_of(records.begin(), records.end(),
                     [](const BenchRecord& r) { return r.ok(); });
}

const BenchRecord* BenchReport::find(std::string_view entry,
                                     KernelMode mode) const {
  for (const BenchRecord& r : records)
    if (r.entry == entry && r.mode == mode) return &r;
  return nullptr;
}

BenchReport summarize(std::vector<BenchRecord> records, int gzip_level) {
  BenchReport report;
  report.gzip_level = gzip_level;
  report.records = std::move(records);
  for (const BenchRecord& r : report.records) {
    if (!r.ok()) continue;
    BenchTotals& t = report.totals[r.mode];
    ++t.entries;
    t.steps += r.steps;
    t.article_bytes += r.article_bytes;
    t.article_gzip_bytes += r.article_gzip_bytes;
    t.lp_bytes += r.lp_bytes;
    t.lp_gzip_bytes += r.lp_gzip_bytes;
    t.translate_time += r.translate_time;
    t.check_time += r.check_time;
  }
  auto mn = report.totals.find(KernelMode::kMinimal);
  auto ex = report.totals.find(KernelMode::kExtended);
  if (mn != report.totals.end() && ex != report.totals.end()) {
    const BenchTotals& a = mn->second;
    const BenchTotals& b = ex->second;
    BenchRatios q;
    q.steps = ratio(b.steps, a.steps);
    q.article_bytes = ratio(b.article_bytes, a.article_bytes);
    q.article_gzip_bytes = ratio(b.article_gzip_bytes, a.article_gzip_bytes);
    q.lp_bytes = ratio(b.lp_bytes, a.lp_bytes);
    q.lp_gzip_bytes = ratio(b.lp_gzip_bytes, a.lp_gzip_bytes);
    q.translate_time = ratio(b.translate_time, a.translate_time);
    q.check_time = ratio(b.check_time, a.check_time);
    report.ratios = q;
  }
  return report;
}

BenchRecord bench_entry(const CorpusEntry& entry, KernelMode mode,
                        const BenchOptions& options) {
  BenchRecord rec;
  rec.entry = entry.name;
  rec.mode = mode;
  try {
    Session session(mode);
    Theorem th = entry.build(session.logic());
    rec.steps = step_count(th);

    std::string article =
        format_article(serialize(th, session.kernel(), dialect_for(mode)));
    rec.article_bytes = article.size();
    rec.article_gzip_bytes = gzip_size(article, options.gzip_level);

    int runs = std::max(1, options.timing_runs);
    std::string lp;
    std::vector<double> translate_ms, check_ms;
    for (int i = 0; i < runs; ++i) {
      translate_ms.push_back(time_ms([&] {
        lp = emit_lp_file(
            translate_theorems(session.kernel(), {{entry.name, th}}));
      }));
    }
    rec.lp_bytes = lp.size();
    rec.lp_gzip_bytes = gzip_size(lp, options.gzip_level);
    for (int i = 0; i < runs; ++i)
      check_ms.push_back(time_ms([&] { check_lp_file(parse_lp_file(lp)); }));
    rec.translate_time = median(translate_ms);
    rec.check_time = median(check_ms);

    if (!options.outdir.empty()) {
      std::filesystem::path dir =
          std::filesystem::path(options.outdir) / std::string(mode_name(mode));
      std::filesystem::create_directories(dir);
      write_text(dir / (entry.name + ".art"), article);
      write_text(dir / (entry.name + ".lp"), lp);
    }
  } catch (const std::exception& e) {
    rec.error = clean_field(e.what());
  }
  return rec;
}

BenchReport run_bench(const std::vector<CorpusEntry>& entries,
                      const BenchOptions& options) {
  std::vector<BenchRecord> records;
  for (const CorpusEntry& e : entries)
    for (KernelMode mode : options.modes)
      records.push_back(bench_entry(e, mode, options));
  BenchReport report = summarize(std::move(records), options.gzip_level);
  if (!options.outdir.empty()) {
    std::filesystem::create_directories(options.outdir);
    std::filesystem::path dir(options.outdir);
    write_text(dir / "report.tsv", emit_report(report, ReportFormat::kTsv));
    write_text(dir / "report.txt", emit_report(report, ReportFormat::kText));
  }
  return report;
}

namespace {

std::string emit_tsv(const BenchReport& report) {
  std::string out;
  for (size_t i = 0; i < std::size(kTsvFields); ++i)
    out += (i ? "\t" : "") + std::string(kTsvFields[i]);
  out += '\n';
  for (const BenchRecord& r : report.records)
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", r.entry,
                       mode_name(r.mode), r.steps, r.article_bytes,
                       r.article_gzip_bytes, r.lp_bytes, r.lp_gzip_bytes,
                       shortest(r.translate_time), shortest(r.check_time),
                       r.error);
  for (const auto& [mode, t] : report.totals)
    out += fmt::format("TOTAL\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t\n",
                       mode_name(mode), t.steps, t.article_bytes,
                       t.article_gzip_bytes, t.lp_bytes, t.lp_gzip_bytes,
                       shortest(t.translate_time), shortest(t.check_time));
  return out;
}

double kb(uint64_t bytes) { return bytes / kBytesPerKb; }

void size_time_table(std::string& out, const BenchReport& report,
                     const char* size_title, const char* time_title,
                     uint64_t BenchTotals::* size, double BenchTotals::* time,
                     double BenchRatios::* size_ratio,
                     double BenchRatios::* time_ratio) {
  out += fmt::format("{:<12}{:<30}{}\n", "", size_title, time_title);
  for (const auto& [mode, t] : report.totals)
    out += fmt::format("{:<12}{:<30.2f}{:.2f}\n", mode_name(mode), kb(t.*size),
                       t.*time);
  if (report.ratios) {
    std::string reduced =
        fmt::format("Reduced to {:.2f}%", 100 * (*report.ratios).*size_ratio);
    out += fmt::format("{:<12}{:<30}Improved by {:.2f}%\n", "Comparison",
                       reduced, 100 * (1 - (*report.ratios).*time_ratio));
  }
  out += '\n';
}

std::string emit_text(const BenchReport& report) {
  std::string out;
  size_t failed = std::count_if(report.records.begin(), report.records.end(),
                                [](const BenchRecord& r) { return !r.ok(); });
  out += fmt::format(
      "holkit bench: {} records, {} failed, gzip level {}, 1 KB = 1024 "
      "bytes, times are medians in ms\n\n",
      report.records.size(), failed, report.gzip_level);
  size_time_table(
      out, report, "Size of article files (KB)", "Translation time (ms)",
      &BenchTotals::article_gzip_bytes, &BenchTotals::translate_time,
      &BenchRatios::article_gzip_bytes, &BenchRatios::translate_time);
  size_time_table(out, report, "Size of LP files (KB)",
                  "Proof checking time (ms)", &BenchTotals::lp_gzip_bytes,
                  &BenchTotals::check_time, &BenchRatios::lp_gzip_bytes,
                  &BenchRatios::check_time);
  if (report.ratios) {
    const BenchRatios& q = *report.ratios;
    out += fmt::format("Inference steps: reduced to {:.2f}%\n", 100 * q.steps);
    out += fmt::format("Uncompressed articles: reduced to {:.2f}%\n",
                       100 * q.article_bytes);
    out += fmt::format("Uncompressed LP files: reduced to {:.2f}%\n",
                       100 * q.lp_bytes);
    out += fmt::format(
        "Reference on the HOL Light standard library: articles reduced to "
        "{:.2f}%, LP files reduced to {:.2f}%, translation improved by "
        "{:.2f}%, checking improved by {:.2f}%\n",
        kReferenceArticleSizeRatio, kReferenceLpSizeRatio,
        kReferenceTranslateImprovement, kReferenceCheckImprovement);
    out += "Timings vary between runs and machines.\n";
  }
  out += '\n';

  // Per-entry steps and compressed sizes, one column group per mode.
  std::vector<std::string> entries;
  std::vector<KernelMode> modes;
  for (const BenchRecord& r : report.records) {
    if (std::find(entries.begin(), entries.end(), r.entry) == entries.end())
      entries.push_back(r.entry);
    if (std::find(modes.begin(), modes.end(), r.mode) == modes.end())
      modes.push_back(r.mode);
  }
  std::sort(modes.begin(), modes.end());
  out += fmt::format("{:<20}", "entry");
  for (KernelMode m : modes)
    out += fmt::format("{:>16}{:>9}{:>9}", std::string(mode_name(m)) + " steps",
                       "art.gz", "lp.gz");
  out += '\n';
  for (const std::string& e : entries) {
    out += fmt::format("{:<20}", e);
    for (KernelMode m : modes) {
      const BenchRecord* r = report.find(e, m);
      if (!r || !r->ok())
        out += fmt::format("{:>34}", r ? "FAILED" : "-");
      else
        out += fmt::format("{:>16}{:>9}{:>9}", r->steps, r->article_gzip_bytes,
                           r->lp_gzip_bytes);
    }
    out += '\n';
  }
  for (const BenchRecord& r : report.records)
    if (!r.ok())
      out += fmt::format("error: {} ({}): {}\n", r.entry, mode_name(r.mode),
                         r.error);
  return out;
}

uint64_t parse_count(const std::string& s, int line) {
  uint64_t v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Error(ErrorCode::kSyntaxError, "bad count '" + s + "'", line);
  return v;
}

double parse_real(const std::string& s, int line) {
  double v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Error(ErrorCode::kSyntaxError, "bad time '" + s + "'", line);
  return v;
}

}  // namespace

std::string emit_report(const BenchReport& report, ReportFormat format) {
  return format == ReportFormat::kTsv ? emit_tsv(report) : emit_text(report);
}

std::vector<BenchRecord> parse_report_tsv(std::string_view text) {
  std::vector<BenchRecord> out;
  std::istringstream in{std::string(text)};
  std::string row;
  int line = 0;
  while (std::getline(in, row)) {
    ++line;
    std::vector<std::string> f;
    size_t start = 0;
    for (size_t tab; (tab = row.find('\t', start)) != std::string::npos;
         start = tab + 1)
      f.push_back(row.substr(start, tab - start));
    f.push_back(row.substr(start));
    if (f.size() != std::size(kTsvFields))
      throw Error(ErrorCode::kSyntaxError,
                  fmt::format("expected {} fields, found {}",
                              std::size(kTsvFields), f.size()),
                  line);
    if (line == 1) {
      for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != kTsvFields[i])
          throw Error(ErrorCode::kSyntaxError, "bad header field " + f[i],
                      line);
      continue;
    }
    if (f[0] == "TOTAL") continue;
    BenchRecord r;
    r.entry = f[0];
    std::optional<KernelMode> mode = parse_mode(f[1]);
    if (!mode) throw Error(ErrorCode::kSyntaxError, "bad mode " + f[1], line);
    r.mode = *mode;
    r.steps = parse_count(f[2], line);
    r.article_bytes = parse_count(f[3], line);
    r.article_gzip_bytes = parse_count(f[4], line);
    r.lp_bytes = parse_count(f[5], line);
    r.lp_gzip_bytes = parse_count(f[6], line);
    r.translate_time = parse_real(f[7], line);
    r.check_time = parse_real(f[8], line);
    r.error = f[9];
    out.push_back(std::move(r));
  }
  if (line == 0) throw Error(ErrorCode::kSyntaxError, "empty report", 0);
  return out;
}

}  // namespace holkit
