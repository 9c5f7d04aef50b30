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

#ifndef HOLKIT_BENCH_H_
#define HOLKIT_BENCH_H_

// Size and timing comparison of the two kernels over the corpus: articles,
// LP translations, their gzip sizes, and translation and checking times.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holkit/bootstrap.h"

namespace holkit {

inline constexpr int kDefaultGzipLevel = 6;
inline constexpr double kBytesPerKb = 1024.0;

// Reference ratios measured on the HOL Light standard library (extended over
// minimal, percent). Not reproducible on the shipped corpus.
inline constexpr double kReferenceArticleSizeRatio = 64.36;
inline constexpr double kReferenceLpSizeRatio = 64.92;
inline constexpr double kReferenceTranslateImprovement = 41.81;
inline constexpr double kReferenceCheckImprovement = 38.04;

// RFC 1952 stream with mtime 0 and no file name.
std::string gzip_compress(std::string_view data, int level = kDefaultGzipLevel);
uint64_t gzip_size(std::string_view data, int level = kDefaultGzipLevel);

struct BenchRecord {
  std::string entry;
  KernelMode mode = KernelMode::kMinimal;
  uint64_t steps = 0;
  uint64_t article_bytes = 0;
  uint64_t article_gzip_bytes = 0;
  uint64_t lp_bytes = 0;
  uint64_t lp_gzip_bytes = 0;
  // Milliseconds, median over the timing runs.
  double translate_time = 0;
  double check_time = 0;
  // Empty on success.
  std::string error;

  bool ok() const { return error.empty(); }
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchTotals {
  size_t entries = 0;
  uint64_t steps = 0;
  uint64_t article_bytes = 0;
  uint64_t article_gzip_bytes = 0;
  uint64_t lp_bytes = 0;
  uint64_t lp_gzip_bytes = 0;
  double translate_time = 0;
  double check_time = 0;
};

// Extended totals over minimal totals.
struct BenchRatios {
  double steps = 0;
  double article_bytes = 0;
  double article_gzip_bytes = 0;
  double lp_bytes = 0;
  double lp_gzip_bytes = 0;
  double translate_time = 0;
  double check_time = 0;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::map<KernelMode, BenchTotals> totals;
  // Present when both modes have totals.
  std::optional<BenchRatios> ratios;
  int gzip_level = kDefaultGzipLevel;

  bool ok() const;
  const BenchRecord* find(std::string_view entry, KernelMode mode) const;
};

// Totals over successful records and ratios computed from them.
BenchReport summarize(std::vector<BenchRecord> records,
                      int gzip_level = kDefaultGzipLevel);

struct BenchOptions {
  std::vector<KernelMode> modes = {KernelMode::kMinimal, KernelMode::kExtended};
  // Artifacts and reports go here when non-empty.
  std::string outdir;
  int gzip_level = kDefaultGzipLevel;
  int timing_runs = 5;
};

// Failures are recorded in the entry's record and the run continues.
BenchRecord bench_entry(const CorpusEntry& entry, KernelMode mode,
                        const BenchOptions& options);
BenchReport run_bench(const std::vector<CorpusEntry>& entries,
                      const BenchOptions& options);

enum class ReportFormat { kTsv, kText };

std::string emit_report(const BenchReport& report, ReportFormat format);
// Records of a TSV report; TOTAL rows are skipped. Throws SyntaxError.
std::vector<BenchRecord> parse_report_tsv(std::string_view text);

}  // namespace holkit

#endif  // HOLKIT_BENCH_H_
