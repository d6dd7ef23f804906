// Copyright 2026 The textlens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Segmentation quality and speed measurement.

#ifndef TEXTLENS_BENCH_H_
#define TEXTLENS_BENCH_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textlens/segment.h"
#include "textlens/text.h"

namespace textlens {

struct GoldSentence {
  std::string text;  // words joined by single spaces
  std::vector<std::string> words;
};

struct GoldCorpus {
  std::string name;
  std::vector<GoldSentence> sentences;

  // One sentence per line, words split by '|', syllables by spaces. Blank
  // and '#' lines are skipped. Throws kGoldFormatError naming the line.
  static GoldCorpus parse(std::string_view text, std::string name = "gold");
  static GoldCorpus load(const std::filesystem::path& path);
};

// Drops every entry whose index in sorted order is n-1 modulo n.
SegmenterDictionary drop_every_nth(const SegmenterDictionary& dictionary,
                                   std::size_t n);

struct BenchReport {
  std::string system;
  Language language = Language::kVietnamese;
  // Percentages, unrounded.
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  // Sentences per second over the median pass.
  std::optional<double> throughput;
  std::string unit = "sentences/sec";
  double wall_time = 0.0;  // seconds
  std::size_t input_size = 0;
  std::vector<double> pass_times;
};

// Micro-averaged span F1 over every gold sentence.
BenchReport run_f1_benchmark(const Segmenter& segmenter,
                             const GoldCorpus& gold, std::string system);

struct ThroughputOptions {
  int warmup = 2;
  int repeats = 5;
  Language language = Language::kVietnamese;
};

// Times only the segmentation passes. Throws kInvalidInput if repeats < 1.
BenchReport run_throughput_benchmark(const Segmenter& segmenter,
                                     const std::vector<std::string>& sentences,
                                     const ThroughputOptions& options,
                                     std::string system);
// Materialises the input through `loader` before the clock starts.
BenchReport run_throughput_benchmark(
    const Segmenter& segmenter,
    const std::function<std::vector<std::string>()>& loader,
    const ThroughputOptions& options, std::string system);

enum class TableFormat { kMarkdown, kCsv };

TableFormat parse_table_format(std::string_view name);

// One row per system, F1 and speed columns for each language present,
// rows by F1 descending. F1 has one decimal, speed none.
std::string emit_table(const std::vector<BenchReport>& reports,
                       TableFormat format);

}  // namespace textlens

#endif  // TEXTLENS_BENCH_H_
