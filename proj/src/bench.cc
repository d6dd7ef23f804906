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

#include "textlens/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "textlens/csv.h"
#include "textlens/error.h"
#include "textlens/strings.h"
#include "textlens/unicode.h"

namespace textlens {
namespace {

// Keeps the timed work observable.
volatile std::size_t benchmark_sink = 0;

}  // namespace

GoldCorpus GoldCorpus::parse(std::string_view text, std::string name) {
  GoldCorpus gold;
  gold.name = std::move(name);
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::kGoldFormatError,
                   "gold line " + std::to_string(line_no) + ": " + why);
    };
    if (!unicode::is_valid_utf8(line)) throw fail("invalid UTF-8");
    GoldSentence sentence;
    for (std::string_view word : split(line, '|')) {
      const auto syllables = split_whitespace(word);
      if (syllables.empty()) throw fail("empty word");
      std::string joined = join(syllables, " ");
      if (joined != word) throw fail("stray whitespace in '" + joined + "'");
      sentence.words.push_back(unicode::to_nfc(joined));
    }
    sentence.text = join(sentence.words, " ");
    try {
      gold_spans(sentence.text, sentence.words);
    } catch (const Error& e) {
      throw fail(e.what());
    }
    gold.sentences.push_back(std::move(sentence));
  }
  return gold;
}

GoldCorpus GoldCorpus::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.filename().string());
}

SegmenterDictionary drop_every_nth(const SegmenterDictionary& dictionary,
                                   std::size_t n) {
  if (n == 0) return dictionary;
  std::vector<std::string> kept;
  const auto entries = dictionary.sorted_entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i % n != n - 1) kept.push_back(entries[i]);
  }
  return SegmenterDictionary(kept);
}

BenchReport run_f1_benchmark(const Segmenter& segmenter,
                             const GoldCorpus& gold, std::string system) {
  std::size_t matched = 0, predicted = 0, expected = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const GoldSentence& s : gold.sentences) {
    const SegmentationScore score = score_segmentation_f1(
        segmenter.segment(s.text, Language::kVietnamese), s.words, s.text);
    matched += score.matched;
    predicted += score.predicted;
    expected += score.gold;
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  const SegmentationScore total = make_score(matched, predicted, expected);
  BenchReport report;
  report.system = std::move(system);
  report.precision = total.precision * 100.0;
  report.recall = total.recall * 100.0;
  report.f1 = total.f1 * 100.0;
  report.wall_time = elapsed.count();
  report.input_size = gold.sentences.size();
  return report;
}

BenchReport run_throughput_benchmark(const Segmenter& segmenter,
                                     const std::vector<std::string>& sentences,
                                     const ThroughputOptions& options,
                                     std::string system) {
  if (options.repeats < 1) {
    throw Error(ErrorCode::kInvalidInput, "repeats must be at least 1");
  }
  std::size_t sink = 0;
  auto pass = [&] {
    for (const std::string& s : sentences) {
      sink += segmenter.segment(s, options.language).tokens.size();
    }
  };
  for (int i = 0; i < options.warmup; ++i) pass();
  BenchReport report;
  for (int i = 0; i < options.repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    pass();
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    report.pass_times.push_back(elapsed.count());
  }
  std::vector<double> sorted = report.pass_times;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  report.wall_time =
      n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  report.system = std::move(system);
  report.language = options.language;
  report.input_size = sentences.size();
  report.throughput = report.wall_time > 0.0
                          ? static_cast<double>(sentences.size()) /
                                report.wall_time
                          : 0.0;
  benchmark_sink = sink;
  return report;
}

BenchReport run_throughput_benchmark(
    const Segmenter& segmenter,
    const std::function<std::vector<std::string>()>& loader,
    const ThroughputOptions& options, std::string system) {
  const std::vector<std::string> sentences = loader();
  return run_throughput_benchmark(segmenter, sentences, options,
                                  std::move(system));
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "md" || name == "markdown") return TableFormat::kMarkdown;
  if (name == "csv") return TableFormat::kCsv;
  throw Error(ErrorCode::kInvalidInput,
              "format must be 'md' or 'csv', got '" + std::string(name) + "'");
}

namespace {

std::string fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

}  // namespace

std::string emit_table(const std::vector<BenchReport>& reports,
                       TableFormat format) {
  std::set<Language> languages;
  struct Row {
    std::optional<double> f1;
    std::map<Language, const BenchReport*> quality;
    std::map<Language, const BenchReport*> speed;
  };
  std::map<std::string, Row> rows;
  for (const BenchReport& r : reports) {
    languages.insert(r.language);
    Row& row = rows[r.system];
    if (r.f1) {
      row.quality[r.language] = &r;
      if (!row.f1 || *r.f1 > *row.f1) row.f1 = r.f1;
    }
    if (r.throughput) row.speed[r.language] = &r;
  }

  std::vector<std::string> header = {"System"};
  for (Language l : languages) {
    const std::string code(language_code(l));
    header.push_back("F1 " + code + " (%)");
    header.push_back("Speed " + code + " (sent/sec)");
  }
  std::vector<std::pair<std::string, const Row*>> ordered;
  for (const auto& [name, row] : rows) ordered.emplace_back(name, &row);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) {
                     const auto& fa = a.second->f1;
                     const auto& fb = b.second->f1;
                     if (fa.has_value() != fb.has_value()) return fa.has_value();
                     return fa && *fa > *fb;
                   });

  const std::string missing = format == TableFormat::kMarkdown ? "-" : "";
  std::vector<std::vector<std::string>> body;
  for (const auto& [name, row] : ordered) {
    std::vector<std::string> cells = {name};
    for (Language l : languages) {
      auto q = row->quality.find(l);
      cells.push_back(q == row->quality.end() ? missing
                                              : fixed(*q->second->f1, 1));
      auto s = row->speed.find(l);
      cells.push_back(s == row->speed.end() ? missing
                                            : fixed(*s->second->throughput, 0));
    }
    body.push_back(std::move(cells));
  }

  std::string out;
  if (format == TableFormat::kCsv) {
    csv::append_row(out, header);
    for (const auto& cells : body) csv::append_row(out, cells);
    return out;
  }
  auto md_row = [&](const std::vector<std::string>& cells) {
    out += "|";
    for (const auto& c : cells) out += " " + c + " |";
    out += "\n";
  };
  md_row(header);
  out += "|";
  for (std::size_t i = 0; i < header.size(); ++i) out += i == 0 ? "---|" : "---:|";
  out += "\n";
  for (const auto& cells : body) md_row(cells);
  return out;
}

}  // namespace textlens
