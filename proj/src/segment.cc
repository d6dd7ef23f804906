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

#include "textlens/segment.h"

#include <algorithm>
#include <set>

#include "textlens/error.h"
#include "textlens/strings.h"
#include "textlens/unicode.h"

namespace textlens {
namespace {

using unicode::CharClass;

struct Piece {
  CharClass kind;
  std::size_t byte_begin, byte_end;
  std::size_t cp_begin, cp_end;
};

// Maximal letter runs, maximal digit runs and single punctuation characters.
std::vector<Piece> scan_pieces(std::string_view text) {
  std::vector<Piece> pieces;
  std::size_t i = 0;
  std::size_t cp = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    const std::size_t cp_start = cp;
    const CharClass kind = unicode::classify(unicode::next_code_point(text, i));
    ++cp;
    if (kind == CharClass::kSpace) continue;
    if (kind == CharClass::kLetter || kind == CharClass::kDigit) {
      while (i < text.size()) {
        std::size_t j = i;
        if (unicode::classify(unicode::next_code_point(text, j)) != kind) break;
        i = j;
        ++cp;
      }
    }
    pieces.push_back({kind, start, i, cp_start, cp});
  }
  return pieces;
}

bool only_whitespace(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  while (i < s.size()) {
    if (unicode::classify(unicode::next_code_point(s, i)) != CharClass::kSpace) {
      return false;
    }
  }
  return true;
}

Token make_token(std::string_view text, const Piece& first, const Piece& last,
                 bool is_word) {
  Token t;
  t.span = {first.cp_begin, last.cp_end};
  t.byte_span = {first.byte_begin, last.byte_end};
  t.is_word = is_word;
  t.surface = std::string(
      text.substr(first.byte_begin, last.byte_end - first.byte_begin));
  return t;
}

bool is_closing(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x201D ||
         cp == 0x2019 || cp == 0x00BB;
}

bool is_terminator(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == 0x2026;
}

std::string remove_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

void attach_subwords(SegmentedText& segmented, const BpeModel& model) {
  for (Token& t : segmented.tokens) {
    if (t.is_word) t.subwords = bpe_encode(remove_spaces(t.surface), model);
  }
}

}  // namespace

SegmenterDictionary::SegmenterDictionary(
    const std::vector<std::string>& entries) {
  for (const auto& entry : entries) {
    const std::string folded = unicode::fold_case(unicode::to_nfc(entry));
    const auto syllables = split_whitespace(folded);
    if (syllables.size() < 2 || syllables.size() > 4) {
      throw Error(ErrorCode::kInvalidInput,
                  "dictionary entry '" + entry + "' must have 2 to 4 syllables");
    }
    entries_.insert(join(syllables, " "));
    max_word_syllables_ = std::max(max_word_syllables_, syllables.size());
  }
}

SegmenterDictionary SegmenterDictionary::parse(std::string_view text) {
  std::vector<std::string> entries;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (split_whitespace(line).size() < 2) continue;
    entries.emplace_back(line);
  }
  return SegmenterDictionary(entries);
}

SegmenterDictionary SegmenterDictionary::load(
    const std::filesystem::path& path) {
  return parse(read_file(path));
}

std::vector<std::string> SegmenterDictionary::sorted_entries() const {
  std::vector<std::string> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end());
  return out;
}

SegmentedText segment_vietnamese(std::string_view text,
                                 const SegmenterDictionary& dict) {
  SegmentedText out;
  out.language = Language::kVietnamese;
  const std::vector<Piece> pieces = scan_pieces(text);
  out.tokens.reserve(pieces.size());
  const std::size_t max_len = dict.max_word_syllables();

  std::vector<std::string> folded;  // per piece, letters only
  folded.reserve(pieces.size());
  for (const Piece& p : pieces) {
    folded.push_back(
        !dict.empty() && p.kind == CharClass::kLetter
            ? unicode::fold_case(
                  text.substr(p.byte_begin, p.byte_end - p.byte_begin))
            : std::string());
  }

  std::string key;
  for (std::size_t i = 0; i < pieces.size();) {
    const Piece& p = pieces[i];
    if (p.kind != CharClass::kLetter) {
      out.tokens.push_back(make_token(text, p, p, false));
      ++i;
      continue;
    }
    // Longest run of syllables separated by whitespace only.
    std::size_t run = 1;
    while (run < max_len && i + run < pieces.size() &&
           pieces[i + run].kind == CharClass::kLetter &&
           only_whitespace(text.substr(
               pieces[i + run - 1].byte_end,
               pieces[i + run].byte_begin - pieces[i + run - 1].byte_end))) {
      ++run;
    }
    std::size_t taken = 1;
    for (std::size_t n = run; n >= 2; --n) {
      key.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) key.push_back(' ');
        key += folded[i + k];
      }
      if (dict.contains(key)) {
        taken = n;
        break;
      }
    }
    Token t = make_token(text, p, pieces[i + taken - 1], true);
    if (taken > 1) {
      t.surface.clear();
      for (std::size_t k = 0; k < taken; ++k) {
        const Piece& s = pieces[i + k];
        if (k > 0) t.surface.push_back(' ');
        t.surface.append(text.substr(s.byte_begin, s.byte_end - s.byte_begin));
      }
    }
    out.tokens.push_back(std::move(t));
    i += taken;
  }
  return out;
}

SegmentedText tokenize_english(std::string_view text) {
  SegmentedText out;
  out.language = Language::kEnglish;

  // Code points of one whitespace-delimited chunk.
  struct Cp {
    std::size_t byte_begin, byte_end, index;
    CharClass kind;
  };
  std::vector<Cp> chunk;

  auto emit = [&](std::size_t from, std::size_t to, bool is_word) {
    Token t;
    t.span = {chunk[from].index, chunk[to - 1].index + 1};
    t.byte_span = {chunk[from].byte_begin, chunk[to - 1].byte_end};
    t.surface = std::string(
        text.substr(t.byte_span.begin, t.byte_span.end - t.byte_span.begin));
    t.is_word = is_word;
    out.tokens.push_back(std::move(t));
  };

  auto flush = [&] {
    if (chunk.empty()) return;
    std::size_t lo = 0;
    std::size_t hi = chunk.size();
    while (lo < hi && chunk[lo].kind == CharClass::kPunct) {
      emit(lo, lo + 1, false);
      ++lo;
    }
    std::size_t trail = hi;
    while (trail > lo && chunk[trail - 1].kind == CharClass::kPunct) --trail;
    if (trail > lo) {
      bool has_letter = false;
      for (std::size_t k = lo; k < trail; ++k) {
        if (chunk[k].kind == CharClass::kLetter) has_letter = true;
      }
      emit(lo, trail, has_letter);
    }
    for (std::size_t k = trail; k < hi; ++k) emit(k, k + 1, false);
    chunk.clear();
  };

  std::size_t i = 0;
  std::size_t cp = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    const CharClass kind = unicode::classify(unicode::next_code_point(text, i));
    if (kind == CharClass::kSpace) {
      flush();
    } else {
      chunk.push_back({start, i, cp, kind});
    }
    ++cp;
  }
  flush();
  return out;
}

SegmentedText segment_hybrid(std::string_view text, Language language,
                             const SegmenterDictionary& dict,
                             const BpeModel& model) {
  SegmentedText out = language == Language::kVietnamese
                          ? segment_vietnamese(text, dict)
                          : tokenize_english(text);
  attach_subwords(out, model);
  return out;
}

std::vector<std::string> bpe_training_words(const SegmentedText& segmented) {
  std::vector<std::string> words;
  for (const Token& t : segmented.tokens) {
    if (t.is_word) words.push_back(remove_spaces(t.surface));
  }
  return words;
}

std::string export_segmentation_tsv(const SegmentedText& segmented) {
  std::string out;
  for (const Token& t : segmented.tokens) {
    out += t.surface;
    out += '\t' + std::to_string(t.span.begin) + '\t' +
           std::to_string(t.span.end) + '\t';
    if (t.subwords) out += join(*t.subwords, " ");
    out += '\n';
  }
  return out;
}

std::vector<Sentence> split_sentences(std::string_view text,
                                      const WordList& abbreviations) {
  struct Cp {
    std::size_t byte_begin, byte_end;
    char32_t value;
  };
  std::vector<Cp> cps;
  cps.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const std::size_t start = i;
    const char32_t c = unicode::next_code_point(text, i);
    cps.push_back({start, i, c});
  }
  auto is_space = [&](std::size_t k) {
    return unicode::classify(cps[k].value) == CharClass::kSpace;
  };

  std::vector<Sentence> sentences;
  auto emit = [&](std::size_t from, std::size_t to) {
    while (from < to && is_space(from)) ++from;
    while (to > from && is_space(to - 1)) --to;
    if (from == to) return;
    Sentence s;
    s.span = {from, to};
    s.byte_span = {cps[from].byte_begin, cps[to - 1].byte_end};
    s.text = std::string(
        text.substr(s.byte_span.begin, s.byte_span.end - s.byte_span.begin));
    sentences.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t k = 0;
  while (k < cps.size()) {
    if (!is_terminator(cps[k].value)) {
      ++k;
      continue;
    }
    const std::size_t run_begin = k;
    while (k < cps.size() && is_terminator(cps[k].value)) ++k;
    while (k < cps.size() && is_closing(cps[k].value)) ++k;
    const std::size_t end = k;

    std::size_t next = end;
    while (next < cps.size() && is_space(next)) ++next;
    bool split = false;
    if (next == cps.size()) {
      split = true;
    } else if (next > end && unicode::is_upper(cps[next].value)) {
      split = true;
    }
    if (split && run_begin + 1 == end && cps[run_begin].value == '.') {
      std::size_t chunk = run_begin;
      while (chunk > start && !is_space(chunk - 1)) --chunk;
      const auto word = text.substr(cps[chunk].byte_begin,
                                    cps[end - 1].byte_end - cps[chunk].byte_begin);
      if (abbreviations.contains(unicode::fold_case(word))) split = false;
    }
    if (split) {
      emit(start, end);
      start = end;
    }
  }
  emit(start, cps.size());
  return sentences;
}

SegmentationScore make_score(std::size_t matched, std::size_t predicted,
                             std::size_t gold) {
  SegmentationScore s;
  s.matched = matched;
  s.predicted = predicted;
  s.gold = gold;
  s.precision = predicted == 0 ? 1.0 : static_cast<double>(matched) / predicted;
  s.recall = gold == 0 ? 1.0 : static_cast<double>(matched) / gold;
  s.f1 = s.precision + s.recall > 0
             ? 2 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

std::vector<Span> gold_spans(std::string_view source,
                             const std::vector<std::string>& gold) {
  auto mismatch = [&](const std::string& why) {
    return Error(ErrorCode::kSpanMismatch, why);
  };
  std::vector<Span> spans;
  spans.reserve(gold.size());
  std::size_t i = 0;   // bytes into source
  std::size_t cp = 0;  // code points into source

  auto skip_space = [&] {
    std::size_t n = 0;
    while (i < source.size()) {
      std::size_t j = i;
      if (unicode::classify(unicode::next_code_point(source, j)) !=
          CharClass::kSpace) {
        break;
      }
      i = j;
      ++cp;
      ++n;
    }
    return n;
  };

  for (const std::string& word : gold) {
    const auto syllables = split_whitespace(word);
    if (syllables.empty()) throw mismatch("empty gold word");
    skip_space();
    const std::size_t begin = cp;
    for (std::size_t s = 0; s < syllables.size(); ++s) {
      if (s > 0 && skip_space() == 0) {
        throw mismatch("gold word '" + word + "' does not match the source");
      }
      const std::string_view syl = syllables[s];
      if (source.substr(i, syl.size()) != syl) {
        throw mismatch("gold word '" + word + "' does not match the source");
      }
      i += syl.size();
      cp += unicode::count_code_points(syl);
    }
    spans.push_back({begin, cp});
  }
  skip_space();
  if (i != source.size()) throw mismatch("gold words do not cover the source");
  return spans;
}

SegmentationScore score_segmentation_f1(const SegmentedText& predicted,
                                        const std::vector<std::string>& gold,
                                        std::string_view source) {
  const std::vector<Span> gold_set = gold_spans(source, gold);
  std::set<Span> expected(gold_set.begin(), gold_set.end());
  std::set<Span> got;
  for (const Token& t : predicted.tokens) got.insert(t.span);
  std::size_t matched = 0;
  for (const Span& s : got) matched += expected.count(s);
  return make_score(matched, got.size(), expected.size());
}

std::string_view segmenter_kind_name(SegmenterKind kind) {
  switch (kind) {
    case SegmenterKind::kMaxMatch: return "maxmatch";
    case SegmenterKind::kHybrid: return "hybrid";
    case SegmenterKind::kWhitespace: return "whitespace";
  }
  return "maxmatch";
}

SegmenterKind parse_segmenter_kind(std::string_view name) {
  if (name == "maxmatch") return SegmenterKind::kMaxMatch;
  if (name == "hybrid") return SegmenterKind::kHybrid;
  if (name == "whitespace") return SegmenterKind::kWhitespace;
  throw Error(ErrorCode::kInvalidInput,
              "unknown segmenter '" + std::string(name) + "'");
}

Segmenter::Segmenter(SegmenterKind kind,
                     std::shared_ptr<const SegmenterDictionary> dictionary,
                     std::shared_ptr<const BpeModel> vietnamese_bpe,
                     std::shared_ptr<const BpeModel> english_bpe)
    : kind_(kind),
      dictionary_(std::move(dictionary)),
      vietnamese_bpe_(std::move(vietnamese_bpe)),
      english_bpe_(std::move(english_bpe)) {
  if (kind_ == SegmenterKind::kWhitespace || !dictionary_) {
    dictionary_ = std::make_shared<const SegmenterDictionary>();
  }
  if (kind_ == SegmenterKind::kHybrid) {
    if (!vietnamese_bpe_ && !english_bpe_) {
      throw Error(ErrorCode::kInvalidInput,
                  "hybrid segmenter needs at least one BPE model");
    }
    if (!vietnamese_bpe_) vietnamese_bpe_ = english_bpe_;
    if (!english_bpe_) english_bpe_ = vietnamese_bpe_;
  }
}

SegmentedText Segmenter::segment(std::string_view text,
                                 Language language) const {
  const bool vietnamese = language == Language::kVietnamese;
  SegmentedText out = vietnamese ? segment_vietnamese(text, *dictionary_)
                                 : tokenize_english(text);
  if (kind_ == SegmenterKind::kHybrid) {
    attach_subwords(out, vietnamese ? *vietnamese_bpe_ : *english_bpe_);
  }
  return out;
}

}  // namespace textlens
