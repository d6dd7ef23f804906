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

// Byte pair encoding over code points with a separate end-of-word symbol.

#ifndef TEXTLENS_BPE_H_
#define TEXTLENS_BPE_H_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace textlens {

inline constexpr std::string_view kEndOfWord = "</w>";

using MergePair = std::pair<std::string, std::string>;

class BpeModel {
 public:
  BpeModel() = default;
  BpeModel(std::vector<MergePair> merges, std::set<std::string> alphabet);

  const std::vector<MergePair>& merges() const { return merges_; }
  // Alphabet, end-of-word marker and every merge output.
  const std::set<std::string>& vocab() const { return vocab_; }
  // Rank of a merge, or npos.
  std::size_t rank(std::string_view left, std::string_view right) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<MergePair> merges_;
  std::set<std::string> vocab_;
  std::unordered_map<std::string, std::size_t> ranks_;  // left '\0' right
};

// Trains on word occurrences. Each step merges the most frequent adjacent
// pair, weighted by word counts, breaking ties by the byte-wise smaller
// (left, right). Stops after `num_merges` steps or once no pair occurs twice.
// Throws kInvalidInput for an empty corpus.
BpeModel bpe_train(const std::vector<std::string>& words,
                   std::size_t num_merges);

// Splits into code points plus kEndOfWord and replays the merges in rank
// order. The output concatenates to `word` followed by kEndOfWord.
std::vector<std::string> bpe_encode(std::string_view word,
                                    const BpeModel& model);

// Concatenates and strips the trailing end-of-word marker.
std::string bpe_decode(const std::vector<std::string>& symbols);

// "bpe-v1" header, then "left right" per merge in rank order. Symbols may
// not contain spaces or newlines (kInvalidInput on save).
std::string serialise_bpe(const BpeModel& model);
BpeModel parse_bpe(std::string_view text);
BpeModel load_bpe(const std::filesystem::path& path);

}  // namespace textlens

#endif  // TEXTLENS_BPE_H_
