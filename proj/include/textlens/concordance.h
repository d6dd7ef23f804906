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

#ifndef TEXTLENS_CONCORDANCE_H_
#define TEXTLENS_CONCORDANCE_H_

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "textlens/ingest.h"
#include "textlens/segment.h"
#include "textlens/text.h"

namespace textlens {

struct SegmentedDocument {
  std::string id;
  SegmentedText text;
  std::vector<std::size_t> sentence_of;  // sentence ordinal per token
};

// Segments every document of a snapshot once. The token -> positions index
// is built on first query.
class SegmentedCorpus {
 public:
  struct Position {
    std::size_t document;
    std::size_t token;
  };

  SegmentedCorpus(std::vector<SegmentedDocument> documents);
  // The index is not carried over; the new object rebuilds it on demand.
  SegmentedCorpus(SegmentedCorpus&& other) noexcept
      : documents_(std::move(other.documents_)) {}

  // Unknown-language documents use the English tokenizer and abbreviations.
  static SegmentedCorpus build(std::span<const Document> documents,
                               const Segmenter& segmenter,
                               const WordList& vietnamese_abbreviations,
                               const WordList& english_abbreviations);

  const std::vector<SegmentedDocument>& documents() const {
    return documents_;
  }
  // Word-token positions whose case-folded surface equals `folded`, in
  // document and token order.
  std::span<const Position> positions(const std::string& folded) const;

 private:
  void build_index() const;

  std::vector<SegmentedDocument> documents_;
  mutable std::once_flag index_once_;
  mutable std::unordered_map<std::string, std::vector<Position>> index_;
};

struct ConcordanceLine {
  std::string doc_id;
  std::vector<std::string> left;
  std::vector<std::string> node;  // matched tokens
  std::vector<std::string> right;
  Span char_span;                 // code points into the document text
};

inline constexpr std::size_t kDefaultWindow = 5;

// A match is a run of consecutive word tokens whose surfaces, joined by one
// space, equal the whitespace-collapsed query. Contexts hold up to `window`
// tokens each, punctuation included, and stop at the document edges.
std::vector<ConcordanceLine> kwic(const SegmentedCorpus& corpus,
                                  std::string_view query, std::size_t window,
                                  bool case_sensitive = false);

// doc_id,left,node,right,start,end
std::string export_concordance_csv(const std::vector<ConcordanceLine>& lines);
std::string export_concordance_json(const std::vector<ConcordanceLine>& lines);

enum class TreeDirection { kRight, kLeft };

std::string_view tree_direction_name(TreeDirection direction);
TreeDirection parse_tree_direction(std::string_view name);

struct WordTreeNode {
  std::string token;
  std::size_t count = 0;
  std::vector<WordTreeNode> children;  // count desc, then token

  friend bool operator==(const WordTreeNode&, const WordTreeNode&) = default;
};

struct WordTreeOptions {
  TreeDirection direction = TreeDirection::kRight;
  std::size_t max_depth = 4;
  std::size_t min_branch_count = 1;
  bool case_sensitive = false;
};

// Keeps the match set so branches can be grown later.
class WordTree {
 public:
  // Throws kQueryNotFound on zero matches, kInvalidInput on max_depth 0.
  static WordTree build(const SegmentedCorpus& corpus, std::string_view query,
                        const WordTreeOptions& options = {});

  const WordTreeNode& root() const { return root_; }

  // `path` lists tokens below the root. Regrows that node's subtree
  // `additional_depth` levels deeper than the current tree reaches. Throws
  // kPathNotFound.
  WordTreeNode expand(const std::vector<std::string>& path,
                      std::size_t additional_depth) const;

 private:
  WordTreeNode grow(const std::vector<std::string>& path,
                    std::size_t depth) const;

  std::string query_;
  WordTreeOptions options_;
  // Context sequence of every match, nearest token first.
  std::vector<std::vector<std::string>> contexts_;
  WordTreeNode root_;
};

std::string export_word_tree_json(const WordTreeNode& node);

}  // namespace textlens

#endif  // TEXTLENS_CONCORDANCE_H_
