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

#include "textlens/concordance.h"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"
#include "textlens/csv.h"
#include "textlens/error.h"
#include "textlens/strings.h"
#include "textlens/unicode.h"

namespace textlens {

SegmentedCorpus::SegmentedCorpus(std::vector<SegmentedDocument> documents)
    : documents_(std::move(documents)) {}

SegmentedCorpus SegmentedCorpus::build(
    std::span<const Document> documents, const Segmenter& segmenter,
    const WordList& vietnamese_abbreviations,
    const WordList& english_abbreviations) {
  std::vector<SegmentedDocument> out;
  out.reserve(documents.size());
  for (const Document& doc : documents) {
    const bool vi = doc.language == Language::kVietnamese;
    SegmentedDocument sd;
    sd.id = doc.id;
    sd.text = segmenter.segment(
        doc.raw_text, vi ? Language::kVietnamese : Language::kEnglish);
    const auto sentences = split_sentences(
        doc.raw_text, vi ? vietnamese_abbreviations : english_abbreviations);
    sd.sentence_of.reserve(sd.text.tokens.size());
    std::size_t s = 0;
    for (const Token& t : sd.text.tokens) {
      while (s + 1 < sentences.size() &&
             sentences[s + 1].byte_span.begin <= t.byte_span.begin) {
        ++s;
      }
      sd.sentence_of.push_back(s);
    }
    out.push_back(std::move(sd));
  }
  return SegmentedCorpus(std::move(out));
}

void SegmentedCorpus::build_index() const {
  for (std::size_t d = 0; d < documents_.size(); ++d) {
    const auto& tokens = documents_[d].text.tokens;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].is_word) {
        index_[unicode::fold_case(tokens[i].surface)].push_back({d, i});
      }
    }
  }
}

std::span<const SegmentedCorpus::Position> SegmentedCorpus::positions(
    const std::string& folded) const {
  std::call_once(index_once_, [this] { build_index(); });
  auto it = index_.find(folded);
  if (it == index_.end()) return {};
  return it->second;
}

namespace {

struct Match {
  std::size_t document;
  std::size_t first;
  std::size_t last;  // exclusive
};

std::string normalise_query(std::string_view query, bool case_sensitive) {
  std::string q = join(split_whitespace(unicode::to_nfc(query)), " ");
  return case_sensitive ? q : unicode::fold_case(q);
}

std::vector<Match> find_matches(const SegmentedCorpus& corpus,
                                std::string_view raw_query,
                                bool case_sensitive) {
  const std::string query = normalise_query(raw_query, case_sensitive);
  if (query.empty()) {
    throw Error(ErrorCode::kInvalidInput, "query must not be empty");
  }
  auto surface = [&](const Token& t) {
    return case_sensitive ? t.surface : unicode::fold_case(t.surface);
  };
  std::vector<Match> matches;
  // A match's first token covers a whole-syllable prefix of the query.
  std::size_t cut = 0;
  while (true) {
    cut = query.find(' ', cut + 1);
    const std::string prefix = query.substr(0, cut);
    for (const auto& pos : corpus.positions(unicode::fold_case(prefix))) {
      const auto& tokens = corpus.documents()[pos.document].text.tokens;
      std::string joined = surface(tokens[pos.token]);
      if (joined != prefix) continue;
      std::size_t k = pos.token + 1;
      while (joined.size() < query.size() && k < tokens.size() &&
             tokens[k].is_word) {
        joined += ' ';
        joined += surface(tokens[k]);
        if (query.compare(0, joined.size(), joined) != 0) break;
        ++k;
      }
      if (joined == query) matches.push_back({pos.document, pos.token, k});
    }
    if (cut == std::string::npos) break;
  }
  std::sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
    return a.document != b.document ? a.document < b.document
                                    : a.first < b.first;
  });
  return matches;
}

}  // namespace

std::vector<ConcordanceLine> kwic(const SegmentedCorpus& corpus,
                                  std::string_view query, std::size_t window,
                                  bool case_sensitive) {
  std::vector<ConcordanceLine> lines;
  for (const Match& m : find_matches(corpus, query, case_sensitive)) {
    const SegmentedDocument& doc = corpus.documents()[m.document];
    const auto& tokens = doc.text.tokens;
    ConcordanceLine line;
    line.doc_id = doc.id;
    for (std::size_t i = m.first - std::min(window, m.first); i < m.first; ++i) {
      line.left.push_back(tokens[i].surface);
    }
    for (std::size_t i = m.first; i < m.last; ++i) {
      line.node.push_back(tokens[i].surface);
    }
    const std::size_t end = std::min(tokens.size(), m.last + window);
    for (std::size_t i = m.last; i < end; ++i) {
      line.right.push_back(tokens[i].surface);
    }
    line.char_span = {tokens[m.first].span.begin, tokens[m.last - 1].span.end};
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string export_concordance_csv(const std::vector<ConcordanceLine>& lines) {
  std::string out;
  csv::append_row(out, {"doc_id", "left", "node", "right", "start", "end"});
  for (const ConcordanceLine& l : lines) {
    csv::append_row(out, {l.doc_id, join(l.left, " "), join(l.node, " "),
                          join(l.right, " "), std::to_string(l.char_span.begin),
                          std::to_string(l.char_span.end)});
  }
  return out;
}

std::string export_concordance_json(const std::vector<ConcordanceLine>& lines) {
  using nlohmann::ordered_json;
  ordered_json items = ordered_json::array();
  for (const ConcordanceLine& l : lines) {
    ordered_json j;
    j["doc_id"] = l.doc_id;
    j["left"] = l.left;
    j["node"] = join(l.node, " ");
    j["right"] = l.right;
    j["start"] = l.char_span.begin;
    j["end"] = l.char_span.end;
    items.push_back(std::move(j));
  }
  ordered_json root;
  root["lines"] = std::move(items);
  return root.dump();
}

std::string_view tree_direction_name(TreeDirection direction) {
  return direction == TreeDirection::kRight ? "right" : "left";
}

TreeDirection parse_tree_direction(std::string_view name) {
  if (name == "right") return TreeDirection::kRight;
  if (name == "left") return TreeDirection::kLeft;
  throw Error(ErrorCode::kInvalidInput,
              "direction must be 'left' or 'right', got '" +
                  std::string(name) + "'");
}

namespace {

using Contexts = std::vector<std::vector<std::string>>;

void grow_children(WordTreeNode& node, const Contexts& contexts,
                   const std::vector<std::size_t>& members, std::size_t offset,
                   std::size_t depth, std::size_t min_count) {
  if (depth == 0) return;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i : members) {
    if (contexts[i].size() > offset) groups[contexts[i][offset]].push_back(i);
  }
  for (auto& [token, group] : groups) {
    if (group.size() < min_count) continue;
    WordTreeNode child{token, group.size(), {}};
    grow_children(child, contexts, group, offset + 1, depth - 1, min_count);
    node.children.push_back(std::move(child));
  }
  std::stable_sort(node.children.begin(), node.children.end(),
                   [](const WordTreeNode& a, const WordTreeNode& b) {
                     return a.count > b.count;
                   });
}

}  // namespace

WordTree WordTree::build(const SegmentedCorpus& corpus, std::string_view query,
                         const WordTreeOptions& options) {
  if (options.max_depth == 0) {
    throw Error(ErrorCode::kInvalidInput, "max_depth must be at least 1");
  }
  WordTree tree;
  tree.options_ = options;
  tree.query_ = normalise_query(query, options.case_sensitive);
  const auto matches = find_matches(corpus, query, options.case_sensitive);
  if (matches.empty()) {
    throw Error(ErrorCode::kQueryNotFound,
                "query '" + std::string(query) + "' does not occur");
  }
  for (const Match& m : matches) {
    const SegmentedDocument& doc = corpus.documents()[m.document];
    const auto& tokens = doc.text.tokens;
    std::vector<std::string> context;
    auto take = [&](std::size_t i) {
      context.push_back(options.case_sensitive
                            ? tokens[i].surface
                            : unicode::fold_case(tokens[i].surface));
    };
    if (options.direction == TreeDirection::kRight) {
      const std::size_t sentence = doc.sentence_of[m.last - 1];
      for (std::size_t i = m.last;
           i < tokens.size() && doc.sentence_of[i] == sentence; ++i) {
        take(i);
      }
    } else {
      const std::size_t sentence = doc.sentence_of[m.first];
      for (std::size_t i = m.first; i > 0 && doc.sentence_of[i - 1] == sentence;
           --i) {
        take(i - 1);
      }
    }
    tree.contexts_.push_back(std::move(context));
  }
  tree.root_ = tree.grow({}, options.max_depth);
  return tree;
}

WordTreeNode WordTree::grow(const std::vector<std::string>& path,
                            std::size_t depth) const {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < contexts_.size(); ++i) {
    const auto& c = contexts_[i];
    if (c.size() >= path.size() && std::equal(path.begin(), path.end(), c.begin())) {
      members.push_back(i);
    }
  }
  WordTreeNode node{path.empty() ? query_ : path.back(), members.size(), {}};
  grow_children(node, contexts_, members, path.size(), depth,
                options_.min_branch_count);
  return node;
}

WordTreeNode WordTree::expand(const std::vector<std::string>& path,
                              std::size_t additional_depth) const {
  const WordTreeNode* node = &root_;
  for (const std::string& raw : path) {
    const std::string token =
        options_.case_sensitive ? raw : unicode::fold_case(raw);
    auto it = std::find_if(node->children.begin(), node->children.end(),
                           [&](const WordTreeNode& c) { return c.token == token; });
    if (it == node->children.end()) {
      throw Error(ErrorCode::kPathNotFound,
                  "path segment '" + raw + "' is not in the tree");
    }
    node = &*it;
  }
  std::vector<std::string> folded;
  for (const std::string& raw : path) {
    folded.push_back(options_.case_sensitive ? raw : unicode::fold_case(raw));
  }
  const std::size_t current =
      options_.max_depth > path.size() ? options_.max_depth - path.size() : 0;
  return grow(folded, current + additional_depth);
}

std::string export_word_tree_json(const WordTreeNode& node) {
  std::function<nlohmann::ordered_json(const WordTreeNode&)> to_json =
      [&](const WordTreeNode& n) {
        nlohmann::ordered_json j;
        j["token"] = n.token;
        j["count"] = n.count;
        j["children"] = nlohmann::ordered_json::array();
        for (const auto& c : n.children) j["children"].push_back(to_json(c));
        return j;
      };
  return to_json(node).dump();
}

}  // namespace textlens
