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

#include "textlens/bpe.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>

#include "textlens/error.h"
#include "textlens/strings.h"
#include "textlens/text.h"
#include "textlens/unicode.h"

namespace textlens {
namespace {

std::string rank_key(std::string_view left, std::string_view right) {
  std::string key;
  key.reserve(left.size() + right.size() + 1);
  key.append(left);
  key.push_back('\0');
  key.append(right);
  return key;
}

using SymbolId = std::uint32_t;
using PairId = std::uint64_t;

PairId make_pair_id(SymbolId a, SymbolId b) {
  return (static_cast<PairId>(a) << 32) | b;
}
SymbolId pair_left(PairId p) { return static_cast<SymbolId>(p >> 32); }
SymbolId pair_right(PairId p) { return static_cast<SymbolId>(p & 0xFFFFFFFFu); }

// Training state: interned symbols, unique words with counts, global pair
// counts and a priority set ordered by (count desc, left, right).
class Trainer {
 public:
  explicit Trainer(const std::vector<std::string>& words) {
    std::map<std::string, std::size_t> counts;
    for (const auto& w : words) ++counts[w];
    end_of_word_ = intern(std::string(kEndOfWord));
    for (const auto& [word, count] : counts) {
      std::vector<SymbolId> symbols;
      for (auto& cp : unicode::split_code_points(word)) {
        alphabet_.insert(cp);
        symbols.push_back(intern(cp));
      }
      symbols.push_back(end_of_word_);
      words_.push_back(std::move(symbols));
      counts_.push_back(static_cast<std::int64_t>(count));
    }
    for (std::size_t w = 0; w < words_.size(); ++w) add_pairs(w, +1);
  }

  BpeModel run(std::size_t num_merges) {
    std::vector<MergePair> merges;
    while (merges.size() < num_merges && !queue_.empty()) {
      const Entry best = *queue_.begin();
      if (-best.neg_count < 2) break;
      const SymbolId a = pair_left(best.pair);
      const SymbolId b = pair_right(best.pair);
      merges.emplace_back(symbols_[a], symbols_[b]);
      const SymbolId merged = intern(symbols_[a] + symbols_[b]);
      // Copy: apply_merge mutates the occurrence index.
      const auto holders = where_[best.pair];
      std::vector<std::size_t> sorted(holders.begin(), holders.end());
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t w : sorted) apply_merge(w, a, b, merged);
    }
    return BpeModel(std::move(merges), std::move(alphabet_));
  }

 private:
  struct Entry {
    std::int64_t neg_count;
    PairId pair;
    const std::vector<std::string>* symbols;

    bool operator<(const Entry& o) const {
      if (neg_count != o.neg_count) return neg_count < o.neg_count;
      const auto& s = *symbols;
      const std::string& la = s[pair_left(pair)];
      const std::string& lb = s[pair_left(o.pair)];
      if (la != lb) return la < lb;
      return s[pair_right(pair)] < s[pair_right(o.pair)];
    }
  };

  SymbolId intern(const std::string& symbol) {
    auto [it, inserted] =
        ids_.try_emplace(symbol, static_cast<SymbolId>(symbols_.size()));
    if (inserted) symbols_.push_back(symbol);
    return it->second;
  }

  void adjust(PairId pair, std::int64_t delta) {
    auto it = pair_counts_.find(pair);
    std::int64_t old = it == pair_counts_.end() ? 0 : it->second;
    if (old > 0) queue_.erase(Entry{-old, pair, &symbols_});
    const std::int64_t now = old + delta;
    if (now > 0) {
      pair_counts_[pair] = now;
      queue_.insert(Entry{-now, pair, &symbols_});
    } else if (it != pair_counts_.end()) {
      pair_counts_.erase(it);
    }
  }

  void add_pairs(std::size_t w, int sign) {
    const auto& s = words_[w];
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      const PairId p = make_pair_id(s[i], s[i + 1]);
      adjust(p, sign * counts_[w]);
      if (sign > 0) where_[p].insert(w);
    }
  }

  void apply_merge(std::size_t w, SymbolId a, SymbolId b, SymbolId merged) {
    auto& s = words_[w];
    bool present = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == a && s[i + 1] == b) {
        present = true;
        break;
      }
    }
    if (!present) return;
    add_pairs(w, -1);
    std::vector<SymbolId> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
      if (i + 1 < s.size() && s[i] == a && s[i + 1] == b) {
        out.push_back(merged);
        i += 2;
      } else {
        out.push_back(s[i++]);
      }
    }
    s = std::move(out);
    add_pairs(w, +1);
  }

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> ids_;
  SymbolId end_of_word_ = 0;
  std::set<std::string> alphabet_;
  std::vector<std::vector<SymbolId>> words_;
  std::vector<std::int64_t> counts_;
  std::unordered_map<PairId, std::int64_t> pair_counts_;
  std::unordered_map<PairId, std::unordered_set<std::size_t>> where_;
  std::set<Entry> queue_;
};

}  // namespace

BpeModel::BpeModel(std::vector<MergePair> merges,
                   std::set<std::string> alphabet)
    : merges_(std::move(merges)), vocab_(std::move(alphabet)) {
  vocab_.insert(std::string(kEndOfWord));
  for (std::size_t r = 0; r < merges_.size(); ++r) {
    const auto& [left, right] = merges_[r];
    ranks_.try_emplace(rank_key(left, right), r);
    vocab_.insert(left);
    vocab_.insert(right);
    vocab_.insert(left + right);
  }
}

std::size_t BpeModel::rank(std::string_view left,
                           std::string_view right) const {
  auto it = ranks_.find(rank_key(left, right));
  return it == ranks_.end() ? npos : it->second;
}

BpeModel bpe_train(const std::vector<std::string>& words,
                   std::size_t num_merges) {
  if (words.empty()) {
    throw Error(ErrorCode::kInvalidInput, "BPE training corpus is empty");
  }
  return Trainer(words).run(num_merges);
}

std::vector<std::string> bpe_encode(std::string_view word,
                                    const BpeModel& model) {
  std::vector<std::string> symbols = unicode::split_code_points(word);
  symbols.emplace_back(kEndOfWord);
  if (model.merges().empty()) return symbols;

  // Merges are replayed in rank order, so a pair that becomes adjacent only
  // after a later merge is never merged by an earlier-ranked rule.
  std::size_t last = 0;
  bool first = true;
  while (symbols.size() > 1) {
    std::size_t best = BpeModel::npos;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      const std::size_t r = model.rank(symbols[i], symbols[i + 1]);
      if (r == BpeModel::npos || (!first && r <= last)) continue;
      best = std::min(best, r);
    }
    if (best == BpeModel::npos) break;
    const auto& [left, right] = model.merges()[best];
    std::vector<std::string> out;
    out.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size();) {
      if (i + 1 < symbols.size() && symbols[i] == left &&
          symbols[i + 1] == right) {
        out.push_back(left + right);
        i += 2;
      } else {
        out.push_back(std::move(symbols[i++]));
      }
    }
    symbols = std::move(out);
    last = best;
    first = false;
  }
  return symbols;
}

std::string bpe_decode(const std::vector<std::string>& symbols) {
  std::string out;
  for (const auto& s : symbols) out += s;
  if (out.size() >= kEndOfWord.size() &&
      std::string_view(out).substr(out.size() - kEndOfWord.size()) ==
          kEndOfWord) {
    out.resize(out.size() - kEndOfWord.size());
  }
  return out;
}

std::string serialise_bpe(const BpeModel& model) {
  std::string out = "bpe-v1\n";
  for (const auto& [left, right] : model.merges()) {
    for (const std::string* s : {&left, &right}) {
      if (s->empty() || s->find_first_of(" \t\r\n") != std::string::npos) {
        throw Error(ErrorCode::kInvalidInput,
                    "BPE symbol '" + *s + "' cannot be serialised");
      }
    }
    out += left;
    out += ' ';
    out += right;
    out += '\n';
  }
  return out;
}

BpeModel parse_bpe(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines.front()) != "bpe-v1") {
    throw Error(ErrorCode::kInvalidInput, "BPE model must start with bpe-v1");
  }
  std::vector<MergePair> merges;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto parts = split(lines[n], ' ');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
      throw Error(ErrorCode::kInvalidInput,
                  "malformed BPE merge on line " + std::to_string(n + 1));
    }
    merges.emplace_back(std::string(parts[0]), std::string(parts[1]));
  }
  return BpeModel(std::move(merges), {});
}

BpeModel load_bpe(const std::filesystem::path& path) {
  return parse_bpe(read_file(path));
}

}  // namespace textlens
