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

#ifndef TEXTLENS_RESOURCES_H_
#define TEXTLENS_RESOURCES_H_

#include <filesystem>
#include <memory>

#include "textlens/abstractive.h"
#include "textlens/bpe.h"
#include "textlens/ingest.h"
#include "textlens/keyness.h"
#include "textlens/segment.h"
#include "textlens/sentiment.h"
#include "textlens/text.h"

namespace textlens {

struct LanguagePaths {
  std::filesystem::path stopwords;
  std::filesystem::path abbreviations;
  std::filesystem::path lexicon;
  std::filesystem::path reference;
  std::filesystem::path bpe;
};

struct ResourcePaths {
  std::filesystem::path dictionary;
  std::filesystem::path aspects;
  std::filesystem::path thesaurus;
  LanguagePaths vietnamese;
  LanguagePaths english;

  // The layout shipped under data/.
  static ResourcePaths from_data_dir(const std::filesystem::path& dir);
};

// Directory compiled in as the default data location.
std::filesystem::path default_data_dir();

struct LanguageResources {
  WordList stopwords;
  WordList abbreviations;
  SentimentLexicon lexicon;
  ReferenceCorpus reference;
  std::shared_ptr<const BpeModel> bpe;
};

// Everything the analyses read from disk, loaded once and then immutable.
struct Resources {
  std::shared_ptr<const SegmenterDictionary> dictionary;
  LanguageResources vietnamese;
  LanguageResources english;
  AspectCatalogue aspects;
  Thesaurus thesaurus;

  // Each file failure is rethrown naming the path.
  static Resources load(const ResourcePaths& paths);

  // Unknown language gets the English set.
  const LanguageResources& language(Language language) const;
  Segmenter segmenter(SegmenterKind kind) const;
  LanguageDetector detector() const;
};

}  // namespace textlens

#endif  // TEXTLENS_RESOURCES_H_
