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

#include "textlens/resources.h"

#include <utility>

#include "textlens/error.h"

namespace textlens {
namespace {

LanguagePaths language_paths(const std::filesystem::path& dir) {
  return {dir / "stopwords.txt", dir / "abbreviations.txt",
          dir / "lexicon.tsv", dir / "reference.txt", dir / "bpe.txt"};
}

template <typename F>
auto load_file(const std::filesystem::path& path, F&& loader) {
  try {
    return loader(path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIoError) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

LanguageResources load_language(const LanguagePaths& p) {
  LanguageResources r;
  r.stopwords = load_file(p.stopwords, WordList::load);
  r.abbreviations = load_file(p.abbreviations, WordList::load);
  r.lexicon = load_file(p.lexicon, SentimentLexicon::load);
  r.reference = load_file(p.reference, load_reference_corpus);
  r.bpe = std::make_shared<const BpeModel>(load_file(p.bpe, load_bpe));
  return r;
}

}  // namespace

ResourcePaths ResourcePaths::from_data_dir(const std::filesystem::path& dir) {
  return {dir / "vi" / "dictionary.txt", dir / "aspects.tsv",
          dir / "thesaurus.tsv", language_paths(dir / "vi"),
          language_paths(dir / "en")};
}

std::filesystem::path default_data_dir() { return TEXTLENS_DATA_DIR; }

Resources Resources::load(const ResourcePaths& paths) {
  Resources r;
  r.dictionary = std::make_shared<const SegmenterDictionary>(
      load_file(paths.dictionary, SegmenterDictionary::load));
  r.vietnamese = load_language(paths.vietnamese);
  r.english = load_language(paths.english);
  r.aspects = load_file(paths.aspects, AspectCatalogue::load);
  r.thesaurus = load_file(paths.thesaurus, Thesaurus::load);
  return r;
}

const LanguageResources& Resources::language(Language language) const {
  return language == Language::kVietnamese ? vietnamese : english;
}

Segmenter Resources::segmenter(SegmenterKind kind) const {
  return Segmenter(kind, dictionary, vietnamese.bpe, english.bpe);
}

LanguageDetector Resources::detector() const {
  return LanguageDetector(vietnamese.stopwords, english.stopwords);
}

}  // namespace textlens
