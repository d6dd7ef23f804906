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


// Command-line front end: one subcommand per analysis plus the HTTP server.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "textlens/abstractive.h"
#include "textlens/bench.h"
#include "textlens/bpe.h"
#include "textlens/concordance.h"
#include "textlens/config.h"
#include "textlens/error.h"
#include "textlens/ingest.h"
#include "textlens/keyness.h"
#include "textlens/resources.h"
#include "textlens/segment.h"
#include "textlens/sentiment.h"
#include "textlens/service.h"
#include "textlens/strings.h"
#include "textlens/textrank.h"

namespace textlens {
namespace {

namespace fs = std::filesystem;

struct Globals {
  std::string data_dir = default_data_dir().string();
  std::string out;
};

struct InputOptions {
  std::vector<std::string> files;
  std::string column;
  std::string lang = "auto";
};

const std::vector<std::string> kLangs = {"auto", "vi", "en"};

void add_inputs(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("files", in.files, "Plain text or CSV files")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--column", in.column, "CSV text column: header or #index");
  cmd->add_option("--lang", in.lang, "Document language")
      ->check(CLI::IsMember(kLangs));
}

Resources load_resources(const Globals& g) {
  return Resources::load(ResourcePaths::from_data_dir(g.data_dir));
}

// Every file becomes one document, or one per cell for .csv files.
std::vector<Document> load_documents(const InputOptions& in,
                                     const Resources& r) {
  Corpus corpus;
  const LanguageDetector detector = r.detector();
  for (const std::string& file : in.files) {
    const std::string bytes = read_file(file);
    std::vector<Document> docs;
    if (fs::path(file).extension() == ".csv") {
      if (in.column.empty()) {
        throw Error(ErrorCode::kInvalidInput, file + ": CSV input needs --column");
      }
      docs = load_csv(bytes, in.column);
    } else {
      docs.push_back(load_plain_text(bytes));
      docs.back().id = fs::path(file).filename().string();
    }
    for (Document& d : docs) {
      d.language = in.lang == "auto" ? detector.detect(d.raw_text)
                                     : parse_language(in.lang);
    }
    corpus.add_all(std::move(docs));
  }
  const CorpusSnapshot snap = corpus.snapshot();
  return {snap.documents().begin(), snap.documents().end()};
}

Language pick_language(const std::string& lang,
                       const std::vector<Document>& docs) {
  return lang == "auto" ? dominant_language(docs) : parse_language(lang);
}

SegmentedCorpus segment_all(const std::vector<Document>& docs,
                            const Resources& r) {
  return SegmentedCorpus::build(docs, r.segmenter(SegmenterKind::kHybrid),
                                r.vietnamese.abbreviations,
                                r.english.abbreviations);
}

std::optional<GenerationClientOptions> client_options(const std::string& endpoint,
                                                      int timeout_ms) {
  if (endpoint.empty()) return std::nullopt;
  GenerationClientOptions o;
  o.endpoint = endpoint;
  o.timeout = std::chrono::milliseconds(timeout_ms);
  return o;
}

void write_output(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  f << text;
  if (!f) throw Error(ErrorCode::kIoError, "cannot write " + g.out);
}

Service* g_service = nullptr;

extern "C" void on_signal(int) {
  if (g_service) g_service->stop();
}

int run(int argc, char** argv) {
  CLI::App app{"Bilingual free-text analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--data", g.data_dir, "Resource directory")
      ->check(CLI::ExistingDirectory);
  app.add_option("-o,--out", g.out, "Write output to a file");
  std::function<std::string()> action;

  // segment
  auto* seg = app.add_subcommand("segment", "Tokens with code point spans");
  std::string seg_file, seg_lang = "auto", seg_kind = "hybrid", seg_dict, seg_bpe;
  seg->add_option("file", seg_file)->required()->check(CLI::ExistingFile);
  seg->add_option("--lang", seg_lang)->check(CLI::IsMember(kLangs));
  seg->add_option("--segmenter", seg_kind)
      ->check(CLI::IsMember({"maxmatch", "hybrid", "whitespace"}));
  seg->add_option("--dict", seg_dict)->check(CLI::ExistingFile);
  seg->add_option("--bpe", seg_bpe, "BPE model for the chosen language")
      ->check(CLI::ExistingFile);
  seg->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const Document doc = load_plain_text(read_file(seg_file));
      const Language lang = seg_lang == "auto" ? r.detector().detect(doc.raw_text)
                                               : parse_language(seg_lang);
      auto dict = seg_dict.empty() ? r.dictionary
                                   : std::make_shared<const SegmenterDictionary>(
                                         SegmenterDictionary::load(seg_dict));
      auto vi_bpe = r.vietnamese.bpe;
      auto en_bpe = r.english.bpe;
      if (!seg_bpe.empty()) {
        auto model = std::make_shared<const BpeModel>(load_bpe(seg_bpe));
        (lang == Language::kVietnamese ? vi_bpe : en_bpe) = model;
      }
      const Segmenter s(parse_segmenter_kind(seg_kind), dict, vi_bpe, en_bpe);
      return export_segmentation_tsv(s.segment(doc.raw_text, lang));
    };
  });

  // bpe train
  auto* bpe = app.add_subcommand("bpe", "Subword models");
  bpe->require_subcommand(1);
  bpe->fallthrough();
  auto* train = bpe->add_subcommand("train", "Train merges on word tokens");
  std::vector<std::string> train_files;
  std::string train_lang = "vi", train_dict;
  std::size_t merges = 2000;
  train->add_option("files", train_files)->required()->check(CLI::ExistingFile);
  train->add_option("--lang", train_lang)->check(CLI::IsMember({"vi", "en"}));
  train->add_option("--merges", merges);
  train->add_option("--dict", train_dict)->check(CLI::ExistingFile);
  train->callback([&] {
    action = [&] {
      const fs::path dict_path = train_dict.empty()
                                     ? fs::path(g.data_dir) / "vi" / "dictionary.txt"
                                     : fs::path(train_dict);
      const Language lang = parse_language(train_lang);
      const Segmenter s(SegmenterKind::kMaxMatch,
                        std::make_shared<const SegmenterDictionary>(
                            SegmenterDictionary::load(dict_path)));
      std::vector<std::string> words;
      for (const std::string& f : train_files) {
        const Document doc = load_plain_text(read_file(f));
        for (std::string& w : bpe_training_words(s.segment(doc.raw_text, lang))) {
          words.push_back(std::move(w));
        }
      }
      return serialise_bpe(bpe_train(words, merges));
    };
  });

  // keyness
  auto* key = app.add_subcommand("keyness", "Word cloud payload");
  InputOptions key_in;
  add_inputs(key, key_in);
  std::string key_mode = "keyness", key_format = "csv", key_reference;
  std::size_t top_k = 50;
  std::int64_t min_count = 2;
  bool keep_stopwords = false;
  key->add_option("--mode", key_mode)
      ->check(CLI::IsMember({"frequency", "log_likelihood", "keyness"}));
  key->add_option("--top-k", top_k)->check(CLI::PositiveNumber);
  key->add_option("--min-count", min_count)->check(CLI::PositiveNumber);
  key->add_flag("--keep-stopwords", keep_stopwords);
  key->add_option("--reference", key_reference)->check(CLI::ExistingFile);
  key->add_option("--format", key_format)->check(CLI::IsMember({"csv", "json"}));
  key->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const auto docs = load_documents(key_in, r);
      const Language lang = pick_language(key_in.lang, docs);
      const LanguageResources& lr = r.language(lang);
      const Segmenter s = r.segmenter(SegmenterKind::kHybrid);
      std::vector<SegmentedText> texts;
      for (const Document& d : documents_in_language(docs, lang)) {
        texts.push_back(s.segment(d.raw_text, lang));
      }
      const ReferenceCorpus reference = key_reference.empty()
                                            ? lr.reference
                                            : load_reference_corpus(key_reference);
      CloudOptions o;
      o.top_k = top_k;
      o.min_count = min_count;
      o.stopwords = keep_stopwords ? nullptr : &lr.stopwords;
      const auto entries = wordcloud_payload(
          parse_cloud_mode(key_mode), build_frequency_table(texts), &reference, o);
      return key_format == "csv" ? export_cloud_csv(entries) : export_cloud_json(entries);
    };
  });

  // summarise
  auto* sum = app.add_subcommand("summarise", "Extractive and abstractive summaries");
  sum->require_subcommand(1);
  sum->fallthrough();
  auto* ext = sum->add_subcommand("extractive", "TextRank sentence selection");
  InputOptions ext_in;
  add_inputs(ext, ext_in);
  std::string target = "30%";
  ext->add_option("--target", target, "Fraction, percentage or sentence count");
  ext->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const auto docs = load_documents(ext_in, r);
      const Language lang = pick_language(ext_in.lang, docs);
      const LanguageResources& lr = r.language(lang);
      return export_summary_json(summarise_documents(
          documents_in_language(docs, lang), lang, SummaryTarget::parse(target),
          r.segmenter(SegmenterKind::kHybrid), lr.stopwords, lr.abbreviations));
    };
  });

  auto* abs = sum->add_subcommand("abstractive", "Prompted generation");
  InputOptions abs_in;
  add_inputs(abs, abs_in);
  std::string instruction, aspect, gen_backend = "offline_stub", endpoint;
  std::size_t max_length = 256;
  int timeout_ms = 120000;
  abs->add_option("--instruction", instruction);
  abs->add_option("--aspect", aspect, "Aspect name or localised label");
  abs->add_option("--backend", gen_backend)
      ->check(CLI::IsMember({"external", "offline_stub"}));
  abs->add_option("--endpoint", endpoint, "Generation service URL");
  abs->add_option("--timeout-ms", timeout_ms)->check(CLI::PositiveNumber);
  abs->add_option("--max-length", max_length)->check(CLI::PositiveNumber);
  abs->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const auto docs = load_documents(abs_in, r);
      GenerationRequest req;
      req.language = pick_language(abs_in.lang, docs);
      std::vector<std::string> texts;
      for (const Document& d : documents_in_language(docs, req.language)) {
        texts.push_back(d.raw_text);
      }
      req.source_text = join(texts, "\n\n");
      req.instruction = instruction;
      req.max_length = max_length;
      if (!aspect.empty()) req.aspect = aspect;
      const Segmenter s = r.segmenter(SegmenterKind::kHybrid);
      GenerationSetup setup;
      setup.client = client_options(endpoint, timeout_ms);
      setup.segmenter = &s;
      setup.vietnamese_stopwords = &r.vietnamese.stopwords;
      setup.english_stopwords = &r.english.stopwords;
      setup.vietnamese_abbreviations = &r.vietnamese.abbreviations;
      setup.english_abbreviations = &r.english.abbreviations;
      return export_generated_summary_json(generate_summary(
          req, r.aspects, parse_generation_backend(gen_backend), setup));
    };
  });

  auto* asp = sum->add_subcommand("aspects", "Aspect detection");
  InputOptions asp_in;
  add_inputs(asp, asp_in);
  asp->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const auto corpus = segment_all(load_documents(asp_in, r), r);
      std::vector<SegmentedText> texts;
      for (const auto& d : corpus.documents()) texts.push_back(d.text);
      return export_aspects_json(detect_aspects(texts, r.aspects));
    };
  });

  // suggest
  auto* sug = app.add_subcommand("suggest", "Related search terms");
  std::string keyword, sug_lang = "auto", sug_backend = "offline_stub", sug_endpoint;
  sug->add_option("--keyword", keyword)->required();
  sug->add_option("--lang", sug_lang)->check(CLI::IsMember(kLangs));
  sug->add_option("--backend", sug_backend)
      ->check(CLI::IsMember({"external", "offline_stub"}));
  sug->add_option("--endpoint", sug_endpoint);
  sug->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const Language lang = sug_lang == "auto" ? r.detector().detect(keyword)
                                               : parse_language(sug_lang);
      return export_suggestions_json(
          keyword, suggest_related_terms(keyword, lang,
                                         parse_generation_backend(sug_backend),
                                         r.thesaurus, client_options(sug_endpoint, 120000)));
    };
  });

  // sentiment
  auto* sen = app.add_subcommand("sentiment", "Five- or three-class sentiment");
  InputOptions sen_in;
  add_inputs(sen, sen_in);
  std::string granularity = "sentence", sen_backend = "lexicon", sen_endpoint;
  int classes = 5, sen_timeout_ms = 30000;
  sen->add_option("--granularity", granularity)
      ->check(CLI::IsMember({"sentence", "document"}));
  sen->add_option("--backend", sen_backend)->check(CLI::IsMember({"lexicon", "external"}));
  sen->add_option("--classes", classes)->check(CLI::IsMember({3, 5}));
  sen->add_option("--endpoint", sen_endpoint, "Classifier service URL");
  sen->add_option("--timeout-ms", sen_timeout_ms)->check(CLI::PositiveNumber);
  sen->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const auto docs = load_documents(sen_in, r);
      const Segmenter s = r.segmenter(SegmenterKind::kHybrid);
      SentimentSetup setup;
      setup.segmenter = &s;
      setup.vietnamese_lexicon = &r.vietnamese.lexicon;
      setup.english_lexicon = &r.english.lexicon;
      setup.vietnamese_abbreviations = &r.vietnamese.abbreviations;
      setup.english_abbreviations = &r.english.abbreviations;
      if (!sen_endpoint.empty()) {
        ExternalClassifierOptions o;
        o.endpoint = sen_endpoint;
        o.timeout = std::chrono::milliseconds(sen_timeout_ms);
        setup.external = o;
      }
      return export_sentiment_json(
          analyse_sentiment(docs, parse_granularity(granularity),
                            parse_backend(sen_backend), setup),
          classes);
    };
  });

  // kwic
  auto* kw = app.add_subcommand("kwic", "Keyword-in-context lines");
  InputOptions kw_in;
  add_inputs(kw, kw_in);
  std::string query, kw_format = "csv";
  std::size_t window = kDefaultWindow;
  bool case_sensitive = false;
  kw->add_option("--query", query)->required();
  kw->add_option("--window", window);
  kw->add_flag("--case-sensitive", case_sensitive);
  kw->add_option("--format", kw_format)->check(CLI::IsMember({"csv", "json"}));
  kw->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const auto corpus = segment_all(load_documents(kw_in, r), r);
      const auto lines = kwic(corpus, query, window, case_sensitive);
      return kw_format == "csv" ? export_concordance_csv(lines)
                                : export_concordance_json(lines);
    };
  });

  // tree
  auto* tr = app.add_subcommand("tree", "Word tree around a query");
  InputOptions tr_in;
  add_inputs(tr, tr_in);
  std::string tr_query, direction = "right";
  WordTreeOptions topts;
  std::vector<std::string> path;
  std::size_t additional_depth = 1;
  tr->add_option("--query", tr_query)->required();
  tr->add_option("--direction", direction)->check(CLI::IsMember({"right", "left"}));
  tr->add_option("--max-depth", topts.max_depth)->check(CLI::PositiveNumber);
  tr->add_option("--min-branch-count", topts.min_branch_count)->check(CLI::PositiveNumber);
  tr->add_flag("--case-sensitive", topts.case_sensitive);
  tr->add_option("--path", path, "Tokens below the root of the branch to expand");
  tr->add_option("--additional-depth", additional_depth);
  tr->callback([&] {
    action = [&] {
      const Resources r = load_resources(g);
      const auto corpus = segment_all(load_documents(tr_in, r), r);
      topts.direction = parse_tree_direction(direction);
      const WordTree tree = WordTree::build(corpus, tr_query, topts);
      return export_word_tree_json(path.empty() ? tree.root()
                                                : tree.expand(path, additional_depth));
    };
  });

  // bench
  auto* bench = app.add_subcommand("bench", "Segmentation quality and speed");
  bench->require_subcommand(1);
  bench->fallthrough();
  std::string format = "md", bench_kind = "maxmatch", bench_dict, bench_bpe;
  auto* f1 = bench->add_subcommand("f1", "Span F1 against a gold file");
  std::string gold;
  std::size_t drop_every = 0;
  f1->add_option("--gold", gold)->required()->check(CLI::ExistingFile);
  f1->add_option("--segmenter", bench_kind)
      ->check(CLI::IsMember({"maxmatch", "hybrid", "whitespace"}));
  f1->add_option("--dict", bench_dict)->check(CLI::ExistingFile);
  f1->add_option("--bpe", bench_bpe)->check(CLI::ExistingFile);
  f1->add_option("--drop-every", drop_every, "Remove every Nth dictionary entry");
  f1->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));

  auto* speed = bench->add_subcommand("speed", "Sentences per second");
  std::string corpus_file = (fs::path(default_data_dir()) / "fixtures" /
                             "synthetic_vi_10k.txt").string();
  std::string speed_kind = "hybrid", speed_lang = "vi";
  ThroughputOptions topt;
  speed->add_option("--corpus", corpus_file, "One sentence per line")
      ->check(CLI::ExistingFile);
  speed->add_option("--segmenter", speed_kind)
      ->check(CLI::IsMember({"maxmatch", "hybrid", "whitespace"}));
  speed->add_option("--lang", speed_lang)->check(CLI::IsMember({"vi", "en"}));
  speed->add_option("--repeats", topt.repeats)->check(CLI::PositiveNumber);
  speed->add_option("--warmup", topt.warmup)->check(CLI::NonNegativeNumber);
  speed->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));

  auto bench_segmenter = [&](const std::string& kind) {
    const fs::path dict_path = bench_dict.empty()
                                   ? fs::path(g.data_dir) / "vi" / "dictionary.txt"
                                   : fs::path(bench_dict);
    SegmenterDictionary dict = SegmenterDictionary::load(dict_path);
    if (drop_every > 0) dict = drop_every_nth(dict, drop_every);
    const fs::path bpe_dir = fs::path(g.data_dir);
    auto vi_bpe = std::make_shared<const BpeModel>(
        load_bpe(bench_bpe.empty() ? bpe_dir / "vi" / "bpe.txt" : fs::path(bench_bpe)));
    auto en_bpe = std::make_shared<const BpeModel>(load_bpe(bpe_dir / "en" / "bpe.txt"));
    return Segmenter(parse_segmenter_kind(kind),
                     std::make_shared<const SegmenterDictionary>(std::move(dict)),
                     vi_bpe, en_bpe);
  };
  f1->callback([&] {
    action = [&] {
      const Segmenter s = bench_segmenter(bench_kind);
      std::string name = bench_kind;
      if (drop_every > 0) name += " (drop every " + std::to_string(drop_every) + ")";
      return emit_table({run_f1_benchmark(s, GoldCorpus::load(gold), name)},
                        parse_table_format(format));
    };
  });
  speed->callback([&] {
    action = [&] {
      const Segmenter s = bench_segmenter(speed_kind);
      topt.language = parse_language(speed_lang);
      const auto report = run_throughput_benchmark(
          s,
          [&] {
            const std::string text = read_file(corpus_file);
            std::vector<std::string> lines;
            for (std::string_view line : split_lines(text)) {
              if (!trim(line).empty()) lines.emplace_back(line);
            }
            return lines;
          },
          topt, speed_kind);
      return emit_table({report}, parse_table_format(format));
    };
  });

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  std::string config_path;
  serve->add_option("--config", config_path, "JSON config; else $FREETXT_CONFIG");
  serve->callback([&] {
    action = [&]() -> std::string {
      std::optional<fs::path> explicit_path;
      if (!config_path.empty()) explicit_path = config_path;
      ServiceConfig config = load_service_config(resolve_config_path(explicit_path));
      auto resources = std::make_shared<const Resources>(Resources::load(config.resources));
      Service service(std::move(config), resources);
      const int port = service.start();
      std::cerr << "listening on http://" << service.config().host << ":" << port
                << "\n";
      g_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      service.wait();
      g_service = nullptr;
      return "";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    const std::string output = action();
    if (!output.empty()) write_output(g, output);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace
}  // namespace textlens

int main(int argc, char** argv) { return textlens::run(argc, argv); }
