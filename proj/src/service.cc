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


#include "textlens/service.h"

#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "textlens/abstractive.h"
#include "textlens/concordance.h"
#include "textlens/keyness.h"
#include "textlens/sentiment.h"
#include "textlens/strings.h"
#include "textlens/textrank.h"

namespace textlens {
namespace {

using nlohmann::json;

constexpr const char* kJson = "application/json";
constexpr const char* kSession = "/v1/sessions/([0-9a-f]{32})";

// A request body restricted to a fixed field set.
class Params {
 public:
  Params(const std::string& body, std::initializer_list<std::string_view> allowed) {
    if (trim(body).empty()) {
      j_ = json::object();
      return;
    }
    try {
      j_ = json::parse(body);
    } catch (const json::parse_error&) {
      throw Error(ErrorCode::kInvalidInput, "request body is not valid JSON");
    }
    if (!j_.is_object()) {
      throw Error(ErrorCode::kInvalidInput, "request body must be a JSON object");
    }
    const std::set<std::string_view> known(allowed);
    for (const auto& [key, _] : j_.items()) {
      if (!known.count(key)) {
        throw Error(ErrorCode::kInvalidInput, "unknown field '" + key + "'");
      }
    }
  }

  bool has(const char* key) const { return j_.contains(key); }

  std::string string(const char* key, std::string fallback = "") const {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_string()) throw type_error(key, "a string");
    return v->get<std::string>();
  }

  std::string required_string(const char* key) const {
    if (!has(key)) {
      throw Error(ErrorCode::kInvalidInput, "missing field '" + std::string(key) + "'");
    }
    return string(key);
  }

  std::int64_t integer(const char* key, std::int64_t fallback, std::int64_t min) const {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number_integer()) throw type_error(key, "an integer");
    const std::int64_t x = v->get<std::int64_t>();
    if (x < min) {
      throw Error(ErrorCode::kInvalidInput, "field '" + std::string(key) +
                                                "' must be at least " + std::to_string(min));
    }
    return x;
  }

  bool boolean(const char* key, bool fallback) const {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_boolean()) throw type_error(key, "a boolean");
    return v->get<bool>();
  }

  std::vector<std::string> strings(const char* key) const {
    const json* v = find(key);
    if (!v) return {};
    if (!v->is_array()) throw type_error(key, "an array of strings");
    std::vector<std::string> out;
    for (const json& e : *v) {
      if (!e.is_string()) throw type_error(key, "an array of strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  // A string, or a number written back in JSON form.
  std::optional<std::string> scalar_text(const char* key) const {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (v->is_string()) return v->get<std::string>();
    if (v->is_number()) return v->dump();
    throw type_error(key, "a string or a number");
  }

 private:
  const json* find(const char* key) const {
    auto it = j_.find(key);
    return it == j_.end() || it->is_null() ? nullptr : &*it;
  }

  static Error type_error(const char* key, const char* what) {
    return Error(ErrorCode::kInvalidInput,
                 "field '" + std::string(key) + "' must be " + what);
  }

  json j_;
};

Language chosen_language(const Params& p, std::span<const Document> docs) {
  const std::string code = p.string("language");
  return code.empty() ? dominant_language(docs) : parse_language(code);
}

template <typename F>
void respond(httplib::Response& res, F&& body) {
  try {
    res.set_content(body(), kJson);
  } catch (const Error& e) {
    res.status = http_status(e.code());
    res.set_content(error_body(error_code_name(e.code()), e.what()), kJson);
  } catch (const std::exception& e) {
    res.status = 500;
    res.set_content(error_body("internal", e.what()), kJson);
  }
}

}  // namespace

std::string_view service_version() { return TEXTLENS_VERSION; }

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kQueryNotFound:
    case ErrorCode::kPathNotFound:
      return 404;
    case ErrorCode::kPayloadTooLarge:
      return 413;
    case ErrorCode::kBackendUnavailable:
    case ErrorCode::kSchemaError:
      return 502;
    case ErrorCode::kGenerationTimeout:
      return 504;
    case ErrorCode::kConfigError:
    case ErrorCode::kIoError:
      return 500;
    default:
      return 400;
  }
}

std::string error_body(std::string_view code, std::string_view message) {
  nlohmann::ordered_json inner;
  inner["code"] = code;
  inner["message"] = message;
  nlohmann::ordered_json root;
  root["error"] = std::move(inner);
  return root.dump();
}

Service::Service(ServiceConfig config, std::shared_ptr<const Resources> resources,
                 SessionStore::Clock clock)
    : config_(std::move(config)),
      resources_(std::move(resources)),
      segmenter_(resources_->segmenter(config_.segmenter)),
      detector_(resources_->detector()),
      sessions_(config_.idle_timeout, std::move(clock)),
      server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

Service::~Service() { stop(); }

int Service::start() {
  const int port = config_.port == 0
                       ? server_->bind_to_any_port(config_.host)
                       : (server_->bind_to_port(config_.host, config_.port)
                              ? config_.port
                              : -1);
  if (port < 0) {
    throw Error(ErrorCode::kIoError, "cannot bind " + config_.host + ":" +
                                         std::to_string(config_.port));
  }
  sessions_.start_janitor(config_.janitor_interval);
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port;
}

void Service::wait() {
  if (thread_.joinable()) thread_.join();
}

void Service::stop() {
  server_->stop();
  wait();
  sessions_.stop_janitor();
}

std::shared_ptr<const SegmentedCorpus> Service::segmented(
    Session& session, const CorpusSnapshot& snapshot) const {
  return session.segmented(snapshot, [this](const CorpusSnapshot& snap) {
    return SegmentedCorpus::build(snap.documents(), segmenter_,
                                  resources_->vietnamese.abbreviations,
                                  resources_->english.abbreviations);
  });
}

void Service::install_routes() {
  httplib::Server& s = *server_;
  const int threads = config_.threads;
  s.new_task_queue = [threads] { return new httplib::ThreadPool(threads); };
  // JSON escaping can double the size of uploaded text.
  s.set_payload_max_length(2 * config_.max_session_bytes + (1u << 20));

  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    if (res.status == 404) {
      res.set_content(error_body("not_found", "no such route"), kJson);
    } else if (res.status == 413) {
      res.set_content(error_body("payload_too_large", "request body too large"), kJson);
    } else {
      res.set_content(error_body("http_" + std::to_string(res.status),
                                 httplib::status_message(res.status)),
                      kJson);
    }
  });

  // The session for the first path capture.
  auto session_of = [this](const httplib::Request& req) {
    return sessions_.get(req.matches[1].str());
  };

  s.Get("/v1/diagnostics", [this](const httplib::Request&, httplib::Response& res) {
    respond(res, [&] {
      nlohmann::ordered_json j;
      j["live_sessions"] = sessions_.live_sessions();
      j["version"] = service_version();
      return j.dump();
    });
  });

  s.Post("/v1/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] {
      Params(req.body, {});
      nlohmann::ordered_json j;
      j["session_id"] = sessions_.create();
      res.status = 201;
      return j.dump();
    });
  });

  s.Get(kSession, [=](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { return export_corpus_json(session_of(req)->corpus().snapshot()); });
  });

  s.Delete(kSession, [this](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] {
      if (!sessions_.remove(req.matches[1].str())) {
        throw Error(ErrorCode::kNotFound, "no session '" + req.matches[1].str() + "'");
      }
      res.status = 204;
      return std::string();
    });
  });

  s.Post(std::string(kSession) + "/documents",
         [=, this](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] {
      const Params p(req.body, {"text", "id", "csv", "column"});
      auto session = session_of(req);
      std::vector<Document> docs;
      if (p.has("text") == p.has("csv")) {
        throw Error(ErrorCode::kInvalidInput, "send exactly one of 'text' or 'csv'");
      }
      if (p.has("text")) {
        Document d = load_plain_text(p.string("text"), Source::kDirectInput);
        d.id = p.string("id");
        docs.push_back(std::move(d));
      } else {
        docs = load_csv(p.string("csv"), p.required_string("column"));
      }
      std::size_t added = 0;
      for (Document& d : docs) {
        if (d.raw_text.size() > config_.max_document_bytes) {
          throw Error(ErrorCode::kPayloadTooLarge,
                      "document exceeds " + std::to_string(config_.max_document_bytes) +
                          " bytes");
        }
        added += d.raw_text.size();
        d.language = detector_.detect(d.raw_text);
      }
      std::lock_guard lock(session->upload_mutex());
      Corpus& corpus = session->corpus();
      if (corpus.total_bytes() + added > config_.max_session_bytes) {
        throw Error(ErrorCode::kPayloadTooLarge,
                    "session would exceed " + std::to_string(config_.max_session_bytes) +
                        " bytes");
      }
      corpus.add_all(std::move(docs));
      res.status = 201;
      return export_document_list_json(corpus.snapshot().documents());
    });
  });

  auto analyse = [&s](const std::string& name, auto handler) {
    s.Post(std::string(kSession) + "/analyse/" + name,
           [handler](const httplib::Request& req, httplib::Response& res) {
             respond(res, [&] { return handler(req); });
           });
  };

  analyse("wordcloud", [=, this](const httplib::Request& req) {
    const Params p(req.body, {"mode", "top_k", "min_count", "stopwords", "language"});
    auto session = session_of(req);
    const CorpusSnapshot snap = session->corpus().snapshot();
    const Language lang = chosen_language(p, snap.documents());
    const LanguageResources& r = resources_->language(lang);
    const CloudMode mode = p.has("mode") ? parse_cloud_mode(p.string("mode"))
                                         : config_.cloud_mode;
    CloudOptions o;
    o.top_k = p.integer("top_k", config_.top_k, 1);
    o.min_count = p.integer("min_count", config_.min_count, 1);
    o.stopwords = p.boolean("stopwords", true) ? &r.stopwords : nullptr;
    std::vector<SegmentedText> texts;
    for (const SegmentedDocument& d : segmented(*session, snap)->documents()) {
      if (d.text.language == (lang == Language::kVietnamese ? lang : Language::kEnglish)) {
        texts.push_back(d.text);
      }
    }
    return export_cloud_json(
        wordcloud_payload(mode, build_frequency_table(texts), &r.reference, o));
  });

  analyse("kwic", [=, this](const httplib::Request& req) {
    const Params p(req.body, {"query", "window", "case_sensitive"});
    auto session = session_of(req);
    const auto corpus = segmented(*session, session->corpus().snapshot());
    return export_concordance_json(
        kwic(*corpus, p.required_string("query"),
             p.integer("window", config_.window, 0), p.boolean("case_sensitive", false)));
  });

  analyse("tree", [=, this](const httplib::Request& req) {
    const Params p(req.body, {"query", "direction", "max_depth", "min_branch_count",
                              "case_sensitive", "path", "additional_depth"});
    auto session = session_of(req);
    WordTreeOptions o = config_.tree;
    if (p.has("direction")) o.direction = parse_tree_direction(p.string("direction"));
    o.max_depth = p.integer("max_depth", o.max_depth, 1);
    o.min_branch_count = p.integer("min_branch_count", o.min_branch_count, 1);
    o.case_sensitive = p.boolean("case_sensitive", false);
    const auto corpus = segmented(*session, session->corpus().snapshot());
    const WordTree tree = WordTree::build(*corpus, p.required_string("query"), o);
    if (!p.has("path")) return export_word_tree_json(tree.root());
    return export_word_tree_json(
        tree.expand(p.strings("path"), p.integer("additional_depth", 1, 0)));
  });

  analyse("sentiment", [=, this](const httplib::Request& req) {
    const Params p(req.body, {"granularity", "backend", "classes"});
    auto session = session_of(req);
    SentimentSetup setup;
    setup.segmenter = &segmenter_;
    setup.vietnamese_lexicon = &resources_->vietnamese.lexicon;
    setup.english_lexicon = &resources_->english.lexicon;
    setup.vietnamese_abbreviations = &resources_->vietnamese.abbreviations;
    setup.english_abbreviations = &resources_->english.abbreviations;
    setup.thresholds = config_.thresholds;
    setup.saturation = config_.saturation;
    setup.external = config_.classifier;
    const Granularity g = p.has("granularity") ? parse_granularity(p.string("granularity"))
                                               : config_.granularity;
    const SentimentBackend b = p.has("backend") ? parse_backend(p.string("backend"))
                                                : SentimentBackend::kLexicon;
    const int classes = static_cast<int>(p.integer("classes", 5, 0));
    const CorpusSnapshot snap = session->corpus().snapshot();
    return export_sentiment_json(analyse_sentiment(snap.documents(), g, b, setup), classes);
  });

  analyse("summary/extractive", [=, this](const httplib::Request& req) {
    const Params p(req.body, {"target", "language"});
    auto session = session_of(req);
    const CorpusSnapshot snap = session->corpus().snapshot();
    const Language lang = chosen_language(p, snap.documents());
    const LanguageResources& r = resources_->language(lang);
    const auto target_text = p.scalar_text("target");
    const SummaryTarget target =
        target_text ? SummaryTarget::parse(*target_text) : config_.summary_target;
    const auto docs = documents_in_language(snap.documents(), lang);
    return export_summary_json(summarise_documents(docs, lang, target, segmenter_,
                                                   r.stopwords, r.abbreviations,
                                                   config_.textrank));
  });

  analyse("aspects", [=, this](const httplib::Request& req) {
    const Params p(req.body, {});
    auto session = session_of(req);
    std::vector<SegmentedText> texts;
    for (const SegmentedDocument& d :
         segmented(*session, session->corpus().snapshot())->documents()) {
      texts.push_back(d.text);
    }
    return export_aspects_json(
        detect_aspects(texts, resources_->aspects, config_.aspect_saturation));
  });

  const GenerationBackend default_backend =
      config_.generator ? GenerationBackend::kExternal : GenerationBackend::kOfflineStub;

  analyse("summary/abstractive", [=, this](const httplib::Request& req) {
    const Params p(req.body, {"instruction", "aspect", "backend", "language", "max_length"});
    auto session = session_of(req);
    const CorpusSnapshot snap = session->corpus().snapshot();
    GenerationRequest g;
    g.language = chosen_language(p, snap.documents());
    std::vector<std::string> texts;
    for (const Document& d : documents_in_language(snap.documents(), g.language)) {
      texts.push_back(d.raw_text);
    }
    g.source_text = join(texts, "\n\n");
    g.instruction = p.string("instruction");
    g.max_length = p.integer("max_length", config_.max_length, 1);
    if (p.has("aspect")) g.aspect = p.string("aspect");
    const GenerationBackend backend =
        p.has("backend") ? parse_generation_backend(p.string("backend")) : default_backend;
    GenerationSetup setup;
    setup.client = config_.generator;
    setup.segmenter = &segmenter_;
    setup.vietnamese_stopwords = &resources_->vietnamese.stopwords;
    setup.english_stopwords = &resources_->english.stopwords;
    setup.vietnamese_abbreviations = &resources_->vietnamese.abbreviations;
    setup.english_abbreviations = &resources_->english.abbreviations;
    return export_generated_summary_json(
        generate_summary(g, resources_->aspects, backend, setup));
  });

  analyse("suggest", [=, this](const httplib::Request& req) {
    const Params p(req.body, {"keyword", "backend", "language"});
    session_of(req);
    const std::string keyword = p.required_string("keyword");
    const Language lang = p.has("language") ? parse_language(p.string("language"))
                                            : detector_.detect(keyword);
    const GenerationBackend backend =
        p.has("backend") ? parse_generation_backend(p.string("backend")) : default_backend;
    return export_suggestions_json(
        keyword, suggest_related_terms(keyword, lang, backend, resources_->thesaurus,
                                       config_.generator));
  });
}

}  // namespace textlens
