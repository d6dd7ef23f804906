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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "bpe_oracle.h"
#include "concordance_oracle.h"
#include "ll_oracle.h"
#include "service_fixture.h"
#include "stub_server.h"
#include "textlens/bench.h"
#include "textlens/bpe.h"
#include "textlens/error.h"
#include "textrank_oracle.h"

namespace textlens {
namespace {

using nlohmann::json;

const std::filesystem::path kData = TEXTLENS_DATA_DIR;
const std::filesystem::path kSource = TEXTLENS_SOURCE_DIR;

// Records the first failed expectation; later ones are counted only.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : " ") + s; }

  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!notes_.empty()) out << "; " << notes_;
    if (failures_) out << "; " << failures_ << " failed, first: " << first_;
    return out.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_, notes_;
};

struct Criterion {
  std::string name;
  double limit_s;
  std::function<void(Verdict&)> run;
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  } catch (const std::exception&) {
  }
  return ErrorCode::kIoError;
}

std::string fmt(double v, int decimals = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// --- 1. Segmentation F1 -----------------------------------------------------

constexpr double kFrozenReducedF1 = 94.4243301955;

std::string run_command(const std::string& cmd, int& status) {
  FILE* pipe = ::popen(cmd.c_str(), "r");
  status = -1;
  if (!pipe) return "";
  std::string out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  status = ::pclose(pipe);
  return out;
}

std::optional<double> python_reduced_f1() {
  const std::string cmd = "python3 " +
                          (kSource / "tools/oracles/seg_f1_oracle.py").string() +
                          " " + (kData / "vi/dictionary.txt").string() + " " +
                          (kData / "fixtures/gold_vi.txt").string() + " 2>/dev/null";
  int status = 0;
  const std::string out = run_command(cmd, status);
  if (status != 0) return std::nullopt;
  for (std::string_view line : split_lines(out)) {
    if (!line.starts_with("reduced")) continue;
    const auto at = line.find("F1=");
    if (at != std::string_view::npos) return std::stod(std::string(line.substr(at + 3)));
  }
  return std::nullopt;
}

void segmentation_f1(Verdict& v) {
  auto dict = std::make_shared<const SegmenterDictionary>(
      SegmenterDictionary::load(kData / "vi/dictionary.txt"));
  const GoldCorpus gold = GoldCorpus::load(kData / "fixtures/gold_vi.txt");
  const auto full =
      run_f1_benchmark(Segmenter(SegmenterKind::kMaxMatch, dict), gold, "full");
  v.expect(*full.f1 == 100.0, "full-dictionary F1 " + fmt(*full.f1));
  int status = 0;
  const std::string cli =
      run_command(std::string(TEXTLENS_CLI) + " bench f1 --segmenter maxmatch --format csv --gold " +
                      (kData / "fixtures/gold_vi.txt").string(),
                  status);
  v.expect(status == 0 && cli.find("\nmaxmatch,100.0,") != std::string::npos,
           "CLI bench f1 printed: " + cli);
  const auto reduced = run_f1_benchmark(
      Segmenter(SegmenterKind::kMaxMatch,
                std::make_shared<const SegmenterDictionary>(drop_every_nth(*dict, 10))),
      gold, "reduced");
  const auto live = python_reduced_f1();
  const double oracle = live.value_or(kFrozenReducedF1);
  v.expect(std::abs(*reduced.f1 - oracle) <= 0.05,
           "reduced F1 " + fmt(*reduced.f1) + " vs oracle " + fmt(oracle));
  v.note("full=" + fmt(*full.f1, 1) + " reduced=" + fmt(*reduced.f1, 4) +
         " oracle=" + fmt(oracle, 4) + (live ? " (live)" : " (frozen)"));
}

// --- 2. BPE ----------------------------------------------------------------

void bpe_properties(Verdict& v) {
  std::vector<std::string> corpus;
  for (auto [w, n] : std::initializer_list<std::pair<const char*, int>>{
           {"low", 5}, {"lower", 2}, {"newest", 6}, {"widest", 3}}) {
    corpus.insert(corpus.end(), n, w);
  }
  for (std::size_t n : {1u, 5u, 10u}) {
    v.expect(bpe_train(corpus, n).merges() == oracle::train(corpus, n),
             "merges differ at num_merges=" + std::to_string(n));
  }
  const BpeModel toy = bpe_train(corpus, 10);
  const BpeModel shipped = load_bpe(kData / "vi/bpe.txt");
  std::mt19937 rng(97);
  std::uniform_int_distribution<char32_t> cp(0x20, 0x2FFF);
  std::uniform_int_distribution<int> len(1, 12);
  for (int trial = 0; trial < 10000; ++trial) {
    std::string word;
    for (int n = len(rng); n > 0; --n) {
      char32_t c = cp(rng);
      if (c >= 0xD800 && c <= 0xDFFF) c = 'x';
      word += oracle::utf8(c);
    }
    const BpeModel& m = trial % 2 ? toy : shipped;
    if (bpe_decode(bpe_encode(word, m)) != word) {
      v.expect(false, "round trip lost '" + word + "'");
    }
  }
  v.expect(true, "10000 round trips");
}

// --- 3. Log-likelihood -------------------------------------------------------

void log_likelihood_oracle(Verdict& v) {
  double worst = 0.0;
  for (std::int64_t a = 0; a <= 50; ++a) {
    for (std::int64_t b = 0; b <= 50; ++b) {
      if (a + b == 0) continue;
      const auto want = oracle::log_likelihood(a, b, 1000, 1000);
      const auto got = log_likelihood(a, b, 1000, 1000);
      worst = std::max({worst, std::abs(got.ll - want.ll), std::abs(got.e1 - want.e1),
                        std::abs(got.e2 - want.e2)});
    }
  }
  v.expect(worst <= 1e-9, "max deviation " + std::to_string(worst));
  std::mt19937 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t k = 1 + rng() % 50;
    const std::int64_t n2 = 1 + rng() % 10000;
    const std::int64_t b = 1 + rng() % n2;
    const double ll = log_likelihood(k * b, b, k * n2, n2).ll;
    if (ll != 0.0) v.expect(false, "proportional table gave " + std::to_string(ll));
  }
  std::ostringstream note;
  note << "max|dLL|=" << worst;
  v.note(note.str());
}

// --- 4. TextRank -------------------------------------------------------------

void textrank_properties(Verdict& v) {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> weight(0.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    WeightMatrix w(3, std::vector<double>(3, 0.0));
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) w[i][j] = w[j][i] = weight(rng);
    }
    const auto got = textrank_scores(w);
    const auto want = oracle::textrank_fixed_point(w, 0.85);
    for (int i = 0; i < 3; ++i) {
      v.expect(std::abs(got.scores[i] - want[i]) <= 1e-3,
               "3-node graph " + std::to_string(trial));
    }
    v.expect(got.iterations < 200, "3-node iterations");
  }

  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f", "g"};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<std::vector<std::string>> sentences(n);
    for (auto& s : sentences) {
      for (int k = 1 + rng() % 6; k > 0; --k) s.push_back(vocab[rng() % 7]);
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<std::string>> shuffled(n);
    for (std::size_t i = 0; i < n; ++i) shuffled[i] = sentences[perm[i]];
    const auto base = textrank_scores(similarity_matrix(sentences));
    const auto moved = textrank_scores(similarity_matrix(shuffled));
    bool same = true;
    for (std::size_t i = 0; i < n; ++i) {
      same = same && std::abs(moved.scores[i] - base.scores[perm[i]]) <= 1e-9;
    }
    v.expect(same, "permutation trial " + std::to_string(trial));
    v.expect(base.iterations < 200, "permutation iterations");
  }

  const auto r = stub::bundled_resources();
  const Segmenter seg = r->segmenter(SegmenterKind::kHybrid);
  const auto lines = stub::vietnamese_feedback(1000);
  int worst = 0;
  for (std::size_t chunk = 0; chunk < 10; ++chunk) {
    std::vector<Document> docs;
    for (std::size_t i = chunk * 100; i < chunk * 100 + 100; ++i) {
      Document d = load_plain_text(lines[i], Source::kDirectInput);
      d.language = Language::kVietnamese;
      docs.push_back(std::move(d));
    }
    const auto s = summarise_documents(docs, Language::kVietnamese,
                                       SummaryTarget::fraction(0.3), seg,
                                       r->vietnamese.stopwords,
                                       r->vietnamese.abbreviations, {});
    worst = std::max(worst, s.iterations);
    v.expect(s.iterations < 200, "fixture chunk " + std::to_string(chunk));
  }
  std::string english;
  for (const auto& t : stub::english_feedback()) english += t + " ";
  const auto en = summarise_extractive(english, Language::kEnglish,
                                       SummaryTarget::count(2), seg,
                                       r->english.stopwords, r->english.abbreviations);
  worst = std::max(worst, en.iterations);
  v.expect(en.iterations < 200, "english feedback");
  v.note("max iterations=" + std::to_string(worst));
}

// --- 5. Concordance ----------------------------------------------------------

void collect(const WordTreeNode& n, oracle::Path& path,
             std::map<oracle::Path, std::size_t>& out) {
  for (const auto& c : n.children) {
    path.push_back(c.token);
    out[path] = c.count;
    collect(c, path, out);
    path.pop_back();
  }
}

void concordance_properties(Verdict& v) {
  const Segmenter seg(SegmenterKind::kWhitespace, nullptr);
  std::mt19937 rng(59);
  int trees = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const oracle::RandomCorpus rc = oracle::random_corpus(rng);
    std::vector<Document> docs;
    for (std::size_t i = 0; i < rc.texts.size(); ++i) {
      Document d;
      d.id = "doc-" + std::to_string(i + 1);
      d.raw_text = rc.texts[i];
      d.language = Language::kEnglish;
      docs.push_back(std::move(d));
    }
    const auto corpus = SegmentedCorpus::build(docs, seg, WordList(), WordList());
    const std::string query(1, static_cast<char>('a' + rng() % 5));
    const std::size_t matches = oracle::count_matches(rc.docs, query);
    const std::string tag = " (trial " + std::to_string(trial) + ")";

    const std::size_t w = rng() % 6;
    auto wide = kwic(corpus, query, w + 1);
    const auto narrow = kwic(corpus, query, w);
    v.expect(narrow.size() == matches, "KWIC count" + tag);
    for (auto& l : wide) {
      if (l.left.size() > w) l.left.erase(l.left.begin());
      if (l.right.size() > w) l.right.pop_back();
    }
    v.expect(export_concordance_csv(wide) == export_concordance_csv(narrow),
             "window truncation" + tag);

    if (matches == 0) continue;
    ++trees;
    WordTreeOptions o;
    o.direction = rng() % 2 ? TreeDirection::kRight : TreeDirection::kLeft;
    o.max_depth = 1 + rng() % 4;
    o.min_branch_count = 1 + rng() % 2;
    const WordTree tree = WordTree::build(corpus, query, o);
    v.expect(tree.root().count == narrow.size(), "root count vs KWIC" + tag);
    std::map<oracle::Path, std::size_t> got;
    oracle::Path path;
    collect(tree.root(), path, got);
    v.expect(got == oracle::surviving(
                        oracle::prefix_counts(rc.docs, query,
                                              o.direction == TreeDirection::kRight,
                                              o.max_depth),
                        o.min_branch_count),
             "node counts" + tag);
  }
  v.note(std::to_string(trees) + " trees");
}

// --- 6. Sentiment ------------------------------------------------------------

SegmentedText word_tokens(const std::vector<std::string>& ws) {
  SegmentedText out;
  out.language = Language::kEnglish;
  for (const auto& w : ws) {
    Token t;
    t.surface = w;
    t.is_word = w != ".";
    out.tokens.push_back(t);
  }
  return out;
}

void echo_labels(const httplib::Request& req, httplib::Response& res) {
  const json body = json::parse(req.body);
  json results = json::array();
  for (const auto& t : body["texts"]) {
    const std::string s = t.get<std::string>();
    results.push_back({{"label", s.substr(0, s.find(' '))}, {"confidence", 0.8}});
  }
  res.set_content(json{{"results", results}}.dump(), "application/json");
}

void sentiment_properties(Verdict& v) {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> score(-3.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<double, 4> c;
    for (double& x : c) x = score(rng);
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) continue;
    Thresholds t;
    t.cuts = c;
    double a = score(rng), b = score(rng);
    if (a < b) std::swap(a, b);
    const auto ca = classify(a, t), cb = classify(b, t);
    if (ca.label3 != project(ca.label5)) v.expect(false, "projection");
    if (static_cast<int>(ca.label5) < static_cast<int>(cb.label5)) {
      v.expect(false, "monotonicity");
    }
  }

  std::uniform_real_distribution<double> pol(-1.0, 1.0);
  const std::vector<std::string> vocab = {"a", "b", "c", "not", "very", "z", "."};
  for (int trial = 0; trial < 1000; ++trial) {
    SentimentLexicon lex, neg;
    for (const char* w : {"a", "b", "c"}) {
      const double p = pol(rng);
      lex.polarity[w] = p;
      neg.polarity[w] = -p;
    }
    lex.negators = neg.negators = {"not"};
    lex.intensifiers = neg.intensifiers = {{"very", 1.0 + (rng() % 10) / 7.0}};
    std::vector<std::string> ws;
    for (int k = rng() % 16; k > 0; --k) ws.push_back(vocab[rng() % vocab.size()]);
    if (score_lexicon(word_tokens(ws), neg) != -score_lexicon(word_tokens(ws), lex)) {
      v.expect(false, "sign symmetry");
    }
  }

  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<SentimentResult> rs(1 + rng() % 40);
    for (auto& r : rs) r.label5 = kAllLabels5[rng() % 5];
    const auto d = distribution(rs);
    std::size_t count = 0;
    double sum = 0.0;
    for (Label5 l : kAllLabels5) {
      count += d.counts.at(l);
      sum += d.fractions.at(l);
    }
    if (count != rs.size() || std::abs(sum - 1.0) > 1e-9) v.expect(false, "conservation");
  }
  v.expect(true, "3000 property trials");

  ExternalClassifierOptions o;
  o.timeout = std::chrono::milliseconds(2000);
  {
    stub::StubServer server(echo_labels);
    o.endpoint = server.url("/classify");
    const auto rs = external_classify({"very_positive x", "negative y", "neutral z"}, o);
    v.expect(rs.size() == 3 && rs[0].label5 == Label5::kVeryPositive &&
                 rs[1].label3 == Label3::kNegative && rs[2].label5 == Label5::kNeutral,
             "valid stub labels");
  }
  {
    stub::StubServer server([](const httplib::Request&, httplib::Response& r) {
      r.set_content(R"({"results":[{"label":"positive"}]})", "application/json");
    });
    o.endpoint = server.url();
    v.expect(code_of([&] { external_classify({"x"}, o); }) == ErrorCode::kSchemaError,
             "malformed stub reply is schema_error");
  }
  o.endpoint = "http://127.0.0.1:" + std::to_string(stub::closed_port()) + "/";
  v.expect(code_of([&] { external_classify({"x"}, o); }) ==
               ErrorCode::kBackendUnavailable,
           "unreachable stub is backend_unavailable");
}

// --- 7. Throughput -----------------------------------------------------------

void hybrid_throughput(Verdict& v) {
  const auto r = stub::bundled_resources();
  const Segmenter seg = r->segmenter(SegmenterKind::kHybrid);
  const auto sentences = stub::vietnamese_feedback(10000);
  v.expect(sentences.size() == 10000, "fixture has 10000 sentences");
  const ThroughputOptions o;
  const auto direct = run_throughput_benchmark(seg, sentences, o, "hybrid");
  v.expect(*direct.throughput >= 2000.0,
           "throughput " + fmt(*direct.throughput, 0) + " sent/s");

  const double delay = 1.0;
  const auto slow = run_throughput_benchmark(
      seg,
      [&] {
        std::this_thread::sleep_for(std::chrono::duration<double>(delay));
        return sentences;
      },
      o, "hybrid");
  v.expect(slow.wall_time < delay, "loader delay leaked into the timed passes");
  const double ratio = *slow.throughput / *direct.throughput;
  v.expect(ratio > 0.7 && ratio < 1.0 / 0.7,
           "slow-loader throughput ratio " + fmt(ratio, 3));
  v.note(fmt(*direct.throughput, 0) + " sent/s, slow-loader ratio " + fmt(ratio, 3));
}

// --- 8. Service fidelity and expiry -----------------------------------------

std::string top_term(const stub::CoreReference& ref, Language lang) {
  const json cloud =
      json::parse(ref.wordcloud(CloudMode::kFrequency, 1, 1, true, lang));
  return cloud.at(0).at("term").get<std::string>();
}

void service_fidelity(Verdict& v) {
  stub::ServiceHarness h;
  const ServiceConfig& config = h.service().config();
  const auto vi = stub::vietnamese_feedback(100);
  const auto en = stub::english_feedback();
  const std::array<CloudMode, 5> modes = {CloudMode::kKeyness, CloudMode::kFrequency,
                                          CloudMode::kLogLikelihood, CloudMode::kKeyness,
                                          CloudMode::kFrequency};
  const std::array<std::string, 5> kwic_queries = {"học", "the", "tốt", "The", "môn học"};
  const std::array<json, 5> targets = {"30%", 2, "0.5", 1, "3"};
  const std::array<std::string, 5> target_texts = {"30%", "2", "0.5", "1", "3"};
  const std::array<std::string, 5> keywords = {"học", "study", "giáo viên", "teacher",
                                               "xyzzy"};
  std::vector<std::string> ids;
  std::size_t compared = 0;

  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<std::string> texts(vi.begin() + i * 20, vi.begin() + i * 20 + 20);
    texts.insert(texts.end(), en.begin(), en.begin() + (i % 4) + 1);
    const stub::CoreReference ref(texts, config);
    const std::string id = h.create_session();
    ids.push_back(id);
    h.upload(id, texts);
    const std::string base = "/v1/sessions/" + id + "/analyse/";
    const Language lang = i % 2 ? Language::kEnglish : Language::kVietnamese;
    const std::string code(language_code(lang));
    const std::string tag = " case " + std::to_string(i);
    auto same = [&](const std::string& endpoint, const json& body,
                    const std::string& expected) {
      auto r = h.post(base + endpoint, body.dump());
      ++compared;
      v.expect(r && r->status == 200 && r->body == expected, endpoint + tag);
    };

    const std::size_t top_k = std::array<std::size_t, 5>{50, 10, 20, 5, 100}[i];
    same("wordcloud",
         {{"mode", cloud_mode_name(modes[i])}, {"top_k", top_k}, {"min_count", 1 + i % 2},
          {"stopwords", i != 2}, {"language", code}},
         ref.wordcloud(modes[i], top_k, 1 + i % 2, i != 2, lang));

    const std::size_t window = std::array<std::size_t, 5>{5, 3, 0, 8, 5}[i];
    same("kwic", {{"query", kwic_queries[i]}, {"window", window}, {"case_sensitive", i == 3}},
         ref.kwic_json(kwic_queries[i], window, i == 3));

    WordTreeOptions o;
    o.direction = i % 2 ? TreeDirection::kLeft : TreeDirection::kRight;
    o.max_depth = 1 + (i + 3) % 4;
    o.min_branch_count = 1 + i % 2;
    const std::string query = top_term(ref, lang);
    json tree = {{"query", query}, {"direction", tree_direction_name(o.direction)},
                 {"max_depth", o.max_depth}, {"min_branch_count", o.min_branch_count}};
    std::vector<std::string> path;
    if (i >= 3) {
      const json root = json::parse(ref.tree(query, o));
      if (!root["children"].empty()) {
        path.push_back(root["children"][0]["token"].get<std::string>());
        tree["path"] = path;
        tree["additional_depth"] = 1;
      }
    }
    same("tree", tree, path.empty() ? ref.tree(query, o) : ref.tree(query, o, path, 1));

    const Granularity g = i % 2 ? Granularity::kPerDocument : Granularity::kPerSentence;
    const int classes = i % 2 ? 3 : 5;
    same("sentiment", {{"granularity", granularity_name(g)}, {"classes", classes}},
         ref.sentiment(g, classes));

    same("summary/extractive",
         {{"target", targets[i]}, {"language", code}},
         ref.extractive(SummaryTarget::parse(target_texts[i]), lang));

    same("aspects", json::object(), ref.aspects());

    const std::array<std::optional<std::string>, 5> aspects = {
        std::nullopt, "Social", std::nullopt, "Academic", "Technical"};
    const std::string instruction = i % 2 ? "Focus on teaching" : "";
    const std::size_t max_length = std::array<std::size_t, 5>{256, 64, 128, 256, 32}[i];
    json abs = {{"language", code}, {"max_length", max_length}};
    if (!instruction.empty()) abs["instruction"] = instruction;
    if (aspects[i]) abs["aspect"] = *aspects[i];
    same("summary/abstractive", abs,
         ref.abstractive(lang, instruction, aspects[i], max_length));

    same("suggest", {{"keyword", keywords[i]}},
         ref.suggest(keywords[i], stub::bundled_resources()->detector().detect(keywords[i])));
  }

  h.clock().advance(std::chrono::minutes(61));
  for (const std::string& id : ids) {
    auto r = h.get("/v1/sessions/" + id);
    v.expect(r && r->status == 404, "expired session still served");
  }
  h.service().sessions().purge_expired();
  const json diag = json::parse(h.get("/v1/diagnostics")->body);
  v.expect(diag["live_sessions"] == 0, "live_sessions after expiry");
  v.note(std::to_string(compared) + " responses compared");
}

}  // namespace
}  // namespace textlens

int main() {
  using namespace textlens;
  const std::vector<Criterion> criteria = {
      {"segmentation-f1-oracle", 5, segmentation_f1},
      {"bpe-oracle-and-round-trip", 10, bpe_properties},
      {"log-likelihood-oracle", 5, log_likelihood_oracle},
      {"textrank-fixed-point-and-permutation", 10, textrank_properties},
      {"concordance-conservation", 10, concordance_properties},
      {"sentiment-properties-and-backend", 10, sentiment_properties},
      {"hybrid-throughput", 30, hybrid_throughput},
      {"service-fidelity-and-expiry", 30, service_fidelity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    v.expect(elapsed.count() < c.limit_s, "time limit");
    const bool ok = v.ok();
    failed += !ok;
    std::printf("%s  %zu %-38s %6.2fs / %2.0fs  %s\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), elapsed.count(), c.limit_s, v.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
