#include <fstream>
#include <map>
#include <sstream>

#include "audit_oracle.hpp"
#include "doctest.h"
#include "pdtc/audit.hpp"
#include "random_instances.hpp"

using namespace pdtc;
using C = InconsistencyClass;

namespace {

Dictionary load_fixture_dictionary(const char* name) {
  std::ifstream in(std::string(PDTC_FIXTURES) + "/" + name);
  REQUIRE(in);
  return Dictionary::load(in);
}

Dictionary from_text(const std::string& text) {
  std::istringstream in(text);
  return Dictionary::load(in);
}

TokenAnalysis token(const char* form, const char* lemma, const char* tag) {
  return {form, Lemma::parse(lemma), PosTag::decode(tag), {"d", "s", 1}};
}

std::vector<TokenAnalysis> read_corpus(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  CorpusReader reader(in);
  std::vector<TokenAnalysis> tokens;
  while (auto t = reader.next()) tokens.push_back(std::move(*t));
  return tokens;
}

}  // namespace

TEST_CASE("classify: definitions at the ends of the order") {
  auto dict = from_text("teze\tNNFS1-----A----\tteze\n");
  CHECK(classify(token("teze", "teze", "NNFS1-----A----"), dict) == C::full_match);
  CHECK(classify(token("Wall", "Wall", "F%-------------"), dict) == C::no_analysis);
}

TEST_CASE("classify: sense change against a single homonym") {
  auto dict = from_text("stát-2\tVf--------A-I--\tstát\n");
  CHECK(classify(token("stát", "stát-1", "Vf--------A-I--"), dict) == C::unique_lemma_sense_change);
  // no number vs number: still a different number
  CHECK(classify(token("stát", "stát", "Vf--------A-I--"), dict) == C::unique_lemma_sense_change);
}

TEST_CASE("classify: comment change against a variant lemma") {
  auto dict = from_text("these_,a_^(^DD**teze)\tNNFS1-----A----\tthese\n");
  CHECK(classify(token("these", "these", "NNFS1-----A----"), dict) ==
        C::unique_lemma_comment_change);
}

TEST_CASE("classify: two tags for the same lemma") {
  auto dict = from_text(
      "strana\tNNFXX-----A---a\ts\n"
      "strana\tNNFSX-----A---a\ts\n");
  CHECK(classify(token("s", "strana", "NNFXX-----A---b"), dict) == C::multiple_lemma_tag_change);
  CHECK(classify(token("s", "strana", "NNFXX-----A---a"), dict) == C::full_match);
}

TEST_CASE("classify: unique sense change outranks multiple comment change") {
  // two comment-change candidates and one sense-change candidate
  auto dict = from_text(
      "x_,a\tNNFS1-----A----\tf\n"
      "x_,h\tNNFS1-----A----\tf\n"
      "x-1\tNNFS1-----A----\tf\n");
  CHECK(classify(token("f", "x", "NNFS1-----A----"), dict) == C::unique_lemma_sense_change);
}

TEST_CASE("classify: tag comparison is exact, X is not a wildcard") {
  auto dict = from_text("strana\tNNFXX-----A---a\ts\n");
  CHECK(classify(token("s", "strana", "NNFS1-----A---a"), dict) == C::unique_lemma_tag_change);
}

TEST_CASE("ten-class fixture: every class exactly once, oracle agrees") {
  auto dict = load_fixture_dictionary("ten_class_dict.tsv");
  auto tokens = read_corpus(std::string(PDTC_FIXTURES) + "/ten_class_corpus.vert");
  REQUIRE(tokens.size() == 10);

  std::map<C, int> seen;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    CAPTURE(tokens[i].form);
    auto cls = classify(tokens[i], dict);
    CHECK(cls == k_all_classes[i]);  // fixture lists the classes in order
    CHECK(cls == oracle::classify(oracle::evidence(tokens[i], dict)));
    auto e = explain(tokens[i], dict);
    CHECK(e.result == cls);
    CHECK(oracle::holds(cls, e));
    CHECK(oracle::earlier_holding(e).empty());
    ++seen[cls];
  }
  CHECK(seen.size() == 10);

  std::ifstream corpus(std::string(PDTC_FIXTURES) + "/ten_class_corpus.vert");
  auto report = audit_corpus(corpus, dict);
  CHECK(report.total() == 10);
  for (auto cls : k_all_classes) {
    CHECK(report.count(cls) == 1);
    CHECK(format_percent(report.percent_hundredths(cls)) == "10.00");
  }
}

TEST_CASE("explain lists the evidence") {
  auto dict = from_text(
      "teze\tNNFS1-----A----\tteze\n"
      "stát-2\tVf--------A-I--\tstát\n");
  auto full = explain(token("teze", "teze", "NNFS1-----A----"), dict);
  CHECK(full.result == C::full_match);
  REQUIRE(full.full_match.size() == 1);
  CHECK(full.full_match[0].paradigm->lemma_text == "teze");
  CHECK(full.full_match[0].tag.encode() == "NNFS1-----A----");

  auto sense = explain(token("stát", "stát-1", "Vf--------A-I--"), dict);
  CHECK(sense.result == C::unique_lemma_sense_change);
  CHECK(sense.sense_change.size() == 1);
  CHECK(sense.analysis_count == 1);

  auto none = explain(token("Wall", "Wall", "F%-------------"), dict);
  CHECK(none.result == C::no_analysis);
  CHECK(none.analysis_count == 0);
  CHECK(none.full_match.empty());
  CHECK(none.comment_change.empty());
  CHECK(none.sense_change.empty());
  CHECK(none.tag_change.empty());
}

TEST_CASE("percentages round half up at two decimals") {
  CHECK(percent_hundredths(1, 3) == 3333);
  CHECK(percent_hundredths(2, 3) == 6667);
  CHECK(percent_hundredths(1, 8) == 1250);
  CHECK(percent_hundredths(1, 16) == 625);      // 6.25
  CHECK(percent_hundredths(1, 1600) == 6);      // 0.0625 -> 0.06
  CHECK(percent_hundredths(1, 800) == 13);      // 0.125 -> 0.13
  CHECK(percent_hundredths(5, 0) == 0);
  CHECK(format_percent(10000) == "100.00");
  CHECK(format_percent(5) == "0.05");
  CHECK(format_percent(7527) == "75.27");
}

TEST_CASE("audit of a consistent corpus") {
  auto dict = load_fixture_dictionary("ten_class_dict.tsv");
  std::ifstream corpus(std::string(PDTC_FIXTURES) + "/consistent_corpus.vert");
  auto report = audit_corpus(corpus, dict);
  CHECK(report.total() == 4);
  CHECK(report.count(C::full_match) == 4);
  CHECK(format_percent(report.percent_hundredths(C::full_match)) == "100.00");
}

TEST_CASE("corpus errors name the token") {
  auto dict = load_fixture_dictionary("ten_class_dict.tsv");
  std::ifstream corpus(std::string(PDTC_FIXTURES) + "/bad_corpus.vert");
  try {
    audit_corpus(corpus, dict);
    FAIL("expected CorpusError");
  } catch (const CorpusError& e) {
    CHECK(e.location() == TokenLocation{"broken", "s7", 2});
    CHECK(e.line() == 4);
  }
}

TEST_CASE("corpus reader scopes") {
  std::istringstream in(
      "#doc id=d1\n"
      "a\ta\tNNFS1-----A----\n"
      "b\tb\tNNFS1-----A----\n"
      "\n"
      "# a comment line\n"
      "c\tc\tNNFS1-----A----\n"
      "#doc id=d2\n"
      "#sent id=first\n"
      "d\td\tNNFS1-----A----\n");
  CorpusReader reader(in);
  std::vector<TokenLocation> locations;
  while (auto t = reader.next()) locations.push_back(t->location);
  REQUIRE(locations.size() == 4);
  CHECK(locations[0] == TokenLocation{"d1", "1", 1});
  CHECK(locations[1] == TokenLocation{"d1", "1", 2});
  CHECK(locations[2] == TokenLocation{"d1", "2", 1});
  CHECK(locations[3] == TokenLocation{"d2", "first", 1});
}

TEST_CASE("samples are capped and kept in stream order") {
  AuditReport report(2);
  for (std::size_t i = 1; i <= 5; ++i) report.add(C::no_analysis, {"d", "s", i});
  CHECK(report.count(C::no_analysis) == 5);
  REQUIRE(report.samples(C::no_analysis).size() == 2);
  CHECK(report.samples(C::no_analysis)[1].token == 2);
}

TEST_CASE("property: oracle agreement, order soundness and repair fixpoint") {
  std::mt19937 rng(99);
  std::map<C, int> coverage;
  for (std::size_t n = 0; n < 3000; ++n) {
    auto dict = testing::random_dictionary(rng);
    auto t = testing::random_token(rng, n);
    auto cls = classify(t, dict);
    ++coverage[cls];

    REQUIRE(cls == oracle::classify(oracle::evidence(t, dict)));
    auto e = explain(t, dict);
    REQUIRE(e.result == cls);
    REQUIRE(oracle::holds(cls, e));
    REQUIRE(oracle::earlier_holding(e).empty());

    Dictionary repaired = dict;
    repaired.insert(t.lemma, t.tag, t.form);
    REQUIRE(classify(t, repaired) == C::full_match);
  }
  // the generator reaches every class
  CHECK(coverage.size() == k_class_count);
}

TEST_CASE("property: merged partial reports equal a single pass") {
  auto dict = load_fixture_dictionary("ten_class_dict.tsv");
  auto tokens = read_corpus(std::string(PDTC_FIXTURES) + "/ten_class_corpus.vert");
  for (std::size_t cut = 0; cut <= tokens.size(); ++cut) {
    AuditReport whole(3), left(3), right(3);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto cls = classify(tokens[i], dict);
      whole.add(cls, tokens[i].location);
      (i < cut ? left : right).add(cls, tokens[i].location);
    }
    left.merge(right);
    REQUIRE(left.total() == whole.total());
    for (auto cls : k_all_classes) {
      REQUIRE(left.count(cls) == whole.count(cls));
      REQUIRE(left.samples(cls) == whole.samples(cls));
    }
  }
}
