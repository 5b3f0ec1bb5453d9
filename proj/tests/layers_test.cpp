#include <sstream>

#include "doctest.h"
#include "layer_fixtures.hpp"
#include "pdtc/layers.hpp"

using namespace pdtc;
using nlohmann::json;
using pdtc::testing::read_json_fixture;

namespace {

bool has(const std::vector<Violation>& vs, const std::string& code, const std::string& node) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Violation& v) { return v.code == code && v.node == node; });
}

ValencyLexicon fixture_lexicon() { return ValencyLexicon::from_json(read_json_fixture("lexicon.json")); }

}  // namespace

TEST_CASE("the example document loads with a split typo token") {
  auto doc = parse_document(read_json_fixture("fig1_document.json"));
  CHECK(doc.w.size() == 5);
  CHECK(doc.m.size() == 6);
  CHECK(doc.a.size() == 6);
  CHECK(doc.t.size() == 3);
  CHECK(doc.m[3].w_refs == std::vector<std::string>{"w4"});
  CHECK(doc.m[4].w_refs == std::vector<std::string>{"w4"});
  CHECK(doc.m[3].lemma.index() == 1u);
  CHECK(doc.t[1].generated);
  CHECK(doc.t[1].parent() == "t1");
  CHECK_FALSE(doc.t[0].parent());
  CHECK(doc.t[0].attrs["gram"]["verbmod"] == "cdn");  // unknown attributes are kept
  CHECK(doc.a[0].parent == std::nullopt);
}

TEST_CASE("the example document passes every validator") {
  auto doc = parse_document(read_json_fixture("fig1_document.json"));
  CHECK(validate_links(doc).empty());
  CHECK(validate_a_tree(doc).empty());
  CHECK(validate_t_tree(doc).empty());
  CHECK(check_valency(doc, fixture_lexicon()).empty());
}

TEST_CASE("each mutant triggers its violation") {
  auto base = read_json_fixture("fig1_document.json");
  for (const auto& m : pdtc::testing::fig1_mutants()) {
    CAPTURE(m.name);
    auto mutated = base;
    m.mutate(mutated);
    auto vs = pdtc::testing::all_violations(parse_document(mutated));
    CHECK(has(vs, m.expected_code, m.expected_node));
  }
}

TEST_CASE("dangling reference fixture") {
  std::ifstream in(std::string(PDTC_FIXTURES) + "/fig1_dangling_mref.json");
  auto vs = validate_links(load_document(in));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].code == "dangling-ref");
  CHECK(vs[0].node == "a5");
}

TEST_CASE("a cycle is reported once, at its smallest id") {
  auto doc = read_json_fixture("fig1_document.json");
  doc["a"][0]["parentId"] = "a5";  // a1 -> a5 -> a4 -> a1
  auto vs = validate_a_tree(parse_document(doc));
  CHECK(std::count_if(vs.begin(), vs.end(), [](auto& v) { return v.code == "cycle"; }) == 1);
  CHECK(has(vs, "cycle", "a1"));
  CHECK(has(vs, "root-count", "s1"));
}

TEST_CASE("parents in other sentences and missing parents") {
  auto doc = read_json_fixture("fig1_document.json");
  doc["a"][5]["sent"] = "s2";
  doc["a"][5]["parentId"] = "a1";
  doc["a"][3]["parentId"] = "a77";
  auto vs = validate_a_tree(parse_document(doc));
  CHECK(has(vs, "parent-outside-sentence", "a6"));
  CHECK(has(vs, "dangling-parent", "a4"));
}

TEST_CASE("a document with only w and m layers") {
  auto doc = read_json_fixture("fig1_document.json");
  doc.erase("a");
  doc.erase("t");
  auto loaded = parse_document(doc);
  CHECK(loaded.a.empty());
  CHECK(loaded.t.empty());
  CHECK(validate_links(loaded).empty());
  CHECK(validate_a_tree(loaded).empty());
  CHECK(validate_t_tree(loaded).empty());
}

TEST_CASE("m-tokens may have no w-token or several") {
  auto doc = read_json_fixture("fig1_document.json");
  doc["m"][1]["wRefs"] = json::array();
  doc["m"][2]["wRefs"] = {"w3", "w4"};
  auto loaded = parse_document(doc);
  CHECK(loaded.m[1].w_refs.empty());
  CHECK(validate_links(loaded).empty());
}

TEST_CASE("load errors") {
  auto error_of = [](const json& doc) {
    try {
      parse_document(doc);
    } catch (const LayerSchemaError& e) {
      return std::make_pair(e.kind(), e.path());
    }
    FAIL("expected LayerSchemaError");
    return std::make_pair(LayerSchemaError::Kind::schema, std::string());
  };
  auto base = read_json_fixture("fig1_document.json");

  auto unknown_w = base;
  unknown_w["m"][0]["wRefs"] = {"w42"};
  CHECK(error_of(unknown_w) == std::make_pair(LayerSchemaError::Kind::schema, std::string("/m/0/wRefs/0")));

  auto no_m = base;
  no_m.erase("m");
  CHECK(error_of(no_m).first == LayerSchemaError::Kind::schema);

  auto bad_tag = base;
  bad_tag["m"][2]["tag"] = "VpYS";
  CHECK(error_of(bad_tag).first == LayerSchemaError::Kind::tag_decode);

  auto bad_lemma = base;
  bad_lemma["m"][2]["lemma"] = "jít_^(x";
  CHECK(error_of(bad_lemma).first == LayerSchemaError::Kind::lemma_parse);

  auto bad_parent = base;
  bad_parent["t"][1]["attrs"]["parent"] = 3;
  CHECK(error_of(bad_parent).first == LayerSchemaError::Kind::schema);

  std::istringstream not_json("{\"w\": [");
  CHECK_THROWS_AS(load_document(not_json), LayerSchemaError);
}

TEST_CASE("functor schema") {
  const auto& schema = FunctorSchema::default_schema();
  for (const char* f : {"ACT", "PAT", "ADDR", "ORIG", "EFF"}) {
    CHECK(schema.contains(f));
    CHECK(schema.is_argument(f));
  }
  CHECK(schema.contains("DIR3"));
  CHECK_FALSE(schema.is_argument("DIR3"));
  CHECK(schema.contains("PRED"));
  CHECK_FALSE(schema.contains("TOWARDS"));

  std::ifstream bundled(std::string(PDTC_DATA_DIR) + "/functors.json");
  auto loaded = FunctorSchema::load(bundled);
  CHECK(loaded.arguments() == schema.arguments());
  CHECK(loaded.adjuncts() == schema.adjuncts());

  CHECK_THROWS_AS(FunctorSchema::from_json({{"arguments", {"ACT"}}}), LayerSchemaError);
  CHECK_THROWS_AS(FunctorSchema::from_json({{"arguments", {"ACT"}}, {"adjuncts", {"ACT"}}}),
                  LayerSchemaError);
}

TEST_CASE("valency lexicon") {
  auto lexicon = fixture_lexicon();
  CHECK(lexicon.size() == 2);
  REQUIRE(lexicon.find("v-jit-1"));
  CHECK(lexicon.find("v-jit-1")->head_lemma == LemmaProper{"jít", std::nullopt});
  CHECK(lexicon.frames_for(LemmaProper{"připravit", std::nullopt}).size() == 1);
  CHECK_FALSE(lexicon.find("v-nic-1"));

  CHECK(ValencyLexicon::from_json(json::array()).size() == 0);

  auto twice = read_json_fixture("lexicon.json");
  twice.push_back(twice[0]);
  try {
    ValencyLexicon::from_json(twice);
    FAIL("expected DuplicateFrameId");
  } catch (const ValencyLexicon::DuplicateFrameId& e) {
    CHECK(e.id() == "v-jit-1");
  }

  json unknown_slot = json::array({{{"id", "f"}, {"lemma", "x"},
                                    {"slots", {{{"functor", "TOWARDS"}, {"obligatory", true}}}}}});
  CHECK_THROWS_AS(ValencyLexicon::from_json(unknown_slot), LayerSchemaError);
}

TEST_CASE("valency: complete frame, missing PAT, lemma mismatch, unknown frame") {
  auto lexicon = fixture_lexicon();
  CHECK(check_valency(parse_document(read_json_fixture("valency_document.json")), lexicon).empty());

  auto missing = check_valency(parse_document(read_json_fixture("valency_missing_pat.json")), lexicon);
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].code == "missing-obligatory");
  CHECK(missing[0].node == "t1");
  CHECK(pdtc::testing::missing_reported(missing) ==
        std::set<std::pair<std::string, std::string>>{{"t1", "PAT"}});

  auto doc = read_json_fixture("valency_document.json");
  doc["t"][0]["frameRef"] = "v-jit-1";
  auto mismatch = check_valency(parse_document(doc), lexicon);
  REQUIRE(mismatch.size() == 1);
  CHECK(mismatch[0].code == "lemma-mismatch");

  doc["t"][0]["frameRef"] = "v-nic-1";
  auto unknown = check_valency(parse_document(doc), lexicon);
  REQUIRE(unknown.size() == 1);
  CHECK(unknown[0].code == "unknown-frame");
}

TEST_CASE("property: a-tree validation agrees with the union-find oracle") {
  std::mt19937 rng(21);
  int damaged = 0;
  for (int n = 0; n < 1000; ++n) {
    auto s = pdtc::testing::random_sentence(rng);
    auto expected = pdtc::testing::tree_oracle(s);
    auto actual = pdtc::testing::tree_verdict(validate_a_tree(pdtc::testing::sentence_document(s)));
    CAPTURE(n);
    REQUIRE(actual == expected);
    damaged += !(expected.one_root && expected.cycles == 0 && expected.ord_permutation);
  }
  // both outcomes are exercised
  CHECK(damaged > 50);
  CHECK(damaged < 950);
}

TEST_CASE("property: missing obligatory functors match a brute-force scan") {
  std::mt19937 rng(22);
  auto lexicon = fixture_lexicon();
  for (int n = 0; n < 1000; ++n) {
    auto c = pdtc::testing::random_valency_case(rng);
    auto vs = check_valency(c.doc, lexicon);
    REQUIRE(pdtc::testing::missing_reported(vs) == c.expected);
    REQUIRE(std::all_of(vs.begin(), vs.end(), [](auto& v) { return v.code == "missing-obligatory"; }));
  }
}
