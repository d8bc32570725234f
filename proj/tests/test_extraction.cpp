// Copyright 2026 The fngen Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fngen/extraction.hpp"
#include "fngen/jsonl.hpp"
#include "helpers.hpp"

using namespace fngen;
using fngen_tests::data_file;

namespace {

FERealization fe(const std::string& name, PhraseCat cat, SynRole role) {
  return FERealization{name, cat, role};
}

AnnotatedSentence sentence(const std::string& frame,
                           std::vector<FESpan> spans,
                           Voice voice = Voice::Act,
                           const std::string& pos = "v") {
  AnnotatedSentence s;
  s.id = "s-1";
  s.language = Language::En;
  s.frame_name = frame;
  s.target_lemma = "do";
  s.target_pos = pos;
  s.voice = voice;
  s.text = "synthetic";
  s.spans = std::move(spans);
  return s;
}

}  // namespace

TEST_CASE("default generalization table covers the label families") {
  GeneralizationTable table = GeneralizationTable::default_table();
  CHECK(table.lookup("NP") == PhraseCat::NP);
  CHECK(table.lookup("AVP") == PhraseCat::Adv);
  CHECK(table.lookup("PP") == PhraseCat::Adv);
  CHECK(table.lookup("PPing") == PhraseCat::Adv);
  CHECK(table.lookup("PPinterrog") == PhraseCat::Adv);
  CHECK(table.lookup("Sfin") == PhraseCat::S);
  CHECK(table.lookup("Sfin-that") == PhraseCat::S);
  // Subclauses that cannot take a subjunction demote to adverbials.
  CHECK(table.lookup("Sinterrog") == PhraseCat::Adv);
  CHECK(table.lookup("Swhether") == PhraseCat::Adv);
  CHECK(table.lookup("VPfin") == PhraseCat::VP);
  CHECK(table.lookup("VPing") == PhraseCat::VP);
  CHECK(table.lookup("VPto") == PhraseCat::VP);
  CHECK(table.lookup("QUO") == std::nullopt);
}

TEST_CASE("bundled table file agrees with the built-in table") {
  GeneralizationTable bundled =
      GeneralizationTable::load(data_file("ptypes.jsonl"));
  GeneralizationTable builtin = GeneralizationTable::default_table();
  for (const char* label :
       {"NP", "AVP", "PP", "PPing", "PPinterrog", "Sfin", "Sfin-that",
        "Sinterrog", "Swhether", "VPfin", "VPing", "VPto"}) {
    CHECK(bundled.lookup(label) == builtin.lookup(label));
  }
  CHECK(bundled.size() == builtin.size());
}

TEST_CASE("table parse rejects bad rows") {
  CHECK_THROWS_AS(GeneralizationTable::parse(
                      "{\"raw_label\": \"X\", \"cat\": \"Thing\"}\n", "t"),
                  ParseError);
  CHECK_THROWS_AS(
      GeneralizationTable::parse(
          "{\"raw_label\": \"X\", \"cat\": \"NP\", "
          "\"that_compatible\": true}\n",
          "t"),
      ParseError);
  GeneralizationTable custom = GeneralizationTable::parse(
      "{\"raw_label\": \"Sx\", \"cat\": \"Sub\", "
      "\"that_compatible\": false}\n",
      "t");
  CHECK(custom.lookup("Sx") == PhraseCat::Adv);
}

TEST_CASE("verb type deduction follows the priority rules") {
  auto np = [](SynRole role) { return fe("X", PhraseCat::NP, role); };
  auto vp = fe("E", PhraseCat::VP, SynRole::None);
  auto s = fe("M", PhraseCat::S, SynRole::None);
  auto adv = fe("L", PhraseCat::Adv, SynRole::None);

  // 1. VP beside an indirect object.
  CHECK(deduce_verb_type({vp, np(SynRole::IObj), np(SynRole::Subj)},
                         Voice::Act) == VerbType::V2V);
  // 2. VP alone.
  CHECK(deduce_verb_type({vp, np(SynRole::Subj)}, Voice::Act) == VerbType::VV);
  // 3. S beside an object.
  CHECK(deduce_verb_type({s, np(SynRole::DObj), np(SynRole::Subj)},
                         Voice::Act) == VerbType::V2S);
  CHECK(deduce_verb_type({s, np(SynRole::IObj)}, Voice::Act) == VerbType::V2S);
  // 4. S alone, regardless of voice.
  CHECK(deduce_verb_type({s, np(SynRole::Subj)}, Voice::Act) == VerbType::VS);
  CHECK(deduce_verb_type({s}, Voice::Pass) == VerbType::VS);
  // 5. and 6. indirect object with or without a direct one.
  CHECK(deduce_verb_type({np(SynRole::DObj), np(SynRole::IObj),
                          np(SynRole::Subj)},
                         Voice::Act) == VerbType::V3);
  CHECK(deduce_verb_type({np(SynRole::IObj), np(SynRole::Subj)},
                         Voice::Act) == VerbType::V3);
  // 7. direct object.
  CHECK(deduce_verb_type({np(SynRole::DObj)}, Voice::Act) == VerbType::V2);
  // 8. bare passive promotes an object we cannot see.
  CHECK(deduce_verb_type({np(SynRole::Subj)}, Voice::Pass) == VerbType::V2);
  CHECK(deduce_verb_type({np(SynRole::Subj), np(SynRole::Agent)},
                         Voice::Pass) == VerbType::V2);
  // 9. plain intransitive.
  CHECK(deduce_verb_type({np(SynRole::Subj), adv}, Voice::Act) == VerbType::V);
  CHECK(deduce_verb_type({}, Voice::Act) == VerbType::V);
}

TEST_CASE("extraction produces a canonical freq-1 pattern") {
  FrameInventory frames = load_frames(data_file("frames.jsonl"));
  GeneralizationTable table = GeneralizationTable::default_table();
  auto outcome = extract_pattern(
      sentence("Desiring", {{"Focal_participant", "NP", SynRole::DObj},
                            {"Experiencer", "NP", SynRole::Subj}}),
      frames, table);
  REQUIRE(std::holds_alternative<ValencePattern>(outcome));
  const auto& p = std::get<ValencePattern>(outcome);
  CHECK(p.frame == "Desiring");
  CHECK(p.verb_type == VerbType::V2);
  CHECK(p.voice == Voice::Act);
  CHECK(p.freq == 1);
  REQUIRE(p.fes.size() == 2);
  // Canonical order sorts by element name.
  CHECK(p.fes[0].fe_name == "Experiencer");
  CHECK(p.fes[1].fe_name == "Focal_participant");
  CHECK(pattern_violations(p).empty());
}

TEST_CASE("non-core spans are dropped before anything else") {
  FrameInventory frames = load_frames(data_file("frames.jsonl"));
  GeneralizationTable table = GeneralizationTable::default_table();
  // The noncore element has an unmappable label; it must not skip the
  // sentence because it is dropped first.
  auto outcome = extract_pattern(
      sentence("Desiring", {{"Experiencer", "NP", SynRole::Subj},
                            {"Time", "QUO", SynRole::None}}),
      frames, table);
  REQUIRE(std::holds_alternative<ValencePattern>(outcome));
  CHECK(std::get<ValencePattern>(outcome).fes.size() == 1);
}

TEST_CASE("skip reasons") {
  FrameInventory frames = load_frames(data_file("frames.jsonl"));
  GeneralizationTable table = GeneralizationTable::default_table();

  auto reason = [&](const AnnotatedSentence& s) {
    auto outcome = extract_pattern(s, frames, table);
    REQUIRE(std::holds_alternative<SkipReport>(outcome));
    return std::get<SkipReport>(outcome).reason;
  };

  CHECK(reason(sentence("Desiring", {{"Experiencer", "NP", SynRole::Subj}},
                        Voice::Act, "n")) == SkipReason::NonVerbTarget);
  CHECK(reason(sentence("Desiring", {{"Time", "AVP", SynRole::None}})) ==
        SkipReason::NonCoreOnly);
  CHECK(reason(sentence("Desiring", {})) == SkipReason::NonCoreOnly);
  CHECK(reason(sentence("Desiring",
                        {{"Focal_participant", "QUO", SynRole::None},
                         {"Experiencer", "NP", SynRole::Subj}})) ==
        SkipReason::UnmappablePhraseType);
  // An object role on a span that does not generalize to NP.
  CHECK(reason(sentence("Desiring", {{"Focal_participant", "PP",
                                      SynRole::DObj}})) ==
        SkipReason::RoleConflict);
  // Two spans claiming the same role.
  CHECK(reason(sentence("Desiring", {{"Experiencer", "NP", SynRole::Subj},
                                     {"Focal_participant", "NP",
                                      SynRole::Subj}})) ==
        SkipReason::RoleConflict);

  // Precedence: a non-verb target wins over everything else.
  CHECK(reason(sentence("Desiring", {{"Focal_participant", "QUO",
                                      SynRole::None}},
                        Voice::Act, "n")) == SkipReason::NonVerbTarget);
}

TEST_CASE("skip reason names round-trip") {
  for (auto reason :
       {SkipReason::UnmappablePhraseType, SkipReason::NonVerbTarget,
        SkipReason::RoleConflict, SkipReason::NonCoreOnly}) {
    CHECK(skip_reason_from_name(skip_reason_name(reason)) == reason);
  }
  CHECK(skip_reason_from_name("Gremlins") == std::nullopt);
}

TEST_CASE("extract_all aggregates duplicate patterns") {
  FrameInventory frames = load_frames(data_file("frames.jsonl"));
  GeneralizationTable table = GeneralizationTable::default_table();
  Corpus corpus = load_corpus(data_file("corpus_en.jsonl"), frames);
  ExtractionResult result = extract_all(corpus, table);
  CHECK(result.sentence_count == 34);
  CHECK(result.skips.size() == 2);
  CHECK(result.patterns.size() == 21);
  CHECK(result.patterns.fn_id == "corpus_en");

  // en-001, en-002 and en-031 share the transitive Desiring pattern.
  long freq = 0;
  for (const auto& p : result.patterns.sorted()) {
    if (p.frame == "Desiring" && p.verb_type == VerbType::V2 &&
        p.voice == Voice::Act) {
      freq = p.freq;
    }
  }
  CHECK(freq == 3);

  std::vector<std::string> skipped_ids;
  for (const auto& skip : result.skips) skipped_ids.push_back(skip.sentence_id);
  CHECK(skipped_ids == std::vector<std::string>{"en-026", "en-027"});
}

TEST_CASE("engineered corpus hits a four percent skip rate") {
  FrameInventory frames = load_frames(data_file("frames.jsonl"));
  GeneralizationTable table = GeneralizationTable::default_table();
  Corpus corpus = load_corpus(data_file("corpus_eval_skips.jsonl"), frames);
  ExtractionResult result = extract_all(corpus, table);
  CHECK(result.sentence_count == 25);
  REQUIRE(result.skips.size() == 1);
  CHECK(result.skips[0].sentence_id == "sk-001");
  CHECK(result.skips[0].reason == SkipReason::UnmappablePhraseType);
  CHECK(result.skip_rate() == doctest::Approx(0.04).epsilon(1e-12));
}

TEST_CASE("skip reports serialize one record per line") {
  std::vector<SkipReport> skips = {
      {"a-1", SkipReason::NonVerbTarget},
      {"a-2", SkipReason::UnmappablePhraseType},
  };
  std::string text = serialize_skips(skips);
  auto records = parse_jsonl(text, "skips");
  REQUIRE(records.size() == 2);
  CHECK(records[0].value.at("id") == "a-1");
  CHECK(records[0].value.at("reason") == "NonVerbTarget");
}

TEST_CASE("table-aware validation flags roles on non-noun spans") {
  FrameInventory frames = load_frames(data_file("frames.jsonl"));
  GeneralizationTable table = GeneralizationTable::default_table();
  AnnotatedSentence s =
      sentence("Desiring", {{"Focal_participant", "PP", SynRole::DObj}});
  CHECK(validate_sentence(s, frames).empty());
  auto violations = validate_sentence(s, frames, table);
  REQUIRE_FALSE(violations.empty());
  CHECK(violations[0].find("Focal_participant") != std::string::npos);
}

TEST_CASE("random sentences never crash extraction") {
  FrameInventory frames = load_frames(data_file("frames.jsonl"));
  GeneralizationTable table = GeneralizationTable::default_table();
  std::mt19937 rng(20260815);
  std::vector<std::string> fes = {"Experiencer", "Focal_participant", "Event",
                                  "Time", "Degree"};
  std::vector<std::string> labels = {"NP",   "PP",  "VPto", "Sfin-that",
                                     "QUO",  "AVP", "Swhether"};
  std::vector<SynRole> roles = {SynRole::Subj, SynRole::DObj, SynRole::IObj,
                                SynRole::Agent, SynRole::None};
  auto pick = [&](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  int extracted = 0;
  for (int i = 0; i < 2000; ++i) {
    AnnotatedSentence s;
    s.id = "r-" + std::to_string(i);
    s.frame_name = "Desiring";
    s.target_lemma = "want";
    s.target_pos = pick(10) == 0 ? "n" : "v";
    s.voice = pick(2) == 0 ? Voice::Act : Voice::Pass;
    int n = pick(4);
    for (int j = 0; j < n; ++j) {
      s.spans.push_back({fes[pick(5)], labels[pick(7)],
                         roles[static_cast<size_t>(pick(5))]});
    }
    // Sentences that would not survive corpus loading may extract to
    // anything; for loadable ones the result must be clean or a skip.
    auto outcome = extract_pattern(s, frames, table);
    if (!validate_sentence(s, frames).empty()) continue;
    if (std::holds_alternative<ValencePattern>(outcome)) {
      ++extracted;
      const auto& p = std::get<ValencePattern>(outcome);
      CHECK(pattern_violations(p).empty());
      CHECK(p.verb_type == deduce_verb_type(p.fes, p.voice));
    }
  }
  CHECK(extracted > 0);
}
