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

#include <fstream>

#include <json.hpp>

#include "fngen/applications.hpp"
#include "fngen/pipeline.hpp"
#include "helpers.hpp"

using namespace fngen;
using fngen_tests::data_file;
using nlohmann::json;

namespace {

const RealizerEngine& engine() {
  static RealizerEngine instance = [] {
    PipelineConfig config;
    config.corpus_paths = {data_file("corpus_en.jsonl"),
                           data_file("corpus_sv.jsonl")};
    config.frames_path = data_file("frames.jsonl");
    config.lexicon_paths = {data_file("lexicon_en.jsonl"),
                            data_file("lexicon_sv.jsonl")};
    return RealizerEngine(run_pipeline(config));
  }();
  return instance;
}

json load_json(const std::string& name) {
  std::ifstream in(data_file(name));
  REQUIRE(in.good());
  return json::parse(in);
}

NPhrase np(const std::string& text, Number number = Number::Sg,
           int person = 3) {
  NPhrase p;
  p.surface = text;
  p.number = number;
  p.person = person;
  return p;
}

PhrasebookAction we_live() {
  return a_live(np("we", Number::Pl, 1), AdvPhrase{"in Sweden"});
}
PhrasebookAction i_want() {
  return a_want(np("I", Number::Sg, 1), np("a pizza"));
}
PhrasebookAction i_want_go() {
  return a_want_go(np("I", Number::Sg, 1), AdvPhrase{"to a museum"});
}
PhrasebookAction vi_bor() {
  return a_live(np("vi", Number::Pl, 1), AdvPhrase{"i Sverige"});
}
PhrasebookAction jag_vill() {
  return a_want(np("jag", Number::Sg, 1), np("en pizza"));
}
PhrasebookAction jag_vill_ga() {
  return a_want_go(np("jag", Number::Sg, 1), AdvPhrase{"till ett museum"});
}

}  // namespace

TEST_CASE("phrasebook actions realize in both languages") {
  CHECK(realize_phrasebook(engine(), we_live(), Language::En).text ==
        "we live in Sweden");
  CHECK(realize_phrasebook(engine(), i_want(), Language::En).text ==
        "I want a pizza");
  CHECK(realize_phrasebook(engine(), i_want_go(), Language::En).text ==
        "I want to go to a museum");
  CHECK(realize_phrasebook(engine(), vi_bor(), Language::Sv).text ==
        "vi bor i Sverige");
  CHECK(realize_phrasebook(engine(), jag_vill(), Language::Sv).text ==
        "jag vill ha en pizza");
  CHECK(realize_phrasebook(engine(), jag_vill_ga(), Language::Sv).text ==
        "jag vill gå till ett museum");
}

TEST_CASE("phrasebook trees keep one top-level frame per language pair") {
  for (auto [en_action, sv_action] :
       {std::pair{we_live(), vi_bor()}, std::pair{i_want(), jag_vill()},
        std::pair{i_want_go(), jag_vill_ga()}}) {
    RealizeResult en = realize_phrasebook(engine(), en_action, Language::En);
    RealizeResult sv = realize_phrasebook(engine(), sv_action, Language::Sv);
    CHECK(en.frames == sv.frames);
    CHECK(en.frames.size() == 1);
    CHECK_FALSE(en.empty_subject);
    CHECK_FALSE(sv.empty_subject);
  }
}

TEST_CASE("bundled tree files mirror the action builders") {
  CHECK(load_json("trees/live_en.json") ==
        phrasebook_tree(we_live(), Language::En));
  CHECK(load_json("trees/want_en.json") ==
        phrasebook_tree(i_want(), Language::En));
  CHECK(load_json("trees/want_go_en.json") ==
        phrasebook_tree(i_want_go(), Language::En));
  CHECK(load_json("trees/live_sv.json") ==
        phrasebook_tree(vi_bor(), Language::Sv));
  CHECK(load_json("trees/want_sv.json") ==
        phrasebook_tree(jag_vill(), Language::Sv));
  CHECK(load_json("trees/want_go_sv.json") ==
        phrasebook_tree(jag_vill_ga(), Language::Sv));
}

TEST_CASE("bundled tree files realize to the demo sentences") {
  auto realize = [&](const std::string& name, Language lang) {
    return engine().realize(load_json(name), lang, Tense::Pres).text;
  };
  CHECK(realize("trees/live_en.json", Language::En) == "we live in Sweden");
  CHECK(realize("trees/want_en.json", Language::En) == "I want a pizza");
  CHECK(realize("trees/want_go_en.json", Language::En) ==
        "I want to go to a museum");
  CHECK(realize("trees/live_sv.json", Language::Sv) == "vi bor i Sverige");
  CHECK(realize("trees/want_sv.json", Language::Sv) == "jag vill ha en pizza");
  CHECK(realize("trees/want_go_sv.json", Language::Sv) ==
        "jag vill gå till ett museum");
}

TEST_CASE("the museum record builds the bundled painting trees") {
  PaintingRecord record = demo_painting();
  CHECK(load_json("trees/painting_en.json") ==
        painting_tree(record, Language::En));
  CHECK(load_json("trees/painting_sv.json") ==
        painting_tree(record, Language::Sv));
}

TEST_CASE("painting paragraphs match byte for byte") {
  PaintingRecord record = demo_painting();
  RealizeResult en = realize_painting(engine(), record, Language::En);
  CHECK(en.text ==
        "Le Général Bonapart was painted by Jacques-Louis David in 1510. It "
        "measures 81 by 65 cm. This work is displayed at the Musée du "
        "Louvre.");
  RealizeResult sv = realize_painting(engine(), record, Language::Sv);
  CHECK(sv.text ==
        "Le Général Bonapart målades av Jacques-Louis David år 1510. Den "
        "mäter 81 gånger 65 cm. Det här verket hänger på Louvren.");
}

TEST_CASE("painting clauses bind different verbs over one frame sequence") {
  PaintingRecord record = demo_painting();
  RealizeResult en = realize_painting(engine(), record, Language::En);
  RealizeResult sv = realize_painting(engine(), record, Language::Sv);
  std::vector<std::string> expected = {"Create_physical_artwork", "Dimension",
                                       "Being_located"};
  CHECK(en.frames == expected);
  CHECK(sv.frames == expected);
  // The location clause uses a passive transitive verb in English and an
  // active intransitive one in Swedish.
  json en_tree = painting_tree(record, Language::En);
  json sv_tree = painting_tree(record, Language::Sv);
  CHECK(en_tree["text"][2]["function"] == "Being_located_V2");
  CHECK(sv_tree["text"][2]["function"] == "Being_located_V");
}

TEST_CASE("painting tree files carry their own language") {
  // The root lang field wins over the realize default.
  RealizeResult sv = engine().realize(load_json("trees/painting_sv.json"),
                                      Language::En, Tense::Pres);
  CHECK(sv.text.find("målades") != std::string::npos);
}

TEST_CASE("a record without a year omits the year phrase") {
  PaintingRecord record = demo_painting();
  record.year = 0;
  json tree = painting_tree(record, Language::En);
  CHECK_FALSE(tree["text"][0].contains("adjuncts"));
  RealizeResult en = realize_painting(engine(), record, Language::En);
  CHECK(en.text ==
        "Le Général Bonapart was painted by Jacques-Louis David. It measures "
        "81 by 65 cm. This work is displayed at the Musée du Louvre.");
}

TEST_CASE("the demo record localizes size and museum phrases") {
  PaintingRecord record = demo_painting();
  CHECK(record.year == 1510);
  CHECK(record.width_cm == 81);
  CHECK(record.height_cm == 65);
  json en_tree = painting_tree(record, Language::En);
  json sv_tree = painting_tree(record, Language::Sv);
  CHECK(en_tree["text"][1]["args"]["Measurement_Adv"]["text"] ==
        "81 by 65 cm");
  CHECK(sv_tree["text"][1]["args"]["Measurement_Adv"]["text"] ==
        "81 gånger 65 cm");
  CHECK(en_tree["lang"] == "en");
  CHECK(sv_tree["lang"] == "sv");
}
