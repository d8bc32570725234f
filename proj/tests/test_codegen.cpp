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

#include <algorithm>
#include <set>

#include "fngen/codegen.hpp"
#include "fngen/grammar_parse.hpp"
#include "helpers.hpp"

using namespace fngen;

namespace {

FERealization fe(const std::string& name, PhraseCat cat,
                 SynRole role = SynRole::None) {
  return FERealization{name, cat, role};
}

ValencePattern make(const std::string& frame, VerbType vtype, Voice voice,
                    std::vector<FERealization> fes, long freq = 1) {
  ValencePattern p;
  p.frame = frame;
  p.verb_type = vtype;
  p.voice = voice;
  p.fes = std::move(fes);
  p.freq = freq;
  canonicalize(&p);
  return p;
}

PatternSet set_of(std::vector<ValencePattern> patterns) {
  PatternSet s;
  s.fn_id = "test";
  for (const auto& p : patterns) s.add(p);
  return s;
}

// The four Desiring patterns used throughout: plain verb with an adverbial
// focus, transitive in both voices, and a VP-complement verb.
PatternSet desiring_set() {
  return set_of(
      {make("Desiring", VerbType::V, Voice::Act,
            {fe("Experiencer", PhraseCat::NP, SynRole::Subj),
             fe("Focal_participant", PhraseCat::Adv)}),
       make("Desiring", VerbType::V2, Voice::Act,
            {fe("Experiencer", PhraseCat::NP, SynRole::Subj),
             fe("Focal_participant", PhraseCat::NP, SynRole::DObj)}),
       make("Desiring", VerbType::V2, Voice::Pass,
            {fe("Experiencer", PhraseCat::NP, SynRole::Agent),
             fe("Focal_participant", PhraseCat::NP, SynRole::Subj)}),
       make("Desiring", VerbType::VV, Voice::Act,
            {fe("Event", PhraseCat::VP),
             fe("Experiencer", PhraseCat::NP, SynRole::Subj)})});
}

const LinDef& lin_for(const std::vector<FrameFunctionDecl>& funs,
                      std::vector<LinDef>* store, const std::string& name) {
  for (const auto& fun : funs) {
    if (fun.name == name) {
      store->push_back(make_lin(fun));
      return store->back();
    }
  }
  REQUIRE(false);
  static LinDef dummy;
  return dummy;
}

}  // namespace

TEST_CASE("voice suffix appears only when both voices occur") {
  auto funs = name_functions(desiring_set());
  REQUIRE(funs.size() == 4);
  CHECK(funs[0].name == "Desiring_V");
  CHECK(funs[1].name == "Desiring_V2_Act");
  CHECK(funs[2].name == "Desiring_V2_Pass");
  CHECK(funs[3].name == "Desiring_VV");
  CHECK_FALSE(funs[0].voice_suffix);
  CHECK(funs[1].voice_suffix);
  CHECK(funs[2].voice_suffix);
  CHECK_FALSE(funs[3].voice_suffix);
  for (const auto& f : funs) CHECK(f.discriminator == 0);
}

TEST_CASE("numeric discriminators separate same-cell patterns") {
  auto funs = name_functions(set_of(
      {make("Motion", VerbType::V, Voice::Act,
            {fe("Area", PhraseCat::Adv), fe("Theme", PhraseCat::NP,
                                            SynRole::Subj)}),
       make("Motion", VerbType::V, Voice::Act,
            {fe("Goal", PhraseCat::Adv), fe("Source", PhraseCat::Adv),
             fe("Theme", PhraseCat::NP, SynRole::Subj)})}));
  REQUIRE(funs.size() == 2);
  CHECK(funs[0].name == "Motion_V_1");
  CHECK(funs[1].name == "Motion_V_2");
  CHECK(funs[0].discriminator == 1);
  CHECK(funs[1].discriminator == 2);
  CHECK_FALSE(funs[0].voice_suffix);
}

TEST_CASE("arguments are sorted by category name with lowercase params") {
  auto funs = name_functions(set_of({make(
      "Giving", VerbType::V3, Voice::Act,
      {fe("Donor", PhraseCat::NP, SynRole::Subj),
       fe("Recipient", PhraseCat::NP, SynRole::IObj),
       fe("Theme", PhraseCat::NP, SynRole::DObj)})}));
  REQUIRE(funs.size() == 1);
  const auto& args = funs[0].args;
  REQUIRE(args.size() == 3);
  CHECK(args[0].category_name() == "Donor_NP");
  CHECK(args[1].category_name() == "Recipient_NP");
  CHECK(args[2].category_name() == "Theme_NP");
  CHECK(args[0].param == "donor");
  CHECK(args[1].param == "recipient");
  CHECK(args[2].param == "theme");
  CHECK(funs[0].verb_param == "v3");
}

TEST_CASE("repeated frame elements get numbered params") {
  auto funs = name_functions(set_of({make(
      "Motion", VerbType::V, Voice::Act,
      {fe("Goal", PhraseCat::Adv), fe("Goal", PhraseCat::Adv),
       fe("Theme", PhraseCat::NP, SynRole::Subj)})}));
  REQUIRE(funs.size() == 1);
  REQUIRE(funs[0].args.size() == 3);
  CHECK(funs[0].args[0].param == "goal");
  CHECK(funs[0].args[1].param == "goal_2");
  CHECK(funs[0].args[2].param == "theme");
}

TEST_CASE("categories deduplicate across functions and stay sorted") {
  auto funs = name_functions(desiring_set());
  auto cats = collect_categories(funs);
  std::vector<std::string> names;
  for (const auto& c : cats) names.push_back(c.name());
  CHECK(names == std::vector<std::string>{"Event_VP", "Experiencer_NP",
                                          "Focal_participant_Adv",
                                          "Focal_participant_NP"});
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("lexicon signatures merge languages and sort by name") {
  LexiconEntry want;
  want.lemma = "want";
  want.verb_type = VerbType::V2;
  want.frame = "Desiring";
  want.language = Language::En;
  want.forms = {"want", "wants", "wanted", "wanted", "wanting"};
  LexiconEntry vilja;
  vilja.lemma = "vilja";
  vilja.verb_type = VerbType::VV;
  vilja.frame = "Desiring";
  vilja.language = Language::Sv;
  vilja.forms = {"vilja", "vill", "ville", "velat", "viljas", "villes"};
  std::map<Language, std::vector<LexiconEntry>> lexicons;
  lexicons[Language::En] = {want};
  lexicons[Language::Sv] = {vilja, vilja};
  auto sigs = lexicon_signatures(lexicons);
  REQUIRE(sigs.size() == 2);
  CHECK(sigs[0].name == "vilja_VV_Desiring");
  CHECK(sigs[0].verb_type == VerbType::VV);
  CHECK(sigs[1].name == "want_V2_Desiring");
  CHECK(sigs[1].verb_type == VerbType::V2);
}

TEST_CASE("the four Desiring linearizations match the templates") {
  auto funs = name_functions(desiring_set());
  std::vector<LinDef> store;

  const LinDef& v = lin_for(funs, &store, "Desiring_V");
  CHECK(v.params ==
        std::vector<std::string>{"experiencer", "focal_participant", "v"});
  CHECK(print_expr(v.np) == "fromMaybe NP experiencer");
  CHECK(print_expr(v.vp) == "mkVP (mkVP v) (fromMaybe Adv focal_participant)");

  const LinDef& v2a = lin_for(funs, &store, "Desiring_V2_Act");
  CHECK(print_expr(v2a.np) == "fromMaybe NP experiencer");
  CHECK(print_expr(v2a.vp) == "mkVP v2 (fromMaybe NP focal_participant)");

  const LinDef& v2p = lin_for(funs, &store, "Desiring_V2_Pass");
  CHECK(print_expr(v2p.np) == "fromMaybe NP focal_participant");
  CHECK(print_expr(v2p.vp) ==
        "mkVP (passiveVP v2) (mkAdv by8agent_Prep (fromMaybe NP "
        "experiencer))");

  const LinDef& vv = lin_for(funs, &store, "Desiring_VV");
  CHECK(vv.params == std::vector<std::string>{"event", "experiencer", "vv"});
  CHECK(print_expr(vv.np) == "fromMaybe NP experiencer");
  CHECK(print_expr(vv.vp) == "mkVP (mkVV vv) (fromMaybe VP event)");
}

TEST_CASE("ditransitive and complement templates fill both slots") {
  auto funs = name_functions(set_of(
      {make("Giving", VerbType::V3, Voice::Act,
            {fe("Donor", PhraseCat::NP, SynRole::Subj),
             fe("Recipient", PhraseCat::NP, SynRole::IObj),
             fe("Theme", PhraseCat::NP, SynRole::DObj)}),
       make("Hear", VerbType::VS, Voice::Act,
            {fe("Hearer", PhraseCat::NP, SynRole::Subj),
             fe("Message", PhraseCat::S)}),
       make("Request", VerbType::V2V, Voice::Act,
            {fe("Addressee", PhraseCat::NP, SynRole::IObj),
             fe("Message", PhraseCat::VP),
             fe("Speaker", PhraseCat::NP, SynRole::Subj)}),
       make("Suasion", VerbType::V2S, Voice::Act,
            {fe("Addressee", PhraseCat::NP, SynRole::DObj),
             fe("Content", PhraseCat::S),
             fe("Speaker", PhraseCat::NP, SynRole::Subj)})}));
  std::vector<LinDef> store;
  CHECK(print_expr(lin_for(funs, &store, "Giving_V3").vp) ==
        "mkVP v3 (fromMaybe NP recipient) (fromMaybe NP theme)");
  CHECK(print_expr(lin_for(funs, &store, "Hear_VS").vp) ==
        "mkVP vs (fromMaybe S message)");
  CHECK(print_expr(lin_for(funs, &store, "Request_V2V").vp) ==
        "mkVP v2v (fromMaybe NP addressee) (fromMaybe VP message)");
  CHECK(print_expr(lin_for(funs, &store, "Suasion_V2S").vp) ==
        "mkVP v2s (fromMaybe NP addressee) (fromMaybe S content)");
}

TEST_CASE("missing slots fall back to empty phrases") {
  auto funs = name_functions(set_of(
      {make("Desiring", VerbType::V2, Voice::Act,
            {fe("Focal_participant", PhraseCat::NP, SynRole::DObj)}),
       make("Hear", VerbType::VS, Voice::Act,
            {fe("Hearer", PhraseCat::NP, SynRole::Subj)}),
       make("Desiring", VerbType::VV, Voice::Act,
            {fe("Experiencer", PhraseCat::NP, SynRole::Subj)})}));
  std::vector<LinDef> store;
  const LinDef& subjectless = lin_for(funs, &store, "Desiring_V2");
  CHECK(print_expr(subjectless.np) == "emptyNP");
  CHECK(print_expr(subjectless.vp) ==
        "mkVP v2 (fromMaybe NP focal_participant)");
  CHECK(print_expr(lin_for(funs, &store, "Hear_VS").vp) == "mkVP vs emptyS");
  CHECK(print_expr(lin_for(funs, &store, "Desiring_VV").vp) ==
        "mkVP (mkVV vv) emptyVP");
}

TEST_CASE("adverbial arguments wrap the core in argument order") {
  auto funs = name_functions(set_of({make(
      "Motion", VerbType::V, Voice::Act,
      {fe("Theme", PhraseCat::NP, SynRole::Subj), fe("Goal", PhraseCat::Adv),
       fe("Source", PhraseCat::Adv)})}));
  std::vector<LinDef> store;
  CHECK(print_expr(lin_for(funs, &store, "Motion_V").vp) ==
        "mkVP (mkVP (mkVP v) (fromMaybe Adv goal)) (fromMaybe Adv source)");
}

TEST_CASE("passive templates keep complements and the agent phrase") {
  auto funs = name_functions(set_of(
      {make("Giving", VerbType::V3, Voice::Pass,
            {fe("Donor", PhraseCat::NP, SynRole::Agent),
             fe("Recipient", PhraseCat::NP, SynRole::Subj),
             fe("Theme", PhraseCat::NP, SynRole::DObj)}),
       make("Hear", VerbType::VS, Voice::Pass, {fe("Message", PhraseCat::S)}),
       make("Request", VerbType::V2V, Voice::Pass,
            {fe("Addressee", PhraseCat::NP, SynRole::Subj),
             fe("Message", PhraseCat::VP)})}));
  std::vector<LinDef> store;
  CHECK(print_expr(lin_for(funs, &store, "Giving_V3").vp) ==
        "mkVP (mkVP (passiveVP v3) (fromMaybe NP theme)) (mkAdv by8agent_Prep "
        "(fromMaybe NP donor))");
  const LinDef& vs = lin_for(funs, &store, "Hear_VS");
  CHECK(print_expr(vs.np) == "emptyNP");
  CHECK(print_expr(vs.vp) == "mkVP (passiveVP vs) (fromMaybe S message)");
  CHECK(print_expr(lin_for(funs, &store, "Request_V2V").vp) ==
        "mkVP (passiveVP v2v) (fromMaybe VP message)");
}

TEST_CASE("bare passives reduce to the passive verb phrase") {
  auto funs = name_functions(set_of({make(
      "Desiring", VerbType::V2, Voice::Pass,
      {fe("Focal_participant", PhraseCat::NP, SynRole::Subj)})}));
  std::vector<LinDef> store;
  CHECK(print_expr(lin_for(funs, &store, "Desiring_V2").vp) ==
        "passiveVP v2");
}

TEST_CASE("linearization is total over random patterns") {
  fngen_tests::PatternGen gen(991);
  for (int i = 0; i < 500; ++i) {
    ValencePattern p = gen.pattern();
    PatternSet s;
    s.fn_id = "r";
    s.add(p);
    auto funs = name_functions(s);
    REQUIRE(funs.size() == 1);
    LinDef lin = make_lin(funs[0]);
    CHECK(lin.params.size() == funs[0].args.size() + 1);
    CHECK(lin.params.back() == funs[0].verb_param);
    CHECK((lin.vp.head == "mkVP" || lin.vp.head == "passiveVP"));
    CHECK(parse_expr(print_expr(lin.vp)) == lin.vp);
    CHECK(parse_expr(print_expr(lin.np)) == lin.np);
  }
}

TEST_CASE("abstract source carries the Desiring signatures") {
  GrammarBundle bundle = make_bundle(desiring_set(), "FrameGram", {});
  std::string abs = gen_abstract(bundle);
  CHECK(abs.find("abstract FrameGram ;") != std::string::npos);
  CHECK(abs.find("cat Experiencer_NP ;") != std::string::npos);
  CHECK(abs.find("fun Desiring_V : Experiencer_NP -> Focal_participant_Adv "
                 "-> V -> Clause ;") != std::string::npos);
  CHECK(abs.find("fun Desiring_V2_Act : Experiencer_NP -> "
                 "Focal_participant_NP -> V2 -> Clause ;") !=
        std::string::npos);
  CHECK(abs.find("fun Desiring_V2_Pass : Experiencer_NP -> "
                 "Focal_participant_NP -> V2 -> Clause ;") !=
        std::string::npos);
  CHECK(abs.find("fun Desiring_VV : Event_VP -> Experiencer_NP -> VV -> "
                 "Clause ;") != std::string::npos);
}

TEST_CASE("concrete and lexicon sources render entries") {
  LexiconEntry want;
  want.lemma = "want";
  want.verb_type = VerbType::VV;
  want.frame = "Desiring";
  want.language = Language::En;
  want.forms = {"want", "wants", "wanted", "wanted", "wanting"};
  want.complement_marker = "to";
  std::map<Language, std::vector<LexiconEntry>> lexicons;
  lexicons[Language::En] = {want};

  GrammarBundle bundle = make_bundle(desiring_set(), "FrameGram", lexicons);
  std::string conc = gen_concrete(bundle, Language::En);
  CHECK(conc.find("concrete FrameGramEng of FrameGram ;") !=
        std::string::npos);
  CHECK(conc.find("lin Desiring_VV event experiencer vv = { np = fromMaybe "
                  "NP experiencer ; vp = mkVP (mkVV vv) (fromMaybe VP event) "
                  "} ;") != std::string::npos);

  std::string lex = gen_lexicon(bundle, Language::En);
  CHECK(lex.find("lexicon LexiconEng for en ;") != std::string::npos);
  CHECK(lex.find("lex want_VV_Desiring = verb \"want\" \"wants\" \"wanted\" "
                 "\"wanted\" \"wanting\" compl \"to\" ;") !=
        std::string::npos);

  // A language without a lexicon still renders a valid empty module.
  std::string sv = gen_concrete(bundle, Language::Sv);
  CHECK(sv.find("concrete FrameGramSwe of FrameGram ;") != std::string::npos);
  CHECK(sv.find("lin ") == std::string::npos);
}

TEST_CASE("bundles contain one linearization per function and language") {
  LexiconEntry want;
  want.lemma = "want";
  want.verb_type = VerbType::V2;
  want.frame = "Desiring";
  want.language = Language::En;
  want.forms = {"want", "wants", "wanted", "wanted", "wanting"};
  LexiconEntry vilja;
  vilja.lemma = "vilja";
  vilja.verb_type = VerbType::VV;
  vilja.frame = "Desiring";
  vilja.language = Language::Sv;
  vilja.forms = {"vilja", "vill", "ville", "velat", "viljas", "villes"};
  std::map<Language, std::vector<LexiconEntry>> lexicons;
  lexicons[Language::En] = {want};
  lexicons[Language::Sv] = {vilja};

  GrammarBundle bundle = make_bundle(desiring_set(), "FrameGram", lexicons);
  CHECK(bundle.name == "FrameGram");
  CHECK(bundle.funs.size() == 4);
  CHECK(bundle.cats.size() == 4);
  CHECK(bundle.lex_sigs.size() == 2);
  REQUIRE(bundle.concretes.count(Language::En) == 1);
  REQUIRE(bundle.concretes.count(Language::Sv) == 1);
  CHECK(bundle.concretes.at(Language::En).size() == bundle.funs.size());
  CHECK(bundle.concretes.at(Language::En) ==
        bundle.concretes.at(Language::Sv));
  for (size_t i = 0; i < bundle.funs.size(); ++i) {
    CHECK(bundle.concretes.at(Language::En)[i].fun == bundle.funs[i].name);
  }
}

TEST_CASE("generated names stay unique over random pattern sets") {
  fngen_tests::PatternGen gen(313);
  for (int round = 0; round < 40; ++round) {
    PatternSet s = gen.set(12, "r");
    auto funs = name_functions(s);
    CHECK(funs.size() == s.size());
    std::set<std::string> names;
    for (const auto& f : funs) {
      CHECK(names.insert(f.name).second);
    }
  }
}
