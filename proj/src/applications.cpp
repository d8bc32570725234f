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

#include "fngen/applications.hpp"

namespace fngen {

namespace {

nlohmann::json NpJson(const NPhrase& np) {
  nlohmann::json j{{"text", np.surface}};
  if (np.number == Number::Pl) j["number"] = "pl";
  if (np.person != 3) j["person"] = np.person;
  if (!np.object_form.empty()) j["objform"] = np.object_form;
  return j;
}

nlohmann::json AdvJson(const AdvPhrase& adv) {
  return nlohmann::json{{"text", adv.surface}};
}

}  // namespace

PhrasebookAction a_live(NPhrase person, AdvPhrase location) {
  PhrasebookAction a;
  a.kind = PhrasebookAction::Kind::Live;
  a.person = std::move(person);
  a.place = std::move(location);
  return a;
}

PhrasebookAction a_want(NPhrase person, NPhrase object) {
  PhrasebookAction a;
  a.kind = PhrasebookAction::Kind::Want;
  a.person = std::move(person);
  a.object = std::move(object);
  return a;
}

PhrasebookAction a_want_go(NPhrase person, AdvPhrase goal) {
  PhrasebookAction a;
  a.kind = PhrasebookAction::Kind::WantGo;
  a.person = std::move(person);
  a.place = std::move(goal);
  return a;
}

nlohmann::json phrasebook_tree(const PhrasebookAction& action, Language lang) {
  bool en = lang == Language::En;
  switch (action.kind) {
    case PhrasebookAction::Kind::Live:
      return nlohmann::json{
          {"function", "Residence_V"},
          {"verb", en ? "live_V_Residence" : "bo_V_Residence"},
          {"args",
           {{"Location_Adv", AdvJson(action.place)},
            {"Resident_NP", NpJson(action.person)}}}};
    case PhrasebookAction::Kind::Want:
      if (en) {
        return nlohmann::json{
            {"function", "Desiring_V2_Act"},
            {"verb", "want_V2_Desiring"},
            {"args",
             {{"Experiencer_NP", NpJson(action.person)},
              {"Focal_participant_NP", NpJson(action.object)}}}};
      }
      // Swedish: vilja takes a verb phrase, so the wanted thing is wrapped
      // in a possession clause with no owner.
      return nlohmann::json{
          {"function", "Desiring_VV"},
          {"verb", "vilja_VV_Desiring"},
          {"args",
           {{"Event_VP",
             {{"function", "Possession_V2"},
              {"verb", "ha_V2_Possession"},
              {"args", {{"Possession_NP", NpJson(action.object)}}}}},
            {"Experiencer_NP", NpJson(action.person)}}}};
    case PhrasebookAction::Kind::WantGo:
      return nlohmann::json{
          {"function", "Desiring_VV"},
          {"verb", en ? "want_VV_Desiring" : "vilja_VV_Desiring"},
          {"args",
           {{"Event_VP",
             {{"function", "Motion_V_2"},
              {"verb", en ? "go_V_Motion" : "gå_V_Motion"},
              {"args", {{"Goal_Adv", AdvJson(action.place)}}}}},
            {"Experiencer_NP", NpJson(action.person)}}}};
  }
  throw ValidationError("unknown phrasebook action");
}

RealizeResult realize_phrasebook(const RealizerEngine& engine,
                                 const PhrasebookAction& action,
                                 Language lang) {
  return engine.realize(phrasebook_tree(action, lang), lang, Tense::Pres);
}

PaintingRecord demo_painting() {
  PaintingRecord r;
  r.painting.surface = "Le Général Bonapart";
  r.painter.long_name.surface = "Jacques-Louis David";
  r.year = 1510;
  r.width_cm = 81;
  r.height_cm = 65;
  r.museum_en = "the Musée du Louvre";
  r.museum_sv = "Louvren";
  return r;
}

nlohmann::json painting_tree(const PaintingRecord& record, Language lang) {
  bool en = lang == Language::En;
  std::string size = std::to_string(record.width_cm) +
                     (en ? " by " : " gånger ") +
                     std::to_string(record.height_cm) + " cm";
  std::string museum = en ? "at " + record.museum_en : "på " + record.museum_sv;

  nlohmann::json creation{
      {"function", "Create_physical_artwork_V2_Pass"},
      {"verb",
       en ? "paint_V2_Create_physical_artwork"
          : "måla_V2_Create_physical_artwork"},
      {"tense", "past"},
      {"args",
       {{"Creator_NP", NpJson(record.painter.long_name)},
        {"Representation_NP", NpJson(record.painting)}}}};
  if (record.year > 0) {
    std::string year = (en ? "in " : "år ") + std::to_string(record.year);
    creation["adjuncts"] = nlohmann::json::array({year});
  }

  nlohmann::json dimension{
      {"function", "Dimension_V"},
      {"verb", en ? "measure_V_Dimension" : "mäta_V_Dimension"},
      {"args",
       {{"Measurement_Adv", {{"text", size}}},
        {"Object_NP", {{"text", en ? "it" : "den"}}}}}};

  // The location clause: a passive transitive in English, an active
  // intransitive in Swedish, per-language lexical choice over one frame.
  nlohmann::json location =
      en ? nlohmann::json{{"function", "Being_located_V2"},
                          {"verb", "display_V2_Being_located"},
                          {"args",
                           {{"Location_Adv", {{"text", museum}}},
                            {"Theme_NP", {{"text", "this work"}}}}}}
         : nlohmann::json{{"function", "Being_located_V"},
                          {"verb", "hänga_V_Being_located"},
                          {"args",
                           {{"Location_Adv", {{"text", museum}}},
                            {"Theme_NP", {{"text", "det här verket"}}}}}};

  return nlohmann::json{
      {"lang", lang_code(lang)},
      {"text", nlohmann::json::array({creation, dimension, location})}};
}

RealizeResult realize_painting(const RealizerEngine& engine,
                               const PaintingRecord& record, Language lang) {
  return engine.realize(painting_tree(record, lang), lang, Tense::Pres);
}

}  // namespace fngen
