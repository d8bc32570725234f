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

#ifndef FNGEN_APPLICATIONS_H_
#define FNGEN_APPLICATIONS_H_

#include <string>

#include <json.hpp>

#include "fngen/realizer.hpp"
#include "fngen/types.hpp"

namespace fngen {

// A clause-building action from the tourist-phrase demo.
struct PhrasebookAction {
  enum class Kind { Live, Want, WantGo };
  Kind kind = Kind::Live;
  NPhrase person;
  NPhrase object;   // Want: the desired thing
  AdvPhrase place;  // Live: the location; WantGo: the goal
};

PhrasebookAction a_live(NPhrase person, AdvPhrase location);
PhrasebookAction a_want(NPhrase person, NPhrase object);
PhrasebookAction a_want_go(NPhrase person, AdvPhrase goal);

// The frame tree realizing an action. English Want applies the transitive
// desiring function directly; Swedish needs the auxiliary "ha" and nests a
// possession frame under the desiring verb. WantGo nests a motion frame in
// both languages.
nlohmann::json phrasebook_tree(const PhrasebookAction& action, Language lang);

// Renders the action as a bare clause (no capitalization or period).
RealizeResult realize_phrasebook(const RealizerEngine& engine,
                                 const PhrasebookAction& action,
                                 Language lang);

// Language-neutral facts about a painting; realization localizes the year,
// size and museum phrases.
struct PaintingRecord {
  NPhrase painting;
  struct Painter {
    NPhrase long_name;
  } painter;
  int year = 0;  // 0: no year phrase
  int width_cm = 0;
  int height_cm = 0;
  std::string museum_en;  // name as used after "at"
  std::string museum_sv;  // name as used after "på"
};

// The record behind the bundled museum demo.
PaintingRecord demo_painting();

// Three clauses: creation (passive, past, year attached as an adjunct),
// dimension, and location. English describes the location with a passive
// transitive verb, Swedish with an active intransitive one, so the third
// clause binds different functions per language while the frame sequence
// stays the same.
nlohmann::json painting_tree(const PaintingRecord& record, Language lang);

// Renders the three clauses as a paragraph.
RealizeResult realize_painting(const RealizerEngine& engine,
                               const PaintingRecord& record, Language lang);

}  // namespace fngen

#endif  // FNGEN_APPLICATIONS_H_
