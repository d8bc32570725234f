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

#include "fngen/types.hpp"

#include <array>

namespace fngen {

namespace {

const std::array<std::string, 4> kCatNames = {"NP", "Adv", "S", "VP"};
const std::array<std::string, 5> kRoleWires = {"subj", "dobj", "iobj", "agent",
                                               "none"};
const std::array<std::string, 5> kRoleLabels = {"Subj", "DObj", "IObj",
                                                "Agent", "None"};
const std::array<std::string, 2> kVoiceWires = {"act", "pass"};
const std::array<std::string, 2> kVoiceLabels = {"Act", "Pass"};
const std::array<std::string, 7> kVerbTypes = {"V",  "V2",  "V3", "VV",
                                               "VS", "V2V", "V2S"};
const std::array<std::string, 2> kLangCodes = {"en", "sv"};
const std::array<std::string, 2> kLangSuffixes = {"Eng", "Swe"};
const std::array<std::string, 2> kTenseNames = {"pres", "past"};

template <typename Enum, size_t N>
std::optional<Enum> FromName(const std::array<std::string, N>& names,
                             const std::string& name) {
  for (size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

}  // namespace

const std::string& cat_name(PhraseCat cat) {
  return kCatNames[static_cast<size_t>(cat)];
}

const std::string& role_wire(SynRole role) {
  return kRoleWires[static_cast<size_t>(role)];
}

const std::string& role_label(SynRole role) {
  return kRoleLabels[static_cast<size_t>(role)];
}

const std::string& voice_wire(Voice voice) {
  return kVoiceWires[static_cast<size_t>(voice)];
}

const std::string& voice_label(Voice voice) {
  return kVoiceLabels[static_cast<size_t>(voice)];
}

const std::string& verb_type_name(VerbType vtype) {
  return kVerbTypes[static_cast<size_t>(vtype)];
}

const std::string& lang_code(Language lang) {
  return kLangCodes[static_cast<size_t>(lang)];
}

const std::string& lang_suffix(Language lang) {
  return kLangSuffixes[static_cast<size_t>(lang)];
}

const std::string& tense_name(Tense tense) {
  return kTenseNames[static_cast<size_t>(tense)];
}

std::optional<PhraseCat> cat_from_name(const std::string& name) {
  return FromName<PhraseCat>(kCatNames, name);
}

std::optional<SynRole> role_from_wire(const std::string& name) {
  return FromName<SynRole>(kRoleWires, name);
}

std::optional<Voice> voice_from_wire(const std::string& name) {
  return FromName<Voice>(kVoiceWires, name);
}

std::optional<VerbType> verb_type_from_name(const std::string& name) {
  return FromName<VerbType>(kVerbTypes, name);
}

std::optional<Language> lang_from_code(const std::string& code) {
  return FromName<Language>(kLangCodes, code);
}

std::optional<Tense> tense_from_name(const std::string& name) {
  return FromName<Tense>(kTenseNames, name);
}

bool cat_less(PhraseCat a, PhraseCat b) { return cat_name(a) < cat_name(b); }

bool role_less(SynRole a, SynRole b) { return role_wire(a) < role_wire(b); }

}  // namespace fngen
