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

#ifndef FNGEN_TYPES_H_
#define FNGEN_TYPES_H_

#include <optional>
#include <stdexcept>
#include <string>

namespace fngen {

// Syntactic category of a frame element realization after generalization.
// Prepositional and adverbial phrases collapse into Adv.
enum class PhraseCat { NP, Adv, S, VP };

// Grammatical role of a frame element within its sentence. Agent marks the
// demoted subject of a passive; None covers oblique realizations.
enum class SynRole { Subj, DObj, IObj, Agent, None };

enum class Voice { Act, Pass };

// Subcategorization class of the frame-evoking verb. V2/V3 take one or two
// noun phrase objects, VV/VS take verb phrase or sentence complements, and
// V2V/V2S combine an object with such a complement.
enum class VerbType { V, V2, V3, VV, VS, V2V, V2S };

enum class Language { En, Sv };

enum class Tense { Pres, Past };

// Display and wire names. Categories and verb types use the same spelling in
// both; roles and voice are lowercase on the wire and capitalized in labels.
const std::string& cat_name(PhraseCat cat);
const std::string& role_wire(SynRole role);
const std::string& role_label(SynRole role);
const std::string& voice_wire(Voice voice);
const std::string& voice_label(Voice voice);
const std::string& verb_type_name(VerbType vtype);
const std::string& lang_code(Language lang);
const std::string& lang_suffix(Language lang);  // Eng / Swe
const std::string& tense_name(Tense tense);

std::optional<PhraseCat> cat_from_name(const std::string& name);
std::optional<SynRole> role_from_wire(const std::string& name);
std::optional<Voice> voice_from_wire(const std::string& name);
std::optional<VerbType> verb_type_from_name(const std::string& name);
std::optional<Language> lang_from_code(const std::string& code);
std::optional<Tense> tense_from_name(const std::string& name);

// Ordering used everywhere patterns are sorted: lexicographic on the printed
// names, so it stays stable if enum values are ever reordered.
bool cat_less(PhraseCat a, PhraseCat b);
bool role_less(SynRole a, SynRole b);

// Raised on malformed input files; carries file context when available.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
};

// Raised when well-formed input violates a semantic requirement.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message)
      : std::runtime_error(message) {}
};

// Raised when an internal consistency check fails (for example, generated
// sources that do not parse back to the bundle). Not a user input problem.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& message)
      : std::logic_error(message) {}
};

}  // namespace fngen

#endif  // FNGEN_TYPES_H_
