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

#ifndef FNGEN_EXTRACTION_H_
#define FNGEN_EXTRACTION_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fngen/corpus.hpp"
#include "fngen/patterns.hpp"
#include "fngen/types.hpp"

namespace fngen {

// Maps corpus-specific raw phrase type labels to the four phrase
// categories. Subclause labels ("sub" rows) resolve through their
// that_compatible flag: verbalizable with a subjunction means S, anything
// else demotes to Adv. The table is user-extensible; labels the table does
// not know yield no category and the sentence is skipped.
class GeneralizationTable {
 public:
  struct Entry {
    bool subclause = false;
    PhraseCat cat = PhraseCat::NP;  // ignored for subclause rows
    bool that_compatible = false;
  };

  void add(const std::string& raw_label, const Entry& entry);
  std::optional<PhraseCat> lookup(const std::string& raw_label) const;
  size_t size() const { return entries_.size(); }

  // Covers the label families the generalization is defined over: plain NPs,
  // adverb and preposition phrases (including those governing wh-clauses or
  // gerunds), finite/interrogative/whether subclauses, and finite, gerundive
  // and infinitival VPs.
  static GeneralizationTable default_table();

  static GeneralizationTable load(const std::filesystem::path& path);
  static GeneralizationTable parse(const std::string& text,
                                   const std::string& source_name);

 private:
  std::map<std::string, Entry> entries_;
};

std::optional<PhraseCat> generalize_phrase_type(
    const std::string& raw_label, const GeneralizationTable& table);

// Deduces the verb's subcategorization class from the realized frame
// elements. Priority rules, first match wins:
//   1. VP complement beside an indirect object    -> V2V
//   2. VP complement                              -> VV
//   3. S complement beside a direct or indirect
//      object                                     -> V2S
//   4. S complement                               -> VS
//   5. direct and indirect object                 -> V3
//   6. indirect object alone                      -> V3
//   7. direct object                              -> V2
//   8. passive voice (promoted object)            -> V2
//   9. otherwise                                  -> V
VerbType deduce_verb_type(const std::vector<FERealization>& fes, Voice voice);

enum class SkipReason {
  UnmappablePhraseType,
  NonVerbTarget,
  RoleConflict,
  NonCoreOnly,
};

const std::string& skip_reason_name(SkipReason reason);
std::optional<SkipReason> skip_reason_from_name(const std::string& name);

struct SkipReport {
  std::string sentence_id;
  SkipReason reason = SkipReason::UnmappablePhraseType;

  bool operator==(const SkipReport& other) const {
    return sentence_id == other.sentence_id && reason == other.reason;
  }
};

using ExtractOutcome = std::variant<ValencePattern, SkipReport>;

// Turns one sentence into a canonical pattern with freq 1, or a skip report.
// Non-core spans are dropped before anything else is decided, so an exotic
// phrase type on a peripheral element never loses the sentence.
ExtractOutcome extract_pattern(const AnnotatedSentence& sentence,
                               const FrameInventory& frames,
                               const GeneralizationTable& table);

struct ExtractionResult {
  PatternSet patterns;
  std::vector<SkipReport> skips;
  size_t sentence_count = 0;

  double skip_rate() const {
    return sentence_count == 0
               ? 0.0
               : static_cast<double>(skips.size()) /
                     static_cast<double>(sentence_count);
  }
};

ExtractionResult extract_all(const Corpus& corpus,
                             const GeneralizationTable& table);

std::string serialize_skips(const std::vector<SkipReport>& skips);

// Sentence-level validation that also runs the generalization table, so it
// can flag object or subject roles sitting on spans that are not noun
// phrases. Extends the structural checks from the corpus module.
std::vector<std::string> validate_sentence(const AnnotatedSentence& sentence,
                                           const FrameInventory& frames,
                                           const GeneralizationTable& table);

}  // namespace fngen

#endif  // FNGEN_EXTRACTION_H_
