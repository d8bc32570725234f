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

#include "fngen/extraction.hpp"

#include <array>

#include "fngen/jsonl.hpp"

namespace fngen {

namespace {

const std::array<std::string, 4> kSkipNames = {
    "UnmappablePhraseType", "NonVerbTarget", "RoleConflict", "NonCoreOnly"};

bool IsNpRole(SynRole role) {
  return role == SynRole::Subj || role == SynRole::DObj ||
         role == SynRole::IObj || role == SynRole::Agent;
}

GeneralizationTable::Entry PlainEntry(PhraseCat cat) {
  GeneralizationTable::Entry e;
  e.cat = cat;
  return e;
}

GeneralizationTable::Entry SubEntry(bool that_compatible) {
  GeneralizationTable::Entry e;
  e.subclause = true;
  e.that_compatible = that_compatible;
  return e;
}

}  // namespace

void GeneralizationTable::add(const std::string& raw_label,
                              const Entry& entry) {
  entries_[raw_label] = entry;
}

std::optional<PhraseCat> GeneralizationTable::lookup(
    const std::string& raw_label) const {
  auto it = entries_.find(raw_label);
  if (it == entries_.end()) return std::nullopt;
  const Entry& e = it->second;
  if (e.subclause) {
    return e.that_compatible ? PhraseCat::S : PhraseCat::Adv;
  }
  return e.cat;
}

GeneralizationTable GeneralizationTable::default_table() {
  GeneralizationTable table;
  table.add("NP", PlainEntry(PhraseCat::NP));
  table.add("AVP", PlainEntry(PhraseCat::Adv));
  table.add("PP", PlainEntry(PhraseCat::Adv));
  table.add("PPing", PlainEntry(PhraseCat::Adv));
  table.add("PPinterrog", PlainEntry(PhraseCat::Adv));
  table.add("Sfin", SubEntry(true));
  table.add("Sfin-that", SubEntry(true));
  table.add("Sinterrog", SubEntry(false));
  table.add("Swhether", SubEntry(false));
  table.add("VPfin", PlainEntry(PhraseCat::VP));
  table.add("VPing", PlainEntry(PhraseCat::VP));
  table.add("VPto", PlainEntry(PhraseCat::VP));
  return table;
}

GeneralizationTable GeneralizationTable::parse(
    const std::string& text, const std::string& source_name) {
  GeneralizationTable table;
  for (const auto& record : parse_jsonl(text, source_name)) {
    require_fields(record, {"raw_label", "cat"},
                   {"raw_label", "cat", "that_compatible"});
    std::string raw_label = get_string(record, "raw_label");
    std::string cat = get_string(record, "cat");
    bool that_compatible = record.value.contains("that_compatible") &&
                           get_bool(record, "that_compatible");
    Entry entry;
    if (cat == "Sub") {
      entry = SubEntry(that_compatible);
    } else {
      auto parsed = cat_from_name(cat);
      if (!parsed) {
        throw ParseError(record.source + ": unknown category \"" + cat +
                         "\" (expected NP, Adv, S, VP or Sub)");
      }
      if (that_compatible && *parsed != PhraseCat::S) {
        throw ParseError(record.source +
                         ": that_compatible only applies to subclauses");
      }
      entry = PlainEntry(*parsed);
    }
    table.add(raw_label, entry);
  }
  return table;
}

GeneralizationTable GeneralizationTable::load(
    const std::filesystem::path& path) {
  return parse(read_text_file(path), path.filename().string());
}

std::optional<PhraseCat> generalize_phrase_type(
    const std::string& raw_label, const GeneralizationTable& table) {
  return table.lookup(raw_label);
}

VerbType deduce_verb_type(const std::vector<FERealization>& fes, Voice voice) {
  bool has_vp = false, has_s = false, has_dobj = false, has_iobj = false;
  for (const auto& fe : fes) {
    if (fe.cat == PhraseCat::VP) has_vp = true;
    if (fe.cat == PhraseCat::S) has_s = true;
    if (fe.role == SynRole::DObj) has_dobj = true;
    if (fe.role == SynRole::IObj) has_iobj = true;
  }
  if (has_vp && has_iobj) return VerbType::V2V;
  if (has_vp) return VerbType::VV;
  if (has_s && (has_dobj || has_iobj)) return VerbType::V2S;
  if (has_s) return VerbType::VS;
  if (has_dobj && has_iobj) return VerbType::V3;
  if (has_iobj) return VerbType::V3;
  if (has_dobj) return VerbType::V2;
  if (voice == Voice::Pass) return VerbType::V2;
  return VerbType::V;
}

const std::string& skip_reason_name(SkipReason reason) {
  return kSkipNames[static_cast<size_t>(reason)];
}

std::optional<SkipReason> skip_reason_from_name(const std::string& name) {
  for (size_t i = 0; i < kSkipNames.size(); ++i) {
    if (kSkipNames[i] == name) return static_cast<SkipReason>(i);
  }
  return std::nullopt;
}

ExtractOutcome extract_pattern(const AnnotatedSentence& sentence,
                               const FrameInventory& frames,
                               const GeneralizationTable& table) {
  auto skip = [&](SkipReason reason) {
    return ExtractOutcome(SkipReport{sentence.id, reason});
  };
  if (sentence.target_pos != "v") return skip(SkipReason::NonVerbTarget);

  auto frame_it = frames.find(sentence.frame_name);
  const FrameDef* frame =
      frame_it == frames.end() ? nullptr : &frame_it->second;

  ValencePattern pattern;
  pattern.frame = sentence.frame_name;
  pattern.voice = sentence.voice;
  pattern.freq = 1;
  for (const auto& span : sentence.spans) {
    if (frame != nullptr && !frame->is_core(span.fe_name)) continue;
    auto cat = generalize_phrase_type(span.raw_phrase_type, table);
    if (!cat) return skip(SkipReason::UnmappablePhraseType);
    FERealization fe;
    fe.fe_name = span.fe_name;
    fe.cat = *cat;
    fe.role = span.role;
    if (fe.role != SynRole::None && fe.cat != PhraseCat::NP) {
      return skip(SkipReason::RoleConflict);
    }
    pattern.fes.push_back(std::move(fe));
  }
  if (pattern.fes.empty()) return skip(SkipReason::NonCoreOnly);

  std::map<SynRole, int> role_counts;
  for (const auto& fe : pattern.fes) {
    if (fe.role != SynRole::None && ++role_counts[fe.role] > 1) {
      return skip(SkipReason::RoleConflict);
    }
  }
  pattern.verb_type = deduce_verb_type(pattern.fes, pattern.voice);
  canonicalize(&pattern);
  return pattern;
}

ExtractionResult extract_all(const Corpus& corpus,
                             const GeneralizationTable& table) {
  ExtractionResult result;
  result.patterns.fn_id = corpus.fn_id;
  result.sentence_count = corpus.sentences.size();
  for (const auto& sentence : corpus.sentences) {
    auto outcome = extract_pattern(sentence, corpus.frames, table);
    if (auto* pattern = std::get_if<ValencePattern>(&outcome)) {
      result.patterns.add(*pattern);
    } else {
      result.skips.push_back(std::get<SkipReport>(outcome));
    }
  }
  return result;
}

std::string serialize_skips(const std::vector<SkipReport>& skips) {
  std::string out;
  for (const auto& skip : skips) {
    nlohmann::json record = {{"id", skip.sentence_id},
                             {"reason", skip_reason_name(skip.reason)}};
    out += record.dump();
    out += '\n';
  }
  return out;
}

std::vector<std::string> validate_sentence(const AnnotatedSentence& sentence,
                                           const FrameInventory& frames,
                                           const GeneralizationTable& table) {
  auto violations = validate_sentence(sentence, frames);
  for (const auto& span : sentence.spans) {
    if (!IsNpRole(span.role)) continue;
    auto cat = generalize_phrase_type(span.raw_phrase_type, table);
    if (cat && *cat != PhraseCat::NP) {
      violations.push_back("role on non-NP: " + span.fe_name);
    }
  }
  return violations;
}

}  // namespace fngen
