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

#include "fngen/patterns.hpp"

#include <algorithm>

#include "fngen/jsonl.hpp"

namespace fngen {

bool FERealization::operator==(const FERealization& other) const {
  return fe_name == other.fe_name && cat == other.cat && role == other.role;
}

bool FERealization::operator<(const FERealization& other) const {
  if (fe_name != other.fe_name) return fe_name < other.fe_name;
  if (cat != other.cat) return cat_less(cat, other.cat);
  return role_less(role, other.role);
}

bool ValencePattern::same_pattern(const ValencePattern& other) const {
  return frame == other.frame && verb_type == other.verb_type &&
         voice == other.voice && fes == other.fes;
}

bool ValencePattern::operator<(const ValencePattern& other) const {
  if (frame != other.frame) return frame < other.frame;
  if (verb_type != other.verb_type) {
    return verb_type_name(verb_type) < verb_type_name(other.verb_type);
  }
  if (voice != other.voice) {
    return voice_wire(voice) < voice_wire(other.voice);
  }
  return fes < other.fes;
}

void canonicalize(ValencePattern* pattern) {
  std::sort(pattern->fes.begin(), pattern->fes.end());
}

ValencePattern canonical(ValencePattern pattern) {
  canonicalize(&pattern);
  return pattern;
}

std::vector<std::string> pattern_violations(const ValencePattern& pattern) {
  std::vector<std::string> violations;
  if (!std::is_sorted(pattern.fes.begin(), pattern.fes.end())) {
    violations.push_back("fes not in canonical order");
  }
  // freq 0 marks a derived (not observed) pattern and is allowed.
  if (pattern.freq < 0) {
    violations.push_back("freq must be non-negative");
  }
  std::map<SynRole, int> role_counts;
  for (const auto& fe : pattern.fes) {
    bool np_role = fe.role == SynRole::Subj || fe.role == SynRole::DObj ||
                   fe.role == SynRole::IObj || fe.role == SynRole::Agent;
    if (np_role && fe.cat != PhraseCat::NP) {
      violations.push_back("role " + role_wire(fe.role) + " on non-NP " +
                           fe.fe_name);
    }
    if (!np_role && fe.role != SynRole::None) {
      violations.push_back("unexpected role on " + fe.fe_name);
    }
    if (fe.role == SynRole::Agent && pattern.voice != Voice::Pass) {
      violations.push_back("agent role outside passive: " + fe.fe_name);
    }
    if (fe.role != SynRole::None) ++role_counts[fe.role];
  }
  for (const auto& [role, count] : role_counts) {
    if (count > 1) {
      violations.push_back("duplicate role: " + role_wire(role));
    }
  }
  return violations;
}

void PatternSet::add(const ValencePattern& pattern) {
  ValencePattern key = pattern;
  long freq = key.freq;
  key.freq = 1;
  auto [it, inserted] = patterns.emplace(key, freq);
  if (!inserted) it->second += freq;
}

std::vector<ValencePattern> PatternSet::sorted() const {
  std::vector<ValencePattern> out;
  out.reserve(patterns.size());
  for (const auto& [pattern, freq] : patterns) {
    out.push_back(pattern);
    out.back().freq = freq;
  }
  return out;
}

std::string serialize_patterns(const PatternSet& set) {
  std::string out;
  for (const auto& pattern : set.sorted()) {
    nlohmann::json fes = nlohmann::json::array();
    for (const auto& fe : pattern.fes) {
      fes.push_back({{"fe", fe.fe_name},
                     {"cat", cat_name(fe.cat)},
                     {"role", role_wire(fe.role)}});
    }
    nlohmann::json record = {{"frame", pattern.frame},
                             {"vtype", verb_type_name(pattern.verb_type)},
                             {"voice", voice_wire(pattern.voice)},
                             {"fes", fes},
                             {"freq", pattern.freq}};
    out += record.dump();
    out += '\n';
  }
  return out;
}

PatternSet parse_patterns(const std::string& text,
                          const std::string& source_name,
                          const std::string& fn_id) {
  PatternSet set;
  set.fn_id = fn_id;
  for (const auto& record : parse_jsonl(text, source_name)) {
    require_fields(record, {"frame", "vtype", "voice", "fes", "freq"},
                   {"frame", "vtype", "voice", "fes", "freq"});
    ValencePattern pattern;
    pattern.frame = get_string(record, "frame");
    auto vtype = verb_type_from_name(get_string(record, "vtype"));
    if (!vtype) {
      throw ParseError(record.source + ": unknown verb type \"" +
                       get_string(record, "vtype") + "\"");
    }
    pattern.verb_type = *vtype;
    auto voice = voice_from_wire(get_string(record, "voice"));
    if (!voice) {
      throw ParseError(record.source + ": voice must be \"act\" or \"pass\"");
    }
    pattern.voice = *voice;
    pattern.freq = get_int(record, "freq");
    const auto& fes = record.value.at("fes");
    if (!fes.is_array()) {
      throw ParseError(record.source + ": fes must be an array");
    }
    for (const auto& fe_json : fes) {
      JsonlRecord fe_record{fe_json, record.source, record.line};
      require_fields(fe_record, {"fe", "cat", "role"}, {"fe", "cat", "role"});
      FERealization fe;
      fe.fe_name = get_string(fe_record, "fe");
      auto cat = cat_from_name(get_string(fe_record, "cat"));
      if (!cat) {
        throw ParseError(record.source + ": unknown category \"" +
                         get_string(fe_record, "cat") + "\"");
      }
      fe.cat = *cat;
      auto role = role_from_wire(get_string(fe_record, "role"));
      if (!role) {
        throw ParseError(record.source + ": unknown role \"" +
                         get_string(fe_record, "role") + "\"");
      }
      fe.role = *role;
      pattern.fes.push_back(std::move(fe));
    }
    canonicalize(&pattern);
    auto violations = pattern_violations(pattern);
    if (!violations.empty()) {
      throw ValidationError(record.source + ": " + violations.front());
    }
    set.add(pattern);
  }
  return set;
}

PatternSet load_patterns(const std::filesystem::path& path) {
  return parse_patterns(read_text_file(path), path.filename().string(),
                        path.stem().string());
}

void save_patterns(const PatternSet& set, const std::filesystem::path& path) {
  write_text_file(path, serialize_patterns(set));
}

std::string pattern_to_string(const ValencePattern& pattern) {
  std::string out = pattern.frame + "/" + verb_type_name(pattern.verb_type) +
                    "_" + voice_label(pattern.voice);
  for (const auto& fe : pattern.fes) {
    out += " " + fe.fe_name + "/" + cat_name(fe.cat);
    if (fe.role != SynRole::None) out += "_" + role_label(fe.role);
  }
  return out;
}

}  // namespace fngen
