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

#include "fngen/corpus.hpp"

#include <algorithm>

#include "fngen/jsonl.hpp"

namespace fngen {

namespace {

AnnotatedSentence SentenceFromRecord(const JsonlRecord& record) {
  require_fields(record,
                 {"id", "lang", "frame", "target_lemma", "target_pos", "voice",
                  "text", "spans"},
                 {"id", "lang", "frame", "target_lemma", "target_pos", "voice",
                  "text", "spans"});
  AnnotatedSentence s;
  s.id = get_string(record, "id");
  auto lang = lang_from_code(get_string(record, "lang"));
  if (!lang) {
    throw ParseError(record.source + ": unknown language \"" +
                     get_string(record, "lang") + "\"");
  }
  s.language = *lang;
  s.frame_name = get_string(record, "frame");
  s.target_lemma = get_string(record, "target_lemma");
  s.target_pos = get_string(record, "target_pos");
  auto voice = voice_from_wire(get_string(record, "voice"));
  if (!voice) {
    throw ParseError(record.source + ": voice must be \"act\" or \"pass\"");
  }
  s.voice = *voice;
  s.text = get_string(record, "text");
  const auto& spans = record.value.at("spans");
  if (!spans.is_array()) {
    throw ParseError(record.source + ": spans must be an array");
  }
  for (const auto& span_json : spans) {
    JsonlRecord span{span_json, record.source, record.line};
    require_fields(span, {"fe", "ptype", "role"}, {"fe", "ptype", "role"});
    FESpan fe;
    fe.fe_name = get_string(span, "fe");
    fe.raw_phrase_type = get_string(span, "ptype");
    auto role = role_from_wire(get_string(span, "role"));
    if (!role) {
      throw ParseError(record.source + ": unknown role \"" +
                       get_string(span, "role") + "\"");
    }
    fe.role = *role;
    s.spans.push_back(std::move(fe));
  }
  return s;
}

}  // namespace

FrameInventory load_frames(const std::filesystem::path& path) {
  FrameInventory frames;
  for (const auto& record : read_jsonl(path)) {
    require_fields(record, {"name", "core", "noncore"},
                   {"name", "core", "noncore"});
    FrameDef def;
    def.name = get_string(record, "name");
    for (const char* key : {"core", "noncore"}) {
      const auto& arr = record.value.at(key);
      if (!arr.is_array()) {
        throw ParseError(record.source + ": " + key + " must be an array");
      }
      auto& target = std::string(key) == "core" ? def.core : def.noncore;
      for (const auto& fe : arr) {
        if (!fe.is_string()) {
          throw ParseError(record.source + ": frame elements must be strings");
        }
        target.insert(fe.get<std::string>());
      }
    }
    if (def.core.empty()) {
      throw ValidationError("frame " + def.name + " has no core elements");
    }
    for (const auto& fe : def.core) {
      if (def.noncore.count(fe)) {
        throw ValidationError("frame " + def.name + ": element " + fe +
                              " listed as both core and non-core");
      }
    }
    if (frames.count(def.name)) {
      throw ValidationError("duplicate frame definition: " + def.name);
    }
    frames.emplace(def.name, std::move(def));
  }
  return frames;
}

std::vector<std::string> validate_sentence(const AnnotatedSentence& sentence,
                                           const FrameInventory& frames) {
  std::vector<std::string> violations;
  auto frame_it = frames.find(sentence.frame_name);
  if (frame_it == frames.end()) {
    violations.push_back("unknown frame: " + sentence.frame_name);
    return violations;
  }
  const FrameDef& frame = frame_it->second;
  std::map<SynRole, int> role_counts;
  for (const auto& span : sentence.spans) {
    if (!frame.knows(span.fe_name)) {
      violations.push_back("unknown FE: " + span.fe_name);
    }
    if (span.role == SynRole::Agent && sentence.voice != Voice::Pass) {
      violations.push_back("agent role in active sentence: " + span.fe_name);
    }
    if (span.role != SynRole::None) ++role_counts[span.role];
  }
  for (const auto& [role, count] : role_counts) {
    if (count > 1) {
      violations.push_back("duplicate role: " + role_wire(role));
    }
  }
  return violations;
}

Corpus parse_corpus(const std::string& text, const std::string& source_name,
                    const FrameInventory& frames, const std::string& fn_id) {
  Corpus corpus;
  corpus.fn_id = fn_id;
  corpus.frames = frames;
  bool language_set = false;
  for (const auto& record : parse_jsonl(text, source_name)) {
    AnnotatedSentence s = SentenceFromRecord(record);
    auto violations = validate_sentence(s, frames);
    if (!violations.empty()) {
      throw ValidationError("sentence " + s.id + ": " + violations.front());
    }
    if (!language_set) {
      corpus.language = s.language;
      language_set = true;
    } else if (s.language != corpus.language) {
      throw ValidationError("sentence " + s.id +
                            ": language differs from corpus language");
    }
    corpus.sentences.push_back(std::move(s));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path,
                   const FrameInventory& frames) {
  return parse_corpus(read_text_file(path), path.filename().string(), frames,
                      path.stem().string());
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& s : corpus.sentences) {
    nlohmann::json spans = nlohmann::json::array();
    for (const auto& span : s.spans) {
      spans.push_back({{"fe", span.fe_name},
                       {"ptype", span.raw_phrase_type},
                       {"role", role_wire(span.role)}});
    }
    nlohmann::json record = {{"id", s.id},
                             {"lang", lang_code(s.language)},
                             {"frame", s.frame_name},
                             {"target_lemma", s.target_lemma},
                             {"target_pos", s.target_pos},
                             {"voice", voice_wire(s.voice)},
                             {"text", s.text},
                             {"spans", spans}};
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace fngen
