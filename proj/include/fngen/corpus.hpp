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

#ifndef FNGEN_CORPUS_H_
#define FNGEN_CORPUS_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fngen/types.hpp"

namespace fngen {

// A semantic frame with its element inventory split into core and
// peripheral (non-core) elements.
struct FrameDef {
  std::string name;
  std::set<std::string> core;
  std::set<std::string> noncore;

  bool is_core(const std::string& fe) const { return core.count(fe) > 0; }
  bool is_noncore(const std::string& fe) const { return noncore.count(fe) > 0; }
  bool knows(const std::string& fe) const {
    return is_core(fe) || is_noncore(fe);
  }
};

using FrameInventory = std::map<std::string, FrameDef>;

// One annotated frame element span. Only the grammatically relevant
// annotation layers are kept: the element name, the raw phrase type label
// from the treebank, and the grammatical role of the span.
struct FESpan {
  std::string fe_name;
  std::string raw_phrase_type;
  SynRole role = SynRole::None;
};

// A frame-annotated example sentence.
struct AnnotatedSentence {
  std::string id;
  Language language = Language::En;
  std::string frame_name;
  std::string target_lemma;
  std::string target_pos;  // "v" for verbal targets
  Voice voice = Voice::Act;
  std::string text;
  std::vector<FESpan> spans;
};

// A loaded example corpus together with the frame inventory that its
// annotations refer to.
struct Corpus {
  std::string fn_id;  // e.g. "bfn", "swefn"
  Language language = Language::En;
  FrameInventory frames;
  std::vector<AnnotatedSentence> sentences;
};

FrameInventory load_frames(const std::filesystem::path& path);

// Loads a corpus file and attaches the given frame inventory. Every sentence
// must carry the corpus language, refer to a known frame, and use only frame
// elements that the frame defines; violations raise ValidationError.
// fn_id defaults to the file stem.
Corpus load_corpus(const std::filesystem::path& path,
                   const FrameInventory& frames);

Corpus parse_corpus(const std::string& text, const std::string& source_name,
                    const FrameInventory& frames, const std::string& fn_id);

// Writes the sentences back out in the input format, one record per line.
// parse_corpus(serialize_corpus(c), ...) reproduces c's sentences exactly.
std::string serialize_corpus(const Corpus& corpus);

// Returns human-readable violations for one sentence, empty when clean.
// Checks frame existence, frame element membership and duplicate role use.
std::vector<std::string> validate_sentence(const AnnotatedSentence& sentence,
                                           const FrameInventory& frames);

}  // namespace fngen

#endif  // FNGEN_CORPUS_H_
