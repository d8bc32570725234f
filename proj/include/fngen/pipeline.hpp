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

#ifndef FNGEN_PIPELINE_H_
#define FNGEN_PIPELINE_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fngen/algebra.hpp"
#include "fngen/codegen.hpp"
#include "fngen/corpus.hpp"
#include "fngen/extraction.hpp"
#include "fngen/realizer.hpp"

namespace fngen {

// Everything a full extract-share-generate run needs.
struct PipelineConfig {
  std::vector<std::filesystem::path> corpus_paths;
  std::filesystem::path frames_path;
  std::filesystem::path table_path;  // empty: built-in generalizations
  std::vector<std::filesystem::path> lexicon_paths;
  long min_freq = 1;
  bool derive_passive = false;
  std::filesystem::path out_dir;
  std::string grammar_name = "FrameGram";
};

GeneralizationTable load_table_or_default(const std::filesystem::path& path);

// Loads and extracts one corpus; min_freq > 1 drops rare patterns.
ExtractionResult extract_corpus_file(const std::filesystem::path& corpus_path,
                                     const FrameInventory& frames,
                                     const GeneralizationTable& table,
                                     long min_freq);

// Loads lexicon files and groups the entries per language.
std::map<Language, std::vector<LexiconEntry>> load_lexicons(
    const std::vector<std::filesystem::path>& paths);

// Re-parses the generated sources and compares them against the bundle,
// field by field. Throws InternalError on any disagreement; generation
// and parsing must stay exact inverses.
void check_roundtrip(const GrammarBundle& bundle);

// Writes <name>.txt (abstract), <name><Suffix>.txt per concrete,
// Lexicon<Suffix>.txt per lexicon and bundle.jsonl into dir, running
// check_roundtrip plus a bundle reload comparison first. Returns the
// written paths in a fixed order.
std::vector<std::filesystem::path> write_grammar_artifacts(
    const GrammarBundle& bundle, const std::filesystem::path& dir);

GrammarBundle load_bundle_file(const std::filesystem::path& path);

// The full pipeline: extract each corpus, share the first two pattern sets,
// optionally derive passives, generate the grammar.
GrammarBundle run_pipeline(const PipelineConfig& config);

}  // namespace fngen

#endif  // FNGEN_PIPELINE_H_
