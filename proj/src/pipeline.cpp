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

#include "fngen/pipeline.hpp"

#include <variant>

#include "fngen/grammar_parse.hpp"
#include "fngen/jsonl.hpp"

namespace fngen {

GeneralizationTable load_table_or_default(const std::filesystem::path& path) {
  if (path.empty()) return GeneralizationTable::default_table();
  return GeneralizationTable::load(path);
}

ExtractionResult extract_corpus_file(const std::filesystem::path& corpus_path,
                                     const FrameInventory& frames,
                                     const GeneralizationTable& table,
                                     long min_freq) {
  Corpus corpus = load_corpus(corpus_path, frames);
  ExtractionResult result = extract_all(corpus, table);
  if (min_freq > 1) {
    result.patterns = filter_min_freq(result.patterns, min_freq);
  }
  return result;
}

std::map<Language, std::vector<LexiconEntry>> load_lexicons(
    const std::vector<std::filesystem::path>& paths) {
  std::map<Language, std::vector<LexiconEntry>> out;
  for (const auto& path : paths) {
    for (auto& entry : load_lexicon(path)) {
      out[entry.language].push_back(std::move(entry));
    }
  }
  return out;
}

namespace {

[[noreturn]] void Mismatch(const std::string& what) {
  throw InternalError("generated sources do not round-trip: " + what);
}

void CheckAbstract(const GrammarBundle& bundle) {
  ParsedGrammarFile parsed =
      parse_grammar(gen_abstract(bundle), bundle.name + " (abstract)");
  const auto* abs = std::get_if<ParsedAbstract>(&parsed);
  if (abs == nullptr) Mismatch("abstract parsed as another kind");
  if (abs->name != bundle.name) Mismatch("abstract name");
  std::vector<std::string> cat_names;
  for (const auto& cat : bundle.cats) cat_names.push_back(cat.name());
  if (abs->cats != cat_names) Mismatch("category list");
  if (abs->funs.size() != bundle.funs.size()) Mismatch("function count");
  for (size_t i = 0; i < abs->funs.size(); ++i) {
    const AbstractSig& sig = abs->funs[i];
    const FrameFunctionDecl& decl = bundle.funs[i];
    std::vector<std::string> arg_cats;
    for (const auto& arg : decl.args) arg_cats.push_back(arg.category_name());
    if (sig.name != decl.name || sig.arg_cats != arg_cats ||
        sig.verb_type != decl.verb_type) {
      Mismatch("function " + decl.name);
    }
  }
  if (abs->lex_sigs != bundle.lex_sigs) Mismatch("lexical signatures");
}

void CheckConcrete(const GrammarBundle& bundle, Language lang) {
  ParsedGrammarFile parsed = parse_grammar(
      gen_concrete(bundle, lang), bundle.name + lang_suffix(lang));
  const auto* conc = std::get_if<ParsedConcrete>(&parsed);
  if (conc == nullptr) Mismatch("concrete parsed as another kind");
  if (conc->name != bundle.name + lang_suffix(lang) ||
      conc->of != bundle.name || conc->language != lang) {
    Mismatch("concrete header for " + std::string(lang_code(lang)));
  }
  auto it = bundle.concretes.find(lang);
  if (it == bundle.concretes.end() || conc->lins != it->second) {
    Mismatch("linearizations for " + std::string(lang_code(lang)));
  }
}

void CheckLexicon(const GrammarBundle& bundle, Language lang) {
  ParsedGrammarFile parsed = parse_grammar(
      gen_lexicon(bundle, lang), std::string("Lexicon") + lang_suffix(lang));
  const auto* lex = std::get_if<ParsedLexicon>(&parsed);
  if (lex == nullptr) Mismatch("lexicon parsed as another kind");
  if (lex->language != lang) Mismatch("lexicon language");
  auto it = bundle.lexicons.find(lang);
  if (it == bundle.lexicons.end() || lex->entries != it->second) {
    Mismatch("lexicon entries for " + std::string(lang_code(lang)));
  }
}

}  // namespace

void check_roundtrip(const GrammarBundle& bundle) {
  CheckAbstract(bundle);
  for (const auto& [lang, lins] : bundle.concretes) {
    (void)lins;
    CheckConcrete(bundle, lang);
  }
  for (const auto& [lang, entries] : bundle.lexicons) {
    (void)entries;
    CheckLexicon(bundle, lang);
  }
  GrammarBundle reloaded = read_bundle(write_bundle(bundle), "bundle");
  if (!(reloaded == bundle)) Mismatch("machine bundle reload");
}

std::vector<std::filesystem::path> write_grammar_artifacts(
    const GrammarBundle& bundle, const std::filesystem::path& dir) {
  check_roundtrip(bundle);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;

  auto emit = [&](const std::filesystem::path& name, const std::string& text) {
    std::filesystem::path path = dir / name;
    write_text_file(path, text);
    written.push_back(path);
  };

  emit(bundle.name + ".txt", gen_abstract(bundle));
  for (const auto& [lang, lins] : bundle.concretes) {
    (void)lins;
    emit(bundle.name + lang_suffix(lang) + ".txt", gen_concrete(bundle, lang));
  }
  for (const auto& [lang, entries] : bundle.lexicons) {
    (void)entries;
    emit(std::string("Lexicon") + lang_suffix(lang) + ".txt",
         gen_lexicon(bundle, lang));
  }
  emit("bundle.jsonl", write_bundle(bundle));
  return written;
}

GrammarBundle load_bundle_file(const std::filesystem::path& path) {
  return read_bundle(read_text_file(path), path.string());
}

GrammarBundle run_pipeline(const PipelineConfig& config) {
  if (config.corpus_paths.size() < 2) {
    throw ValidationError("sharing needs at least two corpora");
  }
  FrameInventory frames = load_frames(config.frames_path);
  GeneralizationTable table = load_table_or_default(config.table_path);

  std::vector<PatternSet> sets;
  for (const auto& path : config.corpus_paths) {
    sets.push_back(
        extract_corpus_file(path, frames, table, config.min_freq).patterns);
  }
  PatternSet shared = shared_set(sets[0], sets[1]);
  for (size_t i = 2; i < sets.size(); ++i) {
    shared = shared_set(shared, sets[i]);
  }
  if (config.derive_passive) shared = derive_passive(shared);

  auto lexicons = load_lexicons(config.lexicon_paths);
  return make_bundle(shared, config.grammar_name, std::move(lexicons));
}

}  // namespace fngen
