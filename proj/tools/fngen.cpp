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

#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fngen/applications.hpp"
#include "fngen/jsonl.hpp"
#include "fngen/pipeline.hpp"

namespace {

using namespace fngen;

Language ParseLang(const std::string& code) {
  auto lang = lang_from_code(code);
  if (!lang) throw ValidationError("unknown language: " + code);
  return *lang;
}

Tense ParseTense(const std::string& name) {
  auto tense = tense_from_name(name);
  if (!tense) throw ValidationError("unknown tense: " + name);
  return *tense;
}

std::string Fraction(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

size_t FrameCount(const PatternSet& set) {
  std::set<std::string> frames;
  for (const auto& [pattern, freq] : set.patterns) {
    (void)freq;
    frames.insert(pattern.frame);
  }
  return frames.size();
}

void RunExtract(const std::string& corpus, const std::string& frames,
                const std::string& ptypes, long min_freq,
                const std::string& out) {
  FrameInventory inventory = load_frames(frames);
  GeneralizationTable table = load_table_or_default(ptypes);
  ExtractionResult result =
      extract_corpus_file(corpus, inventory, table, min_freq);
  save_patterns(result.patterns, out);
  std::filesystem::path skips_path(out);
  skips_path.replace_extension(".skips.jsonl");
  write_text_file(skips_path, serialize_skips(result.skips));
  std::cout << result.patterns.patterns.size() << " patterns from "
            << result.sentence_count << " sentences, " << result.skips.size()
            << " skipped (rate " << Fraction(result.skip_rate()) << ")\n";
}

void RunShare(const std::string& first, const std::string& second,
              bool derive, const std::string& out) {
  PatternSet shared = shared_set(load_patterns(first), load_patterns(second));
  if (derive) shared = derive_passive(shared);
  save_patterns(shared, out);
  std::cout << shared.patterns.size() << " patterns covering "
            << FrameCount(shared) << " frames\n";
}

void RunGenerate(const std::string& shared_path,
                 const std::vector<std::string>& lexicon_paths,
                 const std::string& out_dir) {
  PatternSet shared = load_patterns(shared_path);
  std::vector<std::filesystem::path> paths(lexicon_paths.begin(),
                                           lexicon_paths.end());
  GrammarBundle bundle =
      make_bundle(shared, "FrameGram", load_lexicons(paths));
  for (const auto& path : write_grammar_artifacts(bundle, out_dir)) {
    std::cout << path.string() << "\n";
  }
}

void RunStats(const std::string& patterns_path, const std::string& out) {
  std::vector<SkeletonCount> rows = stats(load_patterns(patterns_path));
  std::cout << stats_to_text(rows);
  if (!out.empty()) write_text_file(out, stats_to_jsonl(rows));
}

void RunCoverage(const std::string& shared_path, const std::string& corpus,
                 const std::string& frames, const std::string& ptypes) {
  FrameInventory inventory = load_frames(frames);
  GeneralizationTable table = load_table_or_default(ptypes);
  CoverageReport report = coverage(load_patterns(shared_path),
                                   load_corpus(corpus, inventory), table);
  if (report.empty_denominator) {
    std::cerr << "warning: no corpus sentence belongs to a shared frame\n";
  }
  std::cout << "covered " << report.covered << " of " << report.total
            << " sentences (" << Fraction(report.fraction()) << ", "
            << report.skipped << " skipped)\n";
}

void RunRealize(const std::string& bundle_path, const std::string& tree_path,
                const std::string& lang, const std::string& tense) {
  RealizerEngine engine(load_bundle_file(bundle_path));
  nlohmann::json root = nlohmann::json::parse(read_text_file(tree_path));
  RealizeResult result =
      engine.realize(root, ParseLang(lang), ParseTense(tense));
  if (result.empty_subject) {
    std::cerr << "note: clause rendered without a subject\n";
  }
  std::cout << result.text << "\n";
}

void RunDemo(const std::vector<std::string>& corpora,
             const std::string& frames, const std::string& ptypes,
             const std::vector<std::string>& lexicon_paths,
             const std::string& out_dir) {
  PipelineConfig config;
  config.corpus_paths.assign(corpora.begin(), corpora.end());
  config.frames_path = frames;
  config.table_path = ptypes;
  config.lexicon_paths.assign(lexicon_paths.begin(), lexicon_paths.end());
  config.out_dir = out_dir;

  GrammarBundle bundle = run_pipeline(config);
  write_grammar_artifacts(bundle, config.out_dir);
  RealizerEngine engine(std::move(bundle));

  NPhrase we{"we", Number::Pl, 1, ""};
  NPhrase i{"I", Number::Sg, 1, ""};
  NPhrase vi{"vi", Number::Pl, 1, ""};
  NPhrase jag{"jag", Number::Sg, 1, ""};

  auto say = [&](const PhrasebookAction& action, Language lang) {
    std::cout << "[" << lang_code(lang) << "] "
              << realize_phrasebook(engine, action, lang).text << "\n";
  };
  say(a_live(we, AdvPhrase{"in Sweden"}), Language::En);
  say(a_want(i, NPhrase{"a pizza", Number::Sg, 3, ""}), Language::En);
  say(a_want_go(i, AdvPhrase{"to a museum"}), Language::En);
  say(a_live(vi, AdvPhrase{"i Sverige"}), Language::Sv);
  say(a_want(jag, NPhrase{"en pizza", Number::Sg, 3, ""}), Language::Sv);
  say(a_want_go(jag, AdvPhrase{"till ett museum"}), Language::Sv);

  PaintingRecord record = demo_painting();
  std::cout << "[en] " << realize_painting(engine, record, Language::En).text
            << "\n";
  std::cout << "[sv] " << realize_painting(engine, record, Language::Sv).text
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valence pattern extraction and grammar generation"};
  app.require_subcommand(1);

  std::string corpus, frames, ptypes, out, lang = "en", tense = "pres";
  std::string input_a, input_b;
  std::vector<std::string> corpora, lexicons;
  long min_freq = 1;
  bool derive = false;

  auto* extract =
      app.add_subcommand("extract", "extract valence patterns from a corpus");
  extract->add_option("--corpus", corpus, "annotated corpus, JSON lines")
      ->required();
  extract->add_option("--frames", frames, "frame inventory file")->required();
  extract->add_option("--ptypes", ptypes, "phrase type generalization table");
  extract->add_option("--min-freq", min_freq,
                      "drop patterns observed fewer times");
  extract->add_option("--out", out, "pattern file to write")->required();
  extract->callback(
      [&] { RunExtract(corpus, frames, ptypes, min_freq, out); });

  auto* share =
      app.add_subcommand("share", "intersect two pattern sets by subsumption");
  share->add_option("first", input_a, "first pattern file")->required();
  share->add_option("second", input_b, "second pattern file")->required();
  share->add_flag("--derive-passive", derive,
                  "add passive patterns derived from transitive actives");
  share->add_option("--out", out, "shared pattern file to write")->required();
  share->callback([&] { RunShare(input_a, input_b, derive, out); });

  auto* generate =
      app.add_subcommand("generate", "generate grammar sources from patterns");
  generate->add_option("shared", input_a, "shared pattern file")->required();
  generate->add_option("lexicons", lexicons, "verb lexicon files")
      ->required()
      ->expected(-1);
  generate->add_option("--out", out, "output directory")->required();
  generate->callback([&] { RunGenerate(input_a, lexicons, out); });

  auto* stats_cmd =
      app.add_subcommand("stats", "syntactic shape counts for a pattern set");
  stats_cmd->add_option("patterns", input_a, "pattern file")->required();
  stats_cmd->add_option("--out", out, "also write machine-readable rows");
  stats_cmd->callback([&] { RunStats(input_a, out); });

  auto* coverage_cmd = app.add_subcommand(
      "coverage", "fraction of corpus sentences the shared patterns cover");
  coverage_cmd->add_option("shared", input_a, "shared pattern file")
      ->required();
  coverage_cmd->add_option("--corpus", corpus, "annotated corpus")->required();
  coverage_cmd->add_option("--frames", frames, "frame inventory file")
      ->required();
  coverage_cmd->add_option("--ptypes", ptypes,
                           "phrase type generalization table");
  coverage_cmd->callback([&] { RunCoverage(input_a, corpus, frames, ptypes); });

  auto* realize =
      app.add_subcommand("realize", "render a frame tree with a grammar");
  realize->add_option("bundle", input_a, "grammar bundle, JSON lines")
      ->required();
  realize->add_option("tree", input_b, "frame tree file")->required();
  realize->add_option("--lang", lang, "language, en or sv");
  realize->add_option("--tense", tense, "tense, pres or past");
  realize->callback([&] { RunRealize(input_a, input_b, lang, tense); });

  auto* demo = app.add_subcommand(
      "demo", "run the full pipeline and render the showcase texts");
  demo->add_option("lexicons", lexicons, "verb lexicon files")
      ->required()
      ->expected(-1);
  demo->add_option("--corpus", corpora, "annotated corpora (two or more)")
      ->required();
  demo->add_option("--frames", frames, "frame inventory file")->required();
  demo->add_option("--ptypes", ptypes, "phrase type generalization table");
  demo->add_option("--out", out, "output directory for grammar sources")
      ->required();
  demo->callback([&] { RunDemo(corpora, frames, ptypes, lexicons, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const fngen::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
