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

#ifndef FNGEN_CODEGEN_H_
#define FNGEN_CODEGEN_H_

#include <map>
#include <string>
#include <vector>

#include "fngen/grammar.hpp"
#include "fngen/lexicon.hpp"
#include "fngen/patterns.hpp"

namespace fngen {

// One frame function per pattern, processed in canonical order. The name is
// frame_VerbType, with a voice suffix only when both voices occur for that
// frame and verb type, and a numeric discriminator only when several
// patterns still share the name. Arguments are sorted alphabetically by FE
// category name; the verb parameter is last.
std::vector<FrameFunctionDecl> name_functions(const PatternSet& shared);

// Distinct (FE name, category) pairs across all functions, sorted by name.
std::vector<FECategoryDecl> collect_categories(
    const std::vector<FrameFunctionDecl>& funs);

// Abstract signatures for all lexicon entries of all languages, sorted.
std::vector<LexSig> lexicon_signatures(
    const std::map<Language, std::vector<LexiconEntry>>& lexicons);

// The template engine: builds the np/vp linearization for a declaration.
// The np part unwraps the subject FE (the promoted object in passives) with
// an optional-fallback; the vp part applies the verb to its object and
// complement slots, renders a passive agent as a by-phrase adverbial, and
// appends Adv FEs in argument order. Total over all verb type, voice and FE
// multiset combinations.
LinDef make_lin(const FrameFunctionDecl& decl);

// Assembles declarations, categories, per-language linearizations and
// lexicons into one bundle. The same templates serve every language;
// differences live in the lexicons and the realizer.
GrammarBundle make_bundle(const PatternSet& shared, const std::string& name,
                          std::map<Language, std::vector<LexiconEntry>> lexicons);

std::string gen_abstract(const GrammarBundle& bundle);
std::string gen_concrete(const GrammarBundle& bundle, Language lang);
std::string gen_lexicon(const GrammarBundle& bundle, Language lang);

}  // namespace fngen

#endif  // FNGEN_CODEGEN_H_
