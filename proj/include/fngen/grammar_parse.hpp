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

#ifndef FNGEN_GRAMMAR_PARSE_H_
#define FNGEN_GRAMMAR_PARSE_H_

#include <string>
#include <variant>
#include <vector>

#include "fngen/grammar.hpp"

namespace fngen {

// Function signature as written in an abstract syntax file: argument
// category names in order, then the verb type, returning Clause. Lexicon
// signatures are represented separately (LexSig).
struct AbstractSig {
  std::string name;
  std::vector<std::string> arg_cats;
  VerbType verb_type = VerbType::V;

  bool operator==(const AbstractSig& other) const {
    return name == other.name && arg_cats == other.arg_cats &&
           verb_type == other.verb_type;
  }
};

struct ParsedAbstract {
  std::string name;
  std::vector<std::string> cats;
  std::vector<AbstractSig> funs;
  std::vector<LexSig> lex_sigs;

  bool operator==(const ParsedAbstract& other) const = default;
};

struct ParsedConcrete {
  std::string name;  // e.g. SharedEng
  std::string of;    // e.g. Shared
  Language language = Language::En;
  std::vector<LinDef> lins;

  bool operator==(const ParsedConcrete& other) const = default;
};

struct ParsedLexicon {
  std::string name;
  Language language = Language::En;
  std::vector<LexiconEntry> entries;

  bool operator==(const ParsedLexicon& other) const = default;
};

using ParsedGrammarFile =
    std::variant<ParsedAbstract, ParsedConcrete, ParsedLexicon>;

// Parses one generated source file; the header keyword (abstract, concrete,
// lexicon) selects the result alternative. Raises ParseError with line and
// column on malformed input.
ParsedGrammarFile parse_grammar(const std::string& text,
                                const std::string& source_name);

// Parses an applicative expression, e.g. "mkVP v2 (fromMaybe NP x)".
// parse_expr(print_expr(e)) == e for every expression.
Expr parse_expr(const std::string& text);

}  // namespace fngen

#endif  // FNGEN_GRAMMAR_PARSE_H_
