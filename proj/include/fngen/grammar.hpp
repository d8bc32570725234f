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

#ifndef FNGEN_GRAMMAR_H_
#define FNGEN_GRAMMAR_H_

#include <map>
#include <string>
#include <vector>

#include "fngen/lexicon.hpp"
#include "fngen/types.hpp"

namespace fngen {

// Applicative expression used in linearization bodies, e.g.
// mkVP (passiveVP v2) (mkAdv by8agent_Prep (fromMaybe NP experiencer)).
// A leaf is a bare identifier (constructor, parameter or category name).
struct Expr {
  std::string head;
  std::vector<Expr> args;

  bool operator==(const Expr& other) const {
    return head == other.head && args == other.args;
  }
};

Expr atom(const std::string& head);
Expr app(const std::string& head, std::vector<Expr> args);

// Renders with minimal parentheses: arguments that are themselves
// applications get wrapped, leaves do not.
std::string print_expr(const Expr& expr);

// One frame element argument of a frame function.
struct FEArg {
  std::string fe_name;
  PhraseCat cat = PhraseCat::NP;
  SynRole role = SynRole::None;
  std::string param;  // lowercased FE name used in linearizations

  std::string category_name() const { return fe_name + "_" + cat_name(cat); }

  bool operator==(const FEArg& other) const {
    return fe_name == other.fe_name && cat == other.cat &&
           role == other.role && param == other.param;
  }
};

// A generated frame function. Arguments are sorted alphabetically by FE
// category name; the verb parameter comes last and is mandatory.
struct FrameFunctionDecl {
  std::string name;
  std::string frame;
  VerbType verb_type = VerbType::V;
  Voice voice = Voice::Act;
  bool voice_suffix = false;  // name carries _Act/_Pass
  int discriminator = 0;      // 0 = no numeric suffix
  std::vector<FEArg> args;
  std::string verb_param;

  bool operator==(const FrameFunctionDecl& other) const {
    return name == other.name && frame == other.frame &&
           verb_type == other.verb_type && voice == other.voice &&
           voice_suffix == other.voice_suffix &&
           discriminator == other.discriminator && args == other.args &&
           verb_param == other.verb_param;
  }
};

// A semantic category declaration, one per distinct (FE name, category).
struct FECategoryDecl {
  std::string fe_name;
  PhraseCat cat = PhraseCat::NP;

  std::string name() const { return fe_name + "_" + cat_name(cat); }

  bool operator==(const FECategoryDecl& other) const {
    return fe_name == other.fe_name && cat == other.cat;
  }
};

// Abstract-syntax signature of a lexicon entry, e.g. want_VV_Desiring : VV.
struct LexSig {
  std::string name;
  VerbType verb_type = VerbType::V;

  bool operator==(const LexSig& other) const {
    return name == other.name && verb_type == other.verb_type;
  }
};

// A concrete linearization: function name, parameter list (FE params in
// declaration order, then the verb parameter) and the two record fields.
struct LinDef {
  std::string fun;
  std::vector<std::string> params;
  Expr np;
  Expr vp;

  bool operator==(const LinDef& other) const {
    return fun == other.fun && params == other.params && np == other.np &&
           vp == other.vp;
  }
};

// Everything generated from one shared pattern set: the abstract syntax
// (categories, frame functions, lexicon signatures) plus per-language
// linearizations and lexicons.
struct GrammarBundle {
  std::string name;
  std::vector<FECategoryDecl> cats;
  std::vector<FrameFunctionDecl> funs;
  std::vector<LexSig> lex_sigs;
  std::map<Language, std::vector<LinDef>> concretes;
  std::map<Language, std::vector<LexiconEntry>> lexicons;

  const FrameFunctionDecl* find_fun(const std::string& name) const;

  bool operator==(const GrammarBundle& other) const;
};

bool operator==(const LexiconEntry& a, const LexiconEntry& b);

// Machine-readable bundle serialization, one record per line.
std::string write_bundle(const GrammarBundle& bundle);
GrammarBundle read_bundle(const std::string& text,
                          const std::string& source_name);

}  // namespace fngen

#endif  // FNGEN_GRAMMAR_H_
