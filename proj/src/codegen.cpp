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

#include "fngen/codegen.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fngen {

namespace {

std::string Lowercase(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Lowercased verb type used as the verb parameter: v, v2, vv, ...
std::string VerbParam(VerbType vtype) {
  return Lowercase(verb_type_name(vtype));
}

std::vector<FEArg> MakeArgs(const ValencePattern& pattern) {
  std::vector<FEArg> args;
  for (const auto& fe : pattern.fes) {
    FEArg arg;
    arg.fe_name = fe.fe_name;
    arg.cat = fe.cat;
    arg.role = fe.role;
    arg.param = Lowercase(fe.fe_name);
    args.push_back(std::move(arg));
  }
  std::stable_sort(args.begin(), args.end(),
                   [](const FEArg& a, const FEArg& b) {
                     return a.category_name() < b.category_name();
                   });
  // Patterns may realize the same FE twice; disambiguate the parameters.
  std::map<std::string, int> seen;
  for (auto& arg : args) {
    int n = ++seen[arg.param];
    if (n > 1) arg.param += "_" + std::to_string(n);
  }
  return args;
}

}  // namespace

std::vector<FrameFunctionDecl> name_functions(const PatternSet& shared) {
  auto patterns = shared.sorted();

  // Which (frame, verb type) pairs occur in both voices.
  std::set<std::pair<std::string, VerbType>> act_seen, pass_seen;
  for (const auto& p : patterns) {
    (p.voice == Voice::Act ? act_seen : pass_seen).insert({p.frame, p.verb_type});
  }

  // How many patterns share each (frame, verb type, voice) cell; cells with
  // more than one need discriminators.
  std::map<std::tuple<std::string, VerbType, Voice>, int> cell_sizes;
  for (const auto& p : patterns) {
    ++cell_sizes[{p.frame, p.verb_type, p.voice}];
  }

  std::vector<FrameFunctionDecl> decls;
  std::map<std::tuple<std::string, VerbType, Voice>, int> counters;
  std::set<std::string> names;
  for (const auto& p : patterns) {
    FrameFunctionDecl decl;
    decl.frame = p.frame;
    decl.verb_type = p.verb_type;
    decl.voice = p.voice;
    decl.voice_suffix = act_seen.count({p.frame, p.verb_type}) &&
                        pass_seen.count({p.frame, p.verb_type});
    if (cell_sizes[{p.frame, p.verb_type, p.voice}] > 1) {
      decl.discriminator = ++counters[{p.frame, p.verb_type, p.voice}];
    }
    decl.name = decl.frame + "_" + verb_type_name(decl.verb_type);
    if (decl.voice_suffix) decl.name += "_" + voice_label(decl.voice);
    if (decl.discriminator > 0) {
      decl.name += "_" + std::to_string(decl.discriminator);
    }
    decl.args = MakeArgs(p);
    decl.verb_param = VerbParam(p.verb_type);
    if (!names.insert(decl.name).second) {
      throw ValidationError("function name collision: " + decl.name);
    }
    decls.push_back(std::move(decl));
  }
  return decls;
}

std::vector<FECategoryDecl> collect_categories(
    const std::vector<FrameFunctionDecl>& funs) {
  std::map<std::string, FECategoryDecl> by_name;
  for (const auto& fun : funs) {
    for (const auto& arg : fun.args) {
      by_name.emplace(arg.category_name(),
                      FECategoryDecl{arg.fe_name, arg.cat});
    }
  }
  std::vector<FECategoryDecl> cats;
  cats.reserve(by_name.size());
  for (const auto& [name, cat] : by_name) cats.push_back(cat);
  return cats;
}

std::vector<LexSig> lexicon_signatures(
    const std::map<Language, std::vector<LexiconEntry>>& lexicons) {
  std::map<std::string, VerbType> by_name;
  for (const auto& [lang, entries] : lexicons) {
    for (const auto& entry : entries) {
      auto [it, inserted] = by_name.emplace(entry.name(), entry.verb_type);
      if (!inserted && it->second != entry.verb_type) {
        throw ValidationError("lexicon signature conflict: " + entry.name());
      }
    }
  }
  std::vector<LexSig> sigs;
  sigs.reserve(by_name.size());
  for (const auto& [name, vtype] : by_name) sigs.push_back({name, vtype});
  return sigs;
}

namespace {

Expr FromMaybe(PhraseCat cat, const std::string& param) {
  return app("fromMaybe", {atom(cat_name(cat)), atom(param)});
}

const FEArg* FindRole(const FrameFunctionDecl& decl, SynRole role) {
  for (const auto& arg : decl.args) {
    if (arg.role == role) return &arg;
  }
  return nullptr;
}

const FEArg* FindCat(const FrameFunctionDecl& decl, PhraseCat cat) {
  for (const auto& arg : decl.args) {
    if (arg.cat == cat && arg.role == SynRole::None) return &arg;
  }
  return nullptr;
}

// Object slot for V2V/V2S: the indirect object if realized, else the
// direct object, else empty.
Expr ObjectSlot(const FrameFunctionDecl& decl) {
  if (const FEArg* iobj = FindRole(decl, SynRole::IObj)) {
    return FromMaybe(PhraseCat::NP, iobj->param);
  }
  if (const FEArg* dobj = FindRole(decl, SynRole::DObj)) {
    return FromMaybe(PhraseCat::NP, dobj->param);
  }
  return atom("emptyNP");
}

Expr NpSlot(const FEArg* arg) {
  return arg ? FromMaybe(PhraseCat::NP, arg->param) : atom("emptyNP");
}

Expr ActiveCore(const FrameFunctionDecl& decl) {
  Expr verb = atom(decl.verb_param);
  const FEArg* vp_arg = FindCat(decl, PhraseCat::VP);
  const FEArg* s_arg = FindCat(decl, PhraseCat::S);
  switch (decl.verb_type) {
    case VerbType::V:
      return app("mkVP", {verb});
    case VerbType::V2:
      return app("mkVP", {verb, NpSlot(FindRole(decl, SynRole::DObj))});
    case VerbType::V3:
      return app("mkVP", {verb, NpSlot(FindRole(decl, SynRole::IObj)),
                          NpSlot(FindRole(decl, SynRole::DObj))});
    case VerbType::VV:
      return app("mkVP",
                 {app("mkVV", {verb}),
                  vp_arg ? FromMaybe(PhraseCat::VP, vp_arg->param)
                         : atom("emptyVP")});
    case VerbType::VS:
      return app("mkVP", {verb, s_arg ? FromMaybe(PhraseCat::S, s_arg->param)
                                      : atom("emptyS")});
    case VerbType::V2V:
      return app("mkVP", {verb, ObjectSlot(decl),
                          vp_arg ? FromMaybe(PhraseCat::VP, vp_arg->param)
                                 : atom("emptyVP")});
    case VerbType::V2S:
      return app("mkVP", {verb, ObjectSlot(decl),
                          s_arg ? FromMaybe(PhraseCat::S, s_arg->param)
                                : atom("emptyS")});
  }
  return app("mkVP", {verb});
}

Expr PassiveCore(const FrameFunctionDecl& decl) {
  Expr core = app("passiveVP", {atom(decl.verb_param)});
  const FEArg* vp_arg = FindCat(decl, PhraseCat::VP);
  const FEArg* s_arg = FindCat(decl, PhraseCat::S);
  // The promoted object is the np part; remaining complement slots (a V3's
  // second object, VP or S complements) still attach to the verb.
  if (decl.verb_type == VerbType::V3) {
    if (const FEArg* dobj = FindRole(decl, SynRole::DObj)) {
      core = app("mkVP", {core, FromMaybe(PhraseCat::NP, dobj->param)});
    }
  }
  if ((decl.verb_type == VerbType::VV || decl.verb_type == VerbType::V2V) &&
      vp_arg != nullptr) {
    core = app("mkVP", {core, FromMaybe(PhraseCat::VP, vp_arg->param)});
  }
  if ((decl.verb_type == VerbType::VS || decl.verb_type == VerbType::V2S) &&
      s_arg != nullptr) {
    core = app("mkVP", {core, FromMaybe(PhraseCat::S, s_arg->param)});
  }
  if (const FEArg* agent = FindRole(decl, SynRole::Agent)) {
    core = app("mkVP",
               {core, app("mkAdv", {atom("by8agent_Prep"),
                                    FromMaybe(PhraseCat::NP, agent->param)})});
  }
  return core;
}

}  // namespace

LinDef make_lin(const FrameFunctionDecl& decl) {
  LinDef lin;
  lin.fun = decl.name;
  for (const auto& arg : decl.args) lin.params.push_back(arg.param);
  lin.params.push_back(decl.verb_param);

  const FEArg* subj = FindRole(decl, SynRole::Subj);
  lin.np = subj ? FromMaybe(PhraseCat::NP, subj->param) : atom("emptyNP");

  Expr core =
      decl.voice == Voice::Act ? ActiveCore(decl) : PassiveCore(decl);
  for (const auto& arg : decl.args) {
    if (arg.cat == PhraseCat::Adv && arg.role == SynRole::None) {
      core = app("mkVP", {core, FromMaybe(PhraseCat::Adv, arg.param)});
    }
  }
  lin.vp = core;
  return lin;
}

GrammarBundle make_bundle(
    const PatternSet& shared, const std::string& name,
    std::map<Language, std::vector<LexiconEntry>> lexicons) {
  GrammarBundle bundle;
  bundle.name = name;
  bundle.funs = name_functions(shared);
  bundle.cats = collect_categories(bundle.funs);
  bundle.lex_sigs = lexicon_signatures(lexicons);
  for (const auto& [lang, entries] : lexicons) {
    auto& lins = bundle.concretes[lang];
    for (const auto& fun : bundle.funs) {
      lins.push_back(make_lin(fun));
    }
    (void)entries;
  }
  bundle.lexicons = std::move(lexicons);
  return bundle;
}

std::string gen_abstract(const GrammarBundle& bundle) {
  std::ostringstream out;
  out << "-- abstract syntax generated from the shared valence patterns\n";
  out << "abstract " << bundle.name << " ;\n\n";
  for (const auto& cat : bundle.cats) {
    out << "cat " << cat.name() << " ;\n";
  }
  if (!bundle.cats.empty() && !bundle.funs.empty()) out << "\n";
  for (const auto& fun : bundle.funs) {
    out << "fun " << fun.name << " :";
    for (const auto& arg : fun.args) {
      out << " " << arg.category_name() << " ->";
    }
    out << " " << verb_type_name(fun.verb_type) << " -> Clause ;\n";
  }
  if (!bundle.lex_sigs.empty()) out << "\n";
  for (const auto& sig : bundle.lex_sigs) {
    out << "fun " << sig.name << " : " << verb_type_name(sig.verb_type)
        << " ;\n";
  }
  return out.str();
}

std::string gen_concrete(const GrammarBundle& bundle, Language lang) {
  std::ostringstream out;
  out << "-- concrete syntax, Clause = { np : NP ; vp : VP }\n";
  out << "concrete " << bundle.name << lang_suffix(lang) << " of "
      << bundle.name << " ;\n\n";
  auto it = bundle.concretes.find(lang);
  if (it != bundle.concretes.end()) {
    for (const auto& lin : it->second) {
      out << "lin " << lin.fun;
      for (const auto& param : lin.params) out << " " << param;
      out << " = { np = " << print_expr(lin.np) << " ; vp = "
          << print_expr(lin.vp) << " } ;\n";
    }
  }
  return out.str();
}

std::string gen_lexicon(const GrammarBundle& bundle, Language lang) {
  std::ostringstream out;
  out << "-- verb lexicon with explicit principal parts\n";
  out << "lexicon Lexicon" << lang_suffix(lang) << " for " << lang_code(lang)
      << " ;\n\n";
  auto it = bundle.lexicons.find(lang);
  if (it != bundle.lexicons.end()) {
    std::set<std::string> names;
    for (const auto& entry : it->second) {
      if (!names.insert(entry.name()).second) {
        throw ValidationError("duplicate lexicon name: " + entry.name());
      }
      out << "lex " << entry.name() << " = verb";
      for (const auto& form : entry.forms) {
        out << " \"" << form << "\"";
      }
      if (!entry.complement_marker.empty()) {
        out << " compl \"" << entry.complement_marker << "\"";
      }
      out << " ;\n";
    }
  }
  return out.str();
}

}  // namespace fngen
