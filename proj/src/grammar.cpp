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

#include "fngen/grammar.hpp"

#include <json.hpp>

#include "fngen/grammar_parse.hpp"
#include "fngen/jsonl.hpp"

namespace fngen {

Expr atom(const std::string& head) { return Expr{head, {}}; }

Expr app(const std::string& head, std::vector<Expr> args) {
  return Expr{head, std::move(args)};
}

std::string print_expr(const Expr& expr) {
  std::string out = expr.head;
  for (const auto& arg : expr.args) {
    out += " ";
    if (arg.args.empty()) {
      out += arg.head;
    } else {
      out += "(" + print_expr(arg) + ")";
    }
  }
  return out;
}

const FrameFunctionDecl* GrammarBundle::find_fun(
    const std::string& fun_name) const {
  for (const auto& fun : funs) {
    if (fun.name == fun_name) return &fun;
  }
  return nullptr;
}

bool GrammarBundle::operator==(const GrammarBundle& other) const {
  return name == other.name && cats == other.cats && funs == other.funs &&
         lex_sigs == other.lex_sigs && concretes == other.concretes &&
         lexicons == other.lexicons;
}

bool operator==(const LexiconEntry& a, const LexiconEntry& b) {
  return a.lemma == b.lemma && a.verb_type == b.verb_type &&
         a.frame == b.frame && a.language == b.language &&
         a.forms == b.forms && a.complement_marker == b.complement_marker;
}

std::string write_bundle(const GrammarBundle& bundle) {
  std::string out;
  auto emit = [&out](const nlohmann::json& record) {
    out += record.dump();
    out += '\n';
  };

  nlohmann::json langs = nlohmann::json::array();
  for (const auto& [lang, lins] : bundle.concretes) {
    langs.push_back(lang_code(lang));
  }
  emit({{"record", "grammar"}, {"name", bundle.name}, {"langs", langs}});

  for (const auto& cat : bundle.cats) {
    emit({{"record", "cat"}, {"fe", cat.fe_name}, {"cat", cat_name(cat.cat)}});
  }
  for (const auto& fun : bundle.funs) {
    nlohmann::json args = nlohmann::json::array();
    for (const auto& arg : fun.args) {
      args.push_back({{"fe", arg.fe_name},
                      {"cat", cat_name(arg.cat)},
                      {"role", role_wire(arg.role)},
                      {"param", arg.param}});
    }
    emit({{"record", "fun"},
          {"name", fun.name},
          {"frame", fun.frame},
          {"vtype", verb_type_name(fun.verb_type)},
          {"voice", voice_wire(fun.voice)},
          {"voice_suffix", fun.voice_suffix},
          {"discriminator", fun.discriminator},
          {"args", args},
          {"verb_param", fun.verb_param}});
  }
  for (const auto& sig : bundle.lex_sigs) {
    emit({{"record", "lexsig"},
          {"name", sig.name},
          {"vtype", verb_type_name(sig.verb_type)}});
  }
  for (const auto& [lang, lins] : bundle.concretes) {
    for (const auto& lin : lins) {
      emit({{"record", "lin"},
            {"lang", lang_code(lang)},
            {"fun", lin.fun},
            {"params", lin.params},
            {"np", print_expr(lin.np)},
            {"vp", print_expr(lin.vp)}});
    }
  }
  for (const auto& [lang, entries] : bundle.lexicons) {
    for (const auto& entry : entries) {
      nlohmann::json record = {{"record", "lex"},
                               {"lang", lang_code(lang)},
                               {"lemma", entry.lemma},
                               {"vtype", verb_type_name(entry.verb_type)},
                               {"frame", entry.frame},
                               {"forms", entry.forms}};
      if (!entry.complement_marker.empty()) {
        record["compl"] = entry.complement_marker;
      }
      emit(record);
    }
  }
  return out;
}

namespace {

Language LangOf(const JsonlRecord& record) {
  auto lang = lang_from_code(get_string(record, "lang"));
  if (!lang) {
    throw ParseError(record.source + ": unknown language \"" +
                     get_string(record, "lang") + "\"");
  }
  return *lang;
}

VerbType VtypeOf(const JsonlRecord& record, const std::string& key) {
  auto vtype = verb_type_from_name(get_string(record, key));
  if (!vtype) {
    throw ParseError(record.source + ": unknown verb type \"" +
                     get_string(record, key) + "\"");
  }
  return *vtype;
}

}  // namespace

GrammarBundle read_bundle(const std::string& text,
                          const std::string& source_name) {
  GrammarBundle bundle;
  bool saw_header = false;
  for (const auto& record : parse_jsonl(text, source_name)) {
    std::string kind = get_string(record, "record");
    if (kind == "grammar") {
      require_fields(record, {"record", "name", "langs"},
                     {"record", "name", "langs"});
      bundle.name = get_string(record, "name");
      for (const auto& code : record.value.at("langs")) {
        auto lang = lang_from_code(code.get<std::string>());
        if (!lang) {
          throw ParseError(record.source + ": unknown language in header");
        }
        bundle.concretes[*lang];
        bundle.lexicons[*lang];
      }
      saw_header = true;
    } else if (kind == "cat") {
      require_fields(record, {"record", "fe", "cat"}, {"record", "fe", "cat"});
      auto cat = cat_from_name(get_string(record, "cat"));
      if (!cat) {
        throw ParseError(record.source + ": unknown category");
      }
      bundle.cats.push_back({get_string(record, "fe"), *cat});
    } else if (kind == "fun") {
      require_fields(record,
                     {"record", "name", "frame", "vtype", "voice",
                      "voice_suffix", "discriminator", "args", "verb_param"},
                     {"record", "name", "frame", "vtype", "voice",
                      "voice_suffix", "discriminator", "args", "verb_param"});
      FrameFunctionDecl fun;
      fun.name = get_string(record, "name");
      fun.frame = get_string(record, "frame");
      fun.verb_type = VtypeOf(record, "vtype");
      auto voice = voice_from_wire(get_string(record, "voice"));
      if (!voice) {
        throw ParseError(record.source + ": unknown voice");
      }
      fun.voice = *voice;
      fun.voice_suffix = get_bool(record, "voice_suffix");
      fun.discriminator = static_cast<int>(get_int(record, "discriminator"));
      fun.verb_param = get_string(record, "verb_param");
      for (const auto& arg_json : record.value.at("args")) {
        JsonlRecord arg_record{arg_json, record.source, record.line};
        require_fields(arg_record, {"fe", "cat", "role", "param"},
                       {"fe", "cat", "role", "param"});
        FEArg arg;
        arg.fe_name = get_string(arg_record, "fe");
        auto cat = cat_from_name(get_string(arg_record, "cat"));
        auto role = role_from_wire(get_string(arg_record, "role"));
        if (!cat || !role) {
          throw ParseError(record.source + ": bad fun argument");
        }
        arg.cat = *cat;
        arg.role = *role;
        arg.param = get_string(arg_record, "param");
        fun.args.push_back(std::move(arg));
      }
      bundle.funs.push_back(std::move(fun));
    } else if (kind == "lexsig") {
      require_fields(record, {"record", "name", "vtype"},
                     {"record", "name", "vtype"});
      bundle.lex_sigs.push_back(
          {get_string(record, "name"), VtypeOf(record, "vtype")});
    } else if (kind == "lin") {
      require_fields(record, {"record", "lang", "fun", "params", "np", "vp"},
                     {"record", "lang", "fun", "params", "np", "vp"});
      LinDef lin;
      lin.fun = get_string(record, "fun");
      for (const auto& param : record.value.at("params")) {
        lin.params.push_back(param.get<std::string>());
      }
      lin.np = parse_expr(get_string(record, "np"));
      lin.vp = parse_expr(get_string(record, "vp"));
      bundle.concretes[LangOf(record)].push_back(std::move(lin));
    } else if (kind == "lex") {
      require_fields(
          record, {"record", "lang", "lemma", "vtype", "frame", "forms"},
          {"record", "lang", "lemma", "vtype", "frame", "forms", "compl"});
      LexiconEntry entry;
      entry.language = LangOf(record);
      entry.lemma = get_string(record, "lemma");
      entry.verb_type = VtypeOf(record, "vtype");
      entry.frame = get_string(record, "frame");
      for (const auto& form : record.value.at("forms")) {
        entry.forms.push_back(form.get<std::string>());
      }
      if (record.value.contains("compl")) {
        entry.complement_marker = get_string(record, "compl");
      }
      bundle.lexicons[entry.language].push_back(std::move(entry));
    } else {
      throw ParseError(record.source + ": unknown record kind \"" + kind +
                       "\"");
    }
  }
  if (!saw_header) {
    throw ParseError(source_name + ": missing grammar header record");
  }
  return bundle;
}

}  // namespace fngen
