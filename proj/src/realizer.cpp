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

#include "fngen/realizer.hpp"

#include <cctype>

#include "fngen/codegen.hpp"

namespace fngen {

namespace {

const std::string& Subjunction(Language lang) {
  static const std::string kThat = "that";
  static const std::string kAtt = "att";
  return lang == Language::En ? kThat : kAtt;
}

const std::string& ByPreposition(Language lang) {
  static const std::string kBy = "by";
  static const std::string kAv = "av";
  return lang == Language::En ? kBy : kAv;
}

}  // namespace

ArgValue np_arg(NPhrase np) {
  ArgValue v;
  v.kind = PhraseCat::NP;
  v.np = std::move(np);
  return v;
}

ArgValue adv_arg(const std::string& surface) {
  ArgValue v;
  v.kind = PhraseCat::Adv;
  v.adv.surface = surface;
  return v;
}

ArgValue s_arg(const std::string& surface) {
  ArgValue v;
  v.kind = PhraseCat::S;
  v.s.surface = surface;
  return v;
}

ArgValue vp_arg(std::shared_ptr<const VPhrase> vp) {
  ArgValue v;
  v.kind = PhraseCat::VP;
  v.vp = std::move(vp);
  return v;
}

ArgValue vp_text_arg(const std::string& surface) {
  auto vp = std::make_shared<VPhrase>();
  vp->opaque = surface;
  return vp_arg(std::move(vp));
}

ArgValue from_optional(const OptArg& slot, PhraseCat kind) {
  if (slot.has_value()) return *slot;
  ArgValue v;
  v.kind = kind;
  if (kind == PhraseCat::VP) v.vp = std::make_shared<VPhrase>();
  return v;
}

std::shared_ptr<const VPhrase> nest_clause_as_vp(const ClauseRec& clause) {
  return std::make_shared<const VPhrase>(clause.vp);
}

ClauseRec attach_adverbial(ClauseRec clause, const AdvPhrase& adv) {
  clause.vp.adverbials.push_back(adv);
  return clause;
}

// ---------------------------------------------------------------------------
// Expression evaluation

namespace {

struct Value {
  enum Kind { NP, Adv, S, VP, Verb } kind = NP;
  NPhrase np;
  AdvPhrase adv;
  SPhrase s;
  std::shared_ptr<const VPhrase> vp;
  const LexiconEntry* verb = nullptr;
};

Value ValueOf(const ArgValue& arg) {
  Value v;
  switch (arg.kind) {
    case PhraseCat::NP:
      v.kind = Value::NP;
      v.np = arg.np;
      break;
    case PhraseCat::Adv:
      v.kind = Value::Adv;
      v.adv = arg.adv;
      break;
    case PhraseCat::S:
      v.kind = Value::S;
      v.s = arg.s;
      break;
    case PhraseCat::VP:
      v.kind = Value::VP;
      v.vp = arg.vp ? arg.vp : std::make_shared<VPhrase>();
      break;
  }
  return v;
}

struct EvalEnv {
  std::map<std::string, const OptArg*> params;
  std::string verb_param;
  const LexiconEntry* verb = nullptr;
  Language lang = Language::En;
};

Value Eval(const Expr& expr, const EvalEnv& env);

Value EvalLeaf(const Expr& expr, const EvalEnv& env) {
  const std::string& head = expr.head;
  if (head == env.verb_param) {
    Value v;
    v.kind = Value::Verb;
    v.verb = env.verb;
    return v;
  }
  if (head == "emptyNP") {
    Value v;
    v.kind = Value::NP;
    return v;
  }
  if (head == "emptyAdv") {
    Value v;
    v.kind = Value::Adv;
    return v;
  }
  if (head == "emptyS") {
    Value v;
    v.kind = Value::S;
    return v;
  }
  if (head == "emptyVP") {
    Value v;
    v.kind = Value::VP;
    v.vp = std::make_shared<VPhrase>();
    return v;
  }
  auto it = env.params.find(head);
  if (it != env.params.end()) {
    if (!it->second->has_value()) {
      throw ValidationError("optional parameter " + head +
                            " used without fromMaybe");
    }
    return ValueOf(**it->second);
  }
  throw ValidationError("unknown identifier in linearization: " + head);
}

Value EvalFromMaybe(const Expr& expr, const EvalEnv& env) {
  if (expr.args.size() != 2 || !expr.args[0].args.empty() ||
      !expr.args[1].args.empty()) {
    throw ValidationError("fromMaybe expects a category and a parameter");
  }
  auto cat = cat_from_name(expr.args[0].head);
  if (!cat) {
    throw ValidationError("fromMaybe: unknown category " + expr.args[0].head);
  }
  const std::string& param = expr.args[1].head;
  auto it = env.params.find(param);
  if (it == env.params.end()) {
    throw ValidationError("fromMaybe: unknown parameter " + param);
  }
  ArgValue value = from_optional(*it->second, *cat);
  if (value.kind != *cat) {
    throw ValidationError("argument " + param + " has category " +
                          cat_name(value.kind) + ", expected " +
                          cat_name(*cat));
  }
  return ValueOf(value);
}

Value EvalMkVP(const Expr& expr, const EvalEnv& env) {
  if (expr.args.empty()) {
    throw ValidationError("mkVP needs arguments");
  }
  Value head = Eval(expr.args[0], env);
  if (head.kind == Value::Verb) {
    auto vp = std::make_shared<VPhrase>();
    vp->verb = head.verb;
    vp->voice = Voice::Act;
    for (size_t i = 1; i < expr.args.size(); ++i) {
      Value arg = Eval(expr.args[i], env);
      switch (arg.kind) {
        case Value::NP: {
          VComplement c;
          c.kind = PhraseCat::NP;
          c.np = arg.np;
          vp->complements.push_back(std::move(c));
          break;
        }
        case Value::VP: {
          VComplement c;
          c.kind = PhraseCat::VP;
          c.vp = arg.vp;
          vp->complements.push_back(std::move(c));
          break;
        }
        case Value::S: {
          VComplement c;
          c.kind = PhraseCat::S;
          c.s = arg.s;
          vp->complements.push_back(std::move(c));
          break;
        }
        case Value::Adv:
          vp->adverbials.push_back(arg.adv);
          break;
        case Value::Verb:
          throw ValidationError("mkVP: verb in complement position");
      }
    }
    Value v;
    v.kind = Value::VP;
    v.vp = std::move(vp);
    return v;
  }
  if (head.kind == Value::VP) {
    auto vp = std::make_shared<VPhrase>(*head.vp);
    for (size_t i = 1; i < expr.args.size(); ++i) {
      Value arg = Eval(expr.args[i], env);
      switch (arg.kind) {
        case Value::Adv:
          vp->adverbials.push_back(arg.adv);
          break;
        case Value::NP: {
          VComplement c;
          c.kind = PhraseCat::NP;
          c.np = arg.np;
          vp->complements.push_back(std::move(c));
          break;
        }
        case Value::VP: {
          VComplement c;
          c.kind = PhraseCat::VP;
          c.vp = arg.vp;
          vp->complements.push_back(std::move(c));
          break;
        }
        case Value::S: {
          VComplement c;
          c.kind = PhraseCat::S;
          c.s = arg.s;
          vp->complements.push_back(std::move(c));
          break;
        }
        case Value::Verb:
          throw ValidationError("mkVP: verb cannot extend a verb phrase");
      }
    }
    Value v;
    v.kind = Value::VP;
    v.vp = std::move(vp);
    return v;
  }
  throw ValidationError("mkVP: first argument must be a verb or verb phrase");
}

Value Eval(const Expr& expr, const EvalEnv& env) {
  if (expr.args.empty()) return EvalLeaf(expr, env);
  const std::string& head = expr.head;
  if (head == "fromMaybe") return EvalFromMaybe(expr, env);
  if (head == "mkVP") return EvalMkVP(expr, env);
  if (head == "mkVV") {
    if (expr.args.size() != 1) {
      throw ValidationError("mkVV expects one argument");
    }
    Value v = Eval(expr.args[0], env);
    if (v.kind != Value::Verb) {
      throw ValidationError("mkVV expects a verb");
    }
    return v;
  }
  if (head == "passiveVP") {
    if (expr.args.size() != 1) {
      throw ValidationError("passiveVP expects one argument");
    }
    Value verb = Eval(expr.args[0], env);
    if (verb.kind != Value::Verb) {
      throw ValidationError("passiveVP expects a verb");
    }
    auto vp = std::make_shared<VPhrase>();
    vp->verb = verb.verb;
    vp->voice = Voice::Pass;
    Value v;
    v.kind = Value::VP;
    v.vp = std::move(vp);
    return v;
  }
  if (head == "mkAdv") {
    if (expr.args.size() != 2 || expr.args[0].head != "by8agent_Prep") {
      throw ValidationError("mkAdv supports only by8agent_Prep");
    }
    Value np = Eval(expr.args[1], env);
    if (np.kind != Value::NP) {
      throw ValidationError("mkAdv by8agent_Prep expects a noun phrase");
    }
    Value v;
    v.kind = Value::Adv;
    if (!np.np.empty()) {
      v.adv.surface = ByPreposition(env.lang) + " " + np.np.objective();
    }
    return v;
  }
  throw ValidationError("unknown constructor: " + head);
}

EvalEnv BindArgs(const std::vector<std::string>& params,
                 const std::vector<OptArg>& args, const LexiconEntry& verb) {
  if (params.empty()) {
    throw ValidationError("linearization has no parameters");
  }
  if (args.size() != params.size() - 1) {
    throw ValidationError("expected " + std::to_string(params.size() - 1) +
                          " arguments, got " + std::to_string(args.size()));
  }
  EvalEnv env;
  for (size_t i = 0; i + 1 < params.size(); ++i) {
    env.params[params[i]] = &args[i];
  }
  env.verb_param = params.back();
  env.verb = &verb;
  env.lang = verb.language;
  return env;
}

ClauseRec EvalClause(const Expr& np_expr, const Expr& vp_expr,
                     const EvalEnv& env) {
  Value np = Eval(np_expr, env);
  if (np.kind != Value::NP) {
    throw ValidationError("np part did not evaluate to a noun phrase");
  }
  Value vp = Eval(vp_expr, env);
  if (vp.kind != Value::VP) {
    throw ValidationError("vp part did not evaluate to a verb phrase");
  }
  ClauseRec clause;
  clause.np = np.np;
  clause.vp = *vp.vp;
  return clause;
}

}  // namespace

ClauseRec eval_lin(const LinDef& lin, const std::vector<OptArg>& args,
                   const LexiconEntry& verb) {
  EvalEnv env = BindArgs(lin.params, args, verb);
  return EvalClause(lin.np, lin.vp, env);
}

ClauseRec apply_frame_function(const FrameFunctionDecl& decl,
                               const std::vector<OptArg>& args,
                               const LexiconEntry& verb) {
  if (verb.verb_type != decl.verb_type) {
    throw ValidationError("verb " + verb.name() + " has type " +
                          verb_type_name(verb.verb_type) + ", function " +
                          decl.name + " needs " +
                          verb_type_name(decl.verb_type));
  }
  if (args.size() != decl.args.size()) {
    throw ValidationError(decl.name + " expects " +
                          std::to_string(decl.args.size()) + " arguments");
  }
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i].has_value() && args[i]->kind != decl.args[i].cat) {
      throw ValidationError(decl.name + ": argument " +
                            decl.args[i].category_name() + " has category " +
                            cat_name(args[i]->kind));
    }
  }
  return eval_lin(make_lin(decl), args, verb);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string RenderVP(const VPhrase& vp, bool finite, const NPhrase& subject,
                     Tense tense, Language lang);

void AppendPart(std::string* out, const std::string& part) {
  if (part.empty()) return;
  if (!out->empty()) *out += " ";
  *out += part;
}

std::string EnglishBe(const NPhrase& subject, Tense tense) {
  bool sg = subject.number == Number::Sg;
  if (tense == Tense::Pres) {
    if (sg && subject.person == 1) return "am";
    if (sg && subject.person == 3) return "is";
    return "are";
  }
  return sg && subject.person != 2 ? "was" : "were";
}

std::string FiniteVerb(const LexiconEntry& verb, Voice voice,
                       const NPhrase& subject, Tense tense) {
  if (verb.language == Language::En) {
    if (voice == Voice::Act) {
      if (tense == Tense::Pres) {
        bool third_sg = subject.number == Number::Sg && subject.person == 3;
        return third_sg ? verb.form(EnForm::Pres3sg) : verb.form(EnForm::Base);
      }
      return verb.form(EnForm::Past);
    }
    return EnglishBe(subject, tense) + " " + verb.form(EnForm::PastParticiple);
  }
  if (voice == Voice::Act) {
    return tense == Tense::Pres ? verb.form(SvForm::Present)
                                : verb.form(SvForm::Past);
  }
  return tense == Tense::Pres ? verb.form(SvForm::SPassivePresent)
                              : verb.form(SvForm::SPassivePast);
}

std::string InfinitiveVerb(const LexiconEntry& verb, Voice voice) {
  if (verb.language == Language::En) {
    if (voice == Voice::Act) return verb.form(EnForm::Base);
    return "be " + verb.form(EnForm::PastParticiple);
  }
  return voice == Voice::Act ? verb.form(SvForm::Infinitive)
                             : verb.form(SvForm::SPassivePresent);
}

std::string RenderComplement(const VComplement& c, const VPhrase& host,
                             Tense tense, Language lang) {
  switch (c.kind) {
    case PhraseCat::NP:
      return c.np.empty() ? "" : c.np.objective();
    case PhraseCat::VP: {
      if (!c.vp) return "";
      std::string inner = RenderVP(*c.vp, false, NPhrase{}, tense, lang);
      if (inner.empty()) return "";
      if (host.verb != nullptr && !host.verb->complement_marker.empty()) {
        return host.verb->complement_marker + " " + inner;
      }
      return inner;
    }
    case PhraseCat::S:
      return c.s.empty() ? "" : Subjunction(lang) + " " + c.s.surface;
    default:
      return "";
  }
}

std::string RenderVP(const VPhrase& vp, bool finite, const NPhrase& subject,
                     Tense tense, Language lang) {
  std::string out;
  if (vp.verb != nullptr) {
    AppendPart(&out, finite ? FiniteVerb(*vp.verb, vp.voice, subject, tense)
                            : InfinitiveVerb(*vp.verb, vp.voice));
  } else {
    AppendPart(&out, vp.opaque);
  }
  for (const auto& c : vp.complements) {
    AppendPart(&out, RenderComplement(c, vp, tense, lang));
  }
  for (const auto& adv : vp.adverbials) {
    AppendPart(&out, adv.surface);
  }
  return out;
}

std::string CapitalizeFirst(std::string s) {
  if (s.empty()) return s;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (c0 < 0x80) {
    s[0] = static_cast<char>(
        std::toupper(static_cast<unsigned char>(s[0])));
  } else if (c0 == 0xC3 && s.size() >= 2) {
    // Latin-1 supplement lowercase letters (à..þ except ÷) uppercase by
    // clearing bit 5 of the second byte; covers å ä ö é è ü etc.
    unsigned char c1 = static_cast<unsigned char>(s[1]);
    if (c1 >= 0xA0 && c1 <= 0xBE && c1 != 0xB7) {
      s[1] = static_cast<char>(c1 - 0x20);
    }
  }
  return s;
}

}  // namespace

std::string mk_clause(const ClauseRec& clause, const SentenceSpec& spec,
                      Language lang) {
  std::string out;
  AppendPart(&out, clause.np.surface);
  AppendPart(&out, RenderVP(clause.vp, true, clause.np, spec.tense, lang));
  return out;
}

std::string mk_text(const std::vector<std::string>& sentences) {
  std::string out;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    if (!out.empty()) out += " ";
    out += CapitalizeFirst(sentence);
    out += ".";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Engine

RealizerEngine::RealizerEngine(GrammarBundle bundle)
    : bundle_(std::move(bundle)) {
  for (const auto& fun : bundle_.funs) {
    funs_[fun.name] = &fun;
  }
  for (const auto& [lang, lins] : bundle_.concretes) {
    for (const auto& lin : lins) {
      lins_[{static_cast<int>(lang), lin.fun}] = &lin;
    }
  }
  for (const auto& [lang, entries] : bundle_.lexicons) {
    for (const auto& entry : entries) {
      verbs_[{static_cast<int>(lang), entry.name()}] = &entry;
    }
  }
}

const FrameFunctionDecl* RealizerEngine::find_fun(
    const std::string& name) const {
  auto it = funs_.find(name);
  return it == funs_.end() ? nullptr : it->second;
}

const LinDef* RealizerEngine::find_lin(const std::string& fun,
                                       Language lang) const {
  auto it = lins_.find({static_cast<int>(lang), fun});
  return it == lins_.end() ? nullptr : it->second;
}

const LexiconEntry* RealizerEngine::find_verb(const std::string& name,
                                              Language lang) const {
  auto it = verbs_.find({static_cast<int>(lang), name});
  return it == verbs_.end() ? nullptr : it->second;
}

ClauseRec RealizerEngine::apply(const std::string& fun,
                                const std::vector<OptArg>& args,
                                const std::string& verb_name,
                                Language lang) const {
  const LinDef* lin = find_lin(fun, lang);
  if (lin == nullptr) {
    throw ValidationError("no linearization for " + fun + " in " +
                          lang_code(lang));
  }
  const LexiconEntry* verb = find_verb(verb_name, lang);
  if (verb == nullptr) {
    throw ValidationError("missing lexicon entry: " + verb_name);
  }
  return eval_lin(*lin, args, *verb);
}

OptArg RealizerEngine::build_arg(const nlohmann::json& value, const FEArg& arg,
                                 Language lang, Tense default_tense) const {
  if (value.is_null()) return std::nullopt;
  if (!value.is_object()) {
    throw ValidationError("argument " + arg.category_name() +
                          " must be an object or null");
  }
  if (value.contains("function")) {
    // Nested frame: legal for VP and S arguments.
    if (arg.cat != PhraseCat::VP && arg.cat != PhraseCat::S) {
      throw ValidationError("argument " + arg.category_name() +
                            " cannot be a nested frame");
    }
    BuiltClause nested = build_clause(value, lang, default_tense);
    if (arg.cat == PhraseCat::VP) {
      return vp_arg(nest_clause_as_vp(nested.clause));
    }
    return s_arg(mk_clause(nested.clause, {nested.tense}, lang));
  }
  for (const auto& item : value.items()) {
    if (item.key() != "text" && item.key() != "cat" &&
        item.key() != "number" && item.key() != "person" &&
        item.key() != "objform") {
      throw ValidationError("argument " + arg.category_name() +
                            ": unknown field \"" + item.key() + "\"");
    }
  }
  if (value.contains("cat")) {
    auto cat = cat_from_name(value.at("cat").get<std::string>());
    if (!cat || *cat != arg.cat) {
      throw ValidationError("argument " + arg.category_name() +
                            " declared with the wrong category");
    }
  }
  if (!value.contains("text") || !value.at("text").is_string()) {
    throw ValidationError("argument " + arg.category_name() +
                          " needs a \"text\" field");
  }
  std::string text = value.at("text").get<std::string>();
  switch (arg.cat) {
    case PhraseCat::NP: {
      NPhrase np;
      np.surface = text;
      if (value.contains("number")) {
        std::string number = value.at("number").get<std::string>();
        if (number != "sg" && number != "pl") {
          throw ValidationError("number must be \"sg\" or \"pl\"");
        }
        np.number = number == "sg" ? Number::Sg : Number::Pl;
      }
      if (value.contains("person")) {
        int person = value.at("person").get<int>();
        if (person < 1 || person > 3) {
          throw ValidationError("person must be 1, 2 or 3");
        }
        np.person = person;
      }
      if (value.contains("objform")) {
        np.object_form = value.at("objform").get<std::string>();
      }
      return np_arg(std::move(np));
    }
    case PhraseCat::Adv:
      return adv_arg(text);
    case PhraseCat::S:
      return s_arg(text);
    case PhraseCat::VP:
      return vp_text_arg(text);
  }
  return std::nullopt;
}

RealizerEngine::BuiltClause RealizerEngine::build_clause(
    const nlohmann::json& tree, Language lang, Tense default_tense) const {
  if (!tree.is_object() || !tree.contains("function")) {
    throw ValidationError("frame tree must be an object with a function");
  }
  for (const auto& item : tree.items()) {
    if (item.key() != "function" && item.key() != "verb" &&
        item.key() != "args" && item.key() != "tense" &&
        item.key() != "adjuncts") {
      throw ValidationError("unknown tree field \"" + item.key() + "\"");
    }
  }
  std::string fun_name = tree.at("function").get<std::string>();
  const FrameFunctionDecl* decl = find_fun(fun_name);
  if (decl == nullptr) {
    throw ValidationError("unknown frame function: " + fun_name);
  }
  if (!tree.contains("verb")) {
    throw ValidationError(fun_name + ": missing verb");
  }
  std::string verb_name = tree.at("verb").get<std::string>();
  const LexiconEntry* verb = find_verb(verb_name, lang);
  if (verb == nullptr) {
    throw ValidationError("missing lexicon entry: " + verb_name + " (" +
                          lang_code(lang) + ")");
  }

  BuiltClause out;
  out.tense = default_tense;
  if (tree.contains("tense")) {
    auto tense = tense_from_name(tree.at("tense").get<std::string>());
    if (!tense) {
      throw ValidationError("tense must be \"pres\" or \"past\"");
    }
    out.tense = *tense;
  }
  out.frame = decl->frame;

  // Per-category argument lookup; functions with a repeated category cannot
  // be driven from a tree (the positional API covers them).
  std::map<std::string, const FEArg*> by_cat;
  for (const auto& arg : decl->args) {
    if (!by_cat.emplace(arg.category_name(), &arg).second) {
      throw ValidationError(fun_name + ": repeated category " +
                            arg.category_name() +
                            " cannot be addressed in a tree");
    }
  }
  nlohmann::json args_json = tree.contains("args")
                                 ? tree.at("args")
                                 : nlohmann::json::object();
  for (const auto& item : args_json.items()) {
    if (!by_cat.count(item.key())) {
      throw ValidationError(fun_name + ": unknown argument \"" + item.key() +
                            "\"");
    }
  }
  std::vector<OptArg> args;
  for (const auto& arg : decl->args) {
    if (args_json.contains(arg.category_name())) {
      args.push_back(build_arg(args_json.at(arg.category_name()), arg, lang,
                               out.tense));
    } else {
      args.push_back(std::nullopt);
    }
  }

  const LinDef* lin = find_lin(fun_name, lang);
  if (lin == nullptr) {
    throw ValidationError("no linearization for " + fun_name + " in " +
                          lang_code(lang));
  }
  out.clause = eval_lin(*lin, args, *verb);

  if (tree.contains("adjuncts")) {
    for (const auto& adjunct : tree.at("adjuncts")) {
      out.clause =
          attach_adverbial(std::move(out.clause),
                           AdvPhrase{adjunct.get<std::string>()});
    }
  }
  return out;
}

RealizeResult RealizerEngine::realize(const nlohmann::json& root,
                                      Language default_lang,
                                      Tense default_tense) const {
  if (!root.is_object()) {
    throw ValidationError("tree file must hold a JSON object");
  }
  nlohmann::json work = root;
  Language lang = default_lang;
  if (work.contains("lang")) {
    auto parsed = lang_from_code(work.at("lang").get<std::string>());
    if (!parsed) {
      throw ValidationError("unknown language in tree file");
    }
    lang = *parsed;
    work.erase("lang");
  }

  RealizeResult result;
  if (work.contains("text")) {
    Tense tense = default_tense;
    for (const auto& item : work.items()) {
      if (item.key() != "text" && item.key() != "tense") {
        throw ValidationError("unknown field \"" + item.key() +
                              "\" in text record");
      }
    }
    if (work.contains("tense")) {
      auto parsed = tense_from_name(work.at("tense").get<std::string>());
      if (!parsed) {
        throw ValidationError("tense must be \"pres\" or \"past\"");
      }
      tense = *parsed;
    }
    if (!work.at("text").is_array()) {
      throw ValidationError("\"text\" must hold an array of frame trees");
    }
    std::vector<std::string> sentences;
    for (const auto& tree : work.at("text")) {
      BuiltClause built = build_clause(tree, lang, tense);
      result.frames.push_back(built.frame);
      if (built.clause.np.empty()) result.empty_subject = true;
      sentences.push_back(mk_clause(built.clause, {built.tense}, lang));
    }
    result.text = mk_text(sentences);
    return result;
  }
  BuiltClause built = build_clause(work, lang, default_tense);
  result.frames.push_back(built.frame);
  if (built.clause.np.empty()) result.empty_subject = true;
  result.text = mk_clause(built.clause, {built.tense}, lang);
  return result;
}

}  // namespace fngen
