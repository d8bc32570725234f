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

#ifndef FNGEN_REALIZER_H_
#define FNGEN_REALIZER_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fngen/grammar.hpp"
#include "fngen/lexicon.hpp"
#include "fngen/types.hpp"

namespace fngen {

enum class Number { Sg, Pl };

// A noun phrase with the features clause rendering needs: number and person
// drive English agreement, the object form covers pronoun case (she/her).
struct NPhrase {
  std::string surface;
  Number number = Number::Sg;
  int person = 3;
  std::string object_form;  // empty: same as surface

  bool empty() const { return surface.empty(); }
  const std::string& objective() const {
    return object_form.empty() ? surface : object_form;
  }
};

struct AdvPhrase {
  std::string surface;
  bool empty() const { return surface.empty(); }
};

// An embedded declarative sentence, already rendered; the subjunction is
// added where the complement is placed.
struct SPhrase {
  std::string surface;
  bool empty() const { return surface.empty(); }
};

struct VPhrase;

struct VComplement {
  PhraseCat kind = PhraseCat::NP;  // NP, VP or S
  NPhrase np;
  SPhrase s;
  std::shared_ptr<const VPhrase> vp;
};

// A verb phrase under construction: the verb (or an opaque phrase for plain
// text VP arguments), its voice, complements in application order, then
// adverbials.
struct VPhrase {
  const LexiconEntry* verb = nullptr;
  std::string opaque;  // used when verb == nullptr
  Voice voice = Voice::Act;
  std::vector<VComplement> complements;
  std::vector<AdvPhrase> adverbials;

  bool empty() const {
    return verb == nullptr && opaque.empty() && complements.empty() &&
           adverbials.empty();
  }
};

struct ClauseRec {
  NPhrase np;
  VPhrase vp;
};

struct SentenceSpec {
  Tense tense = Tense::Pres;
  // polarity is fixed positive
};

// A phrase value passed as a frame function argument.
struct ArgValue {
  PhraseCat kind = PhraseCat::NP;
  NPhrase np;
  AdvPhrase adv;
  SPhrase s;
  std::shared_ptr<const VPhrase> vp;
};

using OptArg = std::optional<ArgValue>;

ArgValue np_arg(NPhrase np);
ArgValue adv_arg(const std::string& surface);
ArgValue s_arg(const std::string& surface);
ArgValue vp_arg(std::shared_ptr<const VPhrase> vp);
ArgValue vp_text_arg(const std::string& surface);

// Present value unchanged; absent value becomes the empty phrase of the
// requested kind, which renders as nothing.
ArgValue from_optional(const OptArg& slot, PhraseCat kind);

// Packages a clause's predicate as a VP complement, discarding the subject.
std::shared_ptr<const VPhrase> nest_clause_as_vp(const ClauseRec& clause);

// Appends an adverbial to the clause's verb phrase (the hook for non-core
// material like the painting year).
ClauseRec attach_adverbial(ClauseRec clause, const AdvPhrase& adv);

// Builds a clause by applying a frame function declaration directly: the
// linearization template is instantiated from the declaration and
// evaluated. args are positional, matching decl.args order. The language
// is the verb's language.
ClauseRec apply_frame_function(const FrameFunctionDecl& decl,
                               const std::vector<OptArg>& args,
                               const LexiconEntry& verb);

// Builds a clause by interpreting a parsed linearization definition (the
// emitted concrete syntax). args bind to lin.params positionally, the verb
// to the final parameter.
ClauseRec eval_lin(const LinDef& lin, const std::vector<OptArg>& args,
                   const LexiconEntry& verb);

// Renders a finite clause: subject, agreeing verb, complements,
// adverbials, single-space separated. No capitalization or terminal
// punctuation; mk_text adds those. An empty subject simply renders nothing
// in its position.
std::string mk_clause(const ClauseRec& clause, const SentenceSpec& spec,
                      Language lang);

// Sentence list to paragraph: each sentence capitalized and terminated
// with a period, joined by single spaces.
std::string mk_text(const std::vector<std::string>& sentences);

// A realized tree or batch of trees.
struct RealizeResult {
  std::string text;
  std::vector<std::string> frames;  // frame per top-level clause
  bool empty_subject = false;
};

// Executes a grammar bundle. Holds the parsed linearizations and lexicons;
// trees are realized through the interpreted route (eval_lin), so the
// emitted grammar is what runs.
class RealizerEngine {
 public:
  explicit RealizerEngine(GrammarBundle bundle);

  // The index maps point into bundle_, so copying would alias the source.
  RealizerEngine(const RealizerEngine&) = delete;
  RealizerEngine& operator=(const RealizerEngine&) = delete;
  RealizerEngine(RealizerEngine&&) = default;
  RealizerEngine& operator=(RealizerEngine&&) = default;

  const GrammarBundle& bundle() const { return bundle_; }

  const FrameFunctionDecl* find_fun(const std::string& name) const;
  const LinDef* find_lin(const std::string& fun, Language lang) const;
  const LexiconEntry* find_verb(const std::string& name, Language lang) const;

  // Applies a frame function by name through the interpreted route: the
  // linearization that was emitted for the language is what runs. args are
  // positional in declaration order.
  ClauseRec apply(const std::string& fun, const std::vector<OptArg>& args,
                  const std::string& verb_name, Language lang) const;

  // Entry point for tree files: either a single tree object, rendered as a
  // bare clause, or {"text": [tree, ...]} rendered as a paragraph via
  // mk_text. "lang" and "tense" fields on the root override the defaults.
  // Tree format: {"function": name, "verb": lexicon name,
  //               "args": {FE category: phrase|tree|null}, "tense": ...,
  //               "adjuncts": [string, ...]}.
  // A phrase is {"text": ..., "number": "sg"|"pl", "person": 1|2|3,
  // "objform": ...}; VP and S arguments may instead be nested trees.
  RealizeResult realize(const nlohmann::json& root, Language default_lang,
                        Tense default_tense) const;

 private:
  struct BuiltClause {
    ClauseRec clause;
    Tense tense = Tense::Pres;
    std::string frame;
  };
  BuiltClause build_clause(const nlohmann::json& tree, Language lang,
                           Tense default_tense) const;
  OptArg build_arg(const nlohmann::json& value, const FEArg& arg,
                   Language lang, Tense default_tense) const;

  GrammarBundle bundle_;
  std::map<std::string, const FrameFunctionDecl*> funs_;
  std::map<std::pair<int, std::string>, const LinDef*> lins_;
  std::map<std::pair<int, std::string>, const LexiconEntry*> verbs_;
};

}  // namespace fngen

#endif  // FNGEN_REALIZER_H_
