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

#include "fngen/grammar_parse.hpp"

#include <cctype>

namespace fngen {

namespace {

struct Token {
  enum Kind { Ident, Symbol, String, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& text, const std::string& source)
      : text_(text), source_(source) {
    Advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    Advance();
    return t;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(source_ + ":" + std::to_string(current_.line) + ":" +
                     std::to_string(current_.col) + ": " + message);
  }

  Token Expect(Token::Kind kind, const std::string& what) {
    if (current_.kind != kind) {
      Fail("expected " + what);
    }
    return next();
  }

  void ExpectSymbol(const std::string& symbol) {
    if (current_.kind != Token::Symbol || current_.text != symbol) {
      Fail("expected \"" + symbol + "\"");
    }
    Advance();
  }

  bool AtSymbol(const std::string& symbol) const {
    return current_.kind == Token::Symbol && current_.text == symbol;
  }

 private:
  static bool IsIdentChar(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
  }

  void Advance() {
    SkipSpace();
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::End;
      current_.text.clear();
      return;
    }
    unsigned char c = text_[pos_];
    if (c == '"') {
      Consume();
      std::string value;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') {
          Fail("unterminated string");
        }
        value += text_[pos_];
        Consume();
      }
      if (pos_ >= text_.size()) Fail("unterminated string");
      Consume();  // closing quote
      current_.kind = Token::String;
      current_.text = std::move(value);
      return;
    }
    if (IsIdentChar(c)) {
      std::string value;
      while (pos_ < text_.size() &&
             IsIdentChar(static_cast<unsigned char>(text_[pos_]))) {
        value += text_[pos_];
        Consume();
      }
      current_.kind = Token::Ident;
      current_.text = std::move(value);
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      Consume();
      Consume();
      current_.kind = Token::Symbol;
      current_.text = "->";
      return;
    }
    current_.kind = Token::Symbol;
    current_.text = std::string(1, static_cast<char>(c));
    Consume();
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Consume();
      } else if (c == '-' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Consume();
      } else {
        break;
      }
    }
  }

  void Consume() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::string source_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

Expr ParseApplication(Lexer& lex);

Expr ParseAtom(Lexer& lex) {
  if (lex.AtSymbol("(")) {
    lex.next();
    Expr inner = ParseApplication(lex);
    lex.ExpectSymbol(")");
    return inner;
  }
  Token t = lex.Expect(Token::Ident, "identifier");
  return atom(t.text);
}

Expr ParseApplication(Lexer& lex) {
  Token head = lex.Expect(Token::Ident, "identifier");
  Expr expr = atom(head.text);
  while (lex.peek().kind == Token::Ident || lex.AtSymbol("(")) {
    expr.args.push_back(ParseAtom(lex));
  }
  return expr;
}

Language LanguageFromSuffix(Lexer& lex, const std::string& name) {
  for (Language lang : {Language::En, Language::Sv}) {
    const std::string& suffix = lang_suffix(lang);
    if (name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) ==
            0) {
      return lang;
    }
  }
  lex.Fail("module name \"" + name + "\" has no language suffix (Eng, Swe)");
}

ParsedAbstract ParseAbstract(Lexer& lex) {
  ParsedAbstract out;
  out.name = lex.Expect(Token::Ident, "grammar name").text;
  lex.ExpectSymbol(";");
  while (lex.peek().kind != Token::End) {
    Token keyword = lex.Expect(Token::Ident, "cat or fun");
    if (keyword.text == "cat") {
      out.cats.push_back(lex.Expect(Token::Ident, "category name").text);
      lex.ExpectSymbol(";");
    } else if (keyword.text == "fun") {
      std::string name = lex.Expect(Token::Ident, "function name").text;
      lex.ExpectSymbol(":");
      std::vector<std::string> chain;
      chain.push_back(lex.Expect(Token::Ident, "type name").text);
      while (lex.AtSymbol("->")) {
        lex.next();
        chain.push_back(lex.Expect(Token::Ident, "type name").text);
      }
      lex.ExpectSymbol(";");
      if (chain.size() == 1) {
        auto vtype = verb_type_from_name(chain[0]);
        if (!vtype) {
          lex.Fail("lexicon signature " + name +
                   " must have a verb type, got " + chain[0]);
        }
        out.lex_sigs.push_back({name, *vtype});
      } else {
        if (chain.back() != "Clause") {
          lex.Fail("function " + name + " must return Clause");
        }
        auto vtype = verb_type_from_name(chain[chain.size() - 2]);
        if (!vtype) {
          lex.Fail("function " + name +
                   " must take a verb type before Clause");
        }
        AbstractSig sig;
        sig.name = name;
        sig.verb_type = *vtype;
        sig.arg_cats.assign(chain.begin(), chain.end() - 2);
        out.funs.push_back(std::move(sig));
      }
    } else {
      lex.Fail("expected cat or fun, got \"" + keyword.text + "\"");
    }
  }
  return out;
}

ParsedConcrete ParseConcrete(Lexer& lex) {
  ParsedConcrete out;
  out.name = lex.Expect(Token::Ident, "module name").text;
  out.language = LanguageFromSuffix(lex, out.name);
  Token of = lex.Expect(Token::Ident, "of");
  if (of.text != "of") lex.Fail("expected \"of\"");
  out.of = lex.Expect(Token::Ident, "abstract name").text;
  lex.ExpectSymbol(";");
  while (lex.peek().kind != Token::End) {
    Token keyword = lex.Expect(Token::Ident, "lin");
    if (keyword.text != "lin") {
      lex.Fail("expected lin, got \"" + keyword.text + "\"");
    }
    LinDef lin;
    lin.fun = lex.Expect(Token::Ident, "function name").text;
    while (lex.peek().kind == Token::Ident) {
      lin.params.push_back(lex.next().text);
    }
    lex.ExpectSymbol("=");
    lex.ExpectSymbol("{");
    for (int field = 0; field < 2; ++field) {
      Token label = lex.Expect(Token::Ident, "np or vp");
      lex.ExpectSymbol("=");
      Expr value = ParseApplication(lex);
      if (label.text == "np") {
        lin.np = std::move(value);
      } else if (label.text == "vp") {
        lin.vp = std::move(value);
      } else {
        lex.Fail("unknown clause field \"" + label.text + "\"");
      }
      if (field == 0) lex.ExpectSymbol(";");
    }
    lex.ExpectSymbol("}");
    lex.ExpectSymbol(";");
    out.lins.push_back(std::move(lin));
  }
  return out;
}

ParsedLexicon ParseLexicon(Lexer& lex) {
  ParsedLexicon out;
  out.name = lex.Expect(Token::Ident, "module name").text;
  Token keyword = lex.Expect(Token::Ident, "for");
  if (keyword.text != "for") lex.Fail("expected \"for\"");
  Token code = lex.Expect(Token::Ident, "language code");
  auto lang = lang_from_code(code.text);
  if (!lang) lex.Fail("unknown language \"" + code.text + "\"");
  out.language = *lang;
  lex.ExpectSymbol(";");
  while (lex.peek().kind != Token::End) {
    Token lexkw = lex.Expect(Token::Ident, "lex");
    if (lexkw.text != "lex") lex.Fail("expected lex, got \"" + lexkw.text + "\"");
    std::string name = lex.Expect(Token::Ident, "entry name").text;

    LexiconEntry entry;
    entry.language = out.language;
    // Entry names are lemma_VerbType_Frame; the frame part may itself
    // contain underscores, the lemma may not.
    size_t first = name.find('_');
    size_t second = first == std::string::npos ? std::string::npos
                                               : name.find('_', first + 1);
    if (second == std::string::npos) {
      lex.Fail("entry name \"" + name + "\" is not lemma_Vtype_Frame");
    }
    entry.lemma = name.substr(0, first);
    auto vtype = verb_type_from_name(name.substr(first + 1, second - first - 1));
    if (!vtype) {
      lex.Fail("entry name \"" + name + "\" has no verb type");
    }
    entry.verb_type = *vtype;
    entry.frame = name.substr(second + 1);

    lex.ExpectSymbol("=");
    Token verbkw = lex.Expect(Token::Ident, "verb");
    if (verbkw.text != "verb") lex.Fail("expected \"verb\"");
    while (lex.peek().kind == Token::String) {
      entry.forms.push_back(lex.next().text);
    }
    if (lex.peek().kind == Token::Ident && lex.peek().text == "compl") {
      lex.next();
      entry.complement_marker = lex.Expect(Token::String, "marker").text;
    }
    lex.ExpectSymbol(";");
    if (entry.forms.size() != inflection_form_count(out.language)) {
      lex.Fail("entry " + name + " must have " +
               std::to_string(inflection_form_count(out.language)) +
               " forms");
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

ParsedGrammarFile parse_grammar(const std::string& text,
                                const std::string& source_name) {
  Lexer lex(text, source_name);
  Token header = lex.Expect(Token::Ident, "file header");
  if (header.text == "abstract") return ParseAbstract(lex);
  if (header.text == "concrete") return ParseConcrete(lex);
  if (header.text == "lexicon") return ParseLexicon(lex);
  lex.Fail("expected abstract, concrete or lexicon header, got \"" +
           header.text + "\"");
}

Expr parse_expr(const std::string& text) {
  Lexer lex(text, "<expr>");
  Expr expr = ParseApplication(lex);
  if (lex.peek().kind != Token::End) {
    lex.Fail("trailing tokens after expression");
  }
  return expr;
}

}  // namespace fngen
