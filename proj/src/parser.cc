// Copyright 2026 The strucres Authors
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

#include "strucres/parser.h"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace strucres {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kAtom, kVar, kLParen, kRParen, kComma, kDot, kNeck, kQuery, kSlash, kEof };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::kAtom: return "symbol";
    case Tok::kVar: return "variable";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kNeck: return "':-'";
    case Tok::kQuery: return "'?-'";
    case Tok::kSlash: return "'/'";
    case Tok::kEof: return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      Token t{Tok::kEof, "", line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        bool digits = std::isdigit(static_cast<unsigned char>(c));
        while (pos_ < src_.size() &&
               (digits ? std::isdigit(static_cast<unsigned char>(src_[pos_]))
                       : std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                             src_[pos_] == '_')) {
          advance();
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        t.kind = std::isupper(static_cast<unsigned char>(c)) || c == '_'
                     ? Tok::kVar
                     : Tok::kAtom;
      } else if (c == '(') {
        t.kind = Tok::kLParen, advance();
      } else if (c == ')') {
        t.kind = Tok::kRParen, advance();
      } else if (c == ',') {
        t.kind = Tok::kComma, advance();
      } else if (c == '.') {
        t.kind = Tok::kDot, advance();
      } else if (c == '/') {
        t.kind = Tok::kSlash, advance();
      } else if (starts_with(":-")) {
        t.kind = Tok::kNeck, advance(), advance();
      } else if (starts_with("<-")) {
        t.kind = Tok::kNeck, advance(), advance();
      } else if (starts_with("?-")) {
        t.kind = Tok::kQuery, advance(), advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  ParsedProgram program() {
    ParsedProgram out;
    std::vector<Clause> clauses;
    while (peek().kind != Tok::kEof) {
      if (peek().kind == Tok::kNeck) {
        directive(out.typing);
        continue;
      }
      anon_ = 0;
      Clause c{atom(), {}};
      if (accept(Tok::kNeck)) c.body = atoms();
      expect(Tok::kDot);
      clauses.push_back(std::move(c));
    }
    out.program = Program(std::move(clauses));
    out.signature = infer_signature(out.program);
    for (const Predicate& p : out.typing.coinductive()) {
      out.signature.add_predicate(p.name, p.arity);
    }
    return out;
  }

  GoalClause query() {
    accept(Tok::kQuery);
    if (peek().kind == Tok::kDot || peek().kind == Tok::kEof) {
      throw error("empty query");
    }
    GoalClause g{atoms()};
    accept(Tok::kDot);
    expect(Tok::kEof);
    Signature sig;
    for (const Term& t : g.body) sig.add_atom(t);
    return g;
  }

  Term single_term() {
    Term t = term();
    expect(Tok::kEof);
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  ParseError error(const std::string& what) const {
    return ParseError(what + " near " + describe(peek().kind), peek().line,
                      peek().column);
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Token expect(Tok k) {
    if (peek().kind != k) {
      throw error(std::string("expected ") + describe(k));
    }
    return toks_[pos_++];
  }

  void directive(TypingFunction& ty) {
    expect(Tok::kNeck);
    Token kw = expect(Tok::kAtom);
    if (kw.text != "coinductive") {
      throw ParseError("unknown directive '" + kw.text + "'", kw.line, kw.column);
    }
    do {
      Token name = expect(Tok::kAtom);
      expect(Tok::kSlash);
      Token n = expect(Tok::kAtom);
      std::size_t arity = 0;
      auto [p, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), arity);
      if (ec != std::errc() || p != n.text.data() + n.text.size()) {
        throw ParseError("arity must be a number", n.line, n.column);
      }
      ty.mark_coinductive({name.text, arity});
    } while (accept(Tok::kComma));
    expect(Tok::kDot);
  }

  std::vector<Term> atoms() {
    std::vector<Term> out{atom()};
    while (accept(Tok::kComma)) out.push_back(atom());
    return out;
  }

  Term atom() {
    if (peek().kind != Tok::kAtom) throw error("expected an atom");
    return term();
  }

  Term term() {
    if (peek().kind == Tok::kVar) {
      Token v = toks_[pos_++];
      if (v.text == "_") return Term::variable("_G" + std::to_string(++anon_));
      return Term::variable(v.text);
    }
    Token f = expect(Tok::kAtom);
    std::vector<Term> args;
    if (accept(Tok::kLParen)) {
      args.push_back(term());
      while (accept(Tok::kComma)) args.push_back(term());
      expect(Tok::kRParen);
    }
    return Term::app(f.text, std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int anon_ = 0;
};

}  // namespace

ParsedProgram parse_program(std::string_view text) {
  return Parser(text).program();
}

GoalClause parse_query(std::string_view text) { return Parser(text).query(); }

Term parse_term(std::string_view text) { return Parser(text).single_term(); }

std::string to_source(const Program& p, const TypingFunction& ty) {
  std::string out;
  for (const Predicate& pr : ty.coinductive()) {
    out += ":- coinductive " + pr.to_string() + ".\n";
  }
  for (const Clause& c : p) out += to_source(c) + "\n";
  return out;
}

}  // namespace strucres
