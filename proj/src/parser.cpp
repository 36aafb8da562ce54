// Copyright 2026 The lttw Authors
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

#include "lttw/parser.hpp"

#include <cctype>

namespace lttw {

STermPtr make_sterm(STerm::Form form, std::string name, STermPtr a, STermPtr b,
                    SourceSpan span) {
  return std::make_shared<const STerm>(
      STerm{form, std::move(name), std::move(a), std::move(b), std::move(span)});
}

namespace {

enum class Tok {
  kIdent,
  kNumber,
  kString,
  kDotted,
  kLBrack,
  kRBrack,
  kLParen,
  kRParen,
  kColon,
  kComma,
  kSemi,
  kEq,
  kArrow,
  kHole,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

[[noreturn]] void syntax_error(const std::string& msg, SourceSpan span,
                               ErrorClass c = ErrorClass::kSyntaxError) {
  Diagnostic d;
  d.error_class = c;
  d.message = msg;
  d.rule = "script syntax";
  d.span = std::move(span);
  throw Error(std::move(d));
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Lexes one code line; `col0` is the 1-based column of line[0].
void lex_line(std::string_view line, int lineno, int col0,
              const std::string& file, std::vector<Token>& out) {
  auto span = [&](std::size_t b, std::size_t e) {
    return SourceSpan{file, lineno, col0 + static_cast<int>(b), lineno,
                      col0 + static_cast<int>(e)};
  };
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (static_cast<unsigned char>(c) >= 0x80) {
      syntax_error("non-ASCII character in script", span(i, i + 1));
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t b = i;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), span(b, b + 1)});
      ++i;
    };
    switch (c) {
      case '[': single(Tok::kLBrack); continue;
      case ']': single(Tok::kRBrack); continue;
      case '(': single(Tok::kLParen); continue;
      case ')': single(Tok::kRParen); continue;
      case ':': single(Tok::kColon); continue;
      case ',': single(Tok::kComma); continue;
      case ';': single(Tok::kSemi); continue;
      case '=': single(Tok::kEq); continue;
      case '?': single(Tok::kHole); continue;
      default: break;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->", span(b, b + 2)});
      i += 2;
      continue;
    }
    if (c == '"') {
      std::size_t e = line.find('"', i + 1);
      if (e == std::string_view::npos) {
        syntax_error("unterminated string literal", span(b, line.size()));
      }
      out.push_back({Tok::kString, std::string(line.substr(i + 1, e - i - 1)),
                     span(b, e + 1)});
      i = e + 1;
      continue;
    }
    if (c == '.' && i + 1 < line.size() && ident_start(line[i + 1])) {
      ++i;
      while (i < line.size() && ident_char(line[i])) ++i;
      out.push_back({Tok::kDotted, std::string(line.substr(b + 1, i - b - 1)),
                     span(b, i)});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({Tok::kNumber, std::string(line.substr(b, i - b)), span(b, i)});
      continue;
    }
    if (ident_start(c)) {
      while (i < line.size() && ident_char(line[i])) ++i;
      out.push_back({Tok::kIdent, std::string(line.substr(b, i - b)), span(b, i)});
      continue;
    }
    syntax_error(std::string("unexpected character '") + c + "'", span(b, b + 1));
  }
}

std::vector<Token> lex(std::string_view text, const std::string& file,
                       bool script) {
  std::vector<Token> out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++lineno;
    if (!script) {
      lex_line(line, lineno, 1, file, out);
    } else if (!line.empty() && line[0] == '>') {
      lex_line(line.substr(1), lineno, 2, file, out);
    }
    pos = nl + 1;
  }
  return out;
}

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  return SourceSpan{a.file, a.line, a.column, b.end_line, b.end_column};
}

class Parser {
 public:
  Parser(std::vector<Token> toks, SourceSpan end_span)
      : toks_(std::move(toks)) {
    toks_.push_back({Tok::kEnd, "", std::move(end_span)});
  }

  bool at_end() const { return peek().kind == Tok::kEnd; }

  Command command() {
    const Token& first = peek();
    Command c;
    if (first.kind == Tok::kLBrack) {
      bracket_command(c);
    } else if (first.kind == Tok::kIdent) {
      directive(c);
    } else {
      fail("expected '[' or a directive at the start of a command");
    }
    c.span = join(first.span, last_span_);
    if (!at_end()) fail("unexpected '" + peek().text + "' after command");
    return c;
  }

  STermPtr term() {
    STermPtr t = expr();
    if (!at_end()) fail("unexpected '" + peek().text + "' after term");
    return t;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (t.kind != Tok::kEnd) {
      ++pos_;
      last_span_ = t.span;
    }
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    syntax_error(msg, peek().span);
  }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) {
      std::string got = peek().kind == Tok::kEnd ? "end of command"
                                                 : "'" + peek().text + "'";
      fail(std::string("expected ") + what + ", found " + got);
    }
    return next();
  }
  bool is_keyword(const Token& t, std::string_view kw) const {
    return t.kind == Tok::kIdent && t.text == kw;
  }

  void bracket_command(Command& c) {
    expect(Tok::kLBrack, "'['");
    Token name = expect(Tok::kIdent, "a name");
    if (name.text == "rule") {
      c.kind = Command::Kind::kRule;
      binders(c.binders);
      c.term = expr();
      expect(Tok::kEq, "'=' in computation rule");
      c.rhs = expr();
      if (accept(Tok::kColon)) c.ascription = expr();
      expect(Tok::kRBrack, "']'");
      return;
    }
    check_name(name);
    c.name = name.text;
    binders(c.binders);
    if (accept(Tok::kColon)) {
      c.kind = Command::Kind::kDeclare;
      c.term = expr();
    } else if (accept(Tok::kEq)) {
      c.kind = Command::Kind::kDefine;
      c.term = expr();
      if (accept(Tok::kColon)) c.ascription = expr();
    } else {
      fail("expected ':' or '=' after the binders of '" + name.text + "'");
    }
    expect(Tok::kRBrack, "']'");
  }

  void check_name(const Token& t) const {
    static const char* kReserved[] = {"Type", "Prop", "El", "Prf", "rule"};
    for (const char* r : kReserved) {
      if (t.text == r) syntax_error("'" + t.text + "' is reserved", t.span);
    }
  }

  void directive(Command& c) {
    Token d = next();
    if (d.text == "Load") {
      c.kind = Command::Kind::kLoad;
      c.name = expect(Tok::kString, "a quoted path").text;
    } else if (d.text == "TypeOf") {
      c.kind = Command::Kind::kTypeOf;
      c.term = expr();
    } else if (d.text == "Reduce") {
      c.kind = Command::Kind::kReduce;
      c.term = expr();
    } else if (d.text == "Check") {
      c.kind = Command::Kind::kCheck;
      c.term = expr();
      expect(Tok::kColon, "':'");
      c.ascription = expr();
    } else if (d.text == "SetOption") {
      c.kind = Command::Kind::kSetOption;
      c.name = expect(Tok::kIdent, "an option name").text;
      Token v = next();
      if (v.kind != Tok::kIdent && v.kind != Tok::kNumber &&
          v.kind != Tok::kString) {
        syntax_error("expected an option value", v.span);
      }
      c.value = v.text;
    } else {
      syntax_error("unknown directive '" + d.text + "'", d.span);
    }
  }

  // Zero or more `[x, y : K]` groups.
  void binders(std::vector<Binder>& out) {
    while (peek().kind == Tok::kLBrack) binder_group(out);
  }

  void binder_group(std::vector<Binder>& out) {
    expect(Tok::kLBrack, "'['");
    std::vector<Token> names;
    do {
      Token n = expect(Tok::kIdent, "a binder name");
      check_name(n);
      names.push_back(n);
    } while (accept(Tok::kComma));
    STermPtr kind;
    if (accept(Tok::kColon)) {
      kind = expr();
      if (kind->form == STerm::Form::kHole) kind = nullptr;
    }
    expect(Tok::kRBrack, "']'");
    for (const auto& n : names) out.push_back({n.text, kind, n.span});
  }

  bool pi_ahead() const {
    if (peek().kind != Tok::kLParen) return false;
    std::size_t k = 1;
    while (true) {
      if (peek(k).kind != Tok::kIdent) return false;
      ++k;
      if (peek(k).kind == Tok::kColon) return true;
      if (peek(k).kind != Tok::kComma) return false;
      ++k;
    }
  }

  STermPtr expr() {
    if (peek().kind == Tok::kLBrack) return lambda();
    if (pi_ahead()) return pi();
    STermPtr lhs = app();
    if (accept(Tok::kArrow)) {
      STermPtr rhs = expr();
      return make_sterm(STerm::Form::kArrow, "", lhs, rhs, join(lhs->span, rhs->span));
    }
    return lhs;
  }

  STermPtr lambda() {
    SourceSpan start = peek().span;
    std::vector<Binder> bs;
    binders(bs);
    STermPtr body = expr();
    for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
      body = make_sterm(STerm::Form::kLam, it->name, it->kind, body,
                        join(start, body->span));
    }
    return body;
  }

  STermPtr pi() {
    SourceSpan start = peek().span;
    expect(Tok::kLParen, "'('");
    std::vector<std::string> names;
    do {
      Token n = expect(Tok::kIdent, "a binder name");
      check_name(n);
      names.push_back(n.text);
    } while (accept(Tok::kComma));
    expect(Tok::kColon, "':'");
    STermPtr dom = expr();
    expect(Tok::kRParen, "')'");
    STermPtr cod = expr();
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
      cod = make_sterm(STerm::Form::kPi, *it, dom, cod, join(start, cod->span));
    }
    return cod;
  }

  bool atom_ahead() const {
    switch (peek().kind) {
      case Tok::kIdent:
        return !is_keyword(peek(), "El") && !is_keyword(peek(), "Prf");
      case Tok::kNumber:
      case Tok::kHole:
      case Tok::kDotted:
      case Tok::kLParen:
        return true;
      default:
        return false;
    }
  }

  STermPtr app() {
    const Token& t = peek();
    if (is_keyword(t, "El") || is_keyword(t, "Prf")) {
      Token kw = next();
      STermPtr inner = app();
      return make_sterm(kw.text == "El" ? STerm::Form::kEl : STerm::Form::kPrf,
                        "", inner, nullptr, join(kw.span, inner->span));
    }
    STermPtr head = atom();
    while (true) {
      // A trailing abstraction or product extends as far right as possible.
      bool last = false;
      STermPtr arg;
      if (peek().kind == Tok::kLBrack) {
        arg = lambda();
        last = true;
      } else if (pi_ahead()) {
        arg = pi();
        last = true;
      } else if (atom_ahead()) {
        arg = atom();
      } else {
        break;
      }
      head = make_sterm(STerm::Form::kApp, "", head, arg, join(head->span, arg->span));
      if (last) break;
    }
    return head;
  }

  STermPtr atom() {
    Token t = next();
    switch (t.kind) {
      case Tok::kIdent:
        if (t.text == "Type") return make_sterm(STerm::Form::kType, "", nullptr, nullptr, t.span);
        if (t.text == "Prop") return make_sterm(STerm::Form::kProp, "", nullptr, nullptr, t.span);
        if (t.text == "rule") syntax_error("'rule' is reserved", t.span);
        return make_sterm(STerm::Form::kIdent, t.text, nullptr, nullptr, t.span);
      case Tok::kNumber:
        return make_sterm(STerm::Form::kNumeral, t.text, nullptr, nullptr, t.span);
      case Tok::kHole:
        return make_sterm(STerm::Form::kHole, "", nullptr, nullptr, t.span);
      case Tok::kDotted:
        return make_sterm(STerm::Form::kDotted, t.text, nullptr, nullptr, t.span);
      case Tok::kLParen: {
        STermPtr e = expr();
        expect(Tok::kRParen, "')'");
        return e;
      }
      case Tok::kEnd:
        syntax_error("unexpected end of command, expected a term", t.span);
      default:
        syntax_error("unexpected '" + t.text + "', expected a term", t.span);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceSpan last_span_;
};

SourceSpan end_of(std::string_view text, const std::string& file) {
  int line = 1;
  int col = 1;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return SourceSpan{file, line, col, line, col};
}

}  // namespace

std::vector<Command> parse_script(std::string_view text,
                                  const std::string& file) {
  std::vector<Token> toks = lex(text, file, true);
  std::vector<Command> out;
  std::vector<Token> group;
  for (auto& t : toks) {
    if (t.kind != Tok::kSemi) {
      group.push_back(std::move(t));
      continue;
    }
    if (group.empty()) syntax_error("empty command", t.span);
    Parser p(std::move(group), t.span);
    out.push_back(p.command());
    group.clear();
  }
  if (!group.empty()) {
    syntax_error("command is not terminated by ';'",
                 join(group.front().span, group.back().span),
                 ErrorClass::kUnterminatedCommand);
  }
  return out;
}

STermPtr parse_term(std::string_view text, const std::string& file) {
  std::vector<Token> toks = lex(text, file, false);
  for (const auto& t : toks) {
    if (t.kind == Tok::kSemi) syntax_error("unexpected ';' in term", t.span);
  }
  if (toks.empty()) syntax_error("empty term", end_of(text, file));
  Parser p(std::move(toks), end_of(text, file));
  return p.term();
}

std::string print_surface(const STermPtr& t) {
  if (!t) return "?";
  using F = STerm::Form;
  auto paren = [](const STermPtr& x) {
    std::string s = print_surface(x);
    bool atomic = x && (x->form == F::kIdent || x->form == F::kNumeral ||
                        x->form == F::kHole || x->form == F::kDotted ||
                        x->form == F::kType || x->form == F::kProp);
    return atomic ? s : "(" + s + ")";
  };
  switch (t->form) {
    case F::kIdent:
    case F::kNumeral:
      return t->name;
    case F::kHole:
      return "?";
    case F::kDotted:
      return "." + t->name;
    case F::kType:
      return "Type";
    case F::kProp:
      return "Prop";
    case F::kEl:
      return "El " + paren(t->a);
    case F::kPrf:
      return "Prf " + paren(t->a);
    case F::kApp: {
      std::string f = t->a->form == F::kApp ? print_surface(t->a) : paren(t->a);
      return f + " " + paren(t->b);
    }
    case F::kLam:
      return "[" + t->name + (t->a ? " : " + print_surface(t->a) : "") + "] " +
             print_surface(t->b);
    case F::kPi:
      return "(" + t->name + " : " + print_surface(t->a) + ") " + print_surface(t->b);
    case F::kArrow:
      return paren(t->a) + " -> " + print_surface(t->b);
  }
  return {};
}

}  // namespace lttw
