#include <cctype>
#include <utility>

#include "renlib/io.hpp"

namespace renlib {

std::string to_string(const SourceSpan& span) {
  return span.file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column);
}

SyntaxError::SyntaxError(SourceSpan span, const std::string& message)
    : Error(to_string(span) + ": syntax error: " + message), span_(std::move(span)) {}

ReservedVariable::ReservedVariable(SourceSpan span, std::string name)
    : Error(to_string(span) + ": variable name " + name + " uses the reserved prefix _G"),
      span_(std::move(span)),
      name_(std::move(name)) {}

namespace {

enum class Tok {
  Name,      // lowercase or digit initial
  Variable,  // uppercase or '_' initial
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Bar,
  Comma,
  Dot,
  Neck,
  Slash,
  Equals,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      SourceSpan at{file_, line_, col_, 1};
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      const char c = src_[pos_];
      if (is_ident_char(c)) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
        std::string text(src_.substr(start, pos_ - start));
        at.length = text.size();
        const bool var = std::isupper(static_cast<unsigned char>(c)) || c == '_';
        out.push_back({var ? Tok::Variable : Tok::Name, std::move(text), at});
        continue;
      }
      if (c == ':' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        advance();
        advance();
        at.length = 2;
        out.push_back({Tok::Neck, ":-", at});
        continue;
      }
      Tok kind;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '|': kind = Tok::Bar; break;
        case ',': kind = Tok::Comma; break;
        case '.': kind = Tok::Dot; break;
        case '/': kind = Tok::Slash; break;
        case '=': kind = Tok::Equals; break;
        default:
          throw SyntaxError(at, std::string("unexpected character '") + c + "'");
      }
      advance();
      out.push_back({kind, std::string(1, c), at});
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Name: return "name";
    case Tok::Variable: return "variable";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Bar: return "'|'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Neck: return "':-'";
    case Tok::Slash: return "'/'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& opts)
      : toks_(Lexer(src, opts.file).run()), opts_(opts) {}

  bool at(Tok k) const { return toks_[pos_].kind == k; }
  const Token& peek() const { return toks_[pos_]; }

  const Token& expect(Tok k) {
    if (!at(k))
      throw SyntaxError(peek().span, std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
    return toks_[pos_++];
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  void expect_end() { expect(Tok::End); }

  Term term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Variable:
        ++pos_;
        return Term::variable(checked_var(t));
      case Tok::Name: {
        ++pos_;
        if (accept(Tok::LParen)) {
          std::vector<Term> args{term()};
          while (accept(Tok::Comma)) args.push_back(term());
          expect(Tok::RParen);
          return Term::compound(t.text, std::move(args));
        }
        if (math_variable(t.text)) return Term::variable(checked_var(t));
        return Term::constant(t.text);
      }
      case Tok::LBracket:
        ++pos_;
        return list_rest();
      default:
        throw SyntaxError(t.span, std::string("expected a term, found ") + describe(t.kind));
    }
  }

  Subst subst() {
    const bool brace = at(Tok::LBrace);
    if (!accept(Tok::LBrace)) expect(Tok::LParen);
    const Tok close = brace ? Tok::RBrace : Tok::RParen;
    std::vector<Binding> bindings;
    while (!at(close)) {
      const Token& v = peek();
      Term lhs = term();
      if (!lhs.is_var()) throw SyntaxError(v.span, "left side of a binding must be a variable");
      expect(Tok::Slash);
      Term rhs = term();
      for (const auto& b : bindings)
        if (b.var == lhs.var()) throw SyntaxError(v.span, "variable " + v.text + " bound twice");
      bindings.push_back({lhs.var(), std::move(rhs)});
      if (!at(close)) accept(Tok::Comma);
    }
    expect(close);
    return Subst(std::move(bindings));
  }

  std::vector<Term> conjunction() {
    std::vector<Term> out{atom()};
    while (accept(Tok::Comma)) out.push_back(atom());
    return out;
  }

  Term atom() {
    const Token& t = peek();
    Term a = term();
    if (a.is_var()) throw SyntaxError(t.span, "a variable cannot be used as an atom");
    return a;
  }

  Clause clause() {
    Clause k{atom(), {}};
    if (accept(Tok::Neck)) k.body = conjunction();
    return k;
  }

 private:
  bool math_variable(const std::string& name) const {
    return opts_.style == VarStyle::Math && !name.empty() && name[0] >= 'u' && name[0] <= 'z';
  }

  Var checked_var(const Token& t) {
    if (t.text == "_") throw SyntaxError(t.span, "anonymous variable '_' is not supported; name it");
    if (!opts_.allow_generated && t.text.starts_with(kGeneratedPrefix))
      throw ReservedVariable(t.span, t.text);
    return Var(t.text);
  }

  Term list_rest() {
    if (accept(Tok::RBracket)) return Term::nil();
    std::vector<Term> items{term()};
    while (accept(Tok::Comma)) items.push_back(term());
    Term tail = accept(Tok::Bar) ? term() : Term::nil();
    expect(Tok::RBracket);
    return Term::list(std::move(items), std::move(tail));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseOptions& opts_;
};

}  // namespace

Term parse_term(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  Term t = p.term();
  p.expect_end();
  return t;
}

Subst parse_subst(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  Subst s = p.subst();
  p.expect_end();
  return s;
}

Goal parse_goal(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  Goal g;
  if (!p.at(Tok::End)) g.atoms = p.conjunction();
  p.accept(Tok::Dot);
  p.expect_end();
  return g;
}

Clause parse_clause(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  Clause k = p.clause();
  p.accept(Tok::Dot);
  p.expect_end();
  return k;
}

Program parse_program(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  Program prog;
  while (!p.at(Tok::End)) {
    prog.clauses.push_back(p.clause());
    p.expect(Tok::Dot);
  }
  return prog;
}

}  // namespace renlib
