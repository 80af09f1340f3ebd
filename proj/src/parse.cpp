#include "polsearch/parse.hpp"

#include <cctype>
#include <vector>

namespace polsearch {

namespace {

enum class Tok {
  Ident, Num,
  Arrow, AndOp, OrOp, Cons, Turnstile, DArrow, Bar,
  LParen, RParen, LBrack, RBrack, Comma, Colon, Dot, At, Plus, Minus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int num = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : src_(text) { tokenize(); }
  const std::vector<Token>& tokens() const { return toks_; }

 private:
  void tokenize() {
    std::size_t i = 0;
    int line = 1, col = 1;
    auto push = [&](Tok k, std::string t, int n = 0) {
      toks_.push_back(Token{k, std::move(t), n, line, col});
    };
    while (i < src_.size()) {
      char c = src_[i];
      if (c == '\n') { ++i; ++line; col = 1; continue; }
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; ++col; continue; }
      // A middle dot marks an empty context; treat it as a plain dot.
      if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < src_.size() &&
          static_cast<unsigned char>(src_[i + 1]) == 0xB7) {
        push(Tok::Dot, ".");
        i += 2; col += 1;
        continue;
      }
      auto two = [&](char a, char b) {
        return c == a && i + 1 < src_.size() && src_[i + 1] == b;
      };
      if (two('-', '>')) { push(Tok::Arrow, "->"); i += 2; col += 2; continue; }
      if (two('/', '\\')) { push(Tok::AndOp, "/\\"); i += 2; col += 2; continue; }
      if (two('\\', '/')) { push(Tok::OrOp, "\\/"); i += 2; col += 2; continue; }
      if (two(':', ':')) { push(Tok::Cons, "::"); i += 2; col += 2; continue; }
      if (two('|', '-')) { push(Tok::Turnstile, "|-"); i += 2; col += 2; continue; }
      if (two('=', '>')) { push(Tok::DArrow, "=>"); i += 2; col += 2; continue; }
      switch (c) {
        case '|': push(Tok::Bar, "|"); ++i; ++col; continue;
        case '(': push(Tok::LParen, "("); ++i; ++col; continue;
        case ')': push(Tok::RParen, ")"); ++i; ++col; continue;
        case '[': push(Tok::LBrack, "["); ++i; ++col; continue;
        case ']': push(Tok::RBrack, "]"); ++i; ++col; continue;
        case ',': push(Tok::Comma, ","); ++i; ++col; continue;
        case ':': push(Tok::Colon, ":"); ++i; ++col; continue;
        case '.': push(Tok::Dot, "."); ++i; ++col; continue;
        case '@': push(Tok::At, "@"); ++i; ++col; continue;
        case '+': push(Tok::Plus, "+"); ++i; ++col; continue;
        case '-': push(Tok::Minus, "-"); ++i; ++col; continue;
        default: break;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        std::string t = src_.substr(i, j - i);
        push(Tok::Num, t, std::stoi(t));
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' ||
                src_[j] == '\''))
          ++j;
        push(Tok::Ident, src_.substr(i, j - i));
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    toks_.push_back(Token{Tok::End, "", 0, line, col});
  }

  std::string src_;
  std::vector<Token> toks_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  // -- token plumbing -------------------------------------------------------

  const Token& peek(int ahead = 0) const {
    std::size_t i = pos_ + ahead;
    if (i >= lex_.tokens().size()) i = lex_.tokens().size() - 1;
    return lex_.tokens()[i];
  }

  Token next() { return lex_.tokens()[pos_ < lex_.tokens().size() - 1 ? pos_++ : pos_]; }

  bool at(Tok k) const { return peek().kind == k; }

  bool at_keyword(const std::string& kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail("expected " + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " (got '" + (peek().kind == Tok::End ? "end of input" : peek().text) +
                         "')",
                     peek().line, peek().col);
  }

  void done() {
    if (!at(Tok::End)) fail("trailing input");
  }

  // -- formulas -------------------------------------------------------------

  PForm pformula() {
    PForm lhs = pformula_or();
    if (at(Tok::Arrow)) {
      next();
      PForm rhs = pformula();
      return wrap([&] { return PFormula::imp(lhs, rhs); });
    }
    return lhs;
  }

  IForm iformula() {
    IForm lhs = iformula_or();
    if (at(Tok::Arrow)) {
      next();
      return IFormula::iimp(lhs, iformula());
    }
    return lhs;
  }

  // -- sequents -------------------------------------------------------------

  Sequent ljp_sequent() {
    Context g = ljp_context();
    if (at(Tok::LBrack)) {
      next();
      PForm n = pformula();
      expect(Tok::RBrack, "]");
      expect(Tok::Turnstile, "|-");
      PForm r = pformula();
      return wrap([&] { return Sequent::focus_l(g, n, r); });
    }
    if (at(Tok::Turnstile)) {
      next();
      if (at(Tok::LBrack)) {
        next();
        PForm p = pformula();
        expect(Tok::RBrack, "]");
        return wrap([&] { return Sequent::focus_r(g, p); });
      }
      PForm a = pformula();
      return wrap([&] { return Sequent::stable(g, a); });
    }
    if (at(Tok::Bar)) {
      next();
      PForm p = pformula();
      expect(Tok::DArrow, "=>");
      PForm a = pformula();
      return wrap([&] { return Sequent::invert_l(g, p, a); });
    }
    if (at(Tok::DArrow)) {
      next();
      PForm n = pformula();
      return wrap([&] { return Sequent::invert_r(g, n); });
    }
    fail("expected a sequent tag (|-, =>, |, or [)");
  }

  LjtSequent ljt_sequent() {
    IContext g = ljt_context();
    if (at(Tok::LBrack)) {
      next();
      IForm a = iformula();
      expect(Tok::RBrack, "]");
      expect(Tok::Turnstile, "|-");
      IForm r = iformula();
      return wrap([&] { return LjtSequent::focus_l(g, a, r); });
    }
    if (at(Tok::Turnstile)) {
      next();
      IForm r = iformula();
      return wrap([&] { return LjtSequent::stable(g, r); });
    }
    if (at(Tok::DArrow)) {
      next();
      IForm a = iformula();
      return LjtSequent::invert(g, a);
    }
    fail("expected a sequent tag (|-, =>, or [)");
  }

  // -- terms ----------------------------------------------------------------

  TermPtr ljp_any() {
    if (at(Tok::Num)) {
      int i = take_index();
      expect(Tok::Cons, "::");
      return wrap([&] { return LjpTerm::cons_i(i, ljp_spine()); });
    }
    TermPtr head = ljp_primary();
    if (at(Tok::Cons)) {
      next();
      if (head->sort() != Sort::Value) fail("only values extend spines with ::");
      TermPtr tail = ljp_spine();
      return wrap([&] { return LjpTerm::cons_v(head, tail); });
    }
    return head;
  }

  LjtPtr ljt_any() {
    if (at(Tok::Num)) {
      int i = take_index();
      expect(Tok::Cons, "::");
      return wrap([&] { return LjtTerm::cons_i(i, ljt_spine()); });
    }
    if (at_keyword("nil")) {
      next();
      return LjtTerm::nil();
    }
    if (at_keyword("abort")) {
      next();
      expect(Tok::At, "@");
      IForm r = iformula();
      return wrap([&] { return LjtTerm::abort(r); });
    }
    if (at(Tok::LBrack)) return ljt_copair();
    LjtPtr t = ljt_term_only();
    if (at(Tok::Cons)) {
      next();
      LjtPtr tail = ljt_spine();
      return wrap([&] { return LjtTerm::cons_t(t, tail); });
    }
    return t;
  }

 private:
  template <class Fn>
  auto wrap(Fn fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const SyntaxError& e) {
      throw ParseError(e.what(), peek().line, peek().col);
    }
  }

  int take_index() {
    Token t = expect(Tok::Num, "an index");
    if (t.num != 1 && t.num != 2) throw ParseError("index must be 1 or 2", t.line, t.col);
    return t.num;
  }

  std::string ident(const std::string& what) { return expect(Tok::Ident, what).text; }

  static bool is_keyword(const std::string& s) {
    static const char* kws[] = {"up", "down", "bot", "nil", "thunk", "cothunk", "lam",
                                "pair", "ea", "ep", "dlv", "ret", "coret", "abort",
                                "inj1", "inj2", "sum", "gfp"};
    for (const char* k : kws)
      if (s == k) return true;
    return false;
  }

  std::string name_ident(const std::string& what) {
    Token t = expect(Tok::Ident, what);
    if (is_keyword(t.text)) throw ParseError("'" + t.text + "' is reserved", t.line, t.col);
    return t.text;
  }

  PForm pformula_or() {
    PForm lhs = pformula_and();
    if (at(Tok::OrOp)) {
      next();
      PForm rhs = pformula_or();
      return wrap([&] { return PFormula::or_p(lhs, rhs); });
    }
    return lhs;
  }

  PForm pformula_and() {
    PForm lhs = pformula_prefix();
    if (at(Tok::AndOp)) {
      next();
      PForm rhs = pformula_and();
      return wrap([&] { return PFormula::and_n(lhs, rhs); });
    }
    return lhs;
  }

  PForm pformula_prefix() {
    if (at_keyword("up")) {
      next();
      return wrap([&] { return PFormula::up(pformula_prefix()); });
    }
    if (at_keyword("down")) {
      next();
      return wrap([&] { return PFormula::down(pformula_prefix()); });
    }
    if (at_keyword("bot")) {
      next();
      return PFormula::bot();
    }
    if (at(Tok::LParen)) {
      next();
      PForm f = pformula();
      expect(Tok::RParen, ")");
      return f;
    }
    if (at(Tok::Ident)) {
      std::string name = name_ident("an atom");
      if (at(Tok::Plus)) {
        next();
        return PFormula::pos_atom(name);
      }
      if (at(Tok::Minus)) {
        next();
        return PFormula::neg_atom(name);
      }
      fail("missing polarity marker on atom '" + name + "' (write " + name + "+ or " + name + "-)");
    }
    fail("expected a formula");
  }

  IForm iformula_or() {
    IForm lhs = iformula_and();
    if (at(Tok::OrOp)) {
      next();
      return IFormula::ior(lhs, iformula_or());
    }
    return lhs;
  }

  IForm iformula_and() {
    IForm lhs = iformula_atom();
    if (at(Tok::AndOp)) {
      next();
      return IFormula::iand(lhs, iformula_and());
    }
    return lhs;
  }

  IForm iformula_atom() {
    if (at_keyword("bot")) {
      next();
      return IFormula::ibot();
    }
    if (at(Tok::LParen)) {
      next();
      IForm f = iformula();
      expect(Tok::RParen, ")");
      return f;
    }
    if (at(Tok::Ident)) return IFormula::iatom(name_ident("an atom"));
    fail("expected a formula");
  }

  bool at_binding() const {
    return peek().kind == Tok::Ident && !is_keyword(peek().text) && peek(1).kind == Tok::Colon;
  }

  Context ljp_context() {
    Context g;
    if (at(Tok::Dot)) {
      next();
      return g;
    }
    while (at_binding()) {
      std::string name = name_ident("a variable");
      expect(Tok::Colon, ":");
      PForm f = pformula();
      g = wrap([&] {
        if (!f->is_left())
          throw SyntaxError("context binding " + name + ": " + to_string(f) +
                            " is not a left formula (bind z:a+ or x:N)");
        return g.extended(name, f);
      });
      if (at(Tok::Comma)) {
        next();
        continue;
      }
      break;
    }
    return g;
  }

  IContext ljt_context() {
    IContext g;
    if (at(Tok::Dot)) {
      next();
      return g;
    }
    while (at_binding()) {
      std::string name = name_ident("a variable");
      expect(Tok::Colon, ":");
      IForm f = iformula();
      g = wrap([&] { return g.extended(name, f); });
      if (at(Tok::Comma)) {
        next();
        continue;
      }
      break;
    }
    return g;
  }

  TermPtr ljp_spine() {
    TermPtr s = ljp_any();
    if (s->sort() != Sort::Spine) fail("expected a spine");
    return s;
  }

  TermPtr ljp_of_sort(Sort want, const char* what) {
    TermPtr t = ljp_any();
    if (t->sort() != want) fail(std::string("expected ") + what);
    return t;
  }

  TermPtr ljp_parenthesized(Sort want, const char* what) {
    expect(Tok::LParen, "(");
    TermPtr t = ljp_of_sort(want, what);
    expect(Tok::RParen, ")");
    return t;
  }

  TermPtr ljp_primary() {
    if (at_keyword("thunk")) {
      next();
      return LjpTerm::thunk(ljp_parenthesized(Sort::Term, "a term"));
    }
    if (at_keyword("inj1") || at_keyword("inj2")) {
      int i = peek().text == "inj1" ? 1 : 2;
      next();
      expect(Tok::LBrack, "[");
      PForm other = pformula();
      expect(Tok::RBrack, "]");
      TermPtr v = ljp_parenthesized(Sort::Value, "a value");
      return wrap([&] { return LjpTerm::inj(i, other, v); });
    }
    if (at_keyword("ea")) {
      next();
      return LjpTerm::ea(ljp_parenthesized(Sort::Expr, "a stable expression"));
    }
    if (at_keyword("ep")) {
      next();
      return LjpTerm::ep(ljp_parenthesized(Sort::Expr, "a stable expression"));
    }
    if (at_keyword("lam")) {
      next();
      return LjpTerm::lam(ljp_parenthesized(Sort::Coterm, "a co-term"));
    }
    if (at_keyword("pair")) {
      next();
      expect(Tok::LParen, "(");
      TermPtr t1 = ljp_of_sort(Sort::Term, "a term");
      expect(Tok::Comma, ",");
      TermPtr t2 = ljp_of_sort(Sort::Term, "a term");
      expect(Tok::RParen, ")");
      return LjpTerm::pair(t1, t2);
    }
    if (at_keyword("nil")) {
      next();
      return LjpTerm::nil();
    }
    if (at_keyword("cothunk")) {
      next();
      return LjpTerm::cothunk(ljp_parenthesized(Sort::Coterm, "a co-term"));
    }
    if (at_keyword("abort")) {
      next();
      expect(Tok::At, "@");
      PForm a = pformula();
      return LjpTerm::abort(a);
    }
    if (at(Tok::LBrack)) {
      next();
      TermPtr p1 = ljp_of_sort(Sort::Coterm, "a co-term");
      expect(Tok::Comma, ",");
      TermPtr p2 = ljp_of_sort(Sort::Coterm, "a co-term");
      expect(Tok::RBrack, "]");
      return LjpTerm::copair(p1, p2);
    }
    if (at_keyword("dlv")) {
      next();
      return LjpTerm::dlv(ljp_parenthesized(Sort::Term, "a term"));
    }
    if (at_keyword("ret")) {
      next();
      return LjpTerm::ret(ljp_parenthesized(Sort::Value, "a value"));
    }
    if (at_keyword("coret")) {
      next();
      std::string x = name_ident("a variable");
      return LjpTerm::coret(x, ljp_parenthesized(Sort::Spine, "a spine"));
    }
    if (at(Tok::Ident)) {
      std::string name = name_ident("a variable");
      if (at(Tok::At)) {
        next();
        PForm ann = pformula();
        expect(Tok::Dot, ".");
        TermPtr e = ljp_of_sort(Sort::Expr, "a stable expression");
        return wrap([&]() -> TermPtr {
          if (ann->kind == PKind::PosAtom) return LjpTerm::bind_pos(name, ann, e);
          if (ann->is_negative()) return LjpTerm::bind_neg(name, ann, e);
          throw SyntaxError("binder annotation must be a positive atom or a negative formula");
        });
      }
      return LjpTerm::pos_var(name);
    }
    fail("expected a proof term");
  }

  LjtPtr ljt_spine() {
    LjtPtr s = ljt_any();
    if (s->sort() != LjtSort::Spine) fail("expected a spine");
    return s;
  }

  LjtPtr ljt_copair() {
    expect(Tok::LBrack, "[");
    std::string x1 = name_ident("a variable");
    expect(Tok::At, "@");
    IForm a1 = iformula();
    expect(Tok::Dot, ".");
    LjtPtr e1 = ljt_expr_only();
    expect(Tok::Comma, ",");
    std::string x2 = name_ident("a variable");
    expect(Tok::At, "@");
    IForm a2 = iformula();
    expect(Tok::Dot, ".");
    LjtPtr e2 = ljt_expr_only();
    expect(Tok::RBrack, "]");
    return wrap([&] { return LjtTerm::copair(x1, a1, e1, x2, a2, e2); });
  }

  LjtPtr ljt_expr_only() {
    LjtPtr t = ljt_term_only();
    if (!t->is_expression()) fail("expected an expression");
    return t;
  }

  LjtPtr ljt_term_only() {
    if (at_keyword("lam")) {
      next();
      std::string x = name_ident("a variable");
      expect(Tok::At, "@");
      IForm a = iformula();
      expect(Tok::Dot, ".");
      LjtPtr body = ljt_term_only();
      return wrap([&] { return LjtTerm::lam(x, a, body); });
    }
    if (at_keyword("pair")) {
      next();
      expect(Tok::LParen, "(");
      LjtPtr t1 = ljt_term_only();
      expect(Tok::Comma, ",");
      LjtPtr t2 = ljt_term_only();
      expect(Tok::RParen, ")");
      return LjtTerm::pair(t1, t2);
    }
    if (at_keyword("inj1") || at_keyword("inj2")) {
      int i = peek().text == "inj1" ? 1 : 2;
      next();
      expect(Tok::LBrack, "[");
      IForm other = iformula();
      expect(Tok::RBrack, "]");
      expect(Tok::LParen, "(");
      LjtPtr t = ljt_term_only();
      expect(Tok::RParen, ")");
      return wrap([&] { return LjtTerm::inj(i, other, t); });
    }
    if (at(Tok::Ident) && !is_keyword(peek().text)) {
      std::string x = name_ident("a variable");
      expect(Tok::LParen, "(");
      LjtPtr s = ljt_spine();
      expect(Tok::RParen, ")");
      return LjtTerm::select(x, s);
    }
    fail("expected a term");
  }

  Lexer lex_;
  std::size_t pos_ = 0;
};

}  // namespace

PForm parse_pformula(const std::string& text) {
  Parser p(text);
  PForm f = p.pformula();
  p.done();
  return f;
}

IForm parse_iformula(const std::string& text) {
  Parser p(text);
  IForm f = p.iformula();
  p.done();
  return f;
}

Sequent parse_ljp_sequent(const std::string& text) {
  Parser p(text);
  Sequent s = p.ljp_sequent();
  p.done();
  return s;
}

LjtSequent parse_ljt_sequent(const std::string& text) {
  Parser p(text);
  LjtSequent s = p.ljt_sequent();
  p.done();
  return s;
}

TermPtr parse_ljp_term(const std::string& text) {
  Parser p(text);
  TermPtr t = p.ljp_any();
  p.done();
  return t;
}

LjtPtr parse_ljt_term(const std::string& text) {
  Parser p(text);
  LjtPtr t = p.ljt_any();
  p.done();
  return t;
}

}  // namespace polsearch
