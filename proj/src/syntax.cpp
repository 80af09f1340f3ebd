#include "polsearch/syntax.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polsearch {

// ---------------------------------------------------------------------------
// PFormula
// ---------------------------------------------------------------------------

PForm PFormula::neg_atom(std::string name) {
  return PForm(new PFormula(PKind::NegAtom, std::move(name), nullptr, nullptr));
}

PForm PFormula::pos_atom(std::string name) {
  return PForm(new PFormula(PKind::PosAtom, std::move(name), nullptr, nullptr));
}

PForm PFormula::up(PForm p) {
  if (!p || !p->is_positive()) throw SyntaxError("up expects a positive formula");
  return PForm(new PFormula(PKind::Up, "", std::move(p), nullptr));
}

PForm PFormula::imp(PForm p, PForm n) {
  if (!p || !p->is_positive()) throw SyntaxError("left of -> must be positive");
  if (!n || !n->is_negative()) throw SyntaxError("right of -> must be negative");
  return PForm(new PFormula(PKind::Imp, "", std::move(p), std::move(n)));
}

PForm PFormula::and_n(PForm n, PForm m) {
  if (!n || !n->is_negative() || !m || !m->is_negative())
    throw SyntaxError("operands of /\\ must be negative");
  return PForm(new PFormula(PKind::AndN, "", std::move(n), std::move(m)));
}

PForm PFormula::down(PForm n) {
  if (!n || !n->is_negative()) throw SyntaxError("down expects a negative formula");
  return PForm(new PFormula(PKind::Down, "", std::move(n), nullptr));
}

PForm PFormula::bot() {
  return PForm(new PFormula(PKind::Bot, "", nullptr, nullptr));
}

PForm PFormula::or_p(PForm p, PForm q) {
  if (!p || !p->is_positive() || !q || !q->is_positive())
    throw SyntaxError("operands of \\/ must be positive");
  return PForm(new PFormula(PKind::Or, "", std::move(p), std::move(q)));
}

bool PFormula::is_negative() const {
  switch (kind) {
    case PKind::NegAtom:
    case PKind::Up:
    case PKind::Imp:
    case PKind::AndN:
      return true;
    default:
      return false;
  }
}

bool PFormula::is_right() const { return is_positive() || kind == PKind::NegAtom; }

bool PFormula::is_composite_negative() const {
  return kind == PKind::Up || kind == PKind::Imp || kind == PKind::AndN;
}

int compare(const PForm& a, const PForm& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (int c = a->atom.compare(b->atom)) return c < 0 ? -1 : 1;
  if (a->left || b->left) {
    if (!a->left) return -1;
    if (!b->left) return 1;
    if (int c = compare(a->left, b->left)) return c;
  }
  if (a->right || b->right) {
    if (!a->right) return -1;
    if (!b->right) return 1;
    if (int c = compare(a->right, b->right)) return c;
  }
  return 0;
}

bool equal(const PForm& a, const PForm& b) { return compare(a, b) == 0; }

namespace {

// Precedence: -> binds loosest, then \/, then /\, then prefixes.
enum Prec { kImp = 0, kOr = 1, kAnd = 2, kPrefix = 3 };

void render(const PForm& f, int parent, std::string& out) {
  switch (f->kind) {
    case PKind::NegAtom:
      out += f->atom + "-";
      return;
    case PKind::PosAtom:
      out += f->atom + "+";
      return;
    case PKind::Bot:
      out += "bot";
      return;
    case PKind::Up:
    case PKind::Down:
      out += f->kind == PKind::Up ? "up " : "down ";
      render(f->left, kPrefix, out);
      return;
    case PKind::Imp: {
      bool paren = parent > kImp;
      if (paren) out += "(";
      render(f->left, kImp + 1, out);
      out += " -> ";
      render(f->right, kImp, out);  // right-associative
      if (paren) out += ")";
      return;
    }
    case PKind::AndN: {
      bool paren = parent > kAnd;
      if (paren) out += "(";
      render(f->left, kAnd + 1, out);
      out += " /\\ ";
      render(f->right, kAnd, out);
      if (paren) out += ")";
      return;
    }
    case PKind::Or: {
      bool paren = parent > kOr;
      if (paren) out += "(";
      render(f->left, kOr + 1, out);
      out += " \\/ ";
      render(f->right, kOr, out);
      if (paren) out += ")";
      return;
    }
  }
}

void render(const IForm& f, int parent, std::string& out) {
  switch (f->kind) {
    case IKind::Atom:
      out += f->atom;
      return;
    case IKind::Bot:
      out += "bot";
      return;
    case IKind::Imp: {
      bool paren = parent > kImp;
      if (paren) out += "(";
      render(f->left, kImp + 1, out);
      out += " -> ";
      render(f->right, kImp, out);
      if (paren) out += ")";
      return;
    }
    case IKind::And: {
      bool paren = parent > kAnd;
      if (paren) out += "(";
      render(f->left, kAnd + 1, out);
      out += " /\\ ";
      render(f->right, kAnd, out);
      if (paren) out += ")";
      return;
    }
    case IKind::Or: {
      bool paren = parent > kOr;
      if (paren) out += "(";
      render(f->left, kOr + 1, out);
      out += " \\/ ";
      render(f->right, kOr, out);
      if (paren) out += ")";
      return;
    }
  }
}

}  // namespace

std::string to_string(const PForm& f) {
  std::string out;
  render(f, kImp, out);
  return out;
}

int weight(const PForm& f) {
  switch (f->kind) {
    case PKind::Bot:
    case PKind::PosAtom:
      return 0;
    case PKind::NegAtom:
      return 1;
    case PKind::Down:
      return weight(f->left);
    case PKind::AndN:
      return weight(f->left) + weight(f->right);
    case PKind::Or:
      return weight(f->left) + weight(f->right) + 1;
    case PKind::Up:
      return weight(f->left) + 2;
    case PKind::Imp:
      return weight(f->left) + weight(f->right) + 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// IFormula
// ---------------------------------------------------------------------------

IForm IFormula::iatom(std::string name) {
  return IForm(new IFormula(IKind::Atom, std::move(name), nullptr, nullptr));
}
IForm IFormula::ibot() { return IForm(new IFormula(IKind::Bot, "", nullptr, nullptr)); }
IForm IFormula::iimp(IForm a, IForm b) {
  return IForm(new IFormula(IKind::Imp, "", std::move(a), std::move(b)));
}
IForm IFormula::iand(IForm a, IForm b) {
  return IForm(new IFormula(IKind::And, "", std::move(a), std::move(b)));
}
IForm IFormula::ior(IForm a, IForm b) {
  return IForm(new IFormula(IKind::Or, "", std::move(a), std::move(b)));
}

int compare(const IForm& a, const IForm& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (int c = a->atom.compare(b->atom)) return c < 0 ? -1 : 1;
  if (a->left || b->left) {
    if (!a->left) return -1;
    if (!b->left) return 1;
    if (int c = compare(a->left, b->left)) return c;
  }
  if (a->right || b->right) {
    if (!a->right) return -1;
    if (!b->right) return 1;
    if (int c = compare(a->right, b->right)) return c;
  }
  return 0;
}

bool equal(const IForm& a, const IForm& b) { return compare(a, b) == 0; }

std::string to_string(const IForm& f) {
  std::string out;
  render(f, kImp, out);
  return out;
}

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

void validate_ljp_context(const Context& g) {
  for (const auto& b : g.bindings())
    if (!b.type->is_left())
      throw SyntaxError("context binding " + b.name + ": " + to_string(b.type) +
                        " is not a left formula (bind z:a+ or x:N)");
}

namespace {

template <class F>
bool ctx_leq(const Ctx<F>& g, const Ctx<F>& g2) {
  // g included in g2 as a set of bindings.
  for (const auto& b : g.bindings()) {
    auto t = g2.lookup(b.name);
    if (!t || !equal(*t, b.type)) return false;
  }
  // |g| = |g2|: every formula of g2 already occurs in g.
  for (const auto& b2 : g2.bindings()) {
    bool present = false;
    for (const auto& b : g.bindings())
      if (equal(b.type, b2.type)) {
        present = true;
        break;
      }
    if (!present) return false;
  }
  return true;
}

template <class F>
std::string ctx_str(const Ctx<F>& g) {
  std::string out;
  bool first = true;
  for (const auto& b : g.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += b.name + ": " + to_string(b.type);
  }
  return out;
}

template <class F>
int ctx_compare(const Ctx<F>& a, const Ctx<F>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (int c = a.bindings()[i].name.compare(b.bindings()[i].name)) return c < 0 ? -1 : 1;
    if (int c = compare(a.bindings()[i].type, b.bindings()[i].type)) return c;
  }
  return 0;
}

}  // namespace

bool context_leq(const Context& g, const Context& g2) { return ctx_leq(g, g2); }
bool context_leq(const IContext& g, const IContext& g2) { return ctx_leq(g, g2); }

std::string to_string(const Context& g) { return ctx_str(g); }
std::string to_string(const IContext& g) { return ctx_str(g); }

// ---------------------------------------------------------------------------
// Sequents
// ---------------------------------------------------------------------------

Sequent Sequent::focus_l(Context g, PForm n, PForm r) {
  validate_ljp_context(g);
  if (!n->is_negative()) throw SyntaxError("focus-left focus must be negative");
  if (!r->is_right()) throw SyntaxError("focus-left sequents carry an R-formula on the right");
  return Sequent(SeqKind::FocusL, std::move(g), std::move(n), std::move(r));
}

Sequent Sequent::focus_r(Context g, PForm p) {
  validate_ljp_context(g);
  if (!p->is_positive()) throw SyntaxError("focus-right goal must be positive");
  return Sequent(SeqKind::FocusR, std::move(g), nullptr, std::move(p));
}

Sequent Sequent::invert_l(Context g, PForm p, PForm a) {
  validate_ljp_context(g);
  if (!p->is_positive()) throw SyntaxError("invert-left focus must be positive");
  return Sequent(SeqKind::InvertL, std::move(g), std::move(p), std::move(a));
}

Sequent Sequent::invert_r(Context g, PForm n) {
  validate_ljp_context(g);
  if (!n->is_negative()) throw SyntaxError("invert-right goal must be negative");
  return Sequent(SeqKind::InvertR, std::move(g), nullptr, std::move(n));
}

Sequent Sequent::stable(Context g, PForm a) {
  validate_ljp_context(g);
  return Sequent(SeqKind::Stable, std::move(g), nullptr, std::move(a));
}

int compare(const Sequent& a, const Sequent& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.focus || b.focus) {
    if (!a.focus) return -1;
    if (!b.focus) return 1;
    if (int c = compare(a.focus, b.focus)) return c;
  }
  if (int c = compare(a.goal, b.goal)) return c;
  return ctx_compare(a.ctx, b.ctx);
}

bool equal(const Sequent& a, const Sequent& b) { return compare(a, b) == 0; }

std::string to_string(const Sequent& s) {
  std::string g = ctx_str(s.ctx);
  if (!g.empty()) g += " ";
  switch (s.kind) {
    case SeqKind::FocusL:
      return g + "[" + to_string(s.focus) + "] |- " + to_string(s.goal);
    case SeqKind::FocusR:
      return g + "|- [" + to_string(s.goal) + "]";
    case SeqKind::InvertL:
      return g + "| " + to_string(s.focus) + " => " + to_string(s.goal);
    case SeqKind::InvertR:
      return g + "=> " + to_string(s.goal);
    case SeqKind::Stable:
      return g + "|- " + to_string(s.goal);
  }
  return g;
}

bool rstable_leq(const Sequent& rho, const Sequent& rho2) {
  if (!rho.is_rstable() || !rho2.is_rstable()) return false;
  return equal(rho.goal, rho2.goal) && context_leq(rho.ctx, rho2.ctx);
}

int weight(const Context& g) {
  int w = 0;
  for (const auto& b : g.bindings()) w += weight(b.type);
  return w;
}

int weight(const Sequent& s) {
  switch (s.kind) {
    case SeqKind::Stable:
      return weight(s.ctx) + weight(s.goal);
    case SeqKind::InvertR:
      return weight(s.ctx) + weight(s.goal) - 1;
    case SeqKind::FocusR:
      return weight(s.ctx) + weight(s.goal);
    case SeqKind::InvertL:
      return weight(s.ctx) + weight(s.focus) + weight(s.goal) + 1;
    case SeqKind::FocusL:
      return weight(s.ctx) + weight(s.focus) + weight(s.goal);
  }
  return 0;
}

std::string alpha_key(const Sequent& s) {
  Context renamed;
  std::size_t i = 0;
  for (const auto& b : s.ctx.bindings()) renamed = renamed.extended("?" + std::to_string(i++), b.type);
  switch (s.kind) {
    case SeqKind::FocusL:
      return to_string(Sequent::focus_l(renamed, s.focus, s.goal));
    case SeqKind::FocusR:
      return to_string(Sequent::focus_r(renamed, s.goal));
    case SeqKind::InvertL:
      return to_string(Sequent::invert_l(renamed, s.focus, s.goal));
    case SeqKind::InvertR:
      return to_string(Sequent::invert_r(renamed, s.goal));
    case SeqKind::Stable:
      return to_string(Sequent::stable(renamed, s.goal));
  }
  return "";
}

LjtSequent LjtSequent::invert(IContext g, IForm a) {
  return LjtSequent(LjtSeqKind::Invert, std::move(g), nullptr, std::move(a));
}

LjtSequent LjtSequent::stable(IContext g, IForm r) {
  if (!r->is_right()) throw SyntaxError("LJT stable sequents carry a right formula");
  return LjtSequent(LjtSeqKind::Stable, std::move(g), nullptr, std::move(r));
}

LjtSequent LjtSequent::focus_l(IContext g, IForm a, IForm r) {
  if (!r->is_right()) throw SyntaxError("LJT focus sequents carry a right formula");
  return LjtSequent(LjtSeqKind::Focus, std::move(g), std::move(a), std::move(r));
}

int compare(const LjtSequent& a, const LjtSequent& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.focus || b.focus) {
    if (!a.focus) return -1;
    if (!b.focus) return 1;
    if (int c = compare(a.focus, b.focus)) return c;
  }
  if (int c = compare(a.goal, b.goal)) return c;
  return ctx_compare(a.ctx, b.ctx);
}

bool equal(const LjtSequent& a, const LjtSequent& b) { return compare(a, b) == 0; }

std::string to_string(const LjtSequent& s) {
  std::string g = ctx_str(s.ctx);
  if (!g.empty()) g += " ";
  switch (s.kind) {
    case LjtSeqKind::Invert:
      return g + "=> " + to_string(s.goal);
    case LjtSeqKind::Stable:
      return g + "|- " + to_string(s.goal);
    case LjtSeqKind::Focus:
      return g + "[" + to_string(s.focus) + "] |- " + to_string(s.goal);
  }
  return g;
}

std::string fresh_neg_var(const Context& g) {
  for (int i = 0;; ++i) {
    std::string n = "x" + std::to_string(i);
    if (!g.binds(n)) return n;
  }
}

std::string fresh_pos_var(const Context& g) {
  for (int i = 0;; ++i) {
    std::string n = "z" + std::to_string(i);
    if (!g.binds(n)) return n;
  }
}

std::string fresh_var(const IContext& g) {
  for (int i = 0;; ++i) {
    std::string n = "x" + std::to_string(i);
    if (!g.binds(n)) return n;
  }
}

}  // namespace polsearch
