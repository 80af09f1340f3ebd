#include "polsearch/terms.hpp"

namespace polsearch {

char sort_letter(Sort s) {
  switch (s) {
    case Sort::Value: return 'v';
    case Sort::Term: return 't';
    case Sort::Spine: return 's';
    case Sort::Coterm: return 'p';
    case Sort::Expr: return 'e';
  }
  return '?';
}

Sort sort_of(Op op) {
  switch (op) {
    case Op::PosVar:
    case Op::Thunk:
    case Op::Inj:
      return Sort::Value;
    case Op::Ea:
    case Op::Ep:
    case Op::Lam:
    case Op::Pair:
      return Sort::Term;
    case Op::Nil:
    case Op::Cothunk:
    case Op::ConsV:
    case Op::ConsI:
      return Sort::Spine;
    case Op::BindPos:
    case Op::BindNeg:
    case Op::Abort:
    case Op::Copair:
      return Sort::Coterm;
    case Op::Dlv:
    case Op::Ret:
    case Op::Coret:
      return Sort::Expr;
  }
  return Sort::Expr;
}

int arity_of(Op op) {
  switch (op) {
    case Op::PosVar:
    case Op::Nil:
    case Op::Abort:
      return 0;
    case Op::Pair:
    case Op::ConsV:
    case Op::Copair:
      return 2;
    default:
      return 1;
  }
}

// Child sorts in constructor order.
static void child_sorts(Op op, Sort out[2]) {
  switch (op) {
    case Op::Thunk: out[0] = Sort::Term; break;
    case Op::Inj: out[0] = Sort::Value; break;
    case Op::Ea:
    case Op::Ep: out[0] = Sort::Expr; break;
    case Op::Lam: out[0] = Sort::Coterm; break;
    case Op::Pair: out[0] = Sort::Term; out[1] = Sort::Term; break;
    case Op::Cothunk: out[0] = Sort::Coterm; break;
    case Op::ConsV: out[0] = Sort::Value; out[1] = Sort::Spine; break;
    case Op::ConsI: out[0] = Sort::Spine; break;
    case Op::BindPos:
    case Op::BindNeg: out[0] = Sort::Expr; break;
    case Op::Copair: out[0] = Sort::Coterm; out[1] = Sort::Coterm; break;
    case Op::Dlv: out[0] = Sort::Term; break;
    case Op::Ret: out[0] = Sort::Value; break;
    case Op::Coret: out[0] = Sort::Spine; break;
    default: break;
  }
}

static void require_sort(Op op, const TermPtr& child, int pos) {
  Sort want[2];
  child_sorts(op, want);
  if (!child) throw SyntaxError("missing child");
  if (child->sort() != want[pos]) throw SyntaxError("child sort mismatch");
}

TermPtr LjpTerm::make(Op op, std::string name, int index, PForm ann,
                      std::vector<TermPtr> children) {
  if (static_cast<int>(children.size()) != arity_of(op)) throw SyntaxError("bad arity");
  TermPtr a = children.size() > 0 ? children[0] : nullptr;
  TermPtr b = children.size() > 1 ? children[1] : nullptr;
  if (a) require_sort(op, a, 0);
  if (b) require_sort(op, b, 1);
  return TermPtr(new LjpTerm(op, std::move(name), index, std::move(ann), std::move(a), std::move(b)));
}

TermPtr LjpTerm::pos_var(std::string z) { return make(Op::PosVar, std::move(z), 0, nullptr, {}); }
TermPtr LjpTerm::thunk(TermPtr t) { return make(Op::Thunk, "", 0, nullptr, {std::move(t)}); }
TermPtr LjpTerm::inj(int i, PForm other, TermPtr v) {
  if (i != 1 && i != 2) throw SyntaxError("injection index must be 1 or 2");
  if (!other->is_positive()) throw SyntaxError("injection annotation must be positive");
  return make(Op::Inj, "", i, std::move(other), {std::move(v)});
}
TermPtr LjpTerm::ea(TermPtr e) { return make(Op::Ea, "", 0, nullptr, {std::move(e)}); }
TermPtr LjpTerm::ep(TermPtr e) { return make(Op::Ep, "", 0, nullptr, {std::move(e)}); }
TermPtr LjpTerm::lam(TermPtr p) { return make(Op::Lam, "", 0, nullptr, {std::move(p)}); }
TermPtr LjpTerm::pair(TermPtr t1, TermPtr t2) {
  return make(Op::Pair, "", 0, nullptr, {std::move(t1), std::move(t2)});
}
TermPtr LjpTerm::nil() { return make(Op::Nil, "", 0, nullptr, {}); }
TermPtr LjpTerm::cothunk(TermPtr p) { return make(Op::Cothunk, "", 0, nullptr, {std::move(p)}); }
TermPtr LjpTerm::cons_v(TermPtr v, TermPtr s) {
  return make(Op::ConsV, "", 0, nullptr, {std::move(v), std::move(s)});
}
TermPtr LjpTerm::cons_i(int i, TermPtr s) {
  if (i != 1 && i != 2) throw SyntaxError("projection index must be 1 or 2");
  return make(Op::ConsI, "", i, nullptr, {std::move(s)});
}
TermPtr LjpTerm::bind_pos(std::string z, PForm atom, TermPtr e) {
  if (atom->kind != PKind::PosAtom) throw SyntaxError("positive binder expects an atom annotation");
  return make(Op::BindPos, std::move(z), 0, std::move(atom), {std::move(e)});
}
TermPtr LjpTerm::bind_neg(std::string x, PForm n, TermPtr e) {
  if (!n->is_negative()) throw SyntaxError("negative binder expects a negative annotation");
  return make(Op::BindNeg, std::move(x), 0, std::move(n), {std::move(e)});
}
TermPtr LjpTerm::abort(PForm a) { return make(Op::Abort, "", 0, std::move(a), {}); }
TermPtr LjpTerm::copair(TermPtr p1, TermPtr p2) {
  return make(Op::Copair, "", 0, nullptr, {std::move(p1), std::move(p2)});
}
TermPtr LjpTerm::dlv(TermPtr t) { return make(Op::Dlv, "", 0, nullptr, {std::move(t)}); }
TermPtr LjpTerm::ret(TermPtr v) { return make(Op::Ret, "", 0, nullptr, {std::move(v)}); }
TermPtr LjpTerm::coret(std::string x, TermPtr s) {
  return make(Op::Coret, std::move(x), 0, nullptr, {std::move(s)});
}

int compare(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  if (a->index != b->index) return a->index < b->index ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->ann || b->ann) {
    if (!a->ann) return -1;
    if (!b->ann) return 1;
    if (int c = compare(a->ann, b->ann)) return c;
  }
  if (a->a || b->a) {
    if (!a->a) return -1;
    if (!b->a) return 1;
    if (int c = compare(a->a, b->a)) return c;
  }
  if (a->b || b->b) {
    if (!a->b) return -1;
    if (!b->b) return 1;
    if (int c = compare(a->b, b->b)) return c;
  }
  return 0;
}

bool equal(const TermPtr& a, const TermPtr& b) { return compare(a, b) == 0; }

static std::string ann_str(const PForm& f) {
  if (f->kind == PKind::NegAtom || f->kind == PKind::PosAtom || f->kind == PKind::Bot)
    return to_string(f);
  return "(" + to_string(f) + ")";
}

std::string to_string(const TermPtr& t) {
  switch (t->op) {
    case Op::PosVar: return t->name;
    case Op::Thunk: return "thunk(" + to_string(t->a) + ")";
    case Op::Inj:
      return "inj" + std::to_string(t->index) + "[" + to_string(t->ann) + "](" + to_string(t->a) + ")";
    case Op::Ea: return "ea(" + to_string(t->a) + ")";
    case Op::Ep: return "ep(" + to_string(t->a) + ")";
    case Op::Lam: return "lam(" + to_string(t->a) + ")";
    case Op::Pair: return "pair(" + to_string(t->a) + ", " + to_string(t->b) + ")";
    case Op::Nil: return "nil";
    case Op::Cothunk: return "cothunk(" + to_string(t->a) + ")";
    case Op::ConsV: return to_string(t->a) + " :: " + to_string(t->b);
    case Op::ConsI: return std::to_string(t->index) + " :: " + to_string(t->a);
    case Op::BindPos:
    case Op::BindNeg: return t->name + "@" + ann_str(t->ann) + ". " + to_string(t->a);
    case Op::Abort: return "abort@" + ann_str(t->ann);
    case Op::Copair: return "[" + to_string(t->a) + ", " + to_string(t->b) + "]";
    case Op::Dlv: return "dlv(" + to_string(t->a) + ")";
    case Op::Ret: return "ret(" + to_string(t->a) + ")";
    case Op::Coret: return "coret " + t->name + " (" + to_string(t->a) + ")";
  }
  return "?";
}

int term_size(const TermPtr& t) {
  int self = (t->op == Op::Ea || t->op == Op::Ep) ? 0 : 1;
  if (t->a) self += term_size(t->a);
  if (t->b) self += term_size(t->b);
  return self;
}

// ---------------------------------------------------------------------------
// Typing
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail(const std::string& msg) { throw TypingError(msg); }

PForm infer_value(const Context& g, const TermPtr& v);
PForm infer_term(const Context& g, const TermPtr& t);
PForm infer_spine(const Context& g, const TermPtr& s, const PForm& focus);
std::pair<PForm, PForm> infer_coterm_(const Context& g, const TermPtr& p);
PForm infer_expr(const Context& g, const TermPtr& e);

PForm infer_value(const Context& g, const TermPtr& v) {
  switch (v->op) {
    case Op::PosVar: {
      auto ty = g.lookup(v->name);
      if (!ty) fail("unbound variable " + v->name);
      if ((*ty)->kind != PKind::PosAtom)
        fail("variable " + v->name + " is not a positive variable");
      return *ty;
    }
    case Op::Thunk:
      return PFormula::down(infer_term(g, v->a));
    case Op::Inj: {
      PForm pi = infer_value(g, v->a);
      return v->index == 1 ? PFormula::or_p(pi, v->ann) : PFormula::or_p(v->ann, pi);
    }
    default:
      fail("not a value");
  }
}

PForm infer_term(const Context& g, const TermPtr& t) {
  switch (t->op) {
    case Op::Ea: {
      PForm a = infer_expr(g, t->a);
      if (a->kind != PKind::NegAtom) fail("ea expects a negative atom, got " + to_string(a));
      return a;
    }
    case Op::Ep: {
      PForm p = infer_expr(g, t->a);
      if (!p->is_positive()) fail("ep expects a positive formula, got " + to_string(p));
      return PFormula::up(p);
    }
    case Op::Lam: {
      auto [p, n] = infer_coterm_(g, t->a);
      if (!n->is_negative()) fail("lambda body must invert to a negative formula");
      return PFormula::imp(p, n);
    }
    case Op::Pair:
      return PFormula::and_n(infer_term(g, t->a), infer_term(g, t->b));
    default:
      fail("not a term");
  }
}

PForm infer_spine(const Context& g, const TermPtr& s, const PForm& focus) {
  switch (s->op) {
    case Op::Nil:
      if (focus->kind != PKind::NegAtom) fail("nil demands an atomic focus");
      return focus;
    case Op::Cothunk: {
      if (focus->kind != PKind::Up) fail("cothunk demands an up-shifted focus");
      auto [p, a] = infer_coterm_(g, s->a);
      if (!equal(p, focus->left)) fail("cothunk co-term inverts the wrong formula");
      if (!a->is_right()) fail("spine result " + to_string(a) + " is not an R-formula");
      return a;
    }
    case Op::ConsV: {
      if (focus->kind != PKind::Imp) fail("value cons demands an implication focus");
      PForm p = infer_value(g, s->a);
      if (!equal(p, focus->left)) fail("spine argument has type " + to_string(p) +
                                       ", focus expects " + to_string(focus->left));
      return infer_spine(g, s->b, focus->right);
    }
    case Op::ConsI: {
      if (focus->kind != PKind::AndN) fail("projection demands a conjunctive focus");
      return infer_spine(g, s->a, s->index == 1 ? focus->left : focus->right);
    }
    default:
      fail("not a spine");
  }
}

std::pair<PForm, PForm> infer_coterm_(const Context& g, const TermPtr& p) {
  switch (p->op) {
    case Op::BindPos: {
      PForm a = infer_expr(g.extended(p->name, p->ann), p->a);
      return {p->ann, a};
    }
    case Op::BindNeg: {
      PForm a = infer_expr(g.extended(p->name, p->ann), p->a);
      return {PFormula::down(p->ann), a};
    }
    case Op::Abort:
      return {PFormula::bot(), p->ann};
    case Op::Copair: {
      auto [p1, a1] = infer_coterm_(g, p->a);
      auto [p2, a2] = infer_coterm_(g, p->b);
      if (!equal(a1, a2))
        fail("copair branches disagree: " + to_string(a1) + " vs " + to_string(a2));
      return {PFormula::or_p(p1, p2), a1};
    }
    default:
      fail("not a co-term");
  }
}

PForm infer_expr(const Context& g, const TermPtr& e) {
  switch (e->op) {
    case Op::Dlv: {
      PForm n = infer_term(g, e->a);
      if (!n->is_composite_negative()) fail("dlv body must be composite negative");
      return n;
    }
    case Op::Ret:
      return infer_value(g, e->a);
    case Op::Coret: {
      auto ty = g.lookup(e->name);
      if (!ty) fail("unbound variable " + e->name);
      if (!(*ty)->is_negative()) fail("coret head " + e->name + " is not a negative variable");
      PForm r = infer_spine(g, e->a, *ty);
      if (!r->is_right()) fail("coret result " + to_string(r) + " is not an R-formula");
      return r;
    }
    default:
      fail("not a stable expression");
  }
}

}  // namespace

PForm infer(const Context& g, const TermPtr& t, const std::optional<PForm>& given) {
  switch (t->sort()) {
    case Sort::Value:
      if (given) fail("values take no focus formula");
      return infer_value(g, t);
    case Sort::Term:
      if (given) fail("terms take no focus formula");
      return infer_term(g, t);
    case Sort::Spine:
      if (!given) fail("spines need the focus formula");
      return infer_spine(g, t, *given);
    case Sort::Coterm:
      if (given) fail("co-terms take no focus formula");
      return infer_coterm_(g, t).second;
    case Sort::Expr:
      if (given) fail("stable expressions take no focus formula");
      return infer_expr(g, t);
  }
  fail("unreachable");
}

std::pair<PForm, PForm> infer_coterm(const Context& g, const TermPtr& p) {
  if (p->sort() != Sort::Coterm) fail("not a co-term");
  return infer_coterm_(g, p);
}

bool check(const Sequent& s, const TermPtr& t, std::string* diag) {
  try {
    switch (s.kind) {
      case SeqKind::FocusR: {
        if (t->sort() != Sort::Value) throw TypingError("expected a value");
        PForm p = infer_value(s.ctx, t);
        if (!equal(p, s.goal)) throw TypingError("inferred " + to_string(p));
        return true;
      }
      case SeqKind::InvertR: {
        if (t->sort() != Sort::Term) throw TypingError("expected a term");
        PForm n = infer_term(s.ctx, t);
        if (!equal(n, s.goal)) throw TypingError("inferred " + to_string(n));
        return true;
      }
      case SeqKind::FocusL: {
        if (t->sort() != Sort::Spine) throw TypingError("expected a spine");
        PForm r = infer_spine(s.ctx, t, s.focus);
        if (!equal(r, s.goal)) throw TypingError("inferred " + to_string(r));
        return true;
      }
      case SeqKind::InvertL: {
        if (t->sort() != Sort::Coterm) throw TypingError("expected a co-term");
        auto [p, a] = infer_coterm_(s.ctx, t);
        if (!equal(p, s.focus)) throw TypingError("inverts " + to_string(p));
        if (!equal(a, s.goal)) throw TypingError("inferred " + to_string(a));
        return true;
      }
      case SeqKind::Stable: {
        if (t->sort() != Sort::Expr) throw TypingError("expected a stable expression");
        PForm a = infer_expr(s.ctx, t);
        if (!equal(a, s.goal)) throw TypingError("inferred " + to_string(a));
        return true;
      }
    }
  } catch (const TypingError& err) {
    if (diag) *diag = err.what();
    return false;
  } catch (const SyntaxError& err) {
    if (diag) *diag = err.what();
    return false;
  }
  return false;
}

}  // namespace polsearch
