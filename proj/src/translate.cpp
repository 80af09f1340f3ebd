#include "polsearch/translate.hpp"

#include <map>
#include <set>

namespace polsearch {

// ---------------------------------------------------------------------------
// LJT terms
// ---------------------------------------------------------------------------

LjtSort LjtTerm::sort() const {
  switch (op) {
    case LjtOp::Lam:
    case LjtOp::Pair:
      return LjtSort::Term;
    case LjtOp::Select:
    case LjtOp::Inj:
      return LjtSort::Expr;
    default:
      return LjtSort::Spine;
  }
}

LjtPtr LjtTerm::lam(std::string x, IForm a, LjtPtr t) {
  if (!t || !t->is_term()) throw SyntaxError("lambda body must be a term");
  auto out = std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::Lam));
  out->name = std::move(x);
  out->ann = std::move(a);
  out->a = std::move(t);
  return out;
}

LjtPtr LjtTerm::pair(LjtPtr t1, LjtPtr t2) {
  if (!t1 || !t1->is_term() || !t2 || !t2->is_term())
    throw SyntaxError("pair components must be terms");
  auto out = std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::Pair));
  out->a = std::move(t1);
  out->b = std::move(t2);
  return out;
}

LjtPtr LjtTerm::select(std::string x, LjtPtr s) {
  if (!s || s->sort() != LjtSort::Spine) throw SyntaxError("selection needs a spine");
  auto out = std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::Select));
  out->name = std::move(x);
  out->a = std::move(s);
  return out;
}

LjtPtr LjtTerm::inj(int i, IForm other, LjtPtr t) {
  if (i != 1 && i != 2) throw SyntaxError("injection index must be 1 or 2");
  if (!t || !t->is_term()) throw SyntaxError("injection body must be a term");
  auto out = std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::Inj));
  out->index = i;
  out->ann = std::move(other);
  out->a = std::move(t);
  return out;
}

LjtPtr LjtTerm::nil() { return std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::Nil)); }

LjtPtr LjtTerm::cons_t(LjtPtr t, LjtPtr s) {
  if (!t || !t->is_term() || !s || s->sort() != LjtSort::Spine)
    throw SyntaxError("spine cons expects a term and a spine");
  auto out = std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::ConsT));
  out->a = std::move(t);
  out->b = std::move(s);
  return out;
}

LjtPtr LjtTerm::cons_i(int i, LjtPtr s) {
  if (i != 1 && i != 2) throw SyntaxError("projection index must be 1 or 2");
  if (!s || s->sort() != LjtSort::Spine) throw SyntaxError("projection expects a spine");
  auto out = std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::ConsI));
  out->index = i;
  out->a = std::move(s);
  return out;
}

LjtPtr LjtTerm::abort(IForm r) {
  if (!r->is_right()) throw SyntaxError("abort annotation must be a right formula");
  auto out = std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::Abort));
  out->ann = std::move(r);
  return out;
}

LjtPtr LjtTerm::copair(std::string x1, IForm a1, LjtPtr e1, std::string x2, IForm a2, LjtPtr e2) {
  if (!e1 || !e1->is_expression() || !e2 || !e2->is_expression())
    throw SyntaxError("copair arms must be expressions");
  auto out = std::shared_ptr<LjtTerm>(new LjtTerm(LjtOp::Copair));
  out->name = std::move(x1);
  out->ann = std::move(a1);
  out->a = std::move(e1);
  out->name2 = std::move(x2);
  out->ann2 = std::move(a2);
  out->b = std::move(e2);
  return out;
}

int compare(const LjtPtr& a, const LjtPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  if (a->index != b->index) return a->index < b->index ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (int c = a->name2.compare(b->name2)) return c < 0 ? -1 : 1;
  auto cmp_ann = [](const IForm& x, const IForm& y) {
    if (!x && !y) return 0;
    if (!x) return -1;
    if (!y) return 1;
    return compare(x, y);
  };
  if (int c = cmp_ann(a->ann, b->ann)) return c;
  if (int c = cmp_ann(a->ann2, b->ann2)) return c;
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

bool equal(const LjtPtr& a, const LjtPtr& b) { return compare(a, b) == 0; }

namespace {

std::string iann_str(const IForm& f) {
  if (f->kind == IKind::Atom || f->kind == IKind::Bot) return to_string(f);
  return "(" + to_string(f) + ")";
}

}  // namespace

std::string to_string(const LjtPtr& t) {
  switch (t->op) {
    case LjtOp::Lam:
      return "lam " + t->name + "@" + iann_str(t->ann) + ". " + to_string(t->a);
    case LjtOp::Pair:
      return "pair(" + to_string(t->a) + ", " + to_string(t->b) + ")";
    case LjtOp::Select:
      return t->name + "(" + to_string(t->a) + ")";
    case LjtOp::Inj:
      return "inj" + std::to_string(t->index) + "[" + to_string(t->ann) + "](" + to_string(t->a) + ")";
    case LjtOp::Nil:
      return "nil";
    case LjtOp::ConsT:
      return to_string(t->a) + " :: " + to_string(t->b);
    case LjtOp::ConsI:
      return std::to_string(t->index) + " :: " + to_string(t->a);
    case LjtOp::Abort:
      return "abort@" + iann_str(t->ann);
    case LjtOp::Copair:
      return "[" + t->name + "@" + iann_str(t->ann) + ". " + to_string(t->a) + ", " + t->name2 +
             "@" + iann_str(t->ann2) + ". " + to_string(t->b) + "]";
  }
  return "?";
}

int term_size(const LjtPtr& t) {
  int n = 1;
  if (t->a) n += term_size(t->a);
  if (t->b) n += term_size(t->b);
  return n;
}

// ---------------------------------------------------------------------------
// Typing
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void tfail(const std::string& msg) { throw TypingError(msg); }

IForm infer_term_i(const IContext& g, const LjtPtr& t);
IForm infer_expr_i(const IContext& g, const LjtPtr& e);
IForm infer_spine_i(const IContext& g, const LjtPtr& s, const IForm& focus);

IForm infer_term_i(const IContext& g, const LjtPtr& t) {
  switch (t->op) {
    case LjtOp::Lam:
      return IFormula::iimp(t->ann, infer_term_i(g.extended(t->name, t->ann), t->a));
    case LjtOp::Pair:
      return IFormula::iand(infer_term_i(g, t->a), infer_term_i(g, t->b));
    case LjtOp::Select:
    case LjtOp::Inj:
      return infer_expr_i(g, t);
    default:
      tfail("not a term");
  }
}

IForm infer_expr_i(const IContext& g, const LjtPtr& e) {
  switch (e->op) {
    case LjtOp::Select: {
      auto ty = g.lookup(e->name);
      if (!ty) tfail("unbound variable " + e->name);
      IForm r = infer_spine_i(g, e->a, *ty);
      if (!r->is_right()) tfail("selection goal " + to_string(r) + " is not a right formula");
      return r;
    }
    case LjtOp::Inj: {
      IForm ai = infer_term_i(g, e->a);
      return e->index == 1 ? IFormula::ior(ai, e->ann) : IFormula::ior(e->ann, ai);
    }
    default:
      tfail("not an expression");
  }
}

IForm infer_spine_i(const IContext& g, const LjtPtr& s, const IForm& focus) {
  switch (s->op) {
    case LjtOp::Nil:
      if (focus->kind != IKind::Atom) tfail("nil demands an atomic focus");
      return focus;
    case LjtOp::ConsT: {
      if (focus->kind != IKind::Imp) tfail("application demands an implication focus");
      IForm at = infer_term_i(g, s->a);
      if (!equal(at, focus->left))
        tfail("argument has type " + to_string(at) + ", focus expects " + to_string(focus->left));
      return infer_spine_i(g, s->b, focus->right);
    }
    case LjtOp::ConsI:
      if (focus->kind != IKind::And) tfail("projection demands a conjunctive focus");
      return infer_spine_i(g, s->a, s->index == 1 ? focus->left : focus->right);
    case LjtOp::Abort:
      if (focus->kind != IKind::Bot) tfail("abort demands a bot focus");
      return s->ann;
    case LjtOp::Copair: {
      if (focus->kind != IKind::Or) tfail("copair demands a disjunctive focus");
      if (!equal(s->ann, focus->left) || !equal(s->ann2, focus->right))
        tfail("copair annotations disagree with the focus");
      IForm r1 = infer_expr_i(g.extended(s->name, s->ann), s->a);
      IForm r2 = infer_expr_i(g.extended(s->name2, s->ann2), s->b);
      if (!equal(r1, r2)) tfail("copair arms disagree: " + to_string(r1) + " vs " + to_string(r2));
      return r1;
    }
    default:
      tfail("not a spine");
  }
}

}  // namespace

IForm infer_ljt(const IContext& g, const LjtPtr& t, const std::optional<IForm>& given) {
  if (t->sort() == LjtSort::Spine) {
    if (!given) tfail("spines need the focus formula");
    return infer_spine_i(g, t, *given);
  }
  if (given) tfail("only spines take a focus formula");
  return infer_term_i(g, t);
}

bool check_ljt(const LjtSequent& s, const LjtPtr& t, std::string* diag) {
  try {
    switch (s.kind) {
      case LjtSeqKind::Invert: {
        if (!t->is_term()) throw TypingError("expected a term");
        IForm a = infer_term_i(s.ctx, t);
        if (!equal(a, s.goal)) throw TypingError("inferred " + to_string(a));
        return true;
      }
      case LjtSeqKind::Stable: {
        if (!t->is_expression()) throw TypingError("expected an expression");
        IForm r = infer_expr_i(s.ctx, t);
        if (!equal(r, s.goal)) throw TypingError("inferred " + to_string(r));
        return true;
      }
      case LjtSeqKind::Focus: {
        if (t->sort() != LjtSort::Spine) throw TypingError("expected a spine");
        IForm r = infer_spine_i(s.ctx, t, s.focus);
        if (!equal(r, s.goal)) throw TypingError("inferred " + to_string(r));
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

// ---------------------------------------------------------------------------
// Spine classification and legality
// ---------------------------------------------------------------------------

SpineClass classify_spine(const LjtPtr& s) {
  switch (s->op) {
    case LjtOp::Nil:
      return SpineClass::Atomic;
    case LjtOp::Abort:
      return s->ann->kind == IKind::Atom ? SpineClass::Atomic : SpineClass::Positive;
    case LjtOp::ConsT:
      return classify_spine(s->b);
    case LjtOp::ConsI:
      return classify_spine(s->a);
    case LjtOp::Copair: {
      auto arm = [](const LjtPtr& e) {
        if (e->op == LjtOp::Select) return classify_spine(e->a);
        return SpineClass::Positive;  // injections make positive arms
      };
      SpineClass c1 = arm(s->a), c2 = arm(s->b);
      bool arms_select = s->a->op == LjtOp::Select && s->b->op == LjtOp::Select;
      if (arms_select && c1 == SpineClass::Atomic && c2 == SpineClass::Atomic)
        return SpineClass::Atomic;
      auto positive_arm = [](const LjtPtr& e, SpineClass c) {
        return e->op == LjtOp::Inj || (e->op == LjtOp::Select && c == SpineClass::Positive);
      };
      if (positive_arm(s->a, c1) && positive_arm(s->b, c2)) return SpineClass::Positive;
      return SpineClass::Neither;
    }
    default:
      return SpineClass::Neither;
  }
}

SpineClass classify_expression(const LjtPtr& e) {
  switch (e->op) {
    case LjtOp::Select:
      return classify_spine(e->a);
    case LjtOp::Inj:
      return SpineClass::Positive;
    default:
      return SpineClass::Neither;
  }
}

bool is_legal(const LjtPtr& t) {
  if (t->is_expression() && classify_expression(t) == SpineClass::Neither) return false;
  if (t->a && !is_legal(t->a)) return false;
  if (t->b && !is_legal(t->b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Negative translation
// ---------------------------------------------------------------------------

PForm star_formula(const IForm& a) {
  switch (a->kind) {
    case IKind::Imp:
      return PFormula::imp(PFormula::down(star_formula(a->left)), star_formula(a->right));
    case IKind::And:
      return PFormula::and_n(star_formula(a->left), star_formula(a->right));
    case IKind::Atom:
      return PFormula::neg_atom(a->atom);
    case IKind::Bot:
    case IKind::Or:
      return PFormula::up(circ_formula(a));
  }
  throw TranslationError("unreachable");
}

PForm circ_formula(const IForm& r) {
  switch (r->kind) {
    case IKind::Atom:
      return PFormula::neg_atom(r->atom);
    case IKind::Bot:
      return PFormula::bot();
    case IKind::Or:
      return PFormula::or_p(PFormula::down(star_formula(r->left)),
                            PFormula::down(star_formula(r->right)));
    default:
      throw TranslationError("circ applies to right intuitionistic formulas only");
  }
}

namespace {

TermPtr star_term_t(const LjtPtr& t);
TermPtr star_expr(const LjtPtr& e);
TermPtr star_spine(const LjtPtr& s);

// DLV t: collapse ea(e) to e, wrap anything else in dlv.
TermPtr make_dlv(const TermPtr& t) { return t->op == Op::Ea ? t->a : LjpTerm::dlv(t); }

TermPtr star_term_t(const LjtPtr& t) {
  switch (t->op) {
    case LjtOp::Lam:
      return LjpTerm::lam(
          LjpTerm::bind_neg(t->name, star_formula(t->ann), make_dlv(star_term_t(t->a))));
    case LjtOp::Pair:
      return LjpTerm::pair(star_term_t(t->a), star_term_t(t->b));
    case LjtOp::Select:
    case LjtOp::Inj: {
      switch (classify_expression(t)) {
        case SpineClass::Atomic:
          return LjpTerm::ea(star_expr(t));
        case SpineClass::Positive:
          return LjpTerm::ep(star_expr(t));
        case SpineClass::Neither:
          throw TranslationError("translation is defined for legal proof terms only");
      }
      break;
    }
    default:
      throw TranslationError("not a term");
  }
  throw TranslationError("unreachable");
}

TermPtr star_expr(const LjtPtr& e) {
  switch (e->op) {
    case LjtOp::Select:
      return LjpTerm::coret(e->name, star_spine(e->a));
    case LjtOp::Inj:
      return LjpTerm::ret(LjpTerm::inj(e->index, PFormula::down(star_formula(e->ann)),
                                       LjpTerm::thunk(star_term_t(e->a))));
    default:
      throw TranslationError("not an expression");
  }
}

TermPtr star_spine(const LjtPtr& s) {
  switch (s->op) {
    case LjtOp::Nil:
      return LjpTerm::nil();
    case LjtOp::ConsT:
      return LjpTerm::cons_v(LjpTerm::thunk(star_term_t(s->a)), star_spine(s->b));
    case LjtOp::ConsI:
      return LjpTerm::cons_i(s->index, star_spine(s->a));
    case LjtOp::Abort:
      return LjpTerm::cothunk(LjpTerm::abort(circ_formula(s->ann)));
    case LjtOp::Copair:
      return LjpTerm::cothunk(LjpTerm::copair(
          LjpTerm::bind_neg(s->name, star_formula(s->ann), star_expr(s->a)),
          LjpTerm::bind_neg(s->name2, star_formula(s->ann2), star_expr(s->b))));
    default:
      throw TranslationError("not a spine");
  }
}

}  // namespace

TermPtr star_term(const LjtPtr& t) {
  if (!is_legal(t)) throw TranslationError("translation is defined for legal proof terms only");
  switch (t->sort()) {
    case LjtSort::Term:
      return star_term_t(t);
    case LjtSort::Expr:
      return star_expr(t);
    case LjtSort::Spine:
      return star_spine(t);
  }
  throw TranslationError("unreachable");
}

TermPtr star_term_in(const LjtSequent& s, const LjtPtr& t) {
  if (!is_legal(t)) throw TranslationError("translation is defined for legal proof terms only");
  switch (s.kind) {
    case LjtSeqKind::Invert:
      if (!t->is_term()) throw TranslationError("invert sequents carry terms");
      return star_term_t(t);
    case LjtSeqKind::Stable:
      if (!t->is_expression()) throw TranslationError("stable sequents carry expressions");
      return star_expr(t);
    case LjtSeqKind::Focus:
      if (t->sort() != LjtSort::Spine) throw TranslationError("focus sequents carry spines");
      return star_spine(t);
  }
  throw TranslationError("unreachable");
}

Context star_context(const IContext& g) {
  Context out;
  for (const auto& b : g.bindings()) out = out.extended(b.name, star_formula(b.type));
  return out;
}

Sequent star_sequent(const LjtSequent& s) {
  switch (s.kind) {
    case LjtSeqKind::Invert:
      return Sequent::invert_r(star_context(s.ctx), star_formula(s.goal));
    case LjtSeqKind::Stable:
      return Sequent::stable(star_context(s.ctx), circ_formula(s.goal));
    case LjtSeqKind::Focus:
      return Sequent::focus_l(star_context(s.ctx), star_formula(s.focus), circ_formula(s.goal));
  }
  throw TranslationError("unreachable");
}

// ---------------------------------------------------------------------------
// Forgetful map
// ---------------------------------------------------------------------------

IForm forget_formula(const PForm& f) {
  switch (f->kind) {
    case PKind::NegAtom:
      return IFormula::iatom(f->atom);
    case PKind::Up:
    case PKind::Down:
      return forget_formula(f->left);
    case PKind::Imp:
      if (f->left->kind != PKind::Down)
        throw TranslationError("formula outside the star fragment: " + to_string(f));
      return IFormula::iimp(forget_formula(f->left->left), forget_formula(f->right));
    case PKind::AndN:
      return IFormula::iand(forget_formula(f->left), forget_formula(f->right));
    case PKind::Bot:
      return IFormula::ibot();
    case PKind::Or:
      if (f->left->kind != PKind::Down || f->right->kind != PKind::Down)
        throw TranslationError("formula outside the star fragment: " + to_string(f));
      return IFormula::ior(forget_formula(f->left->left), forget_formula(f->right->left));
    case PKind::PosAtom:
      throw TranslationError("formula outside the star fragment: " + to_string(f));
  }
  throw TranslationError("unreachable");
}

namespace {

[[noreturn]] void outside(const TermPtr& t) {
  throw TranslationError("term outside the legal star fragment: " + to_string(t));
}

LjtPtr fg_term(const TermPtr& t);
LjtPtr fg_expr(const TermPtr& e);
LjtPtr fg_spine(const TermPtr& s);

LjtPtr fg_term(const TermPtr& t) {
  switch (t->op) {
    case Op::Ea:
    case Op::Ep:
      return fg_expr(t->a);
    case Op::Lam: {
      const TermPtr& p = t->a;
      if (p->op != Op::BindNeg) outside(t);
      if (p->a->op == Op::Dlv)
        return LjtTerm::lam(p->name, forget_formula(p->ann), fg_term(p->a->a));
      return LjtTerm::lam(p->name, forget_formula(p->ann), fg_expr(p->a));
    }
    case Op::Pair:
      return LjtTerm::pair(fg_term(t->a), fg_term(t->b));
    default:
      outside(t);
  }
}

LjtPtr fg_expr(const TermPtr& e) {
  switch (e->op) {
    case Op::Coret:
      return LjtTerm::select(e->name, fg_spine(e->a));
    case Op::Ret: {
      const TermPtr& v = e->a;
      if (v->op != Op::Inj || v->a->op != Op::Thunk) outside(e);
      return LjtTerm::inj(v->index, forget_formula(v->ann), fg_term(v->a->a));
    }
    case Op::Dlv:
      // Legal star terms keep dlv under a lambda only.
      outside(e);
    default:
      outside(e);
  }
}

LjtPtr fg_spine(const TermPtr& s) {
  switch (s->op) {
    case Op::Nil:
      return LjtTerm::nil();
    case Op::Cothunk: {
      const TermPtr& p = s->a;
      if (p->op == Op::Abort) return LjtTerm::abort(forget_formula(p->ann));
      if (p->op == Op::Copair) {
        const TermPtr& p1 = p->a;
        const TermPtr& p2 = p->b;
        if (p1->op != Op::BindNeg || p2->op != Op::BindNeg) outside(s);
        return LjtTerm::copair(p1->name, forget_formula(p1->ann), fg_expr(p1->a), p2->name,
                               forget_formula(p2->ann), fg_expr(p2->a));
      }
      outside(s);
    }
    case Op::ConsV:
      if (s->a->op != Op::Thunk) outside(s);
      return LjtTerm::cons_t(fg_term(s->a->a), fg_spine(s->b));
    case Op::ConsI:
      return LjtTerm::cons_i(s->index, fg_spine(s->a));
    default:
      outside(s);
  }
}

}  // namespace

LjtPtr forget_term(const TermPtr& t) {
  switch (t->sort()) {
    case Sort::Term:
      return fg_term(t);
    case Sort::Expr:
      return fg_expr(t);
    case Sort::Spine:
      return fg_spine(t);
    default:
      throw TranslationError("the forgetful map applies to terms, expressions and spines");
  }
}

// ---------------------------------------------------------------------------
// Derived decisions
// ---------------------------------------------------------------------------

bool ljt_inhabited(const LjtSequent& s) { return inhabited(star_sequent(s)); }

bool ljt_finite(const LjtSequent& s) { return finite(star_sequent(s)); }

std::uint64_t ljt_count(const LjtSequent& s) {
  if (!ljt_finite(s))
    throw PreconditionError("count demands finitely many inhabitants: " + to_string(s));
  return count(star_sequent(s));
}

std::vector<LjtPtr> members_ljt(const LjtSequent& s, int size_bound) {
  std::set<LjtPtr, LjtTermLess> out;
  for (const auto& m : members(star_sequent(s), size_bound)) out.insert(forget_term(m));
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// LJT oracle
// ---------------------------------------------------------------------------

namespace {

struct LjtOracle {
  std::map<std::pair<std::string, int>, std::vector<LjtPtr>> memo;

  const std::vector<LjtPtr>& run(const LjtSequent& s, int bound) {
    auto key = std::make_pair(to_string(s), bound);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::set<LjtPtr, LjtTermLess> out;
    if (bound >= 0) {
      switch (s.kind) {
        case LjtSeqKind::Invert: terms(s.ctx, s.goal, bound, out); break;
        case LjtSeqKind::Stable: exprs(s.ctx, s.goal, bound, out); break;
        case LjtSeqKind::Focus: spines(s.ctx, s.focus, s.goal, bound, out); break;
      }
    }
    auto [pos, _] = memo.emplace(key, std::vector<LjtPtr>(out.begin(), out.end()));
    return pos->second;
  }

  void terms(const IContext& g, const IForm& a, int bound, std::set<LjtPtr, LjtTermLess>& out) {
    switch (a->kind) {
      case IKind::Imp: {
        std::string x = fresh_var(g);
        for (const auto& m : run(LjtSequent::invert(g.extended(x, a->left), a->right), bound - 1))
          out.insert(LjtTerm::lam(x, a->left, m));
        break;
      }
      case IKind::And:
        for (const auto& m1 : run(LjtSequent::invert(g, a->left), bound - 2))
          for (const auto& m2 :
               run(LjtSequent::invert(g, a->right), bound - 1 - term_size(m1)))
            out.insert(LjtTerm::pair(m1, m2));
        break;
      default:
        // Right goals go through the silent coercion.
        for (const auto& m : run(LjtSequent::stable(g, a), bound)) out.insert(m);
        break;
    }
  }

  void exprs(const IContext& g, const IForm& r, int bound, std::set<LjtPtr, LjtTermLess>& out) {
    for (const auto& b : g.bindings())
      for (const auto& sp : run(LjtSequent::focus_l(g, b.type, r), bound - 1))
        out.insert(LjtTerm::select(b.name, sp));
    if (r->kind == IKind::Or) {
      for (const auto& m : run(LjtSequent::invert(g, r->left), bound - 1))
        out.insert(LjtTerm::inj(1, r->right, m));
      for (const auto& m : run(LjtSequent::invert(g, r->right), bound - 1))
        out.insert(LjtTerm::inj(2, r->left, m));
    }
  }

  void spines(const IContext& g, const IForm& a, const IForm& r, int bound,
              std::set<LjtPtr, LjtTermLess>& out) {
    switch (a->kind) {
      case IKind::Atom:
        if (equal(a, r) && bound >= 1) out.insert(LjtTerm::nil());
        break;
      case IKind::Imp:
        for (const auto& m1 : run(LjtSequent::invert(g, a->left), bound - 2))
          for (const auto& m2 :
               run(LjtSequent::focus_l(g, a->right, r), bound - 1 - term_size(m1)))
            out.insert(LjtTerm::cons_t(m1, m2));
        break;
      case IKind::And:
        for (const auto& m : run(LjtSequent::focus_l(g, a->left, r), bound - 1))
          out.insert(LjtTerm::cons_i(1, m));
        for (const auto& m : run(LjtSequent::focus_l(g, a->right, r), bound - 1))
          out.insert(LjtTerm::cons_i(2, m));
        break;
      case IKind::Bot:
        if (bound >= 1) out.insert(LjtTerm::abort(r));
        break;
      case IKind::Or: {
        std::string x1 = fresh_var(g);
        std::string x2 = fresh_var(g);
        for (const auto& e1 :
             run(LjtSequent::stable(g.extended(x1, a->left), r), bound - 2))
          for (const auto& e2 : run(LjtSequent::stable(g.extended(x2, a->right), r),
                                    bound - 1 - term_size(e1)))
            out.insert(LjtTerm::copair(x1, a->left, e1, x2, a->right, e2));
        break;
      }
    }
  }
};

}  // namespace

std::vector<LjtPtr> oracle_search_ljt(const LjtSequent& s, int size_bound) {
  LjtOracle o;
  return o.run(s, size_bound);
}

}  // namespace polsearch
