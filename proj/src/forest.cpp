#include "polsearch/forest.hpp"

#include <algorithm>

namespace polsearch {

Sort Forest::sort() const {
  switch (fkind) {
    case FKind::Node: return sort_of(op);
    case FKind::Sum: return sum_sort;
    case FKind::FixVar:
    case FKind::Gfp: return Sort::Expr;
  }
  return Sort::Expr;
}

ForestPtr Forest::node(Op op, std::string name, int index, PForm ann,
                       std::vector<ForestPtr> children) {
  if (static_cast<int>(children.size()) != arity_of(op))
    throw SyntaxError("forest node arity mismatch");
  // Child sorts follow the signature; reuse the term-side table via a probe.
  static const auto want = [](Op o, int pos) {
    switch (o) {
      case Op::Thunk: return Sort::Term;
      case Op::Inj: return Sort::Value;
      case Op::Ea:
      case Op::Ep: return Sort::Expr;
      case Op::Lam: return Sort::Coterm;
      case Op::Pair: return Sort::Term;
      case Op::Cothunk: return Sort::Coterm;
      case Op::ConsV: return pos == 0 ? Sort::Value : Sort::Spine;
      case Op::ConsI: return Sort::Spine;
      case Op::BindPos:
      case Op::BindNeg: return Sort::Expr;
      case Op::Copair: return Sort::Coterm;
      case Op::Dlv: return Sort::Term;
      case Op::Ret: return Sort::Value;
      case Op::Coret: return Sort::Spine;
      default: return Sort::Expr;
    }
  };
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i]) throw SyntaxError("null forest child");
    if (children[i]->sort() != want(op, static_cast<int>(i)))
      throw SyntaxError("forest child sort mismatch");
  }
  auto f = std::shared_ptr<Forest>(new Forest());
  f->fkind = FKind::Node;
  f->op = op;
  f->name = std::move(name);
  f->index = index;
  f->ann = std::move(ann);
  f->children = std::move(children);
  return f;
}

ForestPtr Forest::fixvar_at(std::string x, Sequent rho) {
  if (!rho.is_rstable()) throw SyntaxError("fixed-point annotations must be R-stable sequents");
  auto f = std::shared_ptr<Forest>(new Forest());
  f->fkind = FKind::FixVar;
  f->fixvar = std::move(x);
  f->rho = std::make_shared<Sequent>(std::move(rho));
  return f;
}

ForestPtr Forest::gfp(std::string x, Sequent rho, ForestPtr body) {
  if (!rho.is_rstable()) throw SyntaxError("fixed-point annotations must be R-stable sequents");
  if (!body || body->sort() != Sort::Expr) throw SyntaxError("gfp body must have sort e");
  auto f = std::shared_ptr<Forest>(new Forest());
  f->fkind = FKind::Gfp;
  f->fixvar = std::move(x);
  f->rho = std::make_shared<Sequent>(std::move(rho));
  f->children = {std::move(body)};
  return f;
}

ForestPtr Forest::of_term(const TermPtr& t) {
  std::vector<ForestPtr> kids;
  if (t->a) kids.push_back(of_term(t->a));
  if (t->b) kids.push_back(of_term(t->b));
  return node(t->op, t->name, t->index, t->ann, std::move(kids));
}

ForestPtr canon_sum(Sort sort, std::vector<ForestPtr> parts) {
  if (sort == Sort::Term || sort == Sort::Coterm)
    throw SyntaxError("sums exist only at sorts v, s, e");
  std::vector<ForestPtr> flat;
  for (auto& p : parts) {
    if (!p) throw SyntaxError("null summand");
    if (p->sort() != sort) throw SyntaxError("summand sort mismatch");
    if (p->fkind == FKind::Sum)
      flat.insert(flat.end(), p->children.begin(), p->children.end());
    else
      flat.push_back(p);
  }
  std::sort(flat.begin(), flat.end(),
            [](const ForestPtr& a, const ForestPtr& b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const ForestPtr& a, const ForestPtr& b) { return equal(a, b); }),
             flat.end());
  if (flat.size() == 1) return flat[0];
  auto f = std::shared_ptr<Forest>(new Forest());
  f->fkind = FKind::Sum;
  f->sum_sort = sort;
  f->children = std::move(flat);
  return f;
}

int compare(const ForestPtr& a, const ForestPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->fkind != b->fkind) return a->fkind < b->fkind ? -1 : 1;
  switch (a->fkind) {
    case FKind::Node: {
      if (a->op != b->op) return a->op < b->op ? -1 : 1;
      if (a->index != b->index) return a->index < b->index ? -1 : 1;
      if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
      if (a->ann || b->ann) {
        if (!a->ann) return -1;
        if (!b->ann) return 1;
        if (int c = compare(a->ann, b->ann)) return c;
      }
      break;
    }
    case FKind::Sum:
      if (a->sum_sort != b->sum_sort) return a->sum_sort < b->sum_sort ? -1 : 1;
      break;
    case FKind::FixVar:
    case FKind::Gfp:
      if (int c = a->fixvar.compare(b->fixvar)) return c < 0 ? -1 : 1;
      if (int c = compare(*a->rho, *b->rho)) return c;
      break;
  }
  if (a->children.size() != b->children.size())
    return a->children.size() < b->children.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (int c = compare(a->children[i], b->children[i])) return c;
  return 0;
}

bool equal(const ForestPtr& a, const ForestPtr& b) { return compare(a, b) == 0; }

namespace {

std::string ann_str(const PForm& f) {
  if (f->kind == PKind::NegAtom || f->kind == PKind::PosAtom || f->kind == PKind::Bot)
    return to_string(f);
  return "(" + to_string(f) + ")";
}

}  // namespace

std::string to_string(const ForestPtr& t) {
  switch (t->fkind) {
    case FKind::Node:
      switch (t->op) {
        case Op::PosVar: return t->name;
        case Op::Thunk: return "thunk(" + to_string(t->children[0]) + ")";
        case Op::Inj:
          return "inj" + std::to_string(t->index) + "[" + to_string(t->ann) + "](" +
                 to_string(t->children[0]) + ")";
        case Op::Ea: return "ea(" + to_string(t->children[0]) + ")";
        case Op::Ep: return "ep(" + to_string(t->children[0]) + ")";
        case Op::Lam: return "lam(" + to_string(t->children[0]) + ")";
        case Op::Pair:
          return "pair(" + to_string(t->children[0]) + ", " + to_string(t->children[1]) + ")";
        case Op::Nil: return "nil";
        case Op::Cothunk: return "cothunk(" + to_string(t->children[0]) + ")";
        case Op::ConsV: return to_string(t->children[0]) + " :: " + to_string(t->children[1]);
        case Op::ConsI: return std::to_string(t->index) + " :: " + to_string(t->children[0]);
        case Op::BindPos:
        case Op::BindNeg:
          return t->name + "@" + ann_str(t->ann) + ". " + to_string(t->children[0]);
        case Op::Abort: return "abort@" + ann_str(t->ann);
        case Op::Copair:
          return "[" + to_string(t->children[0]) + ", " + to_string(t->children[1]) + "]";
        case Op::Dlv: return "dlv(" + to_string(t->children[0]) + ")";
        case Op::Ret: return "ret(" + to_string(t->children[0]) + ")";
        case Op::Coret: return "coret " + t->name + " (" + to_string(t->children[0]) + ")";
      }
      return "?";
    case FKind::Sum: {
      if (t->children.empty())
        return std::string("sum@") + sort_letter(t->sum_sort) + "{}";
      std::string out = "sum{";
      for (std::size_t i = 0; i < t->children.size(); ++i) {
        if (i) out += ", ";
        out += to_string(t->children[i]);
      }
      return out + "}";
    }
    case FKind::FixVar:
      return t->fixvar + "@(" + to_string(*t->rho) + ")";
    case FKind::Gfp:
      return "gfp " + t->fixvar + "@(" + to_string(*t->rho) + "). " + to_string(t->children[0]);
  }
  return "?";
}

int node_count(const ForestPtr& t) {
  int n = 1;
  for (const auto& c : t->children) n += node_count(c);
  return n;
}

namespace {

struct Occ {
  std::string name;
  SequentPtr rho;
  int depth;
  std::vector<int> rpath;  // reversed path, filled on the way up
};

// Bottom-up traversal reporting, at each gfp, the occurrences it captures
// (rho <= rho') and every free occurrence of the same name.  Returns the
// occurrences still free above the current node.
std::vector<Occ> walk(const ForestPtr& t,
                      const std::function<void(const Forest&, const std::vector<Occ>& captured,
                                               const std::vector<Occ>& same_name)>& at_gfp) {
  switch (t->fkind) {
    case FKind::FixVar:
      return {Occ{t->fixvar, t->rho, 0, {}}};
    case FKind::Node:
    case FKind::Sum: {
      int bump = t->fkind == FKind::Node ? 1 : 0;
      std::vector<Occ> out;
      for (std::size_t i = 0; i < t->children.size(); ++i) {
        auto sub = walk(t->children[i], at_gfp);
        for (auto& o : sub) {
          o.depth += bump;
          o.rpath.push_back(static_cast<int>(i));
          out.push_back(std::move(o));
        }
      }
      return out;
    }
    case FKind::Gfp: {
      auto sub = walk(t->children[0], at_gfp);
      std::vector<Occ> captured, same_name, free_up;
      for (auto& o : sub) {
        if (o.name == t->fixvar) {
          same_name.push_back(o);
          if (rstable_leq(*t->rho, *o.rho)) {
            captured.push_back(std::move(o));
            continue;
          }
        }
        free_up.push_back(std::move(o));
      }
      at_gfp(*t, captured, same_name);
      for (auto& o : free_up) o.rpath.push_back(0);
      return free_up;
    }
  }
  return {};
}

std::vector<Occ> walk_free(const ForestPtr& t) {
  return walk(t, [](const Forest&, const std::vector<Occ>&, const std::vector<Occ>&) {});
}

}  // namespace

std::vector<FixUse> fpv(const ForestPtr& t) {
  std::vector<FixUse> out;
  for (auto& o : walk_free(t)) out.push_back(FixUse{o.name, o.rho});
  std::sort(out.begin(), out.end(), [](const FixUse& a, const FixUse& b) {
    if (int c = a.name.compare(b.name)) return c < 0;
    return compare(*a.rho, *b.rho) < 0;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FixUse& a, const FixUse& b) {
                          return a.name == b.name && equal(*a.rho, *b.rho);
                        }),
            out.end());
  return out;
}

bool is_well_bound(const ForestPtr& t) {
  bool ok = true;
  walk(t, [&](const Forest& g, const std::vector<Occ>& captured, const std::vector<Occ>& same) {
    (void)g;
    // Captured occurrences satisfy rho <= rho' by construction; any same-name
    // occurrence that escaped capture violates well-boundness.
    if (same.size() != captured.size()) ok = false;
  });
  return ok;
}

bool is_guarded(const ForestPtr& t) {
  bool ok = true;
  walk(t, [&](const Forest&, const std::vector<Occ>& captured, const std::vector<Occ>&) {
    for (const auto& o : captured)
      if (o.depth < 1) ok = false;
  });
  return ok;
}

std::vector<FixOccurrence> fix_occurrences(const ForestPtr& t) {
  std::vector<FixOccurrence> out;
  for (auto& o : walk_free(t)) {
    FixOccurrence f;
    f.name = o.name;
    f.rho = o.rho;
    f.depth = o.depth;
    f.path.assign(o.rpath.rbegin(), o.rpath.rend());
    out.push_back(std::move(f));
  }
  return out;
}

ForestPtr child_at(const ForestPtr& t, int step) {
  if (step < 0 || step >= static_cast<int>(t->children.size()))
    throw SyntaxError("path step out of range");
  return t->children[step];
}

}  // namespace polsearch
