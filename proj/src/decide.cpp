#include "polsearch/decide.hpp"

#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

namespace polsearch {

namespace {

class DecisionCache {
 public:
  std::optional<bool> find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, bool value) {
    std::unique_lock lock(mu_);
    map_.emplace(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, bool> map_;
};

DecisionCache& inhabited_cache() {
  static DecisionCache cache;
  return cache;
}

DecisionCache& finite_cache() {
  static DecisionCache cache;
  return cache;
}

// Forests are shared DAGs (the builder memoizes), so the structural
// recursions carry a per-call pointer memo.
using BoolMemo = std::unordered_map<const Forest*, bool>;

bool nbinf_rec(const SeqPredicate& p, const ForestPtr& t, BoolMemo& memo) {
  auto it = memo.find(t.get());
  if (it != memo.end()) return it->second;
  bool out = false;
  switch (t->fkind) {
    case FKind::FixVar:
      out = p(*t->rho);
      break;
    case FKind::Node:
    case FKind::Gfp: {
      out = true;
      for (const auto& c : t->children)
        if (!nbinf_rec(p, c, memo)) {
          out = false;
          break;
        }
      break;
    }
    case FKind::Sum: {
      out = false;
      for (const auto& c : t->children)
        if (nbinf_rec(p, c, memo)) {
          out = true;
          break;
        }
      break;
    }
  }
  memo.emplace(t.get(), out);
  return out;
}

bool ff_rec(const SeqPredicate& p, const ForestPtr& t, BoolMemo& memo, BoolMemo& sharp_memo) {
  auto it = memo.find(t.get());
  if (it != memo.end()) return it->second;
  bool out = false;
  switch (t->fkind) {
    case FKind::FixVar:
      out = p(*t->rho);
      break;
    case FKind::Node:
    case FKind::Gfp: {
      bool all = true;
      for (const auto& c : t->children)
        if (!ff_rec(p, c, memo, sharp_memo)) {
          all = false;
          break;
        }
      out = all;
      if (!out) {
        // The sharp escape: a child with no members at all caps the node.
        SeqPredicate sharp = sharp_predicate();
        for (const auto& c : t->children)
          if (!nbinf_rec(sharp, c, sharp_memo)) {
            out = true;
            break;
          }
      }
      break;
    }
    case FKind::Sum: {
      out = true;
      for (const auto& c : t->children)
        if (!ff_rec(p, c, memo, sharp_memo)) {
          out = false;
          break;
        }
      break;
    }
  }
  memo.emplace(t.get(), out);
  return out;
}

}  // namespace

SeqPredicate empty_predicate() {
  return [](const Sequent&) { return false; };
}

SeqPredicate sharp_predicate() {
  return [](const Sequent& rho) { return inhabited(rho); };
}

bool nbinf(const SeqPredicate& p, const ForestPtr& t) {
  BoolMemo memo;
  return nbinf_rec(p, t, memo);
}

bool ff(const SeqPredicate& p, const ForestPtr& t) {
  BoolMemo memo, sharp_memo;
  return ff_rec(p, t, memo, sharp_memo);
}

// ---------------------------------------------------------------------------
// Interleaved decisions
//
// inhabited and finite fuse the two recursions: they follow the builder's
// clause structure and evaluate the predicate on the fly, short-circuiting
// instead of materializing the representation.  Both routes compute the same
// function; the forest route above stays as the reference the tests compare
// against.
//
// The environment guard collapses under this reading.  Entries always carry
// ancestor contexts, and contexts only ever grow, so an entry covers the
// current sequent exactly when it has the same right formula and no type
// outside the entry's context has been added since.  The guard state is just
// the set of right formulas bound since the last genuinely new context type.
// ---------------------------------------------------------------------------

namespace {

struct GuardEnv {
  std::vector<std::string> rights;  // rendered right formulas, sorted

  bool covers(const PForm& r) const {
    std::string key = to_string(r);
    for (const auto& e : rights)
      if (e == key) return true;
    return false;
  }

  GuardEnv with(const PForm& r) const {
    GuardEnv out = *this;
    out.rights.push_back(to_string(r));
    std::sort(out.rights.begin(), out.rights.end());
    return out;
  }

  // Extending the context by a type not yet present kills every entry.
  GuardEnv after_binding(const Context& g, const PForm& ty) const {
    for (const auto& b : g.bindings())
      if (equal(b.type, ty)) return *this;
    return GuardEnv{};
  }

  std::string key() const {
    std::string out;
    for (const auto& e : rights) out += e + "\x1f";
    return out;
  }
};

DecisionCache& nbinf_seq_cache() {
  static DecisionCache cache;
  return cache;
}

DecisionCache& ff_seq_cache() {
  static DecisionCache cache;
  return cache;
}

bool nbinf_seq(const Sequent& s, const GuardEnv& env);

bool nbinf_seq_uncached(const Sequent& s, const GuardEnv& env) {
  const Context& g = s.ctx;
  switch (s.kind) {
    case SeqKind::FocusR:
      switch (s.goal->kind) {
        case PKind::PosAtom:
          for (const auto& b : g.bindings())
            if (equal(b.type, s.goal)) return true;
          return false;
        case PKind::Bot:
          return false;
        case PKind::Down:
          return nbinf_seq(Sequent::invert_r(g, s.goal->left), env);
        case PKind::Or:
          return nbinf_seq(Sequent::focus_r(g, s.goal->left), env) ||
                 nbinf_seq(Sequent::focus_r(g, s.goal->right), env);
        default:
          break;
      }
      break;
    case SeqKind::InvertR:
      switch (s.goal->kind) {
        case PKind::NegAtom:
          return nbinf_seq(Sequent::stable(g, s.goal), env);
        case PKind::Up:
          return nbinf_seq(Sequent::stable(g, s.goal->left), env);
        case PKind::Imp:
          return nbinf_seq(Sequent::invert_l(g, s.goal->left, s.goal->right), env);
        case PKind::AndN:
          return nbinf_seq(Sequent::invert_r(g, s.goal->left), env) &&
                 nbinf_seq(Sequent::invert_r(g, s.goal->right), env);
        default:
          break;
      }
      break;
    case SeqKind::FocusL:
      switch (s.focus->kind) {
        case PKind::NegAtom:
          return equal(s.focus, s.goal);
        case PKind::Up:
          return nbinf_seq(Sequent::invert_l(g, s.focus->left, s.goal), env);
        case PKind::Imp:
          return nbinf_seq(Sequent::focus_l(g, s.focus->right, s.goal), env) &&
                 nbinf_seq(Sequent::focus_r(g, s.focus->left), env);
        case PKind::AndN:
          return nbinf_seq(Sequent::focus_l(g, s.focus->left, s.goal), env) ||
                 nbinf_seq(Sequent::focus_l(g, s.focus->right, s.goal), env);
        default:
          break;
      }
      break;
    case SeqKind::InvertL:
      switch (s.focus->kind) {
        case PKind::PosAtom: {
          GuardEnv env2 = env.after_binding(g, s.focus);
          return nbinf_seq(Sequent::stable(g.extended(fresh_pos_var(g), s.focus), s.goal), env2);
        }
        case PKind::Down: {
          GuardEnv env2 = env.after_binding(g, s.focus->left);
          return nbinf_seq(
              Sequent::stable(g.extended(fresh_neg_var(g), s.focus->left), s.goal), env2);
        }
        case PKind::Bot:
          return true;
        case PKind::Or:
          return nbinf_seq(Sequent::invert_l(g, s.focus->left, s.goal), env) &&
                 nbinf_seq(Sequent::invert_l(g, s.focus->right, s.goal), env);
        default:
          break;
      }
      break;
    case SeqKind::Stable: {
      if (s.goal->is_composite_negative())
        return nbinf_seq(Sequent::invert_r(g, s.goal), env);
      GuardEnv inner = env.with(s.goal);
      if (s.goal->is_positive() && nbinf_seq(Sequent::focus_r(g, s.goal), inner)) return true;
      for (const auto& b : g.bindings())
        if (b.type->is_negative() &&
            nbinf_seq(Sequent::focus_l(g, b.type, s.goal), inner))
          return true;
      return false;
    }
  }
  throw SyntaxError("unreachable sequent form");
}

bool nbinf_seq(const Sequent& s, const GuardEnv& env) {
  if (s.is_rstable() && env.covers(s.goal)) return false;
  std::string key = alpha_key(s) + "\x1e" + env.key();
  if (auto hit = nbinf_seq_cache().find(key)) return *hit;
  bool out = nbinf_seq_uncached(s, env);
  nbinf_seq_cache().insert(key, out);
  return out;
}

bool ff_seq(const Sequent& s, const GuardEnv& env);

// ff of a builder node whose children are the given premise sequents: all
// children finite, or some child with no members at all.
bool ff_node(const std::vector<Sequent>& premises, const GuardEnv& env) {
  bool all = true;
  for (const auto& p : premises)
    if (!ff_seq(p, env)) {
      all = false;
      break;
    }
  if (all) return true;
  for (const auto& p : premises)
    if (!inhabited(p)) return true;
  return false;
}

bool ff_seq_uncached(const Sequent& s, const GuardEnv& env) {
  const Context& g = s.ctx;
  switch (s.kind) {
    case SeqKind::FocusR:
      switch (s.goal->kind) {
        case PKind::PosAtom:
        case PKind::Bot:
          return true;  // variables only, or the empty sum
        case PKind::Down:
          return ff_node({Sequent::invert_r(g, s.goal->left)}, env);
        case PKind::Or:
          return ff_node({Sequent::focus_r(g, s.goal->left)}, env) &&
                 ff_node({Sequent::focus_r(g, s.goal->right)}, env);
        default:
          break;
      }
      break;
    case SeqKind::InvertR:
      switch (s.goal->kind) {
        case PKind::NegAtom:
          return ff_node({Sequent::stable(g, s.goal)}, env);
        case PKind::Up:
          return ff_node({Sequent::stable(g, s.goal->left)}, env);
        case PKind::Imp:
          return ff_node({Sequent::invert_l(g, s.goal->left, s.goal->right)}, env);
        case PKind::AndN:
          return ff_node({Sequent::invert_r(g, s.goal->left), Sequent::invert_r(g, s.goal->right)},
                         env);
        default:
          break;
      }
      break;
    case SeqKind::FocusL:
      switch (s.focus->kind) {
        case PKind::NegAtom:
          return true;  // nil, or the empty sum
        case PKind::Up:
          return ff_node({Sequent::invert_l(g, s.focus->left, s.goal)}, env);
        case PKind::Imp:
          return ff_node(
              {Sequent::focus_r(g, s.focus->left), Sequent::focus_l(g, s.focus->right, s.goal)},
              env);
        case PKind::AndN:
          return ff_node({Sequent::focus_l(g, s.focus->left, s.goal)}, env) &&
                 ff_node({Sequent::focus_l(g, s.focus->right, s.goal)}, env);
        default:
          break;
      }
      break;
    case SeqKind::InvertL:
      switch (s.focus->kind) {
        case PKind::PosAtom: {
          GuardEnv env2 = env.after_binding(g, s.focus);
          return ff_node({Sequent::stable(g.extended(fresh_pos_var(g), s.focus), s.goal)}, env2);
        }
        case PKind::Down: {
          GuardEnv env2 = env.after_binding(g, s.focus->left);
          return ff_node({Sequent::stable(g.extended(fresh_neg_var(g), s.focus->left), s.goal)},
                         env2);
        }
        case PKind::Bot:
          return true;
        case PKind::Or:
          return ff_node({Sequent::invert_l(g, s.focus->left, s.goal)}, env) &&
                 ff_node({Sequent::invert_l(g, s.focus->right, s.goal)}, env);
        default:
          break;
      }
      break;
    case SeqKind::Stable: {
      if (s.goal->is_composite_negative())
        return ff_node({Sequent::invert_r(g, s.goal)}, env);
      GuardEnv inner = env.with(s.goal);
      bool body = true;
      if (s.goal->is_positive() && !ff_node({Sequent::focus_r(g, s.goal)}, inner)) body = false;
      if (body)
        for (const auto& b : g.bindings())
          if (b.type->is_negative() &&
              !ff_node({Sequent::focus_l(g, b.type, s.goal)}, inner)) {
            body = false;
            break;
          }
      return body || !inhabited(s);
    }
  }
  throw SyntaxError("unreachable sequent form");
}

bool ff_seq(const Sequent& s, const GuardEnv& env) {
  if (s.is_rstable() && env.covers(s.goal)) return false;
  std::string key = alpha_key(s) + "\x1e" + env.key();
  if (auto hit = ff_seq_cache().find(key)) return *hit;
  bool out = ff_seq_uncached(s, env);
  ff_seq_cache().insert(key, out);
  return out;
}

}  // namespace

bool inhabited(const Sequent& s) {
  std::string key = alpha_key(s);
  if (auto hit = inhabited_cache().find(key)) return *hit;
  bool out = nbinf_seq(s, GuardEnv{});
  inhabited_cache().insert(key, out);
  return out;
}

bool finite(const Sequent& s) {
  std::string key = alpha_key(s);
  if (auto hit = finite_cache().find(key)) return *hit;
  bool out = ff_seq(s, GuardEnv{});
  finite_cache().insert(key, out);
  return out;
}

namespace detail {

std::size_t decision_cache_size() { return inhabited_cache().size() + finite_cache().size(); }

void clear_decision_caches() {
  inhabited_cache().clear();
  finite_cache().clear();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

struct MemberEnum {
  using Key = std::pair<const Forest*, int>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<const void*>()(k.first) * 31u + static_cast<std::size_t>(k.second);
    }
  };
  std::unordered_map<Key, std::vector<TermPtr>, KeyHash> memo;

  const std::vector<TermPtr>& run(const ForestPtr& t, int bound) {
    Key key{t.get(), bound};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::set<TermPtr, TermLess> out;
    if (bound >= 0) {
      switch (t->fkind) {
        case FKind::FixVar: {
          ForestPtr rep = finrep_closed(*t->rho);
          for (const auto& m : run(rep, bound)) out.insert(m);
          break;
        }
        case FKind::Gfp:
          for (const auto& m : run(t->children[0], bound)) out.insert(m);
          break;
        case FKind::Sum:
          for (const auto& c : t->children)
            for (const auto& m : run(c, bound)) out.insert(m);
          break;
        case FKind::Node: {
          int cost = (t->op == Op::Ea || t->op == Op::Ep) ? 0 : 1;
          int budget = bound - cost;
          if (budget < 0) break;
          switch (arity_of(t->op)) {
            case 0:
              out.insert(LjpTerm::make(t->op, t->name, t->index, t->ann, {}));
              break;
            case 1: {
              for (const auto& m : run(t->children[0], budget))
                out.insert(LjpTerm::make(t->op, t->name, t->index, t->ann, {m}));
              break;
            }
            case 2: {
              // Every member weighs at least 1, so the first component gets
              // budget-1 at most; the second takes the leftover exactly.
              auto firsts = run(t->children[0], budget - 1);
              for (const auto& m1 : firsts)
                for (const auto& m2 : run(t->children[1], budget - term_size(m1)))
                  out.insert(LjpTerm::make(t->op, t->name, t->index, t->ann, {m1, m2}));
              break;
            }
          }
          break;
        }
      }
    }
    auto [pos, _] = memo.emplace(key, std::vector<TermPtr>(out.begin(), out.end()));
    return pos->second;
  }
};

}  // namespace

std::vector<TermPtr> members_of_forest(const ForestPtr& t, int size_bound) {
  MemberEnum e;
  return e.run(t, size_bound);
}

std::vector<TermPtr> members(const Sequent& s, int size_bound) {
  return members_of_forest(finrep_closed(s), size_bound);
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

namespace {

std::uint64_t count_rec(const ForestPtr& t, std::unordered_map<const Forest*, std::uint64_t>& memo,
                        BoolMemo& sharp_memo) {
  auto it = memo.find(t.get());
  if (it != memo.end()) return it->second;
  std::uint64_t out = 0;
  switch (t->fkind) {
    case FKind::FixVar:
      // Unreachable when the finiteness precondition holds: every path to a
      // bound variable crosses a sharp emptiness shortcut.
      throw PreconditionError("count reached a fixed-point variable");
    case FKind::Node:
    case FKind::Gfp: {
      SeqPredicate sharp = sharp_predicate();
      bool empty_child = false;
      for (const auto& c : t->children)
        if (!nbinf_rec(sharp, c, sharp_memo)) {
          empty_child = true;
          break;
        }
      if (empty_child) {
        out = 0;
      } else {
        out = 1;
        for (const auto& c : t->children) out *= count_rec(c, memo, sharp_memo);
      }
      break;
    }
    case FKind::Sum:
      // Summands of builder sums have pairwise distinct heads, so their
      // member sets are disjoint and counts add up.
      for (const auto& c : t->children) out += count_rec(c, memo, sharp_memo);
      break;
  }
  memo.emplace(t.get(), out);
  return out;
}

}  // namespace

std::uint64_t count(const Sequent& s) {
  if (!finite(s))
    throw PreconditionError("count demands finitely many inhabitants: " + to_string(s));
  std::unordered_map<const Forest*, std::uint64_t> memo;
  BoolMemo sharp_memo;
  return count_rec(finrep_closed(s), memo, sharp_memo);
}

// ---------------------------------------------------------------------------
// Typing oracle
// ---------------------------------------------------------------------------

namespace {

// Exhaustive goal-directed application of the typing rules, one function per
// sequent form, sharing the size budget discipline of the member walk.
struct OracleSearch {
  std::map<std::pair<std::string, int>, std::vector<TermPtr>> memo;

  const std::vector<TermPtr>& run(const Sequent& s, int bound) {
    auto key = std::make_pair(to_string(s), bound);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::set<TermPtr, TermLess> out;
    if (bound >= 0) {
      switch (s.kind) {
        case SeqKind::FocusR: values(s.ctx, s.goal, bound, out); break;
        case SeqKind::InvertR: terms(s.ctx, s.goal, bound, out); break;
        case SeqKind::FocusL: spines(s.ctx, s.focus, s.goal, bound, out); break;
        case SeqKind::InvertL: coterms(s.ctx, s.focus, s.goal, bound, out); break;
        case SeqKind::Stable: exprs(s.ctx, s.goal, bound, out); break;
      }
    }
    auto [pos, _] = memo.emplace(key, std::vector<TermPtr>(out.begin(), out.end()));
    return pos->second;
  }

  void values(const Context& g, const PForm& p, int bound, std::set<TermPtr, TermLess>& out) {
    switch (p->kind) {
      case PKind::PosAtom:
        if (bound >= 1)
          for (const auto& b : g.bindings())
            if (equal(b.type, p)) out.insert(LjpTerm::pos_var(b.name));
        break;
      case PKind::Bot:
        break;
      case PKind::Down:
        for (const auto& m : run(Sequent::invert_r(g, p->left), bound - 1))
          out.insert(LjpTerm::thunk(m));
        break;
      case PKind::Or:
        for (const auto& m : run(Sequent::focus_r(g, p->left), bound - 1))
          out.insert(LjpTerm::inj(1, p->right, m));
        for (const auto& m : run(Sequent::focus_r(g, p->right), bound - 1))
          out.insert(LjpTerm::inj(2, p->left, m));
        break;
      default:
        break;
    }
  }

  void terms(const Context& g, const PForm& n, int bound, std::set<TermPtr, TermLess>& out) {
    switch (n->kind) {
      case PKind::NegAtom:
        for (const auto& m : run(Sequent::stable(g, n), bound)) out.insert(LjpTerm::ea(m));
        break;
      case PKind::Up:
        for (const auto& m : run(Sequent::stable(g, n->left), bound)) out.insert(LjpTerm::ep(m));
        break;
      case PKind::Imp:
        for (const auto& m : run(Sequent::invert_l(g, n->left, n->right), bound - 1))
          out.insert(LjpTerm::lam(m));
        break;
      case PKind::AndN:
        for (const auto& m1 : run(Sequent::invert_r(g, n->left), bound - 2))
          for (const auto& m2 : run(Sequent::invert_r(g, n->right), bound - 1 - term_size(m1)))
            out.insert(LjpTerm::pair(m1, m2));
        break;
      default:
        break;
    }
  }

  void spines(const Context& g, const PForm& n, const PForm& r, int bound,
              std::set<TermPtr, TermLess>& out) {
    switch (n->kind) {
      case PKind::NegAtom:
        if (equal(n, r) && bound >= 1) out.insert(LjpTerm::nil());
        break;
      case PKind::Up:
        for (const auto& m : run(Sequent::invert_l(g, n->left, r), bound - 1))
          out.insert(LjpTerm::cothunk(m));
        break;
      case PKind::Imp:
        for (const auto& m1 : run(Sequent::focus_r(g, n->left), bound - 2))
          for (const auto& m2 : run(Sequent::focus_l(g, n->right, r), bound - 1 - term_size(m1)))
            out.insert(LjpTerm::cons_v(m1, m2));
        break;
      case PKind::AndN:
        for (const auto& m : run(Sequent::focus_l(g, n->left, r), bound - 1))
          out.insert(LjpTerm::cons_i(1, m));
        for (const auto& m : run(Sequent::focus_l(g, n->right, r), bound - 1))
          out.insert(LjpTerm::cons_i(2, m));
        break;
      default:
        break;
    }
  }

  void coterms(const Context& g, const PForm& p, const PForm& a, int bound,
               std::set<TermPtr, TermLess>& out) {
    switch (p->kind) {
      case PKind::PosAtom: {
        std::string z = fresh_pos_var(g);
        for (const auto& m : run(Sequent::stable(g.extended(z, p), a), bound - 1))
          out.insert(LjpTerm::bind_pos(z, p, m));
        break;
      }
      case PKind::Down: {
        std::string x = fresh_neg_var(g);
        for (const auto& m : run(Sequent::stable(g.extended(x, p->left), a), bound - 1))
          out.insert(LjpTerm::bind_neg(x, p->left, m));
        break;
      }
      case PKind::Bot:
        if (bound >= 1) out.insert(LjpTerm::abort(a));
        break;
      case PKind::Or:
        for (const auto& m1 : run(Sequent::invert_l(g, p->left, a), bound - 2))
          for (const auto& m2 : run(Sequent::invert_l(g, p->right, a), bound - 1 - term_size(m1)))
            out.insert(LjpTerm::copair(m1, m2));
        break;
      default:
        break;
    }
  }

  void exprs(const Context& g, const PForm& a, int bound, std::set<TermPtr, TermLess>& out) {
    if (a->is_composite_negative()) {
      for (const auto& m : run(Sequent::invert_r(g, a), bound - 1)) out.insert(LjpTerm::dlv(m));
      return;
    }
    if (a->is_positive())
      for (const auto& m : run(Sequent::focus_r(g, a), bound - 1)) out.insert(LjpTerm::ret(m));
    for (const auto& b : g.bindings())
      if (b.type->is_negative())
        for (const auto& m : run(Sequent::focus_l(g, b.type, a), bound - 1))
          out.insert(LjpTerm::coret(b.name, m));
  }
};

}  // namespace

std::vector<TermPtr> oracle_search(const Sequent& s, int size_bound) {
  OracleSearch o;
  return o.run(s, size_bound);
}

// ---------------------------------------------------------------------------
// Decontraction
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> duplicates_of(const Context& g, const Context& g2,
                                       const std::string& w) {
  std::vector<std::string> out = {w};
  auto ty = g.lookup(w);
  if (!ty) return out;
  for (const auto& b : g2.bindings())
    if (!g.binds(b.name) && equal(b.type, *ty)) out.push_back(b.name);
  return out;
}

void decontract_rec(const Context& g, const Context& g2, const TermPtr& t,
                    std::set<std::string>& bound, std::set<TermPtr, TermLess>& out);

std::vector<TermPtr> decontract_list(const Context& g, const Context& g2, const TermPtr& t,
                                     std::set<std::string>& bound) {
  std::set<TermPtr, TermLess> out;
  decontract_rec(g, g2, t, bound, out);
  return {out.begin(), out.end()};
}

void decontract_rec(const Context& g, const Context& g2, const TermPtr& t,
                    std::set<std::string>& bound, std::set<TermPtr, TermLess>& out) {
  switch (t->op) {
    case Op::PosVar: {
      if (!bound.count(t->name) && g.binds(t->name))
        for (const auto& z : duplicates_of(g, g2, t->name)) out.insert(LjpTerm::pos_var(z));
      else
        out.insert(t);
      return;
    }
    case Op::Coret: {
      auto subs = decontract_list(g, g2, t->a, bound);
      if (!bound.count(t->name) && g.binds(t->name)) {
        for (const auto& x : duplicates_of(g, g2, t->name))
          for (const auto& s : subs) out.insert(LjpTerm::coret(x, s));
      } else {
        for (const auto& s : subs) out.insert(LjpTerm::coret(t->name, s));
      }
      return;
    }
    case Op::BindPos:
    case Op::BindNeg: {
      bool fresh = bound.insert(t->name).second;
      auto subs = decontract_list(g, g2, t->a, bound);
      if (fresh) bound.erase(t->name);
      for (const auto& e : subs)
        out.insert(LjpTerm::make(t->op, t->name, t->index, t->ann, {e}));
      return;
    }
    default: {
      if (!t->a) {
        out.insert(t);
        return;
      }
      auto as = decontract_list(g, g2, t->a, bound);
      if (!t->b) {
        for (const auto& a : as) out.insert(LjpTerm::make(t->op, t->name, t->index, t->ann, {a}));
        return;
      }
      auto bs = decontract_list(g, g2, t->b, bound);
      for (const auto& a : as)
        for (const auto& b : bs)
          out.insert(LjpTerm::make(t->op, t->name, t->index, t->ann, {a, b}));
      return;
    }
  }
}

}  // namespace

std::vector<TermPtr> decontract_members(const Context& g, const Context& g2, const TermPtr& t) {
  if (!context_leq(g, g2))
    throw PreconditionError("decontraction demands an inessential context extension");
  std::set<std::string> bound;
  return decontract_list(g, g2, t, bound);
}

}  // namespace polsearch
