#include "polsearch/search.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace polsearch {

namespace {

// Shared memo table: concurrent readers, serialized insertion.
class ForestCache {
 public:
  ForestPtr find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }

  void insert(const std::string& key, const ForestPtr& value) {
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
  std::unordered_map<std::string, ForestPtr> map_;
};

ForestCache& finrep_cache() {
  static ForestCache cache;
  return cache;
}

std::string cache_key(const Sequent& s, const FixEnv& env) {
  std::string key = to_string(s);
  for (const auto& e : env.entries()) {
    key += "\x1f";
    key += e.name;
    key += "@";
    key += to_string(*e.rho);
  }
  return key;
}

// Summands produced here must be pairwise distinguishable by their head
// (distinct constructors or distinct head variables); exact counting relies
// on it, so it is verified at build time.
ForestPtr build_sum(Sort sort, std::vector<ForestPtr> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const auto& a = parts[i];
      const auto& b = parts[j];
      if (a->fkind == FKind::Node && b->fkind == FKind::Node && a->op == b->op &&
          a->index == b->index && a->name == b->name)
        throw SyntaxError("internal: sum summands share a head");
    }
  return canon_sum(sort, std::move(parts));
}

ForestPtr build(const Sequent& s, const FixEnv& env);

ForestPtr build_uncached(const Sequent& s, const FixEnv& env) {
  const Context& g = s.ctx;
  switch (s.kind) {
    case SeqKind::FocusR: {
      const PForm& p = s.goal;
      switch (p->kind) {
        case PKind::PosAtom: {
          std::vector<ForestPtr> parts;
          for (const auto& b : g.bindings())
            if (equal(b.type, p)) parts.push_back(Forest::node(Op::PosVar, b.name, 0, nullptr, {}));
          return build_sum(Sort::Value, std::move(parts));
        }
        case PKind::Bot:
          return canon_sum(Sort::Value, {});
        case PKind::Down:
          return Forest::node(Op::Thunk, "", 0, nullptr, {build(Sequent::invert_r(g, p->left), env)});
        case PKind::Or: {
          std::vector<ForestPtr> parts;
          parts.push_back(Forest::node(Op::Inj, "", 1, p->right,
                                       {build(Sequent::focus_r(g, p->left), env)}));
          parts.push_back(Forest::node(Op::Inj, "", 2, p->left,
                                       {build(Sequent::focus_r(g, p->right), env)}));
          return build_sum(Sort::Value, std::move(parts));
        }
        default:
          throw SyntaxError("focus-right goal must be positive");
      }
    }
    case SeqKind::InvertR: {
      const PForm& n = s.goal;
      switch (n->kind) {
        case PKind::NegAtom:
          return Forest::node(Op::Ea, "", 0, nullptr, {build(Sequent::stable(g, n), env)});
        case PKind::Up:
          return Forest::node(Op::Ep, "", 0, nullptr, {build(Sequent::stable(g, n->left), env)});
        case PKind::Imp:
          return Forest::node(Op::Lam, "", 0, nullptr,
                              {build(Sequent::invert_l(g, n->left, n->right), env)});
        case PKind::AndN:
          return Forest::node(Op::Pair, "", 0, nullptr,
                              {build(Sequent::invert_r(g, n->left), env),
                               build(Sequent::invert_r(g, n->right), env)});
        default:
          throw SyntaxError("invert-right goal must be negative");
      }
    }
    case SeqKind::FocusL: {
      const PForm& n = s.focus;
      const PForm& r = s.goal;
      switch (n->kind) {
        case PKind::NegAtom:
          if (equal(n, r)) return Forest::node(Op::Nil, "", 0, nullptr, {});
          return canon_sum(Sort::Spine, {});
        case PKind::Up:
          return Forest::node(Op::Cothunk, "", 0, nullptr,
                              {build(Sequent::invert_l(g, n->left, r), env)});
        case PKind::Imp:
          return Forest::node(Op::ConsV, "", 0, nullptr,
                              {build(Sequent::focus_r(g, n->left), env),
                               build(Sequent::focus_l(g, n->right, r), env)});
        case PKind::AndN: {
          std::vector<ForestPtr> parts;
          parts.push_back(Forest::node(Op::ConsI, "", 1, nullptr,
                                       {build(Sequent::focus_l(g, n->left, r), env)}));
          parts.push_back(Forest::node(Op::ConsI, "", 2, nullptr,
                                       {build(Sequent::focus_l(g, n->right, r), env)}));
          return build_sum(Sort::Spine, std::move(parts));
        }
        default:
          throw SyntaxError("focus-left focus must be negative");
      }
    }
    case SeqKind::InvertL: {
      const PForm& p = s.focus;
      const PForm& a = s.goal;
      switch (p->kind) {
        case PKind::PosAtom: {
          std::string z = fresh_pos_var(g);
          return Forest::node(Op::BindPos, z, 0, p,
                              {build(Sequent::stable(g.extended(z, p), a), env)});
        }
        case PKind::Down: {
          std::string x = fresh_neg_var(g);
          return Forest::node(Op::BindNeg, x, 0, p->left,
                              {build(Sequent::stable(g.extended(x, p->left), a), env)});
        }
        case PKind::Bot:
          return Forest::node(Op::Abort, "", 0, a, {});
        case PKind::Or:
          return Forest::node(Op::Copair, "", 0, nullptr,
                              {build(Sequent::invert_l(g, p->left, a), env),
                               build(Sequent::invert_l(g, p->right, a), env)});
        default:
          throw SyntaxError("invert-left focus must be positive");
      }
    }
    case SeqKind::Stable: {
      const PForm& a = s.goal;
      if (a->is_composite_negative())
        return Forest::node(Op::Dlv, "", 0, nullptr, {build(Sequent::invert_r(g, a), env)});
      // R-stable: negative atom or positive formula.  Bind a fresh fixed
      // point and search the context (plus the focus-right alternative for
      // positive goals).
      std::string fix = "X" + std::to_string(env.size());
      FixEnv inner = env.extended(fix, s);
      std::vector<ForestPtr> parts;
      if (a->is_positive())
        parts.push_back(Forest::node(Op::Ret, "", 0, nullptr,
                                     {build(Sequent::focus_r(g, a), inner)}));
      for (const auto& b : g.bindings())
        if (b.type->is_negative())
          parts.push_back(Forest::node(Op::Coret, b.name, 0, nullptr,
                                       {build(Sequent::focus_l(g, b.type, a), inner)}));
      return Forest::gfp(fix, s, build_sum(Sort::Expr, std::move(parts)));
    }
  }
  throw SyntaxError("unreachable sequent form");
}

ForestPtr build(const Sequent& s, const FixEnv& env) {
  // Environment guard: take the biggest index whose entry extends to s.
  if (s.is_rstable()) {
    const auto& es = env.entries();
    for (auto it = es.rbegin(); it != es.rend(); ++it)
      if (rstable_leq(*it->rho, s)) return Forest::fixvar_at(it->name, s);
  }
  std::string key = cache_key(s, env);
  if (auto hit = finrep_cache().find(key)) return hit;
  ForestPtr out = build_uncached(s, env);
  finrep_cache().insert(key, out);
  return out;
}

}  // namespace

ForestPtr finrep(const Sequent& s, const FixEnv& env) { return build(s, env); }

ForestPtr finrep_closed(const Sequent& s) { return build(s, FixEnv()); }

ForestPtr unfold_gfp(const ForestPtr& t) {
  switch (t->fkind) {
    case FKind::FixVar:
      return finrep_closed(*t->rho);
    case FKind::Gfp:
      return unfold_gfp(t->children[0]);
    case FKind::Sum: {
      std::vector<ForestPtr> parts;
      parts.reserve(t->children.size());
      for (const auto& c : t->children) parts.push_back(unfold_gfp(c));
      return canon_sum(t->sum_sort, std::move(parts));
    }
    case FKind::Node: {
      std::vector<ForestPtr> kids;
      kids.reserve(t->children.size());
      for (const auto& c : t->children) kids.push_back(unfold_gfp(c));
      return Forest::node(t->op, t->name, t->index, t->ann, std::move(kids));
    }
  }
  return t;
}

namespace detail {
std::size_t decision_cache_size();
void clear_decision_caches();
}  // namespace detail

CacheStats cache_stats() {
  CacheStats s;
  s.finrep_entries = finrep_cache().size();
  s.decision_entries = detail::decision_cache_size();
  return s;
}

void clear_caches() {
  finrep_cache().clear();
  detail::clear_decision_caches();
}

}  // namespace polsearch
