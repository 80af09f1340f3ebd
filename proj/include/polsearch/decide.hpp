#pragma once

// Decision procedures over finitary forests: existence and finiteness of
// members, bounded enumeration, exact counting, and the member-level reading
// of decontraction.  The independent typing oracle used to cross-check the
// forest pipeline lives here as well.

#include <cstdint>
#include <functional>
#include <vector>

#include "polsearch/search.hpp"

namespace polsearch {

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Total predicate on R-stable sequents.  The two instances in use are the
// constantly-false predicate and the sharp one (inhabitation itself).
using SeqPredicate = std::function<bool(const Sequent&)>;
SeqPredicate empty_predicate();
SeqPredicate sharp_predicate();

// "No members at any bound" fails: a variable contributes p(rho), a node (or
// gfp, read as a unary symbol) needs all children, a sum needs some summand.
bool nbinf(const SeqPredicate& p, const ForestPtr& t);
inline bool binf(const SeqPredicate& p, const ForestPtr& t) { return !nbinf(p, t); }

// Finitely many members: a node is finite when all children are, or when some
// child is sharply empty; a sum is finite when all summands are.
bool ff(const SeqPredicate& p, const ForestPtr& t);
inline bool nff(const SeqPredicate& p, const ForestPtr& t) { return !ff(p, t); }

// Decisions on sequents (memoized under the alpha key).
bool inhabited(const Sequent& s);
bool finite(const Sequent& s);

// All members of the solution space of s up to the size bound, sorted and
// duplicate-free.  Fixed-point variables and binders are resolved through the
// representation of their annotations, so the walk terminates by guardedness.
std::vector<TermPtr> members(const Sequent& s, int size_bound);
std::vector<TermPtr> members_of_forest(const ForestPtr& t, int size_bound);

// Exact number of inhabitants; demands finite(s).  Computed by structural
// recursion with the sharp emptiness shortcut, never by enumeration.
std::uint64_t count(const Sequent& s);

// Exhaustive bottom-up application of the typing rules with a size budget;
// independent of the forest pipeline.
std::vector<TermPtr> oracle_search(const Sequent& s, int size_bound);

// Member-level decontraction: each free occurrence of a variable of g is
// replaced, independently, by any same-typed variable of g2.  Demands
// context_leq(g, g2).
std::vector<TermPtr> decontract_members(const Context& g, const Context& g2, const TermPtr& t);

}  // namespace polsearch
