#pragma once

// Finitary forests: LJP proof-term constructors plus sorted finite sums,
// fixed-point variables annotated with R-stable sequents, and gfp binders.
// Sums exist only at sorts v, s, e and are kept in ACI normal form (flat,
// duplicate-free, sorted).  A gfp binder captures every occurrence of its
// variable whose annotation inessentially extends the binder's.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "polsearch/terms.hpp"

namespace polsearch {

enum class FKind { Node, Sum, FixVar, Gfp };

class Forest;
using ForestPtr = std::shared_ptr<const Forest>;
using SequentPtr = std::shared_ptr<const Sequent>;

class Forest {
 public:
  FKind fkind;

  // Node payload (mirrors LjpTerm constructors).
  Op op = Op::Nil;
  std::string name;  // PosVar, BindPos, BindNeg, Coret
  int index = 0;     // Inj, ConsI
  PForm ann;         // Inj, BindPos, BindNeg, Abort

  std::vector<ForestPtr> children;  // Node children; Sum summands; Gfp: {body}

  Sort sum_sort = Sort::Expr;  // Sum only (needed for empty sums)

  std::string fixvar;  // FixVar / Gfp
  SequentPtr rho;      // FixVar / Gfp annotation

  Sort sort() const;

  static ForestPtr node(Op op, std::string name, int index, PForm ann,
                        std::vector<ForestPtr> children);
  static ForestPtr fixvar_at(std::string x, Sequent rho);
  static ForestPtr gfp(std::string x, Sequent rho, ForestPtr body);
  // Lifts a plain proof term into a sum-free forest.
  static ForestPtr of_term(const TermPtr& t);

 private:
  Forest() = default;
  friend ForestPtr canon_sum(Sort, std::vector<ForestPtr>);
};

// ACI normal form: flattens nested sums of the same sort, drops structural
// duplicates, sorts summands; a singleton collapses to its element and an
// empty list yields the tagged empty sum.  Throws on sort mismatch and on
// sums at sorts t or p.
ForestPtr canon_sum(Sort sort, std::vector<ForestPtr> parts);

int compare(const ForestPtr& a, const ForestPtr& b);
bool equal(const ForestPtr& a, const ForestPtr& b);
std::string to_string(const ForestPtr& t);

int node_count(const ForestPtr& t);

// Free typed fixed-point variables, deduplicated and sorted.
struct FixUse {
  std::string name;
  SequentPtr rho;
};
std::vector<FixUse> fpv(const ForestPtr& t);

// Every gfp X@rho binds only occurrences X@rho' with rho <= rho'.
bool is_well_bound(const ForestPtr& t);

// Every occurrence captured by a gfp sits under at least one constructor
// symbol; sums and binders do not add depth.
bool is_guarded(const ForestPtr& t);

// Occurrence iterator for free fixed-point variables of the whole forest.
// The path records child indices from the root (Gfp bodies are index 0);
// depth counts only the Node steps along the path.
struct FixOccurrence {
  std::string name;
  SequentPtr rho;
  int depth = 0;
  std::vector<int> path;
};
std::vector<FixOccurrence> fix_occurrences(const ForestPtr& t);

// Child of a forest along one path step (bounds-checked).
ForestPtr child_at(const ForestPtr& t, int step);

}  // namespace polsearch
