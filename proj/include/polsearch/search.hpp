#pragma once

// The terminating builder of finitary solution spaces and one-step gfp
// unfolding.  A query sequent is compiled into a finitary forest; R-stable
// sequents already covered by an entry of the fixed-point environment become
// variables instead of recursing, and the two R-stable clauses introduce
// fresh gfp binders.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polsearch/forest.hpp"

namespace polsearch {

// Ordered fixed-point environment; names pairwise distinct.
class FixEnv {
 public:
  struct Entry {
    std::string name;
    SequentPtr rho;
  };

  FixEnv() = default;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  FixEnv extended(std::string name, Sequent rho) const {
    for (const auto& e : entries_)
      if (e.name == name) throw SyntaxError("fixed-point variable name occurs twice: " + name);
    FixEnv out = *this;
    out.entries_.push_back(Entry{std::move(name), std::make_shared<Sequent>(std::move(rho))});
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

// The representation function.  If some env entry rho_i <= s (s R-stable),
// yields the variable of the biggest such index annotated with s itself;
// otherwise applies the clause matching the sequent form, building all sums
// canonically and drawing fresh object variables from the deterministic
// scheme.  Total; results are memoized and shared.
ForestPtr finrep(const Sequent& s, const FixEnv& env);

// finrep with the empty environment; the result is closed.
ForestPtr finrep_closed(const Sequent& s);

// One approximation step of the interpretation: strips every gfp binder of
// the input and replaces every fixed-point variable by the representation of
// its annotation (freshly headed by its own binders, which are not walked).
ForestPtr unfold_gfp(const ForestPtr& t);

struct CacheStats {
  std::size_t finrep_entries = 0;
  std::size_t decision_entries = 0;
};
CacheStats cache_stats();
void clear_caches();

}  // namespace polsearch
