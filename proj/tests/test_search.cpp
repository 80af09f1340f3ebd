#include "doctest.h"
#include "polsearch/parse.hpp"
#include "support/gen.hpp"

using namespace polsearch;

TEST_CASE("representation of the hand examples") {
  CHECK(to_string(finrep_closed(parse_ljp_sequent("x: a- |- a-"))) ==
        "gfp X0@(x: a- |- a-). coret x (nil)");
  CHECK(to_string(finrep_closed(parse_ljp_sequent("|- a-"))) == "gfp X0@(|- a-). sum@e{}");
  CHECK(to_string(finrep_closed(parse_ljp_sequent("x: down a- -> a- |- a-"))) ==
        "gfp X0@(x: down a- -> a- |- a-). coret x (thunk(ea(X0@(x: down a- -> a- |- a-))) :: "
        "nil)");
  CHECK(to_string(finrep_closed(parse_ljp_sequent("|- [bot]"))) == "sum@v{}");
  CHECK(to_string(finrep_closed(parse_ljp_sequent("=> a-"))) == "ea(gfp X0@(|- a-). sum@e{})");
  ForestPtr pair = finrep_closed(parse_ljp_sequent("=> a- /\\ b-"));
  REQUIRE(pair->fkind == FKind::Node);
  CHECK(pair->op == Op::Pair);
  CHECK(pair->children.size() == 2);
}

TEST_CASE("guard prefers the biggest environment index") {
  // Both entries cover the query; the inner (newer) one must win.
  Sequent rho = parse_ljp_sequent("x: a- |- a-");
  FixEnv env = FixEnv().extended("X0", rho).extended("X1", rho);
  ForestPtr out = finrep(rho, env);
  REQUIRE(out->fkind == FKind::FixVar);
  CHECK(out->fixvar == "X1");
  CHECK(equal(*out->rho, rho));
}

TEST_CASE("the variable is annotated with the queried sequent, not the entry") {
  Sequent rho = parse_ljp_sequent("x: a- |- a-");
  Sequent bigger = parse_ljp_sequent("x: a-, y: a- |- a-");
  FixEnv env = FixEnv().extended("X0", rho);
  ForestPtr out = finrep(bigger, env);
  REQUIRE(out->fkind == FKind::FixVar);
  CHECK(equal(*out->rho, bigger));
}

TEST_CASE("structural guarantees on random sequents") {
  testgen::Rng rng(51);
  for (int i = 0; i < 150; ++i) {
    Sequent s = testgen::gen_sequent(rng, 3, 4);
    ForestPtr rep = finrep_closed(s);
    CHECK(is_guarded(rep));
    CHECK(is_well_bound(rep));
    CHECK(fpv(rep).empty());
    // every gfp annotation is R-stable by construction; walk and confirm
    std::vector<ForestPtr> stack = {rep};
    while (!stack.empty()) {
      ForestPtr t = stack.back();
      stack.pop_back();
      if (t->fkind == FKind::Gfp) CHECK(t->rho->is_rstable());
      for (const auto& c : t->children) stack.push_back(c);
    }
  }
}

TEST_CASE("fresh-name determinism across cache resets") {
  Sequent s = parse_ljp_sequent("x: down (a- /\\ b-) -> a- |- a-");
  std::string first = to_string(finrep_closed(s));
  clear_caches();
  std::string second = to_string(finrep_closed(s));
  CHECK(first == second);
}

TEST_CASE("one-step unfolding") {
  Sequent rho = parse_ljp_sequent("x: a- |- a-");
  ForestPtr g = finrep_closed(rho);
  REQUIRE(g->fkind == FKind::Gfp);
  CHECK(to_string(unfold_gfp(g)) == "coret x (nil)");

  ForestPtr var = Forest::fixvar_at("Y", rho);
  CHECK(equal(unfold_gfp(var), finrep_closed(rho)));

  ForestPtr wrapped = Forest::node(
      Op::Coret, "x", 0, nullptr,
      {Forest::node(Op::ConsV, "", 0, nullptr,
                    {Forest::node(Op::Thunk, "", 0, nullptr,
                                  {Forest::node(Op::Ea, "", 0, nullptr, {var})}),
                     Forest::node(Op::Nil, "", 0, nullptr, {})})});
  ForestPtr unfolded = unfold_gfp(wrapped);
  CHECK(to_string(unfolded) ==
        "coret x (thunk(ea(gfp X0@(x: a- |- a-). coret x (nil))) :: nil)");
}

TEST_CASE("unfolding preserves the members") {
  testgen::Rng rng(52);
  for (int i = 0; i < 60; ++i) {
    Sequent s = testgen::gen_sequent(rng, 2, 3);
    ForestPtr rep = finrep_closed(s);
    ForestPtr once = unfold_gfp(rep);
    ForestPtr twice = unfold_gfp(once);
    for (int k : {4, 8}) {
      auto expect = members_of_forest(rep, k);
      auto through_once = members_of_forest(once, k);
      auto through_twice = members_of_forest(twice, k);
      REQUIRE(expect.size() == through_once.size());
      REQUIRE(expect.size() == through_twice.size());
      for (std::size_t j = 0; j < expect.size(); ++j) {
        CHECK(equal(expect[j], through_once[j]));
        CHECK(equal(expect[j], through_twice[j]));
      }
    }
  }
}

TEST_CASE("memoization shares repeated subproblems") {
  clear_caches();
  finrep_closed(parse_ljp_sequent("x: a- /\\ a- |- a-"));
  CacheStats st = cache_stats();
  CHECK(st.finrep_entries > 0);
}
