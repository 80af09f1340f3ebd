#include "doctest.h"
#include "polsearch/parse.hpp"
#include "support/gen.hpp"

using namespace polsearch;

namespace {

Sequent rho_x() { return parse_ljp_sequent("x: a- |- a-"); }
Sequent rho_xy() { return parse_ljp_sequent("x: a-, y: a- |- a-"); }
Sequent rho_other() { return parse_ljp_sequent("y: up bot |- a-"); }

ForestPtr coret_nil(const std::string& x) {
  return Forest::node(Op::Coret, x, 0, nullptr, {Forest::node(Op::Nil, "", 0, nullptr, {})});
}

}  // namespace

TEST_CASE("canonical sums") {
  ForestPtr one = coret_nil("x");
  CHECK(equal(canon_sum(Sort::Expr, {one, one}), one));  // idempotency
  ForestPtr empty = canon_sum(Sort::Value, {});
  CHECK(to_string(empty) == "sum@v{}");
  ForestPtr a = coret_nil("x");
  ForestPtr b = coret_nil("y");
  CHECK(equal(canon_sum(Sort::Expr, {b, a}), canon_sum(Sort::Expr, {a, b})));  // commutativity
  // flattening keeps sums one level deep
  ForestPtr nested = canon_sum(Sort::Expr, {canon_sum(Sort::Expr, {a, b}), coret_nil("w")});
  CHECK(nested->children.size() == 3);
  // canon_sum is idempotent as an operation
  CHECK(equal(canon_sum(Sort::Expr, {canon_sum(Sort::Expr, {a, b})}),
              canon_sum(Sort::Expr, {a, b})));
  CHECK_THROWS_AS(canon_sum(Sort::Expr, {Forest::node(Op::Nil, "", 0, nullptr, {})}), SyntaxError);
  CHECK_THROWS_AS(canon_sum(Sort::Coterm, {}), SyntaxError);
}

TEST_CASE("free fixed-point variables") {
  ForestPtr var = Forest::fixvar_at("X", rho_x());
  auto vs = fpv(var);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].name == "X");
  CHECK(equal(*vs[0].rho, rho_x()));

  // the binder also captures inessential extensions of its annotation
  ForestPtr ext = Forest::fixvar_at("X", rho_xy());
  CHECK(fpv(Forest::gfp("X", rho_x(), ext)).empty());

  // a different name stays free
  ForestPtr other = Forest::fixvar_at("Y", rho_x());
  auto free = fpv(Forest::gfp("X", rho_x(), other));
  REQUIRE(free.size() == 1);
  CHECK(free[0].name == "Y");

  // an annotation that does not extend the binder's stays free too
  ForestPtr strange = Forest::fixvar_at("X", rho_other());
  CHECK(fpv(Forest::gfp("X", rho_x(), strange)).size() == 1);
}

TEST_CASE("well-bound") {
  CHECK(is_well_bound(Forest::gfp("X", rho_x(), Forest::fixvar_at("X", rho_xy()))));
  CHECK_FALSE(is_well_bound(Forest::gfp("X", rho_x(), Forest::fixvar_at("X", rho_other()))));
}

TEST_CASE("guardedness") {
  // occurrence at depth 0
  CHECK_FALSE(is_guarded(Forest::gfp("X", rho_x(), Forest::fixvar_at("X", rho_x()))));
  // occurrence under a constructor chain
  ForestPtr deep = Forest::node(
      Op::Coret, "x", 0, nullptr,
      {Forest::node(Op::ConsV, "", 0, nullptr,
                    {Forest::node(Op::Thunk, "", 0, nullptr,
                                  {Forest::node(Op::Ea, "", 0, nullptr,
                                                {Forest::fixvar_at("X", rho_x())})}),
                     Forest::node(Op::Nil, "", 0, nullptr, {})})});
  CHECK(is_guarded(Forest::gfp("X", rho_x(), deep)));
  // sums add no depth
  ForestPtr summed = canon_sum(Sort::Expr, {Forest::fixvar_at("X", rho_x()), coret_nil("x")});
  CHECK_FALSE(is_guarded(Forest::gfp("X", rho_x(), summed)));
}

TEST_CASE("occurrence depths recount along the reported path") {
  testgen::Rng rng(41);
  std::vector<Sequent> pool = {rho_x(), rho_xy(), rho_other()};
  for (int i = 0; i < 200; ++i) {
    ForestPtr t = testgen::gen_forest(rng, 6, pool);
    for (const auto& occ : fix_occurrences(t)) {
      ForestPtr cur = t;
      int nodes = 0;
      for (int step : occ.path) {
        if (cur->fkind == FKind::Node) ++nodes;
        cur = child_at(cur, step);
      }
      CHECK(cur->fkind == FKind::FixVar);
      CHECK(cur->fixvar == occ.name);
      CHECK(nodes == occ.depth);
    }
  }
}

TEST_CASE("forest construction checks sorts") {
  CHECK_THROWS_AS(Forest::node(Op::Thunk, "", 0, nullptr, {coret_nil("x")}), SyntaxError);
  CHECK_THROWS_AS(Forest::gfp("X", rho_x(), Forest::node(Op::Nil, "", 0, nullptr, {})),
                  SyntaxError);
  CHECK_THROWS_AS(Forest::fixvar_at("X", parse_ljp_sequent("x: a- |- up bot")), SyntaxError);
}
