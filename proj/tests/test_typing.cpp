#include "doctest.h"
#include "polsearch/decide.hpp"
#include "polsearch/parse.hpp"
#include "support/gen.hpp"

using namespace polsearch;

TEST_CASE("infer on the hand examples") {
  Context g;
  g = g.extended("x", parse_pformula("a-"));
  TermPtr t = parse_ljp_term("coret x (nil)");
  CHECK(to_string(infer(g, t)) == "a-");

  Context empty;
  TermPtr id = parse_ljp_term("lam(x@a-. coret x (nil))");
  CHECK(to_string(infer(empty, id)) == "down a- -> a-");

  CHECK_THROWS_WITH_AS(infer(empty, parse_ljp_term("ret(z)")), "unbound variable z",
                       TypingError);
}

TEST_CASE("check on the hand examples") {
  CHECK(check(parse_ljp_sequent("x: a- |- a-"), parse_ljp_term("coret x (nil)")));
  CHECK(check(parse_ljp_sequent("=> down a- -> a-"), parse_ljp_term("lam(x@a-. coret x (nil))")));
  std::string diag;
  CHECK_FALSE(check(parse_ljp_sequent("x: a- |- up bot"), parse_ljp_term("coret x (nil)"), &diag));
  CHECK(!diag.empty());
}

TEST_CASE("error paths") {
  Context g;
  g = g.extended("z", parse_pformula("a+"));
  // coret with a positively typed head
  CHECK_THROWS_AS(infer(g, LjpTerm::coret("z", LjpTerm::nil())), TypingError);
  // copair branches inferring different goals
  TermPtr branch1 = LjpTerm::bind_neg("x", parse_pformula("a-"), parse_ljp_term("coret x (nil)"));
  TermPtr branch2 = LjpTerm::abort(parse_pformula("b-"));
  CHECK_THROWS_AS(infer(Context(), LjpTerm::copair(branch1, branch2)), TypingError);
  // dlv body that is not composite negative
  Context g2;
  g2 = g2.extended("x", parse_pformula("a-"));
  CHECK_THROWS_AS(infer(g2, LjpTerm::dlv(LjpTerm::ea(parse_ljp_term("coret x (nil)")))),
                  TypingError);
  // spine results must be right formulas
  TermPtr bad_spine = LjpTerm::cothunk(
      LjpTerm::bind_pos("z0", parse_pformula("c+"),
                        LjpTerm::dlv(LjpTerm::ep(LjpTerm::ret(LjpTerm::pos_var("z0"))))));
  CHECK_THROWS_AS(infer(g2, bad_spine, parse_pformula("up c+")), TypingError);
  // spines demand the focus formula
  CHECK_THROWS_AS(infer(g2, LjpTerm::nil()), TypingError);
}

TEST_CASE("inference is deterministic and stable under inessential extension") {
  testgen::Rng rng(31);
  int typed = 0;
  for (int i = 0; i < 120 && typed < 60; ++i) {
    Sequent s = testgen::gen_rstable(rng, 3, 3);
    for (const auto& t : oracle_search(s, 7)) {
      ++typed;
      CHECK(check(s, t));
      PForm first = infer(s.ctx, t);
      PForm second = infer(s.ctx, t);
      CHECK(equal(first, second));
      Sequent ext = testgen::gen_extension(rng, s);
      CHECK(check(ext, t));
    }
  }
  CHECK(typed > 0);
}
