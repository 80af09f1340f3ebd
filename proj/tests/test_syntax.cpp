#include "doctest.h"
#include "polsearch/parse.hpp"
#include "support/gen.hpp"

using namespace polsearch;

TEST_CASE("formula classification partitions") {
  PForm a = parse_pformula("a-");
  PForm p = parse_pformula("a+");
  CHECK(a->is_negative());
  CHECK(a->is_right());
  CHECK_FALSE(a->is_composite_negative());
  CHECK(p->is_positive());
  CHECK(p->is_right());
  CHECK(p->is_left());
  CHECK(parse_pformula("up bot")->is_composite_negative());
  CHECK(parse_pformula("down a- -> a-")->is_composite_negative());
  CHECK_FALSE(parse_pformula("down a-")->is_right() == false);

  testgen::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    PForm f = testgen::gen_pformula(rng, 6);
    CHECK(f->is_negative() != f->is_positive());
    CHECK(f->is_right() != f->is_composite_negative());
  }
}

TEST_CASE("weight of formulas and sequents") {
  CHECK(weight(PFormula::bot()) == 0);
  CHECK(weight(parse_pformula("a+")) == 0);
  CHECK(weight(parse_pformula("a-")) == 1);
  CHECK(weight(parse_pformula("down a- -> a-")) == 5);
  CHECK(weight(parse_ljp_sequent("| bot => a-")) == 2);
  CHECK(weight(parse_ljp_sequent("x: a- |- a-")) == 2);

  testgen::Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    CHECK(weight(testgen::gen_neg(rng, 5)) >= 1);
    CHECK(weight(testgen::gen_pos(rng, 5)) >= 0);
    CHECK(weight(testgen::gen_sequent(rng, 3, 4)) >= 0);
  }
}

TEST_CASE("weight inequalities behind the termination argument") {
  testgen::Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    Context g = testgen::gen_context(rng, 3, 3);
    PForm n = testgen::gen_neg(rng, 3);
    PForm p = testgen::gen_pos(rng, 3);
    PForm p2 = testgen::gen_pos(rng, 3);
    PForm n2 = testgen::gen_neg(rng, 3);
    PForm a = testgen::gen_pformula(rng, 3);
    PForm r = rng.flip() ? PForm(testgen::gen_pos(rng, 3)) : PFormula::neg_atom("a");
    PForm atom = PFormula::pos_atom("c");

    PForm c = PFormula::imp(p, n);  // some composite negative
    CHECK(weight(Sequent::stable(g, c)) > weight(Sequent::invert_r(g, c)));
    std::string z = fresh_pos_var(g);
    CHECK(weight(Sequent::invert_l(g, atom, a)) >
          weight(Sequent::stable(g.extended(z, atom), a)));
    std::string x = fresh_neg_var(g);
    CHECK(weight(Sequent::invert_l(g, PFormula::down(n), a)) >
          weight(Sequent::stable(g.extended(x, n), a)));
    CHECK(weight(Sequent::focus_r(g, PFormula::down(n))) > weight(Sequent::invert_r(g, n)));
    CHECK(weight(Sequent::focus_r(g, PFormula::or_p(p, p2))) > weight(Sequent::focus_r(g, p)));
    CHECK(weight(Sequent::invert_r(g, PFormula::up(p))) > weight(Sequent::stable(g, p)));
    CHECK(weight(Sequent::invert_r(g, PFormula::imp(p, n))) >
          weight(Sequent::invert_l(g, p, n)));
    CHECK(weight(Sequent::invert_r(g, PFormula::and_n(n, n2))) >
          weight(Sequent::invert_r(g, n)));
    CHECK(weight(Sequent::focus_l(g, PFormula::up(p), r)) > weight(Sequent::invert_l(g, p, r)));
    CHECK(weight(Sequent::focus_l(g, PFormula::imp(p, n), r)) > weight(Sequent::focus_r(g, p)));
    CHECK(weight(Sequent::focus_l(g, PFormula::imp(p, n), r)) >
          weight(Sequent::focus_l(g, n, r)));
    CHECK(weight(Sequent::focus_l(g, PFormula::and_n(n, n2), r)) >
          weight(Sequent::focus_l(g, n2, r)));
    CHECK(weight(Sequent::invert_l(g, PFormula::or_p(p, p2), a)) >
          weight(Sequent::invert_l(g, p2, a)));
  }
}

TEST_CASE("inessential context extension") {
  Context g0;
  Context g1 = g0.extended("x", parse_pformula("a-"));
  Context g2 = g1.extended("y", parse_pformula("a-"));
  Context g3 = g1.extended("y", parse_pformula("up bot"));
  CHECK(context_leq(g1, g1));
  CHECK(context_leq(g1, g2));
  CHECK_FALSE(context_leq(g1, g3));
  CHECK_FALSE(context_leq(g2, g1));

  SUBCASE("preorder and set equality") {
    testgen::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
      Sequent rho = testgen::gen_rstable(rng, 3, 3);
      Sequent rho2 = testgen::gen_extension(rng, rho);
      Sequent rho3 = testgen::gen_extension(rng, rho2);
      CHECK(rstable_leq(rho, rho));
      CHECK(rstable_leq(rho, rho2));
      CHECK(rstable_leq(rho2, rho3));
      CHECK(rstable_leq(rho, rho3));  // transitivity along the chain
      if (rstable_leq(rho2, rho)) {
        // mutual inclusion means equal binding sets
        for (const auto& b : rho2.ctx.bindings()) {
          auto t = rho.ctx.lookup(b.name);
          CHECK(t);
          CHECK(equal(*t, b.type));
        }
      }
    }
  }
}

TEST_CASE("context invariants") {
  Context g;
  g = g.extended("x", parse_pformula("a-"));
  CHECK_THROWS_AS(g.extended("x", parse_pformula("b-")), SyntaxError);
  CHECK_THROWS_AS(Sequent::stable(g.extended("z", parse_pformula("down a-")),
                                  parse_pformula("a-")),
                  SyntaxError);
  CHECK_THROWS_AS(Sequent::focus_l(g, parse_pformula("a-"), parse_pformula("up bot")),
                  SyntaxError);
}

TEST_CASE("alpha key identifies sequents up to renaming") {
  Sequent s1 = parse_ljp_sequent("x: a-, y: up bot |- a-");
  Sequent s2 = parse_ljp_sequent("p: a-, q: up bot |- a-");
  Sequent s3 = parse_ljp_sequent("x: up bot, y: a- |- a-");
  CHECK(alpha_key(s1) == alpha_key(s2));
  CHECK(alpha_key(s1) != alpha_key(s3));
}

TEST_CASE("fresh variable scheme skips taken names") {
  Context g;
  CHECK(fresh_neg_var(g) == "x0");
  g = g.extended("x0", parse_pformula("a-"));
  CHECK(fresh_neg_var(g) == "x1");
  CHECK(fresh_pos_var(g) == "z0");
}
