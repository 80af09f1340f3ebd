// Acceptance suite.  Each criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polsearch/parse.hpp"
#include "support/g4ip.hpp"
#include "support/gen.hpp"

using namespace polsearch;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same_terms(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

// Sequents exercised by criteria 1 and 2; criterion 3 re-checks the
// structural guarantees on every one of them.
std::vector<Sequent> exercised;

const char* kCuratedLjp[] = {
    "x: a- |- a-",
    "|- a-",
    "x: a-, y: a- |- a-",
    "x: down a- -> a- |- a-",
    "x: down a- -> a-, y: a- |- a-",
    "|- [bot]",
    "z: a+ |- [a+]",
    "z: a+, w: a+ |- [a+]",
    "|- [a+ \\/ b+]",
    "z: a+ |- [a+ \\/ a+]",
    "=> a-",
    "=> down a- -> a-",
    "=> a- /\\ a-",
    "=> down a- -> down b- -> a-",
    "=> down (a- /\\ b-) -> a-",
    "=> down (a- /\\ b-) -> b-",
    "=> up bot",
    "=> up (a+ \\/ b+)",
    "z: a+ => up (a+ \\/ b+)",
    "x: a- => down (down a- -> b-) -> b-",
    "| bot => a-",
    "| a+ => a-",
    "| a+ \\/ b+ => a-",
    "x: a- | down b- => a-",
    "| down (a- /\\ b-) => a-",
    "x: a- [a-] |- a-",
    "x: a- [b-] |- a-",
    "x: a- [a- /\\ b-] |- a-",
    "x: a- [up bot] |- a-",
    "x: a- [down a- -> a-] |- a-",
    "x: a- [up (a+ \\/ b+)] |- a-",
    "z: a+ [up (a+ \\/ b+)] |- b-",
    "|- a+",
    "z: a+ |- a+",
    "x: up a+ |- a+",
    "x: up (a+ \\/ b+) |- a-",
    "x: up bot |- a-",
    "x: up bot |- b+",
    "x: a- /\\ b- |- a-",
    "x: a- /\\ a- |- a-",
    "x: (a- /\\ a-) /\\ a- |- a-",
    "x: down a- -> b- , y: a- |- b-",
    "x: down b- -> a-, y: up bot |- a-",
    "x: up (a+ \\/ a+) |- a+",
    "z: a+, x: down a- -> a- |- a+",
    "x: up a+, y: a- |- a-",
    "|- up bot",
    "|- down a- -> a-",
    "x: a- |- down a- -> a-",
    "x: a- => up (down a- \\/ down a-)",
    "z: c+ | a+ \\/ b+ => c+",
    "x: a- [a- /\\ (a- /\\ b-)] |- b-",
    "x: up (a+ \\/ b+), y: a- |- a-",
    "w: down (a- /\\ b-) -> a-, x: a- /\\ b- |- a-",
};

// Curated finite cases: LJP sequents and LJT sequents, checked for
// saturation of the enumeration at the exact count.
const char* kFiniteLjp[] = {
    "x: a-, y: a- |- a-",
    "x: a- |- a-",
    "|- a-",
    "|- [bot]",
    "z: a+ |- [a+]",
    "z: a+, w: a+ |- [a+]",
    "x: a- /\\ a- |- a-",
    "x: a- /\\ b- |- a-",
    "x: (a- /\\ a-) /\\ a- |- a-",
    "x: up bot |- a-",
    "x: up (a+ \\/ b+) |- a-",
    "x: a- [down a- -> a-] |- a-",
    "z: a+ |- a+",
    "=> a- /\\ a-",
    "=> down a- -> a-",
    "=> down (a- /\\ b-) -> a-",
    "=> up (a+ \\/ b+)",
    "z: a+ => up (a+ \\/ a+)",
    "| bot => a-",
    "| a+ \\/ b+ => a-",
    "x: a- [a- /\\ b-] |- a-",
    "x: a- [up bot] |- a-",
    "x: down a- -> a- |- a-",
};

const char* kFiniteLjt[] = {
    "p: a /\\ a |- a",
    "x: a |- a",
    "x: a, y: a |- a",
    "=> a -> a",
    "=> a -> a -> a",
    "=> a /\\ b -> a",
    "=> bot -> a",
    "x: a => a \\/ b",
    "p: a /\\ (a /\\ a) |- a",
    "p: a /\\ a, q: b |- a",
};


void criterion1() {
  auto t0 = Clock::now();
  std::vector<Sequent> corpus;
  for (const char* text : kCuratedLjp) {
    Sequent s = parse_ljp_sequent(text);
    if (weight(s) <= 12) corpus.push_back(s);
  }
  std::size_t curated = corpus.size();
  testgen::Rng rng(101);
  while (corpus.size() < curated + 200) corpus.push_back(testgen::gen_sequent(rng, 3, 3));

  long mismatches = 0;
  for (const Sequent& s : corpus) {
    exercised.push_back(s);
    for (int k = 0; k <= 12; ++k)
      if (!same_terms(members(s, k), oracle_search(s, k))) ++mismatches;
  }
  double secs = seconds_since(t0);
  std::ostringstream detail;
  detail << curated << " curated + 200 random sequents, k <= 12, " << mismatches
         << " mismatches, " << secs << " s";
  report(1, "enumeration agrees with the typing oracle", curated >= 50 && mismatches == 0 && secs < 120.0,
         detail.str());
}

void criterion2() {
  testgen::G4ip prover;
  testgen::Rng rng(102);
  long disagreements = 0;
  const int trials = 500;
  for (int i = 0; i < trials; ++i) {
    IForm f = testgen::gen_iformula_sized(rng, 12);
    LjtSequent s = LjtSequent::invert(IContext(), f);
    if (ljt_inhabited(s) != prover.provable({}, f)) ++disagreements;
  }
  for (const char* text : {"=> a -> a", "=> ((a -> b) -> a) -> a", "=> bot -> a", "=> a \\/ b"})
    exercised.push_back(star_sequent(parse_ljt_sequent(text)));
  bool fixed = ljt_inhabited(parse_ljt_sequent("=> a -> a")) &&
               !ljt_inhabited(parse_ljt_sequent("=> ((a -> b) -> a) -> a")) &&
               ljt_inhabited(parse_ljt_sequent("=> bot -> a")) &&
               !ljt_inhabited(parse_ljt_sequent("=> a \\/ b"));
  std::ostringstream detail;
  detail << trials << " random formulas, " << disagreements
         << " disagreements; identity/Peirce/ex-falso/disjunction as expected: "
         << (fixed ? "yes" : "no");
  report(2, "provability agrees with the contraction-free prover", disagreements == 0 && fixed,
         detail.str());
}

void criterion3() {
  long violations = 0;
  long checked = 0;
  for (const Sequent& s : exercised) {
    ForestPtr rep = finrep_closed(s);
    ++checked;
    if (!is_guarded(rep)) ++violations;
    if (!is_well_bound(rep)) ++violations;
    if (!fpv(rep).empty()) ++violations;
    std::vector<ForestPtr> stack = {rep};
    while (!stack.empty()) {
      ForestPtr t = stack.back();
      stack.pop_back();
      if ((t->fkind == FKind::Gfp || t->fkind == FKind::FixVar) && !t->rho->is_rstable())
        ++violations;
      for (const auto& c : t->children) stack.push_back(c);
    }
  }
  std::ostringstream detail;
  detail << checked << " spaces checked, " << violations << " violations";
  report(3, "guardedness, well-boundness, closedness, R-stable annotations",
         checked >= 250 && violations == 0, detail.str());
}

void criterion4() {
  long bad = 0;
  long cases = 0;
  // Saturation: the enumeration reaches the claimed count exactly and stays
  // there, never exceeding it along the way.
  auto saturates = [](const std::function<std::size_t(int)>& at, std::uint64_t c) {
    for (int k = 2; k <= 80; k += 2) {
      std::size_t n = at(k);
      if (n > c) return false;
      if (n == c) return at(k + 8) == c;
    }
    return false;
  };
  for (const char* text : kFiniteLjp) {
    Sequent s = parse_ljp_sequent(text);
    ++cases;
    if (!finite(s)) { ++bad; continue; }
    if (!saturates([&](int k) { return members(s, k).size(); }, count(s))) ++bad;
  }
  for (const char* text : kFiniteLjt) {
    LjtSequent s = parse_ljt_sequent(text);
    ++cases;
    if (!ljt_finite(s)) { ++bad; continue; }
    if (!saturates([&](int k) { return members_ljt(s, k).size(); }, ljt_count(s))) ++bad;
  }
  bool counts_known = count(parse_ljp_sequent("x: a-, y: a- |- a-")) == 2 &&
                      ljt_count(parse_ljt_sequent("p: a /\\ a |- a")) == 2;

  LjtSequent church = parse_ljt_sequent("f: a -> a, x: a |- a");
  Sequent loop = parse_ljp_sequent("x: down a- -> a-, y: a- |- a-");
  bool infinite_detected = !ljt_finite(church) && !finite(loop);
  bool growing = true;
  std::size_t prev_church = 0, prev_loop = 0;
  for (int k : {4, 8, 12, 16}) {
    std::size_t nc = members_ljt(church, k).size();
    std::size_t nl = members(loop, k).size();
    if (k > 4 && (nc <= prev_church || nl <= prev_loop)) growing = false;
    prev_church = nc;
    prev_loop = nl;
  }
  std::ostringstream detail;
  detail << cases << " finite cases saturated at the exact count (" << bad
         << " failures); infinite families detected with strictly growing member counts at k = "
            "4, 8, 12, 16: "
         << ((infinite_detected && growing) ? "yes" : "no");
  report(4, "finiteness decisions", cases >= 30 && bad == 0 && counts_known && infinite_detected && growing,
         detail.str());
}

void criterion5() {
  testgen::Rng rng(105);
  std::vector<ForestPtr> forests;
  std::set<std::string> seen;
  for (const Sequent& s : exercised) {
    if (forests.size() >= 600) break;
    ForestPtr rep = finrep_closed(s);
    if (seen.insert(to_string(rep)).second) forests.push_back(rep);
  }
  std::vector<Sequent> pool;
  for (int i = 0; i < 8; ++i) pool.push_back(testgen::gen_rstable(rng, 2, 2));
  while (forests.size() < 1000) forests.push_back(testgen::gen_forest(rng, 5, pool));

  long violations = 0;
  for (const ForestPtr& t : forests)
    for (const auto& p : {empty_predicate(), sharp_predicate()}) {
      if (nbinf(p, t) == binf(p, t)) ++violations;
      if (ff(p, t) == nff(p, t)) ++violations;
    }
  std::ostringstream detail;
  detail << forests.size() << " forests, both parameters, " << violations << " violations";
  report(5, "complementarity of the predicate pairs", forests.size() >= 1000 && violations == 0,
         detail.str());
}

void criterion6() {
  testgen::Rng rng(106);
  long round_trip_bad = 0, soundness_bad = 0, set_bad = 0, sequents = 0, terms = 0;
  const int k = 9;
  while (sequents < 100) {
    LjtSequent s = testgen::gen_ljt_sequent(rng, 2, 3);
    ++sequents;
    Sequent star = star_sequent(s);
    std::set<TermPtr, TermLess> translated;
    for (const auto& t : oracle_search_ljt(s, k)) {
      ++terms;
      TermPtr image = star_term_in(s, t);
      if (!equal(forget_term(image), t)) ++round_trip_bad;
      if (!check(star, image)) ++soundness_bad;
      if (term_size(image) <= k) translated.insert(image);
    }
    if (!same_terms(std::vector<TermPtr>(translated.begin(), translated.end()), members(star, k))) ++set_bad;
  }
  std::ostringstream detail;
  detail << sequents << " sequents, " << terms << " oracle terms; round-trip failures "
         << round_trip_bad << ", soundness failures " << soundness_bad
         << ", member-set mismatches " << set_bad;
  report(6, "negative translation is sound, faithful and left-invertible",
         round_trip_bad == 0 && soundness_bad == 0 && set_bad == 0, detail.str());
}

void criterion7() {
  testgen::Rng rng(107);
  const int trials = 10000;
  long violations = 0;
  auto expect = [&](bool ok) { if (!ok) ++violations; };
  for (int i = 0; i < trials; ++i) {
    Context g = testgen::gen_context(rng, 3, 3);
    PForm n = testgen::gen_neg(rng, 3);
    PForm n2 = testgen::gen_neg(rng, 3);
    PForm p = testgen::gen_pos(rng, 3);
    PForm p2 = testgen::gen_pos(rng, 3);
    PForm a = testgen::gen_pformula(rng, 3);
    PForm r = rng.flip() ? PForm(testgen::gen_pos(rng, 3)) : PFormula::neg_atom("a");
    PForm atom = PFormula::pos_atom("c");
    PForm c = rng.flip() ? PFormula::imp(p, n) : PFormula::up(p);

    expect(weight(n) >= 1);
    expect(weight(p) >= 0);
    expect(weight(Sequent::stable(g, c)) > weight(Sequent::invert_r(g, c)));
    expect(weight(Sequent::invert_l(g, atom, a)) >
           weight(Sequent::stable(g.extended(fresh_pos_var(g), atom), a)));
    expect(weight(Sequent::invert_l(g, PFormula::down(n), a)) >
           weight(Sequent::stable(g.extended(fresh_neg_var(g), n), a)));
    expect(weight(Sequent::focus_r(g, PFormula::down(n))) > weight(Sequent::invert_r(g, n)));
    expect(weight(Sequent::focus_r(g, PFormula::or_p(p, p2))) > weight(Sequent::focus_r(g, p)));
    expect(weight(Sequent::invert_r(g, PFormula::up(p))) > weight(Sequent::stable(g, p)));
    expect(weight(Sequent::invert_r(g, PFormula::imp(p, n))) >
           weight(Sequent::invert_l(g, p, n)));
    expect(weight(Sequent::invert_r(g, PFormula::and_n(n, n2))) >
           weight(Sequent::invert_r(g, n2)));
    expect(weight(Sequent::focus_l(g, PFormula::up(p), r)) > weight(Sequent::invert_l(g, p, r)));
    expect(weight(Sequent::focus_l(g, PFormula::imp(p, n), r)) > weight(Sequent::focus_r(g, p)));
    expect(weight(Sequent::focus_l(g, PFormula::imp(p, n), r)) >
           weight(Sequent::focus_l(g, n, r)));
    expect(weight(Sequent::focus_l(g, PFormula::and_n(n, n2), r)) >
           weight(Sequent::focus_l(g, n, r)));
    expect(weight(Sequent::invert_l(g, PFormula::or_p(p, p2), a)) >
           weight(Sequent::invert_l(g, p, a)));
    expect(weight(testgen::gen_sequent(rng, 2, 3)) >= 0);
  }
  std::ostringstream detail;
  detail << trials << " instances per inequality, " << violations << " violations";
  report(7, "weight measure inequalities", violations == 0, detail.str());
}

void criterion8() {
  testgen::Rng rng(108);
  long bad = 0;
  int pairs = 0;
  while (pairs < 20) {
    Sequent rho = testgen::gen_rstable(rng, 2, 2);
    Sequent rho2 = testgen::gen_extension(rng, rho);
    if (equal(rho, rho2)) continue;
    ++pairs;
    for (int k = 0; k <= 8; ++k) {
      std::set<TermPtr, TermLess> expanded;
      for (const auto& t : members(rho, k))
        for (const auto& u : decontract_members(rho.ctx, rho2.ctx, t)) expanded.insert(u);
      if (!same_terms(std::vector<TermPtr>(expanded.begin(), expanded.end()), members(rho2, k))) ++bad;
    }
  }
  std::ostringstream detail;
  detail << pairs << " extension pairs, k <= 8, " << bad << " mismatches";
  report(8, "decontraction matches the extended space", bad == 0, detail.str());
}

void criterion9() {
  testgen::Rng rng(109);
  double worst = 0.0;
  bool all_fast = true;
  for (int i = 0; i < 12; ++i) {
    IForm f = testgen::gen_iformula_sized(rng, 20, 2);
    LjtSequent s = LjtSequent::invert(IContext(), f);
    auto t0 = Clock::now();
    ljt_inhabited(s);
    ljt_finite(s);
    double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    if (secs >= 10.0) all_fast = false;
  }
  for (int i = 0; i < 12; ++i) {
    Sequent s = Sequent::stable(testgen::gen_context(rng, 2, 4), testgen::gen_pformula(rng, 15));
    auto t0 = Clock::now();
    inhabited(s);
    finite(s);
    double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    if (secs >= 10.0) all_fast = false;
  }

  long round_trip_bad = 0;
  for (const char* text : kCuratedLjp) {
    Sequent s = parse_ljp_sequent(text);
    if (!equal(parse_ljp_sequent(to_string(s)), s)) ++round_trip_bad;
  }
  for (int i = 0; i < 300; ++i) {
    PForm f = testgen::gen_pformula(rng, 6);
    if (!equal(parse_pformula(to_string(f)), f)) ++round_trip_bad;
    Sequent s = testgen::gen_sequent(rng, 3, 3);
    if (!equal(parse_ljp_sequent(to_string(s)), s)) ++round_trip_bad;
    LjtSequent ls = testgen::gen_ljt_sequent(rng, 3, 3);
    if (!equal(parse_ljt_sequent(to_string(ls)), ls)) ++round_trip_bad;
    for (const auto& t : oracle_search(testgen::gen_sequent(rng, 2, 2), 6))
      if (!equal(parse_ljp_term(to_string(t)), t)) ++round_trip_bad;
  }
  std::ostringstream detail;
  detail << "worst decision time " << worst << " s; " << round_trip_bad
         << " round-trip failures";
  report(9, "desk-scale performance and parse/render round trip",
         all_fast && round_trip_bad == 0, detail.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
