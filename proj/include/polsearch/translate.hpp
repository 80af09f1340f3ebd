#pragma once

// LJT: three-sorted proof terms and their typing, the atomic/positive spine
// classification, the negative translation into LJP with its star fragment,
// the forgetful map back, and the derived decision procedures.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polsearch/decide.hpp"

namespace polsearch {

struct TranslationError : std::runtime_error {
  explicit TranslationError(const std::string& what) : std::runtime_error(what) {}
};

enum class LjtOp {
  // terms
  Lam,     // lam x@A. t
  Pair,    // pair(t1, t2)
  // expressions (also usable as terms through the silent coercion)
  Select,  // x(s)
  Inj,     // inj{i}[B](t), B the other disjunct
  // spines
  Nil,     // nil
  ConsT,   // t :: s
  ConsI,   // i :: s
  Abort,   // abort@R
  Copair,  // [x1@A1. e1, x2@A2. e2]
};

enum class LjtSort { Term, Expr, Spine };

class LjtTerm;
using LjtPtr = std::shared_ptr<const LjtTerm>;

class LjtTerm {
 public:
  LjtOp op;
  std::string name, name2;  // Lam/Select/Copair binders and head
  int index = 0;            // Inj, ConsI
  IForm ann, ann2;          // Lam: A; Inj: other disjunct; Abort: R; Copair: A1, A2
  LjtPtr a, b;

  // Expressions count as terms; sort() reports the tightest class.
  LjtSort sort() const;
  bool is_expression() const { return op == LjtOp::Select || op == LjtOp::Inj; }
  bool is_term() const { return sort() != LjtSort::Spine; }

  static LjtPtr lam(std::string x, IForm a, LjtPtr t);
  static LjtPtr pair(LjtPtr t1, LjtPtr t2);
  static LjtPtr select(std::string x, LjtPtr s);
  static LjtPtr inj(int i, IForm other, LjtPtr t);
  static LjtPtr nil();
  static LjtPtr cons_t(LjtPtr t, LjtPtr s);
  static LjtPtr cons_i(int i, LjtPtr s);
  static LjtPtr abort(IForm r);
  static LjtPtr copair(std::string x1, IForm a1, LjtPtr e1, std::string x2, IForm a2, LjtPtr e2);

 private:
  LjtTerm(LjtOp o) : op(o) {}
};

int compare(const LjtPtr& a, const LjtPtr& b);
bool equal(const LjtPtr& a, const LjtPtr& b);
std::string to_string(const LjtPtr& t);

struct LjtTermLess {
  bool operator()(const LjtPtr& a, const LjtPtr& b) const { return compare(a, b) < 0; }
};

// Constructor count; the term/expression coercion is silent.
int term_size(const LjtPtr& t);

// ---------------------------------------------------------------------------
// Typing
// ---------------------------------------------------------------------------

// Synthesizes the unique completing formula; `given` carries the focus A for
// spines and must be absent otherwise.
IForm infer_ljt(const IContext& g, const LjtPtr& t, const std::optional<IForm>& given = std::nullopt);
bool check_ljt(const LjtSequent& s, const LjtPtr& t, std::string* diag = nullptr);

// ---------------------------------------------------------------------------
// Spine classification and legality
// ---------------------------------------------------------------------------

enum class SpineClass { Atomic, Positive, Neither };

SpineClass classify_spine(const LjtPtr& s);
SpineClass classify_expression(const LjtPtr& e);

// Every expression occurring in t is atomic or positive.
bool is_legal(const LjtPtr& t);

// ---------------------------------------------------------------------------
// Negative translation and forgetful map
// ---------------------------------------------------------------------------

// A |-> A*: every intuitionistic formula becomes a negative formula.
PForm star_formula(const IForm& a);
// R |-> R° on right intuitionistic formulas.
PForm circ_formula(const IForm& r);

// Proof-term translation; defined on legal terms only.  Expressions are
// translated at their tightest category (to stable expressions).
TermPtr star_term(const LjtPtr& t);

// Translation at the category the sequent form demands: under an invert
// sequent an expression stands for a term, which adds the ea/ep coercion on
// the polarized side.
TermPtr star_term_in(const LjtSequent& s, const LjtPtr& t);

Sequent star_sequent(const LjtSequent& s);
Context star_context(const IContext& g);

// Inverse on the star fragment; throws TranslationError outside it.
IForm forget_formula(const PForm& f);
LjtPtr forget_term(const TermPtr& t);

// ---------------------------------------------------------------------------
// Derived decision procedures
// ---------------------------------------------------------------------------

bool ljt_inhabited(const LjtSequent& s);
bool ljt_finite(const LjtSequent& s);
std::uint64_t ljt_count(const LjtSequent& s);

// Members through the translation: enumerate the star image and forget.  The
// bound applies to the translated proof-term size.
std::vector<LjtPtr> members_ljt(const LjtSequent& s, int size_bound);

// Independent exhaustive application of the LJT typing rules with a budget on
// the LJT term size; used to cross-check the translation pipeline.
std::vector<LjtPtr> oracle_search_ljt(const LjtSequent& s, int size_bound);

}  // namespace polsearch
