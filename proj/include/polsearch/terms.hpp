#pragma once

// Five-sorted LJP proof terms.  The constructors are the function symbols of
// the signature view: every constructor has a fixed arity and fixed child
// sorts, variable binding occurs only in the two co-term binders, and
// injections/aborts carry the annotations that make typing unique.

#include <memory>
#include <string>
#include <vector>

#include "polsearch/syntax.hpp"

namespace polsearch {

enum class Sort { Value, Term, Spine, Coterm, Expr };

char sort_letter(Sort s);  // v t s p e

enum class Op {
  // values
  PosVar,   // z                                  : v
  Thunk,    // thunk(t)                           : t -> v
  Inj,      // inj{i}[Q](v), Q the other disjunct : v -> v
  // terms
  Ea,       // ea(e)                              : e -> t
  Ep,       // ep(e)                              : e -> t
  Lam,      // lam(p)                             : p -> t
  Pair,     // pair(t1, t2)                       : t,t -> t
  // spines
  Nil,      //                                    : s
  Cothunk,  // cothunk(p)                         : p -> s
  ConsV,    // v :: s                             : v,s -> s
  ConsI,    // i :: s                             : s -> s
  // co-terms
  BindPos,  // z@a+. e                            : e -> p
  BindNeg,  // x@N. e                             : e -> p
  Abort,    // abort@A                            : p
  Copair,   // [p1, p2]                           : p,p -> p
  // stable expressions
  Dlv,      // dlv(t)                             : t -> e
  Ret,      // ret(v)                             : v -> e
  Coret,    // coret x (s)                        : s -> e
};

Sort sort_of(Op op);
int arity_of(Op op);

class LjpTerm;
using TermPtr = std::shared_ptr<const LjpTerm>;

class LjpTerm {
 public:
  Op op;
  std::string name;  // PosVar, BindPos, BindNeg, Coret
  int index = 0;     // Inj, ConsI: 1 or 2
  PForm ann;         // Inj: other disjunct; BindPos: a+; BindNeg: N; Abort: A
  TermPtr a, b;      // children in constructor order

  Sort sort() const { return sort_of(op); }

  static TermPtr pos_var(std::string z);
  static TermPtr thunk(TermPtr t);
  static TermPtr inj(int i, PForm other, TermPtr v);
  static TermPtr ea(TermPtr e);
  static TermPtr ep(TermPtr e);
  static TermPtr lam(TermPtr p);
  static TermPtr pair(TermPtr t1, TermPtr t2);
  static TermPtr nil();
  static TermPtr cothunk(TermPtr p);
  static TermPtr cons_v(TermPtr v, TermPtr s);
  static TermPtr cons_i(int i, TermPtr s);
  static TermPtr bind_pos(std::string z, PForm atom, TermPtr e);
  static TermPtr bind_neg(std::string x, PForm n, TermPtr e);
  static TermPtr abort(PForm a);
  static TermPtr copair(TermPtr p1, TermPtr p2);
  static TermPtr dlv(TermPtr t);
  static TermPtr ret(TermPtr v);
  static TermPtr coret(std::string x, TermPtr s);

  // Generic constructor used when rebuilding a node with new children.
  static TermPtr make(Op op, std::string name, int index, PForm ann,
                      std::vector<TermPtr> children);

 private:
  LjpTerm(Op o, std::string n, int i, PForm an, TermPtr x, TermPtr y)
      : op(o), name(std::move(n)), index(i), ann(std::move(an)), a(std::move(x)), b(std::move(y)) {}
};

int compare(const TermPtr& a, const TermPtr& b);
bool equal(const TermPtr& a, const TermPtr& b);
std::string to_string(const TermPtr& t);

struct TermLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const { return compare(a, b) < 0; }
};

// Constructor count.  Leaves (variables, nil, abort) count 1; the two term
// coercions ea/ep count 0, mirroring the silent term/expression coercion on
// the intuitionistic side.
int term_size(const TermPtr& t);

// ---------------------------------------------------------------------------
// Typing (bidirectional reading of the LJP rules)
// ---------------------------------------------------------------------------

struct TypingError : std::runtime_error {
  explicit TypingError(const std::string& what) : std::runtime_error(what) {}
};

// Synthesizes the unique formula completing the sequent placeholder.  For
// spines `given` must supply the focus formula N; it must be absent for every
// other sort.  Co-terms synthesize both placeholders; infer returns the A side
// (infer_coterm exposes the pair).  Throws TypingError on untypable input.
PForm infer(const Context& g, const TermPtr& t, const std::optional<PForm>& given = std::nullopt);
std::pair<PForm, PForm> infer_coterm(const Context& g, const TermPtr& p);

// True iff t inhabits s; failures produce false and, when `diag` is given,
// a one-line reason.
bool check(const Sequent& s, const TermPtr& t, std::string* diag = nullptr);

}  // namespace polsearch
