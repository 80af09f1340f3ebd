#pragma once

// Polarized and intuitionistic formulas, contexts, and sequents.
//
// LJP formulas are split two ways: negative vs. positive, and composite
// negative vs. right.  Right formulas (positives and negative atoms) are the
// only ones allowed to the right of a focus-left or R-stable sequent.  LJT
// formulas are plain intuitionistic formulas with a distinguished class of
// right formulas (atoms, bot, disjunctions).

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polsearch {

struct SyntaxError : std::runtime_error {
  explicit SyntaxError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Polarized formulas (LJP)
// ---------------------------------------------------------------------------

enum class PKind {
  NegAtom,  // a-
  Up,       // up P          (composite negative)
  Imp,      // P -> N        (composite negative)
  AndN,     // N /\ M        (composite negative)
  PosAtom,  // a+
  Down,     // down N        (positive)
  Bot,      // bot           (positive)
  Or,       // P \/ Q        (positive)
};

class PFormula;
using PForm = std::shared_ptr<const PFormula>;

class PFormula {
 public:
  PKind kind;
  std::string atom;  // NegAtom / PosAtom
  PForm left;        // Up, Down: the single child; Imp, AndN, Or: left child
  PForm right;       // Imp, AndN, Or

  static PForm neg_atom(std::string name);
  static PForm pos_atom(std::string name);
  static PForm up(PForm p);
  static PForm imp(PForm p, PForm n);
  static PForm and_n(PForm n, PForm m);
  static PForm down(PForm n);
  static PForm bot();
  static PForm or_p(PForm p, PForm q);

  bool is_negative() const;
  bool is_positive() const { return !is_negative(); }
  // Right formulas: positive formulas and negative atoms.
  bool is_right() const;
  // Composite negatives: up, ->, /\.
  bool is_composite_negative() const;
  // Left formulas: negative formulas and positive atoms.
  bool is_left() const { return is_negative() || kind == PKind::PosAtom; }

 private:
  PFormula(PKind k, std::string a, PForm l, PForm r)
      : kind(k), atom(std::move(a)), left(std::move(l)), right(std::move(r)) {}
};

int compare(const PForm& a, const PForm& b);
bool equal(const PForm& a, const PForm& b);
std::string to_string(const PForm& f);

// Weight measure on polarized formulas: atoms weigh 0 (positive) or 1
// (negative); connectives add 0 (down, /\), 1 (\/), 2 (up) or 3 (->).
int weight(const PForm& f);

// ---------------------------------------------------------------------------
// Intuitionistic formulas (LJT)
// ---------------------------------------------------------------------------

enum class IKind { Atom, Bot, Imp, And, Or };

class IFormula;
using IForm = std::shared_ptr<const IFormula>;

class IFormula {
 public:
  IKind kind;
  std::string atom;
  IForm left, right;

  static IForm iatom(std::string name);
  static IForm ibot();
  static IForm iimp(IForm a, IForm b);
  static IForm iand(IForm a, IForm b);
  static IForm ior(IForm a, IForm b);

  // Right intuitionistic formulas: atoms, bot, disjunctions.
  bool is_right() const { return kind == IKind::Atom || is_positive(); }
  // Positive intuitionistic formulas: non-atomic right formulas.
  bool is_positive() const { return kind == IKind::Bot || kind == IKind::Or; }

 private:
  IFormula(IKind k, std::string a, IForm l, IForm r)
      : kind(k), atom(std::move(a)), left(std::move(l)), right(std::move(r)) {}
};

int compare(const IForm& a, const IForm& b);
bool equal(const IForm& a, const IForm& b);
std::string to_string(const IForm& f);

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

// Ordered list of bindings with pairwise distinct names.  Insertion order is
// preserved (sums over context entries iterate in this order) but inclusion
// and |.| are computed set-wise.
template <class F>
class Ctx {
 public:
  struct Binding {
    std::string name;
    F type;
  };

  Ctx() = default;

  const std::vector<Binding>& bindings() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  bool binds(const std::string& name) const {
    for (const auto& b : entries_)
      if (b.name == name) return true;
    return false;
  }

  std::optional<F> lookup(const std::string& name) const {
    for (const auto& b : entries_)
      if (b.name == name) return b.type;
    return std::nullopt;
  }

  // Returns the extended context; rejects duplicate names.
  Ctx extended(const std::string& name, F type) const {
    if (binds(name)) throw SyntaxError("duplicate variable in context: " + name);
    Ctx out = *this;
    out.entries_.push_back(Binding{name, std::move(type)});
    return out;
  }

 private:
  std::vector<Binding> entries_;
};

using Context = Ctx<PForm>;
using IContext = Ctx<IForm>;

// Validates the LJP discipline: every binding is z:a+ or x:N.
void validate_ljp_context(const Context& g);

// g <= g2: g is included in g2 binding-wise and both mention the same set of
// formulas (g2 only adds bindings at types already present).
bool context_leq(const Context& g, const Context& g2);
bool context_leq(const IContext& g, const IContext& g2);

std::string to_string(const Context& g);
std::string to_string(const IContext& g);

// ---------------------------------------------------------------------------
// Sequents
// ---------------------------------------------------------------------------

enum class SeqKind {
  FocusL,   // G [N] |- R
  FocusR,   // G |- [P]
  InvertL,  // G | P => A
  InvertR,  // G => N
  Stable,   // G |- A
};

class Sequent {
 public:
  SeqKind kind;
  Context ctx;
  PForm focus;  // FocusL: the focused N; InvertL: the inverted P; else null
  PForm goal;   // FocusL: R; FocusR: P; InvertL: A; InvertR: N; Stable: A

  static Sequent focus_l(Context g, PForm n, PForm r);
  static Sequent focus_r(Context g, PForm p);
  static Sequent invert_l(Context g, PForm p, PForm a);
  static Sequent invert_r(Context g, PForm n);
  static Sequent stable(Context g, PForm a);

  // R-stable: a stable sequent with a right formula on the right.
  bool is_rstable() const { return kind == SeqKind::Stable && goal->is_right(); }

 private:
  Sequent(SeqKind k, Context g, PForm f, PForm a)
      : kind(k), ctx(std::move(g)), focus(std::move(f)), goal(std::move(a)) {}
};

int compare(const Sequent& a, const Sequent& b);
bool equal(const Sequent& a, const Sequent& b);
std::string to_string(const Sequent& s);

// rho <= rho': same right formula, inessentially extended context.
bool rstable_leq(const Sequent& rho, const Sequent& rho2);

// Weight of an LJP logical sequent (used for termination arguments and the
// property suite; not consulted by the search itself).
int weight(const Context& g);
int weight(const Sequent& s);

// Cache key invariant under renaming of context variables: bindings are
// renamed to ?0, ?1, ... in order of occurrence.
std::string alpha_key(const Sequent& s);

// LJT sequents: G => A, G |- R, G [A] |- R.
enum class LjtSeqKind { Invert, Stable, Focus };

class LjtSequent {
 public:
  LjtSeqKind kind;
  IContext ctx;
  IForm focus;  // Focus: the focused A; else null
  IForm goal;

  static LjtSequent invert(IContext g, IForm a);
  static LjtSequent stable(IContext g, IForm r);
  static LjtSequent focus_l(IContext g, IForm a, IForm r);

 private:
  LjtSequent(LjtSeqKind k, IContext g, IForm f, IForm a)
      : kind(k), ctx(std::move(g)), focus(std::move(f)), goal(std::move(a)) {}
};

int compare(const LjtSequent& a, const LjtSequent& b);
bool equal(const LjtSequent& a, const LjtSequent& b);
std::string to_string(const LjtSequent& s);

// Deterministic fresh-variable scheme shared by the space builder and the
// enumeration oracles: x0, x1, ... for negative variables, z0, z1, ... for
// positive ones; the first index unused in the context is taken.
std::string fresh_neg_var(const Context& g);
std::string fresh_pos_var(const Context& g);
std::string fresh_var(const IContext& g);

}  // namespace polsearch
