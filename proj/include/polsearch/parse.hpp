#pragma once

// Concrete syntax.  Atoms carry +/- polarity suffixes in LJP mode; the
// connectives are -> (right associative), /\, \/, bot, and the prefixes up
// and down.  Contexts are comma-separated bindings `x: F`; sequent tags are
// |- (stable), => (invert right), [N] |- (focus left), |- [P] (focus right)
// and | P => (invert left).  Proof terms use the prefix constructor syntax of
// the canonical printer.

#include <stdexcept>
#include <string>

#include "polsearch/translate.hpp"

namespace polsearch {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

PForm parse_pformula(const std::string& text);
IForm parse_iformula(const std::string& text);

Sequent parse_ljp_sequent(const std::string& text);
LjtSequent parse_ljt_sequent(const std::string& text);

// Any of the five LJP sorts / three LJT sorts; the leading tokens decide.
TermPtr parse_ljp_term(const std::string& text);
LjtPtr parse_ljt_term(const std::string& text);

}  // namespace polsearch
