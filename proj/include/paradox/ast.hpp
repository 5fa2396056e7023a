#pragma once

#include <memory>
#include <set>
#include <vector>

#include "paradox/nat.hpp"

namespace paradox {

using VarIndex = uint32_t;
using SymId = uint32_t;  // index into the defined-symbol registry

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

// Terms of the language {0, S, +, ×} plus registered pseudo-function symbols.
// Successor chains are run-compressed: Succ holds how many S applications wrap
// the inner term, so Numeral(n) is one node even when n is astronomically
// large. The inner term of a Succ node is never itself a Succ node.
struct Term {
  enum class Kind : uint8_t { Zero, Var, Succ, Add, Mul, Fun };
  Kind kind;
  VarIndex var = 0;          // Var
  Nat succCount;             // Succ, >= 1
  SymId sym = 0;             // Fun
  TermPtr a, b;              // Succ: a = inner; Add/Mul: a, b
  std::vector<TermPtr> args; // Fun
};

struct Formula {
  enum class Kind : uint8_t { Eq, Lt, Not, And, Or, Imp, Iff, Forall, Exists, Pred };
  Kind kind;
  TermPtr t1, t2;            // Eq, Lt
  FormulaPtr f, g;           // Not (f), binary connectives
  VarIndex var = 0;          // quantifiers
  SymId sym = 0;             // Pred
  std::vector<TermPtr> args; // Pred
};

TermPtr mkZero();
TermPtr mkVar(VarIndex v);
TermPtr mkSucc(const TermPtr& inner);
TermPtr mkSuccN(const Nat& count, const TermPtr& inner);
TermPtr mkAdd(TermPtr l, TermPtr r);
TermPtr mkMul(TermPtr l, TermPtr r);
TermPtr mkFun(SymId sym, std::vector<TermPtr> args);
TermPtr numeral(const Nat& n);

FormulaPtr mkEq(TermPtr l, TermPtr r);
FormulaPtr mkLt(TermPtr l, TermPtr r);
FormulaPtr mkNot(FormulaPtr f);
FormulaPtr mkAnd(FormulaPtr f, FormulaPtr g);
FormulaPtr mkOr(FormulaPtr f, FormulaPtr g);
FormulaPtr mkImp(FormulaPtr f, FormulaPtr g);
FormulaPtr mkIff(FormulaPtr f, FormulaPtr g);
FormulaPtr mkForall(VarIndex v, FormulaPtr f);
FormulaPtr mkExists(VarIndex v, FormulaPtr f);
FormulaPtr mkPred(SymId sym, std::vector<TermPtr> args);

// "s ≤ t" notation: s < St.
FormulaPtr mkLe(const TermPtr& l, const TermPtr& r);

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

bool occursFree(const TermPtr& t, VarIndex v);
bool occursFree(const FormulaPtr& f, VarIndex v);
std::set<VarIndex> freeVars(const TermPtr& t);
std::set<VarIndex> freeVars(const FormulaPtr& f);
// Free and bound variable indices together.
std::set<VarIndex> allVars(const FormulaPtr& f);
std::set<VarIndex> allVars(const TermPtr& t);

// Substitution of a term for every free occurrence of a variable. Terms have
// no binders, so the term version is total; the formula version throws
// CaptureError when a free variable of `repl` would be bound.
TermPtr substTerm(const TermPtr& t, VarIndex v, const TermPtr& repl);
FormulaPtr substitute(const FormulaPtr& f, VarIndex v, const TermPtr& repl);

// Simultaneous substitution; same capture policy.
FormulaPtr substMulti(const FormulaPtr& f, const std::vector<std::pair<VarIndex, TermPtr>>& subs);

}  // namespace paradox
