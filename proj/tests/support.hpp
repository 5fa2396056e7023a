#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "paradox/eval.hpp"
#include "paradox/godel.hpp"

namespace paradox::test {

// mt19937 is bit-identical everywhere; we avoid std::uniform_int_distribution
// because its output is not.
struct Rng {
  std::mt19937 gen;
  explicit Rng(uint32_t seed) : gen(seed) {}
  uint64_t next(uint64_t bound) { return bound == 0 ? 0 : gen() % bound; }
  bool coin() { return gen() & 1; }
};

// ---------------------------------------------------------------------------
// Independent digit oracle for the sequence coding: base-8 digits by hand,
// each shifted up by one, a 9 after every element, all in one string.

inline std::string oracleChunk(uint64_t element) {
  std::string digits;
  if (element == 0) digits = "1";
  while (element != 0) {
    digits.insert(digits.begin(), static_cast<char>('1' + element % 8));
    element /= 8;
  }
  return digits + "9";
}

inline std::string oracleSeqDigits(const std::vector<uint64_t>& elems) {
  if (elems.empty()) return "0";
  std::string out;
  for (uint64_t e : elems) out += oracleChunk(e);
  return out;
}

// ---------------------------------------------------------------------------
// Random ASTs

inline TermPtr randomTerm(Rng& r, int depth, uint32_t maxVar, bool defined) {
  const SymbolRegistry& reg = SymbolRegistry::standard();
  if (depth <= 0) {
    switch (r.next(3)) {
      case 0: return mkZero();
      case 1: return mkVar(static_cast<VarIndex>(r.next(maxVar + 1)));
      default: return numeral(Nat(r.next(4)));
    }
  }
  switch (r.next(defined ? 6 : 5)) {
    case 0: return mkZero();
    case 1: return mkVar(static_cast<VarIndex>(r.next(maxVar + 1)));
    case 2: return mkSuccN(Nat(1 + r.next(3)), randomTerm(r, depth - 1, maxVar, defined));
    case 3: return mkAdd(randomTerm(r, depth - 1, maxVar, defined), randomTerm(r, depth - 1, maxVar, defined));
    case 4: return mkMul(randomTerm(r, depth - 1, maxVar, defined), randomTerm(r, depth - 1, maxVar, defined));
    default: {
      // one of the unary pseudo-functions, to exercise name paths
      SymId sym = reg.require(r.coin() ? "Num" : "Neg");
      return mkFun(sym, {randomTerm(r, depth - 1, maxVar, defined)});
    }
  }
}

inline FormulaPtr randomFormula(Rng& r, int depth, uint32_t maxVar, bool defined) {
  const SymbolRegistry& reg = SymbolRegistry::standard();
  if (depth <= 0 || r.next(4) == 0) {
    TermPtr a = randomTerm(r, depth > 1 ? 1 : 0, maxVar, defined);
    TermPtr b = randomTerm(r, depth > 1 ? 1 : 0, maxVar, defined);
    if (defined && r.next(5) == 0) {
      switch (r.next(3)) {
        case 0: return mkPred(reg.require("Code"), {a});
        case 1: return mkPred(reg.require("Ele"), {a, b});
        default: return mkPred(reg.require("Prov"), {a});
      }
    }
    return r.coin() ? mkEq(a, b) : mkLt(a, b);
  }
  switch (r.next(7)) {
    case 0: return mkNot(randomFormula(r, depth - 1, maxVar, defined));
    case 1: return mkAnd(randomFormula(r, depth - 1, maxVar, defined), randomFormula(r, depth - 1, maxVar, defined));
    case 2: return mkOr(randomFormula(r, depth - 1, maxVar, defined), randomFormula(r, depth - 1, maxVar, defined));
    case 3: return mkImp(randomFormula(r, depth - 1, maxVar, defined), randomFormula(r, depth - 1, maxVar, defined));
    case 4: return mkIff(randomFormula(r, depth - 1, maxVar, defined), randomFormula(r, depth - 1, maxVar, defined));
    case 5: return mkForall(static_cast<VarIndex>(r.next(maxVar + 1)), randomFormula(r, depth - 1, maxVar, defined));
    default: return mkExists(static_cast<VarIndex>(r.next(maxVar + 1)), randomFormula(r, depth - 1, maxVar, defined));
  }
}

// Closed term (no variables) for capture-free substitution cases.
inline TermPtr randomClosedTerm(Rng& r, int depth) {
  if (depth <= 0) return numeral(Nat(r.next(3)));
  switch (r.next(4)) {
    case 0: return numeral(Nat(r.next(4)));
    case 1: return mkSuccN(Nat(1 + r.next(2)), randomClosedTerm(r, depth - 1));
    case 2: return mkAdd(randomClosedTerm(r, depth - 1), randomClosedTerm(r, depth - 1));
    default: return mkMul(randomClosedTerm(r, depth - 1), randomClosedTerm(r, depth - 1));
  }
}

// ---------------------------------------------------------------------------
// Random Δ0 material over {0,S,+,×,=,<} with numeral bounds, plus an
// independent naive two-valued evaluator for it.

inline TermPtr randomDelta0Term(Rng& r, int depth, const std::vector<VarIndex>& scope) {
  if (depth <= 0 || r.next(3) == 0) {
    if (!scope.empty() && r.coin()) return mkVar(scope[r.next(scope.size())]);
    return numeral(Nat(r.next(5)));
  }
  switch (r.next(3)) {
    case 0: return mkSucc(randomDelta0Term(r, depth - 1, scope));
    case 1: return mkAdd(randomDelta0Term(r, depth - 1, scope), randomDelta0Term(r, depth - 1, scope));
    default: return mkMul(randomDelta0Term(r, depth - 1, scope), randomDelta0Term(r, depth - 1, scope));
  }
}

inline FormulaPtr randomDelta0(Rng& r, int depth, std::vector<VarIndex> scope, uint64_t boundCap,
                               VarIndex nextVar = 0) {
  if (depth <= 0 || r.next(4) == 0) {
    TermPtr a = randomDelta0Term(r, 1, scope);
    TermPtr b = randomDelta0Term(r, 1, scope);
    return r.coin() ? mkEq(a, b) : mkLt(a, b);
  }
  switch (r.next(7)) {
    case 0: return mkNot(randomDelta0(r, depth - 1, scope, boundCap, nextVar));
    case 1: return mkAnd(randomDelta0(r, depth - 1, scope, boundCap, nextVar),
                         randomDelta0(r, depth - 1, scope, boundCap, nextVar));
    case 2: return mkOr(randomDelta0(r, depth - 1, scope, boundCap, nextVar),
                        randomDelta0(r, depth - 1, scope, boundCap, nextVar));
    case 3: return mkImp(randomDelta0(r, depth - 1, scope, boundCap, nextVar),
                         randomDelta0(r, depth - 1, scope, boundCap, nextVar));
    case 4: return mkIff(randomDelta0(r, depth - 1, scope, boundCap, nextVar),
                         randomDelta0(r, depth - 1, scope, boundCap, nextVar));
    default: {
      VarIndex v = nextVar;
      while (std::find(scope.begin(), scope.end(), v) != scope.end()) ++v;
      TermPtr bound = numeral(Nat(1 + r.next(boundCap)));
      scope.push_back(v);
      FormulaPtr body = randomDelta0(r, depth - 1, scope, boundCap, v + 1);
      if (r.coin()) return mkForall(v, mkImp(mkLt(mkVar(v), bound), body));
      return mkExists(v, mkAnd(mkLt(mkVar(v), bound), body));
    }
  }
}

inline uint64_t naiveTerm(const TermPtr& t, std::map<VarIndex, uint64_t>& env) {
  switch (t->kind) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return env.at(t->var);
    case Term::Kind::Succ: return naiveTerm(t->a, env) + t->succCount.asU64();
    case Term::Kind::Add: return naiveTerm(t->a, env) + naiveTerm(t->b, env);
    case Term::Kind::Mul: return naiveTerm(t->a, env) * naiveTerm(t->b, env);
    default: throw DomainError("naive evaluator: defined symbols unsupported");
  }
}

// Plain recursive two-valued evaluation; quantifiers must be in bounded form.
inline bool naiveEval(const FormulaPtr& f, std::map<VarIndex, uint64_t>& env) {
  switch (f->kind) {
    case Formula::Kind::Eq: return naiveTerm(f->t1, env) == naiveTerm(f->t2, env);
    case Formula::Kind::Lt: return naiveTerm(f->t1, env) < naiveTerm(f->t2, env);
    case Formula::Kind::Not: return !naiveEval(f->f, env);
    case Formula::Kind::And: return naiveEval(f->f, env) && naiveEval(f->g, env);
    case Formula::Kind::Or: return naiveEval(f->f, env) || naiveEval(f->g, env);
    case Formula::Kind::Imp: return !naiveEval(f->f, env) || naiveEval(f->g, env);
    case Formula::Kind::Iff: return naiveEval(f->f, env) == naiveEval(f->g, env);
    case Formula::Kind::Forall: {
      const FormulaPtr& imp = f->f;
      uint64_t bound = naiveTerm(imp->f->t2, env);
      for (uint64_t i = 0; i < bound; ++i) {
        env[f->var] = i;
        bool ok = naiveEval(imp->g, env);
        env.erase(f->var);
        if (!ok) return false;
      }
      return true;
    }
    case Formula::Kind::Exists: {
      const FormulaPtr& conj = f->f;
      uint64_t bound = naiveTerm(conj->f->t2, env);
      for (uint64_t i = 0; i < bound; ++i) {
        env[f->var] = i;
        bool ok = naiveEval(conj->g, env);
        env.erase(f->var);
        if (ok) return true;
      }
      return false;
    }
    default: throw DomainError("naive evaluator: unsupported atom");
  }
}

}  // namespace paradox::test
