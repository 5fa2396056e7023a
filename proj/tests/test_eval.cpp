#include "doctest.h"
#include "paradox/eval.hpp"
#include "paradox/godel.hpp"
#include "support.hpp"

using namespace paradox;
using namespace paradox::test;

TEST_CASE("term evaluation") {
  Assignment empty;
  CHECK(evalTerm(parseTerm("SS0"), empty) == Nat(2));
  CHECK(evalTerm(parseTerm("(S0+S0)"), empty) == Nat(2));
  CHECK(evalTerm(parseTerm("(SS0×SSS0)"), empty) == Nat(6));
  CHECK(evalTerm(numeral(Nat(4969)), empty) == Nat(4969));
  // pseudo-functions through their oracles
  CHECK(evalTerm(mkFun(SymbolRegistry::standard().require("l"), {numeral(Nat(4969))}), empty) == Nat(2));
  Assignment env{{3, Nat(7)}};
  CHECK(evalTerm(parseTerm("Sv3"), env) == Nat(8));
  CHECK_THROWS_AS(evalTerm(parseTerm("v5"), empty), UnassignedVariableError);
  CHECK_THROWS_AS(evalTerm(mkFun(SymbolRegistry::standard().require("l"), {numeral(Nat(10))}), empty),
                  DomainError);
}

TEST_CASE("formula evaluation basics") {
  Assignment empty;
  CHECK(evalFormula(parseFormula("(0=0)"), empty, 0).value == Tri::True);
  CHECK(evalFormula(parseFormula("(S0<S0)"), empty, 0).value == Tri::False);
  EvalResult r = evalFormula(parseFormula("∃v0 (v0=S0)"), empty, 1);
  CHECK(r.value == Tri::True);
  REQUIRE(r.witness);
  CHECK(*r.witness == Nat(1));
  // the search can witness but never refute an unbounded existential
  CHECK(evalFormula(parseFormula("∃v0 ¬(v0=v0)"), empty, 200).value == Tri::Unknown);
  // and can refute but never establish an unbounded universal
  CHECK(evalFormula(parseFormula("∀v0 (v0<SS0)"), empty, 50).value == Tri::False);
  CHECK(evalFormula(parseFormula("∀v0 (v0=v0)"), empty, 50).value == Tri::Unknown);
  CHECK_THROWS_AS(evalFormula(parseFormula("(v9=0)"), empty, 10), UnassignedVariableError);
}

TEST_CASE("bounded quantifiers are decided exhaustively") {
  Assignment empty;
  CHECK(evalFormula(parseFormula("(∀v0<SSSSS0)(v0<SSSSS0)"), empty, 0).value == Tri::True);
  CHECK(evalFormula(parseFormula("(∃v0<SSS0)(v0=SS0)"), empty, 0).value == Tri::True);
  CHECK(evalFormula(parseFormula("(∃v0<SSS0)(v0=SSS0)"), empty, 0).value == Tri::False);
  // empty range: vacuous truth / unsatisfiable
  CHECK(evalFormula(parseFormula("(∀v0<0)¬(v0=v0)"), empty, 0).value == Tri::True);
  CHECK(evalFormula(parseFormula("(∃v0<0)(v0=v0)"), empty, 0).value == Tri::False);
}

TEST_CASE("strong Kleene connectives") {
  Assignment empty;
  FormulaPtr unknown = parseFormula("∃v0 ¬(v0=v0)");  // Unknown at any budget
  FormulaPtr truth = parseFormula("(0=0)");
  FormulaPtr falsity = parseFormula("¬(0=0)");
  auto val = [&](FormulaPtr f) { return evalFormula(f, empty, 20).value; };
  CHECK(val(mkAnd(truth, unknown)) == Tri::Unknown);
  CHECK(val(mkAnd(falsity, unknown)) == Tri::False);
  CHECK(val(mkOr(truth, unknown)) == Tri::True);
  CHECK(val(mkOr(unknown, falsity)) == Tri::Unknown);
  CHECK(val(mkImp(falsity, unknown)) == Tri::True);
  CHECK(val(mkImp(unknown, truth)) == Tri::True);
  CHECK(val(mkImp(unknown, falsity)) == Tri::Unknown);
  CHECK(val(mkIff(unknown, truth)) == Tri::Unknown);
  CHECK(val(mkNot(unknown)) == Tri::Unknown);
  CHECK(val(mkAnd(unknown, unknown)) == Tri::Unknown);
  CHECK(val(mkOr(unknown, unknown)) == Tri::Unknown);
  CHECK(val(mkIff(unknown, unknown)) == Tri::Unknown);
  CHECK(val(mkIff(falsity, unknown)) == Tri::Unknown);
  CHECK(val(mkIff(falsity, falsity)) == Tri::True);
}

TEST_CASE("atoms with undefined pseudo-terms are false") {
  Assignment empty;
  const SymbolRegistry& reg = SymbolRegistry::standard();
  // Dec out of range, Neg of a term code: atoms see no value, hence false,
  // and their negations true.
  FormulaPtr outOfRange =
      mkEq(mkFun(reg.require("Dec"), {numeral(Nat(4969)), numeral(Nat(2))}), mkZero());
  CHECK(evalFormula(outOfRange, empty, 10).value == Tri::False);
  CHECK(evalFormula(mkNot(outOfRange), empty, 10).value == Tri::True);
  FormulaPtr negOfTerm = mkEq(mkFun(reg.require("Neg"), {numeral(Nat(29))}), mkZero());
  CHECK(evalFormula(negOfTerm, empty, 10).value == Tri::False);
}

TEST_CASE("delta0 sentences never evaluate Unknown") {
  Rng r(2718);
  Assignment empty;
  for (int i = 0; i < 150; ++i) {
    FormulaPtr f = randomDelta0(r, 4, {}, 6);
    CHECK(evalFormula(f, empty, 0).value != Tri::Unknown);
  }
}

TEST_CASE("agreement with the naive evaluator on delta0 sentences") {
  Rng r(314159);
  Assignment empty;
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = randomDelta0(r, 4, {}, 20);
    std::map<VarIndex, uint64_t> env;
    bool want = naiveEval(f, env);
    Tri got = evalFormula(f, empty, 0).value;
    CHECK(got == (want ? Tri::True : Tri::False));
  }
}

TEST_CASE("budget monotonicity") {
  Rng r(161803);
  Assignment empty;
  const uint64_t budgets[] = {10, 100, 1000};
  for (int i = 0; i < 100; ++i) {
    // a single unbounded quantifier over a Δ0 matrix, witness position varied
    uint64_t target = r.next(1500);
    FormulaPtr matrix;
    switch (r.next(3)) {
      case 0: matrix = mkEq(mkVar(9), numeral(Nat(target))); break;
      case 1: matrix = mkAnd(randomDelta0(r, 2, {9}, 5), mkEq(mkVar(9), numeral(Nat(target)))); break;
      default: matrix = mkNot(mkEq(mkVar(9), numeral(Nat(target)))); break;
    }
    FormulaPtr f = r.coin() ? mkExists(9, matrix) : mkForall(9, matrix);
    Tri prev = Tri::Unknown;
    bool first = true;
    for (uint64_t b : budgets) {
      Tri v = evalFormula(f, empty, b).value;
      if (!first && prev != Tri::Unknown) CHECK(v == prev);
      prev = v;
      first = false;
    }
  }
}

TEST_CASE("witness extraction reports the found witness") {
  Assignment empty;
  EvalResult r = evalFormula(parseFormula("∃v0 ((v0×v0)=SSSS0)"), empty, 100);
  CHECK(r.value == Tri::True);
  REQUIRE(r.witness);
  CHECK(*r.witness == Nat(2));
  // substituting the witness back yields a true sentence
  FormulaPtr inst = substitute(parseFormula("((v0×v0)=SSSS0)"), 0, numeral(*r.witness));
  CHECK(evalFormula(inst, empty, 0).value == Tri::True);
  CHECK(r.steps >= 3);  // tried 0, 1, 2
}

TEST_CASE("Prov atoms answer true or unknown only") {
  Assignment empty;
  const SymbolRegistry& reg = SymbolRegistry::standard();
  FormulaPtr provTrue = mkPred(reg.require("Prov"), {numeral(godelEncode(parseFormula("(0=0)")))});
  CHECK(evalFormula(provTrue, empty, 2000).value == Tri::True);
  FormulaPtr provOpen = mkPred(reg.require("Prov"), {numeral(godelEncode(parseFormula("¬(0=0)")))});
  CHECK(evalFormula(provOpen, empty, 300).value == Tri::Unknown);
  CHECK(evalFormula(mkNot(provOpen), empty, 300).value == Tri::Unknown);
}
