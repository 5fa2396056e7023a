#include <set>

#include "doctest.h"
#include "paradox/classify.hpp"
#include "paradox/eval.hpp"
#include "paradox/godel.hpp"
#include "paradox/kernel.hpp"
#include "support.hpp"

using namespace paradox;
using namespace paradox::test;

namespace {
const SymbolRegistry& reg() { return SymbolRegistry::standard(); }
}

TEST_CASE("standard registry contents and symbol codes") {
  struct Want {
    const char* name;
    SymKind kind;
    uint32_t arity;
    SymClass cls;
    uint32_t code;
  };
  const Want wants[] = {
      {"Code", SymKind::Predicate, 1, SymClass::Delta0, 1000},
      {"l", SymKind::Function, 1, SymClass::Delta0, 1001},
      {"Dec", SymKind::Function, 2, SymClass::Delta0, 1002},
      {"Neg", SymKind::Function, 1, SymClass::Delta0, 1003},
      {"Subs", SymKind::Function, 3, SymClass::Delta0, 1004},
      {"Num", SymKind::Function, 1, SymClass::Delta0, 1005},
      {"HetSeq", SymKind::Predicate, 1, SymClass::Delta0, 1006},
      {"Ele", SymKind::Predicate, 2, SymClass::Delta0, 1007},
      {"Prf", SymKind::Predicate, 2, SymClass::Delta0, 1008},
      {"Prov", SymKind::Predicate, 1, SymClass::Sigma1, 1009},
  };
  REQUIRE(reg().size() == 10);
  for (const Want& w : wants) {
    SymId id = reg().require(w.name);
    const DefinedSymbol& d = reg().at(id);
    CHECK(d.kind == w.kind);
    CHECK(d.arity == w.arity);
    CHECK(d.cls == w.cls);
    CHECK(reg().symbolCode(id) == w.code);
  }
  CHECK(reg().at(reg().require("HetSeq")).expansion != nullptr);
  CHECK(reg().at(reg().require("Ele")).expansion != nullptr);
  CHECK(reg().at(reg().require("Prov")).expansion != nullptr);
  CHECK(reg().at(reg().require("Dec")).expansion == nullptr);
}

TEST_CASE("expansions agree with their registered classifications") {
  for (SymId id = 0; id < reg().size(); ++id) {
    const DefinedSymbol& d = reg().at(id);
    if (!d.expansion) continue;
    CAPTURE(d.name);
    if (d.cls == SymClass::Delta0) CHECK(classifyDelta0(d.expansion, reg()));
    if (d.cls == SymClass::Sigma1) CHECK(classifySigma1(d.expansion, reg()));
  }
}

TEST_CASE("symbol codes are injective over the emitted alphabet") {
  std::set<uint32_t> seen;
  auto put = [&](ObjSymbol s) { CHECK(seen.insert(symbolCode(s)).second); };
  using K = ObjSymbol::K;
  for (K k : {K::Comma, K::Zero, K::S, K::Plus, K::Times, K::Eq, K::Not, K::And, K::Or, K::Imp,
              K::Iff, K::Forall, K::Exists, K::LParen, K::RParen, K::Lt})
    put(ObjSymbol{k});
  for (VarIndex v = 0; v <= 20; ++v) put(ObjSymbol{K::Var, v});
  put(ObjSymbol{K::Var, kMaxVarIndex});
  for (SymId id = 0; id < reg().size(); ++id) put(ObjSymbol{K::Def, 0, id});
}

TEST_CASE("evalDefined examples") {
  CHECK(std::get<Nat>(evalDefined(reg(), "l", {Nat(4969)})) == Nat(2));
  Nat phi = godelEncode(parseFormula("(v0=0)"));
  Nat got = std::get<Nat>(evalDefined(reg(), "Subs", {phi, godelEncode(mkVar(0)), godelEncode(parseTerm("S0"))}));
  CHECK(got == godelEncode(parseFormula("(S0=0)")));
  CHECK(std::get<Tri>(evalDefined(reg(), "Prov", {godelEncode(parseFormula("(0=0)"))}, 2000)) == Tri::True);
  CHECK(std::get<Tri>(evalDefined(reg(), "Code", {Nat(4969)})) == Tri::True);
  CHECK_THROWS_AS(evalDefined(reg(), "l", {Nat(10)}), DomainError);      // not a code
  CHECK_THROWS_AS(evalDefined(reg(), "l", {Nat(1), Nat(2)}), DomainError);  // arity
  CHECK_THROWS_AS(evalDefined(reg(), "Neg", {Nat(29)}), DomainError);    // term code
  CHECK_THROWS_AS(evalDefined(reg(), "nope", {Nat(1)}), DomainError);
}

TEST_CASE("HetSeq and Ele oracles") {
  auto het = [](const Nat& x) { return std::get<Tri>(evalDefined(reg(), "HetSeq", {x})); };
  auto ele = [](const Nat& x, const Nat& y) { return std::get<Tri>(evalDefined(reg(), "Ele", {x, y})); };
  CHECK(het(seqEncode({Nat(3), Nat(5)})) == Tri::True);
  CHECK(het(seqEncode({Nat(3), Nat(3)})) == Tri::False);
  CHECK(het(Nat(0)) == Tri::True);  // empty sequence has no repeats
  CHECK(het(Nat(10)) == Tri::False);
  CHECK(ele(Nat(3), Nat(4969)) == Tri::True);
  CHECK(ele(Nat(4), Nat(4969)) == Tri::False);
  CHECK(ele(Nat(4969), Nat(4969)) == Tri::False);  // the code itself is not an element
  CHECK(ele(Nat(0), Nat(0)) == Tri::False);
  // run-compressed input decides instantly: a long run is a repeat
  CHECK(het(numCode(Nat::fromDecimal("1000000000000000000000"))) == Tri::False);
}

TEST_CASE("expansions agree with oracles on small instances") {
  const FormulaPtr& hetExp = reg().at(reg().require("HetSeq")).expansion;
  const FormulaPtr& eleExp = reg().at(reg().require("Ele")).expansion;
  // exhaustive: lengths 0..3 over elements < 8, every x in 0..8 plus the code
  std::vector<std::vector<Nat>> seqs{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<Nat>> next;
    for (uint64_t e = 0; e < 8; ++e)
      for (const auto& s : seqs)
        if (s.size() == static_cast<size_t>(len - 1)) {
          auto copy = s;
          copy.push_back(Nat(e));
          next.push_back(copy);
        }
    seqs.insert(seqs.end(), next.begin(), next.end());
  }
  for (const auto& s : seqs) {
    Nat code = seqEncode(s);
    Tri direct = std::get<Tri>(evalDefined(reg(), "HetSeq", {code}));
    Assignment a{{0, code}};
    CHECK(evalFormula(hetExp, a, 10).value == direct);
    std::vector<Nat> probes;
    for (uint64_t x = 0; x <= 8; ++x) probes.push_back(Nat(x));
    probes.push_back(code);
    for (const Nat& x : probes) {
      Tri de = std::get<Tri>(evalDefined(reg(), "Ele", {x, code}));
      Assignment b{{0, x}, {1, code}};
      CHECK(evalFormula(eleExp, b, 10).value == de);
    }
  }
}

TEST_CASE("expandDefinition") {
  SymId hetSeq = reg().require("HetSeq");
  FormulaPtr atom = mkPred(hetSeq, {mkVar(2)});
  FormulaPtr expanded = expandDefinition(atom, reg());
  // one step of the definitional biconditional, arguments substituted
  CHECK(print(expanded) ==
        "(Code(v2)∧∀v8 ((v8<Sl(v2))→∀v9 ((v9<Sl(v2))→(¬(v8=v9)→¬(Dec(v2,v8)=Dec(v2,v9))))))");
  FormulaPtr prov = parseFormula("Prov(v0)");
  CHECK(print(expandDefinition(prov, reg())) == "∃v8 Prf(v8,v0)");
  FormulaPtr plain = parseFormula("(0=0)");
  CHECK(equal(expandDefinition(plain, reg()), plain));
  // atoms without expansions stay put
  FormulaPtr code = parseFormula("Code(v0)");
  CHECK(equal(expandDefinition(code, reg()), code));
  // expansion must not capture an argument
  FormulaPtr bad = mkPred(hetSeq, {mkVar(8)});
  CHECK_THROWS_AS(expandDefinition(bad, reg()), CaptureError);
  // nested occurrences expand too
  FormulaPtr nested = mkAnd(parseFormula("(0=0)"), prov);
  CHECK(print(expandDefinition(nested, reg())) == "((0=0)∧∃v8 Prf(v8,v0))");
}

TEST_CASE("Prf recognizes exactly the coded proofs of the coded conclusion") {
  Proof p;
  Justification j;
  j.k = Justification::K::Axiom;
  j.schema = *schemaIndex("eq-refl");
  j.bindings = {parseTerm("0")};
  p.lines.push_back({parseFormula("(0=0)"), j});
  REQUIRE(checkProof(p).ok);
  Nat proofCode = encodeProof(p);
  Nat conclCode = godelEncode(parseFormula("(0=0)"));
  auto prf = [&](const Nat& a, const Nat& b) {
    return std::get<Tri>(evalDefined(reg(), "Prf", {a, b}));
  };
  CHECK(prf(proofCode, conclCode) == Tri::True);
  CHECK(prf(proofCode, godelEncode(parseFormula("(S0=S0)"))) == Tri::False);
  CHECK(prf(Nat(12345), conclCode) == Tri::False);  // not even a code
  CHECK(prf(Nat(0), conclCode) == Tri::False);      // the empty proof proves nothing
}

TEST_CASE("Prov through its expansion searches proof codes, not proofs") {
  // ∃p Prf(p, ⌜(0=0)⌝) evaluated by witness search scans naturals p = 0..budget;
  // real proof codes are astronomically far out, so the honest answer at any
  // desk budget is unknown — while the Prov oracle's proof search succeeds.
  Nat concl = godelEncode(parseFormula("(0=0)"));
  FormulaPtr viaExpansion = expandDefinition(mkPred(reg().require("Prov"), {numeral(concl)}), reg());
  Assignment empty;
  CHECK(evalFormula(viaExpansion, empty, 500).value == Tri::Unknown);
  CHECK(std::get<Tri>(evalDefined(reg(), "Prov", {concl}, 500)) == Tri::True);
}

TEST_CASE("Prov soundness and budget monotonicity") {
  Nat c = godelEncode(parseFormula("(0=0)"));
  uint64_t foundAt = 0;
  for (uint64_t b : {1u, 10u, 100u, 1000u}) {
    if (std::get<Tri>(evalDefined(reg(), "Prov", {c}, b)) == Tri::True) {
      foundAt = b;
      break;
    }
  }
  REQUIRE(foundAt > 0);
  for (uint64_t b = foundAt; b <= foundAt * 64; b *= 2)
    CHECK(std::get<Tri>(evalDefined(reg(), "Prov", {c}, b)) == Tri::True);
  // never False, even on hopeless goals and garbage codes
  CHECK(std::get<Tri>(evalDefined(reg(), "Prov", {godelEncode(parseFormula("¬(0=0)"))}, 500)) ==
        Tri::Unknown);
  CHECK(std::get<Tri>(evalDefined(reg(), "Prov", {Nat(10)}, 500)) == Tri::Unknown);
}
