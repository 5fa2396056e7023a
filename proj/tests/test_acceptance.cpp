// Acceptance suite: nine criteria, one PASS/FAIL line each. Everything here
// is pinned — tolerances are exact equalities, budgets are fixed in code.
#include <sys/wait.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "paradox/eval.hpp"
#include "paradox/gallery.hpp"
#include "paradox/finite_lab.hpp"
#include "paradox/kernel.hpp"
#include "support.hpp"

using namespace paradox;
using namespace paradox::test;

namespace {

struct Crit {
  int id;
  const char* title;
  int failures = 0;
  Crit(int id_, const char* title_) : id(id_), title(title_) {}
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ++failures;
      if (failures <= 5) std::cout << "    mismatch: " << what << "\n";
    }
  }
  bool finish() {
    bool ok = failures == 0;
    std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << id << " — " << title;
    if (!ok) std::cout << " (" << failures << " mismatches)";
    std::cout << "\n";
    return ok;
  }
};

const SymbolRegistry& reg() { return SymbolRegistry::standard(); }

}  // namespace

TEST_CASE("criterion 1: coding round trips") {
  Crit c(1, "coding round trips (1000 sequences, 500 ASTs, exact)");
  Rng r(1001);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Nat> elems;
    size_t len = r.next(51);
    for (size_t j = 0; j < len; ++j) elems.push_back(Nat(r.next(1u << 20)));
    Nat code = seqEncode(elems);
    std::vector<Nat> back = seqDecode(code);
    bool same = back.size() == elems.size();
    for (size_t j = 0; same && j < back.size(); ++j) same = back[j] == elems[j];
    c.expect(same, "sequence round trip " + std::to_string(i));
  }
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = randomFormula(r, 6, 3, true);
    c.expect(equal(godelDecodeFormula(godelEncode(f)), f), "AST round trip " + std::to_string(i));
  }
  CHECK(c.finish());
}

TEST_CASE("criterion 2: arithmetized-syntax fidelity") {
  Crit c(2, "metaNeg/metaSubs agree with the AST route; HetSeq/Ele expansions exhaustive");
  Rng r(2002);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = randomFormula(r, 4, 2, false);
    c.expect(metaNeg(godelEncode(f)) == godelEncode(mkNot(f)), "metaNeg case " + std::to_string(i));
    VarIndex v = static_cast<VarIndex>(r.next(3));
    TermPtr t = randomClosedTerm(r, 2);
    Nat viaCode = metaSubs(godelEncode(f), godelEncode(mkVar(v)), godelEncode(t));
    c.expect(viaCode == godelEncode(substitute(f, v, t)), "metaSubs case " + std::to_string(i));
  }

  // HetSeq/Ele: oracle vs expansion, exhaustively over sequences of length
  // <= 4 with elements < 50 (6,377,551 sequences), split across threads.
  const FormulaPtr hetExp = reg().at(reg().require("HetSeq")).expansion;
  const FormulaPtr eleExp = reg().at(reg().require("Ele")).expansion;
  const PredOracle& hetOracle = reg().at(reg().require("HetSeq")).pred;
  const PredOracle& eleOracle = reg().at(reg().require("Ele")).pred;
  std::atomic<uint64_t> mismatches{0};
  std::atomic<uint64_t> checked{0};

  auto checkSeq = [&](const std::vector<Nat>& elems) {
    Nat code = seqEncode(elems);
    Nat hetArgs[1] = {code};
    Tri hetDirect = hetOracle(reg(), std::span<const Nat>(hetArgs, 1), 0);
    Assignment a{{0, code}};
    if (evalFormula(hetExp, a, 0).value != hetDirect) ++mismatches;
    auto probeEle = [&](const Nat& x) {
      Nat eleArgs[2] = {x, code};
      Tri direct = eleOracle(reg(), std::span<const Nat>(eleArgs, 2), 0);
      Assignment b{{0, x}, {1, code}};
      if (evalFormula(eleExp, b, 0).value != direct) ++mismatches;
    };
    // membership hit at the first and last position, a guaranteed miss, and
    // the code itself (the edge the ≤ bound skims past)
    if (!elems.empty()) probeEle(elems.front());
    if (elems.size() >= 2) probeEle(elems.back());
    probeEle(Nat(50));
    probeEle(code);
    ++checked;
  };

  checkSeq({});
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  std::atomic<uint64_t> nextFirst{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (uint64_t first = nextFirst++; first < 50; first = nextFirst++) {
        std::vector<Nat> elems{Nat(first)};
        checkSeq(elems);  // length 1
        for (uint64_t b = 0; b < 50; ++b) {
          elems = {Nat(first), Nat(b)};
          checkSeq(elems);  // length 2
          for (uint64_t d = 0; d < 50; ++d) {
            elems = {Nat(first), Nat(b), Nat(d)};
            checkSeq(elems);  // length 3
            elems.push_back(Nat(0));
            for (uint64_t e = 0; e < 50; ++e) {
              elems[3] = Nat(e);
              checkSeq(elems);  // length 4
            }
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  c.expect(checked == 6377551ull, "exhaustive count was " + std::to_string(checked.load()));
  c.expect(mismatches == 0, std::to_string(mismatches.load()) + " oracle/expansion mismatches");
  CHECK(c.finish());
}

TEST_CASE("criterion 3: worked code values") {
  Crit c(3, "worked code values recomputed by the digit oracle, then pinned");
  // independent digit oracle first
  c.expect(oracleSeqDigits({13, 1, 5, 1, 14}) == "269296929279", "digit oracle for (0=0)");
  c.expect(oracleSeqDigits({6, 13, 1, 5, 1, 14}) == "79269296929279", "digit oracle for ¬(0=0)");
  c.expect(oracleSeqDigits({2, 1}) == "3929", "digit oracle for S0");
  c.expect(oracleSeqDigits({3, 5}) == "4969", "digit oracle for [3,5]");
  // then the implementation against the frozen values
  c.expect(godelEncode(parseFormula("(0=0)")) == Nat::fromDecimal("269296929279"), "encode (0=0)");
  c.expect(metaNeg(Nat::fromDecimal("269296929279")) == Nat::fromDecimal("79269296929279"),
           "metaNeg of ⌜(0=0)⌝");
  c.expect(numCode(Nat(1)) == Nat::fromDecimal("3929"), "Num(1)");
  c.expect(seqEncode({Nat(3), Nat(5)}) == Nat::fromDecimal("4969"), "seqEncode([3,5])");
  CHECK(c.finish());
}

TEST_CASE("criterion 4: diagonal fixed points") {
  Crit c(4, "P/Q/R/F and 25 random fixed points, exact code identity; mutations fail");
  for (Family fam : {Family::P, Family::Q, Family::R, Family::F}) {
    GalleryEntry e = buildEntry(fam, reg());
    c.expect(e.fixedPointOk, std::string("fixed point for ") + familyName(fam));
    c.expect(e.selfCode == e.diag.residual, std::string("residual identity for ") + familyName(fam));
    DiagonalResult bad = e.diag;
    bad.psi = mkNot(bad.psi);
    c.expect(!verifyFixedPoint(bad, reg()), std::string("mutation detected for ") + familyName(fam));
  }
  Rng r(4004);
  for (int i = 0; i < 25; ++i) {
    FormulaPtr phi = randomFormula(r, 4, 3, false);
    DiagonalResult d = diagonalize(phi, 0, 1, reg());
    c.expect(verifyFixedPoint(d, reg()), "random fixed point " + std::to_string(i));
  }
  CHECK(c.finish());
}

TEST_CASE("criterion 5: classifier properties") {
  Crit c(5, "sigma1 closed under exists (200 cases); delta0 implies sigma1 (200 cases)");
  Rng r(5005);
  for (int i = 0; i < 200; ++i) {
    FormulaPtr f = randomDelta0(r, 3, {0, 1}, 5, 2);
    for (uint64_t k = r.next(3); k-- > 0;) f = mkExists(static_cast<VarIndex>(r.next(4)), f);
    if (r.next(4) == 0) f = mkExists(9, mkPred(reg().require("Prov"), {mkVar(9)}));
    c.expect(classifySigma1(f), "sigma1 premise " + std::to_string(i));
    FormulaPtr wrapped = mkExists(static_cast<VarIndex>(r.next(6)), f);
    c.expect(classifySigma1(wrapped), "sigma1 closure " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    FormulaPtr f = randomDelta0(r, 3, {0, 1, 2}, 6, 3);
    c.expect(classifyDelta0(f), "delta0 premise " + std::to_string(i));
    c.expect(classifySigma1(f), "delta0 implies sigma1 " + std::to_string(i));
  }
  CHECK(c.finish());
}

TEST_CASE("criterion 6: evaluator oracle equivalence and budget monotonicity") {
  Crit c(6, "evaluator equals the naive oracle (300 delta0 sentences); monotone in budget");
  Rng r(6006);
  Assignment empty;
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = randomDelta0(r, 4, {}, 20);
    std::map<VarIndex, uint64_t> env;
    bool want = naiveEval(f, env);
    Tri got = evalFormula(f, empty, 0).value;
    c.expect(got == (want ? Tri::True : Tri::False), "naive agreement " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    uint64_t target = r.next(1500);
    FormulaPtr matrix = r.coin() ? mkEq(mkVar(9), numeral(Nat(target)))
                                 : mkNot(mkEq(mkVar(9), numeral(Nat(target))));
    FormulaPtr f = r.coin() ? mkExists(9, matrix) : mkForall(9, matrix);
    Tri prev = Tri::Unknown;
    for (uint64_t b : {10ull, 100ull, 1000ull}) {
      Tri v = evalFormula(f, empty, b).value;
      if (prev != Tri::Unknown)
        c.expect(v == prev, "budget flip in case " + std::to_string(i));
      prev = v;
    }
  }
  CHECK(c.finish());
}

TEST_CASE("criterion 7: proof kernel") {
  Crit c(7, "hand proofs accepted, 20 mutants rejected, search + Prov on (0=0)");
  FormulaPtr vrefl = parseFormula("(v0=v0)");
  Proof pVar;
  {
    Justification j;
    j.k = Justification::K::Axiom;
    j.schema = *schemaIndex("eq-refl");
    j.bindings = {parseTerm("v0")};
    pVar.lines.push_back({vrefl, j});
  }
  Proof pZero;
  {
    Justification j0;
    j0.k = Justification::K::Axiom;
    j0.schema = *schemaIndex("eq-refl");
    j0.bindings = {parseTerm("v0")};
    pZero.lines.push_back({vrefl, j0});
    Justification j1;
    j1.k = Justification::K::Gen;
    j1.i = 0;
    j1.v = 0;
    pZero.lines.push_back({mkForall(0, vrefl), j1});
    Justification j2;
    j2.k = Justification::K::Axiom;
    j2.schema = *schemaIndex("forall-inst");
    j2.bindings = {VarIndex{0}, vrefl, parseTerm("0")};
    pZero.lines.push_back({mkImp(mkForall(0, vrefl), parseFormula("(0=0)")), j2});
    Justification j3;
    j3.k = Justification::K::MP;
    j3.i = 2;
    j3.j = 1;
    pZero.lines.push_back({parseFormula("(0=0)"), j3});
  }
  c.expect(checkProof(pVar).ok, "x=x accepted");
  c.expect(checkProof(pZero).ok, "(0=0) accepted");

  // twenty-plus mutants, each expected to be rejected
  std::vector<Proof> mutants;
  for (const Proof& base : {pVar, pZero}) {
    for (size_t i = 0; i < base.lines.size(); ++i) {
      Proof m = base;
      m.lines[i].formula = mkNot(m.lines[i].formula);
      mutants.push_back(std::move(m));  // formula no longer justified
      Proof w = base;
      w.lines[i].formula = mkEq(mkZero(), mkSucc(mkZero()));
      mutants.push_back(std::move(w));  // a falsehood in place of the line
      Proof s = base;
      switch (s.lines[i].just.k) {
        case Justification::K::Axiom:
          s.lines[i].just.schema = (s.lines[i].just.schema + 1) % axiomSchemas().size();
          break;
        case Justification::K::MP: s.lines[i].just.i = i; break;
        case Justification::K::Gen: s.lines[i].just.v += 1; break;
      }
      mutants.push_back(std::move(s));  // broken justification
    }
  }
  {
    Proof m = pZero;
    m.lines[3].just.i = 3;
    mutants.push_back(std::move(m));  // self-citation
    m = pZero;
    m.lines[3].just.j = 0;
    mutants.push_back(std::move(m));  // wrong antecedent
    m = pZero;
    m.lines[1].just.v = 1;
    mutants.push_back(std::move(m));  // generalization over the wrong variable
    m = pZero;
    std::swap(m.lines[0], m.lines[1]);
    mutants.push_back(std::move(m));  // forward citation after the swap
    m = pZero;
    m.lines[2].just.bindings[2] = parseTerm("S0");
    mutants.push_back(std::move(m));  // binding no longer matches the instance
    m = pZero;
    m.lines.pop_back();
    m.lines.pop_back();
    m.lines[1].just.i = 1;
    mutants.push_back(std::move(m));
  }
  c.expect(mutants.size() >= 20, "mutant count " + std::to_string(mutants.size()));
  for (size_t i = 0; i < mutants.size(); ++i)
    c.expect(!checkProof(mutants[i]).ok, "mutant " + std::to_string(i) + " slipped through");

  SearchOutcome found = searchProof(parseFormula("(0=0)"), 10000);
  c.expect(found.proof.has_value(), "searchProof found (0=0)");
  if (found.proof) {
    c.expect(checkProof(*found.proof).ok, "searched proof checks");
    c.expect(equal(conclusion(*found.proof), parseFormula("(0=0)")), "searched conclusion");
  }
  Tri prov = std::get<Tri>(evalDefined(reg(), "Prov", {godelEncode(parseFormula("(0=0)"))}, 10000));
  c.expect(prov == Tri::True, "Prov(⌜(0=0)⌝) is true");
  CHECK(c.finish());
}

TEST_CASE("criterion 8: finite lab exact counts") {
  Crit c(8, "model counts for all three rooms, n = 1..12, by exhaustive enumeration");
  for (unsigned n = 1; n <= 12; ++n) {
    c.expect(consistentAssignments(ParadoxKind::SomeoneWrong, n).empty(),
             "someone-wrong n=" + std::to_string(n));
    auto elseWrong = consistentAssignments(ParadoxKind::SomeoneElseWrong, n);
    c.expect(elseWrong.size() == (n == 1 ? 1 : n), "someone-else-wrong n=" + std::to_string(n));
    if (n >= 2)
      for (const auto& m : elseWrong) {
        unsigned falses = 0;
        for (bool b : m)
          if (!b) ++falses;
        c.expect(falses == 1, "someone-else-wrong model shape n=" + std::to_string(n));
      }
    auto atLeast = consistentAssignments(ParadoxKind::AtLeastK, n);
    if (n % 2 == 0) {
      c.expect(atLeast.size() == 1, "at-least-k count n=" + std::to_string(n));
      if (atLeast.size() == 1)
        for (unsigned i = 0; i < n; ++i)
          c.expect(atLeast[0][i] == (i < n / 2), "first half right, n=" + std::to_string(n));
    } else {
      c.expect(atLeast.empty(), "at-least-k odd n=" + std::to_string(n));
    }
  }
  CHECK(c.finish());
}

namespace {
std::pair<int, std::string> runCli(const std::string& args) {
  std::string cmd = std::string(PARADOX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  return {WEXITSTATUS(pclose(pipe)), out};
}

std::string goldenFile(const std::string& name) {
  std::ifstream in(std::string(PARADOX_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("criterion 9: CLI end-to-end, byte-exact") {
  Crit c(9, "the three CLI examples reproduce their expected bytes");
  auto [e1, o1] = runCli("encode \"(0=0)\"");
  c.expect(e1 == 0 && o1 == "269296929279\n", "encode output");
  auto [e2, o2] = runCli("gallery build P");
  c.expect(e2 == 0, "gallery exit code");
  c.expect(o2 == goldenFile("gallery_P.txt"), "gallery report bytes");
  c.expect(o2.find("fixedPointOk=true\n") != std::string::npos, "gallery verdict");
  auto [e3, o3] = runCli("finite-lab --kind 3 --n 4 --table");
  c.expect(e3 == 0, "finite-lab exit code");
  c.expect(o3 == goldenFile("finitelab_k3_n4.txt"), "finite-lab bytes");
  c.expect(o3.find("model[0]=T T F F\n") != std::string::npos, "finite-lab model row");
  CHECK(c.finish());
}
