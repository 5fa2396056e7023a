#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "paradox/eval.hpp"
#include "paradox/finite_lab.hpp"
#include "paradox/gallery.hpp"
#include "paradox/kernel.hpp"

using json = nlohmann::json;
using namespace paradox;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;  // parse / capture / not-a-code / oracle domain
constexpr int kExitBudget = 3;  // budget exhausted where a definite answer was asked

std::string codeOut(const Nat& n) { return n.display(Nat::kExpandLimit); }

Assignment parseAssignments(const std::vector<std::string>& pairs) {
  Assignment a;
  for (const std::string& p : pairs) {
    size_t eq = p.find('=');
    if (eq == std::string::npos || eq < 2 || p[0] != 'v')
      throw DomainError("assignment must look like v0=5, got '" + p + "'");
    uint64_t v = std::stoull(p.substr(1, eq - 1));
    a.push(static_cast<VarIndex>(v), Nat::fromDecimal(p.substr(eq + 1)));
  }
  return a;
}

int cmdParse(const std::string& text) {
  std::cout << print(parseFormula(text)) << "\n";
  return kExitOk;
}

int cmdPrintExpr(const std::string& text) {
  Expr e = parseExpr(text);
  if (std::holds_alternative<FormulaPtr>(e))
    std::cout << print(std::get<FormulaPtr>(e)) << "\n";
  else
    std::cout << print(std::get<TermPtr>(e)) << "\n";
  return kExitOk;
}

int cmdEncode(const std::string& text) {
  std::cout << codeOut(godelEncode(parseExpr(text))) << "\n";
  return kExitOk;
}

int cmdDecode(const std::string& codeText, bool seq, uint64_t indexBase) {
  Nat code = Nat::fromDecimal(codeText);
  if (seq) {
    std::vector<Nat> elems = seqDecode(code, 100000);
    std::cout << "length=" << elems.size() << "\n";
    for (size_t i = 0; i < elems.size(); ++i)
      std::cout << "seq[" << indexBase + i << "]=" << elems[i].toDecimal() << "\n";
    return kExitOk;
  }
  Expr e = godelDecode(code);
  if (std::holds_alternative<FormulaPtr>(e))
    std::cout << print(std::get<FormulaPtr>(e)) << "\n";
  else
    std::cout << print(std::get<TermPtr>(e)) << "\n";
  return kExitOk;
}

int cmdClassify(const std::string& text) {
  FormulaPtr f = parseFormula(text);
  std::cout << "delta0=" << (classifyDelta0(f) ? "true" : "false") << "\n";
  std::cout << "sigma1=" << (classifySigma1(f) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmdSubst(const std::string& fText, const std::string& varText, const std::string& tText) {
  if (varText.size() < 2 || varText[0] != 'v') throw DomainError("variable must look like v0");
  VarIndex v = static_cast<VarIndex>(std::stoull(varText.substr(1)));
  FormulaPtr f = parseFormula(fText);
  TermPtr t = parseTerm(tText);
  std::cout << print(substitute(f, v, t)) << "\n";
  return kExitOk;
}

int cmdEval(const std::string& text, uint64_t budget, const std::vector<std::string>& assigns,
            bool asJson) {
  FormulaPtr f = parseFormula(text);
  Assignment a = parseAssignments(assigns);
  EvalResult r = evalFormula(f, a, budget);
  if (asJson) {
    json out{{"value", triName(r.value)}, {"steps", r.steps}};
    if (r.witness) out["witness"] = r.witness->toDecimal();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "value=" << triName(r.value) << "\n";
    if (r.witness) std::cout << "witness=" << r.witness->toDecimal() << "\n";
    std::cout << "steps=" << r.steps << "\n";
  }
  return r.value == Tri::Unknown ? kExitBudget : kExitOk;
}

int cmdCheckProof(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open proof file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Proof p = parseProofText(ss.str());
  CheckResult r = checkProof(p);
  if (r.ok) {
    std::cout << "accepted\n";
    std::cout << "conclusion=" << print(conclusion(p)) << "\n";
    return kExitOk;
  }
  std::cout << "rejected at line " << r.line << ": " << r.reason << "\n";
  return kExitDomain;
}

int cmdSearchProof(const std::string& goalText, uint64_t budget) {
  FormulaPtr goal = parseFormula(goalText);
  SearchOutcome out = searchProof(goal, budget);
  if (!out.proof) {
    std::cout << "not found within budget " << budget << "\n";
    return kExitBudget;
  }
  std::cout << writeProofText(*out.proof);
  return kExitOk;
}

int cmdDiagonalize(const std::string& phiText, uint64_t x, uint64_t y, bool asJson) {
  FormulaPtr phi = parseFormula(phiText);
  DiagonalResult r = diagonalize(phi, static_cast<VarIndex>(x), static_cast<VarIndex>(y));
  bool ok = verifyFixedPoint(r);
  if (asJson) {
    json out{{"psi", print(r.psi)},
             {"theta", print(r.theta)},
             {"selfCode", r.selfCode.display()},
             {"residual", r.residual.display()},
             {"fresh", r.fresh},
             {"fixedPoint", ok}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "psi=" << print(r.psi) << "\n";
    std::cout << "theta=" << print(r.theta) << "\n";
    std::cout << "selfCode=" << r.selfCode.display() << "\n";
    std::cout << "residual=" << r.residual.display() << "\n";
    std::cout << "fixedPoint=" << (ok ? "ok" : "FAIL") << "\n";
  }
  return kExitOk;
}

int cmdGallery(const std::string& familyText, const std::vector<uint64_t>& extraInstances,
               bool asJson) {
  Family family;
  if (familyText == "P") family = Family::P;
  else if (familyText == "Q") family = Family::Q;
  else if (familyText == "R") family = Family::R;
  else if (familyText == "F") family = Family::F;
  else throw DomainError("family must be one of P, Q, R, F");
  std::vector<uint64_t> ks{0, 1, 2};
  for (uint64_t k : extraInstances)
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  GalleryEntry e = buildEntry(family, SymbolRegistry::standard(), ks);
  if (asJson) {
    json inst = json::object();
    for (const auto& [k, f] : e.instances) inst[std::to_string(k)] = print(f);
    json out{{"family", familyName(e.family)},
             {"template", print(e.templateFormula)},
             {"psi", print(e.psi)},
             {"symbols", symbolCount(e.psi).toDecimal()},
             {"selfCode", e.selfCode.display()},
             {"residual", e.diag.residual.display()},
             {"fixedPointOk", e.fixedPointOk},
             {"classification", formulaClassName(e.cls)},
             {"instances", inst}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << report(e);
  }
  return kExitOk;
}

int cmdFiniteLab(unsigned kind, unsigned n, bool table, bool asJson) {
  ParadoxKind k;
  switch (kind) {
    case 1: k = ParadoxKind::SomeoneWrong; break;
    case 2: k = ParadoxKind::SomeoneElseWrong; break;
    case 3: k = ParadoxKind::AtLeastK; break;
    default: throw DomainError("--kind must be 1, 2 or 3");
  }
  ModelReport r = modelReport(k, n);
  auto row = [](const std::vector<bool>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ' ';
      s += v[i] ? 'T' : 'F';
    }
    return s;
  };
  if (asJson) {
    json out{{"kind", paradoxKindName(r.kind)},
             {"n", r.n},
             {"models", r.models.size()},
             {"classification", modelClassName(r.classification)}};
    if (table) {
      json models = json::array();
      for (const auto& m : r.models) models.push_back(row(m));
      out["table"] = models;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "kind=" << paradoxKindName(r.kind) << "\n";
    std::cout << "n=" << r.n << "\n";
    std::cout << "models=" << r.models.size() << "\n";
    std::cout << "classification=" << modelClassName(r.classification) << "\n";
    if (table)
      for (size_t i = 0; i < r.models.size(); ++i)
        std::cout << "model[" << i << "]=" << row(r.models[i]) << "\n";
  }
  return kExitOk;
}

int cmdRegistry() {
  const SymbolRegistry& reg = SymbolRegistry::standard();
  std::cout << "name\tkind\tarity\tclass\tcode\n";
  for (SymId id = 0; id < reg.size(); ++id) {
    const DefinedSymbol& d = reg.at(id);
    std::cout << d.name << "\t" << symKindName(d.kind) << "\t" << d.arity << "\t"
              << symClassName(d.cls) << "\t" << reg.symbolCode(id) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gödel coding, diagonal sentences and finite paradox semantics for PA"};
  app.require_subcommand(1);
  app.fallthrough();

  uint64_t budget = 10000;
  bool asJson = false;
  app.add_option("--budget", budget, "search budget (witness trials / proof lines)")
      ->capture_default_str();
  app.add_flag("--json", asJson, "machine-readable output");

  std::string text, varText, termText, codeText, path, familyText;
  uint64_t x = 0, y = 1, indexBase = 0;
  unsigned kind = 0, n = 0;
  bool seq = false, table = false;
  std::vector<std::string> assigns;
  std::vector<uint64_t> instances;

  auto* cParse = app.add_subcommand("parse", "parse a formula and print its canonical form");
  cParse->add_option("formula", text)->required();
  auto* cPrint = app.add_subcommand("print", "parse a formula or term and print it canonically");
  cPrint->add_option("expr", text)->required();
  auto* cEncode = app.add_subcommand("encode", "Gödel-encode a formula or term");
  cEncode->add_option("expr", text)->required();
  auto* cDecode = app.add_subcommand("decode", "decode a Gödel code back to an expression");
  cDecode->add_option("code", codeText)->required();
  cDecode->add_flag("--seq", seq, "print the raw element sequence instead");
  cDecode->add_option("--index-base", indexBase, "first index shown in --seq output")
      ->capture_default_str();
  auto* cClassify = app.add_subcommand("classify", "syntactic delta0/sigma1 classification");
  cClassify->add_option("formula", text)->required();
  auto* cSubst = app.add_subcommand("subst", "substitute a term for a free variable");
  cSubst->add_option("formula", text)->required();
  cSubst->add_option("var", varText)->required();
  cSubst->add_option("term", termText)->required();
  auto* cEval = app.add_subcommand("eval", "three-valued evaluation over the standard model");
  cEval->add_option("formula", text)->required();
  cEval->add_option("--assign", assigns, "variable assignment, e.g. --assign v0=5");
  auto* cCheck = app.add_subcommand("check-proof", "check a Hilbert proof file");
  cCheck->add_option("file", path)->required();
  auto* cSearch = app.add_subcommand("search-proof", "search for a proof of a goal");
  cSearch->add_option("goal", text)->required();
  auto* cDiag = app.add_subcommand("diagonalize", "build the diagonal fixed point of phi(x,y)");
  cDiag->add_option("phi", text)->required();
  cDiag->add_option("--x", x, "index of the kept free variable")->capture_default_str();
  cDiag->add_option("--y", y, "index of the variable receiving the self-reference")
      ->capture_default_str();
  auto* cGallery = app.add_subcommand("gallery", "the four diagonal sentence families");
  cGallery->require_subcommand(1);
  auto* cBuild = cGallery->add_subcommand("build", "build one family and report it");
  cBuild->add_option("family", familyText, "P, Q, R or F")->required();
  cBuild->add_option("--instance", instances, "additional instance indices");
  auto* cLab = app.add_subcommand("finite-lab", "finite truth-assignment semantics of the paradoxes");
  cLab->add_option("--kind", kind, "1: someone wrong, 2: someone else wrong, 3: at least k wrong")
      ->required();
  cLab->add_option("--n", n, "number of speakers")->required();
  cLab->add_flag("--table", table, "also print the models");
  auto* cReg = app.add_subcommand("registry", "dump the defined-symbol registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cParse->parsed()) return cmdParse(text);
    if (cPrint->parsed()) return cmdPrintExpr(text);
    if (cEncode->parsed()) return cmdEncode(text);
    if (cDecode->parsed()) return cmdDecode(codeText, seq, indexBase);
    if (cClassify->parsed()) return cmdClassify(text);
    if (cSubst->parsed()) return cmdSubst(text, varText, termText);
    if (cEval->parsed()) return cmdEval(text, budget, assigns, asJson);
    if (cCheck->parsed()) return cmdCheckProof(path);
    if (cSearch->parsed()) return cmdSearchProof(text, budget);
    if (cDiag->parsed()) return cmdDiagonalize(text, x, y, asJson);
    if (cGallery->parsed() && cBuild->parsed()) return cmdGallery(familyText, instances, asJson);
    if (cLab->parsed()) return cmdFiniteLab(kind, n, table, asJson);
    if (cReg->parsed()) return cmdRegistry();
    std::cerr << "missing subcommand\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
