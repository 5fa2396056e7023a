#include "paradox/gallery.hpp"

#include "paradox/print.hpp"

namespace paradox {

const char* familyName(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::Q: return "Q";
    case Family::R: return "R";
    default: return "F";
  }
}

const char* formulaClassName(FormulaClass c) {
  switch (c) {
    case FormulaClass::Delta0: return "delta0";
    case FormulaClass::Sigma1: return "sigma1";
    default: return "other";
  }
}

namespace {

constexpr VarIndex X = 0, Y = 1, Z = 2, T = 3;

// Prov(Neg(Subs(y, ⌜x⌝, Num(w)))) — "the sentence of person w is refutable".
FormulaPtr refutedAt(VarIndex w, const SymbolRegistry& reg) {
  SymId prov = reg.require("Prov"), neg = reg.require("Neg"), subs = reg.require("Subs"),
        num = reg.require("Num");
  Nat xCode = godelEncode(mkVar(X), reg);
  TermPtr subsT = mkFun(subs, {mkVar(Y), numeral(xCode), mkFun(num, {mkVar(w)})});
  return mkPred(prov, {mkFun(neg, {subsT})});
}

}  // namespace

FormulaPtr galleryTemplate(Family family, const SymbolRegistry& reg) {
  switch (family) {
    case Family::P:
      // ∃z Prov(Neg(Subs(y,⌜x⌝,⌜z⌝))) ∧ (0 ≤ x); the guard keeps x free.
      return mkAnd(mkExists(Z, refutedAt(Z, reg)), mkLe(mkZero(), mkVar(X)));
    case Family::Q:
      // ∃z (z ≠ x ∧ Prov(Neg(Subs(y,⌜x⌝,⌜z⌝))))
      return mkExists(Z, mkAnd(mkNot(mkEq(mkVar(Z), mkVar(X))), refutedAt(Z, reg)));
    case Family::R: {
      // ∃z (HetSeq(z) ∧ (l(z)=Sx ∧ (∀t≤z)(Ele(t,z) → Prov(Neg(Subs(y,⌜x⌝,⌜t⌝))))))
      SymId hetSeq = reg.require("HetSeq"), ele = reg.require("Ele"), l = reg.require("l");
      FormulaPtr lenIsSx = mkEq(mkFun(l, {mkVar(Z)}), mkSucc(mkVar(X)));
      FormulaPtr allRefuted = mkForall(
          T, mkImp(mkLt(mkVar(T), mkSucc(mkVar(Z))),
                   mkImp(mkPred(ele, {mkVar(T), mkVar(Z)}), refutedAt(T, reg))));
      return mkExists(Z, mkAnd(mkPred(hetSeq, {mkVar(Z)}), mkAnd(lenIsSx, allRefuted)));
    }
    case Family::F: {
      // (∀z<x) Prov(Neg(Subs(y,⌜x⌝,⌜z⌝))) → Prov(Neg(y))
      SymId prov = reg.require("Prov"), neg = reg.require("Neg");
      FormulaPtr antecedent = mkForall(Z, mkImp(mkLt(mkVar(Z), mkVar(X)), refutedAt(Z, reg)));
      return mkImp(antecedent, mkPred(prov, {mkFun(neg, {mkVar(Y)})}));
    }
  }
  throw DomainError("unknown family");
}

GalleryEntry buildEntry(Family family, const SymbolRegistry& reg,
                        const std::vector<uint64_t>& instances) {
  GalleryEntry e;
  e.family = family;
  e.templateFormula = galleryTemplate(family, reg);
  e.diag = diagonalize(e.templateFormula, X, Y, reg);
  e.psi = e.diag.psi;
  e.selfCode = e.diag.selfCode;
  e.fixedPointOk = verifyFixedPoint(e.diag, reg);
  e.cls = classifyDelta0(e.psi, reg)   ? FormulaClass::Delta0
          : classifySigma1(e.psi, reg) ? FormulaClass::Sigma1
                                       : FormulaClass::Other;
  for (uint64_t k : instances) e.instances.emplace_back(k, substitute(e.psi, X, numeral(Nat(k))));
  return e;
}

GalleryEntry buildP(const SymbolRegistry& reg) { return buildEntry(Family::P, reg); }
GalleryEntry buildQ(const SymbolRegistry& reg) { return buildEntry(Family::Q, reg); }
GalleryEntry buildR(const SymbolRegistry& reg) { return buildEntry(Family::R, reg); }
GalleryEntry buildF(const SymbolRegistry& reg) { return buildEntry(Family::F, reg); }

FormulaPtr lnpInstance(const FormulaPtr& p, VarIndex x) {
  if (!occursFree(p, x))
    throw DomainError("least-number-principle instance needs v" + std::to_string(x) + " free");
  std::set<VarIndex> used = allVars(p);
  used.insert(x);
  VarIndex y = 0;
  while (used.count(y)) ++y;
  FormulaPtr noneBelow = mkForall(y, mkImp(mkLt(mkVar(y), mkVar(x)), mkNot(substitute(p, x, mkVar(y)))));
  return mkImp(mkExists(x, p), mkExists(x, mkAnd(p, noneBelow)));
}

std::string report(const GalleryEntry& e, const SymbolRegistry& reg) {
  std::string out;
  out += "family=";
  out += familyName(e.family);
  out += '\n';
  out += "template=" + print(e.templateFormula, reg) + "\n";
  out += "psi=" + print(e.psi, reg) + "\n";
  out += "symbols=" + symbolCount(e.psi).toDecimal() + "\n";
  out += "selfCode=" + e.selfCode.display() + "\n";
  out += "residual=" + e.diag.residual.display() + "\n";
  out += std::string("fixedPointOk=") + (e.fixedPointOk ? "true" : "false") + "\n";
  out += std::string("classification=") + formulaClassName(e.cls) + "\n";
  for (const auto& [k, inst] : e.instances)
    out += "instance[" + std::to_string(k) + "]=" + print(inst, reg) + "\n";
  return out;
}

}  // namespace paradox
