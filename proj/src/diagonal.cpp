#include "paradox/diagonal.hpp"

namespace paradox {

DiagonalResult diagonalize(const FormulaPtr& phi, VarIndex x, VarIndex y,
                           const SymbolRegistry& reg) {
  if (x == y) throw DomainError("diagonalize needs distinct variables x and y");

  std::set<VarIndex> used = allVars(phi);
  used.insert(x);
  used.insert(y);
  VarIndex z = 0;
  while (used.count(z)) ++z;

  SymId subsSym = reg.require("Subs");
  SymId numSym = reg.require("Num");

  // ⌜z⌝: the Gödel number of the variable z as a term.
  Nat zCode = godelEncode(mkVar(z), reg);

  // Subs(z, ⌜z⌝, Num(z)) — when z is later set to ⌜θ⌝, this pseudo-term
  // evaluates to ⌜θ(x, ⌜θ⌝-numeral)⌝ = ⌜ψ⌝.
  TermPtr selfRef =
      mkFun(subsSym, {mkVar(z), numeral(zCode), mkFun(numSym, {mkVar(z)})});

  DiagonalResult out;
  out.fresh = z;
  out.theta = substitute(phi, y, selfRef);
  Nat thetaCode = godelEncode(out.theta, reg);
  out.psi = substitute(out.theta, z, numeral(thetaCode));
  out.selfCode = godelEncode(out.psi, reg);

  // The same value, this time through the registry oracles.
  Nat numOfTheta = std::get<Nat>(evalDefined(reg, "Num", {thetaCode}));
  out.residual = std::get<Nat>(evalDefined(reg, "Subs", {thetaCode, zCode, numOfTheta}));
  return out;
}

bool verifyFixedPoint(const DiagonalResult& r, const SymbolRegistry& reg) {
  if (!r.psi) return false;
  try {
    return godelEncode(r.psi, reg) == r.residual;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace paradox
