#pragma once

#include "paradox/godel.hpp"

namespace paradox {

// Output of the constructive diagonal lemma: ψ(x) built from φ(x,y) so that
// the code of ψ appears inside ψ itself. `residual` is the value of the
// self-reference pseudo-term Subs(⌜θ⌝, ⌜z⌝, Num(⌜θ⌝)) computed through the
// registry oracles; the construction is a fixed point exactly when it equals
// ⌜ψ⌝.
struct DiagonalResult {
  FormulaPtr psi;
  FormulaPtr theta;
  Nat selfCode;    // godelEncode(psi)
  Nat residual;    // oracle-evaluated self-reference
  VarIndex fresh;  // the diagonal variable z
};

// θ(x,z) := φ with y replaced by Subs(z, ⌜z⌝, Num(z)); ψ(x) := θ(x, ⌜θ⌝-numeral).
// z is the smallest variable index absent from φ and distinct from x, y.
DiagonalResult diagonalize(const FormulaPtr& phi, VarIndex x, VarIndex y,
                           const SymbolRegistry& reg = SymbolRegistry::standard());

// Re-encodes r.psi and compares with the oracle residual, exactly.
bool verifyFixedPoint(const DiagonalResult& r,
                      const SymbolRegistry& reg = SymbolRegistry::standard());

}  // namespace paradox
