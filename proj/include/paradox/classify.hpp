#pragma once

#include <optional>

#include "paradox/registry.hpp"

namespace paradox {

struct BoundedQuantifier {
  bool universal;
  VarIndex v;
  TermPtr bound;
  FormulaPtr body;
};

// Recognizes the bounded shapes ∃v(v<t ∧ φ) and ∀v(v<t → φ) with v not free
// in the bound t.
std::optional<BoundedQuantifier> asBoundedQuantifier(const FormulaPtr& f);

// Syntactic sufficient condition: every quantifier is in bounded form and
// every defined predicate is registered Δ0.
bool classifyDelta0(const FormulaPtr& f, const SymbolRegistry& reg = SymbolRegistry::standard());

// A (possibly empty) block of existentials over a Δ0 matrix, where a matrix
// may also be a Σ1-registered atom.
bool classifySigma1(const FormulaPtr& f, const SymbolRegistry& reg = SymbolRegistry::standard());

}  // namespace paradox
