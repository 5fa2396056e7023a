#pragma once

#include "paradox/classify.hpp"
#include "paradox/diagonal.hpp"

namespace paradox {

// The four sentence families: P "someone's sentence is refutable",
// Q "someone else's sentence is refutable", R "a heterosequence of refuted
// sentences exists", F "the earliest class inspection".
enum class Family : uint8_t { P, Q, R, F };
const char* familyName(Family f);

enum class FormulaClass : uint8_t { Delta0, Sigma1, Other };
const char* formulaClassName(FormulaClass c);

struct GalleryEntry {
  Family family;
  FormulaPtr templateFormula;  // the φ(x,y) handed to the diagonal engine
  DiagonalResult diag;
  FormulaPtr psi;
  Nat selfCode;
  bool fixedPointOk;
  FormulaClass cls;
  std::vector<std::pair<uint64_t, FormulaPtr>> instances;  // k ↦ ψ(numeral k)
};

// φ(x,y) for each family, with x = v0, y = v1 and bound variables v2, v3.
FormulaPtr galleryTemplate(Family family, const SymbolRegistry& reg = SymbolRegistry::standard());

GalleryEntry buildEntry(Family family, const SymbolRegistry& reg = SymbolRegistry::standard(),
                        const std::vector<uint64_t>& instances = {0, 1, 2});
GalleryEntry buildP(const SymbolRegistry& reg = SymbolRegistry::standard());
GalleryEntry buildQ(const SymbolRegistry& reg = SymbolRegistry::standard());
GalleryEntry buildR(const SymbolRegistry& reg = SymbolRegistry::standard());
GalleryEntry buildF(const SymbolRegistry& reg = SymbolRegistry::standard());

// Least number principle instance for p with designated variable x:
// ∃x p → ∃x (p ∧ (∀y<x)¬p(y)) with fresh y. x must be free in p.
FormulaPtr lnpInstance(const FormulaPtr& p, VarIndex x);

// Deterministic key=value report (the CLI prints this verbatim).
std::string report(const GalleryEntry& e, const SymbolRegistry& reg = SymbolRegistry::standard());

}  // namespace paradox
