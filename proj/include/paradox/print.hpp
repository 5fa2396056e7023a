#pragma once

#include <functional>
#include <string>

#include "paradox/ast.hpp"
#include "paradox/registry.hpp"

namespace paradox {

// One symbol of the object language. The printer, the lexer and the Gödel
// coder all speak this alphabet; commas are real symbols here even though the
// grammar treats them as punctuation.
struct ObjSymbol {
  enum class K : uint8_t {
    Comma, Zero, S, Plus, Times, Eq, Not, And, Or, Imp, Iff,
    Forall, Exists, LParen, RParen, Lt, Var, Def
  };
  K k;
  VarIndex var = 0;  // Var
  SymId def = 0;     // Def
};

// Numeric code of a symbol: comma 0, core symbols 1..15, variables 16+i for
// i < 984, defined symbols 1000+id.
uint32_t symbolCode(const ObjSymbol& s);
constexpr uint32_t kMaxVarIndex = 983;

// Walks the canonical symbol sequence of an expression; successor runs are
// delivered as one call with a count.
using SymbolSink = std::function<void(const ObjSymbol&, const Nat& count)>;
void emitSymbols(const TermPtr& t, const SymbolSink& sink);
void emitSymbols(const FormulaPtr& f, const SymbolSink& sink);

// Exact number of object-language symbols in the canonical form.
Nat symbolCount(const FormulaPtr& f);

// Canonical fully parenthesized text. Successor runs longer than
// kSuccPrintLimit render as "S^{N}" (the parser accepts that form back).
constexpr uint64_t kSuccPrintLimit = 2000;
std::string print(const TermPtr& t, const SymbolRegistry& reg = SymbolRegistry::standard());
std::string print(const FormulaPtr& f, const SymbolRegistry& reg = SymbolRegistry::standard());

}  // namespace paradox
