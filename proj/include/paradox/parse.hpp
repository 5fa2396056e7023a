#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paradox/ast.hpp"
#include "paradox/registry.hpp"

namespace paradox {

// Lexical token. Successor symbols arrive as runs so that "S^{N}" input and
// decoded symbol streams with huge runs stay compact.
struct Tok {
  enum class K : uint8_t {
    Zero, SRun, Var, Plus, Times, Eq, Lt, Le, Not, And, Or, Imp, Iff,
    Forall, Exists, LParen, RParen, Comma, Name
  };
  K k;
  Nat count;         // SRun
  VarIndex var = 0;  // Var
  SymId sym = 0;     // Name
  size_t pos = 0;    // byte offset in source text (0 for synthesized streams)
};

std::vector<Tok> lex(std::string_view text, const SymbolRegistry& reg = SymbolRegistry::standard());

FormulaPtr parseFormula(std::string_view text, const SymbolRegistry& reg = SymbolRegistry::standard());
TermPtr parseTerm(std::string_view text, const SymbolRegistry& reg = SymbolRegistry::standard());

// Formula if it parses as one, otherwise term.
using Expr = std::variant<FormulaPtr, TermPtr>;
Expr parseExpr(std::string_view text, const SymbolRegistry& reg = SymbolRegistry::standard());

// Entry points over pre-lexed tokens (the Gödel decoder synthesizes these).
FormulaPtr parseFormulaTokens(const std::vector<Tok>& toks, const SymbolRegistry& reg);
TermPtr parseTermTokens(const std::vector<Tok>& toks, const SymbolRegistry& reg);
Expr parseExprTokens(const std::vector<Tok>& toks, const SymbolRegistry& reg);

}  // namespace paradox
