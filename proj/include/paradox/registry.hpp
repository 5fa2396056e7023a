#pragma once

#include <functional>
#include <span>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "paradox/ast.hpp"

namespace paradox {

// Three-valued truth: Unknown only ever means "budget exhausted before the
// search decided", never a semantic third value of the standard model.
enum class Tri : uint8_t { False, Unknown, True };

inline const char* triName(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "unknown";
  }
}

enum class SymKind : uint8_t { Function, Predicate };
enum class SymClass : uint8_t { Delta0, Sigma1, Opaque };

inline const char* symKindName(SymKind k) { return k == SymKind::Function ? "function" : "predicate"; }
inline const char* symClassName(SymClass c) {
  switch (c) {
    case SymClass::Delta0: return "delta0";
    case SymClass::Sigma1: return "sigma1";
    default: return "opaque";
  }
}

class SymbolRegistry;

// Executable meta-level semantics of a pseudo-symbol. Function oracles are
// partial: nullopt marks arguments outside the domain (evalDefined turns that
// into a DomainError). Predicate oracles are total over Tri, and only Prov
// ever answers Unknown.
using FunOracle = std::function<std::optional<Nat>(const SymbolRegistry&, std::span<const Nat>)>;
using PredOracle = std::function<Tri(const SymbolRegistry&, std::span<const Nat>, uint64_t budget)>;

struct DefinedSymbol {
  std::string name;
  SymKind kind;
  uint32_t arity;
  SymClass cls;
  // Definition in terms of other registered symbols, with formal arguments
  // v0..v(arity-1); absent for symbols whose only semantics is the oracle.
  FormulaPtr expansion;
  FunOracle fun;
  PredOracle pred;
};

class SymbolRegistry {
 public:
  // The standard table: Code, l, Dec, Neg, Subs, Num, HetSeq, Ele, Prf, Prov,
  // registered in that order.
  static const SymbolRegistry& standard();

  SymId add(DefinedSymbol s);
  void setExpansion(SymId id, FormulaPtr f);

  size_t size() const { return syms_.size(); }
  const DefinedSymbol& at(SymId id) const;
  std::optional<SymId> find(const std::string& name) const;
  SymId require(const std::string& name) const;  // throws DomainError

  // Object-language symbol code of a defined symbol (the 1000+ band).
  uint32_t symbolCode(SymId id) const { return 1000 + id; }
  std::optional<SymId> fromSymbolCode(uint32_t code) const;

 private:
  std::vector<DefinedSymbol> syms_;
  std::unordered_map<std::string, SymId> byName_;
};

// Direct oracle evaluation of a registered symbol on numeric arguments.
// Functions yield a Nat, predicates a Tri.
using DefinedValue = std::variant<Nat, Tri>;
DefinedValue evalDefined(const SymbolRegistry& reg, const std::string& name,
                         const std::vector<Nat>& args, uint64_t budget = 10000);

// One-step replacement of every defined-predicate atom that has a registered
// expansion; atoms without one are left alone. Throws CaptureError if an
// argument would be captured by the expansion's bound variables.
FormulaPtr expandDefinition(const FormulaPtr& f, const SymbolRegistry& reg);

}  // namespace paradox
