#pragma once

#include <optional>
#include <vector>

#include "paradox/parse.hpp"
#include "paradox/print.hpp"

namespace paradox {

// Sequence coding: each element is written in base 8, every base-8 digit d is
// emitted as decimal digit d+1, the element is closed with decimal digit 9,
// and the concatenation is read as one base-10 number. 0 codes the empty
// sequence. Codes of expressions containing long successor runs stay in
// run-compressed form; everything here works on that form directly.

Nat seqEncode(const std::vector<Nat>& elems);
bool isCode(const Nat& n);
Nat seqLen(const Nat& code);              // throws DomainError unless isCode
Nat seqAt(const Nat& code, const Nat& k); // 0-based; DomainError out of range

// Non-throwing variants: nullopt where the throwing forms would raise
// DomainError. These keep pseudo-term partiality cheap on hot paths.
std::optional<Nat> seqLenOpt(const Nat& code);
std::optional<Nat> seqAtOpt(const Nat& code, const Nat& k);

// Materializes the whole sequence; refuses sequences longer than `maxLen`.
std::vector<Nat> seqDecode(const Nat& code, uint64_t maxLen = 1000000);

// Visits the sequence as (element, repeat) runs without materializing it;
// throws DomainError unless isCode.
void forEachElementRun(const Nat& code, const std::function<void(const Nat&, const BigUint&)>& fn);

Nat godelEncode(const TermPtr& t, const SymbolRegistry& reg = SymbolRegistry::standard());
Nat godelEncode(const FormulaPtr& f, const SymbolRegistry& reg = SymbolRegistry::standard());
Nat godelEncode(const Expr& e, const SymbolRegistry& reg = SymbolRegistry::standard());

Expr godelDecode(const Nat& code, const SymbolRegistry& reg = SymbolRegistry::standard());
FormulaPtr godelDecodeFormula(const Nat& code, const SymbolRegistry& reg = SymbolRegistry::standard());
TermPtr godelDecodeTerm(const Nat& code, const SymbolRegistry& reg = SymbolRegistry::standard());

// Neg(⌜φ⌝) = ⌜¬φ⌝; the argument must decode to a formula.
Nat metaNeg(const Nat& code, const SymbolRegistry& reg = SymbolRegistry::standard());

// Subs(⌜φ⌝, ⌜v⌝, ⌜t⌝) = ⌜φ(t/v)⌝; capture-free substitution only.
Nat metaSubs(const Nat& phi, const Nat& var, const Nat& term,
             const SymbolRegistry& reg = SymbolRegistry::standard());

// Num(n) = ⌜S…S0⌝ with n successors.
Nat numCode(const Nat& n);

}  // namespace paradox
