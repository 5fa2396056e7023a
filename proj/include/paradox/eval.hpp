#pragma once

#include <optional>

#include "paradox/registry.hpp"

namespace paradox {

// Variable assignment with scoped shadowing; lookups see the newest binding.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<VarIndex, Nat>> init) {
    for (const auto& [v, n] : init) push(v, n);
  }
  void push(VarIndex v, const Nat& n) { binds_.emplace_back(v, n); }
  void pop() { binds_.pop_back(); }
  const Nat* lookup(VarIndex v) const {
    for (size_t i = binds_.size(); i-- > 0;)
      if (binds_[i].first == v) return &binds_[i].second;
    return nullptr;
  }

 private:
  std::vector<std::pair<VarIndex, Nat>> binds_;
};

struct EvalResult {
  Tri value = Tri::Unknown;
  // Populated when the top-level formula is an existential that came out True.
  std::optional<Nat> witness;
  // Witness trials spent on unbounded quantifier searches.
  uint64_t steps = 0;
};

// Standard interpretation over the naturals; pseudo-functions via their
// registry oracles.
Nat evalTerm(const TermPtr& t, const Assignment& a,
             const SymbolRegistry& reg = SymbolRegistry::standard());

// Strong Kleene three-valued evaluation. Bounded quantifiers (the syntactic
// shapes ∃v(v<t ∧ φ) and ∀v(v<t → φ) with v not free in t) are evaluated
// exhaustively below the bound and never produce Unknown by themselves.
// Unbounded ∃ tries witnesses 0..budget and is True or Unknown; unbounded ∀
// is False on a refuting witness, otherwise Unknown. Atoms containing an
// undefined pseudo-term application are False (the relational reading of
// pseudo-terms). Prov atoms answer True or Unknown only.
EvalResult evalFormula(const FormulaPtr& f, const Assignment& a, uint64_t budget = 10000,
                       const SymbolRegistry& reg = SymbolRegistry::standard());

}  // namespace paradox
