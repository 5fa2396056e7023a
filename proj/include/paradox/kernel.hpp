#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "paradox/godel.hpp"

namespace paradox {

// Value bound to one schema slot when instantiating an axiom schema.
using SchemaValue = std::variant<TermPtr, FormulaPtr, VarIndex>;

enum class SlotType : uint8_t { Term, Formula, Var };

struct SchemaSlot {
  const char* name;
  SlotType type;
};

// One axiom schema of the Hilbert system: propositional K/S/contraposition,
// quantifier instantiation and distribution, equality, the PA axioms (with an
// order axiom, since < is primitive here) and induction.
struct AxiomSchema {
  const char* id;
  std::vector<SchemaSlot> slots;
  FormulaPtr (*instantiate)(const std::vector<SchemaValue>&);
};

const std::vector<AxiomSchema>& axiomSchemas();
std::optional<uint32_t> schemaIndex(const std::string& id);

// Checks slot count and types, then builds the instance. Side conditions
// (capture-freeness, variable freshness) throw CaptureError or DomainError.
FormulaPtr instantiateSchema(uint32_t schema, const std::vector<SchemaValue>& bindings);

struct Justification {
  enum class K : uint8_t { Axiom, MP, Gen };
  K k = K::Axiom;
  uint32_t schema = 0;               // Axiom
  std::vector<SchemaValue> bindings; // Axiom
  size_t i = 0;                      // MP: implication line;  Gen: premise line
  size_t j = 0;                      // MP: antecedent line
  VarIndex v = 0;                    // Gen
};

struct ProofLine {
  FormulaPtr formula;
  Justification just;
};

struct Proof {
  std::vector<ProofLine> lines;
};

FormulaPtr conclusion(const Proof& p);  // throws DomainError on empty proofs

struct CheckResult {
  bool ok = false;
  size_t line = 0;      // first failing line when !ok
  std::string reason;
};

CheckResult checkProof(const Proof& p);

// Arithmetization: a proof flattens to one element sequence, line by line.
//   axiom line:  1, schema, binding values..., ⌜formula⌝
//   mp line:     2, i, j, ⌜formula⌝
//   gen line:    3, i, v, ⌜formula⌝
// Binding values encode by slot type: variables as their index, terms and
// formulas as their Gödel numbers. The empty proof encodes to 0.
Nat encodeProof(const Proof& p, const SymbolRegistry& reg = SymbolRegistry::standard());
Proof decodeProof(const Nat& code, const SymbolRegistry& reg = SymbolRegistry::standard());

// Text form, one line per step:
//   ⟨index⟩. ⟨formula⟩ ; ax ⟨schema-id⟩ ⟨slot⟩=⟨value⟩ | ⟨slot⟩=⟨value⟩ ...
//   ⟨index⟩. ⟨formula⟩ ; mp ⟨i⟩ ⟨j⟩
//   ⟨index⟩. ⟨formula⟩ ; gen ⟨i⟩ v⟨k⟩
std::string writeProofText(const Proof& p, const SymbolRegistry& reg = SymbolRegistry::standard());
Proof parseProofText(std::string_view text, const SymbolRegistry& reg = SymbolRegistry::standard());

struct SearchOutcome {
  std::optional<Proof> proof;
  uint64_t linesGenerated = 0;
};

// Breadth-limited enumeration: goal-directed schema matching, generalization
// peeling, then axiom instances over small term/formula pools closed under
// modus ponens. The budget counts generated lines; exhaustion means NotFound,
// never unprovability.
SearchOutcome searchProof(const FormulaPtr& goal, uint64_t budget = 10000,
                          const SymbolRegistry& reg = SymbolRegistry::standard());

}  // namespace paradox
