#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paradox/errors.hpp"

namespace paradox {

// Finite rooms of speakers. Kind 1: everyone says "someone is wrong";
// kind 2: "someone else is wrong"; kind 3: the k-th speaker (1-indexed) says
// "at least k people are wrong".
enum class ParadoxKind : uint8_t { SomeoneWrong = 1, SomeoneElseWrong = 2, AtLeastK = 3 };
const char* paradoxKindName(ParadoxKind k);

enum class ModelClass : uint8_t { Paradoxical, Determinate, Indeterminate };
const char* modelClassName(ModelClass c);

// All truth-value assignments satisfying every speaker's biconditional, in
// lexicographic order with false before true and speaker 1 most significant.
// n must be in 1..24 (2^n enumeration).
std::vector<std::vector<bool>> consistentAssignments(ParadoxKind kind, unsigned n);

ModelClass classifyParadox(ParadoxKind kind, unsigned n);

struct ModelReport {
  ParadoxKind kind;
  unsigned n;
  std::vector<std::vector<bool>> models;
  ModelClass classification;
};

ModelReport modelReport(ParadoxKind kind, unsigned n);

}  // namespace paradox
