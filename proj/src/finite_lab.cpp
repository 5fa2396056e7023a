#include "paradox/finite_lab.hpp"

namespace paradox {

const char* paradoxKindName(ParadoxKind k) {
  switch (k) {
    case ParadoxKind::SomeoneWrong: return "SomeoneWrong";
    case ParadoxKind::SomeoneElseWrong: return "SomeoneElseWrong";
    default: return "AtLeastK";
  }
}

const char* modelClassName(ModelClass c) {
  switch (c) {
    case ModelClass::Paradoxical: return "paradoxical";
    case ModelClass::Determinate: return "determinate";
    default: return "indeterminate";
  }
}

namespace {
bool satisfies(ParadoxKind kind, const std::vector<bool>& v) {
  unsigned n = static_cast<unsigned>(v.size());
  unsigned wrong = 0;
  for (bool b : v)
    if (!b) ++wrong;
  for (unsigned i = 0; i < n; ++i) {
    bool claim;
    switch (kind) {
      case ParadoxKind::SomeoneWrong: claim = wrong > 0; break;
      case ParadoxKind::SomeoneElseWrong: claim = wrong > (v[i] ? 0 : 1); break;
      default: claim = wrong >= i + 1; break;  // speaker i+1 says "≥ i+1 wrong"
    }
    if (v[i] != claim) return false;
  }
  return true;
}
}  // namespace

std::vector<std::vector<bool>> consistentAssignments(ParadoxKind kind, unsigned n) {
  if (n < 1 || n > 24) throw DomainError("speaker count must be between 1 and 24");
  std::vector<std::vector<bool>> models;
  std::vector<bool> v(n);
  for (uint32_t bits = 0; bits < (1u << n); ++bits) {
    for (unsigned i = 0; i < n; ++i) v[i] = (bits >> (n - 1 - i)) & 1;
    if (satisfies(kind, v)) models.push_back(v);
  }
  return models;
}

ModelClass classifyParadox(ParadoxKind kind, unsigned n) {
  size_t count = consistentAssignments(kind, n).size();
  if (count == 0) return ModelClass::Paradoxical;
  if (count == 1) return ModelClass::Determinate;
  return ModelClass::Indeterminate;
}

ModelReport modelReport(ParadoxKind kind, unsigned n) {
  ModelReport r;
  r.kind = kind;
  r.n = n;
  r.models = consistentAssignments(kind, n);
  r.classification = r.models.empty()      ? ModelClass::Paradoxical
                     : r.models.size() == 1 ? ModelClass::Determinate
                                            : ModelClass::Indeterminate;
  return r;
}

}  // namespace paradox
