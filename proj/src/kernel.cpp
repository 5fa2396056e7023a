#include "paradox/kernel.hpp"

#include <charconv>

namespace paradox {

namespace {

const TermPtr& slotTerm(const std::vector<SchemaValue>& b, size_t i) {
  if (auto* t = std::get_if<TermPtr>(&b[i])) return *t;
  throw DomainError("schema binding " + std::to_string(i) + " must be a term");
}
const FormulaPtr& slotFormula(const std::vector<SchemaValue>& b, size_t i) {
  if (auto* f = std::get_if<FormulaPtr>(&b[i])) return *f;
  throw DomainError("schema binding " + std::to_string(i) + " must be a formula");
}
VarIndex slotVar(const std::vector<SchemaValue>& b, size_t i) {
  if (auto* v = std::get_if<VarIndex>(&b[i])) return *v;
  throw DomainError("schema binding " + std::to_string(i) + " must be a variable");
}

FormulaPtr instPropK(const std::vector<SchemaValue>& b) {
  const auto &phi = slotFormula(b, 0), &psi = slotFormula(b, 1);
  return mkImp(phi, mkImp(psi, phi));
}

FormulaPtr instPropS(const std::vector<SchemaValue>& b) {
  const auto &phi = slotFormula(b, 0), &psi = slotFormula(b, 1), &chi = slotFormula(b, 2);
  return mkImp(mkImp(phi, mkImp(psi, chi)), mkImp(mkImp(phi, psi), mkImp(phi, chi)));
}

FormulaPtr instPropCp(const std::vector<SchemaValue>& b) {
  const auto &phi = slotFormula(b, 0), &psi = slotFormula(b, 1);
  return mkImp(mkImp(mkNot(phi), mkNot(psi)), mkImp(psi, phi));
}

FormulaPtr instForallInst(const std::vector<SchemaValue>& b) {
  VarIndex v = slotVar(b, 0);
  const auto& phi = slotFormula(b, 1);
  const auto& t = slotTerm(b, 2);
  return mkImp(mkForall(v, phi), substitute(phi, v, t));
}

FormulaPtr instForallDist(const std::vector<SchemaValue>& b) {
  VarIndex v = slotVar(b, 0);
  const auto &phi = slotFormula(b, 1), &psi = slotFormula(b, 2);
  return mkImp(mkForall(v, mkImp(phi, psi)), mkImp(mkForall(v, phi), mkForall(v, psi)));
}

FormulaPtr instForallVac(const std::vector<SchemaValue>& b) {
  VarIndex v = slotVar(b, 0);
  const auto& phi = slotFormula(b, 1);
  if (occursFree(phi, v))
    throw DomainError("vacuous quantification requires v" + std::to_string(v) + " not free");
  return mkImp(phi, mkForall(v, phi));
}

FormulaPtr instEqRefl(const std::vector<SchemaValue>& b) {
  const auto& t = slotTerm(b, 0);
  return mkEq(t, t);
}

FormulaPtr instEqSubstTerm(const std::vector<SchemaValue>& b) {
  const auto &s = slotTerm(b, 0), &t = slotTerm(b, 1);
  VarIndex v = slotVar(b, 2);
  const auto& u = slotTerm(b, 3);
  return mkImp(mkEq(s, t), mkEq(substTerm(u, v, s), substTerm(u, v, t)));
}

FormulaPtr instEqSubstForm(const std::vector<SchemaValue>& b) {
  const auto &s = slotTerm(b, 0), &t = slotTerm(b, 1);
  VarIndex v = slotVar(b, 2);
  const auto& phi = slotFormula(b, 3);
  return mkImp(mkEq(s, t), mkImp(substitute(phi, v, s), substitute(phi, v, t)));
}

FormulaPtr instPaSuccNonzero(const std::vector<SchemaValue>& b) {
  return mkNot(mkEq(mkSucc(slotTerm(b, 0)), mkZero()));
}

FormulaPtr instPaSuccInj(const std::vector<SchemaValue>& b) {
  const auto &s = slotTerm(b, 0), &t = slotTerm(b, 1);
  return mkImp(mkEq(mkSucc(s), mkSucc(t)), mkEq(s, t));
}

FormulaPtr instPaAddZero(const std::vector<SchemaValue>& b) {
  const auto& t = slotTerm(b, 0);
  return mkEq(mkAdd(t, mkZero()), t);
}

FormulaPtr instPaAddSucc(const std::vector<SchemaValue>& b) {
  const auto &s = slotTerm(b, 0), &t = slotTerm(b, 1);
  return mkEq(mkAdd(s, mkSucc(t)), mkSucc(mkAdd(s, t)));
}

FormulaPtr instPaMulZero(const std::vector<SchemaValue>& b) {
  const auto& t = slotTerm(b, 0);
  return mkEq(mkMul(t, mkZero()), mkZero());
}

FormulaPtr instPaMulSucc(const std::vector<SchemaValue>& b) {
  const auto &s = slotTerm(b, 0), &t = slotTerm(b, 1);
  return mkEq(mkMul(s, mkSucc(t)), mkAdd(mkMul(s, t), s));
}

FormulaPtr instPaLess(const std::vector<SchemaValue>& b) {
  const auto &s = slotTerm(b, 0), &t = slotTerm(b, 1);
  VarIndex z = slotVar(b, 2);
  if (occursFree(s, z) || occursFree(t, z))
    throw DomainError("order axiom witness v" + std::to_string(z) + " occurs in the bounds");
  return mkIff(mkLt(s, t), mkExists(z, mkEq(mkAdd(s, mkSucc(mkVar(z))), t)));
}

FormulaPtr instPaInduction(const std::vector<SchemaValue>& b) {
  VarIndex v = slotVar(b, 0);
  const auto& phi = slotFormula(b, 1);
  FormulaPtr base = substitute(phi, v, mkZero());
  FormulaPtr step = mkForall(v, mkImp(phi, substitute(phi, v, mkSucc(mkVar(v)))));
  return mkImp(base, mkImp(step, mkForall(v, phi)));
}

}  // namespace

const std::vector<AxiomSchema>& axiomSchemas() {
  static const std::vector<AxiomSchema> schemas = {
      {"prop-k", {{"phi", SlotType::Formula}, {"psi", SlotType::Formula}}, instPropK},
      {"prop-s",
       {{"phi", SlotType::Formula}, {"psi", SlotType::Formula}, {"chi", SlotType::Formula}},
       instPropS},
      {"prop-cp", {{"phi", SlotType::Formula}, {"psi", SlotType::Formula}}, instPropCp},
      {"forall-inst",
       {{"v", SlotType::Var}, {"phi", SlotType::Formula}, {"t", SlotType::Term}},
       instForallInst},
      {"forall-dist",
       {{"v", SlotType::Var}, {"phi", SlotType::Formula}, {"psi", SlotType::Formula}},
       instForallDist},
      {"forall-vac", {{"v", SlotType::Var}, {"phi", SlotType::Formula}}, instForallVac},
      {"eq-refl", {{"t", SlotType::Term}}, instEqRefl},
      {"eq-subst-term",
       {{"s", SlotType::Term}, {"t", SlotType::Term}, {"v", SlotType::Var}, {"u", SlotType::Term}},
       instEqSubstTerm},
      {"eq-subst-form",
       {{"s", SlotType::Term}, {"t", SlotType::Term}, {"v", SlotType::Var}, {"phi", SlotType::Formula}},
       instEqSubstForm},
      {"pa-succ-nonzero", {{"t", SlotType::Term}}, instPaSuccNonzero},
      {"pa-succ-inj", {{"s", SlotType::Term}, {"t", SlotType::Term}}, instPaSuccInj},
      {"pa-add-zero", {{"t", SlotType::Term}}, instPaAddZero},
      {"pa-add-succ", {{"s", SlotType::Term}, {"t", SlotType::Term}}, instPaAddSucc},
      {"pa-mul-zero", {{"t", SlotType::Term}}, instPaMulZero},
      {"pa-mul-succ", {{"s", SlotType::Term}, {"t", SlotType::Term}}, instPaMulSucc},
      {"pa-less",
       {{"s", SlotType::Term}, {"t", SlotType::Term}, {"z", SlotType::Var}},
       instPaLess},
      {"pa-induction", {{"v", SlotType::Var}, {"phi", SlotType::Formula}}, instPaInduction},
  };
  return schemas;
}

std::optional<uint32_t> schemaIndex(const std::string& id) {
  const auto& schemas = axiomSchemas();
  for (uint32_t i = 0; i < schemas.size(); ++i)
    if (id == schemas[i].id) return i;
  return std::nullopt;
}

FormulaPtr instantiateSchema(uint32_t schema, const std::vector<SchemaValue>& bindings) {
  const auto& schemas = axiomSchemas();
  if (schema >= schemas.size()) throw DomainError("unknown schema index " + std::to_string(schema));
  const AxiomSchema& s = schemas[schema];
  if (bindings.size() != s.slots.size())
    throw DomainError(std::string("schema ") + s.id + " takes " + std::to_string(s.slots.size()) +
                      " bindings, got " + std::to_string(bindings.size()));
  for (size_t i = 0; i < bindings.size(); ++i) {
    SlotType want = s.slots[i].type;
    bool ok = (want == SlotType::Term && std::holds_alternative<TermPtr>(bindings[i])) ||
              (want == SlotType::Formula && std::holds_alternative<FormulaPtr>(bindings[i])) ||
              (want == SlotType::Var && std::holds_alternative<VarIndex>(bindings[i]));
    if (!ok)
      throw DomainError(std::string("schema ") + s.id + " binding '" + s.slots[i].name +
                        "' has the wrong type");
  }
  return s.instantiate(bindings);
}

FormulaPtr conclusion(const Proof& p) {
  if (p.lines.empty()) throw DomainError("empty proof has no conclusion");
  return p.lines.back().formula;
}

CheckResult checkProof(const Proof& p) {
  if (p.lines.empty()) return {false, 0, "empty proof"};
  for (size_t idx = 0; idx < p.lines.size(); ++idx) {
    const ProofLine& line = p.lines[idx];
    const Justification& j = line.just;
    switch (j.k) {
      case Justification::K::Axiom: {
        FormulaPtr inst;
        try {
          inst = instantiateSchema(j.schema, j.bindings);
        } catch (const Error& e) {
          return {false, idx, e.what()};
        }
        if (!equal(inst, line.formula))
          return {false, idx, "formula is not the cited schema instance"};
        break;
      }
      case Justification::K::MP: {
        if (j.i >= idx) return {false, idx, "mp cites line " + std::to_string(j.i) + " which is not earlier"};
        if (j.j >= idx) return {false, idx, "mp cites line " + std::to_string(j.j) + " which is not earlier"};
        const FormulaPtr& imp = p.lines[j.i].formula;
        if (imp->kind != Formula::Kind::Imp)
          return {false, idx, "mp major premise is not an implication"};
        if (!equal(imp->f, p.lines[j.j].formula))
          return {false, idx, "mp minor premise does not match the antecedent"};
        if (!equal(imp->g, line.formula))
          return {false, idx, "formula does not match the consequent"};
        break;
      }
      case Justification::K::Gen: {
        if (j.i >= idx) return {false, idx, "gen cites line " + std::to_string(j.i) + " which is not earlier"};
        if (line.formula->kind != Formula::Kind::Forall || line.formula->var != j.v)
          return {false, idx, "gen must conclude a universal over the cited variable"};
        if (!equal(line.formula->f, p.lines[j.i].formula))
          return {false, idx, "gen body does not match the premise"};
        break;
      }
    }
  }
  return {true, 0, ""};
}

// ---------------------------------------------------------------------------
// Arithmetization

Nat encodeProof(const Proof& p, const SymbolRegistry& reg) {
  std::vector<Nat> elems;
  for (const ProofLine& line : p.lines) {
    const Justification& j = line.just;
    switch (j.k) {
      case Justification::K::Axiom: {
        elems.push_back(Nat(1));
        elems.push_back(Nat(j.schema));
        for (const SchemaValue& v : j.bindings) {
          if (auto* t = std::get_if<TermPtr>(&v)) elems.push_back(godelEncode(*t, reg));
          else if (auto* f = std::get_if<FormulaPtr>(&v)) elems.push_back(godelEncode(*f, reg));
          else elems.push_back(Nat(std::get<VarIndex>(v)));
        }
        break;
      }
      case Justification::K::MP:
        elems.push_back(Nat(2));
        elems.push_back(Nat(static_cast<uint64_t>(j.i)));
        elems.push_back(Nat(static_cast<uint64_t>(j.j)));
        break;
      case Justification::K::Gen:
        elems.push_back(Nat(3));
        elems.push_back(Nat(static_cast<uint64_t>(j.i)));
        elems.push_back(Nat(j.v));
        break;
    }
    elems.push_back(godelEncode(line.formula, reg));
  }
  return seqEncode(elems);
}

namespace {
[[noreturn]] void badProofCode(const std::string& why) {
  throw DomainError("not a proof code: " + why);
}

uint64_t smallElem(const std::vector<Nat>& e, size_t i, const char* what) {
  if (i >= e.size()) badProofCode(std::string("truncated at ") + what);
  if (!e[i].fitsU64()) badProofCode(std::string("oversized ") + what);
  return e[i].asU64();
}
}  // namespace

Proof decodeProof(const Nat& code, const SymbolRegistry& reg) {
  std::vector<Nat> elems;
  try {
    elems = seqDecode(code, 200000);
  } catch (const Error& e) {
    badProofCode(e.what());
  }
  Proof p;
  size_t k = 0;
  while (k < elems.size()) {
    Justification j;
    uint64_t tag = smallElem(elems, k++, "line tag");
    try {
      switch (tag) {
        case 1: {
          j.k = Justification::K::Axiom;
          uint64_t schema = smallElem(elems, k++, "schema index");
          if (schema >= axiomSchemas().size()) badProofCode("unknown schema index");
          j.schema = static_cast<uint32_t>(schema);
          for (const SchemaSlot& slot : axiomSchemas()[j.schema].slots) {
            if (k >= elems.size()) badProofCode("truncated bindings");
            switch (slot.type) {
              case SlotType::Var: {
                uint64_t v = smallElem(elems, k, "variable binding");
                if (v > kMaxVarIndex) badProofCode("variable binding out of range");
                j.bindings.emplace_back(static_cast<VarIndex>(v));
                break;
              }
              case SlotType::Term: j.bindings.emplace_back(godelDecodeTerm(elems[k], reg)); break;
              case SlotType::Formula: j.bindings.emplace_back(godelDecodeFormula(elems[k], reg)); break;
            }
            ++k;
          }
          break;
        }
        case 2:
          j.k = Justification::K::MP;
          j.i = smallElem(elems, k++, "mp index");
          j.j = smallElem(elems, k++, "mp index");
          break;
        case 3: {
          j.k = Justification::K::Gen;
          j.i = smallElem(elems, k++, "gen index");
          uint64_t v = smallElem(elems, k++, "gen variable");
          if (v > kMaxVarIndex) badProofCode("gen variable out of range");
          j.v = static_cast<VarIndex>(v);
          break;
        }
        default: badProofCode("unknown line tag");
      }
      if (k >= elems.size()) badProofCode("missing line formula");
      FormulaPtr f = godelDecodeFormula(elems[k++], reg);
      p.lines.push_back(ProofLine{std::move(f), std::move(j)});
    } catch (const DomainError&) {
      throw;
    } catch (const Error& e) {
      badProofCode(e.what());
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Text form

namespace {
std::string schemaValueText(const SchemaValue& v, const SymbolRegistry& reg) {
  if (auto* t = std::get_if<TermPtr>(&v)) return print(*t, reg);
  if (auto* f = std::get_if<FormulaPtr>(&v)) return print(*f, reg);
  return "v" + std::to_string(std::get<VarIndex>(v));
}

uint64_t parseIndex(std::string_view s, const char* what) {
  uint64_t out = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || p != s.data() + s.size())
    throw DomainError(std::string("malformed ") + what + " '" + std::string(s) + "'");
  return out;
}

VarIndex parseVarText(std::string_view s) {
  if (s.size() < 2 || s[0] != 'v') throw DomainError("expected a variable, got '" + std::string(s) + "'");
  return static_cast<VarIndex>(parseIndex(s.substr(1), "variable index"));
}

std::string_view trimView(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}
}  // namespace

std::string writeProofText(const Proof& p, const SymbolRegistry& reg) {
  std::string out;
  for (size_t idx = 0; idx < p.lines.size(); ++idx) {
    const ProofLine& line = p.lines[idx];
    out += std::to_string(idx);
    out += ". ";
    out += print(line.formula, reg);
    out += " ; ";
    const Justification& j = line.just;
    switch (j.k) {
      case Justification::K::Axiom: {
        out += "ax ";
        out += axiomSchemas()[j.schema].id;
        for (size_t b = 0; b < j.bindings.size(); ++b) {
          out += b == 0 ? " " : " | ";
          out += axiomSchemas()[j.schema].slots[b].name;
          out += '=';
          out += schemaValueText(j.bindings[b], reg);
        }
        break;
      }
      case Justification::K::MP:
        out += "mp " + std::to_string(j.i) + " " + std::to_string(j.j);
        break;
      case Justification::K::Gen:
        out += "gen " + std::to_string(j.i) + " v" + std::to_string(j.v);
        break;
    }
    out += '\n';
  }
  return out;
}

Proof parseProofText(std::string_view text, const SymbolRegistry& reg) {
  Proof p;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    std::string_view line = trimView(raw);
    if (line.empty() || line.front() == '#') continue;

    size_t dot = line.find('.');
    if (dot == std::string_view::npos) throw DomainError("proof line missing index: '" + std::string(line) + "'");
    uint64_t idx = parseIndex(trimView(line.substr(0, dot)), "line index");
    if (idx != p.lines.size())
      throw DomainError("line numbers must run 0,1,2,...; got " + std::to_string(idx));
    line = line.substr(dot + 1);

    size_t sep = line.find(" ; ");
    if (sep == std::string_view::npos) throw DomainError("proof line missing ' ; ' separator");
    FormulaPtr formula = parseFormula(trimView(line.substr(0, sep)), reg);
    std::string_view just = trimView(line.substr(sep + 3));

    Justification j;
    size_t sp = just.find(' ');
    std::string_view head = sp == std::string_view::npos ? just : just.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view() : trimView(just.substr(sp + 1));
    if (head == "ax") {
      j.k = Justification::K::Axiom;
      size_t idSp = rest.find(' ');
      std::string id(idSp == std::string_view::npos ? rest : rest.substr(0, idSp));
      auto schema = schemaIndex(id);
      if (!schema) throw DomainError("unknown axiom schema '" + id + "'");
      j.schema = *schema;
      std::string_view bindText = idSp == std::string_view::npos ? std::string_view() : trimView(rest.substr(idSp + 1));
      const auto& slots = axiomSchemas()[j.schema].slots;
      size_t slot = 0;
      while (!bindText.empty()) {
        size_t bar = bindText.find(" | ");
        std::string_view piece = trimView(bar == std::string_view::npos ? bindText : bindText.substr(0, bar));
        bindText = bar == std::string_view::npos ? std::string_view() : trimView(bindText.substr(bar + 3));
        size_t eq = piece.find('=');
        if (eq == std::string_view::npos) throw DomainError("malformed binding '" + std::string(piece) + "'");
        std::string_view name = trimView(piece.substr(0, eq));
        std::string_view value = trimView(piece.substr(eq + 1));
        if (slot >= slots.size()) throw DomainError("too many bindings for schema " + id);
        if (name != slots[slot].name)
          throw DomainError("expected binding '" + std::string(slots[slot].name) + "', got '" +
                            std::string(name) + "'");
        switch (slots[slot].type) {
          case SlotType::Var: j.bindings.emplace_back(parseVarText(value)); break;
          case SlotType::Term: j.bindings.emplace_back(parseTerm(value, reg)); break;
          case SlotType::Formula: j.bindings.emplace_back(parseFormula(value, reg)); break;
        }
        ++slot;
      }
      if (slot != slots.size())
        throw DomainError("schema " + id + " needs " + std::to_string(slots.size()) + " bindings");
    } else if (head == "mp") {
      j.k = Justification::K::MP;
      size_t mid = rest.find(' ');
      if (mid == std::string_view::npos) throw DomainError("mp needs two line indices");
      j.i = parseIndex(trimView(rest.substr(0, mid)), "mp index");
      j.j = parseIndex(trimView(rest.substr(mid + 1)), "mp index");
    } else if (head == "gen") {
      j.k = Justification::K::Gen;
      size_t mid = rest.find(' ');
      if (mid == std::string_view::npos) throw DomainError("gen needs a line index and a variable");
      j.i = parseIndex(trimView(rest.substr(0, mid)), "gen index");
      j.v = parseVarText(trimView(rest.substr(mid + 1)));
    } else {
      throw DomainError("unknown justification '" + std::string(head) + "'");
    }
    p.lines.push_back(ProofLine{std::move(formula), std::move(j)});
  }
  return p;
}

}  // namespace paradox
