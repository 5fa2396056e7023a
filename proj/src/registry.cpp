#include "paradox/registry.hpp"

#include "paradox/godel.hpp"
#include "paradox/kernel.hpp"

namespace paradox {

SymId SymbolRegistry::add(DefinedSymbol s) {
  if (byName_.count(s.name)) throw DomainError("symbol '" + s.name + "' already registered");
  SymId id = static_cast<SymId>(syms_.size());
  byName_.emplace(s.name, id);
  syms_.push_back(std::move(s));
  return id;
}

void SymbolRegistry::setExpansion(SymId id, FormulaPtr f) {
  if (id >= syms_.size()) throw DomainError("unknown symbol id");
  syms_[id].expansion = std::move(f);
}

const DefinedSymbol& SymbolRegistry::at(SymId id) const {
  if (id >= syms_.size()) throw DomainError("unknown symbol id");
  return syms_[id];
}

std::optional<SymId> SymbolRegistry::find(const std::string& name) const {
  auto it = byName_.find(name);
  if (it == byName_.end()) return std::nullopt;
  return it->second;
}

SymId SymbolRegistry::require(const std::string& name) const {
  auto id = find(name);
  if (!id) throw DomainError("unknown defined symbol '" + name + "'");
  return *id;
}

std::optional<SymId> SymbolRegistry::fromSymbolCode(uint32_t code) const {
  if (code < 1000 || code - 1000 >= syms_.size()) return std::nullopt;
  return code - 1000;
}

namespace {

Tri triOf(bool b) { return b ? Tri::True : Tri::False; }

// Pairwise distinctness of the coded sequence, computed on (element, repeat)
// runs so that run-compressed codes stay exact: a run longer than one is
// already a duplicate.
Tri hetSeqOracle(const SymbolRegistry&, std::span<const Nat> args, uint64_t) {
  if (!isCode(args[0])) return Tri::False;
  bool dup = false;
  std::vector<Nat> seen;
  forEachElementRun(args[0], [&](const Nat& e, const BigUint& count) {
    if (dup) return;
    if (!(count.fitsU64() && count.toU64() == 1)) {
      dup = true;
      return;
    }
    for (const Nat& s : seen)
      if (s == e) {
        dup = true;
        return;
      }
    if (seen.size() >= 4096) throw TooLargeError("heterosequence check too large");
    seen.push_back(e);
  });
  return triOf(!dup);
}

Tri eleOracle(const SymbolRegistry&, std::span<const Nat> args, uint64_t) {
  const Nat& x = args[0];
  if (!isCode(args[1])) return Tri::False;
  bool hit = false;
  forEachElementRun(args[1], [&](const Nat& e, const BigUint&) {
    if (!hit && e == x) hit = true;
  });
  return triOf(hit);
}

Tri prfOracle(const SymbolRegistry& reg, std::span<const Nat> args, uint64_t) {
  try {
    Proof p = decodeProof(args[0], reg);
    if (p.lines.empty()) return Tri::False;
    if (!checkProof(p).ok) return Tri::False;
    return triOf(godelEncode(conclusion(p), reg) == args[1]);
  } catch (const Error&) {
    return Tri::False;
  }
}

// Semi-decision: a verified proof yields True, anything else is Unknown.
// Never False — failure to find a proof within budget decides nothing.
Tri provOracle(const SymbolRegistry& reg, std::span<const Nat> args, uint64_t budget) {
  FormulaPtr goal;
  try {
    goal = godelDecodeFormula(args[0], reg);
  } catch (const Error&) {
    return Tri::Unknown;
  }
  SearchOutcome out = searchProof(goal, budget, reg);
  return out.proof ? Tri::True : Tri::Unknown;
}

// Bounded-quantifier helpers for the stored expansions; v ≤ t is v < St.
FormulaPtr boundedAllLe(VarIndex v, const TermPtr& bound, FormulaPtr body) {
  return mkForall(v, mkImp(mkLt(mkVar(v), mkSucc(bound)), std::move(body)));
}
FormulaPtr boundedExLe(VarIndex v, const TermPtr& bound, FormulaPtr body) {
  return mkExists(v, mkAnd(mkLt(mkVar(v), mkSucc(bound)), std::move(body)));
}

}  // namespace

const SymbolRegistry& SymbolRegistry::standard() {
  static const SymbolRegistry reg = [] {
    SymbolRegistry r;

    auto fun = [&](const char* name, uint32_t arity, FunOracle f) {
      DefinedSymbol s;
      s.name = name;
      s.kind = SymKind::Function;
      s.arity = arity;
      s.cls = SymClass::Delta0;
      s.fun = std::move(f);
      return r.add(std::move(s));
    };
    auto pred = [&](const char* name, uint32_t arity, SymClass cls, PredOracle p) {
      DefinedSymbol s;
      s.name = name;
      s.kind = SymKind::Predicate;
      s.arity = arity;
      s.cls = cls;
      s.pred = std::move(p);
      return r.add(std::move(s));
    };

    // Registration order fixes the symbol codes (1000, 1001, ...).
    pred("Code", 1, SymClass::Delta0,
         [](const SymbolRegistry&, std::span<const Nat> a, uint64_t) { return triOf(isCode(a[0])); });
    fun("l", 1, [](const SymbolRegistry&, std::span<const Nat> a) { return seqLenOpt(a[0]); });
    fun("Dec", 2, [](const SymbolRegistry&, std::span<const Nat> a) { return seqAtOpt(a[0], a[1]); });
    fun("Neg", 1, [](const SymbolRegistry& rg, std::span<const Nat> a) -> std::optional<Nat> {
      try {
        return metaNeg(a[0], rg);
      } catch (const DomainError&) {
        return std::nullopt;
      }
    });
    fun("Subs", 3, [](const SymbolRegistry& rg, std::span<const Nat> a) -> std::optional<Nat> {
      try {
        return metaSubs(a[0], a[1], a[2], rg);
      } catch (const DomainError&) {
        return std::nullopt;
      } catch (const CaptureError&) {
        return std::nullopt;
      }
    });
    fun("Num", 1, [](const SymbolRegistry&, std::span<const Nat> a) { return numCode(a[0]); });
    SymId hetSeq = pred("HetSeq", 1, SymClass::Delta0, hetSeqOracle);
    SymId ele = pred("Ele", 2, SymClass::Delta0, eleOracle);
    SymId prf = pred("Prf", 2, SymClass::Delta0, prfOracle);
    SymId prov = pred("Prov", 1, SymClass::Sigma1, provOracle);

    SymId lSym = r.require("l");
    SymId decSym = r.require("Dec");
    SymId codeSym = r.require("Code");

    // HetSeq(x) ↔ Code(x) ∧ (∀y≤l(x))(∀z≤l(x))(y≠z → Dec(y,x)≠Dec(z,x)),
    // stored with Dec arguments normalized to (code, index). Formal x = v0;
    // bound variables sit high (v8, v9) so ordinary arguments cannot collide.
    {
      TermPtr x = mkVar(0);
      TermPtr lx = mkFun(lSym, {x});
      auto dec = [&](VarIndex i) { return mkFun(decSym, {x, mkVar(i)}); };
      FormulaPtr body = mkImp(mkNot(mkEq(mkVar(8), mkVar(9))), mkNot(mkEq(dec(8), dec(9))));
      FormulaPtr quant = boundedAllLe(8, lx, boundedAllLe(9, lx, body));
      r.setExpansion(hetSeq, mkAnd(mkPred(codeSym, {x}), quant));
    }
    // Ele(x,y) ↔ Code(y) ∧ (∃u≤l(y))(Dec(u,y)=x), same normalization; formals
    // x = v0, y = v1, bound u = v8.
    {
      TermPtr x = mkVar(0), y = mkVar(1);
      TermPtr ly = mkFun(lSym, {y});
      FormulaPtr body = mkEq(mkFun(decSym, {y, mkVar(8)}), x);
      r.setExpansion(ele, mkAnd(mkPred(codeSym, {y}), boundedExLe(8, ly, body)));
    }
    // Prov(x) ↔ ∃p Prf(p, x); formal x = v0, bound p = v8.
    r.setExpansion(prov, mkExists(8, mkPred(prf, {mkVar(8), mkVar(0)})));
    return r;
  }();
  return reg;
}

DefinedValue evalDefined(const SymbolRegistry& reg, const std::string& name,
                         const std::vector<Nat>& args, uint64_t budget) {
  SymId id = reg.require(name);
  const DefinedSymbol& d = reg.at(id);
  if (args.size() != d.arity)
    throw DomainError("arity mismatch for '" + d.name + "': expected " + std::to_string(d.arity) +
                      ", got " + std::to_string(args.size()));
  if (d.kind == SymKind::Function) {
    std::optional<Nat> v = d.fun(reg, args);
    if (!v) throw DomainError("'" + d.name + "' is undefined on the given arguments");
    return *v;
  }
  return d.pred(reg, args, budget);
}

namespace {
FormulaPtr expandOnce(const FormulaPtr& f, const SymbolRegistry& reg) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt: return f;
    case Formula::Kind::Not: {
      FormulaPtr g = expandOnce(f->f, reg);
      return g.get() == f->f.get() ? f : mkNot(g);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff: {
      FormulaPtr l = expandOnce(f->f, reg), r = expandOnce(f->g, reg);
      if (l.get() == f->f.get() && r.get() == f->g.get()) return f;
      switch (f->kind) {
        case Formula::Kind::And: return mkAnd(l, r);
        case Formula::Kind::Or: return mkOr(l, r);
        case Formula::Kind::Imp: return mkImp(l, r);
        default: return mkIff(l, r);
      }
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      FormulaPtr g = expandOnce(f->f, reg);
      if (g.get() == f->f.get()) return f;
      return f->kind == Formula::Kind::Forall ? mkForall(f->var, g) : mkExists(f->var, g);
    }
    case Formula::Kind::Pred: {
      const DefinedSymbol& d = reg.at(f->sym);
      if (!d.expansion) return f;
      std::vector<std::pair<VarIndex, TermPtr>> subs;
      for (uint32_t i = 0; i < d.arity; ++i) subs.emplace_back(i, f->args[i]);
      return substMulti(d.expansion, subs);
    }
  }
  return f;
}
}  // namespace

FormulaPtr expandDefinition(const FormulaPtr& f, const SymbolRegistry& reg) {
  return expandOnce(f, reg);
}

}  // namespace paradox
