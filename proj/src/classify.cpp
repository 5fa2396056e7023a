#include "paradox/classify.hpp"

namespace paradox {

std::optional<BoundedQuantifier> asBoundedQuantifier(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Exists && f->f->kind == Formula::Kind::And) {
    const FormulaPtr& guard = f->f->f;
    if (guard->kind == Formula::Kind::Lt && guard->t1->kind == Term::Kind::Var &&
        guard->t1->var == f->var && !occursFree(guard->t2, f->var))
      return BoundedQuantifier{false, f->var, guard->t2, f->f->g};
  }
  if (f->kind == Formula::Kind::Forall && f->f->kind == Formula::Kind::Imp) {
    const FormulaPtr& guard = f->f->f;
    if (guard->kind == Formula::Kind::Lt && guard->t1->kind == Term::Kind::Var &&
        guard->t1->var == f->var && !occursFree(guard->t2, f->var))
      return BoundedQuantifier{true, f->var, guard->t2, f->f->g};
  }
  return std::nullopt;
}

bool classifyDelta0(const FormulaPtr& f, const SymbolRegistry& reg) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt: return true;
    case Formula::Kind::Pred: return reg.at(f->sym).cls == SymClass::Delta0;
    case Formula::Kind::Not: return classifyDelta0(f->f, reg);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff: return classifyDelta0(f->f, reg) && classifyDelta0(f->g, reg);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto b = asBoundedQuantifier(f);
      return b && classifyDelta0(b->body, reg);
    }
  }
  return false;
}

bool classifySigma1(const FormulaPtr& f, const SymbolRegistry& reg) {
  if (classifyDelta0(f, reg)) return true;
  if (f->kind == Formula::Kind::Pred) {
    SymClass c = reg.at(f->sym).cls;
    return c == SymClass::Delta0 || c == SymClass::Sigma1;
  }
  if (f->kind == Formula::Kind::Exists) return classifySigma1(f->f, reg);
  return false;
}

}  // namespace paradox
