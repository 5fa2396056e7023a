#include "paradox/eval.hpp"

#include "paradox/classify.hpp"

namespace paradox {

namespace {

constexpr uint64_t kMaxBoundedRange = 1u << 24;

Tri triNot(Tri a) {
  if (a == Tri::True) return Tri::False;
  if (a == Tri::False) return Tri::True;
  return Tri::Unknown;
}
Tri triAnd(Tri a, Tri b) { return a < b ? a : b; }  // False < Unknown < True
Tri triOr(Tri a, Tri b) { return a > b ? a : b; }

struct Ev {
  const SymbolRegistry& reg;
  uint64_t budget;
  uint64_t steps = 0;
  Assignment env;

  // nullopt marks a pseudo-term application outside its oracle's domain.
  std::optional<Nat> term(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Zero: return Nat(0);
      case Term::Kind::Var: {
        const Nat* n = env.lookup(t->var);
        if (!n) throw UnassignedVariableError("variable v" + std::to_string(t->var) + " is unassigned", t->var);
        return *n;
      }
      case Term::Kind::Succ: {
        auto a = term(t->a);
        if (!a) return std::nullopt;
        return *a + t->succCount;
      }
      case Term::Kind::Add:
      case Term::Kind::Mul: {
        auto a = term(t->a);
        if (!a) return std::nullopt;
        auto b = term(t->b);
        if (!b) return std::nullopt;
        return t->kind == Term::Kind::Add ? *a + *b : *a * *b;
      }
      case Term::Kind::Fun: {
        const DefinedSymbol& d = reg.at(t->sym);
        Nat args[4];
        size_t n = t->args.size();
        if (n > 4) throw DomainError("pseudo-function arity above 4");
        for (size_t i = 0; i < n; ++i) {
          auto v = term(t->args[i]);
          if (!v) return std::nullopt;
          args[i] = std::move(*v);
        }
        return d.fun(reg, std::span<const Nat>(args, n));
      }
    }
    throw DomainError("unreachable term kind");
  }

  // Atoms swallow pseudo-term partiality: Dec out of range, Neg of a term
  // code and the like denote nothing, so the atom is false relationally.
  Tri formula(const FormulaPtr& f, std::optional<Nat>* witnessOut = nullptr) {
    switch (f->kind) {
      case Formula::Kind::Eq:
      case Formula::Kind::Lt: {
        auto a = term(f->t1);
        if (!a) return Tri::False;
        auto b = term(f->t2);
        if (!b) return Tri::False;
        bool holds = f->kind == Formula::Kind::Eq ? *a == *b : *a < *b;
        return holds ? Tri::True : Tri::False;
      }
      case Formula::Kind::Pred: {
        const DefinedSymbol& d = reg.at(f->sym);
        Nat args[4];
        size_t n = f->args.size();
        if (n > 4) throw DomainError("pseudo-predicate arity above 4");
        for (size_t i = 0; i < n; ++i) {
          auto v = term(f->args[i]);
          if (!v) return Tri::False;
          args[i] = std::move(*v);
        }
        return d.pred(reg, std::span<const Nat>(args, n), budget);
      }
      case Formula::Kind::Not: return triNot(formula(f->f));
      case Formula::Kind::And: {
        Tri a = formula(f->f);
        if (a == Tri::False) return Tri::False;
        return triAnd(a, formula(f->g));
      }
      case Formula::Kind::Or: {
        Tri a = formula(f->f);
        if (a == Tri::True) return Tri::True;
        return triOr(a, formula(f->g));
      }
      case Formula::Kind::Imp: {
        Tri a = formula(f->f);
        if (a == Tri::False) return Tri::True;
        return triOr(triNot(a), formula(f->g));
      }
      case Formula::Kind::Iff: {
        Tri a = formula(f->f);
        Tri b = formula(f->g);
        return triAnd(triOr(triNot(a), b), triOr(triNot(b), a));
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        if (auto shape = asBoundedQuantifier(f)) return bounded(*shape, witnessOut);
        return unbounded(f, witnessOut);
      }
    }
    throw DomainError("unreachable formula kind");
  }

  Tri bounded(const BoundedQuantifier& s, std::optional<Nat>* witnessOut) {
    std::optional<Nat> limit = term(s.bound);
    if (!limit) {
      // The guard atom v < t is false for every v when t denotes nothing, so
      // the quantified formula is decided vacuously.
      return s.universal ? Tri::True : Tri::False;
    }
    if (!limit->fitsU64() || limit->asU64() > kMaxBoundedRange)
      throw TooLargeError("bounded quantifier range too large to enumerate");
    uint64_t n = limit->asU64();
    bool anyUnknown = false;
    for (uint64_t i = 0; i < n; ++i) {
      env.push(s.v, Nat(i));
      Tri r = formula(s.body);
      env.pop();
      if (!s.universal && r == Tri::True) {
        if (witnessOut) *witnessOut = Nat(i);
        return Tri::True;
      }
      if (s.universal && r == Tri::False) return Tri::False;
      if (r == Tri::Unknown) anyUnknown = true;
    }
    if (anyUnknown) return Tri::Unknown;
    return s.universal ? Tri::True : Tri::False;
  }

  Tri unbounded(const FormulaPtr& f, std::optional<Nat>* witnessOut) {
    bool universal = f->kind == Formula::Kind::Forall;
    for (uint64_t i = 0; i <= budget; ++i) {
      ++steps;
      env.push(f->var, Nat(i));
      Tri r = formula(f->f);
      env.pop();
      if (!universal && r == Tri::True) {
        if (witnessOut) *witnessOut = Nat(i);
        return Tri::True;
      }
      if (universal && r == Tri::False) return Tri::False;
    }
    // An unbounded search can witness but never refute (∃), refute but never
    // establish (∀).
    return Tri::Unknown;
  }
};

}  // namespace

Nat evalTerm(const TermPtr& t, const Assignment& a, const SymbolRegistry& reg) {
  Ev ev{reg, 0, 0, a};
  std::optional<Nat> v = ev.term(t);
  if (!v) throw DomainError("pseudo-term is undefined on the given arguments");
  return *v;
}

EvalResult evalFormula(const FormulaPtr& f, const Assignment& a, uint64_t budget,
                       const SymbolRegistry& reg) {
  Ev ev{reg, budget, 0, a};
  EvalResult out;
  std::optional<Nat> witness;
  out.value = ev.formula(f, &witness);
  out.witness = std::move(witness);
  out.steps = ev.steps;
  return out;
}

}  // namespace paradox
