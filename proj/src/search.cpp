#include <unordered_map>
#include <unordered_set>

#include "paradox/kernel.hpp"

namespace paradox {

namespace {

// Peels one successor off a Succ term.
TermPtr peelSucc(const TermPtr& s) {
  const Nat& c = s->succCount;
  if (c.fitsU64()) {
    uint64_t u = c.asU64();
    return u == 1 ? s->a : mkSuccN(Nat(u - 1), s->a);
  }
  BigUint b = c.toBigUint();
  b -= BigUint(1);
  return mkSuccN(Nat(b), s->a);
}

bool isSucc(const TermPtr& t) { return t->kind == Term::Kind::Succ; }
bool isSuccOne(const TermPtr& t) {
  return isSucc(t) && t->succCount.fitsU64() && t->succCount.asU64() == 1;
}

// Finds t with phi[t/v] == rhs by walking both in parallel; positions where
// phi has a free occurrence of v must all map to the same subterm of rhs.
struct AntiSubst {
  VarIndex v;
  TermPtr found;

  bool terms(const TermPtr& pat, const TermPtr& rhs, bool vBound) {
    if (!vBound && pat->kind == Term::Kind::Var && pat->var == v) {
      if (!found) {
        found = rhs;
        return true;
      }
      return equal(found, rhs);
    }
    if (pat->kind == Term::Kind::Succ) {
      // S^c(inner): rhs must carry at least c successors; the spill belongs
      // to the replacement when inner is the variable slot.
      if (rhs->kind != Term::Kind::Succ) return false;
      if (!vBound && pat->a->kind == Term::Kind::Var && pat->a->var == v) {
        if (pat->succCount > rhs->succCount) return false;
        TermPtr repl = rhs;
        if (pat->succCount == rhs->succCount) {
          repl = rhs->a;
        } else {
          BigUint diff = rhs->succCount.toBigUint();
          diff -= pat->succCount.toBigUint();
          repl = mkSuccN(Nat(diff), rhs->a);
        }
        if (!found) {
          found = repl;
          return true;
        }
        return equal(found, repl);
      }
      return pat->succCount == rhs->succCount && terms(pat->a, rhs->a, vBound);
    }
    if (pat->kind != rhs->kind) return false;
    switch (pat->kind) {
      case Term::Kind::Zero: return true;
      case Term::Kind::Var: return pat->var == rhs->var;
      case Term::Kind::Add:
      case Term::Kind::Mul:
        return terms(pat->a, rhs->a, vBound) && terms(pat->b, rhs->b, vBound);
      case Term::Kind::Fun: {
        if (pat->sym != rhs->sym || pat->args.size() != rhs->args.size()) return false;
        for (size_t i = 0; i < pat->args.size(); ++i)
          if (!terms(pat->args[i], rhs->args[i], vBound)) return false;
        return true;
      }
      default: return false;
    }
  }

  bool formulas(const FormulaPtr& pat, const FormulaPtr& rhs, bool vBound) {
    if (pat->kind != rhs->kind) return false;
    switch (pat->kind) {
      case Formula::Kind::Eq:
      case Formula::Kind::Lt:
        return terms(pat->t1, rhs->t1, vBound) && terms(pat->t2, rhs->t2, vBound);
      case Formula::Kind::Not: return formulas(pat->f, rhs->f, vBound);
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Imp:
      case Formula::Kind::Iff:
        return formulas(pat->f, rhs->f, vBound) && formulas(pat->g, rhs->g, vBound);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        if (pat->var != rhs->var) return false;
        return formulas(pat->f, rhs->f, vBound || pat->var == v);
      case Formula::Kind::Pred: {
        if (pat->sym != rhs->sym || pat->args.size() != rhs->args.size()) return false;
        for (size_t i = 0; i < pat->args.size(); ++i)
          if (!terms(pat->args[i], rhs->args[i], vBound)) return false;
        return true;
      }
    }
    return false;
  }
};

std::optional<Justification> axiom(const char* id, std::vector<SchemaValue> bindings) {
  Justification j;
  j.k = Justification::K::Axiom;
  j.schema = *schemaIndex(id);
  j.bindings = std::move(bindings);
  return j;
}

// Recognizes goals that are single axiom-schema instances and recovers the
// bindings. eq-subst-* are deliberately absent: their bindings are not
// recoverable from the instance alone.
std::optional<Justification> matchAxiom(const FormulaPtr& f) {
  using FK = Formula::Kind;
  if (f->kind == FK::Eq && equal(f->t1, f->t2)) return axiom("eq-refl", {f->t1});
  if (f->kind == FK::Not && f->f->kind == FK::Eq) {
    const FormulaPtr& eq = f->f;
    if (isSucc(eq->t1) && eq->t2->kind == Term::Kind::Zero)
      return axiom("pa-succ-nonzero", {peelSucc(eq->t1)});
  }
  if (f->kind == FK::Eq) {
    const TermPtr &l = f->t1, &r = f->t2;
    if (l->kind == Term::Kind::Add && l->b->kind == Term::Kind::Zero && equal(l->a, r))
      return axiom("pa-add-zero", {r});
    if (l->kind == Term::Kind::Add && isSucc(l->b) && isSuccOne(r) && r->a->kind == Term::Kind::Add &&
        equal(l->a, r->a->a) && equal(peelSucc(l->b), r->a->b))
      return axiom("pa-add-succ", {l->a, peelSucc(l->b)});
    if (l->kind == Term::Kind::Mul && l->b->kind == Term::Kind::Zero && r->kind == Term::Kind::Zero)
      return axiom("pa-mul-zero", {l->a});
    if (l->kind == Term::Kind::Mul && isSucc(l->b) && r->kind == Term::Kind::Add &&
        r->a->kind == Term::Kind::Mul && equal(l->a, r->a->a) && equal(peelSucc(l->b), r->a->b) &&
        equal(l->a, r->b))
      return axiom("pa-mul-succ", {l->a, peelSucc(l->b)});
  }
  if (f->kind == FK::Imp) {
    const FormulaPtr &a = f->f, &b = f->g;
    // prop-k: φ → (ψ → φ)
    if (b->kind == FK::Imp && equal(a, b->g)) return axiom("prop-k", {a, b->f});
    // prop-s
    if (a->kind == FK::Imp && a->g->kind == FK::Imp && b->kind == FK::Imp &&
        b->f->kind == FK::Imp && b->g->kind == FK::Imp) {
      const FormulaPtr &phi = a->f, &psi = a->g->f, &chi = a->g->g;
      if (equal(b->f->f, phi) && equal(b->f->g, psi) && equal(b->g->f, phi) && equal(b->g->g, chi))
        return axiom("prop-s", {phi, psi, chi});
    }
    // prop-cp: (¬φ → ¬ψ) → (ψ → φ)
    if (a->kind == FK::Imp && a->f->kind == FK::Not && a->g->kind == FK::Not && b->kind == FK::Imp &&
        equal(a->f->f, b->g) && equal(a->g->f, b->f))
      return axiom("prop-cp", {a->f->f, a->g->f});
    // pa-succ-inj: (Ss = St) → (s = t)
    if (a->kind == FK::Eq && b->kind == FK::Eq && isSucc(a->t1) && isSucc(a->t2) &&
        equal(peelSucc(a->t1), b->t1) && equal(peelSucc(a->t2), b->t2))
      return axiom("pa-succ-inj", {b->t1, b->t2});
    if (a->kind == FK::Forall) {
      // forall-dist: ∀v(φ→ψ) → (∀vφ → ∀vψ)
      if (a->f->kind == FK::Imp && b->kind == FK::Imp && b->f->kind == FK::Forall &&
          b->g->kind == FK::Forall && b->f->var == a->var && b->g->var == a->var &&
          equal(a->f->f, b->f->f) && equal(a->f->g, b->g->f))
        return axiom("forall-dist", {a->var, a->f->f, a->f->g});
      // forall-inst: ∀vφ → φ[t/v]
      AntiSubst as{a->var, nullptr};
      if (as.formulas(a->f, b, false)) {
        TermPtr t = as.found ? as.found : mkZero();
        try {
          if (equal(substitute(a->f, a->var, t), b)) return axiom("forall-inst", {a->var, a->f, t});
        } catch (const CaptureError&) {
        }
      }
    }
    // forall-vac: φ → ∀vφ with v not free in φ
    if (b->kind == FK::Forall && equal(a, b->f) && !occursFree(a, b->var))
      return axiom("forall-vac", {b->var, a});
    // pa-induction: base → (∀v(φ → φ[Sv/v]) → ∀vφ)
    if (b->kind == FK::Imp && b->f->kind == FK::Forall && b->f->f->kind == FK::Imp &&
        b->g->kind == FK::Forall && b->f->var == b->g->var) {
      VarIndex v = b->g->var;
      const FormulaPtr& phi = b->g->f;
      if (equal(b->f->f->f, phi) && equal(b->f->f->g, substitute(phi, v, mkSucc(mkVar(v)))) &&
          equal(a, substitute(phi, v, mkZero())))
        return axiom("pa-induction", {v, phi});
    }
  }
  if (f->kind == FK::Iff && f->f->kind == FK::Lt && f->g->kind == FK::Exists) {
    const FormulaPtr& ex = f->g;
    VarIndex z = ex->var;
    if (ex->f->kind == FK::Eq && ex->f->t1->kind == Term::Kind::Add &&
        isSuccOne(ex->f->t1->b) && ex->f->t1->b->a->kind == Term::Kind::Var &&
        ex->f->t1->b->a->var == z && equal(ex->f->t1->a, f->f->t1) && equal(ex->f->t2, f->f->t2) &&
        !occursFree(f->f->t1, z) && !occursFree(f->f->t2, z))
      return axiom("pa-less", {f->f->t1, f->f->t2, z});
  }
  return std::nullopt;
}

void collectSubterms(const TermPtr& t, std::vector<TermPtr>& out, size_t cap);
void collectTermsInFormula(const FormulaPtr& f, std::vector<TermPtr>& out, size_t cap);

void pushTerm(const TermPtr& t, std::vector<TermPtr>& out, size_t cap) {
  if (out.size() >= cap) return;
  for (const TermPtr& u : out)
    if (equal(u, t)) return;
  out.push_back(t);
}

void collectSubterms(const TermPtr& t, std::vector<TermPtr>& out, size_t cap) {
  pushTerm(t, out, cap);
  switch (t->kind) {
    case Term::Kind::Succ: collectSubterms(t->a, out, cap); break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collectSubterms(t->a, out, cap);
      collectSubterms(t->b, out, cap);
      break;
    case Term::Kind::Fun:
      for (const TermPtr& u : t->args) collectSubterms(u, out, cap);
      break;
    default: break;
  }
}

void collectTermsInFormula(const FormulaPtr& f, std::vector<TermPtr>& out, size_t cap) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      collectSubterms(f->t1, out, cap);
      collectSubterms(f->t2, out, cap);
      break;
    case Formula::Kind::Not: collectTermsInFormula(f->f, out, cap); break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff:
      collectTermsInFormula(f->f, out, cap);
      collectTermsInFormula(f->g, out, cap);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: collectTermsInFormula(f->f, out, cap); break;
    case Formula::Kind::Pred:
      for (const TermPtr& u : f->args) collectSubterms(u, out, cap);
      break;
  }
}

void collectSubformulas(const FormulaPtr& f, std::vector<FormulaPtr>& out, size_t cap) {
  if (out.size() >= cap) return;
  bool seen = false;
  for (const FormulaPtr& g : out)
    if (equal(g, f)) {
      seen = true;
      break;
    }
  if (!seen) out.push_back(f);
  switch (f->kind) {
    case Formula::Kind::Not: collectSubformulas(f->f, out, cap); break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff:
      collectSubformulas(f->f, out, cap);
      collectSubformulas(f->g, out, cap);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: collectSubformulas(f->f, out, cap); break;
    default: break;
  }
}

struct Searcher {
  const SymbolRegistry& reg;
  uint64_t budget;
  uint64_t generated = 0;
  std::vector<ProofLine> lines;
  std::unordered_map<std::string, size_t> index;

  bool exhausted() const { return generated >= budget; }

  // Returns the line index holding `f`, adding it if new; nullopt on budget
  // exhaustion.
  std::optional<size_t> add(const FormulaPtr& f, Justification j) {
    std::string key = print(f, reg);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (exhausted()) return std::nullopt;
    ++generated;
    lines.push_back(ProofLine{f, std::move(j)});
    index.emplace(std::move(key), lines.size() - 1);
    return lines.size() - 1;
  }

  std::optional<size_t> lookup(const FormulaPtr& f) const {
    auto it = index.find(print(f, reg));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::optional<size_t> prove(const FormulaPtr& goal) {
    if (auto hit = lookup(goal)) return hit;
    if (auto j = matchAxiom(goal)) return add(goal, std::move(*j));
    if (goal->kind == Formula::Kind::Forall) {
      if (auto body = prove(goal->f)) {
        Justification j;
        j.k = Justification::K::Gen;
        j.i = *body;
        j.v = goal->var;
        return add(goal, std::move(j));
      }
    }
    return forwardClosure(goal);
  }

  std::optional<size_t> forwardClosure(const FormulaPtr& goal) {
    std::vector<TermPtr> terms;
    pushTerm(mkZero(), terms, 16);
    pushTerm(mkSucc(mkZero()), terms, 16);
    pushTerm(mkSucc(mkSucc(mkZero())), terms, 16);
    collectTermsInFormula(goal, terms, 16);
    std::vector<FormulaPtr> pool;
    collectSubformulas(goal, pool, 32);

    // Single-term axiom seeds.
    for (const TermPtr& t : terms) {
      if (exhausted()) return std::nullopt;
      add(mkEq(t, t), *axiom("eq-refl", {t}));
      add(mkNot(mkEq(mkSucc(t), mkZero())), *axiom("pa-succ-nonzero", {t}));
      add(mkEq(mkAdd(t, mkZero()), t), *axiom("pa-add-zero", {t}));
      add(mkEq(mkMul(t, mkZero()), mkZero()), *axiom("pa-mul-zero", {t}));
    }
    // Universal instantiation of pool universals over the term pool.
    for (const FormulaPtr& f : pool) {
      if (f->kind != Formula::Kind::Forall) continue;
      for (const TermPtr& t : terms) {
        if (exhausted()) return std::nullopt;
        try {
          FormulaPtr inst = substitute(f->f, f->var, t);
          add(mkImp(f, inst), *axiom("forall-inst", {f->var, f->f, t}));
        } catch (const CaptureError&) {
        }
      }
    }
    // Propositional seeds over the pool.
    for (const FormulaPtr& a : pool) {
      for (const FormulaPtr& b : pool) {
        if (exhausted()) return std::nullopt;
        add(mkImp(a, mkImp(b, a)), *axiom("prop-k", {a, b}));
        add(mkImp(mkImp(mkNot(a), mkNot(b)), mkImp(b, a)), *axiom("prop-cp", {a, b}));
      }
    }

    // Modus ponens closure.
    bool changed = true;
    while (changed && !exhausted()) {
      changed = false;
      for (size_t i = 0; i < lines.size(); ++i) {
        const FormulaPtr& f = lines[i].formula;
        if (f->kind != Formula::Kind::Imp) continue;
        auto ante = lookup(f->f);
        if (!ante) continue;
        if (lookup(f->g)) continue;
        Justification j;
        j.k = Justification::K::MP;
        j.i = i;
        j.j = *ante;
        if (!add(f->g, std::move(j))) return lookup(goal);
        changed = true;
      }
      if (auto hit = lookup(goal)) return hit;
    }
    return lookup(goal);
  }

  Proof extract(size_t goalLine) const {
    std::vector<char> keep(lines.size(), 0);
    std::vector<size_t> stack{goalLine};
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      if (keep[i]) continue;
      keep[i] = 1;
      const Justification& j = lines[i].just;
      if (j.k == Justification::K::MP) {
        stack.push_back(j.i);
        stack.push_back(j.j);
      } else if (j.k == Justification::K::Gen) {
        stack.push_back(j.i);
      }
    }
    std::vector<size_t> remap(lines.size(), 0);
    Proof out;
    for (size_t i = 0; i < lines.size(); ++i) {
      if (!keep[i]) continue;
      remap[i] = out.lines.size();
      ProofLine line = lines[i];
      if (line.just.k == Justification::K::MP) {
        line.just.i = remap[line.just.i];
        line.just.j = remap[line.just.j];
      } else if (line.just.k == Justification::K::Gen) {
        line.just.i = remap[line.just.i];
      }
      out.lines.push_back(std::move(line));
    }
    return out;
  }
};

}  // namespace

SearchOutcome searchProof(const FormulaPtr& goal, uint64_t budget, const SymbolRegistry& reg) {
  Searcher s{reg, budget};
  std::optional<size_t> hit = s.prove(goal);
  SearchOutcome out;
  out.linesGenerated = s.generated;
  if (hit) out.proof = s.extract(*hit);
  return out;
}

}  // namespace paradox
