#include "paradox/ast.hpp"

#include <algorithm>

namespace paradox {

TermPtr mkZero() {
  static const TermPtr z = std::make_shared<Term>(Term{Term::Kind::Zero});
  return z;
}

TermPtr mkVar(VarIndex v) {
  auto t = std::make_shared<Term>(Term{Term::Kind::Var});
  t->var = v;
  return t;
}

TermPtr mkSuccN(const Nat& count, const TermPtr& inner) {
  if (count.isZero()) return inner;
  auto t = std::make_shared<Term>(Term{Term::Kind::Succ});
  if (inner->kind == Term::Kind::Succ) {
    t->succCount = count + inner->succCount;
    t->a = inner->a;
  } else {
    t->succCount = count;
    t->a = inner;
  }
  return t;
}

TermPtr mkSucc(const TermPtr& inner) { return mkSuccN(Nat(1), inner); }

TermPtr mkAdd(TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>(Term{Term::Kind::Add});
  t->a = std::move(l);
  t->b = std::move(r);
  return t;
}

TermPtr mkMul(TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>(Term{Term::Kind::Mul});
  t->a = std::move(l);
  t->b = std::move(r);
  return t;
}

TermPtr mkFun(SymId sym, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>(Term{Term::Kind::Fun});
  t->sym = sym;
  t->args = std::move(args);
  return t;
}

TermPtr numeral(const Nat& n) { return mkSuccN(n, mkZero()); }

namespace {
FormulaPtr binary(Formula::Kind k, FormulaPtr f, FormulaPtr g) {
  auto o = std::make_shared<Formula>(Formula{k});
  o->f = std::move(f);
  o->g = std::move(g);
  return o;
}
FormulaPtr atom(Formula::Kind k, TermPtr l, TermPtr r) {
  auto o = std::make_shared<Formula>(Formula{k});
  o->t1 = std::move(l);
  o->t2 = std::move(r);
  return o;
}
FormulaPtr quant(Formula::Kind k, VarIndex v, FormulaPtr f) {
  auto o = std::make_shared<Formula>(Formula{k});
  o->var = v;
  o->f = std::move(f);
  return o;
}
}  // namespace

FormulaPtr mkEq(TermPtr l, TermPtr r) { return atom(Formula::Kind::Eq, std::move(l), std::move(r)); }
FormulaPtr mkLt(TermPtr l, TermPtr r) { return atom(Formula::Kind::Lt, std::move(l), std::move(r)); }

FormulaPtr mkNot(FormulaPtr f) {
  auto o = std::make_shared<Formula>(Formula{Formula::Kind::Not});
  o->f = std::move(f);
  return o;
}

FormulaPtr mkAnd(FormulaPtr f, FormulaPtr g) { return binary(Formula::Kind::And, std::move(f), std::move(g)); }
FormulaPtr mkOr(FormulaPtr f, FormulaPtr g) { return binary(Formula::Kind::Or, std::move(f), std::move(g)); }
FormulaPtr mkImp(FormulaPtr f, FormulaPtr g) { return binary(Formula::Kind::Imp, std::move(f), std::move(g)); }
FormulaPtr mkIff(FormulaPtr f, FormulaPtr g) { return binary(Formula::Kind::Iff, std::move(f), std::move(g)); }
FormulaPtr mkForall(VarIndex v, FormulaPtr f) { return quant(Formula::Kind::Forall, v, std::move(f)); }
FormulaPtr mkExists(VarIndex v, FormulaPtr f) { return quant(Formula::Kind::Exists, v, std::move(f)); }

FormulaPtr mkPred(SymId sym, std::vector<TermPtr> args) {
  auto o = std::make_shared<Formula>(Formula{Formula::Kind::Pred});
  o->sym = sym;
  o->args = std::move(args);
  return o;
}

FormulaPtr mkLe(const TermPtr& l, const TermPtr& r) { return mkLt(l, mkSucc(r)); }

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Succ: return a->succCount == b->succCount && equal(a->a, b->a);
    case Term::Kind::Add:
    case Term::Kind::Mul: return equal(a->a, b->a) && equal(a->b, b->b);
    case Term::Kind::Fun: {
      if (a->sym != b->sym || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!equal(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt: return equal(a->t1, b->t1) && equal(a->t2, b->t2);
    case Formula::Kind::Not: return equal(a->f, b->f);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff: return equal(a->f, b->f) && equal(a->g, b->g);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return a->var == b->var && equal(a->f, b->f);
    case Formula::Kind::Pred: {
      if (a->sym != b->sym || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!equal(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

bool occursFree(const TermPtr& t, VarIndex v) {
  switch (t->kind) {
    case Term::Kind::Zero: return false;
    case Term::Kind::Var: return t->var == v;
    case Term::Kind::Succ: return occursFree(t->a, v);
    case Term::Kind::Add:
    case Term::Kind::Mul: return occursFree(t->a, v) || occursFree(t->b, v);
    case Term::Kind::Fun:
      return std::any_of(t->args.begin(), t->args.end(),
                         [v](const TermPtr& u) { return occursFree(u, v); });
  }
  return false;
}

bool occursFree(const FormulaPtr& f, VarIndex v) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt: return occursFree(f->t1, v) || occursFree(f->t2, v);
    case Formula::Kind::Not: return occursFree(f->f, v);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff: return occursFree(f->f, v) || occursFree(f->g, v);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return f->var != v && occursFree(f->f, v);
    case Formula::Kind::Pred:
      return std::any_of(f->args.begin(), f->args.end(),
                         [v](const TermPtr& u) { return occursFree(u, v); });
  }
  return false;
}

namespace {
void collectTermVars(const TermPtr& t, std::set<VarIndex>& out) {
  switch (t->kind) {
    case Term::Kind::Zero: return;
    case Term::Kind::Var: out.insert(t->var); return;
    case Term::Kind::Succ: collectTermVars(t->a, out); return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collectTermVars(t->a, out);
      collectTermVars(t->b, out);
      return;
    case Term::Kind::Fun:
      for (const auto& u : t->args) collectTermVars(u, out);
      return;
  }
}

void collectFree(const FormulaPtr& f, std::set<VarIndex>& bound, std::set<VarIndex>& out) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt: {
      std::set<VarIndex> vs;
      collectTermVars(f->t1, vs);
      collectTermVars(f->t2, vs);
      for (VarIndex v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Not: collectFree(f->f, bound, out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff:
      collectFree(f->f, bound, out);
      collectFree(f->g, bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool fresh = bound.insert(f->var).second;
      collectFree(f->f, bound, out);
      if (fresh) bound.erase(f->var);
      return;
    }
    case Formula::Kind::Pred: {
      std::set<VarIndex> vs;
      for (const auto& u : f->args) collectTermVars(u, vs);
      for (VarIndex v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
  }
}

void collectAll(const FormulaPtr& f, std::set<VarIndex>& out) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      collectTermVars(f->t1, out);
      collectTermVars(f->t2, out);
      return;
    case Formula::Kind::Not: collectAll(f->f, out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff:
      collectAll(f->f, out);
      collectAll(f->g, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out.insert(f->var);
      collectAll(f->f, out);
      return;
    case Formula::Kind::Pred:
      for (const auto& u : f->args) collectTermVars(u, out);
      return;
  }
}
}  // namespace

std::set<VarIndex> freeVars(const TermPtr& t) {
  std::set<VarIndex> out;
  collectTermVars(t, out);
  return out;
}

std::set<VarIndex> freeVars(const FormulaPtr& f) {
  std::set<VarIndex> bound, out;
  collectFree(f, bound, out);
  return out;
}

std::set<VarIndex> allVars(const FormulaPtr& f) {
  std::set<VarIndex> out;
  collectAll(f, out);
  return out;
}

std::set<VarIndex> allVars(const TermPtr& t) {
  std::set<VarIndex> out;
  collectTermVars(t, out);
  return out;
}

TermPtr substTerm(const TermPtr& t, VarIndex v, const TermPtr& repl) {
  switch (t->kind) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: return t->var == v ? repl : t;
    case Term::Kind::Succ: {
      TermPtr inner = substTerm(t->a, v, repl);
      if (inner.get() == t->a.get()) return t;
      return mkSuccN(t->succCount, inner);
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      TermPtr l = substTerm(t->a, v, repl), r = substTerm(t->b, v, repl);
      if (l.get() == t->a.get() && r.get() == t->b.get()) return t;
      return t->kind == Term::Kind::Add ? mkAdd(l, r) : mkMul(l, r);
    }
    case Term::Kind::Fun: {
      bool changed = false;
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& u : t->args) {
        TermPtr nu = substTerm(u, v, repl);
        changed = changed || nu.get() != u.get();
        args.push_back(std::move(nu));
      }
      if (!changed) return t;
      return mkFun(t->sym, std::move(args));
    }
  }
  return t;
}

namespace {

using SubList = std::vector<std::pair<VarIndex, TermPtr>>;

TermPtr substTermMulti(const TermPtr& t, const SubList& subs) {
  TermPtr out = t;
  switch (t->kind) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var:
      for (const auto& [v, repl] : subs)
        if (t->var == v) return repl;
      return t;
    case Term::Kind::Succ: {
      TermPtr inner = substTermMulti(t->a, subs);
      if (inner.get() == t->a.get()) return t;
      return mkSuccN(t->succCount, inner);
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      TermPtr l = substTermMulti(t->a, subs), r = substTermMulti(t->b, subs);
      if (l.get() == t->a.get() && r.get() == t->b.get()) return t;
      return t->kind == Term::Kind::Add ? mkAdd(l, r) : mkMul(l, r);
    }
    case Term::Kind::Fun: {
      bool changed = false;
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& u : t->args) {
        TermPtr nu = substTermMulti(u, subs);
        changed = changed || nu.get() != u.get();
        args.push_back(std::move(nu));
      }
      if (!changed) return t;
      return mkFun(t->sym, std::move(args));
    }
  }
  return out;
}

FormulaPtr substFormulaMulti(const FormulaPtr& f, const SubList& subs) {
  if (subs.empty()) return f;
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt: {
      TermPtr l = substTermMulti(f->t1, subs), r = substTermMulti(f->t2, subs);
      if (l.get() == f->t1.get() && r.get() == f->t2.get()) return f;
      return f->kind == Formula::Kind::Eq ? mkEq(l, r) : mkLt(l, r);
    }
    case Formula::Kind::Not: {
      FormulaPtr g = substFormulaMulti(f->f, subs);
      return g.get() == f->f.get() ? f : mkNot(g);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff: {
      FormulaPtr l = substFormulaMulti(f->f, subs), r = substFormulaMulti(f->g, subs);
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
      SubList inner;
      for (const auto& [v, repl] : subs) {
        if (v == f->var) continue;  // bound here, no free occurrences below
        if (!occursFree(f->f, v)) continue;
        if (occursFree(repl, f->var))
          throw CaptureError("substitution captured by quantifier on v" + std::to_string(f->var),
                             f->var);
        inner.emplace_back(v, repl);
      }
      FormulaPtr g = substFormulaMulti(f->f, inner);
      if (g.get() == f->f.get()) return f;
      return f->kind == Formula::Kind::Forall ? mkForall(f->var, g) : mkExists(f->var, g);
    }
    case Formula::Kind::Pred: {
      bool changed = false;
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& u : f->args) {
        TermPtr nu = substTermMulti(u, subs);
        changed = changed || nu.get() != u.get();
        args.push_back(std::move(nu));
      }
      if (!changed) return f;
      return mkPred(f->sym, std::move(args));
    }
  }
  return f;
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, VarIndex v, const TermPtr& repl) {
  return substFormulaMulti(f, {{v, repl}});
}

FormulaPtr substMulti(const FormulaPtr& f, const std::vector<std::pair<VarIndex, TermPtr>>& subs) {
  return substFormulaMulti(f, subs);
}

}  // namespace paradox
