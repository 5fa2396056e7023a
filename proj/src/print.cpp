#include "paradox/print.hpp"

namespace paradox {

uint32_t symbolCode(const ObjSymbol& s) {
  using K = ObjSymbol::K;
  switch (s.k) {
    case K::Comma: return 0;
    case K::Zero: return 1;
    case K::S: return 2;
    case K::Plus: return 3;
    case K::Times: return 4;
    case K::Eq: return 5;
    case K::Not: return 6;
    case K::And: return 7;
    case K::Or: return 8;
    case K::Imp: return 9;
    case K::Iff: return 10;
    case K::Forall: return 11;
    case K::Exists: return 12;
    case K::LParen: return 13;
    case K::RParen: return 14;
    case K::Lt: return 15;
    case K::Var:
      if (s.var > kMaxVarIndex) throw DomainError("variable index v" + std::to_string(s.var) + " has no symbol code");
      return 16 + s.var;
    case K::Def: return 1000 + s.def;
  }
  throw DomainError("unknown symbol");
}

namespace {

using K = ObjSymbol::K;
const Nat kOne(1);

void one(const SymbolSink& sink, K k) { sink(ObjSymbol{k}, kOne); }

void emitT(const TermPtr& t, const SymbolSink& sink) {
  switch (t->kind) {
    case Term::Kind::Zero: one(sink, K::Zero); return;
    case Term::Kind::Var: sink(ObjSymbol{K::Var, t->var}, kOne); return;
    case Term::Kind::Succ:
      sink(ObjSymbol{K::S}, t->succCount);
      emitT(t->a, sink);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      one(sink, K::LParen);
      emitT(t->a, sink);
      one(sink, t->kind == Term::Kind::Add ? K::Plus : K::Times);
      emitT(t->b, sink);
      one(sink, K::RParen);
      return;
    case Term::Kind::Fun: {
      sink(ObjSymbol{K::Def, 0, t->sym}, kOne);
      one(sink, K::LParen);
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (i) one(sink, K::Comma);
        emitT(t->args[i], sink);
      }
      one(sink, K::RParen);
      return;
    }
  }
}

void emitF(const FormulaPtr& f, const SymbolSink& sink) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      one(sink, K::LParen);
      emitT(f->t1, sink);
      one(sink, f->kind == Formula::Kind::Eq ? K::Eq : K::Lt);
      emitT(f->t2, sink);
      one(sink, K::RParen);
      return;
    case Formula::Kind::Not:
      one(sink, K::Not);
      emitF(f->f, sink);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff: {
      K op = f->kind == Formula::Kind::And  ? K::And
             : f->kind == Formula::Kind::Or ? K::Or
             : f->kind == Formula::Kind::Imp ? K::Imp
                                             : K::Iff;
      one(sink, K::LParen);
      emitF(f->f, sink);
      one(sink, op);
      emitF(f->g, sink);
      one(sink, K::RParen);
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      one(sink, f->kind == Formula::Kind::Forall ? K::Forall : K::Exists);
      sink(ObjSymbol{K::Var, f->var}, kOne);
      emitF(f->f, sink);
      return;
    case Formula::Kind::Pred: {
      sink(ObjSymbol{K::Def, 0, f->sym}, kOne);
      one(sink, K::LParen);
      for (size_t i = 0; i < f->args.size(); ++i) {
        if (i) one(sink, K::Comma);
        emitT(f->args[i], sink);
      }
      one(sink, K::RParen);
      return;
    }
  }
}

struct TextSink {
  std::string out;
  const SymbolRegistry& reg;

  void operator()(const ObjSymbol& s, const Nat& count) {
    switch (s.k) {
      case K::Comma: out += ','; return;
      case K::Zero: out += '0'; return;
      case K::S:
        if (count.fitsU64() && count.asU64() <= kSuccPrintLimit) {
          out.append(count.asU64(), 'S');
        } else {
          out += "S^{";
          out += count.toDecimal();
          out += '}';
        }
        return;
      case K::Plus: out += '+'; return;
      case K::Times: out += "×"; return;
      case K::Eq: out += '='; return;
      case K::Not: out += "¬"; return;
      case K::And: out += "∧"; return;
      case K::Or: out += "∨"; return;
      case K::Imp: out += "→"; return;
      case K::Iff: out += "↔"; return;
      case K::Forall: out += "∀"; return;
      case K::Exists: out += "∃"; return;
      case K::LParen: out += '('; return;
      case K::RParen: out += ')'; return;
      case K::Lt: out += '<'; return;
      case K::Var:
        out += 'v';
        out += std::to_string(s.var);
        return;
      case K::Def: out += reg.at(s.def).name; return;
    }
  }
};

}  // namespace

void emitSymbols(const TermPtr& t, const SymbolSink& sink) { emitT(t, sink); }
void emitSymbols(const FormulaPtr& f, const SymbolSink& sink) { emitF(f, sink); }

Nat symbolCount(const FormulaPtr& f) {
  Nat total(0);
  emitF(f, [&](const ObjSymbol&, const Nat& count) { total = total + count; });
  return total;
}

namespace {
// The quantifier body is separated from the variable by one space; everything
// else concatenates directly. Emission order makes the space placement purely
// local: a space is needed exactly after the variable token that follows a
// quantifier token.
template <typename Node>
std::string printWithQuantifierSpaces(const Node& n, const SymbolRegistry& reg) {
  TextSink sink{std::string(), reg};
  bool afterQuantifier = false;
  auto fn = [&](const ObjSymbol& s, const Nat& count) {
    sink(s, count);
    if (afterQuantifier && s.k == K::Var) sink.out += ' ';
    afterQuantifier = (s.k == K::Forall || s.k == K::Exists);
  };
  emitSymbols(n, fn);
  return std::move(sink.out);
}
}  // namespace

std::string print(const TermPtr& t, const SymbolRegistry& reg) {
  return printWithQuantifierSpaces(t, reg);
}

std::string print(const FormulaPtr& f, const SymbolRegistry& reg) {
  return printWithQuantifierSpaces(f, reg);
}

}  // namespace paradox
