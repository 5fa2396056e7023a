#include "paradox/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace paradox {

namespace {

bool isLetter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool isDigitCh(char c) { return c >= '0' && c <= '9'; }

struct Lexer {
  std::string_view text;
  const SymbolRegistry& reg;
  size_t pos = 0;
  std::vector<Tok> out;

  [[noreturn]] void fail(const std::string& msg, size_t at) { throw ParseError(msg + " at offset " + std::to_string(at), at); }

  bool startsWith(std::string_view s) const {
    return text.size() - pos >= s.size() && text.substr(pos, s.size()) == s;
  }

  void push(Tok::K k, size_t at) { out.push_back(Tok{k, Nat(0), 0, 0, at}); }

  void skipWs() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }

  std::string readDigits(size_t at) {
    size_t start = pos;
    while (pos < text.size() && isDigitCh(text[pos])) ++pos;
    if (pos == start) fail("expected digits", at);
    return std::string(text.substr(start, pos - start));
  }

  VarIndex parseVarIndex(std::string_view digits, size_t at) {
    if (digits.empty()) fail("variable needs an index", at);
    uint64_t v = 0;
    for (char c : digits) {
      v = v * 10 + static_cast<uint64_t>(c - '0');
      if (v > 0xffffffffull) fail("variable index too large", at);
    }
    return static_cast<VarIndex>(v);
  }

  void pushSRun(const Nat& count, size_t at) {
    if (count.isZero()) return;
    out.push_back(Tok{Tok::K::SRun, count, 0, 0, at});
  }

  // "^{digits}" after a lone S.
  Nat caretCount(size_t at) {
    ++pos;  // '^'
    if (pos >= text.size() || text[pos] != '{') fail("expected '{' after S^", at);
    ++pos;
    std::string digits = readDigits(at);
    if (pos >= text.size() || text[pos] != '}') fail("expected '}' in S^{N}", at);
    ++pos;
    Nat n = Nat::fromDecimal(digits);
    if (n.isZero()) fail("S^{0} is not a symbol run", at);
    return n;
  }

  void word(size_t at) {
    size_t start = pos;
    while (pos < text.size() && (isLetter(text[pos]) || isDigitCh(text[pos]))) ++pos;
    std::string_view w = text.substr(start, pos - start);
    if (w == "not") return push(Tok::K::Not, at);
    if (w == "and") return push(Tok::K::And, at);
    if (w == "or") return push(Tok::K::Or, at);
    if (w == "forall") return push(Tok::K::Forall, at);
    if (w == "exists") return push(Tok::K::Exists, at);

    size_t sCount = 0;
    while (sCount < w.size() && w[sCount] == 'S') ++sCount;
    std::string_view rest = w.substr(sCount);

    // Pure term words (S runs, 0, variables) always read as terms; anything
    // else must be a registered name applied directly to '('.
    if (rest.empty()) {
      if (sCount == 1 && pos < text.size() && text[pos] == '^') return pushSRun(caretCount(at), at);
      return pushSRun(Nat(sCount), at);
    }
    if (rest == "0") {
      pushSRun(Nat(sCount), at);
      return push(Tok::K::Zero, at);
    }
    if (rest[0] == 'v' && rest.size() > 1 &&
        std::all_of(rest.begin() + 1, rest.end(), isDigitCh)) {
      pushSRun(Nat(sCount), at);
      out.push_back(Tok{Tok::K::Var, Nat(0), parseVarIndex(rest.substr(1), at), 0, at});
      return;
    }

    if (pos < text.size() && text[pos] == '(') {
      if (auto id = reg.find(std::string(w))) {
        out.push_back(Tok{Tok::K::Name, Nat(0), 0, *id, at});
        return;
      }
      if (sCount > 0) {
        if (auto id = reg.find(std::string(rest))) {
          pushSRun(Nat(sCount), at);
          out.push_back(Tok{Tok::K::Name, Nat(0), 0, *id, at});
          return;
        }
      }
      fail("unknown defined symbol '" + std::string(w) + "'", at);
    }
    fail("cannot read symbol '" + std::string(w) + "'", at);
  }

  std::vector<Tok> run() {
    struct Glyph { const char* s; Tok::K k; };
    static const Glyph glyphs[] = {
        {"¬", Tok::K::Not},   {"×", Tok::K::Times}, {"∧", Tok::K::And},
        {"∨", Tok::K::Or},    {"→", Tok::K::Imp},   {"↔", Tok::K::Iff},
        {"∀", Tok::K::Forall}, {"∃", Tok::K::Exists}, {"≤", Tok::K::Le},
    };
    while (true) {
      skipWs();
      if (pos >= text.size()) break;
      size_t at = pos;
      char c = text[pos];
      if (c == '0') { ++pos; push(Tok::K::Zero, at); continue; }
      if (c == '(') { ++pos; push(Tok::K::LParen, at); continue; }
      if (c == ')') { ++pos; push(Tok::K::RParen, at); continue; }
      if (c == ',') { ++pos; push(Tok::K::Comma, at); continue; }
      if (c == '+') { ++pos; push(Tok::K::Plus, at); continue; }
      if (c == '*') { ++pos; push(Tok::K::Times, at); continue; }
      if (c == '=') { ++pos; push(Tok::K::Eq, at); continue; }
      if (c == '<') {
        if (startsWith("<->")) { pos += 3; push(Tok::K::Iff, at); }
        else if (startsWith("<=")) { pos += 2; push(Tok::K::Le, at); }
        else { ++pos; push(Tok::K::Lt, at); }
        continue;
      }
      if (c == '-') {
        if (startsWith("->")) { pos += 2; push(Tok::K::Imp, at); continue; }
        fail("stray '-'", at);
      }
      if (isLetter(c)) { word(at); continue; }
      bool matched = false;
      for (const Glyph& g : glyphs) {
        if (startsWith(g.s)) {
          pos += std::string_view(g.s).size();
          push(g.k, at);
          matched = true;
          break;
        }
      }
      if (matched) continue;
      if (isDigitCh(c)) fail("bare digits are not terms (numerals are S...S0)", at);
      fail("unexpected character", at);
    }
    return std::move(out);
  }
};

struct Parser {
  const std::vector<Tok>& toks;
  const SymbolRegistry& reg;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) {
    size_t at = i < toks.size() ? toks[i].pos : (toks.empty() ? 0 : toks.back().pos + 1);
    throw ParseError(msg + " at offset " + std::to_string(at), at);
  }

  bool done() const { return i >= toks.size(); }
  bool at(Tok::K k) const { return i < toks.size() && toks[i].k == k; }
  const Tok& eat(Tok::K k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return toks[i++];
  }

  TermPtr term() {
    if (done()) fail("expected term");
    const Tok& t = toks[i];
    switch (t.k) {
      case Tok::K::Zero: ++i; return mkZero();
      case Tok::K::SRun: { ++i; return mkSuccN(t.count, term()); }
      case Tok::K::Var: ++i; return mkVar(t.var);
      case Tok::K::LParen: {
        ++i;
        TermPtr l = term();
        bool isAdd;
        if (at(Tok::K::Plus)) isAdd = true;
        else if (at(Tok::K::Times)) isAdd = false;
        else fail("expected + or × in term");
        ++i;
        TermPtr r = term();
        eat(Tok::K::RParen, ")");
        return isAdd ? mkAdd(l, r) : mkMul(l, r);
      }
      case Tok::K::Name: {
        const DefinedSymbol& d = reg.at(t.sym);
        if (d.kind != SymKind::Function)
          fail("'" + d.name + "' is a predicate, not usable in a term");
        ++i;
        auto args = argList(d);
        return mkFun(t.sym, std::move(args));
      }
      default: fail("expected term");
    }
  }

  std::vector<TermPtr> argList(const DefinedSymbol& d) {
    eat(Tok::K::LParen, "(");
    std::vector<TermPtr> args;
    args.push_back(term());
    while (at(Tok::K::Comma)) {
      ++i;
      args.push_back(term());
    }
    eat(Tok::K::RParen, ")");
    if (args.size() != d.arity)
      fail("arity mismatch for '" + d.name + "': expected " + std::to_string(d.arity) + ", got " +
           std::to_string(args.size()));
    return args;
  }

  FormulaPtr formula() {
    if (done()) fail("expected formula");
    const Tok& t = toks[i];
    switch (t.k) {
      case Tok::K::Not: ++i; return mkNot(formula());
      case Tok::K::Forall:
      case Tok::K::Exists: {
        ++i;
        VarIndex v = eat(Tok::K::Var, "quantified variable").var;
        FormulaPtr body = formula();
        return t.k == Tok::K::Forall ? mkForall(v, body) : mkExists(v, body);
      }
      case Tok::K::LParen: {
        // Bounded sugar: (∀vi<t)φ and (∃vi<t)φ, ≤ accepted as < S.
        if (i + 3 < toks.size() && (toks[i + 1].k == Tok::K::Forall || toks[i + 1].k == Tok::K::Exists) &&
            toks[i + 2].k == Tok::K::Var &&
            (toks[i + 3].k == Tok::K::Lt || toks[i + 3].k == Tok::K::Le)) {
          ++i;
          bool uni = toks[i].k == Tok::K::Forall;
          ++i;
          VarIndex v = eat(Tok::K::Var, "quantified variable").var;
          TermPtr bound;
          if (at(Tok::K::Lt)) {
            ++i;
            bound = term();
          } else if (at(Tok::K::Le)) {
            ++i;
            bound = mkSucc(term());
          } else {
            fail("expected < in bounded quantifier");
          }
          eat(Tok::K::RParen, ")");
          FormulaPtr body = formula();
          return uni ? mkForall(v, mkImp(mkLt(mkVar(v), bound), body))
                     : mkExists(v, mkAnd(mkLt(mkVar(v), bound), body));
        }
        size_t save = i;
        ++i;
        // Try an atom first: (t = t), (t < t), (t ≤ t).
        std::optional<ParseError> atomErr;
        try {
          TermPtr l = term();
          if (at(Tok::K::Eq) || at(Tok::K::Lt) || at(Tok::K::Le)) {
            Tok::K rel = toks[i].k;
            ++i;
            TermPtr r = term();
            eat(Tok::K::RParen, ")");
            if (rel == Tok::K::Eq) return mkEq(l, r);
            if (rel == Tok::K::Lt) return mkLt(l, r);
            return mkLe(l, r);
          }
        } catch (const ParseError& e) {
          atomErr = e;  // fall through to the connective form
        }
        i = save + 1;
        try {
          FormulaPtr l = formula();
          FormulaPtr (*join)(FormulaPtr, FormulaPtr) = nullptr;
          if (at(Tok::K::And)) join = mkAnd;
          else if (at(Tok::K::Or)) join = mkOr;
          else if (at(Tok::K::Imp)) join = mkImp;
          else if (at(Tok::K::Iff)) join = mkIff;
          else fail("expected connective or relation");
          ++i;
          FormulaPtr r = formula();
          eat(Tok::K::RParen, ")");
          return join(std::move(l), std::move(r));
        } catch (const ParseError& e) {
          if (atomErr && atomErr->pos > e.pos) throw *atomErr;
          throw;
        }
      }
      case Tok::K::Name: {
        const DefinedSymbol& d = reg.at(t.sym);
        if (d.kind != SymKind::Predicate)
          fail("'" + d.name + "' is a function, not usable as an atom");
        ++i;
        auto args = argList(d);
        return mkPred(t.sym, std::move(args));
      }
      default: fail("expected formula");
    }
  }
};

template <typename F>
auto parseAll(const std::vector<Tok>& toks, const SymbolRegistry& reg, F&& entry) {
  Parser p{toks, reg};
  auto result = entry(p);
  if (!p.done()) p.fail("trailing input");
  return result;
}

}  // namespace

std::vector<Tok> lex(std::string_view text, const SymbolRegistry& reg) {
  Lexer l{text, reg};
  return l.run();
}

FormulaPtr parseFormulaTokens(const std::vector<Tok>& toks, const SymbolRegistry& reg) {
  return parseAll(toks, reg, [](Parser& p) { return p.formula(); });
}

TermPtr parseTermTokens(const std::vector<Tok>& toks, const SymbolRegistry& reg) {
  return parseAll(toks, reg, [](Parser& p) { return p.term(); });
}

Expr parseExprTokens(const std::vector<Tok>& toks, const SymbolRegistry& reg) {
  try {
    return parseFormulaTokens(toks, reg);
  } catch (const ParseError& fe) {
    try {
      return parseTermTokens(toks, reg);
    } catch (const ParseError& te) {
      throw te.pos > fe.pos ? te : fe;
    }
  }
}

FormulaPtr parseFormula(std::string_view text, const SymbolRegistry& reg) {
  return parseFormulaTokens(lex(text, reg), reg);
}

TermPtr parseTerm(std::string_view text, const SymbolRegistry& reg) {
  return parseTermTokens(lex(text, reg), reg);
}

Expr parseExpr(std::string_view text, const SymbolRegistry& reg) {
  return parseExprTokens(lex(text, reg), reg);
}

}  // namespace paradox
