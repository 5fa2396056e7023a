#include "paradox/godel.hpp"

#include <algorithm>
#include <functional>

namespace paradox {

namespace {

// Base-8 digits of an element, shifted to '1'..'8', closed with '9'.
std::string elementChunk(const Nat& e) {
  std::string digits;
  if (e.fitsU64()) {
    uint64_t v = e.asU64();
    if (v == 0) {
      digits = "1";
    } else {
      while (v != 0) {
        digits.push_back(static_cast<char>('1' + (v & 7)));
        v >>= 3;
      }
      std::reverse(digits.begin(), digits.end());
    }
  } else {
    BigUint v = e.toBigUint();
    while (!v.isZero()) digits.push_back(static_cast<char>('1' + v.divmodSmall(8)));
    std::reverse(digits.begin(), digits.end());
  }
  digits.push_back('9');
  return digits;
}

Nat chunkElement(std::string_view chunk) {
  // chunk has passed validation: body of '1'..'8', final '9'
  uint64_t small = 0;
  bool fits = true;
  for (size_t i = 0; i + 1 < chunk.size(); ++i) {
    if (small > (UINT64_MAX >> 3)) {
      fits = false;
      break;
    }
    small = (small << 3) | static_cast<uint64_t>(chunk[i] - '1');
  }
  if (fits) return Nat(small);
  BigUint v;
  BigUint eight(8);
  for (size_t i = 0; i + 1 < chunk.size(); ++i) {
    v = v * eight;
    v += BigUint(static_cast<uint64_t>(chunk[i] - '1'));
  }
  return Nat(v);
}

bool validChunk(std::string_view chunk) {
  if (chunk.size() < 2 || chunk.back() != '9') return false;
  // multi-digit elements never start with base-8 digit 0 (decimal '1')
  if (chunk.size() > 2 && chunk[0] == '1') return false;
  for (size_t i = 0; i + 1 < chunk.size(); ++i)
    if (chunk[i] < '1' || chunk[i] > '8') return false;
  return true;
}

// Visits the code as (chunk, count) runs of 9-terminated element chunks.
// Returns false (without finishing) if the digit string is not a valid code.
bool forEachCodeChunk(const Nat& code,
                      const std::function<void(std::string_view, const BigUint&)>& fn) {
  if (code.isZero()) return true;
  bool ok = true;
  static const BigUint one(1);
  code.forEachRun([&](std::string_view run, const BigUint& count) {
    if (!ok) return;
    bool single = count.fitsU64() && count.toU64() == 1;
    if (single) {
      size_t start = 0;
      for (size_t i = 0; i < run.size(); ++i) {
        if (run[i] == '9') {
          std::string_view chunk = run.substr(start, i - start + 1);
          if (!validChunk(chunk)) {
            ok = false;
            return;
          }
          fn(chunk, one);
          start = i + 1;
        }
      }
      if (start != run.size()) ok = false;  // trailing digits without terminator
    } else {
      if (!validChunk(run)) {
        ok = false;
        return;
      }
      fn(run, count);
    }
  });
  return ok;
}

[[noreturn]] void notACode() { throw DomainError("not a code number"); }

size_t fmtU64(uint64_t v, char* buf) {  // most significant digit first
  char tmp[20];
  size_t n = 0;
  do {
    tmp[n++] = static_cast<char>('0' + v % 10);
    v /= 10;
  } while (v != 0);
  for (size_t i = 0; i < n; ++i) buf[i] = tmp[n - 1 - i];
  return n;
}

// A u64 code holds at most 9 elements (every chunk is at least two digits),
// so one cached scan per code serves the repeated Dec/l probes the HetSeq and
// Ele expansions make.
struct U64SeqCache {
  uint64_t code = 0;
  bool filled = false;
  int64_t n = -1;  // -1: not a code
  uint64_t elems[10];
};
thread_local U64SeqCache g_u64SeqCache;

const U64SeqCache& cachedScanU64(uint64_t code) {
  U64SeqCache& c = g_u64SeqCache;
  if (c.filled && c.code == code) return c;
  c.filled = true;
  c.code = code;
  c.n = -1;
  char buf[20];
  size_t len = fmtU64(code, buf);
  uint64_t idx = 0;
  uint64_t elem = 0;
  size_t runLen = 0;
  bool leadingZeroDigit = false;
  for (size_t i = 0; i < len; ++i) {
    char ch = buf[i];
    if (ch == '9') {
      if (runLen == 0) return c;
      if (runLen > 1 && leadingZeroDigit) return c;  // non-canonical base-8
      c.elems[idx++] = elem;
      elem = 0;
      runLen = 0;
    } else if (ch >= '1' && ch <= '8') {
      if (runLen == 0) leadingZeroDigit = (ch == '1');
      elem = (elem << 3) | static_cast<uint64_t>(ch - '1');
      ++runLen;
    } else {
      return c;
    }
  }
  if (runLen != 0) return c;
  c.n = static_cast<int64_t>(idx);
  return c;
}

}  // namespace

Nat seqEncode(const std::vector<Nat>& elems) {
  CodeBuilder b;
  for (const Nat& e : elems) b.append(elementChunk(e));
  return b.take();
}

bool isCode(const Nat& n) {
  if (n.isZero()) return true;
  if (n.fitsU64()) return cachedScanU64(n.asU64()).n >= 0;
  return forEachCodeChunk(n, [](std::string_view, const BigUint&) {});
}

std::optional<Nat> seqLenOpt(const Nat& code) {
  if (code.isZero()) return Nat(0);
  if (code.fitsU64()) {
    int64_t n = cachedScanU64(code.asU64()).n;
    if (n < 0) return std::nullopt;
    return Nat(static_cast<uint64_t>(n));
  }
  BigUint total;
  if (!forEachCodeChunk(code, [&](std::string_view, const BigUint& count) { total += count; }))
    return std::nullopt;
  return Nat(total);
}

std::optional<Nat> seqAtOpt(const Nat& code, const Nat& k) {
  if (code.fitsU64()) {
    if (code.isZero() || !k.fitsU64()) return std::nullopt;
    const U64SeqCache& c = cachedScanU64(code.asU64());
    uint64_t want = k.asU64();
    if (c.n < 0 || want >= static_cast<uint64_t>(c.n)) return std::nullopt;
    return Nat(c.elems[want]);
  }
  BigUint want;
  try {
    want = k.toBigUint();
  } catch (const TooLargeError&) {
    return std::nullopt;  // an index beyond any expandable count is out of range
  }
  BigUint seen;
  std::optional<Nat> result;
  bool ok = forEachCodeChunk(code, [&](std::string_view chunk, const BigUint& count) {
    if (result) return;
    BigUint next = seen + count;
    if (BigUint::compare(want, next) < 0) result = chunkElement(chunk);
    seen = next;
  });
  if (!ok) return std::nullopt;
  return result;
}

Nat seqLen(const Nat& code) {
  auto n = seqLenOpt(code);
  if (!n) notACode();
  return *n;
}

Nat seqAt(const Nat& code, const Nat& k) {
  if (!isCode(code)) notACode();
  auto e = seqAtOpt(code, k);
  if (!e) throw DomainError("sequence index out of range");
  return *e;
}

void forEachElementRun(const Nat& code, const std::function<void(const Nat&, const BigUint&)>& fn) {
  if (!forEachCodeChunk(code, [&](std::string_view chunk, const BigUint& count) {
        fn(chunkElement(chunk), count);
      }))
    notACode();
}

std::vector<Nat> seqDecode(const Nat& code, uint64_t maxLen) {
  std::vector<Nat> out;
  bool ok = forEachCodeChunk(code, [&](std::string_view chunk, const BigUint& count) {
    if (!count.fitsU64() || out.size() + count.toU64() > maxLen)
      throw TooLargeError("sequence too long to materialize");
    Nat e = chunkElement(chunk);
    for (uint64_t i = 0, n = count.toU64(); i < n; ++i) out.push_back(e);
  });
  if (!ok) notACode();
  return out;
}

namespace {

const std::string& symbolChunk(uint32_t code) {
  static const std::vector<std::string> cache = [] {
    std::vector<std::string> v;
    v.reserve(1100);
    for (uint32_t i = 0; i < 1100; ++i) v.push_back(elementChunk(Nat(i)));
    return v;
  }();
  if (code < cache.size()) return cache[code];
  throw DomainError("symbol code out of range");
}

Nat encodeSymbols(const std::function<void(const SymbolSink&)>& emit) {
  CodeBuilder b;
  emit([&](const ObjSymbol& s, const Nat& count) {
    b.appendRun(symbolChunk(symbolCode(s)), count.toBigUint());
  });
  return b.take();
}

std::vector<Tok> tokensFromCode(const Nat& code, const SymbolRegistry& reg) {
  std::vector<Tok> toks;
  bool ok = forEachCodeChunk(code, [&](std::string_view chunk, const BigUint& count) {
    Nat elem = chunkElement(chunk);
    if (!elem.fitsU64() || elem.asU64() > 0xffffffffull)
      throw DomainError("element is not a symbol code");
    uint32_t sc = static_cast<uint32_t>(elem.asU64());
    // Adjacent identical symbols merge into runs in the compressed form.
    // Successor runs stay one counted token; anything else is expanded, with
    // a ceiling since no other symbol can repeat meaningfully often.
    uint64_t repeat = 1;
    if (!(count.fitsU64() && count.toU64() == 1)) {
      if (sc != 2) {
        if (!count.fitsU64() || count.toU64() > 1000000)
          throw TooLargeError("symbol run too long to materialize");
        repeat = count.toU64();
      }
    }
    Tok t{Tok::K::Zero, Nat(0), 0, 0, 0};
    switch (sc) {
      case 0: t.k = Tok::K::Comma; break;
      case 1: t.k = Tok::K::Zero; break;
      case 2: t.k = Tok::K::SRun; t.count = Nat(count); break;
      case 3: t.k = Tok::K::Plus; break;
      case 4: t.k = Tok::K::Times; break;
      case 5: t.k = Tok::K::Eq; break;
      case 6: t.k = Tok::K::Not; break;
      case 7: t.k = Tok::K::And; break;
      case 8: t.k = Tok::K::Or; break;
      case 9: t.k = Tok::K::Imp; break;
      case 10: t.k = Tok::K::Iff; break;
      case 11: t.k = Tok::K::Forall; break;
      case 12: t.k = Tok::K::Exists; break;
      case 13: t.k = Tok::K::LParen; break;
      case 14: t.k = Tok::K::RParen; break;
      case 15: t.k = Tok::K::Lt; break;
      default:
        if (sc >= 16 && sc <= 16 + kMaxVarIndex) {
          t.k = Tok::K::Var;
          t.var = sc - 16;
        } else if (auto id = reg.fromSymbolCode(sc)) {
          t.k = Tok::K::Name;
          t.sym = *id;
        } else {
          throw DomainError("unknown symbol code " + std::to_string(sc));
        }
    }
    for (uint64_t i = 0; i < repeat; ++i) toks.push_back(t);
  });
  if (!ok) notACode();
  return toks;
}

}  // namespace

Nat godelEncode(const TermPtr& t, const SymbolRegistry&) {
  return encodeSymbols([&](const SymbolSink& sink) { emitSymbols(t, sink); });
}

Nat godelEncode(const FormulaPtr& f, const SymbolRegistry&) {
  return encodeSymbols([&](const SymbolSink& sink) { emitSymbols(f, sink); });
}

Nat godelEncode(const Expr& e, const SymbolRegistry& reg) {
  if (std::holds_alternative<FormulaPtr>(e)) return godelEncode(std::get<FormulaPtr>(e), reg);
  return godelEncode(std::get<TermPtr>(e), reg);
}

Expr godelDecode(const Nat& code, const SymbolRegistry& reg) {
  std::vector<Tok> toks = tokensFromCode(code, reg);
  if (toks.empty()) throw DomainError("empty sequence is not an expression");
  try {
    return parseExprTokens(toks, reg);
  } catch (const ParseError& e) {
    throw DomainError(std::string("code does not decode to an expression: ") + e.what());
  }
}

FormulaPtr godelDecodeFormula(const Nat& code, const SymbolRegistry& reg) {
  Expr e = godelDecode(code, reg);
  if (!std::holds_alternative<FormulaPtr>(e)) throw DomainError("code decodes to a term, not a formula");
  return std::get<FormulaPtr>(e);
}

TermPtr godelDecodeTerm(const Nat& code, const SymbolRegistry& reg) {
  Expr e = godelDecode(code, reg);
  if (!std::holds_alternative<TermPtr>(e)) throw DomainError("code decodes to a formula, not a term");
  return std::get<TermPtr>(e);
}

Nat metaNeg(const Nat& code, const SymbolRegistry& reg) {
  godelDecodeFormula(code, reg);  // validates the category
  CodeBuilder b;
  b.append("79");  // symbol code 6 = ¬
  b.appendNat(code);
  return b.take();
}

Nat metaSubs(const Nat& phi, const Nat& var, const Nat& term, const SymbolRegistry& reg) {
  FormulaPtr f = godelDecodeFormula(phi, reg);
  TermPtr v = godelDecodeTerm(var, reg);
  if (v->kind != Term::Kind::Var) throw DomainError("second argument of Subs must code a variable");
  TermPtr t = godelDecodeTerm(term, reg);
  return godelEncode(substitute(f, v->var, t), reg);
}

Nat numCode(const Nat& n) {
  CodeBuilder b;
  if (!n.isZero()) b.appendRun("39", n.toBigUint());  // symbol code 2 = S
  b.append("29");                                     // symbol code 1 = 0
  return b.take();
}

}  // namespace paradox
