#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paradox/errors.hpp"

namespace paradox {

// Plain arbitrary-precision natural. Limbs are base 10^9, little-endian,
// no trailing zero limbs (zero = empty vector). Decimal-friendly on purpose:
// the whole coding layer lives in base-10 digit strings.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(uint64_t v);

  static BigUint fromDecimal(std::string_view digits);
  std::string toDecimal() const;

  bool isZero() const { return limbs_.empty(); }
  bool fitsU64() const;
  uint64_t toU64() const;  // throws TooLargeError if it does not fit

  // Number of decimal digits (1 for zero).
  uint64_t digitCount() const;

  static int compare(const BigUint& a, const BigUint& b);
  friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // requires *this >= o
  friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }
  friend BigUint operator-(BigUint a, const BigUint& b) { a -= b; return a; }
  friend BigUint operator*(const BigUint& a, const BigUint& b);
  BigUint& operator++() { *this += BigUint(1); return *this; }

  // In-place division by a small divisor, returns the remainder.
  uint32_t divmodSmall(uint32_t d);

 private:
  std::vector<uint32_t> limbs_;
  void trim();
};

// One maximal run in a run-compressed decimal string: `chunk` repeated
// `count` times.
struct DigitRun {
  std::string chunk;
  BigUint count;
};

namespace detail {
struct RunRep {
  std::vector<DigitRun> runs;  // canonical: adjacent runs have distinct chunks
  BigUint totalDigits;
};
}  // namespace detail

// Natural number with three internal forms: u64 for small values, BigUint for
// anything whose decimal expansion stays under kExpandLimit digits, and a
// run-compressed digit string beyond that. The run form is what keeps the
// Gödel codes of diagonal sentences exact: their decimal expansions contain
// digit runs far longer than addressable memory, but only a handful of
// distinct runs.
class Nat {
 public:
  // Decimal expansions up to this many digits are held (and printable) in full.
  static constexpr uint64_t kExpandLimit = 200000;

  Nat() : rep_(uint64_t{0}) {}
  Nat(uint64_t v) : rep_(v) {}  // NOLINT: implicit by design
  Nat(const BigUint& b);        // NOLINT: implicit, normalizes

  static Nat fromDecimal(std::string_view digits);

  bool isZero() const;
  bool fitsU64() const { return std::holds_alternative<uint64_t>(rep_); }
  uint64_t asU64() const;       // throws TooLargeError if not small
  BigUint toBigUint() const;    // throws TooLargeError on run form
  bool isRunForm() const { return std::holds_alternative<RunPtr>(rep_); }

  BigUint digitCount() const;
  std::string toDecimal() const;  // throws TooLargeError on run form

  static int compare(const Nat& a, const Nat& b);
  friend bool operator==(const Nat& a, const Nat& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Nat& a, const Nat& b) { return compare(a, b) != 0; }
  friend bool operator<(const Nat& a, const Nat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Nat& a, const Nat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Nat& a, const Nat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Nat& a, const Nat& b) { return compare(a, b) >= 0; }

  friend Nat operator+(const Nat& a, const Nat& b);
  friend Nat operator*(const Nat& a, const Nat& b);
  Nat succ() const { return *this + Nat(1); }

  // Visits the decimal expansion as (chunk, repeat) runs, most significant
  // first. Plain forms yield a single run with count 1.
  void forEachRun(const std::function<void(std::string_view, const BigUint&)>& fn) const;

  // Human-facing rendering: full decimal when it fits in `maxDigits`,
  // otherwise head…tail with an exact digit count.
  std::string display(size_t maxDigits = 120) const;

 private:
  friend class CodeBuilder;
  using BigPtr = std::shared_ptr<const BigUint>;
  using RunPtr = std::shared_ptr<const detail::RunRep>;
  std::variant<uint64_t, BigPtr, RunPtr> rep_;

  explicit Nat(RunPtr r) : rep_(std::move(r)) {}
  const detail::RunRep& runRep() const { return *std::get<RunPtr>(rep_); }
};

// Assembles a Nat from digit material, most significant first. Values that
// stay under Nat::kExpandLimit digits come out in plain form; larger ones in
// canonical run form, which requires every repeated chunk to be a single
// 9-terminated code chunk (that is the only kind of huge value this project
// produces).
class CodeBuilder {
 public:
  void append(std::string_view digits);
  void appendRun(std::string_view chunk, const BigUint& count);
  void appendNat(const Nat& n);
  Nat take();

 private:
  std::vector<DigitRun> runs_;
  BigUint totalDigits_;
  void push(std::string_view chunk, const BigUint& count);
};

}  // namespace paradox
