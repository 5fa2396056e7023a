#include "paradox/nat.hpp"

#include <algorithm>
#include <cstdio>

namespace paradox {

namespace {
constexpr uint32_t kLimbBase = 1000000000;  // 10^9
constexpr int kLimbDigits = 9;
}  // namespace

// ---------------------------------------------------------------------------
// BigUint

BigUint::BigUint(uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<uint32_t>(v % kLimbBase));
    v /= kLimbBase;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::fromDecimal(std::string_view digits) {
  size_t start = 0;
  while (start + 1 < digits.size() && digits[start] == '0') ++start;
  digits = digits.substr(start);
  if (digits.empty()) throw DomainError("empty decimal string");
  for (char c : digits)
    if (c < '0' || c > '9') throw DomainError("invalid decimal digit");
  BigUint out;
  size_t n = digits.size();
  out.limbs_.reserve(n / kLimbDigits + 1);
  size_t pos = n;
  while (pos > 0) {
    size_t take = pos >= kLimbDigits ? kLimbDigits : pos;
    uint32_t limb = 0;
    for (size_t i = pos - take; i < pos; ++i) limb = limb * 10 + static_cast<uint32_t>(digits[i] - '0');
    out.limbs_.push_back(limb);
    pos -= take;
  }
  out.trim();
  return out;
}

std::string BigUint::toDecimal() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  char buf[16];
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    out += buf;
  }
  return out;
}

bool BigUint::fitsU64() const {
  if (limbs_.size() > 3) return false;
  if (limbs_.size() < 3) return true;
  // max u64 = 18446744073709551615 = [709551615, 446744073, 18]
  if (limbs_[2] != 18) return limbs_[2] < 18;
  if (limbs_[1] != 446744073) return limbs_[1] < 446744073;
  return limbs_[0] <= 709551615;
}

uint64_t BigUint::toU64() const {
  if (!fitsU64()) throw TooLargeError("value does not fit in 64 bits");
  uint64_t v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * kLimbBase + limbs_[i];
  return v;
}

uint64_t BigUint::digitCount() const {
  if (limbs_.empty()) return 1;
  uint64_t count = (limbs_.size() - 1) * kLimbDigits;
  uint32_t top = limbs_.back();
  while (top != 0) {
    ++count;
    top /= 10;
  }
  return count;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  uint32_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t sum = static_cast<uint64_t>(limbs_[i]) + carry + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<uint32_t>(sum % kLimbBase);
    carry = static_cast<uint32_t>(sum / kLimbBase);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (compare(*this, o) < 0) throw DomainError("BigUint subtraction underflow");
  int64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    int64_t diff = static_cast<int64_t>(limbs_[i]) - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0);
    if (diff < 0) {
      diff += kLimbBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<uint32_t>(diff);
  }
  trim();
  return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  if (a.limbs_.empty() || b.limbs_.empty()) return BigUint();
  BigUint out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = out.limbs_[i + j] + carry + static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j];
      out.limbs_[i + j] = static_cast<uint32_t>(cur % kLimbBase);
      carry = cur / kLimbBase;
    }
    size_t k = i + b.limbs_.size();
    while (carry) {
      uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<uint32_t>(cur % kLimbBase);
      carry = cur / kLimbBase;
      ++k;
    }
  }
  out.trim();
  return out;
}

uint32_t BigUint::divmodSmall(uint32_t d) {
  if (d == 0) throw DomainError("division by zero");
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t cur = rem * kLimbBase + limbs_[i];
    limbs_[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<uint32_t>(rem);
}

// ---------------------------------------------------------------------------
// Nat

namespace {

uint64_t u64DigitCount(uint64_t v) {
  uint64_t n = 1;
  while (v >= 10) {
    v /= 10;
    ++n;
  }
  return n;
}

// Splits a literal digit string into 9-terminated chunks plus an optional
// trailing remainder with no '9'.
template <typename Fn>
void splitAtNines(std::string_view digits, Fn&& fn) {
  size_t start = 0;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == '9') {
      fn(digits.substr(start, i - start + 1));
      start = i + 1;
    }
  }
  if (start < digits.size()) fn(digits.substr(start));
}

}  // namespace

Nat::Nat(const BigUint& b) {
  if (b.fitsU64()) {
    rep_ = b.toU64();
  } else {
    if (b.digitCount() > kExpandLimit) throw TooLargeError("plain natural exceeds expansion limit");
    rep_ = std::make_shared<const BigUint>(b);
  }
}

Nat Nat::fromDecimal(std::string_view digits) {
  size_t start = 0;
  while (start + 1 < digits.size() && digits[start] == '0') ++start;
  digits = digits.substr(start);
  if (digits.size() > kExpandLimit) {
    CodeBuilder b;
    b.append(digits);
    return b.take();
  }
  return Nat(BigUint::fromDecimal(digits));
}

bool Nat::isZero() const {
  return fitsU64() && std::get<uint64_t>(rep_) == 0;
}

uint64_t Nat::asU64() const {
  if (!fitsU64()) throw TooLargeError("value does not fit in 64 bits");
  return std::get<uint64_t>(rep_);
}

BigUint Nat::toBigUint() const {
  if (fitsU64()) return BigUint(std::get<uint64_t>(rep_));
  if (auto* p = std::get_if<BigPtr>(&rep_)) return **p;
  throw TooLargeError("run-compressed value cannot be expanded");
}

BigUint Nat::digitCount() const {
  if (fitsU64()) return BigUint(u64DigitCount(std::get<uint64_t>(rep_)));
  if (auto* p = std::get_if<BigPtr>(&rep_)) return BigUint((*p)->digitCount());
  return runRep().totalDigits;
}

std::string Nat::toDecimal() const {
  if (fitsU64()) return std::to_string(std::get<uint64_t>(rep_));
  if (auto* p = std::get_if<BigPtr>(&rep_)) return (*p)->toDecimal();
  throw TooLargeError("run-compressed value cannot be printed in full");
}

void Nat::forEachRun(const std::function<void(std::string_view, const BigUint&)>& fn) const {
  static const BigUint one(1);
  if (isRunForm()) {
    for (const DigitRun& r : runRep().runs) fn(r.chunk, r.count);
  } else {
    fn(toDecimal(), one);
  }
}

namespace {

// Cursor over the digit expansion of a run list.
struct RunCursor {
  const std::vector<DigitRun>* runs;
  size_t ri = 0;
  BigUint repsLeft;  // repetitions left of runs[ri], including the current one
  size_t pos = 0;    // position within the current repetition

  explicit RunCursor(const std::vector<DigitRun>& r) : runs(&r) {
    if (!r.empty()) repsLeft = r[0].count;
  }
  bool done() const { return ri >= runs->size(); }
  const std::string& chunk() const { return (*runs)[ri].chunk; }
  char peek() const { return chunk()[pos]; }
  void advanceChar() {
    if (++pos == chunk().size()) {
      pos = 0;
      repsLeft -= BigUint(1);
      if (repsLeft.isZero()) {
        ++ri;
        if (ri < runs->size()) repsLeft = (*runs)[ri].count;
      }
    }
  }
  // Skips n full repetitions of the current chunk; only valid at pos == 0
  // with n <= repsLeft.
  void skipReps(const BigUint& n) {
    repsLeft -= n;
    if (repsLeft.isZero()) {
      ++ri;
      if (ri < runs->size()) repsLeft = (*runs)[ri].count;
    }
  }
};

int lexCompareRuns(const std::vector<DigitRun>& a, const std::vector<DigitRun>& b) {
  RunCursor ca(a), cb(b);
  uint64_t steps = 0;
  while (!ca.done() && !cb.done()) {
    if (ca.pos == 0 && cb.pos == 0 && ca.chunk() == cb.chunk()) {
      const BigUint& n = ca.repsLeft <= cb.repsLeft ? ca.repsLeft : cb.repsLeft;
      BigUint skip = n;
      ca.skipReps(skip);
      cb.skipReps(skip);
      continue;
    }
    char x = ca.peek(), y = cb.peek();
    if (x != y) return x < y ? -1 : 1;
    ca.advanceChar();
    cb.advanceChar();
    if (++steps > 10000000) throw TooLargeError("run comparison exceeded step limit");
  }
  if (ca.done() && cb.done()) return 0;
  return ca.done() ? -1 : 1;
}

}  // namespace

int Nat::compare(const Nat& a, const Nat& b) {
  if (a.fitsU64() && b.fitsU64()) {
    uint64_t x = std::get<uint64_t>(a.rep_), y = std::get<uint64_t>(b.rep_);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  int byLen = BigUint::compare(a.digitCount(), b.digitCount());
  if (byLen != 0) return byLen;
  bool ra = a.isRunForm(), rb = b.isRunForm();
  if (!ra && !rb) return BigUint::compare(a.toBigUint(), b.toBigUint());
  if (ra != rb) {
    // Run form implies more than kExpandLimit digits, plain implies fewer, so
    // equal digit counts cannot mix forms.
    throw TooLargeError("inconsistent number representations");
  }
  const auto& runsA = a.runRep().runs;
  const auto& runsB = b.runRep().runs;
  if (runsA.size() == runsB.size()) {
    bool same = true;
    for (size_t i = 0; i < runsA.size(); ++i) {
      if (runsA[i].chunk != runsB[i].chunk || runsA[i].count != runsB[i].count) {
        same = false;
        break;
      }
    }
    if (same) return 0;
  }
  return lexCompareRuns(runsA, runsB);
}

Nat operator+(const Nat& a, const Nat& b) {
  if (a.fitsU64() && b.fitsU64()) {
    uint64_t x = a.asU64(), y = b.asU64();
    uint64_t s = x + y;
    if (s >= x) return Nat(s);
  }
  return Nat(a.toBigUint() + b.toBigUint());
}

Nat operator*(const Nat& a, const Nat& b) {
  if (a.fitsU64() && b.fitsU64()) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.asU64()) * b.asU64();
    if (p <= UINT64_MAX) return Nat(static_cast<uint64_t>(p));
  }
  return Nat(a.toBigUint() * b.toBigUint());
}

std::string Nat::display(size_t maxDigits) const {
  BigUint len = digitCount();
  if (len <= BigUint(maxDigits)) return toDecimal();
  constexpr size_t kHead = 30, kTail = 12;
  if (!isRunForm()) {
    std::string s = toDecimal();
    return s.substr(0, kHead) + "..." + s.substr(s.size() - kTail) + " [" + len.toDecimal() + " digits]";
  }
  const auto& runs = runRep().runs;
  // Only enough repetitions to fill the windows are ever taken, so counts
  // beyond u64 can be clamped to a window-covering bound.
  auto clampedReps = [](const BigUint& count, size_t window) {
    uint64_t cap = static_cast<uint64_t>(window) + 1;
    if (!count.fitsU64()) return cap;
    return std::min(count.toU64(), cap);
  };
  std::string head;
  for (const DigitRun& r : runs) {
    uint64_t reps = clampedReps(r.count, kHead);
    for (uint64_t i = 0; i < reps && head.size() < kHead; ++i) {
      head.append(r.chunk, 0, std::min(r.chunk.size(), kHead - head.size()));
    }
    if (head.size() >= kHead) break;
  }
  std::string tailRev;
  for (size_t i = runs.size(); i-- > 0 && tailRev.size() < kTail;) {
    const DigitRun& r = runs[i];
    uint64_t reps = clampedReps(r.count, kTail);
    for (uint64_t j = 0; j < reps && tailRev.size() < kTail; ++j) {
      for (size_t k = r.chunk.size(); k-- > 0 && tailRev.size() < kTail;) tailRev.push_back(r.chunk[k]);
    }
  }
  std::string tail(tailRev.rbegin(), tailRev.rend());
  return head + "..." + tail + " [" + len.toDecimal() + " digits]";
}

// ---------------------------------------------------------------------------
// CodeBuilder

void CodeBuilder::push(std::string_view chunk, const BigUint& count) {
  if (chunk.empty() || count.isZero()) return;
  if (!runs_.empty() && runs_.back().chunk == chunk) {
    runs_.back().count += count;
  } else {
    runs_.push_back(DigitRun{std::string(chunk), count});
  }
  totalDigits_ += BigUint(chunk.size()) * count;
}

void CodeBuilder::append(std::string_view digits) {
  static const BigUint one(1);
  splitAtNines(digits, [&](std::string_view part) { push(part, one); });
}

void CodeBuilder::appendRun(std::string_view chunk, const BigUint& count) {
  if (count.isZero() || chunk.empty()) return;
  if (count.fitsU64() && count.toU64() == 1) {
    append(chunk);
    return;
  }
  if (chunk.back() != '9' || chunk.find('9') != chunk.size() - 1)
    throw TooLargeError("repeated chunk must be a single 9-terminated code chunk");
  push(chunk, count);
}

void CodeBuilder::appendNat(const Nat& n) {
  if (n.isZero()) {
    append("0");
    return;
  }
  n.forEachRun([&](std::string_view chunk, const BigUint& count) {
    if (count.fitsU64() && count.toU64() == 1) {
      append(chunk);
    } else {
      appendRun(chunk, count);
    }
  });
}

Nat CodeBuilder::take() {
  if (totalDigits_.isZero()) return Nat(uint64_t{0});
  if (totalDigits_ <= BigUint(Nat::kExpandLimit)) {
    std::string digits;
    digits.reserve(totalDigits_.toU64());
    for (const DigitRun& r : runs_) {
      uint64_t reps = r.count.toU64();
      for (uint64_t i = 0; i < reps; ++i) digits += r.chunk;
    }
    runs_.clear();
    totalDigits_ = BigUint();
    return Nat::fromDecimal(digits);
  }
  for (const DigitRun& r : runs_) {
    if (r.chunk.back() != '9' || r.chunk.find('9') != r.chunk.size() - 1)
      throw TooLargeError("oversized value is not chunk-structured");
  }
  auto rep = std::make_shared<detail::RunRep>();
  rep->runs = std::move(runs_);
  rep->totalDigits = totalDigits_;
  runs_.clear();
  totalDigits_ = BigUint();
  return Nat(Nat::RunPtr(std::move(rep)));
}

}  // namespace paradox
