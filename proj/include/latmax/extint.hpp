#ifndef LATMAX_EXTINT_HPP
#define LATMAX_EXTINT_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>

namespace latmax {

/// Extended integer: a finite 64-bit value, -infinity, or +infinity.
///
/// DP tables use an explicit tag for the infeasible sentinel instead of a
/// large magic number, so max/plus arithmetic cannot overflow or leak
/// sentinels into ordinary values. Adding opposite infinities is a bug and
/// asserts.
class ExtInt {
 public:
  constexpr ExtInt() : v_(0), kind_(Kind::kFinite) {}

  static constexpr ExtInt of(std::int64_t v) { return ExtInt(v, Kind::kFinite); }
  static constexpr ExtInt neg_inf() { return ExtInt(0, Kind::kNegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(0, Kind::kPosInf); }

  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  constexpr std::int64_t value() const {
    assert(is_finite());
    return v_;
  }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_finite() && b.is_finite()) return of(a.v_ + b.v_);
    if (a.is_finite()) return b;
    if (b.is_finite()) return a;
    assert(a.kind_ == b.kind_);
    return a;
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.v_ == b.v_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Kind::kFinite) return std::strong_ordering::equal;
    return a.v_ <=> b.v_;
  }

  std::string str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "inf";
    return std::to_string(v_);
  }

 private:
  enum class Kind : std::int8_t { kNegInf = -1, kFinite = 0, kPosInf = 1 };
  constexpr ExtInt(std::int64_t v, Kind k) : v_(v), kind_(k) {}

  std::int64_t v_;
  Kind kind_;
};

/// A latency index: a round in {0, 1, ..., lambda} or infinity (meaning the
/// node is not influenced within the latency bound). Totally ordered with
/// infinity greatest.
class TauIndex {
 public:
  constexpr TauIndex() : v_(kInfSentinel) {}

  static constexpr TauIndex finite(int tau) {
    assert(tau >= 0);
    return TauIndex(tau);
  }
  static constexpr TauIndex infinity() { return TauIndex(kInfSentinel); }

  constexpr bool is_infinite() const { return v_ == kInfSentinel; }
  constexpr int value() const {
    assert(!is_infinite());
    return v_;
  }

  /// Row index in a table with rows 0..lambda plus one infinity row.
  constexpr int index(int lambda) const { return is_infinite() ? lambda + 1 : v_; }

  static constexpr TauIndex from_index(int idx, int lambda) {
    return idx == lambda + 1 ? infinity() : finite(idx);
  }

  friend constexpr bool operator==(TauIndex a, TauIndex b) { return a.v_ == b.v_; }

  friend constexpr bool operator<(TauIndex a, TauIndex b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(TauIndex a, TauIndex b) { return a == b || a < b; }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr int kInfSentinel = -1;
  explicit constexpr TauIndex(int v) : v_(v) {}
  int v_;
};

}  // namespace latmax

#endif
