#pragma once

#include <cstdint>

#include "socle3/error.hpp"
#include "socle3/rational.hpp"

namespace socle3 {

// Integers modulo the Mersenne prime 2^61 - 1. Used only by the heuristic fast path of the
// resolution: ranks over this field agree with ranks over Q except on a thin set of inputs.
class PrimeField {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr PrimeField() = default;
  constexpr PrimeField(int v) : v_(v >= 0 ? std::uint64_t(v) : kModulus - std::uint64_t(-std::int64_t(v))) {}
  static constexpr PrimeField raw(std::uint64_t v) {
    PrimeField f;
    f.v_ = v;
    return f;
  }
  // Reduction of a rational whose denominator is prime to the modulus.
  static PrimeField from_rational(const Rational& q);

  constexpr std::uint64_t value() const { return v_; }

  friend constexpr PrimeField operator+(PrimeField a, PrimeField b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= kModulus) s -= kModulus;
    return raw(s);
  }
  friend constexpr PrimeField operator-(PrimeField a, PrimeField b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kModulus - b.v_);
  }
  constexpr PrimeField operator-() const { return raw(v_ == 0 ? 0 : kModulus - v_); }
  friend constexpr PrimeField operator*(PrimeField a, PrimeField b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(p) & kModulus;
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kModulus) s -= kModulus;
    return raw(s);
  }
  friend PrimeField operator/(PrimeField a, PrimeField b) { return a * b.inverse(); }
  PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
  PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
  PrimeField& operator*=(PrimeField o) { return *this = *this * o; }

  PrimeField inverse() const {
    if (v_ == 0) throw PreconditionError("division by zero in prime field");
    // Fermat: a^(p-2).
    PrimeField result(1), base = *this;
    std::uint64_t e = kModulus - 2;
    while (e) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend constexpr bool operator==(PrimeField a, PrimeField b) { return a.v_ == b.v_; }
  friend constexpr bool operator==(PrimeField a, int b) { return a == PrimeField(b); }

 private:
  std::uint64_t v_ = 0;
};

inline PrimeField PrimeField::from_rational(const Rational& q) {
  const Integer m(static_cast<unsigned long>(kModulus));
  Integer num = q.get_num() % m;
  if (num < 0) num += m;
  Integer den = q.get_den() % m;
  if (den == 0) throw PreconditionError("rational denominator divisible by the field modulus");
  return raw(num.get_ui()) / raw(den.get_ui());
}

}  // namespace socle3
