#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "toric/common.hpp"

namespace toric {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown by the int64 fast lane when an operation would wrap; the caller
/// reruns the same computation on the BigInt lane (see run_lanes).
struct LaneOverflow : std::runtime_error {
  LaneOverflow() : std::runtime_error("int64 kernel lane overflowed") {}
};

/// int64 whose arithmetic throws LaneOverflow instead of wrapping. Exact
/// kernels (SNF, Bareiss, Fourier-Motzkin) are templated on the scalar so the
/// common small-number case runs at native speed while staying exact.
struct Checked64 {
  std::int64_t v = 0;

  Checked64() = default;
  Checked64(std::int64_t x) : v(x) {}
  Checked64(int x) : v(x) {}

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw LaneOverflow();
    return Checked64(r);
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw LaneOverflow();
    return Checked64(r);
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw LaneOverflow();
    return Checked64(r);
  }
  friend Checked64 operator-(Checked64 a) { return Checked64(0) - a; }
  // Truncating division like built-in integers; INT64_MIN/-1 is the one case
  // that overflows.
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v == -1 && a.v == INT64_MIN) throw LaneOverflow();
    return Checked64(a.v / b.v);
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v == -1 && a.v == INT64_MIN) throw LaneOverflow();
    return Checked64(a.v % b.v);
  }
  Checked64& operator+=(Checked64 b) { return *this = *this + b; }
  Checked64& operator-=(Checked64 b) { return *this = *this - b; }
  Checked64& operator*=(Checked64 b) { return *this = *this * b; }

  friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
  friend std::strong_ordering operator<=>(Checked64 a, Checked64 b) {
    return a.v <=> b.v;
  }
};

inline Checked64 abs_val(Checked64 a) { return a.v < 0 ? -a : a; }
inline BigInt abs_val(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline Checked64 gcd_val(Checked64 a, Checked64 b) {
  return Checked64(std::gcd(abs_val(a).v, abs_val(b).v));
}
inline BigInt gcd_val(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt to_big(Checked64 a) { return BigInt(a.v); }
inline const BigInt& to_big(const BigInt& a) { return a; }

inline std::int64_t to_int64(const BigInt& v) {
  if (v < INT64_MIN || v > INT64_MAX) throw Error("value exceeds int64 range");
  return static_cast<std::int64_t>(v);
}
inline std::int64_t to_int64(Checked64 v) { return v.v; }

/// Floor division (toward minus infinity) for any exact integer type.
template <class T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  if (a % b != T(0) && ((a < T(0)) != (b < T(0)))) q -= T(1);
  return q;
}

/// Runs f on the checked int64 lane; on overflow reruns it with BigInt.
/// f receives a scalar tag value: f(Checked64{}) or f(BigInt{}).
template <class F>
auto run_lanes(F&& f) {
  try {
    return f(Checked64{});
  } catch (const LaneOverflow&) {
  }
  return f(BigInt{});
}

}  // namespace toric
