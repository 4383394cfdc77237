#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace torusgraph {

// Overflow throws std::overflow_error instead of wrapping.
using Integer = boost::multiprecision::checked_int128_t;
using Rational = boost::rational<Integer>;

/// Point or vector in the universal cover of the torus, the plane R^2.
struct Vec2 {
  Rational x{0};
  Rational y{0};

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// Element of Z^2: deck translations of the plane over the torus.
struct LatticeVector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticeVector operator-(LatticeVector a) { return {-a.x, -a.y}; }
};

inline Vec2 to_vec2(LatticeVector t) { return {Rational(Integer(t.x)), Rational(Integer(t.y))}; }

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// Largest integer <= r.
inline Integer floor_of(const Rational& r) {
  Integer q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) q -= 1;
  return q;
}

inline Integer ceil_of(const Rational& r) { return -floor_of(-r); }

/// `num/den` in lowest terms, or a bare integer.
inline std::string to_string(const Rational& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Vec2& p) {
  return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
}

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& t) {
  return os << '(' << t.x << ", " << t.y << ')';
}

}  // namespace torusgraph
