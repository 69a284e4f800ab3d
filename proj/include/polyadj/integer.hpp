#pragma once

// Exact integers and rationals used throughout the library. Nothing in
// polyadj touches floating point.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyadj {

using Integer = boost::multiprecision::cpp_int;

/// Floor of a / b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
/// Ceiling of a / b for b != 0.
Integer ceil_div(const Integer& a, const Integer& b);
/// Non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b);

std::optional<std::int64_t> to_int64(const Integer& a);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& a);

/// Reduced fraction num/den with den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer num) : num_(std::move(num)), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(std::int64_t num) : num_(num), den_(1) {}        // NOLINT
  Rational(int num) : num_(num), den_(1) {}                 // NOLINT
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  Integer floor() const { return floor_div(num_, den_); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den", always with an explicit denominator.
  std::string str() const;
  /// Accepts "num/den" or a bare integer.
  static Rational parse(const std::string& text);

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polyadj
