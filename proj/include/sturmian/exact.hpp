#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic in real quadratic fields Q(sqrt d).
 *
 * A QuadraticNumber stores (p + q*sqrt(d)) / r with big-integer p, q, r.
 * Values are kept in canonical form:
 * - r > 0 and gcd(p, q, r) = 1
 * - d is square-free and > 1 whenever q != 0
 * - rationals (q == 0) carry d == 1 and mix freely with any field
 *
 * Every comparison is decided from p, q, r, d with integer arithmetic only.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sturmian {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when two operands live in different quadratic fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class QuadraticNumber {
 public:
  /// Zero.
  QuadraticNumber();
  /// The integer n.
  QuadraticNumber(BigInt n);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(int n) : QuadraticNumber(BigInt(n)) {}  // NOLINT

  /// (p + q*sqrt(d)) / r. A d with square factors is reduced, so
  /// make(0, 1, 1, 8) is 2*sqrt(2). Throws on r == 0 or d < 1.
  static QuadraticNumber make(BigInt p, BigInt q, BigInt r, std::int64_t d);
  static QuadraticNumber rational(BigInt num, BigInt den);
  static QuadraticNumber sqrt(std::int64_t d);
  /// (1 + sqrt 5) / 2.
  static QuadraticNumber golden_ratio();

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  std::int64_t d() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  bool is_integer() const { return q_ == 0 && r_ == 1; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs += rhs; }
  friend QuadraticNumber operator-(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs -= rhs; }
  friend QuadraticNumber operator*(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs *= rhs; }
  friend QuadraticNumber operator/(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs /= rhs; }

  /// Canonical forms are unique, so equality is field-wise.
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_;
  }
  /// Exact ordering; throws FieldMismatch across incompatible fields.
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

 private:
  QuadraticNumber(BigInt p, BigInt q, BigInt r, std::int64_t d, bool canonical);
  void normalize();
  std::int64_t joint_field(const QuadraticNumber& rhs) const;

  BigInt p_;
  BigInt q_;
  BigInt r_;
  std::int64_t d_;
};

/// Exact sign of x: -1, 0 or +1.
int qsign(const QuadraticNumber& x);
QuadraticNumber qabs(const QuadraticNumber& x);
/// Largest integer k with k <= x.
BigInt qfloor(const QuadraticNumber& x);
/// x - floor(x), always in [0, 1).
QuadraticNumber qfrac(const QuadraticNumber& x);

/// Floor division for big integers (boost truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b);

/// x rounded to `digits` fractional digits, ties to even.
std::string approx_decimal(const QuadraticNumber& x, int digits);

/// `quad:p,q,r,d` for irrationals, `ratio:n/m` for rationals.
std::string to_string(const QuadraticNumber& x);

/// Accepts `quad:p,q,r,d`, `ratio:n/m`, `n/m` or a bare integer.
/// Throws std::invalid_argument on malformed text.
QuadraticNumber parse_quadratic(std::string_view text);

/// Square-free test for small positive integers.
bool is_square_free(std::int64_t d);

}  // namespace sturmian
