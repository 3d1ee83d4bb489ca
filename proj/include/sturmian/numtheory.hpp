#pragma once

// Fibonacci numbers, continued fractions and the classical approximation
// statements, all decided exactly.

#include "sturmian/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace sturmian {

/// F_0 = F_1 = 1, F_{j+1} = F_j + F_{j-1}.
BigInt fibonacci(std::size_t j);

struct ContinuedFraction {
  /// a_0; a_1, a_2, ... (a_i >= 1 for i >= 1).
  std::vector<BigInt> coefficients;
  /// True when the expansion ended because the value is rational.
  bool terminated = false;
};

/// Convergent n_i / m_i. Index 0 is a_0 / 1, so for phi - 1 the sequence
/// starts 0/1, 1/1, 1/2, ... and m_i == fibonacci(i).
struct Convergent {
  BigInt numerator;
  BigInt denominator;
  std::size_t index = 0;

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// First `count` coefficients by the exact Gauss map. Requires alpha > 0.
ContinuedFraction cf_expand(const QuadraticNumber& alpha, std::size_t count);

std::vector<Convergent> convergents(const QuadraticNumber& alpha, std::size_t count);
std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// Convergents of alpha with denominator <= max_denominator.
std::vector<Convergent> convergents_up_to(const QuadraticNumber& alpha, const BigInt& max_denominator);

struct GoldenIdentity {
  QuadraticNumber phi_side;     // phi - F_{j+1}/F_j
  QuadraticNumber alpha_side;   // (phi - 1) - F_{j-1}/F_j
  QuadraticNumber closed_form;  // (-1)^j / (F_j (phi F_j + F_{j-1}))
  bool equal = false;
};

/// Both sides of the golden-ratio convergent identity for j > 0.
GoldenIdentity golden_identity_check(std::size_t j);

/// The integer nearest to x; x must not lie on a half-integer.
BigInt nearest_integer(const QuadraticNumber& x);

/// Best-approximation property of the i-th convergent (i > 1): every
/// 0 < m <= m_i with n/m != n_i/m_i has |n_i - m_i alpha| < |n - m alpha|.
bool best_approx_check(const QuadraticNumber& alpha, std::size_t i);

/// Coprime (n, m) with 1 <= m <= max_m and |n/m - alpha| < 1/(A m^2).
/// A must be a positive rational.
std::vector<std::pair<BigInt, BigInt>> hurwitz_solutions(const QuadraticNumber& alpha, const QuadraticNumber& A,
                                                         std::uint64_t max_m);

/// For m > 1: {i alpha} >= {m alpha} for all 1 <= i < m when {m alpha} < 1/2,
/// and {i alpha} <= {m alpha} for all such i otherwise.
bool side_condition_holds(const QuadraticNumber& alpha, std::uint64_t m);

}  // namespace sturmian
