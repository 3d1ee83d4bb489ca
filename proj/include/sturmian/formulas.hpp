#pragma once

// Closed-form predictions for the Fibonacci word. Kept apart from the
// brute-force searches in abelian.hpp so each can check the other.

#include "sturmian/exact.hpp"

#include <cstddef>
#include <string>

namespace sturmian {

/// Exponent of the longest abelian power of period F_j starting at a
/// position <= F_j: F_{j+1} + F_{j-1} - 1 (j even) or - 2 (j odd).
/// Cross-checked against floor(phi F_j + F_{j-1}) - 1; throws
/// std::logic_error if the two disagree. Requires j > 1.
BigInt max_exp_formula(std::size_t j);

/// floor(phi F_j + F_{j-1}) - 1, evaluated exactly.
BigInt max_exp_floor(std::size_t j);

/// Length of the longest prefix of the Fibonacci word that is an abelian
/// repetition of period F_j. Requires j > 1.
BigInt lp_formula(std::size_t j);

/// Index n with abelian period of f_j equal to F_n: floor(j/2), plus one
/// when j = 3 mod 4. Requires j >= 3.
std::size_t min_ab_period_index(std::size_t j);
BigInt min_ab_period_fib(std::size_t j);

/// |sqrt 5 - lp(F_j) / F_j^2|, exactly.
QuadraticNumber sqrt5_gap(std::size_t j);
/// 100 * sqrt5_gap(j) rounded to `digits` fractional digits.
std::string sqrt5_gap_percent(std::size_t j, int digits);

struct FibPrediction {
  std::size_t j = 0;
  BigInt period;
  BigInt max_power_exponent;
  BigInt lp;
  /// Only meaningful for j >= 3; zero otherwise.
  BigInt min_ab_period;
  QuadraticNumber sqrt5_gap;
};

FibPrediction predict(std::size_t j);

}  // namespace sturmian
