#pragma once

/**
 * @file bijection.hpp
 * @brief The Sturmian bijection between length-m factors and subintervals of [0, 1).
 *
 * For a slope alpha and a length m, the points 0, 1 and {-i alpha}
 * (1 <= i <= m), sorted, cut [0, 1) into m + 1 half-open intervals
 * L_k = [c_k, c_{k+1}). The factor a_n ... a_{n+m-1} of s_{alpha,rho}
 * depends only on which L_k contains {n alpha + rho}.
 */

#include "sturmian/exact.hpp"
#include "sturmian/words.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sturmian {

/// Raised when a point coincides with a partition point (only possible for
/// rational data).
class DegeneratePoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IntervalPartition {
 public:
  IntervalPartition(QuadraticNumber alpha, std::size_t m);

  const QuadraticNumber& alpha() const { return alpha_; }
  std::size_t length() const { return m_; }
  /// c_0 = 0 < c_1 < ... < c_{m+1} = 1.
  const std::vector<QuadraticNumber>& points() const { return points_; }
  /// {-i alpha} for i = 0..m (index 0 is 0), unsorted.
  const std::vector<QuadraticNumber>& orbit() const { return orbit_; }
  const QuadraticNumber& left(std::size_t k) const { return points_.at(k); }
  const QuadraticNumber& right(std::size_t k) const { return points_.at(k + 1); }
  std::size_t interval_count() const { return m_ + 1; }

  /// The k with x in [c_k, c_{k+1}). Throws DegeneratePoint if x equals an
  /// interior point c_1..c_m.
  std::size_t locate(const QuadraticNumber& x) const;

 private:
  QuadraticNumber alpha_;
  std::size_t m_;
  std::vector<QuadraticNumber> orbit_;
  std::vector<QuadraticNumber> points_;
};

enum class ParikhClass { v1, v2 };

struct FactorInterval {
  std::size_t k = 0;
  QuadraticNumber left;
  QuadraticNumber right;
  Word factor;
  ParikhClass parikh_class = ParikhClass::v1;
};

/// Throws DegeneratePoint on duplicate points (rational slopes).
IntervalPartition partition(const QuadraticNumber& alpha, std::size_t m);

/// a_{n+i} from the position of {n alpha + rho} relative to
/// {-(i+1) alpha} and {-i alpha}.
char letter_rule(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::uint64_t n, std::uint64_t i);

/// Factor of length m attached to L_k, built from the membership test on c_k.
Word interval_factor(const IntervalPartition& part, std::size_t k);
Word interval_factor(const QuadraticNumber& alpha, std::size_t m, std::size_t k);

/// One entry per interval, indexed by k.
std::vector<FactorInterval> all_factors(const IntervalPartition& part);
std::vector<FactorInterval> all_factors(const QuadraticNumber& alpha, std::size_t m);

/// Index of the interval holding {n alpha + rho}.
std::size_t locate(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::uint64_t n, std::size_t m);

struct ParikhSplit {
  ParikhVector v1;  // intervals at or right of the boundary
  ParikhVector v2;  // intervals left of the boundary
  QuadraticNumber boundary;  // {-m alpha}
};

/// Throws std::logic_error if a side carries two different Parikh vectors.
ParikhSplit parikh_split(const QuadraticNumber& alpha, std::size_t m);

/// Factors strictly decrease lexicographically in k.
bool verify_lex_order(const QuadraticNumber& alpha, std::size_t m);

/// Exactly two Parikh vectors split by {-m alpha}, with v1[a] = v2[a] + 1.
bool verify_parikh_dichotomy(const QuadraticNumber& alpha, std::size_t m);

}  // namespace sturmian
