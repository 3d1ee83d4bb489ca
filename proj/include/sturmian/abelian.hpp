#pragma once

/**
 * @file abelian.hpp
 * @brief Brute-force abelian repetitions.
 *
 * A factorization of period m writes w = u_0 u_1 ... u_b u_{b+1} where the
 * b inner blocks share one Parikh vector P of norm m, and the head u_0 and
 * tail u_{b+1} (each shorter than m, possibly empty) have Parikh vectors
 * contained in P. Two tiers are used:
 *
 * - relaxed: any b >= 1. This is what the minimal abelian period uses.
 * - repetition: additionally |w| >= 2m (exponent at least 2).
 *
 * Everything here works on explicit words and serves as ground truth for
 * the closed forms in formulas.hpp.
 */

#include "sturmian/exact.hpp"
#include "sturmian/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sturmian {

enum class Tier { relaxed, repetition };

struct AbelianFactorization {
  std::size_t period = 0;
  std::size_t head = 0;
  std::size_t blocks = 0;
  std::size_t tail = 0;
  ParikhVector block_parikh;

  std::size_t length() const { return head + blocks * period + tail; }
  /// |w| / m as an exact rational.
  QuadraticNumber exponent() const;

  friend bool operator==(const AbelianFactorization&, const AbelianFactorization&) = default;
};

/// Prefix letter counts for O(sigma) Parikh vectors of arbitrary factors.
class ParikhIndex {
 public:
  ParikhIndex(const Word& w, const Alphabet& alphabet);
  explicit ParikhIndex(const Word& w) : ParikhIndex(w, Alphabet::of(w.str())) {}

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return length_; }
  /// Parikh vector of the 0-based half-open range [begin, end).
  ParikhVector range(std::size_t begin, std::size_t end) const;
  /// Componentwise equality of two ranges without materializing vectors.
  bool same_parikh(std::size_t b1, std::size_t e1, std::size_t b2, std::size_t e2) const;
  /// Whether range [begin, end) is contained in the vector of [pb, pe).
  bool contained_in(std::size_t begin, std::size_t end, std::size_t pb, std::size_t pe) const;

 private:
  std::uint64_t count(std::size_t letter, std::size_t pos) const { return counts_[pos * sigma_ + letter]; }

  Alphabet alphabet_;
  std::size_t length_;
  std::size_t sigma_;
  std::vector<std::uint64_t> counts_;
};

/// The factorization of w with period m and head length h, if the block,
/// head and tail constraints hold with b >= 1. Requires 1 <= m <= |w| and
/// h < m; the alphabet defaults to the letters of w.
std::optional<AbelianFactorization> check_factorization(const Word& w, std::size_t m, std::size_t h);
std::optional<AbelianFactorization> check_factorization(const ParikhIndex& index, std::size_t m, std::size_t h);

/// Smallest period (then smallest head) admitting a factorization in the
/// given tier. Relaxed always succeeds for non-empty w.
std::optional<AbelianFactorization> min_abelian_period(const Word& w, Tier tier = Tier::relaxed);

/// Number of consecutive m-blocks starting at 1-based `start` that share
/// the first block's Parikh vector.
std::size_t max_power_run(const Word& prefix, std::size_t m, std::size_t start);
std::size_t max_power_run(const ParikhIndex& index, std::size_t m, std::size_t start);

/// First 1-based start s <= max_start with k consecutive equal m-blocks
/// inside the word.
std::optional<std::size_t> find_abelian_power(const ParikhIndex& index, std::size_t m, std::size_t k,
                                              std::size_t max_start);

struct PowerOverStarts {
  std::size_t exponent = 0;
  /// Every start in 1..m achieving the exponent, ascending.
  std::vector<std::size_t> starts;
};

/// Longest abelian power of period m starting at a position <= m in s_alpha.
PowerOverStarts best_power_over_starts_period(const QuadraticNumber& alpha, std::size_t m);
/// Same with m = F_j.
PowerOverStarts best_power_over_starts(const QuadraticNumber& alpha, std::size_t j);

/// min({m alpha}, {-m alpha}).
QuadraticNumber distance_to_integer(const QuadraticNumber& alpha, std::uint64_t m);

/// Prefix length that provably contains every abelian repetition of period
/// m anchored at the start: m * (ceil(1 / min({m alpha}, {-m alpha})) + 4).
std::uint64_t prefix_search_window(const QuadraticNumber& alpha, std::uint64_t m);

struct PrefixRepetition {
  std::size_t length = 0;
  AbelianFactorization factorization;
};

/// Longest prefix of s_alpha that is an abelian repetition of period m
/// (repetition tier). Irrational alpha only.
std::optional<PrefixRepetition> longest_prefix_rep(const QuadraticNumber& alpha, std::size_t m);
/// Same search on an explicit word; the caller guarantees the word is long
/// enough for the answer not to touch its end.
std::optional<PrefixRepetition> longest_prefix_rep(const ParikhIndex& index, std::size_t m);

/// Side-aware test {m alpha} < 1/k (or 1/(k+1) when strong), using
/// {-m alpha} when {m alpha} > 1/2.
bool theorem6_predicate(const QuadraticNumber& alpha, std::uint64_t m, std::uint64_t k, bool strong);

/// The k+1 points {(n + t m) alpha}, 0 <= t <= k, lie on one side of
/// {-m alpha} and are monotone (increasing iff {m alpha} < 1/2).
bool power_points_check(const QuadraticNumber& alpha, std::uint64_t n, std::uint64_t m, std::uint64_t k);

/// Longest abelian repetition of period m (repetition tier, head and tail
/// allowed) occurring anywhere in `w`, as the exact exponent |u|/m.
std::optional<QuadraticNumber> max_repetition_exponent(const ParikhIndex& index, std::size_t m);

/// max_repetition_exponent over the length-N prefix of s_alpha.
std::optional<QuadraticNumber> k_m_empirical(const QuadraticNumber& alpha, std::size_t m, std::size_t length);

}  // namespace sturmian
