#include "sturmian/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace sturmian {

namespace {

// Membership of x in the set where the letter at offset i is 'a', given
// lo = {-(i+1) alpha} and hi = {-i alpha}.
template <typename T>
bool is_a_letter(const T& x, const T& lo, const T& hi) {
  if (lo < hi) return lo <= x && x < hi;
  return !(hi <= x && x < lo);
}

}  // namespace

IntervalPartition::IntervalPartition(QuadraticNumber alpha, std::size_t m) : alpha_(std::move(alpha)), m_(m) {
  if (m_ < 1) throw std::invalid_argument("partition: m must be positive");
  if (qsign(alpha_) <= 0 || alpha_ >= QuadraticNumber(1)) throw std::invalid_argument("partition: slope must lie in (0, 1)");

  orbit_.reserve(m_ + 1);
  orbit_.emplace_back(0);
  const QuadraticNumber one(1);
  const QuadraticNumber step = one - alpha_;  // {-alpha}
  QuadraticNumber x;
  for (std::size_t i = 1; i <= m_; ++i) {
    x += step;
    if (x >= one) x -= one;
    orbit_.push_back(x);
  }

  points_.assign(orbit_.begin(), orbit_.end());
  std::sort(points_.begin() + 1, points_.end());
  points_.push_back(one);
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
    if (!(points_[k] < points_[k + 1])) {
      throw DegeneratePoint("partition: repeated point " + to_string(points_[k]) + " for slope " + to_string(alpha_));
    }
  }
}

std::size_t IntervalPartition::locate(const QuadraticNumber& x) const {
  if (qsign(x) < 0 || x >= QuadraticNumber(1)) throw std::invalid_argument("locate: point must lie in [0, 1)");
  const auto it = std::upper_bound(points_.begin(), points_.end(), x);
  const auto k = static_cast<std::size_t>(it - points_.begin()) - 1;
  if (k >= 1 && points_[k] == x) {
    throw DegeneratePoint("locate: point " + to_string(x) + " coincides with partition point c_" + std::to_string(k));
  }
  return k;
}

IntervalPartition partition(const QuadraticNumber& alpha, std::size_t m) { return IntervalPartition(alpha, m); }

char letter_rule(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::uint64_t n, std::uint64_t i) {
  if (n < 1) throw std::invalid_argument("letter_rule: n must be positive");
  const QuadraticNumber x = qfrac(QuadraticNumber(BigInt(n)) * alpha + rho);
  const QuadraticNumber hi = qfrac(-(QuadraticNumber(BigInt(i)) * alpha));
  const QuadraticNumber lo = qfrac(-(QuadraticNumber(BigInt(i + 1)) * alpha));
  return is_a_letter(x, lo, hi) ? 'a' : 'b';
}

namespace {

// Position of each orbit point among the sorted partition points, so that
// comparisons of c_k against orbit points reduce to index comparisons.
std::vector<std::size_t> orbit_ranks(const IntervalPartition& part) {
  const auto& pts = part.points();
  std::vector<std::size_t> ranks;
  ranks.reserve(part.orbit().size());
  for (const auto& x : part.orbit()) {
    const auto it = std::lower_bound(pts.begin(), pts.end(), x);
    ranks.push_back(static_cast<std::size_t>(it - pts.begin()));
  }
  return ranks;
}

Word factor_from_ranks(const std::vector<std::size_t>& ranks, std::size_t m, std::size_t k) {
  std::string letters(m, 'b');
  for (std::size_t i = 0; i < m; ++i) {
    if (is_a_letter(k, ranks[i + 1], ranks[i])) letters[i] = 'a';
  }
  return Word(std::move(letters));
}

}  // namespace

Word interval_factor(const IntervalPartition& part, std::size_t k) {
  if (k > part.length()) throw std::out_of_range("interval_factor: k exceeds m");
  return factor_from_ranks(orbit_ranks(part), part.length(), k);
}

Word interval_factor(const QuadraticNumber& alpha, std::size_t m, std::size_t k) {
  return interval_factor(partition(alpha, m), k);
}

std::vector<FactorInterval> all_factors(const IntervalPartition& part) {
  const auto ranks = orbit_ranks(part);
  const std::size_t boundary_rank = ranks[part.length()];
  std::vector<FactorInterval> out;
  out.reserve(part.interval_count());
  for (std::size_t k = 0; k <= part.length(); ++k) {
    FactorInterval f;
    f.k = k;
    f.left = part.left(k);
    f.right = part.right(k);
    f.factor = factor_from_ranks(ranks, part.length(), k);
    f.parikh_class = k >= boundary_rank ? ParikhClass::v1 : ParikhClass::v2;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FactorInterval> all_factors(const QuadraticNumber& alpha, std::size_t m) {
  return all_factors(partition(alpha, m));
}

std::size_t locate(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::uint64_t n, std::size_t m) {
  if (n < 1) throw std::invalid_argument("locate: n must be positive");
  return partition(alpha, m).locate(qfrac(QuadraticNumber(BigInt(n)) * alpha + rho));
}

ParikhSplit parikh_split(const QuadraticNumber& alpha, std::size_t m) {
  const IntervalPartition part = partition(alpha, m);
  std::optional<ParikhVector> v1;
  std::optional<ParikhVector> v2;
  for (const auto& f : all_factors(part)) {
    auto& slot = f.parikh_class == ParikhClass::v1 ? v1 : v2;
    ParikhVector pv = parikh(f.factor);
    if (slot && *slot != pv) {
      throw std::logic_error("parikh_split: interval " + std::to_string(f.k) + " breaks the two-vector split");
    }
    slot = std::move(pv);
  }
  // Both sides are non-empty: 0 < {-m alpha} < 1.
  return ParikhSplit{*v1, *v2, part.orbit()[m]};
}

bool verify_lex_order(const QuadraticNumber& alpha, std::size_t m) {
  const auto factors = all_factors(alpha, m);
  for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
    if (!(factors[k].factor > factors[k + 1].factor)) return false;
  }
  return true;
}

bool verify_parikh_dichotomy(const QuadraticNumber& alpha, std::size_t m) {
  try {
    const ParikhSplit split = parikh_split(alpha, m);
    return split.v1 != split.v2 && split.v1[0] == split.v2[0] + 1 && split.v1.norm() == m && split.v2.norm() == m;
  } catch (const std::logic_error&) {
    return false;
  }
}

}  // namespace sturmian
