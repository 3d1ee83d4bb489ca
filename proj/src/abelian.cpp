#include "sturmian/abelian.hpp"

#include "sturmian/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace sturmian {

QuadraticNumber AbelianFactorization::exponent() const {
  return QuadraticNumber::rational(BigInt(length()), BigInt(period));
}

ParikhIndex::ParikhIndex(const Word& w, const Alphabet& alphabet)
    : alphabet_(alphabet), length_(w.size()), sigma_(alphabet.size()), counts_((w.size() + 1) * alphabet.size(), 0) {
  for (std::size_t pos = 0; pos < length_; ++pos) {
    const std::size_t letter = alphabet_.index_of(w.str()[pos]);
    for (std::size_t c = 0; c < sigma_; ++c) counts_[(pos + 1) * sigma_ + c] = count(c, pos) + (c == letter ? 1 : 0);
  }
}

ParikhVector ParikhIndex::range(std::size_t begin, std::size_t end) const {
  std::vector<std::uint64_t> v(sigma_);
  for (std::size_t c = 0; c < sigma_; ++c) v[c] = count(c, end) - count(c, begin);
  return ParikhVector(std::move(v));
}

bool ParikhIndex::same_parikh(std::size_t b1, std::size_t e1, std::size_t b2, std::size_t e2) const {
  for (std::size_t c = 0; c < sigma_; ++c) {
    if (count(c, e1) - count(c, b1) != count(c, e2) - count(c, b2)) return false;
  }
  return true;
}

bool ParikhIndex::contained_in(std::size_t begin, std::size_t end, std::size_t pb, std::size_t pe) const {
  if (end - begin >= pe - pb) return false;
  for (std::size_t c = 0; c < sigma_; ++c) {
    if (count(c, end) - count(c, begin) > count(c, pe) - count(c, pb)) return false;
  }
  return true;
}

std::optional<AbelianFactorization> check_factorization(const ParikhIndex& index, std::size_t m, std::size_t h) {
  const std::size_t n = index.size();
  if (m < 1 || m > n) throw std::invalid_argument("check_factorization: need 1 <= m <= |w|");
  if (h >= m) throw std::invalid_argument("check_factorization: need h < m");
  const std::size_t t = (n - h) % m;
  const std::size_t b = (n - h - t) / m;
  if (b < 1) return std::nullopt;
  for (std::size_t i = 1; i < b; ++i) {
    if (!index.same_parikh(h, h + m, h + i * m, h + (i + 1) * m)) return std::nullopt;
  }
  if (!index.contained_in(0, h, h, h + m)) return std::nullopt;
  if (!index.contained_in(n - t, n, h, h + m)) return std::nullopt;
  return AbelianFactorization{m, h, b, t, index.range(h, h + m)};
}

std::optional<AbelianFactorization> check_factorization(const Word& w, std::size_t m, std::size_t h) {
  return check_factorization(ParikhIndex(w), m, h);
}

std::optional<AbelianFactorization> min_abelian_period(const Word& w, Tier tier) {
  if (w.empty()) throw std::invalid_argument("min_abelian_period: empty word");
  const ParikhIndex index(w);
  for (std::size_t m = 1; m <= w.size(); ++m) {
    if (tier == Tier::repetition && w.size() < 2 * m) break;
    for (std::size_t h = 0; h < m; ++h) {
      if (auto f = check_factorization(index, m, h)) return f;
    }
  }
  return std::nullopt;
}

std::size_t max_power_run(const ParikhIndex& index, std::size_t m, std::size_t start) {
  if (m < 1 || start < 1 || start - 1 + m > index.size()) throw std::invalid_argument("max_power_run: block out of range");
  const std::size_t s = start - 1;
  std::size_t k = 1;
  while (s + (k + 1) * m <= index.size() && index.same_parikh(s, s + m, s + k * m, s + (k + 1) * m)) ++k;
  return k;
}

std::size_t max_power_run(const Word& prefix, std::size_t m, std::size_t start) {
  return max_power_run(ParikhIndex(prefix), m, start);
}

std::optional<std::size_t> find_abelian_power(const ParikhIndex& index, std::size_t m, std::size_t k,
                                              std::size_t max_start) {
  if (m < 1 || k < 1) throw std::invalid_argument("find_abelian_power: m and k must be positive");
  for (std::size_t s = 1; s <= max_start && s - 1 + k * m <= index.size(); ++s) {
    bool ok = true;
    for (std::size_t t = 1; t < k && ok; ++t) {
      ok = index.same_parikh(s - 1, s - 1 + m, s - 1 + t * m, s - 1 + (t + 1) * m);
    }
    if (ok) return s;
  }
  return std::nullopt;
}

QuadraticNumber distance_to_integer(const QuadraticNumber& alpha, std::uint64_t m) {
  const QuadraticNumber f = qfrac(QuadraticNumber(BigInt(m)) * alpha);
  const QuadraticNumber g = f.is_zero() ? f : QuadraticNumber(1) - f;
  return f < g ? f : g;
}

std::uint64_t prefix_search_window(const QuadraticNumber& alpha, std::uint64_t m) {
  const QuadraticNumber delta = distance_to_integer(alpha, m);
  if (delta.is_zero()) throw std::invalid_argument("prefix_search_window: m alpha is an integer");
  const BigInt ceil_inverse = -qfloor(-(QuadraticNumber(1) / delta));
  const BigInt window = BigInt(m) * (ceil_inverse + 4);
  if (window > BigInt(std::numeric_limits<std::uint32_t>::max())) {
    throw std::out_of_range("prefix_search_window: window too large");
  }
  return window.convert_to<std::uint64_t>();
}

namespace {

Word characteristic_prefix(const QuadraticNumber& alpha, std::uint64_t length) {
  return sturmian_prefix(SturmianParams(alpha, QuadraticNumber(0), alpha.is_rational()), length);
}

// Largest len in [0, max_len] such that the range grown by `grow(len)` is
// contained in block [pb, pe). Containment is monotone in len.
template <typename Grow>
std::size_t longest_contained(const ParikhIndex& index, std::size_t max_len, std::size_t pb, std::size_t pe,
                              Grow grow) {
  std::size_t lo = 0;
  std::size_t hi = max_len;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    const auto [b, e] = grow(mid);
    if (index.contained_in(b, e, pb, pe)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

PowerOverStarts best_power_over_starts_period(const QuadraticNumber& alpha, std::size_t m) {
  if (m < 1) throw std::invalid_argument("best_power_over_starts: m must be positive");
  const std::uint64_t length = m + prefix_search_window(alpha, m);
  const ParikhIndex index(characteristic_prefix(alpha, length), Alphabet::binary());
  PowerOverStarts best;
  for (std::size_t start = 1; start <= m; ++start) {
    const std::size_t run = max_power_run(index, m, start);
    if (start - 1 + (run + 1) * m > index.size()) throw std::logic_error("best_power_over_starts: run reached window end");
    if (run > best.exponent) {
      best.exponent = run;
      best.starts.clear();
    }
    if (run == best.exponent) best.starts.push_back(start);
  }
  return best;
}

PowerOverStarts best_power_over_starts(const QuadraticNumber& alpha, std::size_t j) {
  if (j < 2) throw std::invalid_argument("best_power_over_starts: j must exceed 1");
  return best_power_over_starts_period(alpha, fibonacci(j).convert_to<std::size_t>());
}

std::optional<PrefixRepetition> longest_prefix_rep(const ParikhIndex& index, std::size_t m) {
  if (m < 1) throw std::invalid_argument("longest_prefix_rep: m must be positive");
  const std::size_t n = index.size();
  std::optional<PrefixRepetition> best;
  for (std::size_t h = 0; h < m && h + m <= n; ++h) {
    if (!index.contained_in(0, h, h, h + m)) continue;
    std::size_t end = h + m;
    while (end + m <= n && index.same_parikh(h, h + m, end, end + m)) end += m;
    if (end + m > n) throw std::runtime_error("longest_prefix_rep: word too short for period " + std::to_string(m));
    const std::size_t tail =
        longest_contained(index, m - 1, h, h + m, [end](std::size_t t) { return std::pair{end, end + t}; });
    const std::size_t length = end + tail;
    if (length < 2 * m) continue;
    if (!best || length > best->length) {
      best = PrefixRepetition{length, AbelianFactorization{m, h, (end - h) / m, tail, index.range(h, h + m)}};
    }
  }
  return best;
}

std::optional<PrefixRepetition> longest_prefix_rep(const QuadraticNumber& alpha, std::size_t m) {
  if (alpha.is_rational()) throw std::invalid_argument("longest_prefix_rep: slope must be irrational");
  const std::uint64_t window = prefix_search_window(alpha, m);
  return longest_prefix_rep(ParikhIndex(characteristic_prefix(alpha, window), Alphabet::binary()), m);
}

bool theorem6_predicate(const QuadraticNumber& alpha, std::uint64_t m, std::uint64_t k, bool strong) {
  if (m < 1 || k < 2) throw std::invalid_argument("theorem6_predicate: need m >= 1 and k >= 2");
  const QuadraticNumber half = QuadraticNumber::rational(1, 2);
  const QuadraticNumber f = qfrac(QuadraticNumber(BigInt(m)) * alpha);
  if (f == half) throw std::logic_error("theorem6_predicate: {m alpha} = 1/2");
  const QuadraticNumber side = f < half ? f : QuadraticNumber(1) - f;
  const QuadraticNumber bound = QuadraticNumber::rational(1, BigInt(strong ? k + 1 : k));
  if (side == bound) throw std::logic_error("theorem6_predicate: side distance equals the bound");
  return side < bound;
}

bool power_points_check(const QuadraticNumber& alpha, std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  if (n < 1 || m < 1) throw std::invalid_argument("power_points_check: n and m must be positive");
  const QuadraticNumber boundary = qfrac(-(QuadraticNumber(BigInt(m)) * alpha));
  const QuadraticNumber step = qfrac(QuadraticNumber(BigInt(m)) * alpha);
  const bool increasing = step < QuadraticNumber::rational(1, 2);
  const QuadraticNumber one(1);

  QuadraticNumber x = qfrac(QuadraticNumber(BigInt(n)) * alpha);
  const bool left_side = x < boundary;
  for (std::uint64_t t = 1; t <= k; ++t) {
    QuadraticNumber next = x + step;
    if (next >= one) next -= one;
    if ((next < boundary) != left_side) return false;
    if (increasing ? !(x < next) : !(next < x)) return false;
    x = std::move(next);
  }
  return true;
}

std::optional<QuadraticNumber> max_repetition_exponent(const ParikhIndex& index, std::size_t m) {
  if (m < 1) throw std::invalid_argument("max_repetition_exponent: m must be positive");
  const std::size_t n = index.size();
  std::size_t best = 0;
  for (std::size_t residue = 0; residue < m; ++residue) {
    std::size_t i = residue;
    while (i + m <= n) {
      std::size_t end = i + m;
      while (end + m <= n && index.same_parikh(i, i + m, end, end + m)) end += m;
      const std::size_t head = longest_contained(index, std::min(m - 1, i), i, i + m,
                                                 [i](std::size_t h) { return std::pair{i - h, i}; });
      const std::size_t tail = longest_contained(index, std::min(m - 1, n - end), i, i + m,
                                                 [end](std::size_t t) { return std::pair{end, end + t}; });
      const std::size_t length = head + (end - i) + tail;
      if (length >= 2 * m && length > best) best = length;
      i = end;
    }
  }
  if (best == 0) return std::nullopt;
  return QuadraticNumber::rational(BigInt(best), BigInt(m));
}

std::optional<QuadraticNumber> k_m_empirical(const QuadraticNumber& alpha, std::size_t m, std::size_t length) {
  if (m < 1 || length < 2 * m) throw std::invalid_argument("k_m_empirical: need N >= 2m");
  return max_repetition_exponent(ParikhIndex(characteristic_prefix(alpha, length), Alphabet::binary()), m);
}

}  // namespace sturmian
