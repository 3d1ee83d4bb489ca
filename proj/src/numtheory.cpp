#include "sturmian/numtheory.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <stdexcept>

namespace sturmian {

BigInt fibonacci(std::size_t j) {
  BigInt prev = 1;
  BigInt cur = 1;
  for (std::size_t i = 1; i < j; ++i) {
    BigInt next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ContinuedFraction cf_expand(const QuadraticNumber& alpha, std::size_t count) {
  if (qsign(alpha) <= 0) throw std::invalid_argument("cf_expand: alpha must be positive");
  ContinuedFraction cf;
  QuadraticNumber x = alpha;
  while (cf.coefficients.size() < count) {
    BigInt a = qfloor(x);
    x -= QuadraticNumber(a);
    cf.coefficients.push_back(std::move(a));
    if (x.is_zero()) {
      cf.terminated = true;
      break;
    }
    x = QuadraticNumber(1) / x;
  }
  return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  std::vector<Convergent> out;
  out.reserve(cf.coefficients.size());
  BigInt h_prev = 1, h_prev2 = 0;
  BigInt k_prev = 0, k_prev2 = 1;
  for (std::size_t i = 0; i < cf.coefficients.size(); ++i) {
    const BigInt& a = cf.coefficients[i];
    BigInt h = a * h_prev + h_prev2;
    BigInt k = a * k_prev + k_prev2;
    out.push_back({h, k, i});
    h_prev2 = std::exchange(h_prev, std::move(h));
    k_prev2 = std::exchange(k_prev, std::move(k));
  }
  return out;
}

std::vector<Convergent> convergents(const QuadraticNumber& alpha, std::size_t count) {
  return convergents(cf_expand(alpha, count));
}

std::vector<Convergent> convergents_up_to(const QuadraticNumber& alpha, const BigInt& max_denominator) {
  std::vector<Convergent> out;
  std::size_t count = 8;
  for (;;) {
    const ContinuedFraction cf = cf_expand(alpha, count);
    out = convergents(cf);
    if (cf.terminated || out.back().denominator > max_denominator) break;
    count *= 2;
  }
  while (!out.empty() && out.back().denominator > max_denominator) out.pop_back();
  return out;
}

GoldenIdentity golden_identity_check(std::size_t j) {
  if (j == 0) throw std::invalid_argument("golden_identity_check: j must be positive");
  const QuadraticNumber phi = QuadraticNumber::golden_ratio();
  const BigInt f_next = fibonacci(j + 1);
  const BigInt f = fibonacci(j);
  const BigInt f_prev = fibonacci(j - 1);

  GoldenIdentity g;
  g.phi_side = phi - QuadraticNumber::rational(f_next, f);
  g.alpha_side = (phi - QuadraticNumber(1)) - QuadraticNumber::rational(f_prev, f);
  const QuadraticNumber sign = (j % 2 == 0) ? QuadraticNumber(1) : QuadraticNumber(-1);
  g.closed_form = sign / (QuadraticNumber(f) * (phi * QuadraticNumber(f) + QuadraticNumber(f_prev)));
  g.equal = g.phi_side == g.alpha_side && g.alpha_side == g.closed_form;
  return g;
}

BigInt nearest_integer(const QuadraticNumber& x) {
  const BigInt n = qfloor(x);
  const int s = qsign((x - QuadraticNumber(n)) * QuadraticNumber(2) - QuadraticNumber(1));
  if (s == 0) throw std::domain_error("nearest_integer: value lies on a half-integer");
  return s > 0 ? n + 1 : n;
}

bool best_approx_check(const QuadraticNumber& alpha, std::size_t i) {
  if (i <= 1) throw std::invalid_argument("best_approx_check: index must exceed 1");
  const auto conv = convergents(alpha, i + 1);
  if (conv.size() <= i) throw std::invalid_argument("best_approx_check: convergent does not exist");
  const BigInt& ni = conv[i].numerator;
  const BigInt& mi = conv[i].denominator;
  const QuadraticNumber best = qabs(QuadraticNumber(ni) - QuadraticNumber(mi) * alpha);

  QuadraticNumber m_alpha;
  for (BigInt m = 1; m <= mi; ++m) {
    m_alpha += alpha;
    const BigInt floor_value = qfloor(m_alpha);
    const int s = qsign((m_alpha - QuadraticNumber(floor_value)) * QuadraticNumber(2) - QuadraticNumber(1));
    // A midpoint tie (rational alpha only) leaves two nearest integers.
    BigInt candidates[2] = {s > 0 ? floor_value + 1 : floor_value, floor_value + 1};
    const int n_candidates = s == 0 ? 2 : 1;
    for (int c = 0; c < n_candidates; ++c) {
      const BigInt& n = candidates[c];
      if (n * mi == ni * m) continue;
      if (qabs(QuadraticNumber(n) - m_alpha) <= best) return false;
    }
  }
  return true;
}

std::vector<std::pair<BigInt, BigInt>> hurwitz_solutions(const QuadraticNumber& alpha, const QuadraticNumber& A,
                                                         std::uint64_t max_m) {
  if (!A.is_rational() || qsign(A) <= 0) throw std::invalid_argument("hurwitz_solutions: A must be a positive rational");
  std::vector<std::pair<BigInt, BigInt>> out;
  QuadraticNumber m_alpha;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    m_alpha += alpha;
    // |n/m - alpha| < 1/(A m^2)  <=>  |n - m alpha| < 1/(A m)
    const QuadraticNumber bound = QuadraticNumber(1) / (A * QuadraticNumber(BigInt(m)));
    const BigInt lo = qfloor(m_alpha - bound);
    const BigInt hi = qfloor(m_alpha + bound) + 1;
    for (BigInt n = lo; n <= hi; ++n) {
      if (qabs(QuadraticNumber(n) - m_alpha) >= bound) continue;
      if (boost::multiprecision::gcd(abs(n), BigInt(m)) != 1) continue;
      out.emplace_back(n, BigInt(m));
    }
  }
  return out;
}

bool side_condition_holds(const QuadraticNumber& alpha, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("side_condition_holds: m must exceed 1");
  const QuadraticNumber frac_m = qfrac(QuadraticNumber(BigInt(m)) * alpha);
  const bool low = frac_m < QuadraticNumber::rational(1, 2);
  const QuadraticNumber step = qfrac(alpha);
  QuadraticNumber frac_i;
  for (std::uint64_t i = 1; i < m; ++i) {
    frac_i += step;
    if (frac_i >= QuadraticNumber(1)) frac_i -= QuadraticNumber(1);
    if (low ? frac_i < frac_m : frac_i > frac_m) return false;
  }
  return true;
}

}  // namespace sturmian
