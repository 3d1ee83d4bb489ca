#pragma once

// Independent reference routines for the tests. Nothing here calls into
// the library's exact comparison or search code: real values go through
// 100-digit decimal floats, word questions through direct substring
// counting.

#include "sturmian/exact.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Real = boost::multiprecision::cpp_dec_float_100;

inline Real to_real(const sturmian::QuadraticNumber& x) {
  const Real p(x.p().str());
  const Real q(x.q().str());
  const Real r(x.r().str());
  return (p + q * boost::multiprecision::sqrt(Real(x.d()))) / r;
}

inline Real frac(const Real& x) { return x - boost::multiprecision::floor(x); }

/// Decimal text of an integer-valued Real ("-7", not "-7.000...").
inline std::string integer_text(const Real& x) {
  std::string s = x.str(0, std::ios_base::fixed);
  const auto dot = s.find('.');
  if (dot != std::string::npos) s.erase(dot);
  return s == "-0" ? "0" : s;
}

/// s_{alpha,rho} letters from floating-point fractional parts.
inline std::string sturmian_letters(const Real& alpha, const Real& rho, std::uint64_t length) {
  std::string out;
  const Real threshold = frac(-alpha);
  for (std::uint64_t n = 1; n <= length; ++n) out.push_back(frac(Real(n) * alpha + rho) < threshold ? 'b' : 'a');
  return out;
}

inline std::map<char, std::size_t> counts(const std::string& s) {
  std::map<char, std::size_t> c;
  for (char ch : s) ++c[ch];
  return c;
}

/// P strictly contained in Q, by letter maps.
inline bool contained(const std::string& part, const std::string& block) {
  if (part.size() >= block.size()) return false;
  const auto pc = counts(part);
  const auto bc = counts(block);
  for (const auto& [ch, n] : pc) {
    const auto it = bc.find(ch);
    if (it == bc.end() || it->second < n) return false;
  }
  return true;
}

/// Definition-level check of w = head . blocks . tail with period m and head h.
inline bool is_factorization(const std::string& w, std::size_t m, std::size_t h) {
  if (h >= m || h > w.size()) return false;
  const std::size_t t = (w.size() - h) % m;
  const std::size_t b = (w.size() - h - t) / m;
  if (b < 1) return false;
  const std::string first = w.substr(h, m);
  for (std::size_t i = 1; i < b; ++i) {
    if (counts(w.substr(h + i * m, m)) != counts(first)) return false;
  }
  return contained(w.substr(0, h), first) && contained(w.substr(w.size() - t), first);
}

inline bool is_repetition(const std::string& w, std::size_t m) {
  for (std::size_t h = 0; h < m; ++h) {
    if (is_factorization(w, m, h)) return true;
  }
  return false;
}

/// Longest factor of w that is an abelian repetition of period m with length >= 2m.
inline std::size_t longest_repetition(const std::string& w, std::size_t m) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = w.size() - i; len >= 2 * m && len > best; --len) {
      if (is_repetition(w.substr(i, len), m)) {
        best = len;
        break;
      }
    }
  }
  return best;
}

/// Number of consecutive equal-profile m-blocks from 0-based s.
inline std::size_t power_run(const std::string& w, std::size_t m, std::size_t s) {
  std::size_t k = 1;
  while (s + (k + 1) * m <= w.size() && counts(w.substr(s + k * m, m)) == counts(w.substr(s, m))) ++k;
  return k;
}

/// Deterministic generator of small quadratic numbers in Q(sqrt d).
class QuadGen {
 public:
  explicit QuadGen(std::uint64_t seed) : rng_(seed) {}

  sturmian::QuadraticNumber next(std::int64_t d, std::int64_t span = 60) {
    std::uniform_int_distribution<std::int64_t> coef(-span, span);
    std::uniform_int_distribution<std::int64_t> den(1, span);
    return sturmian::QuadraticNumber::make(coef(rng_), coef(rng_), den(rng_), d);
  }

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
