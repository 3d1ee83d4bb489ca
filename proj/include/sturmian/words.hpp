#pragma once

// Finite words, Parikh vectors, Sturmian generation and Fibonacci words.
// Positions are 1-based throughout.

#include "sturmian/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

/// An ordered alphabet; letter i is letters()[i].
class Alphabet {
 public:
  /// Letters must be distinct; they are kept sorted.
  explicit Alphabet(std::string letters);
  /// {a, b} with a < b.
  static Alphabet binary();
  /// The sorted distinct letters of `text`.
  static Alphabet of(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  /// Index of `c`, or throws std::invalid_argument.
  std::size_t index_of(char c) const;
  bool contains(char c) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// 1-based access.
  char at(std::size_t pos) const;
  /// Letters pos .. pos+len-1 (1-based).
  Word factor(std::size_t pos, std::size_t len) const;
  bool starts_with(const Word& prefix) const { return std::string_view(letters_).starts_with(prefix.letters_); }

  const std::string& str() const { return letters_; }

  friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t operator[](std::size_t i) const { return counts_.at(i); }
  std::size_t dimension() const { return counts_.size(); }
  std::uint64_t norm() const;

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

ParikhVector parikh(const Word& w, const Alphabet& alphabet = Alphabet::binary());

/// P strictly contained in Q: componentwise <= and |P| < |Q|.
/// Throws std::invalid_argument on dimension mismatch.
bool parikh_contained(const ParikhVector& p, const ParikhVector& q);

std::string to_string(const ParikhVector& v);

/// Slope and intercept of s_{alpha,rho}. Rational slopes require the
/// periodic flag; ordinary construction rejects them.
class SturmianParams {
 public:
  SturmianParams(QuadraticNumber alpha, QuadraticNumber rho, bool periodic = false);
  /// alpha = phi - 1, rho = 0.
  static SturmianParams fibonacci();

  const QuadraticNumber& alpha() const { return alpha_; }
  const QuadraticNumber& rho() const { return rho_; }
  bool periodic() const { return periodic_; }

 private:
  QuadraticNumber alpha_;
  QuadraticNumber rho_;
  bool periodic_;
};

/// phi - 1 = (sqrt 5 - 1) / 2.
QuadraticNumber golden_slope();

/// a_n: 'b' iff {n alpha + rho} in [0, {-alpha}).
char sturmian_letter(const SturmianParams& params, std::uint64_t n);

/// First `length` letters, stepping the orbit {n alpha + rho} incrementally.
Word sturmian_prefix(const SturmianParams& params, std::uint64_t length);

/// f_0 = b, f_1 = a, f_{j+1} = f_j f_{j-1}.
Word fibonacci_word(std::size_t j);

}  // namespace sturmian
