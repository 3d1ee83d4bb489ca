#include "sturmian/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sturmian {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  if (std::adjacent_find(letters_.begin(), letters_.end()) != letters_.end()) {
    throw std::invalid_argument("alphabet letters must be distinct");
  }
}

Alphabet Alphabet::binary() { return Alphabet("ab"); }

Alphabet Alphabet::of(std::string_view text) {
  std::string letters(text);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return Alphabet(std::move(letters));
}

std::size_t Alphabet::index_of(char c) const {
  const auto pos = letters_.find(c);
  if (pos == std::string::npos) throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
  return pos;
}

bool Alphabet::contains(char c) const { return letters_.find(c) != std::string::npos; }

char Word::at(std::size_t pos) const {
  if (pos < 1 || pos > letters_.size()) throw std::out_of_range("word position out of range");
  return letters_[pos - 1];
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos < 1 || pos - 1 + len > letters_.size()) throw std::out_of_range("factor out of range");
  return Word(letters_.substr(pos - 1, len));
}

std::uint64_t ParikhVector::norm() const { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

ParikhVector parikh(const Word& w, const Alphabet& alphabet) {
  std::vector<std::uint64_t> counts(alphabet.size(), 0);
  for (char c : w.str()) ++counts[alphabet.index_of(c)];
  return ParikhVector(std::move(counts));
}

bool parikh_contained(const ParikhVector& p, const ParikhVector& q) {
  if (p.dimension() != q.dimension()) throw std::invalid_argument("Parikh vectors over different alphabets");
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] > q[i]) return false;
  }
  return p.norm() < q.norm();
}

std::string to_string(const ParikhVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

SturmianParams::SturmianParams(QuadraticNumber alpha, QuadraticNumber rho, bool periodic)
    : alpha_(std::move(alpha)), rho_(std::move(rho)), periodic_(periodic) {
  if (qsign(alpha_) <= 0 || alpha_ >= QuadraticNumber(1)) throw std::invalid_argument("slope must lie in (0, 1)");
  if (alpha_.is_rational() && !periodic_) {
    throw std::invalid_argument("rational slope " + to_string(alpha_) + " requires periodic mode");
  }
  // Surface a field mismatch at construction rather than on first use.
  (void)(alpha_ + rho_);
}

SturmianParams SturmianParams::fibonacci() { return SturmianParams(golden_slope(), QuadraticNumber(0)); }

QuadraticNumber golden_slope() { return QuadraticNumber::make(-1, 1, 2, 5); }

char sturmian_letter(const SturmianParams& params, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("sturmian_letter: positions start at 1");
  const QuadraticNumber x = qfrac(QuadraticNumber(BigInt(n)) * params.alpha() + params.rho());
  return x < qfrac(-params.alpha()) ? 'b' : 'a';
}

Word sturmian_prefix(const SturmianParams& params, std::uint64_t length) {
  std::string letters;
  letters.reserve(length);
  const QuadraticNumber one(1);
  const QuadraticNumber threshold = one - params.alpha();
  QuadraticNumber x = qfrac(params.alpha() + params.rho());
  for (std::uint64_t n = 1; n <= length; ++n) {
    letters.push_back(x < threshold ? 'b' : 'a');
    x += params.alpha();
    if (x >= one) x -= one;
  }
  return Word(std::move(letters));
}

Word fibonacci_word(std::size_t j) {
  if (j == 0) return Word("b");
  std::string prev = "b";
  std::string cur = "a";
  for (std::size_t i = 1; i < j; ++i) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Word(std::move(cur));
}

}  // namespace sturmian
