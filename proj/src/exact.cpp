#include "sturmian/exact.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <cctype>
#include <vector>

namespace sturmian {

namespace {

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of a + b*sqrt(d) for d > 0 not a perfect square (or b == 0).
int sign_parts(const BigInt& a, const BigInt& b, std::int64_t d) {
  const int sa = sign_of(a);
  const int sb = sign_of(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against b^2 d.
  const BigInt lhs = a * a;
  const BigInt rhs = b * b * d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

BigInt gcd_abs(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  const BigInt v{std::string(digits)};
  return text.front() == '-' ? BigInt(-v) : v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

QuadraticNumber parse_ratio(std::string_view text) {
  const auto parts = split(text, '/');
  if (parts.size() != 2) throw std::invalid_argument("expected n/m, got '" + std::string(text) + "'");
  return QuadraticNumber::rational(parse_integer(parts[0]), parse_integer(parts[1]));
}

}  // namespace

bool is_square_free(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  BigInt quot = a / b;
  if (quot * b != a && ((a < 0) != (b < 0))) quot -= 1;
  return quot;
}

QuadraticNumber::QuadraticNumber() : p_(0), q_(0), r_(1), d_(1) {}

QuadraticNumber::QuadraticNumber(BigInt n) : p_(std::move(n)), q_(0), r_(1), d_(1) {}

QuadraticNumber::QuadraticNumber(BigInt p, BigInt q, BigInt r, std::int64_t d, bool canonical)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(d) {
  if (!canonical) normalize();
}

QuadraticNumber QuadraticNumber::make(BigInt p, BigInt q, BigInt r, std::int64_t d) {
  if (r == 0) throw std::domain_error("quadratic number with zero denominator");
  if (d < 1) throw std::invalid_argument("field parameter d must be positive");
  if (d > 1'000'000'000'000LL) throw std::invalid_argument("field parameter d too large");
  // Pull square factors out of the radicand.
  for (std::int64_t f = 2; f * f <= d; ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      q *= f;
    }
  }
  if (d == 1) {
    p += q;
    q = 0;
  }
  return QuadraticNumber(std::move(p), std::move(q), std::move(r), d, false);
}

QuadraticNumber QuadraticNumber::rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return QuadraticNumber(std::move(num), 0, std::move(den), 1, false);
}

QuadraticNumber QuadraticNumber::sqrt(std::int64_t d) { return make(0, 1, 1, d); }

QuadraticNumber QuadraticNumber::golden_ratio() { return make(1, 1, 2, 5); }

void QuadraticNumber::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0) d_ = 1;
  if (p_ == 0 && q_ == 0) {
    r_ = 1;
    return;
  }
  BigInt g = gcd_abs(gcd_abs(p_, q_), r_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

std::int64_t QuadraticNumber::joint_field(const QuadraticNumber& rhs) const {
  if (q_ == 0) return rhs.d_;
  if (rhs.q_ == 0 || rhs.d_ == d_) return d_;
  throw FieldMismatch("operands from different quadratic fields: d=" + std::to_string(d_) +
                      " and d=" + std::to_string(rhs.d_));
}

QuadraticNumber QuadraticNumber::operator-() const { return QuadraticNumber(-p_, -q_, r_, d_, true); }

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  const std::int64_t d = joint_field(rhs);
  if (r_ == rhs.r_) {
    p_ += rhs.p_;
    q_ += rhs.q_;
  } else {
    p_ = p_ * rhs.r_ + rhs.p_ * r_;
    q_ = q_ * rhs.r_ + rhs.q_ * r_;
    r_ *= rhs.r_;
  }
  d_ = d;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) { return *this += -rhs; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  const std::int64_t d = joint_field(rhs);
  BigInt p = p_ * rhs.p_ + q_ * rhs.q_ * d;
  BigInt q = p_ * rhs.q_ + q_ * rhs.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  r_ *= rhs.r_;
  d_ = d;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  joint_field(rhs);
  // 1/((a + b sqrt d)/c) = c (a - b sqrt d) / (a^2 - b^2 d)
  const BigInt norm = rhs.p_ * rhs.p_ - rhs.q_ * rhs.q_ * rhs.d_;
  QuadraticNumber inverse(rhs.r_ * rhs.p_, -(rhs.r_ * rhs.q_), norm, rhs.d_, false);
  return *this *= inverse;
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  const int s = qsign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int qsign(const QuadraticNumber& x) { return sign_parts(x.p(), x.q(), x.d()); }

QuadraticNumber qabs(const QuadraticNumber& x) { return qsign(x) < 0 ? -x : x; }

BigInt qfloor(const QuadraticNumber& x) {
  if (x.is_rational()) return floor_div(x.p(), x.r());
  // Seed from isqrt(q^2 d) <= |q| sqrt d < isqrt(q^2 d) + 1, then correct.
  const BigInt s = boost::multiprecision::sqrt(BigInt(x.q() * x.q() * x.d()));
  BigInt k = x.q() > 0 ? floor_div(x.p() + s, x.r()) : floor_div(x.p() - s - 1, x.r());
  while (sign_parts(x.p() - (k + 1) * x.r(), x.q(), x.d()) >= 0) ++k;
  while (sign_parts(x.p() - k * x.r(), x.q(), x.d()) < 0) --k;
  return k;
}

QuadraticNumber qfrac(const QuadraticNumber& x) { return x - QuadraticNumber(qfloor(x)); }

std::string approx_decimal(const QuadraticNumber& x, int digits) {
  if (digits < 0) throw std::invalid_argument("approx_decimal: digits must be non-negative");
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const QuadraticNumber scaled = x * QuadraticNumber(scale);
  BigInt n = qfloor(scaled);
  const QuadraticNumber frac = scaled - QuadraticNumber(n);
  const int half = qsign(frac * QuadraticNumber(2) - QuadraticNumber(1));
  if (half > 0 || (half == 0 && (n % 2) != 0)) n += 1;

  const bool negative = n < 0;
  std::string body = BigInt(abs(n)).str();
  if (body.size() < static_cast<std::size_t>(digits) + 1) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  if (digits > 0) body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + body : body;
}

std::string to_string(const QuadraticNumber& x) {
  if (x.is_rational()) return "ratio:" + x.p().str() + "/" + x.r().str();
  return "quad:" + x.p().str() + "," + x.q().str() + "," + x.r().str() + "," + std::to_string(x.d());
}

QuadraticNumber parse_quadratic(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kQuad = "quad:";
  constexpr std::string_view kRatio = "ratio:";
  if (text.substr(0, kQuad.size()) == kQuad) {
    const auto parts = split(text.substr(kQuad.size()), ',');
    if (parts.size() != 4) throw std::invalid_argument("expected quad:p,q,r,d, got '" + std::string(text) + "'");
    const BigInt d = parse_integer(parts[3]);
    if (d < 1 || d > 1'000'000'000'000LL) throw std::invalid_argument("quad: d out of range");
    return QuadraticNumber::make(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]),
                                 d.convert_to<std::int64_t>());
  }
  if (text.substr(0, kRatio.size()) == kRatio) return parse_ratio(text.substr(kRatio.size()));
  if (text.find('/') != std::string_view::npos) return parse_ratio(text);
  return QuadraticNumber(parse_integer(text));
}

}  // namespace sturmian
