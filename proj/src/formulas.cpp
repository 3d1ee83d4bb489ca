#include "sturmian/formulas.hpp"

#include "sturmian/numtheory.hpp"

#include <stdexcept>

namespace sturmian {

namespace {

void require_j_above_one(std::size_t j, const char* what) {
  if (j < 2) throw std::invalid_argument(std::string(what) + ": j must exceed 1");
}

}  // namespace

BigInt max_exp_floor(std::size_t j) {
  require_j_above_one(j, "max_exp_floor");
  const QuadraticNumber value =
      QuadraticNumber::golden_ratio() * QuadraticNumber(fibonacci(j)) + QuadraticNumber(fibonacci(j - 1));
  return qfloor(value) - 1;
}

BigInt max_exp_formula(std::size_t j) {
  require_j_above_one(j, "max_exp_formula");
  const BigInt parity = fibonacci(j + 1) + fibonacci(j - 1) - (j % 2 == 0 ? 1 : 2);
  const BigInt floor_form = max_exp_floor(j);
  if (parity != floor_form) {
    throw std::logic_error("max_exp_formula: parity form " + parity.str() + " != floor form " + floor_form.str());
  }
  return parity;
}

BigInt lp_formula(std::size_t j) {
  require_j_above_one(j, "lp_formula");
  const BigInt f = fibonacci(j);
  BigInt inner = fibonacci(j + 1) + fibonacci(j - 1);
  if (j % 2 == 0) inner += 1;
  return f * inner - 2;
}

std::size_t min_ab_period_index(std::size_t j) {
  if (j < 3) throw std::invalid_argument("min_ab_period_fib: j must be at least 3");
  return j % 4 == 3 ? 1 + j / 2 : j / 2;
}

BigInt min_ab_period_fib(std::size_t j) { return fibonacci(min_ab_period_index(j)); }

QuadraticNumber sqrt5_gap(std::size_t j) {
  require_j_above_one(j, "sqrt5_gap");
  const BigInt f = fibonacci(j);
  return qabs(QuadraticNumber::sqrt(5) - QuadraticNumber::rational(lp_formula(j), f * f));
}

std::string sqrt5_gap_percent(std::size_t j, int digits) {
  return approx_decimal(sqrt5_gap(j) * QuadraticNumber(100), digits);
}

FibPrediction predict(std::size_t j) {
  FibPrediction p;
  p.j = j;
  p.period = fibonacci(j);
  p.max_power_exponent = max_exp_formula(j);
  p.lp = lp_formula(j);
  p.min_ab_period = j >= 3 ? min_ab_period_fib(j) : BigInt(0);
  p.sqrt5_gap = sqrt5_gap(j);
  return p;
}

}  // namespace sturmian
