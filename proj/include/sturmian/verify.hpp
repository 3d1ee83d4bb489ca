#pragma once

// Verification harness: each target replays a published table or a
// theorem over a finite range, pairing the closed form with the
// brute-force search, and reports one row per checked item.

#include "sturmian/exact.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

/// Raised for requests outside the documented desk-scale bounds.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class VerifyTarget { table1, table2, theorem6, lexorder, identity, parikh_split, proposition6, corollary5 };

struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct VerifyOptions {
  std::optional<IndexRange> j;
  std::optional<std::size_t> max_m;
  std::optional<std::size_t> max_k;
};

struct VerifyRow {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string target;
  std::vector<VerifyRow> rows;

  bool passed() const;
};

VerifyTarget parse_target(std::string_view name);
std::string target_name(VerifyTarget target);
std::vector<std::string> target_names();

/// "a..b" or a single index "a".
IndexRange parse_index_range(std::string_view text);

/// `fib`, `quad:p,q,r,d` or `ratio:n/m` (the latter only with periodic).
/// The value must lie in (0, 1).
QuadraticNumber parse_slope(std::string_view text, bool periodic);

/// Slopes used by the bijection sweeps: phi - 1, sqrt 5 - 2,
/// (7 - sqrt 5)/10, sqrt 2 - 1 and sqrt 2 / 2.
std::vector<QuadraticNumber> sweep_slopes();

/// Throws RangeError when the options exceed the target's bounds.
VerifyReport run_verify(VerifyTarget target, const VerifyOptions& options = {});

/// lp(F_j) and the 100x gap row as printed in the published table, j = 2..11.
struct Table1Entry {
  std::size_t j;
  const char* lp;
  const char* gap_percent;
};
const std::vector<Table1Entry>& published_table1();

/// Published abelian-period indices n (period F_n) of f_j, j = 3..16.
struct Table2Entry {
  std::size_t j;
  std::size_t n;
};
const std::vector<Table2Entry>& published_table2();

/// Number of fractional digits in a printed decimal.
int printed_digits(std::string_view decimal);

}  // namespace sturmian
