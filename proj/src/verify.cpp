#include "sturmian/verify.hpp"

#include "sturmian/abelian.hpp"
#include "sturmian/bijection.hpp"
#include "sturmian/formulas.hpp"
#include "sturmian/numtheory.hpp"
#include "sturmian/words.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace sturmian {

namespace {

struct Bounds {
  IndexRange default_j;
  IndexRange max_j;
};

void check_range(const IndexRange& r, const IndexRange& allowed, const std::string& target) {
  if (r.first > r.last || r.first < allowed.first || r.last > allowed.last) {
    throw RangeError("verify " + target + ": --j must lie within " + std::to_string(allowed.first) + ".." +
                     std::to_string(allowed.last));
  }
}

IndexRange j_range(const VerifyOptions& options, const Bounds& bounds, const std::string& target) {
  const IndexRange r = options.j.value_or(bounds.default_j);
  check_range(r, bounds.max_j, target);
  return r;
}

std::size_t bounded(const std::optional<std::size_t>& value, std::size_t fallback, std::size_t lo, std::size_t hi,
                    const std::string& what) {
  const std::size_t v = value.value_or(fallback);
  if (v < lo || v > hi) {
    throw RangeError(what + " must lie within " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return v;
}

std::string str(std::size_t v) { return std::to_string(v); }

VerifyReport verify_table1(const VerifyOptions& options) {
  VerifyReport report{"table1", {}};
  const IndexRange r = j_range(options, {{2, 11}, {2, 11}}, report.target);
  const QuadraticNumber alpha = golden_slope();
  for (const auto& entry : published_table1()) {
    if (entry.j < r.first || entry.j > r.last) continue;
    const BigInt formula = lp_formula(entry.j);
    const auto oracle = longest_prefix_rep(alpha, fibonacci(entry.j).convert_to<std::size_t>());
    const std::string oracle_text = oracle ? str(oracle->length) : "none";
    const std::string gap = sqrt5_gap_percent(entry.j, printed_digits(entry.gap_percent));
    VerifyRow row;
    row.label = "j=" + str(entry.j) + " F_j=" + fibonacci(entry.j).str();
    row.expected = std::string("lp=") + entry.lp + " gap=" + entry.gap_percent;
    row.actual = "formula=" + formula.str() + " oracle=" + oracle_text + " gap=" + gap;
    row.pass = formula.str() == entry.lp && oracle_text == entry.lp && gap == entry.gap_percent;
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyReport verify_table2(const VerifyOptions& options) {
  VerifyReport report{"table2", {}};
  const IndexRange r = j_range(options, {{3, 16}, {3, 24}}, report.target);
  const auto& published = published_table2();
  for (std::size_t j = r.first; j <= r.last; ++j) {
    const auto it = std::find_if(published.begin(), published.end(), [j](const Table2Entry& e) { return e.j == j; });
    const std::size_t n = it != published.end() ? it->n : min_ab_period_index(j);
    const BigInt expected = fibonacci(n);
    const BigInt formula = min_ab_period_fib(j);
    const auto found = min_abelian_period(fibonacci_word(j), Tier::relaxed);
    const std::string oracle = found ? str(found->period) : "none";
    VerifyRow row;
    row.label = "j=" + str(j) + " |f_j|=" + fibonacci(j).str();
    row.expected = "F_" + str(n) + "=" + expected.str() + (it != published.end() ? " (published)" : " (formula)");
    row.actual = "formula=" + formula.str() + " oracle=" + oracle + (found ? " head=" + str(found->head) : "");
    row.pass = formula == expected && oracle == expected.str();
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyReport verify_theorem6(const VerifyOptions& options) {
  VerifyReport report{"theorem6", {}};
  const std::size_t max_m = bounded(options.max_m, 200, 1, 2000, "--max-m");
  const std::size_t max_k = bounded(options.max_k, 10, 2, 50, "--max-k");
  const QuadraticNumber alpha = golden_slope();
  const ParikhIndex index(sturmian_prefix(SturmianParams::fibonacci(), max_m * (max_k + 6)), Alphabet::binary());
  std::optional<ParikhIndex> extended;

  for (std::size_t m = 1; m <= max_m; ++m) {
    std::string problems;
    for (std::size_t k = 2; k <= max_k; ++k) {
      const std::size_t window = m * (k + 6);
      const bool predicate = theorem6_predicate(alpha, m, k, false);
      const bool found = find_abelian_power(index, m, k, window - k * m + 1).has_value();
      if (predicate != found) {
        if (!extended) {
          extended.emplace(sturmian_prefix(SturmianParams::fibonacci(), 64 * max_m * (max_k + 6)), Alphabet::binary());
        }
        const auto first = find_abelian_power(*extended, m, k, extended->size());
        problems += " k=" + str(k) + (predicate ? ": predicate true, no witness in window " : ": predicate false, witness in window ") +
                    str(window) + " (first start " + (first ? str(*first) : std::string("beyond search")) + ");";
      }
      if (theorem6_predicate(alpha, m, k, true) && max_power_run(index, m, m) < k) {
        problems += " k=" + str(k) + ": strong predicate true, run at start m below k;";
      }
    }
    VerifyRow row;
    row.label = "m=" + str(m);
    row.expected = "consistent";
    row.actual = problems.empty() ? "consistent" : problems.substr(1);
    row.pass = problems.empty();
    report.rows.push_back(std::move(row));
  }
  return report;
}

template <typename Check>
VerifyReport verify_over_slopes(const std::string& target, const VerifyOptions& options, std::size_t default_max_m,
                                Check check) {
  VerifyReport report{target, {}};
  const std::size_t max_m = bounded(options.max_m, default_max_m, 1, 200, "--max-m");
  for (const auto& alpha : sweep_slopes()) {
    std::string failure;
    for (std::size_t m = 1; m <= max_m && failure.empty(); ++m) failure = check(alpha, m);
    VerifyRow row;
    row.label = "alpha=" + to_string(alpha) + " m=1.." + str(max_m);
    row.expected = "holds";
    row.actual = failure.empty() ? "holds" : failure;
    row.pass = failure.empty();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string lexorder_check(const QuadraticNumber& alpha, std::size_t m) {
  const auto factors = all_factors(alpha, m);
  if (factors.size() != m + 1) return "m=" + str(m) + ": " + str(factors.size()) + " factors";
  std::set<Word> distinct;
  for (const auto& f : factors) distinct.insert(f.factor);
  if (distinct.size() != m + 1) return "m=" + str(m) + ": repeated factor";
  for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
    if (!(factors[k].factor > factors[k + 1].factor)) return "m=" + str(m) + ": order breaks at k=" + str(k);
  }
  return {};
}

std::string parikh_check(const QuadraticNumber& alpha, std::size_t m) {
  if (verify_parikh_dichotomy(alpha, m)) return {};
  return "m=" + str(m) + ": dichotomy fails";
}

VerifyReport verify_identity(const VerifyOptions& options) {
  VerifyReport report{"identity", {}};
  const IndexRange r = j_range(options, {{1, 40}, {1, 200}}, report.target);
  for (std::size_t j = r.first; j <= r.last; ++j) {
    const GoldenIdentity g = golden_identity_check(j);
    const int expected_sign = j % 2 == 0 ? 1 : -1;
    VerifyRow row;
    row.label = "j=" + str(j);
    row.expected = std::string("equal sign=") + (expected_sign > 0 ? "+" : "-");
    row.actual = std::string(g.equal ? "equal" : "unequal") + " sign=" + (qsign(g.closed_form) > 0 ? "+" : "-") +
                 " value~" + approx_decimal(g.closed_form, 12);
    row.pass = g.equal && qsign(g.closed_form) == expected_sign;
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyReport verify_proposition6(const VerifyOptions& options) {
  VerifyReport report{"proposition6", {}};
  const IndexRange r = j_range(options, {{2, 9}, {2, 14}}, report.target);
  const QuadraticNumber alpha = golden_slope();
  for (std::size_t j = r.first; j <= r.last; ++j) {
    const std::size_t f = fibonacci(j).convert_to<std::size_t>();
    const BigInt formula = max_exp_formula(j);
    const PowerOverStarts best = best_power_over_starts(alpha, j);
    const bool starts_at_f = std::find(best.starts.begin(), best.starts.end(), f) != best.starts.end();
    const bool ordered = best.exponent >= 1 && power_points_check(alpha, f, f, best.exponent - 1);
    VerifyRow row;
    row.label = "j=" + str(j) + " F_j=" + str(f);
    row.expected = "exponent=" + formula.str() + " start=" + str(f);
    row.actual = "exponent=" + str(best.exponent) + " starts=" + str(best.starts.front()) +
                 (best.starts.size() > 1 ? "..." + str(best.starts.back()) : "") + (starts_at_f ? " (includes F_j)" : "") +
                 (ordered ? " points-ordered" : " points-unordered");
    row.pass = BigInt(best.exponent) == formula && starts_at_f && ordered;
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyReport verify_corollary5(const VerifyOptions& options) {
  VerifyReport report{"corollary5", {}};
  const IndexRange r = j_range(options, {{2, 15}, {2, 22}}, report.target);
  const QuadraticNumber alpha = golden_slope();
  for (std::size_t j = r.first; j <= r.last; ++j) {
    const BigInt f = fibonacci(j);
    const bool side = side_condition_holds(alpha, f.convert_to<std::uint64_t>());
    const bool best = best_approx_check(alpha, j);
    VerifyRow row;
    row.label = "j=" + str(j) + " m=" + f.str();
    row.expected = "side-condition best-approximation";
    row.actual = std::string(side ? "side-condition" : "side-condition-FAILS") +
                 (best ? " best-approximation" : " best-approximation-FAILS");
    row.pass = side && best;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

bool VerifyReport::passed() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
}

const std::vector<Table1Entry>& published_table1() {
  static const std::vector<Table1Entry> table = {
      {2, "8", "23.6"},      {3, "19", "12.5"},    {4, "58", "8.393"},     {5, "142", "1.732"},
      {6, "388", "5.98"},    {7, "985", "0.25"},   {8, "2616", "2.69"},    {9, "6763", "0.037"},
      {10, "17798", "1.087"}, {11, "46366", "0.005"},
  };
  return table;
}

const std::vector<Table2Entry>& published_table2() {
  static const std::vector<Table2Entry> table = {
      {3, 2}, {4, 2}, {5, 2}, {6, 3}, {7, 4}, {8, 4}, {9, 4}, {10, 5}, {11, 6}, {12, 6}, {13, 6}, {14, 7}, {15, 8}, {16, 8},
  };
  return table;
}

int printed_digits(std::string_view decimal) {
  const auto dot = decimal.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(decimal.size() - dot - 1);
}

VerifyTarget parse_target(std::string_view name) {
  if (name == "table1") return VerifyTarget::table1;
  if (name == "table2") return VerifyTarget::table2;
  if (name == "theorem6") return VerifyTarget::theorem6;
  if (name == "lexorder") return VerifyTarget::lexorder;
  if (name == "identity") return VerifyTarget::identity;
  if (name == "parikh-split") return VerifyTarget::parikh_split;
  if (name == "proposition6") return VerifyTarget::proposition6;
  if (name == "corollary5") return VerifyTarget::corollary5;
  throw std::invalid_argument("unknown verify target '" + std::string(name) + "'");
}

std::string target_name(VerifyTarget target) {
  switch (target) {
    case VerifyTarget::table1: return "table1";
    case VerifyTarget::table2: return "table2";
    case VerifyTarget::theorem6: return "theorem6";
    case VerifyTarget::lexorder: return "lexorder";
    case VerifyTarget::identity: return "identity";
    case VerifyTarget::parikh_split: return "parikh-split";
    case VerifyTarget::proposition6: return "proposition6";
    case VerifyTarget::corollary5: return "corollary5";
  }
  return "unknown";
}

std::vector<std::string> target_names() {
  return {"table1", "table2", "theorem6", "lexorder", "identity", "parikh-split", "proposition6", "corollary5"};
}

IndexRange parse_index_range(std::string_view text) {
  auto parse_one = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("bad index range '" + std::string(text) + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::size_t v = parse_one(text);
    return {v, v};
  }
  return {parse_one(text.substr(0, dots)), parse_one(text.substr(dots + 2))};
}

QuadraticNumber parse_slope(std::string_view text, bool periodic) {
  const QuadraticNumber alpha = text == "fib" ? golden_slope() : parse_quadratic(text);
  if (qsign(alpha) <= 0 || alpha >= QuadraticNumber(1)) {
    throw std::invalid_argument("slope " + std::string(text) + " must lie in (0, 1)");
  }
  if (alpha.is_rational() && !periodic) {
    throw std::invalid_argument("rational slope " + std::string(text) + " needs --periodic");
  }
  return alpha;
}

std::vector<QuadraticNumber> sweep_slopes() {
  return {
      golden_slope(),
      QuadraticNumber::make(-2, 1, 1, 5),
      QuadraticNumber::make(7, -1, 10, 5),
      QuadraticNumber::make(-1, 1, 1, 2),
      QuadraticNumber::make(0, 1, 2, 2),
  };
}

VerifyReport run_verify(VerifyTarget target, const VerifyOptions& options) {
  switch (target) {
    case VerifyTarget::table1: return verify_table1(options);
    case VerifyTarget::table2: return verify_table2(options);
    case VerifyTarget::theorem6: return verify_theorem6(options);
    case VerifyTarget::lexorder: return verify_over_slopes("lexorder", options, 60, lexorder_check);
    case VerifyTarget::identity: return verify_identity(options);
    case VerifyTarget::parikh_split: return verify_over_slopes("parikh-split", options, 100, parikh_check);
    case VerifyTarget::proposition6: return verify_proposition6(options);
    case VerifyTarget::corollary5: return verify_corollary5(options);
  }
  throw std::invalid_argument("unknown verify target");
}

}  // namespace sturmian
