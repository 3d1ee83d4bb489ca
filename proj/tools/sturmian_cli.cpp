// sturmian: generation, bijection dumps, abelian analysis and the
// verification harness from the command line.
//
// Exit status: 0 success, 1 verification mismatch or runtime failure,
// 2 usage error.

#include "sturmian/abelian.hpp"
#include "sturmian/bijection.hpp"
#include "sturmian/formulas.hpp"
#include "sturmian/numtheory.hpp"
#include "sturmian/verify.hpp"
#include "sturmian/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace sturmian;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rows of named cells. Strings print bare in txt/csv; everything else via dump().
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

std::string cell_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_table(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
      os << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << out << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(cell_text(c));
    line(cells);
  }
}

json exact(const QuadraticNumber& x) { return to_string(x); }

json exponent_cell(const AbelianFactorization& f) { return to_string(f.exponent()); }

// Options shared by the slope-taking commands.
struct SlopeOptions {
  std::string alpha = "fib";
  bool periodic = false;

  void attach(CLI::App* app) {
    app->add_option("--alpha", alpha, "Slope: fib, quad:p,q,r,d or ratio:n/m")->capture_default_str();
    app->add_flag("--periodic", periodic, "Allow a rational slope (periodic word)");
  }
  QuadraticNumber value() const {
    try {
      return parse_slope(alpha, periodic);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
};

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"txt", "csv", "json"}))
      ->capture_default_str();
}

std::vector<std::string> read_words(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string w;
    while (tokens >> w) words.push_back(w);
  }
  return words;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sturmian words, the Sturmian bijection and abelian repetitions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string format = "txt";
  int digits = 6;

  // generate
  SlopeOptions gen_slope;
  std::string gen_rho = "0";
  std::uint64_t gen_length = 0;
  auto* gen = app.add_subcommand("generate", "Prefix of the Sturmian word s_{alpha,rho}");
  gen_slope.attach(gen);
  gen->add_option("--rho", gen_rho, "Intercept (quad:, ratio: or integer)")->capture_default_str();
  gen->add_option("--length", gen_length, "Number of letters")->required();
  add_format(gen, format);

  // fibword
  std::size_t fib_j = 0;
  auto* fib = app.add_subcommand("fibword", "Finite Fibonacci word f_j (f_0 = b, f_1 = a)");
  fib->add_option("j", fib_j, "Index")->required();
  add_format(fib, format);

  // bijection
  SlopeOptions bij_slope;
  std::size_t bij_m = 0;
  auto* bij = app.add_subcommand("bijection", "Factors of length m against the intervals L_k");
  bij_slope.attach(bij);
  bij->add_option("-m", bij_m, "Factor length")->required()->check(CLI::PositiveNumber);
  bij->add_option("--digits", digits, "Decimal digits for endpoints")->capture_default_str();
  add_format(bij, format);

  // period
  std::vector<std::string> period_words;
  std::string tier_name = "relaxed";
  auto* period = app.add_subcommand("period", "Minimal abelian period of each word (stdin if none given)");
  period->add_option("word", period_words, "Words to analyse");
  period->add_option("--tier", tier_name, "relaxed (b >= 1) or repetition (exponent >= 2)")
      ->check(CLI::IsMember({"relaxed", "repetition"}))
      ->capture_default_str();
  add_format(period, format);

  // prefix
  SlopeOptions pre_slope;
  std::size_t pre_m = 0;
  std::size_t pre_j = 0;
  auto* pre = app.add_subcommand("prefix", "Longest prefix that is an abelian repetition of period m");
  pre_slope.attach(pre);
  auto* pre_m_opt = pre->add_option("-m", pre_m, "Period")->check(CLI::PositiveNumber);
  auto* pre_j_opt = pre->add_option("--j", pre_j, "Use m = F_j")->check(CLI::Range(2, 60));
  pre_m_opt->excludes(pre_j_opt);
  add_format(pre, format);

  // scan
  SlopeOptions scan_slope;
  std::size_t scan_max_m = 20;
  std::size_t scan_length = 10000;
  auto* scan = app.add_subcommand("scan", "Maximal repetition exponent k_m for m = 1..max-m");
  scan_slope.attach(scan);
  scan->add_option("--max-m", scan_max_m, "Largest period")->check(CLI::Range(1, 1000))->capture_default_str();
  scan->add_option("--length", scan_length, "Prefix length N")->check(CLI::Range(2, 2000000))->capture_default_str();
  scan->add_option("--digits", digits, "Decimal digits")->capture_default_str();
  add_format(scan, format);

  // verify
  std::string target;
  std::string j_text;
  std::size_t max_m = 0;
  std::size_t max_k = 0;
  auto* ver = app.add_subcommand("verify", "Replay a published table or theorem over a finite range");
  ver->add_option("target", target, "Target")->required()->check(CLI::IsMember(target_names()));
  auto* ver_j = ver->add_option("--j", j_text, "Index range a..b");
  auto* ver_m = ver->add_option("--max-m", max_m, "Largest m");
  auto* ver_k = ver->add_option("--max-k", max_k, "Largest k (theorem6)");
  add_format(ver, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const SturmianParams params(gen_slope.value(), parse_quadratic(gen_rho), gen_slope.periodic);
      const Word w = sturmian_prefix(params, gen_length);
      if (format == "txt") {
        if (!w.empty()) std::cout << w.str() << "\n";
      } else {
        Table t{{"alpha", "rho", "length", "word"}, {}};
        t.add({exact(params.alpha()), exact(params.rho()), gen_length, w.str()});
        print_table(t, format, std::cout);
      }
    } else if (fib->parsed()) {
      if (fib_j > 40) throw UsageError("fibword: j must be at most 40");
      const Word w = fibonacci_word(fib_j);
      if (format == "txt") {
        std::cout << w.str() << "\n";
      } else {
        Table t{{"j", "length", "word"}, {}};
        t.add({fib_j, w.size(), w.str()});
        print_table(t, format, std::cout);
      }
    } else if (bij->parsed()) {
      if (bij_m > 5000) throw UsageError("bijection: m must be at most 5000");
      const QuadraticNumber alpha = bij_slope.value();
      const IntervalPartition part = partition(alpha, bij_m);
      const std::size_t holder = part.locate(alpha);
      Table t{{"k", "left", "right", "left_decimal", "right_decimal", "factor", "parikh", "class", "contains_alpha"}, {}};
      for (const auto& f : all_factors(part)) {
        t.add({f.k, exact(f.left), exact(f.right), approx_decimal(f.left, digits), approx_decimal(f.right, digits),
               f.factor.str(), to_string(parikh(f.factor)), f.parikh_class == ParikhClass::v1 ? "v1" : "v2",
               f.k == holder});
      }
      print_table(t, format, std::cout);
    } else if (period->parsed()) {
      if (period_words.empty()) period_words = read_words(std::cin);
      if (period_words.empty()) throw UsageError("period: no input words");
      const Tier tier = tier_name == "relaxed" ? Tier::relaxed : Tier::repetition;
      Table t{{"word", "m", "h", "blocks", "tail", "exponent"}, {}};
      for (const auto& text : period_words) {
        const auto f = min_abelian_period(Word(text), tier);
        const std::string shown = text.size() > 40 ? text.substr(0, 37) + "..." : text;
        if (f) {
          t.add({format == "txt" ? shown : text, f->period, f->head, f->blocks, f->tail, exponent_cell(*f)});
        } else {
          t.add({format == "txt" ? shown : text, nullptr, nullptr, nullptr, nullptr, nullptr});
        }
      }
      print_table(t, format, std::cout);
    } else if (pre->parsed()) {
      if (!*pre_m_opt && !*pre_j_opt) throw UsageError("prefix: give -m or --j");
      const QuadraticNumber alpha = pre_slope.value();
      if (alpha.is_rational()) throw UsageError("prefix: slope must be irrational");
      const std::size_t m = *pre_j_opt ? fibonacci(pre_j).convert_to<std::size_t>() : pre_m;
      const auto rep = longest_prefix_rep(alpha, m);
      Table t{{"alpha", "m", "length", "h", "blocks", "tail", "exponent"}, {}};
      if (rep) {
        const auto& f = rep->factorization;
        t.add({exact(alpha), m, rep->length, f.head, f.blocks, f.tail, exponent_cell(f)});
      } else {
        t.add({exact(alpha), m, nullptr, nullptr, nullptr, nullptr, nullptr});
      }
      print_table(t, format, std::cout);
    } else if (scan->parsed()) {
      const QuadraticNumber alpha = scan_slope.value();
      if (scan_length < 2 * scan_max_m) throw UsageError("scan: --length must be at least 2 * --max-m");
      const ParikhIndex index(sturmian_prefix(SturmianParams(alpha, QuadraticNumber(0), scan_slope.periodic), scan_length),
                              Alphabet::binary());
      Table t{{"m", "k_m", "k_m_decimal", "k_m_over_m"}, {}};
      for (std::size_t m = 1; m <= scan_max_m; ++m) {
        const auto k = max_repetition_exponent(index, m);
        if (k) {
          t.add({m, to_string(*k), approx_decimal(*k, digits),
                 approx_decimal(*k / QuadraticNumber(static_cast<int>(m)), digits)});
        } else {
          t.add({m, nullptr, nullptr, nullptr});
        }
      }
      print_table(t, format, std::cout);
    } else if (ver->parsed()) {
      VerifyOptions opts;
      if (*ver_j) opts.j = parse_index_range(j_text);
      if (*ver_m) opts.max_m = max_m;
      if (*ver_k) opts.max_k = max_k;
      const VerifyReport report = run_verify(parse_target(target), opts);
      Table t{{"label", "expected", "actual", "status"}, {}};
      for (const auto& row : report.rows) t.add({row.label, row.expected, row.actual, row.pass ? "PASS" : "FAIL"});
      print_table(t, format, std::cout);
      const auto failed = std::count_if(report.rows.begin(), report.rows.end(), [](const VerifyRow& r) { return !r.pass; });
      if (format == "txt") {
        std::cout << report.target << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.rows.size() - failed
                  << "/" << report.rows.size() << " rows)\n";
      }
      return report.passed() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
