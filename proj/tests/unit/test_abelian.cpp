#include "oracles.hpp"
#include "sturmian/abelian.hpp"
#include "sturmian/formulas.hpp"
#include "sturmian/numtheory.hpp"

#include <doctest.h>

using sturmian::QuadraticNumber;
using sturmian::Tier;
using sturmian::Word;

namespace {

const QuadraticNumber kAlpha = sturmian::golden_slope();

std::string golden_prefix(std::size_t n) {
  return oracle::sturmian_letters(oracle::to_real(kAlpha), 0, n);
}

std::size_t fib(std::size_t j) { return sturmian::fibonacci(j).convert_to<std::size_t>(); }

// Smallest (m, h) with a definition-level factorization.
std::pair<std::size_t, std::size_t> oracle_min_period(const std::string& w) {
  for (std::size_t m = 1; m <= w.size(); ++m) {
    for (std::size_t h = 0; h < m; ++h) {
      if (oracle::is_factorization(w, m, h)) return {m, h};
    }
  }
  return {0, 0};
}

}  // namespace

TEST_SUITE("abelian") {
  TEST_CASE("check_factorization examples") {
    const auto two = sturmian::check_factorization(Word("abaababa"), 2, 1);
    REQUIRE(two);
    CHECK(two->head == 1);
    CHECK(two->blocks == 3);
    CHECK(two->tail == 1);
    CHECK(two->exponent() == QuadraticNumber(4));
    CHECK(sturmian::to_string(two->block_parikh) == "(1,1)");

    const auto three = sturmian::check_factorization(Word("abaababa"), 3, 0);
    REQUIRE(three);
    CHECK(three->blocks == 2);
    CHECK(three->tail == 2);
    CHECK(three->exponent() == QuadraticNumber::rational(8, 3));

    CHECK_FALSE(sturmian::check_factorization(Word("abaab"), 1, 0));
    CHECK_THROWS_AS(sturmian::check_factorization(Word("ab"), 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(sturmian::check_factorization(Word("abab"), 2, 2), std::invalid_argument);
  }

  TEST_CASE("minimal abelian period") {
    const auto f = sturmian::min_abelian_period(Word("abaab"));
    REQUIRE(f);
    CHECK(f->period == 2);
    CHECK(f->head == 1);
    const auto single = sturmian::min_abelian_period(Word("a"));
    CHECK(single->period == 1);
    CHECK(single->head == 0);
    CHECK(sturmian::min_abelian_period(sturmian::fibonacci_word(7))->period == 5);
    // aba: a . ba under the relaxed tier, nothing with exponent >= 2 at m = 1.
    CHECK(sturmian::min_abelian_period(Word("aba"))->period == 2);
    CHECK_FALSE(sturmian::min_abelian_period(Word("aba"), Tier::repetition));
    CHECK(sturmian::min_abelian_period(Word("abab"), Tier::repetition)->period == 2);
    CHECK_THROWS_AS(sturmian::min_abelian_period(Word("")), std::invalid_argument);
  }

  TEST_CASE("property: minimal period agrees with the definition oracle") {
    oracle::QuadGen gen(41);
    for (int i = 0; i < 300; ++i) {
      std::string w;
      const std::size_t n = gen.uniform(1, 14);
      for (std::size_t k = 0; k < n; ++k) w.push_back(gen.uniform(0, 2) == 0 ? 'b' : 'a');
      const auto f = sturmian::min_abelian_period(Word(w));
      REQUIRE(f);
      CHECK(std::pair{f->period, f->head} == oracle_min_period(w));
      CHECK(oracle::is_factorization(w, f->period, f->head));
      CHECK(sturmian::check_factorization(Word(w), f->period, f->head) == f);
    }
    for (std::size_t j = 3; j <= 12; ++j) {
      const Word fw = sturmian::fibonacci_word(j);
      CHECK(sturmian::min_abelian_period(fw)->period == oracle_min_period(fw.str()).first);
    }
  }

  TEST_CASE("power runs") {
    const Word w(golden_prefix(400));
    CHECK(sturmian::max_power_run(w, 2, 2) == 3);
    CHECK(sturmian::max_power_run(Word("abaab"), 5, 1) == 1);
    CHECK(sturmian::max_power_run(w, 13, 13) == 28);
    CHECK_THROWS_AS(sturmian::max_power_run(Word("ab"), 2, 2), std::invalid_argument);

    const sturmian::ParikhIndex index(w);
    for (std::size_t m : {2, 3, 5, 7}) {
      for (std::size_t s = 1; s <= 60; ++s) CHECK(sturmian::max_power_run(index, m, s) == oracle::power_run(w.str(), m, s - 1));
    }
    CHECK(sturmian::find_abelian_power(index, 2, 3, 10) == std::optional<std::size_t>(2));
    CHECK_FALSE(sturmian::find_abelian_power(index, 2, 5, 400));
  }

  TEST_CASE("best power over starts") {
    const std::vector<std::size_t> expected = {3, 5, 10, 16, 28, 45, 75, 121};
    for (std::size_t j = 2; j <= 9; ++j) {
      const auto best = sturmian::best_power_over_starts(kAlpha, j);
      CHECK(best.exponent == expected[j - 2]);
      CHECK(std::find(best.starts.begin(), best.starts.end(), fib(j)) != best.starts.end());
    }
    // Oracle for small j: brute-force over starts with substring counting.
    for (std::size_t j = 2; j <= 6; ++j) {
      const std::size_t m = fib(j);
      const std::string w = golden_prefix(m * 40);
      std::size_t top = 0;
      for (std::size_t s = 0; s < m; ++s) top = std::max(top, oracle::power_run(w, m, s));
      CHECK(sturmian::best_power_over_starts(kAlpha, j).exponent == top);
    }
  }

  TEST_CASE("longest prefix repetitions") {
    const auto two = sturmian::longest_prefix_rep(kAlpha, 2);
    REQUIRE(two);
    CHECK(two->length == 8);
    CHECK(two->factorization.head == 1);
    CHECK(two->factorization.blocks == 3);
    CHECK(two->factorization.tail == 1);
    CHECK(sturmian::longest_prefix_rep(kAlpha, 3)->length == 19);
    const auto five = sturmian::longest_prefix_rep(kAlpha, 5);
    CHECK(five->length == 58);
    CHECK(five->factorization.head == 4);
    CHECK(five->factorization.blocks == 10);
    CHECK(five->factorization.tail == 4);

    // Oracle: scan prefix lengths downward with the definition check.
    for (std::size_t j = 2; j <= 5; ++j) {
      const std::size_t m = fib(j);
      const std::string w = golden_prefix(sturmian::prefix_search_window(kAlpha, m));
      std::size_t len = w.size() - 1;
      while (len >= 2 * m && !oracle::is_repetition(w.substr(0, len), m)) --len;
      CHECK(sturmian::longest_prefix_rep(kAlpha, m)->length == len);
    }

    for (std::size_t j = 2; j <= 10; ++j) {
      const auto rep = sturmian::longest_prefix_rep(kAlpha, fib(j));
      REQUIRE(rep);
      CHECK(rep->length == sturmian::lp_formula(j));
      CHECK((rep->length + 2) % fib(j) == 0);
      const Word prefix(golden_prefix(rep->length));
      CHECK(sturmian::check_factorization(prefix, rep->factorization.period, rep->factorization.head) ==
            rep->factorization);
    }
    CHECK_THROWS_AS(sturmian::longest_prefix_rep(QuadraticNumber::rational(1, 3), 2), std::invalid_argument);
  }

  TEST_CASE("search window") {
    // {2 alpha} ~ 0.236: ceil(1/0.236) = 5, window 2 * 9.
    CHECK(sturmian::prefix_search_window(kAlpha, 2) == 18);
    CHECK(sturmian::distance_to_integer(kAlpha, 1) == QuadraticNumber(1) - kAlpha);
    CHECK_THROWS_AS(sturmian::prefix_search_window(QuadraticNumber::rational(1, 2), 2), std::invalid_argument);
  }

  TEST_CASE("theorem 6 predicate") {
    CHECK(sturmian::theorem6_predicate(kAlpha, 2, 4, false));
    CHECK_FALSE(sturmian::theorem6_predicate(kAlpha, 2, 5, false));
    CHECK(sturmian::theorem6_predicate(kAlpha, 1, 2, false));
    CHECK_FALSE(sturmian::theorem6_predicate(kAlpha, 2, 4, true));
    CHECK_THROWS_AS(sturmian::theorem6_predicate(kAlpha, 2, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(sturmian::theorem6_predicate(QuadraticNumber::rational(1, 4), 2, 2, false), std::logic_error);

    // Float oracle for the side-aware comparison.
    const oracle::Real a = oracle::to_real(kAlpha);
    for (std::uint64_t m = 1; m <= 300; ++m) {
      const oracle::Real f = oracle::frac(m * a);
      const oracle::Real side = f < oracle::Real(0.5) ? f : 1 - f;
      for (std::uint64_t k = 2; k <= 12; ++k) {
        CHECK(sturmian::theorem6_predicate(kAlpha, m, k, false) == (side < oracle::Real(1) / k));
        CHECK(sturmian::theorem6_predicate(kAlpha, m, k, true) == (side < oracle::Real(1) / (k + 1)));
      }
    }
  }

  TEST_CASE("property: strong form gives a power starting at m") {
    const sturmian::ParikhIndex index(Word(golden_prefix(200 * 14)));
    for (std::size_t m = 1; m <= 200; ++m) {
      for (std::size_t k = 2; k <= 10; ++k) {
        if (sturmian::theorem6_predicate(kAlpha, m, k, true)) CHECK(sturmian::max_power_run(index, m, m) >= k);
      }
    }
  }

  TEST_CASE("power points") {
    CHECK(sturmian::power_points_check(kAlpha, 2, 2, 2));
    CHECK(sturmian::power_points_check(kAlpha, 5, 3, 0));
    CHECK(sturmian::power_points_check(kAlpha, 13, 13, 27));

    const Word w(golden_prefix(3000));
    const sturmian::ParikhIndex index(w);
    for (std::size_t m : {2, 3, 5, 8, 13}) {
      for (std::size_t n = 1; n <= 100; ++n) {
        const std::size_t run = sturmian::max_power_run(index, m, n);
        if (run >= 2) CHECK(sturmian::power_points_check(kAlpha, n, m, run - 1));
      }
    }
  }

  TEST_CASE("maximal repetition exponent") {
    CHECK(sturmian::k_m_empirical(kAlpha, 2, 100) == QuadraticNumber(5));
    CHECK(sturmian::k_m_empirical(kAlpha, 3, 100) == QuadraticNumber::rational(22, 3));
    CHECK(sturmian::k_m_empirical(kAlpha, 2, 4) == QuadraticNumber(2));
    CHECK_THROWS_AS(sturmian::k_m_empirical(kAlpha, 3, 5), std::invalid_argument);
    CHECK(*sturmian::k_m_empirical(kAlpha, 8, 3000) >= QuadraticNumber::rational(142, 8));

    const std::string w = golden_prefix(100);
    for (std::size_t m = 1; m <= 8; ++m) {
      const auto got = sturmian::k_m_empirical(kAlpha, m, 100);
      const std::size_t len = oracle::longest_repetition(w, m);
      if (len == 0) {
        CHECK_FALSE(got);
      } else {
        CHECK(got == QuadraticNumber::rational(len, m));
      }
    }

    // Random words over {a, b, c}.
    oracle::QuadGen gen(43);
    for (int i = 0; i < 60; ++i) {
      std::string r;
      for (int k = 0; k < 30; ++k) r.push_back("abc"[gen.uniform(0, i % 2 == 0 ? 1 : 2)]);
      const sturmian::ParikhIndex idx(Word(r), sturmian::Alphabet("abc"));
      for (std::size_t m = 1; m <= 5; ++m) {
        const std::size_t len = oracle::longest_repetition(r, m);
        const auto got = sturmian::max_repetition_exponent(idx, m);
        CHECK(got.has_value() == (len > 0));
        if (got) CHECK(*got == QuadraticNumber::rational(len, m));
      }
    }
  }
}
