#include "sturmian/verify.hpp"
#include "sturmian/words.hpp"

#include <doctest.h>

using sturmian::VerifyOptions;
using sturmian::VerifyTarget;

TEST_SUITE("verify") {
  TEST_CASE("target names round trip") {
    for (const auto& name : sturmian::target_names()) {
      CHECK(sturmian::target_name(sturmian::parse_target(name)) == name);
    }
    CHECK_THROWS_AS(sturmian::parse_target("table3"), std::invalid_argument);
  }

  TEST_CASE("index ranges and slopes") {
    const auto r = sturmian::parse_index_range("3..16");
    CHECK(r.first == 3);
    CHECK(r.last == 16);
    CHECK(sturmian::parse_index_range("7").first == 7);
    CHECK_THROWS_AS(sturmian::parse_index_range("3..x"), std::invalid_argument);
    CHECK_THROWS_AS(sturmian::parse_index_range(""), std::invalid_argument);

    CHECK(sturmian::parse_slope("fib", false) == sturmian::golden_slope());
    CHECK_THROWS_AS(sturmian::parse_slope("ratio:1/3", false), std::invalid_argument);
    CHECK(sturmian::parse_slope("ratio:1/3", true) == sturmian::QuadraticNumber::rational(1, 3));
    CHECK_THROWS_AS(sturmian::parse_slope("quad:1,1,2,5", false), std::invalid_argument);
    CHECK(sturmian::printed_digits("8.393") == 3);
    CHECK(sturmian::printed_digits("12") == 0);
  }

  TEST_CASE("published tables replay") {
    const auto t1 = sturmian::run_verify(VerifyTarget::table1, {sturmian::IndexRange{2, 8}, {}, {}});
    CHECK(t1.rows.size() == 7);
    CHECK(t1.passed());
    const auto t2 = sturmian::run_verify(VerifyTarget::table2);
    CHECK(t2.rows.size() == 14);
    CHECK(t2.passed());
  }

  TEST_CASE("exact targets") {
    CHECK(sturmian::run_verify(VerifyTarget::identity).passed());
    CHECK(sturmian::run_verify(VerifyTarget::corollary5).passed());
    CHECK(sturmian::run_verify(VerifyTarget::proposition6, {sturmian::IndexRange{2, 7}, {}, {}}).passed());
    VerifyOptions small;
    small.max_m = 25;
    CHECK(sturmian::run_verify(VerifyTarget::lexorder, small).passed());
    CHECK(sturmian::run_verify(VerifyTarget::parikh_split, small).rows.size() == 5);
    CHECK(sturmian::run_verify(VerifyTarget::parikh_split, small).passed());
  }

  TEST_CASE("abelian power window consistency for small periods") {
    VerifyOptions opts;
    opts.max_m = 17;
    opts.max_k = 10;
    const auto report = sturmian::run_verify(VerifyTarget::theorem6, opts);
    CHECK(report.rows.size() == 17);
    CHECK(report.passed());
  }

  TEST_CASE("bounds are enforced") {
    CHECK_THROWS_AS(sturmian::run_verify(VerifyTarget::table1, {sturmian::IndexRange{2, 12}, {}, {}}),
                    sturmian::RangeError);
    CHECK_THROWS_AS(sturmian::run_verify(VerifyTarget::table2, {sturmian::IndexRange{2, 5}, {}, {}}),
                    sturmian::RangeError);
    VerifyOptions big;
    big.max_m = 2001;
    CHECK_THROWS_AS(sturmian::run_verify(VerifyTarget::theorem6, big), sturmian::RangeError);
    big.max_m = 201;
    CHECK_THROWS_AS(sturmian::run_verify(VerifyTarget::lexorder, big), sturmian::RangeError);
  }
}
