#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pascalforms/verify.hpp"

using namespace pascalforms;

TEST_CASE("identity checks pass and stamp their parameters") {
  const CheckReport one = verify_identity(1, 5);
  CHECK(one.passed);
  CHECK(one.check_id == "identity1");
  CHECK(one.n == 5);
  CHECK(!one.r.has_value());
  CHECK(!one.witness.has_value());

  CHECK(verify_identity(2, 6).passed);

  for (Index n = 2; n <= 8; ++n)
    for (long r = 1; r <= n - 1; ++r) {
      CHECK(verify_identity(3, n, r).passed);
      CHECK(verify_identity(4, n, r).passed);
    }

  const CheckReport four = verify_identity(4, 6, 2);
  CHECK(four.passed);
  CHECK(four.r == 2);
}

TEST_CASE("identity checks reject bad parameters") {
  CHECK_THROWS_AS(verify_identity(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(3, 4), std::invalid_argument);       // missing r
  CHECK_THROWS_AS(verify_identity(3, 4, 4), std::invalid_argument);    // r too large
  CHECK_THROWS_AS(verify_identity(4, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(1, 0), std::invalid_argument);
}

TEST_CASE("the eigenvector theorem holds") {
  CHECK(verify_theorem2(1).passed);
  CHECK(verify_theorem2(5).passed);
  for (Index n = 1; n <= 10; ++n) CHECK(verify_theorem2(n).passed);
}

TEST_CASE("eigenvalues recovered by the conjugation are 1..n") {
  const Index n = 6;
  const IntMatrix cyc = shifted_matrix(ShiftedKind::cycle, n);
  const IntMatrix conj = mul(mul(cyc, shifted_matrix(ShiftedKind::binomial, n)),
                             inverse_unitriangular(cyc));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      CHECK(conj(i, j) == (i == j ? Int(i + 1) : Int(0)));
}

TEST_CASE("both summation formulas count colored cycle partitions") {
  const auto [l311, r311] = combinatorial_sides(3, 1, 1);
  CHECK(l311 == 9);
  CHECK(r311 == 9);
  CHECK(enumerate_colored_cycle_partitions(3, 1, 1) == 9);

  const auto [l331, r331] = combinatorial_sides(3, 3, 1);
  CHECK(l331 == 0);
  CHECK(r331 == 0);

  const auto [l412, r412] = combinatorial_sides(4, 1, 2);
  CHECK(l412 == 60);
  CHECK(r412 == 60);
  CHECK(enumerate_colored_cycle_partitions(4, 1, 2) == 60);

  // more black labels than cycles
  CHECK(enumerate_colored_cycle_partitions(3, 5, 1) == 0);
}

TEST_CASE("formulas agree with enumeration over the whole small range") {
  for (long n = 1; n <= 7; ++n)
    for (long m = 0; m <= n; ++m)
      for (long r = 1; r <= n; ++r) {
        const auto [left, right] = combinatorial_sides(n, m, r);
        const Int enumerated = enumerate_colored_cycle_partitions(n, m, r);
        CHECK(left == right);
        CHECK(right == enumerated);
      }
}

TEST_CASE("explicit color assignments give the same counts") {
  // this oracle enumerates the colorings themselves, sharing nothing with
  // the weighted enumeration above
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= n; ++m)
      for (int r = 1; r <= n; ++r)
        CHECK(enumerate_colored_cycle_partitions(n, m, r) ==
              testing::count_colored_cycle_partitions_direct(n, m, r));
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_colored_cycle_partitions(10, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_colored_cycle_partitions(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_colored_cycle_partitions(3, 1, 0), std::invalid_argument);
}

TEST_CASE("closed form check") {
  CHECK(verify_closed_form(4, 0).passed);
  CHECK(verify_closed_form(6, 2).passed);
  const CheckReport nil = verify_closed_form(5, 5);  // both sides zero
  CHECK(nil.passed);
  CHECK(nil.r == 5);
}

TEST_CASE("convolution check") {
  const Seq delta({1, 0, 0, 0, 0, 0});
  CHECK(verify_convolution(delta, Seq::sets(6), 6).passed);

  CHECK(verify_convolution(Seq::sets(6), Seq::sets(6), 6).passed);
  const IntMatrix prod = mul(generalized_pascal(Seq::sets(6), 6),
                             generalized_pascal(Seq::sets(6), 6));
  CHECK(matrix_equal(prod, closed_form_power(6, 2)));

  std::mt19937 rng(31);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 8);
    std::vector<Int> c(static_cast<std::size_t>(n)), d(static_cast<std::size_t>(n));
    for (auto& e : c) e = entry(rng);
    for (auto& e : d) e = entry(rng);
    CHECK(verify_convolution(Seq(std::move(c)), Seq(std::move(d)), n).passed);
  }
  CHECK_THROWS_AS(verify_convolution(delta, delta, 7), std::invalid_argument);
}

TEST_CASE("open-question exploration") {
  for (const CheckReport& report : explore_open_question(StirlingKind::partition, 2, 8)) {
    CHECK(report.passed);
    CHECK(report.check_id == "explore-stirling-partition");
    CHECK(report.r == 2);
  }

  const auto tiny = explore_open_question(StirlingKind::cycle, 1, 2);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny.front().passed);

  for (long r = 1; r <= 2; ++r)
    for (const CheckReport& report : explore_open_question(StirlingKind::cycle, r, 8))
      CHECK(report.passed);

  CHECK_THROWS_AS(explore_open_question(StirlingKind::cycle, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(explore_open_question(StirlingKind::cycle, 3, 3), std::invalid_argument);
}

TEST_CASE("report lines follow the record grammar") {
  CheckReport ok;
  ok.check_id = "identity4";
  ok.n = 6;
  ok.r = 2;
  ok.passed = true;
  CHECK(format_report(ok) == "check=identity4 n=6 r=2 passed=true");

  CheckReport bad;
  bad.check_id = "convolution";
  bad.n = 3;
  bad.m = 1;
  bad.passed = false;
  bad.witness = CheckWitness{2, 1, "5", "7"};
  CHECK(format_report(bad) == "check=convolution n=3 m=1 passed=false witness=(2,1): lhs=5 rhs=7");
}

TEST_CASE("checks are deterministic") {
  const CheckReport a = verify_identity(3, 7, 3);
  const CheckReport b = verify_identity(3, 7, 3);
  CHECK(format_report(a) == format_report(b));
}
