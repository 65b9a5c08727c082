#include <doctest.h>

#include <random>

#include "fractal/errors.hpp"
#include "fractal/fixtures.hpp"
#include "fractal/linear_code.hpp"
#include "oracles.hpp"

using namespace fractal;

namespace {

LinearCode code(std::size_t n, std::vector<std::string> rows) {
  return LinearCode::from_rows(BitMatrix::from_strings(n, rows));
}

std::uint32_t d(const LinearCode& c) { return c.min_distance().value(); }

}  // namespace

TEST_CASE("distance type") {
  CHECK(Distance(3) < Distance::infinite());
  CHECK(Distance::infinite().to_string() == "INFINITE");
  CHECK(Distance(5).to_string() == "5");
  CHECK_THROWS_AS((void)Distance::infinite().value(), std::logic_error);
}

TEST_CASE("construction from rows") {
  const auto d1 = code(3, {"111"});
  const auto d2 = code(3, {".11", "11."});
  CHECK(d1.dimension() == 1);
  CHECK(d(d1) == 3);
  CHECK(d2.dimension() == 2);
  CHECK(d(d2) == 2);
  const auto z = LinearCode::zero(5);
  CHECK(z.is_zero());
  CHECK(z.min_distance().is_infinite());
  CHECK(z.params_string() == "(5,0,INFINITE)");
  CHECK_THROWS_AS(LinearCode::zero(0), DimensionMismatch);
  CHECK_THROWS_AS(BitMatrix::from_strings(3, {"111", "11"}), DimensionMismatch);
}

TEST_CASE("distances") {
  CHECK(d(repetition(7)) == 7);
  const auto golay = LinearCode::from_rows(fixtures::golay_printed_generator());
  CHECK(golay.dimension() == 12);
  CHECK(d(golay) == 8);
  const auto a = golay.weight_distribution();
  CHECK(a[8] == 759);
  CHECK(a[12] == 2576);

  std::mt19937_64 rng(31);
  const auto random = LinearCode::from_rows(oracle::to_bits(oracle::random_rows(rng, 5, 10), 10));
  CHECK(d(random) == oracle::min_distance(oracle::to_mat(random), 10));
}

TEST_CASE("weight distribution") {
  CHECK(repetition(3).weight_distribution() == std::vector<std::uint64_t>{1, 0, 0, 1});
  CHECK(LinearCode::zero(4).weight_distribution() == std::vector<std::uint64_t>{1, 0, 0, 0, 0});
}

TEST_CASE("budget") {
  const auto golay = LinearCode::from_rows(fixtures::golay_printed_generator());
  CHECK_THROWS_AS(golay.min_distance(4095), BudgetExceeded);
  try {
    (void)golay.min_distance(100);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 4096);
    CHECK(e.dimension() == 12);
  }
  CHECK(d(golay) == 8);
}

TEST_CASE("tensor products") {
  const auto c1 = fixtures::golay_c1();
  const auto t = tensor_product(c1, repetition(3));
  CHECK(t.length() == 24);
  CHECK(t.dimension() == 4);
  CHECK(d(t) == 12);
  CHECK(tensor_product(c1, LinearCode::zero(3)).is_zero());
  CHECK(tensor_product(c1, LinearCode::zero(3)).length() == 24);
  const auto rr = tensor_product(repetition(2), repetition(2));
  CHECK(rr.dimension() == 1);
  CHECK(d(rr) == 4);
}

TEST_CASE("sum and intersection of codes") {
  const auto s = code_sum(fixtures::golay_d1(), fixtures::golay_d2());
  CHECK(s.dimension() == 3);
  CHECK(d(s) == 1);
  CHECK(code_intersection(fixtures::golay_d1(), fixtures::golay_d2()).is_zero());
  const auto meet = code_intersection(puncture(fixtures::golay_c1(), 7), puncture(fixtures::golay_c2(), 7));
  CHECK(meet.dimension() == 1);
  CHECK(d(meet) == 7);
  CHECK_THROWS_AS(code_sum(repetition(3), repetition(4)), DimensionMismatch);
}

TEST_CASE("puncture") {
  const auto p = puncture(fixtures::golay_c1(), 7);
  CHECK(p.length() == 7);
  CHECK(p.dimension() == 4);
  CHECK(d(p) == 3);
  const auto z = puncture(LinearCode::zero(5), 2);
  CHECK(z.is_zero());
  CHECK(z.length() == 4);
  const auto r = puncture(repetition(3), 0);
  CHECK(r.params_string() == "(2,1,?)");
  CHECK(d(r) == 2);
  CHECK_THROWS_AS(puncture(repetition(3), 3), IndexOutOfRange);
}

TEST_CASE("standard codes and text input") {
  CHECK(even_weight(4).dimension() == 3);
  CHECK(d(even_weight(4)) == 2);
  CHECK(universe(7).dimension() == 7);
  CHECK(d(universe(7)) == 1);
  CHECK(from_text("...11.11").generator().row(0).to_string() == "00011011");
  CHECK(from_text("1.1\n\n.11\n") == from_text("101\n011\n"));
  CHECK_THROWS_AS(from_text("101\n01\n"), ParseError);
  CHECK_THROWS_AS(from_text("1a1\n"), ParseError);
  try {
    (void)from_text("101\n1a1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
  CHECK(from_text("", 6).is_zero());
}

TEST_CASE("containment and minimum-weight words") {
  const auto c1 = fixtures::golay_c1();
  CHECK(c1.contains(repetition(8)));
  CHECK(even_weight(8).contains(c1));
  CHECK_FALSE(c1.contains(even_weight(8)));
  const auto w = c1.min_weight_codeword();
  CHECK(w.weight() == 4);
  CHECK(c1.contains(w));
  CHECK_THROWS_AS(LinearCode::zero(3).min_weight_codeword(), FamilyError);
}

TEST_CASE("randomized code invariants") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::size_t> len(2, 12), rows(0, 6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = len(rng);
    const auto raw = oracle::random_rows(rng, rows(rng), n);
    const auto c = LinearCode::from_rows(oracle::to_bits(raw, n));
    const auto expected = oracle::min_distance(raw, n);
    if (c.is_zero()) {
      CHECK(expected == 0);
      CHECK(c.min_distance().is_infinite());
      continue;
    }
    CHECK(d(c) == expected);
    CHECK(LinearCode::from_rows(c.generator()).min_distance() == c.min_distance());
    const auto a = c.weight_distribution();
    std::uint64_t total = 0;
    for (auto x : a) total += x;
    CHECK(total == (std::uint64_t{1} << c.dimension()));
    std::size_t first = 1;
    while (a[first] == 0) ++first;
    CHECK(first == expected);
    CHECK(a == oracle::weight_distribution(raw, n));
  }
}

TEST_CASE("product distance multiplies") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto a = oracle::random_code(rng, 2 + rng() % 5, 4);
    const auto b = oracle::random_code(rng, 2 + rng() % 5, 4);
    if (a.dimension() * b.dimension() > 16) continue;
    CHECK(d(tensor_product(a, b)) == d(a) * d(b));
  }
}

TEST_CASE("puncturing moves the distance by at most one") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto c = oracle::random_code(rng, 3 + rng() % 8, 5);
    const std::size_t column = rng() % c.length();
    const auto p = puncture(c, column);
    if (p.dimension() < c.dimension()) continue;
    const auto before = d(c);
    const auto after = p.min_distance();
    REQUIRE_FALSE(after.is_infinite());
    CHECK(after.value() <= before);
    CHECK(after.value() + 1 >= before);
  }
}
