#include <doctest.h>

#include <random>

#include "posclass/error.hpp"
#include "posclass/json_io.hpp"
#include "posclass/partition.hpp"
#include "posclass/schur_vector.hpp"
#include "support.hpp"

using namespace posclass;
namespace ts = testsupport;

TEST_CASE("partition basics") {
  CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK(complement(Partition{2, 1}, 2, 2) == Partition{1});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{2, 1}), Error);
  CHECK_THROWS_AS(complement(Partition{3}, 2, 2), Error);
  for (const auto& lambda : partitions_of(6, 3, 3))
    CHECK(complement(complement(lambda, 3, 3), 3, 3) == lambda);
  CHECK(parse_partition("[3,1,1]") == Partition{3, 1, 1});
  CHECK(parse_partition("[]").empty());
  CHECK(format_partition(Partition{2, 1}) == "[2,1]");
}

TEST_CASE("syt_count") {
  CHECK(syt_count(Partition{2, 1}) == 2);
  CHECK(syt_count(Partition{2, 2}) == 2);
  CHECK(syt_count(Partition{}) == 1);
  // Against SSYT with all-ones content.
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : ts::partitions(size, size))
      CHECK(syt_count(Partition(lambda)) ==
            ts::ssyt_count(lambda, std::vector<int>(static_cast<std::size_t>(size), 1)));
}

TEST_CASE("kostka numbers against brute force") {
  CHECK(kostka_number(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(kostka_number(Partition{1, 1}, Partition{2}) == 0);
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : ts::partitions(size, size))
      for (const auto& mu : ts::partitions(size, size)) {
        CHECK(kostka_number(Partition(lambda), Partition(mu)) == ts::ssyt_count(lambda, mu));
        if (lambda == mu) CHECK(kostka_number(Partition(lambda), Partition(mu)) == 1);
      }
  CHECK_THROWS_AS(kostka_number(Partition{2}, Partition{1}), Error);
}

TEST_CASE("ring arithmetic") {
  SchurVector f(2, 2);
  f.add_term(Partition{2, 1}, 3);
  f.add_term(Partition{1}, -2);
  CHECK((f + scale(f, -1)).is_zero());
  CHECK(scale(SchurVector::basis(2, 2, Partition{1}), 3).coefficient(Partition{1}) == 3);
  SchurVector g(2, 2);
  g.add_term(Partition{2, 2}, 1);
  g.add_term(Partition{1, 1, 1, 1}, -1);  // leaves the rectangle
  CHECK(is_schur_positive(g));
  CHECK(g.terms().size() == 1);
  CHECK_THROWS_AS(f += SchurVector(2, 3), Error);
}

TEST_CASE("Pieri, omega and delta") {
  CHECK(multiply_by_s1(SchurVector::basis(2, 2, {})) == SchurVector::basis(2, 2, Partition{1}));
  CHECK(multiply_by_s1(SchurVector::basis(2, 2, Partition{2, 2})).is_zero());
  SchurVector expected(2, 2);
  expected.add_term(Partition{2}, 1);
  expected.add_term(Partition{1, 1}, 1);
  CHECK(multiply_by_s1(SchurVector::basis(2, 2, Partition{1})) == expected);

  CHECK(omega_dual(SchurVector::basis(2, 2, Partition{2, 1})) ==
        SchurVector::basis(2, 2, Partition{2, 1}));
  CHECK(omega_dual(SchurVector::basis(1, 2, Partition{2})) ==
        SchurVector::basis(2, 1, Partition{1, 1}));

  CHECK(delta(SchurVector::basis(3, 2, Partition::rectangle(3, 2))) == 1);
  CHECK(delta(SchurVector::basis(2, 2, {})) == 2);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 3);
    const int degree = static_cast<int>(rng() % static_cast<unsigned>(k * m));
    SchurVector f(k, m);
    for (const auto& lambda : partitions_of(degree, k, m))
      f.add_term(lambda, static_cast<int>(rng() % 7) - 3);
    CHECK(omega_dual(omega_dual(f)) == f);
    CHECK(delta(multiply_by_s1(f)) == delta(f));
    CHECK(is_homogeneous_of_degree(f, degree));
  }
}

TEST_CASE("monomial to Schur peel") {
  // s_22 + s_211 - s_1111 in four variables, expanded with brute-force Kostka.
  const std::map<std::vector<int>, int> schur{{{2, 2}, 1}, {{2, 1, 1}, 1}, {{1, 1, 1, 1}, -1}};
  std::map<Partition, BigInt> table;
  for (const auto& mu : ts::partitions(4, 4)) {
    BigInt c = 0;
    for (const auto& [lambda, coeff] : schur) c += coeff * ts::ssyt_count(lambda, mu);
    if (c != 0) table[Partition(mu)] = c;
  }
  const auto back = schur_expand_from_monomials(table, 4);
  CHECK(back.size() == 3);
  CHECK(back.at(Partition{2, 2}) == 1);
  CHECK(back.at(Partition{2, 1, 1}) == 1);
  CHECK(back.at(Partition{1, 1, 1, 1}) == -1);

  // m_{1,1,1} alone in two variables cannot come from a symmetric polynomial.
  CHECK_THROWS_AS(schur_expand_from_monomials({{Partition{1, 1, 1}, 1}}, 2), Error);
}

TEST_CASE("text and JSON") {
  SchurVector f(3, 3);
  f.add_term(Partition{2, 2}, 1);
  f.add_term(Partition{2, 1, 1}, 2);
  f.add_term(Partition{3, 1}, -1);
  CHECK(format_schur_text(f) == "2 * s[2,1,1] + 1 * s[2,2] - 1 * s[3,1]");
  CHECK(format_schur_text(SchurVector(2, 2)) == "0");
  CHECK(schur_vector_from_json(to_json_string(f)) == f);
  f.add_term(Partition{1, 1, 1, 1}, 5);  // dropped
  SchurVector huge(2, 2);
  huge.add_term(Partition{2}, BigInt("123456789012345678901234567890"));
  const std::string text = to_json_string(huge);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(schur_vector_from_json(text) == huge);
  CHECK(to_json_string(f) ==
        R"({"k":3,"m":3,"terms":[{"coeff":2,"partition":[2,1,1]},{"coeff":1,"partition":[2,2]},{"coeff":-1,"partition":[3,1]}]})");
}
