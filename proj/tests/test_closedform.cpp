#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatpart/closedform.hpp"
#include "flatpart/enumerate.hpp"
#include "flatpart/sequences.hpp"
#include "flatpart/textio.hpp"

using namespace flatpart;

namespace {

SetPartition part(const char* s) { return parse_partition(s); }

const std::vector<Pattern> kAll{Pattern::P123, Pattern::P132, Pattern::P213,
                                Pattern::P231, Pattern::P312, Pattern::P321};

} // namespace

TEST_CASE("count_formula examples") {
  CHECK(count_formula(3, Pattern::P123) == 1);
  CHECK(count_formula(5, Pattern::P213) == 34); // F_9
  CHECK(count_formula(6, Pattern::P321) == 188);
  CHECK_THROWS_AS(count_formula(0, Pattern::P123), DomainError);
}

TEST_CASE("count_formula agrees with the enumeration oracle") {
  for (int n = 1; n <= 9; ++n)
    for (Pattern pat : kAll)
      CHECK(count_formula(n, pat) == count_avoiders(n, pattern_word(pat)));
}

TEST_CASE("refined_formula examples") {
  CHECK(refined_formula(4, 3, Pattern::P231) == 8); // binom(3,3) 2^3 C_0
  CHECK(refined_formula(4, 2, Pattern::P231) == 0); // C_{1/2} = 0
  CHECK(refined_formula(4, 0, Pattern::P321) == 1); // R_3
  CHECK(refined_formula(4, 7, Pattern::P231) == 0); // binomial vanishes
  CHECK_THROWS_AS(refined_formula(4, 1, Pattern::P132), DomainError);
}

TEST_CASE("refined_formula agrees with the enumeration oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (Pattern pat : {Pattern::P231, Pattern::P321}) {
      for (int k = 0; k <= n; ++k)
        CHECK(refined_formula(n, k, pat) ==
              count_refined(n, k, pattern_word(pat), Refinement::MSize));
    }
  }
}

TEST_CASE("u_system values") {
  const UTable t = u_system(5);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(4, 1) == 5);
  CHECK(t.at(4, 2) == 4);
  CHECK(t.at(4, 3) == 3);
  CHECK(t.at(4, 4) == 1);
  CHECK(t.row_sum(4) == 13);
  CHECK(t.at(5, 1) == 13);
  CHECK_THROWS_AS(t.at(6, 1), DomainError);
}

TEST_CASE("u closed solution u(n,j) = j F_{2n-2j-1}") {
  const UTable t = u_system(30);
  for (int n = 1; n <= 30; ++n) {
    for (int j = 1; j < n; ++j)
      CHECK(t.at(n, j) == j * fibonacci(2LL * n - 2 * j - 1));
    CHECK(t.row_sum(n) == fibonacci(2LL * n - 1));
  }
}

TEST_CASE("u table matches the first-block refinement for 213 and 312") {
  const UTable t = u_system(8);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const BigInt brute213 =
          count_refined(n, k, pattern_word(Pattern::P213), Refinement::FirstBlockLength);
      const BigInt brute312 =
          count_refined(n, k, pattern_word(Pattern::P312), Refinement::FirstBlockLength);
      CHECK(t.at(n, k) == brute213);
      CHECK(t.at(n, k) == brute312);
    }
  }
}

TEST_CASE("touchard identity") {
  CHECK(verify_touchard(1));
  CHECK(verify_touchard(3));
  for (int n = 1; n <= 30; ++n)
    CHECK(verify_touchard(n));
}

TEST_CASE("riordan-catalan identity") {
  CHECK(verify_identity5(0));
  CHECK(verify_identity5(2));
  for (int n = 0; n <= 30; ++n)
    CHECK(verify_identity5(n));
}

TEST_CASE("characterization examples") {
  CHECK(characterize_132(part("1,2/3/4")));
  CHECK(!characterize_132(part("1,3/2")));
  CHECK(characterize_132(part("1/2,3")));

  CHECK(characterize_213(part("1,4/2,3")));
  CHECK(!characterize_213(part("1,3/2,4")));
  CHECK(characterize_213(part("1,2,3,4,5")));

  CHECK(characterize_312(part("1,3/2,4")));
  CHECK(!characterize_312(part("1,4/2,3")));
  CHECK(characterize_312(part("1,2,3,4,5")));
}

TEST_CASE("characterizations agree with direct avoidance") {
  for (int n = 1; n <= 10; ++n) {
    for_each_partition(n, [&](const SetPartition& p) {
      const Permutation w = flatten(p);
      REQUIRE(characterize_132(p) ==
              !contains_pattern(w, pattern_word(Pattern::P132)));
      REQUIRE(characterize_213(p) ==
              !contains_pattern(w, pattern_word(Pattern::P213)));
      REQUIRE(characterize_312(p) ==
              !contains_pattern(w, pattern_word(Pattern::P312)));
    });
  }
}
