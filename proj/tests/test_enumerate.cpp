#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "flatpart/enumerate.hpp"
#include "flatpart/textio.hpp"
#include "test_util.hpp"

using namespace flatpart;

namespace {

SetPartition part(const char* s) { return parse_partition(s); }
Permutation perm(const char* s) { return parse_permutation(s); }

const std::vector<const char*> kPatterns{"123", "132", "213", "231", "312", "321"};

} // namespace

TEST_CASE("enumerate_partitions basics") {
  CHECK_THROWS_AS(PartitionEnumerator(0), DomainError);

  PartitionEnumerator one(1);
  CHECK(*one.next() == part("1"));
  CHECK(!one.next().has_value());

  PartitionEnumerator three(3);
  std::set<std::string> seen;
  while (auto p = three.next())
    seen.insert(format_partition(*p));
  CHECK(seen == std::set<std::string>{"1,2,3", "1,2/3", "1,3/2", "1/2,3", "1/2/3"});
}

TEST_CASE("enumeration yields Bell(n) valid partitions") {
  const auto bell = testutil::bell_numbers(12);
  for (int n = 1; n <= 12; ++n) {
    long long count = 0;
    for_each_partition(n, [&](const SetPartition& p) {
      ++count;
      // Re-validate the invariants on a sample to keep the loop cheap.
      if (count % 97 == 0)
        SetPartition::checked(p.n, p.blocks);
    });
    CHECK(bell[static_cast<std::size_t>(n)] == count);
  }
}

TEST_CASE("streaming enumerator agrees with recursive traversal") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::string> streamed;
    PartitionEnumerator e(n);
    while (auto p = e.next())
      streamed.push_back(format_partition(*p));
    std::vector<std::string> recursed;
    for_each_partition(n, [&](const SetPartition& p) {
      recursed.push_back(format_partition(p));
    });
    CHECK(streamed == recursed);
  }
}

TEST_CASE("flatten") {
  CHECK(flatten(part("136-279-4-58")) == perm("136279458"));
  CHECK(flatten(part("1/2/3")) == perm("123"));
  CHECK(flatten(part("1,3/2,4")) == perm("1324"));
}

TEST_CASE("flatten starts at 1 and is a permutation of [n]") {
  for (int n = 1; n <= 8; ++n) {
    for_each_partition(n, [&](const SetPartition& p) {
      const Permutation w = flatten(p);
      REQUIRE(w.word.front() == 1);
      Permutation::checked(w.word);
    });
  }
}

TEST_CASE("contains_pattern examples") {
  CHECK(contains_pattern(perm("1324"), perm("213")));
  CHECK(!contains_pattern(perm("1423"), perm("213")));
  CHECK(contains_pattern(perm("123"), perm("123")));
}

TEST_CASE("pattern scans agree with the naive subsequence oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& word : testutil::all_permutations(n)) {
      const Permutation w{word};
      for (const char* ps : kPatterns) {
        const Permutation pat = perm(ps);
        CHECK(contains_pattern(w, pat) == testutil::naive_contains(word, pat.word));
      }
    }
  }
}

TEST_CASE("generic matcher handles length-4 patterns") {
  for (const auto& patword : testutil::all_permutations(4)) {
    const Permutation pat{patword};
    for (const auto& word : testutil::all_permutations(6)) {
      if (word[0] != 1)
        continue; // flattenings always start at 1; thin the grid
      CHECK(contains_pattern(Permutation{word}, pat) ==
            testutil::naive_contains(word, patword));
    }
  }
}

TEST_CASE("count_avoiders examples") {
  CHECK(count_avoiders(3, perm("123")) == 1);
  CHECK(count_avoiders(4, perm("231")) == 14);
  CHECK(count_avoiders(4, perm("213")) == 13);
}

TEST_CASE("parallel counting is independent of the split") {
  for (const char* ps : kPatterns) {
    const Permutation pat = perm(ps);
    for (unsigned jobs : {2u, 3u, 8u})
      CHECK(count_avoiders(9, pat, jobs) == count_avoiders(9, pat));
  }
}

TEST_CASE("descent_terminators") {
  CHECK(descent_terminators(perm("123")) == std::vector<int>{1});
  CHECK(descent_terminators(perm("132")) == std::vector<int>{1, 2});
  CHECK(descent_terminators(perm("136279458")) == std::vector<int>{1, 2, 4});
}

TEST_CASE("rl_minima") {
  CHECK(rl_minima(perm("123")) == std::vector<int>{1, 2, 3});
  CHECK(rl_minima(perm("132")) == std::vector<int>{1, 2});
  CHECK(rl_minima(perm("1342")) == std::vector<int>{1, 2});
}

TEST_CASE("block_initiators") {
  CHECK(block_initiators(part("136-279-4-58")) == std::vector<int>{1, 2, 4, 5});
  CHECK(block_initiators(part("1,2,3")) == std::vector<int>{1});
  CHECK(block_initiators(part("1/2/3")) == std::vector<int>{1, 2, 3});
}

TEST_CASE("statistic_m") {
  CHECK(statistic_m(part("1,3/2")).empty());
  CHECK(statistic_m(part("1,2")) == std::vector<int>{2});
  CHECK(statistic_m(part("1-24-37-568")) == std::vector<int>{2, 6, 8});
}

TEST_CASE("chain inclusion: descent terminators within initiators within minima") {
  for (int n = 1; n <= 10; ++n) {
    for_each_partition(n, [&](const SetPartition& p) {
      const Permutation w = flatten(p);
      const auto terms = descent_terminators(w);
      const auto inits = block_initiators(p);
      const auto minima = rl_minima(w);
      REQUIRE(std::includes(inits.begin(), inits.end(), terms.begin(), terms.end()));
      REQUIRE(std::includes(minima.begin(), minima.end(), inits.begin(), inits.end()));
    });
  }
}

TEST_CASE("count_refined examples") {
  CHECK(count_refined(4, 1, perm("231"), Refinement::MSize) == 6);
  CHECK(count_refined(4, 0, perm("231"), Refinement::MSize) == 0);
  CHECK(count_refined(4, 2, perm("213"), Refinement::FirstBlockLength) == 4);
}

TEST_CASE("refined counts sum to the plain count") {
  for (int n = 1; n <= 9; ++n) {
    for (const char* ps : kPatterns) {
      const Permutation pat = perm(ps);
      const BigInt total = count_avoiders(n, pat);
      for (Refinement stat : {Refinement::MSize, Refinement::FirstBlockLength}) {
        BigInt sum = 0;
        for (int k = 0; k <= n; ++k)
          sum += count_refined(n, k, pat, stat);
        CHECK(sum == total);
      }
    }
  }
}
