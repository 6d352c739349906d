#include <catch2/catch_amalgamated.hpp>

#include "qfock/partition.hpp"

#include <set>

using namespace qfock;

TEST_CASE("conjugate") {
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition{2, 2, 2}.conjugate() == Partition{3, 3});
}

TEST_CASE("conjugate is an involution and anti-automorphism of dominance") {
  for (int n = 0; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      CHECK(a.conjugate().conjugate() == a);
      for (const auto& b : ps) {
        bool ab = dominated(a, b);
        bool ba = dominated(b.conjugate(), a.conjugate());
        CHECK(ab == ba);
      }
    }
  }
}

TEST_CASE("dominance") {
  CHECK(dominated(Partition{1, 1, 1}, Partition{2, 1}));
  CHECK(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) ==
        Dominance::incomparable_or_unequal_weight);
  CHECK(dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}) ==
        Dominance::incomparable_or_unequal_weight);
  CHECK(dominated(Partition{2, 1}, Partition{2, 1}));
}

TEST_CASE("arm and leg") {
  Partition lam{3, 2};
  CHECK(lam.arm({1, 1}) == 2);
  CHECK(lam.leg({1, 1}) == 1);
  CHECK(Partition{1}.arm({1, 1}) == 0);
  CHECK(Partition{1}.leg({1, 1}) == 0);
  CHECK(lam.arm({2, 2}) == 0);
  CHECK(lam.leg({2, 2}) == 0);
  CHECK_THROWS_AS(lam.arm({3, 1}), std::domain_error);
}

TEST_CASE("cell count equals weight, arms sum row-wise") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& lam : partitions_of(n)) {
      CHECK(int(lam.cells().size()) == lam.weight());
      for (int i = 1; i <= lam.length(); ++i) {
        int arms = 0;
        for (int j = 1; j <= lam.part(i); ++j) arms += lam.arm({i, j});
        // arms in row i sum to lambda_i choose 2 pattern: sum_{a=0}^{l-1} a
        int l = lam.part(i);
        CHECK(arms == l * (l - 1) / 2);
      }
    }
}

TEST_CASE("z_lambda") {
  CHECK(Partition{2, 1}.z() == 2);
  CHECK(Partition{1, 1, 1}.z() == 6);
  CHECK(Partition{}.z() == 1);
}

TEST_CASE("z_lambda counts centralizers: n!/z = number of permutations of cycle type") {
  // brute-force enumeration of cycle types over S_n
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> perm(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
    std::map<std::vector<int>, long> counts;
    do {
      std::vector<bool> seen(static_cast<size_t>(n), false);
      std::vector<int> type;
      for (int i = 0; i < n; ++i) {
        if (seen[size_t(i)]) continue;
        int len = 0, j = i;
        while (!seen[size_t(j)]) {
          seen[size_t(j)] = true;
          j = perm[size_t(j)];
          ++len;
        }
        type.push_back(len);
      }
      std::sort(type.rbegin(), type.rend());
      counts[type]++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Int nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    for (const auto& [type, cnt] : counts) {
      Partition lam(type);
      CHECK(nfact / lam.z() == cnt);
    }
  }
}

TEST_CASE("partitions_of enumeration and order") {
  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition{1, 1, 1});
  CHECK(p3[1] == Partition{2, 1});
  CHECK(p3[2] == Partition{3});

  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == Partition{});

  auto p4 = partitions_of(4, 2);
  REQUIRE(p4.size() == 3);
  CHECK(p4[0] == Partition{2, 2});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{4});
}

TEST_CASE("order refines dominance") {
  for (int n = 0; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j)
        CHECK(!strictly_dominated(ps[j], ps[i]));
  }
}

TEST_CASE("counts match the pentagonal recurrence") {
  long expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    CHECK(Int(expect[n]) == partition_count(n));
    CHECK(Int(long(partitions_of(n).size())) == partition_count(n));
  }
}

TEST_CASE("containment") {
  CHECK(Partition{2, 1}.contains(Partition{1}));
  CHECK(!Partition{2, 1}.contains(Partition{2, 2}));
  for (const auto& lam : partitions_of(5)) CHECK(lam.contains(Partition{}));
}

TEST_CASE("textual form round-trips") {
  CHECK(Partition{3, 1}.str() == "(3,1)");
  CHECK(Partition{}.str() == "()");
  CHECK(Partition::parse("(3,1)") == Partition{3, 1});
  CHECK(Partition::parse("()") == Partition{});
}
