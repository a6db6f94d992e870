#include "doctest.h"
#include "helpers.hpp"

#include <random>

#include "ilat/constructions.hpp"
#include "ilat/partition.hpp"

using namespace ilat;
using namespace ilat::testing;

namespace {

Partition make(std::vector<std::uint8_t> cid) {
  Partition p(std::move(cid));
  p.canonicalize();
  return p;
}

// Smallest equivalence containing both, by matrix closure. Independent of the
// union-find join under test.
Partition oracle_join(const Partition& p, const Partition& q) {
  const int n = p.n();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rel[x][y] = p.cid[x] == p.cid[y] || q.cid[x] == q.cid[y];
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (rel[x][y])
          for (int z = 0; z < n; ++z)
            if (rel[y][z] && !rel[x][z]) {
              rel[x][z] = true;
              changed = true;
            }
  }
  std::vector<std::uint8_t> cid(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y <= x; ++y)
      if (rel[x][y]) {
        cid[x] = static_cast<std::uint8_t>(y);
        break;
      }
  return Partition(std::move(cid));
}

}  // namespace

TEST_CASE("identity and all") {
  auto d = Partition::identity(4);
  auto a = Partition::all(4);
  CHECK(d.num_classes() == 4);
  CHECK(a.num_classes() == 1);
  CHECK(d.is_identity());
  CHECK(a.is_all());
  CHECK(d.refines(a));
  CHECK_FALSE(a.refines(d));
}

TEST_CASE("meet with identity, join with all") {
  auto p = make({0, 0, 2, 2, 4});
  CHECK(partition_meet(p, Partition::identity(5)) == Partition::identity(5));
  CHECK(partition_join(p, Partition::all(5)) == Partition::all(5));
  CHECK(partition_meet(p, Partition::all(5)) == p);
  CHECK(partition_join(p, Partition::identity(5)) == p);
}

TEST_CASE("chaining join on three elements") {
  auto p = make({0, 0, 2});  // {0,1},{2}
  auto q = make({0, 1, 1});  // {0},{1,2}
  CHECK(partition_join(p, q) == Partition::all(3));
}

TEST_CASE("size mismatch is rejected") {
  CHECK_THROWS_AS(partition_join(Partition::identity(3), Partition::identity(4)), Error);
  CHECK_THROWS_AS(partition_meet(Partition::identity(3), Partition::identity(4)), Error);
}

TEST_CASE("partition lattice of a 4-set against the brute-force table") {
  auto parts = all_equivalences(4);
  REQUIRE(parts.size() == 15);
  for (const auto& p : parts)
    for (const auto& q : parts) {
      CHECK(partition_join(p, q) == oracle_join(p, q));
      // meet oracle: common refinement built from pairs directly
      Partition m = partition_meet(p, q);
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
          bool expect = p.cid[x] == p.cid[y] && q.cid[x] == q.cid[y];
          CHECK((m.cid[x] == m.cid[y]) == expect);
        }
    }
}

TEST_CASE("prime of identity and all") {
  auto inv = b6().invol;
  CHECK(prime_of(Partition::identity(6), inv) == Partition::identity(6));
  CHECK(prime_of(Partition::all(6), inv) == Partition::all(6));
}

TEST_CASE("prime fixes the published B6 congruences") {
  // Both halving congruences of B6 are involution-invariant: the involution
  // swaps their two blocks.
  auto B = b6();
  // labels 0,a,b,b',a',1 = indices 0,1,2,3,4,5
  auto p = make({0, 0, 2, 0, 2, 2});         // {0,a,b'},{b,a',1}
  auto q = make({0, 1, 0, 1, 0, 1});         // {0,b,a'},{a,b',1}
  CHECK(prime_of(p, B.invol) == p);
  CHECK(prime_of(q, B.invol) == q);
  // a partition that is not invariant: glueing one covering pair
  auto r = make({0, 1, 1, 3, 4, 5});         // {b} with {a}
  auto rp = make({0, 1, 2, 3, 3, 5});        // its mirror {b'} with {a'}
  CHECK(prime_of(r, B.invol) == rp);
}

TEST_CASE("prime is an involution on random partitions") {
  std::mt19937 rng(20240811);
  auto inv = big_m().invol;
  for (int trial = 0; trial < 1000; ++trial) {
    Partition p = random_partition(rng, 8);
    CHECK(prime_of(prime_of(p, inv), inv) == p);
  }
}

TEST_CASE("classes are sorted by least element") {
  auto p = make({0, 1, 1, 0, 4});
  auto cls = p.classes();
  REQUIRE(cls.size() == 3);
  CHECK(cls[0] == std::vector<int>{0, 3});
  CHECK(cls[1] == std::vector<int>{1, 2});
  CHECK(cls[2] == std::vector<int>{4});
}
