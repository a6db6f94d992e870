#ifndef ILAT_TESTS_HELPERS_HPP
#define ILAT_TESTS_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "ilat/congruence.hpp"
#include "ilat/constructions.hpp"
#include "ilat/involution.hpp"
#include "ilat/lattice.hpp"
#include "ilat/partition.hpp"

namespace ilat::testing {

/// Every equivalence of {0..n-1}, generated as restricted growth strings.
/// Independent of the partition algebra under test.
inline std::vector<Partition> all_equivalences(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> go = [&](int i, int next_class) {
    if (i == n) {
      // class index -> least element is the index of first occurrence
      std::vector<std::uint8_t> cid(n);
      std::vector<int> first(n, -1);
      for (int x = 0; x < n; ++x) {
        if (first[rgs[x]] < 0) first[rgs[x]] = x;
        cid[x] = static_cast<std::uint8_t>(first[rgs[x]]);
      }
      out.push_back(Partition(std::move(cid)));
      return;
    }
    for (int c = 0; c <= next_class; ++c) {
      rgs[i] = c;
      go(i + 1, std::max(next_class, c + 1));
    }
  };
  go(0, 0);
  return out;
}

/// Definition-scan congruence test, written independently of the library's
/// checker: x ~ y must force x v z ~ y v z and x ^ z ~ y ^ z.
inline bool oracle_is_congruence(const FiniteLattice& L, const Partition& p) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y) {
      if (p.cid[x] != p.cid[y]) continue;
      for (int z = 0; z < L.n; ++z) {
        if (p.cid[L.join(x, z)] != p.cid[L.join(y, z)]) return false;
        if (p.cid[L.meet(x, z)] != p.cid[L.meet(y, z)]) return false;
      }
    }
  return true;
}

inline std::set<Partition> brute_force_congruences(const FiniteLattice& L) {
  std::set<Partition> out;
  for (const Partition& p : all_equivalences(L.n))
    if (oracle_is_congruence(L, p)) out.insert(p);
  return out;
}

inline std::set<Partition> members_as_set(const CongruenceFamily& f) {
  return {f.members.begin(), f.members.end()};
}

/// Partition from arbitrary class marks (values need not be member elements).
inline Partition partition_of_marks(const std::vector<int>& marks) {
  const int n = static_cast<int>(marks.size());
  std::vector<std::uint8_t> cid(n);
  std::vector<std::pair<int, int>> first;  // mark -> least index
  for (int x = 0; x < n; ++x) {
    int rep = -1;
    for (auto& [m, idx] : first)
      if (m == marks[x]) rep = idx;
    if (rep < 0) {
      first.emplace_back(marks[x], x);
      rep = x;
    }
    cid[x] = static_cast<std::uint8_t>(rep);
  }
  return Partition(std::move(cid));
}

inline Partition random_partition(std::mt19937& rng, int n) {
  std::vector<std::uint8_t> cid(n);
  for (int x = 0; x < n; ++x)
    cid[x] = static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, x)(rng));
  Partition p(std::move(cid));
  p.canonicalize();
  return p;
}

/// All valid Brouwer complements of a pseudo-Kleene algebra, by backtracking
/// over the annihilator candidates with the axioms checked incrementally.
inline std::vector<std::vector<std::uint8_t>> all_brouwers(const InvolutionLattice& L) {
  const int n = L.n();
  const FiniteLattice& base = L.base;
  std::vector<int> b(n, -1);
  std::vector<std::vector<std::uint8_t>> out;

  std::function<void(int)> go = [&](int a) {
    if (a == n) {
      out.emplace_back(b.begin(), b.end());
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (base.meet(a, cand) != base.bottom()) continue;
      b[a] = cand;
      bool ok = true;
      for (int u = 0; u <= a && ok; ++u) {
        if (b[u] < 0) continue;
        if (base.leq(u, a) && !base.leq(b[a], b[u])) ok = false;
        if (base.leq(a, u) && !base.leq(b[u], b[a])) ok = false;
        if (b[u] <= a && b[b[u]] >= 0) {
          if (!base.leq(u, b[b[u]])) ok = false;
          if (L.inv(b[u]) != b[b[u]]) ok = false;
        }
      }
      if (ok) go(a + 1);
      b[a] = -1;
    }
  };
  go(0);
  return out;
}

/// A small pool of named structures for property tests.
inline std::vector<InvolutionLattice> catalog_pool() {
  return {chain(1), chain(2),     chain(4),  chain(5),   boolean_cube(2), boolean_cube(3),
          m3(),     n5(),         b6(),      l3_h_l3(),  l3_h_l5(),       l4_h_l4(),
          l3_h_prod23(), big_m(), big_h(),   e_n(6),     f_n(8)};
}

}  // namespace ilat::testing

#endif
