#ifndef ILAT_PARTITION_HPP
#define ILAT_PARTITION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ilat/error.hpp"

namespace ilat {

/// An equivalence / partition of {0..n-1} in canonical form: cid[x] is the
/// minimum element of the class of x.
struct Partition {
  std::vector<std::uint8_t> cid;

  Partition() = default;
  explicit Partition(std::vector<std::uint8_t> ids) : cid(std::move(ids)) {}

  static Partition identity(int n);  // all singletons
  static Partition all(int n);       // one class

  int n() const { return static_cast<int>(cid.size()); }
  int rep(int x) const { return cid[x]; }
  bool same(int x, int y) const { return cid[x] == cid[y]; }
  int num_classes() const;
  bool is_identity() const;
  bool is_all() const;

  /// Classes as sorted element lists, ordered by least element.
  std::vector<std::vector<int>> classes() const;

  /// True iff *this refines q (every class of *this lies in a class of q).
  bool refines(const Partition& q) const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return cid < o.cid; }

  /// Re-canonicalizes an arbitrary representative mapping in place.
  void canonicalize();
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

/// Common refinement (meet in Eq).
Partition partition_meet(const Partition& p, const Partition& q);

/// Transitive closure of the union (join in Eq).
Partition partition_join(const Partition& p, const Partition& q);

/// theta' = { (a',b') : (a,b) in theta } for an involution permutation.
Partition prime_of(const Partition& p, std::span<const std::uint8_t> invol);

}  // namespace ilat

#endif  // ILAT_PARTITION_HPP
