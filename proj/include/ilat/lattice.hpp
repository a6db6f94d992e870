#ifndef ILAT_LATTICE_HPP
#define ILAT_LATTICE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ilat/error.hpp"

namespace ilat {

/// Element subset of a structure with at most 64 elements, one bit per index.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

inline Mask bit(int x) { return Mask{1} << x; }
inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }

/// Iterates set bits low to high: for (int x : bits(m)) ...
struct bits {
  explicit bits(Mask m) : m_(m) {}
  struct iterator {
    Mask m;
    int operator*() const { return lowest_bit(m); }
    iterator& operator++() { m &= m - 1; return *this; }
    bool operator!=(const iterator& o) const { return m != o.m; }
  };
  iterator begin() const { return {m_}; }
  iterator end() const { return {0}; }
 private:
  Mask m_;
};

/// A finite (hence bounded) lattice on elements 0..n-1.
///
/// Immutable after construction through validate(); the order relation is kept
/// as per-element up/down sets, the meet/join tables are precomputed, and
/// `covers` is the transitive reduction of the order.
struct FiniteLattice {
  int n = 0;
  std::vector<Mask> up;     // up[x] = { y : x <= y }, includes x
  std::vector<Mask> down;   // down[x] = { y : y <= x }
  std::vector<Mask> ucov;   // upper covers of x
  std::vector<Mask> lcov;   // lower covers of x
  std::vector<std::uint8_t> meet_table;  // n*n, row-major
  std::vector<std::uint8_t> join_table;
  std::vector<std::pair<int, int>> covers;  // (a, b) with a covered by b
  std::vector<std::string> labels;          // size n, unique
  int bottom_idx = 0;
  int top_idx = 0;

  bool leq(int a, int b) const { return (up[a] >> b) & 1; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  int meet(int a, int b) const { return meet_table[a * n + b]; }
  int join(int a, int b) const { return join_table[a * n + b]; }
  int bottom() const { return bottom_idx; }
  int top() const { return top_idx; }

  /// Meet / join over a non-empty subset.
  int meet_of(Mask s) const;
  int join_of(Mask s) const;

  bool is_convex(Mask s) const;
  bool is_sublattice(Mask s) const;  // non-empty, closed under meet and join
};

/// Builds a FiniteLattice from an order matrix, checking the partial-order
/// axioms and the existence of all meets and joins. Throws Error with code
/// NotAPartialOrder (naming the axiom and a witness) or NotALattice (naming a
/// witness pair). Empty input and n > 64 are rejected.
FiniteLattice validate(const std::vector<std::vector<bool>>& leq,
                       std::vector<std::string> labels = {});
FiniteLattice validate(const std::vector<Mask>& up_rows,
                       std::vector<std::string> labels = {});

/// Meet-irreducible (at most one upper cover) and join-irreducible (at most
/// one lower cover) element sets.
std::pair<Mask, Mask> irreducibles(const FiniteLattice& L);

/// A prime interval [a,b] that is a narrows: a meet-irreducible and b
/// join-irreducible.
struct IntervalKind {
  int lo = 0;
  int hi = 0;
  bool is_narrows = false;
};

/// All narrows of L, in cover order.
std::vector<IntervalKind> narrows(const FiniteLattice& L);

/// The dual lattice (transposed order); labels are kept.
FiniteLattice dual(const FiniteLattice& L);

bool is_modular(const FiniteLattice& L);
bool is_distributive(const FiniteLattice& L);

std::vector<std::string> default_labels(int n);

}  // namespace ilat

#endif  // ILAT_LATTICE_HPP
