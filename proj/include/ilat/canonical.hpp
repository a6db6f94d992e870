#ifndef ILAT_CANONICAL_HPP
#define ILAT_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ilat/lattice.hpp"

namespace ilat {

using Perm = std::vector<std::uint8_t>;  // old index -> new index

/// Canonical labeling of a finite poset given by its up-sets. The canonical
/// matrix is the minimum relabeled order matrix over all permutations that
/// respect an isomorphism-invariant colouring (so equal canonical forms
/// characterize isomorphism exactly).
struct CanonicalPoset {
  std::vector<Mask> up;   // canonical order matrix, up[x] = up-set of x
  Perm labeling;          // one permutation achieving it (old -> new)
  std::vector<Perm> automorphisms;  // Aut of the *canonical* form (optional)
};

CanonicalPoset canonical_poset(const std::vector<Mask>& up, int n,
                               bool collect_automorphisms = false);

/// Compact printable key; equal keys iff isomorphic posets.
std::string poset_key(const std::vector<Mask>& up, int n);

std::string canonical_form(const FiniteLattice& L);

/// Order-preserving-both-ways bijection L -> M, if one exists.
std::optional<Perm> find_isomorphism(const FiniteLattice& L, const FiniteLattice& M);

/// All order automorphisms of L.
std::vector<Perm> automorphisms(const FiniteLattice& L);

/// Relabels a lattice by a permutation (old index -> new index).
FiniteLattice relabel(const FiniteLattice& L, const Perm& pi);

}  // namespace ilat

#endif  // ILAT_CANONICAL_HPP
