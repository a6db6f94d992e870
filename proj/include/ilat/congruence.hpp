#ifndef ILAT_CONGRUENCE_HPP
#define ILAT_CONGRUENCE_HPP

#include <vector>

#include "ilat/involution.hpp"
#include "ilat/lattice.hpp"
#include "ilat/partition.hpp"

namespace ilat {

enum class FamilyKind { lattice, ilattice, bz, con0, con01 };

const char* family_kind_name(FamilyKind k);

/// A congruence family: deduplicated members in the canonical report order
/// (ascending number of classes, then lexicographic cid), so the coarsest
/// member comes first and the identity last.
struct CongruenceFamily {
  FamilyKind kind = FamilyKind::lattice;
  int n = 0;
  std::vector<Partition> members;

  long count() const { return static_cast<long>(members.size()); }
  bool contains(const Partition& p) const;
  const Partition& top() const { return members.front(); }
  const Partition& bottom() const { return members.back(); }

  void sort_canonical();
  bool operator==(const CongruenceFamily&) const = default;
};

/// Smallest lattice congruence identifying a and b (worklist fixpoint over
/// meet/join compatibility).
Partition principal_congruence(const FiniteLattice& L, int a, int b);

/// Smallest lattice congruence containing a given equivalence.
Partition congruence_generated(const FiniteLattice& L, const Partition& seed);

bool is_lattice_congruence(const FiniteLattice& L, const Partition& p);
bool is_i_congruence(const InvolutionLattice& L, const Partition& p);
bool is_bz_congruence(const BZLattice& L, const Partition& p);

/// Con(L): join closure of the principal congruences of covered pairs.
CongruenceFamily all_congruences(const FiniteLattice& L);

/// Cg_I(a,b) = Cg(a,b) v Cg(a',b'); verified to land in Con_I.
Partition i_principal_congruence(const InvolutionLattice& L, int a, int b);

/// Cg_I(theta) = theta v theta'.
Partition i_congruence_generated(const InvolutionLattice& L, const Partition& theta);

/// Con_I(L) = { theta in Con(L) : theta = theta' }. Also computed as the
/// {theta v theta'} and {theta n theta'} images; any disagreement between the
/// three routes throws CharacterizationMismatch.
CongruenceFamily i_congruences(const InvolutionLattice& L);

/// Con_BZ(L): members of Con_I compatible with the Brouwer complement. For
/// antiortholattices the result is checked against Con_I01(L) u {all};
/// disagreement throws CharacterizationMismatch.
CongruenceFamily bz_congruences(const BZLattice& L);

/// Subfamily with singleton 0-class (and 1-class).
CongruenceFamily con0(const FiniteLattice& L, const CongruenceFamily& base);
CongruenceFamily con01(const FiniteLattice& L, const CongruenceFamily& base);

/// Minimal non-identity members under refinement.
std::vector<Partition> atoms(const CongruenceFamily& family);

/// True iff the family has exactly one atom.
bool is_subdirectly_irreducible(const CongruenceFamily& family);

/// Quotient structures; element i of the quotient is the i-th class in
/// least-representative order. Throws NotACongruence.
FiniteLattice quotient(const FiniteLattice& L, const Partition& theta);
InvolutionLattice quotient(const InvolutionLattice& L, const Partition& theta);
BZLattice quotient(const BZLattice& L, const Partition& theta);

/// The refinement order of a family as an explicit lattice (element i is
/// members[i]); requires at most 64 members.
FiniteLattice family_order_lattice(const CongruenceFamily& family);

/// Subalgebra support: all non-empty subsets closed under meet, join and the
/// involution (n <= 16).
std::vector<Mask> i_sublattices(const InvolutionLattice& L);

/// The sublattice on a closed subset as its own structure; element i is the
/// i-th set bit of the mask.
InvolutionLattice restrict_to(const InvolutionLattice& L, Mask s);

/// theta n S^2 as a partition of the positions of s.
Partition restrict_partition(const Partition& theta, Mask s);

/// A congruence of L whose restriction to the i-sublattice s equals sigma
/// (sigma indexed by positions of s). Throws NoExtension if none exists;
/// never fires when L is distributive.
Partition cep_extend(const InvolutionLattice& L, Mask s, const Partition& sigma);

}  // namespace ilat

#endif  // ILAT_CONGRUENCE_HPP
