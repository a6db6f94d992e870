#ifndef ILAT_INVOLUTION_HPP
#define ILAT_INVOLUTION_HPP

#include <string>
#include <vector>

#include "ilat/canonical.hpp"
#include "ilat/lattice.hpp"

namespace ilat {

/// A lattice with an order-reversing involutive permutation.
struct InvolutionLattice {
  FiniteLattice base;
  std::vector<std::uint8_t> invol;

  int n() const { return base.n; }
  int inv(int x) const { return invol[x]; }
};

/// A pseudo-Kleene algebra with a Brouwer complement.
struct BZLattice {
  InvolutionLattice base;
  std::vector<std::uint8_t> brouwer;

  int n() const { return base.n(); }
  int inv(int x) const { return base.inv(x); }
  int bz(int x) const { return brouwer[x]; }
  bool has_trivial_brouwer() const;
};

/// Validates sigma as an involution of L. Throws NotInvolutive(x) or
/// NotAntitone(x,y).
InvolutionLattice attach_involution(FiniteLattice L, std::vector<std::uint8_t> sigma);

/// All order-reversing permutations sigma with sigma^2 = id, in
/// lexicographic order. Empty iff L admits no involution.
std::vector<std::vector<std::uint8_t>> involutions_of(const FiniteLattice& L);

/// Validates a Brouwer complement against the BZ axioms (the base must be
/// pseudo-Kleene). Throws NotPseudoKleene or BrouwerAxiomFails.
BZLattice attach_brouwer(InvolutionLattice L, std::vector<std::uint8_t> brouwer);

/// The trivial Brouwer complement (0~ = 1, a~ = 0 otherwise) on an
/// antiortholattice candidate. Throws NotPseudoKleene or BrouwerAxiomFails
/// when { a : a /\ a' = 0 } != {0, 1}.
BZLattice trivial_brouwer(InvolutionLattice L);

/// Negative / fixed / positive cones of the involution; elements incomparable
/// to their image are reported separately.
struct Cones {
  Mask neg = 0;           // x < x'
  Mask zero = 0;          // x = x'
  Mask pos = 0;           // x > x'
  Mask incomparable = 0;  // x, x' incomparable
  Mask nz() const { return neg | zero; }
  Mask pz() const { return pos | zero; }
};

Cones cones(const InvolutionLattice& L);

struct ClassFlags {
  bool i_lattice = false;
  bool bounded = false;
  bool pseudo_kleene = false;
  bool de_morgan = false;
  bool kleene = false;
  bool paraorthomodular = false;
  bool bz = false;
  bool antiortholattice = false;
  bool orthomodular = false;
};

/// Class predicates, each by direct definition scan.
ClassFlags classify(const InvolutionLattice& L);
ClassFlags classify(const BZLattice& L);

InvolutionLattice relabel(const InvolutionLattice& L, const Perm& pi);

/// Canonical form of (order matrix, involution): lexicographic minimum of the
/// pair over the admissible relabelings found during lattice canonicalization.
struct CanonicalIForm {
  std::vector<Mask> up;
  std::vector<std::uint8_t> invol;
};

CanonicalIForm canonical_i_form(const InvolutionLattice& L);
std::string canonical_i_key(const InvolutionLattice& L);

std::optional<Perm> find_i_isomorphism(const InvolutionLattice& L,
                                       const InvolutionLattice& M);

}  // namespace ilat

#endif  // ILAT_INVOLUTION_HPP
