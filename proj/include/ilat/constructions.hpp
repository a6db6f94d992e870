#ifndef ILAT_CONSTRUCTIONS_HPP
#define ILAT_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ilat/congruence.hpp"
#include "ilat/involution.hpp"
#include "ilat/lattice.hpp"

namespace ilat {

/// The n-element chain with its unique involution x -> n-1-x.
InvolutionLattice chain(int n);
FiniteLattice chain_lattice(int n);

/// The Boolean cube 2^k with the complement involution (element = bitmask).
InvolutionLattice boolean_cube(int k);

/// Ordinal sum: top of L identified with bottom of M. Elements of L keep
/// their indices, the rest of M follows. Throws MissingBound on empty input.
FiniteLattice ordinal_sum(const FiniteLattice& L, const FiniteLattice& M);

/// M + K + M^d with the involution f / 'K / f^-1 where f is the identity on
/// indices (M^d is the transposed copy).
InvolutionLattice i_ordinal_triple(const FiniteLattice& M, const InvolutionLattice& K);

/// Horizontal sum: bounds identified, interiors side by side. Numbering:
/// bottom, interior of L, interior of M, top. Throws TrivialSummand.
FiniteLattice horizontal_sum(const FiniteLattice& L, const FiniteLattice& M);
InvolutionLattice horizontal_sum(const InvolutionLattice& L, const InvolutionLattice& M);

/// Direct product, componentwise; element (i, j) gets index i*|M| + j.
FiniteLattice direct_product(const FiniteLattice& L, const FiniteLattice& M);
InvolutionLattice direct_product(const InvolutionLattice& L, const InvolutionLattice& M);

/// alpha (+) beta on Con(L) x Con(M) -> Con(L (+) M): classes of alpha and
/// beta with the two classes of the identified element merged.
Partition cong_ordinal_sum(const FiniteLattice& L, const FiniteLattice& M,
                           const Partition& alpha, const Partition& beta);

/// delta (#) epsilon on equivalences of the summands (neither all): classes
/// of both with the 0-classes merged and the 1-classes merged. Throws
/// ForbiddenTop if a summand equivalence is all.
Partition cong_horizontal_sum(const FiniteLattice& L, const FiniteLattice& M,
                              const Partition& delta, const Partition& epsilon);

// The named structures used throughout the worked examples.
InvolutionLattice m3();            // L3 # L2^2, the five-element modular lattice
InvolutionLattice n5();            // L3 # L4
InvolutionLattice b6();            // benzene ring: L4 # L4 with the crossed involution
InvolutionLattice l3_h_l3();       // L3 # L3 (the square with both midpoints fixed)
InvolutionLattice l3_h_l5();
InvolutionLattice l4_h_l4();
InvolutionLattice l3_h_prod23();   // L3 # (L2 x L3)
InvolutionLattice big_m();         // M = L2^2 + L2 + L2^2 (8 elements)
InvolutionLattice big_h();         // H = L4 # L4 # L4 (8 elements)
InvolutionLattice big_l();         // L = (M3 # L4) + L2^3 + (M3 # L4) (20 elements)

// Parametric families; parity/size constraints are validated.
InvolutionLattice e_n(int n);         // L_{n/2-2} + (L2 x L3) + L_{n/2-2}, n even >= 6
InvolutionLattice e_kn(int k, int n); // L_{(n-k-4)/2} + L2^2 + L_k + L2^2 + ..., k even
InvolutionLattice f_n(int n);         // L_{n/2-2} + B6 + L_{n/2-2}, n even >= 6
InvolutionLattice g_n(int n);         // L_{n/2-3} + H + L_{n/2-3}, n even >= 8

/// One row of the worked-example table: expected congruence counts.
struct ExampleRow {
  std::string name;
  InvolutionLattice algebra;
  long expected_con;
  long expected_con_i;
};

/// The full table of worked examples with their published counts, plus
/// instances of the parametric families.
std::vector<ExampleRow> worked_examples();

/// Catalog lookup for the CLI: builds a named structure, with numeric
/// parameters where the family needs them. Unknown names return nullopt.
std::optional<InvolutionLattice> catalog_build(const std::string& name,
                                               const std::vector<int>& params);
std::vector<std::string> catalog_names();

}  // namespace ilat

#endif  // ILAT_CONSTRUCTIONS_HPP
