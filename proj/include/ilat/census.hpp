#ifndef ILAT_CENSUS_HPP
#define ILAT_CENSUS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ilat/congruence.hpp"
#include "ilat/involution.hpp"
#include "ilat/lattice.hpp"

namespace ilat {

inline constexpr int kDefaultCensusCap = 9;
inline constexpr int kHardCensusCap = 10;

/// Every n-element lattice exactly once up to isomorphism, each in canonical
/// labeling, sorted by canonical form. Throws CapExceeded when n > cap.
std::vector<FiniteLattice> enumerate_lattices(int n, int cap = kDefaultCensusCap);

/// Every (lattice, involution) pair up to i-isomorphism, grouped per lattice
/// class in canonical order.
std::vector<InvolutionLattice> enumerate_i_lattices(int n, int cap = kDefaultCensusCap);

/// Per-class data gathered by one census sweep.
struct CensusEntry {
  InvolutionLattice algebra;
  std::string i_key;       // canonical i-form key
  int lattice_index = 0;   // index into the lattice class list
  long con_count = 0;      // |Con(L)| of the underlying lattice
  long con_i_count = 0;    // |Con_I(L)|
  long con_bz_count = -1;  // |Con_BZ| when the trivial Brouwer applies, else -1
  bool modular = false;
  bool distributive = false;
  bool pseudo_kleene = false;
  bool kleene = false;
  bool antiortholattice = false;
  bool zero_meet_irreducible = false;
};

struct CensusData {
  int n = 0;
  std::vector<std::string> lattice_keys;  // canonical forms, sorted
  std::vector<long> lattice_con_counts;   // |Con| per lattice class
  std::vector<CensusEntry> entries;       // i-lattice classes, sorted by key
};

/// Summary record emitted as JSON / CSV.
struct CensusRecord {
  int n = 0;
  long lattice_class_count = 0;
  long i_lattice_class_count = 0;
  std::map<long, long> histogram;  // |Con_I| -> number of i-lattice classes
  long max_i_congruences = 0;
  std::vector<std::string> extremal_witnesses;  // canonical i-keys
  long runner_up = 0;
  std::vector<std::string> runner_up_witnesses;
};

/// Runs the census at size n. threads = 0 picks the hardware default; the
/// aggregation is deterministic regardless of thread count.
CensusData run_census(int n, int cap = kDefaultCensusCap, int threads = 0);

CensusRecord census_record(const CensusData& data);

/// Largest |Con_I| equals 2^(n/2) and is attained exactly by the chain plus,
/// for even n >= 4, the chain-diamond-chain sandwich with the Boolean middle;
/// pseudo-Kleene maxima recorded and checked separately. Throws
/// TheoremViolated with a witness.
CensusRecord verify_max_theorem(const CensusData& data);

/// Over antiortholattices with 0 meet-irreducible (trivial Brouwer):
/// max |Con_BZ| = 2^(n/2 - 1) + 1 with the classified witnesses.
CensusRecord verify_bz_theorem(const CensusData& data);

/// Restricted to modular (n >= 5) and Kleene (n >= 6) classes, the second
/// largest |Con_I| equals 2^(n/2 - 1).
void verify_second_largest(const CensusData& data);

/// The top five |Con| values over plain lattices match the published
/// classification (2^(n-1), 2^(n-2), 5*2^(n-5), 2^(n-3), 7*2^(n-6) with the
/// stated witness shapes, as far as each applies at size n).
void verify_lattice_theorem(const CensusData& data);

}  // namespace ilat

#endif  // ILAT_CENSUS_HPP
