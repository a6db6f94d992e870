#ifndef ILAT_DOCUMENT_HPP
#define ILAT_DOCUMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ilat/census.hpp"
#include "ilat/congruence.hpp"
#include "ilat/involution.hpp"
#include "ilat/lattice.hpp"

namespace ilat {

/// The on-disk description of a structure: labels, cover pairs, and the
/// optional unary operations by label. brouwer_trivial stands for the literal
/// "trivial" tag.
struct LatticeDocument {
  int format_version = 1;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::optional<std::map<std::string, std::string>> involution;
  std::optional<std::map<std::string, std::string>> brouwer;
  bool brouwer_trivial = false;
};

/// A validated structure of the richest kind its document supports.
struct Structure {
  FiniteLattice lat;
  std::optional<std::vector<std::uint8_t>> invol;
  std::optional<std::vector<std::uint8_t>> brouwer;

  bool has_involution() const { return invol.has_value(); }
  bool has_brouwer() const { return brouwer.has_value(); }
  InvolutionLattice as_involution() const;
  BZLattice as_bz() const;
};

LatticeDocument parse_document(const std::string& text);
Structure build_structure(const LatticeDocument& doc);
Structure parse_structure(const std::string& text);

LatticeDocument to_document(const FiniteLattice& L);
LatticeDocument to_document(const InvolutionLattice& L);
LatticeDocument to_document(const BZLattice& L);
LatticeDocument to_document(const Structure& s);

/// Deterministic JSON serialization (stable field and element order).
std::string emit_json(const LatticeDocument& doc);

/// Hasse diagram as a DOT digraph, ranked bottom-up; the involution is drawn
/// as dashed undirected edges between the pairs x != x' when requested.
std::string emit_dot(const Structure& s, bool show_involution = false);

/// Sorted class blocks of sorted labels: [[0,a,b'],[b,a',1]].
std::string format_partition(const Partition& p, const std::vector<std::string>& labels);

std::string census_record_json(const CensusRecord& record);
std::string census_record_csv(const CensusRecord& record);

}  // namespace ilat

#endif  // ILAT_DOCUMENT_HPP
