#include "ilat/lattice.hpp"

#include <algorithm>
#include <set>

namespace ilat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotAntitone: return "NotAntitone";
    case ErrorCode::NotPseudoKleene: return "NotPseudoKleene";
    case ErrorCode::BrouwerAxiomFails: return "BrouwerAxiomFails";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::MissingBound: return "MissingBound";
    case ErrorCode::TrivialSummand: return "TrivialSummand";
    case ErrorCode::ForbiddenTop: return "ForbiddenTop";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::TheoremViolated: return "TheoremViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

int FiniteLattice::meet_of(Mask s) const {
  int acc = lowest_bit(s);
  for (int x : bits(s & (s - 1))) acc = meet(acc, x);
  return acc;
}

int FiniteLattice::join_of(Mask s) const {
  int acc = lowest_bit(s);
  for (int x : bits(s & (s - 1))) acc = join(acc, x);
  return acc;
}

bool FiniteLattice::is_convex(Mask s) const {
  if (s == 0) return false;
  for (int a : bits(s))
    for (int b : bits(s & up[a]))
      if ((up[a] & down[b] & ~s) != 0) return false;
  return true;
}

bool FiniteLattice::is_sublattice(Mask s) const {
  if (s == 0) return false;
  for (int a : bits(s))
    for (int b : bits(s)) {
      if (!((s >> meet(a, b)) & 1)) return false;
      if (!((s >> join(a, b)) & 1)) return false;
    }
  return true;
}

FiniteLattice validate(const std::vector<std::vector<bool>>& leq,
                       std::vector<std::string> labels) {
  const int n = static_cast<int>(leq.size());
  if (n > kMaxElements)
    throw Error(ErrorCode::CapExceeded,
                "at most 64 elements supported, got " + std::to_string(n));
  std::vector<Mask> up(n, 0);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(leq[x].size()) != n)
      throw Error(ErrorCode::ParseError, "order matrix is not square");
    for (int y = 0; y < n; ++y)
      if (leq[x][y]) up[x] |= bit(y);
  }
  return validate(up, std::move(labels));
}

FiniteLattice validate(const std::vector<Mask>& up_rows, std::vector<std::string> labels) {
  const int n = static_cast<int>(up_rows.size());
  if (n == 0) throw Error(ErrorCode::EmptyInput, "lattices are non-empty");
  if (n > kMaxElements)
    throw Error(ErrorCode::CapExceeded,
                "at most 64 elements supported, got " + std::to_string(n));

  FiniteLattice L;
  L.n = n;
  L.up = up_rows;
  const Mask all = full_mask(n);
  for (int x = 0; x < n; ++x)
    if (L.up[x] & ~all)
      throw Error(ErrorCode::ParseError, "order matrix row exceeds element range");

  // Partial-order axioms, each with a witness.
  for (int x = 0; x < n; ++x)
    if (!L.leq(x, x))
      throw Error(ErrorCode::NotAPartialOrder,
                  "not reflexive at element " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y : bits(L.up[x]))
      if (x != y && L.leq(y, x))
        throw Error(ErrorCode::NotAPartialOrder,
                    "not antisymmetric at elements " + std::to_string(x) + ", " +
                        std::to_string(y));
  for (int x = 0; x < n; ++x)
    for (int y : bits(L.up[x]))
      if (L.up[y] & ~L.up[x]) {
        int z = lowest_bit(L.up[y] & ~L.up[x]);
        throw Error(ErrorCode::NotAPartialOrder,
                    "not transitive at elements " + std::to_string(x) + " <= " +
                        std::to_string(y) + " <= " + std::to_string(z));
      }

  L.down.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : bits(L.up[x])) L.down[y] |= bit(x);

  // Unique least upper bound / greatest lower bound for every pair.
  L.meet_table.assign(static_cast<std::size_t>(n) * n, 0);
  L.join_table.assign(static_cast<std::size_t>(n) * n, 0);
  auto least_of = [&](Mask s) -> int {
    for (int z : bits(s))
      if ((s & ~L.up[z]) == 0) return z;
    return -1;
  };
  auto greatest_of = [&](Mask s) -> int {
    for (int z : bits(s))
      if ((s & ~L.down[z]) == 0) return z;
    return -1;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int j = least_of(L.up[x] & L.up[y]);
      if (j < 0)
        throw Error(ErrorCode::NotALattice, "no join for elements " + std::to_string(x) +
                                                ", " + std::to_string(y));
      int m = greatest_of(L.down[x] & L.down[y]);
      if (m < 0)
        throw Error(ErrorCode::NotALattice, "no meet for elements " + std::to_string(x) +
                                                ", " + std::to_string(y));
      L.join_table[x * n + y] = L.join_table[y * n + x] = static_cast<std::uint8_t>(j);
      L.meet_table[x * n + y] = L.meet_table[y * n + x] = static_cast<std::uint8_t>(m);
    }

  // Transitive reduction.
  L.ucov.assign(n, 0);
  L.lcov.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : bits(L.up[x] & ~bit(x)))
      if ((L.up[x] & L.down[y] & ~bit(x) & ~bit(y)) == 0) {
        L.ucov[x] |= bit(y);
        L.lcov[y] |= bit(x);
        L.covers.emplace_back(x, y);
      }
  std::sort(L.covers.begin(), L.covers.end());

  L.bottom_idx = L.meet_of(all);
  L.top_idx = L.join_of(all);

  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::ParseError, "label count does not match element count");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw Error(ErrorCode::ParseError, "labels are not unique");
  L.labels = std::move(labels);
  return L;
}

std::pair<Mask, Mask> irreducibles(const FiniteLattice& L) {
  Mask meet_irr = 0, join_irr = 0;
  for (int x = 0; x < L.n; ++x) {
    if (popcount(L.ucov[x]) <= 1) meet_irr |= bit(x);
    if (popcount(L.lcov[x]) <= 1) join_irr |= bit(x);
  }
  return {meet_irr, join_irr};
}

std::vector<IntervalKind> narrows(const FiniteLattice& L) {
  std::vector<IntervalKind> result;
  for (auto [a, b] : L.covers)
    if (popcount(L.ucov[a]) == 1 && popcount(L.lcov[b]) == 1)
      result.push_back({a, b, true});
  return result;
}

FiniteLattice dual(const FiniteLattice& L) {
  FiniteLattice D;
  D.n = L.n;
  D.up = L.down;
  D.down = L.up;
  D.ucov = L.lcov;
  D.lcov = L.ucov;
  D.meet_table = L.join_table;
  D.join_table = L.meet_table;
  for (auto [a, b] : L.covers) D.covers.emplace_back(b, a);
  std::sort(D.covers.begin(), D.covers.end());
  D.bottom_idx = L.top_idx;
  D.top_idx = L.bottom_idx;
  D.labels = L.labels;
  return D;
}

bool is_modular(const FiniteLattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int c : bits(L.up[a]))
      for (int b = 0; b < L.n; ++b)
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return false;
  return true;
}

bool is_distributive(const FiniteLattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      for (int c = 0; c < L.n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

}  // namespace ilat
