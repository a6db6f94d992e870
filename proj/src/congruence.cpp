#include "ilat/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace ilat {

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::lattice: return "lattice";
    case FamilyKind::ilattice: return "i";
    case FamilyKind::bz: return "bz";
    case FamilyKind::con0: return "con0";
    case FamilyKind::con01: return "con01";
  }
  return "?";
}

namespace {

/// Union-find over the elements, merging with a worklist so that every merge
/// event is propagated through the meet and join tables exactly once.
struct CongruenceCloser {
  const FiniteLattice& L;
  std::vector<int> parent;
  std::vector<std::pair<int, int>> pending;

  explicit CongruenceCloser(const FiniteLattice& lat) : L(lat), parent(lat.n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[std::max(a, b)] = std::min(a, b);
    pending.emplace_back(a, b);
  }

  Partition close() {
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      for (int z = 0; z < L.n; ++z) {
        unite(L.join(x, z), L.join(y, z));
        unite(L.meet(x, z), L.meet(y, z));
      }
    }
    Partition p;
    p.cid.resize(L.n);
    for (int x = 0; x < L.n; ++x) p.cid[x] = static_cast<std::uint8_t>(find(x));
    p.canonicalize();
    return p;
  }
};

void check_element(const FiniteLattice& L, int a) {
  if (a < 0 || a >= L.n)
    throw Error(ErrorCode::SizeMismatch, "element index " + std::to_string(a) +
                                             " out of range");
}

using PartitionSet = std::unordered_set<Partition, PartitionHash>;

/// Join closure of {identity} u gens: every member is a join of generators,
/// so closing each member against the generators reaches the fixpoint.
std::vector<Partition> join_closure(int n, const std::vector<Partition>& gens) {
  PartitionSet seen;
  std::vector<Partition> members;
  auto add = [&](const Partition& p) {
    if (seen.insert(p).second) members.push_back(p);
  };
  add(Partition::identity(n));
  for (const Partition& g : gens) add(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    Partition current = members[i];
    for (const Partition& g : gens) add(partition_join(current, g));
  }
  return members;
}

}  // namespace

bool CongruenceFamily::contains(const Partition& p) const {
  return std::find(members.begin(), members.end(), p) != members.end();
}

void CongruenceFamily::sort_canonical() {
  std::sort(members.begin(), members.end(), [](const Partition& a, const Partition& b) {
    int ca = a.num_classes(), cb = b.num_classes();
    if (ca != cb) return ca < cb;
    return a.cid < b.cid;
  });
}

Partition principal_congruence(const FiniteLattice& L, int a, int b) {
  check_element(L, a);
  check_element(L, b);
  CongruenceCloser closer(L);
  closer.unite(a, b);
  return closer.close();
}

Partition congruence_generated(const FiniteLattice& L, const Partition& seed) {
  if (seed.n() != L.n)
    throw Error(ErrorCode::SizeMismatch, "partition size does not match lattice");
  CongruenceCloser closer(L);
  for (int x = 0; x < L.n; ++x) closer.unite(x, seed.cid[x]);
  return closer.close();
}

bool is_lattice_congruence(const FiniteLattice& L, const Partition& p) {
  if (p.n() != L.n) return false;
  for (int x = 0; x < L.n; ++x)
    for (int y = x + 1; y < L.n; ++y) {
      if (!p.same(x, y)) continue;
      for (int z = 0; z < L.n; ++z) {
        if (!p.same(L.join(x, z), L.join(y, z))) return false;
        if (!p.same(L.meet(x, z), L.meet(y, z))) return false;
      }
    }
  return true;
}

bool is_i_congruence(const InvolutionLattice& L, const Partition& p) {
  if (!is_lattice_congruence(L.base, p)) return false;
  for (int x = 0; x < L.n(); ++x)
    for (int y = x + 1; y < L.n(); ++y)
      if (p.same(x, y) && !p.same(L.inv(x), L.inv(y))) return false;
  return true;
}

bool is_bz_congruence(const BZLattice& L, const Partition& p) {
  if (!is_i_congruence(L.base, p)) return false;
  for (int x = 0; x < L.n(); ++x)
    for (int y = x + 1; y < L.n(); ++y)
      if (p.same(x, y) && !p.same(L.bz(x), L.bz(y))) return false;
  return true;
}

CongruenceFamily all_congruences(const FiniteLattice& L) {
  std::vector<Partition> gens;
  gens.reserve(L.covers.size());
  for (auto [a, b] : L.covers) gens.push_back(principal_congruence(L, a, b));
  CongruenceFamily family;
  family.kind = FamilyKind::lattice;
  family.n = L.n;
  family.members = join_closure(L.n, gens);
  family.sort_canonical();
  return family;
}

Partition i_principal_congruence(const InvolutionLattice& L, int a, int b) {
  Partition p = principal_congruence(L.base, a, b);
  Partition q = principal_congruence(L.base, L.inv(a), L.inv(b));
  Partition joined = partition_join(p, q);
  if (!is_i_congruence(L, joined))
    throw Error(ErrorCode::CharacterizationMismatch,
                "Cg(a,b) v Cg(a',b') is not an i-congruence");
  return joined;
}

Partition i_congruence_generated(const InvolutionLattice& L, const Partition& theta) {
  Partition t = congruence_generated(L.base, theta);
  return partition_join(t, prime_of(t, L.invol));
}

CongruenceFamily i_congruences(const InvolutionLattice& L) {
  CongruenceFamily con = all_congruences(L.base);

  // Three independently computed routes; the underlying result says they all
  // agree, so a mismatch is an implementation bug, not a data error.
  std::vector<Partition> fixed;
  for (const Partition& t : con.members)
    if (prime_of(t, L.invol) == t) fixed.push_back(t);

  PartitionSet joins, meets;
  for (const Partition& t : con.members) {
    Partition tp = prime_of(t, L.invol);
    joins.insert(partition_join(t, tp));
    meets.insert(partition_meet(t, tp));
  }
  PartitionSet fixed_set(fixed.begin(), fixed.end());
  if (joins != fixed_set || meets != fixed_set)
    throw Error(ErrorCode::CharacterizationMismatch,
                "theta = theta' filter disagrees with the v / n images");

  CongruenceFamily family;
  family.kind = FamilyKind::ilattice;
  family.n = L.n();
  family.members = std::move(fixed);
  family.sort_canonical();
  return family;
}

namespace {

CongruenceFamily filter_zero_classes(const FiniteLattice& L, const CongruenceFamily& base,
                                     bool keep_top_singleton, FamilyKind kind) {
  CongruenceFamily out;
  out.kind = kind;
  out.n = base.n;
  for (const Partition& p : base.members) {
    bool ok = p.cid[L.bottom()] == L.bottom() &&
              std::count(p.cid.begin(), p.cid.end(), p.cid[L.bottom()]) == 1;
    if (ok && keep_top_singleton)
      ok = std::count(p.cid.begin(), p.cid.end(), p.cid[L.top()]) == 1;
    if (ok) out.members.push_back(p);
  }
  out.sort_canonical();
  return out;
}

}  // namespace

CongruenceFamily con0(const FiniteLattice& L, const CongruenceFamily& base) {
  return filter_zero_classes(L, base, false, FamilyKind::con0);
}

CongruenceFamily con01(const FiniteLattice& L, const CongruenceFamily& base) {
  return filter_zero_classes(L, base, true, FamilyKind::con01);
}

CongruenceFamily bz_congruences(const BZLattice& L) {
  CongruenceFamily coni = i_congruences(L.base);
  CongruenceFamily family;
  family.kind = FamilyKind::bz;
  family.n = L.n();
  for (const Partition& p : coni.members)
    if (is_bz_congruence(L, p)) family.members.push_back(p);
  family.sort_canonical();

  if (classify(L).antiortholattice && L.n() > 1) {
    // Con_BZ(L) = Con_I01(L) u {all} holds for every non-trivial
    // antiortholattice; verify it.
    CongruenceFamily expected = con01(L.base.base, coni);
    std::vector<Partition> exp = expected.members;
    exp.push_back(Partition::all(L.n()));
    PartitionSet a(exp.begin(), exp.end());
    PartitionSet b(family.members.begin(), family.members.end());
    if (a != b)
      throw Error(ErrorCode::CharacterizationMismatch,
                  "Con_BZ != Con_I01 u {all} on an antiortholattice");
  }
  return family;
}

std::vector<Partition> atoms(const CongruenceFamily& family) {
  std::vector<Partition> nontrivial;
  for (const Partition& p : family.members)
    if (!p.is_identity()) nontrivial.push_back(p);
  std::vector<Partition> result;
  for (const Partition& p : nontrivial) {
    bool minimal = true;
    for (const Partition& q : nontrivial)
      if (q != p && q.refines(p)) {
        minimal = false;
        break;
      }
    if (minimal) result.push_back(p);
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_subdirectly_irreducible(const CongruenceFamily& family) {
  return atoms(family).size() == 1;
}

namespace {

struct QuotientParts {
  std::vector<Mask> up;
  std::vector<std::string> labels;
  std::vector<int> reps;        // class index -> least element
  std::vector<int> class_of;    // element -> class index
};

QuotientParts quotient_order(const FiniteLattice& L, const Partition& theta) {
  if (!is_lattice_congruence(L, theta))
    throw Error(ErrorCode::NotACongruence, "partition is not a lattice congruence");
  QuotientParts parts;
  parts.class_of.assign(L.n, -1);
  for (int x = 0; x < L.n; ++x)
    if (theta.cid[x] == x) {
      parts.class_of[x] = static_cast<int>(parts.reps.size());
      parts.reps.push_back(x);
    }
  for (int x = 0; x < L.n; ++x) parts.class_of[x] = parts.class_of[theta.cid[x]];
  const int m = static_cast<int>(parts.reps.size());
  parts.up.assign(m, 0);
  for (int x = 0; x < L.n; ++x)
    for (int y : bits(L.up[x])) parts.up[parts.class_of[x]] |= bit(parts.class_of[y]);
  parts.labels.resize(m);
  for (int x = 0; x < L.n; ++x) {
    std::string& s = parts.labels[parts.class_of[x]];
    if (!s.empty()) s += "+";
    s += L.labels[x];
  }
  return parts;
}

}  // namespace

FiniteLattice quotient(const FiniteLattice& L, const Partition& theta) {
  auto parts = quotient_order(L, theta);
  return validate(parts.up, std::move(parts.labels));
}

InvolutionLattice quotient(const InvolutionLattice& L, const Partition& theta) {
  if (!is_i_congruence(L, theta))
    throw Error(ErrorCode::NotACongruence, "partition is not an i-congruence");
  auto parts = quotient_order(L.base, theta);
  const int m = static_cast<int>(parts.reps.size());
  std::vector<std::uint8_t> sigma(m);
  for (int c = 0; c < m; ++c)
    sigma[c] = static_cast<std::uint8_t>(parts.class_of[L.inv(parts.reps[c])]);
  return attach_involution(validate(parts.up, std::move(parts.labels)), std::move(sigma));
}

BZLattice quotient(const BZLattice& L, const Partition& theta) {
  if (!is_bz_congruence(L, theta))
    throw Error(ErrorCode::NotACongruence, "partition is not a BZ-congruence");
  auto parts = quotient_order(L.base.base, theta);
  const int m = static_cast<int>(parts.reps.size());
  std::vector<std::uint8_t> sigma(m), tilde(m);
  for (int c = 0; c < m; ++c) {
    sigma[c] = static_cast<std::uint8_t>(parts.class_of[L.inv(parts.reps[c])]);
    tilde[c] = static_cast<std::uint8_t>(parts.class_of[L.bz(parts.reps[c])]);
  }
  return attach_brouwer(
      attach_involution(validate(parts.up, std::move(parts.labels)), std::move(sigma)),
      std::move(tilde));
}

FiniteLattice family_order_lattice(const CongruenceFamily& family) {
  const int m = static_cast<int>(family.members.size());
  if (m > kMaxElements)
    throw Error(ErrorCode::CapExceeded, "family too large for an explicit order lattice");
  std::vector<Mask> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (family.members[i].refines(family.members[j])) up[i] |= bit(j);
  return validate(up);
}

std::vector<Mask> i_sublattices(const InvolutionLattice& L) {
  const int n = L.n();
  if (n > 16)
    throw Error(ErrorCode::CapExceeded, "i-sublattice enumeration capped at 16 elements");
  std::vector<Mask> out;
  const Mask limit = Mask{1} << n;
  for (Mask s = 1; s < limit; ++s) {
    bool closed = true;
    for (int a : bits(s)) {
      if (!((s >> L.inv(a)) & 1)) { closed = false; break; }
      for (int b : bits(s & ~((bit(a) << 1) - 1))) {
        if (!((s >> L.base.meet(a, b)) & 1) || !((s >> L.base.join(a, b)) & 1)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

InvolutionLattice restrict_to(const InvolutionLattice& L, Mask s) {
  std::vector<int> elems;
  for (int x : bits(s)) elems.push_back(x);
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(L.n(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  std::vector<Mask> up(m, 0);
  std::vector<std::string> labels(m);
  std::vector<std::uint8_t> sigma(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = L.base.labels[elems[i]];
    sigma[i] = static_cast<std::uint8_t>(pos[L.inv(elems[i])]);
    for (int j = 0; j < m; ++j)
      if (L.base.leq(elems[i], elems[j])) up[i] |= bit(j);
  }
  return attach_involution(validate(up, std::move(labels)), std::move(sigma));
}

Partition restrict_partition(const Partition& theta, Mask s) {
  std::vector<int> elems;
  for (int x : bits(s)) elems.push_back(x);
  const int m = static_cast<int>(elems.size());
  Partition out;
  out.cid.assign(m, 0);
  std::vector<int> first(theta.n(), -1);
  for (int i = 0; i < m; ++i) {
    int c = theta.cid[elems[i]];
    if (first[c] < 0) first[c] = i;
    out.cid[i] = static_cast<std::uint8_t>(first[c]);
  }
  return out;
}

Partition cep_extend(const InvolutionLattice& L, Mask s, const Partition& sigma) {
  CongruenceFamily family = i_congruences(L);
  for (const Partition& theta : family.members)
    if (restrict_partition(theta, s) == sigma) return theta;
  throw Error(ErrorCode::NoExtension, "no congruence of the whole algebra restricts to sigma");
}

}  // namespace ilat
