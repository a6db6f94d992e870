#include "ilat/involution.hpp"

#include <algorithm>
#include <functional>

namespace ilat {

namespace {

bool is_pseudo_kleene(const InvolutionLattice& L) {
  const int n = L.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!L.base.leq(L.base.meet(a, L.inv(a)), L.base.join(b, L.inv(b)))) return false;
  return true;
}

/// { a : a /\ a' = 0 }
Mask kleene_complemented(const InvolutionLattice& L) {
  Mask out = 0;
  for (int a = 0; a < L.n(); ++a)
    if (L.base.meet(a, L.inv(a)) == L.base.bottom()) out |= bit(a);
  return out;
}

}  // namespace

bool BZLattice::has_trivial_brouwer() const {
  const int bot = base.base.bottom();
  const int top = base.base.top();
  if (brouwer[bot] != top) return false;
  for (int a = 0; a < n(); ++a)
    if (a != bot && brouwer[a] != bot) return false;
  return true;
}

InvolutionLattice attach_involution(FiniteLattice L, std::vector<std::uint8_t> sigma) {
  const int n = L.n;
  if (static_cast<int>(sigma.size()) != n)
    throw Error(ErrorCode::SizeMismatch, "involution size does not match lattice");
  for (int x = 0; x < n; ++x)
    if (sigma[x] >= n || sigma[sigma[x]] != x)
      throw Error(ErrorCode::NotInvolutive, "element " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y : bits(L.up[x]))
      if (!L.leq(sigma[y], sigma[x]))
        throw Error(ErrorCode::NotAntitone,
                    "elements " + std::to_string(x) + " <= " + std::to_string(y));
  return InvolutionLattice{std::move(L), std::move(sigma)};
}

std::vector<std::vector<std::uint8_t>> involutions_of(const FiniteLattice& L) {
  const int n = L.n;
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<int> sigma(n, -1);

  // Pairs the elements one at a time; the order-reversal constraint is
  // checked against everything already assigned, which prunes hard.
  auto compatible = [&](int x, int y) {
    // x' = y, y' = x against all assigned u (u' = sigma[u]).
    for (int u = 0; u < n; ++u) {
      if (sigma[u] < 0) continue;
      if (L.leq(x, u) != L.leq(sigma[u], y)) return false;
      if (L.leq(u, x) != L.leq(y, sigma[u])) return false;
      if (L.leq(y, u) != L.leq(sigma[u], x)) return false;
      if (L.leq(u, y) != L.leq(x, sigma[u])) return false;
    }
    return true;
  };

  std::function<void(int)> go = [&](int x) {
    while (x < n && sigma[x] >= 0) ++x;
    if (x == n) {
      out.emplace_back(sigma.begin(), sigma.end());
      return;
    }
    for (int y = x; y < n; ++y) {  // candidates below x are already paired
      if (sigma[y] >= 0 && y != x) continue;
      sigma[x] = y;
      sigma[y] = x;
      if (compatible(x, y)) go(x + 1);
      sigma[x] = -1;
      if (y != x) sigma[y] = -1;
    }
  };
  go(0);

  std::sort(out.begin(), out.end());
  return out;
}

BZLattice attach_brouwer(InvolutionLattice L, std::vector<std::uint8_t> brouwer) {
  const int n = L.n();
  if (static_cast<int>(brouwer.size()) != n)
    throw Error(ErrorCode::SizeMismatch, "Brouwer map size does not match lattice");
  for (int a = 0; a < n; ++a)
    if (brouwer[a] >= n)
      throw Error(ErrorCode::BrouwerAxiomFails, "image out of range at " + std::to_string(a));
  if (!is_pseudo_kleene(L))
    throw Error(ErrorCode::NotPseudoKleene, "a /\\ a' <= b \\/ b' fails");
  const FiniteLattice& base = L.base;
  for (int a = 0; a < n; ++a) {
    if (base.meet(a, brouwer[a]) != base.bottom())
      throw Error(ErrorCode::BrouwerAxiomFails,
                  "a /\\ a~ != 0 at element " + std::to_string(a));
    if (!base.leq(a, brouwer[brouwer[a]]))
      throw Error(ErrorCode::BrouwerAxiomFails,
                  "a <= a~~ fails at element " + std::to_string(a));
    if (L.inv(brouwer[a]) != brouwer[brouwer[a]])
      throw Error(ErrorCode::BrouwerAxiomFails,
                  "a~' != a~~ at element " + std::to_string(a));
    for (int b : bits(base.up[a]))
      if (!base.leq(brouwer[b], brouwer[a]))
        throw Error(ErrorCode::BrouwerAxiomFails,
                    "antitonicity fails at " + std::to_string(a) + " <= " + std::to_string(b));
  }
  return BZLattice{std::move(L), std::move(brouwer)};
}

BZLattice trivial_brouwer(InvolutionLattice L) {
  if (!is_pseudo_kleene(L))
    throw Error(ErrorCode::NotPseudoKleene, "a /\\ a' <= b \\/ b' fails");
  Mask complemented = kleene_complemented(L);
  Mask bounds = bit(L.base.bottom()) | bit(L.base.top());
  if (complemented != bounds) {
    int w = lowest_bit(complemented & ~bounds);
    throw Error(ErrorCode::BrouwerAxiomFails,
                "a /\\ a' = 0 for interior element " + std::to_string(w));
  }
  std::vector<std::uint8_t> brouwer(L.n(), static_cast<std::uint8_t>(L.base.bottom()));
  brouwer[L.base.bottom()] = static_cast<std::uint8_t>(L.base.top());
  return attach_brouwer(std::move(L), std::move(brouwer));
}

Cones cones(const InvolutionLattice& L) {
  Cones c;
  for (int x = 0; x < L.n(); ++x) {
    int y = L.inv(x);
    if (x == y) c.zero |= bit(x);
    else if (L.base.lt(x, y)) c.neg |= bit(x);
    else if (L.base.lt(y, x)) c.pos |= bit(x);
    else c.incomparable |= bit(x);
  }
  return c;
}

namespace {

ClassFlags classify_impl(const InvolutionLattice& L, const BZLattice* bzl) {
  ClassFlags f;
  f.i_lattice = true;
  f.bounded = true;  // finite lattices are bounded
  f.pseudo_kleene = is_pseudo_kleene(L);
  bool distributive = is_distributive(L.base);
  f.de_morgan = distributive;
  f.kleene = distributive && f.pseudo_kleene;

  const FiniteLattice& base = L.base;
  const int bot = base.bottom(), top = base.top();
  f.paraorthomodular = true;
  for (int a = 0; a < L.n() && f.paraorthomodular; ++a)
    for (int b : bits(base.up[a]))
      if (base.meet(L.inv(a), b) == bot && a != b) {
        f.paraorthomodular = false;
        break;
      }

  Mask complemented = kleene_complemented(L);
  f.antiortholattice = f.pseudo_kleene && complemented == (bit(bot) | bit(top));
  if (bzl && f.antiortholattice) f.antiortholattice = bzl->has_trivial_brouwer();
  f.bz = bzl != nullptr;

  // Ortholattice (a /\ a' = 0, a \/ a' = 1) plus the orthomodular law.
  bool ortho = complemented == full_mask(L.n());
  for (int a = 0; a < L.n() && ortho; ++a)
    if (base.join(a, L.inv(a)) != top) ortho = false;
  if (ortho)
    for (int a = 0; a < L.n() && ortho; ++a)
      for (int b : bits(base.up[a]))
        if (base.join(a, base.meet(L.inv(a), b)) != b) {
          ortho = false;
          break;
        }
  f.orthomodular = ortho;
  return f;
}

}  // namespace

ClassFlags classify(const InvolutionLattice& L) { return classify_impl(L, nullptr); }

ClassFlags classify(const BZLattice& L) { return classify_impl(L.base, &L); }

InvolutionLattice relabel(const InvolutionLattice& L, const Perm& pi) {
  FiniteLattice base = relabel(L.base, pi);
  std::vector<std::uint8_t> sigma(L.n());
  for (int x = 0; x < L.n(); ++x) sigma[pi[x]] = pi[L.inv(x)];
  return attach_involution(std::move(base), std::move(sigma));
}

CanonicalIForm canonical_i_form(const InvolutionLattice& L) {
  auto canon = canonical_poset(L.base.up, L.n(), true);
  std::vector<std::uint8_t> sigma(L.n());
  for (int x = 0; x < L.n(); ++x) sigma[canon.labeling[x]] = canon.labeling[L.inv(x)];
  // Minimize the involution bytes over the automorphisms of the canonical
  // order matrix; the pair (matrix, involution) is then a full i-isomorphism
  // invariant.
  std::vector<std::uint8_t> best = sigma;
  for (const Perm& g : canon.automorphisms) {
    std::vector<std::uint8_t> cand(L.n());
    for (int x = 0; x < L.n(); ++x) cand[g[x]] = g[sigma[x]];
    if (cand < best) best = cand;
  }
  return CanonicalIForm{std::move(canon.up), std::move(best)};
}

std::string canonical_i_key(const InvolutionLattice& L) {
  auto form = canonical_i_form(L);
  const int n = L.n();
  std::string key = std::to_string(n) + ";";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) key.push_back(((form.up[x] >> y) & 1) ? '1' : '0');
    key.push_back(x + 1 == n ? ';' : ',');
  }
  key += "inv=";
  for (int x = 0; x < n; ++x) {
    if (x) key.push_back(',');
    key += std::to_string(static_cast<int>(form.invol[x]));
  }
  return key;
}

std::optional<Perm> find_i_isomorphism(const InvolutionLattice& L,
                                       const InvolutionLattice& M) {
  if (L.n() != M.n()) return std::nullopt;
  auto cl = canonical_poset(L.base.up, L.n(), true);
  auto cm = canonical_poset(M.base.up, M.n(), true);
  if (cl.up != cm.up) return std::nullopt;
  std::vector<std::uint8_t> sl(L.n()), sm(M.n());
  for (int x = 0; x < L.n(); ++x) sl[cl.labeling[x]] = cl.labeling[L.inv(x)];
  for (int x = 0; x < M.n(); ++x) sm[cm.labeling[x]] = cm.labeling[M.inv(x)];
  // Some automorphism of the shared canonical matrix must conjugate one
  // involution onto the other.
  for (const Perm& g : cl.automorphisms) {
    std::vector<std::uint8_t> cand(L.n());
    for (int x = 0; x < L.n(); ++x) cand[g[x]] = g[sl[x]];
    if (cand == sm) {
      Perm inv_m(M.n());
      for (int x = 0; x < M.n(); ++x) inv_m[cm.labeling[x]] = static_cast<std::uint8_t>(x);
      Perm f(L.n());
      for (int x = 0; x < L.n(); ++x) f[x] = inv_m[g[cl.labeling[x]]];
      return f;
    }
  }
  return std::nullopt;
}

}  // namespace ilat
