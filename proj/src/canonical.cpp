#include "ilat/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>

namespace ilat {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::vector<Mask> covers_of(const std::vector<Mask>& up, int n) {
  std::vector<Mask> ucov(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : bits(up[x] & ~bit(x))) {
      bool direct = true;
      for (int z : bits(up[x] & ~bit(x) & ~bit(y)))
        if ((up[z] >> y) & 1) { direct = false; break; }
      if (direct) ucov[x] |= bit(y);
    }
  return ucov;
}

/// Iterated colour refinement over the cover digraph. The final colour of an
/// element is an isomorphism-invariant hash; ties are broken by search.
std::vector<std::uint64_t> refine_colors(const std::vector<Mask>& up, int n) {
  std::vector<Mask> down(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : bits(up[x])) down[y] |= bit(x);
  std::vector<Mask> ucov = covers_of(up, n);
  std::vector<Mask> lcov(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : bits(ucov[x])) lcov[y] |= bit(x);

  std::vector<std::uint64_t> color(n);
  for (int x = 0; x < n; ++x) {
    std::uint64_t h = 14695981039346656037ull;
    h = mix(h, popcount(up[x]));
    h = mix(h, popcount(down[x]));
    h = mix(h, popcount(ucov[x]));
    h = mix(h, popcount(lcov[x]));
    color[x] = h;
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    int classes_before = 0, classes_after = 0;
    {
      std::vector<std::uint64_t> s(color);
      std::sort(s.begin(), s.end());
      classes_before = static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
    }
    for (int x = 0; x < n; ++x) {
      std::uint64_t h = mix(color[x], 0x5bf03635);
      std::vector<std::uint64_t> nb;
      for (int y : bits(ucov[x])) nb.push_back(color[y]);
      std::sort(nb.begin(), nb.end());
      for (auto v : nb) h = mix(h, mix(v, 1));
      nb.clear();
      for (int y : bits(lcov[x])) nb.push_back(color[y]);
      std::sort(nb.begin(), nb.end());
      for (auto v : nb) h = mix(h, mix(v, 2));
      next[x] = h;
    }
    color.swap(next);
    {
      std::vector<std::uint64_t> s(color);
      std::sort(s.begin(), s.end());
      classes_after = static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
    }
    if (classes_after == classes_before) break;
  }
  return color;
}

/// Minimum-image search state. Positions are filled in order; the candidate
/// bit string grows by the two half-rows of each new position, so candidates
/// are comparable prefix by prefix.
struct MinImageSearch {
  const std::vector<Mask>& up;
  int n;
  std::vector<int> slot_of;          // element -> colour block index
  std::vector<std::vector<int>> block_elems;
  std::vector<int> pos_block;        // position -> colour block index
  std::vector<std::uint8_t> best_bits;
  std::vector<std::uint8_t> cur_bits;
  Perm cur;                          // element -> position, 0xff while unset
  std::vector<int> placed;           // position -> element
  Perm best;
  std::vector<Perm> all_best;
  bool collect;
  bool have_best = false;

  MinImageSearch(const std::vector<Mask>& up_, int n_, bool collect_)
      : up(up_), n(n_), collect(collect_) {}

  void run() {
    cur.assign(n, 0xff);
    placed.assign(n, -1);
    cur_bits.clear();
    dfs(0);
  }

  // Lexicographic compare of the current prefix against the incumbent.
  int prefix_cmp() const {
    return std::memcmp(cur_bits.data(), best_bits.data(), cur_bits.size());
  }

  void dfs(int pos) {
    if (pos == n) {
      if (!have_best) {
        best_bits = cur_bits;
        best = cur;
        have_best = true;
        if (collect) all_best.push_back(cur);
        return;
      }
      int cmp = prefix_cmp();
      if (cmp < 0) {
        best_bits = cur_bits;
        best = cur;
        all_best.clear();
        if (collect) all_best.push_back(cur);
      } else if (cmp == 0 && collect) {
        all_best.push_back(cur);
      }
      return;
    }
    const std::size_t mark = cur_bits.size();
    for (int e : block_elems[pos_block[pos]]) {
      if (cur[e] != 0xff) continue;
      // Append row/column bits of the new position against placed ones.
      for (int q = 0; q < pos; ++q)
        cur_bits.push_back(static_cast<std::uint8_t>((up[placed[q]] >> e) & 1));
      for (int q = 0; q < pos; ++q)
        cur_bits.push_back(static_cast<std::uint8_t>((up[e] >> placed[q]) & 1));
      if (!have_best || prefix_cmp() <= 0) {
        cur[e] = static_cast<std::uint8_t>(pos);
        placed[pos] = e;
        dfs(pos + 1);
        placed[pos] = -1;
        cur[e] = 0xff;
      }
      cur_bits.resize(mark);
    }
  }
};

}  // namespace

CanonicalPoset canonical_poset(const std::vector<Mask>& up, int n,
                               bool collect_automorphisms) {
  CanonicalPoset out;
  if (n == 0) return out;
  auto color = refine_colors(up, n);

  // Colour blocks ordered by hash value; block sizes and order are
  // isomorphism invariants, so the admissible permutations of two isomorphic
  // posets correspond.
  std::map<std::uint64_t, std::vector<int>> by_color;
  for (int x = 0; x < n; ++x) by_color[color[x]].push_back(x);
  MinImageSearch search(up, n, collect_automorphisms);
  search.block_elems.reserve(by_color.size());
  search.pos_block.resize(n);
  int pos = 0;
  for (auto& [c, elems] : by_color) {
    int blk = static_cast<int>(search.block_elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) search.pos_block[pos++] = blk;
    search.block_elems.push_back(elems);
  }
  search.run();

  out.labeling = search.best;
  out.up.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : bits(up[x])) out.up[search.best[x]] |= bit(search.best[y]);
  if (collect_automorphisms) {
    // Every optimal labeling composed with the inverse of the chosen one is
    // an automorphism of the canonical form, and all of them arise this way.
    Perm inv_best(n);
    for (int x = 0; x < n; ++x) inv_best[search.best[x]] = static_cast<std::uint8_t>(x);
    for (const Perm& p : search.all_best) {
      Perm g(n);
      for (int x = 0; x < n; ++x) g[search.best[x]] = p[x];
      out.automorphisms.push_back(std::move(g));
    }
    std::sort(out.automorphisms.begin(), out.automorphisms.end());
    out.automorphisms.erase(
        std::unique(out.automorphisms.begin(), out.automorphisms.end()),
        out.automorphisms.end());
  }
  return out;
}

std::string poset_key(const std::vector<Mask>& up, int n) {
  auto canon = canonical_poset(up, n);
  std::string key = std::to_string(n) + ";";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) key.push_back(((canon.up[x] >> y) & 1) ? '1' : '0');
    key.push_back(x + 1 == n ? ';' : ',');
  }
  return key;
}

std::string canonical_form(const FiniteLattice& L) { return poset_key(L.up, L.n); }

std::optional<Perm> find_isomorphism(const FiniteLattice& L, const FiniteLattice& M) {
  if (L.n != M.n) return std::nullopt;
  auto cl = canonical_poset(L.up, L.n);
  auto cm = canonical_poset(M.up, M.n);
  if (cl.up != cm.up) return std::nullopt;
  Perm inv_m(M.n);
  for (int x = 0; x < M.n; ++x) inv_m[cm.labeling[x]] = static_cast<std::uint8_t>(x);
  Perm f(L.n);
  for (int x = 0; x < L.n; ++x) f[x] = inv_m[cl.labeling[x]];
  return f;
}

std::vector<Perm> automorphisms(const FiniteLattice& L) {
  auto canon = canonical_poset(L.up, L.n, true);
  // Conjugate the automorphisms of the canonical form back to L.
  Perm inv(L.n);
  for (int x = 0; x < L.n; ++x) inv[canon.labeling[x]] = static_cast<std::uint8_t>(x);
  std::vector<Perm> out;
  for (const Perm& g : canon.automorphisms) {
    Perm h(L.n);
    for (int x = 0; x < L.n; ++x) h[x] = inv[g[canon.labeling[x]]];
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteLattice relabel(const FiniteLattice& L, const Perm& pi) {
  std::vector<Mask> up(L.n, 0);
  std::vector<std::string> labels(L.n);
  for (int x = 0; x < L.n; ++x) {
    labels[pi[x]] = L.labels[x];
    for (int y : bits(L.up[x])) up[pi[x]] |= bit(pi[y]);
  }
  return validate(up, std::move(labels));
}

}  // namespace ilat
