#include "ilat/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ilat {

namespace {

FiniteLattice build_from_leq(int n, const std::vector<std::pair<int, int>>& strict,
                             std::vector<std::string> labels) {
  std::vector<Mask> up(n, 0);
  for (int x = 0; x < n; ++x) up[x] = bit(x);
  for (auto [a, b] : strict) up[a] |= bit(b);
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y : bits(up[x])) {
        Mask merged = up[x] | up[y];
        if (merged != up[x]) {
          up[x] = merged;
          changed = true;
        }
      }
  }
  return validate(up, std::move(labels));
}

void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace

FiniteLattice chain_lattice(int n) {
  require(n >= 1, ErrorCode::EmptyInput, "chain needs at least one element");
  require(n <= kMaxElements, ErrorCode::CapExceeded, "chain too long");
  std::vector<Mask> up(n);
  for (int x = 0; x < n; ++x) up[x] = full_mask(n) & ~(bit(x) - 1);
  return validate(up);
}

InvolutionLattice chain(int n) {
  FiniteLattice L = chain_lattice(n);
  std::vector<std::uint8_t> sigma(n);
  for (int x = 0; x < n; ++x) sigma[x] = static_cast<std::uint8_t>(n - 1 - x);
  return attach_involution(std::move(L), std::move(sigma));
}

InvolutionLattice boolean_cube(int k) {
  require(k >= 0 && k <= 6, ErrorCode::CapExceeded, "cube exponent must be in [0,6]");
  const int n = 1 << k;
  std::vector<Mask> up(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((x & y) == x) up[x] |= bit(y);
  std::vector<std::uint8_t> sigma(n);
  for (int x = 0; x < n; ++x) sigma[x] = static_cast<std::uint8_t>((n - 1) ^ x);
  return attach_involution(validate(up), std::move(sigma));
}

FiniteLattice ordinal_sum(const FiniteLattice& L, const FiniteLattice& M) {
  require(L.n >= 1 && M.n >= 1, ErrorCode::MissingBound, "summands must be non-empty");
  const int n = L.n + M.n - 1;
  require(n <= kMaxElements, ErrorCode::CapExceeded, "ordinal sum too large");
  const int c = L.top();  // identified with M's bottom
  // L keeps its indices; non-bottom elements of M follow in their own order.
  std::vector<int> m_index(M.n, -1);
  int next = L.n;
  for (int x = 0; x < M.n; ++x) m_index[x] = (x == M.bottom()) ? c : next++;

  std::vector<std::pair<int, int>> strict;
  for (int x = 0; x < L.n; ++x)
    for (int y : bits(L.up[x] & ~bit(x))) strict.emplace_back(x, y);
  for (int x = 0; x < M.n; ++x)
    for (int y : bits(M.up[x] & ~bit(x))) strict.emplace_back(m_index[x], m_index[y]);
  return build_from_leq(n, strict, default_labels(n));
}

InvolutionLattice i_ordinal_triple(const FiniteLattice& M, const InvolutionLattice& K) {
  require(M.n >= 1, ErrorCode::MissingBound, "lower summand must be non-empty");
  FiniteLattice lower_plus_mid = ordinal_sum(M, K.base);
  FiniteLattice lat = ordinal_sum(lower_plus_mid, dual(M));
  const int n = lat.n;
  // index layout: M = [0, |M|), K interior shifted by |M|-1, dual copy at the top
  const int m = M.n;
  const int k = K.n();
  std::vector<std::uint8_t> sigma(n);
  // Positions of K's elements inside the sum.
  std::vector<int> kpos(k);
  {
    int next = m;
    for (int x = 0; x < k; ++x) kpos[x] = (x == K.base.bottom()) ? M.top() : next++;
  }
  // Positions of the dual copy: element x of M sits at dual_pos[x].
  std::vector<int> dpos(m);
  {
    int mid_top = kpos[K.base.top()];
    int next = m + k - 1;
    for (int x = 0; x < m; ++x) dpos[x] = (x == M.top()) ? mid_top : next++;
  }
  for (int x = 0; x < m; ++x) sigma[x] = static_cast<std::uint8_t>(dpos[x]);
  for (int x = 0; x < m; ++x) sigma[dpos[x]] = static_cast<std::uint8_t>(x);
  for (int x = 0; x < k; ++x) sigma[kpos[x]] = static_cast<std::uint8_t>(kpos[K.inv(x)]);
  return attach_involution(std::move(lat), std::move(sigma));
}

FiniteLattice horizontal_sum(const FiniteLattice& L, const FiniteLattice& M) {
  require(L.n >= 2 && M.n >= 2, ErrorCode::TrivialSummand,
          "horizontal sum needs non-trivial bounded summands");
  const int n = L.n + M.n - 2;
  require(n <= kMaxElements, ErrorCode::CapExceeded, "horizontal sum too large");
  // 0, interior of L, interior of M, 1
  std::vector<int> lpos(L.n), mpos(M.n);
  int next = 1;
  for (int x = 0; x < L.n; ++x)
    lpos[x] = (x == L.bottom()) ? 0 : (x == L.top()) ? n - 1 : next++;
  for (int x = 0; x < M.n; ++x)
    mpos[x] = (x == M.bottom()) ? 0 : (x == M.top()) ? n - 1 : next++;

  std::vector<std::pair<int, int>> strict;
  for (int x = 0; x < L.n; ++x)
    for (int y : bits(L.up[x] & ~bit(x))) strict.emplace_back(lpos[x], lpos[y]);
  for (int x = 0; x < M.n; ++x)
    for (int y : bits(M.up[x] & ~bit(x))) strict.emplace_back(mpos[x], mpos[y]);
  return build_from_leq(n, strict, default_labels(n));
}

InvolutionLattice horizontal_sum(const InvolutionLattice& L, const InvolutionLattice& M) {
  FiniteLattice lat = horizontal_sum(L.base, M.base);
  const int n = lat.n;
  std::vector<int> lpos(L.n()), mpos(M.n());
  int next = 1;
  for (int x = 0; x < L.n(); ++x)
    lpos[x] = (x == L.base.bottom()) ? 0 : (x == L.base.top()) ? n - 1 : next++;
  for (int x = 0; x < M.n(); ++x)
    mpos[x] = (x == M.base.bottom()) ? 0 : (x == M.base.top()) ? n - 1 : next++;
  std::vector<std::uint8_t> sigma(n);
  for (int x = 0; x < L.n(); ++x) sigma[lpos[x]] = static_cast<std::uint8_t>(lpos[L.inv(x)]);
  for (int x = 0; x < M.n(); ++x) sigma[mpos[x]] = static_cast<std::uint8_t>(mpos[M.inv(x)]);
  return attach_involution(std::move(lat), std::move(sigma));
}

FiniteLattice direct_product(const FiniteLattice& L, const FiniteLattice& M) {
  const long n = static_cast<long>(L.n) * M.n;
  require(n >= 1 && n <= kMaxElements, ErrorCode::CapExceeded, "product too large");
  std::vector<Mask> up(n, 0);
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < M.n; ++b)
      for (int c : bits(L.up[a]))
        for (int d : bits(M.up[b])) up[a * M.n + b] |= bit(c * M.n + d);
  return validate(up);
}

InvolutionLattice direct_product(const InvolutionLattice& L, const InvolutionLattice& M) {
  FiniteLattice lat = direct_product(L.base, M.base);
  std::vector<std::uint8_t> sigma(lat.n);
  for (int a = 0; a < L.n(); ++a)
    for (int b = 0; b < M.n(); ++b)
      sigma[a * M.n() + b] = static_cast<std::uint8_t>(L.inv(a) * M.n() + M.inv(b));
  return attach_involution(std::move(lat), std::move(sigma));
}

Partition cong_ordinal_sum(const FiniteLattice& L, const FiniteLattice& M,
                           const Partition& alpha, const Partition& beta) {
  if (alpha.n() != L.n || beta.n() != M.n)
    throw Error(ErrorCode::SizeMismatch, "congruence sizes do not match summands");
  const int n = L.n + M.n - 1;
  const int c = L.top();
  std::vector<int> m_index(M.n);
  int next = L.n;
  for (int x = 0; x < M.n; ++x) m_index[x] = (x == M.bottom()) ? c : next++;

  // Classes of alpha stay; classes of beta stay; the class of the identified
  // element is the union of its two classes.
  Partition out;
  out.cid.assign(n, 0);
  for (int x = 0; x < L.n; ++x) out.cid[x] = alpha.cid[x];
  for (int x = 0; x < M.n; ++x) {
    int target;
    if (beta.same(x, M.bottom())) target = alpha.cid[c];
    else target = m_index[beta.cid[x]];
    out.cid[m_index[x]] = static_cast<std::uint8_t>(target);
  }
  out.canonicalize();
  return out;
}

Partition cong_horizontal_sum(const FiniteLattice& L, const FiniteLattice& M,
                              const Partition& delta, const Partition& epsilon) {
  if (delta.n() != L.n || epsilon.n() != M.n)
    throw Error(ErrorCode::SizeMismatch, "equivalence sizes do not match summands");
  if (delta.is_all() || epsilon.is_all())
    throw Error(ErrorCode::ForbiddenTop, "horizontal sum of a full equivalence");
  const int n = L.n + M.n - 2;
  std::vector<int> lpos(L.n), mpos(M.n);
  int next = 1;
  for (int x = 0; x < L.n; ++x)
    lpos[x] = (x == L.bottom()) ? 0 : (x == L.top()) ? n - 1 : next++;
  for (int x = 0; x < M.n; ++x)
    mpos[x] = (x == M.bottom()) ? 0 : (x == M.top()) ? n - 1 : next++;

  // Use a union-find seeded with both equivalences through the index maps;
  // the 0- and 1-classes merge because the bounds are identified.
  Partition out = Partition::identity(n);
  std::vector<std::uint8_t>& cid = out.cid;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int x = 0; x < L.n; ++x) unite(lpos[x], lpos[delta.cid[x]]);
  for (int x = 0; x < M.n; ++x) unite(mpos[x], mpos[epsilon.cid[x]]);
  for (int i = 0; i < n; ++i) cid[i] = static_cast<std::uint8_t>(find(i));
  out.canonicalize();
  return out;
}

InvolutionLattice m3() {
  InvolutionLattice a = horizontal_sum(chain(3), boolean_cube(2));
  a.base.labels = {"0", "a", "b", "c", "1"};
  return a;
}

InvolutionLattice n5() {
  InvolutionLattice a = horizontal_sum(chain(3), chain(4));
  a.base.labels = {"0", "a", "b", "b'", "1"};
  return a;
}

InvolutionLattice b6() {
  // 0 < a < b' < 1 and 0 < b < a' < 1, with a <-> a', b <-> b'.
  std::vector<std::pair<int, int>> strict = {{0, 1}, {1, 3}, {3, 5}, {0, 2}, {2, 4}, {4, 5}};
  FiniteLattice lat = build_from_leq(6, strict, {"0", "a", "b", "b'", "a'", "1"});
  return attach_involution(std::move(lat), {5, 4, 3, 2, 1, 0});
}

InvolutionLattice l3_h_l3() { return horizontal_sum(chain(3), chain(3)); }

InvolutionLattice l3_h_l5() { return horizontal_sum(chain(3), chain(5)); }

InvolutionLattice l4_h_l4() { return horizontal_sum(chain(4), chain(4)); }

InvolutionLattice l3_h_prod23() {
  return horizontal_sum(chain(3), direct_product(chain(2), chain(3)));
}

InvolutionLattice big_m() {
  return i_ordinal_triple(boolean_cube(2).base, chain(2));
}

InvolutionLattice big_h() {
  return horizontal_sum(horizontal_sum(chain(4), chain(4)), chain(4));
}

InvolutionLattice big_l() {
  FiniteLattice wing = horizontal_sum(m3().base, chain_lattice(4));
  return i_ordinal_triple(wing, boolean_cube(3));
}

InvolutionLattice e_n(int n) {
  require(n >= 6 && n % 2 == 0, ErrorCode::SizeMismatch, "E_n needs even n >= 6");
  return i_ordinal_triple(chain_lattice(n / 2 - 2), direct_product(chain(2), chain(3)));
}

InvolutionLattice e_kn(int k, int n) {
  require(k >= 2 && k % 2 == 0, ErrorCode::SizeMismatch, "E_{k,n} needs even k >= 2");
  require(n % 2 == 0 && k <= n - 6, ErrorCode::SizeMismatch, "E_{k,n} needs even n >= k + 6");
  FiniteLattice lower = ordinal_sum(chain_lattice((n - k - 4) / 2), boolean_cube(2).base);
  return i_ordinal_triple(lower, chain(k));
}

InvolutionLattice f_n(int n) {
  require(n >= 6 && n % 2 == 0, ErrorCode::SizeMismatch, "F_n needs even n >= 6");
  if (n == 6) return b6();
  return i_ordinal_triple(chain_lattice(n / 2 - 2), b6());
}

InvolutionLattice g_n(int n) {
  require(n >= 8 && n % 2 == 0, ErrorCode::SizeMismatch, "G_n needs even n >= 8");
  if (n == 8) return big_h();
  return i_ordinal_triple(chain_lattice(n / 2 - 3), big_h());
}

std::vector<ExampleRow> worked_examples() {
  std::vector<ExampleRow> rows;
  rows.push_back({"L2xL3", direct_product(chain(2), chain(3)), 8, 4});
  rows.push_back({"B6", b6(), 7, 5});
  rows.push_back({"M", big_m(), 32, 8});
  rows.push_back({"H", big_h(), 9, 9});
  rows.push_back({"L4xL5", direct_product(chain(4), chain(5)), 128, 16});
  rows.push_back({"L", big_l(), 72, 24});
  auto pow2 = [](int e) { return 1L << e; };
  for (int n : {6, 8, 10})
    rows.push_back({"E" + std::to_string(n), e_n(n), pow2(n - 3), pow2(n / 2 - 1)});
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 8}, {2, 10}, {4, 10}})
    rows.push_back({"E" + std::to_string(k) + "_" + std::to_string(n), e_kn(k, n),
                    pow2(n - 3), pow2(n / 2 - 1)});
  for (int n : {6, 8, 10})
    rows.push_back({"F" + std::to_string(n), f_n(n), 7 * pow2(n - 6), 5 * pow2(n / 2 - 3)});
  for (int n : {8, 10, 12})
    rows.push_back({"G" + std::to_string(n), g_n(n), 9 * pow2(n - 8), 9 * pow2(n / 2 - 4)});
  return rows;
}

std::optional<InvolutionLattice> catalog_build(const std::string& raw,
                                               const std::vector<int>& params) {
  std::string name;
  for (char c : raw) name.push_back(static_cast<char>(std::tolower(c)));
  auto arity = [&](std::size_t want) {
    if (params.size() != want)
      throw Error(ErrorCode::SizeMismatch,
                  raw + " takes " + std::to_string(want) + " parameter(s)");
  };
  if (name == "chain" || name == "ln") { arity(1); return chain(params[0]); }
  if (name == "cube") { arity(1); return boolean_cube(params[0]); }
  if (name == "m3") { arity(0); return m3(); }
  if (name == "n5") { arity(0); return n5(); }
  if (name == "b6") { arity(0); return b6(); }
  if (name == "l3hl3") { arity(0); return l3_h_l3(); }
  if (name == "l3hl5") { arity(0); return l3_h_l5(); }
  if (name == "l4hl4") { arity(0); return l4_h_l4(); }
  if (name == "l3hl2xl3") { arity(0); return l3_h_prod23(); }
  if (name == "m" || name == "m8") { arity(0); return big_m(); }
  if (name == "h" || name == "h8") { arity(0); return big_h(); }
  if (name == "l" || name == "l20") { arity(0); return big_l(); }
  if (name == "en") { arity(1); return e_n(params[0]); }
  if (name == "ekn") { arity(2); return e_kn(params[0], params[1]); }
  if (name == "fn") { arity(1); return f_n(params[0]); }
  if (name == "gn") { arity(1); return g_n(params[0]); }
  return std::nullopt;
}

std::vector<std::string> catalog_names() {
  return {"chain N", "cube K",  "m3",     "n5", "b6", "l3hl3", "l3hl5", "l4hl4",
          "l3hl2xl3", "m8",     "h8",     "l20", "en N", "ekn K N", "fn N", "gn N"};
}

}  // namespace ilat
