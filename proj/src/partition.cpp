#include "ilat/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ilat {

namespace {

void check_same_size(const Partition& p, const Partition& q) {
  if (p.n() != q.n())
    throw Error(ErrorCode::SizeMismatch,
                "partitions over " + std::to_string(p.n()) + " and " +
                    std::to_string(q.n()) + " elements");
}

}  // namespace

Partition Partition::identity(int n) {
  std::vector<std::uint8_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(std::move(ids));
}

Partition Partition::all(int n) {
  return Partition(std::vector<std::uint8_t>(n, 0));
}

int Partition::num_classes() const {
  int count = 0;
  for (int x = 0; x < n(); ++x)
    if (cid[x] == x) ++count;
  return count;
}

bool Partition::is_identity() const {
  for (int x = 0; x < n(); ++x)
    if (cid[x] != x) return false;
  return true;
}

bool Partition::is_all() const {
  for (auto c : cid)
    if (c != 0) return false;
  return !cid.empty();
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n(), -1);
  for (int x = 0; x < n(); ++x) {
    if (slot[cid[x]] < 0) {
      slot[cid[x]] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[cid[x]]].push_back(x);
  }
  return out;
}

bool Partition::refines(const Partition& q) const {
  check_same_size(*this, q);
  for (int x = 0; x < n(); ++x)
    if (q.cid[x] != q.cid[cid[x]]) return false;
  return true;
}

void Partition::canonicalize() {
  const int m = n();
  std::vector<int> root(m);
  for (int x = 0; x < m; ++x) {
    int r = cid[x];
    while (r != cid[r]) r = cid[r];  // follow representative chains
    root[x] = r;
  }
  std::vector<int> least(m, -1);
  for (int x = 0; x < m; ++x)
    if (least[root[x]] < 0) least[root[x]] = x;  // first hit is the minimum
  for (int x = 0; x < m; ++x) cid[x] = static_cast<std::uint8_t>(least[root[x]]);
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 1469598103934665603ull;
  for (auto c : p.cid) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  check_same_size(p, q);
  const int n = p.n();
  Partition out;
  out.cid.assign(n, 0);
  // Classes of the meet are intersections; the first element seen with a
  // given (p-class, q-class) pair is its least member.
  std::vector<int> first(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    int key = p.cid[x] * n + q.cid[x];
    if (first[key] < 0) first[key] = x;
    out.cid[x] = static_cast<std::uint8_t>(first[key]);
  }
  return out;
}

Partition partition_join(const Partition& p, const Partition& q) {
  check_same_size(p, q);
  const int n = p.n();
  std::vector<std::uint8_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int x = 0; x < n; ++x) {
    unite(x, p.cid[x]);
    unite(x, q.cid[x]);
  }
  Partition out;
  out.cid.assign(n, 0);
  for (int x = 0; x < n; ++x) out.cid[x] = static_cast<std::uint8_t>(find(x));
  out.canonicalize();
  return out;
}

Partition prime_of(const Partition& p, std::span<const std::uint8_t> invol) {
  const int n = p.n();
  if (static_cast<int>(invol.size()) != n)
    throw Error(ErrorCode::SizeMismatch, "involution size does not match partition");
  Partition out;
  out.cid.assign(n, 0);
  // (a, b) in theta' iff (a', b') in theta: the class of x is the image of
  // the class of x'.
  for (int x = 0; x < n; ++x) out.cid[x] = invol[p.cid[invol[x]]];
  out.canonicalize();
  return out;
}

}  // namespace ilat
