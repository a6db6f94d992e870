#include "ilat/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>
#include <unordered_set>

#include "ilat/canonical.hpp"
#include "ilat/constructions.hpp"

namespace ilat {

namespace {

long pow2l(int e) { return 1L << e; }

/// A join-semilattice-with-top prefix, leveled by depth. Adding a bottom to a
/// complete prefix of size n-1 yields an n-element lattice, and every finite
/// lattice arises uniquely this way, so generating these prefixes level by
/// level with canonical-form rejection enumerates lattices up to isomorphism.
struct SemiState {
  int n = 0;
  std::vector<Mask> up;
  Mask last_level = 0;
};

int least_of(const std::vector<Mask>& up, Mask u) {
  for (int z : bits(u))
    if ((u & ~up[z]) == 0) return z;
  return -1;
}

struct Candidate {
  Mask covers = 0;
  Mask upcl = 0;
};

/// Antichains usable as the cover set of a new element one level down:
/// must touch the deepest level and leave every (new, old) join defined.
std::vector<Candidate> level_candidates(const SemiState& s) {
  std::vector<Candidate> out;
  const Mask limit = Mask{1} << s.n;
  for (Mask a = 1; a < limit; ++a) {
    if ((a & s.last_level) == 0) continue;
    bool antichain = true;
    Mask upcl = 0;
    for (int x : bits(a)) {
      if ((s.up[x] & a) != bit(x)) { antichain = false; break; }
      upcl |= s.up[x];
    }
    if (!antichain) continue;
    bool ok = true;
    for (int z = 0; z < s.n && ok; ++z) {
      if ((upcl >> z) & 1) continue;  // z above the new element: join is z
      if (least_of(s.up, s.up[z] & upcl) < 0) ok = false;
    }
    if (ok) out.push_back({a, upcl});
  }
  return out;
}

SemiState apply_level(const SemiState& s, const std::vector<int>& chosen,
                      const std::vector<Candidate>& cands) {
  SemiState t;
  t.n = s.n + static_cast<int>(chosen.size());
  t.up = s.up;
  t.up.resize(t.n);
  t.last_level = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    int x = s.n + static_cast<int>(i);
    t.up[x] = bit(x) | cands[chosen[i]].upcl;
    t.last_level |= bit(x);
  }
  return t;
}

struct Enumerator {
  int target;  // semilattice size = n - 1
  std::vector<FiniteLattice> found;

  void emit(const SemiState& s) {
    const int n = s.n + 1;
    std::vector<Mask> up(n);
    for (int x = 0; x < s.n; ++x) up[x] = s.up[x];
    up[n - 1] = full_mask(n);  // the adjoined bottom
    FiniteLattice lat = validate(up);
    auto canon = canonical_poset(lat.up, lat.n);
    FiniteLattice out = relabel(lat, canon.labeling);
    out.labels = default_labels(out.n);
    found.push_back(std::move(out));
  }

  void extend(const SemiState& s) {
    if (s.n == target) {
      emit(s);
      return;
    }
    const int budget = target - s.n;
    auto cands = level_candidates(s);
    const int c = static_cast<int>(cands.size());
    std::vector<std::vector<char>> compat(c, std::vector<char>(c, 0));
    for (int i = 0; i < c; ++i)
      for (int j = i; j < c; ++j)
        compat[i][j] = compat[j][i] =
            least_of(s.up, cands[i].upcl & cands[j].upcl) >= 0 ? 1 : 0;

    std::unordered_set<std::string> seen;
    std::vector<int> chosen;
    // Non-decreasing candidate sequences = multisets; children of one parent
    // are deduplicated by canonical form, and children of non-isomorphic
    // parents are never isomorphic (the parent is the sub-poset of depth <
    // the child's, so it is recoverable up to isomorphism).
    std::function<void(int)> choose = [&](int start) {
      if (!chosen.empty()) {
        SemiState child = apply_level(s, chosen, cands);
        if (seen.insert(poset_key(child.up, child.n)).second) extend(child);
      }
      if (static_cast<int>(chosen.size()) >= budget) return;
      for (int i = start; i < c; ++i) {
        bool ok = true;
        for (int j : chosen)
          if (!compat[i][j]) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(i);
        choose(i);
        chosen.pop_back();
      }
    };
    choose(0);
  }
};

void check_census_size(int n, int cap) {
  if (n < 1) throw Error(ErrorCode::EmptyInput, "census size must be positive");
  if (cap > kHardCensusCap) cap = kHardCensusCap;
  if (n > cap)
    throw Error(ErrorCode::CapExceeded, "census size " + std::to_string(n) +
                                            " exceeds cap " + std::to_string(cap));
}

std::string i_key_string(int n, const std::vector<Mask>& up,
                         const std::vector<std::uint8_t>& invol) {
  std::string key = std::to_string(n) + ";";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) key.push_back(((up[x] >> y) & 1) ? '1' : '0');
    key.push_back(x + 1 == n ? ';' : ',');
  }
  key += "inv=";
  for (int x = 0; x < n; ++x) {
    if (x) key.push_back(',');
    key += std::to_string(static_cast<int>(invol[x]));
  }
  return key;
}

std::vector<std::uint8_t> conjugate(const Perm& g, const std::vector<std::uint8_t>& s) {
  std::vector<std::uint8_t> out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) out[g[x]] = g[s[x]];
  return out;
}

/// Involution orbit representatives under the automorphism group, as
/// (canonical bytes, representative) sorted by bytes.
std::vector<std::vector<std::uint8_t>> involution_orbits(
    const FiniteLattice& L, const std::vector<Perm>& autos) {
  std::map<std::vector<std::uint8_t>, bool> orbit_min;
  for (const auto& sigma : involutions_of(L)) {
    std::vector<std::uint8_t> best = sigma;
    for (const Perm& g : autos) {
      auto cand = conjugate(g, sigma);
      if (cand < best) best = cand;
    }
    orbit_min[best] = true;
  }
  std::vector<std::vector<std::uint8_t>> out;
  for (auto& [rep, _] : orbit_min) out.push_back(rep);
  return out;
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int n, int cap) {
  check_census_size(n, cap);
  Enumerator e;
  e.target = n - 1;
  if (n == 1) {
    e.found.push_back(validate(std::vector<Mask>{1}));
  } else {
    SemiState root;
    root.n = 1;
    root.up = {1};
    root.last_level = 1;
    e.extend(root);
  }
  std::sort(e.found.begin(), e.found.end(),
            [](const FiniteLattice& a, const FiniteLattice& b) {
              return canonical_form(a) < canonical_form(b);
            });
  return e.found;
}

std::vector<InvolutionLattice> enumerate_i_lattices(int n, int cap) {
  std::vector<InvolutionLattice> out;
  for (const FiniteLattice& L : enumerate_lattices(n, cap)) {
    auto autos = automorphisms(L);
    for (auto& rep : involution_orbits(L, autos))
      out.push_back(attach_involution(L, rep));
  }
  return out;
}

CensusData run_census(int n, int cap, int threads) {
  std::vector<FiniteLattice> lattices = enumerate_lattices(n, cap);
  const int classes = static_cast<int>(lattices.size());
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw ? static_cast<int>(hw) : 1;
  }
  threads = std::max(1, std::min(threads, classes == 0 ? 1 : classes));

  struct ClassResult {
    long con_count = 0;
    std::vector<CensusEntry> entries;
  };
  std::vector<ClassResult> results(classes);

  auto work = [&](int idx) {
    const FiniteLattice& L = lattices[idx];
    ClassResult& r = results[idx];
    r.con_count = all_congruences(L).count();
    auto autos = automorphisms(L);
    bool zero_mi = popcount(L.ucov[L.bottom()]) <= 1;
    bool mod = is_modular(L);
    bool dist = is_distributive(L);
    for (auto& rep : involution_orbits(L, autos)) {
      CensusEntry e;
      e.algebra = attach_involution(L, rep);
      e.i_key = i_key_string(L.n, L.up, rep);
      e.lattice_index = idx;
      e.con_count = r.con_count;
      e.con_i_count = i_congruences(e.algebra).count();
      ClassFlags flags = classify(e.algebra);
      e.modular = mod;
      e.distributive = dist;
      e.pseudo_kleene = flags.pseudo_kleene;
      e.kleene = flags.kleene;
      e.antiortholattice = flags.antiortholattice;
      e.zero_meet_irreducible = zero_mi;
      if (flags.antiortholattice)
        e.con_bz_count = bz_congruences(trivial_brouwer(e.algebra)).count();
      r.entries.push_back(std::move(e));
    }
  };

  std::atomic<int> next{0};
  auto runner = [&] {
    for (int idx = next.fetch_add(1); idx < classes; idx = next.fetch_add(1)) work(idx);
  };
  if (threads == 1) {
    runner();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(runner);
    for (auto& t : pool) t.join();
  }

  CensusData data;
  data.n = n;
  for (int i = 0; i < classes; ++i) {
    data.lattice_keys.push_back(canonical_form(lattices[i]));
    data.lattice_con_counts.push_back(results[i].con_count);
    for (auto& e : results[i].entries) data.entries.push_back(std::move(e));
  }
  return data;
}

CensusRecord census_record(const CensusData& data) {
  CensusRecord rec;
  rec.n = data.n;
  rec.lattice_class_count = static_cast<long>(data.lattice_keys.size());
  rec.i_lattice_class_count = static_cast<long>(data.entries.size());
  for (const auto& e : data.entries) rec.histogram[e.con_i_count] += 1;
  if (!rec.histogram.empty()) {
    rec.max_i_congruences = rec.histogram.rbegin()->first;
    for (const auto& e : data.entries)
      if (e.con_i_count == rec.max_i_congruences)
        rec.extremal_witnesses.push_back(e.i_key);
    auto it = rec.histogram.rbegin();
    ++it;
    if (it != rec.histogram.rend()) {
      rec.runner_up = it->first;
      for (const auto& e : data.entries)
        if (e.con_i_count == rec.runner_up) rec.runner_up_witnesses.push_back(e.i_key);
    }
    std::sort(rec.extremal_witnesses.begin(), rec.extremal_witnesses.end());
    std::sort(rec.runner_up_witnesses.begin(), rec.runner_up_witnesses.end());
  }
  return rec;
}

namespace {

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorCode::TheoremViolated, what);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string join_keys(const std::vector<std::string>& keys) {
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += " | ";
    out += k;
  }
  return out.empty() ? "(none)" : out;
}

/// The chain-diamond-chain sandwich with the Boolean middle.
InvolutionLattice boolean_sandwich(int n) {
  return i_ordinal_triple(chain_lattice(n / 2 - 1), boolean_cube(2));
}

}  // namespace

CensusRecord verify_max_theorem(const CensusData& data) {
  const int n = data.n;
  CensusRecord rec = census_record(data);
  const long bound = pow2l(n / 2);
  if (rec.max_i_congruences != bound)
    violated("max |Con_I| at n=" + std::to_string(n) + " is " +
             std::to_string(rec.max_i_congruences) + ", expected " + std::to_string(bound));

  std::vector<std::string> expected{canonical_i_key(chain(n))};
  if (n >= 4 && n % 2 == 0) expected.push_back(canonical_i_key(boolean_sandwich(n)));
  expected = sorted(std::move(expected));
  if (rec.extremal_witnesses != expected)
    violated("extremal i-lattices at n=" + std::to_string(n) + " are " +
             join_keys(rec.extremal_witnesses) + ", expected " + join_keys(expected));

  // Pseudo-Kleene restriction: the same witnesses attain the maximum, and
  // below five elements every pseudo-Kleene algebra attains it.
  long pk_max = 0;
  std::vector<std::string> pk_witnesses;
  for (const auto& e : data.entries) {
    if (!e.pseudo_kleene) continue;
    if (e.con_i_count > pk_max) {
      pk_max = e.con_i_count;
      pk_witnesses.clear();
    }
    if (e.con_i_count == pk_max) pk_witnesses.push_back(e.i_key);
    if (n <= 4 && e.con_i_count != bound)
      violated("pseudo-Kleene algebra below the bound at n=" + std::to_string(n) +
               ": " + e.i_key);
  }
  if (pk_max != bound)
    violated("pseudo-Kleene max at n=" + std::to_string(n) + " is " +
             std::to_string(pk_max));
  if (sorted(std::move(pk_witnesses)) != expected)
    violated("pseudo-Kleene extremal witnesses differ at n=" + std::to_string(n));
  return rec;
}

CensusRecord verify_bz_theorem(const CensusData& data) {
  const int n = data.n;
  if (n < 2)
    throw Error(ErrorCode::SizeMismatch, "BZ bound needs at least two elements");
  const long bound = pow2l(n / 2 - 1) + 1;

  CensusRecord rec;
  rec.n = n;
  rec.lattice_class_count = static_cast<long>(data.lattice_keys.size());
  long max_seen = 0;
  for (const auto& e : data.entries) {
    if (!(e.antiortholattice && e.zero_meet_irreducible && e.con_bz_count >= 0)) continue;
    rec.i_lattice_class_count += 1;
    rec.histogram[e.con_bz_count] += 1;
    if (e.con_bz_count > max_seen) {
      max_seen = e.con_bz_count;
      rec.extremal_witnesses.clear();
    }
    if (e.con_bz_count == max_seen) rec.extremal_witnesses.push_back(e.i_key);
  }
  rec.max_i_congruences = max_seen;
  rec.extremal_witnesses = sorted(std::move(rec.extremal_witnesses));
  if (max_seen != bound)
    violated("max |Con_BZ| at n=" + std::to_string(n) + " is " + std::to_string(max_seen) +
             ", expected " + std::to_string(bound));

  std::vector<std::string> expected{canonical_i_key(chain(n))};
  if (n >= 6 && n % 2 == 0) expected.push_back(canonical_i_key(boolean_sandwich(n)));
  expected = sorted(std::move(expected));
  if (rec.extremal_witnesses != expected)
    violated("extremal BZ-lattices at n=" + std::to_string(n) + " are " +
             join_keys(rec.extremal_witnesses) + ", expected " + join_keys(expected));
  return rec;
}

void verify_second_largest(const CensusData& data) {
  const int n = data.n;
  const long second = pow2l(n / 2 - 1);

  auto check = [&](const char* what, auto&& keep, int min_n,
                   const std::vector<std::string>& must_contain) {
    if (n < min_n) return;
    std::map<long, std::vector<std::string>, std::greater<long>> by_count;
    for (const auto& e : data.entries)
      if (keep(e)) by_count[e.con_i_count].push_back(e.i_key);
    if (by_count.size() < 2)
      violated(std::string(what) + " classes at n=" + std::to_string(n) +
               " have fewer than two distinct counts");
    auto it = by_count.begin();
    if (it->first != pow2l(n / 2))
      violated(std::string(what) + " max at n=" + std::to_string(n) + " is " +
               std::to_string(it->first));
    ++it;
    if (it->first != second)
      violated(std::string(what) + " second largest at n=" + std::to_string(n) + " is " +
               std::to_string(it->first) + ", expected " + std::to_string(second));
    for (const auto& key : must_contain)
      if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
        violated(std::string(what) + " second-largest witnesses at n=" +
                 std::to_string(n) + " miss an expected shape");
  };

  // Named witnesses from the runner-up families.
  std::vector<std::string> modular_witness, kleene_witness;
  if (n >= 5 && n % 2 == 1)
    modular_witness.push_back(canonical_i_key(i_ordinal_triple(chain_lattice((n - 3) / 2), m3())));
  if (n >= 6 && n % 2 == 0) {
    modular_witness.push_back(canonical_i_key(e_n(n)));
    kleene_witness.push_back(canonical_i_key(e_n(n)));
  }
  if (n >= 7 && n % 2 == 1)
    kleene_witness.push_back(canonical_i_key(i_ordinal_triple(
        ordinal_sum(chain_lattice((n - 5) / 2), boolean_cube(2).base), chain(1))));

  check("modular", [](const CensusEntry& e) { return e.modular; }, 5, modular_witness);
  check("Kleene", [](const CensusEntry& e) { return e.kleene; }, 6, kleene_witness);
}

void verify_lattice_theorem(const CensusData& data) {
  const int n = data.n;
  std::map<long, std::vector<std::string>, std::greater<long>> by_count;
  for (std::size_t i = 0; i < data.lattice_keys.size(); ++i)
    by_count[data.lattice_con_counts[i]].push_back(data.lattice_keys[i]);
  for (auto& [cnt, keys] : by_count) std::sort(keys.begin(), keys.end());

  auto chain_wrap = [&](const FiniteLattice& mid, int k, int rest) {
    FiniteLattice lat = ordinal_sum(chain_lattice(k), mid);
    return ordinal_sum(lat, chain_lattice(rest));
  };

  struct Expected {
    long count;
    std::vector<std::string> witnesses;
  };
  std::vector<Expected> expected;
  expected.push_back({pow2l(n - 1), {canonical_form(chain_lattice(n))}});
  if (n >= 4) {
    Expected e{pow2l(n - 2), {}};
    for (int k = 1; k <= n - 3; ++k)
      e.witnesses.push_back(canonical_form(chain_wrap(boolean_cube(2).base, k, n - k - 2)));
    expected.push_back(std::move(e));
  }
  if (n >= 5) {
    Expected e{5 * pow2l(n - 5), {}};
    for (int k = 1; k <= n - 4; ++k)
      e.witnesses.push_back(canonical_form(chain_wrap(n5().base, k, n - k - 3)));
    expected.push_back(std::move(e));
  }
  if (n >= 6) {
    Expected e{pow2l(n - 3), {}};
    FiniteLattice prod23 = direct_product(chain_lattice(2), chain_lattice(3));
    for (int k = 1; k <= n - 5; ++k)
      e.witnesses.push_back(canonical_form(chain_wrap(prod23, k, n - k - 4)));
    for (int r = 1; r + 1 <= n - 5; ++r)
      for (int s = 1; r + s <= n - 5; ++s) {
        FiniteLattice mid = ordinal_sum(boolean_cube(2).base, chain_lattice(s));
        mid = ordinal_sum(mid, boolean_cube(2).base);
        e.witnesses.push_back(canonical_form(chain_wrap(mid, r, n - r - s - 4)));
      }
    expected.push_back(std::move(e));
  }
  if (n >= 6) {
    Expected e{7 * pow2l(n - 6), {}};
    for (int k = 1; k <= n - 5; ++k) {
      e.witnesses.push_back(canonical_form(chain_wrap(l3_h_l5().base, k, n - k - 4)));
      e.witnesses.push_back(canonical_form(chain_wrap(l4_h_l4().base, k, n - k - 4)));
    }
    expected.push_back(std::move(e));
  }

  auto it = by_count.begin();
  for (std::size_t i = 0; i < expected.size(); ++i, ++it) {
    if (it == by_count.end())
      violated("fewer distinct |Con| values than classified at n=" + std::to_string(n));
    auto& exp = expected[i];
    std::sort(exp.witnesses.begin(), exp.witnesses.end());
    exp.witnesses.erase(std::unique(exp.witnesses.begin(), exp.witnesses.end()),
                        exp.witnesses.end());
    if (it->first != exp.count)
      violated("rank-" + std::to_string(i + 1) + " |Con| at n=" + std::to_string(n) +
               " is " + std::to_string(it->first) + ", expected " +
               std::to_string(exp.count));
    if (it->second != exp.witnesses)
      violated("rank-" + std::to_string(i + 1) + " witnesses at n=" + std::to_string(n) +
               " do not match the classification");
  }
}

}  // namespace ilat
