#pragma once

// Test-only reference computations. Everything here works directly on coordinate tuples,
// permutations and tables, without going through the library's search code.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;

// Number of partitions of n.
inline std::size_t partition_count(int n) {
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

// Number of abelian groups of order n: product of partition counts of the prime exponents.
inline std::size_t abelian_group_count(std::size_t n) {
  std::size_t count = 1;
  for (std::size_t p = 2; p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) count *= partition_count(e);
  }
  return count;
}

inline std::vector<Tuple> all_tuples(const std::vector<int>& moduli) {
  std::vector<Tuple> out{Tuple{}};
  for (int m : moduli) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (int v = 0; v < m; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

inline Tuple add(const std::vector<int>& moduli, const Tuple& a, const Tuple& b) {
  Tuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % moduli[i];
  return r;
}

inline Tuple scale(const std::vector<int>& moduli, long k, const Tuple& a) {
  Tuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<int>(((k % moduli[i] + moduli[i]) * a[i]) % moduli[i]);
  return r;
}

// Sorted multiset of element orders: distinguishes non-isomorphic abelian groups.
inline std::vector<int> order_profile(const std::vector<int>& moduli) {
  std::vector<int> out;
  for (const auto& x : all_tuples(moduli)) {
    int k = 1;
    Tuple acc = x;
    while (std::any_of(acc.begin(), acc.end(), [](int v) { return v != 0; })) {
      acc = add(moduli, acc, x);
      ++k;
    }
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Naive closure: add every pair until nothing new appears.
inline std::set<Tuple> closure(const std::vector<int>& moduli, const std::vector<Tuple>& gens) {
  std::set<Tuple> s{Tuple(moduli.size(), 0)};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Tuple> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur) grew |= s.insert(add(moduli, a, b)).second;
  }
  return s;
}

// Linear map x ↦ Σ x_i·images[i], tabulated over all tuples in lexicographic order.
inline std::vector<Tuple> linear_map_table(const std::vector<int>& moduli, const std::vector<Tuple>& images) {
  std::vector<Tuple> out;
  for (const auto& x : all_tuples(moduli)) {
    Tuple y(moduli.size(), 0);
    for (std::size_t i = 0; i < images.size(); ++i) y = add(moduli, y, scale(moduli, x[i], images[i]));
    out.push_back(y);
  }
  return out;
}

// Brute-force count of automorphisms: every image tuple, checked for well-definedness
// (d_i·image_i = 0) and bijectivity on all elements.
inline std::size_t automorphism_count(const std::vector<int>& moduli) {
  const auto elems = all_tuples(moduli);
  std::size_t count = 0;
  std::vector<std::size_t> pick(moduli.size(), 0);
  const std::size_t n = elems.size();
  while (true) {
    std::vector<Tuple> images;
    for (auto p : pick) images.push_back(elems[p]);
    bool ok = true;
    for (std::size_t i = 0; i < moduli.size() && ok; ++i) {
      const auto killed = scale(moduli, moduli[i], images[i]);
      ok = std::all_of(killed.begin(), killed.end(), [](int v) { return v == 0; });
    }
    if (ok) {
      const auto table = linear_map_table(moduli, images);
      ok = std::set<Tuple>(table.begin(), table.end()).size() == n;
    }
    if (ok) ++count;
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < n) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return count;
}

// Isomorphism of small Cayley tables by trying every permutation.
inline bool permutation_isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = f[a[x][y]] == b[f[x]][f[y]];
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

}  // namespace oracle
