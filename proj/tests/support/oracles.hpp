#pragma once

// Independent reference computations used as test oracles. Nothing here calls
// into the encoder or solver; only plain tables and permutations.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "grpmat/groups.hpp"

namespace grpmat::testing {

inline Table cyclic_table(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n + 1;
  return t;
}

inline std::optional<std::vector<int>> associativity_witness(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (t[t[a - 1][b - 1] - 1][c - 1] != t[a - 1][t[b - 1][c - 1] - 1]) return std::vector<int>{a, b, c};
  return std::nullopt;
}

inline bool is_latin(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i) {
    std::set<int> row(t[i].begin(), t[i].end()), col;
    for (int j = 0; j < n; ++j) col.insert(t[j][i]);
    if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) return false;
  }
  return true;
}

// Orbit of 1 under s2 is skipped; every other cycle contributes its minimum.
inline std::vector<int> leaders_of(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<bool> seen(n + 1, false);
  for (int x = 1; !seen[x]; x = t[1][x - 1]) seen[x] = true;
  std::vector<int> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    out.push_back(start);
    for (int x = start; !seen[x]; x = t[1][x - 1]) seen[x] = true;
  }
  return out;
}

// Pairs {j, t} with t read off the table: left multiplication by g_{j+1}
// applied to 1 and to every leader, or {n, 1} and {n, leader} for j = n.
inline std::vector<std::pair<int, int>> pair_terms_from_table(const Table& t, int j) {
  const int n = static_cast<int>(t.size());
  std::vector<std::pair<int, int>> out;
  if (n == 1) return out;
  std::vector<int> sources{1};
  for (int l : leaders_of(t)) sources.push_back(l);
  for (int s : sources) {
    const int partner = j < n ? t[j][s - 1] : s;
    out.emplace_back(std::min(j, partner), std::max(j, partner));
  }
  return out;
}

// Strict-layout entries as a dense 0/1 grid; nullopt when a diagonal occurs.
inline std::optional<std::vector<std::vector<int>>> strict_b_from_table(const Table& t) {
  const int n = static_cast<int>(t.size());
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> grid(n + pairs + 2, std::vector<int>(n, 0));
  auto pair_row = [&](int a, int b) {
    int r = n;
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k, ++r)
        if (i == a && k == b) return r;
    return -1;
  };
  for (int j = 1; j <= n; ++j) {
    grid[j - 1][j - 1] = 1;
    for (auto [a, b] : pair_terms_from_table(t, j)) {
      if (a == b) return std::nullopt;
      grid[pair_row(a, b)][j - 1] = 1;
    }
    grid[n + pairs][j - 1] = 1;
    grid[n + pairs + 1][j - 1] = 1;
  }
  return grid;
}

// Isomorphism by trying every identity-fixing bijection.
inline bool isomorphic_by_enumeration(const Table& g, const Table& h) {
  if (g.size() != h.size()) return false;
  const int n = static_cast<int>(g.size());
  std::vector<int> phi(n);
  std::iota(phi.begin(), phi.end(), 1);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = phi[g[a][b] - 1] == h[phi[a] - 1][phi[b] - 1];
    if (ok) return true;
  } while (std::next_permutation(phi.begin() + 1, phi.end()));
  return false;
}

inline Permutation random_permutation(int n, std::mt19937& rng, bool fix_one = false) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin() + (fix_one ? 1 : 0), v.end(), rng);
  return Permutation(v);
}

inline const std::vector<std::string>& small_names() {
  static const std::vector<std::string> names{"Z1", "Z2", "Z3", "Z4", "V4"};
  return names;
}

inline std::vector<std::string> classified_catalog() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n)
    for (auto& s : classified_names(n)) out.push_back(s);
  return out;
}

}  // namespace grpmat::testing
