#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {

// Diamond: bottom o, three pairwise-incomparable x,y,z with all pairwise
// meets o and joins i. Pentagon: o < x < y < i, z incomparable to both with
// x∧z = y∧z = o and x∨z = y∨z = i.
bool is_diamond(const FinLattice& L, int o, int x, int y, int z, int i) {
  auto mid = [&](int p, int q) {
    return L.meet(p, q) == o && L.join(p, q) == i;
  };
  return o != i && mid(x, y) && mid(x, z) && mid(y, z) && x != y && x != z &&
         y != z && !L.leq(x, y) && !L.leq(y, x);
}

bool is_pentagon(const FinLattice& L, int o, int x, int y, int z, int i) {
  return o != i && x != y && L.leq(x, y) && !L.leq(y, x) && L.meet(x, z) == o &&
         L.meet(y, z) == o && L.join(x, z) == i && L.join(y, z) == i &&
         x != o && y != i && z != o && z != i;
}

}  // namespace

bool distributive_by_forbidden_sublattice(const FinLattice& L) {
  const int n = L.size();
  for (int o = 0; o < n; ++o)
    for (int i = 0; i < n; ++i) {
      if (!L.leq(o, i) || o == i) continue;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            if (is_diamond(L, o, x, y, z, i)) return false;
            if (is_pentagon(L, o, x, y, z, i)) return false;
          }
    }
  return true;
}

std::vector<std::vector<int>> all_negations(const FinLattice& L) {
  const int n = L.size();
  if (n > 6) throw std::runtime_error("all_negations oracle capped at 6");
  std::vector<std::vector<int>> out;
  std::vector<int> table(n, 0);
  while (true) {
    bool ok = L.size() == 0 || table[L.top] == L.bottom;
    for (int x = 0; ok && x < n; ++x) {
      if (!L.leq(x, table[table[x]])) ok = false;
      for (int y = x; ok && y < n; ++y)
        if (table[L.meet(x, y)] != L.join(table[x], table[y])) ok = false;
    }
    if (ok) out.push_back(table);
    int pos = n - 1;
    while (pos >= 0 && table[pos] == n - 1) table[pos--] = 0;
    if (pos < 0) break;
    ++table[pos];
  }
  return out;
}

bool principal_by_definition(const FinLattice& L, const std::vector<int>& neg) {
  std::vector<int> dense;
  for (int x = 0; x < L.size(); ++x)
    if (neg[x] == L.bottom) dense.push_back(x);
  if (dense.empty()) return false;
  int d = dense.front();
  for (int x : dense)
    if (L.leq(x, d)) d = x;
  for (int x : dense)
    if (!L.leq(d, x)) return false;  // several minimal dense elements
  for (int x = 0; x < L.size(); ++x)
    if (L.meet(neg[neg[x]], L.join(x, d)) != x) return false;
  return true;
}

}  // namespace oracle
