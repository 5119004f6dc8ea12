#include "mslat/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mslat/error.hpp"

namespace mslat {

int FinPoset::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  return -1;
}

std::vector<int> FinPoset::down_set(int a) const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b)
    if (leq(b, a)) out.push_back(b);
  return out;
}

std::vector<int> FinPoset::up_set(int a) const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b)
    if (leq(a, b)) out.push_back(b);
  return out;
}

namespace {

// Kahn's algorithm with the smallest-source tie break, so the output order is
// reproducible and is the identity whenever the input is already sorted.
std::vector<int> topo_order(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> out;
  std::vector<uint8_t> done(n, 0);
  out.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) fail("NotAPoset", "the order relation has a cycle");
    done[pick] = 1;
    out.push_back(pick);
    for (int w : adj[pick]) --indeg[w];
  }
  return out;
}

// Covers, bounds and the meet/join tables, given the (already canonically
// indexed) order matrix. Shared tail of both builders.
FinLattice finish_lattice(std::vector<std::string> elements,
                          std::vector<uint8_t> order) {
  const int n = static_cast<int>(elements.size());
  FinLattice L;
  L.poset.elements = std::move(elements);
  L.poset.order = std::move(order);
  auto leq = [&](int a, int b) {
    return L.poset.order[static_cast<size_t>(a) * n + b] != 0;
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool strict_between = false;
      for (int c = 0; c < n && !strict_between; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) strict_between = true;
      if (!strict_between) L.poset.covers.emplace_back(a, b);
    }

  // Index order extends the lattice order, so the greatest lower bound (when
  // it exists) is the bound of largest index; dually for joins.
  L.meets.assign(static_cast<size_t>(n) * n, -1);
  L.joins.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int lo = -1, hi = -1;
      for (int c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b)) lo = c;
        if (hi < 0 && leq(a, c) && leq(b, c)) hi = c;
      }
      if (lo >= 0)
        for (int c = 0; c < n; ++c)
          if (leq(c, a) && leq(c, b) && !leq(c, lo)) lo = -1;
      if (hi >= 0)
        for (int c = 0; c < n; ++c)
          if (leq(a, c) && leq(b, c) && !leq(hi, c)) hi = -1;
      if (lo < 0)
        fail("NotALattice", "elements '" + L.poset.elements[a] + "' and '" +
                                L.poset.elements[b] + "' have no meet");
      if (hi < 0)
        fail("NotALattice", "elements '" + L.poset.elements[a] + "' and '" +
                                L.poset.elements[b] + "' have no join");
      L.meets[static_cast<size_t>(a) * n + b] = lo;
      L.meets[static_cast<size_t>(b) * n + a] = lo;
      L.joins[static_cast<size_t>(a) * n + b] = hi;
      L.joins[static_cast<size_t>(b) * n + a] = hi;
    }

  L.bottom = 0;
  L.top = 0;
  for (int c = 1; c < n; ++c) {
    L.bottom = L.meet(L.bottom, c);
    L.top = L.join(L.top, c);
  }
  return L;
}

}  // namespace

FinLattice from_covers(const std::vector<std::string>& elements,
                       const std::vector<NamePair>& covers) {
  require(!elements.empty(), "NotALattice", "no elements");
  const int n = static_cast<int>(elements.size());
  std::map<std::string, int> pos;
  for (int i = 0; i < n; ++i) {
    require(!elements[i].empty(), "semantic", "empty element name");
    auto [it, fresh] = pos.emplace(elements[i], i);
    if (!fresh) fail("semantic", "duplicate element '" + elements[i] + "'");
  }

  std::set<std::pair<int, int>> edges;
  for (const auto& [lo, hi] : covers) {
    auto a = pos.find(lo), b = pos.find(hi);
    if (a == pos.end()) fail("semantic", "unknown element '" + lo + "' in cover");
    if (b == pos.end()) fail("semantic", "unknown element '" + hi + "' in cover");
    if (a->second == b->second)
      fail("NotAPoset", "cover from '" + lo + "' to itself");
    edges.emplace(a->second, b->second);
  }

  std::vector<std::pair<int, int>> edge_list(edges.begin(), edges.end());
  std::vector<int> topo = topo_order(n, edge_list);
  std::vector<int> new_index(n);  // input position -> canonical index
  for (int i = 0; i < n; ++i) new_index[topo[i]] = i;

  std::vector<std::string> named(n);
  for (int i = 0; i < n; ++i) named[new_index[i]] = elements[i];

  std::vector<uint8_t> order(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i) * n + i] = 1;
  for (auto [a, b] : edge_list)
    order[static_cast<size_t>(new_index[a]) * n + new_index[b]] = 1;
  // Reachability along a topological indexing: rows of successors are final
  // before they are merged upward.
  for (int a = n - 1; a >= 0; --a)
    for (int b = a + 1; b < n; ++b)
      if (order[static_cast<size_t>(a) * n + b])
        for (int c = b + 1; c < n; ++c)
          if (order[static_cast<size_t>(b) * n + c])
            order[static_cast<size_t>(a) * n + c] = 1;

  return finish_lattice(std::move(named), std::move(order));
}

FinLattice from_order(const std::vector<std::string>& elements,
                      const std::vector<uint8_t>& order,
                      std::vector<int>* index_map) {
  require(!elements.empty(), "NotALattice", "no elements");
  const int n = static_cast<int>(elements.size());
  require(order.size() == static_cast<size_t>(n) * n, "semantic",
          "order matrix size does not match the element count");
  auto rel = [&](int a, int b) { return order[static_cast<size_t>(a) * n + b] != 0; };
  for (int a = 0; a < n; ++a) {
    if (!rel(a, a)) fail("NotAPoset", "order not reflexive at '" + elements[a] + "'");
    for (int b = 0; b < n; ++b) {
      if (a != b && rel(a, b) && rel(b, a))
        fail("NotAPoset", "order not antisymmetric on '" + elements[a] + "', '" +
                              elements[b] + "'");
      for (int c = 0; rel(a, b) && c < n; ++c)
        if (rel(b, c) && !rel(a, c))
          fail("NotAPoset", "order not transitive through '" + elements[b] + "'");
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && rel(a, b)) edges.emplace_back(a, b);
  std::vector<int> topo = topo_order(n, edges);
  std::vector<int> new_index(n);
  for (int i = 0; i < n; ++i) new_index[topo[i]] = i;
  if (index_map) *index_map = new_index;

  std::vector<std::string> named(n);
  std::vector<uint8_t> arranged(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    named[new_index[a]] = elements[a];
    for (int b = 0; b < n; ++b)
      if (rel(a, b))
        arranged[static_cast<size_t>(new_index[a]) * n + new_index[b]] = 1;
  }
  return finish_lattice(std::move(named), std::move(arranged));
}

std::optional<std::array<int, 3>> distributivity_witness(const FinLattice& L) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

bool is_distributive(const FinLattice& L) {
  return !distributivity_witness(L).has_value();
}

std::vector<int> principal_filter(const FinLattice& L, int a) {
  return L.poset.up_set(a);
}

namespace {

// (lower covers, upper covers, down-set size, up-set size): preserved by any
// order isomorphism, so mismatched signatures prune the search.
std::array<int, 4> signature(const FinLattice& L, int a) {
  std::array<int, 4> s{0, 0, 0, 0};
  for (auto [lo, hi] : L.poset.covers) {
    if (hi == a) ++s[0];
    if (lo == a) ++s[1];
  }
  for (int b = 0; b < L.size(); ++b) {
    if (L.leq(b, a)) ++s[2];
    if (L.leq(a, b)) ++s[3];
  }
  return s;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FinLattice& A,
                                                 const FinLattice& B,
                                                 const std::vector<int>* unary_a,
                                                 const std::vector<int>* unary_b) {
  if (A.size() != B.size()) return std::nullopt;
  const int n = A.size();
  const bool with_unary = unary_a != nullptr && unary_b != nullptr;

  std::vector<std::array<int, 4>> sig_a(n), sig_b(n);
  for (int i = 0; i < n; ++i) {
    sig_a[i] = signature(A, i);
    sig_b[i] = signature(B, i);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<int> f(n, -1);
  std::vector<uint8_t> used(n, 0);
  auto consistent = [&](int a, int b) {
    for (int x = 0; x < a; ++x) {
      if (A.leq(x, a) != B.leq(f[x], b)) return false;
      if (A.leq(a, x) != B.leq(b, f[x])) return false;
    }
    if (with_unary)
      for (int x = 0; x <= a; ++x) {
        int sx = (*unary_a)[x];
        if (sx > a) continue;  // image not assigned yet
        int fb = x == a ? b : f[x];
        int fsx = sx == a ? b : f[sx];
        if ((*unary_b)[fb] != fsx) return false;
      }
    return true;
  };

  auto search = [&](auto&& self, int a) -> bool {
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (used[b] || sig_a[a] != sig_b[b] || !consistent(a, b)) continue;
      f[a] = b;
      used[b] = 1;
      if (self(self, a + 1)) return true;
      f[a] = -1;
      used[b] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return f;
}

}  // namespace mslat
