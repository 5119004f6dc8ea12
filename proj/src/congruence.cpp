#include "mslat/congruence.hpp"

#include <algorithm>
#include <deque>

#include "mslat/error.hpp"

namespace mslat {

std::vector<std::vector<int>> Congruence::block_list() const {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(leader.size(), -1);
  for (int x = 0; x < size(); ++x) {
    if (slot[leader[x]] < 0) {
      slot[leader[x]] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[leader[x]]].push_back(x);
  }
  return out;
}

Congruence Congruence::identity(int n) {
  Congruence c;
  c.leader.resize(n);
  for (int i = 0; i < n; ++i) c.leader[i] = i;
  c.blocks = n;
  return c;
}

Congruence Congruence::total(int n) {
  Congruence c;
  c.leader.assign(n, 0);
  c.blocks = n > 0 ? 1 : 0;
  return c;
}

Congruence Congruence::from_class_map(const std::vector<int>& raw) {
  const int n = static_cast<int>(raw.size());
  Congruence c;
  c.leader.resize(n);
  std::map<int, int> first_seen;
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = first_seen.emplace(raw[x], x);
    c.leader[x] = it->second;
    if (fresh) ++c.blocks;
  }
  return c;
}

Congruence Congruence::from_blocks(int n,
                                   const std::vector<std::vector<int>>& blocks) {
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = i;
  std::vector<uint8_t> seen(n, 0);
  for (const auto& block : blocks) {
    require(!block.empty(), "semantic", "empty block");
    int lead = *std::min_element(block.begin(), block.end());
    for (int x : block) {
      require(x >= 0 && x < n, "semantic", "block element out of range");
      require(!seen[x], "semantic", "element in two blocks");
      seen[x] = 1;
      raw[x] = lead;
    }
  }
  return from_class_map(raw);
}

bool refines(const Congruence& a, const Congruence& b) {
  for (int x = 0; x < a.size(); ++x)
    if (!b.same(x, a.leader[x])) return false;
  return true;
}

bool is_congruence(AlgView A, const Congruence& c) {
  const FinLattice& L = *A.lat;
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!c.same(x, y)) continue;
      if (A.has_neg() && !c.same((*A.neg)[x], (*A.neg)[y])) return false;
      for (int z = 0; z < n; ++z) {
        if (!c.same(L.meet(x, z), L.meet(y, z))) return false;
        if (!c.same(L.join(x, z), L.join(y, z))) return false;
      }
    }
  return true;
}

Congruence con_meet(const Congruence& a, const Congruence& b) {
  const int n = a.size();
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) raw[x] = a.leader[x] * n + b.leader[x];
  return Congruence::from_class_map(raw);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false when already joined; keeps the smaller root as leader.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  }
  Congruence to_congruence() {
    std::vector<int> raw(parent.size());
    for (int x = 0; x < static_cast<int>(parent.size()); ++x) raw[x] = find(x);
    return Congruence::from_class_map(raw);
  }
};

}  // namespace

namespace {

Congruence join_unchecked(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  for (int x = 0; x < a.size(); ++x) {
    uf.unite(x, a.leader[x]);
    uf.unite(x, b.leader[x]);
  }
  return uf.to_congruence();
}

}  // namespace

Congruence con_join(AlgView A, const Congruence& a, const Congruence& b) {
  Congruence joined = join_unchecked(a, b);
  // Translation compatibility survives equivalence-closure of a union of
  // congruences; re-verified here for standalone callers.
  check_theorem(is_congruence(A, joined),
                "join of two congruences lost compatibility");
  return joined;
}

Congruence congruence_generated(AlgView A,
                                const std::vector<std::pair<int, int>>& pairs) {
  const FinLattice& L = *A.lat;
  UnionFind uf(L.size());
  std::deque<std::pair<int, int>> dirty;
  auto unite = [&](int x, int y) {
    int rx = uf.find(x), ry = uf.find(y);
    if (uf.unite(rx, ry)) dirty.emplace_back(rx, ry);
  };
  for (auto [a, b] : pairs) {
    require(a >= 0 && a < L.size() && b >= 0 && b < L.size(), "semantic",
            "generator pair out of range");
    unite(a, b);
  }
  // Close the merged pairs under the one-variable translations z∧c, z∨c
  // and ° — chains of these reach every identification the congruence needs.
  while (!dirty.empty()) {
    auto [a, b] = dirty.front();
    dirty.pop_front();
    if (A.has_neg()) unite((*A.neg)[a], (*A.neg)[b]);
    for (int c = 0; c < L.size(); ++c) {
      unite(L.meet(a, c), L.meet(b, c));
      unite(L.join(a, c), L.join(b, c));
    }
  }
  return uf.to_congruence();
}

Congruence principal_congruence(AlgView A, int a, int b) {
  return congruence_generated(A, {{a, b}});
}

int ConLattice::index_of(const Congruence& c) const {
  auto it = lookup_.find(c.leader);
  return it == lookup_.end() ? -1 : it->second;
}

ConLattice all_congruences(AlgView A) {
  const int n = A.size();
  std::vector<Congruence> found{Congruence::identity(n)};
  std::map<std::vector<int>, int> seen{{found[0].leader, 0}};
  auto add = [&](Congruence c) {
    auto [it, fresh] = seen.emplace(c.leader, static_cast<int>(found.size()));
    if (fresh) found.push_back(std::move(c));
    return fresh;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) add(principal_congruence(A, a, b));

  // Every congruence is the join of the principal ones below it, so closing
  // the principal layer under pairwise joins reaches all of Con.
  for (size_t fresh_from = 1; fresh_from < found.size();) {
    size_t end = found.size();
    for (size_t i = fresh_from; i < end; ++i)
      for (size_t j = 0; j < i; ++j) add(join_unchecked(found[i], found[j]));
    fresh_from = end;
  }
  // Joins were taken as equivalence closures; certify every member once.
  for (const Congruence& c : found)
    check_theorem(is_congruence(A, c),
                  "join closure produced a non-congruence");

  // Canonical order: identity first, coarser later, the total relation last.
  std::sort(found.begin(), found.end(),
            [](const Congruence& x, const Congruence& y) {
              if (x.blocks != y.blocks) return x.blocks > y.blocks;
              return x.leader < y.leader;
            });

  ConLattice cl;
  cl.cons = std::move(found);
  const int m = cl.size();
  for (int i = 0; i < m; ++i) cl.lookup_[cl.cons[i].leader] = i;
  cl.order.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      cl.order[static_cast<size_t>(i) * m + j] = refines(cl.cons[i], cl.cons[j]);
  cl.meets.resize(static_cast<size_t>(m) * m);
  cl.joins.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      int lo = cl.index_of(con_meet(cl.cons[i], cl.cons[j]));
      int hi = cl.index_of(join_unchecked(cl.cons[i], cl.cons[j]));
      check_theorem(lo >= 0 && hi >= 0,
                    "meet or join of congruences missing from Con");
      cl.meets[static_cast<size_t>(i) * m + j] = lo;
      cl.meets[static_cast<size_t>(j) * m + i] = lo;
      cl.joins[static_cast<size_t>(i) * m + j] = hi;
      cl.joins[static_cast<size_t>(j) * m + i] = hi;
    }
  return cl;
}

std::vector<Congruence> brute_force_congruences(AlgView A, int cap) {
  const int n = A.size();
  if (n > cap)
    fail("TooLarge", "carrier of " + std::to_string(n) +
                         " elements exceeds the brute-force cap of " +
                         std::to_string(cap));
  std::vector<Congruence> out;
  // Restricted growth strings enumerate each partition exactly once.
  std::vector<int> rgs(n, 0);
  auto visit = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      Congruence c = Congruence::from_class_map(rgs);
      if (is_congruence(A, c)) out.push_back(std::move(c));
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_used, v));
    }
  };
  visit(visit, 0, -1);
  std::sort(out.begin(), out.end(), [](const Congruence& x, const Congruence& y) {
    if (x.blocks != y.blocks) return x.blocks > y.blocks;
    return x.leader < y.leader;
  });
  return out;
}

Congruence restrict_to(const Congruence& theta, const SubAlgebra& S) {
  std::vector<int> raw(S.size());
  for (int i = 0; i < S.size(); ++i) {
    require(S.carrier[i] < theta.size(), "semantic",
            "congruence does not cover the parent carrier");
    raw[i] = theta.leader[S.carrier[i]];
  }
  return Congruence::from_class_map(raw);
}

void check_homomorphism(AlgView A, AlgView B, const std::vector<int>& hom) {
  const FinLattice& La = *A.lat;
  const FinLattice& Lb = *B.lat;
  require(hom.size() == static_cast<size_t>(La.size()), "NotAHomomorphism",
          "map size does not match the domain");
  for (int x = 0; x < La.size(); ++x)
    require(hom[x] >= 0 && hom[x] < Lb.size(), "NotAHomomorphism",
            "value out of range at '" + La.name(x) + "'");
  if (hom[La.bottom] != Lb.bottom)
    fail("NotAHomomorphism", "0 is not sent to 0");
  if (hom[La.top] != Lb.top) fail("NotAHomomorphism", "1 is not sent to 1");
  for (int x = 0; x < La.size(); ++x)
    for (int y = x + 1; y < La.size(); ++y) {
      if (hom[La.meet(x, y)] != Lb.meet(hom[x], hom[y]))
        fail("NotAHomomorphism", "meet of '" + La.name(x) + "' and '" +
                                     La.name(y) + "' is not preserved");
      if (hom[La.join(x, y)] != Lb.join(hom[x], hom[y]))
        fail("NotAHomomorphism", "join of '" + La.name(x) + "' and '" +
                                     La.name(y) + "' is not preserved");
    }
  if (A.has_neg() && B.has_neg())
    for (int x = 0; x < La.size(); ++x)
      if (hom[(*A.neg)[x]] != (*B.neg)[hom[x]])
        fail("NotAHomomorphism", "° is not preserved at '" + La.name(x) + "'");
}

Congruence generated_by_image(AlgView A, AlgView B, const std::vector<int>& hom,
                              const Congruence& theta) {
  check_homomorphism(A, B, hom);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < A.size(); ++x)
    if (theta.leader[x] != x) pairs.emplace_back(hom[x], hom[theta.leader[x]]);
  return congruence_generated(B, pairs);
}

}  // namespace mslat
