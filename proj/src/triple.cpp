#include "mslat/triple.hpp"

#include <algorithm>
#include <map>

#include "mslat/error.hpp"

namespace mslat {

Triple validate_triple(MSAlgebra M, FinLattice D, std::vector<int> phi) {
  require(M.variety.de_morgan, "NotDeMorgan",
          "the first component must satisfy x°° = x");
  if (auto w = distributivity_witness(D))
    fail("NotDistributive", "x∧(y∨z) ≠ (x∧y)∨(x∧z) at x='" + D.name((*w)[0]) +
                                "', y='" + D.name((*w)[1]) + "', z='" +
                                D.name((*w)[2]) + "'");
  require(phi.size() == static_cast<size_t>(M.size()), "NotAHom01",
          "map size does not match the domain");
  for (int x = 0; x < M.size(); ++x)
    require(phi[x] >= 0 && phi[x] < D.size(), "NotAHom01",
            "value out of range at '" + M.name(x) + "'");
  if (phi[M.lattice.bottom] != D.bottom) fail("NotAHom01", "0 is not sent to 0");
  if (phi[M.lattice.top] != D.top) fail("NotAHom01", "1 is not sent to 1");
  for (int x = 0; x < M.size(); ++x)
    for (int y = x + 1; y < M.size(); ++y) {
      if (phi[M.lattice.meet(x, y)] != D.meet(phi[x], phi[y]))
        fail("NotAHom01", "meet of '" + M.name(x) + "' and '" + M.name(y) +
                              "' is not preserved");
      if (phi[M.lattice.join(x, y)] != D.join(phi[x], phi[y]))
        fail("NotAHom01", "join of '" + M.name(x) + "' and '" + M.name(y) +
                              "' is not preserved");
    }

  Triple t;
  t.M = std::move(M);
  t.D = std::move(D);
  t.phi = std::move(phi);
  t.k2_triple = t.M.variety.kleene;
  for (int x = 0; t.k2_triple && x < t.M.size(); ++x)
    if (t.phi[t.M.lattice.meet(x, t.M.star(x))] != t.D.bottom)
      t.k2_triple = false;
  t.s_triple = t.k2_triple && t.M.variety.boolean;
  return t;
}

int ConstructedAlgebra::label_of(int mi, int dj) const {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i].first == mi && labels[i].second == dj) return i;
  return -1;
}

ConstructedAlgebra construct(const Triple& t) {
  const MSAlgebra& M = t.M;
  const FinLattice& D = t.D;

  std::vector<std::pair<int, int>> raw_labels;
  std::map<std::pair<int, int>, int> position;
  std::vector<std::string> names;
  for (int x = 0; x < M.size(); ++x)
    for (int y = 0; y < D.size(); ++y)
      if (D.leq(y, t.phi[x])) {
        position[{x, y}] = static_cast<int>(raw_labels.size());
        raw_labels.emplace_back(x, y);
        names.push_back("(" + M.name(x) + "," + D.name(y) + ")");
      }

  const int n = static_cast<int>(raw_labels.size());
  std::vector<uint8_t> order(static_cast<size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (M.lattice.leq(raw_labels[p].first, raw_labels[q].first) &&
          D.leq(raw_labels[p].second, raw_labels[q].second))
        order[static_cast<size_t>(p) * n + q] = 1;

  std::vector<int> remap;  // input position -> final index
  FinLattice lat = from_order(names, order, &remap);

  ConstructedAlgebra ca;
  ca.labels.resize(n);
  for (int p = 0; p < n; ++p) ca.labels[remap[p]] = raw_labels[p];

  std::vector<int> neg(n);
  for (int p = 0; p < n; ++p) {
    int xs = M.star(raw_labels[p].first);
    neg[remap[p]] = remap[position.at({xs, t.phi[xs]})];
  }
  ca.algebra = make_ms(std::move(lat), std::move(neg));

  ca.tau1.resize(M.size());
  for (int x = 0; x < M.size(); ++x)
    ca.tau1[x] = remap[position.at({x, t.phi[x]})];
  ca.tau2.resize(D.size());
  for (int y = 0; y < D.size(); ++y)
    ca.tau2[y] = remap[position.at({M.lattice.top, y})];
  ca.dl = remap[position.at({M.lattice.top, D.bottom})];

  // The construction's own structure claims, verified on every run.
  Substructures s = substructures(ca.algebra);
  std::vector<int> t1_image = ca.tau1, t2_image = ca.tau2;
  std::sort(t1_image.begin(), t1_image.end());
  std::sort(t2_image.begin(), t2_image.end());
  check_theorem(t1_image == s.closed,
                "the first embedding does not cover the closed elements");
  check_theorem(t2_image == s.dense,
                "the second embedding does not cover the dense filter");
  check_theorem(s.smallest_dense == ca.dl,
                "the least dense element is not (1,0)");
  check_theorem(is_principal_ms(ca.algebra).principal,
                "the constructed algebra is not principal");
  try {
    check_homomorphism(M, ca.algebra, ca.tau1);
  } catch (const Error& e) {
    check_theorem(false, e.what());
  }
  for (int y = 0; y < D.size(); ++y)
    for (int z = y + 1; z < D.size(); ++z) {
      check_theorem(ca.tau2[D.meet(y, z)] ==
                        ca.algebra.lattice.meet(ca.tau2[y], ca.tau2[z]),
                    "the second embedding breaks a meet");
      check_theorem(ca.tau2[D.join(y, z)] ==
                        ca.algebra.lattice.join(ca.tau2[y], ca.tau2[z]),
                    "the second embedding breaks a join");
    }
  if (t.k2_triple)
    check_theorem(ca.algebra.variety.k2,
                  "a k2 triple must construct a k2 algebra");
  return ca;
}

namespace {

// Shared context for the pair <-> congruence translation.
struct PairContext {
  SubAlgebra closed;
  SubAlgebra dense;
  int d;

  explicit PairContext(const MSAlgebra& L)
      : closed(closed_subalgebra(L)), dense(dense_sublattice(L)) {
    PrincipalityReport rep = is_principal_ms(L);
    if (!rep.principal)
      fail("NotPrincipal",
           "the algebra is not principal (" + rep.failed + " fails at '" +
               (rep.witness >= 0 ? L.name(rep.witness) : std::string("?")) +
               "')");
    d = rep.least_dense;
  }
};

bool pair_compatible(const MSAlgebra& L, const PairContext& cx,
                     const Congruence& t1, const Congruence& t2) {
  for (int i = 0; i < cx.closed.size(); ++i)
    for (int j = i + 1; j < cx.closed.size(); ++j) {
      if (!t1.same(i, j)) continue;
      int a = L.lattice.join(cx.closed.carrier[i], cx.d);
      int b = L.lattice.join(cx.closed.carrier[j], cx.d);
      if (!t2.same(cx.dense.local_of[a], cx.dense.local_of[b])) return false;
    }
  return true;
}

Congruence pair_to_congruence_in(const MSAlgebra& L, const PairContext& cx,
                                 const Congruence& t1, const Congruence& t2) {
  require(t1.size() == cx.closed.size(), "semantic",
          "first congruence does not live on the closed subalgebra");
  require(t2.size() == cx.dense.size(), "semantic",
          "second congruence does not live on the dense filter");
  require(pair_compatible(L, cx, t1, t2), "IncompatiblePair",
          "joining with the least dense element does not carry the first "
          "congruence into the second");

  std::vector<int> raw(L.size());
  for (int x = 0; x < L.size(); ++x) {
    int c1 = t1.leader[cx.closed.local_of[L.star(x)]];
    int c2 = t2.leader[cx.dense.local_of[L.lattice.join(x, cx.d)]];
    raw[x] = c1 * (cx.dense.size() + 1) + c2;
  }
  Congruence theta = Congruence::from_class_map(raw);
  check_theorem(is_congruence(L, theta),
                "a compatible pair produced a non-congruence");
  check_theorem(restrict_to(theta, cx.closed) == t1 &&
                    restrict_to(theta, cx.dense) == t2,
                "the rebuilt congruence does not restrict to the given pair");
  return theta;
}

}  // namespace

Congruence pair_to_congruence(const MSAlgebra& L, const Congruence& t1_closed,
                              const Congruence& t2_dense) {
  PairContext cx(L);
  return pair_to_congruence_in(L, cx, t1_closed, t2_dense);
}

MSPair congruence_to_pair(const MSAlgebra& L, const Congruence& theta) {
  require(theta.size() == L.size(), "semantic",
          "congruence does not live on the algebra");
  require(is_congruence(L, theta), "semantic", "not a congruence");
  PairContext cx(L);
  MSPair p{restrict_to(theta, cx.closed), restrict_to(theta, cx.dense)};
  check_theorem(pair_compatible(L, cx, p.on_closed, p.on_dense),
                "a restriction pair violated the compatibility condition");
  return p;
}

int PairLattice::pair_index(int ci, int dj) const {
  for (int k = 0; k < static_cast<int>(pairs.size()); ++k)
    if (pairs[k] == std::make_pair(ci, dj)) return k;
  return -1;
}

PairLattice pairs_of(const MSAlgebra& L) {
  PairContext cx(L);
  PairLattice pl;
  pl.closed = cx.closed;
  pl.dense = cx.dense;
  pl.con_closed = all_congruences(pl.closed.view());
  pl.con_dense = all_congruences(pl.dense.view());
  pl.con_all = all_congruences(L);

  for (int ci = 0; ci < pl.con_closed.size(); ++ci)
    for (int dj = 0; dj < pl.con_dense.size(); ++dj)
      if (pair_compatible(L, cx, pl.con_closed.cons[ci], pl.con_dense.cons[dj]))
        pl.pairs.emplace_back(ci, dj);

  // The translation maps must pair off Con(L) with the compatible pairs.
  check_theorem(pl.pairs.size() == static_cast<size_t>(pl.con_all.size()),
                "pair count differs from the congruence count");
  pl.to_con.assign(pl.pairs.size(), -1);
  pl.from_con.assign(pl.con_all.size(), -1);
  for (int k = 0; k < static_cast<int>(pl.pairs.size()); ++k) {
    auto [ci, dj] = pl.pairs[k];
    Congruence theta = pair_to_congruence_in(L, cx, pl.con_closed.cons[ci],
                                             pl.con_dense.cons[dj]);
    int idx = pl.con_all.index_of(theta);
    check_theorem(idx >= 0, "a rebuilt congruence escaped Con");
    pl.to_con[k] = idx;
  }
  for (int i = 0; i < pl.con_all.size(); ++i) {
    MSPair p{restrict_to(pl.con_all.cons[i], cx.closed),
             restrict_to(pl.con_all.cons[i], cx.dense)};
    int k = pl.pair_index(pl.con_closed.index_of(p.on_closed),
                          pl.con_dense.index_of(p.on_dense));
    check_theorem(k >= 0, "a restriction pair escaped the compatible pairs");
    pl.from_con[i] = k;
    check_theorem(pl.to_con[k] == i, "pair round trip is not the identity");
  }

  // Order isomorphism and sublattice closure.
  for (int i = 0; i < pl.con_all.size(); ++i)
    for (int j = 0; j < pl.con_all.size(); ++j) {
      auto [c1, d1] = pl.pairs[pl.from_con[i]];
      auto [c2, d2] = pl.pairs[pl.from_con[j]];
      bool pointwise =
          pl.con_closed.leq(c1, c2) && pl.con_dense.leq(d1, d2);
      check_theorem(pl.con_all.leq(i, j) == pointwise,
                    "restriction does not preserve the order both ways");
    }
  for (auto [c1, d1] : pl.pairs)
    for (auto [c2, d2] : pl.pairs) {
      check_theorem(pl.pair_index(pl.con_closed.meet(c1, c2),
                                  pl.con_dense.meet(d1, d2)) >= 0,
                    "compatible pairs are not meet-closed");
      check_theorem(pl.pair_index(pl.con_closed.join(c1, c2),
                                  pl.con_dense.join(d1, d2)) >= 0,
                    "compatible pairs are not join-closed");
    }
  return pl;
}

BeazerResult beazer_pair_check(const MSAlgebra& L, const Congruence& t1_closed,
                               const Congruence& t2_vee) {
  require(L.variety.k2, "NotK2", "the algebra is not a K2-algebra");
  Substructures s = substructures(L);
  SubAlgebra closed = closed_subalgebra(L);
  const std::vector<int>& vee = s.vee;
  require(t1_closed.size() == static_cast<int>(closed.size()), "semantic",
          "first congruence does not live on the closed subalgebra");
  require(t2_vee.size() == static_cast<int>(vee.size()), "semantic",
          "second congruence does not live on the join part");
  std::vector<int> vee_local(L.size(), -1);
  for (int i = 0; i < static_cast<int>(vee.size()); ++i) vee_local[vee[i]] = i;

  BeazerResult r;
  for (int i = 0; i < static_cast<int>(vee.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(vee.size()); ++j) {
      if (!t2_vee.same(i, j)) continue;
      int a = vee[i], b = vee[j];
      if (!t1_closed.same(closed.local_of[L.star(a)],
                          closed.local_of[L.star(b)])) {
        r.ok = false;
        r.failed_clause = 1;
        r.witness_a = a;
        r.witness_b = b;
        return r;
      }
    }
  for (int i = 0; i < closed.size(); ++i)
    for (int j = i + 1; j < closed.size(); ++j) {
      if (!t1_closed.same(i, j)) continue;
      int a = closed.carrier[i], b = closed.carrier[j];
      for (int c : vee) {
        int ac = vee_local[L.lattice.join(a, c)];
        int bc = vee_local[L.lattice.join(b, c)];
        check_theorem(ac >= 0 && bc >= 0,
                      "the join part is not up-closed under joining");
        if (!t2_vee.same(ac, bc)) {
          r.ok = false;
          r.failed_clause = 2;
          r.witness_a = a;
          r.witness_b = b;
          r.witness_c = c;
          return r;
        }
      }
    }
  return r;
}

KleenePartsReport kleene_parts_check(const Triple& t,
                                     const ConstructedAlgebra& ca) {
  require(t.k2_triple, "NotK2Triple",
          "the first component is not Kleene or the map does not kill x∧x°");
  Substructures ls = substructures(ca.algebra);
  Substructures ms = substructures(t.M);

  KleenePartsReport r;
  r.vee = ls.vee;
  r.wedge = ls.wedge;
  std::vector<int> vee_described, wedge_described;
  for (int e = 0; e < ca.algebra.size(); ++e) {
    int first = ca.labels[e].first;
    if (std::binary_search(ms.vee.begin(), ms.vee.end(), first))
      vee_described.push_back(e);
    if (std::binary_search(ms.wedge.begin(), ms.wedge.end(), first))
      wedge_described.push_back(e);
  }
  r.vee_matches = r.vee == vee_described;
  r.wedge_matches = r.wedge == wedge_described;
  check_theorem(r.vee_matches,
                "x∨x° elements are not exactly those over first coordinates "
                "of that shape");
  check_theorem(r.wedge_matches,
                "x∧x° elements are not exactly those over first coordinates "
                "of that shape");

  if (t.s_triple) {
    r.stone = ca.algebra.variety.stone;
    r.vee_equals_dense = r.vee == ls.dense;
    r.wedge_trivial =
        r.wedge == std::vector<int>{ca.algebra.lattice.bottom};
    check_theorem(r.stone, "a Boolean first component must give a Stone algebra");
    check_theorem(r.vee_equals_dense, "x∨x° must sweep exactly the dense filter");
    check_theorem(r.wedge_trivial, "x∧x° must collapse to 0");
  }
  return r;
}

}  // namespace mslat
