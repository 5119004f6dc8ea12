#include "mslat/extension.hpp"

#include <algorithm>
#include <set>

#include "mslat/error.hpp"

namespace mslat {

namespace {

// Structural check that S really is the induced substructure of A.
void verify_subalgebra(AlgView A, const SubAlgebra& S) {
  require(S.local_of.size() == static_cast<size_t>(A.size()), "NotASubalgebra",
          "the subalgebra indexes a different parent");
  require(S.lattice.size() == S.size(), "NotASubalgebra",
          "carrier and induced lattice sizes differ");
  for (int i = 0; i < S.size(); ++i) {
    int p = S.carrier[i];
    require(p >= 0 && p < A.size() && S.local_of[p] == i, "NotASubalgebra",
            "carrier and index maps disagree");
    require(i == 0 || S.carrier[i - 1] < p, "NotASubalgebra",
            "carrier is not ascending");
  }
  for (int i = 0; i < S.size(); ++i)
    for (int j = i; j < S.size(); ++j) {
      int pm = A.lat->meet(S.carrier[i], S.carrier[j]);
      int pj = A.lat->join(S.carrier[i], S.carrier[j]);
      require(S.local_of[pm] == S.lattice.meet(i, j) && S.local_of[pm] >= 0,
              "NotASubalgebra", "meets do not agree at '" +
                                    A.lat->name(S.carrier[i]) + "', '" +
                                    A.lat->name(S.carrier[j]) + "'");
      require(S.local_of[pj] == S.lattice.join(i, j) && S.local_of[pj] >= 0,
              "NotASubalgebra", "joins do not agree at '" +
                                    A.lat->name(S.carrier[i]) + "', '" +
                                    A.lat->name(S.carrier[j]) + "'");
    }
  if (A.has_neg()) {
    require(S.ms.has_value(), "NotASubalgebra",
            "the subalgebra lacks the unary operation");
    require(S.local_of[A.lat->bottom] == S.lattice.bottom &&
                S.local_of[A.lat->top] == S.lattice.top,
            "NotASubalgebra", "the bounds are not inherited");
    for (int i = 0; i < S.size(); ++i) {
      int pn = (*A.neg)[S.carrier[i]];
      require(S.local_of[pn] == S.ms->neg[i] && S.local_of[pn] >= 0,
              "NotASubalgebra",
              "° does not agree at '" + A.lat->name(S.carrier[i]) + "'");
    }
  } else {
    require(!S.ms.has_value(), "NotASubalgebra",
            "the subalgebra carries an operation the parent lacks");
  }
}

}  // namespace

SubAlgebra subalgebra_generated(AlgView A, const std::vector<int>& seed) {
  std::vector<uint8_t> in(A.size(), 0);
  in[A.lat->bottom] = in[A.lat->top] = 1;
  for (int x : seed) {
    require(x >= 0 && x < A.size(), "semantic", "seed element out of range");
    in[x] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < A.size(); ++x) {
      if (!in[x]) continue;
      if (A.has_neg() && !in[(*A.neg)[x]]) in[(*A.neg)[x]] = grew = true;
      for (int y = x; y < A.size(); ++y) {
        if (!in[y]) continue;
        int m = A.lat->meet(x, y), j = A.lat->join(x, y);
        if (!in[m]) in[m] = grew = true;
        if (!in[j]) in[j] = grew = true;
      }
    }
  }
  std::vector<int> elems;
  for (int x = 0; x < A.size(); ++x)
    if (in[x]) elems.push_back(x);

  SubAlgebra S = make_sublattice(*A.lat, elems);
  if (A.has_neg()) {
    std::vector<int> neg(S.size());
    for (int i = 0; i < S.size(); ++i) neg[i] = S.local_of[(*A.neg)[S.carrier[i]]];
    S.ms = make_ms(S.lattice, std::move(neg));
  }
  return S;
}

std::vector<Congruence> extensions_of(const Congruence& theta, AlgView A,
                                      const SubAlgebra& S) {
  verify_subalgebra(A, S);
  require(theta.size() == S.size(), "semantic",
          "congruence does not live on the subalgebra");
  std::vector<Congruence> out;
  for (const Congruence& big : all_congruences(A).cons)
    if (restrict_to(big, S) == theta) out.push_back(big);
  return out;
}

ExtensionReport is_perfect_extension(AlgView A, const SubAlgebra& S) {
  verify_subalgebra(A, S);
  ExtensionReport r;
  r.sub_congruences = all_congruences(S.view());
  r.extensions.assign(r.sub_congruences.size(), {});
  for (const Congruence& big : all_congruences(A).cons) {
    int k = r.sub_congruences.index_of(restrict_to(big, S));
    check_theorem(k >= 0, "a restriction is not a congruence of the subalgebra");
    r.extensions[k].push_back(big);
  }
  r.cep = true;
  r.perfect = true;
  for (const auto& e : r.extensions) {
    if (e.empty()) r.cep = false;
    if (e.size() != 1) r.perfect = false;
  }
  r.perfect = r.perfect && r.cep;
  return r;
}

DecompositionReport check_perfect_decomposition(const MSAlgebra& L,
                                                const SubAlgebra& Lp) {
  verify_subalgebra(L, Lp);
  PrincipalityReport big = is_principal_ms(L);
  require(big.principal, "NotPrincipal", "the algebra is not principal");
  require(is_principal_ms(*Lp.ms).principal, "NotPrincipal",
          "the subalgebra is not principal");

  DecompositionReport r;
  r.whole = is_perfect_extension(L, Lp).perfect;

  SubAlgebra DL = dense_sublattice(L);
  SubAlgebra CL = closed_subalgebra(L);
  std::vector<int> dense_local, closed_local;
  for (int p : Lp.carrier) {
    if (L.star(p) == L.lattice.bottom) dense_local.push_back(DL.local_of[p]);
    if (L.star(L.star(p)) == p) closed_local.push_back(CL.local_of[p]);
  }
  try {
    SubAlgebra Dsub = make_sublattice(DL.lattice, dense_local);
    r.dense_part = is_perfect_extension(DL.lattice, Dsub).perfect;
    SubAlgebra Csub = make_subalgebra(*CL.ms, closed_local);
    r.closed_part = is_perfect_extension(*CL.ms, Csub).perfect;
  } catch (const Error& e) {
    check_theorem(false, e.what());
  }
  check_theorem(r.agrees(),
                "perfection does not split into the dense and closed parts");
  return r;
}

StoneReport check_stone_corollaries(const MSAlgebra& L) {
  PrincipalityReport rep = is_principal_ms(L);
  require(rep.principal, "NotPrincipal", "the algebra is not principal");

  StoneReport r;
  SubAlgebra LS = stone_subalgebra(L);
  r.perfect_over_stone = is_perfect_extension(L, LS).perfect;

  SubAlgebra CL = closed_subalgebra(L);
  Substructures s = substructures(L);
  std::vector<int> centre_local;
  for (int p : s.boolean_center) centre_local.push_back(CL.local_of[p]);
  try {
    SubAlgebra Bsub = make_subalgebra(*CL.ms, centre_local);
    r.closed_perfect_over_centre = is_perfect_extension(*CL.ms, Bsub).perfect;
  } catch (const Error& e) {
    check_theorem(false, e.what());
  }
  check_theorem(r.perfect_over_stone == r.closed_perfect_over_centre,
                "perfection over the Stone part must match the closed part "
                "over the centre");

  PairLattice PL = pairs_of(L);
  PairLattice PS;
  try {
    PS = pairs_of(*LS.ms);
  } catch (const Error& e) {
    check_theorem(false, e.what());  // the Stone part of a principal algebra
                                     // is itself principal
  }

  // The Stone part's pair coordinates, in parent terms.
  std::vector<int> ps_closed_parent, ps_dense_parent;
  for (int k : PS.closed.carrier) ps_closed_parent.push_back(LS.carrier[k]);
  for (int k : PS.dense.carrier) ps_dense_parent.push_back(LS.carrier[k]);
  check_theorem(ps_closed_parent == s.boolean_center,
                "the Stone part's closed elements are not the centre");
  check_theorem(ps_dense_parent == s.dense,
                "the Stone part's dense filter differs from the whole one");

  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::set<Key> projected, target;
  for (auto [ci, dj] : PL.pairs) {
    const Congruence& phi = PL.con_closed.cons[ci];
    const Congruence& psi = PL.con_dense.cons[dj];
    std::vector<int> raw1(PS.closed.size()), raw2(PS.dense.size());
    for (int k = 0; k < PS.closed.size(); ++k)
      raw1[k] = phi.leader[CL.local_of[ps_closed_parent[k]]];
    for (int k = 0; k < PS.dense.size(); ++k)
      raw2[k] = psi.leader[PL.dense.local_of[ps_dense_parent[k]]];
    projected.insert({Congruence::from_class_map(raw1).leader,
                      Congruence::from_class_map(raw2).leader});
  }
  for (auto [ci, dj] : PS.pairs)
    target.insert(
        {PS.con_closed.cons[ci].leader, PS.con_dense.cons[dj].leader});
  r.pair_projection = projected == target;
  check_theorem(r.pair_projection,
                "the Stone part's pairs are not the restricted pairs");

  if (r.perfect_over_stone) {
    check_theorem(PL.con_all.size() == PS.con_all.size(),
                  "congruence counts differ despite perfection");
    std::vector<int> rmap(PL.con_all.size());
    std::vector<uint8_t> hit(PS.con_all.size(), 0);
    for (int i = 0; i < PL.con_all.size(); ++i) {
      int k = PS.con_all.index_of(restrict_to(PL.con_all.cons[i], LS));
      check_theorem(k >= 0 && !hit[k], "restriction is not one-to-one");
      hit[k] = 1;
      rmap[i] = k;
    }
    for (int i = 0; i < PL.con_all.size(); ++i)
      for (int j = 0; j < PL.con_all.size(); ++j)
        check_theorem(PL.con_all.leq(i, j) == PS.con_all.leq(rmap[i], rmap[j]),
                      "restriction does not preserve the order both ways");
    r.restriction_is_iso = true;
  }
  return r;
}

std::vector<std::vector<int>> enumerate_homs01(const FinLattice& M,
                                               const FinLattice& D) {
  const int n = M.size();
  std::vector<std::vector<std::pair<int, int>>> joins_to(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int j = M.join(x, y);
      if (j != x && j != y) joins_to[j].emplace_back(x, y);
    }

  std::vector<std::vector<int>> out;
  std::vector<int> f(n, -1);
  auto rec = [&](auto&& self, int z) -> void {
    if (z == n) {
      out.push_back(f);
      return;
    }
    for (int v = 0; v < D.size(); ++v) {
      if (z == M.bottom && v != D.bottom) continue;
      if (z == M.top && v != D.top) continue;
      bool ok = true;
      for (int y = 0; ok && y < z; ++y) {
        int m = M.meet(z, y);
        if (D.meet(v, f[y]) != (m == z ? v : f[m])) ok = false;
        if (ok && M.join(z, y) == z && D.join(v, f[y]) != v) ok = false;
      }
      for (auto [x, y] : joins_to[z])
        if (ok && D.join(f[x], f[y]) != v) ok = false;
      if (!ok) continue;
      f[z] = v;
      self(self, z + 1);
      f[z] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

bool PairSublattice::contains(int ci, int dj) const {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(ci, dj)) !=
         pairs.end();
}

PairSublattice make_pair_sublattice(MSAlgebra M, FinLattice D,
                                    std::vector<std::pair<int, int>> pairs) {
  PairSublattice P;
  P.M = std::move(M);
  P.D = std::move(D);
  P.con_m = all_congruences(P.M);
  P.con_d = all_congruences(P.D);
  std::sort(pairs.begin(), pairs.end());
  for (size_t k = 0; k < pairs.size(); ++k) {
    require(pairs[k].first >= 0 && pairs[k].first < P.con_m.size() &&
                pairs[k].second >= 0 && pairs[k].second < P.con_d.size(),
            "semantic", "pair index out of range");
    require(k == 0 || pairs[k - 1] != pairs[k], "semantic", "duplicate pair");
  }
  P.pairs = std::move(pairs);
  return P;
}

namespace {

// Con(phi)(theta1) for every theta1, as congruences of D.
std::vector<Congruence> images_under(const PairSublattice& P,
                                     const std::vector<int>& phi) {
  std::vector<Congruence> img;
  img.reserve(P.con_m.size());
  for (const Congruence& t1 : P.con_m.cons)
    img.push_back(generated_by_image(P.M.lattice, P.D, phi, t1));
  return img;
}

std::vector<uint8_t> membership_matrix(const PairSublattice& P) {
  std::vector<uint8_t> mat(
      static_cast<size_t>(P.con_m.size()) * P.con_d.size(), 0);
  for (auto [ci, dj] : P.pairs)
    mat[static_cast<size_t>(ci) * P.con_d.size() + dj] = 1;
  return mat;
}

}  // namespace

std::optional<std::vector<int>> is_representable(const PairSublattice& P) {
  std::vector<uint8_t> mat = membership_matrix(P);
  for (const std::vector<int>& phi :
       enumerate_homs01(P.M.lattice, P.D)) {
    std::vector<Congruence> img = images_under(P, phi);
    bool ok = true;
    for (int ci = 0; ok && ci < P.con_m.size(); ++ci)
      for (int dj = 0; ok && dj < P.con_d.size(); ++dj) {
        bool member = mat[static_cast<size_t>(ci) * P.con_d.size() + dj] != 0;
        if (member != refines(img[ci], P.con_d.cons[dj])) ok = false;
      }
    if (ok) return phi;
  }
  return std::nullopt;
}

RepresentabilityReport check_representability_conditions(
    const PairSublattice& P) {
  RepresentabilityReport r;
  std::vector<uint8_t> mat = membership_matrix(P);
  auto member = [&](int ci, int dj) {
    return mat[static_cast<size_t>(ci) * P.con_d.size() + dj] != 0;
  };

  for (size_t k = 0; r.join_closed && k < P.pairs.size(); ++k)
    for (size_t l = k + 1; r.join_closed && l < P.pairs.size(); ++l)
      if (!member(P.con_m.join(P.pairs[k].first, P.pairs[l].first),
                  P.con_d.join(P.pairs[k].second, P.pairs[l].second))) {
        r.join_closed = false;
        r.join_witness = {static_cast<int>(k), static_cast<int>(l)};
      }

  for (size_t k = 0; r.down_closed && k < P.pairs.size(); ++k)
    for (int a = 0; r.down_closed && a < P.con_m.size(); ++a)
      if (P.con_m.leq(a, P.pairs[k].first) && !member(a, P.pairs[k].second)) {
        r.down_closed = false;
        r.down_witness = {static_cast<int>(k), a};
      }

  std::set<int> principal;
  principal.insert(P.con_m.index_of(Congruence::identity(P.M.size())));
  for (int a = 0; a < P.M.size(); ++a)
    for (int b = a + 1; b < P.M.size(); ++b) {
      int idx = P.con_m.index_of(principal_congruence(P.M, a, b));
      check_theorem(idx >= 0, "a principal congruence escaped the lattice");
      principal.insert(idx);
    }

  auto passes_over = [&](const std::vector<Congruence>& img,
                         const std::set<int>& firsts) {
    for (int ci : firsts)
      for (int dj = 0; dj < P.con_d.size(); ++dj)
        if (member(ci, dj) != refines(img[ci], P.con_d.cons[dj])) return false;
    return true;
  };

  std::vector<std::vector<int>> homs = enumerate_homs01(P.M.lattice, P.D);
  for (const auto& phi : homs) {
    if (passes_over(images_under(P, phi), principal)) {
      r.principal_hom = true;
      r.phi = phi;
      break;
    }
  }

  SubAlgebra centre = center_subalgebra(P.M);
  if (is_perfect_extension(P.M, centre).perfect) {
    r.centre_variant_ran = true;
    std::set<int> alphas;
    for (int p : centre.carrier) {
      int idx =
          P.con_m.index_of(principal_congruence(P.M, P.M.lattice.bottom, p));
      check_theorem(idx >= 0, "a principal congruence escaped the lattice");
      alphas.insert(idx);
    }
    for (const auto& phi : homs) {
      if (passes_over(images_under(P, phi), alphas)) {
        r.centre_phi = phi;
        break;
      }
    }
  }

  std::optional<std::vector<int>> direct = is_representable(P);
  check_theorem(r.representable() == direct.has_value(),
                "the three conditions disagree with the direct search");
  if (direct) check_theorem(r.phi == direct, "criterion homs disagree");
  if (r.centre_variant_ran) {
    check_theorem((r.join_closed && r.down_closed &&
                   r.centre_phi.has_value()) == direct.has_value(),
                  "the centre criterion disagrees with the direct search");
    if (direct) check_theorem(r.centre_phi == direct, "centre homs disagree");
  }
  return r;
}

std::vector<std::pair<int, int>> pullback_pairs(const ConstructedAlgebra& ca,
                                                const PairSublattice& P) {
  require(ca.tau1.size() == static_cast<size_t>(P.M.size()) &&
              ca.tau2.size() == static_cast<size_t>(P.D.size()),
          "semantic", "the construction and the pair set disagree on (M, D)");
  PairLattice PL = pairs_of(ca.algebra);
  std::vector<std::pair<int, int>> out;
  for (auto [ci, dj] : PL.pairs) {
    const Congruence& phi = PL.con_closed.cons[ci];
    const Congruence& psi = PL.con_dense.cons[dj];
    std::vector<int> raw1(P.M.size()), raw2(P.D.size());
    for (int x = 0; x < P.M.size(); ++x)
      raw1[x] = phi.leader[PL.closed.local_of[ca.tau1[x]]];
    for (int y = 0; y < P.D.size(); ++y)
      raw2[y] = psi.leader[PL.dense.local_of[ca.tau2[y]]];
    int i1 = P.con_m.index_of(Congruence::from_class_map(raw1));
    int i2 = P.con_d.index_of(Congruence::from_class_map(raw2));
    check_theorem(i1 >= 0 && i2 >= 0,
                  "a pulled-back restriction is not a congruence");
    out.emplace_back(i1, i2);
  }
  std::sort(out.begin(), out.end());
  for (size_t k = 1; k < out.size(); ++k)
    check_theorem(out[k - 1] != out[k], "pulled-back pairs collide");
  return out;
}

}  // namespace mslat
