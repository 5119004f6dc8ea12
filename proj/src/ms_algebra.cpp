#include "mslat/ms_algebra.hpp"

#include <algorithm>

#include "mslat/error.hpp"

namespace mslat {

namespace {

bool check_ms5(const MSAlgebra& A) { return !ms5_witness(A).has_value(); }

bool check_ms6(const MSAlgebra& A) {
  for (int x = 0; x < A.size(); ++x)
    if (A.lattice.meet(x, A.star(x)) != A.lattice.meet(A.star(A.star(x)), A.star(x)))
      return false;
  return true;
}

}  // namespace

MSAlgebra make_ms(FinLattice lattice, std::vector<int> neg) {
  const int n = lattice.size();
  require(neg.size() == static_cast<size_t>(n), "semantic",
          "unary table size does not match the element count");
  for (int x = 0; x < n; ++x)
    require(neg[x] >= 0 && neg[x] < n, "semantic",
            "unary table value out of range at '" + lattice.name(x) + "'");

  if (auto w = distributivity_witness(lattice))
    fail("NotDistributive", "x∧(y∨z) ≠ (x∧y)∨(x∧z) at x='" +
                                lattice.name((*w)[0]) + "', y='" +
                                lattice.name((*w)[1]) + "', z='" +
                                lattice.name((*w)[2]) + "'");

  for (int x = 0; x < n; ++x)
    if (!lattice.leq(x, neg[neg[x]]))
      fail("AxiomViolation",
           "x ≤ x°° fails at '" + lattice.name(x) + "'");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (neg[lattice.meet(x, y)] != lattice.join(neg[x], neg[y]))
        fail("AxiomViolation", "(x∧y)° = x°∨y° fails at '" + lattice.name(x) +
                                   "', '" + lattice.name(y) + "'");
  if (neg[lattice.top] != lattice.bottom)
    fail("AxiomViolation", "1° = 0 fails");

  MSAlgebra A;
  A.lattice = std::move(lattice);
  A.neg = std::move(neg);
  A.variety = variety_of(A);
  return A;
}

std::optional<std::pair<int, int>> ms5_witness(const MSAlgebra& A) {
  const FinLattice& L = A.lattice;
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y)
      if (!L.leq(L.meet(x, A.star(x)), L.join(y, A.star(y))))
        return std::make_pair(x, y);
  return std::nullopt;
}

VarietyFlags variety_of(const MSAlgebra& A) {
  const FinLattice& L = A.lattice;
  VarietyFlags v;
  v.de_morgan = true;
  v.stone = true;
  v.boolean = true;
  for (int x = 0; x < A.size(); ++x) {
    if (A.star(A.star(x)) != x) v.de_morgan = false;
    if (L.meet(x, A.star(x)) != L.bottom) v.stone = false;
    if (L.join(x, A.star(x)) != L.top) v.boolean = false;
  }
  const bool ms5 = check_ms5(A);
  v.kleene = v.de_morgan && ms5;
  v.k2 = ms5 && check_ms6(A);
  v.principal_ms = is_principal_ms(A).principal;
  return v;
}

Substructures substructures(const MSAlgebra& A) {
  const FinLattice& L = A.lattice;
  Substructures s;
  std::vector<uint8_t> in_vee(A.size(), 0), in_wedge(A.size(), 0);
  for (int x = 0; x < A.size(); ++x) {
    if (A.star(A.star(x)) == x) s.closed.push_back(x);
    if (A.star(x) == L.bottom) s.dense.push_back(x);
    if (L.join(x, A.star(x)) == L.top) s.boolean_center.push_back(x);
    if (L.join(A.star(x), A.star(A.star(x))) == L.top) s.stone_part.push_back(x);
    in_vee[L.join(x, A.star(x))] = 1;
    in_wedge[L.meet(x, A.star(x))] = 1;
  }
  for (int x = 0; x < A.size(); ++x) {
    if (in_vee[x]) s.vee.push_back(x);
    if (in_wedge[x]) s.wedge.push_back(x);
  }
  // The least dense element, when the dense set has a single minimal member.
  int least = -1;
  for (int x : s.dense) {
    bool minimal = true;
    for (int y : s.dense)
      if (y != x && L.leq(y, x)) minimal = false;
    if (!minimal) continue;
    if (least >= 0) return s;  // two minimal dense elements: no least
    least = x;
  }
  s.smallest_dense = least;
  return s;
}

PrincipalityReport is_principal_ms(const MSAlgebra& A) {
  const FinLattice& L = A.lattice;
  Substructures s = substructures(A);
  PrincipalityReport r;
  if (s.smallest_dense < 0) {
    // Cannot happen for a finite MS-algebra (dense sets are meet-closed),
    // but the definition asks for it, so it is checked.
    r.failed = "dense-filter";
    r.witness = s.dense.empty() ? -1 : s.dense.front();
    return r;
  }
  r.least_dense = s.smallest_dense;
  for (int x = 0; x < A.size(); ++x) {
    int closure = L.meet(A.star(A.star(x)), L.join(x, r.least_dense));
    if (closure != x) {
      r.failed = "decomposition";
      r.witness = x;
      return r;
    }
  }
  r.principal = true;
  return r;
}

namespace {

// Carrier, reverse index and the induced lattice over a subset already known
// (or about to be verified) to be closed under meet and join.
SubAlgebra induced_sub(const FinLattice& L, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  require(!elems.empty(), "NotASubalgebra", "empty carrier");
  require(elems.front() >= 0 && elems.back() < L.size(), "semantic",
          "element index out of range");

  const int m = static_cast<int>(elems.size());
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      int a = elems[i], b = elems[j];
      if (!std::binary_search(elems.begin(), elems.end(), L.meet(a, b)))
        fail("NotASubalgebra", "meet of '" + L.name(a) + "' and '" + L.name(b) +
                                   "' escapes the set");
      if (!std::binary_search(elems.begin(), elems.end(), L.join(a, b)))
        fail("NotASubalgebra", "join of '" + L.name(a) + "' and '" + L.name(b) +
                                   "' escapes the set");
    }

  SubAlgebra S;
  S.carrier = std::move(elems);
  S.local_of.assign(L.size(), -1);
  for (int i = 0; i < m; ++i) S.local_of[S.carrier[i]] = i;

  std::vector<std::string> names(m);
  std::vector<uint8_t> order(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    names[i] = L.name(S.carrier[i]);
    for (int j = 0; j < m; ++j)
      if (L.leq(S.carrier[i], S.carrier[j]))
        order[static_cast<size_t>(i) * m + j] = 1;
  }
  // The ascending carrier is a linear extension of the induced order, so
  // from_order keeps the indexing.
  S.lattice = from_order(names, order);
  check_theorem(S.lattice.name(0) == names[0], "sublattice indexing drifted");
  return S;
}

}  // namespace

SubAlgebra make_sublattice(const FinLattice& L, std::vector<int> elems) {
  return induced_sub(L, std::move(elems));
}

SubAlgebra make_subalgebra(const MSAlgebra& A, std::vector<int> elems) {
  const FinLattice& L = A.lattice;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!std::binary_search(elems.begin(), elems.end(), L.bottom))
    fail("NotASubalgebra", "missing the bound '" + L.name(L.bottom) + "'");
  if (!std::binary_search(elems.begin(), elems.end(), L.top))
    fail("NotASubalgebra", "missing the bound '" + L.name(L.top) + "'");
  for (int x : elems)
    if (!std::binary_search(elems.begin(), elems.end(), A.star(x)))
      fail("NotASubalgebra", "'" + L.name(x) + "'° escapes the set");

  SubAlgebra S = induced_sub(L, std::move(elems));
  std::vector<int> local_neg(S.size());
  for (int i = 0; i < S.size(); ++i)
    local_neg[i] = S.local_of[A.star(S.carrier[i])];
  S.ms = make_ms(S.lattice, std::move(local_neg));
  return S;
}

namespace {

SubAlgebra named_substructure(const MSAlgebra& A, const std::vector<int>& elems,
                              const char* what, bool with_neg) {
  try {
    return with_neg ? make_subalgebra(A, elems)
                    : make_sublattice(A.lattice, elems);
  } catch (const Error& e) {
    throw TheoremFalsified(std::string(what) + " failed to close: " + e.what());
  }
}

}  // namespace

SubAlgebra closed_subalgebra(const MSAlgebra& A) {
  return named_substructure(A, substructures(A).closed, "the closed elements",
                            true);
}

SubAlgebra dense_sublattice(const MSAlgebra& A) {
  return named_substructure(A, substructures(A).dense, "the dense filter",
                            false);
}

SubAlgebra center_subalgebra(const MSAlgebra& A) {
  return named_substructure(A, substructures(A).boolean_center, "the centre",
                            true);
}

SubAlgebra stone_subalgebra(const MSAlgebra& A) {
  return named_substructure(A, substructures(A).stone_part,
                            "the Stone elements", true);
}

SubAlgebra cone(const MSAlgebra& A, int a) {
  require(A.star(a) == a, "NotFixedPoint",
          "'" + A.name(a) + "'° ≠ '" + A.name(a) + "'");
  std::vector<int> elems = A.lattice.poset.down_set(a);
  for (int x : A.lattice.poset.up_set(a)) elems.push_back(x);
  return named_substructure(A, elems, "the cone", true);
}

std::optional<std::vector<int>> find_ms_isomorphism(const MSAlgebra& A,
                                                    const MSAlgebra& B) {
  return find_isomorphism(A.lattice, B.lattice, &A.neg, &B.neg);
}

}  // namespace mslat
