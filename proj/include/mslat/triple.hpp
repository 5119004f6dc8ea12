#pragma once

#include "mslat/congruence.hpp"

namespace mslat {

// Input data for the quotient-free product construction:
//   M  — a de Morgan algebra,
//   D  — a bounded distributive lattice,
//   phi — a (0,1)-lattice homomorphism M -> D (index map).
struct Triple {
  MSAlgebra M;
  FinLattice D;
  std::vector<int> phi;

  bool k2_triple = false;  // M Kleene and phi collapses all x∧x° to 0
  bool s_triple = false;   // k2_triple with M Boolean
};

// Throws Error("NotDeMorgan"), Error("NotDistributive") or
// Error("NotAHom01") when the data is unusable; fills the flags.
Triple validate_triple(MSAlgebra M, FinLattice D, std::vector<int> phi);

// The algebra built from a triple, with the bookkeeping that ties its
// carrier back to the inputs.
struct ConstructedAlgebra {
  MSAlgebra algebra;
  std::vector<std::pair<int, int>> labels;  // element -> (index in M, index in D)
  std::vector<int> tau1;  // M -> L, x -> (x, phi(x)); image = closed elements
  std::vector<int> tau2;  // D -> L, y -> (1, y);     image = dense filter
  int dl = -1;            // (1, 0), the least dense element

  int label_of(int mi, int dj) const;  // -1 when (mi,dj) is not a carrier point
};

ConstructedAlgebra construct(const Triple& t);

// A congruence pair: a congruence of the closed subalgebra together with a
// congruence of the dense filter, compatible along x -> x∨d.
struct MSPair {
  Congruence on_closed;
  Congruence on_dense;
  bool operator==(const MSPair&) const = default;
};

// The lattice of congruence pairs of a principal algebra, with the
// translation maps to and from Con(L).
struct PairLattice {
  SubAlgebra closed;
  SubAlgebra dense;
  ConLattice con_closed;
  ConLattice con_dense;
  ConLattice con_all;
  std::vector<std::pair<int, int>> pairs;  // (index in con_closed, index in con_dense)
  std::vector<int> to_con;    // pair position -> index in con_all
  std::vector<int> from_con;  // index in con_all -> pair position

  int pair_index(int ci, int dj) const;  // -1 when absent
};

// Throws Error("NotPrincipal") for algebras without the least dense element
// decomposition. Cross-checks that restriction is a bijection onto the
// compatible pairs and an order isomorphism.
PairLattice pairs_of(const MSAlgebra& L);

// The congruence with (x,y) related iff x°~y° under t1 and x∨d ~ y∨d under t2.
Congruence pair_to_congruence(const MSAlgebra& L, const Congruence& t1_closed,
                              const Congruence& t2_dense);
// Restrictions of theta to the closed subalgebra and the dense filter.
MSPair congruence_to_pair(const MSAlgebra& L, const Congruence& theta);

struct BeazerResult {
  bool ok = true;
  int failed_clause = 0;  // 1 or 2 when !ok
  int witness_a = -1;     // clause 1: the t2-related pair (a,b) in L∨;
  int witness_b = -1;     // clause 2: the t1-related pair (a,b) in L°°
  int witness_c = -1;     // clause 2 only: the element of L∨ joined in
};

// The two-clause compatibility test for a pair (t1 on L°°, t2 on L∨) of a
// K2-algebra:  (1) (a,b) in t2 implies (a°,b°) in t1;
//              (2) (a,b) in t1 and c in L∨ imply (a∨c, b∨c) in t2.
// Throws Error("NotK2") when L is not a K2-algebra.
BeazerResult beazer_pair_check(const MSAlgebra& L, const Congruence& t1_closed,
                               const Congruence& t2_vee);

// For an algebra built from a k2 triple: L∨ and L∧ computed directly must
// match their first-coordinate descriptions {(x,y) : x in M∨} resp. M∧;
// an s-triple moreover yields a Stone algebra with L∨ = D(L) and L∧ = {0}.
struct KleenePartsReport {
  std::vector<int> vee;
  std::vector<int> wedge;
  bool vee_matches = false;
  bool wedge_matches = false;
  bool stone = false;             // s-triples only
  bool vee_equals_dense = false;  // s-triples only
  bool wedge_trivial = false;     // s-triples only: L∧ = {0}
};

KleenePartsReport kleene_parts_check(const Triple& t,
                                     const ConstructedAlgebra& ca);

}  // namespace mslat
