#pragma once

#include "mslat/triple.hpp"

namespace mslat {

// Least subalgebra containing `seed` (0 and 1 are always included; closure
// under ∧, ∨ and ° when present).
SubAlgebra subalgebra_generated(AlgView A, const std::vector<int>& seed);

// All congruences of A whose restriction to S equals theta (a partition of
// the local carrier of S). Throws Error("NotASubalgebra") when S does not
// sit inside A with matching operations.
std::vector<Congruence> extensions_of(const Congruence& theta, AlgView A,
                                      const SubAlgebra& S);

// Per-congruence extension counts for S inside A.
struct ExtensionReport {
  ConLattice sub_congruences;
  std::vector<std::vector<Congruence>> extensions;  // aligned with sub_congruences
  bool cep = false;      // every congruence of S extends
  bool perfect = false;  // every congruence of S extends uniquely
};

ExtensionReport is_perfect_extension(AlgView A, const SubAlgebra& S);

// For principal L and a principal subalgebra L': L is perfect over L' iff
// the dense filter of L is perfect over that of L' (as lattices) and the
// closed subalgebra of L is perfect over that of L'. Both sides are
// computed and their equivalence is asserted.
struct DecompositionReport {
  bool whole = false;
  bool dense_part = false;
  bool closed_part = false;
  bool agrees() const { return whole == (dense_part && closed_part); }
};

DecompositionReport check_perfect_decomposition(const MSAlgebra& L,
                                                const SubAlgebra& Lp);

// The greatest-Stone-subalgebra specializations: L perfect over L_S iff L°°
// perfect over the centre (asserted); when perfect, restriction is a lattice
// isomorphism Con(L) -> Con(L_S); the pair lattice of L_S is the
// first-coordinate restriction of the pair lattice of L (asserted).
struct StoneReport {
  bool perfect_over_stone = false;
  bool closed_perfect_over_centre = false;
  bool restriction_is_iso = false;  // only meaningful when perfect
  bool pair_projection = false;     // A(L_S) = restricted A(L)
};

StoneReport check_stone_corollaries(const MSAlgebra& L);

// Every (0,1)-lattice homomorphism M -> D, in lexicographic order of the
// value vector.
std::vector<std::vector<int>> enumerate_homs01(const FinLattice& M,
                                               const FinLattice& D);

// A set of congruence pairs over an (M, D) signature, prior to any chosen
// hom. Used to ask which homs realize the set as the compatible pairs.
struct PairSublattice {
  MSAlgebra M;
  FinLattice D;
  ConLattice con_m;  // congruences of the de Morgan algebra M
  ConLattice con_d;  // lattice congruences of D
  std::vector<std::pair<int, int>> pairs;  // (index in con_m, index in con_d)

  bool contains(int ci, int dj) const;
};

PairSublattice make_pair_sublattice(MSAlgebra M, FinLattice D,
                                    std::vector<std::pair<int, int>> pairs);

// First hom phi (in enumeration order) under which the pair set is exactly
// the compatible set: (t1,t2) in pairs <=> the D-congruence generated by
// the phi-image of t1 refines t2, quantified over all of Con(M) x Con(D).
std::optional<std::vector<int>> is_representable(const PairSublattice& P);

// The structural characterization: representable iff
//   (1) closed under componentwise join,
//   (2) down-closed in the first coordinate, and
//   (3) some hom passes the biconditional over the principal first
//       coordinates alone.
// When M is a perfect extension of its centre, the criterion is re-run
// quantifying only over the congruences generated by (0, a) for central a.
// Agreement with is_representable is asserted.
struct RepresentabilityReport {
  bool join_closed = true;
  std::optional<std::pair<int, int>> join_witness;  // positions into pairs
  bool down_closed = true;
  std::optional<std::pair<int, int>> down_witness;  // (pair position, smaller θ1)
  bool principal_hom = false;
  std::optional<std::vector<int>> phi;  // hom passing the principal criterion
  bool centre_variant_ran = false;
  std::optional<std::vector<int>> centre_phi;
  bool representable() const { return join_closed && down_closed && principal_hom; }
};

RepresentabilityReport check_representability_conditions(const PairSublattice& P);

// The pair set of a constructed algebra, pulled back through tau1/tau2 into
// (Con(M), Con(D)) indices of P; sorted ascending.
std::vector<std::pair<int, int>> pullback_pairs(const ConstructedAlgebra& ca,
                                                const PairSublattice& P);

}  // namespace mslat
