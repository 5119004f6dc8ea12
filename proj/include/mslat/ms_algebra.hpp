#pragma once

#include <optional>

#include "mslat/lattice.hpp"

namespace mslat {

struct VarietyFlags {
  bool de_morgan = false;     // x°° = x
  bool kleene = false;        // de Morgan and x∧x° <= y∨y°
  bool stone = false;         // x∧x° = 0
  bool k2 = false;            // x∧x° <= y∨y° and x∧x° = x°°∧x°
  bool boolean = false;       // x∨x° = 1
  bool principal_ms = false;  // dense filter principal and x = x°°∧(x∨d)
};

// Bounded distributive lattice with a unary ° satisfying x <= x°°,
// (x∧y)° = x°∨y° and 1° = 0. Variety flags are computed at validation.
struct MSAlgebra {
  FinLattice lattice;
  std::vector<int> neg;  // x -> x°
  VarietyFlags variety;

  int size() const { return lattice.size(); }
  int star(int x) const { return neg[x]; }
  const std::string& name(int i) const { return lattice.name(i); }
};

// Validates the tables. Throws Error("NotDistributive") or
// Error("AxiomViolation") with a witnessing element or pair in the message.
MSAlgebra make_ms(FinLattice lattice, std::vector<int> neg);

VarietyFlags variety_of(const MSAlgebra& A);

// First pair (x,y) violating x∧x° <= y∨y°, if any.
std::optional<std::pair<int, int>> ms5_witness(const MSAlgebra& A);

struct Substructures {
  std::vector<int> closed;          // {x : x°° = x}, equal to the image of °
  std::vector<int> dense;           // {x : x° = 0}
  std::vector<int> boolean_center;  // {x : x∨x° = 1}
  std::vector<int> stone_part;      // {x : x°∨x°° = 1}, greatest Stone subalgebra
  std::vector<int> vee;             // {x∨x°}
  std::vector<int> wedge;           // {x∧x°}
  int smallest_dense = -1;          // least dense element, -1 when absent
};
Substructures substructures(const MSAlgebra& A);

struct PrincipalityReport {
  bool principal = false;
  int least_dense = -1;  // d, when the dense filter is principal
  // When not principal: which requirement broke, and a witnessing element.
  std::string failed;  // "dense-filter" or "decomposition"
  int witness = -1;
};
// Checks that the dense filter is a principal filter [d) and that every x
// decomposes as x = x°° ∧ (x∨d). Witnesses are first in index order.
PrincipalityReport is_principal_ms(const MSAlgebra& A);

// Read-only view over either a bare lattice or an MS-algebra; the congruence
// and extension machinery is generic over this.
struct AlgView {
  const FinLattice* lat = nullptr;
  const std::vector<int>* neg = nullptr;  // null for a plain lattice

  AlgView(const FinLattice& l) : lat(&l) {}
  AlgView(const MSAlgebra& a) : lat(&a.lattice), neg(&a.neg) {}
  int size() const { return lat->size(); }
  bool has_neg() const { return neg != nullptr; }
};

// Subset of a parent algebra closed under the relevant operations, with the
// induced structure. `carrier` maps local index -> parent index (ascending).
struct SubAlgebra {
  std::vector<int> carrier;
  std::vector<int> local_of;  // parent index -> local index, -1 outside
  FinLattice lattice;         // induced lattice
  std::optional<MSAlgebra> ms;  // present when built °-closed from an MS-algebra

  int size() const { return static_cast<int>(carrier.size()); }
  int parent_of(int local) const { return carrier[local]; }
  AlgView view() const { return ms ? AlgView(*ms) : AlgView(lattice); }
};

// Throw Error("NotASubalgebra") when the set is not closed under the needed
// operations (meet/join for a sublattice; additionally °, 0, 1 for an
// MS-subalgebra).
SubAlgebra make_sublattice(const FinLattice& L, std::vector<int> elems);
SubAlgebra make_subalgebra(const MSAlgebra& A, std::vector<int> elems);

// Canonical substructure accessors (these sets are subalgebras/sublattices
// by general theory; a failure is reported as TheoremFalsified).
SubAlgebra closed_subalgebra(const MSAlgebra& A);   // L°° with induced °
SubAlgebra dense_sublattice(const MSAlgebra& A);    // D(L) as a lattice
SubAlgebra center_subalgebra(const MSAlgebra& A);   // B(L)
SubAlgebra stone_subalgebra(const MSAlgebra& A);    // L_S

// ↓a ∪ ↑a for a fixed point a° = a; throws Error("NotFixedPoint") otherwise.
SubAlgebra cone(const MSAlgebra& A, int a);

// Convenience: order isomorphism that also transports °.
std::optional<std::vector<int>> find_ms_isomorphism(const MSAlgebra& A,
                                                    const MSAlgebra& B);

}  // namespace mslat
