#pragma once

#include <map>

#include "mslat/ms_algebra.hpp"

namespace mslat {

// Partition of the carrier in canonical form: every element maps to the least
// index of its block.
struct Congruence {
  std::vector<int> leader;
  int blocks = 0;

  int size() const { return static_cast<int>(leader.size()); }
  bool same(int x, int y) const { return leader[x] == leader[y]; }
  bool operator==(const Congruence&) const = default;
  std::vector<std::vector<int>> block_list() const;  // ordered by leader

  static Congruence identity(int n);
  static Congruence total(int n);
  // Canonicalizes an arbitrary class map (equal values = same block).
  static Congruence from_class_map(const std::vector<int>& raw);
  static Congruence from_blocks(int n, const std::vector<std::vector<int>>& blocks);
};

bool refines(const Congruence& a, const Congruence& b);  // a <= b
bool is_congruence(AlgView A, const Congruence& c);

Congruence con_meet(const Congruence& a, const Congruence& b);
// Transitive closure of the union; verified compatible with A's operations.
Congruence con_join(AlgView A, const Congruence& a, const Congruence& b);

// Least congruence identifying every given pair: closure under the unary
// translations x -> x∧c, x -> x∨c (all constants c) and ° when present,
// interleaved with equivalence closure.
Congruence congruence_generated(AlgView A,
                                const std::vector<std::pair<int, int>>& pairs);
Congruence principal_congruence(AlgView A, int a, int b);

// The congruence lattice, ordered by refinement. `cons` is canonically
// sorted: identity first, total relation last.
struct ConLattice {
  std::vector<Congruence> cons;
  std::vector<uint8_t> order;  // m*m refinement matrix
  std::vector<int> meets;      // m*m index tables
  std::vector<int> joins;

  int size() const { return static_cast<int>(cons.size()); }
  bool leq(int i, int j) const {
    return order[static_cast<size_t>(i) * cons.size() + j] != 0;
  }
  int meet(int i, int j) const {
    return meets[static_cast<size_t>(i) * cons.size() + j];
  }
  int join(int i, int j) const {
    return joins[static_cast<size_t>(i) * cons.size() + j];
  }
  int index_of(const Congruence& c) const;  // -1 when absent

private:
  friend ConLattice all_congruences(AlgView);
  std::map<std::vector<int>, int> lookup_;
};

// Join-closure of the principal congruences (plus identity).
ConLattice all_congruences(AlgView A);

// Oracle: filters every partition of the carrier for operation compatibility.
// Throws Error("TooLarge") when the carrier exceeds `cap`.
std::vector<Congruence> brute_force_congruences(AlgView A, int cap = 10);

// theta restricted to a subalgebra, as a partition of the local carrier.
Congruence restrict_to(const Congruence& theta, const SubAlgebra& S);

// Pointwise homomorphism check over the common signature of A and B
// (lattice ops and bounds; ° when both sides have it).
// Throws Error("NotAHomomorphism") with a witness.
void check_homomorphism(AlgView A, AlgView B, const std::vector<int>& hom);

// Con(tau): least congruence of B containing the image of theta.
Congruence generated_by_image(AlgView A, AlgView B, const std::vector<int>& hom,
                              const Congruence& theta);

}  // namespace mslat
