#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mslat {

using NamePair = std::pair<std::string, std::string>;

// Finite poset over named elements. Elements are referenced externally by
// name and internally by dense index along a fixed linear extension of the
// order (so i <= j in the order implies i <= j numerically). `covers` is the
// transitive reduction, sorted by (lower, upper).
struct FinPoset {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;
  std::vector<uint8_t> order;  // n*n row-major, order[a*n+b] = (a <= b)

  int size() const { return static_cast<int>(elements.size()); }
  bool leq(int a, int b) const {
    return order[static_cast<size_t>(a) * elements.size() + b] != 0;
  }
  int index_of(std::string_view name) const;
  std::vector<int> down_set(int a) const;
  std::vector<int> up_set(int a) const;
};

// Bounded lattice: poset plus total meet/join tables and the two bounds.
struct FinLattice {
  FinPoset poset;
  int bottom = 0;
  int top = 0;
  std::vector<int> meets;  // n*n
  std::vector<int> joins;  // n*n

  int size() const { return poset.size(); }
  bool leq(int a, int b) const { return poset.leq(a, b); }
  int meet(int a, int b) const {
    return meets[static_cast<size_t>(a) * poset.elements.size() + b];
  }
  int join(int a, int b) const {
    return joins[static_cast<size_t>(a) * poset.elements.size() + b];
  }
  const std::string& name(int i) const { return poset.elements[i]; }
  int index_of(std::string_view name) const { return poset.index_of(name); }
};

// Builds a bounded lattice from a cover list. Throws Error("NotAPoset") on a
// cycle and Error("NotALattice") naming the first pair (in index order) that
// lacks a meet or join. Transitive edges in the input are reduced silently.
FinLattice from_covers(const std::vector<std::string>& elements,
                       const std::vector<NamePair>& covers);

// Builds a bounded lattice from an explicit order relation (row-major
// reflexive/antisymmetric/transitive matrix over the elements as listed).
// Elements are re-indexed along the canonical linear extension; when
// `index_map` is non-null it receives input-position -> final-index.
FinLattice from_order(const std::vector<std::string>& elements,
                      const std::vector<uint8_t>& order,
                      std::vector<int>* index_map = nullptr);

bool is_distributive(const FinLattice& L);

// First triple (x,y,z) in index order with x∧(y∨z) != (x∧y)∨(x∧z), if any.
std::optional<std::array<int, 3>> distributivity_witness(const FinLattice& L);

std::vector<int> principal_filter(const FinLattice& L, int a);

// Order isomorphism A -> B (as index map), optionally also preserving one
// unary operation on each side (supply both tables or neither). Backtracking
// over index order with (cover-degree, depth) signature pruning.
std::optional<std::vector<int>> find_isomorphism(
    const FinLattice& A, const FinLattice& B,
    const std::vector<int>* unary_a = nullptr,
    const std::vector<int>* unary_b = nullptr);

}  // namespace mslat
