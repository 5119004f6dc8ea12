#pragma once

#include <iosfwd>
#include <string>

#include "mslat/extension.hpp"

namespace mslat {

// An algebra as read from a file: always a bounded lattice, with the unary
// operation when the file carries one.
struct ParsedAlgebra {
  FinLattice lattice;
  std::optional<MSAlgebra> ms;

  AlgView view() const { return ms ? AlgView(*ms) : AlgView(lattice); }
};

ParsedAlgebra parse_algebra(const std::string& text);
ParsedAlgebra load_algebra(const std::string& path);
std::string serialize_algebra(const FinLattice& L, const MSAlgebra* ms);

Triple parse_triple(const std::string& text);
Triple load_triple(const std::string& path);
std::string serialize_triple(const Triple& t);

// A pair-set file: M (with °), D, and a list of (congruence, congruence)
// pairs given by blocks.
struct ParsedPairSet {
  MSAlgebra M;
  FinLattice D;
  PairSublattice pairs;
};

ParsedPairSet parse_pairset(const std::string& text);
ParsedPairSet load_pairset(const std::string& path);

// Graphviz dot: Hasse diagram, bottom-up. When marks is given, its
// non-singleton blocks become clusters. Centre elements are filled when the
// algebra has °.
std::string emit_dot(AlgView A, const Congruence* marks = nullptr);

// "{x, y, z}" over element names, name order = index order.
std::string format_element_set(const FinLattice& L, const std::vector<int>& elems);
// "{{a,b},{c,d}}": blocks sorted by first name, names lexicographic inside,
// singletons dropped unless `full`.
std::string format_congruence(const FinLattice& L, const Congruence& c,
                              bool full = false);
std::string format_map(const FinLattice& from, const FinLattice& to,
                       const std::vector<int>& f);

}  // namespace mslat
