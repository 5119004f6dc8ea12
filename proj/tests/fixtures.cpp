#include "fixtures.hpp"

#include <stdexcept>

namespace fx {

int ix(const FinLattice& L, const std::string& name) {
  int i = L.index_of(name);
  if (i < 0) throw std::runtime_error("fixture name missing: " + name);
  return i;
}

Congruence blocks_of(const FinLattice& L,
                     const std::vector<std::vector<std::string>>& blocks) {
  std::vector<std::vector<int>> idx;
  for (const auto& b : blocks) {
    std::vector<int> block;
    for (const auto& n : b) block.push_back(ix(L, n));
    idx.push_back(std::move(block));
  }
  return Congruence::from_blocks(L.size(), idx);
}

namespace {

MSAlgebra ms_of(const std::vector<std::string>& elements,
                const std::vector<NamePair>& covers,
                const std::vector<NamePair>& neg_by_name) {
  FinLattice L = from_covers(elements, covers);
  std::vector<int> neg(L.size(), -1);
  for (const auto& [x, y] : neg_by_name) neg[ix(L, x)] = ix(L, y);
  return make_ms(std::move(L), std::move(neg));
}

}  // namespace

MSAlgebra m1() {
  return ms_of({"0", "a", "b", "1"},
               {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
               {{"0", "1"}, {"a", "a"}, {"b", "b"}, {"1", "0"}});
}

MSAlgebra m2() {
  return ms_of(
      {"0", "a", "b", "c", "d", "b°", "c°", "d°", "a°", "1"},
      {{"0", "a"},
       {"a", "b"},
       {"a", "c"},
       {"a", "d"},
       {"b", "b°"},
       {"b", "c°"},
       {"c", "b°"},
       {"c", "d°"},
       {"d", "c°"},
       {"d", "d°"},
       {"b°", "a°"},
       {"c°", "a°"},
       {"d°", "a°"},
       {"a°", "1"}},
      {{"0", "1"},
       {"a", "a°"},
       {"b", "b°"},
       {"c", "c°"},
       {"d", "d°"},
       {"b°", "b"},
       {"c°", "c"},
       {"d°", "d"},
       {"a°", "a"},
       {"1", "0"}});
}

MSAlgebra l1() {
  return ms_of({"(0,0)", "(a,0)", "(b,0)", "(1,0)", "(b,1)", "(1,1)"},
               {{"(0,0)", "(a,0)"},
                {"(0,0)", "(b,0)"},
                {"(a,0)", "(1,0)"},
                {"(b,0)", "(1,0)"},
                {"(b,0)", "(b,1)"},
                {"(1,0)", "(1,1)"},
                {"(b,1)", "(1,1)"}},
               {{"(0,0)", "(1,1)"},
                {"(a,0)", "(a,0)"},
                {"(b,0)", "(b,1)"},
                {"(1,0)", "(0,0)"},
                {"(b,1)", "(b,1)"},
                {"(1,1)", "(0,0)"}});
}

MSAlgebra l2() {
  return ms_of(
      {"(0,0)", "(a,0)", "(b,0)", "(c,0)", "(d,0)", "(b°,0)", "(c°,0)",
       "(d°,0)", "(a°,0)", "(1,0)", "(d,1)", "(c°,1)", "(d°,1)", "(a°,1)",
       "(1,1)"},
      {{"(0,0)", "(a,0)"},   {"(a,0)", "(b,0)"},   {"(a,0)", "(c,0)"},
       {"(a,0)", "(d,0)"},   {"(b,0)", "(b°,0)"},  {"(b,0)", "(c°,0)"},
       {"(c,0)", "(b°,0)"},  {"(c,0)", "(d°,0)"},  {"(d,0)", "(c°,0)"},
       {"(d,0)", "(d°,0)"},  {"(d,0)", "(d,1)"},   {"(b°,0)", "(a°,0)"},
       {"(c°,0)", "(a°,0)"}, {"(c°,0)", "(c°,1)"}, {"(d°,0)", "(a°,0)"},
       {"(d°,0)", "(d°,1)"}, {"(a°,0)", "(1,0)"},  {"(a°,0)", "(a°,1)"},
       {"(1,0)", "(1,1)"},   {"(d,1)", "(c°,1)"},  {"(d,1)", "(d°,1)"},
       {"(c°,1)", "(a°,1)"}, {"(d°,1)", "(a°,1)"}, {"(a°,1)", "(1,1)"}},
      {{"(0,0)", "(1,1)"},
       {"(a,0)", "(a°,1)"},
       {"(b,0)", "(b°,0)"},
       {"(c,0)", "(c°,1)"},
       {"(d,0)", "(d°,1)"},
       {"(b°,0)", "(b,0)"},
       {"(c°,0)", "(c,0)"},
       {"(d°,0)", "(d,1)"},
       {"(a°,0)", "(a,0)"},
       {"(1,0)", "(0,0)"},
       {"(d,1)", "(d°,1)"},
       {"(c°,1)", "(c,0)"},
       {"(d°,1)", "(d,1)"},
       {"(a°,1)", "(a,0)"},
       {"(1,1)", "(0,0)"}});
}

MSAlgebra s3() {
  return ms_of({"(0,0)", "(1,0)", "(1,1)"},
               {{"(0,0)", "(1,0)"}, {"(1,0)", "(1,1)"}},
               {{"(0,0)", "(1,1)"}, {"(1,0)", "(0,0)"}, {"(1,1)", "(0,0)"}});
}

MSAlgebra k3() {
  return ms_of({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}},
               {{"0", "1"}, {"m", "m"}, {"1", "0"}});
}

MSAlgebra boolean2() {
  return ms_of({"0", "1"}, {{"0", "1"}}, {{"0", "1"}, {"1", "0"}});
}

FinLattice chain(int n) {
  std::vector<std::string> names;
  std::vector<NamePair> covers;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
  return from_covers(names, covers);
}

FinLattice grid22() {
  return from_covers({"0", "a", "b", "1"},
                     {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

FinLattice diamond_m3() {
  return from_covers({"0", "x", "y", "z", "1"},
                     {{"0", "x"},
                      {"0", "y"},
                      {"0", "z"},
                      {"x", "1"},
                      {"y", "1"},
                      {"z", "1"}});
}

FinLattice pentagon_n5() {
  return from_covers(
      {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "z"}, {"z", "1"}});
}

Triple l1_triple() {
  MSAlgebra M = m1();
  FinLattice D = chain(2);
  std::vector<int> phi(M.size());
  phi[ix(M.lattice, "0")] = ix(D, "0");
  phi[ix(M.lattice, "a")] = ix(D, "0");
  phi[ix(M.lattice, "b")] = ix(D, "1");
  phi[ix(M.lattice, "1")] = ix(D, "1");
  return validate_triple(std::move(M), std::move(D), std::move(phi));
}

Triple l2_triple() {
  MSAlgebra M = m2();
  FinLattice D = chain(2);
  std::vector<int> phi(M.size());
  for (const char* low : {"0", "a", "b", "c", "b°"})
    phi[ix(M.lattice, low)] = ix(D, "0");
  for (const char* high : {"d", "c°", "d°", "a°", "1"})
    phi[ix(M.lattice, high)] = ix(D, "1");
  return validate_triple(std::move(M), std::move(D), std::move(phi));
}

Congruence l1_theta() {
  MSAlgebra A = l1();
  return blocks_of(A.lattice, {{"(b,0)", "(b,1)"}, {"(1,0)", "(1,1)"}});
}

Congruence m2_theta_prime() {
  MSAlgebra A = m2();
  return blocks_of(A.lattice,
                   {{"a", "c"}, {"b", "b°"}, {"d", "d°"}, {"c°", "a°"}});
}

Congruence l2_theta1() {
  MSAlgebra A = l2();
  return blocks_of(A.lattice, {{"(1,0)", "(1,1)"},
                               {"(a°,0)", "(a°,1)"},
                               {"(c°,0)", "(c°,1)"},
                               {"(d,0)", "(d,1)"},
                               {"(d°,0)", "(d°,1)"}});
}

Congruence l2_theta2() {
  MSAlgebra A = l2();
  return blocks_of(A.lattice, {{"(1,0)", "(1,1)"},
                               {"(a,0)", "(c,0)"},
                               {"(a°,0)", "(a°,1)", "(c°,0)", "(c°,1)"},
                               {"(b,0)", "(b°,0)"},
                               {"(d,0)", "(d,1)", "(d°,0)", "(d°,1)"}});
}

Congruence s3_theta() {
  MSAlgebra A = s3();
  return blocks_of(A.lattice, {{"(1,0)", "(1,1)"}});
}

}  // namespace fx
