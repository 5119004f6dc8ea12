#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "mslat/error.hpp"
#include "oracles.hpp"

using namespace mslat;

namespace {

template <typename F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

std::vector<int> neg_by_name(const FinLattice& L,
                             const std::vector<std::pair<std::string, std::string>>& map) {
  std::vector<int> neg(static_cast<size_t>(L.size()), -1);
  for (const auto& [from, to] : map)
    neg[static_cast<size_t>(fx::ix(L, from))] = fx::ix(L, to);
  return neg;
}

// x∧x° = x°°∧x° everywhere.
bool holds_ms6(const MSAlgebra& A) {
  for (int x = 0; x < A.size(); ++x)
    if (A.lattice.meet(x, A.star(x)) !=
        A.lattice.meet(A.star(A.star(x)), A.star(x)))
      return false;
  return true;
}

}  // namespace

TEST_CASE("unary tables violating the axioms are rejected") {
  // 1° must be 0.
  CHECK(error_kind([] {
          make_ms(fx::chain(2), {0, 1});
        }) == "AxiomViolation");
  // x must lie below x°°: here 1°° = 0.
  CHECK(error_kind([] {
          make_ms(fx::chain(2), {0, 0});
        }) == "AxiomViolation");
  // (a∧b)° = 1 but a°∨b° = a.
  CHECK(error_kind([] {
          FinLattice g = fx::grid22();
          return make_ms(g, neg_by_name(g, {{"0", "1"}, {"1", "0"}, {"a", "a"}, {"b", "a"}}));
        }) == "AxiomViolation");
  // Non-distributive carrier is refused before the axioms.
  CHECK(error_kind([] {
          FinLattice d = fx::diamond_m3();
          std::vector<int> neg(static_cast<size_t>(d.size()));
          for (int x = 0; x < d.size(); ++x) neg[static_cast<size_t>(x)] = x;
          neg[static_cast<size_t>(d.bottom)] = d.top;
          neg[static_cast<size_t>(d.top)] = d.bottom;
          return make_ms(std::move(d), std::move(neg));
        }) == "NotDistributive");
}

TEST_CASE("derived laws hold in every pool algebra") {
  std::vector<MSAlgebra> all = gen::de_morgan_pool();
  all.push_back(fx::s3());
  all.push_back(fx::l1());
  all.push_back(fx::l2());
  all.push_back(fx::m2());
  for (const MSAlgebra& A : all) {
    CAPTURE(A.size());
    CHECK(A.star(A.lattice.bottom) == A.lattice.top);
    CHECK(A.star(A.lattice.top) == A.lattice.bottom);
    for (int x = 0; x < A.size(); ++x) {
      CHECK(A.lattice.leq(x, A.star(A.star(x))));
      CHECK(A.star(A.star(A.star(x))) == A.star(x));
      for (int y = 0; y < A.size(); ++y) {
        if (A.lattice.leq(x, y)) CHECK(A.lattice.leq(A.star(y), A.star(x)));
        CHECK(A.star(A.lattice.meet(x, y)) ==
              A.lattice.join(A.star(x), A.star(y)));
        CHECK(A.star(A.lattice.join(x, y)) ==
              A.lattice.meet(A.star(x), A.star(y)));
      }
    }
  }
}

TEST_CASE("variety flags of the named algebras") {
  VarietyFlags b = fx::boolean2().variety;
  CHECK(b.boolean);
  CHECK(b.stone);
  CHECK(b.k2);
  CHECK(b.kleene);
  CHECK(b.de_morgan);
  CHECK(b.principal_ms);

  VarietyFlags k = fx::k3().variety;
  CHECK(!k.boolean);
  CHECK(!k.stone);
  CHECK(k.k2);
  CHECK(k.kleene);
  CHECK(k.de_morgan);
  CHECK(k.principal_ms);

  VarietyFlags s = fx::s3().variety;
  CHECK(!s.boolean);
  CHECK(s.stone);
  CHECK(s.k2);
  CHECK(!s.kleene);
  CHECK(!s.de_morgan);
  CHECK(s.principal_ms);

  VarietyFlags m = fx::m1().variety;
  CHECK(m.de_morgan);
  CHECK(!m.kleene);
  CHECK(!m.k2);
  CHECK(!m.stone);
  CHECK(!m.boolean);
  CHECK(m.principal_ms);

  CHECK(fx::m2().variety.de_morgan);
  CHECK(!fx::m2().variety.kleene);
  CHECK(fx::m2().variety.principal_ms);

  VarietyFlags l1 = fx::l1().variety;
  CHECK(!l1.de_morgan);
  CHECK(!l1.kleene);
  CHECK(!l1.stone);
  CHECK(l1.principal_ms);

  CHECK(!fx::l2().variety.de_morgan);
  CHECK(fx::l2().variety.principal_ms);
}

TEST_CASE("variety implications hold across the pools") {
  std::vector<MSAlgebra> all = gen::de_morgan_pool();
  all.push_back(fx::s3());
  all.push_back(fx::l1());
  all.push_back(fx::l2());
  all.push_back(fx::m2());
  for (const gen::TripleCase& c : gen::principal_triples())
    all.push_back(c.ca.algebra);
  for (const MSAlgebra& A : all) {
    CAPTURE(A.size());
    const VarietyFlags& v = A.variety;
    if (v.boolean) CHECK(v.stone);
    if (v.stone) CHECK(v.k2);
    if (v.kleene) CHECK(v.k2);
    if (v.kleene) CHECK(v.de_morgan);
    // k2 is exactly "no x∧x° ≰ y∨y° witness" plus x∧x° = x°°∧x°.
    CHECK(v.k2 == (!ms5_witness(A).has_value() && holds_ms6(A)));
    if (v.de_morgan) {
      for (int x = 0; x < A.size(); ++x) CHECK(A.star(A.star(x)) == x);
      CHECK(holds_ms6(A));
      CHECK(v.kleene == !ms5_witness(A).has_value());
    }
    if (v.stone)
      for (int x = 0; x < A.size(); ++x)
        CHECK(A.lattice.meet(x, A.star(x)) == A.lattice.bottom);
    if (v.boolean)
      for (int x = 0; x < A.size(); ++x)
        CHECK(A.lattice.join(x, A.star(x)) == A.lattice.top);
  }
}

TEST_CASE("first failing pair of the chain inequality") {
  auto w = ms5_witness(fx::m1());
  REQUIRE(w.has_value());
  MSAlgebra m = fx::m1();
  auto [x, y] = *w;
  CHECK(!m.lattice.leq(m.lattice.meet(x, m.star(x)),
                       m.lattice.join(y, m.star(y))));
  CHECK(!ms5_witness(fx::k3()).has_value());
  CHECK(ms5_witness(fx::m2()).has_value());
}

TEST_CASE("substructures of the four-element de Morgan square") {
  MSAlgebra m = fx::m1();
  Substructures s = substructures(m);
  int a = fx::ix(m.lattice, "a"), b = fx::ix(m.lattice, "b");
  CHECK(s.closed == std::vector<int>{0, a, b, 3});
  CHECK(s.dense == std::vector<int>{3});
  CHECK(s.smallest_dense == 3);
  CHECK(s.boolean_center == std::vector<int>{0, 3});
  CHECK(s.stone_part == std::vector<int>{0, 3});
  CHECK(s.vee == std::vector<int>{a, b, 3});
  CHECK(s.wedge == std::vector<int>{0, a, b});
}

TEST_CASE("substructures of the three-element Stone chain") {
  MSAlgebra s3 = fx::s3();
  Substructures s = substructures(s3);
  CHECK(s.closed == std::vector<int>{0, 2});
  CHECK(s.dense == std::vector<int>{1, 2});
  CHECK(s.smallest_dense == 1);
  CHECK(s.boolean_center == std::vector<int>{0, 2});
  CHECK(s.stone_part == std::vector<int>{0, 1, 2});
  CHECK(s.vee == std::vector<int>{1, 2});
  CHECK(s.wedge == std::vector<int>{0});
}

TEST_CASE("substructure identities across the pools") {
  std::vector<MSAlgebra> all = gen::de_morgan_pool();
  all.push_back(fx::s3());
  all.push_back(fx::l1());
  all.push_back(fx::l2());
  all.push_back(fx::m2());
  for (const MSAlgebra& A : all) {
    CAPTURE(A.size());
    Substructures s = substructures(A);
    // The closed set is the image of °.
    std::set<int> image;
    for (int x = 0; x < A.size(); ++x) image.insert(A.star(x));
    CHECK(std::vector<int>(image.begin(), image.end()) == s.closed);
    // Flag-level characterizations.
    CHECK(A.variety.de_morgan == (static_cast<int>(s.closed.size()) == A.size()));
    CHECK(A.variety.stone == (s.wedge == std::vector<int>{A.lattice.bottom}));
    CHECK(A.variety.boolean ==
          (static_cast<int>(s.boolean_center.size()) == A.size()));
    if (A.variety.stone) {
      CHECK(s.boolean_center == s.closed);
      CHECK(static_cast<int>(s.stone_part.size()) == A.size());
    }
    // The dense filters of the algebra and of its greatest Stone subalgebra
    // coincide, and the centre is the closed part of that subalgebra.
    SubAlgebra ls = stone_subalgebra(A);
    REQUIRE(ls.ms.has_value());
    Substructures ss = substructures(*ls.ms);
    std::vector<int> sub_dense, sub_closed;
    for (int p : ss.dense) sub_dense.push_back(ls.parent_of(p));
    for (int p : ss.closed) sub_closed.push_back(ls.parent_of(p));
    CHECK(sub_dense == s.dense);
    CHECK(sub_closed == s.boolean_center);
  }
}

TEST_CASE("principality holds in every pool algebra and transfers down") {
  std::vector<MSAlgebra> all = gen::de_morgan_pool();
  all.push_back(fx::s3());
  all.push_back(fx::l1());
  all.push_back(fx::l2());
  for (const MSAlgebra& A : all) {
    PrincipalityReport r = is_principal_ms(A);
    CHECK(r.principal);
    CHECK(r.least_dense == substructures(A).smallest_dense);
    CHECK(oracle::principal_by_definition(A.lattice, A.neg));
    // The greatest Stone subalgebra of a principal algebra is principal.
    SubAlgebra ls = stone_subalgebra(A);
    CHECK(is_principal_ms(*ls.ms).principal);
  }
}

TEST_CASE("the four-element chain carries the smallest non-principal table") {
  // No algebra on at most three elements fails principality.
  for (int n = 1; n <= 3; ++n) {
    FinLattice c = fx::chain(n);
    for (const std::vector<int>& neg : oracle::all_negations(c)) {
      MSAlgebra A = make_ms(c, neg);
      CHECK(is_principal_ms(A).principal);
      CHECK(oracle::principal_by_definition(c, neg));
    }
  }
  // On four elements the chain with a° = b° = b fails, and the report and
  // the oracle agree on every table of both four-element lattices.
  FinLattice c4 = fx::chain(4);
  std::vector<int> bad = neg_by_name(
      c4, {{"0", "3"}, {"1", "2"}, {"2", "2"}, {"3", "0"}});
  MSAlgebra worst = make_ms(c4, bad);
  PrincipalityReport r = is_principal_ms(worst);
  CHECK(!r.principal);
  CHECK(r.failed == "decomposition");
  CHECK(worst.name(r.witness) == "1");
  bool found_violation = false;
  FinLattice g22 = fx::grid22();
  for (const FinLattice* L : {&c4, &g22}) {
    for (const std::vector<int>& neg : oracle::all_negations(*L)) {
      MSAlgebra A = make_ms(*L, neg);
      bool direct = oracle::principal_by_definition(*L, neg);
      CHECK(is_principal_ms(A).principal == direct);
      if (!direct) found_violation = true;
    }
  }
  CHECK(found_violation);
}

TEST_CASE("subalgebras require closure and the bounds") {
  MSAlgebra m = fx::m1();
  int a = fx::ix(m.lattice, "a"), b = fx::ix(m.lattice, "b");
  SubAlgebra s = make_subalgebra(m, {0, a, 3});
  CHECK(s.size() == 3);
  REQUIRE(s.ms.has_value());
  CHECK(s.ms->star(s.local_of[static_cast<size_t>(a)]) ==
        s.local_of[static_cast<size_t>(a)]);
  CHECK(error_kind([&] { make_subalgebra(m, {0, a, b}); }) == "NotASubalgebra");
  CHECK(error_kind([&] { make_subalgebra(m, {a, 3}); }) == "NotASubalgebra");
  CHECK(error_kind([&] {
          make_sublattice(fx::grid22(), {fx::ix(fx::grid22(), "a"),
                                         fx::ix(fx::grid22(), "b")});
        }) == "NotASubalgebra");
  SubAlgebra lat = make_sublattice(m.lattice, {0, a, 3});
  CHECK(!lat.ms.has_value());
  // A °-closed subset missing ° closure.
  MSAlgebra s3 = fx::s3();
  CHECK(error_kind([&] { make_subalgebra(s3, {0, 1}); }) == "NotASubalgebra");
}

TEST_CASE("cone of a fixed point") {
  MSAlgebra k = fx::k3();
  SubAlgebra all = cone(k, fx::ix(k.lattice, "m"));
  CHECK(all.size() == 3);
  MSAlgebra m = fx::m1();
  SubAlgebra c = cone(m, fx::ix(m.lattice, "a"));
  CHECK(c.size() == 3);
  CHECK(error_kind([&] {
          MSAlgebra s3 = fx::s3();
          cone(s3, 1);
        }) == "NotFixedPoint");
}

TEST_CASE("unary-preserving isomorphism search") {
  MSAlgebra named = make_ms(
      from_covers({"bot", "p", "q", "top"},
                  {{"bot", "p"}, {"bot", "q"}, {"p", "top"}, {"q", "top"}}),
      [] {
        return std::vector<int>{3, 1, 2, 0};
      }());
  CHECK(find_ms_isomorphism(named, fx::m1()).has_value());
  MSAlgebra swapped = make_ms(fx::grid22(), neg_by_name(fx::grid22(),
                                                        {{"0", "1"},
                                                         {"1", "0"},
                                                         {"a", "b"},
                                                         {"b", "a"}}));
  CHECK(!find_ms_isomorphism(swapped, fx::m1()).has_value());
  CHECK(!find_ms_isomorphism(fx::k3(), fx::s3()).has_value());
  auto self = find_ms_isomorphism(fx::l2(), fx::l2());
  REQUIRE(self.has_value());
}
