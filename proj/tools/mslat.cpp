#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mslat/error.hpp"
#include "mslat/io.hpp"

using namespace mslat;

namespace {

std::string variety_summary(const VarietyFlags& v) {
  std::string s = "ms";
  if (v.de_morgan) s += " de-morgan";
  if (v.kleene) s += " kleene";
  if (v.stone) s += " stone";
  if (v.k2) s += " k2";
  if (v.boolean) s += " boolean";
  if (v.principal_ms) s += " principal";
  return s;
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), "io", "cannot write '" + path + "'");
  out << text;
  out.flush();
  require(static_cast<bool>(out), "io", "cannot write '" + path + "'");
  std::cout << "written: " << path << "\n";
}

void run_check(const std::string& file) {
  if (file.ends_with(".trp")) {
    Triple t = load_triple(file);
    std::cout << "triple: ok\n";
    std::cout << "first component: " << t.M.size() << " elements, "
              << variety_summary(t.M.variety) << "\n";
    std::cout << "second component: " << t.D.size() << " elements\n";
    std::cout << "map: " << format_map(t.M.lattice, t.D, t.phi) << "\n";
    std::cout << "k2-triple: " << (t.k2_triple ? "true" : "false") << "\n";
    std::cout << "s-triple: " << (t.s_triple ? "true" : "false") << "\n";
    std::cout << "constructed elements: " << construct(t).algebra.size() << "\n";
    return;
  }
  if (file.ends_with(".prs")) {
    ParsedPairSet ps = load_pairset(file);
    std::cout << "pair set: ok\n";
    std::cout << "pairs: " << ps.pairs.pairs.size() << "\n";
    std::cout << "first component: " << ps.M.size() << " elements, "
              << variety_summary(ps.M.variety) << "\n";
    std::cout << "second component: " << ps.D.size() << " elements\n";
    return;
  }
  ParsedAlgebra pa = load_algebra(file);
  const FinLattice& L = pa.lattice;
  std::cout << "elements: " << L.size() << "\n";
  std::cout << "bounds: " << L.name(L.bottom) << ", " << L.name(L.top) << "\n";
  if (!pa.ms) {
    std::cout << "distributive: " << (is_distributive(L) ? "true" : "false")
              << "\n";
    return;
  }
  const MSAlgebra& A = *pa.ms;
  std::cout << "variety: " << variety_summary(A.variety) << "\n";
  Substructures s = substructures(A);
  std::cout << "closed: " << format_element_set(L, s.closed) << "\n";
  std::cout << "dense: " << format_element_set(L, s.dense) << "\n";
  std::cout << "centre: " << format_element_set(L, s.boolean_center) << "\n";
  std::cout << "stone-part: " << format_element_set(L, s.stone_part) << "\n";
  std::cout << "vee: " << format_element_set(L, s.vee) << "\n";
  std::cout << "wedge: " << format_element_set(L, s.wedge) << "\n";
  PrincipalityReport rep = is_principal_ms(A);
  if (rep.principal)
    std::cout << "principal: true (d = " << L.name(rep.least_dense) << ")\n";
  else
    std::cout << "principal: false (" << rep.failed << " fails at '"
              << L.name(rep.witness) << "')\n";
}

void run_con(const std::string& file, bool oracle, int max_oracle, bool full) {
  ParsedAlgebra pa = load_algebra(file);
  ConLattice cl = all_congruences(pa.view());
  std::cout << "congruences: " << cl.size() << "\n";
  for (int i = 0; i < cl.size(); ++i)
    std::cout << i << ": " << format_congruence(pa.lattice, cl.cons[i], full)
              << "\n";
  if (oracle) {
    std::vector<Congruence> brute =
        brute_force_congruences(pa.view(), max_oracle);
    check_theorem(brute == cl.cons,
                  "brute-force enumeration disagrees with the closure");
    std::cout << "oracle: agreed\n";
  }
}

void run_construct(const std::string& file, const std::string& out) {
  Triple t = load_triple(file);
  ConstructedAlgebra ca = construct(t);
  std::string text = serialize_algebra(ca.algebra.lattice, &ca.algebra);
  if (!out.empty()) std::cout << "elements: " << ca.algebra.size() << "\n";
  write_out(text, out);
}

void run_pairs(const std::string& file, bool full) {
  ParsedAlgebra pa = load_algebra(file);
  require(pa.ms.has_value(), "semantic", "'pairs' needs an algebra with °");
  PairLattice pl = pairs_of(*pa.ms);
  std::cout << "closed congruences: " << pl.con_closed.size() << "\n";
  std::cout << "dense congruences: " << pl.con_dense.size() << "\n";
  std::cout << "pairs: " << pl.pairs.size() << "\n";
  for (size_t k = 0; k < pl.pairs.size(); ++k) {
    auto [ci, dj] = pl.pairs[k];
    std::cout << k << ": ("
              << format_congruence(pl.closed.lattice, pl.con_closed.cons[ci],
                                   full)
              << ", "
              << format_congruence(pl.dense.lattice, pl.con_dense.cons[dj],
                                   full)
              << ") -> "
              << format_congruence(pa.lattice, pl.con_all.cons[pl.to_con[k]],
                                   full)
              << "\n";
  }
}

void run_perfect(const std::string& file, bool stone,
                 const std::vector<std::string>& sub, bool full) {
  ParsedAlgebra pa = load_algebra(file);
  require(pa.ms.has_value(), "semantic", "'perfect' needs an algebra with °");
  require(stone == sub.empty(), "semantic",
          "choose exactly one of --stone or --sub");
  const MSAlgebra& A = *pa.ms;
  SubAlgebra S;
  if (stone) {
    S = stone_subalgebra(A);
  } else {
    std::vector<int> elems;
    for (const std::string& n : sub) {
      int x = A.lattice.index_of(n);
      require(x >= 0, "semantic", "unknown element '" + n + "'");
      elems.push_back(x);
    }
    S = make_subalgebra(A, std::move(elems));
  }
  std::cout << "subalgebra: " << format_element_set(A.lattice, S.carrier)
            << "\n";
  ExtensionReport r = is_perfect_extension(A, S);
  std::cout << "congruences of subalgebra: " << r.sub_congruences.size()
            << "\n";
  for (int k = 0; k < r.sub_congruences.size(); ++k) {
    std::cout << k << ": "
              << format_congruence(S.lattice, r.sub_congruences.cons[k], full)
              << " extensions: " << r.extensions[k].size() << "\n";
    for (const Congruence& e : r.extensions[k])
      std::cout << "  " << format_congruence(A.lattice, e, full) << "\n";
  }
  std::cout << "cep: " << (r.cep ? "true" : "false") << "\n";
  std::cout << "perfect: " << (r.perfect ? "true" : "false") << "\n";
}

void run_represent(const std::string& file) {
  ParsedPairSet ps = load_pairset(file);
  RepresentabilityReport r = check_representability_conditions(ps.pairs);
  if (r.representable()) {
    std::cout << "representable: phi=" << format_map(ps.M.lattice, ps.D, *r.phi)
              << "\n";
  } else if (!r.join_closed) {
    auto [k, l] = *r.join_witness;
    std::cout << "not representable: condition(1) witness=(pair " << k
              << ", pair " << l << ")\n";
  } else if (!r.down_closed) {
    auto [k, a] = *r.down_witness;
    auto [ci, dj] = ps.pairs.pairs[k];
    std::cout << "not representable: condition(2) witness=(("
              << format_congruence(ps.M.lattice, ps.pairs.con_m.cons[ci])
              << ","
              << format_congruence(ps.D, ps.pairs.con_d.cons[dj]) << "),"
              << format_congruence(ps.M.lattice, ps.pairs.con_m.cons[a])
              << ")\n";
  } else {
    std::cout << "not representable: condition(3)\n";
  }
  if (r.centre_variant_ran) std::cout << "centre criterion: consistent\n";
}

void run_dot(const std::string& file, int con_index, const std::string& out) {
  ParsedAlgebra pa = load_algebra(file);
  Congruence picked;
  const Congruence* marks = nullptr;
  if (con_index >= 0) {
    ConLattice cl = all_congruences(pa.view());
    require(con_index < cl.size(), "semantic", "congruence index out of range");
    picked = cl.cons[con_index];
    marks = &picked;
  }
  write_out(emit_dot(pa.view(), marks), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite bounded lattices with a dual unary operation"};
  app.require_subcommand(1);

  std::string file, out;
  bool oracle = false, full = false, stone = false;
  int max_oracle = 10, con_index = -1;
  std::vector<std::string> sub;

  CLI::App* c_check = app.add_subcommand("check", "validate a file and summarize it");
  c_check->add_option("file", file)->required();
  c_check->callback([&] { run_check(file); });

  CLI::App* c_con = app.add_subcommand("con", "list all congruences");
  c_con->add_option("file", file)->required();
  c_con->add_flag("--oracle", oracle, "compare against brute-force enumeration");
  c_con->add_option("--max-oracle", max_oracle, "brute-force size cap");
  c_con->add_flag("--full", full, "print singleton blocks too");
  c_con->callback([&] { run_con(file, oracle, max_oracle, full); });

  CLI::App* c_cons = app.add_subcommand("construct", "build the algebra of a triple");
  c_cons->add_option("file", file)->required();
  c_cons->add_option("-o,--out", out, "write the algebra here");
  c_cons->callback([&] { run_construct(file, out); });

  CLI::App* c_pairs = app.add_subcommand("pairs", "congruence pairs and the bijection with Con");
  c_pairs->add_option("file", file)->required();
  c_pairs->add_flag("--full", full, "print singleton blocks too");
  c_pairs->callback([&] { run_pairs(file, full); });

  CLI::App* c_perf = app.add_subcommand("perfect", "extension report over a subalgebra");
  c_perf->add_option("file", file)->required();
  c_perf->add_flag("--stone", stone, "use the greatest Stone subalgebra");
  c_perf->add_option("--sub", sub, "carrier of the subalgebra, by name");
  c_perf->add_flag("--full", full, "print singleton blocks too");
  c_perf->callback([&] { run_perfect(file, stone, sub, full); });

  CLI::App* c_rep = app.add_subcommand("represent", "decide whether a pair set is realizable");
  c_rep->add_option("file", file)->required();
  c_rep->callback([&] { run_represent(file); });

  CLI::App* c_dot = app.add_subcommand("dot", "emit a Hasse diagram");
  c_dot->add_option("file", file)->required();
  c_dot->add_option("--congruence", con_index, "cluster the blocks of this congruence");
  c_dot->add_option("-o,--out", out, "write the diagram here");
  c_dot->callback([&] { run_dot(file, con_index, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error:usage: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error:" << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error:theorem: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
