#include "mslat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mslat/error.hpp"

namespace mslat {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("parse", e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "io", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_keys(const json& j, const std::vector<std::string>& allowed,
                const std::string& what) {
  require(j.is_object(), "semantic", what + " must be an object");
  for (const auto& item : j.items())
    require(std::find(allowed.begin(), allowed.end(), item.key()) !=
                allowed.end(),
            "semantic", "unknown key '" + item.key() + "' in " + what);
}

ParsedAlgebra algebra_from_json(const json& j, bool allow_neg,
                                const std::string& what) {
  std::vector<std::string> allowed = {"elements", "covers"};
  if (allow_neg) allowed.push_back("neg");
  check_keys(j, allowed, what);
  require(j.contains("elements") && j.contains("covers"), "semantic",
          what + " needs 'elements' and 'covers'");

  require(j["elements"].is_array(), "semantic",
          "'elements' must be an array in " + what);
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    require(e.is_string(), "semantic", "element names must be strings");
    names.push_back(e.get<std::string>());
  }

  require(j["covers"].is_array(), "semantic",
          "'covers' must be an array in " + what);
  std::vector<NamePair> covers;
  for (const auto& c : j["covers"]) {
    require(c.is_array() && c.size() == 2 && c[0].is_string() &&
                c[1].is_string(),
            "semantic", "each cover must be a pair of names");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }

  ParsedAlgebra pa;
  pa.lattice = from_covers(names, covers);
  if (j.contains("neg")) {
    const json& jn = j["neg"];
    require(jn.is_object(), "semantic", "'neg' must be an object");
    std::vector<int> neg(pa.lattice.size(), -1);
    for (const auto& item : jn.items()) {
      int x = pa.lattice.index_of(item.key());
      require(x >= 0, "semantic", "unknown element '" + item.key() + "' in 'neg'");
      require(neg[x] < 0, "semantic", "duplicate 'neg' entry for '" + item.key() + "'");
      require(item.value().is_string(), "semantic", "'neg' values must be names");
      int y = pa.lattice.index_of(item.value().get<std::string>());
      require(y >= 0, "semantic",
              "unknown element '" + item.value().get<std::string>() + "' in 'neg'");
      neg[x] = y;
    }
    for (int x = 0; x < pa.lattice.size(); ++x)
      require(neg[x] >= 0, "semantic",
              "'neg' misses '" + pa.lattice.name(x) + "'");
    pa.ms = make_ms(pa.lattice, std::move(neg));
  }
  return pa;
}

json algebra_to_json(const FinLattice& L, const MSAlgebra* ms) {
  json j;
  j["elements"] = json::array();
  for (int i = 0; i < L.size(); ++i) j["elements"].push_back(L.name(i));
  j["covers"] = json::array();
  for (auto [a, b] : L.poset.covers)
    j["covers"].push_back(json::array({L.name(a), L.name(b)}));
  if (ms) {
    json jn = json::object();
    for (int i = 0; i < L.size(); ++i) jn[L.name(i)] = L.name(ms->star(i));
    j["neg"] = std::move(jn);
  }
  return j;
}

Congruence congruence_from_json(const json& j, const FinLattice& L,
                                const std::string& what) {
  require(j.is_array(), "semantic", what + " must be an array of blocks");
  std::vector<std::vector<int>> blocks;
  for (const auto& jb : j) {
    require(jb.is_array(), "semantic", "each block must be an array of names");
    std::vector<int> block;
    for (const auto& e : jb) {
      require(e.is_string(), "semantic", "block entries must be names");
      int x = L.index_of(e.get<std::string>());
      require(x >= 0, "semantic",
              "unknown element '" + e.get<std::string>() + "' in " + what);
      block.push_back(x);
    }
    blocks.push_back(std::move(block));
  }
  return Congruence::from_blocks(L.size(), blocks);
}

}  // namespace

ParsedAlgebra parse_algebra(const std::string& text) {
  return algebra_from_json(parse_json(text), true, "the algebra");
}

ParsedAlgebra load_algebra(const std::string& path) {
  return parse_algebra(read_file(path));
}

std::string serialize_algebra(const FinLattice& L, const MSAlgebra* ms) {
  return algebra_to_json(L, ms).dump(2) + "\n";
}

Triple parse_triple(const std::string& text) {
  json j = parse_json(text);
  check_keys(j, {"M", "D", "phi"}, "the triple");
  require(j.contains("M") && j.contains("D") && j.contains("phi"), "semantic",
          "the triple needs 'M', 'D' and 'phi'");
  ParsedAlgebra M = algebra_from_json(j["M"], true, "'M'");
  require(M.ms.has_value(), "semantic", "'M' needs a ° table");
  ParsedAlgebra D = algebra_from_json(j["D"], false, "'D'");

  const json& jp = j["phi"];
  require(jp.is_object(), "semantic", "'phi' must be an object");
  std::vector<int> phi(M.lattice.size(), -1);
  for (const auto& item : jp.items()) {
    int x = M.lattice.index_of(item.key());
    require(x >= 0, "semantic", "unknown element '" + item.key() + "' in 'phi'");
    require(phi[x] < 0, "semantic", "duplicate 'phi' entry for '" + item.key() + "'");
    require(item.value().is_string(), "semantic", "'phi' values must be names");
    int y = D.lattice.index_of(item.value().get<std::string>());
    require(y >= 0, "semantic",
            "unknown element '" + item.value().get<std::string>() + "' in 'phi'");
    phi[x] = y;
  }
  for (int x = 0; x < M.lattice.size(); ++x)
    require(phi[x] >= 0, "semantic", "'phi' misses '" + M.lattice.name(x) + "'");

  return validate_triple(std::move(*M.ms), std::move(D.lattice), std::move(phi));
}

Triple load_triple(const std::string& path) {
  return parse_triple(read_file(path));
}

std::string serialize_triple(const Triple& t) {
  json j;
  j["M"] = algebra_to_json(t.M.lattice, &t.M);
  j["D"] = algebra_to_json(t.D, nullptr);
  json jp = json::object();
  for (int x = 0; x < t.M.size(); ++x)
    jp[t.M.name(x)] = t.D.name(t.phi[x]);
  j["phi"] = std::move(jp);
  return j.dump(2) + "\n";
}

ParsedPairSet parse_pairset(const std::string& text) {
  json j = parse_json(text);
  check_keys(j, {"M", "D", "pairs"}, "the pair set");
  require(j.contains("M") && j.contains("D") && j.contains("pairs"), "semantic",
          "the pair set needs 'M', 'D' and 'pairs'");
  ParsedAlgebra M = algebra_from_json(j["M"], true, "'M'");
  require(M.ms.has_value(), "semantic", "'M' needs a ° table");
  ParsedAlgebra D = algebra_from_json(j["D"], false, "'D'");

  ConLattice cm = all_congruences(*M.ms);
  ConLattice cd = all_congruences(D.lattice);

  require(j["pairs"].is_array(), "semantic", "'pairs' must be an array");
  std::vector<std::pair<int, int>> pairs;
  int k = 0;
  for (const auto& jp : j["pairs"]) {
    require(jp.is_array() && jp.size() == 2, "semantic",
            "each pair must hold two partitions");
    std::string where = "pair " + std::to_string(k);
    int ci = cm.index_of(congruence_from_json(jp[0], M.lattice, where));
    require(ci >= 0, "semantic",
            where + ": first partition is not a congruence of M");
    int dj = cd.index_of(congruence_from_json(jp[1], D.lattice, where));
    require(dj >= 0, "semantic",
            where + ": second partition is not a congruence of D");
    pairs.emplace_back(ci, dj);
    ++k;
  }

  ParsedPairSet out{*M.ms, D.lattice, {}};
  out.pairs = make_pair_sublattice(*M.ms, D.lattice, std::move(pairs));
  return out;
}

ParsedPairSet load_pairset(const std::string& path) {
  return parse_pairset(read_file(path));
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string emit_dot(AlgView A, const Congruence* marks) {
  const FinLattice& L = *A.lat;
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";

  auto node_line = [&](int i, const std::string& indent) {
    os << indent << "n" << i << " [label=\"" << dot_escape(L.name(i)) << "\"";
    if (A.has_neg() && L.join(i, (*A.neg)[i]) == L.top) os << ", style=filled";
    os << "];\n";
  };

  std::vector<uint8_t> clustered(L.size(), 0);
  if (marks) {
    for (const auto& block : marks->block_list()) {
      if (block.size() < 2) continue;
      os << "  subgraph cluster_" << block.front() << " {\n";
      for (int i : block) {
        node_line(i, "    ");
        clustered[i] = 1;
      }
      os << "  }\n";
    }
  }
  for (int i = 0; i < L.size(); ++i)
    if (!clustered[i]) node_line(i, "  ");
  for (auto [a, b] : L.poset.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string format_element_set(const FinLattice& L,
                               const std::vector<int>& elems) {
  std::string out = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += L.name(elems[i]);
  }
  return out + "}";
}

std::string format_congruence(const FinLattice& L, const Congruence& c,
                              bool full) {
  std::vector<std::vector<std::string>> blocks;
  for (const auto& block : c.block_list()) {
    if (block.size() < 2 && !full) continue;
    std::vector<std::string> names;
    for (int i : block) names.push_back(L.name(i));
    std::sort(names.begin(), names.end());
    blocks.push_back(std::move(names));
  }
  std::sort(blocks.begin(), blocks.end());
  std::string out = "{";
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ",";
    out += "{";
    for (size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ",";
      out += blocks[b][i];
    }
    out += "}";
  }
  return out + "}";
}

std::string format_map(const FinLattice& from, const FinLattice& to,
                       const std::vector<int>& f) {
  std::string out = "{";
  for (int x = 0; x < from.size(); ++x) {
    if (x) out += ", ";
    out += from.name(x) + "->" + to.name(f[x]);
  }
  return out + "}";
}

}  // namespace mslat
