#include "gdlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace gdlab {

using nlohmann::json;

namespace {

void expect_fields(const json& j, const std::set<std::string>& required,
                   const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw Error("InputError", "expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!required.count(it.key()) && !optional.count(it.key()))
      throw Error("InputError", "unknown field '" + it.key() + "'");
  for (const auto& k : required)
    if (!j.contains(k)) throw Error("InputError", "missing field '" + k + "'");
}

std::vector<std::string> name_list(const json& j, const char* field) {
  if (!j.is_array()) throw Error("InputError", std::string(field) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error("InputError", std::string(field) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

int index_of_name(const std::vector<std::string>& names, const std::string& s,
                  const char* what) {
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end())
    throw Error("InputError", std::string(what) + ": unknown element '" + s + "'");
  return (int)(it - names.begin());
}

std::vector<std::pair<int, int>> pair_list(const json& j, const std::vector<std::string>& a,
                                           const std::vector<std::string>& b,
                                           const char* field) {
  if (!j.is_array()) throw Error("InputError", std::string(field) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw Error("InputError", std::string(field) + " entries must be name pairs");
    out.emplace_back(index_of_name(a, e[0].get<std::string>(), field),
                     index_of_name(b, e[1].get<std::string>(), field));
  }
  return out;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs,
                   const std::vector<std::string>& a, const std::vector<std::string>& b) {
  json out = json::array();
  for (auto [i, j2] : pairs) out.push_back(json::array({a[i], b[j2]}));
  return out;
}

json wrap(const std::string& kind, json payload) {
  payload["format"] = kFormatVersion;
  payload["kind"] = kind;
  return payload;
}

void check_kind(const json& j, const std::string& kind) {
  if (instance_kind(j) != kind)
    throw Error("InputError", "expected kind '" + kind + "', got '" + instance_kind(j) + "'");
}

}  // namespace

std::string instance_kind(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error("InputError", "missing 'kind' field");
  return j["kind"].get<std::string>();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("InputError", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("InputError", std::string("bad JSON in ") + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("format") || !j["format"].is_number_integer() ||
      j["format"].get<int>() != kFormatVersion)
    throw Error("InputError", "missing or unsupported 'format' field in " + path);
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("InputError", "cannot write " + path);
  out << j.dump(2) << "\n";
}

json lattice_to_json(const FiniteLattice& L) {
  std::vector<std::string> names;
  for (int i = 0; i < L.size(); ++i) names.push_back(L.name(i));
  json j;
  j["elements"] = names;
  j["leq"] = pairs_to_json(L.leq_pairs(), names, names);
  if (L.has_nu()) {
    json nu = json::array();
    for (int i = 0; i < L.size(); ++i) nu.push_back(names[L.nu(i)]);
    j["nu"] = nu;
  }
  return wrap("lattice", std::move(j));
}

FiniteLattice lattice_from_json(const json& j) {
  check_kind(j, "lattice");
  expect_fields(j, {"format", "kind", "elements"}, {"leq", "covers", "nu"});
  auto names = name_list(j["elements"], "elements");
  if (j.contains("leq") == j.contains("covers"))
    throw Error("InputError", "exactly one of 'leq' or 'covers' required");
  std::optional<std::vector<int>> nu;
  if (j.contains("nu")) {
    auto vals = name_list(j["nu"], "nu");
    if (vals.size() != names.size()) throw Error("InputError", "nu must cover every element");
    nu.emplace();
    for (const auto& s : vals) nu->push_back(index_of_name(names, s, "nu"));
  }
  if (j.contains("leq"))
    return FiniteLattice::from_leq_pairs(names, pair_list(j["leq"], names, names, "leq"), nu);
  return FiniteLattice::from_cover_pairs(names, pair_list(j["covers"], names, names, "covers"),
                                         nu);
}

json frame_to_json(const Frame& F) {
  const Polarity& P = F.pol;
  std::vector<std::string> xs, ys;
  for (int x = 0; x < P.nx; ++x) xs.push_back(P.xname(x));
  for (int y = 0; y < P.ny; ++y) ys.push_back(P.yname(y));
  std::vector<std::pair<int, int>> gal, s;
  for (int x = 0; x < P.nx; ++x)
    for (int y = 0; y < P.ny; ++y) {
      if (P.rel(x, y)) gal.emplace_back(x, y);
      if (F.s_rel(y, x)) s.emplace_back(y, x);
    }
  json j;
  j["X"] = xs;
  j["Y"] = ys;
  j["gal"] = pairs_to_json(gal, xs, ys);
  j["S"] = pairs_to_json(s, ys, xs);
  if (F.explicit_r_wedge) j["R_wedge"] = pairs_to_json(*F.explicit_r_wedge, xs, ys);
  return wrap("frame", std::move(j));
}

Frame frame_from_json(const json& j) {
  check_kind(j, "frame");
  expect_fields(j, {"format", "kind", "X", "Y", "gal", "S"}, {"R_wedge"});
  auto xs = name_list(j["X"], "X");
  auto ys = name_list(j["Y"], "Y");
  if (xs.empty() || ys.empty()) throw Error("InputError", "carriers must be nonempty");
  if (xs.size() > 63 || ys.size() > 63) throw Error("InputError", "carrier too large");
  Polarity P = Polarity::make((int)xs.size(), (int)ys.size(),
                              pair_list(j["gal"], xs, ys, "gal"));
  P.xnames = xs;
  P.ynames = ys;
  // S pairs are written (y, x)
  auto s_pairs_yx = pair_list(j["S"], ys, xs, "S");
  std::vector<std::pair<int, int>> s_pairs;
  for (auto [y, x] : s_pairs_yx) s_pairs.emplace_back(y, x);
  Frame F = Frame::make(std::move(P), s_pairs);
  if (j.contains("R_wedge")) F.explicit_r_wedge = pair_list(j["R_wedge"], xs, ys, "R_wedge");
  return F;
}

json hom_to_json(const LatticeHom& h) {
  json j;
  j["source"] = lattice_to_json(h.source);
  j["target"] = lattice_to_json(h.target);
  json m = json::array();
  for (int a = 0; a < h.source.size(); ++a) m.push_back(h.target.name(h.map[a]));
  j["map"] = m;
  return wrap("hom", std::move(j));
}

LatticeHom hom_from_json(const json& j) {
  check_kind(j, "hom");
  expect_fields(j, {"format", "kind", "source", "target", "map"});
  FiniteLattice src = lattice_from_json(j["source"]);
  FiniteLattice tgt = lattice_from_json(j["target"]);
  auto vals = name_list(j["map"], "map");
  std::vector<std::string> tnames;
  for (int i = 0; i < tgt.size(); ++i) tnames.push_back(tgt.name(i));
  std::vector<int> map;
  for (const auto& s : vals) map.push_back(index_of_name(tnames, s, "map"));
  return make_hom(std::move(src), std::move(tgt), std::move(map));
}

json morphism_to_json(const FrameMorphism& m) {
  json j;
  j["source"] = frame_to_json(m.source);
  j["target"] = frame_to_json(m.target);
  json p = json::array(), q = json::array();
  for (int x = 0; x < m.source.pol.nx; ++x) p.push_back(m.target.pol.xname(m.p[x]));
  for (int y = 0; y < m.source.pol.ny; ++y) q.push_back(m.target.pol.yname(m.q[y]));
  j["p"] = p;
  j["q"] = q;
  return wrap("morphism", std::move(j));
}

FrameMorphism morphism_from_json(const json& j) {
  check_kind(j, "morphism");
  expect_fields(j, {"format", "kind", "source", "target", "p", "q"});
  FrameMorphism m;
  m.source = frame_from_json(j["source"]);
  m.target = frame_from_json(j["target"]);
  std::vector<std::string> txs, tys;
  for (int x = 0; x < m.target.pol.nx; ++x) txs.push_back(m.target.pol.xname(x));
  for (int y = 0; y < m.target.pol.ny; ++y) tys.push_back(m.target.pol.yname(y));
  auto ps = name_list(j["p"], "p");
  auto qs = name_list(j["q"], "q");
  if ((int)ps.size() != m.source.pol.nx || (int)qs.size() != m.source.pol.ny)
    throw Error("InputError", "p/q must be total on the source carriers");
  for (const auto& s : ps) m.p.push_back(index_of_name(txs, s, "p"));
  for (const auto& s : qs) m.q.push_back(index_of_name(tys, s, "q"));
  return m;
}

namespace {

json proof_node_to_json(const ProofNode& n) {
  json j;
  j["sequent"] = to_string(n.conclusion);
  j["rule"] = n.rule;
  json prem = json::array();
  for (const auto& c : n.premises) prem.push_back(proof_node_to_json(c));
  if (!prem.empty()) j["premises"] = prem;
  return j;
}

ProofNode proof_node_from_json(const json& j) {
  expect_fields(j, {"sequent", "rule"}, {"premises"});
  if (!j["sequent"].is_string() || !j["rule"].is_string())
    throw Error("InputError", "proof node fields must be strings");
  ProofNode n;
  n.conclusion = parse_sequent(j["sequent"].get<std::string>());
  n.rule = j["rule"].get<std::string>();
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw Error("InputError", "premises must be an array");
    for (const auto& c : j["premises"]) n.premises.push_back(proof_node_from_json(c));
  }
  return n;
}

}  // namespace

json proof_to_json(const ProofFile& p) {
  json j;
  j["tree"] = proof_node_to_json(p.tree);
  json ext;
  ext["name"] = p.extension.name;
  json ax = json::array();
  for (const auto& s : p.extension.axioms) ax.push_back(to_string(s));
  ext["axioms"] = ax;
  j["extension"] = ext;
  return wrap("proof", std::move(j));
}

ProofFile proof_from_json(const json& j) {
  check_kind(j, "proof");
  expect_fields(j, {"format", "kind", "tree"}, {"extension"});
  ProofFile p;
  p.tree = proof_node_from_json(j["tree"]);
  if (j.contains("extension")) {
    expect_fields(j["extension"], {"name", "axioms"});
    p.extension.name = j["extension"]["name"].get<std::string>();
    for (const auto& s : name_list(j["extension"]["axioms"], "axioms"))
      p.extension.axioms.push_back(parse_sequent(s));
  }
  return p;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot_lattice(const FiniteLattice& L) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < L.size(); ++i)
    out << "  n" << i << " [label=" << quote(L.name(i)) << "];\n";
  for (auto [a, b] : L.cover_pairs())
    out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot_frame(const Frame& F) {
  const Polarity& P = F.pol;
  std::ostringstream out;
  out << "digraph frame {\n  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (int x = 0; x < P.nx; ++x)
    out << "  x" << x << " [label=" << quote(P.xname(x)) << "];\n";
  out << "  node [shape=ellipse];\n";
  for (int y = 0; y < P.ny; ++y)
    out << "  y" << y << " [label=" << quote(P.yname(y)) << "];\n";
  for (int x = 0; x < P.nx; ++x)
    for (int y = 0; y < P.ny; ++y) {
      if (P.rel(x, y)) out << "  x" << x << " -> y" << y << " [style=solid];\n";
      if (F.s_rel(y, x)) out << "  y" << y << " -> x" << x << " [style=dashed];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace gdlab
