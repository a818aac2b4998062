#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gdlab/duality.hpp"
#include "gdlab/frame.hpp"
#include "gdlab/lattice.hpp"
#include "gdlab/logic.hpp"

namespace gdlab {

inline constexpr int kFormatVersion = 1;

// All instance files are {"format": 1, "kind": ..., ...payload}; unknown
// fields are rejected. Loaders throw Error("InputError", ...).

nlohmann::json lattice_to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const nlohmann::json& j);

nlohmann::json frame_to_json(const Frame& F);
Frame frame_from_json(const nlohmann::json& j);

nlohmann::json hom_to_json(const LatticeHom& h);
LatticeHom hom_from_json(const nlohmann::json& j);

nlohmann::json morphism_to_json(const FrameMorphism& m);
FrameMorphism morphism_from_json(const nlohmann::json& j);

struct ProofFile {
  ProofNode tree;
  LogicExtension extension;
};
nlohmann::json proof_to_json(const ProofFile& p);
ProofFile proof_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);      // parse + format check
void save_json_file(const std::string& path, const nlohmann::json& j);
std::string instance_kind(const nlohmann::json& j);

std::string export_dot_lattice(const FiniteLattice& L);  // Hasse, cover edges only
std::string export_dot_frame(const Frame& F);            // bipartite, gal + S edges

}  // namespace gdlab
