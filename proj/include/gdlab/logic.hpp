#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdlab/complex_algebra.hpp"
#include "gdlab/frame.hpp"
#include "gdlab/lattice.hpp"

namespace gdlab {

struct Formula;
using Fml = std::shared_ptr<const Formula>;

struct Formula {
  enum Kind { Var, Top, Bot, And, Or, Not } kind;
  std::string var;  // Kind::Var only
  Fml a, b;         // children (Not uses a)
};

Fml f_var(std::string name);
Fml f_top();
Fml f_bot();
Fml f_and(Fml a, Fml b);
Fml f_or(Fml a, Fml b);
Fml f_not(Fml a);

bool equal(const Fml& a, const Fml& b);
std::string to_string(const Fml& f);
std::vector<std::string> variables_of(const Fml& f);

struct Sequent {
  Fml left, right;
};
std::string to_string(const Sequent& s);

// grammar: ~ binds tightest, then &, then |; & and | left-associative;
// T / F constants; identifiers are variables; sequents use |-
Fml parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

// stable / costable pair with the invariant co = prime_x(ext) verified at
// every node of the recursion
struct Interp {
  Bits ext;  // stable subset of X
  Bits co;   // costable subset of Y
};
Interp interpret(const Frame& F, const std::map<std::string, Bits>& v, const Fml& f);

struct AlgebraVerdict {
  bool valid = true;
  std::vector<std::pair<std::string, int>> witness;  // variable -> element
};
AlgebraVerdict algebra_verdict(const FiniteLattice& L, const Sequent& s);
bool algebra_valid(const FiniteLattice& L, const Sequent& s);

struct FrameVerdict {
  bool valid = true;
  std::vector<std::pair<std::string, Bits>> witness;  // variable -> stable set
};
FrameVerdict frame_verdict(const Frame& F, const Sequent& s);
bool frame_valid(const Frame& F, const Sequent& s);

std::size_t max_valuations();  // GDLAB_MAX_VALUATIONS, default 1'000'000

struct Countermodel {
  bool found = false;
  int bound = 0;  // exhausted up to this carrier size when !found
  FiniteLattice algebra;
  std::vector<std::pair<std::string, int>> valuation;
};
Countermodel countermodel_search(const Sequent& s, const std::string& class_tag, int bound);

struct ProofNode {
  Sequent conclusion;
  std::string rule;  // id, top, bot, and-left-1/2, or-right-1/2, demorgan,
                     // top-nbot, cut, antitone, axiom
  std::vector<ProofNode> premises;
};

struct LogicExtension {
  std::string name;
  std::vector<Sequent> axioms;  // extra initial sequents, closed under substitution
};

struct ProofCheck {
  bool ok = true;
  std::string first_invalid;  // path + reason for the first bad node
};
ProofCheck check_proof(const ProofNode& t, const LogicExtension& ext);

}  // namespace gdlab
