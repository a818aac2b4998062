#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdlab/bits.hpp"
#include "gdlab/error.hpp"

namespace gdlab {

// Finite bounded lattice over a dense integer carrier, with optional
// quasi-complementation map nu. Immutable after construction; nu laws are
// classified, never assumed.
class FiniteLattice {
 public:
  FiniteLattice() = default;  // empty placeholder; every accessor assumes a built value
  static FiniteLattice from_leq_pairs(std::vector<std::string> names,
                                      const std::vector<std::pair<int, int>>& leq_pairs,
                                      std::optional<std::vector<int>> nu = std::nullopt);
  static FiniteLattice from_cover_pairs(std::vector<std::string> names,
                                        const std::vector<std::pair<int, int>>& covers,
                                        std::optional<std::vector<int>> nu = std::nullopt);

  int size() const { return n_; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(int a, int b) const { return has(up_[a], b); }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  Bits upset(int a) const { return up_[a]; }    // {b : a <= b}
  Bits downset(int a) const { return dn_[a]; }  // {b : b <= a}

  bool has_nu() const { return nu_.has_value(); }
  int nu(int a) const { return (*nu_)[a]; }
  const std::optional<std::vector<int>>& nu_map() const { return nu_; }
  FiniteLattice with_nu(std::vector<int> nu) const;
  FiniteLattice without_nu() const;

  std::vector<std::pair<int, int>> leq_pairs() const;    // all a <= b, a != b
  std::vector<std::pair<int, int>> cover_pairs() const;  // Hasse edges

  bool operator==(const FiniteLattice& o) const {
    return names_ == o.names_ && up_ == o.up_ && nu_ == o.nu_;
  }

 private:
  static FiniteLattice build(std::vector<std::string> names, std::vector<Bits> up,
                             std::optional<std::vector<int>> nu);
  friend FiniteLattice dualize(const FiniteLattice&);

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Bits> up_, dn_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
  std::optional<std::vector<int>> nu_;
};

struct VarietyReport {
  // law flags, each checked independently by exhaustive scan
  bool antitone = false;
  bool normal = false;         // nu 0 = 1
  bool join_demorgan = false;  // nu(a v b) = nu a ^ nu b
  bool galois = false;         // a <= nu nu a
  bool involution = false;     // nu nu a = a
  bool explosion = false;      // a ^ nu a = 0
  bool distributive = false;
  bool antilogism = false;  // a^b <= c  implies  a ^ nu c <= nu b
  // dual-minimal laws
  bool dual_normal = false;    // nu 1 = 0
  bool meet_demorgan = false;  // nu(a ^ b) = nu a v nu b
  bool dual_galois = false;    // nu nu a <= a
  // derived memberships
  bool in_m = false, in_g = false, in_inv = false;
  bool in_dma = false, in_o = false, in_ba = false;
  bool in_m_dual = false, in_g_dual = false;
};

VarietyReport classify_variety(const FiniteLattice& L);
bool is_distributive(const FiniteLattice& L);

// Most specific membership along the variety order: "BA" > "DMA"/"O" > "INV"
// > "G" > "M" > "none".
std::string most_specific_variety(const VarietyReport& r);

struct ImplicationCheck {
  std::string name;
  bool holds;
};
// Instance-level check of the derivability facts about quasi-complementations;
// a failure signals an implementation bug, never a valid instance.
std::vector<ImplicationCheck> verify_lemma1_consequences(const FiniteLattice& L);

FiniteLattice dualize(const FiniteLattice& L);

}  // namespace gdlab
