// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure. Criterion 1 is expected to fail honestly: the minimal-variety laws
// do not force axiom F2 on canonical frames (nu may send a nonzero element to
// the top, making nu_hat improper and S_vee x empty); the affected instances
// are counted and a witness is printed.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gdlab/canonical.hpp"
#include "gdlab/complex_algebra.hpp"
#include "gdlab/duality.hpp"
#include "gdlab/enumerate.hpp"
#include "gdlab/frame.hpp"
#include "gdlab/json_io.hpp"
#include "gdlab/lattice.hpp"
#include "gdlab/logic.hpp"
#include "helpers.hpp"

using namespace gdlab;
using namespace fixtures;

namespace {

int failures = 0;

void verdict(int k, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", k, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

std::vector<FiniteLattice> corpus(int max_size) {
  std::vector<FiniteLattice> out;
  for_each_algebra(max_size, Variety::M, [&](const FiniteLattice& L) {
    out.push_back(L);
    return true;
  });
  return out;
}

bool is_degenerate(const FiniteLattice& L) {  // some nonzero element maps to top
  for (int a = 0; a < L.size(); ++a)
    if (a != L.bottom() && L.nu(a) == L.top()) return true;
  return false;
}

// random frames passing F0-F4: random polarity plus S_vee x = Gamma(nu_hat x)
std::vector<Frame> random_f04_frames(int want, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Frame> out;
  long attempts = 0;
  while ((int)out.size() < want && attempts < 4000000) {
    ++attempts;
    int nx = 1 + (int)(rng() % 6), ny = 1 + (int)(rng() % 6);
    std::vector<std::pair<int, int>> gal;
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y)
        if (rng() & 1) gal.emplace_back(x, y);
    Polarity P = Polarity::make(nx, ny, gal);
    std::vector<Bits> s_x(nx);
    for (int x = 0; x < nx; ++x) s_x[x] = P.gamma_y((int)(rng() % ny));
    Frame F = Frame::make_from_sections(std::move(P), std::move(s_x));
    if (check_table2(F).all_pass()) out.push_back(std::move(F));
  }
  return out;
}

Fml random_formula(std::mt19937_64& rng, int depth) {
  int pick = (int)(rng() % (depth <= 0 ? 4 : 7));
  switch (pick) {
    case 0: return f_var("p");
    case 1: return f_var("q");
    case 2: return f_top();
    case 3: return f_bot();
    case 4: return f_not(random_formula(rng, depth - 1));
    case 5: return f_and(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return f_or(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  auto t_all = std::chrono::steady_clock::now();
  std::vector<FiniteLattice> corpus6 = corpus(6);
  std::printf("corpus: %zu quasi-complemented lattices (<= 6 elements, M laws, "
              "isomorph-reduced)\n",
              corpus6.size());

  // --- 1: canonical frames pass F0-F4 and the Table 4 object axioms ---
  {
    auto t0 = std::chrono::steady_clock::now();
    int bad = 0, degenerate = 0;
    std::string first;
    for (const FiniteLattice& L : corpus6) {
      CanonicalFrame cf = canonical_frame(L);
      bool ok = check_table2(cf.frame).all_pass() && check_table4_objects(cf.frame).all_pass();
      if (!ok) {
        ++bad;
        if (is_degenerate(L)) ++degenerate;
        if (first.empty()) {
          const AxiomResult* f2 = check_table2(cf.frame).find("F2");
          first = "first witness: " + std::to_string(L.size()) + "-element lattice, nu=[";
          for (int a = 0; a < L.size(); ++a)
            first += L.name(L.nu(a)) + (a + 1 < L.size() ? "," : "]");
          first += f2 && !f2->pass ? ", F2 fails (nu_hat improper)" : "";
        }
      }
    }
    char detail[256];
    std::snprintf(detail, sizeof detail,
                  "%d/%zu canonical frames fail, all %d with nu sending a nonzero element "
                  "to top (F2 is not a consequence of the M laws); %s [%.1fs]",
                  bad, corpus6.size(), degenerate, first.c_str(), seconds_since(t0));
    verdict(1, "canonical frames satisfy F0-F4 and Table 4 on the full M corpus",
            bad == 0 && degenerate == bad, bad == 0 ? "" : detail);
  }

  // --- 2: representation isomorphism, exact ---
  {
    bool ok = true;
    std::string detail;
    for (const FiniteLattice& L : corpus6) {
      try {
        representation_map(canonical_frame(L));
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
        break;
      }
    }
    verdict(2, "a -> X_a is an exact isomorphism onto the stable family", ok, detail);
  }

  // --- 3: variety closure under canonical extension ---
  {
    bool ok = true;
    std::string detail;
    const Variety kAll[] = {Variety::M,   Variety::G, Variety::INV,
                            Variety::O,   Variety::DMA, Variety::BA};
    for (const FiniteLattice& L : corpus6) {
      VarietyReport before = classify_variety(L);
      VarietyReport after =
          classify_variety(build_complex_algebra(canonical_frame(L).frame).lattice);
      for (Variety v : kAll)
        if (in_variety(before, v) && !in_variety(after, v)) {
          ok = false;
          detail = "class " + variety_tag(v) + " not preserved";
        }
    }
    // named witnesses
    auto expect = [&](const FiniteLattice& L, const char* tag) {
      RoundtripReport r = roundtrip(L);
      if (r.algebra_variety != tag || r.double_dual_variety != tag) {
        ok = false;
        detail = std::string("named witness expected ") + tag + ", got " +
                 r.double_dual_variety;
      }
    };
    expect(n5_trivial(), "G");
    expect(kleene4(), "DMA");
    expect(benzene(), "O");
    expect(boolean_algebra(1), "BA");
    expect(boolean_algebra(2), "BA");
    expect(boolean_algebra(3), "BA");
    if (classify_variety(kleene4()).in_o || classify_variety(benzene()).in_dma) {
      ok = false;
      detail = "witness separation broken";
    }
    verdict(3, "complex algebra of the canonical frame stays in each variety", ok, detail);
  }

  // --- 4 and 5 share the random frame pool ---
  std::vector<Frame> pool = random_f04_frames(1000, 0x5eed5eedULL);
  for (const FiniteLattice& L : corpus6)
    if (L.size() <= 5) pool.push_back(canonical_frame(L).frame);

  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = pool.size() >= 1000;
    std::string detail = ok ? "" : "random generator produced only " +
                                       std::to_string(pool.size()) + " frames";
    for (const Frame& F : pool) {
      CorrespondenceReport r = check_correspondence(F);
      for (const auto& d : r.directions)
        if (!d.holds) {
          ok = false;
          detail = "direction fails: " + d.name;
        }
      DistributivityReport dr = upper_bound_relation(F);
      if (dr.axiom_d && !dr.stable_lattice_distributive) {
        ok = false;
        detail = "(D) held but the stable lattice is not distributive";
      }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu frames (>=1000 random F0-F4 + canonical), %.1fs",
                  pool.size(), seconds_since(t0));
    verdict(4, "correspondence biconditionals hold with zero violations", ok,
            ok ? buf : detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (const Frame& F : pool) {
      const Polarity& P = F.pol;
      StableFamily fam = stable_family(P);
      for (Bits A : fam.stables) {
        Bits sA = star(F, A);
        if (sA != eta_vee(F, A)) { ok = false; detail = "star != '(eta_S)"; }
        for (Bits B : fam.stables) {
          Bits join = P.closure_x(A | B);
          // eta_bar_S distributes over joins (computed in the co-stable lattice)
          if (eta_bar_S(F, join) != P.closure_y(eta_bar_S(F, A) | eta_bar_S(F, B))) {
            ok = false;
            detail = "eta_bar_S join-distribution";
          }
          // star co-distributes
          if (star(F, join) != (sA & star(F, B))) {
            ok = false;
            detail = "star join-co-distribution";
          }
          // Galois law between star and triangle
          if (subset(A, triangle(F, B)) != subset(B, sA)) {
            ok = false;
            detail = "star/triangle Galois law";
          }
        }
        // residuation: eta_bar_S(A) <= B iff A <= zeta_bar_S(B), B co-stable
        for (Bits Bc : fam.costables)
          if (subset(eta_bar_S(F, A), Bc) != subset(A, zeta_bar_S(F, Bc))) {
            ok = false;
            detail = "eta_bar_S -| zeta_bar_S residuation";
          }
      }
      if (!ok) break;
    }
    verdict(5, "operator algebra laws verified by full scan on the frame pool", ok, detail);
  }

  // --- 6: duality round-trip ---
  {
    bool ok = true;
    std::string detail;
    for (const FiniteLattice& L : corpus6) {
      if (!unit_iso_check(L)) { ok = false; detail = "unit fails"; break; }
      CounitReport c = counit_iso_check(canonical_frame(L).frame);
      if (!c.ok) { ok = false; detail = "counit fails: " + c.detail; break; }
    }
    try {
      FiniteLattice K = kleene4(), two = chain2(), sq = boolean_algebra(2);
      LatticeHom collapse = make_hom(K, two, {0, 0, 1, 1});
      FrameMorphism m1 = dual_frame_morphism(collapse, canonical_frame(K),
                                             canonical_frame(two));
      if (!check_morphism_axioms(m1).all_pass()) { ok = false; detail = "collapse M1-M5"; }
      inverse_image_hom(m1);  // throws unless a star-preserving hom
      LatticeHom embed = make_hom(two, sq, {0, 3});
      FrameMorphism m2 =
          dual_frame_morphism(embed, canonical_frame(two), canonical_frame(sq));
      if (!check_morphism_axioms(m2).all_pass()) { ok = false; detail = "embedding M1-M5"; }
      inverse_image_hom(m2);
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    verdict(6, "unit/counit isomorphisms and the two named dual morphisms", ok, detail);
  }

  // --- 7: fsat identity on canonical frames of <= 5-element lattices ---
  {
    bool ok = true;
    std::string detail;
    for (const FiniteLattice& L : corpus6) {
      if (L.size() > 5) continue;
      FsatReport r = fsat_check(canonical_frame(L));
      if (!r.fsat_equals_closure || !r.stables_are_filters) {
        ok = false;
        detail = r.witness.empty() ? "stables-are-filters fails" : r.witness.front();
        break;
      }
    }
    verdict(7, "fsat(U) = U'' for all U on canonical frames (<= 5 elements)", ok, detail);
  }

  // --- 8: logic soundness and separation ---
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    const char* initial[] = {"p |- p",         "p |- T",      "F |- p",
                             "p & q |- p",     "p & q |- q",  "p |- p | q",
                             "q |- p | q",     "T |- ~F",     "~(p | q) |- ~p & ~q"};
    for (const FiniteLattice& L : corpus6)
      for (const char* s : initial)
        if (!algebra_valid(L, parse_sequent(s))) {
          ok = false;
          detail = std::string("initial sequent invalid: ") + s;
        }
    struct Want {
      const char* seq;
      const char* cls;
      bool found;
    } wants[] = {{"p |- ~~p", "M", true},
                 {"p & ~p |- F", "INV", true},
                 {"~~p |- p", "G", true},
                 {"~(p | q) |- ~p & ~q", "M", false},
                 {"~p & ~q |- ~(p | q)", "M", false}};
    for (const Want& w : wants) {
      Countermodel m = countermodel_search(parse_sequent(w.seq), w.cls, 6);
      if (m.found != w.found) {
        ok = false;
        detail = std::string(w.seq) + " over " + w.cls +
                 (w.found ? ": no countermodel within bound 6" : ": unexpected countermodel");
      } else if (m.found && algebra_valid(m.algebra, parse_sequent(w.seq))) {
        ok = false;
        detail = std::string("countermodel for ") + w.seq + " does not falsify";
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", seconds_since(t0));
    verdict(8, "Table 1 soundness on the corpus plus countermodel separations", ok,
            ok ? buf : detail);
  }

  // --- 9: frame_valid / algebra_valid agreement ---
  {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(0xace9ULL);
    int done = 0;
    for (size_t i = 0; done < 100; ++i) {
      const Frame& F = pool[i % pool.size()];
      Sequent s{random_formula(rng, 3), random_formula(rng, 3)};
      FiniteLattice CA = build_complex_algebra(F).lattice;
      if (frame_valid(F, s) != algebra_valid(CA, s)) {
        ok = false;
        detail = "disagreement on " + to_string(s);
        break;
      }
      ++done;
    }
    verdict(9, "frame_valid agrees with algebra_valid on 100 random pairs", ok, detail);
  }

  std::printf("%d criterion(s) failed; total %.1fs\n", failures, seconds_since(t_all));
  return failures == 0 ? 0 : 1;
}
