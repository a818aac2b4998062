#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdlab/canonical.hpp"
#include "gdlab/complex_algebra.hpp"
#include "gdlab/duality.hpp"
#include "gdlab/enumerate.hpp"
#include "gdlab/frame.hpp"
#include "gdlab/json_io.hpp"
#include "gdlab/lattice.hpp"
#include "gdlab/logic.hpp"
#include "gdlab/version.hpp"

using nlohmann::json;
using namespace gdlab;

namespace {

json axiom_report_json(const AxiomReport& rep) {
  json out = json::array();
  for (const auto& [name, res] : rep.axioms) {
    json e;
    e["axiom"] = name;
    e["pass"] = res.pass;
    if (!res.witness.empty()) e["witness"] = res.witness;
    out.push_back(e);
  }
  return out;
}

json base_report(const std::vector<std::string>& argv_echo) {
  json r;
  r["tool"] = "gdlab";
  r["version"] = kVersion;
  r["command"] = argv_echo;
  return r;
}

void emit(const json& r) { std::cout << r.dump(2) << "\n"; }

FiniteLattice load_lattice(const std::string& path) {
  return lattice_from_json(load_json_file(path));
}

Frame load_frame(const std::string& path) { return frame_from_json(load_json_file(path)); }

json variety_json(const VarietyReport& vr) {
  json v;
  v["antitone"] = vr.antitone;
  v["normal"] = vr.normal;
  v["join_demorgan"] = vr.join_demorgan;
  v["galois"] = vr.galois;
  v["involution"] = vr.involution;
  v["explosion"] = vr.explosion;
  v["antilogism"] = vr.antilogism;
  v["distributive"] = vr.distributive;
  v["dual_normal"] = vr.dual_normal;
  v["meet_demorgan"] = vr.meet_demorgan;
  v["dual_galois"] = vr.dual_galois;
  v["M"] = vr.in_m;
  v["G"] = vr.in_g;
  v["INV"] = vr.in_inv;
  v["O"] = vr.in_o;
  v["DMA"] = vr.in_dma;
  v["BA"] = vr.in_ba;
  v["M_dual"] = vr.in_m_dual;
  v["G_dual"] = vr.in_g_dual;
  return v;
}

void write_or_print(const std::string& out_path, const json& payload, json& report,
                    const char* field) {
  if (!out_path.empty()) {
    save_json_file(out_path, payload);
    report[field] = out_path;
  } else {
    report[field] = payload;
  }
}

}  // namespace

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> echo(argv, argv + argc);
  CLI::App app{"finite lattice duality workbench"};
  app.require_subcommand(1);

  std::string file, out_path, model_path, sequent_text, class_tag = "M", out_dir = "corpus";
  int table = 0, bound = 5, max_size = 5;

  auto* lat = app.add_subcommand("lattice", "lattice operations")->require_subcommand(1);
  auto* lat_check = lat->add_subcommand("check", "validate a lattice file");
  lat_check->add_option("file", file)->required();
  auto* lat_classify = lat->add_subcommand("classify", "variety membership");
  lat_classify->add_option("file", file)->required();
  auto* lat_dual = lat->add_subcommand("dual-frame", "canonical frame");
  lat_dual->add_option("file", file)->required();
  lat_dual->add_option("-o,--out", out_path);

  auto* frm = app.add_subcommand("frame", "frame operations")->require_subcommand(1);
  auto* frm_axioms = frm->add_subcommand("check-axioms", "frame axiom tables");
  frm_axioms->add_option("file", file)->required();
  frm_axioms->add_option("--table", table)->check(CLI::IsMember({2, 3, 4}));
  auto* frm_classify = frm->add_subcommand("classify", "frame category");
  frm_classify->add_option("file", file)->required();
  auto* frm_ca = frm->add_subcommand("complex-algebra", "stable set algebra");
  frm_ca->add_option("file", file)->required();
  frm_ca->add_option("-o,--out", out_path);

  auto* dua = app.add_subcommand("duality", "duality checks")->require_subcommand(1);
  auto* dua_rt = dua->add_subcommand("roundtrip", "algebra -> frame -> algebra");
  dua_rt->add_option("file", file)->required();
  auto* dua_cm = dua->add_subcommand("check-morphism", "M1-M5 on a morphism file");
  dua_cm->add_option("file", file)->required();

  auto* log = app.add_subcommand("logic", "sequent logic")->require_subcommand(1);
  auto* log_valid = log->add_subcommand("valid", "validity on a model");
  log_valid->add_option("--model", model_path)->required();
  log_valid->add_option("sequent", sequent_text)->required();
  auto* log_counter = log->add_subcommand("countermodel", "bounded countermodel search");
  log_counter->add_option("--class", class_tag);
  log_counter->add_option("--bound", bound);
  log_counter->add_option("sequent", sequent_text)->required();
  log_counter->add_option("-o,--out", out_path);
  auto* log_proof = log->add_subcommand("check-proof", "proof tree checking");
  log_proof->add_option("file", file)->required();

  auto* corpus = app.add_subcommand("corpus", "instance generation")->require_subcommand(1);
  auto* corpus_gen = corpus->add_subcommand("generate", "enumerate algebras in a class");
  corpus_gen->add_option("--max-size", max_size)->required();
  corpus_gen->add_option("--class", class_tag)->required();
  corpus_gen->add_option("-o,--out", out_dir);

  auto* exp = app.add_subcommand("export", "export formats")->require_subcommand(1);
  auto* exp_dot = exp->add_subcommand("dot", "graphviz output");
  exp_dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  int exit_code = 0;
  json report = base_report(echo);
  try {
    if (*lat_check) {
      FiniteLattice L = load_lattice(file);
      report["valid"] = true;
      report["size"] = L.size();
      report["has_nu"] = L.has_nu();
      emit(report);
    } else if (*lat_classify) {
      FiniteLattice L = load_lattice(file);
      VarietyReport vr = classify_variety(L);
      report["variety"] = variety_json(vr);
      report["most_specific"] = most_specific_variety(vr);
      json lem = json::array();
      for (const auto& c : verify_lemma1_consequences(L)) {
        json e;
        e["implication"] = c.name;
        e["holds"] = c.holds;
        lem.push_back(e);
      }
      report["lemma_consequences"] = lem;
      emit(report);
    } else if (*lat_dual) {
      FiniteLattice L = load_lattice(file);
      CanonicalFrame cf = canonical_frame(L);
      report["representable"] = cf.representable;
      write_or_print(out_path, frame_to_json(cf.frame), report, "frame");
      emit(report);
    } else if (*frm_axioms) {
      Frame F = load_frame(file);
      json tables;
      bool all = true;
      if (table == 0 || table == 2) {
        AxiomReport r = check_table2(F);
        tables["table2"] = axiom_report_json(r);
        all = all && r.all_pass();
      }
      if (table == 0 || table == 3) {
        AxiomReport r = check_table3(F);
        tables["table3"] = axiom_report_json(r);
        all = all && r.all_pass();
      }
      if (table == 0 || table == 4) {
        AxiomReport r = check_table4_objects(F);
        tables["table4"] = axiom_report_json(r);
        all = all && r.all_pass();
      }
      report["tables"] = tables;
      report["all_pass"] = all;
      if (!all) exit_code = 1;
      emit(report);
    } else if (*frm_classify) {
      Frame F = load_frame(file);
      report["category"] = classify_frame(F);
      emit(report);
    } else if (*frm_ca) {
      Frame F = load_frame(file);
      ComplexAlgebra ca = build_complex_algebra(F);
      write_or_print(out_path, lattice_to_json(ca.lattice), report, "algebra");
      emit(report);
    } else if (*dua_rt) {
      FiniteLattice L = load_lattice(file);
      RoundtripReport rt = roundtrip(L);
      report["algebra_variety"] = rt.algebra_variety;
      report["frame_category"] = rt.frame_category;
      report["double_dual_variety"] = rt.double_dual_variety;
      report["frame_matches"] = rt.frame_matches;
      report["unit_iso"] = rt.unit_ok;
      report["counit_iso"] = rt.counit_ok;
      if (!(rt.frame_matches && rt.unit_ok && rt.counit_ok &&
            rt.algebra_variety == rt.double_dual_variety))
        exit_code = 1;
      emit(report);
    } else if (*dua_cm) {
      FrameMorphism m = morphism_from_json(load_json_file(file));
      AxiomReport r = check_morphism_axioms(m);
      report["axioms"] = axiom_report_json(r);
      report["all_pass"] = r.all_pass();
      if (!r.all_pass()) exit_code = 1;
      emit(report);
    } else if (*log_valid) {
      Sequent s = parse_sequent(sequent_text);
      json model = load_json_file(model_path);
      if (instance_kind(model) == "lattice") {
        FiniteLattice L = lattice_from_json(model);
        AlgebraVerdict v = algebra_verdict(L, s);
        report["valid"] = v.valid;
        if (!v.valid) {
          json w;
          for (const auto& [var, a] : v.witness) w[var] = L.name(a);
          report["witness"] = w;
          exit_code = 1;
        }
      } else if (instance_kind(model) == "frame") {
        Frame F = frame_from_json(model);
        FrameVerdict v = frame_verdict(F, s);
        report["valid"] = v.valid;
        if (!v.valid) {
          json w;
          for (const auto& [var, A] : v.witness) {
            json pts = json::array();
            for_each_bit(A, [&](int x) { pts.push_back(F.pol.xname(x)); });
            w[var] = pts;
          }
          report["witness"] = w;
          exit_code = 1;
        }
      } else {
        throw Error("InputError", "model must be a lattice or a frame");
      }
      report["sequent"] = to_string(s);
      emit(report);
    } else if (*log_counter) {
      Sequent s = parse_sequent(sequent_text);
      Countermodel cm = countermodel_search(s, class_tag, bound);
      report["sequent"] = to_string(s);
      report["class"] = class_tag;
      report["bound"] = bound;
      report["found"] = cm.found;
      if (cm.found) {
        json w;
        for (const auto& [var, a] : cm.valuation) w[var] = cm.algebra.name(a);
        report["valuation"] = w;
        write_or_print(out_path, lattice_to_json(cm.algebra), report, "algebra");
      } else {
        report["verdict"] = "exhausted(" + std::to_string(bound) + ")";
      }
      emit(report);
    } else if (*log_proof) {
      ProofFile p = proof_from_json(load_json_file(file));
      ProofCheck r = check_proof(p.tree, p.extension);
      report["valid"] = r.ok;
      if (!r.ok) {
        report["first_invalid"] = r.first_invalid;
        exit_code = 1;
      }
      emit(report);
    } else if (*corpus_gen) {
      Variety cls = variety_from_tag(class_tag);
      std::filesystem::create_directories(out_dir);
      int count = 0;
      for_each_algebra(max_size, cls, [&](const FiniteLattice& L) {
        char name[64];
        std::snprintf(name, sizeof name, "%s_n%d_%04d.json", class_tag.c_str(), L.size(),
                      count);
        save_json_file((std::filesystem::path(out_dir) / name).string(),
                       lattice_to_json(L));
        ++count;
        return true;
      });
      report["class"] = class_tag;
      report["max_size"] = max_size;
      report["count"] = count;
      report["dir"] = out_dir;
      emit(report);
    } else if (*exp_dot) {
      json j = load_json_file(file);
      if (instance_kind(j) == "lattice")
        std::cout << export_dot_lattice(lattice_from_json(j));
      else if (instance_kind(j) == "frame")
        std::cout << export_dot_frame(frame_from_json(j));
      else
        throw Error("InputError", "dot export supports lattices and frames");
    }
  } catch (const Error& e) {
    json err = base_report(echo);
    err["error"]["code"] = e.code;
    err["error"]["message"] = e.what();
    emit(err);
    exit_code = 2;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "elapsed_ms " << ms << "\n";
  return exit_code;
}
