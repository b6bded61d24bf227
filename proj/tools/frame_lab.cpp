// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0
//
// frame-lab: command line front end. Every command is deterministic for a
// fixed seed; the seed comes from --seed, then FRAME_LAB_SEED, then 1.
//
// Exit codes: 0 success, 1 failed checks or internal errors, 2 bad usage
// or unusable input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "framelab/acceptance.hpp"
#include "framelab/besselian.hpp"
#include "framelab/corpus.hpp"
#include "framelab/fdd.hpp"
#include "framelab/format.hpp"
#include "framelab/frame.hpp"
#include "framelab/rng.hpp"
#include "framelab/serialization.hpp"
#include "framelab/space.hpp"
#include "framelab/unconditional.hpp"
#include "framelab/version.hpp"
#include "json.hpp"

namespace {

using namespace framelab;
using ordered_json = nlohmann::ordered_json;

// Anything wrong with what the user handed us: unknown ids, unreadable
// files, malformed JSON, out-of-range requests. Mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Frame resolve_frame(const std::string& ref) {
  bool is_corpus_id = true;
  CorpusId id;
  try {
    id = parse_corpus_id(ref);
  } catch (const std::invalid_argument&) {
    is_corpus_id = false;
  }
  try {
    if (is_corpus_id) return make_corpus_frame(id);
    return load_frame_file(ref);
  } catch (const std::exception& e) {
    throw InputError(std::string{"--frame "} + ref + ": " + e.what());
  }
}

FddSpec resolve_fdd(const std::string& ref) {
  bool is_corpus_id = true;
  CorpusId id;
  try {
    id = parse_corpus_id(ref);
  } catch (const std::invalid_argument&) {
    is_corpus_id = false;
  }
  try {
    if (is_corpus_id) return make_corpus_fdd(id);
    return load_fdd_file(ref);
  } catch (const std::exception& e) {
    throw InputError(std::string{"--spec "} + ref + ": " + e.what());
  }
}

BesselianMethod parse_method(const std::string& text) {
  if (text == "exact") return BesselianMethod::extreme_oracle;
  if (text == "ascent") return BesselianMethod::alternating_ascent;
  throw InputError("--method must be 'exact' or 'ascent', got '" + text + "'");
}

SignSearchMode parse_mode(const std::string& text) {
  if (text == "exact") return SignSearchMode::exact;
  if (text == "sampled") return SignSearchMode::sampled;
  throw InputError("--mode must be 'exact' or 'sampled', got '" + text + "'");
}

// Input vector for the per-vector commands: an explicit coordinate file, a
// canonical basis vector, or (default) a seeded random unit vector.
Vector pick_input(const SpaceSpec& space, const std::string& x_file,
                  int unit_index, std::uint64_t seed) {
  if (!x_file.empty() && unit_index > 0)
    throw InputError("--x and --unit-vector are mutually exclusive");
  if (!x_file.empty()) {
    try {
      return load_vector_file(x_file, space);
    } catch (const std::exception& e) {
      throw InputError(std::string{"--x "} + x_file + ": " + e.what());
    }
  }
  if (unit_index > 0) {
    if (unit_index > space.dim)
      throw InputError("--unit-vector index exceeds the dimension");
    return unit_vector(space, unit_index);
  }
  Rng rng(seed);
  return random_unit_vector(space, rng);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for frames on finite sequence spaces"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto* cmd_corpus = app.add_subcommand("corpus", "list the built-in frame families");

  std::string rec_frame, rec_x, rec_out;
  int rec_unit = 0;
  std::uint64_t rec_seed = 1;
  auto* cmd_reconstruct = app.add_subcommand(
      "reconstruct", "partial-sum error trace for one input vector");
  cmd_reconstruct->add_option("--frame", rec_frame, "corpus id or frame JSON file")
      ->required();
  cmd_reconstruct->add_option("--x", rec_x, "input vector as a JSON coordinate array");
  cmd_reconstruct->add_option("--unit-vector", rec_unit,
                              "use the canonical basis vector e_j (1-based)");
  cmd_reconstruct->add_option("--seed", rec_seed, "seed for the default random input")
      ->envname("FRAME_LAB_SEED");
  cmd_reconstruct->add_option("--out", rec_out,
                              "write the k,error CSV here (summary JSON on stdout)");

  std::string bes_frame, bes_method = "exact", bes_out;
  int bes_restarts = 16;
  std::uint64_t bes_seed = 1;
  auto* cmd_besselian =
      app.add_subcommand("besselian", "best constant for the absolute pairing sum");
  cmd_besselian->add_option("--frame", bes_frame, "corpus id or frame JSON file")
      ->required();
  cmd_besselian->add_option("--method", bes_method, "exact | ascent");
  cmd_besselian->add_option("--restarts", bes_restarts, "ascent random restarts");
  cmd_besselian->add_option("--seed", bes_seed, "ascent seed")
      ->envname("FRAME_LAB_SEED");
  cmd_besselian->add_option("--out", bes_out, "write the JSON document here");

  std::string unc_frame, unc_mode = "exact", unc_x, unc_out;
  int unc_unit = 0, unc_samples = 32;
  std::int64_t unc_budget = 0;
  bool unc_global = false;
  std::uint64_t unc_seed = 1;
  auto* cmd_uncond =
      app.add_subcommand("uncond", "sign-flip distortion of the reconstruction");
  cmd_uncond->add_option("--frame", unc_frame, "corpus id or frame JSON file")
      ->required();
  cmd_uncond->add_option("--mode", unc_mode, "exact | sampled");
  cmd_uncond->add_option("--x", unc_x, "input vector as a JSON coordinate array");
  cmd_uncond->add_option("--unit-vector", unc_unit,
                         "use the canonical basis vector e_j (1-based)");
  cmd_uncond->add_flag("--global", unc_global,
                       "maximize over probe and sampled inputs too");
  cmd_uncond->add_option("--samples", unc_samples,
                         "random inputs for --global (default 32)");
  cmd_uncond->add_option("--budget", unc_budget,
                         "evaluation budget per input in sampled mode (default 64*M)");
  cmd_uncond->add_option("--seed", unc_seed, "seed")->envname("FRAME_LAB_SEED");
  cmd_uncond->add_option("--out", unc_out, "write the JSON document here");

  std::string fdd_ref, fdd_out;
  auto* cmd_fdd = app.add_subcommand(
      "fdd", "validate a block decomposition and build its frame");
  cmd_fdd->add_option("--spec", fdd_ref, "fdd_random corpus id or decomposition JSON file")
      ->required();
  cmd_fdd->add_option("--out", fdd_out, "write the built frame JSON here");

  std::string pro_family, pro_method = "exact", pro_out;
  std::vector<int> pro_dims;
  int pro_restarts = 16;
  std::uint64_t pro_seed = 1;
  auto* cmd_profile = app.add_subcommand(
      "profile", "constant growth of a family across dimensions");
  cmd_profile->add_option("--family", pro_family,
                          "dim-indexed family template, e.g. canonical:lp:1 or summing")
      ->required();
  cmd_profile->add_option("--dims", pro_dims, "dimensions to evaluate")
      ->required()
      ->delimiter(',');
  cmd_profile->add_option("--method", pro_method, "exact | ascent");
  cmd_profile->add_option("--restarts", pro_restarts, "ascent random restarts");
  cmd_profile->add_option("--seed", pro_seed, "ascent seed")
      ->envname("FRAME_LAB_SEED");
  cmd_profile->add_option("--out", pro_out, "write the CSV here");

  std::vector<std::string> rep_frames;
  std::string rep_out;
  std::uint64_t rep_seed = 1;
  auto* cmd_report = app.add_subcommand(
      "report", "run the full acceptance suite and emit its JSON document");
  cmd_report->add_option("--seed", rep_seed, "suite seed")
      ->envname("FRAME_LAB_SEED");
  cmd_report->add_option("--frame", rep_frames,
                         "extra frames (corpus id or JSON file) to sweep; repeatable");
  cmd_report->add_option("--out", rep_out, "write the JSON document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_corpus->parsed()) {
      for (const auto& entry : corpus_catalog()) {
        std::cout << entry.name << "\n  id:   " << entry.grammar
                  << "\n  note: " << entry.note << "\n";
      }
      return 0;
    }

    if (cmd_reconstruct->parsed()) {
      const Frame f = resolve_frame(rec_frame);
      const Vector x = pick_input(f.space, rec_x, rec_unit, rec_seed);
      const ReconstructionTrace trace = reconstruction_trace(f, x);
      const std::string csv = reconstruction_csv(trace);
      if (rec_out.empty()) {
        std::cout << csv;
      } else {
        emit(csv, rec_out);
        ordered_json j;
        j["frame"] = f.label;
        j["pairs"] = f.size();
        j["input_norm"] = trace.input_norm;
        j["final_error"] = trace.final_error();
        j["csv"] = rec_out;
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }

    if (cmd_besselian->parsed()) {
      const Frame f = resolve_frame(bes_frame);
      const BesselianMethod method = parse_method(bes_method);
      AscentOptions ao;
      ao.restarts = bes_restarts;
      ao.seed = bes_seed;
      const BesselianEstimate est = besselian_constant(f, method, ao);
      ordered_json j;
      j["frame"] = f.label;
      j["estimate"] = ordered_json::parse(estimate_to_json(est));
      emit(j.dump(2) + "\n", bes_out);
      return 0;
    }

    if (cmd_uncond->parsed()) {
      const Frame f = resolve_frame(unc_frame);
      const SignSearchMode mode = parse_mode(unc_mode);
      const std::int64_t budget =
          unc_budget > 0 ? unc_budget : 64 * static_cast<std::int64_t>(f.size());
      ordered_json j;
      j["frame"] = f.label;
      j["mode"] = unc_mode;
      if (unc_global) {
        if (!unc_x.empty() || unc_unit > 0)
          throw InputError("--global ignores --x/--unit-vector; drop them");
        j["samples"] = unc_samples;
        j["value"] = global_unconditionality_constant(f, unc_samples, mode,
                                                      unc_seed, budget);
      } else {
        const Vector x = pick_input(f.space, unc_x, unc_unit, unc_seed);
        const UnconditionalityResult res =
            unconditionality_constant(f, x, mode, budget, unc_seed);
        j["value"] = res.value;
        j["witness"] = to_string(res.witness);
        j["evaluations"] = res.evaluations;
        j["budget_exhausted"] = res.budget_exhausted;
      }
      emit(j.dump(2) + "\n", unc_out);
      return 0;
    }

    if (cmd_fdd->parsed()) {
      const FddSpec fdd = resolve_fdd(fdd_ref);
      validate_fdd(fdd);
      const Frame f = build_frame_from_fdd(fdd);
      ordered_json j;
      j["label"] = fdd.label;
      j["space"] = space_id_text(fdd.space);
      ordered_json blocks = ordered_json::array();
      for (const auto& block : fdd.blocks) {
        ordered_json jb;
        jb["dim"] = block.dim();
        jb["auerbach"] = block.auerbach;
        blocks.push_back(std::move(jb));
      }
      j["blocks"] = std::move(blocks);
      j["pair_count"] = fdd.pair_count();
      if (!fdd_out.empty()) {
        save_frame_file(f, fdd_out);
        j["frame_file"] = fdd_out;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_profile->parsed()) {
      const BesselianMethod method = parse_method(pro_method);
      AscentOptions ao;
      ao.restarts = pro_restarts;
      ao.seed = pro_seed;
      const auto rows = growth_profile(pro_family, pro_dims, method, ao);
      std::string csv = "dim,value,dual_value,gap,method\n";
      for (const auto& row : rows) {
        const Frame f =
            make_corpus_frame(pro_family + ":" + std::to_string(row.dim));
        const double dual_value =
            besselian_constant(dual_frame(f), method, ao).value;
        csv += std::to_string(row.dim);
        csv += ',';
        csv += format_double(row.value);
        csv += ',';
        csv += format_double(dual_value);
        csv += ',';
        csv += format_double(std::abs(row.value - dual_value));
        csv += ',';
        csv += to_string(row.method);
        csv += '\n';
      }
      emit(csv, pro_out);
      return 0;
    }

    if (cmd_report->parsed()) {
      AcceptanceOptions opts;
      opts.seed = rep_seed;
      for (const std::string& ref : rep_frames)
        opts.extra_frames.push_back(resolve_frame(ref));
      const AcceptanceReport report = run_acceptance(opts);
      for (const auto& c : report.criteria) {
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name
                  << " (" << format_double(c.seconds) << " s): " << c.detail
                  << "\n";
      }
      emit(acceptance_report_json(report, rep_seed) + "\n", rep_out);
      return report.pass ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "error: no command selected\n";
  return 2;
}
