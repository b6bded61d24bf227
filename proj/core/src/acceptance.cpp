// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "framelab/besselian.hpp"
#include "framelab/corpus.hpp"
#include "framelab/fdd.hpp"
#include "framelab/format.hpp"
#include "framelab/rng.hpp"
#include "framelab/unconditional.hpp"
#include "framelab/version.hpp"
#include "json.hpp"

namespace framelab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t sub_seed(const AcceptanceOptions& opts, int criterion,
                       const std::string& label) {
  return mix_seed(mix_seed(opts.seed, static_cast<std::uint64_t>(criterion)),
                  fnv1a64(label));
}

// Block pattern used for the random-decomposition sweeps: sizes cycling
// 3, 2, clipped to what remains. Dim 1 -> (1), dim 8 -> (3,2,3).
std::vector<int> cycled_blocks(int dim) {
  constexpr std::array<int, 2> cycle{3, 2};
  std::vector<int> out;
  int left = dim;
  std::size_t i = 0;
  while (left > 0) {
    const int d = std::min(cycle[i % cycle.size()], left);
    out.push_back(d);
    left -= d;
    ++i;
  }
  return out;
}

std::string fdd_id(const SpaceSpec& space, const std::vector<int>& blocks,
                   std::uint64_t seed) {
  std::ostringstream os;
  os << "fdd_random:" << space_id_text(space) << ":blocks=";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ",";
    os << blocks[i];
  }
  os << ":seed=" << seed;
  return os.str();
}

// --- criterion 1: every corpus family reconstructs at small and large dims.

CriterionResult c1_reconstruction(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = 1;
  r.name = "reconstruction";

  std::vector<Frame> frames;
  for (int d : {1, 2, 8, 64}) {
    const std::string dt = std::to_string(d);
    frames.push_back(make_corpus_frame("canonical:lp:1:" + dt));
    frames.push_back(make_corpus_frame("canonical:lp:2:" + dt));
    frames.push_back(make_corpus_frame("canonical:c0:" + dt));
    frames.push_back(make_corpus_frame("canonical:linf:" + dt));
    frames.push_back(make_corpus_frame("halved_doubled:" + dt));
    frames.push_back(make_corpus_frame("summing:" + dt));
    const auto blocks = cycled_blocks(d);
    frames.push_back(make_corpus_frame(fdd_id(SpaceSpec::Lp(2.0, d), blocks, 5)));
    frames.push_back(make_corpus_frame(fdd_id(SpaceSpec::C0(d), blocks, 5)));
  }
  for (const Frame& f : opts.extra_frames) frames.push_back(f);

  bool ok = true;
  double worst = 0.0;
  for (const Frame& f : frames) {
    const auto chk = frame_check(f, 100, sub_seed(opts, 1, f.label), 1e-10);
    ok = ok && chk.pass;
    worst = std::max(worst, chk.worst_error);
  }
  r.pass = ok;
  r.detail = std::to_string(frames.size()) +
             " frames at dims 1/2/8/64, worst final error " +
             format_double(worst);
  return r;
}

// --- criterion 2: block decompositions build working frames and satisfy
// the interior-cut norm bound on an exhaustive (block, cut) sweep.

CriterionResult c2_block_decomposition(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = 2;
  r.name = "block_decomposition";

  std::vector<std::string> ids;
  ids.push_back(fdd_id(SpaceSpec::C0(32), std::vector<int>(32, 1), 11));
  ids.push_back(fdd_id(SpaceSpec::Lp(2.0, 32), std::vector<int>(16, 2), 12));
  ids.push_back(fdd_id(SpaceSpec::Lp(2.0, 32),
                       {3, 2, 4, 3, 2, 4, 3, 2, 4, 3, 2}, 13));

  bool ok = true;
  double worst = 0.0;
  long cut_checks = 0;
  for (const std::string& id : ids) {
    const CorpusId cid = parse_corpus_id(id);
    const FddSpec fdd = make_corpus_fdd(cid);
    const Frame f = build_frame_from_fdd(fdd);

    long expected_pairs = 0;
    for (const auto& block : fdd.blocks)
      expected_pairs += static_cast<long>(block.dim()) * block.dim();
    ok = ok && f.size() == expected_pairs &&
         fdd.pair_count() == expected_pairs;

    const auto chk = frame_check(f, 100, sub_seed(opts, 2, fdd.label), 1e-10);
    ok = ok && chk.pass;
    worst = std::max(worst, chk.worst_error);

    Rng rng(sub_seed(opts, 2, fdd.label + ":cuts"));
    std::vector<Vector> xs;
    xs.reserve(100);
    for (int i = 0; i < 100; ++i)
      xs.push_back(random_unit_vector(fdd.space, rng));

    for (int n = 1; n <= static_cast<int>(fdd.blocks.size()); ++n) {
      const int d = fdd.blocks[static_cast<std::size_t>(n - 1)].dim();
      for (int m = 1; m < d * d; ++m) {
        for (const Vector& x : xs) {
          ok = ok && proof_bound_check(fdd, x, n, m);
          ++cut_checks;
        }
      }
    }
  }
  r.pass = ok;
  r.detail = std::to_string(ids.size()) + " block patterns, " +
             std::to_string(cut_checks) +
             " interior cut checks, worst final error " + format_double(worst);
  return r;
}

// --- criterion 3: exact constants land on the known values.

CriterionResult c3_exact_values(const AcceptanceOptions&) {
  CriterionResult r;
  r.id = 3;
  r.name = "besselian_exact_values";

  bool ok = true;
  double worst_dev = 0.0;
  for (int d : {2, 4, 8, 16}) {
    const auto est = besselian_constant_exact(
        make_corpus_frame("canonical:lp:1:" + std::to_string(d)));
    const double dev = std::abs(est.value - 1.0);
    worst_dev = std::max(worst_dev, dev);
    ok = ok && dev <= 1e-12;
  }

  std::string summing_values;
  double prev = 0.0;
  for (int d : {2, 3, 4, 5}) {
    const auto est = besselian_constant_exact(
        make_corpus_frame("summing:" + std::to_string(d)));
    ok = ok && std::abs(est.value - (2.0 * d - 1.0)) <= 1e-12;
    ok = ok && est.value > prev;
    prev = est.value;
    if (!summing_values.empty()) summing_values += ",";
    summing_values += format_double(est.value);
  }
  r.pass = ok;
  r.detail = "canonical l1 constants off by at most " +
             format_double(worst_dev) + "; summing constants " +
             summing_values;
  return r;
}

// --- criterion 4: the constant agrees with the role-swapped constant.

CriterionResult c4_duality(const AcceptanceOptions&) {
  CriterionResult r;
  r.id = 4;
  r.name = "duality";

  std::vector<std::string> ids;
  for (int d : {2, 4, 8}) {
    ids.push_back("canonical:lp:1:" + std::to_string(d));
    ids.push_back("canonical:c0:" + std::to_string(d));
    ids.push_back("canonical:linf:" + std::to_string(d));
  }
  ids.push_back("halved_doubled:2");
  ids.push_back("halved_doubled:4");
  for (int d : {2, 3, 4, 5}) ids.push_back("summing:" + std::to_string(d));
  ids.push_back(fdd_id(SpaceSpec::Lp(1.0, 6), {2, 2, 2}, 3));
  ids.push_back(fdd_id(SpaceSpec::C0(6), {3, 3}, 3));
  ids.push_back(fdd_id(SpaceSpec::Linf(6), {2, 3, 1}, 3));

  bool ok = true;
  double worst = 0.0;
  for (const std::string& id : ids) {
    const double gap =
        duality_gap(make_corpus_frame(id), BesselianMethod::extreme_oracle);
    worst = std::max(worst, gap);
    ok = ok && gap <= 1e-12;
  }
  r.pass = ok;
  r.detail = std::to_string(ids.size()) +
             " oracle-eligible instances, worst duality gap " +
             format_double(worst);
  return r;
}

// --- criterion 5: the ascent estimator matches the oracle at small dims.

CriterionResult c5_ascent_calibration(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = 5;
  r.name = "ascent_calibration";

  std::vector<std::string> ids;
  for (int d : {2, 3, 4, 5}) {
    ids.push_back("canonical:lp:1:" + std::to_string(d));
    ids.push_back("canonical:c0:" + std::to_string(d));
    ids.push_back("summing:" + std::to_string(d));
  }
  ids.push_back("canonical:linf:2");
  ids.push_back("canonical:linf:4");
  for (int d : {2, 3, 4}) ids.push_back("halved_doubled:" + std::to_string(d));
  ids.push_back(fdd_id(SpaceSpec::C0(4), {2, 2}, 1));
  ids.push_back(fdd_id(SpaceSpec::C0(4), {2, 2}, 2));
  ids.push_back(fdd_id(SpaceSpec::Lp(1.0, 4), {2, 2}, 1));
  ids.push_back(fdd_id(SpaceSpec::Linf(5), {2, 3}, 1));

  bool ok = ids.size() >= 20;
  double worst_gap = 0.0;
  double worst_regression = 0.0;
  for (const std::string& id : ids) {
    const Frame f = make_corpus_frame(id);
    const auto exact = besselian_constant_exact(f);
    AscentOptions ao;
    ao.restarts = 16;
    ao.seed = sub_seed(opts, 5, f.label);
    const auto est = besselian_constant_ascent(f, ao);
    const double gap = std::abs(est.value - exact.value);
    worst_gap = std::max(worst_gap, gap);
    worst_regression = std::max(worst_regression, est.worst_regression);
    ok = ok && gap <= 1e-6;
    ok = ok && est.worst_regression <= 1e-12 * std::max(1.0, est.value);
  }
  r.pass = ok;
  r.detail = std::to_string(ids.size()) + " instances, worst oracle gap " +
             format_double(worst_gap) + ", worst half-step regression " +
             format_double(worst_regression);
  return r;
}

// --- criterion 6: sign-flip behavior: unconditional families at constant 1,
// conditional growth, and the signed-sum identity for the besselian form.

CriterionResult c6_unconditionality(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = 6;
  r.name = "unconditionality";

  bool ok = true;
  double worst_dev = 0.0;
  int sweeps = 0;
  for (const std::string& id :
       {std::string{"canonical:lp:1:12"}, std::string{"canonical:lp:2:16"},
        std::string{"canonical:c0:10"}, std::string{"halved_doubled:4"},
        std::string{"halved_doubled:8"}}) {
    const Frame f = make_corpus_frame(id);
    Rng rng(sub_seed(opts, 6, f.label + ":sweep"));
    for (int i = 0; i < 100; ++i) {
      const Vector x = random_unit_vector(f.space, rng);
      const auto res =
          unconditionality_constant(f, x, SignSearchMode::exact, 1, 0);
      const double dev = std::abs(res.value - 1.0);
      worst_dev = std::max(worst_dev, dev);
      ok = ok && dev <= 1e-12;
      ++sweeps;
    }
  }

  std::string growth;
  double prev = 0.0;
  for (int d : {2, 3, 4, 5}) {
    const Frame f = make_corpus_frame("summing:" + std::to_string(d));
    const double g = global_unconditionality_constant(
        f, 40, SignSearchMode::exact, sub_seed(opts, 6, f.label));
    ok = ok && g > prev;
    prev = g;
    if (!growth.empty()) growth += ",";
    growth += format_double(g);
  }

  double worst_bridge = 0.0;
  for (const std::string& id :
       {std::string{"canonical:lp:2:8"}, std::string{"summing:6"},
        std::string{"halved_doubled:5"},
        fdd_id(SpaceSpec::C0(6), {3, 3}, 9)}) {
    const Frame f = make_corpus_frame(id);
    Rng rng(sub_seed(opts, 6, f.label + ":bridge"));
    for (int i = 0; i < 2500; ++i) {
      const Vector x = random_unit_vector(f.space, rng);
      const Vector y = random_unit_vector(dual_space(f.space), rng);
      const SignPattern s = bridge_sign_pattern(f, x, y);
      const double lhs = besselian_form(f, x, y);
      const double rhs = pair(y, signed_sum(f, x, s));
      const double dev = std::abs(lhs - rhs);
      worst_bridge = std::max(worst_bridge, dev);
      ok = ok && dev <= 1e-12;
    }
  }

  r.pass = ok;
  r.detail = std::to_string(sweeps) + " exact sweeps off 1 by at most " +
             format_double(worst_dev) + "; summing growth " + growth +
             "; bridge identity off by at most " + format_double(worst_bridge);
  return r;
}

// --- criterion 7: the oracle constant certifies the defining inequality.

CriterionResult c7_certificate(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = 7;
  r.name = "besselian_certificate";

  std::vector<std::string> ids{
      "canonical:lp:1:2", "canonical:lp:1:8", "canonical:c0:2",
      "canonical:c0:8",   "canonical:linf:4", "halved_doubled:4",
      "summing:3",        "summing:5",
  };
  ids.push_back(fdd_id(SpaceSpec::Lp(1.0, 6), {2, 2, 2}, 3));
  ids.push_back(fdd_id(SpaceSpec::C0(6), {3, 3}, 3));
  ids.push_back(fdd_id(SpaceSpec::Linf(6), {2, 3, 1}, 3));

  bool ok = true;
  double worst_slack = -1e300;
  long pairs_checked = 0;
  for (const std::string& id : ids) {
    const Frame f = make_corpus_frame(id);
    const double constant = besselian_constant_exact(f).value;
    Rng rng(sub_seed(opts, 7, f.label));
    for (int i = 0; i < 10000; ++i) {
      const Vector x = random_unit_vector(f.space, rng);
      const Vector y = random_unit_vector(dual_space(f.space), rng);
      const double slack =
          besselian_form(f, x, y) - constant * norm(x) * norm(y);
      worst_slack = std::max(worst_slack, slack);
      ok = ok && slack <= 1e-9;
      ++pairs_checked;
    }
  }
  r.pass = ok;
  r.detail = std::to_string(ids.size()) + " frames x 10000 pairs, max slack " +
             format_double(worst_slack);
  return r;
}

// --- criterion 8: truncated pairing residuals stay under the tail bound,
// and tail norms shrink as the cut moves right.

CriterionResult c8_shrinking(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = 8;
  r.name = "shrinking_tails";

  bool ok = true;
  long residual_checks = 0;
  int tail_sweeps = 0;
  for (int d : {4, 8, 16}) {
    const Frame f = make_corpus_frame("canonical:lp:1:" + std::to_string(d));
    const SpaceSpec dual = dual_space(f.space);
    Rng rng(sub_seed(opts, 8, f.label));
    for (int i = 0; i < 334; ++i) {
      const Vector y = random_unit_vector(dual, rng);
      const Vector x = random_unit_vector(f.space, rng);
      const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(f.size()) + 1));
      ok = ok && shrinking_residual_check(f, y, x, m, 1.0, 1e-12);
      ++residual_checks;
    }
    for (int i = 0; i < 30; ++i) {
      const Vector y = random_unit_vector(dual, rng);
      double prev = 0.0;
      for (int m = 0; m <= f.size(); ++m) {
        const double t = tail_functional_norm(f, y, m);
        if (m > 0) ok = ok && t <= prev + 1e-12;
        prev = t;
      }
      ++tail_sweeps;
    }
  }
  r.pass = ok;
  r.detail = std::to_string(residual_checks) + " residual checks, " +
             std::to_string(tail_sweeps) + " monotone tail sweeps";
  return r;
}

template <typename Fn>
CriterionResult timed_criterion(int id, const char* name, double limit_seconds,
                                Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r.id = id;
    r.name = name;
    r.pass = false;
    r.detail = std::string{"exception: "} + e.what();
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (limit_seconds > 0.0 && r.seconds > limit_seconds) {
    r.pass = false;
    r.detail += "; exceeded the " + format_double(limit_seconds) + " s budget";
  }
  return r;
}

std::vector<CriterionResult> run_core_criteria(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(timed_criterion(1, "reconstruction", 5.0,
                                [&] { return c1_reconstruction(opts); }));
  out.push_back(timed_criterion(2, "block_decomposition", 10.0,
                                [&] { return c2_block_decomposition(opts); }));
  out.push_back(timed_criterion(3, "besselian_exact_values", 30.0,
                                [&] { return c3_exact_values(opts); }));
  out.push_back(
      timed_criterion(4, "duality", 0.0, [&] { return c4_duality(opts); }));
  out.push_back(timed_criterion(5, "ascent_calibration", 0.0,
                                [&] { return c5_ascent_calibration(opts); }));
  out.push_back(timed_criterion(6, "unconditionality", 0.0,
                                [&] { return c6_unconditionality(opts); }));
  out.push_back(timed_criterion(7, "besselian_certificate", 0.0,
                                [&] { return c7_certificate(opts); }));
  out.push_back(timed_criterion(8, "shrinking_tails", 0.0,
                                [&] { return c8_shrinking(opts); }));
  return out;
}

bool all_pass(const std::vector<CriterionResult>& criteria) {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.pass; });
}

// --- criterion 9: the suite is deterministic and does catch failures.

CriterionResult c9_determinism(const AcceptanceOptions& opts,
                               const std::vector<CriterionResult>& first) {
  CriterionResult r;
  r.id = 9;
  r.name = "determinism";

  AcceptanceReport run1;
  run1.criteria = first;
  run1.pass = all_pass(first);
  AcceptanceReport run2;
  run2.criteria = run_core_criteria(opts);
  run2.pass = all_pass(run2.criteria);
  const bool identical = acceptance_report_json(run1, opts.seed) ==
                         acceptance_report_json(run2, opts.seed);

  // The failure path must trip: a corrupted frame cannot reconstruct.
  Frame bad = make_corpus_frame("canonical:lp:2:4");
  bad.label = "tampered";
  bad.pairs[1].a[2] += 0.25;
  const bool tamper_caught =
      !frame_check(bad, 16, sub_seed(opts, 9, bad.label), 1e-10).pass;

  r.pass = identical && tamper_caught;
  r.detail = std::string{identical ? "re-run report byte-identical"
                                   : "re-run report differs"} +
             (tamper_caught ? "; corrupted frame rejected"
                            : "; corrupted frame slipped through");
  return r;
}

}  // namespace

AcceptanceReport run_acceptance(const AcceptanceOptions& options) {
  AcceptanceReport report;
  report.criteria = run_core_criteria(options);
  const auto first = report.criteria;
  report.criteria.push_back(timed_criterion(
      9, "determinism", 0.0, [&] { return c9_determinism(options, first); }));
  report.pass = all_pass(report.criteria);
  return report;
}

std::string acceptance_report_json(const AcceptanceReport& report,
                                   std::uint64_t seed) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["seed"] = seed;
  ordered_json criteria = ordered_json::array();
  ordered_json failures = ordered_json::array();
  for (const auto& c : report.criteria) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    criteria.push_back(std::move(jc));
    if (!c.pass) failures.push_back(c.name);
  }
  j["criteria"] = std::move(criteria);
  j["failures"] = std::move(failures);
  j["pass"] = report.pass;
  return j.dump(2);
}

}  // namespace framelab
