// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0
//
// The library's acceptance suite: nine self-contained checks covering
// reconstruction, the block construction, exact besselian values, duality,
// ascent calibration, sign-pattern behavior, certified inequalities, tail
// diagnostics, and determinism of the suite itself. The CLI `report`
// command and the acceptance test binary are thin wrappers over this.

#ifndef FRAMELAB_ACCEPTANCE_HPP
#define FRAMELAB_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "framelab/frame.hpp"

namespace framelab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;    // deterministic one-line summary
  double seconds = 0.0;  // console display only; never serialized
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  // Additional frames swept by the reconstruction criterion. A frame that
  // fails to reconstruct makes the whole report fail.
  std::vector<Frame> extra_frames;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool pass = false;
};

// Runs all nine criteria. The determinism criterion re-runs the first eight
// with the same options and byte-compares the serialized reports, so the
// whole call is two sweeps long.
AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

// Fixed-key-order JSON document: tool, version, seed, criteria (id, name,
// pass, detail), failures, pass. Contains no timings or timestamps; equal
// runs serialize to equal bytes.
std::string acceptance_report_json(const AcceptanceReport& report,
                                   std::uint64_t seed);

}  // namespace framelab

#endif  // FRAMELAB_ACCEPTANCE_HPP
