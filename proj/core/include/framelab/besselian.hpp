// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_BESSELIAN_HPP
#define FRAMELAB_BESSELIAN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "framelab/frame.hpp"

namespace framelab {

// sum_n |b_n(x)| |y(a_n)| for x in the ambient space, y in its dual.
// Bounded by C ||x|| ||y|| exactly when the frame is besselian; the best
// constant over the unit balls is what the routines below compute.
double besselian_form(const Frame& f, const Vector& x, const Vector& y);

enum class BesselianMethod { extreme_oracle, alternating_ascent };

std::string to_string(BesselianMethod m);

struct BesselianEstimate {
  double value = 0.0;
  Vector witness_x;
  Vector witness_y;
  BesselianMethod method = BesselianMethod::extreme_oracle;
  int iterations = 0;   // oracle: points enumerated is implicit; ascent: sweeps
  bool converged = true;
  // Largest objective drop seen across any ascent half-step (rounding scale
  // when the implementation is sound). Zero for the oracle.
  double worst_regression = 0.0;
};

// Exact supremum by enumerating extreme points of both unit balls. The form
// is convex in each argument separately, so the supremum over the ball
// product is attained on extreme x and y. Requires both the ambient space
// and its dual to have enumerable extreme points (lp(1), c0, linf) and
// dim <= 24. Witnesses take the earliest maximizer in enumeration order
// (x first, then y).
BesselianEstimate besselian_constant_exact(const Frame& f);

struct AscentOptions {
  // Random-sphere starts, in addition to the fixed ones (all +/-e_i plus
  // the normalized all-ones and alternating vectors).
  int restarts = 16;
  int max_sweeps = 100;
  double tol = 1e-12;      // relative gain threshold per sweep
  std::uint64_t seed = 1;
};

// Alternating maximization. Holding x, the inner problem
// max_y sum_n c_n |y(a_n)| with c_n = |b_n(x)| is solved by sign iteration:
// t_n = sign(y(a_n)) (sign(0) := +1), v = sum c_n t_n a_n,
// y <- norming_functional(v), repeated until the sign pattern stabilizes;
// symmetrically for x. Each half-step is a partial maximization, so the
// objective never decreases; runs stop when a sweep gains less than tol
// relatively. A lower-bound estimator: restarts mitigate, but do not
// eliminate, sub-optimal fixed points.
BesselianEstimate besselian_constant_ascent(const Frame& f,
                                            const AscentOptions& opts = {});

BesselianEstimate besselian_constant(const Frame& f, BesselianMethod method,
                                     const AscentOptions& opts = {});

// |L(F) - L(F*)| with both constants computed by the same method.
double duality_gap(const Frame& f, BesselianMethod method,
                   const AscentOptions& opts = {});

struct GrowthRow {
  int dim = 0;
  double value = 0.0;
  BesselianMethod method = BesselianMethod::extreme_oracle;
  bool converged = true;
};

// Evaluates a dim-indexed corpus family ("canonical:lp:1", "halved_doubled",
// "summing") across the given dimensions. For the summing family the values
// must increase strictly; a violation throws std::runtime_error.
std::vector<GrowthRow> growth_profile(const std::string& family_template,
                                      std::span<const int> dims,
                                      BesselianMethod method,
                                      const AscentOptions& opts = {});

}  // namespace framelab

#endif  // FRAMELAB_BESSELIAN_HPP
