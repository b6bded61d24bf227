// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_FRAME_HPP
#define FRAMELAB_FRAME_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "framelab/space.hpp"

namespace framelab {

// One frame element: a vector `a` of the ambient space and a functional `b`
// given by its coefficients against the canonical basis.
struct FramePair {
  std::vector<double> a;
  std::vector<double> b;
};

// A finite reconstructing family: x == sum_n b_n(x) a_n for every x, up to
// the working tolerance. Pairs are ordered; partial sums depend on the order.
// No normalization of the a_n or b_n is imposed.
struct Frame {
  SpaceSpec space;
  std::string label;
  std::vector<FramePair> pairs;

  int dim() const { return space.dim; }
  int size() const { return static_cast<int>(pairs.size()); }
};

// Throws unless every pair has coordinate length == space.dim.
void validate_frame_shape(const Frame& f);

// Coefficients (b_1(x), ..., b_M(x)).
std::vector<double> analysis(const Frame& f, const Vector& x);

// sum_n coeffs_n a_n.
Vector synthesis(const Frame& f, std::span<const double> coeffs);

// S_k(x) = sum_{n<=k} b_n(x) a_n, 0 <= k <= M. S_0 = 0, S_M ~ x.
Vector partial_sum(const Frame& f, const Vector& x, int k);

struct ReconstructionTrace {
  std::vector<double> errors;  // errors[k] = norm(S_k(x) - x), k = 0..M
  double input_norm = 0.0;

  double final_error() const { return errors.back(); }
};

ReconstructionTrace reconstruction_trace(const Frame& f, const Vector& x);

// Swaps the roles: pairs (b_n, a_n) over dual_space(f.space). The label is
// preserved so that applying this twice over reflexive lp (p > 1) is the
// identity on every field.
Frame dual_frame(const Frame& f);

struct FrameCheckReport {
  bool pass = true;
  double worst_error = 0.0;
  Vector worst_input;
  int samples = 0;
};

// Reconstruction stress test: the canonical basis vectors plus `samples`
// seeded unit-sphere draws (gaussian direction, ambient normalization).
// Fails when any final reconstruction error exceeds tol.
FrameCheckReport frame_check(const Frame& f, int samples, std::uint64_t seed,
                             double tol);

// Restriction to the complemented subspace of the leading `leading_dim`
// coordinates: pairs (P a_n, b_n restricted), same kind of norm. The result
// passes frame_check whenever the source does.
Frame coordinate_section(const Frame& f, int leading_dim);

// Norm of y restricted to span(a_n : n > m) as a functional on that span
// with the ambient norm: sup { pair(y, v) : v in span, norm(v) <= 1 }.
// Exact when the span is a coordinate subspace (restricted dual norm in
// closed form) or the ambient is lp(2) (orthogonal projection); otherwise a
// projected-ascent lower estimate with 32 restarts seeded from (label, m).
double tail_functional_norm(const Frame& f, const Vector& y, int m);

// Residual bound test for the truncated pairing expansion of y against x:
//   |pair(y, x) - sum_{n<=m} pair(y, a_n) pair(b_n, x)|
//     <= besselian_bound * tail_functional_norm(y, m) * norm(x) + tol.
bool shrinking_residual_check(const Frame& f, const Vector& y,
                              const Vector& x, int m, double besselian_bound,
                              double tol);

}  // namespace framelab

#endif  // FRAMELAB_FRAME_HPP
