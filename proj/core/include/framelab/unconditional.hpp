// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_UNCONDITIONAL_HPP
#define FRAMELAB_UNCONDITIONAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "framelab/frame.hpp"

namespace framelab {

// Entries are +1 or -1, one per frame pair.
struct SignPattern {
  std::vector<int> signs;

  int size() const { return static_cast<int>(signs.size()); }
};

// Renders as one character per sign: "+-++".
std::string to_string(const SignPattern& s);

void validate_sign_pattern(const SignPattern& s, int frame_size);

// sum_n s_n b_n(x) a_n. With all signs +1 this is plain reconstruction.
Vector signed_sum(const Frame& f, const Vector& x, const SignPattern& s);

enum class SignSearchMode { exact, sampled };

struct UnconditionalityResult {
  double value = 0.0;
  SignPattern witness;
  std::int64_t evaluations = 0;
  bool budget_exhausted = false;
};

// max_s norm(signed_sum(x, s)) / norm(x) over sign patterns. Exact mode
// sweeps all 2^M patterns (M <= 20, Gray order, incremental sums); sampled
// mode climbs by greedy single flips from seeded random patterns within an
// evaluation budget. Witness ties resolve to the earliest pattern in the
// all-plus-first enumeration order (the order signs_from_mask induces, with
// '+' before '-').
UnconditionalityResult unconditionality_constant(const Frame& f,
                                                 const Vector& x,
                                                 SignSearchMode mode,
                                                 std::int64_t budget,
                                                 std::uint64_t seed);

// Supremum of the per-vector constant over seeded unit-sphere samples plus
// deterministic probes (+/-e_i and the alternating vector (1,-1,1,...)).
// budget_per_x <= 0 selects the 64*M default for sampled mode.
double global_unconditionality_constant(const Frame& f, int samples,
                                        SignSearchMode mode,
                                        std::uint64_t seed,
                                        std::int64_t budget_per_x = 0);

// Reconstruction trace of the series reordered by `permutation`
// (1-based, a bijection of 1..M).
ReconstructionTrace permuted_reconstruction(const Frame& f, const Vector& x,
                                            std::span<const int> permutation);

// The sign choice that turns the besselian form into a single signed sum:
// s_n = sign(b_n(x) * y(a_n)), sign(0) := +1. For every x, y:
//   besselian_form(x, y) == pair(y, signed_sum(x, s)).
SignPattern bridge_sign_pattern(const Frame& f, const Vector& x,
                                const Vector& y);

// Checks besselian_form(x, y) <= bound * norm(x) * norm(y) + tol, the
// inequality an unconditionality constant must satisfy as a besselian bound.
bool unconditional_implies_besselian_check(const Frame& f, const Vector& x,
                                           const Vector& y, double bound,
                                           double tol);

}  // namespace framelab

#endif  // FRAMELAB_UNCONDITIONAL_HPP
