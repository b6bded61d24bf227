// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_FDD_HPP
#define FRAMELAB_FDD_HPP

#include <string>
#include <vector>

#include "framelab/frame.hpp"
#include "framelab/space.hpp"

namespace framelab {

// One block of a finite-dimensional decomposition: a biorthogonal system
// (basis e_i, dual functionals e*_i) spanning the range of the block
// projection P. Vectors and functionals are stored in ambient coordinates;
// the projection is a dim x dim row-major matrix.
struct FddBlock {
  std::vector<std::vector<double>> basis;
  std::vector<std::vector<double>> dual;
  std::vector<std::vector<double>> projection;
  // Derived metadata, recomputed on load: dual-space norms of the dual
  // functionals, and whether they all stay within 1 + 1e-8 (together with
  // the unit basis norms this makes the block an Auerbach system).
  std::vector<double> dual_norms;
  bool auerbach = false;

  int dim() const { return static_cast<int>(basis.size()); }
};

struct FddSpec {
  SpaceSpec space;
  std::vector<FddBlock> blocks;
  std::string label;  // transient; not serialized

  int total_dim() const;
  int pair_count() const;  // sum of squared block dimensions
};

// Fills dual_norms / auerbach on every block.
void annotate_blocks(FddSpec& fdd);

// Checks, to `tol`: unit basis norms, biorthogonality within each block,
// projections summing to the identity, and pairwise products P_n P_m = 0.
// Throws std::invalid_argument on the first violation.
void validate_fdd(const FddSpec& fdd, double tol = 1e-10);

// The reconstructing family induced by the decomposition. Block n of
// dimension d contributes d^2 consecutive pairs, index j = k*d + r with
// 0 <= k <= d-1, 1 <= r <= d:
//   a_{n,j} = (1/d) e_{n,r}        b_{n,j} = e*_{n,r} composed with P_n
// The frame label is taken from the spec.
Frame build_frame_from_fdd(const FddSpec& fdd);

// Partial sum cut inside block `block_index` (1-based) after `m` of its
// pairs, 1 <= m < d^2: all pairs of blocks 1..block_index-1 applied to the
// block projections, plus the first m pairs of the block applied to P_n x.
// Coincides with the flat partial_sum of build_frame_from_fdd at offset + m.
Vector mixed_partial_sum(const FddSpec& fdd, const Vector& x, int block_index,
                         int m);

// Verifies the norm bound behind the construction. With the unique alpha
// satisfying alpha*d < m <= (alpha+1)*d, checks
//   norm(mixed_partial_sum(x, n, m) - x)
//     <= norm(sum_{k<n} P_k x - x) + (alpha/d) norm(P_n x)
//        + ((m - alpha*d)/d) norm(P_n x) + tol
// Requires the block to be an Auerbach system (dual norms <= 1 + 1e-8);
// throws std::domain_error otherwise, since the estimate relies on it.
bool proof_bound_check(const FddSpec& fdd, const Vector& x, int block_index,
                       int m, double tol = 1e-10);

}  // namespace framelab

#endif  // FRAMELAB_FDD_HPP
