// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/fdd.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace framelab {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

Eigen::MatrixXd projection_matrix(const FddBlock& block, int dim) {
  Eigen::MatrixXd P(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      P(i, j) = block.projection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return P;
}

std::vector<double> apply_projection(const FddBlock& block, int dim,
                                     std::span<const double> x) {
  std::vector<double> out(static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i < dim; ++i) {
    double s = 0.0;
    const auto& row = block.projection[static_cast<std::size_t>(i)];
    for (int j = 0; j < dim; ++j) s += row[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

// b = e* composed with P, i.e. coordinates P^T e*.
std::vector<double> compose_with_projection(const FddBlock& block, int dim,
                                            const std::vector<double>& dual) {
  std::vector<double> out(static_cast<std::size_t>(dim), 0.0);
  for (int j = 0; j < dim; ++j) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i)
      s += dual[static_cast<std::size_t>(i)] * block.projection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(j)] = s;
  }
  return out;
}

void check_block_shapes(const FddSpec& fdd) {
  const auto dim = static_cast<std::size_t>(fdd.space.dim);
  require(!fdd.blocks.empty(), "decomposition has no blocks");
  for (const auto& block : fdd.blocks) {
    require(!block.basis.empty(), "empty block");
    require(block.dual.size() == block.basis.size(),
            "block basis and dual sizes differ");
    for (const auto& v : block.basis)
      require(v.size() == dim, "block basis vector has wrong length");
    for (const auto& v : block.dual)
      require(v.size() == dim, "block dual functional has wrong length");
    require(block.projection.size() == dim, "projection row count mismatch");
    for (const auto& row : block.projection)
      require(row.size() == dim, "projection column count mismatch");
  }
}

}  // namespace

int FddSpec::total_dim() const { return space.dim; }

int FddSpec::pair_count() const {
  int m = 0;
  for (const auto& b : blocks) m += b.dim() * b.dim();
  return m;
}

void annotate_blocks(FddSpec& fdd) {
  const SpaceSpec dual = dual_space(fdd.space);
  for (auto& block : fdd.blocks) {
    block.dual_norms.clear();
    block.dual_norms.reserve(block.dual.size());
    bool auerbach = true;
    for (const auto& f : block.dual) {
      const double n = norm(dual, f);
      block.dual_norms.push_back(n);
      if (n > 1.0 + 1e-8) auerbach = false;
    }
    for (const auto& e : block.basis)
      if (std::abs(norm(fdd.space, e) - 1.0) > 1e-8) auerbach = false;
    block.auerbach = auerbach;
  }
}

void validate_fdd(const FddSpec& fdd, double tol) {
  check_block_shapes(fdd);
  const int dim = fdd.space.dim;

  for (std::size_t n = 0; n < fdd.blocks.size(); ++n) {
    const auto& block = fdd.blocks[n];
    for (const auto& e : block.basis)
      if (std::abs(norm(fdd.space, e) - 1.0) > tol)
        throw std::invalid_argument("block basis vector is not unit norm");
    for (std::size_t i = 0; i < block.dual.size(); ++i)
      for (std::size_t j = 0; j < block.basis.size(); ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        if (std::abs(dot(block.dual[i], block.basis[j]) - expected) > tol)
          throw std::invalid_argument("block system is not biorthogonal");
      }
  }

  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& block : fdd.blocks) sum += projection_matrix(block, dim);
  if ((sum - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("block projections do not sum to the identity");

  for (std::size_t n = 0; n < fdd.blocks.size(); ++n) {
    const Eigen::MatrixXd Pn = projection_matrix(fdd.blocks[n], dim);
    for (std::size_t m = n + 1; m < fdd.blocks.size(); ++m) {
      const Eigen::MatrixXd Pm = projection_matrix(fdd.blocks[m], dim);
      if ((Pn * Pm).cwiseAbs().maxCoeff() > tol ||
          (Pm * Pn).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("block projections are not disjoint");
    }
  }
}

Frame build_frame_from_fdd(const FddSpec& fdd) {
  check_block_shapes(fdd);
  Frame f;
  f.space = fdd.space;
  f.label = fdd.label.empty() ? "fdd" : fdd.label;
  f.pairs.reserve(static_cast<std::size_t>(fdd.pair_count()));
  const int dim = fdd.space.dim;

  for (const auto& block : fdd.blocks) {
    const int d = block.dim();
    const double scale = 1.0 / static_cast<double>(d);
    std::vector<std::vector<double>> composed;
    composed.reserve(static_cast<std::size_t>(d));
    for (const auto& dual : block.dual)
      composed.push_back(compose_with_projection(block, dim, dual));

    for (int k = 0; k < d; ++k) {
      for (int r = 0; r < d; ++r) {
        FramePair pair;
        pair.a.resize(static_cast<std::size_t>(dim));
        const auto& e = block.basis[static_cast<std::size_t>(r)];
        for (int i = 0; i < dim; ++i) pair.a[static_cast<std::size_t>(i)] = scale * e[static_cast<std::size_t>(i)];
        pair.b = composed[static_cast<std::size_t>(r)];
        f.pairs.push_back(std::move(pair));
      }
    }
  }
  return f;
}

Vector mixed_partial_sum(const FddSpec& fdd, const Vector& x, int block_index,
                         int m) {
  check_block_shapes(fdd);
  require(x.space == fdd.space, "mixed_partial_sum: vector space mismatch");
  require(block_index >= 1 && block_index <= static_cast<int>(fdd.blocks.size()),
          "block index out of range");
  const auto& active = fdd.blocks[static_cast<std::size_t>(block_index - 1)];
  const int d = active.dim();
  require(m >= 1 && m < d * d, "mixed partial index must satisfy 1 <= m < d^2");

  const int dim = fdd.space.dim;
  Vector out = zero_vector(fdd.space);

  // Completed blocks, each applied to its own projection of x.
  for (int n = 0; n < block_index - 1; ++n) {
    const auto& block = fdd.blocks[static_cast<std::size_t>(n)];
    const auto px = apply_projection(block, dim, x.coords);
    const int bd = block.dim();
    const double scale = 1.0 / static_cast<double>(bd);
    for (int k = 0; k < bd; ++k)
      for (int r = 0; r < bd; ++r) {
        const double coeff =
            dot(compose_with_projection(block, dim, block.dual[static_cast<std::size_t>(r)]), px);
        const auto& e = block.basis[static_cast<std::size_t>(r)];
        for (int i = 0; i < dim; ++i)
          out.coords[static_cast<std::size_t>(i)] += scale * coeff * e[static_cast<std::size_t>(i)];
      }
  }

  // First m pairs of the active block.
  const auto px = apply_projection(active, dim, x.coords);
  const double scale = 1.0 / static_cast<double>(d);
  for (int j = 0; j < m; ++j) {
    const int r = j % d;
    const double coeff =
        dot(compose_with_projection(active, dim, active.dual[static_cast<std::size_t>(r)]), px);
    const auto& e = active.basis[static_cast<std::size_t>(r)];
    for (int i = 0; i < dim; ++i)
      out.coords[static_cast<std::size_t>(i)] += scale * coeff * e[static_cast<std::size_t>(i)];
  }
  return out;
}

bool proof_bound_check(const FddSpec& fdd, const Vector& x, int block_index,
                       int m, double tol) {
  check_block_shapes(fdd);
  require(block_index >= 1 && block_index <= static_cast<int>(fdd.blocks.size()),
          "block index out of range");
  const auto& block = fdd.blocks[static_cast<std::size_t>(block_index - 1)];
  const int d = block.dim();
  require(m >= 1 && m < d * d, "partial index must satisfy 1 <= m < d^2");
  if (!block.auerbach)
    throw std::domain_error(
        "norm bound requires an Auerbach block (unit basis and dual norms)");

  const int dim = fdd.space.dim;
  const Vector s = mixed_partial_sum(fdd, x, block_index, m);
  std::vector<double> diff(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i)
    diff[static_cast<std::size_t>(i)] = s.coords[static_cast<std::size_t>(i)] - x.coords[static_cast<std::size_t>(i)];
  const double lhs = norm(fdd.space, diff);

  // alpha is the number of completed rounds through the block basis.
  const int alpha = (m - 1) / d;

  std::vector<double> head(static_cast<std::size_t>(dim), 0.0);
  for (int n = 0; n < block_index - 1; ++n) {
    const auto px = apply_projection(fdd.blocks[static_cast<std::size_t>(n)], dim, x.coords);
    for (int i = 0; i < dim; ++i) head[static_cast<std::size_t>(i)] += px[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < dim; ++i) head[static_cast<std::size_t>(i)] -= x.coords[static_cast<std::size_t>(i)];
  const double head_err = norm(fdd.space, head);

  const auto px = apply_projection(block, dim, x.coords);
  const double pn = norm(fdd.space, px);
  const double rhs = head_err +
                     (static_cast<double>(alpha) / d) * pn +
                     (static_cast<double>(m - alpha * d) / d) * pn + tol;
  return lhs <= rhs;
}

}  // namespace framelab
