// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/besselian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "framelab/corpus.hpp"
#include "framelab/rng.hpp"

namespace framelab {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

constexpr int kOracleDimCap = 24;

// Sign vector of a sup-ball extreme point from its enumeration index:
// coordinate i carries bit (n-1-i), set bit = -1. Index 0 is all +1.
std::vector<double> signs_from_mask(std::uint64_t mask, int n) {
  std::vector<double> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    s[static_cast<std::size_t>(i)] = ((mask >> (n - 1 - i)) & 1u) ? -1.0 : 1.0;
  return s;
}

struct SupSweepBest {
  double value = -1.0;
  std::uint64_t mask = 0;
  int side_index = 0;  // closed-form side: coordinate of the +/-e_j witness
};

}  // namespace

double besselian_form(const Frame& f, const Vector& x, const Vector& y) {
  require(x.space == f.space, "besselian_form: x must live in the ambient space");
  require(y.space == dual_space(f.space),
          "besselian_form: y must live in the dual space");
  double s = 0.0;
  for (const auto& p : f.pairs)
    s += std::abs(dot(p.b, x.coords)) * std::abs(dot(y.coords, p.a));
  return s;
}

BesselianEstimate besselian_constant_exact(const Frame& f) {
  validate_frame_shape(f);
  const SpaceSpec dual = dual_space(f.space);
  if (!has_enumerable_extreme_points(f.space) ||
      !has_enumerable_extreme_points(dual))
    throw std::domain_error(
        "extreme-point oracle needs enumerable balls on both sides (lp(1), "
        "c0, linf); got " + to_string(f.space));
  require(f.dim() >= 1, "oracle requires a positive dimension");
  if (f.dim() > kOracleDimCap)
    throw std::domain_error("extreme-point oracle capped at dimension 24");

  const int n = f.dim();
  const int m = f.size();
  const std::uint64_t sweep = std::uint64_t{1} << n;

  BesselianEstimate est;
  est.method = BesselianMethod::extreme_oracle;

  if (f.space.sup_norm()) {
    // x ranges over 2^n sign vectors (Gray order, incremental coefficients),
    // y over the +/-e_j extremes of the dual lp(1) ball in closed form.
    std::vector<double> x = signs_from_mask(0, n);
    std::vector<double> c(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      c[static_cast<std::size_t>(i)] = dot(f.pairs[static_cast<std::size_t>(i)].b, x);

    SupSweepBest best;
    std::uint64_t mask = 0;
    for (std::uint64_t k = 0; k < sweep; ++k) {
      if (k > 0) {
        const int bit = std::countr_zero(k);
        const int coord = n - 1 - bit;
        mask ^= std::uint64_t{1} << bit;
        if ((k & 0xfffu) == 0) {
          // Periodic refresh to keep incremental rounding out of the sweep.
          x = signs_from_mask(mask, n);
          for (int i = 0; i < m; ++i)
            c[static_cast<std::size_t>(i)] = dot(f.pairs[static_cast<std::size_t>(i)].b, x);
        } else {
          x[static_cast<std::size_t>(coord)] = -x[static_cast<std::size_t>(coord)];
          const double delta = 2.0 * x[static_cast<std::size_t>(coord)];
          for (int i = 0; i < m; ++i)
            c[static_cast<std::size_t>(i)] +=
                delta * f.pairs[static_cast<std::size_t>(i)].b[static_cast<std::size_t>(coord)];
        }
      }
      double val = -1.0;
      int bestj = 0;
      for (int j = 0; j < n; ++j) {
        double u = 0.0;
        for (int i = 0; i < m; ++i)
          u += std::abs(c[static_cast<std::size_t>(i)]) *
               std::abs(f.pairs[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(j)]);
        if (u > val) {
          val = u;
          bestj = j;
        }
      }
      if (val > best.value ||
          (val == best.value && mask < best.mask)) {
        best.value = val;
        best.mask = mask;
        best.side_index = bestj;
      }
    }

    est.value = best.value;
    est.witness_x = Vector{f.space, signs_from_mask(best.mask, n)};
    est.witness_y = unit_vector(dual, best.side_index + 1);
    est.iterations = static_cast<int>(sweep);
    return est;
  }

  // Ambient lp(1): x ranges over +e_i (the -e_i twins give the same value
  // and can never win the earliest-witness tie), y over 2^n sign vectors of
  // the dual sup ball, Gray order with incremental pairings.
  double best_val = -1.0;
  int best_i = 0;
  std::uint64_t best_mask = 0;
  int evaluations = 0;

  for (int i = 0; i < n; ++i) {
    std::vector<double> c(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q)
      c[static_cast<std::size_t>(q)] =
          std::abs(f.pairs[static_cast<std::size_t>(q)].b[static_cast<std::size_t>(i)]);

    std::vector<double> y = signs_from_mask(0, n);
    std::vector<double> t(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q)
      t[static_cast<std::size_t>(q)] = dot(y, f.pairs[static_cast<std::size_t>(q)].a);

    double local_best = -1.0;
    std::uint64_t local_mask = 0;
    std::uint64_t mask = 0;
    for (std::uint64_t k = 0; k < sweep; ++k) {
      if (k > 0) {
        const int bit = std::countr_zero(k);
        const int coord = n - 1 - bit;
        mask ^= std::uint64_t{1} << bit;
        if ((k & 0xfffu) == 0) {
          y = signs_from_mask(mask, n);
          for (int q = 0; q < m; ++q)
            t[static_cast<std::size_t>(q)] = dot(y, f.pairs[static_cast<std::size_t>(q)].a);
        } else {
          y[static_cast<std::size_t>(coord)] = -y[static_cast<std::size_t>(coord)];
          const double delta = 2.0 * y[static_cast<std::size_t>(coord)];
          for (int q = 0; q < m; ++q)
            t[static_cast<std::size_t>(q)] +=
                delta * f.pairs[static_cast<std::size_t>(q)].a[static_cast<std::size_t>(coord)];
        }
      }
      double val = 0.0;
      for (int q = 0; q < m; ++q)
        val += c[static_cast<std::size_t>(q)] * std::abs(t[static_cast<std::size_t>(q)]);
      if (val > local_best || (val == local_best && mask < local_mask)) {
        local_best = val;
        local_mask = mask;
      }
      ++evaluations;
    }
    if (local_best > best_val) {
      best_val = local_best;
      best_i = i;
      best_mask = local_mask;
    }
  }

  est.value = best_val;
  est.witness_x = unit_vector(f.space, best_i + 1);
  est.witness_y = Vector{dual, signs_from_mask(best_mask, n)};
  est.iterations = evaluations;
  return est;
}

BesselianEstimate besselian_constant_ascent(const Frame& f,
                                            const AscentOptions& opts) {
  validate_frame_shape(f);
  require(f.dim() >= 1, "ascent requires a positive dimension");
  require(opts.restarts >= 0 && opts.max_sweeps >= 1 && opts.tol >= 0.0,
          "bad ascent options");

  const SpaceSpec dual = dual_space(f.space);
  const int n = f.dim();
  const int m = f.size();

  BesselianEstimate best;
  best.method = BesselianMethod::alternating_ascent;
  best.value = -1.0;
  double worst_regression = 0.0;

  // Inner solver shared by both half-steps: maximize sum_q coeff_q |g_q(z)|
  // over the unit ball of `ball`, where g_q is the dot against rows[q]. The
  // optimizer z is returned through `z`; monotone by construction.
  const auto sign_iteration = [&](Vector& z, const SpaceSpec& ball,
                                  const std::vector<const std::vector<double>*>& rows,
                                  const std::vector<double>& coeff) {
    std::vector<double> t(static_cast<std::size_t>(m)), prev;
    for (int inner = 0; inner < 64; ++inner) {
      for (int q = 0; q < m; ++q)
        t[static_cast<std::size_t>(q)] =
            detail::sign_plus(dot(z.coords, *rows[static_cast<std::size_t>(q)]));
      if (t == prev) break;
      Vector v = zero_vector(ball);
      for (int q = 0; q < m; ++q) {
        const double w = coeff[static_cast<std::size_t>(q)] * t[static_cast<std::size_t>(q)];
        const auto& row = *rows[static_cast<std::size_t>(q)];
        for (int i = 0; i < n; ++i) v.coords[static_cast<std::size_t>(i)] += w * row[static_cast<std::size_t>(i)];
      }
      if (norm(v) == 0.0) break;
      z = norming_functional(v);
      prev = t;
    }
  };

  std::vector<const std::vector<double>*> a_rows, b_rows;
  a_rows.reserve(static_cast<std::size_t>(m));
  b_rows.reserve(static_cast<std::size_t>(m));
  for (const auto& p : f.pairs) {
    a_rows.push_back(&p.a);
    b_rows.push_back(&p.b);
  }

  Rng rng(opts.seed);
  std::vector<Vector> starts;
  for (int i = 1; i <= n; ++i) {
    starts.push_back(unit_vector(f.space, i));
    Vector neg = starts.back();
    neg.coords[static_cast<std::size_t>(i - 1)] = -1.0;
    starts.push_back(neg);
  }
  {
    // Fixed dense probes. Normalized: every start must lie inside the ball
    // or the first x half-step could shrink the objective.
    Vector ones = zero_vector(f.space);
    Vector alt = zero_vector(f.space);
    for (int i = 0; i < n; ++i) {
      ones.coords[static_cast<std::size_t>(i)] = 1.0;
      alt.coords[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1.0 : -1.0;
    }
    const double scale = norm(ones);  // same for both by symmetry
    for (auto& v : ones.coords) v /= scale;
    for (auto& v : alt.coords) v /= scale;
    starts.push_back(ones);
    starts.push_back(alt);
  }
  for (int r = 0; r < opts.restarts; ++r)
    starts.push_back(random_unit_vector(f.space, rng));

  for (const auto& start : starts) {
    Vector x = start;
    Vector y = zero_vector(dual);
    double objective = 0.0;
    int sweeps = 0;
    bool converged = false;

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      ++sweeps;
      const double before = objective;

      std::vector<double> c(static_cast<std::size_t>(m));
      for (int q = 0; q < m; ++q)
        c[static_cast<std::size_t>(q)] = std::abs(dot(f.pairs[static_cast<std::size_t>(q)].b, x.coords));
      sign_iteration(y, f.space, a_rows, c);
      // norming_functional lands in the bidual; the norm is the dual one.
      y.space = dual;
      double half = besselian_form(f, x, y);
      worst_regression = std::max(worst_regression, objective - half);
      objective = half;

      std::vector<double> d(static_cast<std::size_t>(m));
      for (int q = 0; q < m; ++q)
        d[static_cast<std::size_t>(q)] = std::abs(dot(y.coords, f.pairs[static_cast<std::size_t>(q)].a));
      Vector xd{dual, x.coords};  // optimize x through the dual-ball solver
      sign_iteration(xd, dual, b_rows, d);
      x = Vector{f.space, xd.coords};
      half = besselian_form(f, x, y);
      worst_regression = std::max(worst_regression, objective - half);
      objective = half;

      if (objective - before <= opts.tol * std::max(1.0, std::abs(objective))) {
        converged = true;
        break;
      }
    }

    if (objective > best.value) {
      best.value = objective;
      best.witness_x = x;
      best.witness_y = y;
      best.iterations = sweeps;
      best.converged = converged;
    }
  }

  if (best.value < 0.0) {
    // No start produced anything (dim 0 cannot happen; zero frame can).
    best.value = 0.0;
    best.witness_x = zero_vector(f.space);
    best.witness_y = zero_vector(dual);
  }
  best.worst_regression = worst_regression;
  return best;
}

BesselianEstimate besselian_constant(const Frame& f, BesselianMethod method,
                                     const AscentOptions& opts) {
  return method == BesselianMethod::extreme_oracle
             ? besselian_constant_exact(f)
             : besselian_constant_ascent(f, opts);
}

double duality_gap(const Frame& f, BesselianMethod method,
                   const AscentOptions& opts) {
  const auto primal = besselian_constant(f, method, opts);
  const auto dualized = besselian_constant(dual_frame(f), method, opts);
  return std::abs(primal.value - dualized.value);
}

std::string to_string(BesselianMethod m) {
  return m == BesselianMethod::extreme_oracle ? "exact" : "ascent";
}

std::vector<GrowthRow> growth_profile(const std::string& family_template,
                                      std::span<const int> dims,
                                      BesselianMethod method,
                                      const AscentOptions& opts) {
  require(!dims.empty(), "growth profile needs at least one dimension");
  std::vector<GrowthRow> rows;
  rows.reserve(dims.size());
  for (int dim : dims) {
    const Frame f =
        make_corpus_frame(family_template + ":" + std::to_string(dim));
    const auto est = besselian_constant(f, method, opts);
    rows.push_back(GrowthRow{dim, est.value, method, est.converged});
  }
  if (family_template.rfind("summing", 0) == 0) {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].value > rows[i - 1].value))
        throw std::runtime_error(
            "summing profile failed to increase strictly");
  }
  return rows;
}

}  // namespace framelab
