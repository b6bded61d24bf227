// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/frame.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "framelab/rng.hpp"

namespace framelab {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

void require_ambient(const Frame& f, const Vector& x, const char* who) {
  require(x.space == f.space,
          std::string(who) + ": vector does not live in the frame's space");
}

double ambient_norm(const SpaceSpec& s, const Eigen::VectorXd& v) {
  return norm(s, std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

// Maximizes w.c over { c : norm(Q c) <= 1 } for an orthonormal column basis
// Q of the tail span. The objective is linear and the body convex, so every
// local maximum is global; ascent along a fixed direction set with
// backtracking plus restarts handles the polytope faces of the sup and l1
// balls, where a pure gradient step can stall.
double restricted_norm_ascent(const SpaceSpec& ambient, const Eigen::MatrixXd& Q,
                              const Eigen::VectorXd& w, std::uint64_t seed) {
  const int k = static_cast<int>(Q.cols());
  const double wn = w.norm();
  if (wn == 0.0 || k == 0) return 0.0;

  const auto body_norm = [&](const Eigen::VectorXd& c) {
    return ambient_norm(ambient, Eigen::VectorXd(Q * c));
  };

  Rng rng(seed);
  double best = 0.0;
  constexpr int kRestarts = 32;
  constexpr int kMaxIterations = 400;

  for (int restart = 0; restart < kRestarts; ++restart) {
    Eigen::VectorXd c(k);
    if (restart == 0) {
      c = w;
    } else {
      for (int i = 0; i < k; ++i) c[i] = rng.gaussian();
    }
    double gc = body_norm(c);
    if (gc < 1e-300) continue;
    c /= gc;
    double value = w.dot(c);
    if (value < 0.0) {
      c = -c;
      value = -value;
    }

    double step = 1.0;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      bool improved = false;

      // Direction set: the gradient, the basis axes, two fresh random dirs.
      std::vector<Eigen::VectorXd> dirs;
      dirs.reserve(static_cast<std::size_t>(2 * k + 3));
      dirs.push_back(w / wn);
      for (int j = 0; j < k; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(k);
        e[j] = 1.0;
        dirs.push_back(e);
        e[j] = -1.0;
        dirs.push_back(e);
      }
      for (int r = 0; r < 2; ++r) {
        Eigen::VectorXd d(k);
        for (int i = 0; i < k; ++i) d[i] = rng.gaussian();
        const double dn = d.norm();
        if (dn > 0.0) dirs.push_back(d / dn);
      }

      for (const auto& d : dirs) {
        for (double tau = step; tau > 1e-13; tau *= 0.5) {
          Eigen::VectorXd cand = c + tau * d;
          const double g = body_norm(cand);
          if (g < 1e-300) continue;
          cand /= g;
          const double fc = w.dot(cand);
          if (fc > value + 1e-15 * (1.0 + std::abs(value))) {
            c = std::move(cand);
            value = fc;
            step = std::min(tau * 2.0, 4.0);
            improved = true;
            break;
          }
        }
        if (improved) break;
      }

      if (!improved) {
        if (step <= 1e-12) break;
        step *= 0.25;
      }
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace

void validate_frame_shape(const Frame& f) {
  const auto n = static_cast<std::size_t>(f.space.dim);
  for (const auto& p : f.pairs)
    if (p.a.size() != n || p.b.size() != n)
      throw std::invalid_argument(
          "frame pair coordinate length does not match the ambient dimension");
}

std::vector<double> analysis(const Frame& f, const Vector& x) {
  require_ambient(f, x, "analysis");
  std::vector<double> c;
  c.reserve(f.pairs.size());
  for (const auto& p : f.pairs) c.push_back(dot(p.b, x.coords));
  return c;
}

Vector synthesis(const Frame& f, std::span<const double> coeffs) {
  require(coeffs.size() == f.pairs.size(),
          "synthesis: coefficient count does not match frame size");
  Vector out = zero_vector(f.space);
  for (std::size_t n = 0; n < f.pairs.size(); ++n) {
    const auto& a = f.pairs[n].a;
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] += coeffs[n] * a[i];
  }
  return out;
}

Vector partial_sum(const Frame& f, const Vector& x, int k) {
  require(k >= 0 && k <= f.size(), "partial sum index out of range");
  require_ambient(f, x, "partial_sum");
  Vector out = zero_vector(f.space);
  for (int n = 0; n < k; ++n) {
    const auto& p = f.pairs[static_cast<std::size_t>(n)];
    const double c = dot(p.b, x.coords);
    for (std::size_t i = 0; i < p.a.size(); ++i) out.coords[i] += c * p.a[i];
  }
  return out;
}

ReconstructionTrace reconstruction_trace(const Frame& f, const Vector& x) {
  require_ambient(f, x, "reconstruction_trace");
  ReconstructionTrace trace;
  trace.input_norm = norm(x);
  trace.errors.reserve(static_cast<std::size_t>(f.size()) + 1);

  Vector s = zero_vector(f.space);
  Vector diff = x;
  for (auto& d : diff.coords) d = -d;  // S_0 - x
  trace.errors.push_back(norm(diff));
  for (const auto& p : f.pairs) {
    const double c = dot(p.b, x.coords);
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      s.coords[i] += c * p.a[i];
      diff.coords[i] = s.coords[i] - x.coords[i];
    }
    trace.errors.push_back(norm(diff));
  }
  return trace;
}

Frame dual_frame(const Frame& f) {
  Frame d;
  d.space = dual_space(f.space);
  d.label = f.label;
  d.pairs.reserve(f.pairs.size());
  for (const auto& p : f.pairs) d.pairs.push_back(FramePair{p.b, p.a});
  return d;
}

FrameCheckReport frame_check(const Frame& f, int samples, std::uint64_t seed,
                             double tol) {
  require(samples >= 0, "frame_check: negative sample count");
  validate_frame_shape(f);
  FrameCheckReport report;
  report.worst_input = zero_vector(f.space);
  if (f.dim() == 0) return report;

  const auto probe = [&](const Vector& x) {
    const auto trace = reconstruction_trace(f, x);
    ++report.samples;
    if (trace.final_error() > report.worst_error) {
      report.worst_error = trace.final_error();
      report.worst_input = x;
    }
  };

  for (int j = 1; j <= f.dim(); ++j) probe(unit_vector(f.space, j));
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) probe(random_unit_vector(f.space, rng));

  report.pass = report.worst_error <= tol;
  return report;
}

Frame coordinate_section(const Frame& f, int leading_dim) {
  require(leading_dim >= 1 && leading_dim <= f.dim(),
          "coordinate_section: leading dimension out of range");
  Frame out;
  out.space = f.space;
  out.space.dim = leading_dim;
  out.label = f.label + ":section=" + std::to_string(leading_dim);
  out.pairs.reserve(f.pairs.size());
  const auto d = static_cast<std::size_t>(leading_dim);
  for (const auto& p : f.pairs)
    out.pairs.push_back(FramePair{{p.a.begin(), p.a.begin() + d},
                                  {p.b.begin(), p.b.begin() + d}});
  return out;
}

double tail_functional_norm(const Frame& f, const Vector& y, int m) {
  require(m >= 0 && m <= f.size(), "tail index out of range");
  require(y.space == dual_space(f.space),
          "tail_functional_norm: y must live in the dual space");
  const int M = f.size();
  const int dim = f.dim();
  if (m == M || dim == 0) return 0.0;

  // Support of the tail vectors; empty support means a zero span.
  std::vector<int> support;
  for (int i = 0; i < dim; ++i) {
    for (int n = m; n < M; ++n) {
      if (f.pairs[static_cast<std::size_t>(n)].a[static_cast<std::size_t>(i)] != 0.0) {
        support.push_back(i);
        break;
      }
    }
  }
  if (support.empty()) return 0.0;

  Eigen::MatrixXd tails(dim, M - m);  // columns are the tail vectors
  for (int n = m; n < M; ++n)
    for (int i = 0; i < dim; ++i)
      tails(i, n - m) = f.pairs[static_cast<std::size_t>(n)].a[static_cast<std::size_t>(i)];

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(tails);
  qr.setThreshold(1e-10);
  const int rank = static_cast<int>(qr.rank());
  if (rank == 0) return 0.0;

  Eigen::VectorXd yv(dim);
  for (int i = 0; i < dim; ++i) yv[i] = y.coords[static_cast<std::size_t>(i)];

  // lp(2): the restricted norm is the length of the orthogonal projection.
  // Coordinate subspace: closed-form restricted dual norm over the support.
  const bool euclidean = f.space.kind == SpaceKind::lp && f.space.p == 2.0;
  if (!euclidean && rank == static_cast<int>(support.size())) {
    std::vector<double> restricted;
    restricted.reserve(support.size());
    for (int i : support) restricted.push_back(y.coords[static_cast<std::size_t>(i)]);
    SpaceSpec restricted_dual = y.space;
    restricted_dual.dim = static_cast<int>(restricted.size());
    return norm(restricted_dual, restricted);
  }

  Eigen::MatrixXd Q = Eigen::MatrixXd(qr.householderQ()).leftCols(rank);
  Eigen::VectorXd w = Q.transpose() * yv;
  if (euclidean) return w.norm();

  const std::uint64_t seed =
      mix_seed(fnv1a64(f.label), static_cast<std::uint64_t>(m));
  return restricted_norm_ascent(f.space, Q, w, seed);
}

bool shrinking_residual_check(const Frame& f, const Vector& y, const Vector& x,
                              int m, double besselian_bound, double tol) {
  require(besselian_bound >= 0.0, "besselian bound must be nonnegative");
  require_ambient(f, x, "shrinking_residual_check");
  require(y.space == dual_space(f.space),
          "shrinking_residual_check: y must live in the dual space");
  require(m >= 0 && m <= f.size(), "truncation index out of range");

  double truncated = 0.0;
  for (int n = 0; n < m; ++n) {
    const auto& p = f.pairs[static_cast<std::size_t>(n)];
    truncated += dot(y.coords, p.a) * dot(p.b, x.coords);
  }
  const double residual = std::abs(pair(y, x) - truncated);
  const double bound =
      besselian_bound * tail_functional_norm(f, y, m) * norm(x) + tol;
  return residual <= bound;
}

}  // namespace framelab
