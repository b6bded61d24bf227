// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/unconditional.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "framelab/besselian.hpp"
#include "framelab/rng.hpp"

namespace framelab {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

constexpr int kExactSweepCap = 20;

// Lexicographic order with '+' before '-'; the exact sweep's mask order
// (coordinate q on bit M-1-q, set bit = -1) induces exactly this.
bool pattern_precedes(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];  // +1 sorts before -1
  }
  return false;
}

std::vector<int> pattern_from_mask(std::uint64_t mask, int m) {
  std::vector<int> s(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q)
    s[static_cast<std::size_t>(q)] = ((mask >> (m - 1 - q)) & 1u) ? -1 : 1;
  return s;
}

}  // namespace

std::string to_string(const SignPattern& s) {
  std::string out;
  out.reserve(s.signs.size());
  for (int v : s.signs) out += v > 0 ? '+' : '-';
  return out;
}

void validate_sign_pattern(const SignPattern& s, int frame_size) {
  require(s.size() == frame_size, "sign pattern length must match frame size");
  for (int v : s.signs)
    require(v == 1 || v == -1, "sign pattern entries must be +1 or -1");
}

Vector signed_sum(const Frame& f, const Vector& x, const SignPattern& s) {
  validate_sign_pattern(s, f.size());
  require(x.space == f.space, "signed_sum: vector space mismatch");
  Vector out = zero_vector(f.space);
  for (std::size_t q = 0; q < f.pairs.size(); ++q) {
    const auto& p = f.pairs[q];
    const double w = s.signs[q] * dot(p.b, x.coords);
    for (std::size_t i = 0; i < p.a.size(); ++i) out.coords[i] += w * p.a[i];
  }
  return out;
}

UnconditionalityResult unconditionality_constant(const Frame& f,
                                                 const Vector& x,
                                                 SignSearchMode mode,
                                                 std::int64_t budget,
                                                 std::uint64_t seed) {
  validate_frame_shape(f);
  require(x.space == f.space, "unconditionality_constant: space mismatch");
  const double nx = norm(x);
  require(nx > 0.0, "unconditionality constant is undefined at x = 0");

  const int m = f.size();
  const int n = f.dim();
  std::vector<double> c(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q)
    c[static_cast<std::size_t>(q)] = dot(f.pairs[static_cast<std::size_t>(q)].b, x.coords);

  UnconditionalityResult result;

  if (mode == SignSearchMode::exact) {
    if (m > kExactSweepCap)
      throw std::domain_error("exact sign sweep capped at 20 frame pairs");

    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    std::vector<int> s(static_cast<std::size_t>(m), 1);
    for (int q = 0; q < m; ++q)
      for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] +=
            c[static_cast<std::size_t>(q)] * f.pairs[static_cast<std::size_t>(q)].a[static_cast<std::size_t>(i)];

    const std::uint64_t sweep = std::uint64_t{1} << m;
    double best = -1.0;
    std::uint64_t best_mask = 0;
    std::uint64_t mask = 0;
    for (std::uint64_t k = 0; k < sweep; ++k) {
      if (k > 0) {
        const int bit = std::countr_zero(k);
        const int q = m - 1 - bit;
        mask ^= std::uint64_t{1} << bit;
        if ((k & 0xfffu) == 0) {
          const auto fresh = pattern_from_mask(mask, m);
          std::copy(fresh.begin(), fresh.end(), s.begin());
          std::fill(v.begin(), v.end(), 0.0);
          for (int qq = 0; qq < m; ++qq)
            for (int i = 0; i < n; ++i)
              v[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(qq)] *
                                                c[static_cast<std::size_t>(qq)] *
                                                f.pairs[static_cast<std::size_t>(qq)].a[static_cast<std::size_t>(i)];
        } else {
          s[static_cast<std::size_t>(q)] = -s[static_cast<std::size_t>(q)];
          const double w = 2.0 * s[static_cast<std::size_t>(q)] * c[static_cast<std::size_t>(q)];
          for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] += w * f.pairs[static_cast<std::size_t>(q)].a[static_cast<std::size_t>(i)];
        }
      }
      const double val = norm(f.space, v) / nx;
      if (val > best || (val == best && mask < best_mask)) {
        best = val;
        best_mask = mask;
      }
    }
    result.value = best;
    result.witness.signs = pattern_from_mask(best_mask, m);
    result.evaluations = static_cast<std::int64_t>(sweep);
    return result;
  }

  require(budget >= 1, "sampled mode needs a positive evaluation budget");
  Rng rng(seed);
  std::int64_t evals = 0;
  double best = -1.0;
  std::vector<int> best_pattern;
  std::vector<double> work(static_cast<std::size_t>(n));

  const auto evaluate = [&](const std::vector<int>& s) {
    std::fill(work.begin(), work.end(), 0.0);
    for (int q = 0; q < m; ++q) {
      const double w = s[static_cast<std::size_t>(q)] * c[static_cast<std::size_t>(q)];
      for (int i = 0; i < n; ++i)
        work[static_cast<std::size_t>(i)] += w * f.pairs[static_cast<std::size_t>(q)].a[static_cast<std::size_t>(i)];
    }
    ++evals;
    return norm(f.space, work) / nx;
  };

  const auto consider = [&](double val, const std::vector<int>& s) {
    if (val > best || (val == best && pattern_precedes(s, best_pattern))) {
      best = val;
      best_pattern = s;
    }
  };

  while (evals < budget && !result.budget_exhausted) {
    std::vector<int> s(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q)
      s[static_cast<std::size_t>(q)] = (rng.next_u64() & 1u) ? -1 : 1;
    double val = evaluate(s);
    consider(val, s);

    // Greedy single flips: commit the best improving flip, repeat.
    for (;;) {
      int flip = -1;
      double flip_val = val;
      for (int q = 0; q < m; ++q) {
        if (evals >= budget) {
          result.budget_exhausted = true;
          break;
        }
        s[static_cast<std::size_t>(q)] = -s[static_cast<std::size_t>(q)];
        const double candidate = evaluate(s);
        s[static_cast<std::size_t>(q)] = -s[static_cast<std::size_t>(q)];
        if (candidate > flip_val) {
          flip_val = candidate;
          flip = q;
        }
      }
      if (flip < 0) break;
      s[static_cast<std::size_t>(flip)] = -s[static_cast<std::size_t>(flip)];
      val = flip_val;
      consider(val, s);
      if (result.budget_exhausted) break;
    }
  }

  result.value = best;
  result.witness.signs = std::move(best_pattern);
  result.evaluations = evals;
  return result;
}

double global_unconditionality_constant(const Frame& f, int samples,
                                        SignSearchMode mode,
                                        std::uint64_t seed,
                                        std::int64_t budget_per_x) {
  require(samples >= 0, "negative sample count");
  if (budget_per_x <= 0) budget_per_x = 64 * static_cast<std::int64_t>(f.size());

  std::vector<Vector> probes;
  for (int i = 1; i <= f.dim(); ++i) {
    probes.push_back(unit_vector(f.space, i));
    Vector neg = probes.back();
    neg.coords[static_cast<std::size_t>(i - 1)] = -1.0;
    probes.push_back(neg);
  }
  {
    Vector alt = zero_vector(f.space);
    for (int i = 0; i < f.dim(); ++i)
      alt.coords[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1.0 : -1.0;
    if (f.dim() >= 1) probes.push_back(alt);
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    probes.push_back(random_unit_vector(f.space, rng));

  double best = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto r = unconditionality_constant(f, probes[i], mode, budget_per_x,
                                             mix_seed(seed, i));
    best = std::max(best, r.value);
  }
  return best;
}

ReconstructionTrace permuted_reconstruction(const Frame& f, const Vector& x,
                                            std::span<const int> permutation) {
  require(static_cast<int>(permutation.size()) == f.size(),
          "permutation length must match frame size");
  std::vector<bool> seen(permutation.size(), false);
  for (int v : permutation) {
    require(v >= 1 && v <= f.size(), "permutation entry out of range");
    require(!seen[static_cast<std::size_t>(v - 1)], "permutation repeats an index");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  require(x.space == f.space, "permuted_reconstruction: space mismatch");

  ReconstructionTrace trace;
  trace.input_norm = norm(x);
  Vector s = zero_vector(f.space);
  std::vector<double> diff(x.coords.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = -x.coords[i];
  trace.errors.push_back(norm(f.space, diff));
  for (int v : permutation) {
    const auto& p = f.pairs[static_cast<std::size_t>(v - 1)];
    const double cq = dot(p.b, x.coords);
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      s.coords[i] += cq * p.a[i];
      diff[i] = s.coords[i] - x.coords[i];
    }
    trace.errors.push_back(norm(f.space, diff));
  }
  return trace;
}

SignPattern bridge_sign_pattern(const Frame& f, const Vector& x,
                                const Vector& y) {
  require(x.space == f.space, "bridge_sign_pattern: x space mismatch");
  require(y.space == dual_space(f.space), "bridge_sign_pattern: y space mismatch");
  SignPattern s;
  s.signs.reserve(f.pairs.size());
  for (const auto& p : f.pairs) {
    const double prod = dot(p.b, x.coords) * dot(y.coords, p.a);
    s.signs.push_back(prod < 0.0 ? -1 : 1);
  }
  return s;
}

bool unconditional_implies_besselian_check(const Frame& f, const Vector& x,
                                           const Vector& y, double bound,
                                           double tol) {
  require(bound >= 0.0, "bound must be nonnegative");
  const double lhs = besselian_form(f, x, y);
  const double dual_norm = norm(y);
  return lhs <= bound * norm(x) * dual_norm + tol;
}

}  // namespace framelab
