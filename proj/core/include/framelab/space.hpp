// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_SPACE_HPP
#define FRAMELAB_SPACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "framelab/rng.hpp"

namespace framelab {

// Finite truncations of the classical sequence spaces. c0 and linf carry the
// same sup norm at finite dimension; the kind is kept distinct because
// duality rules differ (dual c0 -> l1, dual linf -> l1, dual l1 -> linf).
enum class SpaceKind { lp, c0, linf };

struct SpaceSpec {
  SpaceKind kind = SpaceKind::lp;
  double p = 2.0;  // exponent, meaningful only when kind == lp, p >= 1
  int dim = 0;

  static SpaceSpec Lp(double p, int dim);
  static SpaceSpec C0(int dim);
  static SpaceSpec Linf(int dim);

  bool sup_norm() const { return kind != SpaceKind::lp; }
  bool operator==(const SpaceSpec& o) const;
};

std::string to_string(const SpaceSpec& s);
std::string to_string(SpaceKind kind);

// A coordinate vector tagged with the space whose norm applies to it.
struct Vector {
  SpaceSpec space;
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()); }
};

Vector zero_vector(const SpaceSpec& space);
// Canonical e_j, 1-based index.
Vector unit_vector(const SpaceSpec& space, int index);

double norm(const SpaceSpec& space, std::span<const double> v);
double norm(const Vector& v);

// lp(p) -> lp(p/(p-1)), lp(1) -> linf, c0 -> lp(1), linf -> lp(1).
SpaceSpec dual_space(const SpaceSpec& s);

// Dot product; no norm semantics. Lengths must agree.
double dot(std::span<const double> f, std::span<const double> x);

// Dual pairing f(x). f must live in a space of the same dimension as x
// (by convention, in dual_space(x.space)).
double pair(const Vector& f, const Vector& x);

// A unit functional f with pair(f, v) == norm(v), for v != 0:
//   lp(p>1): f_i = sign(v_i)|v_i|^{p-1} / norm(v)^{p-1}
//   lp(1):   f_i = sign(v_i), with sign(0) := +1
//   sup:     f = sign(v_j) e_j at the smallest index of maximal modulus
// The result is tagged with dual_space(v.space).
Vector norming_functional(const Vector& v);

// True when the unit ball of the space has finitely many extreme points:
// lp(1) (the 2N signed unit vectors) and the sup-norm kinds (2^N sign
// vectors). Smooth lp balls (p > 1) have a continuum and are rejected.
bool has_enumerable_extreme_points(const SpaceSpec& s);

// Streams the extreme points of the unit ball in a fixed deterministic
// order. lp(1): +e_1, -e_1, +e_2, -e_2, ...  sup kinds: sign vectors with
// all +1 first, the sign of coordinate i flipping with bit (dim-1-i) of the
// enumeration index (so (+,+), (+,-), (-,+), (-,-) at dim 2).
class ExtremePointStream {
 public:
  explicit ExtremePointStream(const SpaceSpec& space);

  // Fills `out` with the next point; false once exhausted.
  bool next(std::vector<double>& out);

  std::uint64_t count() const { return count_; }
  // Index of the point most recently produced.
  std::uint64_t last_index() const { return index_ - 1; }

 private:
  SpaceSpec space_;
  std::uint64_t index_ = 0;
  std::uint64_t count_ = 0;
};

// Gaussian direction scaled to the unit sphere of the ambient norm.
Vector random_unit_vector(const SpaceSpec& space, Rng& rng);

namespace detail {
// Branchless sign with sign(0) := +1, the tie rule used everywhere a sign
// pattern is derived from data.
inline double sign_plus(double x) { return x < 0.0 ? -1.0 : 1.0; }
}  // namespace detail

}  // namespace framelab

#endif  // FRAMELAB_SPACE_HPP
