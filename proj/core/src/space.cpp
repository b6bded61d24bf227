// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace framelab {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

SpaceSpec SpaceSpec::Lp(double p, int dim) {
  require(p >= 1.0 && std::isfinite(p), "lp exponent must satisfy 1 <= p < inf");
  require(dim >= 0, "dimension must be nonnegative");
  return SpaceSpec{SpaceKind::lp, p, dim};
}

SpaceSpec SpaceSpec::C0(int dim) {
  require(dim >= 0, "dimension must be nonnegative");
  return SpaceSpec{SpaceKind::c0, 0.0, dim};
}

SpaceSpec SpaceSpec::Linf(int dim) {
  require(dim >= 0, "dimension must be nonnegative");
  return SpaceSpec{SpaceKind::linf, 0.0, dim};
}

bool SpaceSpec::operator==(const SpaceSpec& o) const {
  if (kind != o.kind || dim != o.dim) return false;
  return kind != SpaceKind::lp || p == o.p;
}

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::lp: return "lp";
    case SpaceKind::c0: return "c0";
    case SpaceKind::linf: return "linf";
  }
  return "?";
}

std::string to_string(const SpaceSpec& s) {
  std::ostringstream os;
  os << to_string(s.kind);
  if (s.kind == SpaceKind::lp) os << ":" << s.p;
  os << ":" << s.dim;
  return os.str();
}

Vector zero_vector(const SpaceSpec& space) {
  return Vector{space, std::vector<double>(static_cast<std::size_t>(space.dim), 0.0)};
}

Vector unit_vector(const SpaceSpec& space, int index) {
  require(index >= 1 && index <= space.dim, "unit vector index out of range");
  Vector v = zero_vector(space);
  v.coords[static_cast<std::size_t>(index - 1)] = 1.0;
  return v;
}

double norm(const SpaceSpec& space, std::span<const double> v) {
  require(static_cast<int>(v.size()) == space.dim,
          "vector length does not match space dimension");
  if (space.sup_norm()) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  const double p = space.p;
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  // General p: scale by the max modulus to dodge overflow/underflow of pow.
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double norm(const Vector& v) { return norm(v.space, v.coords); }

SpaceSpec dual_space(const SpaceSpec& s) {
  if (s.sup_norm()) return SpaceSpec::Lp(1.0, s.dim);
  if (s.p == 1.0) return SpaceSpec::Linf(s.dim);
  return SpaceSpec::Lp(s.p / (s.p - 1.0), s.dim);
}

double dot(std::span<const double> f, std::span<const double> x) {
  require(f.size() == x.size(), "pairing requires equal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
  return s;
}

double pair(const Vector& f, const Vector& x) {
  require(f.dim() == x.dim(), "pairing requires equal dimensions");
  return dot(f.coords, x.coords);
}

Vector norming_functional(const Vector& v) {
  const double nv = norm(v);
  if (nv == 0.0) throw std::invalid_argument("norming functional of the zero vector");
  Vector f = zero_vector(dual_space(v.space));
  if (v.space.sup_norm()) {
    // Smallest index attaining the max modulus.
    std::size_t j = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      const double a = std::abs(v.coords[i]);
      if (a > best) {
        best = a;
        j = i;
      }
    }
    f.coords[j] = detail::sign_plus(v.coords[j]);
    return f;
  }
  const double p = v.space.p;
  if (p == 1.0) {
    for (std::size_t i = 0; i < v.coords.size(); ++i)
      f.coords[i] = detail::sign_plus(v.coords[i]);
    return f;
  }
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    const double a = std::abs(v.coords[i]);
    if (a == 0.0) continue;
    f.coords[i] = detail::sign_plus(v.coords[i]) * std::pow(a / nv, p - 1.0);
  }
  return f;
}

bool has_enumerable_extreme_points(const SpaceSpec& s) {
  return s.sup_norm() || s.p == 1.0;
}

ExtremePointStream::ExtremePointStream(const SpaceSpec& space) : space_(space) {
  if (!has_enumerable_extreme_points(space))
    throw std::domain_error("unit ball has infinitely many extreme points: " +
                            to_string(space));
  if (space.sup_norm()) {
    if (space.dim >= 63)
      throw std::domain_error("sign-vector enumeration limited to dim < 63");
    count_ = std::uint64_t{1} << space.dim;
  } else {
    count_ = 2 * static_cast<std::uint64_t>(space.dim);
  }
}

bool ExtremePointStream::next(std::vector<double>& out) {
  if (index_ >= count_) return false;
  out.assign(static_cast<std::size_t>(space_.dim), 0.0);
  if (space_.sup_norm()) {
    const int n = space_.dim;
    for (int i = 0; i < n; ++i) {
      const bool neg = (index_ >> (n - 1 - i)) & 1u;
      out[static_cast<std::size_t>(i)] = neg ? -1.0 : 1.0;
    }
  } else {
    const std::size_t i = static_cast<std::size_t>(index_ / 2);
    out[i] = (index_ % 2 == 0) ? 1.0 : -1.0;
  }
  ++index_;
  return true;
}

Vector random_unit_vector(const SpaceSpec& space, Rng& rng) {
  require(space.dim >= 1, "unit sphere of a zero-dimensional space is empty");
  Vector v{space, {}};
  double n = 0.0;
  // A gaussian draw can be arbitrarily small in norm; retry on degeneracy.
  do {
    v.coords = rng.gaussian_vector(space.dim);
    n = norm(v);
  } while (n < 1e-12);
  for (auto& x : v.coords) x /= n;
  return v;
}

}  // namespace framelab
