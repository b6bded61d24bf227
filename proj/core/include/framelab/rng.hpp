// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_RNG_HPP
#define FRAMELAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace framelab {

// Deterministic random source. The engine (mt19937_64) is pinned by the
// standard; the uniform and gaussian transforms below are hand-rolled so the
// byte stream of every derived quantity is identical across toolchains.
// (std::uniform_real_distribution and friends are implementation-defined.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1): 53 random mantissa bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]: never zero, safe under log().
  double uniform01_open() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. Two engine draws per value; the second
  // Box-Muller branch is discarded to keep the call sequence stateless.
  double gaussian();

  std::vector<double> gaussian_vector(int n);

  // Uniform integer in [0, n), n > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// FNV-1a, used to derive seeds from frame labels.
std::uint64_t fnv1a64(std::string_view text);

// Mixes two seeds into one (splitmix64 finalizer over the combination).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace framelab

#endif  // FRAMELAB_RNG_HPP
