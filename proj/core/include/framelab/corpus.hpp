// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_CORPUS_HPP
#define FRAMELAB_CORPUS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "framelab/fdd.hpp"
#include "framelab/frame.hpp"
#include "framelab/space.hpp"

namespace framelab {

// The pairs (e_n, e_n*) over any supported space.
Frame canonical_basis_frame(const SpaceSpec& space);

// Over c0: each pair ((1/2) e_n, e_n*) listed twice, in coordinate order.
// A reconstructing family but not a basis: coefficient representations are
// not unique (synthesis of (2,-1) and of (1,0) both give (1/2) e_1 at
// dim 1). Sign flips never hurt reconstruction here (constant 1).
//
// Note: running the block construction of build_frame_from_fdd on the
// one-dimensional blocks span(e_n) yields the plain canonical pairs, not
// this doubled family; the family is defined directly by its displayed
// sequence and validated by frame_check.
Frame halved_doubled_frame(int dim);

// Over c0: a_n = e_1 + ... + e_n with b_n = e_n* - e_{n+1}* and the
// truncation closure b_dim = e_dim*. A conditional basis: reordering or
// sign-flipping degrades partial sums, and the besselian constant grows
// linearly with the dimension.
Frame summing_basis_frame(int dim);

// Seeded random block decomposition with coordinate-aligned blocks.
// Over lp(2) the blocks are Haar-orthonormal, hence Auerbach systems; over
// the other kinds they are column-normalized gaussian biorthogonal systems,
// resampled (at most 100 times, then std::runtime_error) until the block
// condition number stays below max_condition. One-dimensional blocks are
// signed unit vectors in every kind.
FddSpec fdd_random(const SpaceSpec& space, std::span<const int> block_dims,
                   std::uint64_t seed, double max_condition = 100.0);

struct CorpusEntry {
  std::string name;
  std::string grammar;
  std::string note;
};

// One entry per family, stable order.
std::vector<CorpusEntry> corpus_catalog();

enum class CorpusFamily { canonical, halved_doubled, summing, fdd_random };

// Parsed form of the id grammar:
//   canonical:lp:2:16    canonical:c0:8    halved_doubled:8
//   summing:12           fdd_random:lp:2:16:blocks=4,4,4,4:seed=7
struct CorpusId {
  CorpusFamily family = CorpusFamily::canonical;
  SpaceSpec space;            // canonical, fdd_random
  int dim = 0;                // halved_doubled, summing
  std::vector<int> blocks;    // fdd_random
  std::uint64_t seed = 0;     // fdd_random
  std::string text;           // normalized id (also used as frame label)
};

// Space fragment of the grammar: "lp:2:16", "c0:8", "linf:4".
SpaceSpec parse_space_spec(const std::string& text);

// Inverse of parse_space_spec; also the space fragment of corpus labels.
std::string space_id_text(const SpaceSpec& s);

CorpusId parse_corpus_id(const std::string& text);

FddSpec make_corpus_fdd(const CorpusId& id);  // fdd_random ids only
Frame make_corpus_frame(const CorpusId& id);
Frame make_corpus_frame(const std::string& id);

}  // namespace framelab

#endif  // FRAMELAB_CORPUS_HPP
