#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "framelab/corpus.hpp"
#include "framelab/fdd.hpp"
#include "framelab/frame.hpp"
#include "framelab/rng.hpp"

using namespace framelab;

namespace {

// Single block spanning sup-norm 2-space with a skew basis: unit vectors,
// biorthogonal duals, but the first dual norm is 2, so not Auerbach.
FddSpec skew_block_fdd() {
  FddSpec fdd;
  fdd.space = SpaceSpec::C0(2);
  FddBlock block;
  block.basis = {{1.0, 0.0}, {1.0, 1.0}};
  block.dual = {{1.0, -1.0}, {0.0, 1.0}};
  block.projection = {{1.0, 0.0}, {0.0, 1.0}};
  fdd.blocks.push_back(block);
  annotate_blocks(fdd);
  return fdd;
}

}  // namespace

TEST_CASE("pair count sums squared block dimensions") {
  const FddSpec fdd = fdd_random(SpaceSpec::Lp(2.0, 5), std::vector<int>{3, 2}, 17);
  CHECK(fdd.total_dim() == 5);
  CHECK(fdd.pair_count() == 13);
  CHECK(build_frame_from_fdd(fdd).size() == 13);
}

TEST_CASE("annotation records dual norms and the Auerbach flag") {
  const FddSpec fdd = skew_block_fdd();
  const auto& block = fdd.blocks[0];
  REQUIRE(block.dual_norms.size() == 2);
  CHECK(block.dual_norms[0] == 2.0);
  CHECK(block.dual_norms[1] == 1.0);
  CHECK(!block.auerbach);
  CHECK_NOTHROW(validate_fdd(fdd));
}

TEST_CASE("block construction lays out pairs in round-robin order") {
  const FddSpec fdd = skew_block_fdd();
  const Frame f = build_frame_from_fdd(fdd);
  CHECK(f.label == "fdd");  // no label on the spec
  REQUIRE(f.size() == 4);
  CHECK(f.pairs[0].a == std::vector<double>{0.5, 0.0});
  CHECK(f.pairs[0].b == std::vector<double>{1.0, -1.0});
  CHECK(f.pairs[1].a == std::vector<double>{0.5, 0.5});
  CHECK(f.pairs[1].b == std::vector<double>{0.0, 1.0});
  CHECK(f.pairs[2].a == f.pairs[0].a);
  CHECK(f.pairs[2].b == f.pairs[0].b);
  CHECK(f.pairs[3].a == f.pairs[1].a);
  CHECK(f.pairs[3].b == f.pairs[1].b);
  CHECK(frame_check(f, 30, 5, 1e-10).pass);
}

TEST_CASE("mixed partial sums agree with the flat frame cut") {
  const FddSpec fdd = fdd_random(SpaceSpec::C0(5), std::vector<int>{3, 2}, 17);
  const Frame f = build_frame_from_fdd(fdd);
  Rng rng(23);
  const Vector x = random_unit_vector(fdd.space, rng);

  const auto agree = [&](int block_index, int m, int flat_offset) {
    const Vector mixed = mixed_partial_sum(fdd, x, block_index, m);
    const Vector flat = partial_sum(f, x, flat_offset + m);
    std::vector<double> diff(mixed.coords.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
      diff[i] = mixed.coords[i] - flat.coords[i];
    CHECK(norm(fdd.space, diff) <= 1e-12);
  };
  for (int m = 1; m < 9; ++m) agree(1, m, 0);
  for (int m = 1; m < 4; ++m) agree(2, m, 9);
}

TEST_CASE("mixed partial sums validate the cut range") {
  const FddSpec fdd = fdd_random(SpaceSpec::Lp(2.0, 4), std::vector<int>{2, 2}, 1);
  const Vector x = unit_vector(fdd.space, 1);
  CHECK_THROWS_AS(mixed_partial_sum(fdd, x, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(mixed_partial_sum(fdd, x, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(mixed_partial_sum(fdd, x, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(mixed_partial_sum(fdd, x, 3, 1), std::invalid_argument);
}

TEST_CASE("norm bound holds at every cut of an orthonormal decomposition") {
  const FddSpec fdd = fdd_random(SpaceSpec::Lp(2.0, 6), std::vector<int>{2, 2, 2}, 4);
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Vector x = random_unit_vector(fdd.space, rng);
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m < 4; ++m) CHECK(proof_bound_check(fdd, x, n, m));
  }
}

TEST_CASE("norm bound refuses a block without the Auerbach property") {
  const FddSpec fdd = skew_block_fdd();
  const Vector x = unit_vector(fdd.space, 1);
  CHECK_THROWS_AS(proof_bound_check(fdd, x, 1, 1), std::domain_error);
}

TEST_CASE("validation pinpoints each defect class") {
  const auto base = fdd_random(SpaceSpec::Lp(2.0, 4), std::vector<int>{2, 2}, 1);
  CHECK_NOTHROW(validate_fdd(base));

  FddSpec bad_norm = base;
  bad_norm.blocks[0].basis[0][0] += 0.01;
  CHECK_THROWS_AS(validate_fdd(bad_norm), std::invalid_argument);

  FddSpec bad_dual = base;
  for (auto& c : bad_dual.blocks[0].dual[0]) c *= 1.01;
  CHECK_THROWS_AS(validate_fdd(bad_dual), std::invalid_argument);

  FddSpec bad_sum = base;
  bad_sum.blocks[0].projection[0][0] += 0.01;
  CHECK_THROWS_AS(validate_fdd(bad_sum), std::invalid_argument);

  FddSpec overlap = base;
  overlap.blocks[0].projection[2][2] = 0.5;
  overlap.blocks[1].projection[2][2] = 0.5;
  CHECK_THROWS_AS(validate_fdd(overlap), std::invalid_argument);

  FddSpec empty;
  empty.space = SpaceSpec::Lp(2.0, 4);
  CHECK_THROWS_AS(validate_fdd(empty), std::invalid_argument);
}
