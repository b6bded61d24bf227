#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "framelab/corpus.hpp"
#include "framelab/frame.hpp"

using namespace framelab;

TEST_CASE("canonical family is the coordinate pairs with a stable label") {
  const Frame f = canonical_basis_frame(SpaceSpec::Lp(2.0, 3));
  CHECK(f.label == "canonical:lp:2:3");
  CHECK(f.size() == 3);
  for (int n = 0; n < 3; ++n) {
    const auto& p = f.pairs[static_cast<std::size_t>(n)];
    CHECK(p.a == p.b);
    CHECK(p.a[static_cast<std::size_t>(n)] == 1.0);
  }
}

TEST_CASE("halved_doubled family doubles each halved coordinate pair") {
  const Frame f = halved_doubled_frame(2);
  CHECK(f.label == "halved_doubled:2");
  CHECK(f.space == SpaceSpec::C0(2));
  CHECK(f.pairs[0].a == std::vector<double>{0.5, 0.0});
  CHECK(f.pairs[0].b == std::vector<double>{1.0, 0.0});
  CHECK(f.pairs[1].a == f.pairs[0].a);
  CHECK(f.pairs[3].a == std::vector<double>{0.0, 0.5});
  CHECK_THROWS_AS(halved_doubled_frame(0), std::invalid_argument);
}

TEST_CASE("summing family carries running sums against difference functionals") {
  const Frame f = summing_basis_frame(3);
  CHECK(f.label == "summing:3");
  CHECK(f.pairs[0].a == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(f.pairs[1].a == std::vector<double>{1.0, 1.0, 0.0});
  CHECK(f.pairs[2].a == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(f.pairs[0].b == std::vector<double>{1.0, -1.0, 0.0});
  CHECK(f.pairs[1].b == std::vector<double>{0.0, 1.0, -1.0});
  CHECK(f.pairs[2].b == std::vector<double>{0.0, 0.0, 1.0});
}

TEST_CASE("space id text round-trips through the parser") {
  for (const auto& s : {SpaceSpec::Lp(2.0, 16), SpaceSpec::Lp(1.5, 4),
                        SpaceSpec::C0(8), SpaceSpec::Linf(3)}) {
    CHECK(parse_space_spec(space_id_text(s)) == s);
  }
  CHECK(space_id_text(SpaceSpec::Lp(2.0, 16)) == "lp:2:16");
  CHECK(space_id_text(SpaceSpec::C0(8)) == "c0:8");
}

TEST_CASE("corpus id grammar accepts the documented forms") {
  const CorpusId a = parse_corpus_id("canonical:lp:2:16");
  CHECK(a.family == CorpusFamily::canonical);
  CHECK(a.space == SpaceSpec::Lp(2.0, 16));
  CHECK(a.text == "canonical:lp:2:16");

  const CorpusId b = parse_corpus_id("summing:12");
  CHECK(b.family == CorpusFamily::summing);
  CHECK(b.dim == 12);

  const CorpusId c = parse_corpus_id("fdd_random:lp:2:16:blocks=4,4,4,4:seed=7");
  CHECK(c.family == CorpusFamily::fdd_random);
  CHECK(c.space == SpaceSpec::Lp(2.0, 16));
  CHECK(c.blocks == std::vector<int>{4, 4, 4, 4});
  CHECK(c.seed == 7);
  CHECK(c.text == "fdd_random:lp:2:16:blocks=4,4,4,4:seed=7");
}

TEST_CASE("corpus id grammar rejects malformed input") {
  CHECK_THROWS_AS(parse_corpus_id("nope:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_id("canonical:lp:0.5:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_id("summing:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_id("summing:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_id("fdd_random:lp:2:5:blocks=2,2:seed=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_id("fdd_random:lp:2:4:blocks=2,2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_space_spec("lq:2:4"), std::invalid_argument);
}

TEST_CASE("frame labels equal the normalized id text") {
  for (const char* id : {"canonical:c0:5", "halved_doubled:4", "summing:6",
                         "fdd_random:lp:2:4:blocks=2,2:seed=1"}) {
    CHECK(make_corpus_frame(id).label == id);
  }
}

TEST_CASE("every catalog family reconstructs") {
  const char* samples[] = {"canonical:lp:1:6", "canonical:linf:4",
                           "halved_doubled:5", "summing:7",
                           "fdd_random:c0:6:blocks=3,3:seed=9"};
  for (const char* id : samples) {
    CHECK(frame_check(make_corpus_frame(id), 40, 11, 1e-10).pass);
  }
}

TEST_CASE("catalog lists one entry per family") {
  const auto entries = corpus_catalog();
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].name == "canonical");
  CHECK(entries[1].name == "halved_doubled");
  CHECK(entries[2].name == "summing");
  CHECK(entries[3].name == "fdd_random");
  for (const auto& e : entries) {
    CHECK(!e.grammar.empty());
    CHECK(!e.note.empty());
  }
}

TEST_CASE("random decompositions are deterministic in the seed") {
  const auto id = parse_corpus_id("fdd_random:c0:6:blocks=2,2,2:seed=21");
  const FddSpec a = make_corpus_fdd(id);
  const FddSpec b = make_corpus_fdd(id);
  REQUIRE(a.blocks.size() == b.blocks.size());
  for (std::size_t n = 0; n < a.blocks.size(); ++n) {
    CHECK(a.blocks[n].basis == b.blocks[n].basis);
    CHECK(a.blocks[n].dual == b.blocks[n].dual);
  }
  const FddSpec c = fdd_random(id.space, id.blocks, 22);
  bool differs = false;
  for (std::size_t n = 0; n < c.blocks.size(); ++n)
    differs = differs || (a.blocks[n].basis != c.blocks[n].basis);
  CHECK(differs);
}

TEST_CASE("euclidean random blocks are orthonormal systems") {
  const FddSpec fdd = fdd_random(SpaceSpec::Lp(2.0, 6), std::vector<int>{3, 3}, 5);
  for (const auto& block : fdd.blocks) {
    CHECK(block.auerbach);
    for (double n : block.dual_norms) CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_NOTHROW(validate_fdd(fdd));
}

TEST_CASE("one-dimensional random blocks are signed coordinate vectors") {
  const FddSpec fdd = fdd_random(SpaceSpec::C0(3), std::vector<int>{1, 1, 1}, 13);
  for (std::size_t n = 0; n < 3; ++n) {
    const auto& e = fdd.blocks[n].basis[0];
    CHECK(std::abs(e[n]) == 1.0);
    CHECK(fdd.blocks[n].dual[0] == e);
    CHECK(fdd.blocks[n].auerbach);
  }
  CHECK(frame_check(build_frame_from_fdd(fdd), 20, 3, 1e-10).pass);
}

TEST_CASE("an impossible conditioning budget is reported, not looped") {
  CHECK_THROWS_AS(
      fdd_random(SpaceSpec::C0(4), std::vector<int>{2, 2}, 1, 0.5),
      std::runtime_error);
}

TEST_CASE("rejected shapes throw before any sampling") {
  CHECK_THROWS_AS(fdd_random(SpaceSpec::C0(4), std::vector<int>{2, 3}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(fdd_random(SpaceSpec::C0(4), std::vector<int>{}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(fdd_random(SpaceSpec::C0(4), std::vector<int>{4, 0}, 1),
                  std::invalid_argument);
}
