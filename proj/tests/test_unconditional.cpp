#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "framelab/besselian.hpp"
#include "framelab/corpus.hpp"
#include "framelab/rng.hpp"
#include "framelab/unconditional.hpp"

using namespace framelab;

TEST_CASE("sign patterns render and validate") {
  SignPattern s{{1, -1, 1, 1}};
  CHECK(to_string(s) == "+-++");
  CHECK_NOTHROW(validate_sign_pattern(s, 4));
  CHECK_THROWS_AS(validate_sign_pattern(s, 3), std::invalid_argument);
  SignPattern bad{{1, 0, 1}};
  CHECK_THROWS_AS(validate_sign_pattern(bad, 3), std::invalid_argument);
}

TEST_CASE("all-plus signed sum is plain reconstruction") {
  const Frame f = summing_basis_frame(4);
  Vector x{f.space, {1.0, -2.0, 0.5, 3.0}};
  SignPattern plus{std::vector<int>(4, 1)};
  CHECK(signed_sum(f, x, plus).coords == partial_sum(f, x, 4).coords);
}

TEST_CASE("flipping one sign of a conditional basis distorts the sum") {
  const Frame f = summing_basis_frame(2);
  Vector x{f.space, {1.0, -1.0}};
  CHECK(signed_sum(f, x, SignPattern{{1, -1}}).coords ==
        std::vector<double>{3.0, 1.0});
  CHECK(signed_sum(f, x, SignPattern{{-1, 1}}).coords ==
        std::vector<double>{-3.0, -1.0});
  CHECK(signed_sum(f, x, SignPattern{{-1, -1}}).coords ==
        std::vector<double>{-1.0, 1.0});
}

TEST_CASE("exact sweep finds the distorting pattern, earliest tie first") {
  const Frame f = summing_basis_frame(2);
  Vector x{f.space, {1.0, -1.0}};
  const auto r = unconditionality_constant(f, x, SignSearchMode::exact, 0, 0);
  CHECK(r.value == 3.0);
  CHECK(to_string(r.witness) == "+-");  // (-,+) scores 3 too but comes later
  CHECK(r.evaluations == 4);
  CHECK(!r.budget_exhausted);
}

TEST_CASE("exact sweep is the identity ratio on unconditional families") {
  for (const char* id : {"canonical:c0:5", "canonical:lp:1:5", "halved_doubled:4"}) {
    const Frame f = make_corpus_frame(id);
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
      const Vector x = random_unit_vector(f.space, rng);
      const auto r = unconditionality_constant(f, x, SignSearchMode::exact, 0, 0);
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("exact sweep rejects oversized frames and the zero vector") {
  const Frame big = halved_doubled_frame(11);  // 22 pairs
  Vector x = unit_vector(big.space, 1);
  CHECK_THROWS_AS(unconditionality_constant(big, x, SignSearchMode::exact, 0, 0),
                  std::domain_error);
  const Frame f = summing_basis_frame(3);
  Vector zero = zero_vector(f.space);
  CHECK_THROWS_AS(unconditionality_constant(f, zero, SignSearchMode::exact, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("sampled search matches the sweep on a small frame") {
  const Frame f = summing_basis_frame(2);
  Vector x{f.space, {1.0, -1.0}};
  const auto r = unconditionality_constant(f, x, SignSearchMode::sampled, 64, 5);
  CHECK(r.value == 3.0);
  CHECK(to_string(r.witness) == "+-");
  CHECK(r.evaluations <= 64);
}

TEST_CASE("sampled search is deterministic and respects its budget") {
  const Frame f = summing_basis_frame(6);
  Vector x{f.space, {1.0, -1.0, 1.0, -1.0, 1.0, -1.0}};
  const auto a = unconditionality_constant(f, x, SignSearchMode::sampled, 40, 12);
  const auto b = unconditionality_constant(f, x, SignSearchMode::sampled, 40, 12);
  CHECK(a.value == b.value);
  CHECK(a.witness.signs == b.witness.signs);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.evaluations <= 40);

  const auto tiny = unconditionality_constant(f, x, SignSearchMode::sampled, 3, 12);
  CHECK(tiny.budget_exhausted);
  CHECK(tiny.evaluations == 3);

  CHECK_THROWS_AS(unconditionality_constant(f, x, SignSearchMode::sampled, 0, 12),
                  std::invalid_argument);
}

TEST_CASE("sampled values never exceed the exact sweep") {
  const Frame f = summing_basis_frame(7);
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    const Vector x = random_unit_vector(f.space, rng);
    const auto exact = unconditionality_constant(f, x, SignSearchMode::exact, 0, 0);
    const auto sampled =
        unconditionality_constant(f, x, SignSearchMode::sampled, 64 * 7, 44 + t);
    CHECK(sampled.value <= exact.value + 1e-12);
  }
}

TEST_CASE("global constant is one for the coordinate basis") {
  const Frame f = make_corpus_frame("canonical:c0:4");
  CHECK(global_unconditionality_constant(f, 5, SignSearchMode::exact, 3) == 1.0);
}

TEST_CASE("global constant of the running-sum basis hits the growth law") {
  const Frame f = summing_basis_frame(3);
  CHECK(global_unconditionality_constant(f, 10, SignSearchMode::exact, 3) == 5.0);
}

TEST_CASE("identity permutation reproduces the plain trace") {
  const Frame f = make_corpus_frame("fdd_random:c0:4:blocks=2,2:seed=1");
  Rng rng(2);
  const Vector x = random_unit_vector(f.space, rng);
  std::vector<int> perm(static_cast<std::size_t>(f.size()));
  std::iota(perm.begin(), perm.end(), 1);
  const auto plain = reconstruction_trace(f, x);
  const auto permuted = permuted_reconstruction(f, x, perm);
  CHECK(permuted.errors == plain.errors);
  CHECK(permuted.input_norm == plain.input_norm);
}

TEST_CASE("reversal reorders the running-sum errors") {
  const Frame f = summing_basis_frame(3);
  Vector x{f.space, {1.0, 2.0, 3.0}};
  const std::vector<int> reversed{3, 2, 1};
  const auto trace = permuted_reconstruction(f, x, reversed);
  CHECK(trace.errors == std::vector<double>{3.0, 2.0, 1.0, 0.0});
  CHECK(trace.final_error() == 0.0);
}

TEST_CASE("permutations are validated as bijections") {
  const Frame f = summing_basis_frame(3);
  Vector x{f.space, {1.0, 2.0, 3.0}};
  CHECK_THROWS_AS(permuted_reconstruction(f, x, std::vector<int>{1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(permuted_reconstruction(f, x, std::vector<int>{1, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(permuted_reconstruction(f, x, std::vector<int>{0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(permuted_reconstruction(f, x, std::vector<int>{1, 2, 4}),
                  std::invalid_argument);
}

TEST_CASE("bridge signs turn the form into a single signed pairing") {
  const Frame f = summing_basis_frame(4);
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const Vector x = random_unit_vector(f.space, rng);
    const Vector y = random_unit_vector(dual_space(f.space), rng);
    const SignPattern s = bridge_sign_pattern(f, x, y);
    const double lhs = besselian_form(f, x, y);
    const double rhs = pair(y, signed_sum(f, x, s));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("bridge sign of a vanishing product is plus") {
  const Frame f = make_corpus_frame("canonical:c0:2");
  const Vector x = unit_vector(f.space, 1);
  const Vector y = unit_vector(dual_space(f.space), 2);
  const SignPattern s = bridge_sign_pattern(f, x, y);
  CHECK(s.signs == std::vector<int>{1, 1});
}

TEST_CASE("a global constant certifies the besselian inequality") {
  const Frame f = summing_basis_frame(3);
  const double bound = global_unconditionality_constant(f, 10, SignSearchMode::exact, 3);
  Rng rng(15);
  for (int t = 0; t < 40; ++t) {
    const Vector x = random_unit_vector(f.space, rng);
    const Vector y = random_unit_vector(dual_space(f.space), rng);
    CHECK(unconditional_implies_besselian_check(f, x, y, bound, 1e-9));
  }
  const Vector x = unit_vector(f.space, 1);
  const Vector y = unit_vector(dual_space(f.space), 1);
  CHECK(!unconditional_implies_besselian_check(f, x, y, 0.0, 1e-12));
}
