#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratstoch/analysis.hpp"
#include "ratstoch/equivalence.hpp"
#include "ratstoch/fixtures.hpp"
#include "support.hpp"

using namespace ratstoch;
using testing::q;

namespace {

bool exhaustive_equal(const MultiplicityAutomaton& a, const MultiplicityAutomaton& b, std::size_t len) {
  for (const auto& w : words_up_to(a.num_letters(), len))
    if (evaluate(a, w) != evaluate(b, w)) return false;
  return true;
}

}  // namespace

TEST_CASE("are_equivalent examples") {
  const auto app = fixtures::build("fig3_App");
  CHECK(are_equivalent(app, app).equal());

  const auto r = are_equivalent(app, fixtures::build("fig5"));
  REQUIRE_FALSE(r.equal());
  CHECK(r.witness.empty());
  CHECK(r.left == q(1, 4));
  CHECK(r.right == q(1, 2));

  const auto rep = rep_from_generator_relations({"a"}, {q(1, 2), q(1, 2)},
                                                {Matrix{{q(1, 2), q(0)}, {q(0), q(1, 4)}}}, {q(1, 2), q(3, 4)});
  CHECK(are_equivalent(fixtures::build("example1_p"), from_linear_representation(rep)).equal());
}

TEST_CASE("witness is the smallest distinguishing basis word") {
  const auto fig2 = fixtures::build("fig2_A");
  AutomatonBuilder b({"a", "b"});
  b.add_state("q0");
  b.add_state("q1");
  b.set_initial("q0", 1).set_final("q1", 1);
  b.set_transition("q0", "a", "q1", q(1, 2)).set_transition("q0", "b", "q0", q(1, 3));
  const auto r = are_equivalent(fig2, b.build());
  REQUIRE_FALSE(r.equal());
  CHECK(r.witness == Word{1, 0});
  CHECK(r.left == q(1, 4));
  CHECK(r.right == q(1, 6));
}

TEST_CASE("express_combination examples") {
  const auto p = fixtures::build("example1_p");
  const auto p1 = fixtures::build("example1_p1");
  const auto p2 = fixtures::build("example1_p2");

  const auto res = express_combination(residual_automaton(p, {0}), {p1, p2}, true);
  REQUIRE(res.expressible());
  CHECK(res.coefficients == Vector{q(2, 3), q(1, 3)});

  const auto dot_a = with_initial_weights(p, p.initial_weights() * p.letter_matrix(0));
  const auto d = express_combination(dot_a, {p1, p2}, false);
  REQUIRE(d.expressible());
  CHECK(d.coefficients == Vector{q(1, 4), q(1, 8)});

  CHECK_FALSE(express_combination(p1, {p2}, false).expressible());
  CHECK_FALSE(express_combination(p1, {p2}, true).expressible());
}

TEST_CASE("nonneg mode is stricter") {
  // r = 2p₁ − p₂ is a real but not a nonnegative combination.
  const auto p1 = fixtures::build("example1_p1");
  const auto p2 = fixtures::build("example1_p2");
  const auto target = weighted_direct_sum({p1, p2}, {q(2), q(-1)});
  const auto real = express_combination(target, {p1, p2}, false);
  REQUIRE(real.expressible());
  CHECK(real.coefficients == Vector{q(2), q(-1)});
  CHECK_FALSE(express_combination(target, {p1, p2}, true).expressible());
}

TEST_CASE("equivalence soundness on random pairs") {
  std::mt19937 rng(41);
  int equal = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const std::size_t n = 1 + trial % 3;
    // Sparse instances reach their distinguishing words only late.
    const double sparsity = trial % 4 < 2 ? 0.4 : 0.75;
    const auto a = testing::random_ma(rng, n, 2, sparsity, 2, 2);
    MultiplicityAutomaton b;
    if (trial % 2 == 0) {
      const Matrix m = testing::random_invertible(rng, n);
      b = testing::similar(a, m, *inverse(m));
    } else {
      b = testing::random_ma(rng, 1 + (trial / 3) % 3, 2, sparsity, 2, 2);
    }
    const std::size_t bound = a.num_states() + b.num_states();
    const auto r = are_equivalent(a, b);
    CHECK(r.basis_words.size() <= bound);
    CHECK(r.equal() == exhaustive_equal(a, b, bound));
    if (r.equal()) {
      ++equal;
    } else {
      CHECK(r.witness.size() <= bound);
      CHECK(evaluate(a, r.witness) == r.left);
      CHECK(evaluate(b, r.witness) == r.right);
      CHECK(r.left != r.right);
    }
  }
  CHECK(equal >= 120);
}

TEST_CASE("combination properties") {
  std::mt19937 rng(42);
  int hits = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<MultiplicityAutomaton> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(testing::random_ma(rng, 1 + (trial + g) % 2, 2, 0.3, 2, 2));
    MultiplicityAutomaton target;
    if (trial % 2 == 0) {
      const Vector alpha{testing::random_rational(rng, 0, 3, 2), testing::random_rational(rng, 0, 3, 2),
                         testing::random_rational(rng, -1, 3, 2)};
      target = weighted_direct_sum(gens, alpha);
    } else {
      target = testing::random_ma(rng, 2, 2, 0.3, 2, 2);
    }
    const auto pos = express_combination(target, gens, true);
    const auto any = express_combination(target, gens, false);
    if (pos.expressible()) CHECK(any.expressible());
    for (const auto* r : {&pos, &any}) {
      if (!r->expressible()) continue;
      ++hits;
      CHECK(are_equivalent(target, weighted_direct_sum(gens, r->coefficients)).equal());
      if (r == &pos)
        for (const auto& c : r->coefficients) CHECK(c >= 0);
    }
    if (trial % 2 == 0) CHECK(any.expressible());
  }
  CHECK(hits > 20);
}
