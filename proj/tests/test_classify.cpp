#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ratstoch/analysis.hpp"
#include "ratstoch/classify.hpp"
#include "ratstoch/fixtures.hpp"
#include "ratstoch/reduction.hpp"
#include "support.hpp"

using namespace ratstoch;
using testing::q;
using testing::word;

namespace {

// δ(Q_I, w) by direct simulation over nonzero weights.
std::set<StateIndex> reach(const MultiplicityAutomaton& a, const Word& w) {
  std::set<StateIndex> cur;
  for (StateIndex s = 0; s < a.num_states(); ++s)
    if (a.initial(s) != 0) cur.insert(s);
  for (auto x : w) {
    std::set<StateIndex> next;
    for (auto s : cur)
      for (StateIndex t = 0; t < a.num_states(); ++t)
        if (a.transition(s, x, t) != 0) next.insert(t);
    cur = std::move(next);
  }
  return cur;
}

Dfa single_state_all(const std::vector<std::string>& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.states = {"s"};
  d.initial = "s";
  d.accepting = {"s"};
  for (const auto& x : alphabet) d.delta[{"s", x}] = "s";
  return d;
}

Dfa epsilon_only() {
  Dfa d;
  d.alphabet = {"a"};
  d.states = {"s", "t"};
  d.initial = "s";
  d.accepting = {"s"};
  d.delta[{"s", "a"}] = "t";
  d.delta[{"t", "a"}] = "t";
  return d;
}

// a-parity over {a,b}: accepts words whose number of a's ≡ parity (mod 2).
Dfa a_parity(int parity) {
  Dfa d;
  d.alphabet = {"a", "b"};
  d.states = {"e", "o"};
  d.initial = "e";
  d.accepting = {parity == 0 ? "e" : "o"};
  d.delta[{"e", "a"}] = "o";
  d.delta[{"o", "a"}] = "e";
  d.delta[{"e", "b"}] = "e";
  d.delta[{"o", "b"}] = "o";
  return d;
}

MultiplicityAutomaton with_final_weights(const MultiplicityAutomaton& a, Vector final) {
  return MultiplicityAutomaton(a.alphabet(), a.states(), a.initial_weights(), std::move(final),
                               a.letter_matrices());
}

}  // namespace

TEST_CASE("semi-PA examples") {
  CHECK(is_semi_pa(fixtures::build("fig2_A")));
  CHECK_FALSE(is_semi_pa(fixtures::build("fig3_App")));
  const MultiplicityAutomaton zero({"a"}, {"q0"}, {q(0)}, {q(0)}, {Matrix(1, 1)});
  CHECK(is_semi_pa(zero));
  CHECK_FALSE(is_pa(zero));
  // weight above 1 and row mass above 1
  CHECK_FALSE(is_semi_pa(MultiplicityAutomaton({"a"}, {"q0"}, {q(1)}, {q(0)}, {Matrix{{q(3, 2)}}})));
  CHECK_FALSE(is_semi_pa(MultiplicityAutomaton({"a"}, {"q0"}, {q(1)}, {q(1, 2)}, {Matrix{{q(2, 3)}}})));
}

TEST_CASE("PA examples") {
  CHECK(is_pa(fixtures::build("fig5")));
  CHECK(is_pa(fixtures::build("example1_p")));
  CHECK(is_pa(fixtures::build("fig2_A")));
  const MultiplicityAutomaton half({"a"}, {"q0"}, {q(1, 2)}, {q(1, 2)}, {Matrix{{q(1, 2)}}});
  CHECK(is_semi_pa(half));
  CHECK_FALSE(is_pa(half));
  // untrimmed: an unreachable state
  const MultiplicityAutomaton dead({"a"}, {"q0", "q1"}, {q(1), q(0)}, {q(1, 2), q(1)},
                                   {Matrix{{q(1, 2), q(0)}, {q(0), q(0)}}});
  CHECK_FALSE(is_trimmed(dead));
  CHECK_FALSE(is_pa(dead));
  CHECK(is_pa(trim(dead)));
}

TEST_CASE("PDA examples") {
  CHECK(is_pda(fixtures::build("fig2_A")));
  CHECK_FALSE(is_pda(fixtures::build("fig5")));
  CHECK_FALSE(is_pda(fixtures::build("example1_p")));
  CHECK(is_pda(fixtures::build("example1_p1")));
}

TEST_CASE("PRA examples") {
  for (auto name : {"fig5", "fig2_A"}) {
    const auto a = fixtures::build(name);
    const auto r = is_pra_reduced(a);
    REQUIRE(r.pra);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].empty());
    CHECK(r.witnesses[1] == word(a, "a"));
  }
  const auto p = fixtures::build("example1_p");
  CHECK(is_reduced(p, ReductionMode::Cone));
  const auto r = is_pra_reduced(p);
  CHECK_FALSE(r.pra);
  CHECK(r.witnesses.empty());
}

TEST_CASE("PRA precondition") {
  CHECK_THROWS_AS(is_pra_reduced(fixtures::build("fig3_App")), std::invalid_argument);
  const auto fig5 = fixtures::build("fig5");
  CHECK_THROWS_AS(is_pra_reduced(weighted_direct_sum({fig5, fig5}, {q(1, 2), q(1, 2)})), std::invalid_argument);
}

TEST_CASE("PRA witnesses check out under NFA simulation") {
  std::mt19937 rng(5);
  std::size_t pra_count = 0;
  for (int i = 0; i < 60; ++i) {
    auto a = testing::sparse_pa(rng, 2 + i % 3);
    REQUIRE(is_pa(a));
    if (!is_reduced(a, ReductionMode::Cone)) a = reduce(a, ReductionMode::Cone);
    const auto r = is_pra_reduced(a);
    if (!r.pra) continue;
    ++pra_count;
    for (StateIndex s = 0; s < a.num_states(); ++s) {
      REQUIRE(reach(a, r.witnesses[s]) == std::set<StateIndex>{s});
      const auto via_lib = support_successors(a, initial_support(a), r.witnesses[s]);
      REQUIRE(via_lib == std::vector<StateIndex>{s});
      // no shorter-or-equal word in length-lex order reaches {s}
      for (const auto& w : words_up_to(a.num_letters(), r.witnesses[s].size())) {
        if (!length_lex_less(w, r.witnesses[s])) break;
        REQUIRE(reach(a, w) != std::set<StateIndex>{s});
      }
    }
  }
  CHECK(pra_count > 0);
}

TEST_CASE("PDAs are PRAs") {
  std::mt19937 rng(6);
  for (const auto& name : fixtures::names()) {
    const auto a = fixtures::build(name);
    if (is_pda(a) && is_reduced(a, ReductionMode::Cone)) CHECK_MESSAGE(is_pra_reduced(a).pra, name);
  }
  for (int i = 0; i < 30; ++i) {
    const auto a = testing::random_pda(rng, 2 + i % 3);
    REQUIRE(is_pda(a));
    if (is_reduced(a, ReductionMode::Cone)) REQUIRE(is_pra_reduced(a).pra);
  }
}

TEST_CASE("PA normalisation") {
  std::mt19937 rng(12);
  for (int i = 0; i < 40; ++i) {
    const auto a = testing::random_pa(rng, 1 + i % 4, 1 + i % 3);
    REQUIRE(is_pa(a));
    const auto sums = state_sums(a);
    REQUIRE(sums);
    for (const auto& v : *sums) REQUIRE(v == 1);
    const auto total = total_sum(a);
    REQUIRE(total.converges());
    REQUIRE(total.value == 1);
  }
}

TEST_CASE("bounded stochastic check") {
  const auto t = check_stochastic_bounded(fixtures::build("prop10_t"), 8);
  CHECK(t.sum_is_one);
  CHECK(t.nonneg_up_to == 8);
  CHECK_FALSE(t.violation);

  const auto app = fixtures::build("fig3_App");
  const auto r = check_stochastic_bounded(app, 8);
  CHECK(r.sum_is_one);
  CHECK_FALSE(r.violation);

  Vector neg = app.final_weights();
  for (auto& v : neg) v = -v;
  const auto flipped = check_stochastic_bounded(with_final_weights(app, neg), 8);
  CHECK_FALSE(flipped.sum_is_one);
  REQUIRE(flipped.violation);
  CHECK(flipped.violation->empty());

  for (const auto& name : fixtures::names()) {
    const auto a = fixtures::build(name);
    if (!is_pa(a)) continue;
    const auto rep = check_stochastic_bounded(a, 8);
    CHECK_MESSAGE(rep.sum_is_one, name);
    CHECK_MESSAGE(!rep.violation, name);
  }
}

TEST_CASE("violation is the length-lex smallest negative word") {
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    const auto a = testing::random_ma(rng, 2, 2, 0.4);
    const auto rep = check_stochastic_bounded(a, 5);
    std::optional<Word> expected;
    for (const auto& w : words_up_to(2, 5))
      if (testing::path_sum(a, w) < 0) {
        expected = w;
        break;
      }
    REQUIRE(rep.violation == expected);
  }
}

TEST_CASE("classify report") {
  const auto fig5 = classify(fixtures::build("fig5"));
  CHECK(fig5.trimmed);
  CHECK(fig5.semi_pa);
  CHECK(fig5.pa);
  CHECK_FALSE(fig5.pda);
  REQUIRE(fig5.pra_reduced);
  CHECK(fig5.pra_reduced->result.pra);
  CHECK_FALSE(fig5.pra_reduced->on_cone_reduction);

  const auto app = classify(fixtures::build("fig3_App"));
  CHECK_FALSE(app.semi_pa);
  CHECK_FALSE(app.pa);
  CHECK_FALSE(app.pra_reduced);
  CHECK(app.stochastic.sum_is_one);

  const auto f = fixtures::build("fig2_A");
  const auto doubled = classify(weighted_direct_sum({f, f}, {q(1, 2), q(1, 2)}));
  CHECK(doubled.pa);
  REQUIRE(doubled.pra_reduced);
  CHECK(doubled.pra_reduced->on_cone_reduction);
  CHECK(doubled.pra_reduced->result.pra);
  CHECK(doubled.pra_reduced->states.size() == 2);

  std::mt19937 rng(14);
  for (int i = 0; i < 30; ++i) {
    const auto c = classify(testing::random_pa(rng, 2 + i % 2, 2));
    REQUIRE(c.semi_pa);
    REQUIRE(c.pa);
    if (c.pda) REQUIRE(c.pa);
    REQUIRE(c.pra_reduced);
  }
}

TEST_CASE("hardness instance examples") {
  const auto all = pra_hardness_instance({single_state_all({"a"})});
  CHECK_FALSE(is_pra_reduced(all).pra);

  const auto eps = pra_hardness_instance({epsilon_only()});
  CHECK(is_pra_reduced(eps).pra);

  const auto parity = pra_hardness_instance({a_parity(0), a_parity(1)});
  CHECK_FALSE(is_pra_reduced(parity).pra);

  const auto even = pra_hardness_instance({a_parity(0)});
  CHECK(is_pra_reduced(even).pra);

  for (const auto* b : {&all, &eps, &parity, &even}) {
    CHECK(is_pa(*b));
    CHECK(is_reduced(*b, ReductionMode::Cone));
    CHECK(b->find_state("q0"));
    CHECK(b->find_state("qb"));
    CHECK(b->find_letter("lam"));
    CHECK(b->find_letter("x1"));
  }
}

TEST_CASE("hardness instance input validation") {
  Dfa empty = epsilon_only();
  empty.accepting.clear();
  CHECK_THROWS_AS(pra_hardness_instance({empty}), std::invalid_argument);
  Dfa partial = epsilon_only();
  partial.delta.erase({"t", "a"});
  CHECK_THROWS_AS(pra_hardness_instance({partial}), std::invalid_argument);
  CHECK_THROWS_AS(pra_hardness_instance({single_state_all({"a"}), a_parity(0)}), std::invalid_argument);
  CHECK_THROWS_AS(pra_hardness_instance({}), std::invalid_argument);
}
