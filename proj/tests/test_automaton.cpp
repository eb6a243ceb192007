#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratstoch/automaton.hpp"
#include "ratstoch/fixtures.hpp"
#include "support.hpp"

using namespace ratstoch;
using testing::q;
using testing::word;

TEST_CASE("length-lex order and word enumeration") {
  CHECK(length_lex_less({1}, {0, 0}));
  CHECK(length_lex_less({0, 1}, {1, 0}));
  CHECK_FALSE(length_lex_less({0}, {0}));
  const auto ws = words_up_to(2, 3);
  CHECK(ws.size() == 15);
  CHECK(ws.front().empty());
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(length_lex_less(ws[i - 1], ws[i]));
  CHECK(words_up_to(0, 4).size() == 1);
}

TEST_CASE("word text") {
  const std::vector<std::string> ab{"a", "b"};
  CHECK(format_word(ab, {}) == "@");
  CHECK(format_word(ab, {1, 0}) == "ba");
  CHECK(parse_word(ab, "ba") == Word{1, 0});
  CHECK(parse_word(ab, "b.a") == Word{1, 0});
  CHECK(parse_word(ab, "@").empty());
  CHECK_THROWS_AS(parse_word(ab, "c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(ab, ""), std::invalid_argument);
  const std::vector<std::string> long_letters{"a", "lam", "x1"};
  CHECK(format_word(long_letters, {1, 0, 2}) == "lam.a.x1");
  CHECK(parse_word(long_letters, "lam.a.x1") == Word{1, 0, 2});
  CHECK(parse_word(long_letters, "lam") == Word{1});
  CHECK(parse_word(long_letters, "aa") == Word{0, 0});
}

TEST_CASE("evaluate examples") {
  const auto fig2 = fixtures::build("fig2_A");
  CHECK(evaluate(fig2, word(fig2, "ba")) == q(1, 4));
  const auto app = fixtures::build("fig3_App");
  CHECK(evaluate(app, {}) == q(1, 4));
  CHECK(evaluate(app, word(app, "a")) == q(3, 32));
  CHECK_THROWS_AS(evaluate(app, Word{2}), std::out_of_range);
}

TEST_CASE("evaluate_state examples") {
  const auto fig2 = fixtures::build("fig2_A");
  for (StateIndex s = 0; s < fig2.num_states(); ++s) CHECK(evaluate_state(fig2, s, {}) == fig2.final(s));
  CHECK(evaluate_state(fig2, "q1", word(fig2, "a")) == 0);
  const auto fig5 = fixtures::build("fig5");
  CHECK(evaluate_state(fig5, "q1", word(fig5, "a")) == q(1, 4));
  CHECK_THROWS_AS(evaluate_state(fig5, "nope", {}), std::invalid_argument);
}

TEST_CASE("linear representation conversions") {
  AutomatonBuilder b({"x"});
  b.add_state("s");
  b.set_initial("s", 1).set_final("s", 1);
  const auto single = b.build();
  auto rep = to_linear_representation(single);
  CHECK(rep.lambda == Vector{q(1)});
  CHECK(rep.gamma == Vector{q(1)});
  CHECK(rep.mu[0].is_zero());

  const auto fig2 = fixtures::build("fig2_A");
  rep = to_linear_representation(fig2);
  CHECK(rep.lambda == Vector{q(1), q(0)});
  CHECK(rep.mu[1] == Matrix{{q(1, 2), q(0)}, {q(0), q(0)}});
  CHECK(rep.mu[0] == Matrix{{q(0), q(1, 2)}, {q(0), q(0)}});
  CHECK(rep.gamma == Vector{q(0), q(1)});
  CHECK(from_linear_representation(rep, fig2.states()) == fig2);

  const auto app = fixtures::build("fig3_App");
  CHECK(from_linear_representation(to_linear_representation(app)) == app);
}

TEST_CASE("rep_from_generator_relations examples") {
  auto p1 = from_linear_representation(rep_from_generator_relations({"a"}, {q(1)}, {Matrix{{q(1, 2)}}}, {q(1, 2)}));
  for (std::size_t n = 0; n <= 10; ++n) CHECK(evaluate(p1, testing::power(0, n)) == fixtures::example1_p1_value(n));

  auto p = from_linear_representation(rep_from_generator_relations(
      {"a"}, {q(1, 2), q(1, 2)}, {Matrix{{q(1, 2), q(0)}, {q(0), q(1, 4)}}}, {q(1, 2), q(3, 4)}));
  CHECK(p.num_states() == 2);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(evaluate(p, testing::power(0, n)) == fixtures::example1_p_value(n));

  auto dirac = from_linear_representation(rep_from_generator_relations({"a"}, {q(1)}, {Matrix{{q(0)}}}, {q(1)}));
  CHECK(evaluate(dirac, {}) == 1);
  CHECK(evaluate(dirac, {0}) == 0);
  CHECK_THROWS_AS(rep_from_generator_relations({"a"}, {q(1)}, {Matrix{{q(0)}}}, {q(1), q(0)}),
                  std::invalid_argument);
}

TEST_CASE("trim examples") {
  const auto fig2 = fixtures::build("fig2_A");
  CHECK(trim(fig2) == fig2);

  AutomatonBuilder b({"a", "b"});
  for (const auto& s : {"q0", "q1", "iso", "sink"}) b.add_state(s);
  b.set_initial("q0", 1).set_final("q1", 1);
  b.set_transition("q0", "a", "q1", q(1, 2)).set_transition("q0", "b", "q0", q(1, 2));
  b.set_transition("iso", "a", "iso", q(1, 3));
  b.set_transition("q0", "b", "sink", q(1, 5)).set_transition("sink", "a", "sink", q(1));
  const auto messy = b.build();
  const auto trimmed = trim(messy);
  CHECK(trimmed.states() == std::vector<std::string>{"q0", "q1"});
  for (const auto& w : words_up_to(2, 6)) CHECK(evaluate(trimmed, w) == evaluate(messy, w));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(MultiplicityAutomaton({"a", "a"}, {"q"}, {q(1)}, {q(1)}, {Matrix(1, 1), Matrix(1, 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MultiplicityAutomaton({"a"}, {"q", "q"}, {q(1), q(0)}, {q(1), q(0)}, {Matrix(2, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MultiplicityAutomaton({"a"}, {"q"}, {q(1)}, {q(1)}, {Matrix(2, 2)}), std::invalid_argument);
  AutomatonBuilder b({"a"});
  b.add_state("q");
  CHECK_THROWS_AS(b.set_transition("q", "z", "q", 1), std::invalid_argument);
  CHECK_THROWS_AS(b.set_initial("r", 1), std::invalid_argument);
  const MultiplicityAutomaton empty({"a"}, {}, {}, {}, {Matrix(0, 0)});
  CHECK(evaluate(empty, {0, 0}) == 0);
}

TEST_CASE("properties on random automata") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing::random_ma(rng, 2 + trial % 3, 2);
    const auto back = from_linear_representation(to_linear_representation(a), a.states());
    CHECK(back == a);
    const auto trimmed = trim(a);
    for (const auto& w : words_up_to(2, trial < 10 ? 8 : 5)) {
      const Rational v = evaluate(a, w);
      CHECK(v == testing::path_sum(a, w));
      CHECK(v == evaluate(back, w));
      CHECK(v == evaluate(trimmed, w));
      Rational by_state = 0;
      for (StateIndex s = 0; s < a.num_states(); ++s) by_state += a.initial(s) * evaluate_state(a, s, w);
      CHECK(v == by_state);
    }
  }
}

TEST_CASE("weighted direct sum and alphabet extension") {
  const auto p1 = fixtures::build("example1_p1");
  const auto p2 = fixtures::build("example1_p2");
  const auto mix = weighted_direct_sum({p1, p2}, {q(2, 3), q(1, 3)});
  CHECK(mix.num_states() == 2);
  for (std::size_t n = 0; n <= 6; ++n) {
    const Word w = testing::power(0, n);
    CHECK(evaluate(mix, w) == q(2, 3) * evaluate(p1, w) + q(1, 3) * evaluate(p2, w));
  }
  const auto wide = over_alphabet(p1, {"b", "a"});
  CHECK(wide.alphabet() == std::vector<std::string>{"b", "a"});
  CHECK(evaluate(wide, {1, 1}) == evaluate(p1, {0, 0}));
  CHECK(evaluate(wide, {0}) == 0);
  CHECK(union_alphabet({"a"}, {"b", "a"}) == std::vector<std::string>{"a", "b"});
}
