#include "ratstoch/fixtures.hpp"

#include <stdexcept>

namespace ratstoch::fixtures {

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

Rational pow2(std::size_t k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, k);
  return Rational(v);
}

MultiplicityAutomaton single_loop(const Rational& stop, const Rational& loop) {
  AutomatonBuilder b({"a"});
  b.add_state("q0");
  b.set_initial("q0", 1).set_final("q0", stop).set_transition("q0", "a", "q0", loop);
  return b.build();
}

MultiplicityAutomaton example1_p() {
  AutomatonBuilder b({"a"});
  b.add_state("p1");
  b.add_state("p2");
  b.set_initial("p1", r(1, 2)).set_initial("p2", r(1, 2));
  b.set_final("p1", r(1, 2)).set_final("p2", r(3, 4));
  b.set_transition("p1", "a", "p1", r(1, 2)).set_transition("p2", "a", "p2", r(1, 4));
  return b.build();
}

MultiplicityAutomaton fig2_a() {
  AutomatonBuilder b({"a", "b"});
  b.add_state("q0");
  b.add_state("q1");
  b.set_initial("q0", 1).set_final("q1", 1);
  b.set_transition("q0", "a", "q1", r(1, 2)).set_transition("q0", "b", "q0", r(1, 2));
  return b.build();
}

// Representation over the basis {p, a⁻¹p}.
MultiplicityAutomaton fig3_app() {
  LinearRepresentation rep;
  rep.alphabet = {"a", "b"};
  rep.lambda = {r(1), r(0)};
  rep.mu = {Matrix{{r(0), r(3, 8)}, {r(-1, 6), r(3, 4)}}, Matrix{{r(3, 4), r(-3, 8)}, {r(1, 6), r(0)}}};
  rep.gamma = {r(1, 4), r(1, 4)};
  return from_linear_representation(rep);
}

MultiplicityAutomaton fig5() {
  AutomatonBuilder b({"a"});
  b.add_state("q0");
  b.add_state("q1");
  b.set_initial("q0", 1).set_final("q0", r(1, 2));
  b.set_transition("q0", "a", "q1", r(1, 2));
  b.set_transition("q1", "a", "q0", r(1, 2)).set_transition("q1", "a", "q1", r(1, 2));
  return b.build();
}

// Basis {n²·g, n·g, g} with n = |w|_a − |w|_b and g(w) = 1/(2·4^{|w|}).
MultiplicityAutomaton prop10_t() {
  LinearRepresentation rep;
  rep.alphabet = {"a", "b"};
  rep.lambda = {r(1), r(0), r(0)};
  const Rational q = r(1, 4);
  rep.mu = {q * Matrix{{r(1), r(2), r(1)}, {r(0), r(1), r(1)}, {r(0), r(0), r(1)}},
            q * Matrix{{r(1), r(-2), r(1)}, {r(0), r(1), r(-1)}, {r(0), r(0), r(1)}}};
  rep.gamma = {r(0), r(0), r(1, 2)};
  return from_linear_representation(rep);
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"example1_p1", "example1_p2", "example1_p", "fig2_A",
                                            "fig3_App",    "fig5",        "prop10_t"};
  return all;
}

MultiplicityAutomaton build(std::string_view name) {
  if (name == "example1_p1") return single_loop(r(1, 2), r(1, 2));
  if (name == "example1_p2") return single_loop(r(3, 4), r(1, 4));
  if (name == "example1_p") return example1_p();
  if (name == "fig2_A") return fig2_a();
  if (name == "fig3_App") return fig3_app();
  if (name == "fig5") return fig5();
  if (name == "prop10_t") return prop10_t();
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

Rational lucas(long k) {
  const long m = k < 0 ? -k : k;
  mpz_class prev = 2;
  mpz_class cur = 1;
  if (m == 0) return Rational(prev);
  for (long i = 1; i < m; ++i) {
    mpz_class next = cur + prev;
    prev = cur;
    cur = next;
  }
  return (k < 0 && m % 2 == 1) ? Rational(-cur) : Rational(cur);
}

Rational example1_p1_value(std::size_t n) { return 1 / pow2(n + 1); }

Rational example1_p2_value(std::size_t n) { return 3 / pow2(2 * n + 2); }

Rational example1_p_value(std::size_t n) {
  return (example1_p1_value(n) + example1_p2_value(n)) / 2;
}

Rational fig3_value(std::size_t count_a, std::size_t count_b) {
  const long n = static_cast<long>(count_a) - static_cast<long>(count_b);
  return lucas(2 * n) / pow2(2 * (count_a + count_b) + 3);
}

Rational prop10_value(std::size_t count_a, std::size_t count_b) {
  const long n = static_cast<long>(count_a) - static_cast<long>(count_b);
  return Rational(n * n) / pow2(2 * (count_a + count_b) + 1);
}

Rational oracle_gamma(std::size_t n) {
  Rational g = r(1, 2);
  for (std::size_t i = 0; i < n; ++i) g = (1 - 2 * g) / (4 * (1 - g));
  return g;
}

}  // namespace ratstoch::fixtures
