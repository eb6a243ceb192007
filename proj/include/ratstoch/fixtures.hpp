#ifndef RATSTOCH_FIXTURES_HPP
#define RATSTOCH_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ratstoch/automaton.hpp"

namespace ratstoch::fixtures {

// example1_p1, example1_p2, example1_p, fig2_A, fig3_App, fig5, prop10_t.
const std::vector<std::string>& names();

// Throws std::invalid_argument on an unknown name.
MultiplicityAutomaton build(std::string_view name);

// Lucas numbers: L₀ = 2, L₁ = 1, L_{k+1} = L_k + L_{k−1}, L_{−k} = (−1)^k L_k.
Rational lucas(long k);

// Closed forms of the fixture series, computed without any automaton.
Rational example1_p1_value(std::size_t n);  // p₁(aⁿ) = 2^{−(n+1)}
Rational example1_p2_value(std::size_t n);  // p₂(aⁿ) = 3·2^{−(2n+2)}
Rational example1_p_value(std::size_t n);   // (p₁ + p₂)/2
// L_{2(|w|_a − |w|_b)} / 2^{2|w|+3}
Rational fig3_value(std::size_t count_a, std::size_t count_b);
// (|w|_a − |w|_b)² / 2^{2|w|+1}
Rational prop10_value(std::size_t count_a, std::size_t count_b);

// γ₀ = 1/2, γ_{n+1} = (1 − 2γ_n) / (4(1 − γ_n)).
Rational oracle_gamma(std::size_t n);

}  // namespace ratstoch::fixtures

#endif  // RATSTOCH_FIXTURES_HPP
