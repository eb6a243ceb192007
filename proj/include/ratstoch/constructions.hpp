#ifndef RATSTOCH_CONSTRUCTIONS_HPP
#define RATSTOCH_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ratstoch/automaton.hpp"

namespace ratstoch {

// Generators with unit mass, nonnegative on words up to the check length,
// together with the per-letter coefficients ẋsᵢ = Σⱼ stability[x](i, j) sⱼ.
struct GeneratorSet {
  std::vector<MultiplicityAutomaton> generators;
  std::vector<Matrix> stability;
};

// Nonnegative stability coefficients for the generators, or nullopt when
// some ẋsᵢ is not in their cone. Throws std::invalid_argument when a
// generator's total mass is not exactly 1 or it takes a negative value on a
// word of length ≤ check_length.
std::optional<GeneratorSet> stable_generator_set(const std::vector<MultiplicityAutomaton>& generators,
                                                 std::size_t check_length = 8);

// The PA with states s0..s{k-1} (one per generator): ι = convex coefficients
// of the target, τ(sᵢ) = sᵢ(ε), φ(sᵢ, x, sⱼ) = stability coefficients.
// nullopt when either LP is infeasible.
std::optional<MultiplicityAutomaton> synthesize_pa(const MultiplicityAutomaton& target,
                                                   const std::vector<MultiplicityAutomaton>& generators);

struct DeterminizationOutcome {
  enum class Tag { Pda, BoundExceeded };
  Tag tag = Tag::BoundExceeded;
  std::optional<MultiplicityAutomaton> pda;
  std::size_t discovered_residuals = 0;
  std::vector<Word> state_words;  // smallest word of each residual found
};

// Residual exploration in length-lex order. Residuals are identified by
// series equality; each new one becomes a state named after its word.
// Stops once more than max_states distinct residuals have been found.
// Throws std::domain_error when Σ r_A ≠ 1 or A takes a negative value on a
// word of length ≤ 8.
DeterminizationOutcome determinize_to_pda(const MultiplicityAutomaton& a, std::size_t max_states);

// Prefixial PRA over the prefix closure of the witnesses: state w has series
// w⁻¹r_A. witnesses[q] must satisfy w_q⁻¹r_A = r_{A,q}; std::invalid_argument
// otherwise, or when A is not a PA.
MultiplicityAutomaton to_prefixial_pra(const MultiplicityAutomaton& a, const std::vector<Word>& witnesses);

// Words u, |u| ≤ depth, whose residuals form a stable set that generates p
// and is minimal for inclusion among the residuals found. nullopt is
// inconclusive: the survivors are not stable at this depth.
std::optional<std::vector<Word>> minimal_residual_generators(const MultiplicityAutomaton& a,
                                                             std::size_t depth);

}  // namespace ratstoch

#endif  // RATSTOCH_CONSTRUCTIONS_HPP
