#ifndef RATSTOCH_EQUIVALENCE_HPP
#define RATSTOCH_EQUIVALENCE_HPP

#include <vector>

#include "ratstoch/automaton.hpp"

namespace ratstoch {

struct EquivalenceOutcome {
  enum class Tag { Equal, Distinct };
  Tag tag = Tag::Equal;
  // Present iff Distinct; letters index the compared (union) alphabet.
  Word witness;
  Rational left;
  Rational right;
  // Words whose θ-images form the basis of E, in length-lex order.
  std::vector<Word> basis_words;
  std::vector<std::string> alphabet;

  bool equal() const { return tag == Tag::Equal; }
};

// Explores θ(v) = (μ(v)γ, μ'(v)γ') in length-lex order, keeping v when θ(v)
// leaves the span found so far, then checks T(u, u') = λu − λ'u' on the
// basis. Automata over different alphabets are compared over the union.
EquivalenceOutcome are_equivalent(const MultiplicityAutomaton& a, const MultiplicityAutomaton& b);

struct CombinationOutcome {
  enum class Tag { Expressible, Infeasible };
  Tag tag = Tag::Infeasible;
  Vector coefficients;        // present iff Expressible
  std::vector<Word> probes;   // words whose equations made up the final system

  bool expressible() const { return tag == Tag::Expressible; }
};

// Looks for α with r_{A₀} = Σ αᵢ r_{Aᵢ} (αᵢ ≥ 0 when nonneg). Grows the
// equation set one counterexample word at a time until the current solution
// reproduces A₀ or the system becomes infeasible.
CombinationOutcome express_combination(const MultiplicityAutomaton& target,
                                       const std::vector<MultiplicityAutomaton>& generators,
                                       bool nonneg);

}  // namespace ratstoch

#endif  // RATSTOCH_EQUIVALENCE_HPP
