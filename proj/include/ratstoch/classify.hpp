#ifndef RATSTOCH_CLASSIFY_HPP
#define RATSTOCH_CLASSIFY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratstoch/automaton.hpp"

namespace ratstoch {

// Every state is accessible from supp(ι) and co-accessible to supp(τ).
bool is_trimmed(const MultiplicityAutomaton& a);

// Weights in [0,1], Σ ι ≤ 1 and τ(q) + φ(q, Σ, Q) ≤ 1 for every state.
bool is_semi_pa(const MultiplicityAutomaton& a);

// Trimmed semi-PA with Σ ι = 1 and τ(q) + φ(q, Σ, Q) = 1.
bool is_pa(const MultiplicityAutomaton& a);

// PA with a single initial state and at most one x-successor per state.
bool is_pda(const MultiplicityAutomaton& a);

// Q_I = supp(ι).
std::vector<StateIndex> initial_support(const MultiplicityAutomaton& a);

// δ(R, w) in the support NFA. R is a sorted list of states.
std::vector<StateIndex> support_successors(const MultiplicityAutomaton& a,
                                           const std::vector<StateIndex>& from, const Word& w);

struct PraResult {
  bool pra = false;
  // witnesses[q] satisfies δ(Q_I, w) = {q}; filled only when pra holds.
  std::vector<Word> witnesses;
};

// Powerset search over the support NFA from Q_I. Witnesses are the
// length-lex smallest words reaching each singleton. Throws
// std::invalid_argument unless A is a Cone-reduced PA.
PraResult is_pra_reduced(const MultiplicityAutomaton& a);

struct StochasticReport {
  bool sum_is_one = false;
  std::size_t nonneg_up_to = 0;
  std::optional<Word> violation;  // smallest w with r_A(w) < 0, |w| ≤ nonneg_up_to
};

// Only the decidable half of stochasticity: Σ_w r_A(w) = 1 exactly, plus a
// bounded search for negative values. Whether an MA over ℚ generates a
// stochastic language is undecidable in general, so a clean report is not a
// proof of nonnegativity beyond the bound.
StochasticReport check_stochastic_bounded(const MultiplicityAutomaton& a, std::size_t max_length = 8);

struct PraReport {
  PraResult result;
  // True when the search ran on reduce(A, Cone) because A itself is not
  // Cone-reduced. A Cone-reduction of a PRA is still a PRA.
  bool on_cone_reduction = false;
  std::vector<std::string> states;  // names in the automaton that was searched
};

struct ClassReport {
  bool trimmed = false;
  bool semi_pa = false;
  bool pa = false;
  bool pda = false;
  std::optional<PraReport> pra_reduced;  // present only for PAs
  StochasticReport stochastic;
};

ClassReport classify(const MultiplicityAutomaton& a, std::size_t max_length = 8);

// A complete DFA given by names.
struct Dfa {
  std::vector<std::string> alphabet;
  std::vector<std::string> states;
  std::string initial;
  std::vector<std::string> accepting;
  std::map<std::pair<std::string, std::string>, std::string> delta;  // (state, letter) -> state

  bool accepts(const std::vector<std::string>& word) const;
};

// The PA B of the PSPACE-hardness argument: B is a Cone-reduced PA, and
// is_pra_reduced(B) holds iff the union of the languages is not Σ*.
// DFAs are restricted to their reachable states first; each must be complete
// over the shared alphabet and accept at least one word (std::invalid_argument
// otherwise). New letters are x1..xn, "lam" and y_<state>; DFA state s of
// automaton i becomes d<i>_<s>, next to q0, q1, qf and qb.
MultiplicityAutomaton pra_hardness_instance(const std::vector<Dfa>& dfas);

}  // namespace ratstoch

#endif  // RATSTOCH_CLASSIFY_HPP
