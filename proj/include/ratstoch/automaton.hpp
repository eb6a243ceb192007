#ifndef RATSTOCH_AUTOMATON_HPP
#define RATSTOCH_AUTOMATON_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratstoch/linalg.hpp"
#include "ratstoch/rational.hpp"

namespace ratstoch {

using LetterIndex = std::size_t;
using StateIndex = std::size_t;

// A word is a sequence of letter indices into some declared alphabet.
using Word = std::vector<LetterIndex>;

// Length-lexicographic order; letters compare by their declared position.
bool length_lex_less(const Word& a, const Word& b);

// Every word of length <= max_length over letters 0..alphabet_size-1, in
// length-lex order.
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length);

Word concat(const Word& a, const Word& b);

// Textual words: "@" is ε; letters are written back to back when every
// letter of the alphabet is a single character, dot-separated otherwise.
std::string format_word(const std::vector<std::string>& alphabet, const Word& w);
// Accepts "@", dot-separated letters, a single letter name, or a run of
// single-character letters. Throws std::invalid_argument on unknown letters.
Word parse_word(const std::vector<std::string>& alphabet, std::string_view text);

struct Transition {
  StateIndex from;
  LetterIndex letter;
  StateIndex to;
  Rational weight;
};

// ⟨Σ, Q, φ, ι, τ⟩ over ℚ. Weights are stored densely (one |Q|×|Q| matrix per
// letter); the support is the set of nonzero entries. Instances are
// immutable: build them with AutomatonBuilder or the validating constructor.
class MultiplicityAutomaton {
 public:
  MultiplicityAutomaton() = default;
  MultiplicityAutomaton(std::vector<std::string> alphabet, std::vector<std::string> states,
                        Vector initial, Vector final, std::vector<Matrix> transitions);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t num_letters() const { return alphabet_.size(); }
  std::size_t num_states() const { return states_.size(); }

  const Rational& initial(StateIndex q) const { return initial_.at(q); }
  const Rational& final(StateIndex q) const { return final_.at(q); }
  const Rational& transition(StateIndex from, LetterIndex x, StateIndex to) const {
    return transitions_.at(x)(from, to);
  }
  const Vector& initial_weights() const { return initial_; }
  const Vector& final_weights() const { return final_; }
  const Matrix& letter_matrix(LetterIndex x) const { return transitions_.at(x); }
  const std::vector<Matrix>& letter_matrices() const { return transitions_; }

  std::optional<LetterIndex> find_letter(std::string_view letter) const;
  std::optional<StateIndex> find_state(std::string_view name) const;
  // Throws std::invalid_argument naming the unknown state.
  StateIndex state_index(std::string_view name) const;

  // Nonzero transitions ordered by (from, letter, to).
  std::vector<Transition> transitions() const;

  friend bool operator==(const MultiplicityAutomaton&, const MultiplicityAutomaton&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  Vector initial_;
  Vector final_;
  std::vector<Matrix> transitions_;
};

class AutomatonBuilder {
 public:
  explicit AutomatonBuilder(std::vector<std::string> alphabet);

  StateIndex add_state(std::string name);
  AutomatonBuilder& set_initial(std::string_view state, const Rational& weight);
  AutomatonBuilder& set_final(std::string_view state, const Rational& weight);
  AutomatonBuilder& set_transition(std::string_view from, std::string_view letter,
                                   std::string_view to, const Rational& weight);

  MultiplicityAutomaton build() const;

 private:
  StateIndex state(std::string_view name) const;

  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  std::vector<Rational> initial_;
  std::vector<Rational> final_;
  std::vector<Transition> transitions_;
};

// (λ, μ, γ): r(w) = λ·μ(w₁)···μ(w_k)·γ.
struct LinearRepresentation {
  std::vector<std::string> alphabet;
  Vector lambda;
  std::vector<Matrix> mu;
  Vector gamma;

  std::size_t dimension() const { return lambda.size(); }
};

Rational evaluate(const LinearRepresentation& rep, const Word& w);

// r_A(w) as ι·μ(w)·τ. Throws std::out_of_range on a letter outside Σ.
Rational evaluate(const MultiplicityAutomaton& a, const Word& w);
// r_{A,q}(w).
Rational evaluate_state(const MultiplicityAutomaton& a, StateIndex q, const Word& w);
Rational evaluate_state(const MultiplicityAutomaton& a, std::string_view q, const Word& w);

// ι·μ(w), the row of weights reached after reading w.
Vector forward_weights(const MultiplicityAutomaton& a, const Word& w);
// μ(w)·τ, the column of state-series values at w.
Vector backward_weights(const MultiplicityAutomaton& a, const Word& w);

LinearRepresentation to_linear_representation(const MultiplicityAutomaton& a);
// States are named q0..q{n-1} unless names are supplied.
MultiplicityAutomaton from_linear_representation(const LinearRepresentation& rep,
                                                 std::vector<std::string> state_names = {});

// Builds (λ, μ, γ) = (coeffs, relations, epsilon_values) from the relations
// r = Σ αᵢ rᵢ and ẋrᵢ = Σⱼ αˣᵢⱼ rⱼ. The caller vouches for the relations.
LinearRepresentation rep_from_generator_relations(std::vector<std::string> alphabet,
                                                  Vector coeffs, std::vector<Matrix> relations,
                                                  Vector epsilon_values);

// States reachable from supp(ι) through nonzero transitions.
std::vector<bool> accessible_states(const MultiplicityAutomaton& a);
// States from which supp(τ) is reachable.
std::vector<bool> coaccessible_states(const MultiplicityAutomaton& a);

// Keeps exactly the accessible and co-accessible states, in declared order.
MultiplicityAutomaton trim(const MultiplicityAutomaton& a);

// Same automaton restricted/renumbered to the listed states, in that order.
MultiplicityAutomaton restrict_to_states(const MultiplicityAutomaton& a,
                                         const std::vector<StateIndex>& keep);

MultiplicityAutomaton with_initial_weights(const MultiplicityAutomaton& a, Vector initial);

// The automaton whose series is r_{A,q}: ι replaced by the indicator of q.
MultiplicityAutomaton state_series_automaton(const MultiplicityAutomaton& a, StateIndex q);

// A over `alphabet`, which must contain every letter of A; new letters get
// zero transitions and letters are reordered to match.
MultiplicityAutomaton over_alphabet(const MultiplicityAutomaton& a,
                                    const std::vector<std::string>& alphabet);

// a's letters in order followed by b's letters not in a.
std::vector<std::string> union_alphabet(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b);

// Disjoint union with block i's initial weights scaled by coeffs[i]; its
// series is Σ coeffs[i]·r_{parts[i]}. All parts must share one alphabet.
MultiplicityAutomaton weighted_direct_sum(const std::vector<MultiplicityAutomaton>& parts,
                                          const Vector& coeffs);

// Σ_x μ(x): M[i][j] = φ(qᵢ, Σ, qⱼ).
Matrix letter_sum_matrix(const MultiplicityAutomaton& a);

}  // namespace ratstoch

#endif  // RATSTOCH_AUTOMATON_HPP
