#ifndef RATSTOCH_REDUCTION_HPP
#define RATSTOCH_REDUCTION_HPP

#include <optional>
#include <vector>

#include "ratstoch/automaton.hpp"

namespace ratstoch {

// Field: coefficients range over ℚ. Cone: coefficients range over ℚ⁺.
enum class ReductionMode { Field, Cone };

// Coefficients α (indexed like the states of A, with α[q] = 0) such that
// r_{A,q} = Σ_{q'≠q} α[q'] r_{A,q'}, or nullopt when none exist in the mode.
std::optional<Vector> state_series_coefficients(const MultiplicityAutomaton& a, StateIndex q,
                                                ReductionMode mode);

// True iff no state series is a (mode-constrained) combination of the others.
bool is_reduced(const MultiplicityAutomaton& a, ReductionMode mode);

// One K-reduction step removing q with the given coefficients:
// φ'(r,x,s) = φ(r,x,s) + α_s φ(r,x,q), ι'(r) = ι(r) + α_r ι(q), τ' = τ.
MultiplicityAutomaton eliminate_state(const MultiplicityAutomaton& a, StateIndex q,
                                      const Vector& coefficients);

// Trims, then eliminates the first reducible state (declared order) until
// none is left. In Field mode the result always has hankel_rank(A) states:
// when state elimination stalls above that (possible when the forward space
// is smaller than the state space), the automaton is projected onto its
// forward Krylov space and state elimination resumes; states produced by the
// projection are named f0, f1, ...
MultiplicityAutomaton reduce(const MultiplicityAutomaton& a, ReductionMode mode);

// Rank of the pairing between span{λμ(u)} and span{μ(w)γ}.
std::size_t hankel_rank(const MultiplicityAutomaton& a);

// Words u whose λμ(u) form a basis of the forward space, length-lex order.
std::vector<Word> forward_basis_words(const MultiplicityAutomaton& a);
// Words w whose μ(w)γ form a basis of the backward space, length-lex order.
std::vector<Word> backward_basis_words(const MultiplicityAutomaton& a);

}  // namespace ratstoch

#endif  // RATSTOCH_REDUCTION_HPP
