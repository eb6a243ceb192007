#ifndef RATSTOCH_ANALYSIS_HPP
#define RATSTOCH_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "ratstoch/automaton.hpp"

namespace ratstoch {

struct SumOutcome {
  enum class Tag { Divergent, Converges };
  Tag tag = Tag::Divergent;
  Rational value;  // meaningful only when tag == Converges

  bool converges() const { return tag == Tag::Converges; }
  static SumOutcome divergent() { return {Tag::Divergent, Rational(0)}; }
  static SumOutcome converging(Rational v) { return {Tag::Converges, std::move(v)}; }
};

// How the complement of H inside E is picked. Both choices extend a pivot
// basis of H; Reverse scans E-coordinates from the last one.
enum class ComplementOrder { Forward, Reverse };

struct SumOptions {
  ComplementOrder order = ComplementOrder::Forward;
  // Optional explicit basis of a complement F of E in ℚⁿ. When empty, F is
  // spanned by the unit vectors on the non-pivot coordinates of E.
  std::vector<Vector> complement_of_e;
};

// The subspaces behind the convergence decision for Σ_k ι M^k τ:
// E = span{M^k τ}, H = {u ∈ E : ι M^k u = 0 ∀k}, G ⊕ H = E, F ⊕ E = ℚⁿ.
struct SumDecomposition {
  std::vector<Vector> e_basis;
  std::vector<Vector> h_basis;
  std::vector<Vector> g_basis;
  std::vector<Vector> f_basis;
  Matrix projection_g;  // P_G along F ⊕ H
  Matrix restricted;    // P_G M P_G acting on G, in g_basis coordinates
  SumOutcome outcome;   // value = ι (Id − P_G M P_G)^{-1} τ when convergent
};

SumDecomposition decompose_sum(const Vector& iota, const Matrix& m, const Vector& tau,
                               const SumOptions& options = {});

// Σ_w r_A(w): converges iff (P_G M P_G)^k -> 0, with M = Σ_x μ(x).
SumOutcome total_sum(const MultiplicityAutomaton& a, const SumOptions& options = {});

// s[q] = Σ_w r_{A,q}(w) for every state, or nullopt if any of them diverges.
std::optional<Vector> state_sums(const MultiplicityAutomaton& a);

// r_A(uΣ*) = ι μ(u) s. Throws std::domain_error when state sums diverge.
Rational prefix_weight(const MultiplicityAutomaton& a, const Word& u);
Rational prefix_weight(const MultiplicityAutomaton& a, const Word& u, const Vector& sums);

// u⁻¹r_A: same μ and γ, λ' = ι μ(u) / r_A(uΣ*). Throws std::domain_error when
// the prefix weight is zero or the state sums diverge.
MultiplicityAutomaton residual_automaton(const MultiplicityAutomaton& a, const Word& u);
MultiplicityAutomaton residual_automaton(const MultiplicityAutomaton& a, const Word& u,
                                         const Vector& sums);

}  // namespace ratstoch

#endif  // RATSTOCH_ANALYSIS_HPP
