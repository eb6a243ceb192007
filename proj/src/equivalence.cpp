#include "ratstoch/equivalence.hpp"

#include <set>
#include <stdexcept>

namespace ratstoch {

EquivalenceOutcome are_equivalent(const MultiplicityAutomaton& a_in, const MultiplicityAutomaton& b_in) {
  const auto alphabet = union_alphabet(a_in.alphabet(), b_in.alphabet());
  const auto a = over_alphabet(a_in, alphabet);
  const auto b = over_alphabet(b_in, alphabet);
  const std::size_t n = a.num_states();
  const std::size_t dim = n + b.num_states();

  // θ(w) = (μ(w)γ, μ'(w)γ')
  auto theta = [&](const Word& w) {
    Vector top = backward_weights(a, w);
    Vector bottom = backward_weights(b, w);
    top.insert(top.end(), bottom.begin(), bottom.end());
    return top;
  };

  EquivalenceOutcome out;
  out.alphabet = alphabet;
  // θ(xv) = μ(x)θ(v), so the span is closed by extending kept words on the
  // left. The frontier is ordered so words are examined in length-lex order.
  IncrementalBasis span(dim);
  span.add(theta(Word{}));
  out.basis_words.push_back(Word{});
  std::set<Word, decltype(&length_lex_less)> frontier(&length_lex_less);
  for (LetterIndex x = 0; x < alphabet.size(); ++x) frontier.insert(Word{x});
  while (!frontier.empty()) {
    Word v = *frontier.begin();
    frontier.erase(frontier.begin());
    if (!span.add(theta(v))) continue;
    for (LetterIndex x = 0; x < alphabet.size(); ++x) frontier.insert(concat(Word{x}, v));
    out.basis_words.push_back(std::move(v));
  }

  for (const auto& v : out.basis_words) {
    const Rational left = evaluate(a, v);
    const Rational right = evaluate(b, v);
    if (left != right) {
      out.tag = EquivalenceOutcome::Tag::Distinct;
      out.witness = v;
      out.left = left;
      out.right = right;
      return out;
    }
  }
  out.tag = EquivalenceOutcome::Tag::Equal;
  return out;
}

CombinationOutcome express_combination(const MultiplicityAutomaton& target_in,
                                       const std::vector<MultiplicityAutomaton>& generators_in,
                                       bool nonneg) {
  auto alphabet = target_in.alphabet();
  for (const auto& g : generators_in) alphabet = union_alphabet(alphabet, g.alphabet());
  const auto target = over_alphabet(target_in, alphabet);
  std::vector<MultiplicityAutomaton> generators;
  for (const auto& g : generators_in) generators.push_back(over_alphabet(g, alphabet));
  const std::size_t n = generators.size();

  CombinationOutcome out;
  std::vector<LinearConstraint> equations;
  auto add_equation = [&](const Word& u) {
    LinearConstraint c;
    c.relation = Relation::Equal;
    c.constant = -evaluate(target, u);
    for (const auto& g : generators) c.coeffs.push_back(evaluate(g, u));
    equations.push_back(std::move(c));
    out.probes.push_back(u);
  };
  add_equation(Word{});

  // Each counterexample equation is independent of the previous ones, so the
  // loop ends after at most n + 1 equations.
  for (std::size_t round = 0; round <= n + 1; ++round) {
    std::vector<LinearConstraint> system = equations;
    if (nonneg) {
      for (std::size_t i = 0; i < n; ++i) {
        LinearConstraint c;
        c.constant = 0;
        c.coeffs = unit_vector(n, i);
        c.relation = Relation::GreaterEqual;
        system.push_back(std::move(c));
      }
    }
    const auto alpha = lp_feasible(system, n);
    if (!alpha) {
      out.tag = CombinationOutcome::Tag::Infeasible;
      return out;
    }
    const auto check = are_equivalent(target, weighted_direct_sum(generators, *alpha));
    if (check.equal()) {
      out.tag = CombinationOutcome::Tag::Expressible;
      out.coefficients = *alpha;
      return out;
    }
    add_equation(check.witness);
  }
  throw std::logic_error("express_combination: equation system failed to stabilise");
}

}  // namespace ratstoch
