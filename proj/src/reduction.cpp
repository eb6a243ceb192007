#include "ratstoch/reduction.hpp"

#include <set>
#include <stdexcept>

namespace ratstoch {

namespace {

// Kept words are extended on the right for λμ(u) and on the left for μ(w)γ,
// which keeps the span closed; words are examined in length-lex order.
template <typename VectorOf>
std::vector<Word> explore_basis(const MultiplicityAutomaton& a, VectorOf vector_of, bool extend_right,
                                std::vector<Vector>* vectors) {
  IncrementalBasis span(a.num_states());
  std::vector<Word> words;
  std::set<Word, decltype(&length_lex_less)> frontier(&length_lex_less);
  frontier.insert(Word{});
  while (!frontier.empty()) {
    Word w = *frontier.begin();
    frontier.erase(frontier.begin());
    Vector v = vector_of(w);
    if (!span.add(v)) continue;
    for (LetterIndex x = 0; x < a.num_letters(); ++x)
      frontier.insert(extend_right ? concat(w, Word{x}) : concat(Word{x}, w));
    if (vectors) vectors->push_back(std::move(v));
    words.push_back(std::move(w));
  }
  return words;
}

std::vector<Word> forward_basis(const MultiplicityAutomaton& a, std::vector<Vector>* vectors) {
  return explore_basis(a, [&](const Word& w) { return forward_weights(a, w); }, true, vectors);
}

std::vector<Word> backward_basis(const MultiplicityAutomaton& a, std::vector<Vector>* vectors) {
  return explore_basis(a, [&](const Word& w) { return backward_weights(a, w); }, false, vectors);
}

// Restriction of the representation to span{λμ(u)}: f_i μ(x) = Σ_j μ'(x)[i][j] f_j.
MultiplicityAutomaton project_on_forward_space(const MultiplicityAutomaton& a) {
  std::vector<Vector> basis;
  forward_basis(a, &basis);
  const std::size_t k = basis.size();
  auto coordinates = [&](const Vector& v) {
    auto c = membership_in_span(v, basis);
    if (!c) throw std::logic_error("forward projection: vector left the forward space");
    return *c;
  };
  std::vector<std::string> names;
  Vector gamma;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("f" + std::to_string(i));
    gamma.push_back(dot(basis[i], a.final_weights()));
  }
  std::vector<Matrix> mats;
  for (LetterIndex x = 0; x < a.num_letters(); ++x) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const Vector c = coordinates(basis[i] * a.letter_matrix(x));
      for (std::size_t j = 0; j < k; ++j) m(i, j) = c[j];
    }
    mats.push_back(std::move(m));
  }
  const Vector lambda = k == 0 ? Vector{} : coordinates(a.initial_weights());
  return MultiplicityAutomaton(a.alphabet(), std::move(names), lambda, std::move(gamma),
                               std::move(mats));
}

// Eliminates reducible states until none is left; returns the number removed.
std::size_t eliminate_all(MultiplicityAutomaton& a, ReductionMode mode) {
  std::size_t removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateIndex q = 0; q < a.num_states(); ++q) {
      if (auto c = state_series_coefficients(a, q, mode)) {
        const std::size_t before = a.num_states();
        a = trim(eliminate_state(a, q, *c));
        removed += before - a.num_states();
        changed = true;
        break;
      }
    }
  }
  return removed;
}

}  // namespace

std::vector<Word> forward_basis_words(const MultiplicityAutomaton& a) {
  return forward_basis(a, nullptr);
}

std::vector<Word> backward_basis_words(const MultiplicityAutomaton& a) {
  return backward_basis(a, nullptr);
}

std::optional<Vector> state_series_coefficients(const MultiplicityAutomaton& a, StateIndex q,
                                                ReductionMode mode) {
  const std::size_t n = a.num_states();
  if (q >= n) throw std::out_of_range("state index outside the automaton");
  std::vector<StateIndex> others;
  for (StateIndex s = 0; s < n; ++s)
    if (s != q) others.push_back(s);

  // r_q = Σ α r_{q'} holds on every word iff it holds on a basis of the
  // backward space span{μ(w)γ}, so those words give the complete system.
  std::vector<Vector> columns;
  backward_basis(a, &columns);
  std::vector<LinearConstraint> system;
  for (const auto& col : columns) {
    LinearConstraint c;
    c.relation = Relation::Equal;
    c.constant = -col[q];
    for (StateIndex s : others) c.coeffs.push_back(col[s]);
    system.push_back(std::move(c));
  }
  if (mode == ReductionMode::Cone) {
    for (std::size_t i = 0; i < others.size(); ++i) {
      LinearConstraint c;
      c.constant = 0;
      c.coeffs = unit_vector(others.size(), i);
      system.push_back(std::move(c));
    }
  }
  const auto alpha = lp_feasible(system, others.size());
  if (!alpha) return std::nullopt;
  Vector full = zero_vector(n);
  for (std::size_t i = 0; i < others.size(); ++i) full[others[i]] = (*alpha)[i];
  return full;
}

bool is_reduced(const MultiplicityAutomaton& a, ReductionMode mode) {
  for (StateIndex q = 0; q < a.num_states(); ++q)
    if (state_series_coefficients(a, q, mode)) return false;
  return true;
}

MultiplicityAutomaton eliminate_state(const MultiplicityAutomaton& a, StateIndex q,
                                      const Vector& coefficients) {
  const std::size_t n = a.num_states();
  if (q >= n || coefficients.size() != n)
    throw std::invalid_argument("eliminate_state: bad state or coefficient count");
  std::vector<StateIndex> keep;
  for (StateIndex s = 0; s < n; ++s)
    if (s != q) keep.push_back(s);
  const std::size_t k = keep.size();

  std::vector<std::string> names;
  Vector initial;
  Vector final;
  for (StateIndex r : keep) {
    names.push_back(a.states()[r]);
    initial.push_back(a.initial(r) + coefficients[r] * a.initial(q));
    final.push_back(a.final(r));
  }
  std::vector<Matrix> mats;
  for (LetterIndex x = 0; x < a.num_letters(); ++x) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        m(i, j) = a.transition(keep[i], x, keep[j]) + coefficients[keep[j]] * a.transition(keep[i], x, q);
    mats.push_back(std::move(m));
  }
  return MultiplicityAutomaton(a.alphabet(), std::move(names), std::move(initial), std::move(final),
                               std::move(mats));
}

MultiplicityAutomaton reduce(const MultiplicityAutomaton& input, ReductionMode mode) {
  MultiplicityAutomaton a = trim(input);
  eliminate_all(a, mode);
  if (mode == ReductionMode::Cone) return a;

  const std::size_t target = hankel_rank(a);
  while (a.num_states() > target) {
    const std::size_t before = a.num_states();
    a = trim(project_on_forward_space(a));
    eliminate_all(a, mode);
    if (a.num_states() >= before)
      throw std::logic_error("reduce: stalled above the Hankel rank");
  }
  return a;
}

std::size_t hankel_rank(const MultiplicityAutomaton& a) {
  std::vector<Vector> rows;
  std::vector<Vector> cols;
  forward_basis(a, &rows);
  backward_basis(a, &cols);
  if (rows.empty() || cols.empty()) return 0;
  const std::size_t n = a.num_states();
  return rank(Matrix::from_rows(rows, n) * Matrix::from_columns(cols, n));
}

}  // namespace ratstoch
