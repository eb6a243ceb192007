#include "ratstoch/constructions.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "ratstoch/analysis.hpp"
#include "ratstoch/classify.hpp"
#include "ratstoch/equivalence.hpp"

namespace ratstoch {

namespace {

// ẋr: the series w ↦ r(xw).
MultiplicityAutomaton derivative(const MultiplicityAutomaton& a, LetterIndex x) {
  return with_initial_weights(a, a.initial_weights() * a.letter_matrix(x));
}

void require_unit_stochastic(const MultiplicityAutomaton& a, std::size_t check_length,
                             const std::string& what) {
  const auto report = check_stochastic_bounded(a, check_length);
  if (!report.sum_is_one) throw std::invalid_argument(what + ": total mass is not exactly 1");
  if (report.violation)
    throw std::invalid_argument(what + ": negative value on " +
                                format_word(a.alphabet(), *report.violation));
}

}  // namespace

std::optional<GeneratorSet> stable_generator_set(const std::vector<MultiplicityAutomaton>& generators_in,
                                                 std::size_t check_length) {
  if (generators_in.empty()) throw std::invalid_argument("stable_generator_set: no generators");
  std::vector<std::string> alphabet;
  for (const auto& g : generators_in) alphabet = union_alphabet(alphabet, g.alphabet());
  GeneratorSet set;
  for (std::size_t i = 0; i < generators_in.size(); ++i) {
    set.generators.push_back(over_alphabet(generators_in[i], alphabet));
    require_unit_stochastic(set.generators.back(), check_length, "generator " + std::to_string(i));
  }
  const std::size_t k = set.generators.size();
  for (LetterIndex x = 0; x < alphabet.size(); ++x) {
    Matrix coeffs(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto row = express_combination(derivative(set.generators[i], x), set.generators, true);
      if (!row.expressible()) return std::nullopt;
      for (std::size_t j = 0; j < k; ++j) coeffs(i, j) = row.coefficients[j];
    }
    set.stability.push_back(std::move(coeffs));
  }
  return set;
}

std::optional<MultiplicityAutomaton> synthesize_pa(const MultiplicityAutomaton& target,
                                                   const std::vector<MultiplicityAutomaton>& generators) {
  auto set = stable_generator_set(generators);
  if (!set) return std::nullopt;
  const auto alphabet = union_alphabet(set->generators.front().alphabet(), target.alphabet());
  if (alphabet.size() != set->generators.front().num_letters())
    throw std::invalid_argument("synthesize_pa: target uses letters outside the generators' alphabet");

  const auto convex = express_combination(target, set->generators, true);
  if (!convex.expressible()) return std::nullopt;

  const std::size_t k = set->generators.size();
  std::vector<std::string> names;
  Vector tau;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("s" + std::to_string(i));
    tau.push_back(evaluate(set->generators[i], Word{}));
  }
  MultiplicityAutomaton pa(alphabet, std::move(names), convex.coefficients, std::move(tau),
                           set->stability);
  pa = trim(pa);
  if (!is_pa(pa)) throw std::logic_error("synthesize_pa: constructed automaton is not a PA");
  return pa;
}

DeterminizationOutcome determinize_to_pda(const MultiplicityAutomaton& a, std::size_t max_states) {
  const auto report = check_stochastic_bounded(a);
  if (!report.sum_is_one) throw std::domain_error("determinize_to_pda: total mass is not exactly 1");
  if (report.violation)
    throw std::domain_error("determinize_to_pda: negative value on " +
                            format_word(a.alphabet(), *report.violation));
  const auto sums = state_sums(a);
  if (!sums) throw std::domain_error("determinize_to_pda: a state sum diverges");

  DeterminizationOutcome out;
  std::vector<MultiplicityAutomaton> residuals;
  std::vector<Rational> weights;  // r_A(uΣ*) for each representative u
  struct Edge {
    std::size_t from;
    LetterIndex letter;
    std::size_t to;
    Rational weight;
  };
  std::vector<Edge> edges;

  auto discover = [&](const Word& u, const Rational& weight) -> std::size_t {
    auto r = residual_automaton(a, u, *sums);
    for (std::size_t j = 0; j < residuals.size(); ++j)
      if (are_equivalent(residuals[j], r).equal()) return j;
    residuals.push_back(std::move(r));
    weights.push_back(weight);
    out.state_words.push_back(u);
    return residuals.size() - 1;
  };

  discover(Word{}, prefix_weight(a, Word{}, *sums));
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    for (LetterIndex x = 0; x < a.num_letters(); ++x) {
      const Word ux = concat(out.state_words[i], Word{x});
      const Rational w = prefix_weight(a, ux, *sums);
      if (is_zero(w)) continue;
      const std::size_t j = discover(ux, w);
      if (residuals.size() > max_states) {
        out.tag = DeterminizationOutcome::Tag::BoundExceeded;
        out.discovered_residuals = residuals.size();
        return out;
      }
      edges.push_back({i, x, j, w / weights[i]});
    }
  }

  const std::size_t k = residuals.size();
  std::vector<std::string> names;
  Vector initial = zero_vector(k);
  Vector final;
  initial[0] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(format_word(a.alphabet(), out.state_words[i]));
    final.push_back(evaluate(residuals[i], Word{}));
  }
  std::vector<Matrix> mats(a.num_letters(), Matrix(k, k));
  for (const auto& e : edges) mats[e.letter](e.from, e.to) = e.weight;
  out.tag = DeterminizationOutcome::Tag::Pda;
  out.discovered_residuals = k;
  out.pda = MultiplicityAutomaton(a.alphabet(), std::move(names), std::move(initial),
                                  std::move(final), std::move(mats));
  return out;
}

MultiplicityAutomaton to_prefixial_pra(const MultiplicityAutomaton& a, const std::vector<Word>& witnesses) {
  if (!is_pa(a)) throw std::invalid_argument("to_prefixial_pra: automaton is not a PA");
  const std::size_t n = a.num_states();
  if (witnesses.size() != n) throw std::invalid_argument("to_prefixial_pra: one witness per state required");
  const auto sums = state_sums(a);
  if (!sums) throw std::logic_error("to_prefixial_pra: state sum of a PA diverges");

  for (StateIndex q = 0; q < n; ++q) {
    const Rational w = prefix_weight(a, witnesses[q], *sums);
    if (is_zero(w) ||
        !are_equivalent(residual_automaton(a, witnesses[q], *sums), state_series_automaton(a, q)).equal())
      throw std::invalid_argument("to_prefixial_pra: witness " + format_word(a.alphabet(), witnesses[q]) +
                                  " does not give the series of state " + a.states()[q]);
  }

  std::set<Word, decltype(&length_lex_less)> closure(&length_lex_less);
  for (const auto& w : witnesses)
    for (std::size_t len = 0; len <= w.size(); ++len) closure.insert(Word(w.begin(), w.begin() + len));
  const std::vector<Word> words(closure.begin(), closure.end());
  const std::size_t k = words.size();
  auto index_of = [&](const Word& w) -> std::optional<std::size_t> {
    auto it = std::lower_bound(words.begin(), words.end(), w, length_lex_less);
    if (it == words.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - words.begin());
  };

  std::vector<std::string> names;
  Vector initial = zero_vector(k);
  Vector final;
  initial[0] = 1;
  std::vector<Matrix> mats(a.num_letters(), Matrix(k, k));
  for (std::size_t i = 0; i < k; ++i) {
    const Word& w = words[i];
    names.push_back(format_word(a.alphabet(), w));
    const Rational weight = prefix_weight(a, w, *sums);
    final.push_back(evaluate(a, w) / weight);
    // w⁻¹r_A = Σ_q c[q] r_{A,q}
    const Vector c = (1 / weight) * forward_weights(a, w);
    for (LetterIndex x = 0; x < a.num_letters(); ++x) {
      const Word wx = concat(w, Word{x});
      if (const auto j = index_of(wx)) {
        mats[x](i, *j) = prefix_weight(a, wx, *sums) / weight;
        continue;
      }
      const Vector back = c * a.letter_matrix(x);
      for (StateIndex q = 0; q < n; ++q) {
        if (is_zero(back[q])) continue;
        mats[x](i, *index_of(witnesses[q])) += back[q];
      }
    }
  }
  return MultiplicityAutomaton(a.alphabet(), std::move(names), std::move(initial), std::move(final),
                               std::move(mats));
}

std::optional<std::vector<Word>> minimal_residual_generators(const MultiplicityAutomaton& a,
                                                             std::size_t depth) {
  const auto sums = state_sums(a);
  if (!sums) throw std::domain_error("minimal_residual_generators: a state sum diverges");

  std::vector<Word> words;
  std::vector<MultiplicityAutomaton> residuals;
  for (const auto& u : words_up_to(a.num_letters(), depth)) {
    if (is_zero(prefix_weight(a, u, *sums))) continue;
    auto r = residual_automaton(a, u, *sums);
    const bool known = std::any_of(residuals.begin(), residuals.end(),
                                   [&](const MultiplicityAutomaton& s) { return are_equivalent(s, r).equal(); });
    if (known) continue;
    words.push_back(u);
    residuals.push_back(std::move(r));
  }

  std::vector<bool> alive(residuals.size(), true);
  for (std::size_t i = residuals.size(); i-- > 0;) {
    std::vector<MultiplicityAutomaton> others;
    for (std::size_t j = 0; j < residuals.size(); ++j)
      if (alive[j] && j != i) others.push_back(residuals[j]);
    if (others.empty()) continue;
    if (express_combination(residuals[i], others, true).expressible()) alive[i] = false;
  }

  std::vector<Word> kept_words;
  std::vector<MultiplicityAutomaton> kept;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (!alive[i]) continue;
    kept_words.push_back(words[i]);
    kept.push_back(residuals[i]);
  }
  for (const auto& s : kept)
    for (LetterIndex x = 0; x < a.num_letters(); ++x)
      if (!express_combination(derivative(s, x), kept, true).expressible()) return std::nullopt;
  if (!express_combination(a, kept, true).expressible()) return std::nullopt;
  return kept_words;
}

}  // namespace ratstoch
