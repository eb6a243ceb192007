#include "ratstoch/classify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "ratstoch/analysis.hpp"
#include "ratstoch/reduction.hpp"

namespace ratstoch {

namespace {

bool in_unit_interval(const Rational& w) { return sgn(w) >= 0 && w <= 1; }

Rational row_mass(const MultiplicityAutomaton& a, StateIndex q) {
  Rational mass = a.final(q);
  for (const auto& m : a.letter_matrices())
    for (StateIndex s = 0; s < a.num_states(); ++s) mass += m(q, s);
  return mass;
}

Rational initial_mass(const MultiplicityAutomaton& a) {
  Rational mass = 0;
  for (const auto& w : a.initial_weights()) mass += w;
  return mass;
}

bool all_weights_nonneg(const MultiplicityAutomaton& a) {
  auto nonneg = [](const Rational& w) { return sgn(w) >= 0; };
  if (!std::all_of(a.initial_weights().begin(), a.initial_weights().end(), nonneg)) return false;
  if (!std::all_of(a.final_weights().begin(), a.final_weights().end(), nonneg)) return false;
  for (const auto& t : a.transitions())
    if (!nonneg(t.weight)) return false;
  return true;
}

}  // namespace

bool is_trimmed(const MultiplicityAutomaton& a) {
  const auto acc = accessible_states(a);
  const auto coacc = coaccessible_states(a);
  for (StateIndex q = 0; q < a.num_states(); ++q)
    if (!acc[q] || !coacc[q]) return false;
  return true;
}

bool is_semi_pa(const MultiplicityAutomaton& a) {
  const auto& iota = a.initial_weights();
  const auto& tau = a.final_weights();
  if (!std::all_of(iota.begin(), iota.end(), in_unit_interval)) return false;
  if (!std::all_of(tau.begin(), tau.end(), in_unit_interval)) return false;
  for (const auto& t : a.transitions())
    if (!in_unit_interval(t.weight)) return false;
  if (initial_mass(a) > 1) return false;
  for (StateIndex q = 0; q < a.num_states(); ++q)
    if (row_mass(a, q) > 1) return false;
  return true;
}

bool is_pa(const MultiplicityAutomaton& a) {
  if (!is_trimmed(a) || !is_semi_pa(a)) return false;
  if (initial_mass(a) != 1) return false;
  for (StateIndex q = 0; q < a.num_states(); ++q)
    if (row_mass(a, q) != 1) return false;
  return true;
}

bool is_pda(const MultiplicityAutomaton& a) {
  if (!is_pa(a)) return false;
  if (initial_support(a).size() != 1) return false;
  for (const auto& m : a.letter_matrices()) {
    for (StateIndex q = 0; q < a.num_states(); ++q) {
      std::size_t successors = 0;
      for (StateIndex s = 0; s < a.num_states(); ++s)
        if (!is_zero(m(q, s))) ++successors;
      if (successors > 1) return false;
    }
  }
  return true;
}

std::vector<StateIndex> initial_support(const MultiplicityAutomaton& a) {
  std::vector<StateIndex> out;
  for (StateIndex q = 0; q < a.num_states(); ++q)
    if (!is_zero(a.initial(q))) out.push_back(q);
  return out;
}

std::vector<StateIndex> support_successors(const MultiplicityAutomaton& a,
                                           const std::vector<StateIndex>& from, const Word& w) {
  std::vector<StateIndex> current = from;
  for (LetterIndex x : w) {
    const Matrix& m = a.letter_matrix(x);
    std::vector<bool> hit(a.num_states(), false);
    for (StateIndex q : current)
      for (StateIndex s = 0; s < a.num_states(); ++s)
        if (!is_zero(m(q, s))) hit[s] = true;
    current.clear();
    for (StateIndex s = 0; s < a.num_states(); ++s)
      if (hit[s]) current.push_back(s);
  }
  return current;
}

PraResult is_pra_reduced(const MultiplicityAutomaton& a) {
  if (!is_pa(a)) throw std::invalid_argument("is_pra_reduced: automaton is not a PA");
  if (!is_reduced(a, ReductionMode::Cone))
    throw std::invalid_argument("is_pra_reduced: automaton is not Cone-reduced");

  const std::size_t n = a.num_states();
  std::vector<std::optional<Word>> found(n);
  std::size_t singletons = 0;
  std::set<std::vector<StateIndex>> seen;
  std::deque<std::pair<std::vector<StateIndex>, Word>> frontier;
  const auto start = initial_support(a);
  seen.insert(start);
  frontier.emplace_back(start, Word{});
  while (!frontier.empty() && singletons < n) {
    auto [subset, word] = std::move(frontier.front());
    frontier.pop_front();
    if (subset.size() == 1 && !found[subset[0]]) {
      found[subset[0]] = word;
      ++singletons;
    }
    for (LetterIndex x = 0; x < a.num_letters(); ++x) {
      auto next = support_successors(a, subset, Word{x});
      if (next.empty() || !seen.insert(next).second) continue;
      frontier.emplace_back(std::move(next), concat(word, Word{x}));
    }
  }

  PraResult out;
  out.pra = singletons == n;
  if (out.pra)
    for (auto& w : found) out.witnesses.push_back(std::move(*w));
  return out;
}

StochasticReport check_stochastic_bounded(const MultiplicityAutomaton& a, std::size_t max_length) {
  StochasticReport report;
  const auto sum = total_sum(a);
  report.sum_is_one = sum.converges() && sum.value == 1;
  report.nonneg_up_to = max_length;
  if (all_weights_nonneg(a)) return report;

  std::vector<std::pair<Word, Vector>> level{{Word{}, a.initial_weights()}};
  for (std::size_t len = 0; len <= max_length && !level.empty(); ++len) {
    std::vector<std::pair<Word, Vector>> next;
    for (const auto& [w, forward] : level) {
      if (sgn(dot(forward, a.final_weights())) < 0) {
        report.violation = w;
        return report;
      }
      if (len == max_length) continue;
      for (LetterIndex x = 0; x < a.num_letters(); ++x) {
        Vector v = forward * a.letter_matrix(x);
        if (!is_zero(v)) next.emplace_back(concat(w, Word{x}), std::move(v));
      }
    }
    level = std::move(next);
  }
  return report;
}

ClassReport classify(const MultiplicityAutomaton& a, std::size_t max_length) {
  ClassReport r;
  r.trimmed = is_trimmed(a);
  r.semi_pa = is_semi_pa(a);
  r.pa = r.semi_pa && is_pa(a);
  r.pda = r.pa && is_pda(a);
  r.stochastic = check_stochastic_bounded(a, max_length);
  if (r.pa) {
    PraReport pra;
    if (is_reduced(a, ReductionMode::Cone)) {
      pra.result = is_pra_reduced(a);
      pra.states = a.states();
      r.pra_reduced = std::move(pra);
    } else {
      const auto reduced = reduce(a, ReductionMode::Cone);
      if (is_pa(reduced)) {
        pra.result = is_pra_reduced(reduced);
        pra.on_cone_reduction = true;
        pra.states = reduced.states();
        r.pra_reduced = std::move(pra);
      }
    }
  }
  return r;
}

bool Dfa::accepts(const std::vector<std::string>& word) const {
  std::string q = initial;
  for (const auto& x : word) {
    auto it = delta.find({q, x});
    if (it == delta.end()) return false;
    q = it->second;
  }
  return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

namespace {

// Reachable states of d in discovery order; checks completeness and
// nonemptiness on them.
std::vector<std::string> reachable_part(const Dfa& d, const std::vector<std::string>& alphabet,
                                        std::size_t index) {
  const std::string label = "DFA " + std::to_string(index);
  std::vector<std::string> sorted_a = d.alphabet;
  std::vector<std::string> sorted_b = alphabet;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) throw std::invalid_argument(label + ": alphabet differs from DFA 1");
  if (std::find(d.states.begin(), d.states.end(), d.initial) == d.states.end())
    throw std::invalid_argument(label + ": unknown initial state '" + d.initial + "'");

  std::vector<std::string> order{d.initial};
  std::set<std::string> seen{d.initial};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& x : alphabet) {
      auto it = d.delta.find({order[i], x});
      if (it == d.delta.end())
        throw std::invalid_argument(label + ": no transition from '" + order[i] + "' on '" + x + "'");
      if (std::find(d.states.begin(), d.states.end(), it->second) == d.states.end())
        throw std::invalid_argument(label + ": unknown target state '" + it->second + "'");
      if (seen.insert(it->second).second) order.push_back(it->second);
    }
  }
  const bool nonempty = std::any_of(order.begin(), order.end(), [&](const std::string& q) {
    return std::find(d.accepting.begin(), d.accepting.end(), q) != d.accepting.end();
  });
  if (!nonempty) throw std::invalid_argument(label + ": language is empty");
  return order;
}

}  // namespace

MultiplicityAutomaton pra_hardness_instance(const std::vector<Dfa>& dfas) {
  if (dfas.empty()) throw std::invalid_argument("pra_hardness_instance: no DFA given");
  const std::vector<std::string> sigma = dfas.front().alphabet;
  const std::size_t n = dfas.size();

  std::vector<std::string> letters = sigma;
  for (std::size_t i = 1; i <= n; ++i) letters.push_back("x" + std::to_string(i));
  const std::string lam = "lam";
  letters.push_back(lam);

  // Support NFA A as adjacency lists: edges[state] = (letter, target).
  std::vector<std::string> states{"q0", "q1", "qf"};
  std::vector<std::vector<std::pair<std::string, std::string>>> edges(3);
  std::vector<std::string> initials{"q0"};
  std::vector<std::vector<std::string>> reachable;
  for (std::size_t i = 0; i < n; ++i) reachable.push_back(reachable_part(dfas[i], sigma, i + 1));
  auto local = [](std::size_t i, const std::string& s) { return "d" + std::to_string(i + 1) + "_" + s; };
  for (std::size_t i = 0; i < n; ++i) initials.push_back(local(i, dfas[i].initial));

  for (const auto& x : sigma) edges[0].emplace_back(x, "q0");
  edges[0].emplace_back(lam, "q1");
  edges[1].emplace_back(lam, "q0");
  for (std::size_t i = 0; i < n; ++i) edges[2].emplace_back(lam, local(i, dfas[i].initial));

  for (std::size_t i = 0; i < n; ++i) {
    const Dfa& d = dfas[i];
    for (const auto& s : reachable[i]) {
      states.push_back(local(i, s));
      auto& out = edges.emplace_back();
      for (const auto& x : sigma) out.emplace_back(x, local(i, d.delta.at({s, x})));
      out.emplace_back("x" + std::to_string(i + 1), local(i, d.initial));
      if (std::find(d.accepting.begin(), d.accepting.end(), s) != d.accepting.end())
        out.emplace_back(lam, "qf");
    }
  }

  const std::size_t core = states.size();
  for (std::size_t k = 0; k < core; ++k) letters.push_back("y_" + states[k]);
  std::set<std::string> distinct(letters.begin(), letters.end());
  if (distinct.size() != letters.size())
    throw std::invalid_argument("pra_hardness_instance: DFA letters clash with the added letters");

  AutomatonBuilder b(letters);
  for (const auto& s : states) b.add_state(s);
  b.add_state("qb");
  const Rational start = Rational(1) / Rational(static_cast<long>(n + 1));
  for (const auto& s : initials) b.set_initial(s, start);
  b.set_final("qb", 1);
  for (std::size_t k = 0; k < core; ++k) {
    const Rational w = Rational(1) / Rational(static_cast<long>(edges[k].size() + 1));
    for (const auto& [x, to] : edges[k]) b.set_transition(states[k], x, to, w);
    b.set_transition(states[k], "y_" + states[k], "qb", w);
  }
  return b.build();
}

}  // namespace ratstoch
