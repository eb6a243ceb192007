#include "ratstoch/automaton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ratstoch {

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length) {
  std::vector<Word> words{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length && alphabet_size > 0; ++len) {
    const std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (LetterIndex x = 0; x < alphabet_size; ++x) {
        Word w = words[i];
        w.push_back(x);
        words.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return words;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string format_word(const std::vector<std::string>& alphabet, const Word& w) {
  if (w.empty()) return "@";
  const bool compact = std::all_of(alphabet.begin(), alphabet.end(),
                                   [](const std::string& x) { return x.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += '.';
    out += alphabet.at(w[i]);
  }
  return out;
}

Word parse_word(const std::vector<std::string>& alphabet, std::string_view text) {
  auto letter = [&](std::string_view x) -> LetterIndex {
    auto it = std::find(alphabet.begin(), alphabet.end(), x);
    if (it == alphabet.end())
      throw std::invalid_argument("word '" + std::string(text) + "': unknown letter '" +
                                  std::string(x) + "'");
    return static_cast<LetterIndex>(it - alphabet.begin());
  };
  if (text == "@") return {};
  if (text.empty()) throw std::invalid_argument("empty word text (write @ for the empty word)");
  Word w;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t dot = text.find('.', start);
      w.push_back(letter(text.substr(start, dot == std::string_view::npos ? dot : dot - start)));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return w;
  }
  if (std::find(alphabet.begin(), alphabet.end(), text) != alphabet.end()) return {letter(text)};
  for (std::size_t i = 0; i < text.size(); ++i) w.push_back(letter(text.substr(i, 1)));
  return w;
}

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument(std::string("empty ") + what + " name");
    if (!seen.insert(n).second)
      throw std::invalid_argument(std::string("duplicate ") + what + " \"" + n + "\"");
  }
}

}  // namespace

MultiplicityAutomaton::MultiplicityAutomaton(std::vector<std::string> alphabet,
                                             std::vector<std::string> states, Vector initial,
                                             Vector final, std::vector<Matrix> transitions)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initial_(std::move(initial)),
      final_(std::move(final)),
      transitions_(std::move(transitions)) {
  require_unique(alphabet_, "letter");
  require_unique(states_, "state");
  const std::size_t n = states_.size();
  if (initial_.size() != n || final_.size() != n)
    throw std::invalid_argument("automaton: weight vector length differs from state count");
  if (transitions_.size() != alphabet_.size())
    throw std::invalid_argument("automaton: one transition matrix per letter required");
  for (const auto& m : transitions_)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("automaton: transition matrix shape differs from state count");
}

std::optional<LetterIndex> MultiplicityAutomaton::find_letter(std::string_view letter) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), letter);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<LetterIndex>(it - alphabet_.begin());
}

std::optional<StateIndex> MultiplicityAutomaton::find_state(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateIndex>(it - states_.begin());
}

StateIndex MultiplicityAutomaton::state_index(std::string_view name) const {
  auto q = find_state(name);
  if (!q) throw std::invalid_argument("unknown state \"" + std::string(name) + "\"");
  return *q;
}

std::vector<Transition> MultiplicityAutomaton::transitions() const {
  std::vector<Transition> out;
  for (StateIndex p = 0; p < num_states(); ++p)
    for (LetterIndex x = 0; x < num_letters(); ++x)
      for (StateIndex q = 0; q < num_states(); ++q)
        if (!is_zero(transitions_[x](p, q))) out.push_back({p, x, q, transitions_[x](p, q)});
  return out;
}

AutomatonBuilder::AutomatonBuilder(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet)) {
  require_unique(alphabet_, "letter");
}

StateIndex AutomatonBuilder::add_state(std::string name) {
  if (std::find(states_.begin(), states_.end(), name) != states_.end())
    throw std::invalid_argument("duplicate state \"" + name + "\"");
  states_.push_back(std::move(name));
  initial_.emplace_back(0);
  final_.emplace_back(0);
  return states_.size() - 1;
}

StateIndex AutomatonBuilder::state(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) throw std::invalid_argument("unknown state \"" + std::string(name) + "\"");
  return static_cast<StateIndex>(it - states_.begin());
}

AutomatonBuilder& AutomatonBuilder::set_initial(std::string_view q, const Rational& weight) {
  initial_[state(q)] = weight;
  return *this;
}

AutomatonBuilder& AutomatonBuilder::set_final(std::string_view q, const Rational& weight) {
  final_[state(q)] = weight;
  return *this;
}

AutomatonBuilder& AutomatonBuilder::set_transition(std::string_view from, std::string_view letter,
                                                   std::string_view to, const Rational& weight) {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), letter);
  if (it == alphabet_.end())
    throw std::invalid_argument("unknown letter \"" + std::string(letter) + "\"");
  const LetterIndex x = static_cast<LetterIndex>(it - alphabet_.begin());
  const StateIndex p = state(from);
  const StateIndex q = state(to);
  for (auto& t : transitions_) {
    if (t.from == p && t.letter == x && t.to == q) {
      t.weight = weight;
      return *this;
    }
  }
  transitions_.push_back({p, x, q, weight});
  return *this;
}

MultiplicityAutomaton AutomatonBuilder::build() const {
  const std::size_t n = states_.size();
  std::vector<Matrix> mats(alphabet_.size(), Matrix(n, n));
  for (const auto& t : transitions_) mats[t.letter](t.from, t.to) = t.weight;
  return MultiplicityAutomaton(alphabet_, states_, Vector(initial_), Vector(final_), std::move(mats));
}

Rational evaluate(const LinearRepresentation& rep, const Word& w) {
  Vector row = rep.lambda;
  for (LetterIndex x : w) row = row * rep.mu.at(x);
  return dot(row, rep.gamma);
}

Vector forward_weights(const MultiplicityAutomaton& a, const Word& w) {
  Vector row = a.initial_weights();
  for (LetterIndex x : w) {
    if (x >= a.num_letters()) throw std::out_of_range("letter index outside the alphabet");
    row = row * a.letter_matrix(x);
  }
  return row;
}

Vector backward_weights(const MultiplicityAutomaton& a, const Word& w) {
  Vector col = a.final_weights();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it >= a.num_letters()) throw std::out_of_range("letter index outside the alphabet");
    col = a.letter_matrix(*it) * col;
  }
  return col;
}

Rational evaluate(const MultiplicityAutomaton& a, const Word& w) {
  return dot(forward_weights(a, w), a.final_weights());
}

Rational evaluate_state(const MultiplicityAutomaton& a, StateIndex q, const Word& w) {
  if (q >= a.num_states()) throw std::out_of_range("state index outside the automaton");
  return backward_weights(a, w)[q];
}

Rational evaluate_state(const MultiplicityAutomaton& a, std::string_view q, const Word& w) {
  return evaluate_state(a, a.state_index(q), w);
}

LinearRepresentation to_linear_representation(const MultiplicityAutomaton& a) {
  return {a.alphabet(), a.initial_weights(), a.letter_matrices(), a.final_weights()};
}

MultiplicityAutomaton from_linear_representation(const LinearRepresentation& rep,
                                                 std::vector<std::string> state_names) {
  const std::size_t n = rep.dimension();
  if (state_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) state_names.push_back("q" + std::to_string(i));
  }
  if (state_names.size() != n) throw std::invalid_argument("state name count differs from dimension");
  return MultiplicityAutomaton(rep.alphabet, std::move(state_names), rep.lambda, rep.gamma, rep.mu);
}

LinearRepresentation rep_from_generator_relations(std::vector<std::string> alphabet,
                                                  Vector coeffs, std::vector<Matrix> relations,
                                                  Vector epsilon_values) {
  const std::size_t n = coeffs.size();
  if (epsilon_values.size() != n)
    throw std::invalid_argument("generator relations: epsilon value count differs from generator count");
  if (relations.size() != alphabet.size())
    throw std::invalid_argument("generator relations: one relation matrix per letter required");
  for (const auto& m : relations)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("generator relations: relation matrix shape mismatch");
  return {std::move(alphabet), std::move(coeffs), std::move(relations), std::move(epsilon_values)};
}

std::vector<bool> accessible_states(const MultiplicityAutomaton& a) {
  const std::size_t n = a.num_states();
  std::vector<bool> seen(n, false);
  std::deque<StateIndex> queue;
  for (StateIndex q = 0; q < n; ++q) {
    if (!is_zero(a.initial(q))) {
      seen[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    const StateIndex p = queue.front();
    queue.pop_front();
    for (LetterIndex x = 0; x < a.num_letters(); ++x)
      for (StateIndex q = 0; q < n; ++q)
        if (!seen[q] && !is_zero(a.transition(p, x, q))) {
          seen[q] = true;
          queue.push_back(q);
        }
  }
  return seen;
}

std::vector<bool> coaccessible_states(const MultiplicityAutomaton& a) {
  const std::size_t n = a.num_states();
  std::vector<bool> seen(n, false);
  std::deque<StateIndex> queue;
  for (StateIndex q = 0; q < n; ++q) {
    if (!is_zero(a.final(q))) {
      seen[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    const StateIndex q = queue.front();
    queue.pop_front();
    for (LetterIndex x = 0; x < a.num_letters(); ++x)
      for (StateIndex p = 0; p < n; ++p)
        if (!seen[p] && !is_zero(a.transition(p, x, q))) {
          seen[p] = true;
          queue.push_back(p);
        }
  }
  return seen;
}

MultiplicityAutomaton restrict_to_states(const MultiplicityAutomaton& a,
                                         const std::vector<StateIndex>& keep) {
  const std::size_t k = keep.size();
  std::vector<std::string> names;
  Vector initial;
  Vector final;
  for (StateIndex q : keep) {
    names.push_back(a.states().at(q));
    initial.push_back(a.initial(q));
    final.push_back(a.final(q));
  }
  std::vector<Matrix> mats;
  for (LetterIndex x = 0; x < a.num_letters(); ++x) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = a.transition(keep[i], x, keep[j]);
    mats.push_back(std::move(m));
  }
  return MultiplicityAutomaton(a.alphabet(), std::move(names), std::move(initial), std::move(final),
                               std::move(mats));
}

MultiplicityAutomaton trim(const MultiplicityAutomaton& a) {
  const auto acc = accessible_states(a);
  const auto coacc = coaccessible_states(a);
  std::vector<StateIndex> keep;
  for (StateIndex q = 0; q < a.num_states(); ++q)
    if (acc[q] && coacc[q]) keep.push_back(q);
  return restrict_to_states(a, keep);
}

MultiplicityAutomaton with_initial_weights(const MultiplicityAutomaton& a, Vector initial) {
  return MultiplicityAutomaton(a.alphabet(), a.states(), std::move(initial), a.final_weights(),
                               a.letter_matrices());
}

MultiplicityAutomaton state_series_automaton(const MultiplicityAutomaton& a, StateIndex q) {
  return with_initial_weights(a, unit_vector(a.num_states(), q));
}

std::vector<std::string> union_alphabet(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& x : b)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

MultiplicityAutomaton over_alphabet(const MultiplicityAutomaton& a,
                                    const std::vector<std::string>& alphabet) {
  if (a.alphabet() == alphabet) return a;
  const std::size_t n = a.num_states();
  std::vector<Matrix> mats(alphabet.size(), Matrix(n, n));
  for (LetterIndex x = 0; x < a.num_letters(); ++x) {
    auto it = std::find(alphabet.begin(), alphabet.end(), a.alphabet()[x]);
    if (it == alphabet.end())
      throw std::invalid_argument("letter \"" + a.alphabet()[x] + "\" missing from target alphabet");
    mats[static_cast<std::size_t>(it - alphabet.begin())] = a.letter_matrix(x);
  }
  return MultiplicityAutomaton(alphabet, a.states(), a.initial_weights(), a.final_weights(),
                               std::move(mats));
}

MultiplicityAutomaton weighted_direct_sum(const std::vector<MultiplicityAutomaton>& parts,
                                          const Vector& coeffs) {
  if (parts.size() != coeffs.size())
    throw std::invalid_argument("weighted_direct_sum: coefficient count differs from part count");
  std::vector<std::string> alphabet = parts.empty() ? std::vector<std::string>{} : parts[0].alphabet();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.alphabet() != alphabet)
      throw std::invalid_argument("weighted_direct_sum: parts over different alphabets");
    total += p.num_states();
  }
  std::vector<std::string> names;
  Vector initial;
  Vector final;
  std::vector<Matrix> mats(alphabet.size(), Matrix(total, total));
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    for (StateIndex q = 0; q < p.num_states(); ++q) {
      names.push_back("g" + std::to_string(i) + "." + p.states()[q]);
      initial.push_back(coeffs[i] * p.initial(q));
      final.push_back(p.final(q));
    }
    for (LetterIndex x = 0; x < alphabet.size(); ++x)
      for (StateIndex s = 0; s < p.num_states(); ++s)
        for (StateIndex t = 0; t < p.num_states(); ++t)
          mats[x](offset + s, offset + t) = p.transition(s, x, t);
    offset += p.num_states();
  }
  return MultiplicityAutomaton(std::move(alphabet), std::move(names), std::move(initial),
                               std::move(final), std::move(mats));
}

Matrix letter_sum_matrix(const MultiplicityAutomaton& a) {
  Matrix m(a.num_states(), a.num_states());
  for (const auto& mx : a.letter_matrices()) m = m + mx;
  return m;
}

}  // namespace ratstoch
