#ifndef RATSTOCH_TESTS_SUPPORT_HPP
#define RATSTOCH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ratstoch/automaton.hpp"
#include "ratstoch/io.hpp"

namespace testing {

using namespace ratstoch;

inline std::string data_path(const std::string& name) { return std::string(RATSTOCH_TEST_DATA) + "/" + name; }

inline Rational q(long p, long d = 1) { return make_rational(p, d); }

inline Word word(const MultiplicityAutomaton& a, const std::string& text) {
  return parse_word(a.alphabet(), text);
}

// numerator in [lo, hi], denominator in [1, den]
inline Rational random_rational(std::mt19937& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> d(1, den);
  return make_rational(num(rng), d(rng));
}

inline std::vector<std::string> letters(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

// Dense-ish random MA; each weight is zero with probability `sparsity`.
inline MultiplicityAutomaton random_ma(std::mt19937& rng, std::size_t states, std::size_t num_letters,
                                       double sparsity = 0.3, long range = 2, long den = 4) {
  std::bernoulli_distribution zero(sparsity);
  auto weight = [&] { return zero(rng) ? Rational(0) : random_rational(rng, -range, range, den); };
  Vector initial;
  Vector final;
  for (std::size_t i = 0; i < states; ++i) {
    initial.push_back(weight());
    final.push_back(weight());
  }
  std::vector<Matrix> mats;
  for (std::size_t x = 0; x < num_letters; ++x) {
    Matrix m(states, states);
    for (std::size_t i = 0; i < states; ++i)
      for (std::size_t j = 0; j < states; ++j) m(i, j) = weight();
    mats.push_back(std::move(m));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("q" + std::to_string(i));
  return MultiplicityAutomaton(letters(num_letters), names, initial, final, mats);
}

// Random MA whose letter weights are small enough for every sum to converge.
inline MultiplicityAutomaton random_contracting_ma(std::mt19937& rng, std::size_t states,
                                                   std::size_t num_letters) {
  auto a = random_ma(rng, states, num_letters, 0.3, 1, 1);
  std::vector<Matrix> mats;
  const Rational scale = make_rational(1, static_cast<long>(2 * states * num_letters));
  for (const auto& m : a.letter_matrices()) mats.push_back(scale * m);
  return MultiplicityAutomaton(a.alphabet(), a.states(), a.initial_weights(), a.final_weights(), mats);
}

// Random PA: integer weights normalised per row, every state initial with
// positive weight and terminal with positive weight, so it is trimmed.
inline MultiplicityAutomaton random_pa(std::mt19937& rng, std::size_t states, std::size_t num_letters) {
  std::uniform_int_distribution<long> w(0, 3);
  std::uniform_int_distribution<long> pos(1, 3);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("q" + std::to_string(i));
  Vector initial;
  long total = 0;
  for (std::size_t i = 0; i < states; ++i) {
    initial.push_back(Rational(pos(rng)));
    total += initial.back().get_num().get_si();
  }
  for (auto& v : initial) v /= total;
  Vector final(states);
  std::vector<Matrix> mats(num_letters, Matrix(states, states));
  for (std::size_t i = 0; i < states; ++i) {
    long row = 0;
    final[i] = Rational(pos(rng));
    row += final[i].get_num().get_si();
    for (std::size_t x = 0; x < num_letters; ++x)
      for (std::size_t j = 0; j < states; ++j) {
        mats[x](i, j) = Rational(w(rng));
        row += mats[x](i, j).get_num().get_si();
      }
    final[i] /= row;
    for (std::size_t x = 0; x < num_letters; ++x)
      for (std::size_t j = 0; j < states; ++j) mats[x](i, j) /= row;
  }
  return MultiplicityAutomaton(letters(num_letters), names, initial, final, mats);
}

inline std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) names.push_back("q" + std::to_string(s));
  return names;
}

// PA with ι concentrated on q0 and each transition present with probability
// 1/3; trimmed, so possibly fewer than n states.
inline MultiplicityAutomaton sparse_pa(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution present(1.0 / 3);
  std::uniform_int_distribution<long> w(1, 3);
  std::vector<Matrix> mats(2, Matrix(n, n));
  Vector final(n);
  for (std::size_t s = 0; s < n; ++s) {
    long row = w(rng);
    final[s] = row;
    for (auto& m : mats)
      for (std::size_t t = 0; t < n; ++t)
        if (present(rng)) {
          m(s, t) = w(rng);
          row += m(s, t).get_num().get_si();
        }
    final[s] /= row;
    for (auto& m : mats)
      for (std::size_t t = 0; t < n; ++t) m(s, t) /= row;
  }
  Vector initial = zero_vector(n);
  initial[0] = 1;
  return trim(MultiplicityAutomaton(letters(2), state_names(n), initial, final, mats));
}

// Random PDA over {a, b}: each (state, letter) has at most one successor and
// the row mass is split evenly between τ and the existing edges.
inline MultiplicityAutomaton random_pda(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n);
  std::vector<Matrix> mats(2, Matrix(n, n));
  Vector final(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t t0 = pick(rng);
    const std::size_t t1 = pick(rng);
    const long parts = 1 + (t0 < n) + (t1 < n);
    final[s] = make_rational(1, parts);
    if (t0 < n) mats[0](s, t0) = make_rational(1, parts);
    if (t1 < n) mats[1](s, t1) = make_rational(1, parts);
  }
  Vector initial = zero_vector(n);
  initial[0] = 1;
  return trim(MultiplicityAutomaton(letters(2), state_names(n), initial, final, mats));
}

// Random invertible matrix: unit upper triangular times a permutation-free
// lower triangular with nonzero diagonal.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  Matrix upper = Matrix::identity(n);
  Matrix lower = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i) upper(i, j) = random_rational(rng, -2, 2, 3);
      if (j < i) lower(i, j) = random_rational(rng, -2, 2, 3);
      if (i == j) lower(i, j) = random_rational(rng, 1, 3, 2);
    }
  return upper * lower;
}

// λm, m⁻¹μm, m⁻¹γ: same series, different weights.
inline MultiplicityAutomaton similar(const MultiplicityAutomaton& a, const Matrix& m, const Matrix& m_inv) {
  std::vector<Matrix> mats;
  for (const auto& mu : a.letter_matrices()) mats.push_back(m_inv * mu * m);
  return MultiplicityAutomaton(a.alphabet(), a.states(), a.initial_weights() * m, m_inv * a.final_weights(),
                               mats);
}

// Σ over all state paths q₀…q_k of ι(q₀)·Πφ·τ(q_k), by explicit recursion.
inline Rational path_sum(const MultiplicityAutomaton& a, const Word& w) {
  const std::size_t n = a.num_states();
  std::function<Rational(StateIndex, std::size_t)> from = [&](StateIndex q, std::size_t pos) -> Rational {
    if (pos == w.size()) return a.final(q);
    Rational total = 0;
    for (StateIndex s = 0; s < n; ++s) {
      const Rational& t = a.transition(q, w[pos], s);
      if (!is_zero(t)) total += t * from(s, pos + 1);
    }
    return total;
  };
  Rational total = 0;
  for (StateIndex q = 0; q < n; ++q)
    if (!is_zero(a.initial(q))) total += a.initial(q) * from(q, 0);
  return total;
}

inline std::size_t count_letter(const Word& w, LetterIndex x) {
  std::size_t c = 0;
  for (auto l : w) c += l == x;
  return c;
}

inline Word power(LetterIndex x, std::size_t n) { return Word(n, x); }

inline MultiplicityAutomaton load_data(const std::string& name) {
  return io::parse_automaton(io::read_file(data_path(name)));
}


// ρ(M) < 1 for 2×2 M from its characteristic polynomial λ² − tλ + d:
// both roots lie in the open unit disc iff |d| < 1 and |t| < 1 + d.
inline bool jury_stable_2x2(const Matrix& m) {
  const Rational t = m(0, 0) + m(1, 1);
  const Rational d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return abs(d) < 1 && abs(t) < 1 + d;
}

inline std::vector<std::vector<double>> to_doubles(const Matrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_double(m(i, j));
  return out;
}

// max |(M^(2^squarings))_ij| in floating point.
inline double max_abs_power(const Matrix& m, int squarings) {
  auto a = to_doubles(m);
  const std::size_t n = a.size();
  for (int s = 0; s < squarings; ++s) {
    std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) b[i][j] += a[i][k] * a[k][j];
    a = std::move(b);
  }
  double best = 0;
  for (const auto& row : a)
    for (double v : row) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace testing

#endif  // RATSTOCH_TESTS_SUPPORT_HPP
