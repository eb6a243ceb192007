#include "ratstoch/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratstoch {

namespace {

// Basis of span{v, Mv, M²v, ...} (the Krylov sequence stops growing at the
// first dependent iterate).
std::vector<Vector> krylov_basis(const Vector& start, const Matrix& step, bool row_action) {
  IncrementalBasis basis(start.size());
  Vector v = start;
  while (basis.add(v)) v = row_action ? v * step : step * v;
  return basis.rows();
}

// Indices j such that the unit vectors e_j complete the span of `rows` (each
// of length `dim`) to the whole space. Reverse order prefers late coordinates.
std::vector<std::size_t> completing_coordinates(const std::vector<Vector>& rows, std::size_t dim,
                                                ComplementOrder order) {
  std::vector<Vector> oriented = rows;
  if (order == ComplementOrder::Reverse) {
    for (auto& r : oriented) std::reverse(r.begin(), r.end());
  }
  const auto pivots = rref(Matrix::from_rows(oriented, dim)).pivots;
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[order == ComplementOrder::Reverse ? dim - 1 - p : p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

}  // namespace

SumDecomposition decompose_sum(const Vector& iota, const Matrix& m, const Vector& tau,
                               const SumOptions& options) {
  const std::size_t n = tau.size();
  if (iota.size() != n || m.rows() != n || m.cols() != n)
    throw std::invalid_argument("decompose_sum: dimension mismatch");

  SumDecomposition d;
  d.e_basis = krylov_basis(tau, m, false);
  const std::vector<Vector> observability = krylov_basis(iota, m, true);
  const std::size_t e_dim = d.e_basis.size();

  // H in E-coordinates: c with O · B_E · c = 0.
  const Matrix b_e = Matrix::from_columns(d.e_basis, n);
  const Matrix o_rows = Matrix::from_rows(observability, n);
  const auto hs = solve_affine(o_rows * b_e, zero_vector(o_rows.rows()));
  const std::vector<Vector> h_coords = hs ? hs->nullspace : std::vector<Vector>{};
  for (const auto& c : h_coords) d.h_basis.push_back(b_e * c);

  for (auto j : completing_coordinates(h_coords, e_dim, options.order))
    d.g_basis.push_back(d.e_basis[j]);

  if (!options.complement_of_e.empty()) {
    d.f_basis = options.complement_of_e;
  } else {
    for (auto j : completing_coordinates(d.e_basis, n, ComplementOrder::Forward))
      d.f_basis.push_back(unit_vector(n, j));
  }

  std::vector<Vector> columns = d.g_basis;
  columns.insert(columns.end(), d.h_basis.begin(), d.h_basis.end());
  columns.insert(columns.end(), d.f_basis.begin(), d.f_basis.end());
  if (columns.size() != n)
    throw std::invalid_argument("decompose_sum: complement of E has the wrong dimension");
  const Matrix basis = Matrix::from_columns(columns, n);
  const auto basis_inv = inverse(basis);
  if (!basis_inv) throw std::invalid_argument("decompose_sum: complement of E is not complementary");

  const std::size_t g_dim = d.g_basis.size();
  Matrix keep_g(n, n);
  for (std::size_t i = 0; i < g_dim; ++i) keep_g(i, i) = 1;
  d.projection_g = basis * keep_g * *basis_inv;

  d.restricted = Matrix(g_dim, g_dim);
  for (std::size_t j = 0; j < g_dim; ++j) {
    const Vector coords = *basis_inv * (m * d.g_basis[j]);
    for (std::size_t i = 0; i < g_dim; ++i) d.restricted(i, j) = coords[i];
  }

  if (!spectral_radius_lt_one(d.restricted)) {
    d.outcome = SumOutcome::divergent();
    return d;
  }
  const Matrix contracted = d.projection_g * m * d.projection_g;
  const auto resolvent = inverse(Matrix::identity(n) - contracted);
  if (!resolvent) throw std::logic_error("decompose_sum: Id − P_G M P_G singular despite ρ < 1");
  d.outcome = SumOutcome::converging(dot(iota * *resolvent, tau));
  return d;
}

SumOutcome total_sum(const MultiplicityAutomaton& a, const SumOptions& options) {
  return decompose_sum(a.initial_weights(), letter_sum_matrix(a), a.final_weights(), options).outcome;
}

std::optional<Vector> state_sums(const MultiplicityAutomaton& a) {
  const Matrix m = letter_sum_matrix(a);
  Vector sums;
  for (StateIndex q = 0; q < a.num_states(); ++q) {
    const auto outcome = decompose_sum(unit_vector(a.num_states(), q), m, a.final_weights()).outcome;
    if (!outcome.converges()) return std::nullopt;
    sums.push_back(outcome.value);
  }
  return sums;
}

Rational prefix_weight(const MultiplicityAutomaton& a, const Word& u, const Vector& sums) {
  return dot(forward_weights(a, u), sums);
}

Rational prefix_weight(const MultiplicityAutomaton& a, const Word& u) {
  const auto sums = state_sums(a);
  if (!sums) throw std::domain_error("prefix weight undefined: a state sum diverges");
  return prefix_weight(a, u, *sums);
}

MultiplicityAutomaton residual_automaton(const MultiplicityAutomaton& a, const Word& u,
                                         const Vector& sums) {
  const Rational weight = prefix_weight(a, u, sums);
  if (is_zero(weight)) throw std::domain_error("residual undefined: zero prefix weight");
  const Rational scale = 1 / weight;
  return with_initial_weights(a, scale * forward_weights(a, u));
}

MultiplicityAutomaton residual_automaton(const MultiplicityAutomaton& a, const Word& u) {
  const auto sums = state_sums(a);
  if (!sums) throw std::domain_error("residual undefined: a state sum diverges");
  return residual_automaton(a, u, *sums);
}

}  // namespace ratstoch
