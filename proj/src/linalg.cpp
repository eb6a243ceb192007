#include "ratstoch/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace ratstoch {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector difference: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vector r = zero_vector(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(v[j]) != 0 && sgn(m(i, j)) != 0) r[i] += m(i, j) * v[j];
  return r;
}

Vector operator*(const Vector& v, const Matrix& m) {
  if (m.rows() != v.size()) throw std::invalid_argument("vector-matrix product: shape mismatch");
  Vector r = zero_vector(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) r[j] += v[i] * m(i, j);
  }
  return r;
}

EchelonForm rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < r.cols() && lead_row < r.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < r.rows() && sgn(r(pivot, col)) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < r.cols(); ++j) swap(r(pivot, j), r(lead_row, j));
    }
    const Rational inv = 1 / r(lead_row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r(lead_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead_row || sgn(r(i, col)) == 0) continue;
      const Rational factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= factor * r(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_affine: row count mismatch");
  const std::size_t n = a.cols();
  Matrix augmented(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    augmented(i, n) = b[i];
  }
  const EchelonForm form = rref(augmented);
  if (!form.pivots.empty() && form.pivots.back() == n) return std::nullopt;

  AffineSolution solution;
  solution.particular = zero_vector(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < form.pivots.size(); ++r) {
    is_pivot[form.pivots[r]] = true;
    solution.particular[form.pivots[r]] = form.reduced(r, n);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t r = 0; r < form.pivots.size(); ++r) v[form.pivots[r]] = -form.reduced(r, free);
    solution.nullspace.push_back(std::move(v));
  }
  return solution;
}

std::optional<Vector> membership_in_span(const Vector& v, std::span<const Vector> basis) {
  const Matrix a = Matrix::from_columns(basis, v.size());
  auto solution = solve_affine(a, v);
  if (!solution) return std::nullopt;
  return std::move(solution->particular);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  const EchelonForm form = rref(augmented);
  if (form.pivots.size() < n || (n > 0 && form.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = form.reduced(i, n + j);
  return inv;
}

namespace {

Rational determinant(Matrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

}  // namespace

bool is_positive_definite(const Matrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_positive_definite: matrix not symmetric");
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(i, j);
    if (sgn(determinant(std::move(minor))) <= 0) return false;
  }
  return true;
}

bool spectral_radius_lt_one(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("spectral_radius_lt_one: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return true;

  // Unknown index of P[i][j], i <= j.
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) index[i][j] = index[j][i] = unknowns++;

  // Row (i, j): Σ_{k,l} M[k][i] M[l][j] P[k][l] − P[i][j] = −δ_ij.
  Matrix system(unknowns, unknowns);
  Vector rhs = zero_vector(unknowns);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t row = index[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m(k, i)) == 0) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (sgn(m(l, j)) == 0) continue;
          system(row, index[k][l]) += m(k, i) * m(l, j);
        }
      }
      system(row, index[i][j]) -= 1;
      if (i == j) rhs[row] = -1;
    }
  }

  // A singular Stein operator means some eigenvalue product λ_i λ_j = 1,
  // which already rules out ρ(M) < 1.
  const auto solution = solve_affine(system, rhs);
  if (!solution || !solution->nullspace.empty()) return false;

  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = solution->particular[index[i][j]];
  return is_positive_definite(p);
}

namespace {

// c0 + c·t ≥ 0 over the parameters t of the equality solution set.
struct Inequality {
  Rational constant;
  Vector coeffs;
};

std::string coeff_key(const Vector& coeffs) {
  std::string key;
  for (const auto& c : coeffs) {
    key += to_string(c);
    key += ',';
  }
  return key;
}

// Scales by 1/|first nonzero coefficient| and keeps the tightest constant for
// each coefficient direction. Returns false when a constant constraint is
// violated.
bool normalize_into(std::vector<Inequality>& out, std::vector<Inequality> in) {
  std::map<std::string, std::size_t> seen;
  for (auto& ineq : in) {
    auto first = std::find_if(ineq.coeffs.begin(), ineq.coeffs.end(),
                              [](const Rational& c) { return sgn(c) != 0; });
    if (first == ineq.coeffs.end()) {
      if (sgn(ineq.constant) < 0) return false;
      continue;
    }
    const Rational scale = 1 / abs(*first);
    ineq.constant *= scale;
    for (auto& c : ineq.coeffs) c *= scale;
    const std::string key = coeff_key(ineq.coeffs);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, out.size());
      out.push_back(std::move(ineq));
    } else if (ineq.constant < out[it->second].constant) {
      out[it->second].constant = ineq.constant;
    }
  }
  return true;
}

}  // namespace

std::optional<Vector> lp_feasible(std::span<const LinearConstraint> constraints,
                                  std::size_t num_vars) {
  std::vector<Vector> eq_rows;
  Vector eq_rhs;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != num_vars) throw std::invalid_argument("lp_feasible: coefficient count");
    if (c.relation == Relation::Equal) {
      eq_rows.push_back(c.coeffs);
      eq_rhs.push_back(-c.constant);
    }
  }
  const auto affine = solve_affine(Matrix::from_rows(eq_rows, num_vars), eq_rhs);
  if (!affine) return std::nullopt;
  const std::size_t params = affine->nullspace.size();

  std::vector<Inequality> initial;
  for (const auto& c : constraints) {
    if (c.relation != Relation::GreaterEqual) continue;
    Inequality ineq{c.constant + dot(c.coeffs, affine->particular), zero_vector(params)};
    for (std::size_t k = 0; k < params; ++k) ineq.coeffs[k] = dot(c.coeffs, affine->nullspace[k]);
    initial.push_back(std::move(ineq));
  }

  // levels[j] only involves parameters 0..j-1.
  std::vector<std::vector<Inequality>> levels(params + 1);
  if (!normalize_into(levels[params], std::move(initial))) return std::nullopt;
  for (std::size_t j = params; j-- > 0;) {
    const auto& current = levels[j + 1];
    std::vector<Inequality> next;
    std::vector<const Inequality*> upper;
    std::vector<const Inequality*> lower;
    for (const auto& ineq : current) {
      const int s = sgn(ineq.coeffs[j]);
      if (s == 0) next.push_back(ineq);
      else if (s > 0) lower.push_back(&ineq);
      else upper.push_back(&ineq);
    }
    for (const auto* lo : lower) {
      for (const auto* up : upper) {
        // lo: c0 + a t_j + ... ≥ 0 with a > 0;  up: d0 − b t_j + ... ≥ 0 with b > 0.
        const Rational a = lo->coeffs[j];
        const Rational b = -up->coeffs[j];
        Inequality combined{b * lo->constant + a * up->constant, zero_vector(params)};
        for (std::size_t k = 0; k < params; ++k)
          combined.coeffs[k] = b * lo->coeffs[k] + a * up->coeffs[k];
        combined.coeffs[j] = 0;
        next.push_back(std::move(combined));
      }
    }
    if (!normalize_into(levels[j], std::move(next))) return std::nullopt;
  }

  Vector t = zero_vector(params);
  for (std::size_t j = 0; j < params; ++j) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& ineq : levels[j + 1]) {
      const Rational& a = ineq.coeffs[j];
      if (sgn(a) == 0) continue;
      Rational rest = ineq.constant;
      for (std::size_t k = 0; k < j; ++k) rest += ineq.coeffs[k] * t[k];
      const Rational bound = -rest / a;
      if (sgn(a) > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw std::logic_error("lp_feasible: inconsistent back-substitution");
    const bool zero_ok = (!lo || sgn(*lo) <= 0) && (!hi || sgn(*hi) >= 0);
    if (zero_ok) t[j] = 0;
    else if (lo && sgn(*lo) > 0) t[j] = *lo;
    else t[j] = *hi;
  }

  Vector x = affine->particular;
  for (std::size_t k = 0; k < params; ++k)
    if (sgn(t[k]) != 0) x = x + t[k] * affine->nullspace[k];
  return x;
}

Vector IncrementalBasis::reduce(Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    for (std::size_t j = 0; j < dimension_; ++j)
      if (sgn(rows_[r][j]) != 0) v[j] -= factor * rows_[r][j];
  }
  return v;
}

bool IncrementalBasis::add(const Vector& v) {
  if (v.size() != dimension_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
  Vector reduced = reduce(v);
  auto first = std::find_if(reduced.begin(), reduced.end(),
                            [](const Rational& c) { return sgn(c) != 0; });
  if (first == reduced.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(first - reduced.begin());
  const Rational inv = 1 / reduced[pivot];
  for (auto& c : reduced) c *= inv;
  // Keep earlier rows free of the new pivot so reduction stays one pass.
  for (auto& row : rows_) {
    if (sgn(row[pivot]) == 0) continue;
    const Rational factor = row[pivot];
    for (std::size_t j = 0; j < dimension_; ++j)
      if (sgn(reduced[j]) != 0) row[j] -= factor * reduced[j];
  }
  rows_.push_back(std::move(reduced));
  pivots_.push_back(pivot);
  return true;
}

bool IncrementalBasis::contains(const Vector& v) const {
  if (v.size() != dimension_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
  return is_zero(reduce(v));
}

}  // namespace ratstoch
