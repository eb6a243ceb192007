#ifndef RATSTOCH_LINALG_HPP
#define RATSTOCH_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "ratstoch/rational.hpp"

namespace ratstoch {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

// Dense row-major matrix of exact rationals. The shape is fixed at
// construction; only entries may change.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  // Each vector becomes one row; all must have length `cols`.
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  // Each vector becomes one column; all must have length `rows`.
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transposed() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);
// M·v, v a column.
Vector operator*(const Matrix& m, const Vector& v);
// v·M, v a row.
Vector operator*(const Vector& v, const Matrix& m);

struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; pivots are chosen as the first nonzero entry of
// each column, scanning columns left to right.
EchelonForm rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct AffineSolution {
  Vector particular;             // free variables set to zero
  std::vector<Vector> nullspace;  // one vector per free column, in column order
};

// Full solution set of A x = b, or nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

// Coefficients c with Σ c_i basis_i = v (basis may be dependent), or nullopt.
std::optional<Vector> membership_in_span(const Vector& v, std::span<const Vector> basis);

std::optional<Matrix> inverse(const Matrix& m);

// Sylvester's criterion on the leading principal minors.
// Throws std::invalid_argument when m is not symmetric.
bool is_positive_definite(const Matrix& m);

// Decides whether M^k -> 0 by solving the discrete Lyapunov equation
// MᵀPM − P = −I over symmetric P (upper triangle as unknowns) and testing P
// for positive definiteness.
bool spectral_radius_lt_one(const Matrix& m);

enum class Relation { GreaterEqual, Equal };

// constant + Σ coeffs[i]·x[i]  (≥ | =)  0
struct LinearConstraint {
  Rational constant;
  Vector coeffs;
  Relation relation = Relation::GreaterEqual;
};

// Exact feasibility by Gaussian elimination of the equalities followed by
// Fourier–Motzkin elimination of the inequalities. Returns a feasible point
// or nullopt when the system has none.
std::optional<Vector> lp_feasible(std::span<const LinearConstraint> constraints,
                                  std::size_t num_vars);

// Row-echelon basis grown one vector at a time; the workhorse of every
// Krylov-span exploration.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dimension) : dimension_(dimension) {}

  // Adds v if it lies outside the current span; returns true when added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }
  // Reduced rows spanning the same space as every vector added so far.
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  Vector reduce(Vector v) const;

  std::size_t dimension_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ratstoch

#endif  // RATSTOCH_LINALG_HPP
