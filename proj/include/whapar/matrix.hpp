#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whapar/rational.hpp"

namespace whapar {

using Vec = std::vector<Rat>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
void axpy(Vec& y, const Rat& c, const Vec& x);  // y += c*x
Rat dot(const Vec& a, const Vec& b);
Vec unit_vec(std::size_t n, std::size_t i);
std::string vec_str(const Vec& v);

// Dense row-major matrix over Rat. Acts on column vectors: (M v)_i = sum_j M(i,j) v_j.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_cols(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Vec apply(const Vec& v) const;  // M v
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rat& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool is_zero() const;

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

// Reduced row echelon form and the pivot column list. Row space preserved.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Kronecker product with the fixed ordering (e_i (x) e_j) -> index i*cols_b + j
// on vectors, so (a (x) b)(v (x) w) = a(v) (x) b(w).
Matrix kron(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

// Solve M x = b; empty if inconsistent. When the solution is not unique the
// free coordinates are set to zero.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// A subspace of Q^ambient_dim held as a reduced-echelon row basis.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace from_span(std::size_t ambient, const std::vector<Vec>& spanning);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  // Coordinates of v in the echelon basis, or nullopt when v is not a member.
  std::optional<Vec> coords(const Vec& v) const;
  bool contains(const Vec& v) const { return coords(v).has_value(); }
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Kernel of m as a subspace of Q^cols.
Subspace kernel_basis(const Matrix& m);

// Quotient of Q^ambient by the span of relation vectors, with the canonical
// echelon section: coordinates live on the non-pivot ambient indices.
struct QuotientSpace {
  std::size_t ambient = 0;
  Subspace rel;
  std::vector<std::size_t> free_idx;

  static QuotientSpace from_relations(std::size_t ambient, const std::vector<Vec>& rows);
  std::size_t dim() const { return free_idx.size(); }
  Vec project(const Vec& v) const;
  Vec lift(const Vec& coords) const;
};

}  // namespace whapar
