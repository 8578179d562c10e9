#include "whapar/matrix.hpp"

#include <sstream>

namespace whapar {

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Rat& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& y, const Rat& c, const Vec& x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}

Rat dot(const Vec& a, const Vec& b) {
  Rat r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Rat(1);
  return v;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ')';
  return os.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw InputError("Matrix::from_cols: ragged columns");
    for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw InputError("Matrix::apply: dimension mismatch");
  Vec r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("Matrix::operator*: dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix r(*this);
  for (auto& x : r.e_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).str();
    }
  }
  os << ']';
  return os.str();
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
  Matrix a(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a.at(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    Rat p = a.at(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rat f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  auto [red, piv] = rref(aug);
  if (piv.size() != n || piv.back() != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw InputError("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto [red, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = red.at(r, m.cols());
  return x;
}

Subspace Subspace::from_span(std::size_t ambient, const std::vector<Vec>& spanning) {
  Subspace s(ambient);
  if (spanning.empty()) return s;
  auto [red, piv] = rref(Matrix::from_rows(spanning));
  Matrix basis(piv.size(), ambient);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis.at(i, j) = red.at(i, j);
  s.basis_ = basis;
  s.pivots_ = piv;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (v.size() != ambient_) throw InputError("Subspace::coords: dimension mismatch");
  Vec rem(v), c(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    Rat x = rem[pivots_[r]];
    if (x.is_zero()) continue;
    c[r] = x;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_.at(r, j).is_zero()) rem[j] -= x * basis_.at(r, j);
  }
  if (!whapar::is_zero(rem)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel_basis(const Matrix& m) {
  auto [red, piv] = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = Rat(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red.at(r, f);
    rows.push_back(v);
  }
  return Subspace::from_span(m.cols(), rows);
}

}  // namespace whapar
