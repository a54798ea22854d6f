// Copyright 2026 The modlie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modlie/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "modlie/errors.hpp"

namespace modlie {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw SizeMismatch("matrix entry count does not match its shape");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) r.emplace_back(row);
  return from_rows(r);
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.front().size();
  std::vector<Rational> data;
  data.reserve(nrows * ncols);
  for (const auto& row : rows) {
    if (row.size() != ncols) throw SizeMismatch("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return RatMatrix(nrows, ncols, std::move(data));
}

RatMatrix RatMatrix::from_columns(const std::vector<Vector>& columns,
                                  std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw SizeMismatch("ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RatMatrix RatMatrix::block_diagonal(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

bool RatMatrix::is_zero() const { return modlie::is_zero(data_); }

Vector RatMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows,
                           std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw SizeMismatch("block out of range");
  }
  RatMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) {
    throw SizeMismatch("block out of range");
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Vector RatMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw SizeMismatch("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw SizeMismatch("matrix product shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

RrefResult rref(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(row, j));
    }
    const Rational inv = r(row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) {
      if (!r(row, j).is_zero()) r(row, j) *= inv;
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Rational f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::vector<Vector> kernel_basis(const RatMatrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (!r(k, f).is_zero()) v[pivots[k]] = -r(k, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw SizeMismatch("solve: rhs length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, m.cols());
  return x;
}

namespace {

// Integer matrix whose rows are the rows of m scaled by their denominator
// lcm. `scale` receives the product of the scalings.
std::vector<std::vector<mpz_class>> clear_denominators(const RatMatrix& m,
                                                       mpz_class& scale) {
  std::vector<std::vector<mpz_class>> a(m.rows(),
                                        std::vector<mpz_class>(m.cols()));
  scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      a[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    scale *= l;
  }
  return a;
}

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t ncols,
                    int& sign) {
  const std::size_t nrows = a.size();
  mpz_class prev = 1;
  std::size_t row = 0;
  sign = 1;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t sel = row;
    while (sel < nrows && a[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    if (sel != row) {
      std::swap(a[sel], a[row]);
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        a[i][j] = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  mpz_class scale;
  auto a = clear_denominators(m, scale);
  int sign = 1;
  return bareiss(a, m.cols(), sign);
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  mpz_class scale;
  auto a = clear_denominators(m, scale);
  int sign = 1;
  if (bareiss(a, n, sign) < n) return Rational(0);
  return Rational(mpz_class(sign * a[n - 1][n - 1]), scale);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, RatMatrix::identity(n));
  const auto [r, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  return r.block(0, n, n, n);
}

Rational trace(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

RatMatrix power(const RatMatrix& m, unsigned k) {
  if (!m.is_square()) throw InputError("power of a non-square matrix");
  RatMatrix result = RatMatrix::identity(m.rows());
  RatMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  return a * b - b * a;
}

Vector flatten(const RatMatrix& m) {
  return Vector(m.entries().begin(), m.entries().end());
}

RatMatrix unflatten(std::span<const Rational> v, std::size_t rows,
                    std::size_t cols) {
  return RatMatrix(rows, cols, Vector(v.begin(), v.end()));
}

}  // namespace modlie
