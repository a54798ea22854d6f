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

#ifndef MODLIE_MATRIX_HPP_
#define MODLIE_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "modlie/rational.hpp"

namespace modlie {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(
      std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix from_rows(const std::vector<Vector>& rows);
  /// Columns must all have length `rows`.
  static RatMatrix from_columns(const std::vector<Vector>& columns,
                                std::size_t rows);
  /// diag(a, b) as a block matrix.
  static RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const Rational> entries() const { return data_; }
  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(data_).subspan(i * cols_, cols_);
  }
  Vector column(std::size_t j) const;

  RatMatrix transpose() const;
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows,
                  std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& m);

  Vector operator*(std::span<const Rational> v) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& c);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, RatMatrix m) { return m *= c; }
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form (Gauss-Jordan over the rationals).
RrefResult rref(const RatMatrix& m);

/// Basis of the right null space, one vector per free column of rref(m).
std::vector<Vector> kernel_basis(const RatMatrix& m);

/// One solution of m x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve(const RatMatrix& m, std::span<const Rational> b);

/// Rank and determinant use fraction-free (Bareiss) elimination after
/// clearing row denominators.
std::size_t rank(const RatMatrix& m);
Rational det(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational trace(const RatMatrix& m);
RatMatrix power(const RatMatrix& m, unsigned k);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Row-major flattening, used to treat matrices as vectors in operator space.
Vector flatten(const RatMatrix& m);
RatMatrix unflatten(std::span<const Rational> v, std::size_t rows,
                    std::size_t cols);

}  // namespace modlie

#endif  // MODLIE_MATRIX_HPP_
