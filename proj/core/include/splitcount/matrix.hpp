#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "splitcount/field.hpp"

namespace splitcount {

// Dense matrix over a finite field, row-major. Operators are square matrices
// acting on column coordinate vectors (v ↦ Mv). Immutable by convention once
// built (all library operations return fresh matrices).
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);  // zero matrix

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Fe>>& rows);
  // Companion matrix of a monic polynomial of degree ≥ 1: maps e_i ↦ e_{i+1}
  // for i < n and e_n to minus the non-leading coefficients.
  static Matrix companion(const FqPoly& f);
  static Matrix block_diag(const std::vector<Matrix>& blocks);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Fe v) { data_[r * cols_ + c] = v; }
  const Fe* row(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<Fe>& data() const { return data_; }

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;

  // This + c·I (square only).
  Matrix plus_scalar_identity(Fe c) const;
  Matrix transpose() const;

  // Image of a column coordinate vector: out = M·v. Buffers must not alias.
  void apply(const Fe* v, Fe* out) const;
  std::vector<Fe> apply(const std::vector<Fe>& v) const;

  std::size_t rank() const;
  // Reduced row echelon form; pivot columns of the nonzero rows are appended
  // to *pivots when given. Zero rows sink to the bottom.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  // Rows as comma-separated entries with ';' between rows, e.g. "1,0;0,1".
  std::string str() const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Fe> data_;
};

}  // namespace splitcount
