#include "splitcount/matrix.hpp"

#include <sstream>
#include <utility>

#include "splitcount/errors.hpp"

namespace splitcount {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!a.field()->same_as(*b.field()))
    throw DimensionMismatchError("matrices live over different fields");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Fe>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(std::move(field), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw DimensionMismatchError("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::companion(const FqPoly& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw InvalidParamsError("companion matrix requires a monic polynomial of degree >= 1");
  const auto n = static_cast<std::size_t>(f.degree());
  const Field& fld = *f.field();
  Matrix m(f.field(), n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) m.set(j + 1, j, 1);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, n - 1, fld.neg(f.coefficient(static_cast<unsigned>(i))));
  return m;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw InvalidParamsError("block_diag needs at least one block");
  std::size_t n = 0;
  for (const Matrix& b : blocks) {
    if (!b.is_square()) throw DimensionMismatchError("block_diag blocks must be square");
    require_same_field(blocks.front(), b);
    n += b.rows();
  }
  Matrix m(blocks.front().field(), n, n);
  std::size_t offset = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        m.set(offset + i, offset + j, b.at(i, j));
    offset += b.rows();
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatchError("matrix addition shape mismatch");
  Matrix out(field_, rows_, cols_);
  const Field& f = *field_;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = f.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatchError("matrix subtraction shape mismatch");
  Matrix out(field_, rows_, cols_);
  const Field& f = *field_;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = f.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (cols_ != rhs.rows_) throw DimensionMismatchError("matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Fe a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Fe b = rhs.at(k, j);
        if (b != 0) out.set(i, j, f.add(out.at(i, j), f.mul(a, b)));
      }
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return field_->same_as(*rhs.field_) && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
         data_ == rhs.data_;
}

Matrix Matrix::plus_scalar_identity(Fe c) const {
  if (!is_square()) throw DimensionMismatchError("scalar shift requires a square matrix");
  Matrix out(*this);
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) out.set(i, i, f.add(at(i, i), c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

void Matrix::apply(const Fe* v, Fe* out) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Fe acc = 0;
    const Fe* row_i = row(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (row_i[j] != 0 && v[j] != 0) acc = f.add(acc, f.mul(row_i[j], v[j]));
    out[i] = acc;
  }
}

std::vector<Fe> Matrix::apply(const std::vector<Fe>& v) const {
  if (v.size() != cols_) throw DimensionMismatchError("vector length != matrix cols");
  std::vector<Fe> out(rows_, 0);
  apply(v.data(), out.data());
  return out;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m(*this);
  const Field& f = *field_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Fe t = m.at(r, j);
        m.set(r, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
    const Fe scale = f.inv(m.at(r, c));
    if (scale != 1)
      for (std::size_t j = c; j < cols_; ++j) m.set(r, j, f.mul(m.at(r, j), scale));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Fe factor = m.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols_; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ",";
      out << field_->element_str(at(i, j));
    }
  }
  return out.str();
}

}  // namespace splitcount
