#include "splitcount/subspace.hpp"

#include <algorithm>
#include <utility>

#include "splitcount/errors.hpp"
#include "splitcount/qpoly.hpp"

namespace splitcount {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !a.field()->same_as(*b.field()))
    throw DimensionMismatchError("subspaces live in different ambient spaces");
}

}  // namespace

Subspace Subspace::span_of(const Matrix& generators) {
  std::vector<std::size_t> pivots;
  Matrix reduced = generators.rref(&pivots);
  Matrix basis(generators.field(), pivots.size(), generators.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) basis.set(i, j, reduced.at(i, j));
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::zero_space(FieldPtr field, std::size_t ambient) {
  return Subspace(Matrix(std::move(field), 0, ambient), {});
}

Subspace Subspace::full_space(FieldPtr field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(std::move(field), ambient), std::move(pivots));
}

std::vector<Fe> Subspace::reduce(const std::vector<Fe>& v) const {
  if (v.size() != ambient()) throw DimensionMismatchError("vector length != ambient dim");
  std::vector<Fe> y(v);
  reduce_against_rref(*field(), basis_.data().data(), pivots_.data(), dim(), ambient(),
                      y.data());
  return y;
}

bool Subspace::contains(const std::vector<Fe>& v) const {
  if (v.size() != ambient()) throw DimensionMismatchError("vector length != ambient dim");
  std::vector<Fe> y(v);
  return reduce_against_rref(*field(), basis_.data().data(), pivots_.data(), dim(),
                             ambient(), y.data());
}

bool Subspace::contains_subspace(const Subspace& other) const {
  require_same_ambient(*this, other);
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    std::vector<Fe> y(other.basis_.row(i), other.basis_.row(i) + ambient());
    if (!reduce_against_rref(*field(), basis_.data().data(), pivots_.data(), dim(),
                             ambient(), y.data()))
      return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }

bool Subspace::operator<(const Subspace& rhs) const {
  if (ambient() != rhs.ambient()) return ambient() < rhs.ambient();
  if (dim() != rhs.dim()) return dim() < rhs.dim();
  return basis_.data() < rhs.basis_.data();
}

Subspace kernel(const Matrix& t) {
  if (!t.is_square()) throw DimensionMismatchError("kernel expects a square operator");
  const std::size_t n = t.cols();
  std::vector<std::size_t> pivots;
  Matrix reduced = t.rref(&pivots);
  const Field& f = *t.field();

  // One kernel generator per free column, then canonicalize the batch.
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  Matrix generators(t.field(), n - pivots.size(), n);
  std::size_t g = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    generators.set(g, c, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      generators.set(g, pivots[i], f.neg(reduced.at(i, c)));
    ++g;
  }
  return Subspace::span_of(generators);
}

Subspace preimage(const Matrix& t, const Subspace& w) {
  if (!t.is_square() || t.cols() != w.ambient() || !t.field()->same_as(*w.field()))
    throw DimensionMismatchError("preimage shape mismatch");
  const std::size_t n = w.ambient();
  const Field& f = *w.field();
  // v ∈ T^{-1}W iff the residual of Tv against W's basis vanishes. That
  // residual map is linear: E = I − Bᵀ·P with P the pivot-coordinate
  // selector, so T^{-1}W = ker(E·T).
  Matrix e = Matrix::identity(w.field(), n);
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const std::size_t p = w.pivots()[i];
    for (std::size_t j = 0; j < n; ++j)
      e.set(j, p, f.sub(e.at(j, p), w.basis().at(i, j)));
  }
  return kernel(e * t);
}

Subspace subspace_sum(const Subspace& w1, const Subspace& w2) {
  require_same_ambient(w1, w2);
  Matrix stacked(w1.field(), w1.dim() + w2.dim(), w1.ambient());
  for (std::size_t i = 0; i < w1.dim(); ++i)
    for (std::size_t j = 0; j < w1.ambient(); ++j) stacked.set(i, j, w1.basis().at(i, j));
  for (std::size_t i = 0; i < w2.dim(); ++i)
    for (std::size_t j = 0; j < w2.ambient(); ++j)
      stacked.set(w1.dim() + i, j, w2.basis().at(i, j));
  return Subspace::span_of(stacked);
}

Subspace subspace_intersection(const Subspace& w1, const Subspace& w2) {
  require_same_ambient(w1, w2);
  const std::size_t n = w1.ambient();
  // Zassenhaus: reduce [B1|B1; B2|0]; rows with zero left half carry the
  // intersection in their right half.
  Matrix doubled(w1.field(), w1.dim() + w2.dim(), 2 * n);
  for (std::size_t i = 0; i < w1.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      doubled.set(i, j, w1.basis().at(i, j));
      doubled.set(i, n + j, w1.basis().at(i, j));
    }
  for (std::size_t i = 0; i < w2.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) doubled.set(w1.dim() + i, j, w2.basis().at(i, j));

  std::vector<std::size_t> pivots;
  Matrix reduced = doubled.rref(&pivots);
  Matrix generators(w1.field(), w1.dim() + w2.dim(), n);
  std::size_t g = 0;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n) continue;  // left half nonzero: not an intersection row
    for (std::size_t j = 0; j < n; ++j) generators.set(g, j, reduced.at(i, n + j));
    ++g;
  }
  Matrix trimmed(w1.field(), g, n);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < n; ++j) trimmed.set(i, j, generators.at(i, j));
  return Subspace::span_of(trimmed);
}

bool is_invariant(const Matrix& t, const Subspace& w) {
  if (!t.is_square() || t.cols() != w.ambient() || !t.field()->same_as(*w.field()))
    throw DimensionMismatchError("invariance check shape mismatch");
  const Field& f = *w.field();
  std::vector<Fe> image(w.ambient());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    t.apply(w.basis().row(i), image.data());
    if (!reduce_against_rref(f, w.basis().data().data(), w.pivots().data(), w.dim(),
                             w.ambient(), image.data()))
      return false;
  }
  return true;
}

// --- SubspaceEnumerator ---

SubspaceEnumerator::SubspaceEnumerator(FieldPtr field, std::size_t ambient,
                                       std::size_t dim)
    : field_(std::move(field)), n_(ambient), k_(dim), q_(field_->order()) {
  if (k_ > n_) {
    done_ = true;  // no subspaces of that dimension
    return;
  }
  pivots_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) pivots_[i] = i;
  basis_.assign(k_ * n_, 0);
  load_pattern();
}

void SubspaceEnumerator::load_pattern() {
  std::fill(basis_.begin(), basis_.end(), 0);
  free_cells_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  for (std::size_t i = 0; i < k_; ++i) {
    basis_[i * n_ + pivots_[i]] = 1;
    for (std::size_t c = pivots_[i] + 1; c < n_; ++c)
      if (!is_pivot[c]) free_cells_.emplace_back(i, c);
  }
  digits_.assign(free_cells_.size(), 0);
}

bool SubspaceEnumerator::advance_pattern() {
  // Next k-combination of {0..n-1} in lexicographic order.
  if (k_ == 0) return false;
  std::size_t i = k_;
  while (i-- > 0) {
    if (pivots_[i] < n_ - k_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool SubspaceEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  // Odometer over the free cells; on overflow, move to the next pattern.
  const Fe top = static_cast<Fe>(q_ - 1);
  for (std::size_t t = 0; t < digits_.size(); ++t) {
    auto [row, col] = free_cells_[t];
    if (digits_[t] < top) {
      ++digits_[t];
      basis_[row * n_ + col] = digits_[t];
      return true;
    }
    digits_[t] = 0;
    basis_[row * n_ + col] = 0;
  }
  if (!advance_pattern()) {
    done_ = true;
    return false;
  }
  load_pattern();
  return true;
}

Subspace SubspaceEnumerator::current() const {
  Matrix m(field_, k_, n_);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.set(i, j, basis_[i * n_ + j]);
  return Subspace::span_of(m);  // already RREF; span_of just re-derives pivots
}

mpz_class SubspaceEnumerator::total() const {
  return gaussian_binomial(static_cast<long>(n_), static_cast<long>(k_))
      .eval(mpz_class(static_cast<unsigned long>(q_)));
}

}  // namespace splitcount
