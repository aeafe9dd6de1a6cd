#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "splitcount/matrix.hpp"

namespace splitcount {

// A subspace of F_q^N in canonical form: the basis matrix is the reduced row
// echelon form of any generating set, one basis vector per row, no zero rows.
// Canonicality makes equality bitwise and enables use as a map/set key.
class Subspace {
 public:
  // Canonicalize the row space of an arbitrary generator matrix.
  static Subspace span_of(const Matrix& generators);
  static Subspace zero_space(FieldPtr field, std::size_t ambient);
  static Subspace full_space(FieldPtr field, std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const FieldPtr& field() const { return basis_.field(); }
  // RREF basis, dim()×ambient().
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Residual of v after elimination against the basis; zero iff v lies here.
  std::vector<Fe> reduce(const std::vector<Fe>& v) const;
  bool contains(const std::vector<Fe>& v) const;
  bool contains_subspace(const Subspace& other) const;

  bool operator==(const Subspace& rhs) const;
  // Lexicographic on (ambient, dim, basis entries); a total order for
  // ordered containers.
  bool operator<(const Subspace& rhs) const;

  std::string str() const { return basis_.str(); }

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// {v : Tv = 0}, canonical.
Subspace kernel(const Matrix& t);
// T^{-1}W = {v : Tv ∈ W}; throws DimensionMismatchError on shape clash.
Subspace preimage(const Matrix& t, const Subspace& w);
// W1 + W2.
Subspace subspace_sum(const Subspace& w1, const Subspace& w2);
// W1 ∩ W2 (Zassenhaus-style elimination on a doubled-width matrix).
Subspace subspace_intersection(const Subspace& w1, const Subspace& w2);
// True iff TW ⊆ W.
bool is_invariant(const Matrix& t, const Subspace& w);

// Reduce y (length n) in place against a row-major RREF basis with the given
// pivot columns; afterwards y is the canonical residual. Returns true iff y
// reduced to zero, i.e. the vector lies in the row space. This is the hot
// primitive behind the brute-force oracles.
inline bool reduce_against_rref(const Field& f, const Fe* rows,
                                const std::size_t* pivots, std::size_t k,
                                std::size_t n, Fe* y) {
  for (std::size_t i = 0; i < k; ++i) {
    const Fe c = y[pivots[i]];
    if (c == 0) continue;
    const Fe* row = rows + i * n;
    // RREF rows vanish left of their pivot, so start the subtraction there.
    for (std::size_t j = pivots[i]; j < n; ++j)
      if (row[j] != 0) y[j] = f.sub(y[j], f.mul(c, row[j]));
  }
  for (std::size_t j = 0; j < n; ++j)
    if (y[j] != 0) return false;
  return true;
}

// Streams every dim-dimensional subspace of F_q^N exactly once, in a
// deterministic order: pivot-column patterns in lexicographic order, free
// entries filled by an ascending odometer. RREF matrices are generated
// directly, so no duplicates arise and nothing is materialized up front.
//
//   SubspaceEnumerator en(field, n, k);
//   while (en.next()) { ... en.basis_data() / en.current() ... }
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(FieldPtr field, std::size_t ambient, std::size_t dim);

  // Advance to the next subspace; false once exhausted.
  bool next();
  // Row-major dim()×ambient() RREF basis of the current subspace. The buffer
  // is owned by the enumerator and overwritten by the next call to next().
  const Fe* basis_data() const { return basis_.data(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  std::size_t dim() const { return k_; }
  std::size_t ambient() const { return n_; }
  const FieldPtr& field() const { return field_; }
  // Materialize the current subspace as a canonical Subspace value.
  Subspace current() const;

  // Total number of subspaces this enumerator will yield (Gaussian binomial
  // evaluated at q).
  mpz_class total() const;

 private:
  void load_pattern();
  bool advance_pattern();

  FieldPtr field_;
  std::size_t n_, k_;
  std::uint64_t q_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::size_t> pivots_;          // current pivot pattern, ascending
  std::vector<std::pair<std::size_t, std::size_t>> free_cells_;  // (row, col)
  std::vector<Fe> digits_;                   // odometer over the free cells
  std::vector<Fe> basis_;                    // k×n row-major scratch
};

}  // namespace splitcount
