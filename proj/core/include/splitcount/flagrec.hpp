#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "splitcount/lattice.hpp"

namespace splitcount {

// A labeled flag-set descriptor [(a_{1,1},a_{1,2}),...,(a_{r,1},a_{r,2})]
// over an ambient space of dimension N, counting flags W_1, ..., W_r with
// dim W_i = a_{i,1}, dim(W_i ∩ T^{-1}W_i) = a_{i,2}, and
// W_i ⊇ W_{i+1} + T·W_{i+1}. Boundary conventions: a_{0,1} = a_{0,2} = N and
// a_{r+1,1} = a_{r+1,2} = 0. Any nonnegative entries are representable;
// tuples violating the feasibility conditions simply describe empty sets.
struct FlagTuple {
  std::size_t ambient = 0;
  std::vector<std::pair<unsigned, unsigned>> pairs;

  std::size_t length() const { return pairs.size(); }
  // Entry a_{i,j} with the boundary conventions; i ranges over 0..r+1.
  unsigned a(std::size_t i, int j) const;

  bool operator==(const FlagTuple&) const = default;
  // "4,2;2,0" (pairs only; the ambient dimension travels separately).
  std::string str() const;
};

// Parse "a11,a12;a21,a22;..." into a tuple over the given ambient dimension.
// Throws ParseError on bad syntax.
FlagTuple parse_tuple(const std::string& text, std::size_t ambient);

enum class TupleStatus { Valid, Empty };

// Valid iff the interleaved chain N ≥ a_{1,1} ≥ a_{1,2} ≥ a_{2,1} ≥ ... ≥
// a_{r,2} ≥ 0 holds and a_{i-1,1} ≥ 2a_{i,1} − a_{i,2} for 1 ≤ i ≤ r.
// Empty means the described flag set has no members (count 0).
TupleStatus validate_tuple(const FlagTuple& t);

// Total order on tuples of equal length: pairs are ordered by
// (a,b) ⪰ (a',b') iff a > a' or (a = a' and b ≤ b'), extended
// lexicographically left to right. greater means t1 strictly dominates t2.
// Throws LengthMismatchError for different lengths.
std::strong_ordering compare_tuples(const FlagTuple& t1, const FlagTuple& t2);

// Counts flag sets symbolically: one polynomial in q, valid for every prime
// power q ≥ q0(tau), for any operator of class type tau. Diagonal tuples
// (every a_{i,1} = a_{i,2}) bottom out in phi_poly; everything else unwinds
// through the two-sided recursion (see count()). Results are memoized per
// backend, so keep a backend alive across related queries.
class SymbolicBackend {
 public:
  explicit SymbolicBackend(ClassType tau);
  ~SymbolicBackend();
  SymbolicBackend(SymbolicBackend&&) noexcept;
  SymbolicBackend& operator=(SymbolicBackend&&) noexcept;

  const ClassType& type() const { return tau_; }
  std::size_t ambient() const;

  // Base-case oracle for diagonal tuples: flags of invariant subspaces.
  QPoly base_case(const std::vector<unsigned>& dims) const;

  // |[(a_{1,1},a_{1,2}),...]| as a polynomial in q. The recursion rewrites a
  // tuple as an A-sum minus a B-sum of strictly smaller tuples (under
  // compare_tuples), each weighted by Gaussian binomials, terminating at the
  // diagonal base cases. Throws InvalidBackendError when the tuple's ambient
  // dimension differs from size(tau).
  QPoly count(const FlagTuple& t);

 private:
  ClassType tau_;
  struct State;
  std::unique_ptr<State> state_;
};

// Counts flag sets for one concrete operator with exact integers; diagonal
// tuples bottom out in the exhaustive brute_invariant_flags oracle (which is
// where the scale limit applies).
class ConcreteBackend {
 public:
  explicit ConcreteBackend(Matrix t, std::uint64_t scale_limit = default_scale_limit());
  ~ConcreteBackend();
  ConcreteBackend(ConcreteBackend&&) noexcept;
  ConcreteBackend& operator=(ConcreteBackend&&) noexcept;

  const Matrix& matrix() const { return t_; }
  std::size_t ambient() const { return t_.rows(); }

  Int base_case(const std::vector<unsigned>& dims) const;

  // Same recursion as the symbolic backend, evaluated at this operator.
  Int count(const FlagTuple& t);

 private:
  Matrix t_;
  std::uint64_t scale_limit_;
  struct State;
  std::unique_ptr<State> state_;
};

// Free-function spellings of backend.count(t).
QPoly flag_count(SymbolicBackend& backend, const FlagTuple& t);
Int flag_count(ConcreteBackend& backend, const FlagTuple& t);

// Exhaustive oracle for arbitrary tuples: enumerate candidate flags directly
// (superspace enumeration level by level) and test the defining conditions.
// Completely independent of the recursion; used to validate it.
Int brute_flag_count(const Matrix& t, const FlagTuple& tuple,
                     std::uint64_t scale_limit = default_scale_limit());

// The two-sided rewriting above rests on an exchange identity: the full
// A-sum (no exclusions) must equal the full B-sum (diagonal term included).
// Recomputes both sides via count() and compares. Tuple must be Valid.
bool lr_consistency(SymbolicBackend& backend, const FlagTuple& t);
bool lr_consistency(ConcreteBackend& backend, const FlagTuple& t);

}  // namespace splitcount
