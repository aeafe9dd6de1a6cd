#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "splitcount/matrix.hpp"

namespace splitcount {

// Integer partition: weakly decreasing positive parts; may be empty.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<unsigned> parts);
  // Validates weak decrease and positivity; throws InvalidPartitionError.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  // Sum of parts.
  unsigned size() const;
  bool empty() const { return parts_.empty(); }
  // i-th part (1-indexed like the usual λ_i notation); 0 beyond the length.
  unsigned part(std::size_t i) const;

  // Column lengths of the Young diagram.
  Partition conjugate() const;
  // Young-diagram containment: mu_i ≤ λ_i for all i.
  bool contains(const Partition& mu) const;

  bool operator==(const Partition& rhs) const = default;
  auto operator<=>(const Partition& rhs) const = default;  // lex on parts

  // "3,1"; empty partition renders as "".
  std::string str() const;

 private:
  std::vector<unsigned> parts_;
};

// All subpartitions μ ⊆ λ with |μ| = k, each exactly once.
std::vector<Partition> subpartitions(const Partition& lambda, unsigned k);
// All partitions of n (n = 0 gives the empty partition).
std::vector<Partition> all_partitions(unsigned n);

// One (degree, shape) entry of a similarity class type.
struct TypeComponent {
  unsigned degree = 1;
  Partition shape;
  bool operator==(const TypeComponent&) const = default;
  auto operator<=>(const TypeComponent&) const = default;
};

// Similarity class type: a multiset of (degree, partition) components, the
// partition listing the exponents of one irreducible factor of the invariant
// structure. size = Σ degree·|partition|. Stored sorted for canonical
// comparison and display; duplicate components are kept (multiset).
class ClassType {
 public:
  ClassType() = default;  // empty; size 0 (only valid as an internal value)
  explicit ClassType(std::vector<TypeComponent> components);

  const std::vector<TypeComponent>& components() const { return components_; }
  unsigned size() const;
  bool is_primary() const { return components_.size() == 1; }

  bool operator==(const ClassType& rhs) const = default;
  auto operator<=>(const ClassType& rhs) const = default;

  // Canonical display, inverse of parse_type: "1:3,1;2:2".
  std::string str() const;

 private:
  std::vector<TypeComponent> components_;
};

// Grammar: TYPE := COMP (';' COMP)*; COMP := DEG ':' PART (',' PART)*.
// Throws ParseError on bad syntax, InvalidPartitionError on bad partitions.
ClassType parse_type(const std::string& text);

// Number of monic irreducible polynomials of degree n over F_q, by the
// Möbius-sum formula. Throws NotPrimePowerError unless q is a prime power.
mpz_class beta(std::uint64_t q, unsigned n);

// Smallest prime power q such that an operator of type tau exists over F_q,
// i.e. for every degree e the number of components of degree e is ≤ β(q,e).
std::uint64_t q0(const ClassType& tau);

// Block-diagonal operator of type tau over the field: for each degree e, the
// components of that degree receive the lexicographically smallest distinct
// monic irreducibles of degree e, one companion block of p^part per part.
// Throws FieldTooSmallError when the field order is below q0(tau).
Matrix canonical_operator(const ClassType& tau, const FieldPtr& field);

// Same construction, but component i uses the poly_index[i]-th smallest
// irreducible of its degree (indices within one degree must be distinct).
// Lets tests realize one type with different polynomial choices.
Matrix operator_with_choices(const ClassType& tau, const FieldPtr& field,
                             const std::vector<std::size_t>& poly_index);

// Every class type of the given size (n ≥ 1), deterministically ordered.
// These are exactly the possible similarity class types of operators on an
// n-dimensional space (over a large enough field; see q0).
std::vector<ClassType> class_types_of_size(unsigned n);

}  // namespace splitcount
