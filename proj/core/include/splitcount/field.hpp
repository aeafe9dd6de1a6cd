#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace splitcount {

// A field element, encoded as an integer in [0, q). For F_{p^k} the encoding
// is the base-p digit expansion of the residue polynomial: an element with
// coefficients (c_0, ..., c_{k-1}) (ascending degree) is stored as Σ c_i·p^i.
// The prime subfield therefore occupies encodings 0..p-1, and 'x' is p.
using Fe = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^k}: characteristic p, degree k, arithmetic modulo a monic irreducible
// modulus of degree k over F_p. Immutable; operations are pure. Fields with
// q ≤ 256 precompute full operation tables, larger ones fall back to direct
// polynomial arithmetic.
class Field {
 public:
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  // Field order q = p^k.
  std::uint64_t order() const { return q_; }
  // Modulus coefficients over F_p, ascending degree, length k+1, monic.
  // Degree 1 uses the polynomial x, i.e. {0, 1}.
  const std::vector<Fe>& modulus() const { return modulus_; }

  Fe zero() const { return 0; }
  Fe one() const { return 1; }
  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  // Multiplicative inverse; throws DivisionByZeroError on 0.
  Fe inv(Fe a) const;
  Fe pow(Fe a, std::uint64_t e) const;

  // Base-p digits of the element, ascending degree, length k.
  std::vector<Fe> element_coeffs(Fe a) const;
  // Prime-field elements render as plain integers, extension elements as
  // coefficient vectors "[c0,c1,...]" ascending degree.
  std::string element_str(Fe a) const;

  // Structural equality: same characteristic, degree, and modulus.
  bool same_as(const Field& other) const;

  // F_{p^k} with the lexicographically smallest monic irreducible modulus,
  // comparing coefficient tuples (a_{k-1},...,a_0). Throws NotPrimeError.
  static FieldPtr make(std::uint64_t p, unsigned k = 1);

 private:
  Field(std::uint64_t p, unsigned k, std::vector<Fe> modulus);
  void build_tables();
  Fe mul_generic(Fe a, Fe b) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<Fe> modulus_;
  // Dense q×q / q tables; empty when q exceeds the table threshold.
  std::vector<Fe> add_table_;
  std::vector<Fe> mul_table_;
  std::vector<Fe> neg_table_;
  std::vector<Fe> inv_table_;
};

// Convenience alias for Field::make.
FieldPtr make_field(std::uint64_t p, unsigned k = 1);

// True iff q = p^k for a prime p and k ≥ 1; outputs the decomposition.
bool is_prime_power(std::uint64_t q, std::uint64_t* p_out = nullptr,
                    unsigned* k_out = nullptr);

// F_q for a prime power q (NotPrimePowerError otherwise), with the canonical
// lex-least modulus.
FieldPtr make_field_of_order(std::uint64_t q);

// Dense univariate polynomial over a field: coefficients ascending by degree,
// normalized (no trailing zeros; zero polynomial has no coefficients).
class FqPoly {
 public:
  explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
  FqPoly(FieldPtr field, std::vector<Fe> coeffs);

  // x itself.
  static FqPoly x(FieldPtr field);
  static FqPoly constant(FieldPtr field, Fe c);
  // The monic degree-n polynomial whose non-leading coefficient tuple
  // (a_{n-1},...,a_0) is the base-q expansion of index; index < q^n. This is
  // exactly the lexicographic enumeration order used for modulus selection.
  static FqPoly monic_from_index(FieldPtr field, unsigned n, std::uint64_t index);

  const FieldPtr& field() const { return field_; }
  const std::vector<Fe>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Fe coefficient(unsigned d) const;

  FqPoly operator+(const FqPoly& rhs) const;
  FqPoly operator-(const FqPoly& rhs) const;
  FqPoly operator*(const FqPoly& rhs) const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& rhs) const;
  FqPoly pow(unsigned e) const;
  bool operator==(const FqPoly& rhs) const;

  // e.g. "x^3 + x + 1"; extension-field coefficients render as vectors.
  std::string str() const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Fe> coeffs_;
};

// Irreducibility over the coefficient field, by trial division against all
// monic polynomials of degree ≤ deg/2. Exact and exhaustive (desk scale).
bool is_irreducible(const FqPoly& f);

// The `count` lexicographically smallest monic irreducible polynomials of the
// given degree over the base field, in order. Throws
// NotEnoughIrreduciblesError when fewer exist.
std::vector<FqPoly> enumerate_irreducibles(const FieldPtr& base, unsigned degree,
                                           std::size_t count);

}  // namespace splitcount
