#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace splitcount {

// Arbitrary-precision integer used for all exact counts.
using Int = mpz_class;

// Univariate polynomial in q with arbitrary-precision integer coefficients.
// Canonical form: coefficients ascending by degree, no trailing zeros (the
// zero polynomial is the empty coefficient list). All arithmetic is exact;
// evaluation commutes with the ring operations.
class QPoly {
 public:
  QPoly() = default;  // zero polynomial
  QPoly(long constant);
  QPoly(Int constant);
  explicit QPoly(std::vector<Int> coeffs);  // ascending; trailing zeros stripped

  // The monomial c·q^degree.
  static QPoly monomial(Int c, unsigned degree);
  // The variable q itself.
  static QPoly q();

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficients ascending by degree (empty for zero).
  const std::vector<Int>& coefficients() const { return coeffs_; }
  // Coefficient of q^d (zero beyond the degree).
  Int coefficient(unsigned d) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  QPoly operator-() const;
  bool operator==(const QPoly& rhs) const = default;

  // Exact value at an integer point.
  Int eval(const Int& q) const;
  // Substitute q -> q^stride (stride ≥ 1); stretches every exponent.
  QPoly inflate(unsigned stride) const;
  QPoly pow(unsigned e) const;

  // Descending-degree rendering, e.g. "q^4 + q^3 + 2*q^2 + q + 1"; "0" for zero.
  std::string str() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

// Exact quotient a / b. Throws DivisionByZeroError if b = 0 and
// NonExactDivisionError if the division leaves a remainder.
QPoly exact_div(const QPoly& a, const QPoly& b);

// Gaussian binomial coefficient as a polynomial in q. Follows the usual
// vanishing convention: zero whenever n or k is negative or k does not lie
// between 0 and n. Memoized internally (Pascal-type recurrence).
const QPoly& gaussian_binomial(long n, long k);

// Number of ordered bases of an m-dimensional space over F_q:
// γ_m(q) = (q^m−1)(q^m−q)···(q^m−q^{m−1}).
QPoly gamma_poly(unsigned m);

// The four hypergeometric-style identities used by the counting engine.
// Each is checked as an exact polynomial identity (both sides expanded as
// QPoly); sums run over the integers, with out-of-range binomials vanishing.
enum class QIdentity {
  Product,      // params (a,b,c):    [a b][b c] = [a c][a−c b−c]
  Vandermonde,  // params (a,b,r):    [a+b r] = Σ_s [a s][b r−s]·q^{s(b−r+s)}
  First,        // params (a,d,b,c), a≥d≥b≥c:
                //   Σ_s [a−b b−s][b−c s−c][a−2b+s d−2b+s]·q^{(b−s)²}
                //     = [a−b d−b][d−c b−c]
  Second,       // params (a,b,d,c), a≥b≥d≥c:
                //   Σ_s [a−b b−s][b−c s−c][s−c d−c]·q^{(b−s)²}
                //     = [b−c d−c][a−d b−d]
};

// True iff the chosen identity holds for the given parameters as identical
// polynomials. Throws ArityMismatchError if params has the wrong length
// (3 for Product/Vandermonde, 4 for First/Second).
bool check_q_identity(QIdentity which, const std::vector<long>& params);

}  // namespace splitcount
