#include "splitcount/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "splitcount/errors.hpp"

namespace splitcount {

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(Int constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::monomial(Int c, unsigned degree) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, Int(0));
    p.coeffs_[degree] = std::move(c);
  }
  return p;
}

QPoly QPoly::q() { return monomial(Int(1), 1); }

Int QPoly::coefficient(unsigned d) const {
  return d < coeffs_.size() ? coeffs_[d] : Int(0);
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Int> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QPoly(std::move(prod));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly QPoly::operator-() const {
  QPoly neg(*this);
  for (auto& c : neg.coeffs_) c = -c;
  return neg;
}

Int QPoly::eval(const Int& q) const {
  Int value(0);  // Horner, highest degree first
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * q + *it;
  return value;
}

QPoly QPoly::inflate(unsigned stride) const {
  if (stride == 0) throw InvalidParamsError("inflate: stride must be positive");
  if (stride == 1 || is_zero()) return *this;
  std::vector<Int> stretched((coeffs_.size() - 1) * stride + 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) stretched[i * stride] = coeffs_[i];
  return QPoly(std::move(stretched));
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result(1);
  QPoly base(*this);
  for (; e > 0; e >>= 1) {
    if (e & 1u) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool leading = true;
  for (int d = degree(); d >= 0; --d) {
    const Int& c = coeffs_[static_cast<size_t>(d)];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (leading) {
      if (c < 0) out << "-";
      leading = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) {
      out << mag.get_str();
      if (d > 0) out << "*";
    }
    if (d > 0) {
      out << "q";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZeroError("exact_div: divisor is zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw NonExactDivisionError("exact_div: divisor degree exceeds dividend degree");

  // Standard long division; every quotient coefficient must come out an
  // exact integer and the final remainder must vanish.
  std::vector<Int> rem(a.coefficients());
  const auto& div = b.coefficients();
  const Int& lead = div.back();
  std::vector<Int> quot(rem.size() - div.size() + 1, Int(0));
  for (size_t i = quot.size(); i-- > 0;) {
    Int& top = rem[i + div.size() - 1];
    if (top == 0) continue;
    Int c, r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw NonExactDivisionError("exact_div: remainder is nonzero");
    quot[i] = c;
    for (size_t j = 0; j < div.size(); ++j) rem[i + j] -= c * div[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw NonExactDivisionError("exact_div: remainder is nonzero");
  return QPoly(std::move(quot));
}

const QPoly& gaussian_binomial(long n, long k) {
  static const QPoly kZero;
  static const QPoly kOne(1);
  if (n < 0 || k < 0 || k > n) return kZero;
  if (k == 0 || k == n) return kOne;
  if (n - k < k) k = n - k;  // symmetry halves the table

  static std::map<std::pair<long, long>, QPoly> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  }
  // Compute with the lock released: the recursion re-enters this function.
  // [n k] = [n−1 k−1] + q^k·[n−1 k]; recursion depth is at most n.
  QPoly value = gaussian_binomial(n - 1, k - 1) +
                QPoly::monomial(Int(1), static_cast<unsigned>(k)) *
                    gaussian_binomial(n - 1, k);
  std::lock_guard<std::mutex> lock(memo_mutex);
  // Map references stay valid across inserts, so returning it->second is safe.
  return memo.emplace(std::make_pair(n, k), std::move(value)).first->second;
}

QPoly gamma_poly(unsigned m) {
  if (m == 0) throw InvalidParamsError("gamma_poly: m must be positive");
  QPoly result(1);
  const QPoly qm = QPoly::monomial(Int(1), m);
  for (unsigned i = 0; i < m; ++i) result *= qm - QPoly::monomial(Int(1), i);
  return result;
}

namespace {

void require_arity(const std::vector<long>& params, size_t arity, const char* name) {
  if (params.size() != arity)
    throw ArityMismatchError(std::string("check_q_identity: ") + name + " takes " +
                             std::to_string(arity) + " parameters, got " +
                             std::to_string(params.size()));
}

}  // namespace

bool check_q_identity(QIdentity which, const std::vector<long>& params) {
  switch (which) {
    case QIdentity::Product: {
      require_arity(params, 3, "product");
      const long a = params[0], b = params[1], c = params[2];
      QPoly lhs = gaussian_binomial(a, b) * gaussian_binomial(b, c);
      QPoly rhs = gaussian_binomial(a, c) * gaussian_binomial(a - c, b - c);
      return lhs == rhs;
    }
    case QIdentity::Vandermonde: {
      require_arity(params, 3, "vandermonde");
      const long a = params[0], b = params[1], r = params[2];
      QPoly sum;
      for (long s = 0; s <= r; ++s) {
        const QPoly& left = gaussian_binomial(a, s);
        const QPoly& right = gaussian_binomial(b, r - s);
        if (left.is_zero() || right.is_zero()) continue;
        // right ≠ 0 forces r−s ≤ b, so the exponent is nonnegative.
        sum += left * right * QPoly::monomial(Int(1), static_cast<unsigned>(s * (b - r + s)));
      }
      return gaussian_binomial(a + b, r) == sum;
    }
    case QIdentity::First: {
      require_arity(params, 4, "first");
      const long a = params[0], d = params[1], b = params[2], c = params[3];
      // Summands vanish outside c ≤ s ≤ b via the first two binomials.
      QPoly sum;
      for (long s = c; s <= b; ++s) {
        QPoly term = gaussian_binomial(a - b, b - s) * gaussian_binomial(b - c, s - c) *
                     gaussian_binomial(a - 2 * b + s, d - 2 * b + s);
        if (term.is_zero()) continue;
        sum += term * QPoly::monomial(Int(1), static_cast<unsigned>((b - s) * (b - s)));
      }
      return sum == gaussian_binomial(a - b, d - b) * gaussian_binomial(d - c, b - c);
    }
    case QIdentity::Second: {
      require_arity(params, 4, "second");
      const long a = params[0], b = params[1], d = params[2], c = params[3];
      QPoly sum;
      for (long s = c; s <= b; ++s) {
        QPoly term = gaussian_binomial(a - b, b - s) * gaussian_binomial(b - c, s - c) *
                     gaussian_binomial(s - c, d - c);
        if (term.is_zero()) continue;
        sum += term * QPoly::monomial(Int(1), static_cast<unsigned>((b - s) * (b - s)));
      }
      return sum == gaussian_binomial(b - c, d - c) * gaussian_binomial(a - d, b - d);
    }
  }
  throw InvalidParamsError("check_q_identity: unknown identity");
}

}  // namespace splitcount
