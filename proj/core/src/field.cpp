#include "splitcount/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "splitcount/errors.hpp"

namespace splitcount {

namespace {

constexpr std::uint64_t kTableThreshold = 256;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool is_prime_power(std::uint64_t q, std::uint64_t* p_out, unsigned* k_out) {
  if (q < 2) return false;
  std::uint64_t p = q;
  // Smallest prime factor; q is a prime power iff q is a power of it.
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

Field::Field(std::uint64_t p, unsigned k, std::vector<Fe> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k_; ++i) {
    if (q_ > (std::uint64_t(1) << 32) / p_)
      throw InvalidParamsError("field order exceeds the supported range");
    q_ *= p_;
  }
  if (q_ <= kTableThreshold) build_tables();
}

void Field::build_tables() {
  const auto q = static_cast<std::size_t>(q_);
  neg_table_.resize(q);
  inv_table_.assign(q, 0);
  add_table_.resize(q * q);
  mul_table_.resize(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      // Digitwise sum mod p.
      Fe s = 0, pw = 1;
      std::uint64_t ra = a, rb = b;
      for (unsigned i = 0; i < k_; ++i) {
        s += static_cast<Fe>((ra % p_ + rb % p_) % p_ * pw);
        ra /= p_;
        rb /= p_;
        pw = static_cast<Fe>(pw * p_);
      }
      add_table_[a * q + b] = s;
      mul_table_[a * q + b] = mul_generic(static_cast<Fe>(a), static_cast<Fe>(b));
    }
  }
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (add_table_[a * q + b] == 0) neg_table_[a] = static_cast<Fe>(b);
      if (a != 0 && mul_table_[a * q + b] == 1) inv_table_[a] = static_cast<Fe>(b);
    }
  }
}

Fe Field::mul_generic(Fe a, Fe b) const {
  if (k_ == 1) return static_cast<Fe>(std::uint64_t(a) * b % p_);
  // Convolve the digit polynomials, then reduce modulo the (monic) modulus.
  std::vector<std::uint64_t> da(k_), db(k_), prod(2 * k_ - 1, 0);
  std::uint64_t ra = a, rb = b;
  for (unsigned i = 0; i < k_; ++i, ra /= p_, rb /= p_) {
    da[i] = ra % p_;
    db[i] = rb % p_;
  }
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j)
      prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - modulus_[j]) * c) % p_;
  }
  Fe result = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i, pw = static_cast<Fe>(pw * p_))
    result += static_cast<Fe>(prod[i] * pw);
  return result;
}

Fe Field::add(Fe a, Fe b) const {
  if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
  if (k_ == 1) return static_cast<Fe>((std::uint64_t(a) + b) % p_);
  Fe s = 0, pw = 1;
  std::uint64_t ra = a, rb = b;
  for (unsigned i = 0; i < k_; ++i, ra /= p_, rb /= p_, pw = static_cast<Fe>(pw * p_))
    s += static_cast<Fe>((ra % p_ + rb % p_) % p_ * pw);
  return s;
}

Fe Field::neg(Fe a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  if (k_ == 1) return a == 0 ? 0 : static_cast<Fe>(p_ - a);
  Fe s = 0, pw = 1;
  std::uint64_t ra = a;
  for (unsigned i = 0; i < k_; ++i, ra /= p_, pw = static_cast<Fe>(pw * p_)) {
    const std::uint64_t d = ra % p_;
    s += static_cast<Fe>((d == 0 ? 0 : p_ - d) * pw);
  }
  return s;
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
  return mul_generic(a, b);
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw DivisionByZeroError("field inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  Fe result = 1;
  for (Fe base = a; e > 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::vector<Fe> Field::element_coeffs(Fe a) const {
  std::vector<Fe> digits(k_);
  std::uint64_t r = a;
  for (unsigned i = 0; i < k_; ++i, r /= p_) digits[i] = static_cast<Fe>(r % p_);
  return digits;
}

std::string Field::element_str(Fe a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream out;
  out << "[";
  const auto digits = element_coeffs(a);
  for (unsigned i = 0; i < k_; ++i) {
    if (i) out << ",";
    out << digits[i];
  }
  out << "]";
  return out.str();
}

bool Field::same_as(const Field& other) const {
  return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

FieldPtr Field::make(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw NotPrimeError("field characteristic " + std::to_string(p) +
                                        " is not prime");
  if (k == 0) throw InvalidParamsError("field degree must be positive");
  if (k == 1)
    return FieldPtr(new Field(p, 1, {0, 1}));  // modulus x: the prime field itself
  // Scan monic degree-k polynomials in lexicographic order of their
  // coefficient tuples (a_{k-1},...,a_0); the first irreducible one wins.
  FieldPtr base = make(p, 1);
  unsigned __int128 total = 1;
  for (unsigned i = 0; i < k; ++i) total *= p;
  for (unsigned __int128 idx = 0; idx < total; ++idx) {
    FqPoly candidate = FqPoly::monic_from_index(base, k, static_cast<std::uint64_t>(idx));
    if (is_irreducible(candidate)) {
      std::vector<Fe> modulus(candidate.coeffs().begin(), candidate.coeffs().end());
      return FieldPtr(new Field(p, k, std::move(modulus)));
    }
  }
  // Unreachable: irreducibles of every degree exist over every finite field.
  throw Error("no irreducible modulus found");
}

FieldPtr make_field(std::uint64_t p, unsigned k) { return Field::make(p, k); }

FieldPtr make_field_of_order(std::uint64_t q) {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (!is_prime_power(q, &p, &k))
    throw NotPrimePowerError(std::to_string(q) + " is not a prime power");
  return Field::make(p, k);
}

// --- FqPoly ---

FqPoly::FqPoly(FieldPtr field, std::vector<Fe> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

void FqPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FqPoly FqPoly::x(FieldPtr field) { return FqPoly(std::move(field), {0, 1}); }

FqPoly FqPoly::constant(FieldPtr field, Fe c) { return FqPoly(std::move(field), {c}); }

FqPoly FqPoly::monic_from_index(FieldPtr field, unsigned n, std::uint64_t index) {
  const std::uint64_t q = field->order();
  std::vector<Fe> coeffs(n + 1, 0);
  coeffs[n] = 1;
  // Big-endian base-q digits of index: digit for x^{n-1} is most significant,
  // so ascending index matches lexicographic order on (a_{n-1},...,a_0).
  for (unsigned i = 0; i < n; ++i, index /= q) coeffs[i] = static_cast<Fe>(index % q);
  return FqPoly(std::move(field), std::move(coeffs));
}

Fe FqPoly::coefficient(unsigned d) const {
  return d < coeffs_.size() ? coeffs_[d] : 0;
}

FqPoly FqPoly::operator+(const FqPoly& rhs) const {
  const Field& f = *field_;
  std::vector<Fe> sum(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < sum.size(); ++i)
    sum[i] = f.add(coefficient(static_cast<unsigned>(i)),
                   rhs.coefficient(static_cast<unsigned>(i)));
  return FqPoly(field_, std::move(sum));
}

FqPoly FqPoly::operator-(const FqPoly& rhs) const {
  const Field& f = *field_;
  std::vector<Fe> diff(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = f.sub(coefficient(static_cast<unsigned>(i)),
                    rhs.coefficient(static_cast<unsigned>(i)));
  return FqPoly(field_, std::move(diff));
}

FqPoly FqPoly::operator*(const FqPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return FqPoly(field_);
  const Field& f = *field_;
  std::vector<Fe> prod(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      prod[i + j] = f.add(prod[i + j], f.mul(coeffs_[i], rhs.coeffs_[j]));
  }
  return FqPoly(field_, std::move(prod));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& rhs) const {
  if (rhs.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  const Field& f = *field_;
  std::vector<Fe> rem = coeffs_;
  if (degree() < rhs.degree()) return {FqPoly(field_), *this};
  std::vector<Fe> quot(coeffs_.size() - rhs.coeffs_.size() + 1, 0);
  const Fe lead_inv = f.inv(rhs.coeffs_.back());
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Fe c = f.mul(rem[i + rhs.coeffs_.size() - 1], lead_inv);
    if (c == 0) continue;
    quot[i] = c;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      rem[i + j] = f.sub(rem[i + j], f.mul(c, rhs.coeffs_[j]));
  }
  return {FqPoly(field_, std::move(quot)), FqPoly(field_, std::move(rem))};
}

FqPoly FqPoly::pow(unsigned e) const {
  FqPoly result = constant(field_, 1);
  FqPoly base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

bool FqPoly::operator==(const FqPoly& rhs) const {
  return field_->same_as(*rhs.field_) && coeffs_ == rhs.coeffs_;
}

std::string FqPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool leading = true;
  for (int d = degree(); d >= 0; --d) {
    const Fe c = coeffs_[static_cast<size_t>(d)];
    if (c == 0) continue;
    if (!leading) out << " + ";
    leading = false;
    if (c != 1 || d == 0) {
      out << field_->element_str(c);
      if (d > 0) out << "*";
    }
    if (d > 0) {
      out << "x";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const std::uint64_t q = f.field()->order();
  for (int d = 1; 2 * d <= n; ++d) {
    unsigned __int128 total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (unsigned __int128 idx = 0; idx < total; ++idx) {
      FqPoly divisor =
          FqPoly::monic_from_index(f.field(), static_cast<unsigned>(d),
                                   static_cast<std::uint64_t>(idx));
      if (f.divmod(divisor).second.is_zero()) return false;
    }
  }
  return true;
}

std::vector<FqPoly> enumerate_irreducibles(const FieldPtr& base, unsigned degree,
                                           std::size_t count) {
  if (degree == 0) throw InvalidParamsError("irreducible degree must be positive");
  std::vector<FqPoly> found;
  unsigned __int128 total = 1;
  for (unsigned i = 0; i < degree; ++i) total *= base->order();
  for (unsigned __int128 idx = 0; idx < total && found.size() < count; ++idx) {
    FqPoly candidate =
        FqPoly::monic_from_index(base, degree, static_cast<std::uint64_t>(idx));
    if (is_irreducible(candidate)) found.push_back(std::move(candidate));
  }
  if (found.size() < count)
    throw NotEnoughIrreduciblesError(
        "only " + std::to_string(found.size()) + " monic irreducibles of degree " +
        std::to_string(degree) + " exist over F_" + std::to_string(base->order()) +
        ", needed " + std::to_string(count));
  return found;
}

}  // namespace splitcount
