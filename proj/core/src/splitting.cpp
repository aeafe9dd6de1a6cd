#include "splitcount/splitting.hpp"

#include <vector>

#include "splitcount/errors.hpp"
#include "splitcount/field.hpp"
#include "splitcount/subspace.hpp"

namespace splitcount {

namespace {

void require_positive(unsigned m, unsigned d) {
  if (m == 0 || d == 0) throw InvalidParamsError("m and d must be positive");
}

void require_size_match(unsigned m, unsigned d, const ClassType& tau) {
  require_positive(m, d);
  if (static_cast<std::size_t>(m) * d != tau.size())
    throw SizeMismatchError("m*d = " + std::to_string(static_cast<std::size_t>(m) * d) +
                            " does not equal the type size " + std::to_string(tau.size()));
}

}  // namespace

FlagTuple splitting_tuple(unsigned m, unsigned d) {
  require_positive(m, d);
  FlagTuple t;
  t.ambient = static_cast<std::size_t>(m) * d;
  for (unsigned i = d - 1; i >= 1; --i) t.pairs.emplace_back(i * m, (i - 1) * m);
  return t;
}

QPoly sigma_poly(unsigned m, unsigned d, const ClassType& tau) {
  require_size_match(m, d, tau);
  if (d == 1) return QPoly(1);
  SymbolicBackend backend(tau);
  return backend.count(splitting_tuple(m, d));
}

QPoly sigma_poly(const SigmaQuery& query) { return sigma_poly(query.m, query.d, query.tau); }

Int sigma_at(unsigned m, unsigned d, const ClassType& tau, std::uint64_t q) {
  require_size_match(m, d, tau);
  std::uint64_t p = 0;
  unsigned k = 0;
  if (!is_prime_power(q, &p, &k))
    throw NotPrimePowerError("q = " + std::to_string(q) + " is not a prime power");
  const std::uint64_t least = q0(tau);
  if (q < least)
    throw FieldTooSmallError("the type needs q >= " + std::to_string(least) +
                             ", got q = " + std::to_string(q));
  return sigma_poly(m, d, tau).eval(Int(static_cast<unsigned long>(q)));
}

Int sigma_at(const SigmaQuery& query, std::uint64_t q) {
  return sigma_at(query.m, query.d, query.tau, q);
}

QPoly sigma_closed_irreducible(unsigned m, unsigned d) {
  require_positive(m, d);
  const unsigned n = m * d;
  const QPoly top = QPoly::monomial(Int(1), n) - QPoly(1);
  const QPoly bottom = QPoly::monomial(Int(1), m) - QPoly(1);
  return exact_div(top, bottom) * QPoly::monomial(Int(1), m * (m - 1) * (d - 1));
}

QPoly sigma_closed_cyclic_nilpotent(unsigned m, unsigned d) {
  require_positive(m, d);
  return QPoly::monomial(Int(1), m * m * (d - 1));
}

QPoly shift_partial_splitting_count(std::size_t n, unsigned m, unsigned d) {
  require_positive(m, d);
  const std::size_t md = static_cast<std::size_t>(m) * d;
  if (n < md)
    throw InvalidParamsError("ambient dimension " + std::to_string(n) +
                             " is smaller than m*d = " + std::to_string(md));
  return gaussian_binomial(static_cast<long>(n - md + m), m) *
         QPoly::monomial(Int(1), m * m * (d - 1));
}

QPoly cyclic_nilpotent_flag_closed(const FlagTuple& t) {
  if (validate_tuple(t) != TupleStatus::Valid)
    throw InvalidParamsError("closed form requires a valid tuple");
  QPoly result(1);
  for (std::size_t i = 1; i <= t.length(); ++i) {
    const long prev1 = t.a(i - 1, 1), a1 = t.a(i, 1), a2 = t.a(i, 2), next1 = t.a(i + 1, 1);
    result *= gaussian_binomial(prev1 - a1, a1 - a2);
    result *= gaussian_binomial(a1 - next1, a2 - next1);
    result *= QPoly::monomial(Int(1), static_cast<unsigned>((a1 - a2) * (a1 - a2)));
  }
  return result;
}

Int brute_sigma(const Matrix& t, unsigned m, unsigned d, std::uint64_t scale_limit) {
  require_positive(m, d);
  const std::size_t n = static_cast<std::size_t>(m) * d;
  if (!t.is_square() || t.rows() != n)
    throw SizeMismatchError("operator must be " + std::to_string(n) + "x" + std::to_string(n));
  check_enumeration_scale(*t.field(), n, m, scale_limit);

  Int count(0);
  SubspaceEnumerator en(t.field(), n, m);
  Matrix stacked(t.field(), n, n);
  std::vector<Fe> row(n), image(n);
  while (en.next()) {
    // Rows 0..m-1 hold a basis of W; each further block applies T once more.
    for (std::size_t i = 0; i < m; ++i) {
      const Fe* src = en.basis_data() + i * n;
      for (std::size_t j = 0; j < n; ++j) row[j] = src[j];
      for (std::size_t j = 0; j < n; ++j) stacked.set(i, j, row[j]);
      for (unsigned block = 1; block < d; ++block) {
        t.apply(row.data(), image.data());
        row.swap(image);
        for (std::size_t j = 0; j < n; ++j) stacked.set(block * m + i, j, row[j]);
      }
    }
    if (stacked.rank() == n) ++count;
  }
  return count;
}

Rat kappa(const SigmaQuery& query, std::uint64_t q) {
  const Int sigma = sigma_at(query, q);
  const Int gamma = gamma_poly(query.m).eval(Int(static_cast<unsigned long>(q)));
  Int denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(query.m) * query.m * query.d);
  Rat result(gamma * sigma, denom);
  result.canonicalize();
  return result;
}

Rat kappa(unsigned m, unsigned d, const ClassType& tau, std::uint64_t q) {
  return kappa(SigmaQuery{m, d, tau}, q);
}

Int toeplitz_count(std::uint64_t q, unsigned m, unsigned d, bool brute,
                   std::uint64_t scale_limit) {
  require_positive(m, d);
  if (!brute) {
    std::uint64_t p = 0;
    unsigned k = 0;
    if (!is_prime_power(q, &p, &k))
      throw NotPrimePowerError("q = " + std::to_string(q) + " is not a prime power");
    const QPoly formula =
        gamma_poly(m) * QPoly::monomial(Int(1), m * m * (d - 1));
    return formula.eval(Int(static_cast<unsigned long>(q)));
  }

  FieldPtr field = make_field_of_order(q);
  const std::size_t n = static_cast<std::size_t>(m) * d;
  const std::size_t cells = n * m;  // free entries of the first column block
  Int metric;
  mpz_ui_pow_ui(metric.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(cells));
  if (metric > Int(static_cast<unsigned long>(scale_limit)))
    throw ScaleLimitError("enumerating q^" + std::to_string(cells) +
                          " first blocks exceeds the scale limit");

  // Column block j is the first block shifted down j rows; the whole matrix
  // is determined by the n·m entries of the first block.
  std::vector<Fe> block(cells, 0);
  Matrix mat(field, n, n);
  Int count(0);
  bool done = false;
  while (!done) {
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned j = 0; j < d; ++j)
        for (unsigned c = 0; c < m; ++c)
          mat.set(i, static_cast<std::size_t>(j) * m + c,
                  i >= j ? block[(i - j) * m + c] : 0);
    if (mat.rank() == n) ++count;
    // Odometer step over all base-q fillings.
    std::size_t pos = 0;
    for (; pos < cells; ++pos) {
      if (++block[pos] < field->order()) break;
      block[pos] = 0;
    }
    done = pos == cells;
  }
  return count;
}

}  // namespace splitcount
