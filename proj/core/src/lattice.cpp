#include "splitcount/lattice.hpp"

#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "splitcount/errors.hpp"

namespace splitcount {

std::uint64_t default_scale_limit() {
  if (const char* env = std::getenv("SPLITCOUNT_SCALE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return 10'000'000;
}

void check_enumeration_scale(const Field& field, std::size_t ambient, std::size_t dim,
                             std::uint64_t limit) {
  // Cost metric: number of RREF candidates times the per-candidate work
  // bound q^N; both exact, no overflow thanks to bignums.
  mpz_class q(static_cast<unsigned long>(field.order()));
  mpz_class metric;
  mpz_pow_ui(metric.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(ambient));
  metric *= gaussian_binomial(static_cast<long>(ambient), static_cast<long>(dim)).eval(q);
  if (metric > mpz_class(static_cast<unsigned long>(limit)))
    throw ScaleLimitError("enumeration of " + std::to_string(dim) + "-dim subspaces of F_" +
                          std::to_string(field.order()) + "^" + std::to_string(ambient) +
                          " exceeds the scale limit (" + metric.get_str() + " > " +
                          std::to_string(limit) + ")");
}

Matrix apply_poly(const FqPoly& f, const Matrix& t) {
  if (!t.is_square()) throw DimensionMismatchError("polynomial of a non-square matrix");
  Matrix result(t.field(), t.rows(), t.cols());
  // Horner from the top coefficient down.
  for (int d = f.degree(); d >= 0; --d) {
    result = result * t;
    const Fe c = f.coefficient(static_cast<unsigned>(d));
    if (c != 0) {
      for (std::size_t i = 0; i < t.rows(); ++i)
        result.set(i, i, t.field()->add(result.at(i, i), c));
    }
  }
  return result;
}

Matrix restrict_to_invariant(const Matrix& t, const Subspace& w) {
  if (!t.is_square() || t.cols() != w.ambient() || !t.field()->same_as(*w.field()))
    throw DimensionMismatchError("restriction shape mismatch");
  const Field& f = *t.field();
  const std::size_t k = w.dim(), n = w.ambient();
  Matrix r(t.field(), k, k);
  std::vector<Fe> y(n);
  for (std::size_t i = 0; i < k; ++i) {
    t.apply(w.basis().row(i), y.data());
    // Sequential elimination against the RREF basis reads off the
    // coordinates of T·b_i in the basis b_1..b_k.
    for (std::size_t j = 0; j < k; ++j) {
      const Fe c = y[w.pivots()[j]];
      r.set(j, i, c);
      if (c == 0) continue;
      const Fe* row = w.basis().row(j);
      for (std::size_t col = w.pivots()[j]; col < n; ++col)
        if (row[col] != 0) y[col] = f.sub(y[col], f.mul(c, row[col]));
    }
    for (std::size_t col = 0; col < n; ++col)
      if (y[col] != 0)
        throw InvalidParamsError("restriction requires an invariant subspace");
  }
  return r;
}

QPoly alpha_poly(const Partition& lambda, const Partition& mu, unsigned e) {
  if (e == 0) throw InvalidParamsError("alpha_poly: degree must be positive");
  if (!lambda.contains(mu)) return {};
  const Partition lc = lambda.conjugate();
  const Partition mc = mu.conjugate();
  QPoly result(1);
  for (std::size_t i = 1; i <= lc.length(); ++i) {
    const unsigned lp = lc.part(i);
    const unsigned mp = mc.part(i);
    const unsigned mp_next = mc.part(i + 1);
    result *= QPoly::monomial(Int(1), mp_next * (lp - mp)) *
              gaussian_binomial(static_cast<long>(lp) - mp_next,
                                static_cast<long>(mp) - mp_next);
  }
  return result.inflate(e);
}

namespace {

std::vector<unsigned> strip_trailing_zeros(std::vector<unsigned> dims) {
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

void validate_dims(const std::vector<unsigned>& dims, unsigned size) {
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] > dims[i - 1])
      throw InvalidDimsError("flag dimensions must be weakly decreasing");
  if (!dims.empty() && dims[0] > size)
    throw InvalidDimsError("flag dimension " + std::to_string(dims[0]) +
                           " exceeds the ambient size " + std::to_string(size));
}

std::string dims_key(const std::vector<unsigned>& dims) {
  std::ostringstream out;
  for (unsigned d : dims) out << d << ",";
  return out.str();
}

// Flags of invariant subspaces of a primary operator of type {(e, lambda)}.
// An invariant subspace of such an operator is itself primary of some type
// μ ⊆ λ, chosen in α_λ(μ;q^e) ways; the remainder of the flag lives inside
// the restriction, which has type {(e, μ)}. Empty lambda is the type of the
// zero space and admits only zero dims.
QPoly phi_primary(unsigned e, const Partition& lambda, std::vector<unsigned> dims) {
  dims = strip_trailing_zeros(std::move(dims));
  if (dims.empty()) return QPoly(1);
  const unsigned a1 = dims[0];
  if (a1 % e != 0 || a1 / e > lambda.size()) return {};

  static std::unordered_map<std::string, QPoly> memo;
  static std::mutex memo_mutex;
  std::ostringstream key;
  key << e << "|" << lambda.str() << "|" << dims_key(dims);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key.str());
    if (it != memo.end()) return it->second;
  }

  const std::vector<unsigned> rest(dims.begin() + 1, dims.end());
  QPoly sum;
  for (const Partition& mu : subpartitions(lambda, a1 / e))
    sum += alpha_poly(lambda, mu, e) * phi_primary(e, mu, rest);

  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(key.str(), std::move(sum)).first->second;
}

// Convolution across the primary parts of a general type: distribute each
// flag dimension over the parts, one column per part, columns weakly
// decreasing (a flag inside a direct sum is a direct sum of flags).
QPoly phi_convolve(const std::vector<TypeComponent>& parts,
                   const std::vector<unsigned>& dims) {
  const std::size_t r = dims.size(), s = parts.size();
  std::vector<unsigned> sizes(s);
  for (std::size_t j = 0; j < s; ++j) sizes[j] = parts[j].degree * parts[j].shape.size();

  std::vector<std::vector<unsigned>> columns(s, std::vector<unsigned>(r, 0));
  QPoly total;

  // Fill row i (the dims[i] split) with column caps from row i-1.
  std::function<void(std::size_t)> fill_row = [&](std::size_t i) {
    if (i == r) {
      QPoly product(1);
      for (std::size_t j = 0; j < s && !product.is_zero(); ++j)
        product = product * phi_primary(parts[j].degree, parts[j].shape, columns[j]);
      total += product;
      return;
    }
    // Compose dims[i] as d_1+...+d_s with d_j ≤ min(size_j, previous row).
    std::function<void(std::size_t, unsigned)> place = [&](std::size_t j, unsigned left) {
      if (j == s) {
        if (left == 0) fill_row(i + 1);
        return;
      }
      unsigned cap = sizes[j];
      if (i > 0) cap = std::min(cap, columns[j][i - 1]);
      // Feasibility prune: the remaining columns must be able to absorb left.
      unsigned tail_cap = 0;
      for (std::size_t j2 = j + 1; j2 < s; ++j2) {
        unsigned c2 = sizes[j2];
        if (i > 0) c2 = std::min(c2, columns[j2][i - 1]);
        tail_cap += c2;
      }
      const unsigned lo = left > tail_cap ? left - tail_cap : 0;
      for (unsigned d = std::min(cap, left) + 1; d-- > lo;) {
        columns[j][i] = d;
        place(j + 1, left - d);
      }
      columns[j][i] = 0;
    };
    place(0, dims[i]);
  };
  fill_row(0);
  return total;
}

}  // namespace

QPoly phi_poly(const ClassType& tau, const std::vector<unsigned>& dims) {
  validate_dims(dims, tau.size());
  const std::vector<unsigned> trimmed = strip_trailing_zeros(dims);
  if (trimmed.empty()) return QPoly(1);
  if (tau.is_primary())
    return phi_primary(tau.components()[0].degree, tau.components()[0].shape, trimmed);

  static std::unordered_map<std::string, QPoly> memo;
  static std::mutex memo_mutex;
  const std::string key = tau.str() + "||" + dims_key(trimmed);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  QPoly result = phi_convolve(tau.components(), trimmed);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(key, std::move(result)).first->second;
}

QPoly phi_poly(const PhiQuery& query) { return phi_poly(query.tau, query.dims); }

namespace {

// Core exhaustive scan: count k-dim invariant subspaces of t, optionally
// visiting each survivor. The candidate stream comes straight from the
// enumerator's internal RREF buffer; images are accumulated column-wise so
// zero coordinates cost nothing.
Int scan_invariant(const Matrix& t, std::size_t k, std::uint64_t limit,
                   const std::function<void(const Subspace&)>* visit) {
  const std::size_t n = t.rows();
  const Field& f = *t.field();
  if (k > n) return 0;
  if (k == 0 || k == n) {
    if (visit)
      (*visit)(k == 0 ? Subspace::zero_space(t.field(), n)
                      : Subspace::full_space(t.field(), n));
    return 1;
  }
  check_enumeration_scale(f, n, k, limit);

  // Columns of t, flattened: image of a basis row is a combination of these.
  std::vector<Fe> tcols(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) tcols[j * n + i] = t.at(i, j);

  SubspaceEnumerator en(t.field(), n, k);
  std::vector<Fe> y(n);
  Int count(0);
  while (en.next()) {
    const Fe* basis = en.basis_data();
    const std::size_t* pivots = en.pivot_columns().data();
    bool invariant = true;
    for (std::size_t i = 0; i < k && invariant; ++i) {
      const Fe* row = basis + i * n;
      std::fill(y.begin(), y.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        const Fe v = row[j];
        if (v == 0) continue;
        const Fe* col = tcols.data() + j * n;
        if (v == 1) {
          for (std::size_t c = 0; c < n; ++c)
            if (col[c] != 0) y[c] = f.add(y[c], col[c]);
        } else {
          for (std::size_t c = 0; c < n; ++c)
            if (col[c] != 0) y[c] = f.add(y[c], f.mul(v, col[c]));
        }
      }
      invariant = reduce_against_rref(f, basis, pivots, k, n, y.data());
    }
    if (!invariant) continue;
    ++count;
    if (visit) (*visit)(en.current());
  }
  return count;
}

}  // namespace

Int brute_invariant_subspaces(const Matrix& t, std::size_t k, std::uint64_t scale_limit) {
  if (!t.is_square()) throw DimensionMismatchError("operator must be square");
  return scan_invariant(t, k, scale_limit, nullptr);
}

Int brute_invariant_flags(const Matrix& t, const std::vector<unsigned>& dims,
                          std::uint64_t scale_limit) {
  if (!t.is_square()) throw DimensionMismatchError("operator must be square");
  validate_dims(dims, static_cast<unsigned>(t.rows()));
  const std::vector<unsigned> trimmed = strip_trailing_zeros(dims);
  if (trimmed.empty()) return Int(1);

  const std::vector<unsigned> rest(trimmed.begin() + 1, trimmed.end());
  Int count(0);
  const std::function<void(const Subspace&)> visit = [&](const Subspace& w) {
    count += brute_invariant_flags(restrict_to_invariant(t, w), rest, scale_limit);
  };
  scan_invariant(t, trimmed[0], scale_limit, &visit);
  return count;
}

std::map<Partition, Int> classify_invariant_subspaces(const Matrix& t, const FqPoly& p,
                                                      unsigned e, unsigned k,
                                                      std::uint64_t scale_limit) {
  if (!t.is_square()) throw DimensionMismatchError("operator must be square");
  if (e == 0) throw InvalidParamsError("degree must be positive");
  std::map<Partition, Int> buckets;
  const std::function<void(const Subspace&)> visit = [&](const Subspace& w) {
    const Matrix r = restrict_to_invariant(t, w);
    const Matrix pr = apply_poly(p, r);
    // Kernel growth of powers of p(R) reads off the conjugate partition:
    // dim ker p(R)^j = e·(μ'_1 + ... + μ'_j).
    std::vector<unsigned> conj;
    Matrix power = pr;
    std::size_t prev = 0;
    while (prev < w.dim()) {
      const std::size_t ker = w.dim() - power.rank();
      const std::size_t step = (ker - prev) / e;
      if (step == 0 || (ker - prev) % e != 0)
        throw InvalidParamsError("operator is not primary of the given degree");
      conj.push_back(static_cast<unsigned>(step));
      prev = ker;
      if (prev < w.dim()) power = power * pr;
    }
    buckets[Partition(std::move(conj)).conjugate()] += 1;
  };
  scan_invariant(t, static_cast<std::size_t>(e) * k, scale_limit, &visit);
  return buckets;
}

}  // namespace splitcount
