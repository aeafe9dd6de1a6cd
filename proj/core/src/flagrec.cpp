#include "splitcount/flagrec.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "splitcount/errors.hpp"

namespace splitcount {

unsigned FlagTuple::a(std::size_t i, int j) const {
  if (j != 1 && j != 2) throw InvalidParamsError("tuple entry index must be 1 or 2");
  if (i == 0) return static_cast<unsigned>(ambient);
  if (i > pairs.size()) return 0;
  return j == 1 ? pairs[i - 1].first : pairs[i - 1].second;
}

std::string FlagTuple::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ";";
    out << pairs[i].first << "," << pairs[i].second;
  }
  return out.str();
}

FlagTuple parse_tuple(const std::string& text, std::size_t ambient) {
  FlagTuple t;
  t.ambient = ambient;
  if (text.empty()) return t;  // the empty tuple
  std::istringstream in(text);
  std::string pair_text;
  while (std::getline(in, pair_text, ';')) {
    const auto comma = pair_text.find(',');
    if (comma == std::string::npos || pair_text.find(',', comma + 1) != std::string::npos)
      throw ParseError("tuple pair \"" + pair_text + "\" must be \"a,b\"");
    const std::string left = pair_text.substr(0, comma);
    const std::string right = pair_text.substr(comma + 1);
    for (const std::string* part : {&left, &right})
      if (part->empty() || part->find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("tuple entry \"" + *part + "\" is not an unsigned integer");
    t.pairs.emplace_back(static_cast<unsigned>(std::stoul(left)),
                         static_cast<unsigned>(std::stoul(right)));
  }
  return t;
}

TupleStatus validate_tuple(const FlagTuple& t) {
  const std::size_t r = t.length();
  unsigned prev = static_cast<unsigned>(t.ambient);
  for (std::size_t i = 1; i <= r; ++i) {
    const unsigned a1 = t.a(i, 1), a2 = t.a(i, 2);
    if (a1 > prev || a2 > a1) return TupleStatus::Empty;
    prev = a2;
    // Feasibility of the intersection dimension: dim(W + TW) ≤ dim of the
    // enclosing space forces a_{i-1,1} ≥ 2a_{i,1} − a_{i,2}.
    if (2 * static_cast<long>(a1) - static_cast<long>(a2) >
        static_cast<long>(t.a(i - 1, 1)))
      return TupleStatus::Empty;
  }
  return TupleStatus::Valid;
}

std::strong_ordering compare_tuples(const FlagTuple& t1, const FlagTuple& t2) {
  if (t1.length() != t2.length())
    throw LengthMismatchError("tuples of different lengths are incomparable");
  for (std::size_t i = 0; i < t1.length(); ++i) {
    const auto& [a1, b1] = t1.pairs[i];
    const auto& [a2, b2] = t2.pairs[i];
    if (a1 != a2) return a1 > a2 ? std::strong_ordering::greater : std::strong_ordering::less;
    // Equal first entries: the smaller second entry dominates.
    if (b1 != b2) return b1 < b2 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

namespace {

bool value_is_zero(const QPoly& v) { return v.is_zero(); }
bool value_is_zero(const Int& v) { return v == 0; }

bool is_diagonal(const FlagTuple& t) {
  for (const auto& [a, b] : t.pairs)
    if (a != b) return false;
  return true;
}

std::vector<unsigned> diagonal_dims(const FlagTuple& t) {
  std::vector<unsigned> dims;
  dims.reserve(t.length());
  for (const auto& [a, b] : t.pairs) dims.push_back(a);
  return dims;
}

// Σ over (j_1..j_r) ∈ A of cnt([(a_{1,2},j_1),...,(a_{r,2},j_r)]) weighted by
// Π_i binom(a_{i-1,2} − (2a_{i,2} − j_i), a_{i,1} − (2a_{i,2} − j_i)), with
// max(a_{i+1,2}, 2a_{i,2} − a_{i,1}) ≤ j_i ≤ a_{i,2}. When descend_from is
// given, every generated tuple is checked to lie strictly below it in the
// tuple order (the recursion's termination invariant).
template <class Value, class CountFn, class BinomFn>
Value a_side_sum(const FlagTuple& t, const CountFn& cnt, const BinomFn& binom,
                 const FlagTuple* descend_from) {
  const std::size_t r = t.length();
  FlagTuple sub;
  sub.ambient = t.ambient;
  sub.pairs.resize(r);
  Value total(0);
  std::function<void(std::size_t, const Value&)> rec = [&](std::size_t i,
                                                           const Value& coeff) {
    if (i > r) {
      if (descend_from &&
          compare_tuples(sub, *descend_from) != std::strong_ordering::less)
        throw Error("internal: flag recursion failed to descend");
      total += coeff * cnt(sub);
      return;
    }
    const long a1 = t.a(i, 1), a2 = t.a(i, 2);
    const long lo = std::max<long>(t.a(i + 1, 2), 2 * a2 - a1);
    for (long j = lo; j <= a2; ++j) {
      const Value factor = binom(t.a(i - 1, 2) - (2 * a2 - j), a1 - (2 * a2 - j));
      if (value_is_zero(factor)) continue;
      sub.pairs[i - 1] = {static_cast<unsigned>(a2), static_cast<unsigned>(j)};
      rec(i + 1, coeff * factor);
    }
  };
  rec(1, Value(1));
  return total;
}

// Σ over (k_1..k_r), a_{i,2} ≤ k_i ≤ a_{i,1}, of cnt([(a_{1,1},k_1),...])
// weighted by Π_i binom(k_i − a_{i+1,1}, a_{i,2} − a_{i+1,1}); optionally
// excluding the diagonal pick k = (a_{1,2},...,a_{r,2}).
template <class Value, class CountFn, class BinomFn>
Value b_side_sum(const FlagTuple& t, const CountFn& cnt, const BinomFn& binom,
                 bool exclude_diagonal, const FlagTuple* descend_from) {
  const std::size_t r = t.length();
  FlagTuple sub;
  sub.ambient = t.ambient;
  sub.pairs.resize(r);
  Value total(0);
  std::function<void(std::size_t, const Value&, bool)> rec =
      [&](std::size_t i, const Value& coeff, bool on_diagonal) {
        if (i > r) {
          if (exclude_diagonal && on_diagonal) return;
          if (descend_from &&
              compare_tuples(sub, *descend_from) != std::strong_ordering::less)
            throw Error("internal: flag recursion failed to descend");
          total += coeff * cnt(sub);
          return;
        }
        const long a1 = t.a(i, 1), a2 = t.a(i, 2);
        const long next1 = t.a(i + 1, 1);
        for (long k = a2; k <= a1; ++k) {
          const Value factor = binom(k - next1, a2 - next1);
          if (value_is_zero(factor)) continue;
          sub.pairs[i - 1] = {static_cast<unsigned>(a1), static_cast<unsigned>(k)};
          rec(i + 1, coeff * factor, on_diagonal && k == a2);
        }
      };
  rec(1, Value(1), true);
  return total;
}

// Memoized two-sided recursion, generic over the value ring.
template <class Value>
struct EngineState {
  std::size_t ambient = 0;
  std::function<Value(const std::vector<unsigned>&)> base;
  std::function<Value(long, long)> binom;
  std::map<std::vector<unsigned>, Value> memo;

  Value count(const FlagTuple& t) {
    if (t.ambient != ambient)
      throw InvalidBackendError("tuple ambient dimension " + std::to_string(t.ambient) +
                                " does not match the backend's " +
                                std::to_string(ambient));
    if (validate_tuple(t) == TupleStatus::Empty) return Value(0);
    if (is_diagonal(t)) return base(diagonal_dims(t));

    std::vector<unsigned> key;
    key.reserve(2 * t.length());
    for (const auto& [a, b] : t.pairs) {
      key.push_back(a);
      key.push_back(b);
    }
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto cnt = [this](const FlagTuple& s) { return count(s); };
    Value result = a_side_sum<Value>(t, cnt, binom, &t) -
                   b_side_sum<Value>(t, cnt, binom, /*exclude_diagonal=*/true, &t);
    return memo.emplace(std::move(key), std::move(result)).first->second;
  }
};

}  // namespace

struct SymbolicBackend::State : EngineState<QPoly> {};

SymbolicBackend::SymbolicBackend(ClassType tau)
    : tau_(std::move(tau)), state_(new State) {
  if (tau_.components().empty())
    throw InvalidParamsError("symbolic backend needs a nonempty class type");
  state_->ambient = tau_.size();
  const ClassType& type = tau_;
  state_->base = [type](const std::vector<unsigned>& dims) { return phi_poly(type, dims); };
  state_->binom = [](long n, long k) { return gaussian_binomial(n, k); };
}

SymbolicBackend::~SymbolicBackend() = default;
SymbolicBackend::SymbolicBackend(SymbolicBackend&&) noexcept = default;
SymbolicBackend& SymbolicBackend::operator=(SymbolicBackend&&) noexcept = default;

std::size_t SymbolicBackend::ambient() const { return state_->ambient; }

QPoly SymbolicBackend::base_case(const std::vector<unsigned>& dims) const {
  return phi_poly(tau_, dims);
}

QPoly SymbolicBackend::count(const FlagTuple& t) { return state_->count(t); }

struct ConcreteBackend::State : EngineState<Int> {};

ConcreteBackend::ConcreteBackend(Matrix t, std::uint64_t scale_limit)
    : t_(std::move(t)), scale_limit_(scale_limit), state_(new State) {
  if (!t_.is_square())
    throw DimensionMismatchError("concrete backend needs a square operator");
  state_->ambient = t_.rows();
  const Matrix& op = t_;
  const std::uint64_t limit = scale_limit_;
  state_->base = [&op, limit](const std::vector<unsigned>& dims) {
    return brute_invariant_flags(op, dims, limit);
  };
  const Int q(static_cast<unsigned long>(t_.field()->order()));
  auto cache = std::make_shared<std::map<std::pair<long, long>, Int>>();
  state_->binom = [q, cache](long n, long k) {
    if (auto it = cache->find({n, k}); it != cache->end()) return it->second;
    Int value = gaussian_binomial(n, k).eval(q);
    return cache->emplace(std::make_pair(n, k), std::move(value)).first->second;
  };
}

ConcreteBackend::~ConcreteBackend() = default;
ConcreteBackend::ConcreteBackend(ConcreteBackend&&) noexcept = default;
ConcreteBackend& ConcreteBackend::operator=(ConcreteBackend&&) noexcept = default;

Int ConcreteBackend::base_case(const std::vector<unsigned>& dims) const {
  return brute_invariant_flags(t_, dims, scale_limit_);
}

Int ConcreteBackend::count(const FlagTuple& t) { return state_->count(t); }

QPoly flag_count(SymbolicBackend& backend, const FlagTuple& t) { return backend.count(t); }
Int flag_count(ConcreteBackend& backend, const FlagTuple& t) { return backend.count(t); }

namespace {

// Visit every subspace W with lower ⊆ W ⊆ F_q^N and dim W = dim: lift each
// subspace of the quotient through the complement (non-pivot) coordinates.
void for_each_superspace(const Subspace& lower, std::size_t dim, std::uint64_t limit,
                         const std::function<void(const Subspace&)>& fn) {
  const std::size_t n = lower.ambient(), u = lower.dim();
  if (dim < u || dim > n) return;
  if (dim == u) {
    fn(lower);
    return;
  }
  std::vector<std::size_t> complement;
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : lower.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) complement.push_back(c);
  }
  check_enumeration_scale(*lower.field(), n - u, dim - u, limit);
  SubspaceEnumerator en(lower.field(), n - u, dim - u);
  while (en.next()) {
    Matrix stacked(lower.field(), dim, n);
    for (std::size_t i = 0; i < u; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked.set(i, j, lower.basis().at(i, j));
    for (std::size_t i = 0; i + u < dim; ++i)
      for (std::size_t j = 0; j < complement.size(); ++j)
        stacked.set(u + i, complement[j], en.basis_data()[i * (n - u) + j]);
    fn(Subspace::span_of(stacked));
  }
}

Subspace sum_with_image(const Matrix& t, const Subspace& w) {
  Matrix stacked(w.field(), 2 * w.dim(), w.ambient());
  std::vector<Fe> image(w.ambient());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    for (std::size_t j = 0; j < w.ambient(); ++j) stacked.set(i, j, w.basis().at(i, j));
    t.apply(w.basis().row(i), image.data());
    for (std::size_t j = 0; j < w.ambient(); ++j) stacked.set(w.dim() + i, j, image[j]);
  }
  return Subspace::span_of(stacked);
}

}  // namespace

Int brute_flag_count(const Matrix& t, const FlagTuple& tuple, std::uint64_t scale_limit) {
  if (!t.is_square()) throw DimensionMismatchError("operator must be square");
  if (t.rows() != tuple.ambient)
    throw DimensionMismatchError("tuple ambient dimension does not match the operator");
  const std::size_t r = tuple.length();
  if (r == 0) return Int(1);

  Int count(0);
  // Choose W_r, then W_{r-1} ⊇ W_r + TW_r, and so on up to W_1. Every
  // defining condition is tested directly; no recursion identities involved.
  std::function<void(std::size_t, const Subspace&)> choose =
      [&](std::size_t i, const Subspace& lower) {
        const unsigned want_dim = tuple.a(i, 1);
        const unsigned want_meet = tuple.a(i, 2);
        for_each_superspace(lower, want_dim, scale_limit, [&](const Subspace& w) {
          if (subspace_intersection(w, preimage(t, w)).dim() != want_meet) return;
          if (i == 1)
            ++count;
          else
            choose(i - 1, sum_with_image(t, w));
        });
      };
  choose(r, Subspace::zero_space(t.field(), t.rows()));
  return count;
}

namespace {

template <class Backend, class Value>
bool lr_impl(Backend& backend, const FlagTuple& t,
             const std::function<Value(long, long)>& binom) {
  if (validate_tuple(t) != TupleStatus::Valid)
    throw InvalidParamsError("consistency check requires a valid tuple");
  const auto cnt = [&backend](const FlagTuple& s) { return backend.count(s); };
  const Value left = a_side_sum<Value>(t, cnt, binom, nullptr);
  const Value right =
      b_side_sum<Value>(t, cnt, binom, /*exclude_diagonal=*/false, nullptr);
  return left == right;
}

}  // namespace

bool lr_consistency(SymbolicBackend& backend, const FlagTuple& t) {
  return lr_impl<SymbolicBackend, QPoly>(
      backend, t, [](long n, long k) { return gaussian_binomial(n, k); });
}

bool lr_consistency(ConcreteBackend& backend, const FlagTuple& t) {
  const Int q(static_cast<unsigned long>(backend.matrix().field()->order()));
  return lr_impl<ConcreteBackend, Int>(
      backend, t, [q](long n, long k) { return gaussian_binomial(n, k).eval(q); });
}

}  // namespace splitcount
