#include "splitcount/classtype.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "splitcount/errors.hpp"

namespace splitcount {

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw InvalidPartitionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidPartitionError("partition parts must be weakly decreasing");
  }
}

unsigned Partition::size() const {
  unsigned total = 0;
  for (unsigned p : parts_) total += p;
  return total;
}

unsigned Partition::part(std::size_t i) const {
  return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<unsigned> cols(parts_.front(), 0);
  for (unsigned p : parts_)
    for (unsigned j = 0; j < p; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  return out.str();
}

namespace {

void gen_subpartitions(const Partition& lambda, std::size_t i, unsigned remaining,
                       unsigned max_part, std::vector<unsigned>& current,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (i >= lambda.length()) return;
  const unsigned cap = std::min(max_part, lambda.parts()[i]);
  for (unsigned part = std::min(cap, remaining); part >= 1; --part) {
    current.push_back(part);
    gen_subpartitions(lambda, i + 1, remaining - part, part, current, out);
    current.pop_back();
  }
}

void gen_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (unsigned part = std::min(max_part, remaining); part >= 1; --part) {
    current.push_back(part);
    gen_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> subpartitions(const Partition& lambda, unsigned k) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  gen_subpartitions(lambda, 0, k, k == 0 ? 1 : k, current, out);
  return out;
}

std::vector<Partition> all_partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  gen_partitions(n, n == 0 ? 1 : n, current, out);
  return out;
}

ClassType::ClassType(std::vector<TypeComponent> components)
    : components_(std::move(components)) {
  for (const TypeComponent& c : components_) {
    if (c.degree == 0) throw InvalidParamsError("component degree must be positive");
    if (c.shape.empty())
      throw InvalidPartitionError("component partition must be nonempty");
  }
  std::sort(components_.begin(), components_.end());
}

unsigned ClassType::size() const {
  unsigned total = 0;
  for (const TypeComponent& c : components_) total += c.degree * c.shape.size();
  return total;
}

std::string ClassType::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out << ";";
    out << components_[i].degree << ":" << components_[i].shape.str();
  }
  return out.str();
}

namespace {

unsigned parse_uint(const std::string& token, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("expected an unsigned integer for ") + what +
                     ", got \"" + token + "\"");
  unsigned long value = 0;
  try {
    value = std::stoul(token);
  } catch (const std::exception&) {
    throw ParseError(std::string("integer out of range for ") + what);
  }
  return static_cast<unsigned>(value);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

ClassType parse_type(const std::string& text) {
  if (text.empty()) throw ParseError("empty class type");
  std::vector<TypeComponent> components;
  for (const std::string& comp : split(text, ';')) {
    const auto colon = comp.find(':');
    if (colon == std::string::npos)
      throw ParseError("component \"" + comp + "\" lacks a ':'");
    const unsigned degree = parse_uint(comp.substr(0, colon), "degree");
    if (degree == 0) throw ParseError("component degree must be positive");
    std::vector<unsigned> parts;
    for (const std::string& part : split(comp.substr(colon + 1), ','))
      parts.push_back(parse_uint(part, "partition part"));
    components.push_back({degree, Partition(std::move(parts))});
  }
  return ClassType(std::move(components));
}

namespace {

// Möbius function; d is tiny here (a divisor of a partition degree).
int moebius(unsigned d) {
  int sign = 1;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

}  // namespace

mpz_class beta(std::uint64_t q, unsigned n) {
  if (!is_prime_power(q))
    throw NotPrimePowerError(std::to_string(q) + " is not a prime power");
  if (n == 0) throw InvalidParamsError("beta: degree must be positive");
  mpz_class sum(0);
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = moebius(d);
    if (mu == 0) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q), n / d);
    sum += mu * power;
  }
  mpz_class count;
  mpz_divexact_ui(count.get_mpz_t(), sum.get_mpz_t(), n);
  return count;
}

std::uint64_t q0(const ClassType& tau) {
  std::map<unsigned, std::size_t> needed;  // degree -> number of components
  for (const TypeComponent& c : tau.components()) ++needed[c.degree];
  for (std::uint64_t q = 2;; ++q) {
    if (!is_prime_power(q)) continue;
    bool fits = true;
    for (const auto& [degree, count] : needed)
      if (beta(q, degree) < static_cast<long>(count)) {
        fits = false;
        break;
      }
    if (fits) return q;
  }
}

namespace {

Matrix build_operator(const ClassType& tau, const FieldPtr& field,
                      const std::vector<std::size_t>& poly_index) {
  // Per degree, fetch enough lexicographically-least irreducibles to cover
  // the highest requested index.
  std::map<unsigned, std::size_t> max_index;
  for (std::size_t i = 0; i < tau.components().size(); ++i) {
    const unsigned e = tau.components()[i].degree;
    max_index[e] = std::max(max_index.count(e) ? max_index[e] : 0, poly_index[i] + 1);
  }
  std::map<unsigned, std::vector<FqPoly>> irreducibles;
  for (const auto& [degree, count] : max_index)
    irreducibles.emplace(degree, enumerate_irreducibles(field, degree, count));

  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < tau.components().size(); ++i) {
    const TypeComponent& c = tau.components()[i];
    const FqPoly& p = irreducibles.at(c.degree)[poly_index[i]];
    for (unsigned part : c.shape.parts()) blocks.push_back(Matrix::companion(p.pow(part)));
  }
  return Matrix::block_diag(blocks);
}

}  // namespace

Matrix canonical_operator(const ClassType& tau, const FieldPtr& field) {
  if (tau.components().empty())
    throw InvalidParamsError("cannot build an operator of empty type");
  const std::uint64_t least = q0(tau);
  if (field->order() < least)
    throw FieldTooSmallError("type " + tau.str() + " needs field order >= " +
                             std::to_string(least) + ", got " +
                             std::to_string(field->order()));
  // Components of equal degree receive distinct irreducibles in order.
  std::vector<std::size_t> poly_index(tau.components().size(), 0);
  std::map<unsigned, std::size_t> next_of_degree;
  for (std::size_t i = 0; i < tau.components().size(); ++i)
    poly_index[i] = next_of_degree[tau.components()[i].degree]++;
  return build_operator(tau, field, poly_index);
}

Matrix operator_with_choices(const ClassType& tau, const FieldPtr& field,
                             const std::vector<std::size_t>& poly_index) {
  if (poly_index.size() != tau.components().size())
    throw InvalidParamsError("one polynomial index per component required");
  // Distinctness within a degree; duplicates would change the type.
  std::map<unsigned, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < tau.components().size(); ++i) {
    auto& used = seen[tau.components()[i].degree];
    if (std::find(used.begin(), used.end(), poly_index[i]) != used.end())
      throw InvalidParamsError("components of one degree need distinct polynomials");
    used.push_back(poly_index[i]);
  }
  return build_operator(tau, field, poly_index);
}

namespace {

void gen_types(const std::vector<TypeComponent>& atoms,
               const std::vector<unsigned>& weights, std::size_t idx, unsigned remaining,
               std::vector<TypeComponent>& current, std::vector<ClassType>& out) {
  if (remaining == 0) {
    out.push_back(ClassType(current));
    return;
  }
  for (std::size_t i = idx; i < atoms.size(); ++i) {
    if (weights[i] > remaining) continue;
    current.push_back(atoms[i]);
    gen_types(atoms, weights, i, remaining - weights[i], current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ClassType> class_types_of_size(unsigned n) {
  if (n == 0) throw InvalidParamsError("class types have size >= 1");
  std::vector<TypeComponent> atoms;
  for (unsigned e = 1; e <= n; ++e)
    for (unsigned s = 1; e * s <= n; ++s)
      for (const Partition& shape : all_partitions(s)) atoms.push_back({e, shape});
  std::sort(atoms.begin(), atoms.end());
  std::vector<unsigned> weights(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i)
    weights[i] = atoms[i].degree * atoms[i].shape.size();
  std::vector<ClassType> out;
  std::vector<TypeComponent> current;
  gen_types(atoms, weights, 0, n, current, out);
  return out;
}

}  // namespace splitcount
