#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "splitcount/classtype.hpp"
#include "splitcount/errors.hpp"
#include "splitcount/field.hpp"
#include "splitcount/matrix.hpp"

using namespace splitcount;

namespace {

// Test-side oracle: characteristic polynomial det(xI − M) by cofactor
// expansion over F_q[x]. Exponential, but n ≤ 6 here.
FqPoly char_poly(const Matrix& m) {
  const FieldPtr field = m.field();
  const std::size_t n = m.rows();
  std::vector<FqPoly> entries;
  entries.reserve(n * n);
  const FqPoly x = FqPoly::x(field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FqPoly e = FqPoly::constant(field, field->neg(m.at(i, j)));
      if (i == j) e = e + x;
      entries.push_back(e);
    }
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  auto det = [&](auto&& self, std::size_t row, std::vector<std::size_t> active) -> FqPoly {
    if (active.empty()) return FqPoly::constant(field, 1);
    FqPoly total(field);
    for (std::size_t pick = 0; pick < active.size(); ++pick) {
      std::vector<std::size_t> rest = active;
      rest.erase(rest.begin() + static_cast<long>(pick));
      FqPoly term = entries[row * n + active[pick]] * self(self, row + 1, rest);
      if (pick % 2) term = FqPoly(field) - term;
      total = total + term;
    }
    return total;
  };
  return det(det, 0, cols);
}

}  // namespace

TEST_CASE("partition validation and accessors") {
  const Partition p{3, 1};
  CHECK(p.size() == 4);
  CHECK(p.length() == 2);
  CHECK(p.part(1) == 3);
  CHECK(p.part(5) == 0);  // beyond the length
  CHECK(p.str() == "3,1");
  CHECK_THROWS_AS((Partition{1, 3}), InvalidPartitionError);
  CHECK_THROWS_AS(Partition{0}, InvalidPartitionError);
  CHECK(Partition{}.empty());
}

TEST_CASE("conjugation is an involution and transposes the diagram") {
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{4}.conjugate() == Partition{1, 1, 1, 1});
  for (unsigned n = 0; n <= 8; ++n)
    for (const Partition& lam : all_partitions(n)) {
      CHECK(lam.conjugate().conjugate() == lam);
      CHECK(lam.conjugate().size() == n);
    }
}

TEST_CASE("containment of diagrams") {
  CHECK(Partition{3, 1}.contains(Partition{2, 1}));
  CHECK(Partition{3, 1}.contains(Partition{}));
  CHECK_FALSE(Partition{3, 1}.contains(Partition{2, 2}));
  CHECK_FALSE(Partition{2}.contains(Partition{1, 1}));
}

TEST_CASE("partition enumeration matches the partition numbers") {
  const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (unsigned n = 0; n < counts.size(); ++n) {
    const auto parts = all_partitions(n);
    CHECK(parts.size() == counts[n]);
    std::set<Partition> distinct(parts.begin(), parts.end());
    CHECK(distinct.size() == counts[n]);
  }
}

TEST_CASE("subpartition enumeration covers all subdiagrams") {
  const auto subs2 = subpartitions(Partition{2, 1}, 2);
  CHECK(subs2.size() == 2);  // (2) and (1,1)
  // Every subdiagram of (2,1): sizes 0..3 give 1+1+2+1 = 5.
  std::size_t total = 0;
  for (unsigned k = 0; k <= 3; ++k) total += subpartitions(Partition{2, 1}, k).size();
  CHECK(total == 5);
  // Cross-check Σ_k |subpartitions(λ,k)| against direct subdiagram counting.
  for (const Partition& lam : all_partitions(6)) {
    std::size_t via_k = 0;
    for (unsigned k = 0; k <= 6; ++k) via_k += subpartitions(lam, k).size();
    std::size_t direct = 0;
    for (unsigned n = 0; n <= 6; ++n)
      for (const Partition& mu : all_partitions(n))
        if (lam.contains(mu)) ++direct;
    CHECK(via_k == direct);
  }
}

TEST_CASE("class type parsing and canonical order") {
  const ClassType tau = parse_type("2:2;1:3,1");
  CHECK(tau.size() == 8);
  CHECK(tau.components().size() == 2);
  CHECK(tau.components()[0].degree == 1);  // sorted ascending by degree
  CHECK(tau.str() == "1:3,1;2:2");
  CHECK(parse_type("1:1;1:1") == parse_type("1:1;1:1"));
  CHECK(parse_type("1:2").is_primary());
  CHECK_FALSE(parse_type("1:1;2:1").is_primary());
  CHECK_THROWS_AS(parse_type(""), ParseError);
  CHECK_THROWS_AS(parse_type("0:1"), ParseError);
  CHECK_THROWS_AS(parse_type("1:"), InputError);  // empty component partition
  CHECK_THROWS_AS(parse_type("a:1"), ParseError);
  CHECK_THROWS_AS(parse_type("1:1,3"), InvalidPartitionError);
}

TEST_CASE("irreducible-count formula") {
  CHECK(beta(2, 1) == 2);
  CHECK(beta(2, 2) == 1);
  CHECK(beta(2, 3) == 2);
  CHECK(beta(2, 4) == 3);
  CHECK(beta(3, 1) == 3);
  CHECK(beta(3, 2) == 3);
  CHECK(beta(4, 2) == 6);
  CHECK_THROWS_AS(beta(6, 2), NotPrimePowerError);

  // Against the generator: the formula counts exactly what enumeration finds.
  for (std::uint64_t q : {2, 3}) {
    FieldPtr f = make_field_of_order(q);
    for (unsigned n = 1; n <= 3; ++n) {
      const auto count = static_cast<std::size_t>(beta(q, n).get_ui());
      CHECK(enumerate_irreducibles(f, n, count).size() == count);
      CHECK_THROWS_AS(enumerate_irreducibles(f, n, count + 1), NotEnoughIrreduciblesError);
    }
  }

  // Monotone in q for fixed degree.
  const std::vector<std::uint64_t> pps = {2, 3, 4, 5, 7, 8, 9};
  for (unsigned n = 1; n <= 4; ++n)
    for (std::size_t i = 0; i + 1 < pps.size(); ++i)
      CHECK(beta(pps[i], n) < beta(pps[i + 1], n));
}

TEST_CASE("smallest realizing field size") {
  CHECK(q0(parse_type("1:5")) == 2);
  CHECK(q0(parse_type("1:1;1:1")) == 2);
  CHECK(q0(parse_type("1:1;1:1;1:1")) == 3);  // needs three distinct linear irreducibles
  CHECK(q0(parse_type("2:1;2:1")) == 3);      // β(2,2) = 1 < 2 ≤ β(3,2)
  CHECK(q0(parse_type("2:1;2:1;2:1;2:1;2:1;2:1;2:1")) == 5);  // β(4,2)=6 < 7 ≤ β(5,2)
}

TEST_CASE("canonical operator structure") {
  FieldPtr f2 = make_field(2);
  const Matrix m = canonical_operator(parse_type("1:1;1:1"), f2);
  CHECK(m == Matrix::from_rows(f2, {{0, 0}, {0, 1}}));  // roots of x and x+1
  CHECK_THROWS_AS(canonical_operator(parse_type("1:1;1:1;1:1"), f2), FieldTooSmallError);

  // Block sizes follow e·(part): type {(2,(2,1))} gives blocks of 4 and 2.
  const Matrix big = canonical_operator(parse_type("2:2,1"), f2);
  CHECK(big.rows() == 6);
}

TEST_CASE("characteristic polynomial of the canonical operator is the type's product") {
  for (std::uint64_t q : {2, 3}) {
    FieldPtr f = make_field_of_order(q);
    for (const char* text : {"1:2,1", "2:1;1:2", "1:1;1:2", "3:1", "2:2"}) {
      const ClassType tau = parse_type(text);
      if (q0(tau) > q) continue;
      const Matrix op = canonical_operator(tau, f);
      FqPoly expected = FqPoly::constant(f, 1);
      std::map<unsigned, std::size_t> used;
      for (const TypeComponent& comp : tau.components()) {
        const auto polys = enumerate_irreducibles(f, comp.degree, ++used[comp.degree]);
        const FqPoly& p = polys.back();
        for (unsigned part : comp.shape.parts()) expected = expected * p.pow(part);
      }
      CHECK(char_poly(op) == expected);
    }
  }
}

TEST_CASE("distinct polynomial choices and their constraints") {
  FieldPtr f3 = make_field(3);
  const ClassType tau = parse_type("2:1,1;2:1");
  const Matrix a = operator_with_choices(tau, f3, {0, 1});
  const Matrix b = operator_with_choices(tau, f3, {1, 0});
  CHECK(a.rows() == 6);
  CHECK(b.rows() == 6);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(operator_with_choices(tau, f3, {0, 0}), InvalidParamsError);  // clash
  CHECK_THROWS_AS(operator_with_choices(tau, f3, {0}), InvalidParamsError);     // arity
}

TEST_CASE("class type enumeration by total size") {
  CHECK(class_types_of_size(1).size() == 1);
  CHECK(class_types_of_size(2).size() == 4);
  CHECK(class_types_of_size(3).size() == 8);
  CHECK(class_types_of_size(4).size() == 22);
  CHECK_THROWS_AS(class_types_of_size(0), InvalidParamsError);
  for (const ClassType& tau : class_types_of_size(4)) CHECK(tau.size() == 4);
  const auto types = class_types_of_size(4);
  std::set<std::string> distinct;
  for (const ClassType& tau : types) distinct.insert(tau.str());
  CHECK(distinct.size() == types.size());
}
