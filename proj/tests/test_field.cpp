#include <doctest.h>

#include <set>

#include "splitcount/errors.hpp"
#include "splitcount/field.hpp"

using namespace splitcount;

TEST_CASE("prime field arithmetic") {
  FieldPtr f5 = make_field(5);
  CHECK(f5->order() == 5);
  CHECK(f5->add(3, 4) == 2);
  CHECK(f5->sub(1, 3) == 3);
  CHECK(f5->neg(2) == 3);
  CHECK(f5->mul(3, 4) == 2);
  CHECK(f5->inv(3) == 2);
  CHECK(f5->pow(2, 4) == 1);
  CHECK_THROWS_AS(f5->inv(0), DivisionByZeroError);
  CHECK_THROWS_AS(make_field(6), NotPrimeError);
  CHECK_THROWS_AS(make_field(1), NotPrimeError);
}

TEST_CASE("canonical moduli are the lexicographically least irreducibles") {
  CHECK(make_field(2, 2)->modulus() == std::vector<Fe>{1, 1, 1});  // x^2+x+1
  CHECK(make_field(3, 2)->modulus() == std::vector<Fe>{1, 0, 1});  // x^2+1
  CHECK(make_field(2)->modulus() == std::vector<Fe>{0, 1});        // x for degree 1
}

TEST_CASE("field axioms hold in small extension fields") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {3, 2}}) {
    FieldPtr f = make_field(p, k);
    const Fe q = static_cast<Fe>(f->order());
    for (Fe a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->pow(a, f->order()) == a);  // Frobenius fixes F_q pointwise
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      for (Fe b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (Fe c = 0; c < q; ++c)
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

TEST_CASE("element rendering") {
  FieldPtr f3 = make_field(3);
  CHECK(f3->element_str(2) == "2");
  FieldPtr f4 = make_field(2, 2);
  CHECK(f4->element_str(3) == "[1,1]");
  CHECK(f4->element_coeffs(2) == std::vector<Fe>{0, 1});
}

TEST_CASE("prime power detection") {
  std::uint64_t p = 0;
  unsigned k = 0;
  CHECK(is_prime_power(2, &p, &k));
  CHECK((p == 2 && k == 1));
  CHECK(is_prime_power(27, &p, &k));
  CHECK((p == 3 && k == 3));
  CHECK(is_prime_power(25, &p, &k));
  CHECK((p == 5 && k == 2));
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(100));
  CHECK_THROWS_AS(make_field_of_order(6), NotPrimePowerError);
  CHECK(make_field_of_order(9)->degree() == 2);
}

TEST_CASE("polynomial arithmetic over F_2") {
  FieldPtr f2 = make_field(2);
  const FqPoly x = FqPoly::x(f2);
  const FqPoly one = FqPoly::constant(f2, 1);
  CHECK((x + one) * (x + one) == x * x + one);  // characteristic 2
  CHECK((x * x + x).degree() == 2);
  CHECK(FqPoly(f2).is_zero());
  CHECK((x.pow(3) + x + one).str() == "x^3 + x + 1");

  auto [quot, rem] = (x.pow(3) + one).divmod(x + one);
  CHECK(quot == x * x + x + one);
  CHECK(rem.is_zero());
  auto [q2, r2] = (x * x + one).divmod(x);
  CHECK(q2 == x);
  CHECK(r2 == one);
}

TEST_CASE("monic enumeration order is lexicographic on descending coefficients") {
  FieldPtr f2 = make_field(2);
  CHECK(FqPoly::monic_from_index(f2, 2, 0).coeffs() == std::vector<Fe>{0, 0, 1});
  CHECK(FqPoly::monic_from_index(f2, 2, 1).coeffs() == std::vector<Fe>{1, 0, 1});
  CHECK(FqPoly::monic_from_index(f2, 2, 2).coeffs() == std::vector<Fe>{0, 1, 1});
  CHECK(FqPoly::monic_from_index(f2, 2, 3).coeffs() == std::vector<Fe>{1, 1, 1});
}

TEST_CASE("irreducibility testing") {
  FieldPtr f2 = make_field(2);
  const FqPoly x = FqPoly::x(f2);
  const FqPoly one = FqPoly::constant(f2, 1);
  CHECK(is_irreducible(x * x + x + one));
  CHECK_FALSE(is_irreducible(x * x + one));  // (x+1)^2
  CHECK(is_irreducible(x + one));
  CHECK_FALSE(is_irreducible(x * x));
}

TEST_CASE("irreducible enumeration is ordered and bounded") {
  FieldPtr f2 = make_field(2);
  const auto cubics = enumerate_irreducibles(f2, 3, 2);
  REQUIRE(cubics.size() == 2);
  CHECK(cubics[0].coeffs() == std::vector<Fe>{1, 1, 0, 1});  // x^3+x+1
  CHECK(cubics[1].coeffs() == std::vector<Fe>{1, 0, 1, 1});  // x^3+x^2+1
  // Only x and x+1 exist in degree 1 over F_2.
  CHECK_THROWS_AS(enumerate_irreducibles(f2, 1, 3), NotEnoughIrreduciblesError);

  FieldPtr f3 = make_field(3);
  const auto quads = enumerate_irreducibles(f3, 2, 3);
  CHECK(quads[0].coeffs() == std::vector<Fe>{1, 0, 1});  // x^2+1
  CHECK(quads[1].coeffs() == std::vector<Fe>{2, 1, 1});  // x^2+x+2
  CHECK(quads[2].coeffs() == std::vector<Fe>{2, 2, 1});  // x^2+2x+2

  // Degree-2 irreducibles over an extension base field (F_4).
  FieldPtr f4 = make_field(2, 2);
  const auto ext = enumerate_irreducibles(f4, 2, 6);
  CHECK(ext.size() == 6);  // β(4,2) = (16−4)/2 = 6, so exactly all of them
  std::set<std::vector<Fe>> seen;
  for (const FqPoly& g : ext) {
    CHECK(g.degree() == 2);
    CHECK(g.is_monic());
    CHECK(is_irreducible(g));
    seen.insert(g.coeffs());
  }
  CHECK(seen.size() == 6);
  CHECK_THROWS_AS(enumerate_irreducibles(f4, 2, 7), NotEnoughIrreduciblesError);
}
