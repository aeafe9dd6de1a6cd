#include <doctest.h>

#include <set>
#include <vector>

#include "splitcount/errors.hpp"
#include "splitcount/matrix.hpp"
#include "splitcount/qpoly.hpp"
#include "splitcount/subspace.hpp"

using namespace splitcount;

namespace {

Matrix shift_operator(const FieldPtr& field, std::size_t n) {
  // One-block nilpotent: e_i ↦ e_{i+1}, e_n ↦ 0 = companion of x^n.
  return Matrix::companion(FqPoly::x(field).pow(static_cast<unsigned>(n)));
}

}  // namespace

TEST_CASE("companion matrix acts as multiplication by x") {
  FieldPtr f2 = make_field(2);
  const Matrix c = shift_operator(f2, 2);
  CHECK(c.apply({1, 0}) == std::vector<Fe>{0, 1});  // e1 -> e2
  CHECK(c.apply({0, 1}) == std::vector<Fe>{0, 0});  // e2 -> 0

  // x^2+x+1: e2 ↦ -(coeffs) column.
  const FqPoly x = FqPoly::x(f2);
  const Matrix c2 = Matrix::companion(x * x + x + FqPoly::constant(f2, 1));
  CHECK(c2.apply({0, 1}) == std::vector<Fe>{1, 1});
  CHECK_THROWS_AS(Matrix::companion(x + x), InvalidParamsError);  // zero poly
}

TEST_CASE("matrix algebra basics") {
  FieldPtr f3 = make_field(3);
  const Matrix id = Matrix::identity(f3, 2);
  const Matrix a = Matrix::from_rows(f3, {{1, 2}, {0, 1}});
  const Matrix b = Matrix::from_rows(f3, {{2, 0}, {1, 1}});
  CHECK(a * id == a);
  CHECK((a + b) - b == a);
  CHECK((a * b).at(0, 0) == f3->add(f3->mul(1, 2), f3->mul(2, 1)));
  CHECK(a.transpose().at(0, 1) == 0);
  CHECK(a.plus_scalar_identity(2).at(0, 0) == 0);
  CHECK(a.plus_scalar_identity(2).at(0, 1) == 2);
  CHECK(Matrix::block_diag({a, b}).rows() == 4);
  CHECK(Matrix::block_diag({a, b}).at(2, 2) == 2);
  CHECK(Matrix::block_diag({a, b}).at(0, 2) == 0);
}

TEST_CASE("rank and row reduction") {
  FieldPtr f2 = make_field(2);
  const Matrix m = Matrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(m.rank() == 2);  // rows sum to zero over F_2
  std::vector<std::size_t> pivots;
  const Matrix r = Matrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}}).rref(&pivots);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.row(0)[0] == 1);
  CHECK(r.row(0)[1] == 0);
  CHECK(r.row(0)[2] == 1);  // canonicalized to (1,0,1),(0,1,1)
  CHECK(Matrix::identity(f2, 4).rank() == 4);
  CHECK(Matrix(f2, 3, 3).rank() == 0);
}

TEST_CASE("subspace canonical form and membership") {
  FieldPtr f2 = make_field(2);
  const Subspace w = Subspace::span_of(Matrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  CHECK(w.dim() == 2);
  CHECK(w.contains({1, 0, 1}));
  CHECK_FALSE(w.contains({1, 0, 0}));
  const Subspace same = Subspace::span_of(Matrix::from_rows(f2, {{0, 1, 1}, {1, 0, 1}}));
  CHECK(w == same);
  CHECK(w.contains_subspace(Subspace::span_of(Matrix::from_rows(f2, {{1, 1, 0}}))));
  CHECK(Subspace::zero_space(f2, 3).dim() == 0);
  CHECK(Subspace::full_space(f2, 3).dim() == 3);
  CHECK(Subspace::full_space(f2, 3).contains_subspace(w));
}

TEST_CASE("kernel and preimage") {
  FieldPtr f2 = make_field(2);
  const Matrix c = shift_operator(f2, 2);  // e1->e2, e2->0
  const Subspace ker = kernel(c);
  CHECK(ker.dim() == 1);
  CHECK(ker.contains({0, 1}));

  const Subspace e2 = Subspace::span_of(Matrix::from_rows(f2, {{0, 1}}));
  CHECK(preimage(c, e2) == Subspace::full_space(f2, 2));
  const Subspace e1 = Subspace::span_of(Matrix::from_rows(f2, {{1, 0}}));
  CHECK(preimage(c, e1) == e2);  // Tv ∈ span{e1} forces the e1-coordinate of v to vanish
  CHECK(kernel(Matrix::identity(f2, 3)).dim() == 0);
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  FieldPtr f2 = make_field(2);
  std::vector<Subspace> all;
  for (std::size_t k = 0; k <= 3; ++k) {
    SubspaceEnumerator en(f2, 3, k);
    while (en.next()) all.push_back(en.current());
  }
  for (const Subspace& a : all)
    for (const Subspace& b : all) {
      const Subspace s = subspace_sum(a, b);
      const Subspace i = subspace_intersection(a, b);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      CHECK(s.contains_subspace(a));
      CHECK(a.contains_subspace(i));
      if (a.contains_subspace(b)) CHECK(s == a);
    }
}

TEST_CASE("invariance checks") {
  FieldPtr f2 = make_field(2);
  const Matrix c = shift_operator(f2, 3);
  CHECK(is_invariant(c, Subspace::span_of(Matrix::from_rows(f2, {{0, 0, 1}}))));
  CHECK_FALSE(is_invariant(c, Subspace::span_of(Matrix::from_rows(f2, {{1, 0, 0}}))));
  CHECK(is_invariant(c, Subspace::full_space(f2, 3)));
  CHECK(is_invariant(c, Subspace::zero_space(f2, 3)));
}

TEST_CASE("subspace enumeration hits every subspace exactly once") {
  for (std::uint64_t q : {2, 3, 4}) {
    FieldPtr f = make_field_of_order(q);
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        SubspaceEnumerator en(f, n, k);
        const Int expected = gaussian_binomial(static_cast<long>(n), static_cast<long>(k))
                                 .eval(Int(static_cast<unsigned long>(q)));
        CHECK(en.total() == expected);
        std::set<Subspace> seen;
        std::size_t count = 0;
        while (en.next()) {
          ++count;
          if (q == 2 && n == 4) seen.insert(en.current());  // dedupe the worst case fully
          CHECK(en.current().dim() == k);
        }
        CHECK(Int(static_cast<unsigned long>(count)) == expected);
        if (q == 2 && n == 4) CHECK(Int(static_cast<unsigned long>(seen.size())) == expected);
      }
  }
  // Impossible dimension: no subspaces at all.
  SubspaceEnumerator none(make_field(2), 2, 3);
  CHECK_FALSE(none.next());
}

TEST_CASE("span growth identity: dim(W+TW) = 2·dim W − dim(W ∩ T⁻¹W)") {
  FieldPtr f2 = make_field(2);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Matrix t = shift_operator(f2, n);
    for (std::size_t k = 0; k <= n; ++k) {
      SubspaceEnumerator en(f2, n, k);
      while (en.next()) {
        const Subspace w = en.current();
        Matrix image(f2, w.dim(), n);
        std::vector<Fe> out(n);
        for (std::size_t i = 0; i < w.dim(); ++i) {
          t.apply(w.basis().row(i), out.data());
          for (std::size_t j = 0; j < n; ++j) image.set(i, j, out[j]);
        }
        const Subspace sum = subspace_sum(w, Subspace::span_of(image));
        const Subspace meet = subspace_intersection(w, preimage(t, w));
        CHECK(sum.dim() == 2 * w.dim() - meet.dim());
      }
    }
  }
}
