#include "doctest.h"
#include "hopfcyc/algebra.hpp"
#include "hopfcyc/linalg.hpp"

#include <stdexcept>

using namespace hopfcyc;

namespace {

QMat mat(std::initializer_list<std::initializer_list<int>> rows) {
  QMat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (int v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

AlgebraPtr free_xy() {
  return Algebra::presented("T", Alphabet({{"X"}, {"Y"}}), {});
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
  CHECK(Rational(-5, 7).inverse() == Rational(-7, 5));
}

TEST_CASE("rref, rank and nullspace") {
  const QMat a = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  CHECK(rank(QMat(a.transpose())) == 2);
  const QMat n = nullspace(a);
  REQUIRE(n.cols() == 1);
  CHECK(is_zero(QMat(a * n)));
  // x1 + x3 = 0 and x1 + 2x2 + 3x3 = 0 force x = t(-1, -1, 1)
  CHECK(n(0, 0) == -n(2, 0));
  CHECK(n(1, 0) == -n(2, 0));

  const QMat full = mat({{2, 1}, {1, 1}});
  CHECK(nullspace(full).cols() == 0);
  CHECK(column_basis(a).cols() == 2);
}

TEST_CASE("solve finds solutions exactly or reports inconsistency") {
  const QMat a = mat({{1, 1}, {1, -1}});
  QVec b(2);
  b << Rational(3), Rational(1);
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == Rational(2));
  CHECK((*x)(1) == Rational(1));

  const QMat s = mat({{1, 1}, {2, 2}});
  QVec c(2);
  c << Rational(1), Rational(3);
  CHECK_FALSE(solve(s, c).has_value());
  CHECK_FALSE(in_column_span(s, c));
}

TEST_CASE("quotient by a relation subspace") {
  const QMat rel = mat({{1}, {-1}, {0}});  // e0 - e1
  const auto q = quotient_by(rel, 3);
  CHECK(q.dim() == 2);
  CHECK(is_zero(QMat(q.P * rel)));
  CHECK(q.P * q.L == identity<Rational>(2));
  const auto none = quotient_by(QMat(3, 0), 3);
  CHECK(none.dim() == 3);
}

TEST_CASE("sparse span rank and membership") {
  SparseSpan<int> s;
  CHECK(s.add({{0, Rational(1)}, {1, Rational(1)}}));
  CHECK(s.add({{1, Rational(1)}, {2, Rational(1)}}));
  CHECK_FALSE(s.add({{0, Rational(1)}, {2, Rational(-1)}}));
  CHECK(s.rank() == 2);
  CHECK(s.contains({{0, Rational(2)}, {1, Rational(2)}}));
  CHECK_FALSE(s.contains({{2, Rational(1)}}));
}

TEST_CASE("alphabet weights and printing") {
  const Alphabet a({{"d", true, 1, -1, true, 1, "δ"}, {"X"}});
  CHECK(a.weight(Generator("d", 3)) == 3);
  CHECK(a.weight(Word{Generator("d", 2), Generator("X")}) == 3);
  CHECK(a.format_letter(Generator("d", 12), true) == "δ₁₂");
  CHECK(a.format_letter(Generator("d", 2), false) == "d[2]");
  CHECK(subscript_digits(40) == "₄₀");
  CHECK(a.contains(Generator("d", 1)));
  CHECK_FALSE(a.contains(Generator("d", 0)));
  CHECK_FALSE(a.contains(Generator("Z")));
}

TEST_CASE("elements of a free algebra") {
  const auto T = free_xy();
  const AlgElt x = AlgElt::gen(T, "X"), y = AlgElt::gen(T, "Y");
  const AlgElt sq = (x + y) * (x + y);
  CHECK(sq.terms().size() == 4);
  CHECK(sq.coeff(Word{Generator("X"), Generator("Y")}) == Rational(1));
  CHECK(sq.coeff(Word{Generator("Y"), Generator("X")}) == Rational(1));
  CHECK((x - x).is_zero());
  CHECK((Rational(2) * x - x - x).is_zero());
  CHECK(AlgElt::one(T) * x == x);
  CHECK((x * y).str() == "X Y");
}

TEST_CASE("tensor operations") {
  const auto T = free_xy();
  const AlgElt x = AlgElt::gen(T, "X"), y = AlgElt::gen(T, "Y");
  const TensorElt t = tensor(x + y, x);
  CHECK(t.terms().size() == 2);
  CHECK(t == tensor(x, x) + tensor(y, x));
  CHECK(permute_legs(tensor(x, y), {1, 0}) == tensor(y, x));
  CHECK(as_element(merge_legs(tensor(x, y), 0)) == x * y);
  const LegMap dbl = leg_map(T, [&](const Word& w) { return Rational(2) * AlgElt::word(T, w); });
  CHECK(leg_apply(tensor(x, y), 1, dbl) == Rational(2) * tensor(x, y));
  CHECK(tensor(std::vector<AlgElt>{x, y, x}).legs() == 3);
}
