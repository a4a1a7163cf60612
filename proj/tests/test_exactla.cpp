#include <doctest.h>

#include "oracle.hpp"
#include "pushout/exactla.hpp"

using namespace pushout;

namespace {
Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("scalar text round trip") {
  CHECK(to_string(parse_scalar("-2/4")) == "-1/2");
  CHECK(to_string(parse_scalar("6/3")) == "2");
  CHECK(to_string(parse_scalar("0/5")) == "0");
  CHECK(to_string(parse_scalar("+7")) == "7");
  CHECK(parse_scalar("123456789012345678901234567890/3") == Scalar("41152263004115226300411522630"));
  CHECK_THROWS_AS(parse_scalar("3/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
}

TEST_CASE("kernel and image") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix(2, 3)) == Subspace::full(3));
  Matrix m{{1, 1}, {2, 2}};
  Subspace k = kernel(m);
  CHECK(k == Subspace::span(2, {vec({1, -1})}));
  CHECK(image(m) == Subspace::span(2, {vec({1, 2})}));
  CHECK(image(Matrix::identity(4)) == Subspace::full(4));
  CHECK(image(Matrix(3, 2)).dim() == 0);
  // independent elimination agrees
  CHECK(oracle::rank(oracle::rows_of(m)) == 1);
}

TEST_CASE("solve_affine") {
  Matrix m{{1, 1}, {2, 2}};
  auto sol = solve_affine(m, vec({1, 2}));
  REQUIRE(sol);
  CHECK(m.apply(sol->particular) == vec({1, 2}));
  CHECK(sol->particular == vec({1, 0}));
  CHECK(sol->homogeneous == Subspace::span(2, {vec({1, -1})}));
  CHECK_FALSE(solve_affine(m, vec({1, 0})));
  CHECK_FALSE(solve_affine(Matrix(2, 2), vec({0, 1})));
  auto id = solve_affine(Matrix::identity(3), vec({4, 5, 6}));
  REQUIRE(id);
  CHECK(id->particular == vec({4, 5, 6}));
  CHECK(id->homogeneous.dim() == 0);
}

TEST_CASE("quotient_basis") {
  Quotient trivial = quotient_basis(3, Subspace(3));
  CHECK(trivial.projection == Matrix::identity(3));
  CHECK(quotient_basis(3, Subspace::full(3)).dim() == 0);

  Subspace s = Subspace::span(2, {vec({1, -1})});
  Quotient q = quotient_basis(2, s);
  CHECK(q.dim() == 1);
  CHECK(kernel(q.projection) == s);
  CHECK(q.projection * q.section == Matrix::identity(1));
  CHECK(is_zero(q.projection.apply(vec({1, -1}))));
}

TEST_CASE("intersect and sum") {
  Subspace a = Subspace::span(2, {vec({1, 0}), vec({0, 1})});
  Subspace b = Subspace::span(2, {vec({1, 1})});
  CHECK(intersect(a, b) == b);
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, Subspace(2)).dim() == 0);
  Subspace x = Subspace::span(3, {vec({1, 0, 0})});
  Subspace y = Subspace::span(3, {vec({0, 1, 0})});
  CHECK(intersect(x, y).dim() == 0);
  CHECK(sum(x, y) == Subspace::span(3, {vec({1, 1, 0}), vec({1, -1, 0})}));
  CHECK(orthogonal_complement(x) == Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})}));
}

TEST_CASE("subspace coordinates and canonical form") {
  Subspace s = Subspace::span(3, {vec({2, 4, 6}), vec({0, 1, 1})});
  Subspace t = Subspace::span(3, {vec({1, 3, 4}), vec({1, 1, 2}), vec({0, 0, 0})});
  CHECK(s == t);
  Vector v = vec({3, 7, 10});
  REQUIRE(s.contains(v));
  CHECK(s.embed(s.coordinates(v)) == v);
  CHECK_FALSE(s.contains(vec({0, 0, 1})));
}

TEST_CASE("vec and kronecker identities") {
  Matrix s{{1, 2, 0}, {3, -1, 5}};       // 2 x 3
  Matrix m{{1, 0}, {2, 1}, {0, -3}};     // 3 x 2
  Matrix n{{0, 1}, {4, 2}};              // 2 x 2
  CHECK((s * m).vec() == kronecker(m.transpose(), Matrix::identity(2)).apply(s.vec()));
  CHECK((n * s).vec() == kronecker(Matrix::identity(3), n).apply(s.vec()));
  CHECK(Matrix::unvec(2, 3, s.vec()) == s);
}

TEST_CASE("restrict_map and preimage") {
  Subspace line = Subspace::span(2, {vec({1, 1})});
  Matrix swap{{0, 1}, {1, 0}};
  CHECK(restrict_map(swap, line, line) == Matrix{{1}});
  Matrix shear{{1, 1}, {0, 1}};
  CHECK_THROWS_AS(restrict_map(shear, line, line), PreconditionError);

  Matrix inj{{1, 0}, {0, 1}, {1, 1}};
  CHECK(preimage(inj, vec({2, 3, 5})) == vec({2, 3}));
}

TEST_CASE("dimension mismatches are reported") {
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), DimensionMismatch);
  CHECK_THROWS_AS(Matrix::unvec(2, 2, vec({1, 2, 3})), DimensionMismatch);
}
