#include <doctest.h>

#include "oracle.hpp"
#include "pushout/catalog.hpp"
#include "pushout/derivation.hpp"

using namespace pushout;

namespace {

std::vector<Bimodule> sample_modules() {
  std::vector<Bimodule> out;
  for (const auto& a : {catalog::ground_field(), catalog::null_line(), catalog::matrix_algebra(2),
                        catalog::upper_triangular(2), catalog::strictly_upper(3), catalog::first_row()}) {
    out.push_back(regular_module(a));
    out.push_back(dual_module(regular_module(a)));
  }
  out.push_back(zero_module(catalog::strictly_upper(3), 2));
  out.push_back(outer_tensor_module(catalog::upper_triangular(2)));
  return out;
}

// The map D(a) = a.x - x.a as an nx x na matrix.
Matrix ad(const Bimodule& m, const Vector& x) {
  Matrix d(m.dim(), m.alg()->dim());
  for (std::size_t j = 0; j < m.alg()->dim(); ++j) d.set_column(j, m.left(j).apply(x) - m.right(j).apply(x));
  return d;
}

}  // namespace

TEST_CASE("h1 agrees with the entrywise oracle") {
  for (const Bimodule& x : sample_modules()) {
    CAPTURE(x.alg()->name());
    oracle::Raw w = oracle::raw(x);
    H1Dims h = h1(x.alg(), x);
    CHECK(h.z1 == oracle::z1_dim(w));
    CHECK(h.b1 == oracle::b1_dim(w));
    CHECK(h.h1 == h.z1 - h.b1);
    Subspace z = derivation_space(x.alg(), x);
    for (const Vector& v : z.basis())
      CHECK(oracle::is_derivation(w, oracle::rows_of(Matrix::unvec(x.dim(), x.alg()->dim(), v))));
  }
}

TEST_CASE("regression values") {
  auto reg = [](const AlgebraPtr& a) { return h1(a, regular_module(a)); };
  CHECK(reg(catalog::ground_field()) == H1Dims{0, 0, 0});
  CHECK(reg(catalog::null_line()) == H1Dims{1, 0, 1});
  CHECK(reg(catalog::matrix_algebra(2)) == H1Dims{3, 3, 0});
  CHECK(reg(catalog::strictly_upper(3)) == H1Dims{4, 2, 2});
  CHECK(reg(catalog::upper_triangular(2)) == H1Dims{2, 2, 0});
  CHECK(reg(catalog::upper_triangular(3)) == H1Dims{5, 5, 0});
}

TEST_CASE("derivation construction and innerness") {
  auto n2 = catalog::null_line();
  Bimodule x = regular_module(n2);
  CHECK_NOTHROW(Derivation(x, Matrix{{1}}));

  // On T2, D(e12) = e12 and zero elsewhere.
  auto t2 = catalog::upper_triangular(2);
  Bimodule t = regular_module(t2);
  Derivation d(t, Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  auto x0 = is_inner(d);
  REQUIRE(x0);
  CHECK(ad(t, *x0) == d.map());

  // Identity map is not a derivation: 1(e11 e11) != e11 + e11.
  try {
    Derivation(t, Matrix::identity(3));
    FAIL("expected NotADerivation");
  } catch (const NotADerivation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 0);
  }
  CHECK_THROWS_AS(Derivation(t, Matrix(2, 3)), DimensionMismatch);

  // The only derivation on N2 is outer.
  CHECK_FALSE(is_inner(Derivation(x, Matrix{{1}})));
  CHECK(satisfies_derivation_rule(*n2, x, Matrix{{5}}));
}

TEST_CASE("inner derivations push out to inner derivations") {
  auto n3 = catalog::strictly_upper(3);
  auto t3 = catalog::upper_triangular(3);
  Envelope env = catalog::unit_inclusion(n3, t3);
  Bimodule xb = regular_module(t3);
  Bimodule x = restrict_module(xb, env);
  Vector point{1, -2, 0, 3, 1, 7};
  Derivation d(x, ad(x, point));

  PushoutResult po = push_out(env, xb, d);
  CHECK(po.ok());
  const Bimodule& dcb = *po.dc.b_module();
  Vector ix = iota(po.dc).apply(point);
  for (std::size_t b = 0; b < 6; ++b) CHECK(po.d_tilde.column(b) == dcb.left(b).apply(ix) - dcb.right(b).apply(ix));
}

TEST_CASE("every derivation of the sample push-outs") {
  struct Case {
    Envelope env;
    Bimodule xb;
  };
  auto m2 = catalog::matrix_algebra(2);
  auto n2 = catalog::null_line();
  std::vector<Case> cases{{identity_envelope(m2), regular_module(m2)},
                          {unitization(n2), regular_module(unitization(n2).amb())},
                          {catalog::unit_inclusion(catalog::strictly_upper(3), catalog::upper_triangular(3)),
                           regular_module(catalog::upper_triangular(3))}};
  for (const auto& c : cases) {
    Bimodule x = restrict_module(c.xb, c.env);
    Subspace z = derivation_space(c.env.sub(), x);
    for (const Vector& v : z.basis()) {
      PushoutResult po = push_out(c.env, c.xb, Derivation(x, Matrix::unvec(x.dim(), x.alg()->dim(), v)));
      CHECK(po.in_centralizer);
      CHECK(po.derivation_rule);
      CHECK(po.diagram);
      CHECK(po.ideal_identities);
    }
  }
}

TEST_CASE("uniqueness needs span(A^2) = A") {
  auto n2 = catalog::null_line();
  Envelope env = unitization(n2);
  Bimodule xb = regular_module(env.amb());
  Derivation d(restrict_module(xb, env), Matrix{{1}, {0}});
  CHECK(push_out(env, xb, d).ok());
  CHECK_THROWS_AS(pushout_uniqueness(env, xb, d), SquareSpanDeficient);
  CHECK_THROWS_AS(pushout_unique(env, xb, d), SquareSpanDeficient);
  CHECK_THROWS_AS(pull_back_inner(env, xb, d), SquareSpanDeficient);

  // M2 as an ideal of M2 (+) k.
  auto m2k = catalog::direct_sum(catalog::matrix_algebra(2), catalog::ground_field(), "M2+k");
  Envelope summand = catalog::first_summand(catalog::matrix_algebra(2), m2k);
  Bimodule xk = regular_module(m2k);
  Bimodule xr = restrict_module(xk, summand);
  Subspace zk = derivation_space(summand.sub(), xr);
  for (const Vector& v : zk.basis()) CHECK(pushout_unique(summand, xk, Derivation(xr, Matrix::unvec(5, 4, v))));

  auto m2 = catalog::matrix_algebra(2);
  Envelope id = identity_envelope(m2);
  Bimodule xm = regular_module(m2);
  Subspace z = derivation_space(m2, xm);
  for (const Vector& v : z.basis()) {
    Derivation dm(xm, Matrix::unvec(4, 4, v));
    PushoutUniqueness u = pushout_uniqueness(id, xm, dm);
    CHECK(u.consistent);
    CHECK(u.unique);
    CHECK(u.solution_space_dim == 0);
  }
}

TEST_CASE("inner pull-back") {
  auto m2 = catalog::matrix_algebra(2);
  Envelope id = identity_envelope(m2);
  Bimodule xm = regular_module(m2);
  Subspace z = derivation_space(m2, xm);
  for (const Vector& v : z.basis()) {
    Derivation dm(xm, Matrix::unvec(4, 4, v));
    auto w = pull_back_inner(id, xm, dm);
    REQUIRE(w);
    CHECK(w->s - w->t == dm.map());
  }

  // T2 acting on a line, e11 on the left and e22 on the right; D(e12) = 1 is outer
  // and its push-out along the identity stays outer.
  auto t2 = catalog::upper_triangular(2);
  std::vector<Matrix> left{Matrix{{1}}, Matrix{{0}}, Matrix{{0}}};
  std::vector<Matrix> right{Matrix{{0}}, Matrix{{0}}, Matrix{{1}}};
  Bimodule line = new_bimodule(t2, 1, left, right);
  CHECK(h1(t2, line) == H1Dims{2, 1, 1});
  Derivation outer(line, Matrix{{0, 1, 0}});
  CHECK_FALSE(is_inner(outer));
  CHECK_FALSE(pull_back_inner(identity_envelope(t2), line, outer));
}
