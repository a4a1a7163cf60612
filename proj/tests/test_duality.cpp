#include <doctest.h>

#include "pushout/catalog.hpp"
#include "pushout/duality.hpp"

using namespace pushout;

TEST_CASE("dual isomorphism on regular modules") {
  for (const auto& a : {catalog::ground_field(), catalog::null_line(), catalog::matrix_algebra(2),
                        catalog::upper_triangular(2), catalog::strictly_upper(3), catalog::first_row()}) {
    CAPTURE(a->name());
    Bimodule x = regular_module(a);
    DualIsoReport r = dual_iso(a, x);
    CHECK(r.bijective);
    CHECK(r.intertwines);
    CHECK(r.centralizer_dim == r.quotient_dim);
    CHECK(r.centralizer_dim == double_centralizer(a, dual_module(x)).dim());
    CHECK(factorization_check(a, x));
    CHECK(injectivity_surjectivity_check(a, x));
  }
}

TEST_CASE("predual pieces") {
  auto n3 = catalog::strictly_upper(3);
  Bimodule x = regular_module(n3);
  PredualData p = build_predual(n3, x);
  CHECK(p.sum.dim() == p.left.dim() + p.right.dim());
  CHECK(p.mu.rows() == 3);
  CHECK(p.mu.cols() == p.sum.dim());
  CHECK(p.quotient.dim() == p.sum.dim() - p.n_sub.dim());
  // A.X + X.A = span{e13} for N3, so mu is not onto.
  CHECK(rank(p.mu) == 1);
  InjectivitySurjectivity is = injectivity_surjectivity(n3, x);
  CHECK_FALSE(is.mu_surjective);
  CHECK_FALSE(is.iota_dual_injective);
  CHECK(is.holds());

  CentralizerModule dc_dual = double_centralizer(n3, dual_module(x));
  Matrix theta = canonical_pairing(p, dc_dual);
  CHECK(theta.rows() == dc_dual.dim());
  CHECK(theta.cols() == p.quotient.dim());
  CHECK(is_bijective(theta));
}

TEST_CASE("induced modules have bijective dual iota") {
  auto m2 = catalog::matrix_algebra(2);
  CHECK(induced_dual_iso_check(m2, regular_module(m2)));
  CHECK(induced_dual_iso_check(m2, outer_tensor_module(m2)));
  PredualData p = build_predual(m2, regular_module(m2));
  CHECK(kernel_mu_in_n(p));
  auto n3 = catalog::strictly_upper(3);
  CHECK_THROWS_AS(induced_dual_iso_check(n3, regular_module(n3)), NotInduced);
}

TEST_CASE("zero-action duals") {
  auto n2 = catalog::null_line();
  Bimodule z = zero_module(n2, 2);
  DualIsoReport r = dual_iso(n2, z);
  CHECK(r.holds());
  CHECK(r.centralizer_dim == 4);
  InjectivitySurjectivity is = injectivity_surjectivity(n2, z);
  CHECK_FALSE(is.mu_surjective);
  CHECK(is.holds());
}
