#include <doctest.h>

#include "pushout/catalog.hpp"
#include "pushout/bimodule.hpp"

using namespace pushout;

TEST_CASE("action axioms") {
  auto m2 = catalog::matrix_algebra(2);
  CHECK_NOTHROW(regular_module(m2));
  CHECK_NOTHROW(zero_module(m2, 3));

  // k over M2 with e11 acting as 1 on the left and every other unit as 0:
  // e12 e21 = e11 would need 1 = 0.
  std::vector<Matrix> left(4, Matrix(1, 1)), right(4, Matrix(1, 1));
  left[0] = Matrix{{1}};
  CHECK_THROWS_AS(new_bimodule(m2, 1, left, right), NotLeftAction);
  CHECK_THROWS_AS(new_bimodule(m2, 1, right, left), NotRightAction);

  // Each side is a valid nilpotent action on Q^2 but the two do not commute.
  auto n2 = catalog::null_line();
  CHECK_THROWS_AS(new_bimodule(n2, 2, {Matrix{{0, 1}, {0, 0}}}, {Matrix{{0, 0}, {1, 0}}}), ActionsDontCommute);
}

TEST_CASE("dual modules") {
  auto n3 = catalog::strictly_upper(3);
  Bimodule x = regular_module(n3);
  Bimodule d = dual_module(x);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(d.left(i) == x.right(i).transpose());
    CHECK(d.right(i) == x.left(i).transpose());
  }
  CHECK(dual_module(d) == x);
  CHECK(dual_module(zero_module(n3, 2)) == zero_module(n3, 2));
}

TEST_CASE("annihilators") {
  auto m2 = catalog::matrix_algebra(2);
  Annihilators z = annihilators(zero_module(m2, 2));
  CHECK(z.left == Subspace::full(2));
  CHECK(z.both == Subspace::full(2));
  Annihilators r = annihilators(regular_module(m2));
  CHECK(r.left.dim() == 0);
  CHECK(r.right.dim() == 0);
  Annihilators n = annihilators(regular_module(catalog::null_line()));
  CHECK(n.both == Subspace::full(1));

  // First row algebra: e11 is a left unit, and e12.A = 0.
  Annihilators r2 = annihilators(regular_module(catalog::first_row()));
  CHECK(r2.left.dim() == 0);
  CHECK(r2.right.dim() == 1);
  CHECK(r2.both.dim() == 0);
}

TEST_CASE("annihilator-free quotient") {
  auto m2 = catalog::matrix_algebra(2);
  auto free = annihilator_free_quotient(regular_module(m2), Side::two_sided);
  CHECK(free.n.dim() == 0);
  CHECK(free.quotient == regular_module(m2));

  auto zero = annihilator_free_quotient(zero_module(m2, 3), Side::left);
  CHECK(zero.n == Subspace::full(3));
  CHECK(zero.quotient.dim() == 0);

  Bimodule n3 = regular_module(catalog::strictly_upper(3));
  for (Side side : {Side::left, Side::right, Side::two_sided}) {
    auto q = annihilator_free_quotient(n3, side);
    CHECK(q.steps() <= 3);
    Annihilators ann = annihilators(q.quotient);
    const Subspace& s = side == Side::left ? ann.left : side == Side::right ? ann.right : ann.both;
    CHECK(s.dim() == 0);
    // stages increase strictly and end at n
    for (std::size_t k = 0; k + 1 < q.stages.size(); ++k) {
      CHECK(q.stages[k + 1].contains(q.stages[k]));
      CHECK(q.stages[k + 1].dim() > q.stages[k].dim());
    }
    CHECK(q.stages.back() == q.n);
    CHECK(annihilator_free_quotient(q.quotient, side).n.dim() == 0);
  }
  // Left side: A.e12 = 0 and A.e13 = 0, since only e12 e23 is nonzero.
  auto left = annihilator_free_quotient(n3, Side::left);
  CHECK(left.stages[1].dim() == 2);
}

TEST_CASE("balanced tensor products") {
  auto m2 = catalog::matrix_algebra(2);
  Bimodule reg = regular_module(m2);
  BalancedTensor t = balanced_tensor(reg, reg);
  CHECK(t.dim() == 4);
  CHECK(is_bijective(left_multiplication_map(t, reg)));

  // projection kills every balancing generator x.a (x) y - x (x) a.y
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = 0; v < 4; ++v) {
        Vector g(16);
        Vector xa = reg.right(i).column(u), ay = reg.left(i).column(v);
        for (std::size_t p = 0; p < 4; ++p) {
          g[p * 4 + v] += xa[p];
          g[u * 4 + p] -= ay[p];
        }
        CHECK(is_zero(t.projection().apply(g)));
      }

  // X zero-action: X (x)_A Y = X (x) (Y / A.Y)
  Bimodule z = zero_module(m2, 2);
  CHECK(balanced_tensor(z, reg).dim() == 0);
  auto n2 = catalog::null_line();
  CHECK(balanced_tensor(zero_module(n2, 2), regular_module(n2)).dim() == 2);
  CHECK(balanced_tensor(zero_module(m2, 0), reg).dim() == 0);
}

TEST_CASE("induced and self-induced") {
  CHECK(is_induced(regular_module(catalog::matrix_algebra(2))).induced);
  CHECK_FALSE(is_induced(zero_module(catalog::matrix_algebra(2), 2)).induced);
  CHECK_FALSE(is_induced(regular_module(catalog::strictly_upper(3))).induced);
  CHECK(is_induced(outer_tensor_module(catalog::matrix_algebra(2))).induced);
  CHECK(is_self_induced(catalog::matrix_algebra(2)));
  CHECK(is_self_induced(catalog::upper_triangular(3)));
  CHECK(is_self_induced(catalog::ground_field()));
  CHECK_FALSE(is_self_induced(catalog::null_line()));
}

TEST_CASE("hom modules") {
  auto t2 = catalog::upper_triangular(2);
  Bimodule x = regular_module(t2);
  CHECK(hom_left(t2, x).maps.dim() == x.dim());
  CHECK(hom_right(t2, x).maps.dim() == x.dim());
  CHECK(hom_left(t2, zero_module(t2, 0)).maps.dim() == 0);
  auto n2 = catalog::null_line();
  CHECK(hom_left(n2, regular_module(n2)).maps.dim() == 1);
  CHECK(hom_right(n2, regular_module(n2)).maps.dim() == 1);

  // For unital A the evaluation T -> T(1) is an iso onto X.
  HomModule h = hom_left(t2, x);
  Vector one{1, 0, 1};
  std::vector<Vector> images;
  for (std::size_t k = 0; k < h.maps.dim(); ++k) images.push_back(h.map(k).apply(one));
  CHECK(Subspace::span(3, images).dim() == 3);
}

TEST_CASE("hom-tensor duality") {
  CHECK(hom_tensor_duality_check(catalog::ground_field(), regular_module(catalog::ground_field())));
  CHECK(hom_tensor_duality_check(catalog::matrix_algebra(2), regular_module(catalog::matrix_algebra(2))));
  auto n3 = catalog::strictly_upper(3);
  CHECK(hom_tensor_duality_check(n3, regular_module(n3)));
  CHECK(hom_tensor_duality_check(n3, zero_module(n3, 2)));
}

TEST_CASE("restriction along an envelope") {
  auto n3 = catalog::strictly_upper(3);
  auto t3 = catalog::upper_triangular(3);
  Envelope env = catalog::unit_inclusion(n3, t3);
  Bimodule x = restrict_module(regular_module(t3), env);
  CHECK(x.dim() == 6);
  CHECK(x.alg()->dim() == 3);
  Bimodule ideal = ideal_module(env);
  CHECK(ideal.dim() == 3);
  CHECK(restrict_module(ideal, env) == regular_module(n3));
}
