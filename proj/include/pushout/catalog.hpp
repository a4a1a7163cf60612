#pragma once

#include "pushout/algebra.hpp"

namespace pushout::catalog {

/// k: one idempotent basis element.
AlgebraPtr ground_field();
/// N2: one basis element n with n * n = 0.
AlgebraPtr null_line();
/// Full matrix algebra M_n over matrix units e_pq, row-major.
AlgebraPtr matrix_algebra(std::size_t n);
/// Upper triangular n x n matrices T_n over units e_pq, p <= q.
AlgebraPtr upper_triangular(std::size_t n);
/// Strictly upper triangular n x n matrices N_n over units e_pq, p < q.
AlgebraPtr strictly_upper(std::size_t n);
/// Span of the first row of M_2: {e11, e12}. Left unital, no right unit.
AlgebraPtr first_row();
/// Q^n with coordinatewise product.
AlgebraPtr diagonal(std::size_t n);
/// A (+) B with componentwise product; B's basis follows A's.
AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b, std::string name);

/// Inclusion of a subset of matrix units, e.g. N_n inside T_n.
Envelope unit_inclusion(const AlgebraPtr& sub, const AlgebraPtr& amb);
/// A inside A (+) B as the first summand.
Envelope first_summand(const AlgebraPtr& a, const AlgebraPtr& sum);

}  // namespace pushout::catalog
