#pragma once

#include <vector>

#include "pushout/algebra.hpp"

namespace pushout {

struct NotLeftAction : ValidationError {
  NotLeftAction(std::size_t i, std::size_t j);
  std::size_t i, j;
};

struct NotRightAction : ValidationError {
  NotRightAction(std::size_t i, std::size_t j);
  std::size_t i, j;
};

struct ActionsDontCommute : ValidationError {
  ActionsDontCommute(std::size_t i, std::size_t j);
  std::size_t i, j;
};

/// Finite-dimensional A-bimodule. left(i) is x -> e_i.x and right(i) is
/// x -> x.e_i, both dim x dim.
class Bimodule {
 public:
  /// Checks lambda(e_i e_j) = lambda(i) lambda(j), rho(e_i e_j) =
  /// rho(j) rho(i) and lambda(i) rho(j) = rho(j) lambda(i) for all i, j.
  Bimodule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right);

  const AlgebraPtr& alg() const { return alg_; }
  std::size_t dim() const { return dim_; }
  const Matrix& left(std::size_t i) const { return left_[i]; }
  const Matrix& right(std::size_t i) const { return right_[i]; }
  const std::vector<Matrix>& left() const { return left_; }
  const std::vector<Matrix>& right() const { return right_; }
  Matrix left(const Vector& a) const;
  Matrix right(const Vector& a) const;

  /// True when e_i.x = x.e_i for all i.
  bool is_symmetric() const;

  friend bool operator==(const Bimodule& a, const Bimodule& b) {
    return a.dim_ == b.dim_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  AlgebraPtr alg_;
  std::size_t dim_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

Bimodule new_bimodule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> left,
                      std::vector<Matrix> right);

/// A acting on itself by multiplication.
Bimodule regular_module(const AlgebraPtr& a);
/// Q^m with zero actions.
Bimodule zero_module(const AlgebraPtr& a, std::size_t m);
/// (a.f)(x) = f(x.a), (f.a)(x) = f(a.x): left(i) = right(i)^T, right(i) = left(i)^T.
Bimodule dual_module(const Bimodule& x);
/// A-bimodule obtained from a B-bimodule through the envelope's embedding.
Bimodule restrict_module(const Bimodule& x_over_b, const Envelope& env);
/// The ideal A as a B-bimodule, b.a = iota^{-1}(b iota(a)).
Bimodule ideal_module(const Envelope& env);
/// Outer bimodule A (x) A: a.(u (x) v) = au (x) v, (u (x) v).a = u (x) va.
Bimodule outer_tensor_module(const AlgebraPtr& a);

/// Restriction of ambient actions to an invariant subspace, in the
/// subspace's echelon coordinates.
Bimodule submodule(const AlgebraPtr& alg, const std::vector<Matrix>& ambient_left,
                   const std::vector<Matrix>& ambient_right, const Subspace& sub);

struct QuotientModule {
  Bimodule module;
  Quotient quotient;
};

/// X / sub; sub must be a sub-bimodule.
QuotientModule quotient_module(const Bimodule& x, const Subspace& sub);

struct Annihilators {
  Subspace left;   // {x | A.x = 0}
  Subspace right;  // {x | x.A = 0}
  Subspace both;
};

Annihilators annihilators(const Bimodule& x);

struct AnnihilatorFreeQuotient {
  Subspace n;                 // smallest submodule with annihilator-free quotient
  Bimodule quotient;
  Matrix projection;          // X -> X / n
  std::vector<Subspace> stages;  // N_0 = {0}, N_1, ..., N_k = n
  std::size_t steps() const { return stages.size() - 1; }
};

/// Iterates N_{k+1} = N_k : A until stable. For side left the colon is
/// {x | A.x in N}, for right {x | x.A in N}, for two_sided both.
AnnihilatorFreeQuotient annihilator_free_quotient(const Bimodule& x, Side side);

/// X (x)_A Y realized as a quotient of the dim(X) * dim(Y) coordinate
/// space. Coordinates are x-index major: x_u (x) y_v sits at u * dim(Y) + v.
struct BalancedTensor {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  Subspace relations;   // span{ x.a (x) y - x (x) a.y }
  Quotient quotient;
  Bimodule module;      // A acts on the left factor from the left, right factor from the right

  const Matrix& projection() const { return quotient.projection; }
  const Matrix& section() const { return quotient.section; }
  std::size_t dim() const { return quotient.dim(); }
};

BalancedTensor balanced_tensor(const Bimodule& x, const Bimodule& y);

/// a (x) x -> a.x on A (x)_A X, as a dim(X) x dim(tensor) matrix.
Matrix left_multiplication_map(const BalancedTensor& a_x, const Bimodule& x);
/// x (x) a -> x.a on X (x)_A A.
Matrix right_multiplication_map(const BalancedTensor& x_a, const Bimodule& x);

struct InducedCheck {
  bool induced = false;
  std::size_t tensor_dim = 0;
  Matrix exterior;  // A (x)_A X (x)_A A -> X, a (x) x (x) a' -> a.x.a'
};

InducedCheck is_induced(const Bimodule& x);
bool is_self_induced(const AlgebraPtr& a);

/// A hom-module materialized as a subspace of column-major vectorized
/// dim(X) x dim(A) matrices, with its bimodule structure.
struct HomModule {
  Subspace maps;
  Bimodule module;
  std::size_t target_dim = 0;
  std::size_t source_dim = 0;

  Matrix map(std::size_t k) const { return Matrix::unvec(target_dim, source_dim, maps.basis()[k]); }
};

/// Left module maps T(a alpha) = a.T(alpha) with a.T = T(. a), T.a = T(.).a.
HomModule hom_left(const AlgebraPtr& a, const Bimodule& x);
/// Right module maps S(alpha a) = S(alpha).a with a.S = a.S(.), S.a = S(a .).
HomModule hom_right(const AlgebraPtr& a, const Bimodule& x);

struct HomTensorDuality {
  bool left_iso = false;   // (A (x)_A X)* = h_A(A, X*)
  bool right_iso = false;  // (X (x)_A A)* = _A h(A, X*)
  bool holds() const { return left_iso && right_iso; }
};

HomTensorDuality hom_tensor_duality(const AlgebraPtr& a, const Bimodule& x);
bool hom_tensor_duality_check(const AlgebraPtr& a, const Bimodule& x);

/// True when m is bijective, i.e. square with full rank.
bool is_bijective(const Matrix& m);

/// Checks m * from.left(i) = to.left(i) * m and likewise on the right.
bool is_bimodule_map(const Matrix& m, const Bimodule& from, const Bimodule& to);

}  // namespace pushout
