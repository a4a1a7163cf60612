#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pushout/exactla.hpp"

namespace pushout {

/// Associativity fails at ((e_i e_j) e_k - e_i (e_j e_k)) coefficient l.
struct NotAssociative : ValidationError {
  NotAssociative(std::size_t i, std::size_t j, std::size_t k, std::size_t l);
  std::size_t i, j, k, l;
};

struct NotInjective : ValidationError {
  using ValidationError::ValidationError;
};

struct NotMultiplicative : ValidationError {
  NotMultiplicative(std::size_t i, std::size_t j);
  std::size_t i, j;
};

enum class Side { left, right, two_sided };

std::string to_string(Side side);

/// b * iota(a) (side left) or iota(a) * b (side right) leaves iota(A).
struct NotIdeal : ValidationError {
  NotIdeal(Side side, std::size_t b_index, std::size_t a_index);
  Side side;
  std::size_t b_index, a_index;
};

/// Finite-dimensional associative algebra over Q given by structure
/// constants: e_i * e_j = sum_k c(i,j,k) e_k.
class Algebra {
 public:
  /// products[i * dim + j] is the coordinate vector of e_i * e_j.
  /// Throws NotAssociative naming the first failing quadruple.
  Algebra(std::string name, std::vector<std::string> basis_names, std::vector<Vector> products);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return products_[i * dim() + j][k];
  }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vector product(const Vector& a, const Vector& b) const;

  /// Matrix of x -> e_i x.
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  /// Matrix of x -> x e_i.
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix left_mult(const Vector& a) const;
  Matrix right_mult(const Vector& a) const;

  bool is_commutative() const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Vector> products_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr new_algebra(std::string name, std::vector<std::string> basis_names,
                       std::vector<Vector> products);

/// span{ e_i e_j } inside A.
Subspace square_span(const Algebra& a);

/// B containing A as a two-sided ideal through an injective homomorphism.
class Envelope {
 public:
  /// embedding is dim(B) x dim(A). Throws NotInjective, NotMultiplicative
  /// or NotIdeal.
  Envelope(AlgebraPtr sub, AlgebraPtr amb, Matrix embedding);

  const AlgebraPtr& sub() const { return sub_; }
  const AlgebraPtr& amb() const { return amb_; }
  const Matrix& embedding() const { return embedding_; }

  /// a -> iota^{-1}(b iota(a)) as a dim(A) x dim(A) matrix, b a basis element of B.
  const Matrix& left_on_sub(std::size_t b) const { return left_on_sub_[b]; }
  /// a -> iota^{-1}(iota(a) b).
  const Matrix& right_on_sub(std::size_t b) const { return right_on_sub_[b]; }

 private:
  AlgebraPtr sub_;
  AlgebraPtr amb_;
  Matrix embedding_;
  std::vector<Matrix> left_on_sub_;
  std::vector<Matrix> right_on_sub_;
};

Envelope new_envelope(AlgebraPtr sub, AlgebraPtr amb, Matrix embedding);

/// A+ = A (+) Q 1 with 1 a two-sided identity; the adjoined unit is the
/// last basis element.
Envelope unitization(const AlgebraPtr& a);

/// (A, A, identity).
Envelope identity_envelope(const AlgebraPtr& a);

}  // namespace pushout
