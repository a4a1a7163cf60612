#include "pushout/algebra.hpp"

#include <sstream>

namespace pushout {

namespace {

std::string quadruple_message(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  std::ostringstream msg;
  msg << "NotAssociative(" << i << "," << j << "," << k << "," << l << ")";
  return msg.str();
}

std::string pair_message(const char* what, std::size_t i, std::size_t j) {
  std::ostringstream msg;
  msg << what << "(" << i << "," << j << ")";
  return msg.str();
}

std::string ideal_message(Side side, std::size_t b, std::size_t a) {
  std::ostringstream msg;
  msg << "NotIdeal(" << to_string(side) << "," << b << "," << a << ")";
  return msg.str();
}

}  // namespace

NotAssociative::NotAssociative(std::size_t i_, std::size_t j_, std::size_t k_, std::size_t l_)
    : ValidationError(quadruple_message(i_, j_, k_, l_)), i(i_), j(j_), k(k_), l(l_) {}

NotMultiplicative::NotMultiplicative(std::size_t i_, std::size_t j_)
    : ValidationError(pair_message("NotMultiplicative", i_, j_)), i(i_), j(j_) {}

NotIdeal::NotIdeal(Side side_, std::size_t b, std::size_t a)
    : ValidationError(ideal_message(side_, b, a)), side(side_), b_index(b), a_index(a) {}

std::string to_string(Side side) {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
  }
  return "?";
}

Algebra::Algebra(std::string name, std::vector<std::string> basis_names,
                 std::vector<Vector> products)
    : name_(std::move(name)), names_(std::move(basis_names)), products_(std::move(products)) {
  const std::size_t n = names_.size();
  if (products_.size() != n * n) throw DimensionMismatch("algebra: expected dim*dim products");
  for (const auto& p : products_)
    if (p.size() != n) throw DimensionMismatch("algebra: product vector length != dim");

  left_.assign(n, Matrix(n, n));
  right_.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        left_[i](k, j) = products_[i * n + j][k];
        right_[i](k, j) = products_[j * n + i][k];
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k versus e_i (e_j e_k)
        Vector lhs = right_[k].apply(products_[i * n + j]);
        Vector rhs = left_[i].apply(products_[j * n + k]);
        for (std::size_t l = 0; l < n; ++l)
          if (lhs[l] != rhs[l]) throw NotAssociative(i, j, k, l);
      }
}

Vector Algebra::product(const Vector& a, const Vector& b) const {
  return left_mult(a).apply(b);
}

Matrix Algebra::left_mult(const Vector& a) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(a[i]) != 0) m += a[i] * left_[i];
  return m;
}

Matrix Algebra::right_mult(const Vector& a) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(a[i]) != 0) m += a[i] * right_[i];
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

AlgebraPtr new_algebra(std::string name, std::vector<std::string> basis_names,
                       std::vector<Vector> products) {
  return std::make_shared<const Algebra>(std::move(name), std::move(basis_names),
                                         std::move(products));
}

Subspace square_span(const Algebra& a) {
  std::vector<Vector> products;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) products.push_back(a.basis_product(i, j));
  return Subspace::span(a.dim(), products);
}

Envelope::Envelope(AlgebraPtr sub, AlgebraPtr amb, Matrix embedding)
    : sub_(std::move(sub)), amb_(std::move(amb)), embedding_(std::move(embedding)) {
  const std::size_t na = sub_->dim();
  const std::size_t nb = amb_->dim();
  if (embedding_.rows() != nb || embedding_.cols() != na)
    throw DimensionMismatch("envelope: embedding must be dim(B) x dim(A)");
  if (rank(embedding_) != na) throw NotInjective("NotInjective: embedding has nontrivial kernel");

  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      Vector lhs = embedding_.apply(sub_->basis_product(i, j));
      Vector rhs = amb_->product(embedding_.column(i), embedding_.column(j));
      if (lhs != rhs) throw NotMultiplicative(i, j);
    }

  Subspace ideal = image(embedding_);
  left_on_sub_.assign(nb, Matrix(na, na));
  right_on_sub_.assign(nb, Matrix(na, na));
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t a = 0; a < na; ++a) {
      Vector ia = embedding_.column(a);
      Vector left = amb_->left_mult(b).apply(ia);
      if (!ideal.contains(left)) throw NotIdeal(Side::left, b, a);
      Vector right = amb_->right_mult(b).apply(ia);
      if (!ideal.contains(right)) throw NotIdeal(Side::right, b, a);
      left_on_sub_[b].set_column(a, preimage(embedding_, left));
      right_on_sub_[b].set_column(a, preimage(embedding_, right));
    }
}

Envelope new_envelope(AlgebraPtr sub, AlgebraPtr amb, Matrix embedding) {
  return Envelope(std::move(sub), std::move(amb), std::move(embedding));
}

Envelope unitization(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  const std::size_t m = n + 1;
  std::vector<std::string> names = a->basis_names();
  names.push_back("1");
  std::vector<Vector> products(m * m, Vector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector& p = products[i * m + j];
      if (i < n && j < n) {
        for (std::size_t k = 0; k < n; ++k) p[k] = a->structure_constant(i, j, k);
      } else if (i == n) {
        p[j] = 1;
      } else {
        p[i] = 1;
      }
    }
  auto amb = new_algebra(a->name() + "+", std::move(names), std::move(products));
  Matrix embedding(m, n);
  for (std::size_t i = 0; i < n; ++i) embedding(i, i) = 1;
  return Envelope(a, std::move(amb), std::move(embedding));
}

Envelope identity_envelope(const AlgebraPtr& a) {
  return Envelope(a, a, Matrix::identity(a->dim()));
}

}  // namespace pushout
