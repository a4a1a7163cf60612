#include "pushout/bimodule.hpp"

#include <sstream>

namespace pushout {

namespace {

std::string indexed(const char* what, std::size_t i, std::size_t j) {
  std::ostringstream msg;
  msg << what << "(" << i << "," << j << ")";
  return msg.str();
}

Matrix combination(const std::vector<Matrix>& ms, const Vector& a, std::size_t dim) {
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (sgn(a[i]) != 0) out += a[i] * ms[i];
  return out;
}

std::vector<Matrix> transposed(const std::vector<Matrix>& ms) {
  std::vector<Matrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.transpose());
  return out;
}

// Subspace of vectors v with m v in target, for each m.
Subspace colon(const std::vector<const std::vector<Matrix>*>& families, const Subspace& target,
               std::size_t dim) {
  Quotient q = quotient_basis(dim, target);
  std::vector<Matrix> blocks;
  for (const auto* family : families)
    for (const auto& m : *family) blocks.push_back(q.projection * m);
  if (blocks.empty() || q.dim() == 0) return Subspace::full(dim);
  return kernel(vstack(blocks));
}

}  // namespace

NotLeftAction::NotLeftAction(std::size_t i_, std::size_t j_)
    : ValidationError(indexed("NotLeftAction", i_, j_)), i(i_), j(j_) {}
NotRightAction::NotRightAction(std::size_t i_, std::size_t j_)
    : ValidationError(indexed("NotRightAction", i_, j_)), i(i_), j(j_) {}
ActionsDontCommute::ActionsDontCommute(std::size_t i_, std::size_t j_)
    : ValidationError(indexed("ActionsDontCommute", i_, j_)), i(i_), j(j_) {}

Bimodule::Bimodule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> left,
                   std::vector<Matrix> right)
    : alg_(std::move(alg)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {
  const std::size_t n = alg_->dim();
  if (left_.size() != n || right_.size() != n)
    throw DimensionMismatch("bimodule: need one action matrix per algebra basis element");
  for (std::size_t i = 0; i < n; ++i) {
    if (left_[i].rows() != dim_ || left_[i].cols() != dim_ || right_[i].rows() != dim_ ||
        right_[i].cols() != dim_)
      throw DimensionMismatch("bimodule: action matrices must be dim x dim");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& p = alg_->basis_product(i, j);
      if (this->left(p) != left_[i] * left_[j]) throw NotLeftAction(i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& p = alg_->basis_product(i, j);
      if (this->right(p) != right_[j] * right_[i]) throw NotRightAction(i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (left_[i] * right_[j] != right_[j] * left_[i]) throw ActionsDontCommute(i, j);
}

Matrix Bimodule::left(const Vector& a) const { return combination(left_, a, dim_); }
Matrix Bimodule::right(const Vector& a) const { return combination(right_, a, dim_); }

bool Bimodule::is_symmetric() const { return left_ == right_; }

Bimodule new_bimodule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> left,
                      std::vector<Matrix> right) {
  return Bimodule(std::move(alg), dim, std::move(left), std::move(right));
}

Bimodule regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    left.push_back(a->left_mult(i));
    right.push_back(a->right_mult(i));
  }
  return Bimodule(a, a->dim(), std::move(left), std::move(right));
}

Bimodule zero_module(const AlgebraPtr& a, std::size_t m) {
  std::vector<Matrix> zeros(a->dim(), Matrix(m, m));
  return Bimodule(a, m, zeros, zeros);
}

Bimodule dual_module(const Bimodule& x) {
  return Bimodule(x.alg(), x.dim(), transposed(x.right()), transposed(x.left()));
}

Bimodule restrict_module(const Bimodule& x_over_b, const Envelope& env) {
  if (x_over_b.alg()->dim() != env.amb()->dim())
    throw DimensionMismatch("restrict_module: module is not over the envelope's ambient algebra");
  std::vector<Matrix> left, right;
  for (std::size_t a = 0; a < env.sub()->dim(); ++a) {
    Vector b = env.embedding().column(a);
    left.push_back(x_over_b.left(b));
    right.push_back(x_over_b.right(b));
  }
  return Bimodule(env.sub(), x_over_b.dim(), std::move(left), std::move(right));
}

Bimodule ideal_module(const Envelope& env) {
  std::vector<Matrix> left, right;
  for (std::size_t b = 0; b < env.amb()->dim(); ++b) {
    left.push_back(env.left_on_sub(b));
    right.push_back(env.right_on_sub(b));
  }
  return Bimodule(env.amb(), env.sub()->dim(), std::move(left), std::move(right));
}

Bimodule outer_tensor_module(const AlgebraPtr& a) {
  const Matrix id = Matrix::identity(a->dim());
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    left.push_back(kronecker(a->left_mult(i), id));
    right.push_back(kronecker(id, a->right_mult(i)));
  }
  return Bimodule(a, a->dim() * a->dim(), std::move(left), std::move(right));
}

Bimodule submodule(const AlgebraPtr& alg, const std::vector<Matrix>& ambient_left,
                   const std::vector<Matrix>& ambient_right, const Subspace& sub) {
  std::vector<Matrix> left, right;
  for (const auto& m : ambient_left) left.push_back(restrict_map(m, sub, sub));
  for (const auto& m : ambient_right) right.push_back(restrict_map(m, sub, sub));
  return Bimodule(alg, sub.dim(), std::move(left), std::move(right));
}

QuotientModule quotient_module(const Bimodule& x, const Subspace& sub) {
  Quotient q = quotient_basis(x.dim(), sub);
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < x.alg()->dim(); ++i) {
    for (const auto* m : {&x.left(i), &x.right(i)}) {
      for (const auto& v : sub.basis())
        if (!is_zero(q.projection.apply(m->apply(v))))
          throw PreconditionError("quotient_module: subspace is not a sub-bimodule");
    }
    left.push_back(q.projection * x.left(i) * q.section);
    right.push_back(q.projection * x.right(i) * q.section);
  }
  return QuotientModule{Bimodule(x.alg(), q.dim(), std::move(left), std::move(right)), std::move(q)};
}

Annihilators annihilators(const Bimodule& x) {
  const Subspace zero(x.dim());
  Subspace left = colon({&x.left()}, zero, x.dim());
  Subspace right = colon({&x.right()}, zero, x.dim());
  Subspace both = intersect(left, right);
  return Annihilators{std::move(left), std::move(right), std::move(both)};
}

AnnihilatorFreeQuotient annihilator_free_quotient(const Bimodule& x, Side side) {
  std::vector<const std::vector<Matrix>*> families;
  if (side != Side::right) families.push_back(&x.left());
  if (side != Side::left) families.push_back(&x.right());

  std::vector<Subspace> stages{Subspace(x.dim())};
  for (;;) {
    Subspace next = colon(families, stages.back(), x.dim());
    if (next == stages.back()) break;
    stages.push_back(std::move(next));
  }
  QuotientModule qm = quotient_module(x, stages.back());
  Subspace n = stages.back();
  return AnnihilatorFreeQuotient{std::move(n), std::move(qm.module),
                                 std::move(qm.quotient.projection), std::move(stages)};
}

BalancedTensor balanced_tensor(const Bimodule& x, const Bimodule& y) {
  if (x.alg()->dim() != y.alg()->dim())
    throw PreconditionError("balanced_tensor: modules over different algebras");
  const std::size_t n = x.dim() * y.dim();
  const Matrix id_x = Matrix::identity(x.dim());
  const Matrix id_y = Matrix::identity(y.dim());

  std::vector<Vector> generators;
  for (std::size_t i = 0; i < x.alg()->dim(); ++i) {
    Matrix rel = kronecker(x.right(i), id_y) - kronecker(id_x, y.left(i));
    for (std::size_t c = 0; c < rel.cols(); ++c) generators.push_back(rel.column(c));
  }
  Subspace relations = Subspace::span(n, generators);

  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < x.alg()->dim(); ++i) {
    left.push_back(kronecker(x.left(i), id_y));
    right.push_back(kronecker(id_x, y.right(i)));
  }
  Bimodule full(x.alg(), n, std::move(left), std::move(right));
  QuotientModule qm = quotient_module(full, relations);
  return BalancedTensor{x.dim(), y.dim(), std::move(relations), std::move(qm.quotient),
                        std::move(qm.module)};
}

Matrix left_multiplication_map(const BalancedTensor& a_x, const Bimodule& x) {
  const std::size_t na = a_x.left_dim;
  if (a_x.right_dim != x.dim() || na != x.alg()->dim())
    throw DimensionMismatch("left_multiplication_map: tensor is not A (x)_A X");
  Matrix full(x.dim(), na * x.dim());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t u = 0; u < x.dim(); ++u)
      full.set_column(i * x.dim() + u, x.left(i).column(u));
  return full * a_x.section();
}

Matrix right_multiplication_map(const BalancedTensor& x_a, const Bimodule& x) {
  const std::size_t na = x_a.right_dim;
  if (x_a.left_dim != x.dim() || na != x.alg()->dim())
    throw DimensionMismatch("right_multiplication_map: tensor is not X (x)_A A");
  Matrix full(x.dim(), x.dim() * na);
  for (std::size_t u = 0; u < x.dim(); ++u)
    for (std::size_t i = 0; i < na; ++i) full.set_column(u * na + i, x.right(i).column(u));
  return full * x_a.section();
}

InducedCheck is_induced(const Bimodule& x) {
  Bimodule reg = regular_module(x.alg());
  BalancedTensor a_x = balanced_tensor(reg, x);
  BalancedTensor a_x_a = balanced_tensor(a_x.module, reg);
  Matrix exterior = left_multiplication_map(a_x, x) * right_multiplication_map(a_x_a, a_x.module);
  bool induced = is_bijective(exterior);
  return InducedCheck{induced, a_x_a.dim(), std::move(exterior)};
}

bool is_self_induced(const AlgebraPtr& a) {
  Bimodule reg = regular_module(a);
  BalancedTensor a_a = balanced_tensor(reg, reg);
  return is_bijective(left_multiplication_map(a_a, reg));
}

HomModule hom_left(const AlgebraPtr& a, const Bimodule& x) {
  const std::size_t na = a->dim();
  const std::size_t nx = x.dim();
  const Matrix id_a = Matrix::identity(na);
  const Matrix id_x = Matrix::identity(nx);
  // T L_A(k) = lambda(k) T  <=>  (L_A(k)^T (x) I - I (x) lambda(k)) vec T = 0
  std::vector<Matrix> constraints;
  for (std::size_t k = 0; k < na; ++k)
    constraints.push_back(kronecker(a->left_mult(k).transpose(), id_x) - kronecker(id_a, x.left(k)));
  Subspace maps = constraints.empty() ? Subspace::full(na * nx) : kernel(vstack(constraints));

  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < na; ++i) {
    left.push_back(kronecker(a->right_mult(i).transpose(), id_x));  // T(. a)
    right.push_back(kronecker(id_a, x.right(i)));                   // T(.).a
  }
  Bimodule module = submodule(a, left, right, maps);
  return HomModule{std::move(maps), std::move(module), nx, na};
}

HomModule hom_right(const AlgebraPtr& a, const Bimodule& x) {
  const std::size_t na = a->dim();
  const std::size_t nx = x.dim();
  const Matrix id_a = Matrix::identity(na);
  const Matrix id_x = Matrix::identity(nx);
  // S R_A(k) = rho(k) S
  std::vector<Matrix> constraints;
  for (std::size_t k = 0; k < na; ++k)
    constraints.push_back(kronecker(a->right_mult(k).transpose(), id_x) - kronecker(id_a, x.right(k)));
  Subspace maps = constraints.empty() ? Subspace::full(na * nx) : kernel(vstack(constraints));

  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < na; ++i) {
    left.push_back(kronecker(id_a, x.left(i)));                     // a.S(.)
    right.push_back(kronecker(a->left_mult(i).transpose(), id_x));  // S(a .)
  }
  Bimodule module = submodule(a, left, right, maps);
  return HomModule{std::move(maps), std::move(module), nx, na};
}

HomTensorDuality hom_tensor_duality(const AlgebraPtr& a, const Bimodule& x) {
  const std::size_t na = a->dim();
  const std::size_t nx = x.dim();
  const Bimodule reg = regular_module(a);
  const Bimodule x_dual = dual_module(x);

  // <a (x) x, Phi_S> = <x, S(a)>: on A (x) X coordinates i * nx + u this is
  // S(u, i), which is exactly vec(S).
  auto left_pairing = [&](const HomModule& hom) {
    Matrix functionals(na * nx, hom.maps.dim());
    for (std::size_t k = 0; k < hom.maps.dim(); ++k) functionals.set_column(k, hom.maps.basis()[k]);
    return functionals;
  };
  // <x (x) a, Psi_T> = <x, T(a)>: on X (x) A coordinates u * na + i.
  auto right_pairing = [&](const HomModule& hom) {
    Matrix functionals(nx * na, hom.maps.dim());
    for (std::size_t k = 0; k < hom.maps.dim(); ++k) {
      Matrix tm = hom.map(k);
      for (std::size_t u = 0; u < nx; ++u)
        for (std::size_t i = 0; i < na; ++i) functionals(u * na + i, k) = tm(u, i);
    }
    return functionals;
  };

  auto check = [&](const HomModule& hom, const BalancedTensor& t, const Matrix& functionals) {
    // Each functional must vanish on the balancing relations.
    for (const auto& r : t.relations.basis())
      if (!is_zero(functionals.transpose().apply(r))) return false;
    Matrix pairing = t.section().transpose() * functionals;  // (tensor)* coords x hom coords
    if (!is_bijective(pairing)) return false;
    return is_bimodule_map(pairing, hom.module, dual_module(t.module));
  };

  BalancedTensor a_x = balanced_tensor(reg, x);
  BalancedTensor x_a = balanced_tensor(x, reg);
  HomModule h_right = hom_right(a, x_dual);
  HomModule h_left = hom_left(a, x_dual);
  HomTensorDuality result;
  result.left_iso = check(h_right, a_x, left_pairing(h_right));
  result.right_iso = check(h_left, x_a, right_pairing(h_left));
  return result;
}

bool hom_tensor_duality_check(const AlgebraPtr& a, const Bimodule& x) {
  return hom_tensor_duality(a, x).holds();
}

bool is_bijective(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

bool is_bimodule_map(const Matrix& m, const Bimodule& from, const Bimodule& to) {
  if (m.rows() != to.dim() || m.cols() != from.dim()) return false;
  for (std::size_t i = 0; i < from.alg()->dim(); ++i) {
    if (m * from.left(i) != to.left(i) * m) return false;
    if (m * from.right(i) != to.right(i) * m) return false;
  }
  return true;
}

}  // namespace pushout
