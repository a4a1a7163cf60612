#include "pushout/centralizer.hpp"

#include <sstream>
#include <stdexcept>

#include "pushout/derivation.hpp"

namespace pushout {

namespace {

std::string absorption_message(Side side, std::size_t i, std::size_t k) {
  std::ostringstream msg;
  msg << "AbsorptionFails(" << to_string(side) << "," << i << "," << k << ")";
  return msg.str();
}

// Linear conditions on [vec S; vec T] cutting out the double centralizers.
Subspace centralizer_space(const Algebra& a, const Bimodule& x) {
  const std::size_t na = a.dim();
  const std::size_t nx = x.dim();
  const std::size_t m = na * nx;
  const Matrix id_a = Matrix::identity(na);
  const Matrix id_x = Matrix::identity(nx);
  const Matrix zero_block(m, m);

  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < na; ++k) {
    // S(alpha e_k) = S(alpha).e_k
    Matrix s_cond = kronecker(a.right_mult(k).transpose(), id_x) - kronecker(id_a, x.right(k));
    blocks.push_back(hstack({s_cond, zero_block}));
    // T(e_k alpha) = e_k.T(alpha)
    Matrix t_cond = kronecker(a.left_mult(k).transpose(), id_x) - kronecker(id_a, x.left(k));
    blocks.push_back(hstack({zero_block, t_cond}));
  }
  // e_k.S(e_j) = T(e_k).e_j
  Matrix cross(na * na * nx, 2 * m);
  std::size_t row = 0;
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t u = 0; u < nx; ++u, ++row)
        for (std::size_t w = 0; w < nx; ++w) {
          cross(row, j * nx + w) += x.left(k)(u, w);
          cross(row, m + k * nx + w) -= x.right(j)(u, w);
        }
  blocks.push_back(std::move(cross));
  if (2 * m == 0) return Subspace(0);
  return kernel(vstack(blocks));
}

std::vector<Matrix> pair_actions_left(const Algebra& a, const Bimodule& x) {
  const Matrix id_a = Matrix::identity(a.dim());
  const Matrix id_x = Matrix::identity(x.dim());
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    out.push_back(direct_sum(kronecker(id_a, x.left(i)),                      // a.S(.)
                             kronecker(a.right_mult(i).transpose(), id_x)));  // T(. a)
  return out;
}

std::vector<Matrix> pair_actions_right(const Algebra& a, const Bimodule& x) {
  const Matrix id_a = Matrix::identity(a.dim());
  const Matrix id_x = Matrix::identity(x.dim());
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    out.push_back(direct_sum(kronecker(a.left_mult(i).transpose(), id_x),  // S(a .)
                             kronecker(id_a, x.right(i))));                // T(.).a
  return out;
}

}  // namespace

AbsorptionFails::AbsorptionFails(Side side_, std::size_t i, std::size_t k)
    : PreconditionError(absorption_message(side_, i, k)), side(side_), alg_index(i), element_index(k) {}

CentralizerModule::CentralizerModule(AlgebraPtr alg, Bimodule x)
    : alg_(std::move(alg)),
      x_(std::move(x)),
      space_(centralizer_space(*alg_, x_)),
      pair_left_a_(pair_actions_left(*alg_, x_)),
      pair_right_a_(pair_actions_right(*alg_, x_)),
      a_module_(submodule(alg_, pair_left_a_, pair_right_a_, space_)) {}

Vector CentralizerModule::encode(const CentralizerPair& p) const {
  Vector v = p.s.vec();
  Vector t = p.t.vec();
  v.insert(v.end(), t.begin(), t.end());
  return v;
}

CentralizerPair CentralizerModule::decode_pair(const Vector& pair_coords) const {
  const std::size_t m = pair_dim() / 2;
  Vector s(pair_coords.begin(), pair_coords.begin() + static_cast<std::ptrdiff_t>(m));
  Vector t(pair_coords.begin() + static_cast<std::ptrdiff_t>(m), pair_coords.end());
  return {Matrix::unvec(x_.dim(), alg_->dim(), s), Matrix::unvec(x_.dim(), alg_->dim(), t)};
}

CentralizerPair CentralizerModule::inner_pair(const Vector& x) const {
  CentralizerPair p{Matrix(x_.dim(), alg_->dim()), Matrix(x_.dim(), alg_->dim())};
  for (std::size_t j = 0; j < alg_->dim(); ++j) {
    p.s.set_column(j, x_.right(j).apply(x));
    p.t.set_column(j, x_.left(j).apply(x));
  }
  return p;
}

bool CentralizerModule::satisfies_definition(const CentralizerPair& p) const {
  const Algebra& a = *alg_;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector& prod = a.basis_product(i, j);
      if (p.s.apply(prod) != x_.right(j).apply(p.s.column(i))) return false;
      if (p.t.apply(prod) != x_.left(i).apply(p.t.column(j))) return false;
      if (x_.left(i).apply(p.s.column(j)) != x_.right(j).apply(p.t.column(i))) return false;
    }
  return true;
}

CentralizerModule double_centralizer(const AlgebraPtr& a, const Bimodule& x) {
  if (x.alg()->dim() != a->dim()) throw PreconditionError("double_centralizer: module is not over A");
  return CentralizerModule(a, x);
}

Matrix iota(const CentralizerModule& dc) {
  Matrix out(dc.dim(), dc.x().dim());
  for (std::size_t u = 0; u < dc.x().dim(); ++u)
    out.set_column(u, dc.coordinates(dc.inner_pair(unit_vector(dc.x().dim(), u))));
  return out;
}

CentralizerModule attach_envelope_actions(const CentralizerModule& dc, const Envelope& env,
                                          const Bimodule& x_as_b) {
  if (env.sub()->dim() != dc.alg()->dim() || x_as_b.alg()->dim() != env.amb()->dim())
    throw DimensionMismatch("attach_envelope_actions: envelope does not match the module");
  if (!(restrict_module(x_as_b, env) == dc.x()))
    throw RestrictionMismatch("RestrictionMismatch: B-module does not restrict to X");

  const std::size_t na = dc.alg()->dim();
  const Matrix id_a = Matrix::identity(na);
  const Matrix id_x = Matrix::identity(dc.x().dim());
  CentralizerModule out = dc;
  out.pair_left_b_.clear();
  out.pair_right_b_.clear();
  for (std::size_t b = 0; b < env.amb()->dim(); ++b) {
    // bL(a) = b.L(a), bR(a) = R(ab)
    out.pair_left_b_.push_back(direct_sum(kronecker(id_a, x_as_b.left(b)),
                                          kronecker(env.right_on_sub(b).transpose(), id_x)));
    // L^b(a) = L(ba), R^b(a) = R(a).b
    out.pair_right_b_.push_back(direct_sum(kronecker(env.left_on_sub(b).transpose(), id_x),
                                           kronecker(id_a, x_as_b.right(b))));
  }
  std::vector<Matrix> left, right;
  for (std::size_t b = 0; b < env.amb()->dim(); ++b) {
    try {
      left.push_back(restrict_map(out.pair_left_b_[b], out.space_, out.space_));
      right.push_back(restrict_map(out.pair_right_b_[b], out.space_, out.space_));
    } catch (const PreconditionError&) {
      throw std::logic_error("NotClosed: B-action leaves the double centralizer space");
    }
  }
  Bimodule b_module(env.amb(), out.dim(), std::move(left), std::move(right));
  // Restricting the B-actions along the embedding must give the A-actions.
  for (std::size_t a = 0; a < na; ++a) {
    Vector b = env.embedding().column(a);
    if (b_module.left(b) != out.a_module_.left(a) || b_module.right(b) != out.a_module_.right(a))
      throw std::logic_error("B-actions on the double centralizer do not restrict to the A-actions");
  }
  out.b_module_ = std::move(b_module);
  out.envelope_ = env;
  return out;
}

Matrix pair_to_derivation(const CentralizerModule& dc, const CentralizerPair& p) {
  Matrix d = p.s - p.t;
  if (!satisfies_derivation_rule(*dc.alg(), dc.x(), d))
    throw std::logic_error("pair_to_derivation: S - T is not a derivation");
  return d;
}

UniversalMap universal_map(const AlgebraPtr& a, const Bimodule& x, const Matrix& j,
                           const Bimodule& x_tilde) {
  const std::size_t nx = x.dim();
  const std::size_t nt = x_tilde.dim();
  if (j.rows() != nt || j.cols() != nx) throw DimensionMismatch("universal_map: j must be dim(X~) x dim(X)");
  if (annihilators(x).both.dim() != 0) throw AnnihilatorNonzero("AnnihilatorNonzero: ann X != 0");
  if (rank(j) != nx) throw NotInjective("NotInjective: j has nontrivial kernel");
  if (!is_bimodule_map(j, x, x_tilde)) throw PreconditionError("universal_map: j is not a bimodule map");

  Subspace j_image = image(j);
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t k = 0; k < nt; ++k) {
      if (!j_image.contains(x_tilde.left(i).column(k))) throw AbsorptionFails(Side::left, i, k);
      if (!j_image.contains(x_tilde.right(i).column(k))) throw AbsorptionFails(Side::right, i, k);
    }

  CentralizerModule dc = double_centralizer(a, x);
  Matrix iota_x = iota(dc);
  UniversalMap result;
  result.j_hat = Matrix(dc.dim(), nt);
  for (std::size_t k = 0; k < nt; ++k) {
    CentralizerPair p{Matrix(nx, a->dim()), Matrix(nx, a->dim())};
    for (std::size_t c = 0; c < a->dim(); ++c) {
      p.s.set_column(c, preimage(j, x_tilde.right(c).column(k)));  // j^{-1}(x~.a)
      p.t.set_column(c, preimage(j, x_tilde.left(c).column(k)));   // j^{-1}(a.x~)
    }
    result.j_hat.set_column(k, dc.coordinates(p));
  }
  result.factors = result.j_hat * j == iota_x;

  // Every bimodule map g: X~ -> DC(X) with g o j = iota_X, solved for
  // directly on vec(g).
  const std::size_t nd = dc.dim();
  const Matrix id_d = Matrix::identity(nd);
  const Matrix id_t = Matrix::identity(nt);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    blocks.push_back(kronecker(x_tilde.left(i).transpose(), id_d) - kronecker(id_t, dc.a_module().left(i)));
    blocks.push_back(kronecker(x_tilde.right(i).transpose(), id_d) - kronecker(id_t, dc.a_module().right(i)));
  }
  const std::size_t homogeneous_rows = a->dim() * 2 * nd * nt;
  blocks.push_back(kronecker(j.transpose(), id_d));
  Vector target(homogeneous_rows);
  Vector rhs = iota_x.vec();
  target.insert(target.end(), rhs.begin(), rhs.end());
  Matrix system = vstack(blocks);
  auto sol = solve_affine(system, target);
  if (sol) {
    result.solution_space_dim = sol->homogeneous.dim();
    result.unique = sol->homogeneous.dim() == 0 && sol->particular == result.j_hat.vec();
  }
  return result;
}

}  // namespace pushout
