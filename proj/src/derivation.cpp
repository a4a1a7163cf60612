#include "pushout/derivation.hpp"

#include <sstream>
#include <stdexcept>

namespace pushout {

namespace {

std::string pair_message(std::size_t i, std::size_t j) {
  std::ostringstream msg;
  msg << "NotADerivation(" << i << "," << j << ")";
  return msg.str();
}

Matrix row_of(const Vector& v) { return Matrix::from_rows(v.size(), {v}); }

void require_square_span(const Algebra& a) {
  if (square_span(a).dim() != a.dim())
    throw SquareSpanDeficient("SquareSpanDeficient: span(A^2) != A for " + a.name());
}

}  // namespace

NotADerivation::NotADerivation(std::size_t i_, std::size_t j_)
    : ValidationError(pair_message(i_, j_)), i(i_), j(j_) {}

Matrix derivation_constraints(const Algebra& a, const Bimodule& x) {
  const std::size_t na = a.dim();
  const Matrix id_x = Matrix::identity(x.dim());
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      Matrix lhs = kronecker(row_of(a.basis_product(i, j)), id_x);
      Matrix left_term = kronecker(row_of(unit_vector(na, j)), x.left(i));
      Matrix right_term = kronecker(row_of(unit_vector(na, i)), x.right(j));
      blocks.push_back(lhs - left_term - right_term);
    }
  if (blocks.empty()) return Matrix(0, na * x.dim());
  return vstack(blocks);
}

Matrix inner_map(const Bimodule& x) {
  const std::size_t na = x.alg()->dim();
  const std::size_t nx = x.dim();
  Matrix out(na * nx, nx);
  for (std::size_t j = 0; j < na; ++j) {
    Matrix diff = x.left(j) - x.right(j);
    for (std::size_t u = 0; u < nx; ++u)
      for (std::size_t r = 0; r < nx; ++r) out(j * nx + r, u) = diff(r, u);
  }
  return out;
}

bool satisfies_derivation_rule(const Algebra& a, const Bimodule& x, const Matrix& d) {
  if (d.rows() != x.dim() || d.cols() != a.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector lhs = d.apply(a.basis_product(i, j));
      Vector rhs = x.left(i).apply(d.column(j)) + x.right(j).apply(d.column(i));
      if (lhs != rhs) return false;
    }
  return true;
}

Subspace derivation_space(const AlgebraPtr& a, const Bimodule& x) {
  return kernel(derivation_constraints(*a, x));
}

Subspace inner_derivations(const AlgebraPtr& a, const Bimodule& x) {
  if (x.alg()->dim() != a->dim()) throw PreconditionError("inner_derivations: module is not over A");
  return image(inner_map(x));
}

H1Dims h1(const AlgebraPtr& a, const Bimodule& x) {
  Subspace z1 = derivation_space(a, x);
  Subspace b1 = inner_derivations(a, x);
  if (!z1.contains(b1)) throw std::logic_error("h1: inner derivations outside Z1");
  return H1Dims{z1.dim(), b1.dim(), z1.dim() - b1.dim()};
}

Derivation::Derivation(Bimodule module, Matrix map) : module_(std::move(module)), map_(std::move(map)) {
  const Algebra& a = *module_.alg();
  if (map_.rows() != module_.dim() || map_.cols() != a.dim())
    throw DimensionMismatch("derivation: map must be dim(X) x dim(A)");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector lhs = map_.apply(a.basis_product(i, j));
      Vector rhs = module_.left(i).apply(map_.column(j)) + module_.right(j).apply(map_.column(i));
      if (lhs != rhs) throw NotADerivation(i, j);
    }
}

std::optional<Vector> is_inner(const Derivation& d) {
  auto sol = solve_affine(inner_map(d.module()), d.map().vec());
  if (!sol) return std::nullopt;
  return sol->particular;
}

PushoutResult push_out(const Envelope& env, const Bimodule& x_as_b, const Derivation& d) {
  const Algebra& a = *env.sub();
  const Algebra& b = *env.amb();
  if (d.alg()->dim() != a.dim()) throw PreconditionError("pushout: derivation is not defined on A");
  CentralizerModule dc = attach_envelope_actions(double_centralizer(env.sub(), d.module()), env, x_as_b);

  const Matrix& dm = d.map();
  const std::size_t nb = b.dim();
  Matrix pairs(dc.pair_dim(), nb);
  for (std::size_t k = 0; k < nb; ++k) {
    CentralizerPair p{dm * env.left_on_sub(k) - x_as_b.left(k) * dm,     // D(ba) - b.D(a)
                      dm * env.right_on_sub(k) - x_as_b.right(k) * dm};  // D(ab) - D(a).b
    pairs.set_column(k, dc.encode(p));
  }

  PushoutResult result{dc, pairs, Matrix(dc.dim(), nb)};
  result.in_centralizer = true;
  for (std::size_t k = 0; k < nb; ++k) {
    Vector col = pairs.column(k);
    if (!dc.space().contains(col) || !dc.satisfies_definition(dc.decode_pair(col))) {
      result.in_centralizer = false;
      continue;
    }
    result.d_tilde.set_column(k, dc.space().coordinates(col));
  }

  result.derivation_rule = true;
  for (std::size_t i = 0; i < nb && result.derivation_rule; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Vector lhs = pairs.apply(b.basis_product(i, j));
      Vector rhs = dc.pair_left_b()[i].apply(pairs.column(j)) + dc.pair_right_b()[j].apply(pairs.column(i));
      if (lhs != rhs) {
        result.derivation_rule = false;
        break;
      }
    }

  Matrix iota_d(dc.pair_dim(), a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) iota_d.set_column(c, dc.encode(dc.inner_pair(dm.column(c))));
  result.diagram = pairs * env.embedding() == iota_d;

  result.ideal_identities = true;
  for (std::size_t c = 0; c < a.dim() && result.ideal_identities; ++c)
    for (std::size_t k = 0; k < nb; ++k) {
      CentralizerPair dk = result.pair(k);
      // L_{D(ab)} = a.L(b) + (L_{D(a)})^b with a = e_c, b = f_k
      Vector ab = env.right_on_sub(k).column(c);
      Matrix lhs_l = dc.inner_pair(dm.apply(ab)).s;
      Matrix rhs_l = d.module().left(c) * dk.s + dc.inner_pair(dm.column(c)).s * env.left_on_sub(k);
      // R_{D(bc)} = bR_{D(c)} + R(b)^c with c = e_c
      Vector bc = env.left_on_sub(k).column(c);
      Matrix lhs_r = dc.inner_pair(dm.apply(bc)).t;
      Matrix rhs_r = dc.inner_pair(dm.column(c)).t * env.right_on_sub(k) + d.module().right(c) * dk.t;
      if (lhs_l != rhs_l || lhs_r != rhs_r) {
        result.ideal_identities = false;
        break;
      }
    }
  return result;
}

PushoutUniqueness pushout_uniqueness(const Envelope& env, const Bimodule& x_as_b, const Derivation& d) {
  require_square_span(*env.sub());
  PushoutResult po = push_out(env, x_as_b, d);
  if (!po.in_centralizer) throw std::logic_error("pushout_unique: D~ is not centralizer-valued");
  const CentralizerModule& dc = po.dc;
  const Bimodule& dc_b = *dc.b_module();
  const std::size_t nd = dc.dim();

  Matrix derivation_rows = derivation_constraints(*env.amb(), dc_b);
  Matrix diagram_rows = kronecker(env.embedding().transpose(), Matrix::identity(nd));
  Vector target(derivation_rows.rows());
  Vector rhs = (iota(dc) * d.map()).vec();
  target.insert(target.end(), rhs.begin(), rhs.end());

  PushoutUniqueness out;
  auto sol = solve_affine(vstack({derivation_rows, diagram_rows}), target);
  if (!sol) return out;
  out.consistent = true;
  out.solution_space_dim = sol->homogeneous.dim();
  out.unique = out.solution_space_dim == 0 && sol->particular == po.d_tilde.vec();
  return out;
}

bool pushout_unique(const Envelope& env, const Bimodule& x_as_b, const Derivation& d) {
  return pushout_uniqueness(env, x_as_b, d).unique;
}

std::optional<CentralizerPair> pull_back_inner(const Envelope& env, const Bimodule& x_as_b,
                                               const Derivation& d) {
  require_square_span(*env.sub());
  PushoutResult po = push_out(env, x_as_b, d);
  if (!po.in_centralizer) throw std::logic_error("pull_back_inner: D~ is not centralizer-valued");
  const CentralizerModule& dc = po.dc;
  auto sol = solve_affine(inner_map(*dc.b_module()), po.d_tilde.vec());
  if (!sol) return std::nullopt;
  // D~(b) = b.w - w.b, so (S,T) = -w gives D~(a) = (S,T).a - a.(S,T).
  CentralizerPair st = dc.element(-sol->particular);
  if (st.s - st.t != d.map())
    throw std::logic_error("pull_back_inner: D(a) != S(a) - T(a)");
  return st;
}

}  // namespace pushout
