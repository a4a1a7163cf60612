#include "pushout/duality.hpp"

#include <stdexcept>

namespace pushout {

PredualData build_predual(const AlgebraPtr& a, const Bimodule& x) {
  const std::size_t na = a->dim();
  const std::size_t nx = x.dim();
  const Bimodule reg = regular_module(a);
  BalancedTensor left = balanced_tensor(reg, x);
  BalancedTensor right = balanced_tensor(x, reg);

  std::vector<Matrix> sum_left, sum_right;
  for (std::size_t i = 0; i < na; ++i) {
    sum_left.push_back(direct_sum(left.module.left(i), right.module.left(i)));
    sum_right.push_back(direct_sum(left.module.right(i), right.module.right(i)));
  }
  const std::size_t sum_dim = left.dim() + right.dim();
  Bimodule sum(a, sum_dim, std::move(sum_left), std::move(sum_right));

  // (a (x) x.alpha, -a.x (x) alpha) for basis a = e_i, alpha = e_k, x = x_u
  std::vector<Vector> generators;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t u = 0; u < nx; ++u) {
        Vector lhs(na * nx), rhs(nx * na);
        for (std::size_t w = 0; w < nx; ++w) {
          lhs[i * nx + w] = x.right(k)(w, u);
          rhs[w * na + k] = -x.left(i)(w, u);
        }
        Vector g = left.projection().apply(lhs);
        Vector r = right.projection().apply(rhs);
        g.insert(g.end(), r.begin(), r.end());
        generators.push_back(std::move(g));
      }
  Subspace n_sub = Subspace::span(sum_dim, generators);
  QuotientModule qm = quotient_module(sum, n_sub);

  Matrix mu = hstack({left_multiplication_map(left, x), right_multiplication_map(right, x)});
  for (const auto& v : n_sub.basis())
    if (!is_zero(mu.apply(v))) throw std::logic_error("build_predual: N is not inside ker mu");

  return PredualData{std::move(left), std::move(right), std::move(sum), std::move(n_sub),
                     std::move(qm.quotient), std::move(qm.module), std::move(mu)};
}

Matrix canonical_pairing(const PredualData& p, const CentralizerModule& dc_dual) {
  const std::size_t na = dc_dual.alg()->dim();
  const std::size_t nx = dc_dual.x().dim();
  const Matrix left_lift = p.left.section().transpose();
  const Matrix right_lift = p.right.section().transpose();
  const Matrix quotient_lift = p.q.section.transpose();

  Matrix out(p.q.dim(), dc_dual.dim());
  for (std::size_t k = 0; k < dc_dual.dim(); ++k) {
    CentralizerPair st = dc_dual.basis_pair(k);
    // <a (x) x, S> = S(a)(x): on A (x) X coordinates this is vec(S).
    Vector on_left = left_lift.apply(st.s.vec());
    // <x (x) a, T> = T(a)(x) on X (x) A coordinates u * na + i.
    Vector full_right(nx * na);
    for (std::size_t u = 0; u < nx; ++u)
      for (std::size_t i = 0; i < na; ++i) full_right[u * na + i] = st.t(u, i);
    Vector on_right = right_lift.apply(full_right);
    Vector functional = on_left;
    functional.insert(functional.end(), on_right.begin(), on_right.end());
    for (const auto& v : p.n_sub.basis()) {
      Scalar value = 0;
      for (std::size_t c = 0; c < v.size(); ++c) value += functional[c] * v[c];
      if (sgn(value) != 0) throw std::logic_error("canonical_pairing: functional does not vanish on N");
    }
    out.set_column(k, quotient_lift.apply(functional));
  }
  return out;
}

DualIsoReport dual_iso(const AlgebraPtr& a, const Bimodule& x) {
  return dual_iso(build_predual(a, x), double_centralizer(a, dual_module(x)));
}

DualIsoReport dual_iso(const PredualData& p, const CentralizerModule& dc_dual) {
  Matrix theta = canonical_pairing(p, dc_dual);
  DualIsoReport report;
  report.centralizer_dim = dc_dual.dim();
  report.quotient_dim = p.q.dim();
  report.bijective = is_bijective(theta);
  report.intertwines = is_bimodule_map(theta, dc_dual.a_module(), dual_module(p.quotient));
  return report;
}

bool dual_iso_check(const AlgebraPtr& a, const Bimodule& x) { return dual_iso(a, x).holds(); }

bool factorization_check(const AlgebraPtr& a, const Bimodule& x) {
  return factorization_check(build_predual(a, x), double_centralizer(a, dual_module(x)));
}

bool factorization_check(const PredualData& p, const CentralizerModule& dc_dual) {
  Matrix theta = canonical_pairing(p, dc_dual);
  return p.q.projection.transpose() * theta * iota(dc_dual) == p.mu.transpose();
}

InjectivitySurjectivity injectivity_surjectivity(const AlgebraPtr& a, const Bimodule& x) {
  return injectivity_surjectivity(build_predual(a, x), double_centralizer(a, dual_module(x)));
}

InjectivitySurjectivity injectivity_surjectivity(const PredualData& p, const CentralizerModule& dc_dual) {
  InjectivitySurjectivity out;
  out.iota_dual_injective = kernel(iota(dc_dual)).dim() == 0;
  out.mu_surjective = rank(p.mu) == p.mu.rows();
  return out;
}

bool injectivity_surjectivity_check(const AlgebraPtr& a, const Bimodule& x) {
  return injectivity_surjectivity(a, x).holds();
}

bool induced_dual_iso_check(const AlgebraPtr& a, const Bimodule& x) {
  if (!is_induced(x).induced) throw NotInduced("NotInduced: A (x)_A X (x)_A A -> X is not bijective");
  CentralizerModule dc_dual = double_centralizer(a, dual_module(x));
  return is_bijective(iota(dc_dual));
}

bool kernel_mu_in_n(const PredualData& p) { return p.n_sub.contains(kernel(p.mu)); }

}  // namespace pushout
