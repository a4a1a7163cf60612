#pragma once

#include "pushout/centralizer.hpp"

namespace pushout {

struct NotInduced : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// The predual of DC(X*): (A (x)_A X (+) X (x)_A A) / N with
/// N = span{(a (x) x.alpha, -a.x (x) alpha)}. Sum coordinates put the
/// A (x)_A X block first.
struct PredualData {
  BalancedTensor left;     // A (x)_A X
  BalancedTensor right;    // X (x)_A A
  Bimodule sum;            // left (+) right as a bimodule
  Subspace n_sub;          // N inside the sum
  Quotient q;              // sum -> sum / N
  Bimodule quotient;       // sum / N
  Matrix mu;               // sum -> X, (a (x) x, x' (x) a') -> a.x + x'.a'
};

PredualData build_predual(const AlgebraPtr& a, const Bimodule& x);

/// Matrix of (S,T) -> the functional (a (x) x, x' (x) a') -> <x, S(a)> + <x', T(a')>
/// on the quotient, from DC(X*) coordinates to (sum / N)* coordinates.
/// Throws std::logic_error if some functional fails to vanish on N.
Matrix canonical_pairing(const PredualData& p, const CentralizerModule& dc_dual);

struct DualIsoReport {
  std::size_t centralizer_dim = 0;
  std::size_t quotient_dim = 0;
  bool bijective = false;
  bool intertwines = false;
  bool holds() const { return bijective && intertwines; }
};

/// DC(X*) against (sum / N)* through the hom-tensor pairing.
DualIsoReport dual_iso(const AlgebraPtr& a, const Bimodule& x);
/// Same, reusing a predual and DC(X*) built by the caller.
DualIsoReport dual_iso(const PredualData& p, const CentralizerModule& dc_dual);
bool dual_iso_check(const AlgebraPtr& a, const Bimodule& x);

/// q* o iota_{X*} = mu* as matrices on (sum)* coordinates.
bool factorization_check(const AlgebraPtr& a, const Bimodule& x);
bool factorization_check(const PredualData& p, const CentralizerModule& dc_dual);

struct InjectivitySurjectivity {
  bool iota_dual_injective = false;
  bool mu_surjective = false;
  bool holds() const { return iota_dual_injective == mu_surjective; }
};

InjectivitySurjectivity injectivity_surjectivity(const AlgebraPtr& a, const Bimodule& x);
InjectivitySurjectivity injectivity_surjectivity(const PredualData& p, const CentralizerModule& dc_dual);
bool injectivity_surjectivity_check(const AlgebraPtr& a, const Bimodule& x);

/// For induced X, iota_{X*} is bijective. Throws NotInduced otherwise.
bool induced_dual_iso_check(const AlgebraPtr& a, const Bimodule& x);

/// ker mu inside N, the inclusion that makes iota_{X*} onto.
bool kernel_mu_in_n(const PredualData& p);

}  // namespace pushout
