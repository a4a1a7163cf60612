#pragma once

#include <optional>

#include "pushout/centralizer.hpp"

namespace pushout {

struct NotADerivation : ValidationError {
  NotADerivation(std::size_t i, std::size_t j);
  std::size_t i, j;
};

struct SquareSpanDeficient : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Rows of the linear system D(e_i e_j) = e_i.D(e_j) + D(e_i).e_j on the
/// column-major vec of a dim(X) x dim(A) matrix D.
Matrix derivation_constraints(const Algebra& a, const Bimodule& x);

/// x -> vec(a -> a.x - x.a), a (dim(X) * dim(A)) x dim(X) matrix.
Matrix inner_map(const Bimodule& x);

bool satisfies_derivation_rule(const Algebra& a, const Bimodule& x, const Matrix& d);

/// Z^1(A, X) as a subspace of vectorized maps.
Subspace derivation_space(const AlgebraPtr& a, const Bimodule& x);
/// B^1(A, X) = image of inner_map.
Subspace inner_derivations(const AlgebraPtr& a, const Bimodule& x);

struct H1Dims {
  std::size_t z1 = 0;
  std::size_t b1 = 0;
  std::size_t h1 = 0;
  friend bool operator==(const H1Dims&, const H1Dims&) = default;
};

H1Dims h1(const AlgebraPtr& a, const Bimodule& x);

/// A validated derivation D: A -> X, map is dim(X) x dim(A).
class Derivation {
 public:
  Derivation(Bimodule module, Matrix map);

  const AlgebraPtr& alg() const { return module_.alg(); }
  const Bimodule& module() const { return module_; }
  const Matrix& map() const { return map_; }

 private:
  Bimodule module_;
  Matrix map_;
};

/// Some x with D(a) = a.x - x.a for all a, if any.
std::optional<Vector> is_inner(const Derivation& d);

struct PushoutResult {
  CentralizerModule dc;          // with B-actions attached
  Matrix d_tilde_pairs;          // pair coordinates of (L(b), R(b)), one column per basis b
  Matrix d_tilde;                // centralizer coordinates, valid when in_centralizer
  bool in_centralizer = false;   // every D~(b) is a double centralizer
  bool derivation_rule = false;  // D~(b1 b2) = b1.D~(b2) + D~(b1).b2
  bool diagram = false;          // D~ o iota = iota_X o D
  bool ideal_identities = false; // L_{D(ab)} = aL(b) + L_{D(a)}^b and R_{D(bc)} = bR_{D(c)} + R(b)^c

  bool ok() const { return in_centralizer && derivation_rule && diagram && ideal_identities; }
  CentralizerPair pair(std::size_t b) const { return dc.decode_pair(d_tilde_pairs.column(b)); }
};

/// D~(b) = (L(b), R(b)) with L(b)(a) = D(ba) - b.D(a), R(b)(a) = D(ab) - D(a).b.
/// d must be a derivation into the restriction of x_as_b.
PushoutResult push_out(const Envelope& env, const Bimodule& x_as_b, const Derivation& d);

struct PushoutUniqueness {
  bool unique = false;
  std::size_t solution_space_dim = 0;
  bool consistent = false;  // the affine system has any solution at all
};

/// Solves for every derivation B -> DC(X) whose restriction along the
/// embedding equals iota_X o D. Requires span(A^2) = A.
PushoutUniqueness pushout_uniqueness(const Envelope& env, const Bimodule& x_as_b, const Derivation& d);
bool pushout_unique(const Envelope& env, const Bimodule& x_as_b, const Derivation& d);

/// When D~ is inner in the B-bimodule DC(X), the pair (S, T) with
/// D~(a) = (S,T).a - a.(S,T); then D(a) = S(a) - T(a) is verified.
/// Requires span(A^2) = A.
std::optional<CentralizerPair> pull_back_inner(const Envelope& env, const Bimodule& x_as_b,
                                               const Derivation& d);

}  // namespace pushout
