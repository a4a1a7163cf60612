#pragma once

#include <optional>
#include <vector>

#include "pushout/bimodule.hpp"

namespace pushout {

struct RestrictionMismatch : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct AnnihilatorNonzero : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct AbsorptionFails : PreconditionError {
  AbsorptionFails(Side side, std::size_t alg_index, std::size_t element_index);
  Side side;
  std::size_t alg_index, element_index;
};

/// (S, T) with S a right module map, T a left module map A -> X and
/// a.S(alpha) = T(a).alpha. Both are dim(X) x dim(A).
struct CentralizerPair {
  Matrix s;
  Matrix t;
  friend bool operator==(const CentralizerPair&, const CentralizerPair&) = default;
};

/// The double-centralizer bimodule of X. Pairs are encoded as
/// [vec(S); vec(T)] with column-major vec; the module's basis is the
/// echelon basis of the solution subspace of that encoding.
class CentralizerModule {
 public:
  CentralizerModule(AlgebraPtr alg, Bimodule x);

  const AlgebraPtr& alg() const { return alg_; }
  const Bimodule& x() const { return x_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t pair_dim() const { return space_.ambient_dim(); }

  /// A-bimodule structure a.(S,T) = (a.S(.), T(.a)), (S,T).a = (S(a.), T(.).a).
  const Bimodule& a_module() const { return a_module_; }
  /// B-bimodule structure, present after attach_envelope_actions.
  const std::optional<Bimodule>& b_module() const { return b_module_; }
  const std::optional<Envelope>& envelope() const { return envelope_; }

  /// Action matrices on the full pair space (before restriction).
  const std::vector<Matrix>& pair_left_a() const { return pair_left_a_; }
  const std::vector<Matrix>& pair_right_a() const { return pair_right_a_; }
  const std::vector<Matrix>& pair_left_b() const { return pair_left_b_; }
  const std::vector<Matrix>& pair_right_b() const { return pair_right_b_; }

  Vector encode(const CentralizerPair& p) const;
  CentralizerPair decode_pair(const Vector& pair_coords) const;
  CentralizerPair element(const Vector& coords) const { return decode_pair(space_.embed(coords)); }
  CentralizerPair basis_pair(std::size_t k) const { return decode_pair(space_.basis()[k]); }
  bool contains(const CentralizerPair& p) const { return space_.contains(encode(p)); }
  Vector coordinates(const CentralizerPair& p) const { return space_.coordinates(encode(p)); }

  /// (L_x, R_x) with L_x(a) = x.a, R_x(a) = a.x, for x a vector of X.
  CentralizerPair inner_pair(const Vector& x) const;

  /// The three defining identities checked directly on a pair.
  bool satisfies_definition(const CentralizerPair& p) const;

 private:
  friend CentralizerModule attach_envelope_actions(const CentralizerModule&, const Envelope&,
                                                   const Bimodule&);
  AlgebraPtr alg_;
  Bimodule x_;
  Subspace space_;
  std::vector<Matrix> pair_left_a_, pair_right_a_;
  std::vector<Matrix> pair_left_b_, pair_right_b_;
  Bimodule a_module_;
  std::optional<Bimodule> b_module_;
  std::optional<Envelope> envelope_;
};

CentralizerModule double_centralizer(const AlgebraPtr& a, const Bimodule& x);

/// x -> (L_x, R_x) in centralizer coordinates: dim(DC) x dim(X).
Matrix iota(const CentralizerModule& dc);

/// Installs b.(L,R) = (b.L(.), R(. b)) and (L,R).b = (L(b .), R(.).b).
/// x_as_b must restrict to dc.x() along the embedding.
CentralizerModule attach_envelope_actions(const CentralizerModule& dc, const Envelope& env,
                                          const Bimodule& x_as_b);

/// a -> S(a) - T(a). Throws std::logic_error if the result fails the
/// derivation rule, which would contradict the centralizer identities.
Matrix pair_to_derivation(const CentralizerModule& dc, const CentralizerPair& p);

struct UniversalMap {
  Matrix j_hat;                      // dim(DC) x dim(X~)
  std::size_t solution_space_dim = 0;  // homogeneous part of the factoring system
  bool factors = false;              // iota_X == j_hat * j
  bool unique = false;               // factoring system has exactly the solution j_hat
};

/// The unique A-bimodule map j_hat: X~ -> DC(X) with iota_X = j_hat o j,
/// j_hat(x~) = (j^{-1} o L_x~, j^{-1} o R_x~). Requires ann X = 0, j an
/// injective bimodule map, and A.X~ + X~.A inside j(X).
UniversalMap universal_map(const AlgebraPtr& a, const Bimodule& x, const Matrix& j,
                           const Bimodule& x_tilde);

}  // namespace pushout
