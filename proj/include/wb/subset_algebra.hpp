#pragma once

/// \file subset_algebra.hpp
/// The endomorphism algebra A_c of the projectives P_S (S a proper subset
/// of [1,c]) over T~^{(1,c-1)}, its wall-path basis, the Koszul resolution
/// Q_* of L_{1,c-1}, and the deformation computations behind the
/// full-length and bubble-dot lemmas.
///
/// Subsets of [1,c] are bitmasks: bit k-1 set iff k is in S.

#include "wb/stendhal.hpp"

namespace wb {

/// Which red strand carries the d-cost deformation.
enum class Deformation { NONE, LEFT_RED, RIGHT_RED };

/// T~^{(1,c-1)}: gl_c with lambda = (omega_1, omega_{c-1}), not cyclotomic.
AlgebraHandle subset_handle(int c, Deformation d = Deformation::NONE);

/// The sequence of P_S: w_S applied to (omega_1, 1, ..., c-1, omega_{c-1});
/// concretely, the positions [u-1, v] are reversed for every maximal run
/// [u,v] of consecutive elements of S.
StendhalTriple subset_triple(int c, unsigned S);

Element subset_idempotent(int c, unsigned S);

/// x_{S,k}: P_S -> P_{S triangle {k}}, the minimal-crossing dotless degree-1
/// diagram D_{S,k}, negated when k = c is in S.
Element generator_x(int c, unsigned S, int k);
/// x'_{S,k} = (-1)^{#(S cap [1,k-1])} x_{S,k}.
Element generator_x_prime(int c, unsigned S, int k);

/// Operator-order product: apply b first (b at the bottom of the diagram).
Element multiply_A(const AlgebraHandle& h, const Element& a, const Element& b);

/// The wall paths realizing the basis vector b_m of e_{S'} B^* e_S: each
/// path is the toggle sequence (k_1, ..., k_m) with S' = S_0, S_p =
/// S_{p-1} triangle {k_p}, S_m = S, every S_p proper.
struct WallPathFamily {
  unsigned S = 0, Sprime = 0;
  int m = 0;
  std::vector<std::vector<int>> paths;
};

/// b_m for m = #(S triangle S') + 2p, 0 <= p < c - #(S cup S').
std::vector<WallPathFamily> wall_path_basis(int c, unsigned S, unsigned Sp);

/// The Koszul resolution of L_{1,c-1}: Q_{-k} = sum of P_{S}(-k) over
/// #S == k mod 2, #S <= k <= 2c-2-#S, with differential components x'.
struct SubsetResolution {
  int c = 1;
  AlgebraHandle handle;
  std::vector<std::vector<unsigned>> terms;  // terms[k]: subsets in Q_{-k}
  /// diff[k][i][j]: the component P_{terms[k][j]} -> P_{terms[k-1][i]} of
  /// the differential Q_{-k} -> Q_{-k+1} (k >= 1; empty Element if zero).
  std::vector<std::vector<std::vector<Element>>> diff;

  /// Alternating graded sum: coefficient of [P_S] is sum (-1)^k q^{-k}.
  std::map<unsigned, LaurentScalar> euler() const;
};

SubsetResolution koszul_resolution(int c,
                                   Deformation d = Deformation::NONE);

/// Exact check that the (undeformed part of the) differential squares to 0.
bool d_squared_is_zero(const SubsetResolution& r);

/// The chain map induced by the deformation: sq[k][i][j] is the component
/// P_{terms[k][j]} -> P_{terms[k-2][i]} of (deformed d)^2 / h, for k >= 2.
std::vector<std::vector<std::vector<Element>>> deformed_square(
    int c, Deformation d);

/// epsilon (y-hat^q tensor 1) iota on the resolution tensor-square: the
/// P_empty -> P_empty coefficient of the q-fold iterate of the deformation
/// chain map from Q_{-(2c-2)} to Q_0, with epsilon normalized so that
/// epsilon(X_0 tensor X_0) = 1; zero when the iterate stops short of Q_0.
Rat bubble_pairing(int c, int qhat, Deformation d);

}  // namespace wb
