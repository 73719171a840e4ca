#pragma once

/// \file complexes.hpp
/// Finite bigraded chain complexes over Q, chain maps and homotopy solving,
/// the scalarized c=2 bigon tensor square with its psi / y-hat chain maps,
/// Rickard complexes, and the nilHecke braid verification.
///
/// Grading conventions: a complex C has terms C_k indexed by homological
/// degree k with differential d: C_k -> C_{k+1} of bidegree (+1, 0); every
/// generator carries an internal degree, and since d preserves internal
/// degree the complex splits as a direct sum of finite subcomplexes, one per
/// internal degree.  A chain map of bidegree (hs, is) sends C_k -> D_{k+hs}
/// shifting internal degree by is.  On the bigon square, psi has bidegree
/// (-2, +2) and the Hochschild operators y-hat have bidegree (+2, -2), so
/// the nilHecke composites are honest bidegree-(0,0) endomorphisms.

#include "wb/ladders.hpp"

#include <optional>

namespace wb {

struct GradedComplex {
  /// terms[k]: internal degrees of the generators of C_k.
  std::map<int, std::vector<int>> terms;
  /// diff[k]: matrix of d: C_k -> C_{k+1}; diff[k][r][c] is the coefficient
  /// of generator r of C_{k+1} in d(generator c of C_k).
  std::map<int, std::vector<std::vector<Rat>>> diff;

  int dim(int k) const;
  /// Throws std::logic_error if a matrix shape is wrong, d is not
  /// internal-degree homogeneous, or d^2 != 0.
  void validate() const;
  /// Dimensions of homology per (homological degree, internal degree).
  std::map<std::pair<int, int>, int> homology() const;
};

struct ChainMap {
  int hom_shift = 0, int_shift = 0;
  /// mats[k]: matrix C_k -> D_{k+hom_shift} (absent = zero).
  std::map<int, std::vector<std::vector<Rat>>> mats;
};

ChainMap identity_map(const GradedComplex& C);
/// g after f; bidegrees add.
ChainMap compose_maps(const ChainMap& f, const ChainMap& g,
                      const GradedComplex& C);
ChainMap sub_maps(const ChainMap& f, const ChainMap& g);
ChainMap scale_map(const ChainMap& f, const Rat& a);

/// d f == f d on every generator whose internal degree is <= window
/// (pass INT_MAX when the complexes are complete).
bool is_chain_map(const GradedComplex& C, const GradedComplex& D,
                  const ChainMap& f, int window = INT_MAX);

/// Solve f - g = d h + h d for h of bidegree (hom_shift - 1, int_shift),
/// restricting to generators of internal degree <= window; returns the
/// witness or nullopt if none exists there.  f and g must share bidegrees.
std::optional<ChainMap> homotopy_between(const GradedComplex& C,
                                         const GradedComplex& D,
                                         const ChainMap& f, const ChainMap& g,
                                         int window = INT_MAX);

// ---- the c=2 bigon tensor square -----------------------------------------

/// The scalarized tensor square of the c=2 Koszul resolution over
/// T~^{(1,1)}: slots (S1@k1, S2@k2) carry e_{S1} T~ e_{S2}, the left factor
/// is the reflected resolution, and the differential uses Koszul signs on
/// the left tensor factor: d(z) = refl(x') z + (-1)^{k1} z x'.  Marked
/// generators: A = P_empty@0, B = P_{1}@1, C = P_{2}@1, D = P_empty@2.
struct BigonSquare {
  AlgebraHandle h;        // T~^{(1,1)}, not cyclotomic
  SubsetResolution res;   // koszul_resolution(2)
  int max_int = 8;        // internal-degree truncation of the chain groups

  GradedComplex C;
  /// Bookkeeping per generator of C: resolution levels/indices and the
  /// normal-form key it represents.
  struct Gen {
    int k1 = 0, g1 = 0, k2 = 0, g2 = 0;
    Key key;
  };
  std::map<int, std::vector<Gen>> gens;

  /// Coordinates of A ox A (hom 0) and of the canonical element
  /// k = A ox D + B ox B - C ox C + D ox A (hom -2).
  std::map<int, std::vector<Rat>> aa, kk;

  /// psi: bidegree (-2,+2) chain map with psi(A ox A) = k (solved).
  ChainMap psi;
  /// y-hat via the LEFT_RED / RIGHT_RED deformation of the left factor,
  /// bidegree (+2,-2); left realizes y_i (y(k) = A ox A), right y_{i+1}.
  ChainMap y_left, y_right;

  /// <A,D> = <B,B> = -<C,C> = <D,A> = 1, all other pairings 0.
  static int pairing(int g, int gp);
  /// The counit functional on hom degree -2 built from the pairing;
  /// returns the value on a coordinate vector of C_{-2}.
  Rat counit(const std::vector<Rat>& v) const;

  /// Apply a chain map to a coordinate vector supported in hom degree k.
  std::vector<Rat> apply(const ChainMap& f, int k,
                         const std::vector<Rat>& v) const;
  /// Is v (supported in hom degree k) a boundary?  Exact linear solve.
  bool is_boundary(int k, const std::vector<Rat>& v) const;

  /// Safe window for homotopy checks involving psi (which raises internal
  /// degree by 2): max_int - 4.
  int window() const { return max_int - 4; }
};

BigonSquare bigon_square(int max_int = 8);

// ---- Rickard complexes ---------------------------------------------------

/// One term F^{(cF)} E^{(cE)} (E applied first) or E^{(cE)} F^{(cF)}
/// (F applied first) with its internal shift and homological degree.
struct RickardTerm {
  int s = 0;        // summation index
  int cF = 0, cE = 0;
  bool F_leading = true;  // true: F^{(cF)}E^{(cE)}; false: E^{(cE)}F^{(cF)}
  int shift = 0;    // internal shift <shift>
  int hom = 0;      // homological degree
};

/// Theta 1_{nhat} per eq. (cpx)/(cpx') -- or its inverse per (cpxi)/(cpxi')
/// -- listing terms s = 0..smax (untruncated; weight bounds are applied by
/// rickard_on_block).
std::vector<RickardTerm> rickard_complex(int nhat, bool inverse, int smax);

/// The terms surviving the weight bounds on block pv of ell uprights with
/// n colors, acting at uprights (i, i+1), as concrete ladders with their
/// (internal, homological) shifts.
std::vector<std::pair<Ladder, GradedShift>> rickard_on_block(
    int ell, int n, const std::vector<int>& pv, int i, bool inverse);

/// Graded Euler characteristic: sum of (-1)^{hom} q^{shift} k0_class(term).
QuantumOperator rickard_euler(int ell, int n, const std::vector<int>& pv,
                              int i, bool inverse);

// ---- nilHecke braid check ------------------------------------------------

struct BraidReport {
  /// Internal shifts (with homological degrees -2j) of the six summands of
  /// the triple bigon, and whether they match <3>,<1>^2,<-1>^2,<-3> and
  /// the composite of bigon decompositions and qfact(3).
  std::vector<std::pair<int, int>> copies;  // (internal shift, hom degree)
  bool shifts_ok = false;
  /// psi_1, psi_2 on the rank-6 multiplicity space (coinvariant algebra of
  /// S_3 with divided differences, normalized as in the bigon square).
  bool squares_zero = false;  // psi_i^2 = 0
  bool braid_equal = false;   // psi1 psi2 psi1 == psi2 psi1 psi2
  Rat top_scalar_lhs, top_scalar_rhs;  // both send the top copy to 1x bottom
  /// dim of the bidegree-(-6,6) endomorphism space: the number of summand
  /// pairs with homological distance -6 times the dimension of the degree-0
  /// endomorphisms of the omega_3 idempotent block (checked to be 1).
  int hom_dim = 0;
  bool ok() const;
};

BraidReport nilhecke_braid_check();

}  // namespace wb
