#pragma once

/// \file skewhowe.hpp
/// The quantum skew-Howe space Wedge^p(C_q^ell tensor C_q^n) with its
/// commuting gl_ell and gl_n actions, rung operators (divided powers of the
/// gl_ell generators), and the highest weight vectors v_{a,b}.
///
/// Basis tags live in the factor model: (J_1, ..., J_ell) with J_i a subset
/// of [1,n] (bitmask, bit c-1 for column c), the tag of the vector
/// v_{J_1} tensor ... tensor v_{J_ell} in Wedge^{|J_1|} tensor ....
/// Coproduct convention: Delta(F) = F ox K^{-1} + 1 ox F and
/// Delta(E) = E ox 1 + K ox E, on both sides; the gl_ell side acts through
/// the transposed (column) factor model under the same convention.

#include "wb/qring.hpp"

#include <compare>
#include <map>
#include <vector>

namespace wb {

struct WedgeTag {
  std::vector<unsigned> J;
  auto operator<=>(const WedgeTag&) const = default;
  nlohmann::json to_json() const;  // array of arrays of columns
  static WedgeTag from_json(const nlohmann::json& j);
};

using WedgeVector = std::map<WedgeTag, LaurentScalar>;

WedgeVector& add_to(WedgeVector& v, const WedgeTag& t, const LaurentScalar& c);
WedgeVector add(const WedgeVector& x, const WedgeVector& y);
WedgeVector scale(const WedgeVector& x, const LaurentScalar& c);

struct SkewHoweSpace {
  int ell = 1, n = 1, p = 0;
  std::vector<WedgeTag> tags;  // all tags with sum |J_i| = p, sorted

  static SkewHoweSpace make(int ell, int n, int p);
  std::vector<int> gl_n_weight(const WedgeTag& t) const;    // column counts
  std::vector<int> gl_ell_weight(const WedgeTag& t) const;  // row counts p-vec
};

// Chevalley generator actions on a single tag (j in [1,n-1], i in [1,ell-1]).
WedgeVector gl_n_F(const SkewHoweSpace& sp, int j, const WedgeTag& t);
WedgeVector gl_n_E(const SkewHoweSpace& sp, int j, const WedgeTag& t);
LaurentScalar gl_n_K(const SkewHoweSpace& sp, int j, const WedgeTag& t);
WedgeVector gl_ell_F(const SkewHoweSpace& sp, int i, const WedgeTag& t);
WedgeVector gl_ell_E(const SkewHoweSpace& sp, int i, const WedgeTag& t);
LaurentScalar gl_ell_K(const SkewHoweSpace& sp, int i, const WedgeTag& t);

/// A sparse operator stored by columns, tagged with its gl_ell and gl_n
/// weight shifts (zero vectors when weight preserving).
struct QuantumOperator {
  std::map<WedgeTag, WedgeVector> cols;
  std::vector<int> ell_shift, n_shift;

  WedgeVector apply(const WedgeVector& v) const;
  bool is_zero() const;
};

enum class RungKind { E, F };

QuantumOperator operator_gl_n(const SkewHoweSpace& sp, RungKind k, int j);
QuantumOperator operator_gl_ell(const SkewHoweSpace& sp, RungKind k, int i);
QuantumOperator compose(const QuantumOperator& a, const QuantumOperator& b);
QuantumOperator sub(const QuantumOperator& a, const QuantumOperator& b);

/// The divided power F_i^(c) (or E_i^(c)) of the gl_ell action, restricted
/// to the weight block p-vec; the zero operator when the target weights
/// leave [0,n].  Exactness of the division by qfact(c) is checked.
QuantumOperator rung_operator(const SkewHoweSpace& sp, RungKind k, int i,
                              int c, const std::vector<int>& pvec);

struct CommuteReport {
  bool commuting = false;          // all [gl_ell gen, gl_n gen] vanish
  bool dims_match = false;         // block dims = products of binomials
  long total_dim = 0;              // = binomial(ell*n, p)
  std::map<std::vector<int>, long> block_dims;  // p-vec -> dim
};

CommuteReport verify_commuting_actions(int ell, int n, int p);

/// The unique gl_n highest weight vector v_{[b+1,a+b]} ox v_{[1,b]} + ...
/// in the (a,b) block of the two-row space, leading coefficient 1.
WedgeVector highest_weight_vector(int a, int b, int n = -1);

}  // namespace wb
