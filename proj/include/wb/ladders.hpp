#pragma once

/// \file ladders.hpp
/// Ladders as 1-morphisms between weight sequences, the trivalent-vertex
/// bimodules (quadruple bases, through-box scalars, bigon decomposition,
/// associativity correspondences), adjunction data for thin edges, and K_0
/// classes matching the skew-Howe rung operators.
///
/// K_0 conventions (pinned by matching rung_operator on every block):
///   split of a thickness-(a+b) upright into (A, B):
///       (-q^{-1})^{|A||B| + #{x in A, y in B : x < y}},
///   merge of adjacent uprights (A, B):
///       (-1)^{inv} q^{|A||B| + inv},  inv = #{x in A, y in B : x > y}.
/// With these, the bigon composite is exactly qbinom(a+b, a) and
/// merge(A, B) = (-1)^{ab} bar(split(B, A)), the eta-twisted duality.

#include "wb/skewhowe.hpp"
#include "wb/subset_algebra.hpp"
#include "wb/tableaux.hpp"

namespace wb {

struct Rung {
  RungKind kind = RungKind::F;
  int i = 1;  // acts on uprights (i, i+1), 1-based
  int c = 0;  // thickness of the rung
  auto operator<=>(const Rung&) const = default;
};

/// A ladder: ell uprights carrying gl_n weights, rungs read bottom to top.
struct Ladder {
  int ell = 1, n = 1;
  std::vector<int> bottom;
  std::vector<Rung> rungs;

  /// Upright weights after each rung, starting with bottom; throws
  /// std::domain_error if any weight leaves [0, n] or a rung is out of range.
  std::vector<std::vector<int>> levels() const;
  std::vector<int> top() const;
  /// Sum of -a*b over all trivalent vertices (two per nonzero rung).
  int eta() const;

  nlohmann::json to_json() const;
  static Ladder from_json(const nlohmann::json& j);
};

/// Through-box scalar: +1 iff a <= m < b or b <= m < a or m >= a+b.
int sigma(int m, int a, int b);

/// One trivalent vertex: the bottom red a+b at red position `index`
/// (1-based) splits into top reds (a, b).
struct TrivalentVertex {
  int a = 1, b = 1;
  int index = 1;
};

/// One basis diagram of e_top W e_bottom: through-strand matching, dots on
/// the through strands, box filling, and the top black slots fed by the box.
struct BimoduleQuadruple {
  std::vector<int> perm;     // bottom black k -> top black perm[k], 0-based
  std::vector<int> dots;     // dots per bottom black
  RectTableau tab;           // standard filling of the a x b box
  std::vector<int> shuffle;  // increasing top black indices under the box
  int degree = 0;
};

struct LadderBimoduleBasis {
  TrivalentVertex vertex;
  StendhalTriple bottom, top;
  std::vector<BimoduleQuadruple> entries;
};

/// The quadruple basis of e_top W e_bottom up to max_degree.
LadderBimoduleBasis bimodule_basis(const TrivalentVertex& v,
                                   const StendhalTriple& bottom,
                                   const StendhalTriple& top, int max_degree);

/// Internal shifts <a+b-2k> with the multiplicities of qbinom(a+b, a),
/// largest first.
std::vector<GradedShift> bigon_decompose(int a, int b);
/// Detect the bigon encoding F_i^(c) E_i^(c) (or E then F) with the far
/// upright empty; returns the shifts of the (p-c, c) bigon.
std::vector<GradedShift> bigon_decompose(const Ladder& l);

/// The canonical correspondence between the two branchings of a thickness
/// (c1, c2, c3) split: fibers e_{i2} L and e_{i1} L and the image of the
/// straight-line generator as a minimal-crossing matching.
struct AssociativityIso {
  StendhalTriple source, target;
  Key image;
};
AssociativityIso associativity_iso(int c1, int c2, int c3,
                                   bool left_first = true);

/// Adjunction data for a thin edge of thickness c: the unit representative
/// 1 -> sum X_{2c-2-j} ox X_j (j even) with its internal shifts.
struct AdjunctionData {
  int c = 1;
  GradedShift unit_shift, counit_shift;
  std::vector<std::pair<int, int>> unit_terms;
};
AdjunctionData adjunction_unit(int c);
/// epsilon(X_p ox X_q): 1 at (0,0), else 0.
Rat adjunction_counit(int c, int p, int q);
/// Bubble value of the dotted counit against the unit (Lemma bubble-dot).
Rat adjunction_bubble(int c, int qhat, Deformation dir);
/// The shift pi_i = p_i - p_{i+1} - 1 in dF_i^L = dE_i <-pi_i>.
int adjoint_shift_pi(int p_i, int p_next);

// ---- K_0 classes ---------------------------------------------------------

LaurentScalar split_coefficient(unsigned A, unsigned B);
LaurentScalar merge_coefficient(unsigned A, unsigned B);

/// Column-wise action of the ladder on the wedge tags of its bottom weight;
/// equals the composite of skewhowe rung operators.
QuantumOperator k0_class(const Ladder& l);

}  // namespace wb
