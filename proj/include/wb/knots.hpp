#pragma once

/// \file knots.hpp
/// Tangle and link input as Morse words (cups, caps, crossings, transport
/// rungs), compilation to ladder words with crossing markers, and the
/// decategorified sl_n Reshetikhin-Turaev evaluation through the Rickard
/// Euler characteristics, with framing and grading bookkeeping via xi, xi'
/// and the weighted writhe.
///
/// Conventions.  A strand colored a is an upright of thickness a when
/// oriented upward and thickness n - a when oriented downward; a cup colored
/// a turns an (n, 0) pair of uprights into (n - a, a) via F^{(a)} (the
/// reversed cup turns (0, n) into (a, n - a) via E^{(a)}), and caps undo
/// them.  A positive crossing of strands colored (a, b) acts by the graded
/// Euler characteristic of the forward Rickard complex (t = -1) and adds
/// xi(a, b) to the grading offset, so the full braiding q^{xi} [Theta] is
/// carried as an integer-graded operator plus a rational offset in (1/n) Z.
/// The offset therefore jumps by exactly 2 xi(a, b) under a crossing switch,
/// and components with framing f contribute f * framing_twist(color).

#include "wb/complexes.hpp"

namespace wb {

/// xi(a,b) = (n - max(a,b)) * min(a,b) / n.
Rat xi(int a, int b, int n);
/// xi'(a,b) = min(a,b) * max(a,b) / n = min(a,b) - xi(a,b).
Rat xi_prime(int a, int b, int n);
/// Grading offset contributed by one positive curl on a strand colored a:
/// -a (n - a)(n - 1) / n, pinned by evaluating kinked unknots (a positive
/// kink multiplies the unknot value by exactly q^{framing_twist(a, n)}).
Rat framing_twist(int a, int n);

/// Malformed tangle input: slice boundaries fail to compose, colors do not
/// match, or the diagram is not closed where it must be.
struct TangleError : std::runtime_error {
  int slice = -1;  // 0-based slice index, -1 when not tied to one slice
  TangleError(int slice_index, const std::string& what);
};

/// Colors outside the fundamental range [0, n]: evaluating those would need
/// cabling and the projectors P^{+-}, which are out of scope.
struct UnsupportedColorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Slice {
  enum class Kind { CUP, CAP, CROSSING, RUNG };
  Kind kind = Kind::CUP;
  int pos = 1;           // leftmost upright involved, 1-based
  int color = 0;         // cup / cap color
  bool reversed = false; // cup: (0,n) -> (a, n-a) instead of (n,0) -> (n-a, a)
  bool positive = true;  // crossing sign
  int a = 1, b = 1;      // strand colors at a crossing
  Rung rung;             // explicit transport rung

  static Slice cup(int pos, int color, bool reversed = false);
  static Slice cap(int pos, int color, bool reversed = false);
  static Slice crossing(int pos, bool positive, int a, int b);
  static Slice transport(const Rung& r);
};

struct TangleDiagram {
  int n = 2;    // ambient sl_n
  int ell = 1;  // number of uprights
  std::vector<Slice> slices;

  /// Components are declared, not traced: each closed component of the link
  /// with its color and framing integer, used only for the framing
  /// normalization of evaluate().
  struct Component {
    int color = 1;
    int framing = 0;
  };
  std::vector<Component> components;

  nlohmann::json to_json() const;
  static TangleDiagram from_json(const nlohmann::json& j);
};

/// One lowered slice: either a crossing marker (expanded at evaluation time
/// into its Rickard Euler characteristic) or a list of concrete rungs.
struct CompiledStep {
  bool crossing = false;
  int i = 1;             // crossing position
  bool positive = true;
  int a = 1, b = 1;      // crossing colors
  std::vector<Rung> rungs;          // non-crossing steps (may be empty)
  std::vector<int> weights_after;   // upright weights above this slice
};

struct CompiledTangle {
  int ell = 1, n = 1;
  std::vector<int> bottom;  // injected bottom weights, each n or 0
  std::vector<CompiledStep> steps;
};

/// Lower every slice to rungs or crossing markers acting on explicit weight
/// sequences.  Bottom weights are injected lazily: the first cup touching a
/// fresh upright charges it with n (or its partner, for reversed cups).
/// Throws TangleError with the offending slice index when boundaries fail to
/// compose, and UnsupportedColorError for colors outside [0, n].
CompiledTangle compile(const TangleDiagram& t);

/// Sum over crossings of +- xi'(a, b).
Rat weighted_writhe(const TangleDiagram& t);

struct InvariantValue {
  LaurentScalar poly;  // integer-graded part, in Z[q, q^{-1}]
  Rat offset;          // grading offset in (1/n) Z

  nlohmann::json to_json() const;  // {"poly": {...}, "offset": "p/q"}
  bool operator==(const InvariantValue&) const = default;
};

/// Decategorified Reshetikhin-Turaev evaluation of a closed diagram: expand
/// each crossing via rickard_euler at t = -1, push a wedge vector through the
/// ladder word via the K_0 classes of the rungs, and read off the scalar on
/// the unique full/empty tag.  The 0-framed unknot colored p returns exactly
/// qbinom(n, p) with zero offset.
InvariantValue evaluate(const TangleDiagram& t);
/// Same, overriding the ambient n of the diagram.
InvariantValue evaluate(TangleDiagram t, int n);

}  // namespace wb
