#pragma once

/// \file tableaux.hpp
/// Standard tableaux on rectangles, content/row reading words, the cellular
/// (matrix-unit) basis of the corner weight space of T^{(a,b)}, and the
/// simple module L_{a,b} with its diagrammatic action.

#include "wb/stendhal.hpp"

namespace wb {

/// A filling of an a x b rectangle.  Boxes are stored row-major starting
/// with the bottom row, matching the reading order "from the bottom left
/// corner to the bottom right corner, and then in rows".  Box (i,j) (row i
/// from the bottom, column j, both 1-based) sits at filling[(i-1)*b+(j-1)]
/// and has content a + j - i.
struct RectTableau {
  int a = 1, b = 1;
  std::vector<int> filling;

  auto operator<=>(const RectTableau&) const = default;

  int at(int i, int j) const { return filling[(i - 1) * b + (j - 1)]; }
  bool standard() const;

  /// The row tableau R: box (i,j) filled with (i-1)*b + j.
  static RectTableau row_tableau(int a, int b);

  /// k-th entry (1-based k) is the content of the box containing k.
  std::vector<int> content_word() const;
  /// Entries in reading order; this is just the filling vector.
  const std::vector<int>& row_word() const { return filling; }
  /// w_S as a 0-based permutation: position k-1 maps to row_word[k-1]-1,
  /// so that w_S sends (1,...,ab) to the row word.
  std::vector<int> w() const;

  nlohmann::json to_json() const;  // array of rows, bottom row first
  static RectTableau from_json(const nlohmann::json& j);
};

/// All standard fillings, sorted lexicographically by row word.
std::vector<RectTableau> enumerate_standard(int a, int b);

/// The cyclotomic algebra housing the cellular basis: gl_{a+b} with
/// lambda = (omega_a, omega_b).
AlgebraHandle cellular_handle(int a, int b);

/// The corner idempotent triple e_{a,b}: reds at far left and far right,
/// blacks reading the content word of the tableau.
StendhalTriple corner_triple(const RectTableau& t);

/// The diagram C_{S,T}: bottom reads content_word(T), the middle slice
/// reads content_word(R), the top reads content_word(S); degree 0.
Diagram cellular_diagram(const RectTableau& S, const RectTableau& T);

/// The cellular basis with products normalized to exact matrix units.
/// Products use the paper's operator order: mul(X, Y) stacks X on top of Y,
/// so that C_{S,T} * C_{S',T'} = delta_{T,S'} C_{S,T'}.
struct CellularModel {
  int a = 1, b = 1;
  AlgebraHandle handle;
  int corank = -1;  // block corank passed to the reduction (-1 = full)
  std::vector<RectTableau> tabs;
  /// unit[s][t]: the exact matrix unit (sign-corrected reduced class).
  std::vector<std::vector<Element>> unit;
  /// unit[s][t] = sign[s][t] * (reduced class of cellular_diagram(S,T)).
  std::vector<std::vector<Rat>> sign;

  int index(const RectTableau& t) const;
  /// Paper-order product of reduced classes: X stacked on top of Y.
  Element mul(const Element& x, const Element& y) const;
};

/// Build the model; corank >= 1 stops each block reduction at that corank
/// (sound once the block's true quotient dimension is known), -1 runs the
/// full ideal enumeration.
CellularModel cellular_model(int a, int b, int corank = -1);

/// The simple module L_{a,b} with basis {C_{S,R}}.
struct SimpleModule {
  CellularModel model;

  int dim() const { return int(model.tabs.size()); }
  /// C_{S,R} as a reduced algebra element (= model.unit[s][0]).
  const Element& basis_element(int s) const { return model.unit[s][0]; }
  /// Left action in the paper's order: x * C_{S,R} = sum_T M[T][S] C_{T,R}.
  /// Throws std::domain_error if x does not act by cellular classes (it
  /// always does for reduced elements of the corner weight space).
  std::vector<std::vector<Rat>> act(const Element& x) const;
};

SimpleModule simple_module(int a, int b, int corank = -1);

}  // namespace wb
