#pragma once

/// \file stendhal.hpp
/// Stendhal triples and diagrams, normal-form rewriting in the tensor
/// algebras T~, brute-force cyclotomic quotients T, induction maps and
/// central elements.
///
/// Conventions (pinned by the worked gl_3 product):
///  * composition ab stacks b on top of a (diagrams are read bottom to top);
///  * psi_k^2 e(i) = Q_{i_k,i_{k+1}}(y_k, y_{k+1}) e(i) with
///    Q_{i,i+1}(u,v) = v-u and Q_{i+1,i}(u,v) = u-v  (i.e. Q_{21}(u,v)=u-v);
///  * a black strand crossing a red omega_a and back costs delta_{i,a} dots
///    on the black strand (either side);
///  * normal forms: all dots at the bottom, lexicographically smallest
///    reduced word (read bottom-up) for each strand permutation.

#include "wb/qring.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace wb {

/// Coefficient ring for the rewriting engine: Q[h]/(h^2).  The h-part stays
/// zero except in deformed handles (the d-cost deformation directions).
struct Coef {
  Rat a = 0, b = 0;  // a + h*b

  Coef() = default;
  Coef(long v) : a(v) {}  // NOLINT
  Coef(const Rat& v) : a(v) {}  // NOLINT
  static Coef h() { Coef c; c.b = 1; return c; }

  bool is_zero() const { return a == 0 && b == 0; }
  Coef operator+(const Coef& o) const { return with(a + o.a, b + o.b); }
  Coef operator-(const Coef& o) const { return with(a - o.a, b - o.b); }
  Coef operator-() const { return with(-a, -b); }
  Coef operator*(const Coef& o) const {
    return with(a * o.a, a * o.b + b * o.a);
  }
  Coef& operator+=(const Coef& o) { a += o.a; b += o.b; return *this; }
  bool operator==(const Coef& o) const { return a == o.a && b == o.b; }

 private:
  static Coef with(const Rat& x, const Rat& y) {
    Coef c; c.a = x; c.b = y;
    c.a.canonicalize(); c.b.canonicalize();
    return c;
  }
};

struct Strand {
  bool red = false;
  int label = 1;  // black: simple-root index in [1,n-1]; red: fundamental a
  auto operator<=>(const Strand&) const = default;
};
using Arr = std::vector<Strand>;

/// A Stendhal triple (i-vec, lambda-vec, kappa).
struct StendhalTriple {
  std::vector<int> blacks;  // black labels, left to right
  std::vector<int> reds;    // fundamental weight indices, left to right
  std::vector<int> kappa;   // kappa[j] = #blacks strictly left of red j

  auto operator<=>(const StendhalTriple&) const = default;

  int strand_count() const { return int(blacks.size() + reds.size()); }
  bool valid(int n) const;
  Arr arrangement() const;
  static StendhalTriple from_arrangement(const Arr& a);
  /// A crossingless dotless diagram on this triple is violated iff a black
  /// strand is leftmost, i.e. kappa(1) > 0 (or there are no reds at all).
  bool violated() const {
    if (blacks.empty()) return false;
    return reds.empty() || kappa.front() > 0;
  }
  nlohmann::json to_json() const;
  static StendhalTriple from_json(const nlohmann::json& j);
};

/// Elementary event in a diagram word, read bottom to top.
struct Event {
  bool dot = false;
  int pos = 0;  // 0-based; a crossing acts on positions (pos, pos+1)
  auto operator<=>(const Event&) const = default;
};

/// A raw Stendhal diagram: bottom triple plus a word of events.
struct Diagram {
  StendhalTriple bottom;
  std::vector<Event> word;

  bool valid(int n) const;  // in-range events, no red-red crossings
  StendhalTriple top() const;
  int degree() const;
  nlohmann::json to_json() const;
  static Diagram from_json(const nlohmann::json& j);
};

/// Normal-form basis diagram: strand permutation (reds order-preserving)
/// realized by its lex-min reduced word, with dots collected at the bottom.
struct Key {
  StendhalTriple bottom;
  std::vector<int> perm;  // perm[p] = top position of bottom strand p
  std::vector<int> dots;  // dot count per bottom position (blacks only)

  auto operator<=>(const Key&) const = default;
  static Key idempotent(const StendhalTriple& t);
  StendhalTriple top() const;
  int degree() const;
  Diagram diagram() const;  // dots at bottom then the canonical word
};

using Element = std::map<Key, Coef>;

Element& add_term(Element& e, const Key& k, const Coef& c);
Element scale(const Element& e, const Coef& c);
Element add(const Element& x, const Element& y);
bool is_homogeneous(const Element& e);

/// Which algebra we compute in.
struct AlgebraHandle {
  int n = 2;                 // gl_n
  std::vector<int> lambda;   // red fundamental weights, left to right
  bool cyclotomic = false;
  int deformed_red = -1;     // 0-based red index with the d-cost deformation
  int cutoff = 48;           // max degree explored by cyclotomic deepening
};

/// Raised when the cyclotomic iterative deepening fails to stabilize.
struct CutoffError : std::runtime_error {
  int degree;
  explicit CutoffError(int d)
      : std::runtime_error("cyclotomic cutoff exceeded at degree " +
                           std::to_string(d)),
        degree(d) {}
};

int cross_degree(const Strand& s, const Strand& t);
/// Degree of the crossing-only part of a permutation diagram.
int perm_degree(const Arr& bottom, const std::vector<int>& perm);
/// Lexicographically smallest reduced word of a permutation, read bottom-up.
std::vector<int> canonical_word(std::vector<int> perm);

/// Rewrite an arbitrary word over the given bottom into normal form.
/// In cyclotomic handles, visibly violated terms are dropped along the way
/// (they lie in the ideal K); the result is only meaningful modulo K and
/// should normally be passed through cyclotomic_reduce.
Element normalize(const AlgebraHandle& h, const StendhalTriple& bottom,
                  const std::vector<Event>& word,
                  const std::vector<int>& bottom_dots = {});
Element normalize(const AlgebraHandle& h, const Diagram& d);

/// Stack b on top of a (zero if top(a) != bottom(b)); NOT reduced mod K.
Element compose_elements(const AlgebraHandle& h, const Element& a,
                         const Element& b);

/// Raw diagram composition per the paper: b stacked on top of a, or zero.
std::optional<Diagram> compose(const Diagram& a, const Diagram& b);

/// Reflection through the horizontal axis (the anti-automorphism).
Element reflect(const AlgebraHandle& h, const Element& e);
Diagram reflect(const Diagram& d);

/// All normal-form diagrams bottom -> top with degree in [min_degree, max_degree].
std::vector<Key> basis(const AlgebraHandle& h, const StendhalTriple& bottom,
                       const StendhalTriple& top, int max_degree,
                       int min_degree = -1000000);

/// All strand permutations bottom -> top (labels match, reds in order).
std::vector<std::vector<int>> matchings(const StendhalTriple& bottom,
                                        const StendhalTriple& top);

/// All Stendhal triples for the handle with the given black-label multiset.
std::vector<StendhalTriple> all_triples(const AlgebraHandle& h,
                                        std::vector<int> blacks);

/// Black-label multiset determined by lambda - mu = sum m_i alpha_i; throws
/// std::domain_error if mu is not below lambda.
std::vector<int> blacks_for_weight(const AlgebraHandle& h,
                                   const std::vector<int>& mu);

// ---- cyclotomic quotient -------------------------------------------------

/// Reduce modulo the degreewise ideal K (handle must be cyclotomic).
Element cyclotomic_reduce(const AlgebraHandle& h, const Element& x);
/// Like cyclotomic_reduce, but stop enlarging the ideal span of each block
/// once its corank reaches expected_corank (sound when the true quotient
/// dimension of the block is known, e.g. from a basis theorem); pass -1 for
/// the full enumeration.
Element block_reduce(const AlgebraHandle& h, const Element& x,
                     int expected_corank);
/// compose + cyclotomic_reduce.
Element multiply_cyclotomic(const AlgebraHandle& h, const Element& a,
                            const Element& b);
/// Graded dimension of e_top T e_bottom as a Laurent polynomial in q.
LaurentScalar graded_dimension(const AlgebraHandle& h,
                               const StendhalTriple& bottom,
                               const StendhalTriple& top);
/// Sum of graded dimensions over all non-violated (bottom, top) pairs.
LaurentScalar total_graded_dimension(const AlgebraHandle& h,
                                     const std::vector<int>& blacks);
/// Quotient basis (non-pivot normal forms) of e_top T e_bottom.
std::vector<Key> cyclotomic_basis(const AlgebraHandle& h,
                                  const StendhalTriple& bottom,
                                  const StendhalTriple& top);

// ---- induction maps ------------------------------------------------------

Key add_black_right(const Key& k, int label);
Key add_black_left(const Key& k, int label);
Key add_red_right(const Key& k, int weight);
Element add_black_right(const Element& e, int label);
Element add_black_left(const Element& e, int label);
Element add_red_right(const Element& e, int weight);

// ---- central elements ----------------------------------------------------

/// h_{k,i}: sum over crossingless diagrams of all placements of k dots on
/// label-i strands, over all (non-violated, if cyclotomic) idempotents of
/// the weight space with the given black multiset.
Element central_element(const AlgebraHandle& h, int k, int i,
                        const std::vector<int>& blacks);

}  // namespace wb
