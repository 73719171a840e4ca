#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wb/complexes.hpp"

#include <set>

using namespace wb;

namespace {

std::vector<Rat> neg(std::vector<Rat> v) {
  for (auto& x : v) x = -x;
  return v;
}

std::vector<Rat> sub(std::vector<Rat> a, const std::vector<Rat>& b) {
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] -= b[i];
    a[i].canonicalize();
  }
  return a;
}

bool is_zero(const std::vector<Rat>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("graded complex plumbing and homotopy solver") {
  // A tiny complex: 0 -> Q --1--> Q -> 0 in homological degrees -1, 0.
  GradedComplex C;
  C.terms[-1] = {0};
  C.terms[0] = {0};
  C.diff[-1] = {{Rat(1)}};
  C.validate();
  CHECK(C.homology().empty());

  ChainMap id = identity_map(C);
  // f = g gives the zero homotopy.
  auto h = homotopy_between(C, C, id, id);
  REQUIRE(h.has_value());
  for (const auto& [k, m] : h->mats)
    for (const auto& row : m)
      for (const auto& x : row) CHECK(x == 0);
  // The identity of a contractible complex is null-homotopic ...
  ChainMap zero;
  CHECK(homotopy_between(C, C, id, zero).has_value());

  // ... but not on a complex with homology.
  GradedComplex D;
  D.terms[0] = {0};
  ChainMap idD = identity_map(D), zeroD;
  CHECK_FALSE(homotopy_between(D, D, idD, zeroD).has_value());

  // validate() rejects non-squaring differentials.
  GradedComplex bad;
  bad.terms[-2] = {0};
  bad.terms[-1] = {0};
  bad.terms[0] = {0};
  bad.diff[-2] = {{Rat(1)}};
  bad.diff[-1] = {{Rat(1)}};
  CHECK_THROWS_AS(bad.validate(), std::logic_error);
  // ... and degree-inhomogeneous ones.
  GradedComplex inhom;
  inhom.terms[-1] = {0};
  inhom.terms[0] = {2};
  inhom.diff[-1] = {{Rat(1)}};
  CHECK_THROWS_AS(inhom.validate(), std::logic_error);
}

TEST_CASE("bigon square: complex, pairing, homology") {
  BigonSquare B = bigon_square(8);
  // validate() ran during construction; spot-check the shape: hom degrees
  // 0..-4, generators A ox A at (0,0) and k at (-2, int 2).
  REQUIRE(B.C.dim(0) > 0);
  REQUIRE(B.C.dim(-4) > 0);

  // k and A ox A are cycles; k has four unit coordinates with signs
  // (+1, +1, -1, +1) on the diagonal slots (A,D), (B,B), (C,C), (D,A).
  {
    std::multiset<Rat> coords;
    for (const auto& x : B.kk.at(-2))
      if (x != 0) coords.insert(x);
    CHECK(coords == std::multiset<Rat>{Rat(-1), Rat(1), Rat(1), Rat(1)});
    const auto& d2 = B.C.diff.at(-2);
    std::vector<Rat> dk(B.C.dim(-1), 0);
    for (int r = 0; r < B.C.dim(-1); ++r)
      for (int c = 0; c < B.C.dim(-2); ++c) dk[r] += d2[r][c] * B.kk.at(-2)[c];
    CHECK(is_zero(dk));
  }

  // Homology: exactly two one-dimensional classes, T<1> (+) T<-1> scalarized:
  // [A ox A] in bidegree (0, 0) and [k] in bidegree (-2, 2).
  auto H = B.C.homology();
  CHECK(H == std::map<std::pair<int, int>, int>{{{0, 0}, 1}, {{-2, 2}, 1}});
  CHECK_FALSE(B.is_boundary(0, B.aa.at(0)));
  CHECK_FALSE(B.is_boundary(-2, B.kk.at(-2)));

  // Pairing table <A,D> = <B,B> = -<C,C> = <D,A> = 1, all others 0.
  for (int g = 0; g < 4; ++g)
    for (int gp = 0; gp < 4; ++gp) {
      int want = 0;
      if ((g == 0 && gp == 3) || (g == 3 && gp == 0) || (g == 1 && gp == 1))
        want = 1;
      if (g == 2 && gp == 2) want = -1;
      CHECK(BigonSquare::pairing(g, gp) == want);
    }
  CHECK(B.counit(B.kk.at(-2)) == 1 + 1 - (-1) + 1);

  // <dx, y> = <x, dy> in the scalarized form: the counit kills boundaries
  // from C_-3.
  const auto& d3 = B.C.diff.at(-3);
  for (int j = 0; j < B.C.dim(-3); ++j) {
    std::vector<Rat> de(B.C.dim(-2), 0);
    for (int r = 0; r < B.C.dim(-2); ++r) de[r] = d3[r][j];
    CHECK(B.counit(de) == 0);
  }
}

TEST_CASE("bigon square: psi and the y-hat operators") {
  BigonSquare B = bigon_square(8);
  CHECK(B.psi.hom_shift == -2);
  CHECK(B.psi.int_shift == 2);
  CHECK(B.y_left.hom_shift == 2);
  CHECK(B.y_left.int_shift == -2);
  CHECK(is_chain_map(B.C, B.C, B.psi, B.max_int - 2));
  CHECK(is_chain_map(B.C, B.C, B.y_left));
  CHECK(is_chain_map(B.C, B.C, B.y_right));

  // psi(A ox A) = k exactly.
  CHECK(B.apply(B.psi, 0, B.aa.at(0)) == B.kk.at(-2));

  // y-hat_i(k) = A ox A and y-hat_{i+1}(k) = -A ox A -- here even on the
  // nose, not just modulo boundaries.
  CHECK(B.apply(B.y_left, -2, B.kk.at(-2)) == B.aa.at(0));
  CHECK(B.apply(B.y_right, -2, B.kk.at(-2)) == neg(B.aa.at(0)));
  CHECK(B.is_boundary(0, sub(B.apply(B.y_left, -2, B.kk.at(-2)), B.aa.at(0))));
  // ... and modulo boundaries they are NOT interchangeable.
  CHECK_FALSE(
      B.is_boundary(0, sub(B.apply(B.y_right, -2, B.kk.at(-2)), B.aa.at(0))));

  // y-hat(A ox A) = 0 for degree reasons: there is nothing in hom degree 2.
  CHECK(B.C.dim(2) == 0);
  CHECK(is_zero(B.apply(B.y_left, 0, B.aa.at(0))));
  CHECK(is_zero(B.apply(B.y_right, 0, B.aa.at(0))));

  // psi^2 ~ 0.
  ChainMap psi2 = compose_maps(B.psi, B.psi, B.C);
  ChainMap zero4;
  zero4.hom_shift = -4;
  zero4.int_shift = 4;
  CHECK(homotopy_between(B.C, B.C, psi2, zero4, B.window()).has_value());
  // psi(k) is already a boundary on the nose.
  CHECK(B.is_boundary(-4, B.apply(B.psi, -2, B.kk.at(-2))));

  // nilHecke relation, both orders:
  //   y_i psi - psi y_{i+1} ~ id ~ psi y_i - y_{i+1} psi.
  ChainMap id = identity_map(B.C);
  ChainMap n1 = sub_maps(compose_maps(B.psi, B.y_left, B.C),
                         compose_maps(B.y_right, B.psi, B.C));
  ChainMap n2 = sub_maps(compose_maps(B.y_left, B.psi, B.C),
                         compose_maps(B.psi, B.y_right, B.C));
  CHECK(homotopy_between(B.C, B.C, n1, id, B.window()).has_value());
  CHECK(homotopy_between(B.C, B.C, n2, id, B.window()).has_value());
  // The sign matters: neither composite is homotopic to -id.
  ChainMap mid = scale_map(id, Rat(-1));
  CHECK_FALSE(homotopy_between(B.C, B.C, n1, mid, B.window()).has_value());
  CHECK_FALSE(homotopy_between(B.C, B.C, n2, mid, B.window()).has_value());
}

TEST_CASE("bigon square homology matches the one-black T~ block") {
  // H_0 and H_-2 scalarize the two summands W_beta = T<1> (+) T<-1>; in the
  // stripped (idempotent-core) picture each contributes a single class.  The
  // graded dimensions above were checked exactly in the homology test; here
  // we pin the internal degrees to the <1>/<-1> splitting: the two classes
  // sit 2 internal degrees apart, at homological distance 2.
  BigonSquare B = bigon_square(6);
  auto H = B.C.homology();
  REQUIRE(H.size() == 2);
  auto it = H.begin();
  auto [kn1, d1] = *it++;
  auto [kn2, d2] = *it;
  CHECK(d1 == 1);
  CHECK(d2 == 1);
  CHECK(std::abs(kn1.first - kn2.first) == 2);
  CHECK(std::abs(kn1.second - kn2.second) == 2);
}

TEST_CASE("Rickard complex terms") {
  // nhat = 0: terms F^(s) E^(s) <s>, E applied first.
  for (const RickardTerm& t : rickard_complex(0, false, 4)) {
    CHECK(t.F_leading);
    CHECK(t.cF == t.s);
    CHECK(t.cE == t.s);
    CHECK(t.shift == t.s);
    CHECK(t.hom == t.s);
  }
  // nhat = 2: F^(2) -> F^(3)E^(1)<-1> -> ...
  auto r2 = rickard_complex(2, false, 2);
  CHECK(r2[0].cF == 2);
  CHECK(r2[0].cE == 0);
  CHECK(r2[0].shift == -2);
  CHECK(r2[1].cF == 3);
  CHECK(r2[1].cE == 1);
  CHECK(r2[1].shift == -1);
  CHECK(r2[1].hom == 1);
  // nhat = -1: E-leading variant (F applied first).
  auto rm = rickard_complex(-1, false, 1);
  CHECK_FALSE(rm[0].F_leading);
  CHECK(rm[0].cE == 1);
  CHECK(rm[0].cF == 0);
  CHECK(rm[0].shift == 1);
  // Inverse: homological degrees flip sign.
  auto ri = rickard_complex(0, true, 2);
  CHECK(ri[2].hom == -2);
  CHECK(ri[2].shift == -2);
}

TEST_CASE("Rickard complex truncated by weight bounds") {
  // On a (1,0) weight with n = 1 the complex truncates to [F^{(1)}].
  auto terms = rickard_on_block(2, 1, {1, 0}, 1, false);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].first.rungs ==
        std::vector<Rung>{{RungKind::F, 1, 1}});
  CHECK(terms[0].second == GradedShift{-1, 0});
  CHECK(terms[0].first.top() == std::vector<int>{0, 1});

  // The p_i = p_{i+1} = 1 complex of the paper has exactly two terms:
  // the identity and F E <1>.
  auto t11 = rickard_on_block(2, 2, {1, 1}, 1, false);
  REQUIRE(t11.size() == 2);
  CHECK(t11[0].first.rungs.empty());
  CHECK(t11[0].second == GradedShift{0, 0});
  CHECK(t11[1].first.rungs ==
        std::vector<Rung>{{RungKind::E, 1, 1}, {RungKind::F, 1, 1}});
  CHECK(t11[1].second == GradedShift{1, 1});

  // Every block yields a bounded complex.
  for (int n = 1; n <= 3; ++n)
    for (int p1 = 0; p1 <= n; ++p1)
      for (int p2 = 0; p2 <= n; ++p2) {
        auto ts = rickard_on_block(2, n, {p1, p2}, 1, false);
        CHECK(int(ts.size()) <= std::min(p2, n - p1) + 1);
        for (auto& [l, s] : ts) l.levels();  // no throw
      }

  CHECK_THROWS_AS(rickard_on_block(2, 2, {1, 1}, 2, false),
                  std::domain_error);
  CHECK_THROWS_AS(rickard_on_block(2, 2, {1, 1, 1}, 1, false),
                  std::domain_error);
}

TEST_CASE("Rickard Euler characteristics invert and braid on K_0") {
  // Euler characteristic on wedge^1 ox wedge^0: a single term F<-1>, so the
  // block maps to its image with coefficient q^{-1}.
  {
    auto op = rickard_euler(2, 1, {1, 0}, 1, false);
    WedgeTag src{{1u, 0u}}, dst{{0u, 1u}};
    REQUIRE(op.cols.count(src));
    WedgeVector want;
    add_to(want, dst, LaurentScalar::monomial(-1));
    CHECK(op.cols.at(src) == want);
  }

  // [Theta^{-1}][Theta] = 1 on every tag of assorted blocks.
  auto check_inverse = [](int ell, int n, std::vector<int> pv, int i) {
    auto fwd = rickard_euler(ell, n, pv, i, false);
    auto pv2 = pv;
    std::swap(pv2[i - 1], pv2[i]);
    auto bwd = rickard_euler(ell, n, pv2, i, true);
    auto comp = compose(bwd, fwd);
    int p = 0;
    for (int x : pv) p += x;
    auto sp = SkewHoweSpace::make(ell, n, p);
    for (const auto& t : sp.tags) {
      if (sp.gl_ell_weight(t) != pv) continue;
      WedgeVector want;
      add_to(want, t, LaurentScalar::monomial(0));
      REQUIRE(comp.cols.count(t));
      CHECK(comp.cols.at(t) == want);
    }
  };
  check_inverse(2, 2, {1, 1}, 1);
  check_inverse(2, 2, {2, 1}, 1);
  check_inverse(2, 2, {2, 0}, 1);
  check_inverse(2, 3, {2, 1}, 1);
  check_inverse(2, 3, {3, 1}, 1);
  check_inverse(3, 2, {1, 1, 2}, 2);
  check_inverse(3, 3, {2, 1, 1}, 1);

  // Theta_1 Theta_2 Theta_1 = Theta_2 Theta_1 Theta_2 on K_0.
  auto check_braid = [](int n, std::vector<int> pv) {
    auto theta = [&](std::vector<int> p, int i) {
      auto q = p;
      std::swap(q[i - 1], q[i]);
      return std::pair(rickard_euler(3, n, p, i, false), q);
    };
    auto [a1, p1] = theta(pv, 1);
    auto [a2, p2] = theta(p1, 2);
    auto [a3, p3] = theta(p2, 1);
    auto [b1, q1] = theta(pv, 2);
    auto [b2, q2] = theta(q1, 1);
    auto [b3, q3] = theta(q2, 2);
    REQUIRE(p3 == q3);
    auto lhs = compose(a3, compose(a2, a1));
    auto rhs = compose(b3, compose(b2, b1));
    int p = 0;
    for (int x : pv) p += x;
    auto sp = SkewHoweSpace::make(3, n, p);
    for (const auto& t : sp.tags) {
      if (sp.gl_ell_weight(t) != pv) continue;
      auto l = lhs.cols.count(t) ? lhs.cols.at(t) : WedgeVector{};
      auto r = rhs.cols.count(t) ? rhs.cols.at(t) : WedgeVector{};
      CHECK(l == r);
    }
  };
  check_braid(2, {1, 1, 0});
  check_braid(2, {1, 1, 1});
  check_braid(2, {2, 1, 1});
  check_braid(3, {2, 1, 1});
  check_braid(3, {1, 2, 1});
}

TEST_CASE("nilHecke braid check") {
  BraidReport rep = nilhecke_braid_check();
  CHECK(rep.ok());
  CHECK(rep.shifts_ok);
  CHECK(rep.squares_zero);
  CHECK(rep.braid_equal);
  // Both triple composites correspond to 1 in Z(T~^{omega_3})(-6).
  CHECK(rep.top_scalar_lhs == 1);
  CHECK(rep.top_scalar_rhs == 1);
  CHECK(rep.hom_dim == 1);

  // The six copies carry shifts <3>, <1>, <1>, <-1>, <-1>, <-3> in
  // homological degrees 0, -2, -2, -4, -4, -6.
  std::multiset<std::pair<int, int>> got(rep.copies.begin(),
                                         rep.copies.end());
  std::multiset<std::pair<int, int>> want{{3, 0},  {1, -2},  {1, -2},
                                          {-1, -4}, {-1, -4}, {-3, -6}};
  CHECK(got == want);

  // Anchor for the (-6,6) Hom dimension: Z(T~^{omega_3}) has nothing in
  // negative degree at the red-only idempotent.
  AlgebraHandle h3{3, {3}, false, -1, 48};
  StendhalTriple t3;
  t3.reds = {3};
  t3.kappa = {0};
  CHECK(basis(h3, t3, t3, 0, 0).size() == 1);
  CHECK(basis(h3, t3, t3, -1).empty());
}
