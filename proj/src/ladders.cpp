#include "wb/ladders.hpp"

#include <algorithm>
#include <stdexcept>

namespace wb {

namespace {

int popcount(unsigned S) { return __builtin_popcount(S); }

// #{x in A, y in B : x < y}
int count_lt(unsigned A, unsigned B) {
  int c = 0;
  for (int x = 0; x < 32; ++x)
    if (A >> x & 1)
      for (int y = x + 1; y < 32; ++y)
        if (B >> y & 1) ++c;
  return c;
}

std::vector<int> rect_content(int a, int b) {
  if (a <= 0 || b <= 0) return {};
  return RectTableau::row_tableau(a, b).content_word();
}

// Arrangement positions of the blacks and reds of a triple, in order.
void strand_positions(const StendhalTriple& t, std::vector<int>& blacks,
                      std::vector<int>& reds) {
  Arr arr = t.arrangement();
  blacks.clear();
  reds.clear();
  for (int p = 0; p < int(arr.size()); ++p)
    (arr[p].red ? reds : blacks).push_back(p);
}

}  // namespace

std::vector<std::vector<int>> Ladder::levels() const {
  if (ell < 1 || n < 1 || int(bottom.size()) != ell)
    throw std::domain_error("Ladder: bottom must have ell entries");
  std::vector<std::vector<int>> lv{bottom};
  for (int w : bottom)
    if (w < 0 || w > n) throw std::domain_error("Ladder: weight out of range");
  for (const Rung& r : rungs) {
    if (r.i < 1 || r.i >= ell || r.c < 0)
      throw std::domain_error("Ladder: rung out of range");
    std::vector<int> w = lv.back();
    int from = r.kind == RungKind::F ? r.i - 1 : r.i;
    int to = r.kind == RungKind::F ? r.i : r.i - 1;
    w[from] -= r.c;
    w[to] += r.c;
    if (w[from] < 0 || w[to] > n)
      throw std::domain_error("Ladder: weight out of range");
    lv.push_back(std::move(w));
  }
  return lv;
}

std::vector<int> Ladder::top() const { return levels().back(); }

int Ladder::eta() const {
  auto lv = levels();
  int e = 0;
  for (size_t k = 0; k < rungs.size(); ++k) {
    const Rung& r = rungs[k];
    if (r.c == 0) continue;
    int from = r.kind == RungKind::F ? r.i - 1 : r.i;
    int to = r.kind == RungKind::F ? r.i : r.i - 1;
    // split vertex on the source upright, merge vertex on the target
    e -= (lv[k][from] - r.c) * r.c;
    e -= r.c * lv[k][to];
  }
  return e;
}

nlohmann::json Ladder::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const Rung& r : rungs)
    rs.push_back({{"kind", r.kind == RungKind::F ? "F" : "E"},
                  {"i", r.i},
                  {"c", r.c}});
  return {{"ell", ell}, {"n", n}, {"bottom", bottom}, {"rungs", rs}};
}

Ladder Ladder::from_json(const nlohmann::json& j) {
  Ladder l;
  l.ell = j.at("ell").get<int>();
  l.n = j.at("n").get<int>();
  l.bottom = j.at("bottom").get<std::vector<int>>();
  for (const auto& rj : j.at("rungs")) {
    std::string k = rj.at("kind").get<std::string>();
    if (k != "F" && k != "E")
      throw std::domain_error("Ladder: rung kind must be F or E");
    l.rungs.push_back(Rung{k == "F" ? RungKind::F : RungKind::E,
                           rj.at("i").get<int>(), rj.at("c").get<int>()});
  }
  l.levels();
  return l;
}

int sigma(int m, int a, int b) {
  if ((a <= m && m < b) || (b <= m && m < a) || m >= a + b) return 1;
  return -1;
}

LadderBimoduleBasis bimodule_basis(const TrivalentVertex& v,
                                   const StendhalTriple& bottom,
                                   const StendhalTriple& top, int max_degree) {
  int a = v.a, b = v.b, c = a + b;
  if (a < 0 || b < 0 || c == 0)
    throw std::domain_error("bimodule_basis: need a, b >= 0, a + b > 0");
  if (v.index < 1 || v.index > int(bottom.reds.size()) ||
      bottom.reds[v.index - 1] != c)
    throw std::domain_error("bimodule_basis: bottom red must have weight a+b");
  std::vector<int> want_reds(bottom.reds.begin(),
                             bottom.reds.begin() + (v.index - 1));
  if (a > 0) want_reds.push_back(a);
  if (b > 0) want_reds.push_back(b);
  want_reds.insert(want_reds.end(), bottom.reds.begin() + v.index,
                   bottom.reds.end());
  if (top.reds != want_reds)
    throw std::domain_error("bimodule_basis: top reds must split the vertex");
  std::vector<int> cw = rect_content(a, b);
  {
    std::vector<int> lhs = top.blacks, rhs = bottom.blacks;
    rhs.insert(rhs.end(), cw.begin(), cw.end());
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs)
      throw std::domain_error("bimodule_basis: black labels do not match");
  }

  LadderBimoduleBasis out;
  out.vertex = v;
  out.bottom = bottom;
  out.top = top;

  int m = int(bottom.blacks.size()), ab = int(cw.size());
  // Box outputs live strictly between the two new reds (0-based reds
  // index-1 and index of the top); when one side is empty there is no box.
  int seg_lo = 0, seg_hi = 0;
  if (ab > 0) {
    seg_lo = top.kappa[v.index - 1];
    seg_hi = top.kappa[v.index];
  }

  std::vector<int> tpos_black, tpos_red, bpos_black, bpos_red;
  strand_positions(top, tpos_black, tpos_red);
  strand_positions(bottom, bpos_black, bpos_red);
  Arr top_arr = top.arrangement();

  std::vector<RectTableau> tabs;
  if (ab > 0)
    tabs = enumerate_standard(a, b);
  else
    tabs.push_back(RectTableau{a, b, {}});

  for (const RectTableau& S : tabs) {
    std::vector<int> scw = ab > 0 ? S.content_word() : std::vector<int>{};
    // All increasing slot sequences in the segment reading scw.
    std::vector<std::vector<int>> shuffles;
    std::vector<int> cur(ab);
    auto rec_sh = [&](auto&& self, int k, int from) -> void {
      if (k == ab) {
        shuffles.push_back(cur);
        return;
      }
      for (int j = from; j < seg_hi; ++j)
        if (top.blacks[j] == scw[k]) {
          cur[k] = j;
          self(self, k + 1, j + 1);
        }
    };
    if (ab > 0)
      rec_sh(rec_sh, 0, seg_lo);
    else
      shuffles.push_back({});

    for (const std::vector<int>& sh : shuffles) {
      // Remaining top slots, grouped by label against the bottom blacks.
      std::vector<bool> used(top.blacks.size(), false);
      for (int j : sh) used[j] = true;
      std::map<int, std::vector<int>> bot_by_label, top_by_label;
      for (int k = 0; k < m; ++k) bot_by_label[bottom.blacks[k]].push_back(k);
      for (int j = 0; j < int(top.blacks.size()); ++j)
        if (!used[j]) top_by_label[top.blacks[j]].push_back(j);
      // Enumerate label-preserving bijections: per-label permutations.
      std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
      for (auto& [lab, bots] : bot_by_label)
        groups.push_back({bots, top_by_label[lab]});
      std::vector<std::vector<int>> assign;  // per-group current permutation
      for (auto& g : groups) assign.push_back(g.second);

      // Virtual bottom: the thick red expands to (red a, box word, red b).
      auto emit = [&](const std::vector<int>& perm) {
        Arr bot2;
        std::vector<int> target;  // top arrangement position per bot2 strand
        Arr bot_arr = bottom.arrangement();
        int bi = 0, ri = 0, ti = 0;  // bottom black, bottom red, top red
        for (const Strand& s : bot_arr) {
          if (!s.red) {
            bot2.push_back(s);
            target.push_back(tpos_black[perm[bi++]]);
            continue;
          }
          if (ri + 1 != v.index) {
            bot2.push_back(s);
            target.push_back(tpos_red[ti++]);
          } else {
            if (a > 0) {
              bot2.push_back({true, a});
              target.push_back(tpos_red[ti++]);
            }
            for (int k = 0; k < ab; ++k) {
              bot2.push_back({false, scw[k]});
              target.push_back(tpos_black[sh[k]]);
            }
            if (b > 0) {
              bot2.push_back({true, b});
              target.push_back(tpos_red[ti++]);
            }
          }
          ++ri;
        }
        int base = perm_degree(bot2, target);
        if (base > max_degree) return;
        // Dot vectors with 2 * sum <= max_degree - base.
        int room = (max_degree - base) / 2;
        std::vector<int> dots(m, 0);
        auto rec_dots = [&](auto&& self, int k, int left) -> void {
          if (k == m) {
            BimoduleQuadruple q;
            q.perm = perm;
            q.dots = dots;
            q.tab = S;
            q.shuffle = sh;
            int extra = 0;
            for (int d : dots) extra += d;
            q.degree = base + 2 * extra;
            out.entries.push_back(std::move(q));
            return;
          }
          for (int d = 0; d <= left; ++d) {
            dots[k] = d;
            self(self, k + 1, left - d);
          }
          dots[k] = 0;
        };
        if (m == 0) {
          BimoduleQuadruple q;
          q.tab = S;
          q.shuffle = sh;
          q.degree = base;
          out.entries.push_back(std::move(q));
        } else {
          rec_dots(rec_dots, 0, room);
        }
      };

      auto rec_perm = [&](auto&& self, size_t g) -> void {
        if (g == groups.size()) {
          std::vector<int> perm(m);
          for (size_t gi = 0; gi < groups.size(); ++gi)
            for (size_t k = 0; k < groups[gi].first.size(); ++k)
              perm[groups[gi].first[k]] = assign[gi][k];
          emit(perm);
          return;
        }
        std::sort(assign[g].begin(), assign[g].end());
        do {
          self(self, g + 1);
        } while (std::next_permutation(assign[g].begin(), assign[g].end()));
      };
      rec_perm(rec_perm, 0);
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const BimoduleQuadruple& x, const BimoduleQuadruple& y) {
              return x.degree < y.degree;
            });
  return out;
}

std::vector<GradedShift> bigon_decompose(int a, int b) {
  if (a < 0 || b < 0) throw std::domain_error("bigon_decompose: need a,b >= 0");
  LaurentScalar q = qbinom(a + b, a);
  std::vector<GradedShift> out;
  for (auto it = q.coefficients().rbegin(); it != q.coefficients().rend();
       ++it)
    for (Int k = 0; k < it->second; ++k)
      out.push_back(GradedShift{it->first, 0});
  return out;
}

std::vector<GradedShift> bigon_decompose(const Ladder& l) {
  auto lv = l.levels();
  if (l.rungs.size() != 2 || l.rungs[0].i != l.rungs[1].i ||
      l.rungs[0].c != l.rungs[1].c || l.rungs[0].kind == l.rungs[1].kind)
    throw std::domain_error("bigon_decompose: not a bigon");
  int i = l.rungs[0].i, c = l.rungs[0].c;
  if (c == 0) return {GradedShift{}};
  if (l.rungs[0].kind == RungKind::F) {
    if (lv[0][i] != 0)
      throw std::domain_error("bigon_decompose: far upright not empty");
    return bigon_decompose(lv[0][i - 1] - c, c);
  }
  if (lv[0][i - 1] != 0)
    throw std::domain_error("bigon_decompose: far upright not empty");
  return bigon_decompose(lv[0][i] - c, c);
}

AssociativityIso associativity_iso(int c1, int c2, int c3, bool left_first) {
  if (c1 < 0 || c2 < 0 || c3 < 0)
    throw std::domain_error("associativity_iso: negative thickness");
  auto build = [](std::initializer_list<int> reds,
                  std::initializer_list<std::pair<int, int>> rects) {
    Arr arr;
    auto rit = rects.begin();
    for (int r : reds) {
      if (r > 0) arr.push_back({true, r});
      if (rit != rects.end()) {
        for (int lab : rect_content(rit->first, rit->second))
          arr.push_back({false, lab});
        ++rit;
      }
    }
    return arr;
  };
  // i1: split c1+c2 first; i2: split c2+c3 first.
  Arr a1 = build({c1, c2, c3}, {{c1, c2}, {c1 + c2, c3}});
  Arr a2 = build({c1, c2, c3}, {{c1, c2 + c3}, {c2, c3}});
  AssociativityIso iso;
  const Arr& src = left_first ? a2 : a1;
  const Arr& tgt = left_first ? a1 : a2;
  iso.source = StendhalTriple::from_arrangement(src);
  iso.target = StendhalTriple::from_arrangement(tgt);
  // Order-preserving label matching: k-th bottom occurrence of each label
  // (and k-th red) to the k-th top occurrence.
  std::map<std::pair<bool, int>, std::vector<int>> slots;
  for (int p = 0; p < int(tgt.size()); ++p)
    slots[{tgt[p].red, tgt[p].label}].push_back(p);
  std::map<std::pair<bool, int>, size_t> next;
  std::vector<int> perm(src.size());
  for (int p = 0; p < int(src.size()); ++p) {
    auto key = std::make_pair(src[p].red, src[p].label);
    auto it = slots.find(key);
    if (it == slots.end() || next[key] >= it->second.size())
      throw std::logic_error("associativity_iso: labels do not match");
    perm[p] = it->second[next[key]++];
  }
  iso.image = Key{iso.source, perm, std::vector<int>(src.size(), 0)};
  return iso;
}

AdjunctionData adjunction_unit(int c) {
  if (c < 1) throw std::domain_error("adjunction_unit: need c >= 1");
  AdjunctionData d;
  d.c = c;
  d.unit_shift = GradedShift{c - 1, 0};
  d.counit_shift = GradedShift{1 - c, 0};
  for (int j = 0; j <= 2 * c - 2; j += 2) d.unit_terms.push_back({2 * c - 2 - j, j});
  return d;
}

Rat adjunction_counit(int c, int p, int q) {
  if (c < 1 || p < 0 || q < 0 || p > 2 * c - 2 || q > 2 * c - 2)
    throw std::domain_error("adjunction_counit: index out of range");
  return (p == 0 && q == 0) ? Rat(1) : Rat(0);
}

Rat adjunction_bubble(int c, int qhat, Deformation dir) {
  return bubble_pairing(c, qhat, dir);
}

int adjoint_shift_pi(int p_i, int p_next) { return p_i - p_next - 1; }

LaurentScalar split_coefficient(unsigned A, unsigned B) {
  int k = popcount(A) * popcount(B) + count_lt(A, B);
  return LaurentScalar::monomial(-k, k % 2 ? -1 : 1);
}

LaurentScalar merge_coefficient(unsigned A, unsigned B) {
  int inv = count_lt(B, A);
  return LaurentScalar::monomial(popcount(A) * popcount(B) + inv,
                                 inv % 2 ? -1 : 1);
}

QuantumOperator k0_class(const Ladder& l) {
  auto lv = l.levels();
  int p = 0;
  for (int w : l.bottom) p += w;
  SkewHoweSpace sp = SkewHoweSpace::make(l.ell, l.n, p);
  QuantumOperator op;
  op.ell_shift.assign(l.ell, 0);
  op.n_shift.assign(l.n, 0);
  for (int i = 0; i < l.ell; ++i) op.ell_shift[i] = lv.back()[i] - l.bottom[i];
  for (const WedgeTag& t : sp.tags) {
    if (sp.gl_ell_weight(t) != l.bottom) continue;
    WedgeVector v{{t, LaurentScalar(1)}};
    for (const Rung& r : l.rungs) {
      WedgeVector next;
      for (const auto& [u, coef] : v) {
        unsigned Ji = u.J[r.i - 1], Jn = u.J[r.i];
        unsigned full = r.kind == RungKind::F ? Ji : Jn;
        unsigned other = r.kind == RungKind::F ? Jn : Ji;
        for (unsigned C = full;; C = (C - 1) & full) {
          if (popcount(C) == r.c && !(C & other)) {
            WedgeTag w = u;
            LaurentScalar x;
            if (r.kind == RungKind::F) {
              w.J[r.i - 1] = Ji & ~C;
              w.J[r.i] = Jn | C;
              x = split_coefficient(Ji & ~C, C) * merge_coefficient(C, Jn);
            } else {
              w.J[r.i - 1] = Ji | C;
              w.J[r.i] = Jn & ~C;
              x = split_coefficient(C, Jn & ~C) * merge_coefficient(Ji, C);
            }
            add_to(next, w, coef * x);
          }
          if (C == 0) break;
        }
      }
      v = std::move(next);
    }
    op.cols[t] = std::move(v);
  }
  return op;
}

}  // namespace wb
