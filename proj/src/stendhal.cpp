#include "wb/stendhal.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <functional>
#include <numeric>
#include <tuple>

namespace wb {

// ---------------------------------------------------------------------------
// triples, arrangements, diagrams
// ---------------------------------------------------------------------------

bool StendhalTriple::valid(int n) const {
  for (int b : blacks)
    if (b < 1 || b > n - 1) return false;
  for (int r : reds)
    if (r < 1 || r > n) return false;
  if (kappa.size() != reds.size()) return false;
  int prev = 0;
  for (int k : kappa) {
    if (k < prev || k > int(blacks.size())) return false;
    prev = k;
  }
  return true;
}

Arr StendhalTriple::arrangement() const {
  Arr a;
  size_t bi = 0;
  for (size_t j = 0; j < reds.size(); ++j) {
    while (int(bi) < kappa[j]) a.push_back({false, blacks[bi++]});
    a.push_back({true, reds[j]});
  }
  while (bi < blacks.size()) a.push_back({false, blacks[bi++]});
  return a;
}

StendhalTriple StendhalTriple::from_arrangement(const Arr& a) {
  StendhalTriple t;
  int nb = 0;
  for (const Strand& s : a) {
    if (s.red) {
      t.reds.push_back(s.label);
      t.kappa.push_back(nb);
    } else {
      t.blacks.push_back(s.label);
      ++nb;
    }
  }
  return t;
}

nlohmann::json StendhalTriple::to_json() const {
  return {{"blacks", blacks}, {"reds", reds}, {"kappa", kappa}};
}

StendhalTriple StendhalTriple::from_json(const nlohmann::json& j) {
  StendhalTriple t;
  t.blacks = j.at("blacks").get<std::vector<int>>();
  t.reds = j.at("reds").get<std::vector<int>>();
  t.kappa = j.at("kappa").get<std::vector<int>>();
  return t;
}

int cross_degree(const Strand& s, const Strand& t) {
  if (s.red && t.red) throw std::domain_error("red-red crossing");
  if (!s.red && !t.red) {
    int d = std::abs(s.label - t.label);
    if (d == 0) return -2;
    if (d == 1) return 1;
    return 0;
  }
  // red omega_a crossing black i: degree <omega_a, alpha_i> = delta_{a,i}
  return s.label == t.label ? 1 : 0;
}

static Arr apply_word(Arr a, const std::vector<Event>& w) {
  for (const Event& e : w)
    if (!e.dot) std::swap(a[e.pos], a[e.pos + 1]);
  return a;
}

bool Diagram::valid(int n) const {
  if (!bottom.valid(n)) return false;
  Arr a = bottom.arrangement();
  const int N = int(a.size());
  for (const Event& e : word) {
    if (e.dot) {
      if (e.pos < 0 || e.pos >= N || a[e.pos].red) return false;
    } else {
      if (e.pos < 0 || e.pos + 1 >= N) return false;
      if (a[e.pos].red && a[e.pos + 1].red) return false;
      std::swap(a[e.pos], a[e.pos + 1]);
    }
  }
  return true;
}

StendhalTriple Diagram::top() const {
  return StendhalTriple::from_arrangement(
      apply_word(bottom.arrangement(), word));
}

int Diagram::degree() const {
  Arr a = bottom.arrangement();
  int deg = 0;
  for (const Event& e : word) {
    if (e.dot) {
      deg += 2;
    } else {
      deg += cross_degree(a[e.pos], a[e.pos + 1]);
      std::swap(a[e.pos], a[e.pos + 1]);
    }
  }
  return deg;
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const Event& e : word)
    w.push_back(e.dot ? nlohmann::json{{"dot", e.pos + 1}}
                      : nlohmann::json{{"x", e.pos + 1}});
  return {{"bottom", bottom.to_json()}, {"word", w}};
}

Diagram Diagram::from_json(const nlohmann::json& j) {
  Diagram d;
  d.bottom = StendhalTriple::from_json(j.at("bottom"));
  for (const auto& e : j.at("word")) {
    if (e.contains("x"))
      d.word.push_back({false, e.at("x").get<int>() - 1});
    else
      d.word.push_back({true, e.at("dot").get<int>() - 1});
  }
  return d;
}

std::optional<Diagram> compose(const Diagram& a, const Diagram& b) {
  if (a.top() != b.bottom) return std::nullopt;
  Diagram r = a;
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  return r;
}

Diagram reflect(const Diagram& d) {
  Diagram r;
  r.bottom = d.top();
  for (auto it = d.word.rbegin(); it != d.word.rend(); ++it) r.word.push_back(*it);
  return r;
}

// ---------------------------------------------------------------------------
// permutations and reduced words
// ---------------------------------------------------------------------------

std::vector<int> canonical_word(std::vector<int> w) {
  std::vector<int> out;
  for (;;) {
    int j = -1;
    for (int p = 0; p + 1 < int(w.size()); ++p)
      if (w[p] > w[p + 1]) { j = p; break; }
    if (j < 0) break;
    out.push_back(j);
    std::swap(w[j], w[j + 1]);
  }
  return out;
}

static std::vector<int> perm_of_word(int N, const std::vector<int>& word) {
  std::vector<int> cur(N);  // cur[pos] = bottom strand currently at pos
  std::iota(cur.begin(), cur.end(), 0);
  for (int j : word) std::swap(cur[j], cur[j + 1]);
  std::vector<int> perm(N);
  for (int p = 0; p < N; ++p) perm[cur[p]] = p;
  return perm;
}

int perm_degree(const Arr& bottom, const std::vector<int>& perm) {
  int deg = 0;
  for (size_t p = 0; p < perm.size(); ++p)
    for (size_t q = p + 1; q < perm.size(); ++q)
      if (perm[p] > perm[q]) deg += cross_degree(bottom[p], bottom[q]);
  return deg;
}

// ---------------------------------------------------------------------------
// Key
// ---------------------------------------------------------------------------

Key Key::idempotent(const StendhalTriple& t) {
  Key k;
  k.bottom = t;
  k.perm.resize(t.strand_count());
  std::iota(k.perm.begin(), k.perm.end(), 0);
  k.dots.assign(t.strand_count(), 0);
  return k;
}

StendhalTriple Key::top() const {
  Arr b = bottom.arrangement();
  Arr t(b.size());
  for (size_t p = 0; p < b.size(); ++p) t[perm[p]] = b[p];
  return StendhalTriple::from_arrangement(t);
}

int Key::degree() const {
  int deg = perm_degree(bottom.arrangement(), perm);
  for (int d : dots) deg += 2 * d;
  return deg;
}

Diagram Key::diagram() const {
  Diagram d;
  d.bottom = bottom;
  for (size_t p = 0; p < dots.size(); ++p)
    for (int c = 0; c < dots[p]; ++c) d.word.push_back({true, int(p)});
  for (int j : canonical_word(perm)) d.word.push_back({false, j});
  return d;
}

Element& add_term(Element& e, const Key& k, const Coef& c) {
  auto it = e.find(k);
  if (it == e.end()) {
    if (!c.is_zero()) e.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
  return e;
}

Element scale(const Element& e, const Coef& c) {
  Element r;
  for (const auto& [k, v] : e) add_term(r, k, v * c);
  return r;
}

Element add(const Element& x, const Element& y) {
  Element r = x;
  for (const auto& [k, v] : y) add_term(r, k, v);
  return r;
}

bool is_homogeneous(const Element& e) {
  bool first = true;
  int deg = 0;
  for (const auto& [k, v] : e) {
    if (first) { deg = k.degree(); first = false; }
    else if (k.degree() != deg) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// bring_to_front: rewrite a reduced word to start with a given descent letter
// ---------------------------------------------------------------------------

namespace {

using Term = std::pair<Coef, std::vector<Event>>;

struct BTF {
  std::vector<int> main;          // reduced word of same perm starting with j
  std::vector<Term> corrections;  // words (with dots) replacing the input
};

// Braid correction for replacing (psi_k, psi_{k+1}, psi_k) (middle strand
// bulging left) by (psi_{k+1}, psi_k, psi_{k+1}), with bottom strands
// (a, b, c) at positions k, k+1, k+2.  Returns the coefficient of the
// "three crossings deleted" term; 0 if the braid move is exact.
Coef braid_correction(const Strand& a, const Strand& b, const Strand& c) {
  if (!a.red && !b.red && !c.red) {
    if (a.label == c.label && a.label == b.label + 1) return Coef(1);
    if (a.label == c.label && a.label == b.label - 1) return Coef(-1);
    return Coef(0);
  }
  if (b.red && !a.red && !c.red) {
    // correction sum over a'+b'+1 = lambda^i, nonempty only for matching
    // fundamental weights: a single bare term.
    if (a.label == c.label && b.label == a.label) return Coef(1);
    return Coef(0);
  }
  return Coef(0);  // red on the outside: the braid move is exact
}

std::vector<Event> as_events(const std::vector<int>& word) {
  std::vector<Event> ev;
  ev.reserve(word.size());
  for (int j : word) ev.push_back({false, j});
  return ev;
}

BTF bring_to_front(const Arr& arr, const std::vector<int>& R, int j) {
  assert(!R.empty());
  if (R[0] == j) return {R, {}};
  const int i = R[0];
  Arr arr2 = arr;
  std::swap(arr2[i], arr2[i + 1]);
  std::vector<int> rest(R.begin() + 1, R.end());
  if (std::abs(i - j) >= 2) {
    BTF A = bring_to_front(arr2, rest, j);
    BTF out;
    out.main = {j, i};
    out.main.insert(out.main.end(), A.main.begin() + 1, A.main.end());
    for (auto& [c, w] : A.corrections) {
      std::vector<Event> full = {{false, i}};
      full.insert(full.end(), w.begin(), w.end());
      out.corrections.push_back({c, std::move(full)});
    }
    return out;
  }
  // |i-j| == 1: peel to a prefix (i, j, i) and apply the braid move.
  BTF A = bring_to_front(arr2, rest, j);
  Arr arr3 = arr2;
  std::swap(arr3[j], arr3[j + 1]);
  std::vector<int> restA(A.main.begin() + 1, A.main.end());
  BTF B = bring_to_front(arr3, restA, i);
  std::vector<int> restB(B.main.begin() + 1, B.main.end());

  BTF out;
  out.main = {j, i, j};
  out.main.insert(out.main.end(), restB.begin(), restB.end());
  for (auto& [c, w] : A.corrections) {
    std::vector<Event> full = {{false, i}};
    full.insert(full.end(), w.begin(), w.end());
    out.corrections.push_back({c, std::move(full)});
  }
  for (auto& [c, w] : B.corrections) {
    std::vector<Event> full = {{false, i}, {false, j}};
    full.insert(full.end(), w.begin(), w.end());
    out.corrections.push_back({c, std::move(full)});
  }
  // word == (i, j, i, restB); the triple sits on positions k..k+2
  const int k = std::min(i, j);
  Coef corr = braid_correction(arr[k], arr[k + 1], arr[k + 2]);
  // (psi_k,psi_{k+1},psi_k) = (psi_{k+1},psi_k,psi_{k+1}) + corr;  our word
  // is left-bulge iff i == k.
  if (!corr.is_zero()) {
    if (i != k) corr = -corr;  // solving the relation the other way round
    out.corrections.push_back({corr, as_events(restB)});
  }
  return out;
}

bool visibly_violated(const Arr& bottom, const std::vector<Event>& word) {
  const bool any_black =
      std::any_of(bottom.begin(), bottom.end(),
                  [](const Strand& s) { return !s.red; });
  if (!any_black) return false;
  const bool any_red = std::any_of(bottom.begin(), bottom.end(),
                                   [](const Strand& s) { return s.red; });
  if (!any_red) return true;
  Arr a = bottom;
  if (!a[0].red) return true;
  for (const Event& e : word) {
    if (e.dot) continue;
    std::swap(a[e.pos], a[e.pos + 1]);
    if (!a[0].red) return true;
  }
  return false;
}

int red_index_at(const Arr& a, int pos) {
  int r = 0;
  for (int p = 0; p < pos; ++p)
    if (a[p].red) ++r;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// normalize: worklist rewriting to the normal-form basis
// ---------------------------------------------------------------------------

Element normalize(const AlgebraHandle& h, const StendhalTriple& bottom,
                  const std::vector<Event>& word,
                  const std::vector<int>& bottom_dots) {
  const Arr arr = bottom.arrangement();
  const int N = int(arr.size());

  std::vector<Term> work;
  {
    std::vector<Event> ev;
    for (size_t p = 0; p < bottom_dots.size(); ++p)
      for (int c = 0; c < bottom_dots[p]; ++c) ev.push_back({true, int(p)});
    ev.insert(ev.end(), word.begin(), word.end());
    work.push_back({Coef(1), std::move(ev)});
  }

  Element out;
  while (!work.empty()) {
    auto [c, ev] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    if (h.cyclotomic && visibly_violated(arr, ev)) continue;

    // (a) push dots below crossings
    int t = -1;
    for (int p = 0; p + 1 < int(ev.size()); ++p)
      if (!ev[p].dot && ev[p + 1].dot) { t = p; break; }
    if (t >= 0) {
      const int j = ev[t].pos, p = ev[t + 1].pos;
      if (p != j && p != j + 1) {
        std::swap(ev[t], ev[t + 1]);
        work.push_back({c, std::move(ev)});
        continue;
      }
      Arr below = arr;
      for (int s = 0; s < t; ++s)
        if (!ev[s].dot) std::swap(below[ev[s].pos], below[ev[s].pos + 1]);
      const Strand s1 = below[j], s2 = below[j + 1];
      const bool equal_blacks = !s1.red && !s2.red && s1.label == s2.label;
      if (!equal_blacks) {
        // dot slides through the crossing, switching sides
        ev[t] = {true, p == j ? j + 1 : j};
        ev[t + 1] = {false, j};
        work.push_back({c, std::move(ev)});
      } else {
        // nilHecke: (psi;dot@j) = (dot@(j+1);psi) + e
        //           (psi;dot@(j+1)) = (dot@j;psi) - e
        std::vector<Event> slid = ev, deleted = ev;
        slid[t] = {true, p == j ? j + 1 : j};
        slid[t + 1] = {false, j};
        deleted.erase(deleted.begin() + t, deleted.begin() + t + 2);
        work.push_back({c, std::move(slid)});
        work.push_back({p == j ? c : -c, std::move(deleted)});
      }
      continue;
    }

    // dots are all at the front now
    std::vector<int> d(N, 0);
    size_t D = 0;
    while (D < ev.size() && ev[D].dot) d[ev[D++].pos]++;
    std::vector<int> W;
    for (size_t s = D; s < ev.size(); ++s) W.push_back(ev[s].pos);

    // (b) resolve the first double crossing, if any
    {
      std::set<std::pair<int, int>> crossed;
      int bad = -1;
      std::vector<int> pos(N);
      std::iota(pos.begin(), pos.end(), 0);  // pos[p] = strand at position p
      for (int s = 0; s < int(W.size()); ++s) {
        int u = pos[W[s]], v = pos[W[s] + 1];
        auto key = std::minmax(u, v);
        if (crossed.count({key.first, key.second})) { bad = s; break; }
        crossed.insert({key.first, key.second});
        std::swap(pos[W[s]], pos[W[s] + 1]);
      }
      if (bad >= 0) {
        std::vector<int> P(W.begin(), W.begin() + bad);
        const int jj = W[bad];
        std::vector<Event> suffix;
        for (size_t s = bad + 1; s < W.size(); ++s)
          suffix.push_back({false, int(W[s])});
        std::vector<Event> dotsEv;
        for (int p = 0; p < N; ++p)
          for (int q = 0; q < d[p]; ++q) dotsEv.push_back({true, p});
        // bring jj to the top of P via the reflected bring_to_front
        Arr arrTop = apply_word(arr, as_events(P));
        std::vector<int> Prev(P.rbegin(), P.rend());
        BTF F = bring_to_front(arrTop, Prev, jj);
        for (auto& [cc, wcorr] : F.corrections) {
          // reflected correction replaces P entirely
          std::vector<Event> full = dotsEv;
          full.insert(full.end(), wcorr.rbegin(), wcorr.rend());
          full.push_back({false, jj});
          full.insert(full.end(), suffix.begin(), suffix.end());
          work.push_back({c * cc, std::move(full)});
        }
        std::vector<int> R3(F.main.rbegin(), F.main.rend() - 1);
        // now the term is dots ++ R3 ++ (jj, jj) ++ suffix; resolve psi^2
        Arr arr3 = apply_word(arr, as_events(R3));
        const Strand s1 = arr3[jj], s2 = arr3[jj + 1];
        auto emit = [&](const Coef& cc, const std::vector<Event>& mid) {
          std::vector<Event> full = dotsEv;
          for (int x : R3) full.push_back({false, x});
          full.insert(full.end(), mid.begin(), mid.end());
          full.insert(full.end(), suffix.begin(), suffix.end());
          work.push_back({cc, std::move(full)});
        };
        if (!s1.red && !s2.red) {
          if (s1.label == s2.label) {
            // psi^2 = 0
          } else if (std::abs(s1.label - s2.label) >= 2) {
            emit(c, {});
          } else if (s2.label == s1.label + 1) {
            // Q_{a,a+1}(y_jj, y_{jj+1}) = y_{jj+1} - y_jj
            emit(c, {{true, jj + 1}});
            emit(-c, {{true, jj}});
          } else {
            emit(c, {{true, jj}});
            emit(-c, {{true, jj + 1}});
          }
        } else {
          const int bl = s1.red ? jj + 1 : jj;
          const int rd = s1.red ? jj : jj + 1;
          if (arr3[rd].label == arr3[bl].label) {
            emit(c, {{true, bl}});
            if (h.deformed_red >= 0 &&
                red_index_at(arr3, rd) == h.deformed_red)
              emit(c * Coef::h(), {});
          } else {
            emit(c, {});
          }
        }
        continue;
      }
    }

    // (c) W is reduced: convert to the lex-min word, collecting corrections
    std::vector<int> permW = perm_of_word(N, W);
    std::vector<int> T = canonical_word(permW);
    assert(T.size() == W.size());
    std::vector<Event> dotsEv;
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < d[p]; ++q) dotsEv.push_back({true, p});
    Arr curArr = arr;
    std::vector<int> R = W;
    for (size_t idx = 0; idx < T.size(); ++idx) {
      const int j = T[idx];
      if (R[0] != j) {
        BTF F = bring_to_front(curArr, R, j);
        for (auto& [cc, wcorr] : F.corrections) {
          std::vector<Event> full = dotsEv;
          for (size_t s = 0; s < idx; ++s) full.push_back({false, T[s]});
          full.insert(full.end(), wcorr.begin(), wcorr.end());
          work.push_back({c * cc, std::move(full)});
        }
        R = F.main;
      }
      R.erase(R.begin());
      std::swap(curArr[j], curArr[j + 1]);
    }
    Key k;
    k.bottom = bottom;
    k.perm = permW;
    k.dots = d;
    add_term(out, k, c);
  }
  return out;
}

Element normalize(const AlgebraHandle& h, const Diagram& dg) {
  return normalize(h, dg.bottom, dg.word);
}

Element compose_elements(const AlgebraHandle& h, const Element& a,
                         const Element& b) {
  Element out;
  for (const auto& [ka, ca] : a) {
    const StendhalTriple mid = ka.top();
    std::vector<Event> base;
    for (int j : canonical_word(ka.perm)) base.push_back({false, j});
    for (const auto& [kb, cb] : b) {
      if (kb.bottom != mid) continue;
      std::vector<Event> ev = base;
      for (size_t p = 0; p < kb.dots.size(); ++p)
        for (int q = 0; q < kb.dots[p]; ++q) ev.push_back({true, int(p)});
      for (int j : canonical_word(kb.perm)) ev.push_back({false, j});
      Element piece = normalize(h, ka.bottom, ev, ka.dots);
      for (const auto& [k, v] : piece) add_term(out, k, v * ca * cb);
    }
  }
  return out;
}

Element reflect(const AlgebraHandle& h, const Element& e) {
  Element out;
  for (const auto& [k, c] : e) {
    Diagram r = reflect(k.diagram());
    Element piece = normalize(h, r);
    for (const auto& [kk, v] : piece) add_term(out, kk, v * c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// bases and enumeration
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> matchings(const StendhalTriple& bottom,
                                        const StendhalTriple& top) {
  std::vector<std::vector<int>> out;
  if (bottom.reds != top.reds) return out;
  std::vector<int> sb = bottom.blacks, st = top.blacks;
  std::sort(sb.begin(), sb.end());
  std::sort(st.begin(), st.end());
  if (sb != st) return out;
  const Arr ab = bottom.arrangement(), at = top.arrangement();
  const int N = int(ab.size());
  // positions in the top arrangement, grouped by strand type/label
  std::map<Strand, std::vector<int>> slots;
  for (int p = 0; p < N; ++p) slots[at[p]].push_back(p);
  // reds must stay in order: red j at bottom goes to the j-th red slot
  std::vector<int> perm(N, -1);
  std::vector<std::vector<int>*> groups;  // per bottom black position group
  {
    std::map<Strand, std::vector<int>> bpos;
    for (int p = 0; p < N; ++p) bpos[ab[p]].push_back(p);
    // assign reds deterministically
    for (auto& [s, v] : bpos) {
      if (!s.red) continue;
      auto& tv = slots[s];
      // same label reds keep relative order; different labels cannot mix
      for (size_t q = 0; q < v.size(); ++q) perm[v[q]] = tv[q];
    }
    // enumerate all bijections for each black label group
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blackGroups;
    for (auto& [s, v] : bpos)
      if (!s.red) blackGroups.push_back({v, slots[s]});
    // reds of equal label must also preserve order *globally*; the above is
    // consistent because arrangement order of equal strands is increasing.
    std::function<void(size_t)> rec = [&](size_t g) {
      if (g == blackGroups.size()) {
        // global red order check (reds with different labels may interleave)
        std::vector<std::pair<int, int>> redmap;  // (bottom pos, top pos)
        for (int p = 0; p < N; ++p)
          if (ab[p].red) redmap.push_back({p, perm[p]});
        for (size_t x = 0; x + 1 < redmap.size(); ++x)
          if (redmap[x].second > redmap[x + 1].second) return;
        out.push_back(perm);
        return;
      }
      auto& [bp, tp] = blackGroups[g];
      std::vector<int> idx(bp.size());
      std::iota(idx.begin(), idx.end(), 0);
      do {
        for (size_t q = 0; q < bp.size(); ++q) perm[bp[q]] = tp[idx[q]];
        rec(g + 1);
      } while (std::next_permutation(idx.begin(), idx.end()));
      for (int p : bp) perm[p] = -1;
    };
    rec(0);
  }
  return out;
}

std::vector<Key> basis(const AlgebraHandle& h, const StendhalTriple& bottom,
                       const StendhalTriple& top, int max_degree,
                       int min_degree) {
  (void)h;
  std::vector<Key> out;
  const Arr ab = bottom.arrangement();
  const int N = int(ab.size());
  std::vector<int> blackPos;
  for (int p = 0; p < N; ++p)
    if (!ab[p].red) blackPos.push_back(p);
  for (const auto& perm : matchings(bottom, top)) {
    const int pd = perm_degree(ab, perm);
    if (pd > max_degree) continue;
    const int maxDots = (max_degree - pd) / 2;
    // weak compositions of 0..maxDots over the black positions
    std::vector<int> dots(N, 0);
    std::function<void(size_t, int)> rec = [&](size_t bi, int used) {
      if (bi == blackPos.size()) {
        const int deg = pd + 2 * used;
        if (deg >= min_degree && deg <= max_degree) {
          Key k;
          k.bottom = bottom;
          k.perm = perm;
          k.dots = dots;
          out.push_back(k);
        }
        return;
      }
      for (int c = 0; used + c <= maxDots; ++c) {
        dots[blackPos[bi]] = c;
        rec(bi + 1, used + c);
      }
      dots[blackPos[bi]] = 0;
    };
    if (blackPos.empty()) {
      if (pd >= min_degree && pd <= max_degree) {
        Key k;
        k.bottom = bottom;
        k.perm = perm;
        k.dots = dots;
        out.push_back(k);
      }
    } else {
      rec(0, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StendhalTriple> all_triples(const AlgebraHandle& h,
                                        std::vector<int> blacks) {
  std::sort(blacks.begin(), blacks.end());
  const int m = int(blacks.size());
  const int ell = int(h.lambda.size());
  std::vector<StendhalTriple> out;
  std::vector<int> kappa(ell, 0);
  std::function<void(int, int)> recK = [&](int j, int low) {
    if (j == ell) {
      std::vector<int> b = blacks;
      do {
        StendhalTriple t;
        t.blacks = b;
        t.reds = h.lambda;
        t.kappa = kappa;
        out.push_back(t);
      } while (std::next_permutation(b.begin(), b.end()));
      return;
    }
    for (int k = low; k <= m; ++k) {
      kappa[j] = k;
      recK(j + 1, k);
    }
  };
  recK(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> blacks_for_weight(const AlgebraHandle& h,
                                   const std::vector<int>& mu) {
  if (int(mu.size()) != h.n) throw std::domain_error("weight has wrong length");
  std::vector<int> lam(h.n, 0);
  for (int a : h.lambda)
    for (int j = 0; j < a; ++j) lam[j] += 1;
  std::vector<int> blacks;
  int psum = 0;
  for (int i = 0; i < h.n; ++i) {
    psum += lam[i] - mu[i];
    if (i == h.n - 1) {
      if (psum != 0) throw std::domain_error("weights differ in total degree");
      break;
    }
    if (psum < 0) throw std::domain_error("mu is not below lambda");
    for (int c = 0; c < psum; ++c) blacks.push_back(i + 1);
  }
  return blacks;
}

// ---------------------------------------------------------------------------
// induction maps
// ---------------------------------------------------------------------------

Key add_black_right(const Key& k, int label) {
  Key r = k;
  r.bottom.blacks.push_back(label);
  r.perm.push_back(int(r.perm.size()));
  r.dots.push_back(0);
  return r;
}

Key add_black_left(const Key& k, int label) {
  Key r;
  r.bottom.blacks = k.bottom.blacks;
  r.bottom.blacks.insert(r.bottom.blacks.begin(), label);
  r.bottom.reds = k.bottom.reds;
  r.bottom.kappa = k.bottom.kappa;
  for (int& x : r.bottom.kappa) ++x;
  r.perm.push_back(0);
  for (int p : k.perm) r.perm.push_back(p + 1);
  r.dots.push_back(0);
  for (int d : k.dots) r.dots.push_back(d);
  return r;
}

Key add_red_right(const Key& k, int weight) {
  Key r = k;
  r.bottom.reds.push_back(weight);
  r.bottom.kappa.push_back(int(r.bottom.blacks.size()));
  r.perm.push_back(int(r.perm.size()));
  r.dots.push_back(0);
  return r;
}

Element add_black_right(const Element& e, int label) {
  Element out;
  for (const auto& [k, c] : e) add_term(out, add_black_right(k, label), c);
  return out;
}

Element add_black_left(const Element& e, int label) {
  Element out;
  for (const auto& [k, c] : e) add_term(out, add_black_left(k, label), c);
  return out;
}

Element add_red_right(const Element& e, int weight) {
  Element out;
  for (const auto& [k, c] : e) add_term(out, add_red_right(k, weight), c);
  return out;
}

// ---------------------------------------------------------------------------
// cyclotomic quotients
// ---------------------------------------------------------------------------

namespace {

/// Row-reduced span of vectors over Q with deterministic pivoting.
struct Rref {
  std::map<int, std::vector<Rat>> rows;  // pivot column -> normalized row

  void reduce(std::vector<Rat>& v) const {
    for (const auto& [p, row] : rows) {
      if (v[p] == 0) continue;
      Rat f = v[p];
      for (size_t i = 0; i < v.size(); ++i) {
        v[i] -= f * row[i];
        v[i].canonicalize();
      }
    }
  }

  bool insert(std::vector<Rat> v) {
    reduce(v);
    int p = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) { p = int(i); break; }
    if (p < 0) return false;
    Rat inv = 1 / v[p];
    for (auto& x : v) { x *= inv; x.canonicalize(); }
    // keep earlier rows reduced against the new pivot
    for (auto& [q, row] : rows) {
      if (row[p] == 0) continue;
      Rat f = row[p];
      for (size_t i = 0; i < v.size(); ++i) {
        row[i] -= f * v[i];
        row[i].canonicalize();
      }
    }
    rows.emplace(p, std::move(v));
    return true;
  }

  int rank() const { return int(rows.size()); }
  bool is_pivot(int col) const { return rows.count(col) > 0; }
};

// Lazy enumerator of violated triples over a fixed black multiset.  Middles
// sharing the bottom's or the top's black ordering are visited first; they
// produce the short excursion diagrams that generate most of the ideal.
struct VIter {
  std::vector<int> lambda;
  int m = 0;
  std::vector<int> sb, tb, sorted, cur;
  std::vector<int> kappa;
  int stage = 0;  // 0: sb order, 1: tb order, 2: remaining orders
  bool fresh = true;
  bool done = false;

  VIter() : done(true) {}
  VIter(std::vector<int> lam, std::vector<int> blacks_sorted,
        std::vector<int> s_order, std::vector<int> t_order)
      : lambda(std::move(lam)),
        m(int(blacks_sorted.size())),
        sb(std::move(s_order)),
        tb(std::move(t_order)),
        sorted(std::move(blacks_sorted)),
        cur(sb) {
    if (m == 0) done = true;  // a triple without blacks is never violated
  }

  bool first_kappa() {
    const int ell = int(lambda.size());
    kappa.assign(ell, 1);  // violated: kappa(1) >= 1, weakly increasing
    return true;
  }
  bool next_kappa() {
    const int ell = int(lambda.size());
    for (int i = ell - 1; i >= 0; --i) {
      if (kappa[i] < m) {
        ++kappa[i];
        for (int j = i + 1; j < ell; ++j) kappa[j] = kappa[i];
        return true;
      }
    }
    return false;
  }
  bool advance_order() {
    if (stage == 0) {
      stage = 1;
      if (tb != sb) { cur = tb; return true; }
    }
    if (stage == 1) {
      stage = 2;
      cur = sorted;
      if (cur != sb && cur != tb) return true;
    }
    while (std::next_permutation(cur.begin(), cur.end()))
      if (cur != sb && cur != tb) return true;
    return false;
  }
  bool next(StendhalTriple& out) {
    if (done) return false;
    if (fresh) {
      first_kappa();
      fresh = false;
    } else if (!next_kappa()) {
      if (!advance_order()) {
        done = true;
        return false;
      }
      first_kappa();
    }
    out.blacks = cur;
    out.reds = lambda;
    out.kappa = kappa;
    return true;
  }
};

/// Resumable ideal span of one (bottom, top, degree) block.
struct BlockSpan {
  Rref rref;
  bool complete = false;
  VIter viter;
  bool have_v = false;
  StendhalTriple v;
  int da = 0;
  bool da_valid = false;
  size_t ia = 0, ib = 0;
};

struct CycloData {
  AlgebraHandle tilde;  // same handle with cyclotomic switched off
  std::vector<int> blacks;  // sorted multiset
  std::vector<StendhalTriple> nonviolated;  // built on first stabilize
  bool enumerated = false;
  std::map<std::pair<StendhalTriple, StendhalTriple>, int> mindeg;
  std::map<std::tuple<StendhalTriple, StendhalTriple, int>, std::vector<Key>>
      bases;
  std::map<std::tuple<StendhalTriple, StendhalTriple, int>, BlockSpan> kspan;
  int dmin = INT_MAX;
  int last_nonzero = INT_MIN;
  bool stabilized = false;
};

using CacheSig = std::tuple<int, std::vector<int>, int, std::vector<int>>;
std::map<CacheSig, CycloData> g_cyclo;

int min_perm_degree(const StendhalTriple& s, const StendhalTriple& t) {
  int best = INT_MAX;
  const Arr a = s.arrangement();
  for (const auto& p : matchings(s, t)) best = std::min(best, perm_degree(a, p));
  return best;
}

int mindeg_of(CycloData& cd, const StendhalTriple& s, const StendhalTriple& t) {
  auto it = cd.mindeg.find({s, t});
  if (it == cd.mindeg.end())
    it = cd.mindeg.emplace(std::make_pair(s, t), min_perm_degree(s, t)).first;
  return it->second;
}

const std::vector<Key>& block_basis(CycloData& cd, const StendhalTriple& s,
                                    const StendhalTriple& t, int d) {
  auto key = std::make_tuple(s, t, d);
  auto it = cd.bases.find(key);
  if (it == cd.bases.end())
    it = cd.bases.emplace(key, basis(cd.tilde, s, t, d, d)).first;
  return it->second;
}

// coordinates of an element in a block at fixed degree, over Q[h]/h^2
// flattened to Q^2B (a-part, b-part per key)
std::vector<Rat> coords(CycloData& cd, const StendhalTriple& s,
                        const StendhalTriple& t, int d, const Element& x,
                        bool h_shifted) {
  const auto& bas = block_basis(cd, s, t, d);
  std::vector<Rat> v(2 * bas.size(), Rat(0));
  for (const auto& [k, c] : x) {
    auto it = std::lower_bound(bas.begin(), bas.end(), k);
    if (it == bas.end() || !(*it == k))
      throw std::logic_error("normal form outside block basis");
    size_t i = it - bas.begin();
    if (!h_shifted) {
      v[2 * i] = c.a;
      v[2 * i + 1] = c.b;
    } else {
      v[2 * i + 1] = c.a;  // h * (a + h b) = h a
    }
  }
  return v;
}

int block_dim(CycloData& cd, const StendhalTriple& s, const StendhalTriple& t,
              int d) {
  const int nb = int(block_basis(cd, s, t, d).size());
  return cd.tilde.deformed_red >= 0 ? 2 * nb : nb;
}

/// Extend the ideal span of the block; a nonnegative corank_target stops the
/// enumeration early once dim - rank <= target (this only ever *shrinks* the
/// computed ideal, so reductions stay sound as upper bounds on the quotient).
void fill_span(CycloData& cd, const StendhalTriple& s, const StendhalTriple& t,
               int d, BlockSpan& bs, int corank_target) {
  const int dim = block_dim(cd, s, t, d);
  auto reached = [&] {
    return corank_target >= 0 && dim - bs.rref.rank() <= corank_target;
  };
  if (bs.complete || reached()) return;
  for (;;) {
    if (!bs.have_v) {
      if (!bs.viter.next(bs.v)) {
        bs.complete = true;
        return;
      }
      bs.have_v = true;
      bs.da_valid = false;
    }
    const int m1 = mindeg_of(cd, s, bs.v), m2 = mindeg_of(cd, bs.v, t);
    if (m1 == INT_MAX || m2 == INT_MAX) {
      bs.have_v = false;
      continue;
    }
    if (!bs.da_valid) {
      bs.da = m1;
      bs.da_valid = true;
      bs.ia = bs.ib = 0;
    }
    for (; bs.da <= d - m2; ++bs.da, bs.ia = 0, bs.ib = 0) {
      const auto& A = block_basis(cd, s, bs.v, bs.da);
      const auto& B = block_basis(cd, bs.v, t, d - bs.da);
      for (; bs.ia < A.size(); ++bs.ia, bs.ib = 0) {
        for (; bs.ib < B.size(); ++bs.ib) {
          Element prod =
              compose_elements(cd.tilde, Element{{A[bs.ia], Coef(1)}},
                               Element{{B[bs.ib], Coef(1)}});
          if (prod.empty()) continue;
          bs.rref.insert(coords(cd, s, t, d, prod, false));
          if (cd.tilde.deformed_red >= 0)
            bs.rref.insert(coords(cd, s, t, d, prod, true));
          if (reached()) {
            ++bs.ib;
            return;
          }
        }
      }
    }
    bs.have_v = false;
  }
}

BlockSpan& block_span(CycloData& cd, const StendhalTriple& s,
                      const StendhalTriple& t, int d, int corank_target) {
  auto key = std::make_tuple(s, t, d);
  auto it = cd.kspan.find(key);
  if (it == cd.kspan.end()) {
    BlockSpan bs;
    std::vector<int> sorted = s.blacks;
    std::sort(sorted.begin(), sorted.end());
    bs.viter = VIter(cd.tilde.lambda, sorted, s.blacks, t.blacks);
    it = cd.kspan.emplace(key, std::move(bs)).first;
  }
  fill_span(cd, s, t, d, it->second, corank_target);
  return it->second;
}

int quotient_dim_at(CycloData& cd, int d) {
  int total = 0;
  for (const auto& s : cd.nonviolated)
    for (const auto& t : cd.nonviolated) {
      if (mindeg_of(cd, s, t) > d) continue;
      BlockSpan& bs = block_span(cd, s, t, d, -1);
      total += block_dim(cd, s, t, d) - bs.rref.rank();
    }
  return total;
}

CycloData& cyclo_data(const AlgebraHandle& h, std::vector<int> blacks) {
  std::sort(blacks.begin(), blacks.end());
  CacheSig sig{h.n, h.lambda, h.deformed_red, blacks};
  auto it = g_cyclo.find(sig);
  if (it != g_cyclo.end()) return it->second;
  CycloData& cd = g_cyclo[sig];
  cd.tilde = h;
  cd.tilde.cyclotomic = false;
  cd.blacks = blacks;
  return cd;
}

void stabilize(const AlgebraHandle& h, CycloData& cd) {
  if (cd.stabilized) return;
  if (!cd.enumerated) {
    for (const auto& t : all_triples(h, cd.blacks))
      if (!t.violated()) cd.nonviolated.push_back(t);
    for (const auto& s : cd.nonviolated)
      for (const auto& t : cd.nonviolated)
        cd.dmin = std::min(cd.dmin, mindeg_of(cd, s, t));
    cd.enumerated = true;
  }
  if (cd.dmin == INT_MAX) {  // empty weight space
    cd.last_nonzero = INT_MIN;
    cd.stabilized = true;
    return;
  }
  int zeros = 0;
  int d = cd.dmin;
  cd.last_nonzero = cd.dmin - 1;
  for (;;) {
    if (d > h.cutoff) throw CutoffError(d);
    if (quotient_dim_at(cd, d) == 0) {
      ++zeros;
    } else {
      zeros = 0;
      cd.last_nonzero = d;
    }
    // A nonzero quotient always retains an idempotent in degree 0, so never
    // conclude vanishing before degree 0 has been scanned.
    if (zeros >= 2 && d >= 0) {
      // verify vanishing through the largest possible product degree
      const int dver = 2 * std::max(cd.last_nonzero, cd.dmin) - cd.dmin;
      bool ok = true;
      for (int x = d + 1; x <= dver; ++x) {
        if (x > h.cutoff) throw CutoffError(x);
        if (quotient_dim_at(cd, x) != 0) {
          ok = false;
          zeros = 0;
          cd.last_nonzero = x;
          d = x;
          break;
        }
      }
      if (ok) break;
    }
    ++d;
  }
  cd.stabilized = true;
}

Element reduce_in(CycloData& cd, const Element& x, int corank_target) {
  // group keys by (bottom, top, degree) and reduce against the ideal span
  std::map<std::tuple<StendhalTriple, StendhalTriple, int>, Element> groups;
  for (const auto& [k, c] : x) {
    StendhalTriple s = k.bottom, t = k.top();
    if (s.violated() || t.violated()) continue;
    groups[std::make_tuple(s, t, k.degree())].emplace(k, c);
  }
  Element out;
  for (auto& [g, el] : groups) {
    const auto& [s, t, d] = g;
    BlockSpan& bs = block_span(cd, s, t, d, corank_target);
    std::vector<Rat> v = coords(cd, s, t, d, el, false);
    bs.rref.reduce(v);
    const auto& bas = block_basis(cd, s, t, d);
    for (size_t i = 0; i < bas.size(); ++i) {
      Coef c;
      c.a = v[2 * i];
      c.b = v[2 * i + 1];
      add_term(out, bas[i], c);
    }
  }
  return out;
}

std::vector<int> element_blacks(const Element& x) {
  if (x.empty()) return {};
  std::vector<int> b = x.begin()->first.bottom.blacks;
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace

Element cyclotomic_reduce(const AlgebraHandle& h, const Element& x) {
  if (!h.cyclotomic)
    throw std::domain_error("cyclotomic_reduce on a non-cyclotomic handle");
  if (x.empty()) return {};
  CycloData& cd = cyclo_data(h, element_blacks(x));
  return reduce_in(cd, x, -1);
}

Element block_reduce(const AlgebraHandle& h, const Element& x,
                     int expected_corank) {
  if (!h.cyclotomic)
    throw std::domain_error("block_reduce on a non-cyclotomic handle");
  if (x.empty()) return {};
  CycloData& cd = cyclo_data(h, element_blacks(x));
  return reduce_in(cd, x, expected_corank);
}

Element multiply_cyclotomic(const AlgebraHandle& h, const Element& a,
                            const Element& b) {
  return cyclotomic_reduce(h, compose_elements(h, a, b));
}

LaurentScalar graded_dimension(const AlgebraHandle& h,
                               const StendhalTriple& bottom,
                               const StendhalTriple& top) {
  if (!h.cyclotomic)
    throw std::domain_error("graded_dimension needs a cyclotomic handle");
  if (bottom.violated() || top.violated()) return LaurentScalar();
  CycloData& cd = cyclo_data(h, bottom.blacks);
  stabilize(h, cd);
  LaurentScalar out;
  const int md = mindeg_of(cd, bottom, top);
  if (md == INT_MAX) return out;
  for (int d = md; d <= cd.last_nonzero; ++d) {
    BlockSpan& bs = block_span(cd, bottom, top, d, -1);
    const int dim = block_dim(cd, bottom, top, d) - bs.rref.rank();
    if (dim != 0) out += LaurentScalar::monomial(d, dim);
  }
  return out;
}

LaurentScalar total_graded_dimension(const AlgebraHandle& h,
                                     const std::vector<int>& blacks) {
  CycloData& cd = cyclo_data(h, blacks);
  stabilize(h, cd);
  LaurentScalar out;
  for (const auto& s : cd.nonviolated)
    for (const auto& t : cd.nonviolated) out += graded_dimension(h, s, t);
  return out;
}

std::vector<Key> cyclotomic_basis(const AlgebraHandle& h,
                                  const StendhalTriple& bottom,
                                  const StendhalTriple& top) {
  if (!h.cyclotomic)
    throw std::domain_error("cyclotomic_basis needs a cyclotomic handle");
  std::vector<Key> out;
  if (bottom.violated() || top.violated()) return out;
  CycloData& cd = cyclo_data(h, bottom.blacks);
  stabilize(h, cd);
  const int md = mindeg_of(cd, bottom, top);
  if (md == INT_MAX) return out;
  for (int d = md; d <= cd.last_nonzero; ++d) {
    BlockSpan& bs = block_span(cd, bottom, top, d, -1);
    const auto& bas = block_basis(cd, bottom, top, d);
    for (size_t i = 0; i < bas.size(); ++i)
      if (!bs.rref.is_pivot(int(2 * i))) out.push_back(bas[i]);
  }
  return out;
}

Element central_element(const AlgebraHandle& h, int k, int i,
                        const std::vector<int>& blacks) {
  Element out;
  for (const auto& t : all_triples(h, blacks)) {
    if (h.cyclotomic && t.violated()) continue;
    const Arr a = t.arrangement();
    std::vector<int> ipos;
    for (int p = 0; p < int(a.size()); ++p)
      if (!a[p].red && a[p].label == i) ipos.push_back(p);
    if (ipos.empty()) {
      if (k == 0) add_term(out, Key::idempotent(t), Coef(1));
      continue;
    }
    std::vector<int> dots(a.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t bi, int left) {
      if (bi + 1 == ipos.size()) {
        dots[ipos[bi]] = left;
        Key key = Key::idempotent(t);
        key.dots = dots;
        add_term(out, key, Coef(1));
        dots[ipos[bi]] = 0;
        return;
      }
      for (int c = 0; c <= left; ++c) {
        dots[ipos[bi]] = c;
        rec(bi + 1, left - c);
        dots[ipos[bi]] = 0;
      }
    };
    rec(0, k);
  }
  return out;
}

}  // namespace wb
