#include "wb/subset_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace wb {

namespace {

int popcount(unsigned S) { return __builtin_popcount(S); }

void check_proper(int c, unsigned S, const char* what) {
  if (S >= (1u << c) - 1)
    throw std::domain_error(std::string(what) +
                            ": subset must be a proper subset of [1,c]");
}

}  // namespace

AlgebraHandle subset_handle(int c, Deformation d) {
  if (c < 1) throw std::domain_error("subset_handle: c must be >= 1");
  AlgebraHandle h;
  h.n = c;
  h.lambda = c == 1 ? std::vector<int>{1} : std::vector<int>{1, c - 1};
  if (d == Deformation::LEFT_RED) h.deformed_red = 0;
  if (d == Deformation::RIGHT_RED) h.deformed_red = c == 1 ? 0 : 1;
  return h;
}

StendhalTriple subset_triple(int c, unsigned S) {
  check_proper(c, S, "subset_triple");
  // Base sequence (omega_1, 1, ..., c-1, omega_{c-1}); every maximal run
  // [u,v] of S reverses the positions [u-1, v].
  Arr arr;
  arr.push_back({true, 1});
  for (int k = 1; k < c; ++k) arr.push_back({false, k});
  if (c > 1) arr.push_back({true, c - 1});
  for (int u = 1; u <= c; ++u) {
    if (!(S >> (u - 1) & 1) || (u > 1 && (S >> (u - 2) & 1))) continue;
    int v = u;
    while (v < c && (S >> v & 1)) ++v;
    std::reverse(arr.begin() + (u - 1), arr.begin() + v + 1);
    u = v;
  }
  return StendhalTriple::from_arrangement(arr);
}

Element subset_idempotent(int c, unsigned S) {
  Element e;
  e[Key::idempotent(subset_triple(c, S))] = Coef(1);
  return e;
}

Element generator_x(int c, unsigned S, int k) {
  check_proper(c, S, "generator_x");
  if (k < 1 || k > c) throw std::domain_error("generator_x: k out of range");
  unsigned T = S ^ (1u << (k - 1));
  check_proper(c, T, "generator_x");
  StendhalTriple bot = subset_triple(c, S), top = subset_triple(c, T);
  auto perms = matchings(bot, top);
  if (perms.size() != 1)
    throw std::logic_error("generator_x: matching is not unique");
  Key key{bot, perms[0], std::vector<int>(bot.strand_count(), 0)};
  Element e;
  e[key] = Coef((k == c && (S >> (k - 1) & 1)) ? -1 : 1);
  return e;
}

Element generator_x_prime(int c, unsigned S, int k) {
  Element e = generator_x(c, S, k);
  int twists = popcount(S & ((1u << (k - 1)) - 1));
  return twists % 2 ? scale(e, Coef(-1)) : e;
}

Element multiply_A(const AlgebraHandle& h, const Element& a,
                   const Element& b) {
  return compose_elements(h, b, a);
}

std::vector<WallPathFamily> wall_path_basis(int c, unsigned S, unsigned Sp) {
  check_proper(c, S, "wall_path_basis");
  check_proper(c, Sp, "wall_path_basis");
  std::vector<WallPathFamily> out;
  int d = popcount(S ^ Sp), bound = c - popcount(S | Sp);
  for (int p = 0; p < bound; ++p) {
    WallPathFamily f;
    f.S = S;
    f.Sprime = Sp;
    f.m = d + 2 * p;
    std::vector<int> path;
    // Paths S' = S_0, ..., S_m = S through proper subsets.
    auto rec = [&](auto&& self, unsigned cur) -> void {
      if (int(path.size()) == f.m) {
        if (cur == S) f.paths.push_back(path);
        return;
      }
      for (int k = 1; k <= c; ++k) {
        unsigned nxt = cur ^ (1u << (k - 1));
        if (nxt >= (1u << c) - 1) continue;
        path.push_back(k);
        self(self, nxt);
        path.pop_back();
      }
    };
    rec(rec, Sp);
    out.push_back(std::move(f));
  }
  return out;
}

SubsetResolution koszul_resolution(int c, Deformation d) {
  SubsetResolution r;
  r.c = c;
  r.handle = subset_handle(c, d);
  r.terms.resize(2 * c - 1);
  for (int k = 0; k <= 2 * c - 2; ++k)
    for (unsigned S = 0; S < (1u << c) - 1; ++S) {
      int s = popcount(S);
      if (s % 2 == k % 2 && s <= k && k <= 2 * c - 2 - s)
        r.terms[k].push_back(S);
    }
  r.diff.resize(2 * c - 1);
  for (int k = 1; k <= 2 * c - 2; ++k) {
    const auto& cols = r.terms[k];
    const auto& rows = r.terms[k - 1];
    r.diff[k].assign(rows.size(), std::vector<Element>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < rows.size(); ++i) {
        unsigned delta = cols[j] ^ rows[i];
        if (popcount(delta) != 1) continue;
        int t = __builtin_ctz(delta) + 1;
        r.diff[k][i][j] = generator_x_prime(c, cols[j], t);
      }
  }
  return r;
}

std::map<unsigned, LaurentScalar> SubsetResolution::euler() const {
  std::map<unsigned, LaurentScalar> chi;
  for (int k = 0; k < int(terms.size()); ++k)
    for (unsigned S : terms[k])
      chi[S] += LaurentScalar::monomial(-k, k % 2 ? -1 : 1);
  for (auto it = chi.begin(); it != chi.end();)
    it = it->second.is_zero() ? chi.erase(it) : std::next(it);
  return chi;
}

bool d_squared_is_zero(const SubsetResolution& r) {
  bool deformed = r.handle.deformed_red >= 0;
  for (int k = 2; k < int(r.terms.size()); ++k)
    for (size_t j = 0; j < r.terms[k].size(); ++j)
      for (size_t i = 0; i < r.terms[k - 2].size(); ++i) {
        Element sum;
        for (size_t m = 0; m < r.terms[k - 1].size(); ++m)
          sum = add(sum, multiply_A(r.handle, r.diff[k - 1][i][m],
                                    r.diff[k][m][j]));
        for (const auto& [key, coef] : sum)
          if (coef.a != 0 || (!deformed && coef.b != 0)) return false;
      }
  return true;
}

std::vector<std::vector<std::vector<Element>>> deformed_square(
    int c, Deformation d) {
  if (d == Deformation::NONE)
    throw std::domain_error("deformed_square: pick a deformation direction");
  SubsetResolution r = koszul_resolution(c, d);
  std::vector<std::vector<std::vector<Element>>> sq(r.terms.size());
  for (int k = 2; k < int(r.terms.size()); ++k) {
    sq[k].assign(r.terms[k - 2].size(),
                 std::vector<Element>(r.terms[k].size()));
    for (size_t j = 0; j < r.terms[k].size(); ++j)
      for (size_t i = 0; i < r.terms[k - 2].size(); ++i) {
        Element sum;
        for (size_t m = 0; m < r.terms[k - 1].size(); ++m)
          sum = add(sum, multiply_A(r.handle, r.diff[k - 1][i][m],
                                    r.diff[k][m][j]));
        Element quot;  // divide by h: a-part must vanish
        for (const auto& [key, coef] : sum) {
          if (coef.a != 0)
            throw std::logic_error("deformed square has an h^0 part");
          if (coef.b != 0) quot[key] = Coef(coef.b);
        }
        sq[k][i][j] = std::move(quot);
      }
  }
  return sq;
}

Rat bubble_pairing(int c, int qhat, Deformation d) {
  if (qhat < 0 || qhat > c - 1)
    throw std::domain_error("bubble_pairing: need 0 <= qhat <= c-1");
  if (qhat < c - 1) return Rat(0);  // pairs against X_j with j > 0
  if (c == 1) return Rat(1);        // empty bigon: epsilon iota = 1
  SubsetResolution r = koszul_resolution(c, d);
  auto sq = deformed_square(c, d);
  // Iterate the chain map from Q_{-(2c-2)} (= P_empty) down to Q_0.
  std::vector<Element> v{subset_idempotent(c, 0)};
  for (int k = 2 * c - 2; k >= 2; k -= 2) {
    std::vector<Element> next(r.terms[k - 2].size());
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j)
        next[i] = add(next[i], multiply_A(r.handle, sq[k][i][j], v[j]));
    v = std::move(next);
  }
  Element e0 = subset_idempotent(c, 0);
  if (v.size() != 1) throw std::logic_error("bubble_pairing: bad endpoints");
  if (v[0].empty()) return Rat(0);
  if (v[0].size() != 1 || !(v[0].begin()->first == e0.begin()->first) ||
      v[0].begin()->second.b != 0)
    throw std::logic_error("bubble_pairing: iterate is not scalar");
  return v[0].begin()->second.a;
}

}  // namespace wb
