#include "wb/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace wb {

bool RectTableau::standard() const {
  if (int(filling.size()) != a * b) return false;
  std::vector<bool> seen(a * b + 1, false);
  for (int v : filling) {
    if (v < 1 || v > a * b || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      if (j < b && at(i, j) >= at(i, j + 1)) return false;
      if (i < a && at(i, j) >= at(i + 1, j)) return false;
    }
  return true;
}

RectTableau RectTableau::row_tableau(int a, int b) {
  RectTableau t;
  t.a = a;
  t.b = b;
  t.filling.resize(a * b);
  for (int k = 0; k < a * b; ++k) t.filling[k] = k + 1;
  return t;
}

std::vector<int> RectTableau::content_word() const {
  std::vector<int> word(a * b);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) word[at(i, j) - 1] = a + j - i;
  return word;
}

std::vector<int> RectTableau::w() const {
  std::vector<int> p(filling.size());
  for (size_t k = 0; k < filling.size(); ++k) p[k] = filling[k] - 1;
  return p;
}

nlohmann::json RectTableau::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= a; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= b; ++j) row.push_back(at(i, j));
    rows.push_back(row);
  }
  return rows;
}

RectTableau RectTableau::from_json(const nlohmann::json& j) {
  RectTableau t;
  t.a = int(j.size());
  t.b = t.a ? int(j[0].size()) : 0;
  for (const auto& row : j) {
    if (int(row.size()) != t.b)
      throw std::domain_error("ragged tableau rows");
    for (const auto& v : row) t.filling.push_back(v.get<int>());
  }
  return t;
}

std::vector<RectTableau> enumerate_standard(int a, int b) {
  if (a < 1 || b < 1) throw std::domain_error("tableau shape must be positive");
  std::vector<RectTableau> out;
  RectTableau t;
  t.a = a;
  t.b = b;
  t.filling.assign(a * b, 0);
  // Place 1..ab in increasing order; entry k may go in box (i,j) when the
  // boxes below and to the left are already filled.
  auto rec = [&](auto&& self, int k) -> void {
    if (k > a * b) {
      out.push_back(t);
      return;
    }
    for (int i = 1; i <= a; ++i)
      for (int j = 1; j <= b; ++j) {
        if (t.at(i, j) != 0) continue;
        if (j > 1 && t.at(i, j - 1) == 0) continue;
        if (i > 1 && t.at(i - 1, j) == 0) continue;
        t.filling[(i - 1) * b + (j - 1)] = k;
        self(self, k + 1);
        t.filling[(i - 1) * b + (j - 1)] = 0;
      }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const RectTableau& x,
                                       const RectTableau& y) {
    return x.filling < y.filling;
  });
  return out;
}

AlgebraHandle cellular_handle(int a, int b) {
  AlgebraHandle h;
  h.n = a + b;
  h.lambda = {a, b};
  h.cyclotomic = true;
  return h;
}

StendhalTriple corner_triple(const RectTableau& t) {
  StendhalTriple tr;
  tr.blacks = t.content_word();
  tr.reds = {t.a, t.b};
  tr.kappa = {0, t.a * t.b};
  return tr;
}

Diagram cellular_diagram(const RectTableau& S, const RectTableau& T) {
  if (S.a != T.a || S.b != T.b)
    throw std::domain_error("cellular_diagram: shape mismatch");
  const int m = S.a * S.b;
  // Lower half: bottom black p goes to the reading position of the box that
  // T fills with p, i.e. the permutation w_T^{-1}; upper half continues to
  // the position S fills that box with, i.e. w_S.
  std::vector<int> low(m), up = S.w();
  const std::vector<int> wt = T.w();
  for (int k = 0; k < m; ++k) low[wt[k]] = k;
  Diagram d;
  d.bottom = corner_triple(T);
  for (int k : canonical_word(low)) d.word.push_back({false, k + 1});
  for (int k : canonical_word(up)) d.word.push_back({false, k + 1});
  return d;
}

int CellularModel::index(const RectTableau& t) const {
  auto it = std::lower_bound(tabs.begin(), tabs.end(), t,
                             [](const RectTableau& x, const RectTableau& y) {
                               return x.filling < y.filling;
                             });
  if (it == tabs.end() || !(*it == t))
    throw std::domain_error("tableau not in model");
  return int(it - tabs.begin());
}

Element CellularModel::mul(const Element& x, const Element& y) const {
  Element raw = compose_elements(handle, y, x);
  return corank >= 1 ? block_reduce(handle, raw, corank)
                     : cyclotomic_reduce(handle, raw);
}

namespace {

// The scalar r with x == r*y, if x lies on the line through y.
std::optional<Rat> proportion(const Element& x, const Element& y) {
  if (y.empty()) return x.empty() ? std::optional<Rat>(Rat(0)) : std::nullopt;
  const auto& [k0, c0] = *y.begin();
  auto it = x.find(k0);
  if (x.empty()) return Rat(0);
  if (it == x.end() || c0.b != 0 || c0.a == 0) return std::nullopt;
  Rat r = it->second.a / c0.a;
  if (!(x == scale(y, Coef(r)))) return std::nullopt;
  return r;
}

Rat sign_scalar(const Element& x, const Element& y, const char* what) {
  auto r = proportion(x, y);
  if (!r || (*r != 1 && *r != -1))
    throw std::domain_error(std::string("cellular product is not +-1 times a "
                                        "basis class: ") + what);
  return *r;
}

}  // namespace

CellularModel cellular_model(int a, int b, int corank) {
  CellularModel m;
  m.a = a;
  m.b = b;
  m.handle = cellular_handle(a, b);
  m.corank = corank;
  m.tabs = enumerate_standard(a, b);
  const int n = int(m.tabs.size());

  auto reduce = [&](const Element& x) {
    return corank >= 1 ? block_reduce(m.handle, x, corank)
                       : cyclotomic_reduce(m.handle, x);
  };

  // Reduced classes of the cellular diagrams.
  std::vector<std::vector<Element>> cls(n, std::vector<Element>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      Diagram d = cellular_diagram(m.tabs[s], m.tabs[t]);
      if (d.degree() != 0)
        throw std::domain_error("cellular diagram of nonzero degree");
      cls[s][t] = reduce(normalize(m.handle, d));
      if (cls[s][t].empty())
        throw std::domain_error("cellular diagram reduces to zero");
    }

  // Normalize signs so products are exactly matrix-unit.  All products of
  // the raw classes are +-1 times a class (checked); pin the scaling
  // through the row tableau R = tabs[0]:
  //   e0    = q0 * cls[0][0]          with cls[0][0]^2 = q0 cls[0][0],
  //   X_s   = C_{s,R} candidate       absorbed so that X_s e0 = X_s,
  //   Y_s   = C_{R,s} candidate       rescaled so that Y_s X_s = e0,
  //   unit[s][t] = X_s Y_t.
  // Associativity then forces unit[s][t] unit[t][r] = unit[s][r] exactly.
  Rat q0 = sign_scalar(m.mul(cls[0][0], cls[0][0]), cls[0][0], "e_R^2");
  Element e0 = scale(cls[0][0], Coef(q0));
  std::vector<Element> X(n), Y(n);
  for (int s = 0; s < n; ++s) {
    X[s] = m.mul(cls[s][0], e0);
    Y[s] = m.mul(e0, cls[0][s]);
    Rat d = sign_scalar(m.mul(Y[s], X[s]), e0, "C_{R,S} C_{S,R}");
    Y[s] = scale(Y[s], Coef(d));
  }
  m.unit.assign(n, std::vector<Element>(n));
  m.sign.assign(n, std::vector<Rat>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      m.unit[s][t] = m.mul(X[s], Y[t]);
      m.sign[s][t] = sign_scalar(m.unit[s][t], cls[s][t], "matrix unit");
    }
  return m;
}

std::vector<std::vector<Rat>> SimpleModule::act(const Element& x) const {
  const int n = dim();
  std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n, Rat(0)));
  for (int s = 0; s < n; ++s) {
    Element img = model.mul(x, model.unit[s][0]);
    // img must be a combination of the C_{T,R}; they live in pairwise
    // distinct (bottom, top) blocks, so split by the top triple.
    std::map<StendhalTriple, Element> parts;
    for (const auto& [k, c] : img) add_term(parts[k.top()], k, c);
    for (auto& [top, part] : parts) {
      bool hit = false;
      for (int t = 0; t < n && !hit; ++t) {
        if (model.unit[t][0].begin()->first.top() != top) continue;
        auto r = proportion(part, model.unit[t][0]);
        if (!r) break;
        mat[t][s] = *r;
        hit = true;
      }
      if (!hit)
        throw std::domain_error("module action leaves the cellular span");
    }
  }
  return mat;
}

SimpleModule simple_module(int a, int b, int corank) {
  return SimpleModule{cellular_model(a, b, corank)};
}

}  // namespace wb
