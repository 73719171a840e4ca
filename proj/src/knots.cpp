#include "wb/knots.hpp"

#include <numeric>
#include <sstream>

namespace wb {

namespace {

Rat canon(Rat r) {
  r.canonicalize();
  return r;
}

void check_color(int a, int n) {
  if (a < 0 || a > n)
    throw UnsupportedColorError(
        "color " + std::to_string(a) + " is not fundamental for n = " +
        std::to_string(n) + "; cabling with the projectors P^+- is not "
        "supported");
}

}  // namespace

Rat xi(int a, int b, int n) {
  return canon(Rat((n - std::max(a, b)) * std::min(a, b), n));
}

Rat xi_prime(int a, int b, int n) {
  return canon(Rat(std::min(a, b) * std::max(a, b), n));
}

Rat framing_twist(int a, int n) {
  return canon(Rat(-a * (n - a) * (n - 1), n));
}

TangleError::TangleError(int slice_index, const std::string& what)
    : std::runtime_error(slice_index < 0
                             ? what
                             : "slice " + std::to_string(slice_index) + ": " +
                                   what),
      slice(slice_index) {}

Slice Slice::cup(int pos, int color, bool reversed) {
  Slice s;
  s.kind = Kind::CUP;
  s.pos = pos;
  s.color = color;
  s.reversed = reversed;
  return s;
}

Slice Slice::cap(int pos, int color, bool reversed) {
  Slice s;
  s.kind = Kind::CAP;
  s.pos = pos;
  s.color = color;
  s.reversed = reversed;
  return s;
}

Slice Slice::crossing(int pos, bool positive, int a, int b) {
  Slice s;
  s.kind = Kind::CROSSING;
  s.pos = pos;
  s.positive = positive;
  s.a = a;
  s.b = b;
  return s;
}

Slice Slice::transport(const Rung& r) {
  Slice s;
  s.kind = Kind::RUNG;
  s.rung = r;
  s.pos = r.i;
  return s;
}

nlohmann::json TangleDiagram::to_json() const {
  nlohmann::json slices_j = nlohmann::json::array();
  for (const Slice& s : slices) {
    switch (s.kind) {
      case Slice::Kind::CUP:
        slices_j.push_back({{s.reversed ? "cupr" : "cup", {s.pos, s.color}}});
        break;
      case Slice::Kind::CAP:
        slices_j.push_back({{s.reversed ? "capr" : "cap", {s.pos, s.color}}});
        break;
      case Slice::Kind::CROSSING:
        slices_j.push_back(
            {{"x",
              {s.pos, s.positive ? "+" : "-", {s.a, s.b}}}});
        break;
      case Slice::Kind::RUNG:
        slices_j.push_back(
            {{"rung",
              {s.rung.kind == RungKind::F ? "F" : "E", s.rung.i, s.rung.c}}});
        break;
    }
  }
  nlohmann::json framing_j = nlohmann::json::array();
  for (const Component& c : components)
    framing_j.push_back({c.color, c.framing});
  return {{"n", n}, {"ell", ell}, {"slices", slices_j}, {"framing", framing_j}};
}

TangleDiagram TangleDiagram::from_json(const nlohmann::json& j) {
  TangleDiagram t;
  t.n = j.at("n").get<int>();
  t.ell = j.value("ell", 0);
  for (const auto& sj : j.at("slices")) {
    if (!sj.is_object() || sj.size() != 1)
      throw TangleError(-1, "each slice must be a one-key object");
    const std::string& key = sj.begin().key();
    const nlohmann::json& val = sj.begin().value();
    if (key == "cup" || key == "cupr")
      t.slices.push_back(
          Slice::cup(val.at(0).get<int>(), val.at(1).get<int>(),
                     key == "cupr"));
    else if (key == "cap" || key == "capr")
      t.slices.push_back(
          Slice::cap(val.at(0).get<int>(), val.at(1).get<int>(),
                     key == "capr"));
    else if (key == "x")
      t.slices.push_back(Slice::crossing(
          val.at(0).get<int>(), val.at(1).get<std::string>() == "+",
          val.at(2).at(0).get<int>(), val.at(2).at(1).get<int>()));
    else if (key == "rung") {
      Rung r;
      r.kind = val.at(0).get<std::string>() == "F" ? RungKind::F : RungKind::E;
      r.i = val.at(1).get<int>();
      r.c = val.at(2).get<int>();
      t.slices.push_back(Slice::transport(r));
    } else {
      throw TangleError(-1, "unknown slice kind '" + key + "'");
    }
  }
  if (j.contains("framing"))
    for (const auto& fj : j.at("framing"))
      t.components.push_back({fj.at(0).get<int>(), fj.at(1).get<int>()});
  // Infer the width when not given.
  if (t.ell == 0) {
    int w = 1;
    for (const Slice& s : t.slices) w = std::max(w, s.pos + 1);
    t.ell = w;
  }
  return t;
}

CompiledTangle compile(const TangleDiagram& t) {
  if (t.n < 1) throw TangleError(-1, "ambient n must be positive");
  if (t.ell < 1) throw TangleError(-1, "need at least one upright");
  for (const TangleDiagram::Component& c : t.components)
    check_color(c.color, t.n);

  CompiledTangle out;
  out.ell = t.ell;
  out.n = t.n;
  out.bottom.assign(t.ell, 0);
  std::vector<int> w(t.ell, 0);
  std::vector<bool> used(t.ell, false);

  // Charge upright j (1-based) with a bottom weight of n, allowed only while
  // it has not yet been used by any slice.
  auto inject = [&](int j, int slice_idx) {
    if (used[j - 1])
      throw TangleError(slice_idx,
                        "upright " + std::to_string(j) +
                            " is already in use and cannot be recharged");
    out.bottom[j - 1] = t.n;
    w[j - 1] = t.n;
  };
  auto need_pair = [&](int j, int slice_idx) {
    if (j < 1 || j + 1 > t.ell)
      throw TangleError(slice_idx, "position " + std::to_string(j) +
                                       " out of range for " +
                                       std::to_string(t.ell) + " uprights");
  };

  for (int si = 0; si < (int)t.slices.size(); ++si) {
    const Slice& s = t.slices[si];
    CompiledStep step;
    switch (s.kind) {
      case Slice::Kind::CUP: {
        need_pair(s.pos, si);
        check_color(s.color, t.n);
        int j = s.pos;
        if (s.color > 0) {
          if (!s.reversed) {
            if (w[j - 1] == 0 && !used[j - 1]) inject(j, si);
            if (w[j - 1] != t.n || w[j] != 0)
              throw TangleError(
                  si, "cup needs weights (n, 0) at uprights (" +
                          std::to_string(j) + ", " + std::to_string(j + 1) +
                          "), found (" + std::to_string(w[j - 1]) + ", " +
                          std::to_string(w[j]) + ")");
            step.rungs.push_back(Rung{RungKind::F, j, s.color});
            w[j - 1] -= s.color;
            w[j] += s.color;
          } else {
            if (w[j] == 0 && !used[j]) inject(j + 1, si);
            if (w[j - 1] != 0 || w[j] != t.n)
              throw TangleError(
                  si, "reversed cup needs weights (0, n) at uprights (" +
                          std::to_string(j) + ", " + std::to_string(j + 1) +
                          "), found (" + std::to_string(w[j - 1]) + ", " +
                          std::to_string(w[j]) + ")");
            step.rungs.push_back(Rung{RungKind::E, j, s.color});
            w[j - 1] += s.color;
            w[j] -= s.color;
          }
        }
        used[j - 1] = used[j] = true;
        break;
      }
      case Slice::Kind::CAP: {
        need_pair(s.pos, si);
        check_color(s.color, t.n);
        int j = s.pos;
        if (s.color > 0) {
          if (!s.reversed) {
            if (w[j - 1] != t.n - s.color || w[j] != s.color)
              throw TangleError(
                  si, "cap colored " + std::to_string(s.color) +
                          " needs weights (n-a, a), found (" +
                          std::to_string(w[j - 1]) + ", " +
                          std::to_string(w[j]) + ")");
            step.rungs.push_back(Rung{RungKind::E, j, s.color});
            w[j - 1] += s.color;
            w[j] -= s.color;
          } else {
            if (w[j - 1] != s.color || w[j] != t.n - s.color)
              throw TangleError(
                  si, "reversed cap colored " + std::to_string(s.color) +
                          " needs weights (a, n-a), found (" +
                          std::to_string(w[j - 1]) + ", " +
                          std::to_string(w[j]) + ")");
            step.rungs.push_back(Rung{RungKind::F, j, s.color});
            w[j - 1] -= s.color;
            w[j] += s.color;
          }
        }
        used[j - 1] = used[j] = true;
        break;
      }
      case Slice::Kind::CROSSING: {
        need_pair(s.pos, si);
        check_color(s.a, t.n);
        check_color(s.b, t.n);
        int j = s.pos;
        if (w[j - 1] != s.a && w[j - 1] != t.n - s.a)
          throw TangleError(
              si, "crossing color a = " + std::to_string(s.a) +
                      " does not match upright " + std::to_string(j) +
                      " of weight " + std::to_string(w[j - 1]));
        if (w[j] != s.b && w[j] != t.n - s.b)
          throw TangleError(
              si, "crossing color b = " + std::to_string(s.b) +
                      " does not match upright " + std::to_string(j + 1) +
                      " of weight " + std::to_string(w[j]));
        step.crossing = true;
        step.i = j;
        step.positive = s.positive;
        step.a = s.a;
        step.b = s.b;
        std::swap(w[j - 1], w[j]);
        used[j - 1] = used[j] = true;
        break;
      }
      case Slice::Kind::RUNG: {
        need_pair(s.rung.i, si);
        if (s.rung.c < 0) throw TangleError(si, "negative rung thickness");
        int j = s.rung.i;
        int from = s.rung.kind == RungKind::F ? j - 1 : j;
        int to = s.rung.kind == RungKind::F ? j : j - 1;
        if (w[from] < s.rung.c || w[to] + s.rung.c > t.n)
          throw TangleError(si, "transport rung leaves the weight range");
        if (s.rung.c > 0) step.rungs.push_back(s.rung);
        w[from] -= s.rung.c;
        w[to] += s.rung.c;
        used[j - 1] = used[j] = true;
        break;
      }
    }
    step.weights_after = w;
    out.steps.push_back(std::move(step));
  }
  return out;
}

Rat weighted_writhe(const TangleDiagram& t) {
  Rat total(0);
  for (const Slice& s : t.slices)
    if (s.kind == Slice::Kind::CROSSING)
      total += (s.positive ? 1 : -1) * xi_prime(s.a, s.b, t.n);
  return canon(total);
}

nlohmann::json InvariantValue::to_json() const {
  return {{"poly", poly.to_json()}, {"offset", offset.get_str()}};
}

InvariantValue evaluate(const TangleDiagram& t) {
  CompiledTangle c = compile(t);
  int p = std::accumulate(c.bottom.begin(), c.bottom.end(), 0);
  SkewHoweSpace sp = SkewHoweSpace::make(c.ell, c.n, p);

  unsigned full = (1u << c.n) - 1u;
  auto pattern_tag = [&](const std::vector<int>& weights) {
    WedgeTag tag;
    for (int wi : weights) tag.J.push_back(wi == c.n ? full : 0u);
    return tag;
  };

  WedgeVector state;
  state[pattern_tag(c.bottom)] = LaurentScalar(1);
  std::vector<int> w = c.bottom;
  Rat offset(0);

  for (const CompiledStep& step : c.steps) {
    if (step.crossing) {
      QuantumOperator op =
          rickard_euler(c.ell, c.n, w, step.i, /*inverse=*/!step.positive);
      state = op.apply(state);
      offset += (step.positive ? 1 : -1) * xi(step.a, step.b, c.n);
      std::swap(w[step.i - 1], w[step.i]);
    } else {
      for (const Rung& r : step.rungs) {
        Ladder l{c.ell, c.n, w, {r}};
        state = k0_class(l).apply(state);
        w = l.top();
      }
    }
  }

  for (int wi : w)
    if (wi != 0 && wi != c.n)
      throw TangleError(-1, "diagram is not closed: a final upright has "
                            "weight " + std::to_string(wi));

  InvariantValue value;
  WedgeTag final_tag = pattern_tag(w);
  auto it = state.find(final_tag);
  if (it != state.end()) value.poly = it->second;
  for (const TangleDiagram::Component& comp : t.components)
    offset += comp.framing * framing_twist(comp.color, c.n);
  value.offset = canon(offset);
  return value;
}

InvariantValue evaluate(TangleDiagram t, int n) {
  t.n = n;
  return evaluate(t);
}

}  // namespace wb
