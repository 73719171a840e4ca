#include "wb/qring.hpp"

#include <sstream>
#include <vector>

namespace wb {

LaurentScalar LaurentScalar::monomial(int e, const Int& c) {
  LaurentScalar r;
  r.set(e, c);
  return r;
}

Int LaurentScalar::coefficient(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentScalar::set(int e, const Int& c) {
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
  LaurentScalar r = *this;
  r += o;
  return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const {
  LaurentScalar r = *this;
  r -= o;
  return r;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
  LaurentScalar r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) {
      Int& slot = r.coeffs_[e1 + e2];
      slot += c1 * c2;
    }
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
  return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
  *this = *this * o;
  return *this;
}

LaurentScalar LaurentScalar::bar() const {
  LaurentScalar r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
  return r;
}

Int LaurentScalar::at_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

LaurentScalar LaurentScalar::divide_exact(const LaurentScalar& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero Laurent scalar");
  if (is_zero()) return LaurentScalar();
  // Long division from the top; terminate via the divisor's bottom exponent
  // (in an exact Laurent division the quotient's bottom is rem_bot - d_bot).
  const int dbot = d.coeffs_.begin()->first;
  const int rbot = coeffs_.begin()->first;
  LaurentScalar rem = *this;
  LaurentScalar quot;
  const auto dtop = std::prev(d.coeffs_.end());
  while (!rem.is_zero()) {
    const auto rtop = std::prev(rem.coeffs_.end());
    int qe = rtop->first - dtop->first;
    if (qe < rbot - dbot) throw std::domain_error("inexact Laurent division");
    Int qc = rtop->second / dtop->second;
    if (qc * dtop->second != rtop->second)
      throw std::domain_error("inexact Laurent division");
    LaurentScalar term = monomial(qe, qc);
    quot += term;
    rem -= term * d;
  }
  return quot;
}

std::string LaurentScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print from highest exponent down
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const Int& c = it->second;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int ac = abs(c);
    int e = it->first;
    if (ac != 1 || e == 0) os << ac.get_str();
    if (e != 0) {
      if (ac != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

nlohmann::json LaurentScalar::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : coeffs_) j[std::to_string(e)] = c.get_str();
  return j;
}

LaurentScalar LaurentScalar::from_json(const nlohmann::json& j) {
  LaurentScalar r;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Int c;
    if (it.value().is_string())
      c = Int(it.value().get<std::string>());
    else
      c = Int(it.value().get<long>());
    r.set(std::stoi(it.key()), c);
  }
  return r;
}

LaurentScalar qint(int n) {
  LaurentScalar r;
  if (n == 0) return r;
  if (n < 0) return -qint(-n);
  // q^{n-1} + q^{n-3} + ... + q^{1-n}
  for (int e = n - 1; e >= 1 - n; e -= 2) r.set(e, 1);
  return r;
}

LaurentScalar qfact(int n) {
  if (n < 0) throw std::domain_error("qfact of negative integer");
  LaurentScalar r(1);
  for (int j = 2; j <= n; ++j) r *= qint(j);
  return r;
}

LaurentScalar qbinom(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("qbinom requires 0 <= k <= n");
  // Pascal recursion keeps everything in Z[q,q^-1] without division.
  std::vector<LaurentScalar> row(1, LaurentScalar(1));
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentScalar> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      // [m choose j] = q^j [m-1 choose j] + q^{j-m} [m-1 choose j-1]
      if (j < m) next[j] += LaurentScalar::monomial(j) * row[j];
      if (j > 0) next[j] += LaurentScalar::monomial(j - m) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

LaurentScalar GradedShift::k0() const {
  Int sign = (homological % 2 == 0) ? 1 : -1;
  return LaurentScalar::monomial(internal, sign);
}

}  // namespace wb
