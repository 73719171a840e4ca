#pragma once

/// \file qring.hpp
/// Exact arithmetic in Z[q,q^-1] plus quantum integers, factorials and
/// binomials, and the graded-shift bookkeeping used everywhere else.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace wb {

using Int = mpz_class;
using Rat = mpq_class;

/// A Laurent polynomial in q with arbitrary-precision integer coefficients.
/// Sparse map exponent -> coefficient; zero coefficients are never stored.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long c) { set(0, Int(c)); }          // NOLINT implicit ok
  LaurentScalar(const Int& c) { set(0, c); }         // NOLINT implicit ok

  /// The monomial c * q^e.
  static LaurentScalar monomial(int e, const Int& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Int>& coefficients() const { return coeffs_; }
  Int coefficient(int e) const;
  void set(int e, const Int& c);

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar operator+(const LaurentScalar& o) const;
  LaurentScalar operator-(const LaurentScalar& o) const;
  LaurentScalar operator-() const;
  LaurentScalar operator*(const LaurentScalar& o) const;
  LaurentScalar& operator*=(const LaurentScalar& o);
  bool operator==(const LaurentScalar& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

  /// Bar involution q -> q^-1.
  LaurentScalar bar() const;

  /// Evaluation at q=1 (used for sanity checks only).
  Int at_one() const;

  /// Exact division; throws std::domain_error if not divisible in Z[q,q^-1].
  LaurentScalar divide_exact(const LaurentScalar& d) const;

  std::string str() const;

  /// JSON object {"<exponent>": <coefficient>, ...} with string integer keys.
  nlohmann::json to_json() const;
  static LaurentScalar from_json(const nlohmann::json& j);

 private:
  std::map<int, Int> coeffs_;
};

LaurentScalar qint(int n);
LaurentScalar qfact(int n);
/// Quantum binomial; requires 0 <= k <= n.
LaurentScalar qbinom(int n, int k);

/// Composite grading shift: internal shift (n) and homological shift [n].
/// The Tate twist <n> is [n](-n).
struct GradedShift {
  int internal = 0;
  int homological = 0;

  static GradedShift tate(int n) { return GradedShift{-n, n}; }

  GradedShift operator+(const GradedShift& o) const {
    return GradedShift{internal + o.internal, homological + o.homological};
  }
  bool operator==(const GradedShift& o) const {
    return internal == o.internal && homological == o.homological;
  }
  /// K_0 class of the shift applied to the unit: q^internal * (-1)^homological.
  LaurentScalar k0() const;
};

}  // namespace wb
