#pragma once

#include "qhall/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhall {

// Laurent polynomial in one variable with rational coefficients. Zero
// coefficients are never stored, so the zero polynomial has an empty map.
struct LaurentPoly {
  std::map<int, Rational> coeff;  // exponent -> coefficient
  std::string var = "q";

  LaurentPoly() = default;
  explicit LaurentPoly(std::string v) : var(std::move(v)) {}

  static LaurentPoly monomial(int exp, const Rational& c, const std::string& v = "q") {
    LaurentPoly p(v);
    if (c != 0) p.coeff[exp] = c;
    return p;
  }
  static LaurentPoly constant(const Rational& c, const std::string& v = "q") {
    return monomial(0, c, v);
  }

  bool isZero() const { return coeff.empty(); }
  int lowDeg() const { return coeff.empty() ? 0 : coeff.begin()->first; }
  int highDeg() const { return coeff.empty() ? 0 : coeff.rbegin()->first; }

  void set(int exp, const Rational& c) {
    if (c == 0) coeff.erase(exp);
    else coeff[exp] = c;
  }
  Rational get(int exp) const {
    auto it = coeff.find(exp);
    return it == coeff.end() ? Rational(0) : it->second;
  }

  std::string str() const;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Rational& c, const LaurentPoly& a);
bool operator==(const LaurentPoly& a, const LaurentPoly& b);

// a * var^k
LaurentPoly shiftExp(const LaurentPoly& a, int k);

// substitute var -> var^k (k != 0); used for q = t^2
LaurentPoly stretchExp(const LaurentPoly& a, int k, const std::string& newVar);

// Exact evaluation. Throws on value 0 with negative exponents present.
Rational specialize(const LaurentPoly& p, const Rational& value);

// Exact division; throws ComputeError when the division is not exact.
LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b);
bool dividesExact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* quotient);

// The unique Laurent polynomial with support in [window.first, window.second]
// taking value v_i at q = p_i for every sample (p_i, v_i). Throws ComputeError
// when samples are insufficient or inconsistent.
LaurentPoly laurentInterpolate(const std::vector<std::pair<long long, Rational>>& samples,
                               std::pair<int, int> window, const std::string& var = "q");

}  // namespace qhall
