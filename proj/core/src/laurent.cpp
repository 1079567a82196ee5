#include "qhall/laurent.hpp"

#include "qhall/fields.hpp"
#include "qhall/linalg.hpp"

#include <sstream>

namespace qhall {

std::string LaurentPoly::str() const {
  if (coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponent first reads like a polynomial
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unitCoeff = (abs == 1) && e != 0;
    if (!unitCoeff) os << abs.get_str();
    if (e != 0) {
      if (!unitCoeff) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.var);
  r.coeff = a.coeff;
  for (const auto& [e, c] : b.coeff) {
    auto v = r.get(e) + c;
    r.set(e, v);
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.var);
  r.coeff = a.coeff;
  for (const auto& [e, c] : b.coeff) r.set(e, r.get(e) - c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.var);
  for (const auto& [ea, ca] : a.coeff)
    for (const auto& [eb, cb] : b.coeff) r.set(ea + eb, r.get(ea + eb) + ca * cb);
  return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
  LaurentPoly r(a.var);
  if (c == 0) return r;
  for (const auto& [e, v] : a.coeff) r.coeff[e] = c * v;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeff == b.coeff; }

LaurentPoly shiftExp(const LaurentPoly& a, int k) {
  LaurentPoly r(a.var);
  for (const auto& [e, c] : a.coeff) r.coeff[e + k] = c;
  return r;
}

LaurentPoly stretchExp(const LaurentPoly& a, int k, const std::string& newVar) {
  LaurentPoly r(newVar);
  for (const auto& [e, c] : a.coeff) r.coeff[e * k] = c;
  return r;
}

Rational specialize(const LaurentPoly& p, const Rational& value) {
  if (value == 0 && !p.coeff.empty() && p.lowDeg() < 0)
    throw ComputeError("cannot evaluate negative exponents at 0");
  Rational acc(0);
  for (const auto& [e, c] : p.coeff) {
    Rational powv(1);
    int n = e >= 0 ? e : -e;
    for (int i = 0; i < n; ++i) powv *= value;
    if (e < 0) powv = Rational(1) / powv;
    acc += c * powv;
  }
  return acc;
}

bool dividesExact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* quotient) {
  if (b.isZero()) return false;
  if (a.isZero()) {
    if (quotient) *quotient = LaurentPoly(a.var);
    return true;
  }
  // In the Laurent ring units absorb exponent shifts, so divide the shifted
  // ordinary-polynomial parts and put the shift back on the quotient.
  LaurentPoly an = shiftExp(a, -a.lowDeg());
  LaurentPoly bn = shiftExp(b, -b.lowDeg());
  int bHigh = bn.highDeg();
  Rational bLead = bn.coeff.rbegin()->second;
  LaurentPoly rem = an, q(a.var);
  while (!rem.isZero() && rem.highDeg() >= bHigh) {
    int d = rem.highDeg() - bHigh;
    Rational f = rem.coeff.rbegin()->second / bLead;
    q.set(d, q.get(d) + f);
    rem = rem - shiftExp(f * bn, d);
  }
  if (!rem.isZero()) return false;
  if (quotient) *quotient = shiftExp(q, a.lowDeg() - b.lowDeg());
  return true;
}

LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!dividesExact(a, b, &q)) throw ComputeError("inexact Laurent division");
  return q;
}

LaurentPoly laurentInterpolate(const std::vector<std::pair<long long, Rational>>& samples,
                               std::pair<int, int> window, const std::string& var) {
  const int lo = window.first, hi = window.second;
  if (hi < lo) throw ConfigError("empty interpolation window");
  const int w = hi - lo + 1;
  if (static_cast<int>(samples.size()) < w)
    throw ComputeError("insufficient samples for interpolation window");
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw ConfigError("interpolation sample points must be pairwise distinct");

  RationalField f;
  Mat<RationalField> m(static_cast<int>(samples.size()), w, f);
  std::vector<Rational> rhs(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    Rational point = ratFromLong(samples[i].first);
    // scale row by point^{-lo} so entries are point^{k-lo}, k in [lo,hi]
    Rational base(1);
    for (int k = 0; k < w; ++k) {
      m.at(static_cast<int>(i), k) = base;
      base *= point;
    }
    Rational scale(1);
    int n = lo >= 0 ? lo : -lo;
    for (int t = 0; t < n; ++t) scale *= point;
    rhs[i] = lo >= 0 ? Rational(samples[i].second / scale) : Rational(samples[i].second * scale);
  }
  auto sol = solveLinear(m, rhs, f);
  if (!sol) throw ComputeError("inconsistent interpolation samples (wrong degree window?)");
  // with more samples than unknowns, solveLinear already verified consistency
  LaurentPoly p(var);
  for (int k = 0; k < w; ++k) p.set(lo + k, (*sol)[k]);
  return p;
}

}  // namespace qhall
