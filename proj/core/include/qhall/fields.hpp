#pragma once

#include "qhall/rational.hpp"

#include <cstdint>
#include <vector>

namespace qhall {

// Arithmetic context for F_p, p prime. Elements are residues in [0,p) stored
// as long long; the modulus lives in the context object, not the element.
struct PrimeField {
  using Elem = long long;
  long long p = 2;

  PrimeField() = default;
  explicit PrimeField(long long prime) : p(prime) {
    if (prime < 2) throw ConfigError("field modulus must be >= 2");
    for (long long d = 2; d * d <= prime; ++d)
      if (prime % d == 0) throw ConfigError("field modulus must be prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem fromInt(long long n) const {
    long long r = n % p;
    return r < 0 ? r + p : r;
  }
  Elem fromRational(const Rational& r) const { return ratModP(r, p); }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
  Elem sub(Elem a, Elem b) const { Elem s = a - b; return s < 0 ? s + p : s; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem inv(Elem a) const {
    if (a == 0) throw ComputeError("division by zero in F_p");
    // extended Euclid
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt; t = newt; newt = tmp;
      tmp = r - q * newr; r = newr; newr = tmp;
    }
    return t < 0 ? t + p : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool isZero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
};

// Arithmetic context for Q backed by GMP rationals.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem fromInt(long long n) const { return ratFromLong(n); }
  Elem fromRational(const Rational& r) const { return r; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw ComputeError("division by zero in Q");
    return Rational(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
  bool isZero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

 private:
  static const Rational& inv_guard(const Rational& b) {
    if (b == 0) throw ComputeError("division by zero in Q");
    return b;
  }
};

}  // namespace qhall
