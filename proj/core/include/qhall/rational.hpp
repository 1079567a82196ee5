#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhall {

// All coefficient arithmetic in this library is exact. Rational numbers are
// GMP rationals; there is no floating point anywhere in the computation path.
using Rational = mpq_class;

inline Rational ratFromLong(long long n) { return Rational(static_cast<long>(n)); }

// mpq_class(num, den) does not canonicalize; this does.
inline Rational ratFrac(long long num, long long den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool isInteger(const Rational& r) { return r.get_den() == 1; }

inline long long toLong(const Rational& r) {
  if (!isInteger(r)) throw std::runtime_error("rational is not an integer: " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw std::runtime_error("integer out of range: " + r.get_str());
  return r.get_num().get_si();
}

inline std::string ratStr(const Rational& r) { return r.get_str(); }

// r mod p as a residue in [0,p), defined when the denominator is a unit mod p.
inline long long ratModP(const Rational& r, long long p) {
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class pz(static_cast<long>(p));
  mpz_class dmod = den % pz;
  if (dmod == 0) throw std::runtime_error("denominator not invertible mod p");
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), dmod.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw std::runtime_error("denominator not invertible mod p");
  mpz_class res = ((num % pz) * inv) % pz;
  if (res < 0) res += pz;
  return res.get_si();
}

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qhall
