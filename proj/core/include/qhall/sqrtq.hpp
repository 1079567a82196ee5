#pragma once

#include "qhall/rational.hpp"

#include <string>

namespace qhall {

// Element a + b*sqrt(q) of the real quadratic field Q(sqrt q), q a prime.
// sqrt(q) is irrational, so a + b*sqrt(q) = 0 iff a = b = 0 and the norm
// a^2 - b^2 q vanishes only at 0; division is always defined away from 0.
struct SqrtQ {
  Rational a{0}, b{0};
  long long q = 2;

  SqrtQ() = default;
  SqrtQ(Rational a_, Rational b_, long long q_) : a(std::move(a_)), b(std::move(b_)), q(q_) {}
  static SqrtQ fromRational(const Rational& r, long long q) { return SqrtQ(r, Rational(0), q); }
  static SqrtQ sqrtQ(long long q) { return SqrtQ(Rational(0), Rational(1), q); }

  bool isZero() const { return a == 0 && b == 0; }
  bool isRational() const { return b == 0; }

  SqrtQ operator+(const SqrtQ& o) const { return SqrtQ(a + o.a, b + o.b, q); }
  SqrtQ operator-(const SqrtQ& o) const { return SqrtQ(a - o.a, b - o.b, q); }
  SqrtQ operator-() const { return SqrtQ(-a, -b, q); }
  SqrtQ operator*(const SqrtQ& o) const {
    return SqrtQ(a * o.a + b * o.b * ratFromLong(q), a * o.b + b * o.a, q);
  }
  SqrtQ inverse() const {
    Rational n = a * a - b * b * ratFromLong(q);
    if (n == 0) throw ComputeError("division by zero in Q(sqrt q)");
    return SqrtQ(a / n, -b / n, q);
  }
  SqrtQ operator/(const SqrtQ& o) const { return *this * o.inverse(); }
  bool operator==(const SqrtQ& o) const { return a == o.a && b == o.b; }

  // multiply by t^k where t = sqrt(q)
  SqrtQ mulTPow(int k) const {
    SqrtQ r = *this;
    SqrtQ t = SqrtQ::sqrtQ(q);
    SqrtQ ti = t.inverse();
    int n = k >= 0 ? k : -k;
    for (int i = 0; i < n; ++i) r = r * (k >= 0 ? t : ti);
    return r;
  }

  std::string str() const {
    if (b == 0) return a.get_str();
    std::string s = (a == 0) ? "" : a.get_str();
    if (!s.empty()) s += (b > 0 ? " + " : " - ");
    else if (b < 0) s += "-";
    Rational ab = b < 0 ? Rational(-b) : b;
    if (ab != 1) s += ab.get_str() + "*";
    s += "sqrt(" + std::to_string(q) + ")";
    return s;
  }
};

}  // namespace qhall
