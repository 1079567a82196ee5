#include "doctest.h"

#include "qhall/fields.hpp"
#include "qhall/laurent.hpp"
#include "qhall/linalg.hpp"
#include "qhall/sqrtq.hpp"

#include <random>

using namespace qhall;

TEST_CASE("field axioms hold exhaustively for small primes") {
  for (long long p : {2, 3, 5, 7}) {
    PrimeField f(p);
    for (long long a = 0; a < p; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (long long b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (long long c = 0; c < p; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("fp_linalg examples") {
  PrimeField f2(2), f3(3);
  Mat<PrimeField> id2(2, 2, f2);
  id2.at(0, 0) = 1;
  id2.at(1, 1) = 1;
  CHECK(fpLinalg(id2, FpLinalgMode::Rank, f2).rank == 2);

  Mat<PrimeField> z3(3, 3, f3);
  CHECK(fpLinalg(z3, FpLinalgMode::Nullspace, f3).kernel.size() == 3);

  Mat<PrimeField> ones(2, 2, f2);
  ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = 1;
  CHECK(fpLinalg(ones, FpLinalgMode::Rank, f2).rank == 1);

  std::vector<long long> rhs{1, 1};
  auto sol = fpLinalg(ones, FpLinalgMode::Solve, f2, &rhs);
  REQUIRE(sol.particular.has_value());
  CHECK(sol.homogeneous.size() == 1);
  std::vector<long long> bad{1};
  CHECK_THROWS_AS(fpLinalg(ones, FpLinalgMode::Solve, f2, &bad), ConfigError);
}

TEST_CASE("rank plus nullity equals columns on random matrices") {
  std::mt19937_64 rng(7);
  for (long long p : {2, 5, 13}) {
    PrimeField f(p);
    for (int trial = 0; trial < 25; ++trial) {
      int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
      Mat<PrimeField> m(r, c, f);
      for (auto& e : m.a) e = static_cast<long long>(rng() % p);
      auto ns = nullspaceBasis(m, f);
      CHECK(matRank(m, f) + static_cast<int>(ns.size()) == c);
      for (auto& v : ns) {
        for (int i = 0; i < r; ++i) {
          long long acc = 0;
          for (int j = 0; j < c; ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
          CHECK(acc == 0);
        }
      }
    }
  }
}

TEST_CASE("laurent interpolation examples") {
  auto p1 = laurentInterpolate({{2, Rational(1)}, {3, Rational(2)}, {5, Rational(4)}}, {0, 2});
  LaurentPoly want;
  want.set(1, Rational(1));
  want.set(0, Rational(-1));
  CHECK(p1 == want);  // q - 1

  auto p2 = laurentInterpolate({{2, Rational(1)}, {3, Rational(1)}, {5, Rational(1)}}, {0, 2});
  CHECK(p2 == LaurentPoly::constant(Rational(1)));

  auto p3 = laurentInterpolate({{2, ratFrac(1, 2)}, {3, ratFrac(1, 3)}}, {-1, 0});
  CHECK(p3 == LaurentPoly::monomial(-1, Rational(1)));  // q^{-1}

  CHECK_THROWS_AS(laurentInterpolate({{2, Rational(1)}}, {0, 2}), ComputeError);
  CHECK_THROWS_AS(
      laurentInterpolate({{2, Rational(1)}, {3, Rational(5)}, {5, Rational(1)}, {7, Rational(0)}},
                         {0, 1}),
      ComputeError);
}

TEST_CASE("interpolation inverts evaluation on window polynomials") {
  std::mt19937_64 rng(11);
  const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  for (int trial = 0; trial < 30; ++trial) {
    int lo = -static_cast<int>(rng() % 3), hi = lo + static_cast<int>(rng() % 4);
    LaurentPoly p;
    for (int e = lo; e <= hi; ++e)
      p.set(e, ratFrac(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 3)));
    std::vector<std::pair<long long, Rational>> samples;
    for (int i = 0; i < hi - lo + 1; ++i)
      samples.push_back({primes[i], specialize(p, ratFromLong(primes[i]))});
    if (samples.empty()) continue;
    auto q = laurentInterpolate(samples, {lo, hi});
    CHECK(q == p);
  }
}

TEST_CASE("specialize examples") {
  LaurentPoly qm1;
  qm1.set(1, Rational(1));
  qm1.set(0, Rational(-1));
  CHECK(specialize(qm1, Rational(1)) == 0);
  CHECK(specialize(LaurentPoly::monomial(-1, Rational(1)), Rational(2)) == ratFrac(1, 2));
  LaurentPoly p;
  p.set(2, Rational(1));
  p.set(1, Rational(1));
  CHECK(specialize(p, Rational(3)) == 12);
  CHECK_THROWS_AS(specialize(LaurentPoly::monomial(-1, Rational(1)), Rational(0)), ComputeError);
}

TEST_CASE("sqrt-q ring respects (sqrt q)^2 = q") {
  SqrtQ t = SqrtQ::sqrtQ(5);
  CHECK(t * t == SqrtQ::fromRational(Rational(5), 5));
  SqrtQ x(Rational(2), Rational(3), 5);
  CHECK(x * x.inverse() == SqrtQ::fromRational(Rational(1), 5));
  CHECK((x - x).isZero());
  // t - t^{-1} = (q-1)/sqrt(q)
  SqrtQ d = t - t.inverse();
  CHECK(d * t == SqrtQ::fromRational(Rational(4), 5));
}

TEST_CASE("laurent exact division") {
  LaurentPoly q2m1;  // t^2 - 1
  q2m1.set(2, Rational(1));
  q2m1.set(0, Rational(-1));
  LaurentPoly prod = q2m1 * LaurentPoly::monomial(-1, Rational(3));
  auto quot = divExact(prod, q2m1);
  CHECK(quot == LaurentPoly::monomial(-1, Rational(3)));
  LaurentPoly odd;
  odd.set(1, Rational(1));
  odd.set(0, Rational(1));
  CHECK_FALSE(dividesExact(odd, q2m1, nullptr));
}
