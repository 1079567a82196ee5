#include "doctest.h"

#include "qhall/derived.hpp"
#include "qhall/module_cat.hpp"

using namespace qhall;

namespace {
RationalField QQ;

std::vector<long long> signedClass(const ModuleCategory<RationalField>& cat, DerivedObject x) {
  std::vector<long long> v;
  for (int d : cat.ind(x.mod).dim) v.push_back((x.shift % 2 == 0 ? 1 : -1) * d);
  return v;
}
}  // namespace

TEST_CASE("indecomposable counts match positive root counts") {
  auto count = [](DynkinType t, int r) {
    ModuleCategory<RationalField> cat(DynkinQuiver::standard(t, r), QQ);
    return cat.size();
  };
  CHECK(count(DynkinType::A, 1) == 1);
  CHECK(count(DynkinType::A, 2) == 3);
  CHECK(count(DynkinType::A, 3) == 6);
  CHECK(count(DynkinType::A, 5) == 15);
  CHECK(count(DynkinType::D, 4) == 12);
  CHECK(count(DynkinType::D, 5) == 20);
  CHECK(count(DynkinType::E, 6) == 36);
}

TEST_CASE("A2 forward orientation module category") {
  ModuleCategory<RationalField> cat(DynkinQuiver::a2Forward(), QQ);
  REQUIRE(cat.size() == 3);
  // P_2 = S_2, P_1 two-dimensional, S_1 non-projective
  CHECK(cat.projective(1) == cat.simple(1));
  CHECK(cat.ind(cat.projective(0)).dim == std::vector<int>{1, 1});
  CHECK(cat.ind(cat.simple(0)).projAt == -1);
  // Ext^1(S_1, S_2) = 1 via the projective resolution 0 -> P_2 -> P_1 -> S_1 -> 0
  CHECK(cat.ext1Dim(cat.simple(0), cat.simple(1)) == 1);
  CHECK(cat.ind(cat.simple(0)).p0mult == std::vector<int>{1, 0});
  CHECK(cat.ind(cat.simple(0)).p1mult == std::vector<int>{0, 1});
  // injectives: I_1 = S_1, I_2 = P_1
  CHECK(cat.injective(0) == cat.simple(0));
  CHECK(cat.injective(1) == cat.projective(0));
  // tau S_1 = S_2
  CHECK(cat.ind(cat.simple(0)).tau == cat.simple(1));
}

TEST_CASE("Euler form equals hom minus ext for all pairs") {
  for (auto q : {DynkinQuiver::standard(DynkinType::A, 3),
                 DynkinQuiver::standard(DynkinType::D, 4), DynkinQuiver::a2Backward()}) {
    ModuleCategory<RationalField> cat(q, QQ);
    for (int i = 0; i < cat.size(); ++i)
      for (int j = 0; j < cat.size(); ++j) {
        long long lhs = cat.homDim(i, j) - cat.ext1Dim(i, j);
        CHECK(lhs == q.eulerForm(cat.ind(i).dim, cat.ind(j).dim));
      }
  }
}

TEST_CASE("tau is a bijection from non-projectives to non-injectives") {
  ModuleCategory<RationalField> cat(DynkinQuiver::standard(DynkinType::A, 3), QQ);
  std::set<int> images;
  for (int i = 0; i < cat.size(); ++i) {
    if (cat.ind(i).projAt >= 0) {
      CHECK(cat.ind(i).tau == -1);
      continue;
    }
    int t = cat.ind(i).tau;
    REQUIRE(t >= 0);
    CHECK(cat.ind(t).injAt == -1);
    CHECK(cat.ind(t).tauInv == i);
    images.insert(t);
  }
  int nonInj = 0;
  for (int i = 0; i < cat.size(); ++i)
    if (cat.ind(i).injAt == -1) ++nonInj;
  CHECK(static_cast<int>(images.size()) == nonInj);
}

TEST_CASE("derived actions") {
  ModuleCategory<RationalField> cat(DynkinQuiver::a2Forward(), QQ);
  DerivedObject s1{cat.simple(0), 0};
  CHECK(sigmaDer<RationalField>(s1, 1) == DerivedObject{cat.simple(0), 1});
  // tau(P_1, 0) = (I_1, -1)
  CHECK(tauDer(cat, DerivedObject{cat.projective(0), 0}) ==
        DerivedObject{cat.injective(0), -1});
  // F = sigma^2 on (S_2, 1)
  CHECK(applyAuto(cat, AutoSpec::sigmaPower(2), DerivedObject{cat.simple(1), 1}) ==
        DerivedObject{cat.simple(1), 3});
  CHECK(applyAuto(cat, AutoSpec::sigmaTauInverse(),
                  applyAuto(cat, AutoSpec::sigmaTauInverse(), s1, 1), -1) == s1);
}

TEST_CASE("derived hom dimensions") {
  ModuleCategory<RationalField> cat(DynkinQuiver::a2Forward(), QQ);
  DerivedObject s1{cat.simple(0), 0};
  CHECK(derivedHomDim(cat, s1, s1) == 1);
  CHECK(derivedHomDim(cat, s1, DerivedObject{cat.simple(1), 1}) == 1);
  CHECK(derivedHomDim(cat, s1, DerivedObject{cat.simple(1), 2}) == 0);
}

TEST_CASE("AR triangle middles") {
  ModuleCategory<RationalField> catF(DynkinQuiver::a2Forward(), QQ);
  // (P_1, 0): rad P_1 = P_2 and I_1/soc = 0
  auto mid = arTriangleMiddle(catF, DerivedObject{catF.projective(0), 0});
  REQUIRE(mid.size() == 1);
  CHECK(mid[0] == DerivedObject{catF.projective(1), 0});
  // (S_1, 0): AR sequence 0 -> P_2 -> P_1 -> S_1 -> 0
  mid = arTriangleMiddle(catF, DerivedObject{catF.simple(0), 0});
  REQUIRE(mid.size() == 1);
  CHECK(mid[0] == DerivedObject{catF.projective(0), 0});

  ModuleCategory<RationalField> cat1(DynkinQuiver::standard(DynkinType::A, 1), QQ);
  CHECK(arTriangleMiddle(cat1, DerivedObject{cat1.projective(0), 0}).empty());
}

TEST_CASE("mesh dimension recurrence on the derived AR quiver") {
  for (auto q : {DynkinQuiver::a2Forward(), DynkinQuiver::standard(DynkinType::A, 3)}) {
    ModuleCategory<RationalField> cat(q, QQ);
    for (int m = 0; m < cat.size(); ++m)
      for (int s = -2; s <= 2; ++s) {
        DerivedObject x{m, s};
        DerivedObject y = tauInvDer(cat, x);
        auto mids = arTriangleMiddle(cat, y);
        std::vector<long long> sum(q.numVertices(), 0);
        for (auto& md : mids) {
          auto c = signedClass(cat, md);
          for (int v = 0; v < q.numVertices(); ++v) sum[v] += c[v];
        }
        auto cx = signedClass(cat, x);
        auto cy = signedClass(cat, y);
        for (int v = 0; v < q.numVertices(); ++v) CHECK(cy[v] == sum[v] - cx[v]);
      }
  }
}

TEST_CASE("Ext-vanishing assumption for the automorphism examples") {
  ModuleCategory<RationalField> cat(DynkinQuiver::a2Forward(), QQ);
  CHECK(checkAssumption(cat, AutoSpec::sigmaPower(2)).holds);
  CHECK(checkAssumption(cat, AutoSpec::sigmaPower(3)).holds);
  CHECK(checkAssumption(cat, AutoSpec::sigmaTauInverse()).holds);
  // the sigma^1 failure needs a pair with Hom and Ext^1 both nonzero; the
  // smallest Dynkin quiver carrying one is A_3
  ModuleCategory<RationalField> cat3(DynkinQuiver::standard(DynkinType::A, 3), QQ);
  CHECK(checkAssumption(cat3, AutoSpec::sigmaPower(2)).holds);
  auto bad = checkAssumption(cat3, AutoSpec::sigmaPower(1));
  CHECK_FALSE(bad.holds);
  CHECK(bad.i1 != bad.i2);  // witness carries two distinct powers
  CHECK(checkAssumption(cat3, AutoSpec::sigmaTauInverse()).holds);
}

TEST_CASE("presentation differentials compose to the module") {
  // coker of presDiff has the module's dimension vector, over Q and F_5
  PrimeField F5(5);
  ModuleCategory<PrimeField> cat(DynkinQuiver::standard(DynkinType::A, 3), F5);
  const auto& paths = cat.paths();
  for (int m = 0; m < cat.size(); ++m) {
    const auto& M = cat.ind(m);
    const auto& d = M.presDiff;
    for (int v = 0; v < 3; ++v) {
      // expand the path matrix at vertex v and check rank = dim P1(v)
      std::vector<std::pair<int, int>> rowsIdx, colsIdx;  // (copy, path)
      for (size_t c = 0; c < d.colVertex.size(); ++c)
        for (int p : paths.byPair[d.colVertex[c]][v]) colsIdx.push_back({(int)c, p});
      for (size_t r = 0; r < d.rowVertex.size(); ++r)
        for (int p : paths.byPair[d.rowVertex[r]][v]) rowsIdx.push_back({(int)r, p});
      Mat<PrimeField> lin((int)rowsIdx.size(), (int)colsIdx.size(), F5);
      for (size_t c = 0; c < colsIdx.size(); ++c) {
        auto [cc, pc] = colsIdx[c];
        for (size_t r = 0; r < rowsIdx.size(); ++r) {
          auto [rc, pr] = rowsIdx[r];
          // entry contribution: sum over terms t of d.at(rc, cc) with concat(t, pc) == pr
          for (auto& [pd, coef] : d.at(rc, cc).terms)
            if (paths.concat(pd, pc) == pr) lin.at((int)r, (int)c) = F5.add(lin.at((int)r, (int)c), coef);
        }
      }
      int rk = matRank(lin, F5);
      CHECK(rk == (int)colsIdx.size());                      // injective
      CHECK((int)rowsIdx.size() - rk == M.dim[v]);           // cokernel = module
    }
  }
}
