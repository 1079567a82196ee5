#include "doctest.h"

#include "qhall/nakajima_build.hpp"
#include "qhall/present_compare.hpp"

using namespace qhall;

namespace {
RationalField QQ;

// exa2-style fixture: A_2 with 1 -> 2, F = sigma^2, C = all shifted simples
NakCats<RationalField>& exa2() {
  static NakCats<RationalField> n(DynkinQuiver::a2Forward(), AutoSpec::sigmaPower(2),
                                  ConfigSpec::bridgeland(), QQ);
  return n;
}
// exa1-style fixture: A_2 with 2 -> 1, F = sigma^2, C = tau-orbit of S_1
NakCats<RationalField>& exa1() {
  static NakCats<RationalField>* n = [] {
    DynkinQuiver q = DynkinQuiver::a2Backward();
    ModuleCategory<RationalField> cat(q, QQ);
    std::vector<DerivedObject> seeds{{cat.simple(0), 0}};
    return new NakCats<RationalField>(q, AutoSpec::sigmaPower(2), ConfigSpec::tauOrbit(seeds), QQ);
  }();
  return *n;
}
NakCats<RationalField>& a1b() {
  static NakCats<RationalField> n(DynkinQuiver::standard(DynkinType::A, 1),
                                  AutoSpec::sigmaPower(2), ConfigSpec::bridgeland(), QQ);
  return n;
}
}  // namespace

TEST_CASE("orbit quiver vertex counts") {
  CHECK(exa2().oq.numNonSigma == 6);
  CHECK(exa2().oq.verts.size() == 10);
  CHECK(exa1().oq.numNonSigma == 6);
  CHECK(exa1().oq.verts.size() == 9);
  CHECK(a1b().oq.numNonSigma == 2);
  CHECK(a1b().oq.verts.size() == 4);
}

TEST_CASE("sigma vertex count is n|Q_0| for the shifted-simples configuration") {
  CHECK(exa2().cOrbits.size() == 4);
  NakCats<RationalField> n3(DynkinQuiver::standard(DynkinType::A, 1), AutoSpec::sigmaPower(3),
                            ConfigSpec::bridgeland(), QQ);
  CHECK(n3.cOrbits.size() == 3);
  CHECK(n3.oq.verts.size() == 3 + 3 * 1);
}

TEST_CASE("configuration checks") {
  auto& cat = exa2().mod;
  CHECK(checkConfiguration(cat, AutoSpec::sigmaPower(2), exa2().cOrbits).ok);
  CHECK_FALSE(checkConfiguration(cat, AutoSpec::sigmaPower(2), {}).ok);
  // only the shifts of S_1 for the forward A_2 orientation: not a configuration
  auto cl = configClosure(cat, AutoSpec::sigmaPower(2),
                          ConfigSpec::explicitSeeds({{cat.simple(0), 0}, {cat.simple(0), 1}}));
  auto rep = checkConfiguration(cat, AutoSpec::sigmaPower(2), cl);
  CHECK_FALSE(rep.ok);
  CHECK(rep.witness.has_value());
}

TEST_CASE("A_1 singular quiver is a two-cycle with both length-2 paths as relations") {
  auto& n = a1b();
  REQUIRE(n.numS() == 2);
  REQUIRE(n.S.arrows.size() == 2);
  CHECK(n.S.arrows[0].src != n.S.arrows[0].tgt);
  CHECK(n.S.arrows[1].src == n.S.arrows[0].tgt);
  CHECK(n.S.arrows[1].tgt == n.S.arrows[0].src);
  REQUIRE(n.S.rels.size() == 2);
  for (auto& r : n.S.rels) {
    CHECK(r.terms.size() == 1);
    CHECK(r.terms[0].second.size() == 2);
  }
}

TEST_CASE("exa2 singular quiver has 4 vertices and 6 arrows") {
  auto& n = exa2();
  CHECK(n.numS() == 4);
  CHECK(n.S.arrows.size() == 6);
}

TEST_CASE("exa1 singular quiver is the 3-cycle with rad^3 = 0") {
  // The category of projectives over the regular category has 9
  // indecomposables (one per vertex), so the singular algebra must have 9
  // indecomposables as well: the 3-cycle Nakayama algebra with all length-3
  // paths as relations, not length-2.
  auto& n = exa1();
  REQUIRE(n.numS() == 3);
  REQUIRE(n.S.arrows.size() == 3);
  // arrows form a single 3-cycle
  std::vector<int> outdeg(3, 0), indeg(3, 0);
  for (auto& a : n.S.arrows) {
    outdeg[a.src]++;
    indeg[a.tgt]++;
    CHECK(a.src != a.tgt);
  }
  CHECK(outdeg == std::vector<int>{1, 1, 1});
  CHECK(indeg == std::vector<int>{1, 1, 1});
  REQUIRE(n.S.rels.size() == 3);
  for (auto& r : n.S.rels) {
    CHECK(r.terms.size() == 1);
    CHECK(r.terms[0].second.size() == 3);
  }
}

TEST_CASE("representables satisfy the relations and Yoneda") {
  auto& n = exa2();
  for (int x = 0; x < static_cast<int>(n.oq.verts.size()); ++x) {
    auto m = n.reprR(x);
    CHECK(validateModule(m, QQ));
  }
  for (int si = 0; si < n.numS(); ++si) {
    auto m = n.reprS(si);
    CHECK(validateModule(m, QQ));
  }
  // Yoneda: dim Hom(x^, y^) = dim Hom(x, y) in R
  for (int x = 0; x < static_cast<int>(n.oq.verts.size()); ++x)
    for (int y = 0; y < static_cast<int>(n.oq.verts.size()); ++y) {
      auto mx = n.reprR(x), my = n.reprR(y);
      CHECK(homDimModules(mx, my, QQ) == n.R.homDim(x, y));
    }
}

TEST_CASE("graded hom dims are eventually zero and mesh ideal is homogeneous") {
  auto& n = exa2();
  CHECK(n.R.maxDegree() < 4 * (int)n.oq.verts.size() + 8);
  for (int x = 0; x < (int)n.oq.verts.size(); ++x)
    for (int y = 0; y < (int)n.oq.verts.size(); ++y) {
      auto g = n.R.gradedDims(x, y);
      (void)g;
    }
}

TEST_CASE("exa2 sigma representable dimensions") {
  auto& n = exa2();
  // sigma(c)^ has value 1 at its own vertex; the four projective S-modules
  // have total dimensions {2,2,4,4}, matching the presented algebra
  std::vector<int> dims;
  for (int si = 0; si < n.numS(); ++si) {
    auto rep = n.reprS(si);
    CHECK(rep.dims[si] == 1);
    dims.push_back(rep.totalDim());
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{2, 2, 4, 4});
}

TEST_CASE("exa2 relation ideal matches the reference presentation") {
  auto& n = exa2();
  auto computed = toRefPresentation(n.S, QQ);
  auto reference = referenceA2TwoPeriodicS(QQ);
  CHECK(presentationsGradedIsomorphic(computed, reference, QQ));
  // and it is NOT the 3-cycle reference
  CHECK_FALSE(presentationsGradedIsomorphic(computed, referenceThreeCycleRadSquare(QQ), QQ));
}

TEST_CASE("quotient category dims match orbit-category hom sums") {
  auto& n = exa2();
  auto& cat = n.mod;
  int window = 10;
  for (int x = 0; x < n.oq.numNonSigma; ++x)
    for (int y = 0; y < n.oq.numNonSigma; ++y) {
      int expect = 0;
      for (int i = -window; i <= window; ++i)
        expect += derivedHomDim(cat, n.oq.verts[x].obj,
                                applyAuto(cat, n.fspec, n.oq.verts[y].obj, i));
      CHECK(n.P.dim(x, y) == expect);
    }
}

TEST_CASE("exa1 singular category is self-injective") {
  // 3-cycle Nakayama with rad^3 = 0: projectives are uniserial of length 3
  auto& n = exa1();
  // every projective S-module has simple socle (and Ext^1(simples, proj) = 0
  // is checked in the stratification tests); for the 3-cycle modulo paths of
  // length two the projectives are 2-dimensional with 1-dimensional socle
  for (int si = 0; si < n.numS(); ++si) {
    auto p = n.reprS(si);
    CHECK(p.totalDim() == 3);
    auto soc = socleDims(p, QQ);
    int tot = 0;
    for (int v = 0; v < n.numS(); ++v) tot += soc[v];
    CHECK(tot == 1);
  }
}
