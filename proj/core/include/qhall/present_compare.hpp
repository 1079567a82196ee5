#pragma once

#include "qhall/graded_cat.hpp"
#include "qhall/nakajima_build.hpp"

#include <algorithm>
#include <vector>

namespace qhall {

// A quiver-with-relations given abstractly, for comparing a computed
// presentation against a hand-written reference.
template <class F>
struct RefPresentation {
  int nv = 0;
  std::vector<std::pair<int, int>> arrows;
  std::vector<typename GradedCategory<F>::Relation> rels;
};

// Graded dimension table of the path category modulo the relations:
// entry [x][y] lists dim by path-length degree (trailing zeros trimmed).
template <class F>
std::vector<std::vector<std::vector<int>>> gradedDimTable(const RefPresentation<F>& p,
                                                          const F& field, int cap = 64) {
  GradedCategory<F> cat(p.nv, p.arrows, p.rels, cap, field);
  std::vector<std::vector<std::vector<int>>> t(p.nv, std::vector<std::vector<int>>(p.nv));
  for (int x = 0; x < p.nv; ++x)
    for (int y = 0; y < p.nv; ++y) {
      auto d = cat.gradedDims(x, y);
      while (!d.empty() && d.back() == 0) d.pop_back();
      t[x][y] = d;
    }
  return t;
}

template <class F>
RefPresentation<F> toRefPresentation(const SPres<F>& s, const F& field) {
  RefPresentation<F> p;
  p.nv = static_cast<int>(s.sVerts.size());
  for (auto& a : s.arrows) p.arrows.push_back({a.src, a.tgt});
  for (auto& r : s.rels) {
    typename GradedCategory<F>::Relation rel;
    rel.src = r.src;
    rel.tgt = r.tgt;
    rel.terms = r.terms;
    p.rels.push_back(std::move(rel));
  }
  return p;
}

// True when some vertex bijection makes the graded dimension tables of the
// two presented categories agree (so the relation ideals cut out isomorphic
// graded quotients).
template <class F>
bool presentationsGradedIsomorphic(const RefPresentation<F>& a, const RefPresentation<F>& b,
                                   const F& field) {
  if (a.nv != b.nv || a.arrows.size() != b.arrows.size()) return false;
  auto ta = gradedDimTable(a, field);
  auto tb = gradedDimTable(b, field);
  std::vector<int> perm(a.nv);
  for (int i = 0; i < a.nv; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (int x = 0; x < a.nv && ok; ++x)
      for (int y = 0; y < a.nv && ok; ++y)
        if (ta[x][y] != tb[perm[x]][perm[y]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// The reference presentation of the singular category in the two-periodic
// A_2 example: four vertices, six arrows, six relations.
template <class F>
RefPresentation<F> referenceA2TwoPeriodicS(const F& field) {
  // vertices: 0 = sS1, 1 = sS2, 2 = sTS1, 3 = sTS2 (T = shift)
  // arrows: a: sTS1->sTS2, b: sS1->sS2, al: sS1->sTS1, al': sTS1->sS1,
  //         be: sTS2->sS2, be': sS2->sTS2
  RefPresentation<F> p;
  p.nv = 4;
  p.arrows = {{2, 3}, {0, 1}, {0, 2}, {2, 0}, {3, 1}, {1, 3}};
  enum { A = 0, B = 1, AL = 2, ALP = 3, BE = 4, BEP = 5 };
  auto one = field.one();
  auto rel = [&](int src, int tgt,
                 std::vector<std::pair<typename F::Elem, std::vector<int>>> terms) {
    typename GradedCategory<F>::Relation r;
    r.src = src;
    r.tgt = tgt;
    r.terms = std::move(terms);
    p.rels.push_back(std::move(r));
  };
  rel(0, 0, {{one, {AL, ALP}}});                              // al al'
  rel(2, 2, {{one, {ALP, AL}}});                              // al' al
  rel(3, 3, {{one, {BE, BEP}}});                              // be be'
  rel(1, 1, {{one, {BEP, BE}}});                              // be' be
  rel(0, 3, {{one, {AL, A}}, {field.neg(one), {B, BEP}}});    // al a - b be'
  rel(2, 1, {{one, {ALP, B}}, {field.neg(one), {A, BE}}});    // al' b - a be
  return p;
}

// The reference for the tau-orbit A_2 example as stated in the source text:
// the 3-cycle with all length-two paths as relations.
template <class F>
RefPresentation<F> referenceThreeCycleRadSquare(const F& field) {
  RefPresentation<F> p;
  p.nv = 3;
  p.arrows = {{0, 1}, {1, 2}, {2, 0}};
  auto one = field.one();
  for (int i = 0; i < 3; ++i) {
    typename GradedCategory<F>::Relation r;
    r.src = i;
    r.tgt = (i + 2) % 3;
    r.terms = {{one, {i, (i + 1) % 3}}};
    p.rels.push_back(std::move(r));
  }
  return p;
}

}  // namespace qhall
