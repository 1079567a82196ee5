#pragma once

#include "qhall/linalg.hpp"

#include <map>
#include <vector>

namespace qhall {

// Path category of a finite quiver modulo a homogeneous ideal, computed degree
// by degree. Hom spaces are built as quotients of (basis at degree d) x
// (arrows); relation generators of degree g enter at every degree >= g via
// left multiples. Terminates at the first globally empty degree, which is
// correct for algebras generated in degree one.
template <class F>
class GradedCategory {
 public:
  using Elem = typename F::Elem;
  using Vec = std::map<int, Elem>;  // sparse over basis ids

  struct Relation {
    int src = 0, tgt = 0;
    std::vector<std::pair<Elem, std::vector<int>>> terms;  // (coeff, arrow id sequence)
  };
  struct BasisElt {
    int x, y, deg;
    int prev;  // basis id of the length-(deg-1) prefix, -1 for identities
    int via;   // arrow id appended, -1 for identities
  };

  GradedCategory() = default;

  GradedCategory(int nv, std::vector<std::pair<int, int>> arrows, std::vector<Relation> rels,
                 int degreeCap, const F& field)
      : nv_(nv), arrows_(std::move(arrows)), field_(field) {
    for (const auto& r : rels) {
      if (r.terms.empty()) continue;
      size_t len = r.terms[0].second.size();
      if (len < 1) throw ConfigError("empty relation path");
      for (auto& [c, seq] : r.terms)
        if (seq.size() != len) throw ConfigError("inhomogeneous relation");
      relsByTgt_[r.tgt].push_back(r);
    }
    build(degreeCap);
  }

  int numVertices() const { return nv_; }
  int numBasis() const { return static_cast<int>(basis_.size()); }
  const BasisElt& basis(int id) const { return basis_[id]; }
  int identityElt(int v) const { return v; }
  int arrowElt(int a) const { return arrowBasis_[a]; }
  int maxDegree() const { return maxDeg_; }

  const std::vector<int>& basisAt(int x, int y) const { return at_[x * nv_ + y]; }
  int homDim(int x, int y) const { return static_cast<int>(basisAt(x, y).size()); }
  std::vector<int> gradedDims(int x, int y) const {
    std::vector<int> d(maxDeg_ + 1, 0);
    for (int id : basisAt(x, y)) d[basis_[id].deg]++;
    return d;
  }
  long long totalDim() const { return static_cast<long long>(basis_.size()); }

  // right multiplication by an arrow: expansion of b * a in the basis
  const std::vector<std::pair<int, Elem>>& mult(int b, int a) const {
    auto it = mult_.find({b, a});
    if (it == mult_.end()) {
      static const std::vector<std::pair<int, Elem>> empty;
      return empty;
    }
    return it->second;
  }

  // compose f: x -> y with g: y -> z (path order: f then g)
  Vec composeBasis(int f, int g) const {
    const auto& gb = basis_[g];
    if (gb.deg == 0) return Vec{{f, field_.one()}};
    Vec pre = composeBasis(f, gb.prev);
    Vec out;
    for (auto& [h, c] : pre)
      for (auto& [r, c2] : mult(h, gb.via)) {
        auto v = field_.mul(c, c2);
        auto it = out.find(r);
        if (it == out.end()) out[r] = v;
        else {
          it->second = field_.add(it->second, v);
          if (field_.isZero(it->second)) out.erase(it);
        }
      }
    return out;
  }

  Vec compose(const Vec& f, const Vec& g) const {
    Vec out;
    for (auto& [fb, fc] : f)
      for (auto& [gb, gc] : g) {
        Vec part = composeBasis(fb, gb);
        auto c = field_.mul(fc, gc);
        for (auto& [r, rc] : part) {
          auto v = field_.mul(c, rc);
          auto it = out.find(r);
          if (it == out.end()) out[r] = v;
          else {
            it->second = field_.add(it->second, v);
            if (field_.isZero(it->second)) out.erase(it);
          }
        }
      }
    return out;
  }

  const F& field() const { return field_; }

 private:
  int nv_ = 0;
  std::vector<std::pair<int, int>> arrows_;
  F field_;
  std::vector<BasisElt> basis_;
  std::vector<std::vector<int>> at_;  // [x*nv+y] -> basis ids
  std::vector<std::vector<std::vector<int>>> byDeg_;  // [deg][x*nv+y] -> basis ids
  std::map<int, std::vector<Relation>> relsByTgt_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Elem>>> mult_;
  std::vector<int> arrowBasis_;
  int maxDeg_ = 0;

  int addBasis(int x, int y, int deg, int prev, int via) {
    int id = static_cast<int>(basis_.size());
    basis_.push_back({x, y, deg, prev, via});
    at_[x * nv_ + y].push_back(id);
    byDeg_[deg][x * nv_ + y].push_back(id);
    return id;
  }

  void build(int degreeCap) {
    at_.assign(nv_ * nv_, {});
    byDeg_.assign(1, std::vector<std::vector<int>>(nv_ * nv_));
    for (int v = 0; v < nv_; ++v) addBasis(v, v, 0, -1, -1);
    arrowBasis_.assign(arrows_.size(), -1);

    for (int deg = 1;; ++deg) {
      if (deg > degreeCap)
        throw ComputeError("degree cap exceeded; category is not Hom-finite as configured");
      byDeg_.push_back(std::vector<std::vector<int>>(nv_ * nv_));
      bool any = false;
      for (int x = 0; x < nv_; ++x)
        for (int z = 0; z < nv_; ++z)
          if (buildSlice(x, z, deg)) any = true;
      if (!any) {
        byDeg_.pop_back();
        maxDeg_ = deg - 1;
        break;
      }
      maxDeg_ = deg;
    }
  }

  // Construct degree-deg basis of Hom(x,z); returns true if nonempty.
  bool buildSlice(int x, int z, int deg) {
    // formal coordinates (b, a) with b of degree deg-1 ending at src(a), a -> z
    std::vector<std::pair<int, int>> coords;
    std::map<std::pair<int, int>, int> coordIndex;
    for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
      if (arrows_[a].second != z) continue;
      int y = arrows_[a].first;
      for (int b : byDeg_[deg - 1][x * nv_ + y]) {
        coordIndex[{b, a}] = static_cast<int>(coords.size());
        coords.push_back({b, a});
      }
    }
    if (coords.empty()) return false;

    // relation rows: left multiples b0 * r landing in this slice
    std::vector<std::vector<Elem>> rows;
    auto rit = relsByTgt_.find(z);
    if (rit != relsByTgt_.end()) {
      for (const auto& r : rit->second) {
        int g = static_cast<int>(r.terms[0].second.size());
        if (g > deg) continue;
        for (int b0 : byDeg_[deg - g][x * nv_ + r.src]) {
          std::vector<Elem> row(coords.size(), field_.zero());
          bool nonzero = false;
          for (auto& [c, seq] : r.terms) {
            Vec cur{{b0, field_.one()}};
            for (size_t k = 0; k + 1 < seq.size(); ++k) {
              Vec next;
              for (auto& [b, bc] : cur)
                for (auto& [rr, rc] : mult(b, seq[k])) {
                  auto v = field_.mul(bc, rc);
                  auto it = next.find(rr);
                  if (it == next.end()) next[rr] = v;
                  else {
                    it->second = field_.add(it->second, v);
                    if (field_.isZero(it->second)) next.erase(it);
                  }
                }
              cur = std::move(next);
            }
            int last = seq.back();
            for (auto& [b, bc] : cur) {
              auto ci = coordIndex.find({b, last});
              if (ci == coordIndex.end()) throw ComputeError("relation path leaves the slice");
              row[ci->second] = field_.add(row[ci->second], field_.mul(c, bc));
              nonzero = true;
            }
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }

    std::vector<int> pivots;
    Mat<F> rm(static_cast<int>(rows.size()), static_cast<int>(coords.size()), field_);
    if (!rows.empty()) {
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < coords.size(); ++j)
          rm.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
      pivots = rref(rm, field_);
    }
    std::vector<bool> isPivot(coords.size(), false);
    for (int p : pivots) isPivot[p] = true;

    // non-pivot coordinates become basis elements
    std::vector<int> coordBasis(coords.size(), -1);
    bool created = false;
    for (size_t ci = 0; ci < coords.size(); ++ci) {
      if (isPivot[ci]) continue;
      auto [b, a] = coords[ci];
      coordBasis[ci] = addBasis(x, z, deg, b, a);
      if (deg == 1 && basis_[b].deg == 0) arrowBasis_[a] = coordBasis[ci];
      created = true;
    }
    // right-multiplication expansions for every coordinate
    for (size_t ci = 0; ci < coords.size(); ++ci) {
      std::vector<std::pair<int, Elem>> exp;
      if (!isPivot[ci]) {
        exp.push_back({coordBasis[ci], field_.one()});
      } else {
        // find the rref row whose pivot is ci
        int rowIdx = -1;
        for (size_t r = 0; r < pivots.size(); ++r)
          if (pivots[r] == static_cast<int>(ci)) rowIdx = static_cast<int>(r);
        for (size_t j = 0; j < coords.size(); ++j) {
          if (j == ci || isPivot[j]) continue;
          auto c = rm.at(rowIdx, static_cast<int>(j));
          if (!field_.isZero(c)) exp.push_back({coordBasis[j], field_.neg(c)});
        }
      }
      mult_[{coords[ci].first, coords[ci].second}] = std::move(exp);
    }
    return created;
  }
};

}  // namespace qhall
