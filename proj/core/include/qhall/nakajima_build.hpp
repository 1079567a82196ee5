#pragma once

#include "qhall/nakajima.hpp"
#include "qhall/smodule.hpp"

#include <memory>

namespace qhall {

// Everything derived from a choice of (Q, F, C) over one coefficient field:
// the module category, the orbit quiver, graded Hom spaces of R, the
// presentation of S, and the quotient presentation of P = R/<S>.
template <class F>
class NakCats {
 public:
  using Vec = typename GradedCategory<F>::Vec;

  DynkinQuiver Q;
  AutoSpec fspec;
  F field;
  ModuleCategory<F> mod;
  std::vector<DerivedObject> cOrbits;
  OrbitQuiver oq;
  GradedCategory<F> R;
  SPres<F> S;
  PQuot<F> P;
  PresQuiver<F> presR, presS;

  NakCats(const DynkinQuiver& q, const AutoSpec& fs, const ConfigSpec& cs, const F& fld,
          int degreeCap = 0)
      : Q(q), fspec(fs), field(fld), mod(q, fld) {
    auto asr = checkAssumption(mod, fspec);
    if (!asr.holds) throw ConfigError("automorphism fails the Ext-vanishing assumption");
    cOrbits = configClosure(mod, fspec, cs);
    auto crep = checkConfiguration(mod, fspec, cOrbits);
    if (!crep.ok) throw ConfigError("invalid configuration: " + crep.message);
    oq = buildOrbitQuiver(mod, fspec, cOrbits);
    int cap = degreeCap > 0 ? degreeCap : 4 * static_cast<int>(oq.verts.size()) + 8;
    std::vector<std::pair<int, int>> arrowPairs;
    for (auto& a : oq.arrows) arrowPairs.push_back({a.src, a.tgt});
    R = GradedCategory<F>(static_cast<int>(oq.verts.size()), arrowPairs,
                          meshRelations<F>(oq, field), cap, field);
    buildPresR();
    extractS(cap);
    buildPresS();
    buildP();
  }

  int numS() const { return static_cast<int>(S.sVerts.size()); }
  int sVertex(int si) const { return S.sVerts[si]; }

  // ---- representables ----

  // position of basis id within basisAt(x,y)
  int basisPos(int x, int y, int id) const {
    const auto& list = R.basisAt(x, y);
    for (size_t k = 0; k < list.size(); ++k)
      if (list[k] == id) return static_cast<int>(k);
    throw ComputeError("basis element not found");
  }

  Mat<F> actionMatrix(const Vec& left, int midSrc, int midTgt, int target) const {
    // matrix of f -> left * f : Hom(midTgt, target) -> Hom(midSrc, target)
    const auto& dom = R.basisAt(midTgt, target);
    const auto& cod = R.basisAt(midSrc, target);
    Mat<F> m(static_cast<int>(cod.size()), static_cast<int>(dom.size()), field);
    for (size_t c = 0; c < dom.size(); ++c) {
      Vec g{{dom[c], field.one()}};
      Vec r = R.compose(left, g);
      for (auto& [id, coeff] : r) m.at(basisPos(midSrc, target, id), static_cast<int>(c)) = coeff;
    }
    return m;
  }

  // x^: the representable R-module at an orbit-quiver vertex
  ModuleRep<F> reprR(int x) const {
    ModuleRep<F> m;
    m.pq = &presR;
    m.dims.resize(presR.nv);
    for (int y = 0; y < presR.nv; ++y) m.dims[y] = R.homDim(y, x);
    for (size_t a = 0; a < presR.arrows.size(); ++a) {
      auto [u, v] = presR.arrows[a];
      Vec av{{R.arrowElt(static_cast<int>(a)), field.one()}};
      m.arr.push_back(actionMatrix(av, u, v, x));
    }
    return m;
  }

  // res x^: restriction of the representable to the sigma vertices
  ModuleRep<F> resReprR(int x) const {
    ModuleRep<F> m;
    m.pq = &presS;
    m.dims.resize(presS.nv);
    for (int si = 0; si < presS.nv; ++si) m.dims[si] = R.homDim(S.sVerts[si], x);
    for (size_t a = 0; a < presS.arrows.size(); ++a) {
      const auto& sa = S.arrows[a];
      Vec av{{sa.lift, field.one()}};
      m.arr.push_back(actionMatrix(av, S.sVerts[sa.src], S.sVerts[sa.tgt], x));
    }
    return m;
  }

  // sigma(c)^ as an S-module (the projective S-module at c)
  ModuleRep<F> reprS(int si) const { return resReprR(S.sVerts[si]); }

  ModuleRep<F> simpleS(int si) const { return simpleModule(presS, si, field); }

  // dims of the P-representable x_P^ (x non-sigma)
  std::vector<int> pReprDims(int x) const {
    std::vector<int> d(oq.numNonSigma, 0);
    for (int y = 0; y < oq.numNonSigma; ++y) d[y] = P.dim(y, x);
    return d;
  }

 private:
  void buildPresR() {
    presR.nv = static_cast<int>(oq.verts.size());
    for (auto& a : oq.arrows) presR.arrows.push_back({a.src, a.tgt});
    for (const auto& mesh : oq.meshes) {
      if (mesh.paths.empty()) continue;
      typename PresQuiver<F>::Rel rel;
      rel.tgt = mesh.vertex;
      rel.src = oq.arrows[mesh.paths[0].first].src;
      for (auto [a1, a2] : mesh.paths)
        rel.terms.push_back({field.one(), std::vector<int>{a1, a2}});
      presR.rels.push_back(std::move(rel));
    }
  }

  void buildPresS() {
    presS.nv = numS();
    for (auto& a : S.arrows) presS.arrows.push_back({a.src, a.tgt});
    for (auto& r : S.rels) {
      typename PresQuiver<F>::Rel rel;
      rel.src = r.src;
      rel.tgt = r.tgt;
      rel.terms = r.terms;
      presS.rels.push_back(std::move(rel));
    }
  }

  void extractS(int cap);
  void buildP();
};

// ---- S presentation extraction ----

template <class F>
void NakCats<F>::extractS(int cap) {
  for (int v = 0; v < static_cast<int>(oq.verts.size()); ++v)
    if (oq.verts[v].sigma) S.sVerts.push_back(v);
  std::sort(S.sVerts.begin(), S.sVerts.end());
  S.sIndexOfVertex.assign(oq.verts.size(), -1);
  for (size_t i = 0; i < S.sVerts.size(); ++i) S.sIndexOfVertex[S.sVerts[i]] = static_cast<int>(i);
  const int ns = numS();

  // positive-degree basis (the radical) per ordered pair
  auto radIds = [&](int i, int j) {
    std::vector<int> ids;
    for (int id : R.basisAt(S.sVerts[i], S.sVerts[j]))
      if (R.basis(id).deg > 0) ids.push_back(id);
    return ids;
  };

  // arrows: complement of rad^2 inside rad
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      auto ids = radIds(i, j);
      if (ids.empty()) continue;
      std::map<int, int> pos;
      for (size_t k = 0; k < ids.size(); ++k) pos[ids[k]] = static_cast<int>(k);
      std::vector<std::vector<typename F::Elem>> rows;
      for (int k = 0; k < ns; ++k) {
        for (int fId : radIds(i, k))
          for (int gId : radIds(k, j)) {
            Vec comp = R.composeBasis(fId, gId);
            if (comp.empty()) continue;
            std::vector<typename F::Elem> row(ids.size(), field.zero());
            for (auto& [id, c] : comp) row[pos.at(id)] = c;
            rows.push_back(std::move(row));
          }
      }
      Mat<F> m(static_cast<int>(rows.size()), static_cast<int>(ids.size()), field);
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < ids.size(); ++c)
          m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
      auto pivots = rref(m, field);
      std::vector<bool> isPivot(ids.size(), false);
      for (int p : pivots) isPivot[p] = true;
      for (size_t k = 0; k < ids.size(); ++k) {
        if (isPivot[k]) continue;
        typename SPres<F>::SArrow a;
        a.src = i;
        a.tgt = j;
        a.lift = ids[k];
        a.label = [&] {
          int idx = static_cast<int>(S.arrows.size());
          std::string l(1, static_cast<char>('a' + idx % 26));
          if (idx >= 26) l += std::to_string(idx / 26);
          return l;
        }();
        S.arrows.push_back(a);
      }
    }

  // relation discovery by evaluating Q_S paths into S, length by length
  const int na = static_cast<int>(S.arrows.size());
  struct QB {
    int i, j, len;
    int prev, via;  // prev QB id (or -1 for identity), arrow appended
    Vec ev;
  };
  std::vector<QB> qb;
  std::vector<std::vector<std::vector<int>>> qbByLen;  // [len][i*ns+j] -> qb ids
  qbByLen.push_back(std::vector<std::vector<int>>(ns * ns));
  for (int i = 0; i < ns; ++i) {
    qb.push_back({i, i, 0, -1, -1, Vec{{R.identityElt(S.sVerts[i]), field.one()}}});
    qbByLen[0][i * ns + i].push_back(static_cast<int>(qb.size()) - 1);
  }
  std::map<std::pair<int, int>, std::vector<std::pair<int, typename F::Elem>>> qmult;
  auto pathOf = [&](int id) {
    std::vector<int> p;
    while (qb[id].prev >= 0) {
      p.push_back(qb[id].via);
      id = qb[id].prev;
    }
    std::reverse(p.begin(), p.end());
    return p;
  };
  // discovered relation coordinate data per (i,j,len) for ideal tracking
  for (int len = 1; len <= cap + 1; ++len) {
    qbByLen.push_back(std::vector<std::vector<int>>(ns * ns));
    bool any = false;
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j) {
        // coordinates (b, alpha) with alpha: k -> j
        std::vector<std::pair<int, int>> coords;
        std::map<std::pair<int, int>, int> coordIndex;
        for (int a = 0; a < na; ++a) {
          if (S.arrows[a].tgt != j) continue;
          for (int b : qbByLen[len - 1][i * ns + S.arrows[a].src]) {
            coordIndex[{b, a}] = static_cast<int>(coords.size());
            coords.push_back({b, a});
          }
        }
        if (coords.empty()) continue;
        // evaluation matrix: coords -> Hom_S coordinates
        const auto& homList = R.basisAt(S.sVerts[i], S.sVerts[j]);
        std::map<int, int> homPos;
        for (size_t k = 0; k < homList.size(); ++k) homPos[homList[k]] = static_cast<int>(k);
        std::vector<Vec> evs(coords.size());
        Mat<F> E(static_cast<int>(coords.size()), static_cast<int>(homList.size()), field);
        for (size_t ci = 0; ci < coords.size(); ++ci) {
          auto [b, a] = coords[ci];
          Vec lift{{S.arrows[a].lift, field.one()}};
          evs[ci] = R.compose(qb[b].ev, lift);
          for (auto& [id, c] : evs[ci]) E.at(static_cast<int>(ci), homPos.at(id)) = c;
        }
        // kernel of the evaluation on this slice
        auto K = nullspaceBasis(E.transpose(field), field);
        // span of lifted known relations
        std::vector<std::vector<typename F::Elem>> idealRows;
        for (const auto& rel : S.rels) {
          if (rel.tgt != j) continue;
          int g = static_cast<int>(rel.terms[0].second.size());
          if (g > len) continue;
          for (int b0 : qbByLen[len - g][i * ns + rel.src]) {
            std::vector<typename F::Elem> row(coords.size(), field.zero());
            bool nz = false;
            for (auto& [c, seq] : rel.terms) {
              std::map<int, typename F::Elem> cur{{b0, field.one()}};
              for (size_t k = 0; k + 1 < seq.size(); ++k) {
                std::map<int, typename F::Elem> next;
                for (auto& [b, bc] : cur)
                  for (auto& [r2, rc] : qmult[{b, seq[k]}]) {
                    auto v = field.mul(bc, rc);
                    auto it = next.find(r2);
                    if (it == next.end()) next[r2] = v;
                    else {
                      it->second = field.add(it->second, v);
                      if (field.isZero(it->second)) next.erase(it);
                    }
                  }
                cur = std::move(next);
              }
              for (auto& [b, bc] : cur) {
                auto it = coordIndex.find({b, seq.back()});
                if (it == coordIndex.end()) throw ComputeError("relation multiple leaves slice");
                row[it->second] = field.add(row[it->second], field.mul(c, bc));
                nz = true;
              }
            }
            if (nz) idealRows.push_back(std::move(row));
          }
        }
        Mat<F> ideal(static_cast<int>(idealRows.size()), static_cast<int>(coords.size()), field);
        for (size_t r = 0; r < idealRows.size(); ++r)
          for (size_t c = 0; c < coords.size(); ++c)
            ideal.at(static_cast<int>(r), static_cast<int>(c)) = idealRows[r][c];
        auto idealPiv = rref(ideal, field);
        // new relation generators: kernel elements outside the known ideal
        for (auto& kv : K) {
          auto red = detail::reduceByRows<F>(kv, ideal, idealPiv, field);
          bool zero = true;
          for (auto& c : red)
            if (!field.isZero(c)) zero = false;
          if (zero) continue;
          typename SPres<F>::SRel rel;
          rel.src = i;
          rel.tgt = j;
          for (size_t ci = 0; ci < coords.size(); ++ci) {
            if (field.isZero(red[ci])) continue;
            auto p = pathOf(coords[ci].first);
            p.push_back(coords[ci].second);
            rel.terms.push_back({red[ci], p});
          }
          S.rels.push_back(rel);
          // absorb into the ideal span
          Mat<F> ext(ideal.rows + 1, ideal.cols, field);
          for (int r = 0; r < ideal.rows; ++r)
            for (int c = 0; c < ideal.cols; ++c) ext.at(r, c) = ideal.at(r, c);
          for (size_t c = 0; c < red.size(); ++c) ext.at(ideal.rows, static_cast<int>(c)) = red[c];
          ideal = std::move(ext);
          idealPiv = rref(ideal, field);
        }
        // quotient by the kernel: new QB elements at non-pivot coordinates
        Mat<F> km(static_cast<int>(K.size()), static_cast<int>(coords.size()), field);
        for (size_t r = 0; r < K.size(); ++r)
          for (size_t c = 0; c < coords.size(); ++c)
            km.at(static_cast<int>(r), static_cast<int>(c)) = K[r][c];
        auto kPiv = rref(km, field);
        std::vector<bool> isPivot(coords.size(), false);
        for (int p : kPiv) isPivot[p] = true;
        std::vector<int> coordQb(coords.size(), -1);
        for (size_t ci = 0; ci < coords.size(); ++ci) {
          if (isPivot[ci]) continue;
          qb.push_back({i, j, len, coords[ci].first, coords[ci].second, evs[ci]});
          int id = static_cast<int>(qb.size()) - 1;
          qbByLen[len][i * ns + j].push_back(id);
          coordQb[ci] = id;
          any = true;
        }
        for (size_t ci = 0; ci < coords.size(); ++ci) {
          std::vector<std::pair<int, typename F::Elem>> exp;
          if (!isPivot[ci]) exp.push_back({coordQb[ci], field.one()});
          else {
            int rowIdx = -1;
            for (size_t r = 0; r < kPiv.size(); ++r)
              if (kPiv[r] == static_cast<int>(ci)) rowIdx = static_cast<int>(r);
            for (size_t c2 = 0; c2 < coords.size(); ++c2) {
              if (isPivot[c2]) continue;
              auto v = km.at(rowIdx, static_cast<int>(c2));
              if (!field.isZero(v)) exp.push_back({coordQb[c2], field.neg(v)});
            }
          }
          qmult[{coords[ci].first, coords[ci].second}] = std::move(exp);
        }
      }
    if (!any) break;
    if (len > cap) throw ComputeError("S-presentation extraction exceeded degree cap");
  }

  // the Q_S path category must reproduce every Hom_S dimension exactly
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      int got = 0;
      for (size_t l = 0; l < qbByLen.size(); ++l) got += static_cast<int>(qbByLen[l][i * ns + j].size());
      if (got != R.homDim(S.sVerts[i], S.sVerts[j]))
        throw ComputeError("S relation extraction incomplete (dimension mismatch)");
    }
}

template <class F>
void NakCats<F>::buildP() {
  const int nv = static_cast<int>(oq.verts.size());
  P.nv = nv;
  P.slices.resize(nv * nv);
  for (int x = 0; x < oq.numNonSigma; ++x)
    for (int y = 0; y < oq.numNonSigma; ++y) {
      auto& slice = P.slices[x * nv + y];
      slice.rBasis = R.basisAt(x, y);
      std::map<int, int> pos;
      for (size_t k = 0; k < slice.rBasis.size(); ++k) pos[slice.rBasis[k]] = static_cast<int>(k);
      std::vector<std::vector<typename F::Elem>> rows;
      for (int sv : S.sVerts)
        for (int fId : R.basisAt(x, sv))
          for (int gId : R.basisAt(sv, y)) {
            Vec comp = R.composeBasis(fId, gId);
            if (comp.empty()) continue;
            std::vector<typename F::Elem> row(slice.rBasis.size(), field.zero());
            for (auto& [id, c] : comp) row[pos.at(id)] = c;
            rows.push_back(std::move(row));
          }
      Mat<F> m(static_cast<int>(rows.size()), static_cast<int>(slice.rBasis.size()), field);
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < slice.rBasis.size(); ++c)
          m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
      slice.pivots = rref(m, field);
      slice.reducer = rowSpaceBasis(m, field);
      std::vector<bool> isPivot(slice.rBasis.size(), false);
      for (int p : slice.pivots) isPivot[p] = true;
      for (size_t k = 0; k < slice.rBasis.size(); ++k)
        if (!isPivot[k]) slice.freeIdx.push_back(static_cast<int>(k));
    }
}

}  // namespace qhall
