#pragma once

#include "qhall/linalg.hpp"
#include "qhall/quiver.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace qhall {

// Element of the path algebra: a k-linear combination of parallel paths.
template <class F>
struct PathElt {
  std::vector<std::pair<int, typename F::Elem>> terms;  // (path id, coefficient)

  void add(int path, const typename F::Elem& c, const F& f) {
    for (auto& [p, v] : terms)
      if (p == path) {
        v = f.add(v, c);
        return;
      }
    terms.push_back({path, c});
  }
  void normalize(const F& f) {
    std::vector<std::pair<int, typename F::Elem>> out;
    std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (auto& [p, v] : terms) {
      if (!out.empty() && out.back().first == p) out.back().second = f.add(out.back().second, v);
      else out.push_back({p, v});
    }
    terms.clear();
    for (auto& [p, v] : out)
      if (!f.isZero(v)) terms.push_back({p, v});
  }
  bool empty() const { return terms.empty(); }
};

// A morphism between finite direct sums of indecomposable projectives
// oplus_c P_{col[c]} -> oplus_r P_{row[r]}; the (r,c) entry is a combination
// of paths row[r] -> col[c]. Composition is matrix product with path
// concatenation (second factor's paths on the left).
template <class F>
struct PathMat {
  std::vector<int> rowVertex, colVertex;
  std::vector<PathElt<F>> e;  // row-major, rows.size() x cols.size()

  PathMat() = default;
  PathMat(std::vector<int> rows, std::vector<int> cols)
      : rowVertex(std::move(rows)), colVertex(std::move(cols)),
        e(rowVertex.size() * colVertex.size()) {}

  int rows() const { return static_cast<int>(rowVertex.size()); }
  int cols() const { return static_cast<int>(colVertex.size()); }
  PathElt<F>& at(int r, int c) { return e[static_cast<size_t>(r) * colVertex.size() + c]; }
  const PathElt<F>& at(int r, int c) const {
    return e[static_cast<size_t>(r) * colVertex.size() + c];
  }
};

template <class F>
PathMat<F> pathMatMul(const PathMat<F>& x, const PathMat<F>& y, const Paths& paths, const F& f) {
  PathMat<F> z(x.rowVertex, y.colVertex);
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const auto& xe = x.at(i, k);
      if (xe.empty()) continue;
      for (int j = 0; j < y.cols(); ++j) {
        const auto& ye = y.at(k, j);
        for (auto& [p1, c1] : xe.terms)
          for (auto& [p2, c2] : ye.terms) z.at(i, j).add(paths.concat(p1, p2), f.mul(c1, c2), f);
      }
    }
  for (auto& el : z.e) el.normalize(f);
  return z;
}

template <class F>
bool pathMatIsZero(const PathMat<F>& x) {
  for (auto& el : x.e)
    if (!el.empty()) return false;
  return true;
}

// The category mod kQ for a Dynkin quiver over an exact field: complete list
// of indecomposables with representative matrices (knitted from the
// projectives up), Hom/Ext^1 dimension tables, the AR translation, AR
// sequence middle terms, and minimal projective presentations.
template <class F>
class ModuleCategory {
 public:
  struct Ind {
    std::vector<int> dim;
    std::vector<Mat<F>> mats;  // per arrow a: M(src a) -> M(tgt a)
    int projAt = -1, injAt = -1, simpleAt = -1;
    int tau = -1, tauInv = -1;
    std::vector<int> arMiddle;  // middle of the AR sequence ENDING here (non-projectives)
    std::vector<int> p0mult, p1mult;
    PathMat<F> presDiff;  // minimal presentation 0 -> P1 -> P0 -> M -> 0
    std::vector<int> topDim;
    std::string name;
  };

  ModuleCategory(const DynkinQuiver& q, const F& field) : Q(q), field_(field), paths_(q) {
    Q.validate();
    knit();
    computeTables();
    computePresentations();
  }

  const DynkinQuiver& quiver() const { return Q; }
  const Paths& paths() const { return paths_; }
  const F& field() const { return field_; }

  int size() const { return static_cast<int>(ind_.size()); }
  const Ind& ind(int i) const { return ind_[i]; }
  int homDim(int m, int n) const { return homDim_[m][n]; }
  int ext1Dim(int m, int n) const { return ext1Dim_[m][n]; }

  int projective(int vertex) const { return projId_[vertex]; }
  int injective(int vertex) const { return injId_[vertex]; }
  int simple(int vertex) const { return simpleId_[vertex]; }
  int byDim(const std::vector<int>& d) const {
    auto it = byDim_.find(d);
    if (it == byDim_.end()) throw ComputeError("no indecomposable with the given dimension vector");
    return it->second;
  }

  // multiset of indecomposable summands of rad P_i
  std::vector<int> radSummands(int vertex) const {
    std::vector<int> out;
    for (auto [s, t] : Q.arrows)
      if (s == vertex) out.push_back(projId_[t]);
    std::sort(out.begin(), out.end());
    return out;
  }
  // multiset of indecomposable summands of I_i / soc I_i
  std::vector<int> injQuotSummands(int vertex) const {
    std::vector<int> out;
    for (auto [s, t] : Q.arrows)
      if (t == vertex) out.push_back(injId_[s]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // dim Hom(M, N) for representations given explicitly
  int homDimOf(const std::vector<int>& dimM, const std::vector<Mat<F>>& matsM,
               const std::vector<int>& dimN, const std::vector<Mat<F>>& matsN) const {
    return static_cast<int>(homBasisOf(dimM, matsM, dimN, matsN).size());
  }

  // Basis of intertwiners M -> N: each element is one matrix per vertex.
  std::vector<std::vector<Mat<F>>> homBasisOf(const std::vector<int>& dimM,
                                              const std::vector<Mat<F>>& matsM,
                                              const std::vector<int>& dimN,
                                              const std::vector<Mat<F>>& matsN) const {
    const int n = Q.numVertices();
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + dimM[v] * dimN[v];
    const int unknowns = offset[n];
    std::vector<std::vector<typename F::Elem>> rows;
    for (int a = 0; a < Q.numArrows(); ++a) {
      auto [u, v] = Q.arrows[a];
      // condition: phi_v * M_a - N_a * phi_u = 0  (maps M(u) -> N(v))
      for (int i = 0; i < dimN[v]; ++i)
        for (int j = 0; j < dimM[u]; ++j) {
          std::vector<typename F::Elem> row(unknowns, field_.zero());
          for (int k = 0; k < dimM[v]; ++k) {
            // phi_v[i][k] * M_a[k][j]
            int idx = offset[v] + i * dimM[v] + k;
            row[idx] = field_.add(row[idx], matsM[a].at(k, j));
          }
          for (int k = 0; k < dimN[u]; ++k) {
            int idx = offset[u] + k * dimM[u] + j;
            row[idx] = field_.sub(row[idx], matsN[a].at(i, k));
          }
          rows.push_back(std::move(row));
        }
    }
    Mat<F> sys(static_cast<int>(rows.size()), unknowns, field_);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < unknowns; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    auto null = nullspaceBasis(sys, field_);
    std::vector<std::vector<Mat<F>>> basis;
    for (auto& vec : null) {
      std::vector<Mat<F>> phi;
      for (int v = 0; v < n; ++v) {
        Mat<F> m(dimN[v], dimM[v], field_);
        for (int i = 0; i < dimN[v]; ++i)
          for (int j = 0; j < dimM[v]; ++j) m.at(i, j) = vec[offset[v] + i * dimM[v] + j];
        phi.push_back(std::move(m));
      }
      basis.push_back(std::move(phi));
    }
    return basis;
  }

 private:
  DynkinQuiver Q;
  F field_;
  Paths paths_;
  std::vector<Ind> ind_;
  std::vector<int> projId_, injId_, simpleId_;
  std::map<std::vector<int>, int> byDim_;
  std::vector<std::vector<int>> homDim_, ext1Dim_;
  // irrIn[m]: (source module, per-vertex matrices of the irreducible map src -> m)
  std::vector<std::vector<std::pair<int, std::vector<Mat<F>>>>> irrIn_;
  // outMap[m]: (target module, matrices of the irreducible map m -> target)
  std::vector<std::vector<std::pair<int, std::vector<Mat<F>>>>> outMap_;

  std::vector<int> projectiveDim(int i) const {
    std::vector<int> d(Q.numVertices());
    for (int v = 0; v < Q.numVertices(); ++v)
      d[v] = static_cast<int>(paths_.byPair[i][v].size());
    return d;
  }
  std::vector<int> injectiveDim(int i) const {
    std::vector<int> d(Q.numVertices());
    for (int v = 0; v < Q.numVertices(); ++v)
      d[v] = static_cast<int>(paths_.byPair[v][i].size());
    return d;
  }

  int addModule(Ind m) {
    int id = static_cast<int>(ind_.size());
    byDim_[m.dim] = id;
    ind_.push_back(std::move(m));
    irrIn_.emplace_back();
    outMap_.emplace_back();
    return id;
  }

  void knit() {
    const int n = Q.numVertices();
    projId_.assign(n, -1);
    injId_.assign(n, -1);
    simpleId_.assign(n, -1);

    // the projectives, with path bases
    for (int i = 0; i < n; ++i) {
      Ind m;
      m.dim = projectiveDim(i);
      for (int a = 0; a < Q.numArrows(); ++a) {
        auto [u, v] = Q.arrows[a];
        Mat<F> ma(m.dim[v], m.dim[u], field_);
        for (int c = 0; c < m.dim[u]; ++c) {
          int p = paths_.byPair[i][u][c];
          int q = paths_.concat(p, paths_.arrowPath(a));
          auto& list = paths_.byPair[i][v];
          int r = static_cast<int>(std::find(list.begin(), list.end(), q) - list.begin());
          ma.at(r, c) = field_.one();
        }
        m.mats.push_back(std::move(ma));
      }
      m.projAt = i;
      m.name = "P" + std::to_string(i + 1);
      projId_[i] = addModule(std::move(m));
    }
    // irreducible maps between projectives: P_l -> P_j for each arrow a: j -> l,
    // given by prepending a
    for (int a = 0; a < Q.numArrows(); ++a) {
      auto [j, l] = Q.arrows[a];
      std::vector<Mat<F>> maps;
      for (int v = 0; v < n; ++v) {
        Mat<F> mv(ind_[projId_[j]].dim[v], ind_[projId_[l]].dim[v], field_);
        for (int c = 0; c < ind_[projId_[l]].dim[v]; ++c) {
          int p = paths_.byPair[l][v][c];
          int q = paths_.concat(paths_.arrowPath(a), p);
          auto& list = paths_.byPair[j][v];
          int r = static_cast<int>(std::find(list.begin(), list.end(), q) - list.begin());
          mv.at(r, c) = field_.one();
        }
        maps.push_back(std::move(mv));
      }
      irrIn_[projId_[j]].push_back({projId_[l], maps});
      outMap_[projId_[l]].push_back({projId_[j], std::move(maps)});
    }

    for (int i = 0; i < n; ++i) classifyModule(projId_[i]);

    // knit meshes until every non-injective module has been translated
    std::vector<bool> processed(ind_.size(), false);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int m = 0; m < static_cast<int>(ind_.size()); ++m) {
        if (processed[m] || ind_[m].injAt >= 0) continue;
        bool ready = true;
        for (auto& [src, mats] : irrIn_[m])
          if (ind_[src].tauInv < 0) ready = false;
        if (!ready) continue;
        processMesh(m);
        processed[m] = true;
        processed.resize(ind_.size(), false);
        progress = true;
      }
    }
    for (int m = 0; m < static_cast<int>(ind_.size()); ++m)
      if (ind_[m].injAt < 0 && ind_[m].tauInv < 0)
        throw ComputeError("knitting stalled; AR quiver incomplete");
    if (size() != DynkinQuiver::positiveRootCount(Q.type, Q.rank))
      throw ComputeError("indecomposable count does not match positive root count");
  }

  void processMesh(int m) {
    const int n = Q.numVertices();
    // E = direct sum over the irreducible maps out of m, in a fixed order.
    // Copy: addModule below grows the registries and would invalidate refs.
    std::sort(outMap_[m].begin(), outMap_[m].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    auto out = outMap_[m];
    std::vector<int> dimE(n, 0);
    for (auto& [tgt, mats] : out)
      for (int v = 0; v < n; ++v) dimE[v] += ind_[tgt].dim[v];

    auto& M = ind_[m];
    // stacked map g: M -> E and block arrow matrices of E
    std::vector<Mat<F>> g(n);
    std::vector<Mat<F>> Earr;
    for (int v = 0; v < n; ++v) {
      g[v] = Mat<F>(dimE[v], M.dim[v], field_);
      int off = 0;
      for (auto& [tgt, mats] : out) {
        for (int i = 0; i < ind_[tgt].dim[v]; ++i)
          for (int j = 0; j < M.dim[v]; ++j) g[v].at(off + i, j) = mats[v].at(i, j);
        off += ind_[tgt].dim[v];
      }
    }
    for (int a = 0; a < Q.numArrows(); ++a) {
      auto [u, v] = Q.arrows[a];
      Mat<F> ea(dimE[v], dimE[u], field_);
      int ro = 0, co = 0;
      for (auto& [tgt, mats] : out) {
        auto& T = ind_[tgt];
        for (int i = 0; i < T.dim[v]; ++i)
          for (int j = 0; j < T.dim[u]; ++j) ea.at(ro + i, co + j) = T.mats[a].at(i, j);
        ro += T.dim[v];
        co += T.dim[u];
      }
      Earr.push_back(std::move(ea));
    }
    for (int v = 0; v < n; ++v)
      if (matRank(g[v], field_) != M.dim[v])
        throw ComputeError("almost split map is not injective; knitting bug");

    // cokernel projections pi_v with pi g = 0
    std::vector<Mat<F>> pi(n);
    Ind N;
    N.dim.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      auto left = nullspaceBasis(g[v].transpose(field_), field_);
      N.dim[v] = static_cast<int>(left.size());
      Mat<F> pv(N.dim[v], dimE[v], field_);
      for (int i = 0; i < N.dim[v]; ++i)
        for (int j = 0; j < dimE[v]; ++j) pv.at(i, j) = left[i][j];
      pi[v] = std::move(pv);
    }
    // sections s_v with pi_v s_v = id
    std::vector<Mat<F>> sec(n);
    for (int v = 0; v < n; ++v) {
      Mat<F> sv(dimE[v], N.dim[v], field_);
      for (int c = 0; c < N.dim[v]; ++c) {
        std::vector<typename F::Elem> rhs(N.dim[v], field_.zero());
        rhs[c] = field_.one();
        auto sol = solveLinear(pi[v], rhs, field_);
        if (!sol) throw ComputeError("cokernel projection not surjective");
        for (int r = 0; r < dimE[v]; ++r) sv.at(r, c) = (*sol)[r];
      }
      sec[v] = std::move(sv);
    }
    for (int a = 0; a < Q.numArrows(); ++a) {
      auto [u, v] = Q.arrows[a];
      Mat<F> na = matMul(matMul(pi[v], Earr[a], field_), sec[u], field_);
      if (!matEq(matMul(na, pi[u], field_), matMul(pi[v], Earr[a], field_), field_))
        throw ComputeError("cokernel arrow action ill-defined");
      N.mats.push_back(std::move(na));
    }
    for (auto& [tgt, mats] : out) N.arMiddle.push_back(tgt);

    int id = addModule(std::move(N));
    ind_[m].tauInv = id;
    ind_[id].tau = m;
    // record the new irreducible maps E_summand -> tauInv(m)
    std::vector<int> offs(n, 0);
    for (auto& [tgt, mats] : out) {
      auto& T = ind_[tgt];
      std::vector<Mat<F>> comp(n);
      for (int v = 0; v < n; ++v) {
        Mat<F> cv(ind_[id].dim[v], T.dim[v], field_);
        for (int i = 0; i < ind_[id].dim[v]; ++i)
          for (int j = 0; j < T.dim[v]; ++j) cv.at(i, j) = pi[v].at(i, offs[v] + j);
        comp[v] = std::move(cv);
        offs[v] += T.dim[v];
      }
      irrIn_[id].push_back({tgt, comp});
      outMap_[tgt].push_back({id, std::move(comp)});
    }
    classifyModule(id);
  }

  void classifyModule(int id) {
    const int n = Q.numVertices();
    auto& m = ind_[id];
    for (int i = 0; i < n; ++i)
      if (m.dim == injectiveDim(i)) {
        m.injAt = i;
        injId_[i] = id;
      }
    int total = 0;
    for (int v = 0; v < n; ++v) total += m.dim[v];
    if (total == 1)
      for (int v = 0; v < n; ++v)
        if (m.dim[v] == 1) {
          m.simpleAt = v;
          simpleId_[v] = id;
        }
    if (m.simpleAt >= 0) m.name = "S" + std::to_string(m.simpleAt + 1);
    else if (m.projAt >= 0) m.name = "P" + std::to_string(m.projAt + 1);
    else if (m.injAt >= 0) m.name = "I" + std::to_string(m.injAt + 1);
    else {
      m.name = "M(";
      for (int v = 0; v < n; ++v) m.name += std::to_string(m.dim[v]) + (v + 1 < n ? "," : ")");
    }
  }

  void computeTables() {
    const int k = size();
    homDim_.assign(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        homDim_[i][j] = homDimOf(ind_[i].dim, ind_[i].mats, ind_[j].dim, ind_[j].mats);
  }

  void computePresentations() {
    const int n = Q.numVertices();
    for (int m = 0; m < size(); ++m) {
      auto& M = ind_[m];
      // top via radical: rad(M)_v = sum of images of arrows into v
      M.topDim.assign(n, 0);
      std::vector<std::vector<int>> topPivots(n);
      std::vector<Mat<F>> radBasis(n);  // columns spanning rad at v
      for (int v = 0; v < n; ++v) {
        std::vector<std::vector<typename F::Elem>> cols;
        for (int a = 0; a < Q.numArrows(); ++a) {
          auto [u, w] = Q.arrows[a];
          if (w != v) continue;
          for (int c = 0; c < M.dim[u]; ++c) {
            std::vector<typename F::Elem> col(M.dim[v]);
            for (int r = 0; r < M.dim[v]; ++r) col[r] = M.mats[a].at(r, c);
            cols.push_back(std::move(col));
          }
        }
        Mat<F> rad(M.dim[v], static_cast<int>(cols.size()), field_);
        for (size_t c = 0; c < cols.size(); ++c)
          for (int r = 0; r < M.dim[v]; ++r) rad.at(r, static_cast<int>(c)) = cols[c][r];
        int rk = matRank(rad, field_);
        M.topDim[v] = M.dim[v] - rk;
        radBasis[v] = std::move(rad);
      }
      // generators: standard basis vectors at v completing rad to M(v)
      std::vector<std::pair<int, std::vector<typename F::Elem>>> gens;  // (vertex, vector)
      for (int v = 0; v < n; ++v) {
        Mat<F> cur(M.dim[v], radBasis[v].cols, field_);
        for (int i = 0; i < M.dim[v]; ++i)
          for (int j = 0; j < radBasis[v].cols; ++j) cur.at(i, j) = radBasis[v].at(i, j);
        int have = matRank(cur, field_);
        // grow by unit vectors that increase the rank
        for (int c = 0; c < M.dim[v]; ++c) {
          Mat<F> ext(M.dim[v], cur.cols + 1, field_);
          for (int i = 0; i < M.dim[v]; ++i)
            for (int j = 0; j < cur.cols; ++j) ext.at(i, j) = cur.at(i, j);
          ext.at(c, cur.cols) = field_.one();
          if (matRank(ext, field_) > have) {
            std::vector<typename F::Elem> unit(M.dim[v], field_.zero());
            unit[c] = field_.one();
            gens.push_back({v, std::move(unit)});
            cur = std::move(ext);
            ++have;
          }
          if (have == M.dim[v]) break;
        }
      }
      M.p0mult.assign(n, 0);
      for (auto& [v, vec] : gens) M.p0mult[v]++;

      // pi: P0 -> M on the path basis of P0
      std::vector<int> p0verts;
      for (auto& [v, vec] : gens) p0verts.push_back(v);
      std::vector<int> p0dim(n, 0), p0off(n, 0);
      std::vector<std::vector<std::pair<int, int>>> p0basis(n);  // (generator idx, path id)
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int src = gens[gi].first;
        for (int v = 0; v < n; ++v)
          for (int p : paths_.byPair[src][v]) p0basis[v].push_back({static_cast<int>(gi), p});
      }
      for (int v = 0; v < n; ++v) p0dim[v] = static_cast<int>(p0basis[v].size());
      std::vector<Mat<F>> piMat(n);
      for (int v = 0; v < n; ++v) {
        Mat<F> pv(M.dim[v], p0dim[v], field_);
        for (int c = 0; c < p0dim[v]; ++c) {
          auto [gi, p] = p0basis[v][c];
          // apply M along the path to the generator vector
          std::vector<typename F::Elem> vec = gens[gi].second;
          int cur = gens[gi].first;
          for (int a : paths_.all[p].arrows) {
            auto [u, w] = Q.arrows[a];
            std::vector<typename F::Elem> next(M.dim[w], field_.zero());
            for (int i = 0; i < M.dim[w]; ++i)
              for (int j = 0; j < M.dim[u]; ++j)
                next[i] = field_.add(next[i], field_.mul(M.mats[a].at(i, j), vec[j]));
            vec = std::move(next);
            cur = w;
          }
          for (int r = 0; r < M.dim[v]; ++r) pv.at(r, c) = vec[r];
        }
        piMat[v] = std::move(pv);
      }
      // kernel K with its arrow action, then top(K) generators as path columns
      std::vector<std::vector<std::vector<typename F::Elem>>> kerBasis(n);
      for (int v = 0; v < n; ++v) kerBasis[v] = nullspaceBasis(piMat[v], field_);
      // arrow action of P0 on the path basis
      auto p0Arrow = [&](int a) {
        auto [u, w] = Q.arrows[a];
        Mat<F> mat(p0dim[w], p0dim[u], field_);
        for (int c = 0; c < p0dim[u]; ++c) {
          auto [gi, p] = p0basis[u][c];
          int q = paths_.concat(p, paths_.arrowPath(a));
          for (int r = 0; r < p0dim[w]; ++r)
            if (p0basis[w][r] == std::make_pair(gi, q)) mat.at(r, c) = field_.one();
        }
        return mat;
      };
      // top of K at v: K(v) / sum of images of K(u) -> K(v)
      std::vector<std::pair<int, std::vector<typename F::Elem>>> kgens;  // (vertex, vec in P0(v))
      for (int v = 0; v < n; ++v) {
        if (kerBasis[v].empty()) continue;
        std::vector<std::vector<typename F::Elem>> radCols;
        for (int a = 0; a < Q.numArrows(); ++a) {
          auto [u, w] = Q.arrows[a];
          if (w != v) continue;
          auto mat = p0Arrow(a);
          for (auto& kv : kerBasis[u]) {
            std::vector<typename F::Elem> img(p0dim[v], field_.zero());
            for (int i = 0; i < p0dim[v]; ++i)
              for (int j = 0; j < p0dim[u]; ++j)
                img[i] = field_.add(img[i], field_.mul(mat.at(i, j), kv[j]));
            radCols.push_back(std::move(img));
          }
        }
        // choose kernel basis vectors completing radCols inside K(v)
        int kd = static_cast<int>(kerBasis[v].size());
        Mat<F> cur(p0dim[v], static_cast<int>(radCols.size()), field_);
        for (size_t c = 0; c < radCols.size(); ++c)
          for (int r = 0; r < p0dim[v]; ++r) cur.at(r, static_cast<int>(c)) = radCols[c][r];
        int have = matRank(cur, field_);
        for (int c = 0; c < kd; ++c) {
          Mat<F> ext(p0dim[v], cur.cols + 1, field_);
          for (int i = 0; i < p0dim[v]; ++i)
            for (int j = 0; j < cur.cols; ++j) ext.at(i, j) = cur.at(i, j);
          for (int i = 0; i < p0dim[v]; ++i) ext.at(i, cur.cols) = kerBasis[v][c][i];
          if (matRank(ext, field_) > have) {
            kgens.push_back({v, kerBasis[v][c]});
            cur = std::move(ext);
            ++have;
          }
        }
      }
      M.p1mult.assign(n, 0);
      for (auto& [v, vec] : kgens) M.p1mult[v]++;
      // presentation differential as a path matrix P1 -> P0
      std::vector<int> p1verts;
      for (auto& [v, vec] : kgens) p1verts.push_back(v);
      PathMat<F> d(p0verts, p1verts);
      for (size_t c = 0; c < kgens.size(); ++c) {
        auto [v, vec] = kgens[c];
        for (int b = 0; b < p0dim[v]; ++b) {
          if (field_.isZero(vec[b])) continue;
          auto [gi, p] = p0basis[v][b];
          d.at(gi, static_cast<int>(c)).add(p, vec[b], field_);
        }
      }
      for (auto& el : d.e) el.normalize(field_);
      M.presDiff = std::move(d);
      // consistency: dim P1 = dim P0 - dim M at every vertex
      for (int v = 0; v < n; ++v) {
        int d1 = 0;
        for (int u = 0; u < n; ++u)
          d1 += M.p1mult[u] * static_cast<int>(paths_.byPair[u][v].size());
        if (d1 != p0dim[v] - M.dim[v])
          throw ComputeError("minimal presentation dimension mismatch");
      }
    }
    // Ext^1 from the presentations: Hom(-,N) on 0 -> P1 -> P0 -> M -> 0
    const int k = size();
    ext1Dim_.assign(k, std::vector<int>(k, 0));
    for (int m = 0; m < k; ++m)
      for (int nn = 0; nn < k; ++nn) {
        long long e = homDim_[m][nn];
        for (int v = 0; v < n; ++v)
          e += static_cast<long long>(ind_[m].p1mult[v] - ind_[m].p0mult[v]) * ind_[nn].dim[v];
        if (e < 0) throw ComputeError("negative Ext dimension; presentation bug");
        ext1Dim_[m][nn] = static_cast<int>(e);
      }
  }
};

}  // namespace qhall
