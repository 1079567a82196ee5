#pragma once

#include "qhall/linalg.hpp"

#include <map>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace qhall {

// A quiver with homogeneous relations, the carrier of module representations.
template <class F>
struct PresQuiver {
  int nv = 0;
  std::vector<std::pair<int, int>> arrows;
  struct Rel {
    int src = 0, tgt = 0;
    std::vector<std::pair<typename F::Elem, std::vector<int>>> terms;
  };
  std::vector<Rel> rels;
};

// Right module: for an arrow a: u -> v the structure map acts M(v) -> M(u).
// A path u -> v evaluates to the product of its arrow matrices in path order.
template <class F>
struct ModuleRep {
  const PresQuiver<F>* pq = nullptr;
  std::vector<int> dims;
  std::vector<Mat<F>> arr;  // arr[a]: M(tgt a) -> M(src a)

  int totalDim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool isZero() const { return totalDim() == 0; }
};

template <class F>
ModuleRep<F> zeroModule(const PresQuiver<F>& pq, const F& f) {
  ModuleRep<F> m;
  m.pq = &pq;
  m.dims.assign(pq.nv, 0);
  for (auto [u, v] : pq.arrows) m.arr.push_back(Mat<F>(0, 0, f));
  return m;
}

template <class F>
ModuleRep<F> simpleModule(const PresQuiver<F>& pq, int vertex, const F& f) {
  ModuleRep<F> m = zeroModule(pq, f);
  m.dims[vertex] = 1;
  for (size_t a = 0; a < pq.arrows.size(); ++a) {
    auto [u, v] = pq.arrows[a];
    m.arr[a] = Mat<F>(m.dims[u], m.dims[v], f);
  }
  return m;
}

template <class F>
ModuleRep<F> directSum(const ModuleRep<F>& x, const ModuleRep<F>& y, const F& f) {
  ModuleRep<F> m;
  m.pq = x.pq;
  m.dims.resize(x.pq->nv);
  for (int v = 0; v < x.pq->nv; ++v) m.dims[v] = x.dims[v] + y.dims[v];
  for (size_t a = 0; a < x.pq->arrows.size(); ++a) {
    auto [u, v] = x.pq->arrows[a];
    Mat<F> mm(m.dims[u], m.dims[v], f);
    for (int i = 0; i < x.dims[u]; ++i)
      for (int j = 0; j < x.dims[v]; ++j) mm.at(i, j) = x.arr[a].at(i, j);
    for (int i = 0; i < y.dims[u]; ++i)
      for (int j = 0; j < y.dims[v]; ++j) mm.at(x.dims[u] + i, x.dims[v] + j) = y.arr[a].at(i, j);
    m.arr.push_back(std::move(mm));
  }
  return m;
}

// evaluate a path (sequence of arrow ids, left to right) on a module:
// the product arr[a_1] * arr[a_2] * ... maps M(tgt of path) -> M(src of path)
template <class F>
Mat<F> evalPath(const ModuleRep<F>& m, const std::vector<int>& path, const F& f) {
  if (path.empty()) throw ComputeError("empty path evaluation");
  Mat<F> acc = m.arr[path[0]];
  for (size_t k = 1; k < path.size(); ++k) acc = matMul(acc, m.arr[path[k]], f);
  return acc;
}

// check all relations of the presentation vanish on m
template <class F>
bool validateModule(const ModuleRep<F>& m, const F& f) {
  for (const auto& rel : m.pq->rels) {
    if (rel.terms.empty()) continue;
    Mat<F> acc(m.dims[rel.src], m.dims[rel.tgt], f);
    for (const auto& [c, path] : rel.terms) {
      Mat<F> t = evalPath(m, path, f);
      for (int i = 0; i < acc.rows; ++i)
        for (int j = 0; j < acc.cols; ++j) acc.at(i, j) = f.add(acc.at(i, j), f.mul(c, t.at(i, j)));
    }
    if (!matIsZero(acc, f)) return false;
  }
  return true;
}

// Basis of module homomorphisms M -> N: families phi_v: M(v) -> N(v) with
// phi_u M_a = N_a phi_v for every arrow a: u -> v.
template <class F>
std::vector<std::vector<Mat<F>>> homBasisModules(const ModuleRep<F>& M, const ModuleRep<F>& N,
                                                 const F& f) {
  const auto& pq = *M.pq;
  std::vector<int> off(pq.nv + 1, 0);
  for (int v = 0; v < pq.nv; ++v) off[v + 1] = off[v] + M.dims[v] * N.dims[v];
  int unknowns = off[pq.nv];
  std::vector<std::vector<typename F::Elem>> rows;
  for (size_t a = 0; a < pq.arrows.size(); ++a) {
    auto [u, v] = pq.arrows[a];
    // phi_u * M_a - N_a * phi_v = 0 : maps M(v) -> N(u)
    for (int i = 0; i < N.dims[u]; ++i)
      for (int j = 0; j < M.dims[v]; ++j) {
        std::vector<typename F::Elem> row(unknowns, f.zero());
        for (int k = 0; k < M.dims[u]; ++k) {
          int idx = off[u] + i * M.dims[u] + k;  // phi_u[i][k]
          row[idx] = f.add(row[idx], M.arr[a].at(k, j));
        }
        for (int k = 0; k < N.dims[v]; ++k) {
          int idx = off[v] + k * M.dims[v] + j;  // phi_v[k][j]
          row[idx] = f.sub(row[idx], N.arr[a].at(i, k));
        }
        rows.push_back(std::move(row));
      }
  }
  Mat<F> sys(static_cast<int>(rows.size()), unknowns, f);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
  auto null = nullspaceBasis(sys, f);
  std::vector<std::vector<Mat<F>>> out;
  for (auto& vec : null) {
    std::vector<Mat<F>> phi;
    for (int v = 0; v < pq.nv; ++v) {
      Mat<F> pm(N.dims[v], M.dims[v], f);
      for (int i = 0; i < N.dims[v]; ++i)
        for (int j = 0; j < M.dims[v]; ++j) pm.at(i, j) = vec[off[v] + i * M.dims[v] + j];
      phi.push_back(std::move(pm));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

template <class F>
int homDimModules(const ModuleRep<F>& M, const ModuleRep<F>& N, const F& f) {
  return static_cast<int>(homBasisModules(M, N, f).size());
}

// dims of top(M) = M / rad M; rad M(v) = sum of images of arrows out of v
template <class F>
std::vector<int> topDims(const ModuleRep<F>& M, const F& f) {
  const auto& pq = *M.pq;
  std::vector<int> top(pq.nv, 0);
  for (int v = 0; v < pq.nv; ++v) {
    std::vector<std::vector<typename F::Elem>> cols;
    for (size_t a = 0; a < pq.arrows.size(); ++a) {
      auto [u, w] = pq.arrows[a];
      if (u != v) continue;
      for (int c = 0; c < M.dims[w]; ++c) {
        std::vector<typename F::Elem> col(M.dims[v]);
        for (int r = 0; r < M.dims[v]; ++r) col[r] = M.arr[a].at(r, c);
        cols.push_back(std::move(col));
      }
    }
    Mat<F> rad(M.dims[v], static_cast<int>(cols.size()), f);
    for (size_t c = 0; c < cols.size(); ++c)
      for (int r = 0; r < M.dims[v]; ++r) rad.at(r, static_cast<int>(c)) = cols[c][r];
    top[v] = M.dims[v] - matRank(rad, f);
  }
  return top;
}

// dims of soc(M); soc M(v) = intersection of kernels of arrows into v
template <class F>
std::vector<int> socleDims(const ModuleRep<F>& M, const F& f) {
  const auto& pq = *M.pq;
  std::vector<int> soc(pq.nv, 0);
  for (int v = 0; v < pq.nv; ++v) {
    std::vector<std::vector<typename F::Elem>> rows;
    for (size_t a = 0; a < pq.arrows.size(); ++a) {
      auto [u, w] = pq.arrows[a];
      if (w != v) continue;
      for (int i = 0; i < M.dims[u]; ++i) {
        std::vector<typename F::Elem> row(M.dims[v]);
        for (int j = 0; j < M.dims[v]; ++j) row[j] = M.arr[a].at(i, j);
        rows.push_back(std::move(row));
      }
    }
    Mat<F> sys(static_cast<int>(rows.size()), M.dims[v], f);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < M.dims[v]; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    soc[v] = static_cast<int>(nullspaceBasis(sys, f).size());
  }
  return soc;
}

template <class F>
bool isoWithBasis(const ModuleRep<F>& M, const ModuleRep<F>& N,
                  const std::vector<std::vector<Mat<F>>>& basis,
                  const std::vector<typename F::Elem>& coeffs, const F& f) {
  const auto& pq = *M.pq;
  for (int v = 0; v < pq.nv; ++v) {
    if (M.dims[v] != N.dims[v]) return false;
    Mat<F> phi(N.dims[v], M.dims[v], f);
    for (size_t b = 0; b < basis.size(); ++b)
      for (int i = 0; i < phi.rows; ++i)
        for (int j = 0; j < phi.cols; ++j)
          phi.at(i, j) = f.add(phi.at(i, j), f.mul(coeffs[b], basis[b][v].at(i, j)));
    if (matRank(phi, f) != M.dims[v]) return false;
  }
  return true;
}

// Isomorphism test by explicit invertible-homomorphism search. Exhaustive over
// small prime fields; over Q an isomorphism, when one exists, is found by a
// generic combination (invertibility is an open condition), so a fixed set of
// wide pseudo-random draws decides the question.
template <class F>
bool modulesIsomorphic(const ModuleRep<F>& M, const ModuleRep<F>& N, const F& f) {
  if (M.dims != N.dims) return false;
  if (M.totalDim() == 0) return true;
  auto basis = homBasisModules(M, N, f);
  if (basis.empty()) return false;
  const size_t nb = basis.size();
  if constexpr (std::is_same_v<F, PrimeField>) {
    double total = 1;
    for (size_t i = 0; i < nb; ++i) total *= static_cast<double>(f.p);
    if (total <= (1 << 20)) {
      std::vector<typename F::Elem> coeffs(nb, 0);
      for (long long it = 0;; ++it) {
        if (isoWithBasis(M, N, basis, coeffs, f)) return true;
        size_t k = 0;
        while (k < nb) {
          coeffs[k] = f.add(coeffs[k], 1);
          if (coeffs[k] != 0) break;
          ++k;
        }
        if (k == nb) return false;
      }
    }
    throw ComputeError("isomorphism search space too large over F_p");
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<typename F::Elem> coeffs;
      for (size_t b = 0; b < nb; ++b)
        coeffs.push_back(f.fromInt(static_cast<long long>(rng() % 2000003) - 1000001));
      if (isoWithBasis(M, N, basis, coeffs, f)) return true;
    }
    return false;
  }
}

}  // namespace qhall
