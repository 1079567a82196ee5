#pragma once

#include "qhall/fields.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace qhall {

// Dense matrix over an exact field context F (PrimeField or RationalField).
// All eliminations are fraction-free only in the sense of being exact; no
// pivot-growth concerns arise since the arithmetic is symbolic.
template <class F>
struct Mat {
  using E = typename F::Elem;
  int rows = 0, cols = 0;
  std::vector<E> a;

  Mat() = default;
  Mat(int r, int c, const F& f) : rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}

  E& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const E& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n, const F& f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  Mat transpose(const F& f) const {
    Mat t(cols, rows, f);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }
};

template <class F>
Mat<F> matMul(const Mat<F>& x, const Mat<F>& y, const F& f) {
  assert(x.cols == y.rows);
  Mat<F> z(x.rows, y.cols, f);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const auto& xv = x.at(i, k);
      if (f.isZero(xv)) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(xv, y.at(k, j)));
    }
  return z;
}

template <class F>
Mat<F> matAdd(const Mat<F>& x, const Mat<F>& y, const F& f) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat<F> z(x.rows, x.cols, f);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = f.add(x.a[i], y.a[i]);
  return z;
}

template <class F>
Mat<F> matSub(const Mat<F>& x, const Mat<F>& y, const F& f) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat<F> z(x.rows, x.cols, f);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = f.sub(x.a[i], y.a[i]);
  return z;
}

template <class F>
bool matIsZero(const Mat<F>& x, const F& f) {
  for (const auto& v : x.a)
    if (!f.isZero(v)) return false;
  return true;
}

template <class F>
bool matEq(const Mat<F>& x, const Mat<F>& y, const F& f) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!f.eq(x.a[i], y.a[i])) return false;
  return true;
}

// In-place reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<int> rref(Mat<F>& m, const F& f) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f.isZero(m.at(i, c))) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    auto piv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), piv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || f.isZero(m.at(i, c))) continue;
      auto factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int matRank(Mat<F> m, const F& f) {
  return static_cast<int>(rref(m, f).size());
}

// Basis of the right nullspace {x : Mx = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspaceBasis(Mat<F> m, const F& f) {
  auto pivots = rref(m, f);
  std::vector<bool> isPivot(m.cols, false);
  for (int c : pivots) isPivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (isPivot[c]) continue;
    std::vector<typename F::Elem> v(m.cols, f.zero());
    v[c] = f.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(static_cast<int>(r), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of Mx = b, or nullopt if inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solveLinear(Mat<F> m, std::vector<typename F::Elem> b,
                                                         const F& f) {
  assert(static_cast<int>(b.size()) == m.rows);
  Mat<F> aug(m.rows, m.cols + 1, f);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto pivots = rref(aug, f);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<typename F::Elem> x(m.cols, f.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

// Inverse of a square matrix; nullopt when singular.
template <class F>
std::optional<Mat<F>> matInverse(const Mat<F>& m, const F& f) {
  assert(m.rows == m.cols);
  Mat<F> aug(m.rows, 2 * m.cols, f);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = f.one();
  }
  auto pivots = rref(aug, f);
  if (static_cast<int>(pivots.size()) != m.rows || (m.rows > 0 && pivots.back() != m.rows - 1))
    return std::nullopt;
  Mat<F> inv(m.rows, m.cols, f);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

// Row-space basis as a row matrix in echelon form (zero rows dropped).
template <class F>
Mat<F> rowSpaceBasis(Mat<F> m, const F& f) {
  auto pivots = rref(m, f);
  Mat<F> out(static_cast<int>(pivots.size()), m.cols, f);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

enum class FpLinalgMode { Rank, Nullspace, Solve };

struct FpLinalgResult {
  int rank = 0;
  // right-nullspace basis (Nullspace mode)
  std::vector<std::vector<long long>> kernel;
  // affine solution set: one particular solution plus the homogeneous basis
  // (Solve mode); empty optional when the system is inconsistent
  std::optional<std::vector<long long>> particular;
  std::vector<std::vector<long long>> homogeneous;
};

inline FpLinalgResult fpLinalg(const Mat<PrimeField>& m, FpLinalgMode mode, const PrimeField& f,
                               const std::vector<long long>* rhs = nullptr) {
  FpLinalgResult res;
  switch (mode) {
    case FpLinalgMode::Rank:
      res.rank = matRank(m, f);
      break;
    case FpLinalgMode::Nullspace:
      res.kernel = nullspaceBasis(m, f);
      res.rank = m.cols - static_cast<int>(res.kernel.size());
      break;
    case FpLinalgMode::Solve: {
      if (rhs == nullptr) throw ConfigError("solve mode requires a right-hand side");
      if (static_cast<int>(rhs->size()) != m.rows)
        throw ConfigError("rhs dimension does not match matrix rows");
      res.particular = solveLinear(m, *rhs, f);
      res.homogeneous = nullspaceBasis(m, f);
      res.rank = m.cols - static_cast<int>(res.homogeneous.size());
      break;
    }
  }
  return res;
}

}  // namespace qhall
