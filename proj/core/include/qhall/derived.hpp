#pragma once

#include "qhall/module_cat.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qhall {

// An indecomposable of the bounded derived category of kQ: a module placed in
// a single shift degree (hereditary case, so this exhausts everything).
struct DerivedObject {
  int mod = -1;  // index into ModuleCategory
  int shift = 0;

  auto operator<=>(const DerivedObject&) const = default;
};

struct AutoSpec {
  enum class Kind { SigmaPower, SigmaTauInverse };
  Kind kind = Kind::SigmaPower;
  int n = 2;  // exponent for SigmaPower

  static AutoSpec sigmaPower(int n) { return {Kind::SigmaPower, n}; }
  static AutoSpec sigmaTauInverse() { return {Kind::SigmaTauInverse, 0}; }
  std::string str() const {
    return kind == Kind::SigmaPower ? "sigma^" + std::to_string(n) : "sigma*tau^{-1}";
  }
};

template <class F>
DerivedObject sigmaDer(DerivedObject x, int k = 1) {
  return {x.mod, x.shift + k};
}

template <class F>
DerivedObject tauDer(const ModuleCategory<F>& cat, DerivedObject x) {
  const auto& m = cat.ind(x.mod);
  if (m.projAt >= 0) return {cat.injective(m.projAt), x.shift - 1};
  return {m.tau, x.shift};
}

template <class F>
DerivedObject tauInvDer(const ModuleCategory<F>& cat, DerivedObject x) {
  const auto& m = cat.ind(x.mod);
  if (m.injAt >= 0) return {cat.projective(m.injAt), x.shift + 1};
  return {m.tauInv, x.shift};
}

template <class F>
DerivedObject applyAuto(const ModuleCategory<F>& cat, const AutoSpec& spec, DerivedObject x,
                        int power = 1) {
  if (spec.kind == AutoSpec::Kind::SigmaPower) return {x.mod, x.shift + spec.n * power};
  DerivedObject y = x;
  for (int i = 0; i < (power >= 0 ? power : -power); ++i) {
    if (power >= 0) {
      y = tauInvDer(cat, y);
      y.shift += 1;
    } else {
      y.shift -= 1;
      y = tauDer(cat, y);
    }
  }
  return y;
}

// dim Hom_{D}(x, y): Hom in degree 0, Ext^1 one shift up, zero otherwise.
template <class F>
int derivedHomDim(const ModuleCategory<F>& cat, DerivedObject x, DerivedObject y) {
  if (y.shift == x.shift) return cat.homDim(x.mod, y.mod);
  if (y.shift == x.shift + 1) return cat.ext1Dim(x.mod, y.mod);
  return 0;
}

// Middle of the AR triangle ending at x.
template <class F>
std::vector<DerivedObject> arTriangleMiddle(const ModuleCategory<F>& cat, DerivedObject x) {
  std::vector<DerivedObject> mid;
  const auto& m = cat.ind(x.mod);
  if (m.projAt >= 0) {
    for (int s : cat.radSummands(m.projAt)) mid.push_back({s, x.shift});
    for (int s : cat.injQuotSummands(m.projAt)) mid.push_back({s, x.shift - 1});
  } else {
    for (int s : m.arMiddle) mid.push_back({s, x.shift});
  }
  return mid;
}

// Canonical representative of the F-orbit of x: the orbit member with the
// smallest nonnegative shift (unique; F moves shifts strictly upward).
template <class F>
DerivedObject canonOrbitRep(const ModuleCategory<F>& cat, const AutoSpec& spec, DerivedObject x) {
  if (spec.kind == AutoSpec::Kind::SigmaPower) {
    int n = spec.n;
    if (n < 1) throw ConfigError("sigma power must be >= 1");
    int s = x.shift % n;
    if (s < 0) s += n;
    return {x.mod, s};
  }
  for (int guard = 0; guard < 1 << 20; ++guard) {
    if (x.shift < 0) {
      x = applyAuto(cat, spec, x, 1);
      continue;
    }
    DerivedObject y = applyAuto(cat, spec, x, -1);
    if (y.shift >= 0) {
      x = y;
      continue;
    }
    return x;
  }
  throw ComputeError("orbit canonicalization did not converge");
}

// All F-orbit representatives of ind D_Q (finitely many for Dynkin type).
template <class F>
std::vector<DerivedObject> orbitReps(const ModuleCategory<F>& cat, const AutoSpec& spec) {
  int maxShift = spec.kind == AutoSpec::Kind::SigmaPower ? spec.n : 2;
  std::set<DerivedObject> reps;
  for (int m = 0; m < cat.size(); ++m)
    for (int s = 0; s < maxShift; ++s) reps.insert(canonOrbitRep(cat, spec, {m, s}));
  return {reps.begin(), reps.end()};
}

struct AssumptionReport {
  bool holds = true;
  DerivedObject x, y;  // witness pair on failure
  int i1 = 0, i2 = 0;  // two powers with nonvanishing Ext^1(x, F^i y)
};

// For all indecomposables x, y (up to the F-action), Ext^1(x, F^i y) may be
// nonzero for at most one i.
template <class F>
AssumptionReport checkAssumption(const ModuleCategory<F>& cat, const AutoSpec& spec) {
  AssumptionReport rep;
  auto ys = orbitReps(cat, spec);
  int window = (spec.kind == AutoSpec::Kind::SigmaPower ? spec.n : 2) + 8;
  for (int m = 0; m < cat.size(); ++m) {
    DerivedObject x{m, 0};
    for (auto y0 : ys) {
      int found = 0, firstI = 0;
      for (int i = -window; i <= window; ++i) {
        DerivedObject z = applyAuto(cat, spec, y0, i);
        int ext = derivedHomDim(cat, x, sigmaDer<F>(z, 1));
        if (ext != 0) {
          if (found == 0) firstI = i;
          else {
            rep.holds = false;
            rep.x = x;
            rep.y = y0;
            rep.i1 = firstI;
            rep.i2 = i;
            return rep;
          }
          ++found;
        }
      }
    }
  }
  return rep;
}

template <class F>
std::string derivedName(const ModuleCategory<F>& cat, DerivedObject x, bool sigma = false) {
  std::string base = cat.ind(x.mod).name;
  if (x.shift != 0) base += "<" + std::to_string(x.shift) + ">";
  return sigma ? "s(" + base + ")" : base;
}

}  // namespace qhall
