#pragma once

#include "qhall/derived.hpp"
#include "qhall/graded_cat.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qhall {

struct ConfigSpec {
  enum class Preset { Bridgeland, TauOrbit, Explicit };
  Preset preset = Preset::Bridgeland;
  std::vector<DerivedObject> seeds;  // used by TauOrbit and Explicit

  static ConfigSpec bridgeland() { return {Preset::Bridgeland, {}}; }
  static ConfigSpec tauOrbit(std::vector<DerivedObject> s) {
    return {Preset::TauOrbit, std::move(s)};
  }
  static ConfigSpec explicitSeeds(std::vector<DerivedObject> s) {
    return {Preset::Explicit, std::move(s)};
  }
};

// The F-invariant set C as a sorted list of canonical orbit representatives.
template <class F>
std::vector<DerivedObject> configClosure(const ModuleCategory<F>& cat, const AutoSpec& spec,
                                         const ConfigSpec& cfg) {
  std::set<DerivedObject> reps;
  switch (cfg.preset) {
    case ConfigSpec::Preset::Bridgeland: {
      if (spec.kind != AutoSpec::Kind::SigmaPower)
        throw ConfigError("the shift-orbit-of-simples configuration needs F = sigma^n");
      for (int i = 0; i < cat.quiver().numVertices(); ++i)
        for (int j = 0; j < spec.n; ++j)
          reps.insert(canonOrbitRep(cat, spec, {cat.simple(i), j}));
      break;
    }
    case ConfigSpec::Preset::TauOrbit: {
      if (cfg.seeds.empty()) throw ConfigError("tau-orbit configuration needs seeds");
      std::vector<DerivedObject> work;
      for (auto s : cfg.seeds) work.push_back(canonOrbitRep(cat, spec, s));
      while (!work.empty()) {
        auto x = work.back();
        work.pop_back();
        if (reps.count(x)) continue;
        reps.insert(x);
        work.push_back(canonOrbitRep(cat, spec, tauDer(cat, x)));
        work.push_back(canonOrbitRep(cat, spec, tauInvDer(cat, x)));
      }
      break;
    }
    case ConfigSpec::Preset::Explicit: {
      if (cfg.seeds.empty()) throw ConfigError("explicit configuration needs seeds");
      for (auto s : cfg.seeds) reps.insert(canonOrbitRep(cat, spec, s));
      break;
    }
  }
  return {reps.begin(), reps.end()};
}

struct ConfigReport {
  bool ok = true;
  std::string message;
  std::optional<DerivedObject> witness;  // an x with no nonzero map to or from C
};

// Configuration property: every object admits a nonzero map to C and from C.
template <class F>
ConfigReport checkConfiguration(const ModuleCategory<F>& cat, const AutoSpec& spec,
                                const std::vector<DerivedObject>& cOrbits) {
  ConfigReport rep;
  if (cOrbits.empty()) {
    rep.ok = false;
    rep.message = "empty configuration";
    return rep;
  }
  int window = (spec.kind == AutoSpec::Kind::SigmaPower ? spec.n : 2) + 8;
  for (auto x : orbitReps(cat, spec)) {
    bool to = false, from = false;
    for (auto c0 : cOrbits)
      for (int i = -window; i <= window; ++i) {
        DerivedObject c = applyAuto(cat, spec, c0, i);
        if (derivedHomDim(cat, x, c) != 0) to = true;
        if (derivedHomDim(cat, c, x) != 0) from = true;
      }
    if (!to || !from) {
      rep.ok = false;
      rep.witness = x;
      rep.message = std::string("object admits no nonzero map ") + (to ? "from" : "to") +
                    " the configuration";
      return rep;
    }
  }
  return rep;
}

// The quiver ZQ_C/F: F-orbits of ind D_Q as vertices, one sigma vertex per
// configuration orbit, mesh arrows plus c -> sigma(c) -> tau^{-1} c, and the
// mesh relation data attached to every non-sigma vertex.
struct OrbitQuiver {
  struct Vertex {
    DerivedObject obj;
    bool sigma = false;
    int mate = -1;  // sigma vertex of c, or c for a sigma vertex
    std::string label;
  };
  struct Arrow {
    int src = -1, tgt = -1;
    std::string label;
  };
  struct Mesh {
    int vertex = -1;                        // non-sigma vertex the relation ends at
    std::vector<std::pair<int, int>> paths; // (arrow tau(v) -> m, arrow m -> v)
  };

  std::vector<Vertex> verts;
  std::vector<Arrow> arrows;
  std::vector<Mesh> meshes;
  int numNonSigma = 0;

  int vertexOf(DerivedObject o) const {
    auto it = index.find(o);
    if (it == index.end()) throw ComputeError("derived object is not an orbit representative");
    return it->second;
  }
  int sigmaVertexOf(DerivedObject c) const { return verts[vertexOf(c)].mate; }
  std::map<DerivedObject, int> index;
};

template <class F>
OrbitQuiver buildOrbitQuiver(const ModuleCategory<F>& cat, const AutoSpec& spec,
                             const std::vector<DerivedObject>& cOrbits) {
  OrbitQuiver oq;
  auto reps = orbitReps(cat, spec);
  oq.numNonSigma = static_cast<int>(reps.size());
  for (auto r : reps) {
    OrbitQuiver::Vertex v;
    v.obj = r;
    v.sigma = false;
    v.label = derivedName(cat, r);
    oq.index[r] = static_cast<int>(oq.verts.size());
    oq.verts.push_back(v);
  }
  for (auto c : cOrbits) {
    if (!oq.index.count(c)) throw ConfigError("configuration orbit is not a vertex");
    OrbitQuiver::Vertex v;
    v.obj = c;
    v.sigma = true;
    v.mate = oq.index.at(c);
    v.label = derivedName(cat, c, true);
    int id = static_cast<int>(oq.verts.size());
    oq.verts.push_back(v);
    oq.verts[oq.index.at(c)].mate = id;
  }

  auto canon = [&](DerivedObject o) { return canonOrbitRep(cat, spec, o); };
  // mesh arrows, grouped by the mesh they close (the mesh ending at v)
  std::vector<std::vector<int>> meshArrowsInto(oq.verts.size());
  for (int vi = 0; vi < oq.numNonSigma; ++vi) {
    auto mids = arTriangleMiddle(cat, oq.verts[vi].obj);
    for (auto m : mids) {
      OrbitQuiver::Arrow a;
      a.src = oq.vertexOf(canon(m));
      a.tgt = vi;
      a.label = "a" + std::to_string(oq.arrows.size());
      meshArrowsInto[vi].push_back(static_cast<int>(oq.arrows.size()));
      oq.arrows.push_back(a);
    }
  }
  // sigma arrows c -> sigma(c) -> tau^{-1} c
  std::vector<int> sigmaIn(oq.verts.size(), -1), sigmaOut(oq.verts.size(), -1);
  for (auto c : cOrbits) {
    int cv = oq.vertexOf(c);
    int sv = oq.verts[cv].mate;
    OrbitQuiver::Arrow in;
    in.src = cv;
    in.tgt = sv;
    in.label = "a" + std::to_string(oq.arrows.size());
    sigmaIn[cv] = static_cast<int>(oq.arrows.size());
    oq.arrows.push_back(in);
    OrbitQuiver::Arrow out;
    out.src = sv;
    out.tgt = oq.vertexOf(canon(tauInvDer(cat, c)));
    out.label = "a" + std::to_string(oq.arrows.size());
    sigmaOut[cv] = static_cast<int>(oq.arrows.size());
    oq.arrows.push_back(out);
  }

  // meshes: all length-two paths tau(v) -> v
  for (int vi = 0; vi < oq.numNonSigma; ++vi) {
    OrbitQuiver::Mesh mesh;
    mesh.vertex = vi;
    DerivedObject tv = canon(tauDer(cat, oq.verts[vi].obj));
    int tvi = oq.vertexOf(tv);
    for (int a2 : meshArrowsInto[vi]) {
      int mid = oq.arrows[a2].src;
      // the arrow tau(v) -> mid closes this mesh path
      int a1 = -1;
      for (int cand : meshArrowsInto[mid])
        if (oq.arrows[cand].src == tvi) {
          if (a1 >= 0) throw ComputeError("ambiguous mesh pairing (parallel arrows)");
          a1 = cand;
        }
      if (a1 < 0) throw ComputeError("mesh pairing arrow missing");
      mesh.paths.push_back({a1, a2});
    }
    if (oq.verts[tvi].sigma) throw ComputeError("translate of a mesh vertex is a sigma vertex");
    if (sigmaIn[tvi] >= 0) {
      // path through sigma(tau v); its target must be v
      if (oq.arrows[sigmaOut[tvi]].tgt != vi)
        throw ComputeError("sigma arrow does not close the mesh");
      mesh.paths.push_back({sigmaIn[tvi], sigmaOut[tvi]});
    }
    oq.meshes.push_back(std::move(mesh));
  }
  return oq;
}

// Mesh relations of the orbit quiver as GradedCategory relations.
template <class F>
std::vector<typename GradedCategory<F>::Relation> meshRelations(const OrbitQuiver& oq,
                                                                const F& field) {
  std::vector<typename GradedCategory<F>::Relation> rels;
  for (const auto& mesh : oq.meshes) {
    typename GradedCategory<F>::Relation r;
    r.tgt = mesh.vertex;
    if (mesh.paths.empty()) continue;  // no length-2 path: relation is vacuous
    r.src = oq.arrows[mesh.paths[0].first].src;
    for (auto [a1, a2] : mesh.paths) r.terms.push_back({field.one(), {a1, a2}});
    rels.push_back(std::move(r));
  }
  return rels;
}

// Presentation of the singular category S: its own quiver Q_S (arrows = basis
// of rad/rad^2) with a homogeneous generating set of relations, plus the lift
// of each arrow into the ambient graded category of R.
template <class F>
struct SPres {
  using Vec = typename GradedCategory<F>::Vec;
  std::vector<int> sVerts;          // orbit-quiver vertex ids, ascending
  std::vector<int> sIndexOfVertex;  // orbit vertex -> S index, or -1
  struct SArrow {
    int src = 0, tgt = 0;  // S indices
    int lift = -1;         // R basis element (arrows are single basis elements)
    std::string label;
  };
  std::vector<SArrow> arrows;
  struct SRel {
    int src = 0, tgt = 0;
    std::vector<std::pair<typename F::Elem, std::vector<int>>> terms;  // arrow id paths
  };
  std::vector<SRel> rels;
};

// Quotient of the hom spaces of R by the ideal of morphisms factoring through
// sigma vertices; this presents the orbit category P = R / <S>.
template <class F>
struct PQuot {
  struct Slice {
    std::vector<int> rBasis;   // basis ids of Hom_R(x,y)
    Mat<F> reducer;            // rref rows spanning the through-sigma subspace
    std::vector<int> pivots;   // pivot coordinates (into rBasis positions)
    std::vector<int> freeIdx;  // non-pivot coordinates; they index P(x,y)
  };
  std::vector<Slice> slices;  // [x * nv + y] for non-sigma x,y; empty otherwise
  int nv = 0;

  int dim(int x, int y) const { return static_cast<int>(slices[x * nv + y].freeIdx.size()); }
};

namespace detail {

// reduce a coordinate vector by rref rows; returns the reduced vector
template <class F>
std::vector<typename F::Elem> reduceByRows(std::vector<typename F::Elem> v, const Mat<F>& rows,
                                           const std::vector<int>& pivots, const F& f) {
  for (size_t r = 0; r < pivots.size(); ++r) {
    auto c = v[pivots[r]];
    if (f.isZero(c)) continue;
    for (int j = 0; j < rows.cols; ++j)
      v[j] = f.sub(v[j], f.mul(c, rows.at(static_cast<int>(r), j)));
  }
  return v;
}

}  // namespace detail

}  // namespace qhall
