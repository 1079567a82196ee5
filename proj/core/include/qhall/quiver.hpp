#pragma once

#include "qhall/rational.hpp"

#include <string>
#include <vector>

namespace qhall {

enum class DynkinType { A, D, E };

std::string dynkinTypeName(DynkinType t, int rank);

// An orientation of an ADE Coxeter diagram. Vertices are 0-based internally;
// user-facing labels are 1-based. The underlying graph must match the diagram
// of (type, rank); any orientation of it is accepted (trees are acyclic).
struct DynkinQuiver {
  DynkinType type = DynkinType::A;
  int rank = 1;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based

  int numVertices() const { return rank; }
  int numArrows() const { return static_cast<int>(arrows.size()); }

  // Edges of the ADE diagram for (type, rank), as unordered pairs (i<j).
  static std::vector<std::pair<int, int>> diagramEdges(DynkinType t, int rank);

  // Positive root count of the root system (= number of indecomposables).
  static int positiveRootCount(DynkinType t, int rank);

  void validate() const;  // throws ConfigError on malformed input

  // Standard linear orientation i -> i+1 along the constructed diagram edges.
  static DynkinQuiver standard(DynkinType t, int rank);

  // Fixtures: the two A_2 orientations.
  static DynkinQuiver a2Forward();   // 1 -> 2
  static DynkinQuiver a2Backward();  // 2 -> 1

  // Euler form <d,e> = sum d_i e_i - sum_{a:i->j} d_i e_j.
  long long eulerForm(const std::vector<int>& d, const std::vector<int>& e) const;
};

// All directed paths of an acyclic quiver, with a concatenation table.
// Path ids: the trivial path at vertex v is id v; longer paths follow,
// ordered by (length, source, lexicographic arrow sequence).
struct Paths {
  struct P {
    int src, tgt;
    std::vector<int> arrows;
  };
  std::vector<P> all;
  std::vector<std::vector<std::vector<int>>> byPair;  // [src][tgt] -> ids

  explicit Paths(const DynkinQuiver& q);

  int trivial(int v) const { return v; }
  int count() const { return static_cast<int>(all.size()); }
  // concat(p1: a->b, p2: b->c) -> a->c
  int concat(int p1, int p2) const;
  int arrowPath(int arrowIdx) const { return arrowPathIds[arrowIdx]; }

 private:
  std::vector<int> arrowPathIds;
  std::vector<std::vector<int>> concatTable;
};

}  // namespace qhall
