#include "qhall/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qhall {

std::string dynkinTypeName(DynkinType t, int rank) {
  switch (t) {
    case DynkinType::A: return "A" + std::to_string(rank);
    case DynkinType::D: return "D" + std::to_string(rank);
    case DynkinType::E: return "E" + std::to_string(rank);
  }
  return "?";
}

std::vector<std::pair<int, int>> DynkinQuiver::diagramEdges(DynkinType t, int rank) {
  std::vector<std::pair<int, int>> e;
  switch (t) {
    case DynkinType::A:
      if (rank < 1) throw ConfigError("A_n needs n >= 1");
      for (int i = 0; i + 1 < rank; ++i) e.push_back({i, i + 1});
      break;
    case DynkinType::D:
      if (rank < 4) throw ConfigError("D_n needs n >= 4");
      for (int i = 0; i + 2 < rank; ++i) e.push_back({i, i + 1});
      e.push_back({rank - 3, rank - 1});
      break;
    case DynkinType::E:
      if (rank < 6 || rank > 8) throw ConfigError("E_n needs n in {6,7,8}");
      for (int i = 0; i + 2 < rank; ++i) e.push_back({i, i + 1});
      e.push_back({2, rank - 1});
      break;
  }
  return e;
}

int DynkinQuiver::positiveRootCount(DynkinType t, int rank) {
  switch (t) {
    case DynkinType::A: return rank * (rank + 1) / 2;
    case DynkinType::D: return rank * (rank - 1);
    case DynkinType::E:
      if (rank == 6) return 36;
      if (rank == 7) return 63;
      return 120;
  }
  return 0;
}

void DynkinQuiver::validate() const {
  auto edges = diagramEdges(type, rank);
  if (static_cast<int>(arrows.size()) != static_cast<int>(edges.size()))
    throw ConfigError("arrow count does not match the " + dynkinTypeName(type, rank) + " diagram");
  std::multiset<std::pair<int, int>> want(edges.begin(), edges.end());
  for (auto [s, t] : arrows) {
    if (s < 0 || s >= rank || t < 0 || t >= rank || s == t)
      throw ConfigError("arrow endpoints out of range");
    auto key = s < t ? std::make_pair(s, t) : std::make_pair(t, s);
    auto it = want.find(key);
    if (it == want.end())
      throw ConfigError("arrows do not orient the " + dynkinTypeName(type, rank) + " diagram");
    want.erase(it);
  }
}

DynkinQuiver DynkinQuiver::standard(DynkinType t, int rank) {
  DynkinQuiver q;
  q.type = t;
  q.rank = rank;
  for (auto [i, j] : diagramEdges(t, rank)) q.arrows.push_back({i, j});
  q.validate();
  return q;
}

DynkinQuiver DynkinQuiver::a2Forward() { return standard(DynkinType::A, 2); }

DynkinQuiver DynkinQuiver::a2Backward() {
  DynkinQuiver q;
  q.type = DynkinType::A;
  q.rank = 2;
  q.arrows.push_back({1, 0});
  q.validate();
  return q;
}

long long DynkinQuiver::eulerForm(const std::vector<int>& d, const std::vector<int>& e) const {
  long long v = 0;
  for (int i = 0; i < rank; ++i) v += static_cast<long long>(d[i]) * e[i];
  for (auto [s, t] : arrows) v -= static_cast<long long>(d[s]) * e[t];
  return v;
}

Paths::Paths(const DynkinQuiver& q) {
  const int n = q.numVertices();
  for (int v = 0; v < n; ++v) all.push_back({v, v, {}});
  // breadth-first by length; the quiver is acyclic so this terminates
  size_t lo = 0;
  while (lo < all.size()) {
    size_t hi = all.size();
    for (size_t i = lo; i < hi; ++i) {
      for (int a = 0; a < q.numArrows(); ++a) {
        if (q.arrows[a].first != all[i].tgt) continue;
        P p = all[i];
        p.tgt = q.arrows[a].second;
        p.arrows.push_back(a);
        all.push_back(std::move(p));
      }
    }
    lo = hi;
  }
  byPair.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < count(); ++i) byPair[all[i].src][all[i].tgt].push_back(i);
  arrowPathIds.assign(q.numArrows(), -1);
  std::map<std::pair<int, std::vector<int>>, int> lookup;
  for (int i = 0; i < count(); ++i) lookup[{all[i].src, all[i].arrows}] = i;
  for (int a = 0; a < q.numArrows(); ++a)
    arrowPathIds[a] = lookup.at({q.arrows[a].first, {a}});
  concatTable.assign(count(), std::vector<int>(count(), -1));
  for (int i = 0; i < count(); ++i)
    for (int j = 0; j < count(); ++j) {
      if (all[i].tgt != all[j].src) continue;
      auto seq = all[i].arrows;
      seq.insert(seq.end(), all[j].arrows.begin(), all[j].arrows.end());
      concatTable[i][j] = lookup.at({all[i].src, seq});
    }
}

int Paths::concat(int p1, int p2) const {
  int r = concatTable[p1][p2];
  if (r < 0) throw ComputeError("path concatenation endpoint mismatch");
  return r;
}

}  // namespace qhall
