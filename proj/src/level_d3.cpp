// Level triangulations in d = 3: sigma is a face, every tau lies below.

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "cyclic/extension.hpp"

namespace cyclic {

namespace {

const Dim kSpace(3);
const Dim kLift(4);

// y1 < x1 < y2 < x2 < y3
bool five_interlacing(Simplex edge, Simplex tri) {
  return tri.nth(0) < edge.min() && edge.min() < tri.nth(1) && tri.nth(1) < edge.max() && edge.max() < tri.nth(2);
}

std::set<Simplex> edges_of(const Triangulation& t, VertexSet within) {
  std::set<Simplex> out;
  for (Simplex f : t.facets)
    for (Simplex e : faces_of_size(f, 2))
      if (as_vertex_set(e).is_subset_of(within)) out.insert(e);
  return out;
}

// Stacking order of a planar triangulation from the triangle on `root_edge`:
// each triangle contributes its one vertex not seen before, smallest first.
std::vector<Vertex> coning_order(const Triangulation& t2, Simplex root_edge) {
  const auto& tris = t2.facets;
  auto adjacent = [](Simplex a, Simplex b) { return (a & b).size() == 2; };
  int root = -1;
  for (std::size_t i = 0; i < tris.size(); ++i)
    if (root_edge.is_subset_of(tris[i])) root = static_cast<int>(i);
  if (root < 0) throw InternalConsistency("no triangle on edge " + root_edge.to_string());

  using Item = std::pair<Vertex, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<char> seen(tris.size(), 0);
  seen[root] = 1;
  heap.emplace((tris[root] - root_edge).min(), root);
  std::vector<Vertex> order;
  while (!heap.empty()) {
    const auto [v, i] = heap.top();
    heap.pop();
    order.push_back(v);
    for (std::size_t j = 0; j < tris.size(); ++j) {
      if (seen[j] || !adjacent(tris[i], tris[j])) continue;
      seen[j] = 1;
      heap.emplace((tris[j] - tris[i]).min(), static_cast<int>(j));
    }
  }
  return order;
}

void check_input(Simplex sigma, const std::vector<Simplex>& taus, int n) {
  if (n < 4) throw InvalidInput("level triangulation needs n >= 4, got " + std::to_string(n));
  auto check_shape = [n](Simplex s) {
    if (s.size() != 3 || s.max() > n) throw InvalidInput("not a triangle on [n]: " + s.to_string());
  };
  check_shape(sigma);
  std::vector<Simplex> all{sigma};
  for (Simplex t : taus) {
    check_shape(t);
    if (std::find(all.begin(), all.end(), t) != all.end()) throw InvalidInput("repeated triangle " + t.to_string());
    if (t.min() < sigma.min() || (t.min() == sigma.min() && t.max() > sigma.max()))
      throw InvalidInput("triangle " + t.to_string() + " precedes " + sigma.to_string() + " in the min/max order");
    all.push_back(t);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (overlaps(all[i], all[j], kLift))
        throw InvalidInput("liftings of " + all[i].to_string() + " and " + all[j].to_string() + " overlap");
}

void note(std::vector<std::string>* log, std::string s) {
  if (log) log->push_back(std::move(s));
}

// The construction on W = [v1, n] with |W| >= 4.
Triangulation level_on_interval(Simplex sigma, const std::vector<Simplex>& taus, int n,
                                std::vector<std::string>* log) {
  const Vertex v1 = sigma.nth(0), v2 = sigma.nth(1), v3 = sigma.nth(2);
  const VertexSet w = VertexSet::interval(v1, n);
  const VertexSet i_m = VertexSet::interval(v2 + 1, v3 - 1);
  const VertexSet v0 = w - i_m;
  if (v0 == as_vertex_set(sigma)) {
    note(log, "V0 = sigma: upper envelope of " + w.to_string());
    return envelope_triangulation(w, kSpace, Envelope::Upper);
  }
  Triangulation t = envelope_triangulation(v0, kSpace, Envelope::Upper);
  note(log, "T0 = upper envelope of " + v0.to_string());
  if (i_m.empty()) return t;

  const VertexSet j_l = VertexSet::interval(v1, v2 - 1);
  const VertexSet j_m = VertexSet::interval(v2, v3);
  const VertexSet j_r = VertexSet::interval(v3 + 1, n);
  std::set<Simplex> l, r, m;
  for (Simplex tau : taus) {
    const VertexSet tv = as_vertex_set(tau);
    const int inside = (tv & j_m).size();
    if (inside <= 1) {
      note(log, "ignore " + tau.to_string());
    } else if (inside == 3) {
      m.insert(tau);
      note(log, "type M " + tau.to_string());
    } else if (!(tv & j_l).empty()) {
      l.insert(as_simplex(tv & j_m));
      note(log, "type L " + tau.to_string());
    } else if (!(tv & j_r).empty()) {
      r.insert(as_simplex(tv & j_m));
      note(log, "type R " + tau.to_string());
    } else {
      throw InternalConsistency("triangle " + tau.to_string() + " fits no type");
    }
  }
  const LMRInstance inst{j_m, {l.begin(), l.end()}, {r.begin(), r.end()}, {m.begin(), m.end()}};
  const Triangulation t2 = lmr_triangulate(inst, log);

  const auto order = coning_order(t2, Simplex{v2, v3});
  for (Vertex q : order) {
    t = cone(t, q);
    note(log, "cone over " + std::to_string(q));
  }
  if (edges_of(t, j_m) != edges_of(t2, j_m))
    throw InternalConsistency("coning order did not reproduce the planar triangulation on " + j_m.to_string());
  return t;
}

}  // namespace

Triangulation level_triangulation_d3(Simplex sigma, const std::vector<Simplex>& taus, int n,
                                     std::vector<std::string>* log) {
  check_input(sigma, taus, n);
  const Vertex v1 = sigma.min();
  Triangulation t = n - v1 + 1 == 3 ? Triangulation::make(VertexSet::interval(v1 - 1, n), kSpace,
                                                          {as_simplex(VertexSet::interval(v1 - 1, n))})
                                    : level_on_interval(sigma, taus, n, log);
  for (Vertex q = t.ground.min() - 1; q >= 1; --q) {
    t = cone(t, q);
    note(log, "cone over " + std::to_string(q));
  }

  require_valid(t, "level_triangulation_d3");
  if (!t.has_face(sigma)) throw InternalConsistency("level triangulation misses " + sigma.to_string());
  std::set<Simplex> edges = edges_of(t, t.ground);
  for (Simplex tau : taus) {
    for (Simplex e : edges)
      if (five_interlacing(e, tau))
        throw InternalConsistency("edge " + e.to_string() + " 5-interlaces " + tau.to_string());
    if (!simplex_below(tau, t)) throw InternalConsistency("triangle " + tau.to_string() + " is not below T");
  }
  return t;
}

}  // namespace cyclic
