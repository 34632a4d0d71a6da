// Planar (d = 2) constructions: T(sigma), separating triangulations and the
// LMR lemma. Vertex sets are convex polygons whose cyclic order is the
// natural order of indices.

#include <algorithm>
#include <set>

#include "cyclic/extension.hpp"

namespace cyclic {

namespace {

const Dim kPlane(2);

// Fan of the convex polygon on `w` at its maximum vertex.
void fan_at_max(VertexSet w, std::vector<Simplex>& out) {
  if (w.size() < 3) return;
  const auto v = w.vertices();
  const Vertex m = v.back();
  for (std::size_t i = 0; i + 2 < v.size(); ++i) out.push_back(Simplex{v[i], v[i + 1], m});
}

std::vector<Simplex> polygon_edges(VertexSet v) {
  const auto vs = v.vertices();
  std::vector<Simplex> out;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) out.push_back(Simplex{vs[i], vs[i + 1]});
  if (vs.size() >= 3) out.push_back(Simplex{vs.front(), vs.back()});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_polygon_edge(Simplex e, VertexSet v) {
  if (!as_vertex_set(e).is_subset_of(v)) return false;
  const Vertex a = e.min(), b = e.max();
  if (a == v.min() && b == v.max()) return true;
  return (v & VertexSet::interval(a + 1, b - 1)).empty();
}

// v1 < l1 < v2 < l2
bool le_violation(Simplex e, Simplex l) { return e.min() < l.min() && l.min() < e.max() && e.max() < l.max(); }
// r1 < v1 < r2 < v2
bool re_violation(Simplex e, Simplex r) { return r.min() < e.min() && e.min() < r.max() && r.max() < e.max(); }
// w1 < v1 < w2 < v2 < w3
bool me_violation(Simplex e, Simplex t) {
  const Vertex w2 = t.nth(1);
  return t.min() < e.min() && e.min() < w2 && w2 < e.max() && e.max() < t.max();
}

bool six_interlacing(Simplex a, Simplex b) {
  auto pattern = [](Simplex x, Simplex y) {
    return x.nth(0) < y.nth(0) && y.nth(0) < x.nth(1) && x.nth(1) < y.nth(1) && y.nth(1) < x.nth(2) &&
           x.nth(2) < y.nth(2);
  };
  return pattern(a, b) || pattern(b, a);
}

std::string describe(const LMRInstance& inst) {
  auto list = [](const std::vector<Simplex>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i].to_string();
    return out + "]";
  };
  return "V=" + inst.v.to_string() + " L=" + list(inst.l) + " R=" + list(inst.r) + " M=" + list(inst.m);
}

class LmrSolver {
 public:
  LmrSolver(std::vector<std::string>* log) : log_(log) {}

  std::vector<Simplex> solve(LMRInstance inst) {
    if (auto bad = lmr_violation(inst)) throw InternalConsistency("lmr recursion lost an invariant: " + *bad);
    if (inst.v.size() == 3) return {as_simplex(inst.v)};
    reduce(inst);
    if (inst.m.empty()) return only_lr(inst);
    const Simplex diag = find_diagonal(inst);
    note("diagonal " + diag.to_string() + " of " + inst.v.to_string());
    LMRInstance inner = inst, outer = inst;
    inner.v = inst.v & VertexSet::interval(diag.min(), diag.max());
    outer.v = inst.v - VertexSet::interval(diag.min() + 1, diag.max() - 1);
    auto out = solve(inner);
    auto rest = solve(outer);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

 private:
  void note(std::string s) {
    if (log_) log_->push_back(std::move(s));
  }

  static Vertex ambient_max(const LMRInstance& inst) {
    Vertex n = inst.v.max();
    for (const auto* group : {&inst.l, &inst.r, &inst.m})
      for (Simplex s : *group) n = std::max(n, s.max());
    return n;
  }

  // Vertices of [n] weakly cut off from V by the separating edge of x (x not in V).
  static bool in_pocket(Vertex x, Vertex y, VertexSet v) {
    if (x > v.min() && x < v.max()) {
      const Vertex a = (v & VertexSet::interval(1, x - 1)).max();
      const Vertex b = (v & VertexSet::interval(x + 1, kMaxVertex)).min();
      return a <= y && y <= b;
    }
    return y <= v.min() || y >= v.max();
  }

  static bool same_side(Vertex a, Vertex b, VertexSet v) {
    if (a == b) return true;
    if (v.contains(a) && v.contains(b)) return is_polygon_edge(Simplex{std::min(a, b), std::max(a, b)}, v);
    return (!v.contains(a) && in_pocket(a, b, v)) || (!v.contains(b) && in_pocket(b, a, v));
  }

  static bool outer_side(Vertex w, const LMRInstance& inst) {
    return same_side(w, 1, inst.v) && same_side(w, ambient_max(inst), inst.v);
  }

  // True iff some pair v1 < v2 of V has v1 in (a, b).
  static bool v_between(Vertex a, Vertex b, VertexSet v) {
    return b - a > 1 && !(v & VertexSet::interval(a + 1, b - 1)).empty();
  }

  void drop_if(std::vector<Simplex>& items, const char* rule, auto&& pred, auto&& harmless) {
    std::vector<Simplex> kept;
    for (Simplex s : items) {
      if (!pred(s)) {
        kept.push_back(s);
        continue;
      }
      if (!harmless(s)) throw InternalConsistency(std::string(rule) + " would drop a relevant element " + s.to_string());
      note(std::string(rule) + " drop " + s.to_string());
    }
    items = std::move(kept);
  }

  void reduce(LMRInstance& inst) {
    const VertexSet v = inst.v;
    auto never_hit_le = [&](Simplex l) { return !v_between(l.min(), l.max(), v) || is_polygon_edge(l, v); };
    auto never_hit_re = [&](Simplex r) { return !v_between(r.min(), r.max(), v) || is_polygon_edge(r, v); };
    auto never_hit_me = [&](Simplex t) {
      return !v_between(t.nth(0), t.nth(1), v) || !v_between(t.nth(1), t.nth(2), v);
    };
    drop_if(inst.l, "(P)", [&](Simplex l) { return is_polygon_edge(l, v); }, never_hit_le);
    drop_if(inst.r, "(P)", [&](Simplex r) { return is_polygon_edge(r, v); }, never_hit_re);
    drop_if(
        inst.m, "(Ms)",
        [&](Simplex t) { return same_side(t.nth(1), t.nth(0), v) || same_side(t.nth(1), t.nth(2), v); },
        never_hit_me);
    drop_if(
        inst.l, "(LV)", [&](Simplex l) { return !v.contains(l.min()) && !outer_side(l.min(), inst); }, never_hit_le);
    drop_if(
        inst.r, "(RV)", [&](Simplex r) { return !v.contains(r.max()) && !outer_side(r.max(), inst); }, never_hit_re);
  }

  std::vector<Simplex> only_lr(const LMRInstance& inst) {
    SeparatingInput sets;
    std::set<Simplex> left(inst.l.begin(), inst.l.end()), right(inst.r.begin(), inst.r.end());
    for (Simplex e : left) (right.count(e) ? sets.e2 : sets.e1).push_back(e);
    for (Simplex e : right)
      if (!left.count(e)) sets.e3.push_back(e);
    for (Simplex e : polygon_edges(inst.v)) sets.e2.push_back(e);
    note("no middle triangles on " + inst.v.to_string() + ": separating triangulation");
    const auto full = separating_triangulation(sets, std::max<int>(ambient_max(inst), 3));
    std::vector<Simplex> out;
    for (Simplex f : full.facets)
      if (as_vertex_set(f).is_subset_of(inst.v)) out.push_back(f);
    if (static_cast<int>(out.size()) != inst.v.size() - 2)
      throw InternalConsistency("separating triangulation does not contain the polygon " + inst.v.to_string());
    return out;
  }

  static LMRInstance reflect(const LMRInstance& inst, Vertex n) {
    auto flip = [n](Simplex s) {
      Mask m = 0;
      s.for_each([&](Vertex x) { m |= Mask{1} << (n + 1 - x); });
      return Simplex::from_mask(m);
    };
    auto flip_all = [&](const std::vector<Simplex>& in) {
      std::vector<Simplex> out;
      for (Simplex s : in) out.push_back(flip(s));
      std::sort(out.begin(), out.end());
      return out;
    };
    LMRInstance out;
    out.v = as_vertex_set(flip(as_simplex(inst.v)));
    out.l = flip_all(inst.r);
    out.r = flip_all(inst.l);
    out.m = flip_all(inst.m);
    return out;
  }

  Simplex find_diagonal(const LMRInstance& inst) {
    Simplex t = inst.m.front();
    for (Simplex c : inst.m)
      if (c.max() - c.min() > t.max() - t.min()) t = c;
    const Vertex w1 = t.nth(0), w2 = t.nth(1), w3 = t.nth(2);
    const bool case_i = std::none_of(inst.r.begin(), inst.r.end(), [&](Simplex r) {
      return r.min() < w2 && w2 < r.max() && r.max() < w3;
    });
    const bool case_ii = std::none_of(inst.l.begin(), inst.l.end(), [&](Simplex l) {
      return w1 < l.min() && l.min() < w2 && w2 < l.max();
    });
    if (case_i && inst.v.max() >= w3) {
      note("middle triangle " + t.to_string() + ", case (i)");
      return descend(inst, t);
    }
    if (case_ii && inst.v.min() <= w1) {
      note("middle triangle " + t.to_string() + ", case (ii) by reflection");
      const Vertex n = ambient_max(inst);
      const LMRInstance mirrored = reflect(inst, n);
      const Simplex mt = Simplex{n + 1 - w3, n + 1 - w2, n + 1 - w1};
      const Simplex d = descend(mirrored, mt);
      return Simplex{n + 1 - d.max(), n + 1 - d.min()};
    }
    throw InternalConsistency("neither case applies to middle triangle " + t.to_string() + " in " + describe(inst));
  }

  // Case (i): a diagonal w2 q with q >= w3, found by the descending sequence q_0 > q_1 > ...
  Simplex descend(const LMRInstance& inst, Simplex t) {
    const Vertex w2 = t.nth(1), w3 = t.nth(2);
    if (!inst.v.contains(w2))
      throw InternalConsistency("middle vertex " + std::to_string(w2) + " outside " + inst.v.to_string());
    const Vertex m = inst.v.max();
    Simplex e{w2, m};
    Vertex q = 0;  // 0: no violation left
    auto lower = [&q](Vertex x) { q = q == 0 ? x : std::min(q, x); };
    for (Simplex p : inst.m)
      if (me_violation(e, p)) lower(p.nth(1));
    for (Simplex r : inst.r)
      if (re_violation(e, r)) lower(r.max());
    while (q != 0) {
      if (q < w3 || q >= e.max() || !inst.v.contains(q))
        throw InternalConsistency("descent left the admissible range at " + std::to_string(q) + " in " +
                                  describe(inst));
      e = Simplex{w2, q};
      note("descend to " + e.to_string());
      q = 0;
      for (Simplex p : inst.m)
        if (me_violation(e, p)) lower(p.nth(1));
    }
    if (is_polygon_edge(e, inst.v) || !satisfies_le(e, inst) || !satisfies_me(e, inst) || !satisfies_re(e, inst))
      throw InternalConsistency("no admissible diagonal from " + std::to_string(w2) + " in " + describe(inst));
    return e;
  }

  std::vector<std::string>* log_;
};

}  // namespace

Triangulation t_of_sigma_d2(Simplex sigma, int n) {
  if (sigma.size() != 2 && sigma.size() != 3)
    throw InvalidInput("T(sigma) needs an edge or a triangle, got " + sigma.to_string());
  if (n < 3 || sigma.max() > n) throw InvalidInput("simplex " + sigma.to_string() + " is not on [" + std::to_string(n) + "]");
  const auto v = sigma.vertices();
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) fan_at_max(VertexSet::interval(v[i], v[i + 1]), facets);
  fan_at_max(VertexSet::interval(1, v.front()) | VertexSet::interval(v.back(), n), facets);
  if (sigma.size() == 3) facets.push_back(sigma);
  auto t = Triangulation::make(VertexSet::range(n), kPlane, std::move(facets));
  require_valid(t, "t_of_sigma_d2");
  return t;
}

Triangulation separating_triangulation(const SeparatingInput& sets, const std::vector<Simplex>& order, int n) {
  std::vector<int> block;
  std::set<Simplex> seen;
  const std::vector<Simplex>* groups[] = {&sets.e1, &sets.e2, &sets.e3};
  std::vector<std::pair<Simplex, int>> members;
  for (int g = 0; g < 3; ++g) {
    for (Simplex e : *groups[g]) {
      if (e.size() != 2 || e.max() > n) throw InvalidInput("not an edge on [n]: " + e.to_string());
      if (!seen.insert(e).second) throw InvalidInput("edge " + e.to_string() + " appears in two sets");
      members.emplace_back(e, g);
    }
  }
  if (order.size() != members.size()) throw InvalidInput("order does not list every edge exactly once");
  for (Simplex e : order) {
    const auto it = std::find_if(members.begin(), members.end(), [&](const auto& p) { return p.first == e; });
    if (it == members.end()) throw InvalidInput("order lists unknown edge " + e.to_string());
    block.push_back(it->second);
  }
  if (std::set<Simplex>(order.begin(), order.end()).size() != order.size())
    throw InvalidInput("order repeats an edge");
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const std::string pair = order[i].to_string() + " before " + order[j].to_string();
      if (block[i] > block[j]) throw InvalidInput("order breaks the block structure: " + pair);
      if (overlaps(order[i], order[j], kPlane) && !height_less(order[i], order[j], kPlane))
        throw InvalidInput("crossing edges out of height order: " + pair);
      if (block[i] == 1 && block[j] == 1 && overlaps(order[i], order[j], kPlane))
        throw InvalidInput("edges of E2 cross: " + pair);
    }
  }

  const VertexSet ground = VertexSet::range(n);
  std::optional<Triangulation> t;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (block[i] == 0) continue;
    const auto ti = t_of_sigma_d2(order[i], n);
    t = t ? meet(*t, ti) : ti;
  }
  const Triangulation result = t ? *t : envelope_triangulation(ground, kPlane, Envelope::Upper);
  for (Simplex e : sets.e1)
    if (!simplex_below(e, result)) throw InternalConsistency("separating triangulation is below " + e.to_string());
  for (Simplex e : sets.e2)
    if (!result.has_face(e)) throw InternalConsistency("separating triangulation misses " + e.to_string());
  for (Simplex e : sets.e3)
    if (!simplex_above(e, result)) throw InternalConsistency("separating triangulation is above " + e.to_string());
  return result;
}

Triangulation separating_triangulation(const SeparatingInput& sets, int n) {
  std::vector<Simplex> order;
  for (const auto* g : {&sets.e1, &sets.e2, &sets.e3}) {
    const auto part = order_simplices(*g, kPlane);
    order.insert(order.end(), part.begin(), part.end());
  }
  return separating_triangulation(sets, order, n);
}

bool satisfies_le(Simplex e, const LMRInstance& inst) {
  return std::none_of(inst.l.begin(), inst.l.end(), [&](Simplex l) { return le_violation(e, l); });
}

bool satisfies_me(Simplex e, const LMRInstance& inst) {
  return std::none_of(inst.m.begin(), inst.m.end(), [&](Simplex t) { return me_violation(e, t); });
}

bool satisfies_re(Simplex e, const LMRInstance& inst) {
  return std::none_of(inst.r.begin(), inst.r.end(), [&](Simplex r) { return re_violation(e, r); });
}

std::optional<std::string> lmr_violation(const LMRInstance& inst) {
  if (inst.v.size() < 3) return "polygon " + inst.v.to_string() + " has fewer than 3 vertices";
  for (const auto* g : {&inst.l, &inst.r})
    for (Simplex e : *g)
      if (e.size() != 2) return "not an edge: " + e.to_string();
  for (Simplex t : inst.m)
    if (t.size() != 3) return "not a triangle: " + t.to_string();
  for (Simplex l : inst.l)
    for (Simplex r : inst.r)
      if (r.min() < l.min() && l.min() < r.max() && r.max() < l.max())
        return "(LR) fails for " + l.to_string() + " and " + r.to_string();
  for (const auto* g : {&inst.l, &inst.r})
    for (Simplex e : *g)
      for (Simplex t : inst.m)
        if (me_violation(e, t)) return "(LMR) fails for " + e.to_string() + " and " + t.to_string();
  for (std::size_t i = 0; i < inst.m.size(); ++i)
    for (std::size_t j = i + 1; j < inst.m.size(); ++j)
      if (six_interlacing(inst.m[i], inst.m[j]))
        return "(MM) fails for " + inst.m[i].to_string() + " and " + inst.m[j].to_string();
  for (Simplex e : polygon_edges(inst.v)) {
    if (!satisfies_le(e, inst)) return "polygon edge " + e.to_string() + " violates (Le)";
    if (!satisfies_me(e, inst)) return "polygon edge " + e.to_string() + " violates (Me)";
    if (!satisfies_re(e, inst)) return "polygon edge " + e.to_string() + " violates (Re)";
  }
  return std::nullopt;
}

Triangulation lmr_triangulate(const LMRInstance& inst, std::vector<std::string>* log) {
  if (auto bad = lmr_violation(inst)) throw InvalidInput("invalid LMR instance: " + *bad);
  LmrSolver solver(log);
  auto t = Triangulation::make(inst.v, kPlane, solver.solve(inst));
  require_valid(t, "lmr_triangulate");
  for (Simplex f : t.facets) {
    for (Simplex e : faces_of_size(f, 2)) {
      if (!satisfies_le(e, inst) || !satisfies_me(e, inst) || !satisfies_re(e, inst))
        throw InternalConsistency("lmr_triangulate produced a forbidden edge " + e.to_string() + " for " +
                                  describe(inst));
    }
  }
  return t;
}

}  // namespace cyclic
