#include "cyclic/extension.hpp"

#include <algorithm>
#include <set>

namespace cyclic {

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Greedy: return "greedy";
    case Strategy::Constructive: return "constructive";
    case Strategy::SmallN: return "small-n";
    case Strategy::Single: return "single";
  }
  return "?";
}

Complex Complex::make(VertexSet ground, Dim d, std::vector<Simplex> simplices) {
  for (Simplex s : simplices) {
    if (s.empty()) throw InvalidInput("empty simplex");
    if (!as_vertex_set(s).is_subset_of(ground))
      throw InvalidInput("simplex " + s.to_string() + " is not on " + ground.to_string());
    if (s.size() > d.value() + 1)
      throw InvalidInput("simplex " + s.to_string() + " has more than d+1 = " + std::to_string(d.value() + 1) +
                         " vertices");
  }
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  for (std::size_t i = 0; i < simplices.size(); ++i)
    for (std::size_t j = i + 1; j < simplices.size(); ++j)
      if (overlaps(simplices[i], simplices[j], d))
        throw InvalidInput("simplices " + simplices[i].to_string() + " and " + simplices[j].to_string() +
                           " overlap in dimension " + std::to_string(d.value()));
  std::vector<Simplex> maximal;
  for (Simplex s : simplices) {
    const bool covered = std::any_of(simplices.begin(), simplices.end(),
                                     [&](Simplex t) { return t != s && s.is_subset_of(t); });
    if (!covered) maximal.push_back(s);
  }
  return Complex{ground, d, std::move(maximal)};
}

Complex skeleton_reduce(const Complex& f) {
  const int d = f.d.value();
  if (d != 3 && d != 4) throw Unsupported("skeleton reduction is defined for d = 3 and d = 4, got " + std::to_string(d));
  std::vector<Simplex> out;
  for (Simplex s : f.simplices) {
    if (s.size() >= 4) {
      for (Simplex t : faces_of_size(s, 3)) out.push_back(t);
    } else if (s.size() == 3 || (d == 3 && s.size() == 2)) {
      out.push_back(s);
    }
  }
  return Complex::make(f.ground, f.d, std::move(out));
}

namespace {

void require_faces(const Triangulation& t, const std::vector<Simplex>& faces, std::string_view context) {
  for (Simplex s : faces)
    if (!t.has_face(s))
      throw InternalConsistency(std::string(context) + ": input simplex " + s.to_string() + " is not a face");
}

Triangulation from_masks(VertexSet ground, Dim d, const std::vector<Mask>& masks) {
  std::vector<Simplex> facets;
  for (Mask m : masks) facets.push_back(Simplex::from_mask(m));
  return Triangulation::make(ground, d, std::move(facets));
}

}  // namespace

ExtensionResult greedy_extend(const Complex& f) {
  const Dim d = f.d;
  if (f.ground.size() < d.value() + 1) throw InvalidInput("need at least d+1 vertices");
  ExtensionResult result{Triangulation{f.ground, d, {}}, Strategy::Greedy, {}, {}};
  RidgeState state(f.ground, d);
  if (d.value() == 3 || d.value() == 4) {
    for (Simplex s : skeleton_reduce(f).simplices) state.add_obstacle(s);
  } else {
    for (Simplex s : f.simplices) {
      if (s.size() == d.value() + 1) {
        state.place(s.mask());
        result.steps.push_back("input facet " + s.to_string());
      } else {
        state.add_obstacle(s);
      }
    }
  }

  auto& stats = result.stats;
  while (!state.complete()) {
    const Simplex ridge = *state.active().begin();
    std::optional<Mask> chosen;
    for (Vertex v : (f.ground - as_vertex_set(ridge)).vertices()) {
      const Mask c = ridge.mask() | (Mask{1} << v);
      if (state.has_facet(c)) continue;
      if (!state.overlaps_anything(c, stats)) {
        chosen = c;
        break;
      }
    }
    if (!chosen) {
      ++stats.dead_ends;
      std::vector<Simplex> facets;
      for (Mask m : state.facets()) facets.push_back(Simplex::from_mask(m));
      throw GreedyStuck("greedy extension is stuck at ridge " + ridge.to_string(), ridge, std::move(facets),
                        std::move(result.steps));
    }
    state.place(*chosen);
    ++stats.nodes;
    result.steps.push_back(ridge.to_string() + " -> " + Simplex::from_mask(*chosen).to_string());
  }
  ++stats.completions;

  result.triangulation = from_masks(f.ground, d, state.facets());
  require_valid(result.triangulation, "greedy_extend");
  require_faces(result.triangulation, f.simplices, "greedy_extend");
  return result;
}

ExtensionResult extend_small(const Complex& f) {
  const int d = f.d.value();
  const int n = f.ground.size();
  ExtensionResult result{Triangulation{f.ground, f.d, {}}, Strategy::SmallN, {}, {}};
  if (n == d + 1) {
    result.triangulation = Triangulation::make(f.ground, f.d, {as_simplex(f.ground)});
    result.steps.push_back("single simplex");
  } else if (n == d + 2) {
    Mask odd = 0, even = 0;
    int pos = 0;
    f.ground.for_each([&](Vertex v) { (pos++ % 2 == 0 ? odd : even) |= Mask{1} << v; });
    auto inside_member = [&](Mask part) {
      return std::any_of(f.simplices.begin(), f.simplices.end(),
                         [&](Simplex s) { return (part & ~s.mask()) == 0; });
    };
    Mask sigma = odd, tau = even;
    if (inside_member(odd)) {
      if (inside_member(even))
        throw InternalConsistency("both Radon parts lie in members of the family");
      std::swap(sigma, tau);
    }
    std::vector<Simplex> facets;
    for (Mask b = sigma; b; b &= b - 1) facets.push_back(Simplex::from_mask((sigma & ~(b & -b)) | tau));
    result.triangulation = Triangulation::make(f.ground, f.d, std::move(facets));
    result.steps.push_back("Radon part " + Simplex::from_mask(sigma).to_string() + " joined with boundary of " +
                           Simplex::from_mask(tau).to_string());
  } else {
    throw InvalidInput("small-n extension needs n = d+1 or n = d+2, got n = " + std::to_string(n));
  }
  require_valid(result.triangulation, "extend_small");
  require_faces(result.triangulation, f.simplices, "extend_small");
  return result;
}

Triangulation extend_single(Simplex sigma, VertexSet v, Dim d) {
  if (sigma.size() != d.value() + 1)
    throw InvalidInput("simplex " + sigma.to_string() + " is not full-dimensional in dimension " +
                       std::to_string(d.value()));
  if (!as_vertex_set(sigma).is_subset_of(v)) throw InvalidInput("simplex " + sigma.to_string() + " is not on " + v.to_string());
  Triangulation t = Triangulation::make(as_vertex_set(sigma), d, {sigma});
  (v - as_vertex_set(sigma)).for_each([&](Vertex q) { t = cone(t, q); });
  require_valid(t, "extend_single");
  return t;
}

namespace {

// A path of covers from a up to b (a <= b), excluding a.
std::vector<int> cover_path(const HSTPoset& p, int a, int b) {
  std::vector<int> path;
  while (a != b) {
    int next = -1;
    for (auto [lo, hi] : p.covers)
      if (lo == a && p.leq[hi][b]) {
        next = hi;
        break;
      }
    if (next < 0) throw InternalConsistency("no cover path between poset elements");
    path.push_back(next);
    a = next;
  }
  return path;
}

}  // namespace

ExtensionResult constructive_extend(const Complex& f, std::uint64_t node_budget) {
  const int big_d = f.d.value();
  if (big_d != 3 && big_d != 4) throw Unsupported("constructive extension needs D = 3 or D = 4");
  const int n = f.n();
  if (f.ground != VertexSet::range(n)) throw InvalidInput("constructive extension needs the ground set [n]");
  if (n < big_d + 1) throw InvalidInput("need at least D+1 vertices");
  if ((big_d == 3 && n > 9) || (big_d == 4 && n > 8))
    throw ResourceExhausted("constructive extension enumerates HST(n, D-1); n = " + std::to_string(n) +
                            " is beyond desk scale");
  const Dim d(big_d - 1);
  ExtensionResult result{Triangulation{f.ground, f.d, {}}, Strategy::Constructive, {}, {}};
  auto& steps = result.steps;

  const Complex reduced = skeleton_reduce(f);
  std::vector<Simplex> order;
  if (big_d == 3) {
    order = order_simplices(reduced.simplices, d);
  } else {
    order = reduced.simplices;
    std::sort(order.begin(), order.end(), [](Simplex a, Simplex b) {
      if (a.min() != b.min()) return a.min() > b.min();
      if (a.max() != b.max()) return a.max() < b.max();
      return a < b;
    });
  }

  std::vector<Triangulation> levels;
  for (std::size_t i = 0; i < order.size(); ++i) {
    steps.push_back("level for " + order[i].to_string());
    if (big_d == 3) {
      levels.push_back(t_of_sigma_d2(order[i], n));
    } else {
      const std::vector<Simplex> earlier(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i));
      levels.push_back(level_triangulation_d3(order[i], earlier, n, &steps));
    }
  }
  std::vector<Triangulation> s(levels.size(), Triangulation{f.ground, d, {}});
  for (std::size_t k = levels.size(); k-- > 0;) s[k] = k + 1 == levels.size() ? levels[k] : meet(levels[k], s[k + 1]);

  const HSTPoset poset = hst_poset(n, d, node_budget);
  std::vector<int> chain{poset.minimum};
  for (const Triangulation& sk : s) {
    const int idx = poset.index_of(sk);
    if (idx < 0) throw InternalConsistency("meet is not an element of the poset");
    for (int x : cover_path(poset, chain.back(), idx)) chain.push_back(x);
  }
  for (int x : cover_path(poset, chain.back(), poset.maximum)) chain.push_back(x);
  steps.push_back("maximal chain of length " + std::to_string(chain.size()));

  std::vector<Triangulation> members;
  for (int i : chain) members.push_back(poset.elements[i]);
  result.triangulation = psi_chain(members, poset);
  require_faces(result.triangulation, f.simplices, "constructive_extend");
  return result;
}

}  // namespace cyclic
