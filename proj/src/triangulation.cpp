#include "cyclic/triangulation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cyclic/exact_geometry.hpp"
#include "cyclic/parallel.hpp"
#include "cyclic/ridge_search.hpp"

namespace cyclic {

namespace {

void require_same_polytope(const Triangulation& a, const Triangulation& b) {
  if (a.ground != b.ground || a.d != b.d)
    throw InvalidInput("triangulations live on different polytopes: " + a.ground.to_string() + " d=" +
                       std::to_string(a.d.value()) + " vs " + b.ground.to_string() + " d=" +
                       std::to_string(b.d.value()));
}

Rational reference_volume(VertexSet ground, Dim d) {
  static std::mutex mutex;
  static std::map<std::pair<Mask, int>, Rational> cache;
  const auto key = std::make_pair(ground.mask(), d.value());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Rational total(0);
  for (Simplex f : envelope_triangulation(ground, d, Envelope::Lower).facets) total += simplex_volume(f, d);
  std::lock_guard lock(mutex);
  cache.emplace(key, total);
  return total;
}

bool classifies_within(Simplex sigma, const Triangulation& t, PairClass allowed) {
  if (sigma.empty() || sigma.size() > t.d.value() + 1)
    throw InvalidInput("simplex " + sigma.to_string() + " does not fit in dimension " + std::to_string(t.d.value()));
  for (Simplex tau : t.facets) {
    const PairClass c = classify_unchecked(sigma.mask(), tau.mask(), t.d.value());
    if (c != PairClass::A && c != allowed) return false;
  }
  return true;
}

// Closure of a facet family under taking subsets.
std::unordered_set<Mask> all_faces(const std::vector<Simplex>& facets) {
  std::unordered_set<Mask> out;
  for (Simplex f : facets) {
    const Mask m = f.mask();
    for (Mask sub = m; sub; sub = (sub - 1) & m) out.insert(sub);
  }
  return out;
}

bool facets_less(const Triangulation& a, const Triangulation& b) { return a.facets < b.facets; }

}  // namespace

Triangulation Triangulation::make(VertexSet ground, Dim d, std::vector<Simplex> facets) {
  if (ground.size() < d.value() + 1)
    throw InvalidInput("vertex set " + ground.to_string() + " is too small for dimension " +
                       std::to_string(d.value()));
  for (Simplex f : facets) {
    if (f.size() != d.value() + 1)
      throw InvalidInput("facet " + f.to_string() + " does not have " + std::to_string(d.value() + 1) + " vertices");
    if (!as_vertex_set(f).is_subset_of(ground))
      throw InvalidInput("facet " + f.to_string() + " leaves the vertex set " + ground.to_string());
  }
  std::sort(facets.begin(), facets.end());
  if (auto dup = std::adjacent_find(facets.begin(), facets.end()); dup != facets.end())
    throw InvalidInput("facet " + dup->to_string() + " listed twice");
  return Triangulation{ground, d, std::move(facets)};
}

bool Triangulation::contains(Simplex facet) const { return std::binary_search(facets.begin(), facets.end(), facet); }

bool Triangulation::has_face(Simplex face) const {
  return std::any_of(facets.begin(), facets.end(), [&](Simplex f) { return face.is_subset_of(f); });
}

std::string_view to_string(FailureKind k) noexcept {
  switch (k) {
    case FailureKind::OverlapPair: return "overlap-pair";
    case FailureKind::MissingBoundaryRidge: return "missing-boundary-ridge";
    case FailureKind::BadRidgeMultiplicity: return "bad-ridge-multiplicity";
    case FailureKind::VolumeMismatch: return "volume-mismatch";
  }
  return "?";
}

ValidityReport validate(const Triangulation& t) {
  ValidityReport report;
  auto fail = [&](FailureKind k, std::vector<Simplex> w) {
    report.ok = false;
    report.failures.push_back({k, std::move(w)});
  };
  const int d = t.d.value();

  for (std::size_t i = 0; i < t.facets.size(); ++i)
    for (std::size_t j = i + 1; j < t.facets.size(); ++j)
      if (overlaps_unchecked(t.facets[i].mask(), t.facets[j].mask(), d))
        fail(FailureKind::OverlapPair, {t.facets[i], t.facets[j]});

  std::map<Simplex, int> ridges;
  for (Simplex f : t.facets)
    f.for_each([&](Vertex v) { ++ridges[f.without(v)]; });
  std::set<Simplex> boundary;
  for (Simplex r : gale_facets(t.ground, t.d).all()) {
    boundary.insert(r);
    const auto it = ridges.find(r);
    const int c = it == ridges.end() ? 0 : it->second;
    if (c == 0) fail(FailureKind::MissingBoundaryRidge, {r});
    else if (c > 1) fail(FailureKind::BadRidgeMultiplicity, {r});
  }
  for (const auto& [r, c] : ridges)
    if (!boundary.count(r) && c != 2) fail(FailureKind::BadRidgeMultiplicity, {r});

  Rational total(0);
  for (Simplex f : t.facets) total += simplex_volume(f, t.d);
  if (total != reference_volume(t.ground, t.d)) fail(FailureKind::VolumeMismatch, {});
  return report;
}

void require_valid(const Triangulation& t, std::string_view context) {
  const auto report = validate(t);
  if (report.ok) return;
  std::string msg = std::string(context) + ": invalid triangulation, " + std::string(to_string(report.failures[0].kind));
  for (Simplex s : report.failures[0].witness) msg += " " + s.to_string();
  throw InternalConsistency(msg);
}

SubmersionSet submersion_set(const Triangulation& t) {
  SubmersionSet out{t.d.value(), {}};
  for (Simplex s : subsets_of_size(t.ground, t.d.half_up() + 1))
    if (simplex_below(s, t)) out.members.push_back(s);
  return out;
}

SubmersionSet intersect(const SubmersionSet& a, const SubmersionSet& b) {
  if (a.d != b.d) throw InvalidInput("submersion sets of different dimensions");
  SubmersionSet out{a.d, {}};
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

bool simplex_below(Simplex sigma, const Triangulation& t) { return classifies_within(sigma, t, PairClass::B); }
bool simplex_above(Simplex sigma, const Triangulation& t) { return classifies_within(sigma, t, PairClass::C); }

bool triangulation_leq(const Triangulation& t1, const Triangulation& t2) {
  require_same_polytope(t1, t2);
  return std::all_of(t1.facets.begin(), t1.facets.end(), [&](Simplex f) { return simplex_below(f, t2); });
}

Triangulation envelope_triangulation(VertexSet v, Dim d, Envelope side) {
  if (v.size() <= d.value()) throw InvalidInput("envelope needs at least d+1 vertices, got " + v.to_string());
  if (v.size() == d.value() + 1) return Triangulation::make(v, d, {as_simplex(v)});
  const auto lifted = gale_facets(v, d.next());
  return Triangulation::make(v, d, side == Envelope::Lower ? lifted.lower : lifted.upper);
}

Triangulation cone(const Triangulation& t, Vertex q) {
  if (q < 1 || q > kMaxVertex) throw InvalidInput("vertex " + std::to_string(q) + " out of range");
  if (t.ground.contains(q)) throw InvalidInput("duplicate vertex " + std::to_string(q));
  std::vector<Simplex> facets = t.facets;
  for (Simplex f : gale_facets(t.ground, t.d).all())
    if (visible_from(f, t.ground, q, t.d)) facets.push_back(f.with(q));
  return Triangulation::make(t.ground.with(q), t.d, std::move(facets));
}

Triangulation link_at_max(const Triangulation& t) {
  if (t.d.value() < 2) throw Unsupported("link of a one-dimensional triangulation");
  const Vertex m = t.ground.max();
  std::vector<Simplex> facets;
  for (Simplex f : t.facets)
    if (f.contains(m)) facets.push_back(f.without(m));
  auto link = Triangulation::make(t.ground.without(m), t.d.prev(), std::move(facets));
  require_valid(link, "link_at_max");
  return link;
}

std::vector<Triangulation> enumerate_triangulations(VertexSet v, Dim d, std::uint64_t node_budget) {
  if (v.size() <= d.value()) throw InvalidInput("need at least d+1 vertices, got " + v.to_string());
  std::vector<Triangulation> out;
  RidgeState state(v, d);
  const auto outcome = ridge_search(state, RidgeRule::Lexicographic, node_budget, [&](const std::vector<Mask>& f) {
    std::vector<Simplex> facets;
    facets.reserve(f.size());
    for (Mask m : f) facets.push_back(Simplex::from_mask(m));
    out.push_back(Triangulation::make(v, d, std::move(facets)));
    require_valid(out.back(), "enumerate_triangulations");
    return true;
  });
  if (outcome.status == SearchStatus::BudgetExhausted)
    throw ResourceExhausted("enumeration of C(" + v.to_string() + ", " + std::to_string(d.value()) +
                            ") exceeded the node budget of " + std::to_string(node_budget));
  std::sort(out.begin(), out.end(), facets_less);
  return out;
}

std::vector<Triangulation> enumerate_triangulations(int n, Dim d, std::uint64_t node_budget) {
  return enumerate_triangulations(VertexSet::range(n), d, node_budget);
}

int HSTPoset::index_of(const Triangulation& t) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), t, facets_less);
  if (it == elements.end() || !(*it == t)) return -1;
  return static_cast<int>(it - elements.begin());
}

bool HSTPoset::is_cover(int lower, int upper) const {
  return std::find(covers.begin(), covers.end(), std::make_pair(lower, upper)) != covers.end();
}

std::optional<int> HSTPoset::glb(int a, int b) const {
  const int n = static_cast<int>(elements.size());
  std::vector<int> lower;
  for (int k = 0; k < n; ++k)
    if (leq[k][a] && leq[k][b]) lower.push_back(k);
  for (int g : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](int k) { return leq[k][g]; })) return g;
  return std::nullopt;
}

std::optional<int> HSTPoset::lub(int a, int b) const {
  const int n = static_cast<int>(elements.size());
  std::vector<int> upper;
  for (int k = 0; k < n; ++k)
    if (leq[a][k] && leq[b][k]) upper.push_back(k);
  for (int g : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](int k) { return leq[g][k]; })) return g;
  return std::nullopt;
}

bool HSTPoset::is_lattice() const {
  const int n = static_cast<int>(elements.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!glb(a, b) || !lub(a, b)) return false;
  return true;
}

std::vector<std::vector<int>> HSTPoset::maximal_chains() const {
  std::vector<std::vector<int>> up(elements.size());
  for (auto [lo, hi] : covers) up[lo].push_back(hi);
  std::vector<std::vector<int>> chains;
  std::vector<int> path{minimum};
  auto walk = [&](auto&& self, int at) -> void {
    if (at == maximum) {
      chains.push_back(path);
      return;
    }
    for (int next : up[at]) {
      path.push_back(next);
      self(self, next);
      path.pop_back();
    }
  };
  walk(walk, minimum);
  return chains;
}

HSTPoset make_poset(std::vector<Triangulation> elements) {
  if (elements.empty()) throw InvalidInput("empty poset");
  std::sort(elements.begin(), elements.end(), facets_less);
  for (const auto& t : elements) require_same_polytope(elements.front(), t);
  HSTPoset p;
  p.elements = std::move(elements);
  const int n = static_cast<int>(p.elements.size());
  p.leq.assign(n, std::vector<char>(n, 0));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    for (int j = 0; j < n; ++j) p.leq[i][j] = triangulation_leq(p.elements[i], p.elements[j]);
  });
  for (int i = 0; i < n; ++i) {
    if (!p.leq[i][i]) throw InternalConsistency("order is not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && p.leq[i][j] && p.leq[j][i]) throw InternalConsistency("order is not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (p.leq[i][j] && p.leq[j][k] && !p.leq[i][k]) throw InternalConsistency("order is not transitive");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool between = false;
      for (int k = 0; k < n && !between; ++k) between = k != i && k != j && p.leq[i][k] && p.leq[k][j];
      if (!between) p.covers.emplace_back(i, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    bool is_min = true, is_max = true;
    for (int j = 0; j < n; ++j) {
      is_min = is_min && p.leq[i][j];
      is_max = is_max && p.leq[j][i];
    }
    if (is_min) p.minimum = i;
    if (is_max) p.maximum = i;
  }
  if (p.minimum < 0 || p.maximum < 0) throw InternalConsistency("poset lacks a minimum or a maximum");
  return p;
}

HSTPoset hst_poset(int n, Dim d, std::uint64_t node_budget) {
  auto p = make_poset(enumerate_triangulations(n, d, node_budget));
  const VertexSet v = VertexSet::range(n);
  if (!(p.elements[p.minimum] == envelope_triangulation(v, d, Envelope::Lower)) ||
      !(p.elements[p.maximum] == envelope_triangulation(v, d, Envelope::Upper)))
    throw InternalConsistency("poset extremes differ from the envelope triangulations");
  return p;
}

Triangulation meet(const Triangulation& t1, const Triangulation& t2) {
  if (t1.d.value() != 2 && t1.d.value() != 3) throw Unsupported("meet is implemented for d = 2, 3 only");
  require_same_polytope(t1, t2);
  const SubmersionSet s = intersect(submersion_set(t1), submersion_set(t2));
  const int d = t1.d.value();
  std::unordered_set<Mask> mid;
  for (Simplex tau : s.members) {
    const bool topmost = std::none_of(s.members.begin(), s.members.end(),
                                      [&](Simplex sigma) { return height_less(tau, sigma, t1.d); });
    if (topmost) mid.insert(tau.mask());
  }
  std::vector<Simplex> facets;
  for (Simplex f : subsets_of_size(t1.ground, d + 1)) {
    const auto faces = faces_of_size(f, t1.d.half_up() + 1);
    if (std::all_of(faces.begin(), faces.end(), [&](Simplex g) { return mid.count(g.mask()) != 0; }))
      facets.push_back(f);
  }
  auto result = Triangulation::make(t1.ground, t1.d, std::move(facets));
  require_valid(result, "meet");
  if (!(submersion_set(result) == s)) throw InternalConsistency("meet: submersion set differs from the intersection");
  return result;
}

std::optional<std::pair<int, int>> meet_intersection_violation(const HSTPoset& poset) {
  const int size = static_cast<int>(poset.elements.size());
  std::vector<std::vector<Simplex>> subs(size);
  parallel_for(size, [&](std::size_t i) { subs[i] = submersion_set(poset.elements[i]).members; });
  std::set<std::vector<Simplex>> known(subs.begin(), subs.end());
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      std::vector<Simplex> both;
      std::set_intersection(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end(), std::back_inserter(both));
      if (!known.count(both)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool face_membership(Simplex tau, const Triangulation& t) {
  if (!simplex_below(tau, t)) throw InvalidInput("not below T");
  const auto sub = submersion_set(t);
  return std::none_of(sub.members.begin(), sub.members.end(),
                      [&](Simplex sigma) { return height_less(tau, sigma, t.d); });
}

Triangulation psi_chain(const std::vector<Triangulation>& chain, const HSTPoset& poset) {
  if (chain.empty()) throw InvalidInput("empty chain");
  std::vector<int> idx;
  for (const auto& t : chain) {
    const int i = poset.index_of(t);
    if (i < 0) throw InvalidInput("chain member is not an element of the poset");
    idx.push_back(i);
  }
  bool maximal = idx.front() == poset.minimum && idx.back() == poset.maximum;
  for (std::size_t k = 0; maximal && k + 1 < idx.size(); ++k) maximal = poset.is_cover(idx[k], idx[k + 1]);
  if (!maximal) throw InvalidInput("chain is not maximal");

  const Triangulation& base = chain.front();
  const Dim up = base.d.next();
  if (base.ground.size() < up.value() + 1)
    throw InvalidInput("vertex set " + base.ground.to_string() + " is too small for dimension " +
                       std::to_string(up.value()));
  std::vector<Simplex> all;
  for (const auto& t : chain) all.insert(all.end(), t.facets.begin(), t.facets.end());
  const auto k = all_faces(all);
  std::vector<Simplex> facets;
  for (Simplex f : subsets_of_size(base.ground, up.value() + 1)) {
    const auto faces = faces_of_size(f, up.half_up() + 1);
    if (std::all_of(faces.begin(), faces.end(), [&](Simplex g) { return k.count(g.mask()) != 0; }))
      facets.push_back(f);
  }
  auto result = Triangulation::make(base.ground, up, std::move(facets));
  require_valid(result, "psi_chain");
  return result;
}

}  // namespace cyclic
