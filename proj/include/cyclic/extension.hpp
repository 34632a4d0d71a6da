#pragma once

// Extending families of pairwise non-overlapping simplices on the moment curve
// to triangulations of the cyclic polytope: the greedy algorithm, the small-n
// and single-simplex constructions, and the full constructive pipeline through
// T(sigma), separating levels, the LMR lemma and level triangulations in d = 3.

#include <optional>
#include <string>
#include <vector>

#include "cyclic/ridge_search.hpp"
#include "cyclic/triangulation.hpp"

namespace cyclic {

/// A family of pairwise non-overlapping simplices; only maximal members are kept.
struct Complex {
  VertexSet ground;
  Dim d;
  std::vector<Simplex> simplices;  // sorted

  /// Throws InvalidInput naming the first overlapping pair or malformed simplex.
  static Complex make(VertexSet ground, Dim d, std::vector<Simplex> simplices);
  static Complex make(int n, Dim d, std::vector<Simplex> simplices) {
    return make(VertexSet::range(n), d, std::move(simplices));
  }

  int n() const noexcept { return ground.max(); }
  friend bool operator==(const Complex&, const Complex&) = default;
};

enum class Strategy { Greedy, Constructive, SmallN, Single };

std::string_view to_string(Strategy s) noexcept;

struct ExtensionResult {
  Triangulation triangulation;
  Strategy strategy;
  std::vector<std::string> steps;  // audit log
  SearchStats stats;
};

/// Raised when the greedy scan finds no admissible facet for an active ridge.
class GreedyStuck : public InternalConsistency {
 public:
  GreedyStuck(const std::string& what, Simplex ridge, std::vector<Simplex> facets, std::vector<std::string> steps)
      : InternalConsistency(what), ridge(ridge), facets(std::move(facets)), steps(std::move(steps)) {}
  Simplex ridge;
  std::vector<Simplex> facets;
  std::vector<std::string> steps;
};

/// d = 3: tetrahedra become their four triangles. d = 4: edges and vertices are
/// dropped and every simplex with at least four vertices becomes its triangles.
Complex skeleton_reduce(const Complex& f);

/// Greedy ridge-by-ridge extension. Guaranteed for d in {3, 4}; in other
/// dimensions it runs on the unreduced family and may throw GreedyStuck.
ExtensionResult greedy_extend(const Complex& f);

/// n in {d+1, d+2}: the full simplex, or the Radon construction.
ExtensionResult extend_small(const Complex& f);

/// Iterated cones over V \ sigma in ascending order; sigma has d+1 vertices.
Triangulation extend_single(Simplex sigma, VertexSet v, Dim d);

/// The proof pipeline for D = f.d in {3, 4}; needs the poset HST(n, D-1).
ExtensionResult constructive_extend(const Complex& f, std::uint64_t node_budget = kDefaultNodeBudget);

// ---- planar constructions (d = 2) ----

/// sigma (an edge or a triangle) in T, fanning each leftover region at its maximum.
Triangulation t_of_sigma_d2(Simplex sigma, int n);

struct SeparatingInput {
  std::vector<Simplex> e1, e2, e3;
};

/// T in S(n,2) with e <= T on E1, e in T on E2, e >= T on E3, given an order
/// satisfying the corollary's conditions (checked; violations name the pair).
Triangulation separating_triangulation(const SeparatingInput& sets, const std::vector<Simplex>& order, int n);

/// Same, with the order built from linear extensions of the height order per block.
Triangulation separating_triangulation(const SeparatingInput& sets, int n);

struct LMRInstance {
  VertexSet v;
  std::vector<Simplex> l, r;  // edges
  std::vector<Simplex> m;     // triangles
};

/// Edge conditions relative to an instance.
bool satisfies_le(Simplex e, const LMRInstance& inst);
bool satisfies_me(Simplex e, const LMRInstance& inst);
bool satisfies_re(Simplex e, const LMRInstance& inst);

/// Empty when the instance satisfies (LR), (LMR), (MM) and its polygon edges
/// satisfy (Le), (Me), (Re); otherwise a description of the first violation.
std::optional<std::string> lmr_violation(const LMRInstance& inst);

/// A triangulation of conv(V) whose edges all satisfy (Le), (Me), (Re).
Triangulation lmr_triangulate(const LMRInstance& inst, std::vector<std::string>* log = nullptr);

/// T in S(n,3) with sigma in T and every tau below T (sigma and taus are triangles).
Triangulation level_triangulation_d3(Simplex sigma, const std::vector<Simplex>& taus, int n,
                                     std::vector<std::string>* log = nullptr);

}  // namespace cyclic
