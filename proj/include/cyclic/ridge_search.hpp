#pragma once

// The shared engine behind greedy extension, enumeration and certification: a
// partial triangulation grown one d-simplex at a time across "active" ridges,
// i.e. boundary ridges not yet covered and interior ridges covered on one side.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cyclic/simplex.hpp"

namespace cyclic {

struct SearchStats {
  std::uint64_t nodes = 0;            // facet placements
  std::uint64_t interlace_tests = 0;  // overlap predicate calls
  std::uint64_t dead_ends = 0;        // active ridge with no admissible facet
  std::uint64_t completions = 0;      // complete triangulations reached
};

enum class RidgeRule { Lexicographic, FewestCandidates };

class RidgeState {
 public:
  RidgeState(VertexSet ground, Dim d);

  /// Simplices of any dimension that placed facets must not overlap.
  void add_obstacle(Simplex s);

  /// Adds a facet without checks; callers test admissibility first.
  void place(Mask facet);
  void unplace(Mask facet);

  bool has_facet(Mask facet) const { return facet_set_.count(facet) != 0; }
  bool overlaps_anything(Mask candidate, SearchStats& stats) const;

  /// Admissible facets through `ridge`, ascending in the added vertex.
  std::vector<Mask> candidates(Mask ridge, SearchStats& stats) const;

  const std::set<Simplex>& active() const { return active_; }
  bool complete() const { return active_.empty(); }
  const std::vector<Mask>& facets() const { return facets_; }
  const std::vector<Mask>& obstacles() const { return obstacles_; }
  VertexSet ground() const { return ground_; }
  Dim dim() const { return d_; }
  int ridge_count(Mask ridge) const;
  bool is_boundary_ridge(Mask ridge) const { return boundary_.count(ridge) != 0; }

 private:
  void refresh(Mask ridge);

  VertexSet ground_;
  Dim d_;
  std::vector<Mask> facets_;
  std::unordered_set<Mask> facet_set_;
  std::vector<Mask> obstacles_;
  std::unordered_set<Mask> boundary_;
  std::unordered_map<Mask, int> ridge_count_;
  std::set<Simplex> active_;
};

enum class SearchStatus { Exhausted, Stopped, BudgetExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  SearchStats stats;
};

/// Complete backtracking from the current state. `visit` sees each complete
/// facet list and returns false to stop. The state is restored on return.
SearchOutcome ridge_search(RidgeState& state, RidgeRule rule, std::uint64_t node_budget,
                           const std::function<bool(const std::vector<Mask>&)>& visit);

}  // namespace cyclic
