#include "cyclic/ridge_search.hpp"

#include "cyclic/moment_core.hpp"

namespace cyclic {

RidgeState::RidgeState(VertexSet ground, Dim d) : ground_(ground), d_(d) {
  for (Simplex r : gale_facets(ground, d).all()) {
    boundary_.insert(r.mask());
    active_.insert(r);
  }
}

void RidgeState::add_obstacle(Simplex s) { obstacles_.push_back(s.mask()); }

int RidgeState::ridge_count(Mask ridge) const {
  const auto it = ridge_count_.find(ridge);
  return it == ridge_count_.end() ? 0 : it->second;
}

void RidgeState::refresh(Mask ridge) {
  const int c = ridge_count(ridge);
  const bool want = is_boundary_ridge(ridge) ? c == 0 : c == 1;
  if (want) active_.insert(Simplex::from_mask(ridge));
  else active_.erase(Simplex::from_mask(ridge));
}

void RidgeState::place(Mask facet) {
  facets_.push_back(facet);
  facet_set_.insert(facet);
  for (Mask b = facet; b; b &= b - 1) {
    const Mask ridge = facet & ~(b & -b);
    ++ridge_count_[ridge];
    refresh(ridge);
  }
}

void RidgeState::unplace(Mask facet) {
  // Facets are removed in stack order by the search; fall back to a scan otherwise.
  if (!facets_.empty() && facets_.back() == facet) {
    facets_.pop_back();
  } else {
    std::erase(facets_, facet);
  }
  facet_set_.erase(facet);
  for (Mask b = facet; b; b &= b - 1) {
    const Mask ridge = facet & ~(b & -b);
    if (--ridge_count_[ridge] == 0) ridge_count_.erase(ridge);
    refresh(ridge);
  }
}

bool RidgeState::overlaps_anything(Mask candidate, SearchStats& stats) const {
  const int d = d_.value();
  for (Mask f : facets_) {
    ++stats.interlace_tests;
    if (overlaps_unchecked(candidate, f, d)) return true;
  }
  for (Mask o : obstacles_) {
    ++stats.interlace_tests;
    if (overlaps_unchecked(candidate, o, d)) return true;
  }
  return false;
}

std::vector<Mask> RidgeState::candidates(Mask ridge, SearchStats& stats) const {
  std::vector<Mask> out;
  (ground_ - VertexSet::from_mask(ridge)).for_each([&](Vertex v) {
    const Mask c = ridge | (Mask{1} << v);
    if (!has_facet(c) && !overlaps_anything(c, stats)) out.push_back(c);
  });
  return out;
}

namespace {

struct Search {
  RidgeState& state;
  RidgeRule rule;
  std::uint64_t budget;
  const std::function<bool(const std::vector<Mask>&)>& visit;
  SearchOutcome outcome;

  // Returns false when the search must unwind (stopped or out of budget).
  bool run() {
    if (state.complete()) {
      ++outcome.stats.completions;
      if (!visit(state.facets())) {
        outcome.status = SearchStatus::Stopped;
        return false;
      }
      return true;
    }
    std::vector<Mask> options;
    if (rule == RidgeRule::Lexicographic) {
      options = state.candidates(state.active().begin()->mask(), outcome.stats);
    } else {
      bool first = true;
      for (Simplex r : state.active()) {
        auto c = state.candidates(r.mask(), outcome.stats);
        if (first || c.size() < options.size()) {
          options = std::move(c);
          first = false;
        }
        if (options.size() <= 1) break;
      }
    }
    if (options.empty()) {
      ++outcome.stats.dead_ends;
      return true;
    }
    for (Mask c : options) {
      if (++outcome.stats.nodes > budget) {
        outcome.status = SearchStatus::BudgetExhausted;
        return false;
      }
      state.place(c);
      const bool go_on = run();
      state.unplace(c);
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

SearchOutcome ridge_search(RidgeState& state, RidgeRule rule, std::uint64_t node_budget,
                           const std::function<bool(const std::vector<Mask>&)>& visit) {
  Search s{state, rule, node_budget, visit, {}};
  s.run();
  return s.outcome;
}

}  // namespace cyclic
