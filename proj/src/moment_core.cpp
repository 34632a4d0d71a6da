#include "cyclic/moment_core.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace cyclic {

std::string_view to_string(PairClass c) noexcept {
  switch (c) {
    case PairClass::A: return "A";
    case PairClass::B: return "B";
    case PairClass::C: return "C";
    case PairClass::D: return "D";
  }
  return "?";
}

namespace {

// Longest alternating sequence whose first element plays the `sigma_first` role.
// end_sigma / end_tau hold the best length of a sequence ending in that role
// (0 = no such sequence yet). A shared vertex updates both from the old values,
// so it is used at most once.
int longest_alternation(Mask sigma, Mask tau, bool sigma_first) noexcept {
  int end_sigma = 0;
  int end_tau = 0;
  for (Mask b = sigma | tau; b; b &= b - 1) {
    const Mask bit = b & (~b + 1);
    int next_sigma = end_sigma;
    int next_tau = end_tau;
    if (sigma & bit) {
      const int extend = end_tau > 0 ? end_tau + 1 : (sigma_first ? 1 : 0);
      next_sigma = std::max(next_sigma, extend);
    }
    if (tau & bit) {
      const int extend = end_sigma > 0 ? end_sigma + 1 : (sigma_first ? 0 : 1);
      next_tau = std::max(next_tau, extend);
    }
    end_sigma = next_sigma;
    end_tau = next_tau;
  }
  return std::max(end_sigma, end_tau);
}

void check_fits(Simplex s, Dim d) {
  if (s.empty()) throw InvalidInput("empty simplex");
  if (s.size() > d.value() + 1)
    throw InvalidInput("simplex " + s.to_string() + " has more than d+1 = " + std::to_string(d.value() + 1) +
                       " vertices");
}

bool height_less_unchecked(const InterlaceReport& r, int d) noexcept {
  const int need = d + 2;
  if (d % 2 == 0) return r.sigma_start >= need && r.tau_start < need;
  return r.tau_start >= need && r.sigma_start < need;
}

}  // namespace

InterlaceReport interlace_lengths(Mask sigma, Mask tau) noexcept {
  return {longest_alternation(sigma, tau, true), longest_alternation(sigma, tau, false)};
}

InterlaceReport interlace_report(Simplex sigma, Simplex tau) {
  if (sigma.empty() || tau.empty()) throw InvalidInput("empty simplex");
  return interlace_lengths(sigma.mask(), tau.mask());
}

bool overlaps_unchecked(Mask sigma, Mask tau, int d) noexcept {
  return interlace_lengths(sigma, tau).longest() >= d + 2;
}

bool overlaps(Simplex sigma, Simplex tau, Dim d) {
  check_fits(sigma, d);
  check_fits(tau, d);
  return overlaps_unchecked(sigma.mask(), tau.mask(), d.value());
}

bool height_less(Simplex sigma, Simplex tau, Dim d) {
  check_fits(sigma, d);
  check_fits(tau, d);
  return height_less_unchecked(interlace_lengths(sigma.mask(), tau.mask()), d.value());
}

PairClass classify_unchecked(Mask sigma, Mask tau, int d) {
  const InterlaceReport r = interlace_lengths(sigma, tau);
  if (r.longest() < d + 2) return PairClass::A;
  if (r.longest() >= d + 3) return PairClass::D;
  if (height_less_unchecked(r, d)) return PairClass::B;
  if (height_less_unchecked({r.tau_start, r.sigma_start}, d)) return PairClass::C;
  throw InternalConsistency("pair " + Simplex::from_mask(sigma).to_string() + ", " +
                            Simplex::from_mask(tau).to_string() + " fits none of the four cases");
}

PairClass classify_pair(Simplex sigma, Simplex tau, Dim d) {
  check_fits(sigma, d);
  check_fits(tau, d);
  return classify_unchecked(sigma.mask(), tau.mask(), d.value());
}

std::vector<Simplex> order_simplices(std::span<const Simplex> simplices, Dim d) {
  std::vector<Simplex> items(simplices.begin(), simplices.end());
  for (Simplex s : items) check_fits(s, d);
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());

  const std::size_t count = items.size();
  std::vector<std::vector<std::size_t>> below(count);
  std::vector<int> indegree(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && classify_unchecked(items[i].mask(), items[j].mask(), d.value()) == PairClass::B) {
        below[i].push_back(j);
        ++indegree[j];
      }
    }
  }

  // Kahn's algorithm; the smallest ready index is the lexicographically smallest simplex.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < count; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<Simplex> out;
  out.reserve(count);
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    out.push_back(items[i]);
    for (std::size_t j : below[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (out.size() != count) throw InternalConsistency("antisymmetry violated");
  return out;
}

std::vector<Simplex> GaleFacets::all() const {
  std::vector<Simplex> out = upper;
  out.insert(out.end(), lower.begin(), lower.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// D(k, [a, b]) over positions, as position masks.
void collect_blocks(int k, int a, int b, Mask prefix, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(prefix);
    return;
  }
  for (int i = a; i + 1 <= b && (b - i + 1) >= 2 * k; ++i)
    collect_blocks(k - 1, i + 2, b, prefix | (Mask{3} << i), out);
}

std::vector<Simplex> blocks_in(const std::vector<Vertex>& members, int k, int a, int b, Mask extra_positions) {
  std::vector<Mask> positions;
  collect_blocks(k, a, b, extra_positions, positions);
  std::vector<Simplex> out;
  out.reserve(positions.size());
  for (Mask p : positions) {
    Mask bits = 0;
    for (Mask q = p; q; q &= q - 1) bits |= Mask{1} << members[std::countr_zero(q) - 1];
    out.push_back(Simplex::from_mask(bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Simplex> paired_blocks(VertexSet ground, int k) {
  const auto members = ground.vertices();
  return blocks_in(members, k, 1, static_cast<int>(members.size()), 0);
}

GaleFacets gale_facets(VertexSet ground, Dim d) {
  const int m = ground.size();
  if (m <= d.value())
    throw InvalidInput("need more than d = " + std::to_string(d.value()) + " vertices, got " + std::to_string(m));
  const auto members = ground.vertices();
  const auto pos = [](int p) { return Mask{1} << p; };
  GaleFacets f;
  if (!d.even()) {
    const int k = (d.value() - 1) / 2;
    f.upper = blocks_in(members, k, 1, m - 1, pos(m));
    f.lower = blocks_in(members, k, 2, m, pos(1));
  } else {
    f.upper = blocks_in(members, d.value() / 2 - 1, 2, m - 1, pos(1) | pos(m));
    f.lower = blocks_in(members, d.value() / 2, 1, m, 0);
  }
  return f;
}

GaleFacets gale_facets(int n, Dim d) {
  if (n < 1 || n > kMaxVertex) throw InvalidInput("n out of range: " + std::to_string(n));
  return gale_facets(VertexSet::range(n), d);
}

bool is_boundary_facet(Simplex ridge, VertexSet ground, Dim d) {
  if (ridge.size() != d.value() || !as_vertex_set(ridge).is_subset_of(ground)) return false;
  const auto outside = (ground - as_vertex_set(ridge)).vertices();
  for (std::size_t i = 0; i + 1 < outside.size(); ++i) {
    const int between = Simplex::from_mask(ridge.mask() & VertexSet::interval(outside[i] + 1, outside[i + 1] - 1).mask()).size();
    if (between % 2 != 0) return false;
  }
  return true;
}

}  // namespace cyclic
