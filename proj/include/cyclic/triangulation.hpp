#pragma once

// Triangulations of cyclic polytopes C(V, d) for a vertex set V on the moment
// curve, their submersion sets, the higher Stasheff-Tamari order and the
// operations the extension proofs need (envelopes, cones, links, meets, Psi).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic/moment_core.hpp"
#include "cyclic/simplex.hpp"

namespace cyclic {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct Triangulation {
  VertexSet ground;
  Dim d;
  std::vector<Simplex> facets;  // sorted, distinct, each with d+1 vertices

  /// Sorts the facets and checks shape (cardinality, vertices inside ground, no repeats).
  static Triangulation make(VertexSet ground, Dim d, std::vector<Simplex> facets);

  int n() const noexcept { return ground.max(); }
  bool contains(Simplex facet) const;
  /// True iff `face` is a subset of some facet.
  bool has_face(Simplex face) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

enum class FailureKind { OverlapPair, MissingBoundaryRidge, BadRidgeMultiplicity, VolumeMismatch };

std::string_view to_string(FailureKind k) noexcept;

struct ValidityFailure {
  FailureKind kind;
  std::vector<Simplex> witness;
};

struct ValidityReport {
  bool ok = true;
  std::vector<ValidityFailure> failures;
};

/// Combinatorial ridge conditions plus the exact volume identity.
ValidityReport validate(const Triangulation& t);

/// Throws InternalConsistency with the first failure when `t` is invalid.
void require_valid(const Triangulation& t, std::string_view context);

/// Members are the ceil(d/2)-simplices (ceil(d/2)+1 vertices) lying weakly below T.
struct SubmersionSet {
  int d = 0;
  std::vector<Simplex> members;  // sorted
  friend bool operator==(const SubmersionSet&, const SubmersionSet&) = default;
};

SubmersionSet submersion_set(const Triangulation& t);
SubmersionSet intersect(const SubmersionSet& a, const SubmersionSet& b);

bool simplex_below(Simplex sigma, const Triangulation& t);
bool simplex_above(Simplex sigma, const Triangulation& t);

/// T1 <= T2 in the higher Stasheff-Tamari order.
bool triangulation_leq(const Triangulation& t1, const Triangulation& t2);

enum class Envelope { Lower, Upper };

/// Projection of the lower or upper envelope of the cyclic (d+1)-polytope on V.
Triangulation envelope_triangulation(VertexSet v, Dim d, Envelope side);

/// Adds tau + {q} for every boundary facet tau of conv(ground) visible from q.
Triangulation cone(const Triangulation& t, Vertex q);

/// T / max(V) as a triangulation of C(V \ {max}, d-1).
Triangulation link_at_max(const Triangulation& t);

/// Every triangulation of C(V, d), canonically sorted. Throws ResourceExhausted past the budget.
std::vector<Triangulation> enumerate_triangulations(VertexSet v, Dim d,
                                                    std::uint64_t node_budget = kDefaultNodeBudget);
std::vector<Triangulation> enumerate_triangulations(int n, Dim d, std::uint64_t node_budget = kDefaultNodeBudget);

struct HSTPoset {
  std::vector<Triangulation> elements;
  std::vector<std::vector<char>> leq;  // leq[i][j] iff elements[i] <= elements[j]
  std::vector<std::pair<int, int>> covers;
  int minimum = -1;
  int maximum = -1;

  int index_of(const Triangulation& t) const;
  bool is_cover(int lower, int upper) const;
  /// Greatest lower bound / least upper bound, if they exist.
  std::optional<int> glb(int a, int b) const;
  std::optional<int> lub(int a, int b) const;
  bool is_lattice() const;
  /// All maximal chains from minimum to maximum (index lists).
  std::vector<std::vector<int>> maximal_chains() const;
};

/// Builds the order on already-enumerated triangulations of one polytope.
HSTPoset make_poset(std::vector<Triangulation> elements);
HSTPoset hst_poset(int n, Dim d, std::uint64_t node_budget = kDefaultNodeBudget);

/// Meet through submersion sets; d in {2, 3}.
Triangulation meet(const Triangulation& t1, const Triangulation& t2);

/// A pair (i, j) whose submersion-set intersection is the submersion set of no
/// element, or nothing when every pair has one.
std::optional<std::pair<int, int>> meet_intersection_violation(const HSTPoset& poset);

/// Requires tau <= T; true iff tau is a face of T.
bool face_membership(Simplex tau, const Triangulation& t);

/// Psi of a maximal chain: the triangulation one dimension up whose low skeleton
/// is the union of the faces of the chain members. `poset` supplies the covers.
Triangulation psi_chain(const std::vector<Triangulation>& chain, const HSTPoset& poset);

}  // namespace cyclic
