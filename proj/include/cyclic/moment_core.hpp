#pragma once

// Combinatorial predicates for simplices on the moment curve. Everything here
// depends only on the order of the vertices along the curve: overlap is
// detected by alternating (interlacing) patterns, and the height comparison of
// the liftings one dimension up by which role starts the longest pattern.

#include <span>
#include <string_view>
#include <vector>

#include "cyclic/simplex.hpp"

namespace cyclic {

/// Longest alternating vertex sequences in the merged vertex order of two
/// simplices, one per starting role. A shared vertex may play either role.
struct InterlaceReport {
  int sigma_start = 0;
  int tau_start = 0;

  int longest() const noexcept { return sigma_start > tau_start ? sigma_start : tau_start; }
  friend bool operator==(const InterlaceReport&, const InterlaceReport&) = default;
};

/// The four mutually exclusive relations between two simplices in dimension d:
/// A no overlap, B sigma strictly below tau, C sigma strictly above tau,
/// D the liftings themselves overlap.
enum class PairClass { A, B, C, D };

std::string_view to_string(PairClass c) noexcept;

/// Throws InvalidInput("empty simplex") when either argument is empty.
InterlaceReport interlace_report(Simplex sigma, Simplex tau);

/// Unchecked two-state dynamic program behind interlace_report.
InterlaceReport interlace_lengths(Mask sigma, Mask tau) noexcept;

/// True iff the simplices are (d+2)-interlacing. Both must have at most d+1 vertices.
bool overlaps(Simplex sigma, Simplex tau, Dim d);

/// sigma <_{d+1} tau: the simplices overlap and the lifting of sigma is weakly below.
bool height_less(Simplex sigma, Simplex tau, Dim d);

PairClass classify_pair(Simplex sigma, Simplex tau, Dim d);

/// Hot-loop variants: no argument validation.
bool overlaps_unchecked(Mask sigma, Mask tau, int d) noexcept;
PairClass classify_unchecked(Mask sigma, Mask tau, int d);

/// A linear extension of the height order restricted to `simplices`, with
/// ties broken lexicographically. Duplicates are collapsed.
std::vector<Simplex> order_simplices(std::span<const Simplex> simplices, Dim d);

/// Facets of the cyclic polytope on a vertex set, split by envelope.
struct GaleFacets {
  std::vector<Simplex> upper;
  std::vector<Simplex> lower;

  /// upper ∪ lower, sorted; a facet lying on both envelopes appears once.
  std::vector<Simplex> all() const;
};

/// D(k, [a, b]): 2k-subsets of [a, b] made of k blocks of consecutive integers.
/// Positions are taken inside `ground`, so "consecutive" means adjacent members.
std::vector<Simplex> paired_blocks(VertexSet ground, int k);

/// Facets of conv(ground) in dimension d. Requires |ground| >= d+1.
GaleFacets gale_facets(VertexSet ground, Dim d);
GaleFacets gale_facets(int n, Dim d);

/// True iff `ridge` (d vertices) satisfies Gale's evenness condition inside `ground`.
bool is_boundary_facet(Simplex ridge, VertexSet ground, Dim d);

}  // namespace cyclic
