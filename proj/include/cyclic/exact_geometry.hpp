#pragma once

// Exact-rational geometry on the moment curve, with parameter t_i = i. This is
// the independent oracle for the combinatorial predicates in moment_core.

#include <optional>
#include <span>

#include "cyclic/linear_algebra.hpp"
#include "cyclic/moment_core.hpp"
#include "cyclic/simplex.hpp"

namespace cyclic {

struct MomentPoint {
  int t = 0;
  Vector<Rational> coords;  // (t, t^2, ..., t^d)
};

MomentPoint moment_point(int t, Dim d);

/// Sign (-1, 0, +1) of det[(1, t, ..., t^d)] over the d+1 parameters, in the given order.
int orientation(std::span<const int> params, Dim d);

/// True iff the boundary facet `facet` of conv(ground) is visible from the curve point q,
/// i.e. q and the rest of `ground` lie strictly on opposite sides of its hyperplane.
bool visible_from(Simplex facet, VertexSet ground, Vertex q, Dim d);

/// Euclidean volume of a full-dimensional simplex (d+1 vertices), closed Vandermonde form.
Rational simplex_volume(Simplex sigma, Dim d);

/// Decides conv(sigma) ∩ conv(tau) ⊋ conv(sigma ∩ tau) by exact linear feasibility.
bool geometric_overlap(Simplex sigma, Simplex tau, Dim d);

/// A common point of both hulls with both lifted heights.
struct HeightWitness {
  Vector<Rational> point;
  Rational h_sigma;
  Rational h_tau;
};

struct GeometricClassification {
  PairClass cls = PairClass::A;
  std::optional<HeightWitness> sigma_lower;   // a point with h_sigma < h_tau
  std::optional<HeightWitness> sigma_higher;  // a point with h_sigma > h_tau
};

GeometricClassification geometric_classify_with_witness(Simplex sigma, Simplex tau, Dim d);
PairClass geometric_classify(Simplex sigma, Simplex tau, Dim d);

}  // namespace cyclic
