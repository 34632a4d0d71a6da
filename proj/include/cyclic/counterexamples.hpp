#pragma once

// Non-extendable families for D >= 5: Rambau's example, the two lifts that
// grow it, and two certifiers (complete search and, for n = D+3, the Gale
// dual cones).

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclic/extension.hpp"
#include "cyclic/linear_algebra.hpp"

namespace cyclic {

/// D = 5, n = 8: {123456, 345678, 123678}.
Complex rambau_example();

/// Adds sigma + {n+1} for every facet sigma of C(n, D) visible from the next curve point.
Complex lift_n(const Complex& f);

/// Joins every member with n+1 and raises the dimension by one.
Complex lift_D(const Complex& f);

enum class Verdict { Extendable, NonExtendable, Indeterminate };

std::string_view to_string(Verdict v) noexcept;

struct GaleData {
  std::vector<std::array<Rational, 2>> vectors;       // one per ground vertex, in order
  std::vector<std::pair<Vertex, Vertex>> spanning;    // complement pair per input simplex
  std::optional<std::array<Rational, 2>> interior;    // a point inside every dual cone
};

struct Certificate {
  Verdict verdict = Verdict::Indeterminate;
  std::string method;  // "search" or "gale"
  std::optional<Triangulation> witness;
  SearchStats stats;
  std::optional<GaleData> gale;
};

/// Complete backtracking from the members of F. NonExtendable only after the
/// branch space is exhausted; Indeterminate when the budget runs out.
Certificate verify_nonextendable(const Complex& f, std::uint64_t node_budget = kDefaultNodeBudget);

/// D-simplices outside F that overlap no member of F; empty iff F is maximal.
std::vector<Simplex> maximal_nonoverlap_check(const Complex& f);

/// n = D+3 only, members must be D-simplices. Extendable (to a regular
/// triangulation) iff the open dual cones share an interior point.
Certificate gale_dual_check(const Complex& f);

}  // namespace cyclic
