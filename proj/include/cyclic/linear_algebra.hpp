#pragma once

// Exact dense linear algebra over a field scalar (in practice Rational).
// Eigen's decompositions pick pivots by magnitude thresholds, which is the
// wrong notion for exact arithmetic, so elimination is written out here and
// only Eigen's storage and expression machinery is used.

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyclic/errors.hpp"

namespace cyclic {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Columns (1, t, t^2, ..., t^d) for each parameter t.
template <class Scalar>
Matrix<Scalar> homogeneous_moment_matrix(std::span<const int> params, int d) {
  Matrix<Scalar> m(d + 1, static_cast<Eigen::Index>(params.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Scalar power(1);
    for (int r = 0; r <= d; ++r) {
      m(r, j) = power;
      power *= Scalar(params[j]);
    }
  }
  return m;
}

template <class Scalar>
Scalar determinant(Matrix<Scalar> m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col) / m(col, col);
      m.row(r) -= factor * m.row(col);
    }
  }
  return det;
}

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
template <class Scalar>
std::vector<Eigen::Index> row_reduce(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar lead = m(row, col);
    m.row(row) /= lead;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right null space, one basis vector per column.
template <class Scalar>
Matrix<Scalar> kernel_basis(Matrix<Scalar> m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free_cols[k]);
  }
  return basis;
}

/// A system of linear constraints a.x >= b and a.x == b over `variables` unknowns.
template <class Scalar>
struct LinearConstraints {
  struct Row {
    Vector<Scalar> coeffs;
    Scalar rhs;
  };

  explicit LinearConstraints(int variables) : variables(variables) {}

  void add_at_least(Vector<Scalar> a, Scalar b) { at_least.push_back({std::move(a), std::move(b)}); }
  void add_equal(Vector<Scalar> a, Scalar b) { equal.push_back({std::move(a), std::move(b)}); }
  void add_nonnegative(int var) {
    Vector<Scalar> a = Vector<Scalar>::Zero(variables);
    a(var) = Scalar(1);
    add_at_least(std::move(a), Scalar(0));
  }

  int variables;
  std::vector<Row> at_least;
  std::vector<Row> equal;
};

namespace detail {

template <class Scalar>
using FmRow = typename LinearConstraints<Scalar>::Row;

template <class Scalar>
bool row_less(const FmRow<Scalar>& a, const FmRow<Scalar>& b) {
  for (Eigen::Index i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs(i) != b.coeffs(i)) return a.coeffs(i) < b.coeffs(i);
  }
  return a.rhs < b.rhs;
}

template <class Scalar>
bool row_equal(const FmRow<Scalar>& a, const FmRow<Scalar>& b) {
  return a.rhs == b.rhs && a.coeffs == b.coeffs;
}

// Scale so the first nonzero coefficient has magnitude one, then drop duplicates
// and rows without variables. Returns false when some row reads 0 >= positive.
template <class Scalar>
bool normalize_rows(std::vector<FmRow<Scalar>>& rows) {
  std::vector<FmRow<Scalar>> kept;
  kept.reserve(rows.size());
  for (auto& row : rows) {
    Eigen::Index lead = 0;
    while (lead < row.coeffs.size() && row.coeffs(lead) == Scalar(0)) ++lead;
    if (lead == row.coeffs.size()) {
      if (row.rhs > Scalar(0)) return false;
      continue;
    }
    const Scalar scale = abs(row.coeffs(lead));
    if (scale != Scalar(1)) {
      row.coeffs /= scale;
      row.rhs /= scale;
    }
    kept.push_back(std::move(row));
  }
  std::sort(kept.begin(), kept.end(), row_less<Scalar>);
  kept.erase(std::unique(kept.begin(), kept.end(), row_equal<Scalar>), kept.end());
  rows = std::move(kept);
  return true;
}

}  // namespace detail

/// Exact feasibility by Gaussian elimination of the equalities followed by
/// Fourier–Motzkin elimination of the inequalities. Returns a feasible point
/// (recovered by back-substitution) or nullopt when the system is empty.
template <class Scalar>
std::optional<Vector<Scalar>> find_feasible_point(const LinearConstraints<Scalar>& system) {
  using Row = detail::FmRow<Scalar>;
  const int n = system.variables;

  // Equalities: x_pivot = c - sum_f r_f x_f.
  Matrix<Scalar> aug(static_cast<Eigen::Index>(system.equal.size()), n + 1);
  for (std::size_t i = 0; i < system.equal.size(); ++i) {
    aug.row(i).head(n) = system.equal[i].coeffs.transpose();
    aug(i, n) = system.equal[i].rhs;
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<int> pivot_row(n, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
  std::vector<int> free_vars;
  for (int v = 0; v < n; ++v)
    if (pivot_row[v] < 0) free_vars.push_back(v);
  const int f = static_cast<int>(free_vars.size());

  // Inequalities rewritten over the free variables.
  std::vector<Row> rows;
  rows.reserve(system.at_least.size());
  for (const auto& ineq : system.at_least) {
    Row row{Vector<Scalar>::Zero(f), ineq.rhs};
    for (int k = 0; k < f; ++k) row.coeffs(k) = ineq.coeffs(free_vars[k]);
    for (int v = 0; v < n; ++v) {
      const int r = pivot_row[v];
      if (r < 0 || ineq.coeffs(v) == Scalar(0)) continue;
      row.rhs -= ineq.coeffs(v) * aug(r, n);
      for (int k = 0; k < f; ++k) row.coeffs(k) -= ineq.coeffs(v) * aug(r, free_vars[k]);
    }
    rows.push_back(std::move(row));
  }
  if (!detail::normalize_rows<Scalar>(rows)) return std::nullopt;

  // Fourier–Motzkin; stages[s] is the system before eliminating order[s].
  std::vector<std::vector<Row>> stages;
  std::vector<int> order;
  std::vector<bool> eliminated(f, false);
  for (int step = 0; step < f; ++step) {
    int best = -1;
    long best_cost = 0;
    for (int k = 0; k < f; ++k) {
      if (eliminated[k]) continue;
      long pos = 0, neg = 0;
      for (const auto& row : rows) {
        if (row.coeffs(k) > Scalar(0)) ++pos;
        else if (row.coeffs(k) < Scalar(0)) ++neg;
      }
      const long cost = pos * neg - pos - neg;
      if (best < 0 || cost < best_cost) {
        best = k;
        best_cost = cost;
      }
    }
    stages.push_back(rows);
    order.push_back(best);
    eliminated[best] = true;

    std::vector<Row> next, lower, upper;
    for (auto& row : rows) {
      if (row.coeffs(best) > Scalar(0)) lower.push_back(row);
      else if (row.coeffs(best) < Scalar(0)) upper.push_back(row);
      else next.push_back(row);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const Scalar a = lo.coeffs(best);
        const Scalar b = -up.coeffs(best);
        Row combined{lo.coeffs * b + up.coeffs * a, lo.rhs * b + up.rhs * a};
        combined.coeffs(best) = Scalar(0);
        next.push_back(std::move(combined));
      }
    }
    if (!detail::normalize_rows<Scalar>(next)) return std::nullopt;
    rows = std::move(next);
  }

  Vector<Scalar> free_values = Vector<Scalar>::Zero(f);
  for (int s = f - 1; s >= 0; --s) {
    const int var = order[s];
    std::optional<Scalar> lo, hi;
    for (const auto& row : stages[s]) {
      const Scalar a = row.coeffs(var);
      if (a == Scalar(0)) continue;
      Scalar rest = row.rhs;
      for (int k = 0; k < f; ++k)
        if (k != var) rest -= row.coeffs(k) * free_values(k);
      const Scalar bound = rest / a;
      if (a > Scalar(0)) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    if (lo && hi) {
      if (*lo > *hi) throw InternalConsistency("Fourier-Motzkin back-substitution found an empty interval");
      free_values(var) = (*lo + *hi) / Scalar(2);
    } else if (lo) {
      free_values(var) = *lo;
    } else if (hi) {
      free_values(var) = *hi;
    }
  }

  Vector<Scalar> x = Vector<Scalar>::Zero(n);
  for (int k = 0; k < f; ++k) x(free_vars[k]) = free_values(k);
  for (int v = 0; v < n; ++v) {
    const int r = pivot_row[v];
    if (r < 0) continue;
    Scalar value = aug(r, n);
    for (int k = 0; k < f; ++k) value -= aug(r, free_vars[k]) * free_values(k);
    x(v) = value;
  }
  return x;
}

}  // namespace cyclic
