#include "cyclic/counterexamples.hpp"

#include <algorithm>

#include "cyclic/exact_geometry.hpp"

namespace cyclic {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Extendable: return "extendable";
    case Verdict::NonExtendable: return "non-extendable";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

Complex rambau_example() {
  return Complex::make(8, Dim(5), {{1, 2, 3, 4, 5, 6}, {3, 4, 5, 6, 7, 8}, {1, 2, 3, 6, 7, 8}});
}

Complex lift_n(const Complex& f) {
  const Vertex q = f.ground.max() + 1;
  if (q > kMaxVertex) throw InvalidInput("no room for another vertex");
  std::vector<Simplex> out = f.simplices;
  for (Simplex s : gale_facets(f.ground, f.d).all())
    if (visible_from(s, f.ground, q, f.d)) out.push_back(s.with(q));
  return Complex::make(f.ground.with(q), f.d, std::move(out));
}

Complex lift_D(const Complex& f) {
  const Vertex q = f.ground.max() + 1;
  if (q > kMaxVertex) throw InvalidInput("no room for another vertex");
  std::vector<Simplex> out;
  for (Simplex s : f.simplices) out.push_back(s.with(q));
  return Complex::make(f.ground.with(q), f.d.next(), std::move(out));
}

Certificate verify_nonextendable(const Complex& f, std::uint64_t node_budget) {
  RidgeState state(f.ground, f.d);
  for (Simplex s : f.simplices) {
    if (s.size() == f.d.value() + 1) state.place(s.mask());
    else state.add_obstacle(s);
  }
  std::optional<std::vector<Mask>> found;
  const auto outcome = ridge_search(state, RidgeRule::FewestCandidates, node_budget, [&](const std::vector<Mask>& fs) {
    found = fs;
    return false;
  });
  Certificate cert;
  cert.method = "search";
  cert.stats = outcome.stats;
  switch (outcome.status) {
    case SearchStatus::Stopped: {
      std::vector<Simplex> facets;
      for (Mask m : *found) facets.push_back(Simplex::from_mask(m));
      auto t = Triangulation::make(f.ground, f.d, std::move(facets));
      require_valid(t, "verify_nonextendable witness");
      for (Simplex s : f.simplices)
        if (!t.has_face(s)) throw InternalConsistency("witness misses " + s.to_string());
      cert.verdict = Verdict::Extendable;
      cert.witness = std::move(t);
      break;
    }
    case SearchStatus::Exhausted: cert.verdict = Verdict::NonExtendable; break;
    case SearchStatus::BudgetExhausted: cert.verdict = Verdict::Indeterminate; break;
  }
  return cert;
}

std::vector<Simplex> maximal_nonoverlap_check(const Complex& f) {
  std::vector<Simplex> out;
  for (Simplex c : subsets_of_size(f.ground, f.d.value() + 1)) {
    if (std::find(f.simplices.begin(), f.simplices.end(), c) != f.simplices.end()) continue;
    if (std::none_of(f.simplices.begin(), f.simplices.end(), [&](Simplex s) { return overlaps(c, s, f.d); }))
      out.push_back(c);
  }
  return out;
}

Certificate gale_dual_check(const Complex& f) {
  const int d = f.d.value();
  const auto params = f.ground.vertices();
  if (static_cast<int>(params.size()) != d + 3)
    throw Unsupported("Gale check needs n = D+3, got n = " + std::to_string(params.size()) + ", D = " + std::to_string(d));
  const Matrix<Rational> kernel = kernel_basis(homogeneous_moment_matrix<Rational>(params, d));
  if (kernel.cols() != 2) throw InternalConsistency("moment matrix kernel is not two-dimensional");

  GaleData gale;
  for (Eigen::Index i = 0; i < kernel.rows(); ++i) gale.vectors.push_back({kernel(i, 0), kernel(i, 1)});
  auto cross = [](const std::array<Rational, 2>& a, const std::array<Rational, 2>& b) {
    return Rational(a[0] * b[1] - a[1] * b[0]);
  };

  // x lies in the open cone of (a, b) iff cross(a, x) and cross(x, b) share the sign of cross(a, b).
  // The cones are homogeneous, so strict inequalities can be scaled to >= 1.
  LinearConstraints<Rational> system(2);
  for (Simplex s : f.simplices) {
    if (s.size() != d + 1) throw Unsupported("Gale check needs full-dimensional simplices, got " + s.to_string());
    const auto rest = (f.ground - as_vertex_set(s)).vertices();
    gale.spanning.emplace_back(rest[0], rest[1]);
    const auto& a = gale.vectors[f.ground.rank(rest[0])];
    const auto& b = gale.vectors[f.ground.rank(rest[1])];
    const Rational orient = cross(a, b);
    if (orient == 0) throw InternalConsistency("collinear Gale vectors for " + s.to_string());
    const int sign = orient > 0 ? 1 : -1;
    Vector<Rational> row1(2), row2(2);
    row1 << -a[1] * sign, a[0] * sign;  // sign * cross(a, x)
    row2 << b[1] * sign, -b[0] * sign;  // sign * cross(x, b)
    system.add_at_least(row1, Rational(1));
    system.add_at_least(row2, Rational(1));
  }
  Certificate cert;
  cert.method = "gale";
  if (f.simplices.empty()) {
    gale.interior = std::array<Rational, 2>{Rational(1), Rational(0)};
    cert.verdict = Verdict::Extendable;
  } else if (auto x = find_feasible_point(system)) {
    gale.interior = std::array<Rational, 2>{(*x)(0), (*x)(1)};
    cert.verdict = Verdict::Extendable;
  } else {
    cert.verdict = Verdict::NonExtendable;
  }
  cert.gale = std::move(gale);
  return cert;
}

}  // namespace cyclic
