#include "cyclic/exact_geometry.hpp"

#include <string>
#include <vector>

namespace cyclic {

namespace {

void check_fits(Simplex s, Dim d) {
  if (s.empty()) throw InvalidInput("empty simplex");
  if (s.size() > d.value() + 1)
    throw InvalidInput("simplex " + s.to_string() + " does not fit in dimension " + std::to_string(d.value()));
}

Rational power(int t, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= t;
  return r;
}

// Variables: barycentric-style weights lambda (sigma) followed by mu (tau), all
// nonnegative, with sum lambda_i (1, t_i, ..., t_i^d) = sum mu_j (1, t_j, ..., t_j^d).
// The first row forces equal total mass, so any nonzero solution normalizes to
// a common point of both hulls.
LinearConstraints<Rational> common_point_system(const std::vector<int>& s, const std::vector<int>& t, int d) {
  const int a = static_cast<int>(s.size());
  const int b = static_cast<int>(t.size());
  LinearConstraints<Rational> sys(a + b);
  const Matrix<Rational> ms = homogeneous_moment_matrix<Rational>(s, d);
  const Matrix<Rational> mt = homogeneous_moment_matrix<Rational>(t, d);
  for (int r = 0; r <= d; ++r) {
    Vector<Rational> row(a + b);
    row.head(a) = ms.row(r).transpose();
    row.tail(b) = -mt.row(r).transpose();
    sys.add_equal(std::move(row), Rational(0));
  }
  for (int v = 0; v < a + b; ++v) sys.add_nonnegative(v);
  return sys;
}

Vector<Rational> lifted_heights(const std::vector<int>& params, int d, bool negate, int offset, int total) {
  Vector<Rational> row = Vector<Rational>::Zero(total);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const Rational h = power(params[i], d + 1);
    row(offset + static_cast<int>(i)) = negate ? Rational(-h) : h;
  }
  return row;
}

HeightWitness make_witness(const Vector<Rational>& x, const std::vector<int>& s, const std::vector<int>& t, int d) {
  const int a = static_cast<int>(s.size());
  Rational mass(0);
  for (int i = 0; i < a; ++i) mass += x(i);
  HeightWitness w;
  w.point = Vector<Rational>::Zero(d);
  w.h_sigma = 0;
  w.h_tau = 0;
  for (int i = 0; i < a; ++i) {
    for (int r = 1; r <= d; ++r) w.point(r - 1) += x(i) * power(s[i], r);
    w.h_sigma += x(i) * power(s[i], d + 1);
  }
  for (std::size_t j = 0; j < t.size(); ++j) w.h_tau += x(a + static_cast<int>(j)) * power(t[j], d + 1);
  w.point /= mass;
  w.h_sigma /= mass;
  w.h_tau /= mass;
  return w;
}

// A common point where h_tau - h_sigma >= 1 (scaled): sigma strictly lower somewhere.
std::optional<HeightWitness> strict_height_point(const std::vector<int>& s, const std::vector<int>& t, int d,
                                                 bool sigma_lower) {
  auto sys = common_point_system(s, t, d);
  const int a = static_cast<int>(s.size());
  const int total = sys.variables;
  Vector<Rational> diff = lifted_heights(t, d, false, a, total) + lifted_heights(s, d, true, 0, total);
  if (!sigma_lower) diff = -diff;
  sys.add_at_least(std::move(diff), Rational(1));
  const auto x = find_feasible_point(sys);
  if (!x) return std::nullopt;
  return make_witness(*x, s, t, d);
}

}  // namespace

MomentPoint moment_point(int t, Dim d) {
  MomentPoint p{t, Vector<Rational>(d.value())};
  Rational r(1);
  for (int k = 0; k < d.value(); ++k) {
    r *= t;
    p.coords(k) = r;
  }
  return p;
}

int orientation(std::span<const int> params, Dim d) {
  if (static_cast<int>(params.size()) != d.value() + 1)
    throw InvalidInput("orientation needs exactly d+1 points");
  const Rational det = determinant(homogeneous_moment_matrix<Rational>(params, d.value()));
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

bool visible_from(Simplex facet, VertexSet ground, Vertex q, Dim d) {
  if (facet.size() != d.value()) throw InvalidInput("facet " + facet.to_string() + " does not have d vertices");
  if (ground.contains(q) || facet.contains(q)) throw InvalidInput("duplicate vertex " + std::to_string(q));
  const VertexSet rest = ground - as_vertex_set(facet);
  if (rest.empty()) throw InvalidInput("ground set has no vertex off the facet");
  std::vector<int> params = facet.vertices();
  params.push_back(q);
  const int side_q = orientation(params, d);
  params.back() = rest.min();
  const int side_rest = orientation(params, d);
  return side_q * side_rest < 0;
}

Rational simplex_volume(Simplex sigma, Dim d) {
  if (sigma.size() != d.value() + 1)
    throw InvalidInput("volume needs a simplex with d+1 vertices, got " + sigma.to_string());
  const auto v = sigma.vertices();
  Rational product(1);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) product *= v[j] - v[i];
  Rational factorial(1);
  for (int k = 2; k <= d.value(); ++k) factorial *= k;
  return product / factorial;
}

bool geometric_overlap(Simplex sigma, Simplex tau, Dim d) {
  check_fits(sigma, d);
  check_fits(tau, d);
  if (sigma.is_subset_of(tau) || tau.is_subset_of(sigma)) return false;
  const auto s = sigma.vertices();
  const auto t = tau.vertices();
  auto sys = common_point_system(s, t, d.value());
  // Positive weight on some vertex of sigma outside the common face.
  Vector<Rational> outside = Vector<Rational>::Zero(sys.variables);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!tau.contains(s[i])) outside(static_cast<Eigen::Index>(i)) = 1;
  sys.add_at_least(std::move(outside), Rational(1));
  return find_feasible_point(sys).has_value();
}

GeometricClassification geometric_classify_with_witness(Simplex sigma, Simplex tau, Dim d) {
  GeometricClassification out;
  if (!geometric_overlap(sigma, tau, d)) return out;
  const auto s = sigma.vertices();
  const auto t = tau.vertices();
  out.sigma_lower = strict_height_point(s, t, d.value(), true);
  out.sigma_higher = strict_height_point(s, t, d.value(), false);
  if (out.sigma_lower && out.sigma_higher) out.cls = PairClass::D;
  else if (out.sigma_lower) out.cls = PairClass::B;
  else if (out.sigma_higher) out.cls = PairClass::C;
  else
    throw InternalConsistency("overlapping pair " + sigma.to_string() + ", " + tau.to_string() +
                              " has equal heights everywhere");
  return out;
}

PairClass geometric_classify(Simplex sigma, Simplex tau, Dim d) {
  return geometric_classify_with_witness(sigma, tau, d).cls;
}

}  // namespace cyclic
