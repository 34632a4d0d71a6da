#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclic/counterexamples.hpp"
#include "cyclic/exact_geometry.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

// A maximal family of D-simplices on [n], added in random order.
Complex random_maximal(std::mt19937_64& rng, int n, int d) {
  auto candidates = subsets_of_size(VertexSet::range(n), d + 1);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<Simplex> kept;
  for (Simplex c : candidates)
    if (std::none_of(kept.begin(), kept.end(), [&](Simplex s) { return overlaps(c, s, Dim(d)); })) kept.push_back(c);
  return Complex::make(n, Dim(d), kept);
}

}  // namespace

TEST_CASE("rambau example") {
  const auto f = rambau_example();
  CHECK(f.d == Dim(5));
  CHECK(f.n() == 8);
  CHECK(f.simplices == std::vector<Simplex>{{1, 2, 3, 4, 5, 6}, {1, 2, 3, 6, 7, 8}, {3, 4, 5, 6, 7, 8}});
  for (Simplex a : f.simplices)
    for (Simplex b : f.simplices)
      if (a != b) CHECK(classify_pair(a, b, Dim(5)) == PairClass::A);
  CHECK(maximal_nonoverlap_check(f).empty());
  CHECK(verify_nonextendable(f).verdict == Verdict::NonExtendable);
}

TEST_CASE("maximality examples") {
  CHECK(maximal_nonoverlap_check(Complex::make(5, Dim(4), {{1, 2, 3, 4, 5}})).empty());
  CHECK(maximal_nonoverlap_check(Complex::make(8, Dim(5), {})).size() == 28);
}

TEST_CASE("verify_nonextendable on extendable inputs") {
  const auto one = verify_nonextendable(Complex::make(8, Dim(5), {{1, 2, 3, 4, 5, 6}}));
  REQUIRE(one.verdict == Verdict::Extendable);
  CHECK(one.witness->contains({1, 2, 3, 4, 5, 6}));
  CHECK(validate(*one.witness).ok);
  CHECK(verify_nonextendable(Complex::make(9, Dim(5), {})).verdict == Verdict::Extendable);
  CHECK(verify_nonextendable(Complex::make(9, Dim(5), {}), 2).verdict == Verdict::Indeterminate);
}

TEST_CASE("lifts of the rambau example") {
  const auto ln = lift_n(rambau_example());
  CHECK(ln.ground == VertexSet::range(9));
  CHECK(ln.d == Dim(5));
  for (Simplex s : rambau_example().simplices) CHECK(std::count(ln.simplices.begin(), ln.simplices.end(), s) == 1);
  for (Simplex s : ln.simplices) CHECK((s.size() == 6));
  CHECK(ln.simplices.size() > 3);
  CHECK(verify_nonextendable(ln).verdict == Verdict::NonExtendable);

  const auto ld = lift_D(rambau_example());
  CHECK(ld.d == Dim(6));
  CHECK(ld.simplices == std::vector<Simplex>{{1, 2, 3, 4, 5, 6, 9}, {1, 2, 3, 6, 7, 8, 9}, {3, 4, 5, 6, 7, 8, 9}});
  CHECK(verify_nonextendable(ld).verdict == Verdict::NonExtendable);
}

TEST_CASE("lift_n adds the cones over visible facets") {
  // Facets of C(n+1, D) containing n+1 are exactly the new simplices joined with it.
  const auto base = Complex::make(7, Dim(4), {});
  const auto lifted = lift_n(base);
  for (Simplex s : lifted.simplices) CHECK(s.contains(8));
  // Visible facets plus q triangulate the region between the two hulls: their volumes add up.
  Rational added(0);
  for (Simplex s : lifted.simplices) added += simplex_volume(s, Dim(4));
  Rational before(0), after(0);
  for (Simplex s : envelope_triangulation(VertexSet::range(7), Dim(4), Envelope::Lower).facets)
    before += simplex_volume(s, Dim(4));
  for (Simplex s : envelope_triangulation(VertexSet::range(8), Dim(4), Envelope::Lower).facets)
    after += simplex_volume(s, Dim(4));
  CHECK(added == after - before);
}

TEST_CASE("lift_D preserves non-overlap") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const int n = d + 2 + static_cast<int>(rng() % 4);
    const Simplex a = oracle::random_subset(rng, n, 1 + static_cast<int>(rng() % (d + 1)));
    const Simplex b = oracle::random_subset(rng, n, 1 + static_cast<int>(rng() % (d + 1)));
    if (classify_pair(a, b, Dim(d)) == PairClass::A)
      CHECK(classify_pair(a.with(n + 1), b.with(n + 1), Dim(d + 1)) == PairClass::A);
  }
}

TEST_CASE("gale vectors span the kernel") {
  const auto cert = gale_dual_check(rambau_example());
  REQUIRE(cert.gale);
  const auto& g = *cert.gale;
  REQUIRE(g.vectors.size() == 8);
  // Each coordinate column is a linear dependence of the points (1, t, ..., t^5).
  for (int col = 0; col < 2; ++col)
    for (int r = 0; r <= 5; ++r) {
      Rational sum(0);
      for (int t = 1; t <= 8; ++t) {
        Rational p(1);
        for (int k = 0; k < r; ++k) p *= t;
        sum += p * g.vectors[t - 1][col];
      }
      CHECK(sum == 0);
    }
  CHECK(g.spanning == std::vector<std::pair<Vertex, Vertex>>{{7, 8}, {4, 5}, {1, 2}});
  CHECK(cert.verdict == Verdict::NonExtendable);
  CHECK_FALSE(g.interior);
}

TEST_CASE("gale check trivial cases") {
  CHECK(gale_dual_check(Complex::make(8, Dim(5), {})).verdict == Verdict::Extendable);
  const auto one = gale_dual_check(Complex::make(8, Dim(5), {{2, 3, 4, 5, 6, 7}}));
  CHECK(one.verdict == Verdict::Extendable);
  CHECK_THROWS_AS(gale_dual_check(Complex::make(9, Dim(5), {})), Unsupported);
}

TEST_CASE("gale check agrees with search at n = D+3") {
  std::mt19937_64 rng(8);
  int non_ext = 0;
  for (int i = 0; i < 50; ++i) {
    const auto f = random_maximal(rng, 8, 5);
    const auto g = gale_dual_check(f);
    const auto s = verify_nonextendable(f);
    CHECK(g.verdict == s.verdict);
    non_ext += s.verdict == Verdict::NonExtendable;
  }
  MESSAGE("non-extendable random maximal families: " << non_ext);
}

TEST_CASE("maximal families at n = D+2 are extendable") {
  for (int d = 1; d <= 6; ++d) {
    const int n = d + 2;
    const auto all = subsets_of_size(VertexSet::range(n), d + 1);
    for (unsigned pick = 0; pick < (1U << all.size()); ++pick) {
      std::vector<Simplex> fam;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (pick >> i & 1U) fam.push_back(all[i]);
      bool ok = true;
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) ok = ok && !overlaps(fam[i], fam[j], Dim(d));
      if (!ok) continue;
      const auto f = Complex::make(n, Dim(d), fam);
      if (!maximal_nonoverlap_check(f).empty()) continue;
      CHECK(verify_nonextendable(f).verdict == Verdict::Extendable);
      CHECK(extend_small(f).triangulation.facets.size() >= fam.size());
    }
  }
}
