#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cyclic/moment_core.hpp"

using namespace cyclic;

namespace {

// Brute force: try every subset of the merged vertex list and keep those that
// alternate roles starting from the requested one.
int brute_alternation(Simplex sigma, Simplex tau, bool sigma_first) {
  const auto merged = (sigma | tau).vertices();
  const int m = static_cast<int>(merged.size());
  int best = 0;
  for (unsigned pick = 1; pick < (1U << m); ++pick) {
    int len = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(pick & (1U << i))) continue;
      const bool want_sigma = (len % 2 == 0) == sigma_first;
      ok = want_sigma ? sigma.contains(merged[i]) : tau.contains(merged[i]);
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

std::vector<Simplex> all_simplices(int n, int max_size) {
  std::vector<Simplex> out;
  for (int k = 1; k <= max_size; ++k) {
    auto part = subsets_of_size(VertexSet::range(n), k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

TEST_CASE("simplex ordering is lexicographic on vertex lists") {
  CHECK(Simplex{1, 2} < Simplex{1, 2, 3});
  CHECK(Simplex{1, 2, 3} < Simplex{1, 3});
  CHECK(Simplex{1, 4} < Simplex{2});
  CHECK(Simplex{2, 7} > Simplex{1, 4, 6});
  CHECK(Simplex{3, 5, 8} == Simplex{3, 5, 8});
  CHECK_THROWS_AS(Simplex({2, 1}), InvalidInput);
  CHECK_THROWS_AS(Simplex({0, 1}), InvalidInput);
  CHECK_THROWS_AS(Simplex({1, 64}), InvalidInput);
}

TEST_CASE("interlace_report examples") {
  CHECK(interlace_report({1, 3}, {2, 4}) == InterlaceReport{4, 3});
  CHECK(interlace_report({1, 2, 3, 4, 5, 6}, {3, 4, 5, 6, 7, 8}) == InterlaceReport{6, 5});
  const auto r = interlace_report({1, 4, 6}, {3, 5, 8});
  CHECK(r.sigma_start >= 6);
  CHECK(r.tau_start >= 5);
  CHECK_THROWS_WITH_AS(interlace_report(Simplex{}, {1}), "empty simplex", InvalidInput);
}

TEST_CASE("interlace_report matches brute force and swaps roles") {
  const auto simplices = all_simplices(7, 7);
  for (Simplex s : simplices) {
    for (Simplex t : simplices) {
      if (s.size() + t.size() > 9) continue;
      const auto r = interlace_report(s, t);
      REQUIRE(r.sigma_start == brute_alternation(s, t, true));
      REQUIRE(r.tau_start == brute_alternation(s, t, false));
      const auto swapped = interlace_report(t, s);
      REQUIRE(r.sigma_start == swapped.tau_start);
      REQUIRE(r.tau_start == swapped.sigma_start);
      REQUIRE(r.longest() <= (s | t).size());
    }
  }
}

TEST_CASE("overlaps examples") {
  CHECK(overlaps({1, 3}, {2, 4}, Dim(2)));
  CHECK_FALSE(overlaps({1, 2, 3, 4, 5, 6}, {1, 2, 3, 6, 7, 8}, Dim(5)));
  CHECK(overlaps({1, 3, 5, 7}, {2, 4, 6, 8}, Dim(5)));
  CHECK_THROWS_AS(overlaps({1, 2, 3, 4}, {1, 2}, Dim(2)), InvalidInput);
  // A singleton alternates at most three times: never an overlap from d = 2 on,
  // but in d = 1 a point inside a segment does overlap it.
  CHECK_FALSE(overlaps({3}, {1, 5}, Dim(2)));
  CHECK(overlaps({3}, {1, 5}, Dim(1)));
}

TEST_CASE("height_less examples") {
  CHECK(height_less({1, 4, 6}, {2, 7}, Dim(2)));
  CHECK(height_less({2, 7}, {3, 5, 8}, Dim(2)));
  CHECK(height_less({1, 3}, {2, 4}, Dim(2)));
  CHECK_FALSE(height_less({2, 4}, {1, 3}, Dim(2)));
}

TEST_CASE("classify_pair examples") {
  CHECK(classify_pair({1, 2}, {1, 2, 3}, Dim(2)) == PairClass::A);
  CHECK(classify_pair({1, 3}, {2, 4}, Dim(2)) == PairClass::B);
  CHECK(classify_pair({2, 4}, {1, 3}, Dim(2)) == PairClass::C);
  CHECK(classify_pair({1, 4, 6}, {3, 5, 8}, Dim(2)) == PairClass::D);
}

TEST_CASE("classification is antisymmetric and height order is acyclic") {
  for (int d = 1; d <= 4; ++d) {
    const auto simplices = all_simplices(8, d + 1);
    for (Simplex s : simplices) {
      CHECK_FALSE(height_less(s, s, Dim(d)));
      for (Simplex t : simplices) {
        const PairClass st = classify_pair(s, t, Dim(d));
        const PairClass ts = classify_pair(t, s, Dim(d));
        REQUIRE((st == PairClass::B) == (ts == PairClass::C));
        REQUIRE((st == PairClass::A) == (ts == PairClass::A));
        REQUIRE((st == PairClass::D) == (ts == PairClass::D));
      }
    }
    CHECK(order_simplices(simplices, Dim(d)).size() == simplices.size());
  }
}

TEST_CASE("order_simplices examples") {
  const std::vector<Simplex> input{{3, 5, 8}, {1, 4, 6}, {2, 7}};
  CHECK(order_simplices(input, Dim(2)) == std::vector<Simplex>{{1, 4, 6}, {2, 7}, {3, 5, 8}});
  CHECK(order_simplices(std::vector<Simplex>{{2, 5}}, Dim(2)) == std::vector<Simplex>{{2, 5}});
  const std::vector<Simplex> disjoint{{4, 5, 6}, {1, 2, 3}};
  CHECK(order_simplices(disjoint, Dim(2)) == std::vector<Simplex>{{1, 2, 3}, {4, 5, 6}});
  // Every earlier element is below or non-overlapping with every later one.
  const auto all = order_simplices(all_simplices(7, 3), Dim(2));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) REQUIRE_FALSE(height_less(all[j], all[i], Dim(2)));
}

TEST_CASE("gale_facets examples") {
  const auto f42 = gale_facets(4, Dim(2));
  CHECK(f42.upper == std::vector<Simplex>{{1, 4}});
  CHECK(f42.lower == std::vector<Simplex>{{1, 2}, {2, 3}, {3, 4}});
  const auto f63 = gale_facets(6, Dim(3));
  CHECK(f63.upper == std::vector<Simplex>{{1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}});
  CHECK(f63.lower == std::vector<Simplex>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}});
  for (int d = 1; d <= 6; ++d) {
    CHECK(gale_facets(d + 1, Dim(d)).all() == subsets_of_size(VertexSet::range(d + 1), d));
  }
  CHECK_THROWS_AS(gale_facets(3, Dim(3)), InvalidInput);
}

TEST_CASE("gale_facets agrees with the evenness condition and is reversal symmetric for even d") {
  for (int d = 1; d <= 6; ++d) {
    for (int n = d + 1; n <= 10; ++n) {
      const auto facets = gale_facets(n, Dim(d)).all();
      const std::set<Simplex> lookup(facets.begin(), facets.end());
      CHECK(lookup.size() == facets.size());
      for (Simplex s : subsets_of_size(VertexSet::range(n), d))
        REQUIRE(lookup.count(s) == (is_boundary_facet(s, VertexSet::range(n), Dim(d)) ? 1U : 0U));
      if (d % 2 == 0) {
        for (Simplex s : facets) {
          Mask reversed = 0;
          s.for_each([&](Vertex v) { reversed |= Mask{1} << (n + 1 - v); });
          REQUIRE(lookup.count(Simplex::from_mask(reversed)) == 1);
        }
      }
    }
  }
}

TEST_CASE("gale_facets on a non-contiguous ground set relabels by position") {
  const VertexSet ground{1, 2, 5, 6, 7};
  const auto f = gale_facets(ground, Dim(2));
  CHECK(f.upper == std::vector<Simplex>{{1, 7}});
  CHECK(f.lower == std::vector<Simplex>{{1, 2}, {2, 5}, {5, 6}, {6, 7}});
}
