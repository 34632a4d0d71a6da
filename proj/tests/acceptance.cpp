// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Each check compares library output against an oracle built here or in oracles.hpp.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "cyclic/counterexamples.hpp"
#include "cyclic/exact_geometry.hpp"
#include "cyclic/parallel.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

// Pinned tolerances and budgets.
constexpr std::uint64_t kLiftBudget = 10'000'000;
constexpr double kComplexitySlack = 4.0;
constexpr int kComplexityExponent = 5;
constexpr int kGreedyRuns = 200;
constexpr int kGaleRandomFamilies = 50;
constexpr int kLmrInstances = 500;
constexpr int kLevelInstances = 500;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages.
class Failures {
 public:
  void add(const std::string& what) {
    std::lock_guard lock(mu_);
    if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  int count() const { return count_; }
  std::string summary() const { return std::to_string(count_) + " failures: " + first_; }

 private:
  std::mutex mu_;
  std::atomic<int> count_{0};
  std::string first_;
};

Outcome finish(const Failures& f, const std::string& ok_detail) {
  return f.count() == 0 ? Outcome{true, ok_detail} : Outcome{false, f.summary()};
}

std::vector<Simplex> all_subsets(int n, int max_size) {
  std::vector<Simplex> out;
  for (int k = 1; k <= max_size; ++k)
    for (Simplex s : subsets_of_size(VertexSet::range(n), k)) out.push_back(s);
  return out;
}

std::set<Simplex> edges(const Triangulation& t) {
  std::set<Simplex> out;
  for (Simplex f : t.facets)
    for (Simplex e : faces_of_size(f, 2)) out.insert(e);
  return out;
}

bool geometric_below(Simplex tau, const Triangulation& t) {
  for (Simplex f : t.facets) {
    const PairClass c = geometric_classify(tau, f, t.d);
    if (c != PairClass::A && c != PairClass::B) return false;
  }
  return true;
}

Complex random_maximal(std::mt19937_64& rng, int n, int d) {
  auto candidates = subsets_of_size(VertexSet::range(n), d + 1);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<Simplex> kept;
  for (Simplex c : candidates)
    if (std::none_of(kept.begin(), kept.end(), [&](Simplex s) { return overlaps(c, s, Dim(d)); })) kept.push_back(c);
  return Complex::make(n, Dim(d), kept);
}

// Pair classes on the moment curve against exact rational geometry. Labels are
// curve parameters, so pairs on [8] cover every n <= 8.
Outcome criterion_1() {
  Failures bad;
  std::atomic<long> pairs{0};
  for (int d = 1; d <= 4; ++d) {
    const auto all = all_subsets(8, d + 1);
    parallel_for(all.size(), [&](std::size_t i) {
      long local = 0;
      for (Simplex tau : all) {
        if (tau == all[i]) continue;
        ++local;
        const PairClass a = classify_pair(all[i], tau, Dim(d));
        const PairClass b = geometric_classify(all[i], tau, Dim(d));
        if (a != b)
          bad.add(all[i].to_string() + " " + tau.to_string() + " d=" + std::to_string(d) + ": " +
                  std::string(to_string(a)) + " vs " + std::string(to_string(b)));
      }
      pairs += local;
    });
  }
  return finish(bad, std::to_string(pairs.load()) + " ordered pairs, 0 mismatches");
}

Outcome criterion_2() {
  Failures bad;
  const Complex f = rambau_example();
  const Certificate c = verify_nonextendable(f);
  if (c.verdict != Verdict::NonExtendable) bad.add("verdict " + std::string(to_string(c.verdict)));
  if (!maximal_nonoverlap_check(f).empty()) bad.add("a 5-simplex can be added");
  // Oracle: each of the 28 candidates is a member or overlaps one geometrically.
  const auto candidates = subsets_of_size(f.ground, 6);
  if (candidates.size() != 28) bad.add("candidate count " + std::to_string(candidates.size()));
  for (Simplex s : candidates) {
    const bool member = std::find(f.simplices.begin(), f.simplices.end(), s) != f.simplices.end();
    const bool blocked = std::any_of(f.simplices.begin(), f.simplices.end(),
                                     [&](Simplex m) { return m != s && geometric_overlap(s, m, f.d); });
    if (!member && !blocked) bad.add(s.to_string() + " overlaps no member");
  }
  return finish(bad, "non-extendable after " + std::to_string(c.stats.nodes) + " nodes, 28 candidates blocked");
}

Outcome criterion_3() {
  Failures bad;
  // Every word over {lift_n, lift_D} applied to the Rambau family, within range.
  std::vector<Complex> frontier{rambau_example()};
  std::set<std::pair<int, int>> covered;
  int certified = 0;
  while (!frontier.empty()) {
    std::vector<Complex> next;
    for (const Complex& f : frontier) {
      const int d = f.d.value();
      const int n = f.ground.max();
      if (d > 7 || n > std::min(d + 5, 11)) continue;
      const Certificate c = verify_nonextendable(f, kLiftBudget);
      if (c.verdict != Verdict::NonExtendable)
        bad.add("D=" + std::to_string(d) + " n=" + std::to_string(n) + ": " + std::string(to_string(c.verdict)));
      covered.insert({d, n});
      ++certified;
      next.push_back(lift_n(f));
      next.push_back(lift_D(f));
    }
    frontier = std::move(next);
  }
  for (int d = 5; d <= 7; ++d)
    for (int n = d + 3; n <= std::min(d + 5, 11); ++n)
      if (!covered.count({d, n})) bad.add("no family at D=" + std::to_string(d) + " n=" + std::to_string(n));
  return finish(bad, std::to_string(certified) + " families over " + std::to_string(covered.size()) + " (D, n) pairs");
}

Outcome criterion_4() {
  Failures bad;
  const Complex r = rambau_example();
  const Certificate g = gale_dual_check(r);
  const Certificate s = verify_nonextendable(r);
  if (g.verdict != Verdict::NonExtendable || s.verdict != Verdict::NonExtendable) bad.add("rambau verdicts differ");
  std::set<std::pair<Vertex, Vertex>> pairs(g.gale->spanning.begin(), g.gale->spanning.end());
  if (pairs != std::set<std::pair<Vertex, Vertex>>{{7, 8}, {1, 2}, {4, 5}}) bad.add("spanning pairs differ");
  std::mt19937_64 rng(2024);
  int non_ext = 0;
  for (int i = 0; i < kGaleRandomFamilies; ++i) {
    const Complex f = random_maximal(rng, 8, 5);
    const Verdict a = gale_dual_check(f).verdict;
    const Verdict b = verify_nonextendable(f).verdict;
    if (a != b) bad.add("family " + std::to_string(i) + " disagrees");
    non_ext += b == Verdict::NonExtendable;
  }
  return finish(bad, "rambau and " + std::to_string(kGaleRandomFamilies) + " random maximal families agree (" +
                         std::to_string(non_ext) + " non-extendable)");
}

Outcome criterion_5() {
  Failures bad;
  std::vector<Complex> inputs;
  std::mt19937_64 rng(5150);
  for (int i = 0; i < kGreedyRuns; ++i) {
    const int d = 3 + i % 2;
    const int n = d + 1 + static_cast<int>(rng() % (12 - d));
    inputs.push_back(oracle::random_complex(rng, n, d, 6 + static_cast<int>(rng() % 20)));
  }
  parallel_for(inputs.size(), [&](std::size_t i) {
    const Complex& f = inputs[i];
    try {
      const auto t = greedy_extend(f).triangulation;
      if (!validate(t).ok) bad.add("run " + std::to_string(i) + " invalid");
      for (Simplex s : f.simplices)
        if (!t.has_face(s)) bad.add("run " + std::to_string(i) + " drops " + s.to_string());
    } catch (const Error& e) {
      bad.add("run " + std::to_string(i) + ": " + e.what());
    }
  });
  return finish(bad, std::to_string(kGreedyRuns) + " runs, all valid");
}

Outcome criterion_6() {
  Failures bad;
  const int expected[] = {2, 5, 14, 42};
  std::ostringstream got;
  for (int n = 4; n <= 7; ++n) {
    std::vector<Vertex> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    const auto brute = oracle::polygon_triangulations(v).size();
    const auto enumerated = enumerate_triangulations(n, Dim(2)).size();
    got << enumerated << (n < 7 ? ", " : "");
    if (enumerated != brute || static_cast<int>(brute) != expected[n - 4])
      bad.add("n=" + std::to_string(n) + ": " + std::to_string(enumerated) + " vs " + std::to_string(brute));
  }
  return finish(bad, "|S(n,2)| = " + got.str());
}

Outcome criterion_7() {
  Failures bad;
  long pairs = 0;
  for (int d = 2; d <= 3; ++d) {
    for (int n = d + 1; n <= 7; ++n) {
      const HSTPoset p = hst_poset(n, Dim(d));
      std::vector<SubmersionSet> sub;
      for (const auto& t : p.elements) sub.push_back(submersion_set(t));
      const std::set<std::vector<Simplex>> distinct = [&] {
        std::set<std::vector<Simplex>> out;
        for (const auto& s : sub) out.insert(s.members);
        return out;
      }();
      const std::string where = " at d=" + std::to_string(d) + " n=" + std::to_string(n);
      if (distinct.size() != sub.size()) bad.add("sub not injective" + where);
      const int size = static_cast<int>(p.elements.size());
      for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
          ++pairs;
          const auto g = p.glb(a, b);
          const Triangulation m = meet(p.elements[a], p.elements[b]);
          if (!g || m != p.elements[*g]) bad.add("meet is not the glb" + where);
          if (submersion_set(m) != intersect(sub[a], sub[b])) bad.add("sub of meet differs" + where);
        }
      }
    }
  }
  return finish(bad, std::to_string(pairs) + " pairs");
}

Outcome criterion_8() {
  Failures bad;
  const HSTPoset p = hst_poset(7, Dim(4));
  const auto v = meet_intersection_violation(p);
  if (!v) {
    bad.add("no violating pair at d=4 n=7");
  } else {
    const auto target = intersect(submersion_set(p.elements[v->first]), submersion_set(p.elements[v->second]));
    for (const auto& t : p.elements)
      if (submersion_set(t) == target) bad.add("reported pair is not a violation");
  }
  for (int d = 4; d <= 5; ++d) {
    const HSTPoset q = hst_poset(d + 2, Dim(d));
    // Brute force over all pairs.
    for (const auto& a : q.elements)
      for (const auto& b : q.elements) {
        const auto target = intersect(submersion_set(a), submersion_set(b));
        if (std::none_of(q.elements.begin(), q.elements.end(), [&](const Triangulation& t) { return submersion_set(t) == target; }))
          bad.add("violation at d=" + std::to_string(d) + " n=d+2");
      }
    if (meet_intersection_violation(q)) bad.add("library reports a violation at d=" + std::to_string(d) + " n=d+2");
  }
  return finish(bad, "NO at (4,7), YES at (4,6) and (5,7)");
}

Outcome criterion_9() {
  Failures bad;
  int families = 0;
  for (int d = 1; d <= 6; ++d) {
    const int n = d + 2;
    const auto all = subsets_of_size(VertexSet::range(n), d + 1);
    for (unsigned pick = 1; pick < (1U << all.size()); ++pick) {
      std::vector<Simplex> fam;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (pick >> i & 1U) fam.push_back(all[i]);
      bool disjoint = true;
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) disjoint = disjoint && !geometric_overlap(fam[i], fam[j], Dim(d));
      if (!disjoint) continue;
      const Complex f = Complex::make(n, Dim(d), fam);
      if (!maximal_nonoverlap_check(f).empty()) continue;
      ++families;
      const auto t = extend_small(f).triangulation;
      if (!validate(t).ok) bad.add("invalid output at d=" + std::to_string(d));
      for (Simplex s : fam)
        if (!t.contains(s)) bad.add(s.to_string() + " missing at d=" + std::to_string(d));
    }
  }
  return finish(bad, std::to_string(families) + " maximal families extended");
}

Outcome criterion_10() {
  Failures bad;
  long sigmas = 0;
  for (int n = 3; n <= 8; ++n) {
    std::vector<Simplex> all = subsets_of_size(VertexSet::range(n), 2);
    for (Simplex t : subsets_of_size(VertexSet::range(n), 3)) all.push_back(t);
    sigmas += static_cast<long>(all.size());
    parallel_for(all.size(), [&](std::size_t i) {
      const Simplex sigma = all[i];
      const Triangulation t = t_of_sigma_d2(sigma, n);
      if (!t.has_face(sigma)) bad.add("T(" + sigma.to_string() + ") misses sigma");
      for (Simplex tau : all) {
        if (tau == sigma) continue;
        const PairClass c = geometric_classify(tau, sigma, Dim(2));
        if ((c == PairClass::A || c == PairClass::B) && !geometric_below(tau, t))
          bad.add(tau.to_string() + " above T(" + sigma.to_string() + ") n=" + std::to_string(n));
      }
    });
  }
  std::mt19937_64 rng(1010);
  for (int i = 0; i < kLmrInstances; ++i) {
    const auto inst = oracle::random_lmr(rng, 10);
    if (!oracle::admissible_triangulation_exists(inst)) bad.add("brute force finds no admissible triangulation");
    try {
      const auto t = lmr_triangulate(inst);
      if (t.ground != inst.v || static_cast<int>(t.facets.size()) != inst.v.size() - 2) bad.add("lmr shape");
      for (Simplex e : edges(t))
        if (!oracle::edge_admissible(e, inst)) bad.add("lmr edge " + e.to_string());
    } catch (const Error& e) {
      bad.add(std::string("lmr: ") + e.what());
    }
  }
  std::mt19937_64 lrng(909);
  for (int i = 0; i < kLevelInstances; ++i) {
    const int n = 4 + i % 6;
    const auto inst = oracle::random_level(lrng, n, 4 + i % 9);
    try {
      const auto t = level_triangulation_d3(inst.sigma, inst.taus, n);
      if (!validate(t).ok || !t.has_face(inst.sigma)) bad.add("level output at n=" + std::to_string(n));
      for (Simplex tau : inst.taus) {
        if (!simplex_below(tau, t)) bad.add("level: tau above");
        for (Simplex e : edges(t))
          if (oracle::five_interlacing(e, tau)) bad.add("level: edge " + e.to_string() + " crosses " + tau.to_string());
      }
    } catch (const Error& e) {
      bad.add(std::string("level: ") + e.what());
    }
  }
  return finish(bad, std::to_string(sigmas) + " sigmas, " + std::to_string(kLmrInstances) + " lmr, " +
                         std::to_string(kLevelInstances) + " level instances");
}

Outcome criterion_11() {
  Failures bad;
  long chains = 0;
  for (int n = 4; n <= 6; ++n) {
    const HSTPoset p = hst_poset(n, Dim(2));
    const HSTPoset up = hst_poset(n, Dim(3));
    for (const auto& chain : p.maximal_chains()) {
      ++chains;
      std::vector<Triangulation> members;
      for (int i : chain) members.push_back(p.elements[i]);
      const Triangulation t = psi_chain(members, p);
      if (!validate(t).ok || up.index_of(t) < 0) bad.add("psi outside S(" + std::to_string(n) + ",3)");
    }
  }
  long links = 0;
  for (int d = 2; d <= 3; ++d) {
    for (int n = d + 2; n <= 7; ++n) {
      const auto below = enumerate_triangulations(n - 1, Dim(d - 1));
      for (const auto& t : enumerate_triangulations(n, Dim(d))) {
        ++links;
        const Triangulation l = link_at_max(t);
        if (std::find(below.begin(), below.end(), l) == below.end()) bad.add("link outside S(n-1,d-1)");
      }
    }
  }
  return finish(bad, std::to_string(chains) + " chains, " + std::to_string(links) + " links");
}

// Least squares of log(count) - 5 log(n) gives log c; every point must lie
// within a factor kComplexitySlack of c n^5.
Outcome criterion_12() {
  std::vector<double> ns, counts;
  std::mt19937_64 rng(1212);
  for (int n = 8; n <= 40; ++n) {
    const Complex f = oracle::random_complex(rng, n, 4, n);
    counts.push_back(static_cast<double>(greedy_extend(f).stats.interlace_tests));
    ns.push_back(n);
  }
  double log_c = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) log_c += std::log(counts[i]) - kComplexityExponent * std::log(ns[i]);
  log_c /= static_cast<double>(ns.size());
  const double c = std::exp(log_c);
  double worst = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) worst = std::max(worst, counts[i] / (c * std::pow(ns[i], kComplexityExponent)));
  // Free slope, for the report only.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(ns[i]), y = std::log(counts[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double k = static_cast<double>(ns.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  std::ostringstream detail;
  detail.precision(3);
  detail << "c = " << c << ", max ratio to c n^5 = " << worst << ", fitted exponent " << slope;
  return {worst <= kComplexitySlack, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"pair classes match exact geometry (d <= 4, n <= 8)", criterion_1},
      {"rambau family is non-extendable and maximal", criterion_2},
      {"lifted families are non-extendable (D 5..7)", criterion_3},
      {"gale check agrees with search at (5, 8)", criterion_4},
      {"greedy extension succeeds for d in {3, 4}", criterion_5},
      {"|S(n,2)| matches brute force for n = 4..7", criterion_6},
      {"lattice structure of HST(n,d) for d in {2, 3}", criterion_7},
      {"meet-intersection table at d = 4, 5", criterion_8},
      {"maximal families at n = D+2 extend", criterion_9},
      {"construction postconditions", criterion_10},
      {"psi of maximal chains and links", criterion_11},
      {"greedy interlace tests grow like n^5 at d = 4", criterion_12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fprintf(stderr, "     criterion %zu took %.1f s\n", i + 1, secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
