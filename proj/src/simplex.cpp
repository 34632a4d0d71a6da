#include "cyclic/simplex.hpp"

namespace cyclic {

namespace {

std::vector<Simplex> combinations(const std::vector<Vertex>& pool, int k) {
  std::vector<Simplex> out;
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask bits = 0;
    for (int i : idx) bits |= Mask{1} << pool[i];
    out.push_back(Simplex::from_mask(bits));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<Simplex> subsets_of_size(VertexSet ground, int k) { return combinations(ground.vertices(), k); }

std::vector<Simplex> faces_of_size(Simplex s, int k) { return combinations(s.vertices(), k); }

}  // namespace cyclic
