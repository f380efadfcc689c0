#include "degree_forge/family.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degree_forge/errors.hpp"

namespace degree_forge {

namespace {

void check_shape(int n, int k) {
  if (n < 1 || n > kMaxGround) {
    throw ParameterError("ground-set size n=" + std::to_string(n) + " outside 1..64");
  }
  if (k < 0 || k > n) {
    throw ParameterError("uniformity k=" + std::to_string(k) + " outside 0..n");
  }
}

}  // namespace

UniformFamily::UniformFamily(int n, int k) : n_(n), k_(k), ground_() {
  check_shape(n, k);
  ground_ = VertexSet::full(n);
}

UniformFamily::UniformFamily(int n, int k, VertexSet ground, std::vector<VertexSet> sorted_sets)
    : n_(n), k_(k), ground_(ground), sets_(std::move(sorted_sets)) {}

UniformFamily UniformFamily::from_sets(int n, int k, std::vector<VertexSet> sets) {
  check_shape(n, k);
  return from_sets(n, k, std::move(sets), VertexSet::full(n));
}

UniformFamily UniformFamily::from_sets(int n, int k, std::vector<VertexSet> sets,
                                       VertexSet ground) {
  check_shape(n, k);
  if (!ground.subset_of(VertexSet::full(n))) {
    throw ParameterError("ground set exceeds [n]");
  }
  for (VertexSet s : sets) {
    if (s.size() != k) {
      throw ParameterError("set {" + to_string(s) + "} has cardinality " +
                           std::to_string(s.size()) + ", expected " + std::to_string(k));
    }
    if (!s.subset_of(ground)) {
      throw ParameterError("set {" + to_string(s) + "} leaves the ground set");
    }
  }
  std::sort(sets.begin(), sets.end(), LexLess{});
  const auto dup = std::adjacent_find(sets.begin(), sets.end());
  if (dup != sets.end()) {
    throw ParameterError("duplicate set {" + to_string(*dup) + "}");
  }
  return UniformFamily(n, k, ground, std::move(sets));
}

bool UniformFamily::contains(VertexSet s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, LexLess{});
}

std::int64_t DegreeSequence::d(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > sorted.size()) {
    throw ParameterError("degree index " + std::to_string(i) + " outside 1.." +
                         std::to_string(sorted.size()));
  }
  return sorted[static_cast<std::size_t>(i - 1)];
}

DegreeSequence degree_sequence(const UniformFamily& family) {
  DegreeSequence out;
  out.per_vertex.assign(static_cast<std::size_t>(family.n()), 0);
  for (VertexSet s : family) {
    for (auto m = s.mask(); m != 0; m &= m - 1) ++out.per_vertex[std::countr_zero(m)];
  }
  out.order = family.ground().elements();
  std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    return out.per_vertex[a - 1] > out.per_vertex[b - 1];
  });
  out.sorted.reserve(out.order.size());
  for (int x : out.order) out.sorted.push_back(out.per_vertex[x - 1]);
  return out;
}

bool is_t_intersecting(const UniformFamily& family, int t) {
  if (t < 1 || t > family.k()) {
    throw ParameterError("t=" + std::to_string(t) + " outside 1..k");
  }
  const auto sets = family.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (intersection_size(sets[i], sets[j]) < t) return false;
    }
  }
  return true;
}

UniformFamily link(const UniformFamily& family, VertexSet a, VertexSet b) {
  if (!a.subset_of(b)) {
    throw ParameterError("link: A={" + to_string(a) + "} is not a subset of B={" +
                         to_string(b) + "}");
  }
  std::vector<VertexSet> out;
  for (VertexSet s : family) {
    if ((s & b) == a) out.push_back(s - b);
  }
  const int k = family.k() - a.size();
  if (k < 0) return UniformFamily(family.n(), 0);
  return UniformFamily::from_sets(family.n(), k, std::move(out), family.ground() - b);
}

std::int64_t diversity(const UniformFamily& family) {
  if (family.empty()) return 0;
  const auto degrees = degree_sequence(family);
  return static_cast<std::int64_t>(family.size()) - degrees.d(1);
}

std::vector<VertexSet> all_k_sets(int n, int k) {
  check_shape(n, k);
  std::vector<VertexSet> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(VertexSet::of(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

bool meets_all(const UniformFamily& family, VertexSet s, int t) {
  return std::all_of(family.begin(), family.end(),
                     [&](VertexSet f) { return intersection_size(f, s) >= t; });
}

}  // namespace degree_forge
