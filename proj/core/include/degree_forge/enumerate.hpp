#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "degree_forge/family.hpp"

namespace degree_forge {

// Largest C(n,k) for which exhaustive enumeration is attempted.
inline constexpr std::uint64_t kEnumerationGuard = 10000;

// Throws ParameterError unless 1 <= t <= k <= n, and GuardError when
// C(n,k) exceeds kEnumerationGuard.
void check_enumeration_guard(int n, int k, int t);

// Members of one maximal family, in discovery order (not sorted).
using FamilyView = std::span<const VertexSet>;

// Maximal cliques of the graph on k-subsets of [n] with edges |A cap B| >= t,
// i.e. the maximal t-intersecting k-uniform families. Pivoted Bron-Kerbosch.
// The top level is split into independent branches; branch b's output depends
// only on b, so any partition of branches over workers yields the same
// per-branch results.
class MaximalFamilyEnumerator {
 public:
  MaximalFamilyEnumerator(int n, int k, int t);

  int n() const { return n_; }
  int k() const { return k_; }
  int t() const { return t_; }
  std::size_t branch_count() const { return branches_.size(); }

  // A set `stop` flag abandons the remaining search tree.
  void run_branch(std::size_t branch, const std::function<void(FamilyView)>& visit,
                  const std::atomic<bool>* stop = nullptr) const;
  void run_all(const std::function<void(FamilyView)>& visit) const;

 private:
  using Word = std::uint64_t;

  void expand(std::vector<Word>& p, std::vector<Word>& x, std::vector<VertexSet>& clique,
              std::size_t depth, std::vector<std::vector<Word>>& scratch,
              const std::function<void(FamilyView)>& visit, const std::atomic<bool>* stop) const;
  const Word* row(std::size_t v) const { return adjacency_.data() + v * words_; }

  int n_;
  int k_;
  int t_;
  std::vector<VertexSet> vertices_;
  std::size_t words_ = 0;
  std::vector<Word> adjacency_;
  std::vector<std::size_t> branches_;
};

// Runs every branch, giving branch b the accumulator acc[b]; worker w takes
// branches b with b % workers == w. Returns the accumulators in branch order.
template <class Acc, class Visit>
std::vector<Acc> enumerate_branches(const MaximalFamilyEnumerator& e, int workers, const Acc& init,
                                    Visit visit, const std::atomic<bool>* stop = nullptr) {
  std::vector<Acc> acc(e.branch_count(), init);
  const std::size_t w = workers < 1 ? 1 : static_cast<std::size_t>(workers);
  auto work = [&](std::size_t id) {
    for (std::size_t b = id; b < e.branch_count(); b += w) {
      Acc& a = acc[b];
      e.run_branch(b, [&](FamilyView f) { visit(a, f); }, stop);
    }
  };
  if (w == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t id = 0; id < w; ++id) threads.emplace_back(work, id);
    for (auto& th : threads) th.join();
  }
  return acc;
}

// All maximal t-intersecting k-uniform families over [n], in a fixed order
// independent of `workers`.
std::vector<UniformFamily> enumerate_maximal(int n, int k, int t, int workers = 1);

// Workers requested by DEGREE_FORGE_WORKERS, or 1.
int default_workers();

}  // namespace degree_forge
