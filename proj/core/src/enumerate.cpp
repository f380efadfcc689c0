#include "degree_forge/enumerate.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "degree_forge/bigint.hpp"
#include "degree_forge/errors.hpp"

namespace degree_forge {

void check_enumeration_guard(int n, int k, int t) {
  if (n < 1 || k < 1 || k > n || t < 1 || t > k) {
    throw ParameterError("enumeration requires 1 <= t <= k <= n, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k) + " t=" + std::to_string(t));
  }
  const BigInt count = binom(n, k);
  if (count > kEnumerationGuard) {
    const std::uint64_t estimate =
        count > BigInt(UINT64_MAX) ? UINT64_MAX : count.convert_to<std::uint64_t>();
    throw GuardError("C(" + std::to_string(n) + "," + std::to_string(k) + ")=" + to_string(count) +
                         " exceeds the enumeration guard " + std::to_string(kEnumerationGuard),
                     estimate);
  }
}

MaximalFamilyEnumerator::MaximalFamilyEnumerator(int n, int k, int t) : n_(n), k_(k), t_(t) {
  check_enumeration_guard(n, k, t);
  vertices_ = all_k_sets(n, k);
  const std::size_t m = vertices_.size();
  words_ = (m + 63) / 64;
  adjacency_.assign(m * words_, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (intersection_size(vertices_[a], vertices_[b]) >= t) {
        adjacency_[a * words_ + b / 64] |= Word{1} << (b % 64);
        adjacency_[b * words_ + a / 64] |= Word{1} << (a % 64);
      }
    }
  }
  // Top-level pivot: the vertex of maximum degree, lowest index first.
  std::size_t pivot = 0;
  std::size_t best = 0;
  for (std::size_t v = 0; v < m; ++v) {
    std::size_t deg = 0;
    for (std::size_t w = 0; w < words_; ++w) deg += static_cast<std::size_t>(std::popcount(row(v)[w]));
    if (v == 0 || deg > best) {
      best = deg;
      pivot = v;
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (((row(pivot)[v / 64] >> (v % 64)) & 1u) == 0) branches_.push_back(v);
  }
}

void MaximalFamilyEnumerator::run_branch(std::size_t branch,
                                         const std::function<void(FamilyView)>& visit,
                                         const std::atomic<bool>* stop) const {
  const std::size_t m = vertices_.size();
  const std::size_t v = branches_.at(branch);
  std::vector<Word> p(words_, 0);
  std::vector<Word> x(words_, 0);
  for (std::size_t u = 0; u < m; ++u) p[u / 64] |= Word{1} << (u % 64);
  for (std::size_t i = 0; i < branch; ++i) {
    const std::size_t u = branches_[i];
    p[u / 64] &= ~(Word{1} << (u % 64));
    x[u / 64] |= Word{1} << (u % 64);
  }
  for (std::size_t w = 0; w < words_; ++w) {
    p[w] &= row(v)[w];
    x[w] &= row(v)[w];
  }
  std::vector<VertexSet> clique{vertices_[v]};
  std::vector<std::vector<Word>> scratch;
  expand(p, x, clique, 0, scratch, visit, stop);
}

void MaximalFamilyEnumerator::run_all(const std::function<void(FamilyView)>& visit) const {
  for (std::size_t b = 0; b < branches_.size(); ++b) run_branch(b, visit);
}

void MaximalFamilyEnumerator::expand(std::vector<Word>& p, std::vector<Word>& x,
                                     std::vector<VertexSet>& clique, std::size_t depth,
                                     std::vector<std::vector<Word>>& scratch,
                                     const std::function<void(FamilyView)>& visit,
                                     const std::atomic<bool>* stop) const {
  if (stop != nullptr && stop->load(std::memory_order_relaxed)) return;
  bool p_empty = true;
  bool x_empty = true;
  for (std::size_t w = 0; w < words_; ++w) {
    p_empty = p_empty && p[w] == 0;
    x_empty = x_empty && x[w] == 0;
  }
  if (p_empty) {
    if (x_empty) visit(FamilyView(clique));
    return;
  }
  // Pivot in P cup X maximising |P cap N(u)|.
  std::size_t pivot = 0;
  int best = -1;
  for (std::size_t w = 0; w < words_; ++w) {
    for (Word bits = p[w] | x[w]; bits != 0; bits &= bits - 1) {
      const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      int c = 0;
      for (std::size_t j = 0; j < words_; ++j) c += std::popcount(p[j] & row(u)[j]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
  }
  if (scratch.size() < 2 * (depth + 1)) scratch.resize(2 * (depth + 1), std::vector<Word>(words_));
  for (std::size_t w = 0; w < words_; ++w) {
    Word candidates = p[w] & ~row(pivot)[w];
    while (candidates != 0) {
      const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      // scratch may reallocate during recursion; index afresh each time.
      for (std::size_t j = 0; j < words_; ++j) {
        scratch[2 * depth][j] = p[j] & row(v)[j];
        scratch[2 * depth + 1][j] = x[j] & row(v)[j];
      }
      std::vector<Word> np = std::move(scratch[2 * depth]);
      std::vector<Word> nx = std::move(scratch[2 * depth + 1]);
      clique.push_back(vertices_[v]);
      expand(np, nx, clique, depth + 1, scratch, visit, stop);
      clique.pop_back();
      scratch[2 * depth] = std::move(np);
      scratch[2 * depth + 1] = std::move(nx);
      p[w] &= ~(Word{1} << (v % 64));
      x[w] |= Word{1} << (v % 64);
    }
  }
}

std::vector<UniformFamily> enumerate_maximal(int n, int k, int t, int workers) {
  MaximalFamilyEnumerator e(n, k, t);
  auto parts = enumerate_branches(e, workers, std::vector<UniformFamily>{},
                                  [&](std::vector<UniformFamily>& out, FamilyView f) {
                                    out.push_back(UniformFamily::from_sets(
                                        n, k, std::vector<VertexSet>(f.begin(), f.end())));
                                  });
  std::vector<UniformFamily> all;
  for (auto& part : parts) {
    for (auto& f : part) all.push_back(std::move(f));
  }
  return all;
}

int default_workers() {
  if (const char* env = std::getenv("DEGREE_FORGE_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace degree_forge
