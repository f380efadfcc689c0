#include "degree_forge/transversal.hpp"

#include <algorithm>
#include <string>

#include "degree_forge/errors.hpp"
#include "degree_forge/transforms.hpp"

namespace degree_forge {

namespace {

// Depth-first walk of the subset tree over vertices in increasing order.
// A partial set is extended only while every member can still reach t.
class TransversalSearch {
 public:
  TransversalSearch(const UniformFamily& family, int t)
      : sets_(family.begin(), family.end()), t_(t), n_(family.n()), k_(family.k()),
        ground_(family.ground()) {}

  std::vector<VertexSet> run() {
    visit(VertexSet{}, 1);
    std::sort(found_.begin(), found_.end(), LexLess{});
    return std::move(found_);
  }

 private:
  void visit(VertexSet partial, int next) {
    const int room = k_ - partial.size();
    const VertexSet rest = VertexSet::interval(next, n_) & ground_;
    bool complete = true;
    for (VertexSet s : sets_) {
      const int have = intersection_size(s, partial);
      if (have >= t_) continue;
      complete = false;
      if (have + std::min(room, intersection_size(s, rest)) < t_) return;
    }
    if (complete) found_.push_back(partial);
    if (room == 0) return;
    for (int v = next; v <= n_; ++v) {
      if (ground_.contains(v)) visit(partial.with(v), v + 1);
    }
  }

  std::vector<VertexSet> sets_;
  int t_;
  int n_;
  int k_;
  VertexSet ground_;
  std::vector<VertexSet> found_;
};

}  // namespace

TransversalReport transversal_report(const UniformFamily& family, int t) {
  if (family.empty()) {
    throw PreconditionError("transversals of the empty family are not defined");
  }
  if (t < 1 || t > family.k()) {
    throw ParameterError("t=" + std::to_string(t) + " outside 1..k");
  }
  TransversalReport report;
  report.t = t;
  report.transversals = TransversalSearch(family, t).run();

  for (VertexSet cand : report.transversals) {
    const bool minimal = std::none_of(
        report.transversals.begin(), report.transversals.end(),
        [&](VertexSet other) { return other != cand && other.subset_of(cand); });
    if (minimal) report.basis.push_back(cand);
  }
  for (VertexSet tr : report.transversals) {
    if (!report.tau || tr.size() < *report.tau) report.tau = tr.size();
  }
  return report;
}

std::optional<int> covering_number(const UniformFamily& family, int t) {
  if (t < 1 || t > family.k()) {
    throw ParameterError("t=" + std::to_string(t) + " outside 1..k");
  }
  const std::vector<int> ground = family.ground().elements();
  const int g = static_cast<int>(ground.size());
  for (int size = t; size <= std::min(family.k(), g); ++size) {
    // Index combinations of `size` ground vertices.
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet cand;
      for (int i : idx) cand = cand.with(ground[static_cast<std::size_t>(i)]);
      if (meets_all(family, cand, t)) return size;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == g - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

UniformFamily generated_family(const std::vector<VertexSet>& generators, int n, int k) {
  const VertexSet universe = VertexSet::full(n);
  for (VertexSet g : generators) {
    if (g.size() > k) {
      throw ParameterError("generator {" + to_string(g) + "} is larger than k=" +
                           std::to_string(k));
    }
    if (!g.subset_of(universe)) {
      throw ParameterError("generator {" + to_string(g) + "} leaves [n]");
    }
  }
  std::vector<VertexSet> out;
  for (VertexSet s : all_k_sets(n, k)) {
    if (std::any_of(generators.begin(), generators.end(),
                    [&](VertexSet g) { return g.subset_of(s); })) {
      out.push_back(s);
    }
  }
  return UniformFamily::from_sets(n, k, std::move(out));
}

std::optional<VertexSet> is_sunflower(const std::vector<VertexSet>& sets) {
  if (sets.size() < 2) {
    throw ParameterError("a sunflower needs at least two members");
  }
  const VertexSet center = sets[0] & sets[1];
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if ((sets[i] & sets[j]) != center) return std::nullopt;
    }
  }
  return center;
}

BasisLemmaReport check_basis_lemmas(const UniformFamily& family, int t) {
  BasisLemmaReport out;
  out.transversal = transversal_report(family, t);
  out.saturated = is_saturated(family, t);
  out.shifted = is_shifted(family);
  if (!out.saturated) return out;

  const auto& basis = out.transversal.basis;
  // For n <= 2k-t every pair of k-sets already t-intersects; the pairwise
  // clause only holds above that range.
  bool pairwise = true;
  const bool nontrivial_range = family.n() > 2 * family.k() - t;
  for (std::size_t i = 0; nontrivial_range && i < basis.size() && pairwise; ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (intersection_size(basis[i], basis[j]) < t) {
        pairwise = false;
        break;
      }
    }
  }
  out.lemma31 = pairwise && generated_family(basis, family.n(), family.k()) == family;

  if (out.shifted) {
    const VertexSet window = VertexSet::interval(1, 2 * family.k() - t);
    out.lemma32 = std::all_of(basis.begin(), basis.end(),
                              [&](VertexSet b) { return b.subset_of(window); });
  }

  if (out.transversal.tau == t + 1) {
    VertexSet cover;
    bool any = false;
    for (VertexSet b : basis) {
      if (b.size() == t + 1) {
        cover = cover | b;
        any = true;
      }
    }
    if (any) out.claim54 = cover.size() <= family.k() + 1;
  }
  return out;
}

}  // namespace degree_forge
