#include "degree_forge/transforms.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "degree_forge/errors.hpp"

namespace degree_forge {

UniformFamily shift_ij(const UniformFamily& family, int i, int j) {
  if (i < 1 || j > family.n() || i >= j) {
    throw ParameterError("shift needs 1 <= i < j <= n, got i=" + std::to_string(i) +
                         ", j=" + std::to_string(j));
  }
  std::unordered_set<VertexSet> members(family.begin(), family.end());
  std::vector<VertexSet> out;
  out.reserve(family.size());
  for (VertexSet s : family) {
    if (s.contains(j) && !s.contains(i)) {
      const VertexSet moved = s.without(j).with(i);
      if (!members.contains(moved)) {
        out.push_back(moved);
        continue;
      }
    }
    out.push_back(s);
  }
  return UniformFamily::from_sets(family.n(), family.k(), std::move(out), family.ground());
}

bool precedes(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) {
    throw ParameterError("precedes: cardinalities differ");
  }
  auto ma = a.mask();
  auto mb = b.mask();
  while (ma != 0) {
    if (std::countr_zero(ma) > std::countr_zero(mb)) return false;
    ma &= ma - 1;
    mb &= mb - 1;
  }
  return true;
}

bool is_shifted(const UniformFamily& family) {
  for (VertexSet s : family) {
    // Covering moves: replace x by x-1 when x-1 is free.
    for (auto m = s.mask(); m != 0; m &= m - 1) {
      const int x = std::countr_zero(m) + 1;
      if (x == 1 || s.contains(x - 1)) continue;
      if (!family.contains(s.without(x).with(x - 1))) return false;
    }
  }
  return true;
}

UniformFamily make_shifted(const UniformFamily& family) {
  UniformFamily current = family;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= family.n(); ++i) {
      for (int j = i + 1; j <= family.n(); ++j) {
        UniformFamily next = shift_ij(current, i, j);
        if (next != current) {
          changed = true;
          current = std::move(next);
        }
      }
    }
  }
  return current;
}

namespace {

constexpr std::array<std::pair<SaturationMode, std::string_view>, 2> kModes{{
    {SaturationMode::lex_greedy, "lex_greedy"},
    {SaturationMode::shift_alternate, "shift_alternate"},
}};

UniformFamily lex_greedy(const UniformFamily& family, int t) {
  std::vector<VertexSet> sets(family.begin(), family.end());
  for (VertexSet cand : all_k_sets(family.n(), family.k())) {
    if (!cand.subset_of(family.ground())) continue;
    if (std::find(sets.begin(), sets.end(), cand) != sets.end()) continue;
    const bool ok = std::all_of(sets.begin(), sets.end(),
                                [&](VertexSet s) { return intersection_size(s, cand) >= t; });
    if (ok) sets.push_back(cand);
  }
  return UniformFamily::from_sets(family.n(), family.k(), std::move(sets), family.ground());
}

}  // namespace

std::string_view to_string(SaturationMode mode) {
  for (const auto& [m, name] : kModes) {
    if (m == mode) return name;
  }
  return "?";
}

std::optional<SaturationMode> parse_saturation_mode(std::string_view name) {
  for (const auto& [m, n] : kModes) {
    if (n == name) return m;
  }
  return std::nullopt;
}

std::vector<VertexSet> addable_sets(const UniformFamily& family, int t) {
  std::vector<VertexSet> out;
  for (VertexSet cand : all_k_sets(family.n(), family.k())) {
    if (!cand.subset_of(family.ground()) || family.contains(cand)) continue;
    if (meets_all(family, cand, t)) out.push_back(cand);
  }
  return out;
}

bool is_saturated(const UniformFamily& family, int t) {
  return is_t_intersecting(family, t) && addable_sets(family, t).empty();
}

UniformFamily saturate(const UniformFamily& family, int t, SaturationMode mode) {
  if (!is_t_intersecting(family, t)) {
    throw PreconditionError("saturate: input family is not " + std::to_string(t) +
                            "-intersecting");
  }
  UniformFamily current = lex_greedy(family, t);
  if (mode == SaturationMode::lex_greedy) return current;
  // Each round either grows the family or ends shifted and saturated.
  while (!is_shifted(current)) {
    current = lex_greedy(make_shifted(current), t);
  }
  return current;
}

}  // namespace degree_forge
