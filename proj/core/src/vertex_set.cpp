#include "degree_forge/vertex_set.hpp"

#include <string>

#include "degree_forge/errors.hpp"

namespace degree_forge {

namespace {

VertexSet::Mask bit(int v) {
  if (v < 1 || v > kMaxGround) {
    throw ParameterError("vertex " + std::to_string(v) + " outside 1..64");
  }
  return VertexSet::Mask{1} << (v - 1);
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  Mask m = 0;
  for (int v : vertices) m |= bit(v);
  return VertexSet(m);
}

VertexSet VertexSet::of(const std::vector<int>& vertices) {
  Mask m = 0;
  for (int v : vertices) m |= bit(v);
  return VertexSet(m);
}

VertexSet VertexSet::interval(int lo, int hi) {
  if (hi < lo) return VertexSet();
  if (lo < 1 || hi > kMaxGround) {
    throw ParameterError("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                         "] outside 1..64");
  }
  const int len = hi - lo + 1;
  const Mask run = len == 64 ? ~Mask{0} : ((Mask{1} << len) - 1);
  return VertexSet(run << (lo - 1));
}

VertexSet VertexSet::with(int v) const { return VertexSet(mask_ | bit(v)); }

VertexSet VertexSet::without(int v) const { return VertexSet(mask_ & ~bit(v)); }

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering compare_sets(VertexSet a, VertexSet b, SetOrder order) {
  if (a.size() != b.size()) {
    throw ParameterError("compare_sets: cardinalities " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " differ");
  }
  if (a == b) return std::strong_ordering::equal;
  const bool less = order == SetOrder::lex ? lex_less(a, b) : colex_less(a, b);
  return less ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(VertexSet s) {
  std::string out;
  for (int v : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace degree_forge
