#include "degree_forge/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "degree_forge/errors.hpp"

namespace degree_forge {

std::strong_ordering CanonicalForm::operator<=>(const CanonicalForm& other) const {
  if (auto c = n <=> other.n; c != 0) return c;
  if (auto c = k <=> other.k; c != 0) return c;
  return std::lexicographical_compare_three_way(
      sets.begin(), sets.end(), other.sets.begin(), other.sets.end(),
      [](VertexSet a, VertexSet b) { return a.mask() <=> b.mask(); });
}

UniformFamily relabel(const UniformFamily& family, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != family.n()) {
    throw ParameterError("relabel: permutation length differs from n");
  }
  std::vector<VertexSet> out;
  out.reserve(family.size());
  for (VertexSet s : family) {
    VertexSet::Mask m = 0;
    for (int x : s.elements()) m |= VertexSet::Mask{1} << (perm[static_cast<std::size_t>(x - 1)] - 1);
    out.push_back(VertexSet::from_mask(m));
  }
  return UniformFamily::from_sets(family.n(), family.k(), std::move(out));
}

namespace {

class Canonicalizer {
 public:
  explicit Canonicalizer(const UniformFamily& family)
      : n_(family.n()), k_(family.k()), members_(std::size_t{1} << family.n(), false) {
    for (VertexSet s : family) {
      members_[s.mask()] = true;
      sets_.push_back(s.mask());
    }
    refine();
    find_twins();
    // Position subsets: for each new label p (0-based), the (k-1)-subsets of
    // earlier labels, colex order. Together they enumerate all k-subsets of
    // the new labels in colex order.
    if (k_ >= 1) {
      position_subsets_.resize(static_cast<std::size_t>(n_));
      for (int p = 0; p < n_; ++p) {
        auto& list = position_subsets_[static_cast<std::size_t>(p)];
        const Mask below = p == 0 ? 0 : ((Mask{1} << p) - 1);
        for (Mask m = 0; m <= below; ++m) {
          if ((m & ~below) == 0 && std::popcount(m) == k_ - 1) list.push_back(m);
        }
      }
    }
  }

  CanonicalForm run() {
    assigned_.assign(static_cast<std::size_t>(n_), -1);
    used_ = 0;
    best_bits_.clear();
    have_best_ = false;
    bits_.clear();
    search(0, Cmp::equal);

    CanonicalForm out;
    out.n = n_;
    out.k = k_;
    // best_order_[p] = vertex (0-based) that receives label p+1.
    std::vector<int> label_of(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) label_of[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(p)])] = p;
    for (Mask s : sets_) {
      Mask m = 0;
      for (Mask r = s; r != 0; r &= r - 1) {
        m |= Mask{1} << label_of[static_cast<std::size_t>(std::countr_zero(r))];
      }
      out.sets.push_back(VertexSet::from_mask(m));
    }
    std::sort(out.sets.begin(), out.sets.end(), LexLess{});
    return out;
  }

 private:
  using Mask = VertexSet::Mask;
  enum class Cmp { equal, better };

  // Iterated refinement: start from degree classes (higher degree first) and
  // split by the multiset of cell patterns of the sets through each vertex.
  void refine() {
    std::vector<int> degree(static_cast<std::size_t>(n_), 0);
    for (Mask s : sets_) {
      for (Mask r = s; r != 0; r &= r - 1) ++degree[static_cast<std::size_t>(std::countr_zero(r))];
    }
    cell_.assign(static_cast<std::size_t>(n_), 0);
    {
      std::vector<int> distinct(degree.begin(), degree.end());
      std::sort(distinct.begin(), distinct.end(), std::greater<>());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int v = 0; v < n_; ++v) {
        cell_[static_cast<std::size_t>(v)] = static_cast<int>(
            std::find(distinct.begin(), distinct.end(), degree[static_cast<std::size_t>(v)]) -
            distinct.begin());
      }
    }
    int cells = 1 + *std::max_element(cell_.begin(), cell_.end());
    while (true) {
      using Signature = std::pair<int, std::vector<std::vector<int>>>;
      std::vector<Signature> sig(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        sig[static_cast<std::size_t>(v)].first = cell_[static_cast<std::size_t>(v)];
        for (Mask s : sets_) {
          if (((s >> v) & 1u) == 0) continue;
          std::vector<int> pattern;
          for (Mask r = s & ~(Mask{1} << v); r != 0; r &= r - 1) {
            pattern.push_back(cell_[static_cast<std::size_t>(std::countr_zero(r))]);
          }
          std::sort(pattern.begin(), pattern.end());
          sig[static_cast<std::size_t>(v)].second.push_back(std::move(pattern));
        }
        std::sort(sig[static_cast<std::size_t>(v)].second.begin(),
                  sig[static_cast<std::size_t>(v)].second.end());
      }
      std::map<Signature, int> ids;
      for (const auto& s : sig) ids.emplace(s, 0);
      int next = 0;
      for (auto& [key, id] : ids) id = next++;
      for (int v = 0; v < n_; ++v) cell_[static_cast<std::size_t>(v)] = ids.at(sig[static_cast<std::size_t>(v)]);
      if (next == cells) break;
      cells = next;
    }
    // Positions are handed out cell by cell.
    std::vector<int> sizes(static_cast<std::size_t>(cells), 0);
    for (int c : cell_) ++sizes[static_cast<std::size_t>(c)];
    for (int c = 0; c < cells; ++c) {
      for (int i = 0; i < sizes[static_cast<std::size_t>(c)]; ++i) position_cell_.push_back(c);
    }
  }

  // u ~ v iff swapping u and v maps the family onto itself.
  void find_twins() {
    twin_rep_.resize(static_cast<std::size_t>(n_));
    std::iota(twin_rep_.begin(), twin_rep_.end(), 0);
    for (int u = 0; u < n_; ++u) {
      if (twin_rep_[static_cast<std::size_t>(u)] != u) continue;
      for (int v = u + 1; v < n_; ++v) {
        if (twin_rep_[static_cast<std::size_t>(v)] != v) continue;
        if (cell_[static_cast<std::size_t>(u)] != cell_[static_cast<std::size_t>(v)]) continue;
        if (swap_preserves(u, v)) twin_rep_[static_cast<std::size_t>(v)] = u;
      }
    }
  }

  bool swap_preserves(int u, int v) const {
    const Mask bu = Mask{1} << u;
    const Mask bv = Mask{1} << v;
    for (Mask s : sets_) {
      const bool has_u = (s & bu) != 0;
      const bool has_v = (s & bv) != 0;
      if (has_u == has_v) continue;
      if (!members_[s ^ bu ^ bv]) return false;
    }
    return true;
  }

  void search(int p, Cmp state) {
    if (p == n_) {
      if (!have_best_ || state == Cmp::better) {
        best_bits_ = bits_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const int cell = position_cell_[static_cast<std::size_t>(p)];
    // One candidate per twin class among the unassigned cell members.
    Mask tried_classes = 0;
    for (int v = 0; v < n_; ++v) {
      if (((used_ >> v) & 1u) != 0 || cell_[static_cast<std::size_t>(v)] != cell) continue;
      const int rep = twin_rep_[static_cast<std::size_t>(v)];
      if (((tried_classes >> rep) & 1u) != 0) continue;
      tried_classes |= Mask{1} << rep;

      const std::size_t mark = bits_.size();
      Cmp next_state = state;
      bool prune = false;
      if (k_ >= 1) {
        for (Mask positions : position_subsets_[static_cast<std::size_t>(p)]) {
          Mask image = Mask{1} << v;
          for (Mask r = positions; r != 0; r &= r - 1) {
            image |= Mask{1} << order_[static_cast<std::size_t>(std::countr_zero(r))];
          }
          const bool bit = members_[image];
          const std::size_t at = bits_.size();
          bits_.push_back(bit);
          if (have_best_ && next_state == Cmp::equal) {
            const bool best = best_bits_[at];
            if (bit && !best) {
              next_state = Cmp::better;
            } else if (!bit && best) {
              prune = true;
              break;
            }
          }
        }
      }
      if (!prune) {
        order_.push_back(v);
        used_ |= Mask{1} << v;
        search(p + 1, next_state);
        used_ &= ~(Mask{1} << v);
        order_.pop_back();
      }
      bits_.resize(mark);
    }
  }

  int n_;
  int k_;
  std::vector<bool> members_;
  std::vector<Mask> sets_;
  std::vector<int> cell_;
  std::vector<int> position_cell_;
  std::vector<int> twin_rep_;
  std::vector<std::vector<Mask>> position_subsets_;

  std::vector<int> assigned_;
  std::vector<int> order_;
  Mask used_ = 0;
  std::vector<bool> bits_;
  std::vector<bool> best_bits_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const UniformFamily& family) {
  if (family.n() > kCanonicalMaxN) {
    throw GuardError("canonical_form supports n <= " + std::to_string(kCanonicalMaxN) +
                         ", got n=" + std::to_string(family.n()),
                     static_cast<std::uint64_t>(family.n()));
  }
  return Canonicalizer(family).run();
}

bool are_isomorphic(const UniformFamily& a, const UniformFamily& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace degree_forge
