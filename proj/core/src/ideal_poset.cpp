#include "casimir/ideal_poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace casimir {

RootPoset::RootPoset(const RootSystem& rs) {
  const int r = rs.num_positive_roots();
  if (r > RootSet::kCapacity) throw std::length_error("too many positive roots for RootSet");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < r; ++i) {
    coords_.push_back(rs.root_coords(i));
    index.emplace(coords_.back(), i);
  }
  up_.resize(static_cast<std::size_t>(r));
  down_.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int s = 0; s < rs.rank(); ++s) {
      std::vector<int> c = coords_[i];
      c[s] += 1;
      auto it = index.find(c);
      if (it == index.end()) continue;
      covers_.emplace_back(i, it->second);
      up_[i].push_back(it->second);
      down_[it->second].push_back(i);
    }
  }
}

bool RootPoset::leq(int a, int b) const {
  const auto& ca = coords_[static_cast<std::size_t>(a)];
  const auto& cb = coords_[static_cast<std::size_t>(b)];
  for (std::size_t k = 0; k < ca.size(); ++k)
    if (ca[k] > cb[k]) return false;
  return true;
}

std::vector<int> RootPoset::maximal() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> RootPoset::minimal() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[i].empty()) out.push_back(i);
  return out;
}

bool RootPoset::is_upper_set(const RootSet& s) const {
  for (const auto& [lo, hi] : covers_)
    if (s.test(lo) && !s.test(hi)) return false;
  return true;
}

namespace {

// Roots are visited from the top of a linear extension downward; a root may
// join the set only when everything covering it is already in.
void enumerate(const RootPoset& poset, int idx, RootSet& current, int count, std::optional<int> target,
               std::vector<NilIdeal>& out) {
  if (target && count > *target) return;
  if (idx < 0) {
    if (!target || count == *target) out.push_back(NilIdeal{current});
    return;
  }
  if (target && count + idx + 1 < *target) return;
  enumerate(poset, idx - 1, current, count, target, out);
  const auto& ups = poset.upper_covers(idx);
  if (std::all_of(ups.begin(), ups.end(), [&](int u) { return current.test(u); })) {
    current.set(idx);
    enumerate(poset, idx - 1, current, count + 1, target, out);
    current.reset(idx);
  }
}

}  // namespace

std::vector<NilIdeal> enumerate_ideals(const RootSystem& rs, std::optional<int> size) {
  const int r = rs.num_positive_roots();
  if (size && (*size < 0 || *size > r)) {
    throw std::out_of_range("ideal size " + std::to_string(*size) + " outside [0, " + std::to_string(r) + "]");
  }
  const RootPoset poset(rs);
  std::vector<NilIdeal> out;
  RootSet current;
  enumerate(poset, r - 1, current, 0, size, out);
  std::sort(out.begin(), out.end());
  return out;
}

Weight ideal_weight_sum(const RootSystem& rs, const NilIdeal& ideal) {
  Weight sum(rs.rank());
  const auto& roots = rs.positive_roots();
  for (int i = 0; i < rs.num_positive_roots(); ++i)
    if (ideal.contains(i)) sum += roots[i];
  return sum;
}

std::vector<std::vector<int>> ideal_root_coords(const RootSystem& rs, const NilIdeal& ideal) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < rs.num_positive_roots(); ++i)
    if (ideal.contains(i)) out.push_back(rs.root_coords(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::string BasisLabel::str() const {
  const char prefix = kind == Kind::X ? 'x' : kind == Kind::Y ? 'y' : 'h';
  return prefix + std::to_string(index + 1);
}

Weight label_weight(const RootSystem& rs, const BasisLabel& label) {
  switch (label.kind) {
    case BasisLabel::Kind::X: return rs.positive_roots().at(static_cast<std::size_t>(label.index));
    case BasisLabel::Kind::Y: return -rs.positive_roots().at(static_cast<std::size_t>(label.index));
    case BasisLabel::Kind::H: break;
  }
  return Weight(rs.rank());
}

std::vector<BasisLabel> basis_labels(const RootSystem& rs) {
  std::vector<BasisLabel> out;
  for (int j = 0; j < rs.num_positive_roots(); ++j) out.push_back(BasisLabel::x(j));
  for (int j = 0; j < rs.num_positive_roots(); ++j) out.push_back(BasisLabel::y(j));
  for (int j = 0; j < rs.rank(); ++j) out.push_back(BasisLabel::h(j));
  return out;
}

bool is_b_normal(const RootSystem& rs, std::span<const BasisLabel> labels) {
  const int r = rs.num_positive_roots();
  const int l = rs.rank();
  std::vector<bool> xs(static_cast<std::size_t>(r)), ys(static_cast<std::size_t>(r)), hs(static_cast<std::size_t>(l));
  for (const auto& lab : labels) {
    const int bound = lab.kind == BasisLabel::Kind::H ? l : r;
    if (lab.index < 0 || lab.index >= bound) throw std::invalid_argument("unknown basis label " + lab.str());
    (lab.kind == BasisLabel::Kind::X ? xs : lab.kind == BasisLabel::Kind::Y ? ys : hs)[lab.index] = true;
  }
  const bool any_h = std::find(hs.begin(), hs.end(), true) != hs.end();
  const bool all_h = std::find(hs.begin(), hs.end(), false) == hs.end();
  const auto& roots = rs.positive_roots();

  // ad(h) preserves every span of weight vectors, so only ad(x_a) matters.
  for (int a = 0; a < r; ++a) {
    if (any_h && !xs[a]) return false;
    for (int b = 0; b < r; ++b) {
      if (xs[b]) {
        if (auto sum = rs.positive_root_index(roots[a] + roots[b]); sum && !xs[*sum]) return false;
      }
      if (ys[b]) {
        if (a == b) {
          if (!all_h) return false;
        } else if (auto d = rs.positive_root_index(roots[a] - roots[b])) {
          if (!xs[*d]) return false;
        } else if (auto e = rs.positive_root_index(roots[b] - roots[a])) {
          if (!ys[*e]) return false;
        }
      }
    }
  }
  return true;
}

bool verify_weight_sum_injectivity(const RootSystem& rs) {
  std::unordered_set<Weight, WeightHash> seen;
  for (const auto& ideal : enumerate_ideals(rs)) {
    if (!seen.insert(ideal_weight_sum(rs, ideal)).second) return false;
  }
  return true;
}

}  // namespace casimir
