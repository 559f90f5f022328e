#include "ke/collection.hpp"

#include <algorithm>

#include "ke/errors.hpp"

namespace ke {

SetCollection::SetCollection(std::vector<FiniteSet> members)
    : members_(std::move(members)) {
  for (const FiniteSet& s : members_) {
    if (s.empty()) {
      throw Error(ErrorCode::EmptySet, "collection members must be non-empty");
    }
  }
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw Error(ErrorCode::DuplicateMember,
                "duplicate member " + to_string(*dup));
  }
}

SetCollection::SetCollection(std::initializer_list<FiniteSet> members)
    : SetCollection(std::vector<FiniteSet>(members)) {}

bool SetCollection::contains(const FiniteSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

SetCollection SetCollection::without(const FiniteSet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) {
    throw Error(ErrorCode::NotAMember, to_string(s) + " is not a member");
  }
  SetCollection out;
  out.members_.reserve(members_.size() - 1);
  out.members_.insert(out.members_.end(), members_.begin(), it);
  out.members_.insert(out.members_.end(), it + 1, members_.end());
  return out;
}

SetCollection SetCollection::subcollection(std::uint32_t index_mask) const {
  SetCollection out;
  const std::size_t bits = std::min<std::size_t>(members_.size(), 32);
  for (std::size_t i = 0; i < bits; ++i) {
    if (index_mask & (std::uint32_t{1} << i)) out.members_.push_back(members_[i]);
  }
  return out;
}

FiniteSet SetCollection::union_all() const {
  FiniteSet out;
  for (const FiniteSet& s : members_) out = out.set_union(s);
  return out;
}

FiniteSet SetCollection::intersect_all() const {
  if (members_.empty()) {
    throw Error(ErrorCode::EmptyCollection, "intersection of an empty collection");
  }
  FiniteSet out = members_.front();
  for (std::size_t i = 1; i < members_.size(); ++i) {
    out = out.set_intersection(members_[i]);
  }
  return out;
}

std::string to_string(const SetCollection& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.members().size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(c.members()[i]);
  }
  out += "}";
  return out;
}

Bipartition::Bipartition(SetCollection part1, SetCollection part2)
    : part1_(std::move(part1)), part2_(std::move(part2)) {
  if (part1_.empty() || part2_.empty()) {
    throw Error(ErrorCode::EmptyCollection, "bipartition parts must be non-empty");
  }
  for (const FiniteSet& s : part1_.members()) {
    if (part2_.contains(s)) {
      throw Error(ErrorCode::DuplicateMember,
                  "bipartition parts share member " + to_string(s));
    }
  }
}

bool Bipartition::partitions(const SetCollection& whole) const {
  if (part1_.size() + part2_.size() != whole.size()) return false;
  std::vector<FiniteSet> merged = part1_.members();
  merged.insert(merged.end(), part2_.members().begin(), part2_.members().end());
  std::sort(merged.begin(), merged.end());
  return merged == whole.members();
}

std::vector<std::uint32_t> subset_masks(std::size_t n, std::size_t min_size) {
  if (n > 31) {
    throw Error(ErrorCode::TooLarge, "subset enumeration over " +
                                         std::to_string(n) + " members");
  }
  std::vector<std::uint32_t> out;
  if (min_size == 0) min_size = 1;
  for (std::size_t k = min_size; k <= n; ++k) {
    // indices[] walks the k-combinations of {0..n-1} in lexicographic order
    std::vector<std::size_t> indices(k);
    for (std::size_t i = 0; i < k; ++i) indices[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (std::size_t i : indices) mask |= std::uint32_t{1} << i;
      out.push_back(mask);
      std::size_t j = k;
      while (j > 0 && indices[j - 1] == n - k + (j - 1)) --j;
      if (j == 0) break;
      ++indices[j - 1];
      for (std::size_t i = j; i < k; ++i) indices[i] = indices[i - 1] + 1;
    }
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> bipartition_masks(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::CollectionTooSmall,
                "bipartitions need at least two members");
  }
  // part1 is the side holding index 0, which picks one representative per
  // unordered pair; enumerate the rest of part1 over subsets of {1..n-1}.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0}
                                       : ((std::uint32_t{1} << n) - 1);
  std::vector<std::uint32_t> rest;
  rest.push_back(0);  // part1 = {0}
  auto tail = subset_masks(n - 1);
  for (std::uint32_t m : tail) rest.push_back(m << 1);
  // subset_masks is (size, lex)-ordered and prepending index 0 preserves
  // that, so out comes out (|part1|, lex)-ordered with no extra sort.
  for (std::uint32_t m : rest) {
    std::uint32_t part1 = m | 1u;
    if (part1 == full) continue;  // part2 would be empty
    out.push_back({part1, full & ~part1});
  }
  return out;
}

Bipartition make_bipartition(const SetCollection& c, std::uint32_t part1_mask) {
  const std::uint32_t full = (std::uint32_t{1} << c.size()) - 1;
  return Bipartition(c.subcollection(part1_mask),
                     c.subcollection(full & ~part1_mask));
}

}  // namespace ke
