#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ke {

/// A finite set of positive integer element ids, stored as a strictly
/// increasing sequence. Values are immutable after construction; all set
/// operations return new values.
class FiniteSet {
 public:
  FiniteSet() = default;

  // Accepts elements in any order, removes duplicates, rejects ids < 1.
  explicit FiniteSet(std::vector<int> elements);
  FiniteSet(std::initializer_list<int> elements);

  const std::vector<int>& elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool empty() const noexcept { return elements_.empty(); }

  bool contains(int id) const;
  bool subset_of(const FiniteSet& other) const;

  FiniteSet set_union(const FiniteSet& other) const;
  FiniteSet set_intersection(const FiniteSet& other) const;
  FiniteSet set_minus(const FiniteSet& other) const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator!=(const FiniteSet& a, const FiniteSet& b) {
    return !(a == b);
  }
  // Lexicographic on the element sequence; the canonical member order of
  // collections.
  friend bool operator<(const FiniteSet& a, const FiniteSet& b) {
    return a.elements_ < b.elements_;
  }

 private:
  std::vector<int> elements_;
};

std::string to_string(const FiniteSet& s);

}  // namespace ke
